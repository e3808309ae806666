use std::fs;
use std::path::Path;

use mwg_core::ring::{element_from_json, parse_element};
use mwg_core::{Element, Ring, RingDescriptor};

use crate::exit::CliError;

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::parse(format!("cannot read {}: {e}", path.display())))
}

pub fn ring_from_str(text: &str) -> Result<Ring, CliError> {
    let desc: RingDescriptor =
        serde_json::from_str(text).map_err(|e| CliError::parse(format!("ring description: {e}")))?;
    Ok(Ring::new(desc)?)
}

/// JSON element syntax, or the compact text form when the file is not JSON.
pub fn element_from_str(ring: &Ring, text: &str) -> Result<Element, CliError> {
    match serde_json::from_str::<serde_json::Value>(text) {
        Ok(v) => Ok(element_from_json(ring, &v)?),
        Err(_) => Ok(parse_element(ring, text.trim())?),
    }
}

pub fn load_ring(path: &Path) -> Result<Ring, CliError> {
    ring_from_str(&read(path)?).map_err(|e| CliError::new(e.status, format!("{}: {}", path.display(), e.message)))
}

pub fn load_element(ring: &Ring, path: &Path) -> Result<Element, CliError> {
    element_from_str(ring, &read(path)?)
        .map_err(|e| CliError::new(e.status, format!("{}: {}", path.display(), e.message)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exit::ExitStatus;

    #[test]
    fn both_element_syntaxes() {
        let r = ring_from_str(r#"{"kind":"matrix","size":2,"base":"gaussian_rational","involution":"transpose"}"#);
        let r = r.unwrap();
        let json = element_from_str(&r, r#"[["1","0"],["i","0"]]"#).unwrap();
        let text = element_from_str(&r, "[[1,0],[i,0]]\n").unwrap();
        assert_eq!(json, text);
    }

    #[test]
    fn malformed_input_is_a_parse_error() {
        assert_eq!(ring_from_str("{").unwrap_err().status, ExitStatus::Parse);
        assert_eq!(ring_from_str(r#"{"kind":"modular","modulus":1,"involution":"identity"}"#).unwrap_err().status, ExitStatus::Parse);
        let r = ring_from_str(r#"{"kind":"modular","modulus":4,"involution":"identity"}"#).unwrap();
        assert_eq!(element_from_str(&r, "[[1]]").unwrap_err().status, ExitStatus::Parse);
    }
}
