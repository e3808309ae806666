//! Element text and JSON formats.
//!
//! JSON element files: a matrix is an array of rows of scalar strings (a flat
//! row-major array is also accepted), a residue is a digit string, a group
//! ring element is `{"e":"2","a":"1","b":"0","c":"0"}`, and a product
//! element is a two-element array. The compact text form used in reports is
//! `[[1,0],[i,0]]`, `2`, `2e+a` and `(x,y)`.

use serde_json::{Map, Value};

use super::{Element, KleinElement, Ring, Structure, KLEIN_LABELS};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalar::{ModularInt, Scalar, ScalarKind};

pub fn element_to_json(x: &Element) -> Value {
    match x {
        Element::Matrix(m) => Value::Array(
            (0..m.rows())
                .map(|r| Value::Array(m.row(r).iter().map(|s| Value::String(s.to_string())).collect()))
                .collect(),
        ),
        Element::Residue(r) => Value::String(r.to_string()),
        Element::GroupRing(g) => {
            let mut obj = Map::new();
            for (c, label) in g.coeffs().iter().zip(KLEIN_LABELS) {
                obj.insert(label.to_string(), Value::String(c.to_string()));
            }
            Value::Object(obj)
        }
        Element::Pair(a, b) => Value::Array(vec![element_to_json(a), element_to_json(b)]),
    }
}

pub fn element_from_json(ring: &Ring, v: &Value) -> Result<Element> {
    let x = decode_value(ring, v, "element")?;
    ring.check(&x)?;
    Ok(x)
}

/// Parses the compact text form, e.g. `[[1,0],[i,0]]` or `(1,0)` or `2e+a`.
pub fn parse_element(ring: &Ring, text: &str) -> Result<Element> {
    let mut p = TreeParser {
        bytes: text.as_bytes(),
        pos: 0,
    };
    let v = p.value()?;
    p.skip_ws();
    if p.pos != p.bytes.len() {
        return Err(Error::parse(p.pos, "unexpected trailing characters"));
    }
    element_from_json(ring, &v)
}

fn scalar_text(v: &Value, path: &str) -> Result<String> {
    match v {
        Value::String(s) => Ok(s.clone()),
        Value::Number(n) if n.is_i64() || n.is_u64() => Ok(n.to_string()),
        other => Err(Error::parse(0, format!("{path}: expected a scalar string, got {other}"))),
    }
}

fn parse_scalar(kind: ScalarKind, v: &Value, path: &str) -> Result<Scalar> {
    let text = scalar_text(v, path)?;
    kind.parse(&text).map_err(|e| match e {
        Error::Parse { pos, msg } => Error::parse(pos, format!("{path} {text:?}: {msg}")),
        other => other,
    })
}

fn decode_value(ring: &Ring, v: &Value, path: &str) -> Result<Element> {
    match &ring.structure {
        Structure::Matrix { n, base, .. } => {
            let Value::Array(items) = v else {
                return Err(Error::parse(0, format!("{path}: expected an array of rows")));
            };
            let mut data = Vec::with_capacity(n * n);
            if items.iter().all(Value::is_array) && !items.is_empty() {
                if items.len() != *n {
                    return Err(Error::parse(0, format!("{path}: expected {n} rows, got {}", items.len())));
                }
                for (r, row) in items.iter().enumerate() {
                    let row = row.as_array().expect("checked above");
                    if row.len() != *n {
                        return Err(Error::parse(
                            0,
                            format!("{path}: row {r} has {} entries, expected {n}", row.len()),
                        ));
                    }
                    for (c, s) in row.iter().enumerate() {
                        data.push(parse_scalar(*base, s, &format!("{path} entry ({r},{c})"))?);
                    }
                }
            } else {
                if items.len() != n * n {
                    return Err(Error::parse(
                        0,
                        format!("{path}: expected {} row-major entries, got {}", n * n, items.len()),
                    ));
                }
                for (i, s) in items.iter().enumerate() {
                    data.push(parse_scalar(*base, s, &format!("{path} entry {i}"))?);
                }
            }
            Ok(Element::Matrix(Matrix::from_vec(*base, *n, *n, data)?))
        }
        Structure::Modular { modulus } => match parse_scalar(ScalarKind::Modular(*modulus), v, path)? {
            Scalar::Modular(m) => Ok(Element::Residue(m)),
            _ => unreachable!("modular kind parses to a residue"),
        },
        Structure::Klein { p } => match v {
            Value::Object(obj) => {
                if let Some(bad) = obj.keys().find(|k| !matches!(k.as_str(), "e" | "a" | "b" | "c")) {
                    return Err(Error::parse(0, format!("{path}: unknown group element {bad:?}")));
                }
                let mut coeffs = [0u64; 4];
                for (c, label) in coeffs.iter_mut().zip(KLEIN_LABELS) {
                    if let Some(s) = obj.get(&label.to_string()) {
                        let Scalar::Modular(m) =
                            parse_scalar(ScalarKind::Modular(*p), s, &format!("{path}.{label}"))?
                        else {
                            unreachable!()
                        };
                        *c = m.value();
                    }
                }
                Ok(Element::GroupRing(KleinElement::from_reduced(coeffs, *p)))
            }
            Value::String(s) => parse_klein_text(s, *p).map(Element::GroupRing),
            other => Err(Error::parse(0, format!("{path}: expected a coefficient object, got {other}"))),
        },
        Structure::Product { factor } => match v {
            Value::Array(items) if items.len() == 2 => Ok(Element::pair(
                decode_value(factor, &items[0], &format!("{path}[0]"))?,
                decode_value(factor, &items[1], &format!("{path}[1]"))?,
            )),
            _ => Err(Error::parse(0, format!("{path}: expected a two-element array"))),
        },
    }
}

/// `2e+a`, `e-b+2c`, `0`, ...
fn parse_klein_text(text: &str, p: u64) -> Result<KleinElement> {
    let bytes = text.as_bytes();
    let mut pos = 0;
    let mut coeffs = [0i64; 4];
    let skip_ws = |pos: &mut usize| {
        while *pos < bytes.len() && bytes[*pos].is_ascii_whitespace() {
            *pos += 1;
        }
    };
    skip_ws(&mut pos);
    if pos == bytes.len() {
        return Err(Error::parse(pos, "empty group ring element"));
    }
    let mut first = true;
    while pos < bytes.len() {
        let mut sign = 1i64;
        match bytes[pos] {
            b'+' => pos += 1,
            b'-' => {
                sign = -1;
                pos += 1;
            }
            _ if first => {}
            _ => return Err(Error::parse(pos, "expected '+' or '-'")),
        }
        first = false;
        skip_ws(&mut pos);
        let start = pos;
        while pos < bytes.len() && bytes[pos].is_ascii_digit() {
            pos += 1;
        }
        let coef = if start == pos {
            1
        } else {
            let digits = &text[start..pos];
            (digits.parse::<u128>().map_err(|_| Error::parse(start, "coefficient too large"))?
                % p as u128) as i64
        };
        let label = bytes.get(pos).and_then(|b| KLEIN_LABELS.iter().position(|&l| l as u8 == *b));
        let slot = match label {
            Some(i) => {
                pos += 1;
                i
            }
            None if start != pos => 0,
            None => return Err(Error::parse(pos, "expected a coefficient or one of e, a, b, c")),
        };
        coeffs[slot] += sign * coef;
        skip_ws(&mut pos);
    }
    Ok(KleinElement::new(coeffs, p))
}

struct TreeParser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl TreeParser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn value(&mut self) -> Result<Value> {
        self.skip_ws();
        match self.bytes.get(self.pos) {
            Some(b'[') => self.list(b']'),
            Some(b'(') => self.list(b')'),
            Some(_) => self.atom(),
            None => Err(Error::parse(self.pos, "unexpected end of input")),
        }
    }

    fn list(&mut self, close: u8) -> Result<Value> {
        self.pos += 1;
        let mut items = Vec::new();
        self.skip_ws();
        if self.bytes.get(self.pos) == Some(&close) {
            self.pos += 1;
            return Ok(Value::Array(items));
        }
        loop {
            items.push(self.value()?);
            self.skip_ws();
            match self.bytes.get(self.pos) {
                Some(b',') => self.pos += 1,
                Some(c) if *c == close => {
                    self.pos += 1;
                    return Ok(Value::Array(items));
                }
                _ => return Err(Error::parse(self.pos, format!("expected ',' or '{}'", close as char))),
            }
        }
    }

    fn atom(&mut self) -> Result<Value> {
        let start = self.pos;
        while self.pos < self.bytes.len() && !matches!(self.bytes[self.pos], b',' | b'[' | b']' | b'(' | b')') {
            self.pos += 1;
        }
        let text = std::str::from_utf8(&self.bytes[start..self.pos])
            .map_err(|_| Error::parse(start, "invalid UTF-8"))?
            .trim();
        if text.is_empty() {
            return Err(Error::parse(start, "empty entry"));
        }
        Ok(Value::String(text.to_string()))
    }
}

impl Ring {
    /// Residue of this ring, for residue rings.
    pub fn residue(&self, v: i64) -> Result<Element> {
        match &self.structure {
            Structure::Modular { modulus } => Ok(Element::Residue(ModularInt::from_signed(v, *modulus))),
            _ => Err(Error::RingMismatch("not a residue ring".into())),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{BaseKind, Involution, RingDescriptor};
    use serde_json::json;

    fn klein3() -> Ring {
        Ring::new(RingDescriptor::klein(3, Involution::SwapAb)).unwrap()
    }

    #[test]
    fn klein_json_and_text_agree() {
        let r = klein3();
        let from_obj = element_from_json(&r, &json!({"e":"2","a":"1","b":"0","c":"0"})).unwrap();
        let from_text = parse_element(&r, "2e+a").unwrap();
        assert_eq!(from_obj, from_text);
        assert_eq!(from_text.to_string(), "2e+a");
        assert_eq!(parse_element(&r, "e-a").unwrap().to_string(), "e+2a");
        assert_eq!(parse_element(&r, "0").unwrap(), r.zero());
        assert_eq!(parse_element(&r, "5").unwrap().to_string(), "2e");
    }

    #[test]
    fn matrix_accepts_nested_and_flat() {
        let r = Ring::new(RingDescriptor::matrix(2, BaseKind::GaussianRational, Involution::Transpose)).unwrap();
        let nested = element_from_json(&r, &json!([["1", "0"], ["i", "0"]])).unwrap();
        let flat = element_from_json(&r, &json!(["1", "0", "i", 0])).unwrap();
        assert_eq!(nested, flat);
        assert_eq!(element_to_json(&nested), json!([["1", "0"], ["i", "0"]]));
    }

    #[test]
    fn bad_elements_are_parse_errors() {
        let r = Ring::new(RingDescriptor::matrix(2, BaseKind::Rational, Involution::Transpose)).unwrap();
        assert!(matches!(element_from_json(&r, &json!([["1", "0"]])), Err(Error::Parse { .. })));
        assert!(matches!(
            element_from_json(&r, &json!([["1", "0"], ["x", "0"]])),
            Err(Error::Parse { pos: 0, .. })
        ));
        assert!(matches!(parse_element(&r, "[[1,0],[0,1]"), Err(Error::Parse { .. })));
        let r = klein3();
        assert!(matches!(element_from_json(&r, &json!({"d":"1"})), Err(Error::Parse { .. })));
        assert!(matches!(parse_element(&r, "2x"), Err(Error::Parse { pos: 1, .. })));
    }

    #[test]
    fn product_elements() {
        let r = Ring::new(RingDescriptor::product(RingDescriptor::modular(5), Involution::Swap)).unwrap();
        let x = element_from_json(&r, &json!(["1", "0"])).unwrap();
        assert_eq!(x.to_string(), "(1,0)");
        assert_eq!(parse_element(&r, "(1, 0)").unwrap(), x);
        assert_eq!(element_to_json(&x), json!(["1", "0"]));
    }
}
