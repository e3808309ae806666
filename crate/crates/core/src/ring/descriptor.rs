use serde::{Deserialize, Serialize};

/// Declarative description of a concrete ring with involution, as read from
/// a ring description file.
///
/// ```json
/// {"kind":"matrix","size":4,"base":"rational","involution":"transpose"}
/// {"kind":"modular","modulus":4,"involution":"identity"}
/// {"kind":"group_ring","p":3,"group":"klein4","involution":"swap_ab"}
/// {"kind":"product","factor":{"kind":"modular","modulus":5,"involution":"identity"},"involution":"swap"}
/// ```
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum RingDescriptor {
    /// `n×n` matrices. Modular bases take their modulus from `modulus`.
    Matrix {
        size: usize,
        base: BaseKind,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        modulus: Option<u64>,
        involution: Involution,
    },
    /// ℤ/nℤ.
    Modular { modulus: u64, involution: Involution },
    /// 𝔽_p[G] for the Klein four-group G = {e, a, b, c}.
    GroupRing {
        p: u64,
        group: GroupName,
        involution: Involution,
    },
    /// `factor × factor`.
    Product {
        factor: Box<RingDescriptor>,
        involution: Involution,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BaseKind {
    /// ℤ; entries are kept as rationals with denominator 1.
    Integer,
    Rational,
    GaussianRational,
    Modular,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Involution {
    Transpose,
    ConjugateTranspose,
    Identity,
    /// Coefficientwise, exchanging the coefficients of `a` and `b`.
    SwapAb,
    /// `(x, y)* = (y*, x*)`.
    Swap,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GroupName {
    Klein4,
}

impl RingDescriptor {
    pub fn involution(&self) -> Involution {
        match self {
            RingDescriptor::Matrix { involution, .. }
            | RingDescriptor::Modular { involution, .. }
            | RingDescriptor::GroupRing { involution, .. }
            | RingDescriptor::Product { involution, .. } => *involution,
        }
    }

    pub fn matrix(size: usize, base: BaseKind, involution: Involution) -> Self {
        RingDescriptor::Matrix {
            size,
            base,
            modulus: None,
            involution,
        }
    }

    pub fn matrix_mod(size: usize, p: u64, involution: Involution) -> Self {
        RingDescriptor::Matrix {
            size,
            base: BaseKind::Modular,
            modulus: Some(p),
            involution,
        }
    }

    pub fn modular(modulus: u64) -> Self {
        RingDescriptor::Modular {
            modulus,
            involution: Involution::Identity,
        }
    }

    pub fn klein(p: u64, involution: Involution) -> Self {
        RingDescriptor::GroupRing {
            p,
            group: GroupName::Klein4,
            involution,
        }
    }

    pub fn product(factor: RingDescriptor, involution: Involution) -> Self {
        RingDescriptor::Product {
            factor: Box::new(factor),
            involution,
        }
    }
}
