use std::collections::BTreeSet;

use super::check::Prepared;
use crate::drazin::{drazin, DrazinResult};
use crate::error::{Error, Result};
use crate::linalg::{operator_matrix, unflatten, AffineSolution, Matrix};
use crate::ring::{Element, Ring, ENUMERATION_LIMIT};
use crate::scalar::{Scalar, ScalarKind};
use crate::Verdict;

/// How the members of a family are described.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Members {
    /// Members are `canonical + a^D·(c₁z₁ + … + c_dz_d)`, each `zᵢ` lying in
    /// `aa^D·R·(1−aa^D)` and annihilated by `(aᵏ)*aᵐ`.
    Perturbations(Vec<Element>),
    /// Every member, in enumeration order.
    Listed(Vec<Element>),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilySize {
    Dimension(usize),
    Count(usize),
}

impl FamilySize {
    pub fn value(self) -> usize {
        match self {
            FamilySize::Dimension(d) | FamilySize::Count(d) => d,
        }
    }
}

/// All m-weak group inverses of one element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolutionFamily {
    pub order: u32,
    /// Drazin index of the element; every member verifies at this index.
    pub index: u32,
    pub drazin: Element,
    /// Free-variables-zero solution on the linear path, first listed member
    /// on the exhaustive path.
    pub canonical: Option<Element>,
    pub members: Members,
}

impl SolutionFamily {
    pub fn exists(&self) -> bool {
        self.canonical.is_some()
    }

    pub fn size(&self) -> FamilySize {
        match &self.members {
            Members::Perturbations(z) => FamilySize::Dimension(z.len()),
            Members::Listed(xs) => FamilySize::Count(xs.len()),
        }
    }

    pub fn is_unique(&self) -> bool {
        self.exists()
            && match self.size() {
                FamilySize::Dimension(d) => d == 0,
                FamilySize::Count(c) => c == 1,
            }
    }

    /// `a^D·zᵢ`: differences between the canonical member and its neighbours.
    pub fn directions(&self, ring: &Ring) -> Result<Vec<Element>> {
        match &self.members {
            Members::Perturbations(z) => z.iter().map(|zi| ring.mul(&self.drazin, zi)).collect(),
            Members::Listed(_) => Ok(Vec::new()),
        }
    }

    /// `canonical + a^D·Σ cᵢzᵢ`.
    pub fn member(&self, ring: &Ring, coeffs: &[Scalar]) -> Result<Element> {
        let canonical = self
            .canonical
            .as_ref()
            .ok_or_else(|| Error::Precondition("family is empty".into()))?;
        let Members::Perturbations(z) = &self.members else {
            return Err(Error::Precondition("listed families have no coordinates".into()));
        };
        if coeffs.len() != z.len() {
            return Err(Error::Dimension(format!("{} coefficients for dimension {}", coeffs.len(), z.len())));
        }
        let mut acc = canonical.clone();
        for (dir, c) in self.directions(ring)?.iter().zip(coeffs) {
            let m = dir.as_matrix().expect("perturbations live in matrix rings");
            acc = ring.add(&acc, &Element::Matrix(m.scale(c)?))?;
        }
        Ok(acc)
    }

    /// Up to `limit` members: the canonical one, then one step along each
    /// direction.
    pub fn samples(&self, ring: &Ring, limit: usize) -> Result<Vec<Element>> {
        let Some(canonical) = &self.canonical else {
            return Ok(Vec::new());
        };
        match &self.members {
            Members::Listed(xs) => Ok(xs.iter().take(limit).cloned().collect()),
            Members::Perturbations(_) => {
                let mut out = vec![canonical.clone()];
                for dir in self.directions(ring)? {
                    if out.len() >= limit {
                        break;
                    }
                    out.push(ring.add(canonical, &dir)?);
                }
                out.truncate(limit);
                Ok(out)
            }
        }
    }

    /// Every member; needs a finite scalar field on the linear path.
    pub fn materialize(&self, ring: &Ring) -> Result<Vec<Element>> {
        let Some(canonical) = &self.canonical else {
            return Ok(Vec::new());
        };
        match &self.members {
            Members::Listed(xs) => Ok(xs.clone()),
            Members::Perturbations(z) => {
                let Some((_, ScalarKind::Modular(p))) = ring.matrix_shape() else {
                    return Err(Error::NotEnumerable);
                };
                let total = (p as u128)
                    .checked_pow(z.len() as u32)
                    .filter(|&t| t <= ENUMERATION_LIMIT)
                    .ok_or(Error::TooLarge(u128::MAX))?;
                let dirs = self.directions(ring)?;
                let mut out = Vec::with_capacity(total as usize);
                for mut index in 0..total {
                    let mut acc = canonical.clone();
                    for dir in &dirs {
                        let c = (index % p as u128) as u64;
                        index /= p as u128;
                        for _ in 0..c {
                            acc = ring.add(&acc, dir)?;
                        }
                    }
                    out.push(acc);
                }
                Ok(out)
            }
        }
    }

    /// Membership by solving for coordinates, independent of the checker.
    pub fn contains(&self, ring: &Ring, x: &Element) -> Result<bool> {
        let Some(canonical) = &self.canonical else {
            return Ok(false);
        };
        match &self.members {
            Members::Listed(xs) => Ok(xs.contains(x)),
            Members::Perturbations(_) => {
                let diff = ring.sub(x, canonical)?;
                let diff = diff.as_matrix().expect("matrix ring");
                let dirs = self.directions(ring)?;
                if dirs.is_empty() {
                    return Ok(diff.is_zero());
                }
                let kind = diff.kind();
                let cols: Vec<Matrix> = dirs
                    .iter()
                    .map(|d| {
                        let m = d.as_matrix().expect("matrix ring");
                        Matrix::column_vector(kind, m.entries().to_vec())
                    })
                    .collect::<Result<_>>()?;
                let mut system = cols[0].clone();
                for c in &cols[1..] {
                    system = system.hstack(c)?;
                }
                // Directions are independent, so coordinates are unique.
                Ok(match system.solve_affine(diff.entries())?.particular {
                    Some(c) => !ring.is_integral() || c.iter().all(|s| s.is_integer()),
                    None => false,
                })
            }
        }
    }

    /// The members as a set; for tests and cross-checks.
    pub fn member_set(&self, ring: &Ring) -> Result<BTreeSet<Element>> {
        Ok(self.materialize(ring)?.into_iter().collect())
    }
}

/// The complete family of m-weak group inverses of `a`.
pub fn mwg_solve(ring: &Ring, a: &Element, m: u32) -> Result<SolutionFamily> {
    let d = drazin(ring, a)?;
    mwg_solve_given(ring, a, m, &d)
}

/// As [`mwg_solve`] with a precomputed Drazin inverse.
pub fn mwg_solve_given(ring: &Ring, a: &Element, m: u32, d: &DrazinResult) -> Result<SolutionFamily> {
    if ring.linear_shape().is_some() {
        mwg_solve_linear(ring, a, m, d)
    } else if ring.is_finite() {
        mwg_solve_exhaustive(ring, a, m, d)
    } else {
        Err(Error::unsupported("mwg_solve", "neither a linear-algebra ring nor a finite ring"))
    }
}

pub(crate) struct Projectors {
    pub kind: ScalarKind,
    pub n: usize,
    pub e: Matrix,
    pub f: Matrix,
}

impl Projectors {
    pub(crate) fn new(ring: &Ring, a: &Element, d: &DrazinResult) -> Result<Self> {
        let (n, kind) = ring
            .linear_shape()
            .ok_or_else(|| Error::unsupported("linear solve", "not a matrix ring over a field or ℤ"))?;
        let e = ring.mul(a, &d.inverse)?;
        let e = e.as_matrix().expect("matrix ring").clone();
        let f = Matrix::identity(kind, n).sub(&e)?;
        Ok(Projectors { kind, n, e, f })
    }

    /// Rows expressing `Z = E·Z·(1−E)`.
    pub(crate) fn corner_constraint(&self) -> Result<Matrix> {
        operator_matrix(self.kind, self.n, |z| z.sub(&self.e.mul(z)?.mul(&self.f)?))
    }

    pub(crate) fn left_multiplication(&self, l: &Matrix) -> Result<Matrix> {
        operator_matrix(self.kind, self.n, |z| l.mul(z))
    }

    pub(crate) fn unflatten(&self, v: Vec<Scalar>) -> Result<Element> {
        Ok(Element::Matrix(unflatten(self.kind, self.n, v)?))
    }
}

/// Solutions inside the ring: integer points over ℤ, all points otherwise.
pub(crate) fn solve_in_ring(ring: &Ring, system: &Matrix, rhs: &[Scalar]) -> Result<AffineSolution> {
    if ring.is_integral() {
        system.solve_integral(rhs)
    } else {
        system.solve_affine(rhs)
    }
}

/// Linear path: `x = a^D + a^D·z` with `z = E·z·(1−E)` and
/// `(aᵏ)*aᵐz = (aᵏ)*aᵐ(1−E)`.
pub fn mwg_solve_linear(ring: &Ring, a: &Element, m: u32, d: &DrazinResult) -> Result<SolutionFamily> {
    let proj = Projectors::new(ring, a, d)?;
    let weight = ring.mul(&ring.star(&ring.pow(a, d.index)?)?, &ring.pow(a, m)?)?;
    let weight = weight.as_matrix().expect("matrix ring");

    let system = proj
        .corner_constraint()?
        .vstack(&proj.left_multiplication(weight)?)?;
    let nn = proj.n * proj.n;
    let mut rhs = vec![proj.kind.zero(); nn];
    rhs.extend(weight.mul(&proj.f)?.into_entries());
    let solution = solve_in_ring(ring, &system, &rhs)?;

    let family = match solution.particular {
        None => SolutionFamily {
            order: m,
            index: d.index,
            drazin: d.inverse.clone(),
            canonical: None,
            members: Members::Perturbations(Vec::new()),
        },
        Some(z0) => {
            let z0 = proj.unflatten(z0)?;
            let canonical = ring.add(&d.inverse, &ring.mul(&d.inverse, &z0)?)?;
            let basis = solution
                .kernel
                .into_iter()
                .map(|v| proj.unflatten(v))
                .collect::<Result<Vec<_>>>()?;
            SolutionFamily {
                order: m,
                index: d.index,
                drazin: d.inverse.clone(),
                canonical: Some(canonical),
                members: Members::Perturbations(basis),
            }
        }
    };
    verify_family(ring, a, &family)?;
    Ok(family)
}

/// Exhaustive path: every `x` in the ring passing the definition at the
/// Drazin index.
pub fn mwg_solve_exhaustive(ring: &Ring, a: &Element, m: u32, d: &DrazinResult) -> Result<SolutionFamily> {
    let prepared = Prepared::new(ring, a, m, d.index)?;
    let mut members = Vec::new();
    for x in ring.elements()? {
        if prepared.holds(&x)? {
            members.push(x);
        }
    }
    Ok(SolutionFamily {
        order: m,
        index: d.index,
        drazin: d.inverse.clone(),
        canonical: members.first().cloned(),
        members: Members::Listed(members),
    })
}

/// Checks the canonical member and one step along every direction.
fn verify_family(ring: &Ring, a: &Element, family: &SolutionFamily) -> Result<()> {
    let prepared = Prepared::new(ring, a, family.order, family.index)?;
    let dims = match family.size() {
        FamilySize::Dimension(d) | FamilySize::Count(d) => d,
    };
    for x in family.samples(ring, dims + 1)? {
        if !prepared.holds(&x)? {
            return Err(Error::Internal(format!("family member {x} fails the definition")));
        }
    }
    Ok(())
}

/// The pseudo core inverse, as the 0-weak family, which has at most one
/// member.
pub fn pseudo_core(ring: &Ring, a: &Element) -> Result<SolutionFamily> {
    let family = mwg_solve(ring, a, 0)?;
    if family.exists() && !family.is_unique() {
        return Err(Error::Internal(format!("{a} has more than one 0-weak group inverse")));
    }
    Ok(family)
}

/// Whether `a` has at most one weak group inverse: the only `x` in
/// `aa^D·R·(1−aa^D)` with `(aa^D)*x = 0` is zero. A nonzero such `x` is
/// returned otherwise.
pub fn uniqueness_test(ring: &Ring, a: &Element) -> Result<Verdict<Element>> {
    let d = drazin(ring, a)?;
    uniqueness_test_given(ring, a, &d)
}

pub fn uniqueness_test_given(ring: &Ring, a: &Element, d: &DrazinResult) -> Result<Verdict<Element>> {
    let e = ring.mul(a, &d.inverse)?;
    let e_star = ring.star(&e)?;
    if ring.linear_shape().is_some() {
        let proj = Projectors::new(ring, a, d)?;
        let system = proj
            .corner_constraint()?
            .vstack(&proj.left_multiplication(e_star.as_matrix().expect("matrix ring"))?)?;
        let zeros = vec![proj.kind.zero(); system.rows()];
        let kernel = solve_in_ring(ring, &system, &zeros)?.kernel;
        return match kernel.into_iter().next() {
            None => Ok(Verdict::Holds),
            Some(v) => Ok(Verdict::Fails(proj.unflatten(v)?)),
        };
    }
    if !ring.is_finite() {
        return Err(Error::unsupported("uniqueness_test", "neither a linear-algebra ring nor a finite ring"));
    }
    let f = ring.sub(&ring.one(), &e)?;
    for x in ring.elements()? {
        if !x.is_zero() && ring.product(&[&e, &x, &f])? == x && ring.mul(&e_star, &x)?.is_zero() {
            return Ok(Verdict::Fails(x));
        }
    }
    Ok(Verdict::Holds)
}
