use mwg_core::catalog;
use mwg_core::ring::{BaseKind, Involution, KleinElement};
use mwg_core::scalar::integer;
use mwg_core::{Element, GaussianRational, Matrix, Ring, RingDescriptor, Scalar, ScalarKind};
use proptest::prelude::*;

pub fn q3() -> Ring {
    Ring::new(RingDescriptor::matrix(3, BaseKind::Rational, Involution::Transpose)).expect("valid descriptor")
}

pub fn g2() -> Ring {
    catalog::gaussian_2x2()
}

pub fn klein() -> Ring {
    catalog::z3_klein()
}

/// Small integers of the base field: rational integers or Gaussian integers.
pub fn scalar(kind: ScalarKind) -> BoxedStrategy<Scalar> {
    match kind {
        ScalarKind::Gaussian => (-2i64..=2, -2i64..=2)
            .prop_map(|(re, im)| Scalar::Gaussian(GaussianRational::new(integer(re), integer(im))))
            .boxed(),
        k => (-2i64..=2).prop_map(move |v| k.from_i64(v)).boxed(),
    }
}

fn unit_like(kind: ScalarKind) -> BoxedStrategy<Scalar> {
    let mut choices = vec![kind.from_i64(1), kind.from_i64(-1), kind.from_i64(2)];
    if kind == ScalarKind::Gaussian {
        choices.push(Scalar::Gaussian(GaussianRational::i()));
        choices.push(Scalar::Gaussian(GaussianRational::new(integer(1), integer(1))));
    }
    proptest::sample::select(choices).boxed()
}

pub fn arbitrary_matrix(ring: Ring) -> BoxedStrategy<Element> {
    let (n, kind) = ring.matrix_shape().expect("matrix ring");
    proptest::collection::vec(scalar(kind), n * n)
        .prop_map(move |data| Element::Matrix(Matrix::from_vec(kind, n, n, data).expect("square")))
        .boxed()
}

fn elementary(kind: ScalarKind, n: usize, i: usize, j: usize, c: &Scalar) -> Matrix {
    let mut m = Matrix::identity(kind, n);
    if i != j {
        m.set(i, j, c.clone());
    }
    m
}

/// `S·J·S⁻¹` with `S` a product of elementary transvections and `J` an
/// invertible upper-triangular block followed by a strictly upper-triangular
/// one, so every Drazin index up to `n` occurs.
pub fn structured_matrix(ring: Ring) -> BoxedStrategy<Element> {
    let (n, kind) = ring.matrix_shape().expect("matrix ring");
    let ops = proptest::collection::vec((0..n, 0..n, scalar(kind)), 0..4);
    (
        0..=n,
        proptest::collection::vec(scalar(kind), n * n),
        proptest::collection::vec(unit_like(kind), n),
        ops,
    )
        .prop_map(move |(core, upper, diag, ops)| {
            let mut j = Matrix::zeros(kind, n, n);
            for r in 0..n {
                for c in r..n {
                    let same_block = (r < core) == (c < core);
                    if r == c && r < core {
                        j.set(r, c, diag[r].clone());
                    } else if r < c && same_block {
                        j.set(r, c, upper[r * n + c].clone());
                    }
                }
            }
            let mut s = Matrix::identity(kind, n);
            let mut s_inv = Matrix::identity(kind, n);
            for (i, jj, c) in &ops {
                s = s.mul(&elementary(kind, n, *i, *jj, c)).expect("square");
                s_inv = elementary(kind, n, *i, *jj, &c.neg()).mul(&s_inv).expect("square");
            }
            Element::Matrix(s.mul(&j).and_then(|sj| sj.mul(&s_inv)).expect("square"))
        })
        .boxed()
}

/// `c·u·vᵀ (+ w)` with `uᵀu = 0`, where transpose fails to be proper;
/// `w` is an optional nilpotent or scalar summand.
pub fn isotropic_gaussian_2x2() -> BoxedStrategy<Element> {
    let kind = ScalarKind::Gaussian;
    let i = || Scalar::Gaussian(GaussianRational::i());
    let u = proptest::sample::select(vec![
        [kind.from_i64(1), i()],
        [i(), kind.from_i64(1)],
        [kind.from_i64(1), i().neg()],
    ]);
    let shift = proptest::sample::select(vec![0u8, 0, 1, 2]);
    (u, scalar(kind), scalar(kind), unit_like(kind), shift)
        .prop_map(move |(u, v0, v1, c, shift)| {
            let v = [v0, v1];
            let mut m = Matrix::zeros(kind, 2, 2);
            for (r, ur) in u.iter().enumerate() {
                for (col, vc) in v.iter().enumerate() {
                    m.set(r, col, c.mul(ur).and_then(|t| t.mul(vc)).expect("same kind"));
                }
            }
            let extra = match shift {
                1 => Matrix::from_i64(kind, &[&[0, 1], &[0, 0]]),
                2 => Matrix::identity(kind, 2),
                _ => Matrix::zeros(kind, 2, 2),
            };
            Element::Matrix(m.add(&extra).expect("same shape"))
        })
        .boxed()
}

pub fn matrix_element(ring: Ring) -> BoxedStrategy<Element> {
    let base = prop_oneof![3 => structured_matrix(ring.clone()), 1 => arbitrary_matrix(ring.clone())];
    if ring.linear_shape() == Some((2, ScalarKind::Gaussian)) && ring.involution() == Involution::Transpose {
        prop_oneof![2 => base, 1 => isotropic_gaussian_2x2()].boxed()
    } else {
        base.boxed()
    }
}

pub fn klein_element(p: u64) -> BoxedStrategy<Element> {
    proptest::array::uniform4(0..p as i64)
        .prop_map(move |c| Element::GroupRing(KleinElement::new(c, p)))
        .boxed()
}

/// Any element of a finite ring, by enumeration index.
pub fn finite_element(ring: Ring) -> BoxedStrategy<Element> {
    let card = ring.cardinality().expect("finite ring");
    (0..card)
        .prop_map(move |i| ring.element_at(i).expect("index in range"))
        .boxed()
}

/// An element `a` together with free material: `r` and `s` drive
/// perturbations and candidates, `coeffs` select family members.
#[derive(Clone, Debug)]
pub struct Case {
    pub domain: &'static str,
    pub ring: Ring,
    pub a: Element,
    pub r: Element,
    pub s: Element,
    pub coeffs: Vec<i64>,
}

fn domain(name: &'static str, ring: Ring, elements: BoxedStrategy<Element>) -> BoxedStrategy<Case> {
    (
        elements.clone(),
        elements.clone(),
        elements,
        proptest::collection::vec(-2i64..=2, 16),
    )
        .prop_map(move |(a, r, s, coeffs)| Case {
            domain: name,
            ring: ring.clone(),
            a,
            r,
            s,
            coeffs,
        })
        .boxed()
}

/// Cases drawn from M₃(ℚ), M₂(ℚ(i)) and ℤ₃[Klein] in equal proportion.
pub fn case() -> BoxedStrategy<Case> {
    let q = q3();
    let g = g2();
    prop_oneof![
        domain("m3-q", q.clone(), matrix_element(q)),
        domain("m2-gaussian", g.clone(), matrix_element(g)),
        domain("z3-klein", klein(), klein_element(3)),
    ]
    .boxed()
}

/// An element of any shipped ring.
pub fn element(ring: &Ring) -> BoxedStrategy<Element> {
    if ring.cardinality().is_some() {
        return finite_element(ring.clone());
    }
    match ring.descriptor() {
        RingDescriptor::Product { factor, .. } => {
            let f = Ring::new((**factor).clone()).expect("factor of a valid ring");
            (element(&f), element(&f)).prop_map(|(x, y)| Element::pair(x, y)).boxed()
        }
        _ => matrix_element(ring.clone()),
    }
}

/// Every ring shipped in the catalogue, plus M₃(ℚ).
pub fn shipped_rings() -> Vec<(&'static str, Ring)> {
    let mut out = vec![
        ("m3-q", q3()),
        ("m2-gaussian", g2()),
        ("m4-z", catalog::integer_4x4()),
        ("m4-q", catalog::rational_4x4()),
        ("q-squared-swap", catalog::q_squared_swap()),
    ];
    out.extend(catalog::finite_rings());
    out
}
