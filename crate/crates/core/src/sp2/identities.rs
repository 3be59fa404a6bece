use serde::Serialize;
use thiserror::Error;

use super::matrix::{Mat2, Vec2};
use crate::ring::{dual_extend, dual_lift, Ring, RingError, RingValue};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Sp2Error {
    #[error("the A entry is not invertible")]
    AEntryNotInvertible,
    #[error("matrix is not in the right symplectic monoid")]
    NotRightSymplectic,
    #[error("matrix is not in the symplectic group")]
    NotFullSymplectic,
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error(transparent)]
    Ring(#[from] RingError),
}

/// Residuals of the left and right symplectic equations. The third residual of each
/// side already has 1 subtracted, so every entry is zero exactly when the equation holds.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SymplecticReport {
    pub ring: Ring,
    pub left_residuals: [RingValue; 3],
    pub right_residuals: [RingValue; 3],
    pub is_left: bool,
    pub is_right: bool,
    pub is_full: bool,
}

impl SymplecticReport {
    pub(crate) fn from_residuals(ring: &Ring, left: [RingValue; 3], right: [RingValue; 3]) -> Self {
        let is_left = left.iter().all(RingValue::is_zero);
        let is_right = right.iter().all(RingValue::is_zero);
        SymplecticReport {
            ring: ring.clone(),
            left_residuals: left,
            right_residuals: right,
            is_left,
            is_right,
            is_full: is_left && is_right,
        }
    }
}

/// ω(v, w) = σ(V₁)W₂ − σ(V₂)W₁.
pub fn omega(v: &Vec2, w: &Vec2) -> RingValue {
    &v.v1.sigma() * &w.v2 - &v.v2.sigma() * &w.v1
}

pub fn is_isotropic(v: &Vec2) -> bool {
    &v.v1.sigma() * &v.v2 == &v.v2.sigma() * &v.v1
}

/// `[[σ(D), −σ(B)], [−σ(C), σ(A)]]`.
pub fn adjugate(m: &Mat2) -> Mat2 {
    Mat2 { a: m.d.sigma(), b: -&m.b.sigma(), c: -&m.c.sigma(), d: m.a.sigma() }
}

pub fn symplectic_report(m: &Mat2) -> SymplecticReport {
    let one = RingValue::one(m.ring());
    let (a, b, c, d) = (&m.a, &m.b, &m.c, &m.d);
    let (sa, sb, sc, sd) = (a.sigma(), b.sigma(), c.sigma(), d.sigma());
    let left = [&sa * c - &sc * a, &sb * d - &sd * b, &sa * d - &sc * b - one.clone()];
    let right = [a * &sb - b * &sa, c * &sd - d * &sc, a * &sd - b * &sc - one];
    SymplecticReport::from_residuals(m.ring(), left, right)
}

/// Membership from three of the six equations, valid when A is invertible.
pub fn is_symplectic_via_a_inverse(m: &Mat2) -> Result<bool, Sp2Error> {
    m.a.inverse().map_err(|_| Sp2Error::AEntryNotInvertible)?;
    let (a, b, c, d) = (&m.a, &m.b, &m.c, &m.d);
    let (sa, sc) = (a.sigma(), c.sigma());
    Ok((&sa * c - &sc * a).is_zero() && (a * &b.sigma() - b * &sa).is_zero() && (&sa * d - &sc * b).is_one())
}

/// σ(A)D − σ(C)B.
pub fn det_l(m: &Mat2) -> RingValue {
    &m.a.sigma() * &m.d - &m.c.sigma() * &m.b
}

/// Aσ(D) − Bσ(C).
pub fn det_r(m: &Mat2) -> RingValue {
    &m.a * &m.d.sigma() - &m.b * &m.c.sigma()
}

pub fn trace(m: &Mat2) -> RingValue {
    &m.a + &m.d
}

/// σ(A) + D.
pub fn trace_sigma(m: &Mat2) -> RingValue {
    &m.a.sigma() + &m.d
}

/// σ(M)M − σ(tr M)M + [[σ(det_l M), [D,B]_left], [[A,C]_left, det_l M]], zero for every M.
pub fn cayley_hamilton_residual(m: &Mat2) -> Mat2 {
    let dl = det_l(m);
    let correction =
        Mat2 { a: dl.sigma(), b: m.d.twisted_commutator_left(&m.b), c: m.a.twisted_commutator_left(&m.c), d: dl };
    let lhs = &(&m.sigma() * m) - &m.left_scale(&trace(m).sigma());
    &lhs + &correction
}

/// σ(M)M − σ(tr M)M + Id, zero exactly on the left symplectic monoid.
pub fn cayley_hamilton_symplectic_residual(m: &Mat2) -> Mat2 {
    let lhs = &(&m.sigma() * m) - &m.left_scale(&trace(m).sigma());
    &lhs + &Mat2::identity(m.ring())
}

pub fn ch_symplectic_holds(m: &Mat2) -> bool {
    cayley_hamilton_symplectic_residual(m).is_zero()
}

/// tr(Adj(M)N) + tr(σ(M)N) − σ(tr M)·tr N.
pub fn classical_trace_identity_residual(m: &Mat2, n: &Mat2) -> RingValue {
    trace(&(&adjugate(m) * n)) + trace(&(&m.sigma() * n)) - &trace(m).sigma() * &trace(n)
}

/// Left side minus right side of the commutator trace identity, inverses taken as adjugates.
pub fn commutator_trace_identity_residual(x: &Mat2, y: &Mat2) -> Result<RingValue, Sp2Error> {
    if !symplectic_report(x).is_right || !symplectic_report(y).is_right {
        return Err(Sp2Error::NotRightSymplectic);
    }
    let (xi, yi) = (adjugate(x), adjugate(y));
    let (tx, ty) = (trace(x), trace(y));
    let z = trace(&(&x.sigma() * y));
    let lhs = trace(&(&(x * &(&y.sigma() * &xi.sigma()).sigma()) * &yi));
    let mid = trace(&(&(x * &(&y.sigma() * x).sigma()) * &y.sigma()));
    let rhs = &tx * &tx.sigma() + &ty * &ty.sigma() + mid - &(&tx * &z) * &ty.sigma();
    Ok(lhs - rhs)
}

/// Alternating product of σ(M) and M ending in M, k factors.
pub fn sigma_power(m: &Mat2, k: usize) -> Mat2 {
    assert!(k >= 1, "sigma_power needs k ≥ 1");
    let sm = m.sigma();
    let mut p = m.clone();
    for j in 2..=k {
        p = if j % 2 == 0 { &sm * &p } else { m * &p };
    }
    p
}

/// U_k of the alternating recurrence: U₀ = 2, U₁ = x, U_{k+1} = c_k·U_k − U_{k−1}
/// with c_k = σ(x) for odd k and x for even k.
pub fn chebyshev_u(x: &RingValue, k: usize) -> RingValue {
    let mut prev = RingValue::from_int(x.ring(), 2);
    if k == 0 {
        return prev;
    }
    let sx = x.sigma();
    let mut cur = x.clone();
    for j in 1..k {
        let c = if j % 2 == 1 { &sx } else { x };
        let next = c * &cur - prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// tr(M^{σk}) − U_k(tr M).
pub fn chebyshev_trace_residual(m: &Mat2, k: usize) -> Result<RingValue, Sp2Error> {
    if !symplectic_report(m).is_full {
        return Err(Sp2Error::NotFullSymplectic);
    }
    Ok(trace(&sigma_power(m, k)) - chebyshev_u(&trace(m), k))
}

/// det_l(MN) minus its expansion in the entries of N = [[E, F], [G, H]]:
/// σ(E)det_l(M)H − σ(G)σ(det_l M)F + σ(E)[A,C]_left F + σ(G)[B,D]_left H.
pub fn det_product_residual(m: &Mat2, n: &Mat2) -> RingValue {
    det_l(&(m * n)) - det_product_expansion(m, n, &n.c)
}

/// The expansion with the coefficient of [B,D]_left H supplied by the caller.
pub(crate) fn det_product_expansion(m: &Mat2, n: &Mat2, bd_coeff: &RingValue) -> RingValue {
    let (e, f, g, h) = (&n.a, &n.b, &n.c, &n.d);
    let dl = det_l(m);
    let ac = m.a.twisted_commutator_left(&m.c);
    let bd = m.b.twisted_commutator_left(&m.d);
    let se = e.sigma();
    &(&se * &dl) * h - &(&g.sigma() * &dl.sigma()) * f + &(&se * &ac) * f + &(&bd_coeff.sigma() * &bd) * h
}

/// Residuals of (tr + σ∘tr) and trace_σ under conjugation M ↦ N⁻¹MN, with N⁻¹ = Adj(N).
pub fn trace_conjugation_checks(m: &Mat2, n: &Mat2) -> Result<(RingValue, RingValue), Sp2Error> {
    if !symplectic_report(n).is_full {
        return Err(Sp2Error::NotFullSymplectic);
    }
    if !m.b.is_sigma_fixed() {
        return Err(Sp2Error::HypothesisViolated("B is not σ-fixed".into()));
    }
    if !m.c.is_sigma_fixed() {
        return Err(Sp2Error::HypothesisViolated("C is not σ-fixed".into()));
    }
    let s = &m.a + &m.d.sigma();
    if !s.is_sigma_fixed() {
        return Err(Sp2Error::HypothesisViolated("A + σ(D) is not σ-fixed".into()));
    }
    if !is_central_for(&s, m, n) {
        return Err(Sp2Error::HypothesisViolated("A + σ(D) is not central".into()));
    }
    let conj = &(&adjugate(n) * m) * n;
    let sym = |x: &Mat2| {
        let t = trace(x);
        &t + &t.sigma()
    };
    Ok((sym(&conj) - sym(m), trace_sigma(&conj) - trace_sigma(m)))
}

/// Centrality is checked against the entries involved and, for matrix and group rings,
/// against the ring's generators.
fn is_central_for(s: &RingValue, m: &Mat2, n: &Mat2) -> bool {
    let mut probes: Vec<RingValue> = m.entries().into_iter().chain(n.entries()).cloned().collect();
    probes.extend(generators(s.ring()));
    probes.iter().all(|p| s * p == p * s)
}

fn generators(ring: &Ring) -> Vec<RingValue> {
    use crate::ring::RingKind;
    match ring.kind() {
        RingKind::Mat { n, base } => {
            let mut out = Vec::new();
            for i in 0..*n {
                for j in 0..*n {
                    let entries = (0..n * n)
                        .map(|k| if k == i * n + j { RingValue::one(base) } else { RingValue::zero(base) })
                        .collect();
                    out.push(RingValue::matrix(ring, entries).unwrap());
                }
            }
            out
        }
        _ => ["i", "ε", "Z", "t", "s"].iter().filter_map(|g| RingValue::symbol(ring, g)).collect(),
    }
}

/// det_l(M + εY) − (det_l(M) + ε·trace_σ(Adj(M)Y)), evaluated over the dual extension.
pub fn first_order_det_residual(m: &Mat2, y: &Mat2) -> RingValue {
    let base = m.ring();
    let lifted = Mat2 {
        a: dual_lift(&m.a, &y.a),
        b: dual_lift(&m.b, &y.b),
        c: dual_lift(&m.c, &y.c),
        d: dual_lift(&m.d, &y.d),
    };
    let expected = dual_lift(&det_l(m), &trace_sigma(&(&adjugate(m) * y)));
    let r = det_l(&lifted) - expected;
    debug_assert_eq!(r.ring(), &dual_extend(base));
    r
}

/// Manin's commutation equations, read without σ.
pub fn is_manin(m: &Mat2) -> bool {
    let (a, b, c, d) = (&m.a, &m.b, &m.c, &m.d);
    a * c == c * a && b * d == d * b && a * d - c * b == d * a - b * c
}

/// Probe vectors (1,0), (0,1), (1,1), (1,2).
pub fn omega_probes(ring: &Ring) -> Vec<Vec2> {
    let (o, z, two) = (RingValue::one(ring), RingValue::zero(ring), RingValue::from_int(ring, 2));
    vec![
        Vec2::new(o.clone(), z.clone()),
        Vec2::new(z, o.clone()),
        Vec2::new(o.clone(), o.clone()),
        Vec2::new(o, two),
    ]
}

/// Whether ω(Mv, Mw) = ω(v, w) on every pair of probe vectors.
pub fn preserves_omega_on_probes(m: &Mat2) -> bool {
    let probes = omega_probes(m.ring());
    probes.iter().all(|v| {
        let mv = m.apply(v);
        probes.iter().all(|w| omega(&mv, &m.apply(w)) == omega(v, w))
    })
}

/// The quotient identities ½(det_l + σ det_l) and ½(tr) = ½(tr_σ) after projection.
pub fn quotient_identities_hold(m: &Mat2) -> Result<bool, RingError> {
    let dl = det_l(m);
    Ok(dl.project_sigma()? == dl.sigma().project_sigma()?
        && trace(m).project_sigma()? == trace_sigma(m).project_sigma()?)
}
