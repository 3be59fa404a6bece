//! Quantum deformation: entries in a Laurent ring in s with σ(s) = s⁻¹ and q = s².

use crate::ring::{Ring, RingError, RingValue};
use crate::sp2::{symplectic_report, Mat2, SymplecticReport, Vec2};

/// Matrices whose entries live in a q-mode Laurent ring.
pub type QMat2 = Mat2;

/// The Laurent ring in `s` over `base` with σ(s) = s⁻¹.
pub fn qring(base: &Ring) -> Ring {
    Ring::qlaurent("s", base.clone())
}

/// The variable s of a q-mode Laurent ring.
pub fn s_of(ring: &Ring) -> RingValue {
    assert!(ring.is_qmode(), "{ring} is not a q-mode Laurent ring");
    match ring.kind() {
        crate::ring::RingKind::Laurent { var, .. } => RingValue::symbol(ring, var).unwrap(),
        _ => unreachable!(),
    }
}

/// q = s².
pub fn q_of(ring: &Ring) -> RingValue {
    let s = s_of(ring);
    &s * &s
}

fn q_inv(ring: &Ring) -> RingValue {
    q_of(ring).inverse().expect("q is a unit")
}

/// Residuals of the six quantum symplectic equations (third of each side minus 1).
pub fn quantum_symplectic_report(m: &QMat2) -> SymplecticReport {
    let ring = m.ring();
    let qi = q_inv(ring);
    let one = RingValue::one(ring);
    let (a, b, c, d) = (&m.a, &m.b, &m.c, &m.d);
    let (sa, sb, sc, sd) = (a.sigma(), b.sigma(), c.sigma(), d.sigma());
    let left = [&sa * c - &(&qi * &sc) * a, &sb * d - &(&qi * &sd) * b, &sa * d - &(&qi * &sc) * b - one.clone()];
    let right = [a * &sb - &(&qi * b) * &sa, c * &sd - &(&qi * d) * &sc, a * &sd - &(&qi * b) * &sc - one];
    SymplecticReport::from_residuals(ring, left, right)
}

/// `[[A, sB], [s⁻¹C, D]]` over the q-ring of M's ring.
pub fn lift_to_quantum(m: &Mat2) -> QMat2 {
    let q = qring(m.ring());
    let s = s_of(&q);
    let si = s.inverse().unwrap();
    let up = |x: &RingValue| x.embed_into(&q).unwrap();
    Mat2 { a: up(&m.a), b: &s * &up(&m.b), c: &si * &up(&m.c), d: up(&m.d) }
}

/// σ(A)D − q⁻¹σ(C)B.
pub fn quantum_det(m: &QMat2) -> RingValue {
    let qi = q_inv(m.ring());
    &m.a.sigma() * &m.d - &(&qi * &m.c.sigma()) * &m.b
}

/// `[[σ(D), −qσ(B)], [−q⁻¹σ(C), σ(A)]]`.
pub fn quantum_inverse(m: &QMat2) -> QMat2 {
    let (q, qi) = (q_of(m.ring()), q_inv(m.ring()));
    Mat2 { a: m.d.sigma(), b: -&(&q * &m.b.sigma()), c: -&(&qi * &m.c.sigma()), d: m.a.sigma() }
}

/// q⁻¹σ(V₂)V₁ = σ(V₁)V₂.
pub fn q_isotropic(v: &Vec2) -> bool {
    &(&q_inv(v.ring()) * &v.v2.sigma()) * &v.v1 == &v.v1.sigma() * &v.v2
}

/// Whether M sends (1,0) and (0,1) into the quantum plane.
pub fn preserves_quantum_plane(m: &QMat2) -> bool {
    let r = m.ring();
    let (o, z) = (RingValue::one(r), RingValue::zero(r));
    [Vec2::new(o.clone(), z.clone()), Vec2::new(z, o)].iter().all(|v| q_isotropic(&m.apply(v)))
}

/// Substitutes s = 1 in every entry.
pub fn specialize_at_one(m: &QMat2) -> Result<Mat2, RingError> {
    let one = num_rational::BigRational::from_integer(1.into());
    m.try_map(|x| x.eval_laurent(&one))
}

/// The quantum report with s = 1 substituted into each residual.
pub fn specialize_report(r: &SymplecticReport) -> Result<SymplecticReport, RingError> {
    let one = num_rational::BigRational::from_integer(1.into());
    let ev = |xs: &[RingValue; 3]| -> Result<[RingValue; 3], RingError> {
        Ok([xs[0].eval_laurent(&one)?, xs[1].eval_laurent(&one)?, xs[2].eval_laurent(&one)?])
    };
    let base = r.ring.base().cloned().ok_or_else(|| RingError::Unsupported("no Laurent layer".into()))?;
    Ok(SymplecticReport::from_residuals(&base, ev(&r.left_residuals)?, ev(&r.right_residuals)?))
}

/// Checks that specializing the quantum residuals of `m` at s = 1 gives the classical residuals.
pub fn specialization_matches(m: &QMat2) -> Result<bool, RingError> {
    Ok(specialize_report(&quantum_symplectic_report(m))? == symplectic_report(&specialize_at_one(m)?))
}
