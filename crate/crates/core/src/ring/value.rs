use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use super::descriptor::{DualFlavor, Ring, RingKind};
use super::qpoly::{fmt_q, format_scalar_poly, q_int, QPoly};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RingError {
    #[error("element is not invertible")]
    NotInvertible,
    #[error("2 is not invertible in {0}")]
    HalfUnavailable(String),
    #[error("ring mismatch: {0} vs {1}")]
    RingMismatch(String, String),
    #[error("{0}")]
    Unsupported(String),
    #[error("malformed value: {0}")]
    Malformed(String),
}

/// Exact payload of a ring element. The shape is determined by the owning [`Ring`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Elem {
    Num(BigRational),
    Complex(BigRational, BigRational),
    Dual(Box<Elem>, Box<Elem>),
    /// Row-major n×n entries.
    Mat(Vec<Elem>),
    /// Coefficient of Z^k at index k.
    Group(Vec<Elem>),
    Laurent(LaurentElem),
}

/// `t^lo · Σ coeffs[k] t^k / den(t)`. `den` is monic with nonzero constant term and is
/// coprime to the numerator; it is 1 for honest Laurent polynomials.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LaurentElem {
    pub(crate) lo: i64,
    pub(crate) coeffs: Vec<Elem>,
    pub(crate) den: QPoly,
}

impl LaurentElem {
    pub fn lowest_exponent(&self) -> i64 {
        self.lo
    }

    pub fn coefficients(&self) -> &[Elem] {
        &self.coeffs
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn denominator(&self) -> Vec<BigRational> {
        self.den.0.clone()
    }
}

fn q0() -> BigRational {
    BigRational::zero()
}

fn q1() -> BigRational {
    BigRational::one()
}

impl Ring {
    pub(crate) fn zero_elem(&self) -> Elem {
        match self.kind() {
            RingKind::Int | RingKind::Rat => Elem::Num(q0()),
            RingKind::ComplexConj => Elem::Complex(q0(), q0()),
            RingKind::Dual { base, .. } => Elem::Dual(Box::new(base.zero_elem()), Box::new(base.zero_elem())),
            RingKind::Mat { n, base } => Elem::Mat(vec![base.zero_elem(); n * n]),
            RingKind::Group { n, base } => Elem::Group(vec![base.zero_elem(); *n]),
            RingKind::Laurent { .. } => Elem::Laurent(LaurentElem { lo: 0, coeffs: vec![], den: QPoly::one() }),
        }
    }

    pub(crate) fn one_elem(&self) -> Elem {
        self.from_q(&q1())
    }

    /// Image of a rational scalar.
    pub(crate) fn from_q(&self, q: &BigRational) -> Elem {
        match self.kind() {
            RingKind::Int | RingKind::Rat => Elem::Num(q.clone()),
            RingKind::ComplexConj => Elem::Complex(q.clone(), q0()),
            _ => {
                let base = self.base().unwrap();
                self.embed_base(base.from_q(q))
            }
        }
    }

    /// Embeds a base-ring element (diagonally for matrices, as a constant otherwise).
    pub(crate) fn embed_base(&self, b: Elem) -> Elem {
        match self.kind() {
            RingKind::Dual { base, .. } => Elem::Dual(Box::new(b), Box::new(base.zero_elem())),
            RingKind::Mat { n, base } => {
                let mut m = vec![base.zero_elem(); n * n];
                for i in 0..*n {
                    m[i * n + i] = b.clone();
                }
                Elem::Mat(m)
            }
            RingKind::Group { n, base } => {
                let mut c = vec![base.zero_elem(); *n];
                c[0] = b;
                Elem::Group(c)
            }
            RingKind::Laurent { base, .. } => self.laurent_norm(0, vec![b], QPoly::one(), base),
            _ => b,
        }
    }

    /// Named generators: `i`, `ε`/`eps`, `Z`, or the Laurent variable. Looks through bases.
    pub(crate) fn symbol(&self, name: &str) -> Option<Elem> {
        match self.kind() {
            RingKind::Int | RingKind::Rat => None,
            RingKind::ComplexConj => (name == "i").then(|| Elem::Complex(q0(), q1())),
            RingKind::Dual { base, .. } => {
                if matches!(name, "ε" | "eps") {
                    Some(Elem::Dual(Box::new(base.zero_elem()), Box::new(base.one_elem())))
                } else {
                    base.symbol(name).map(|b| self.embed_base(b))
                }
            }
            RingKind::Group { n, base } => {
                if name == "Z" {
                    let mut c = vec![base.zero_elem(); *n];
                    c[1] = base.one_elem();
                    Some(Elem::Group(c))
                } else {
                    base.symbol(name).map(|b| self.embed_base(b))
                }
            }
            RingKind::Laurent { var, base, .. } => {
                if name == var {
                    Some(Elem::Laurent(LaurentElem { lo: 1, coeffs: vec![base.one_elem()], den: QPoly::one() }))
                } else {
                    base.symbol(name).map(|b| self.embed_base(b))
                }
            }
            RingKind::Mat { base, .. } => base.symbol(name).map(|b| self.embed_base(b)),
        }
    }

    pub(crate) fn is_zero_elem(&self, e: &Elem) -> bool {
        match e {
            Elem::Num(q) => q.is_zero(),
            Elem::Complex(a, b) => a.is_zero() && b.is_zero(),
            Elem::Laurent(l) => l.coeffs.is_empty(),
            _ => *e == self.zero_elem(),
        }
    }

    pub(crate) fn add_elem(&self, a: &Elem, b: &Elem) -> Elem {
        match (self.kind(), a, b) {
            (_, Elem::Num(x), Elem::Num(y)) => Elem::Num(x + y),
            (_, Elem::Complex(a1, b1), Elem::Complex(a2, b2)) => Elem::Complex(a1 + a2, b1 + b2),
            (RingKind::Dual { base, .. }, Elem::Dual(a1, e1), Elem::Dual(a2, e2)) => {
                Elem::Dual(Box::new(base.add_elem(a1, a2)), Box::new(base.add_elem(e1, e2)))
            }
            (RingKind::Mat { base, .. }, Elem::Mat(x), Elem::Mat(y)) => {
                Elem::Mat(x.iter().zip(y).map(|(p, q)| base.add_elem(p, q)).collect())
            }
            (RingKind::Group { base, .. }, Elem::Group(x), Elem::Group(y)) => {
                Elem::Group(x.iter().zip(y).map(|(p, q)| base.add_elem(p, q)).collect())
            }
            (RingKind::Laurent { base, .. }, Elem::Laurent(x), Elem::Laurent(y)) => self.laurent_add(base, x, y),
            _ => panic!("payload does not match ring {}", self.spec()),
        }
    }

    pub(crate) fn neg_elem(&self, a: &Elem) -> Elem {
        self.scale_elem(&-q1(), a)
    }

    pub(crate) fn sub_elem(&self, a: &Elem, b: &Elem) -> Elem {
        self.add_elem(a, &self.neg_elem(b))
    }

    /// Multiplication by a central rational scalar.
    pub(crate) fn scale_elem(&self, k: &BigRational, a: &Elem) -> Elem {
        match (self.kind(), a) {
            (_, Elem::Num(x)) => Elem::Num(k * x),
            (_, Elem::Complex(x, y)) => Elem::Complex(k * x, k * y),
            (RingKind::Dual { base, .. }, Elem::Dual(x, e)) => {
                Elem::Dual(Box::new(base.scale_elem(k, x)), Box::new(base.scale_elem(k, e)))
            }
            (RingKind::Mat { base, .. }, Elem::Mat(x)) => Elem::Mat(x.iter().map(|p| base.scale_elem(k, p)).collect()),
            (RingKind::Group { base, .. }, Elem::Group(x)) => {
                Elem::Group(x.iter().map(|p| base.scale_elem(k, p)).collect())
            }
            (RingKind::Laurent { base, .. }, Elem::Laurent(x)) => {
                if k.is_zero() {
                    return self.zero_elem();
                }
                let coeffs = x.coeffs.iter().map(|c| base.scale_elem(k, c)).collect();
                self.laurent_norm(x.lo, coeffs, x.den.clone(), base)
            }
            _ => panic!("payload does not match ring {}", self.spec()),
        }
    }

    pub(crate) fn mul_elem(&self, a: &Elem, b: &Elem) -> Elem {
        match (self.kind(), a, b) {
            (_, Elem::Num(x), Elem::Num(y)) => Elem::Num(x * y),
            (_, Elem::Complex(a1, b1), Elem::Complex(a2, b2)) => Elem::Complex(a1 * a2 - b1 * b2, a1 * b2 + b1 * a2),
            (RingKind::Dual { base, .. }, Elem::Dual(a1, e1), Elem::Dual(a2, e2)) => {
                let re = base.mul_elem(a1, a2);
                let eps = base.add_elem(&base.mul_elem(a1, e2), &base.mul_elem(e1, a2));
                Elem::Dual(Box::new(re), Box::new(eps))
            }
            (RingKind::Mat { n, base }, Elem::Mat(x), Elem::Mat(y)) => {
                let n = *n;
                let mut out = Vec::with_capacity(n * n);
                for i in 0..n {
                    for j in 0..n {
                        let mut acc = base.zero_elem();
                        for k in 0..n {
                            let (p, q) = (&x[i * n + k], &y[k * n + j]);
                            if base.is_zero_elem(p) || base.is_zero_elem(q) {
                                continue;
                            }
                            acc = base.add_elem(&acc, &base.mul_elem(p, q));
                        }
                        out.push(acc);
                    }
                }
                Elem::Mat(out)
            }
            (RingKind::Group { n, base }, Elem::Group(x), Elem::Group(y)) => {
                let n = *n;
                let mut out = vec![base.zero_elem(); n];
                for (i, p) in x.iter().enumerate() {
                    if base.is_zero_elem(p) {
                        continue;
                    }
                    for (j, q) in y.iter().enumerate() {
                        if base.is_zero_elem(q) {
                            continue;
                        }
                        let k = (i + j) % n;
                        out[k] = base.add_elem(&out[k], &base.mul_elem(p, q));
                    }
                }
                Elem::Group(out)
            }
            (RingKind::Laurent { base, .. }, Elem::Laurent(x), Elem::Laurent(y)) => self.laurent_mul(base, x, y),
            _ => panic!("payload does not match ring {}", self.spec()),
        }
    }

    pub(crate) fn sigma_elem(&self, a: &Elem) -> Elem {
        match (self.kind(), a) {
            (_, Elem::Num(_)) => a.clone(),
            (_, Elem::Complex(x, y)) => Elem::Complex(x.clone(), -y),
            (RingKind::Dual { flavor, base }, Elem::Dual(x, e)) => {
                let se = base.sigma_elem(e);
                let se = match flavor {
                    DualFlavor::Trivial => se,
                    DualFlavor::Conjugate => base.neg_elem(&se),
                };
                Elem::Dual(Box::new(base.sigma_elem(x)), Box::new(se))
            }
            (RingKind::Mat { n, base }, Elem::Mat(x)) => {
                let n = *n;
                let mut out = Vec::with_capacity(n * n);
                for i in 0..n {
                    for j in 0..n {
                        out.push(base.sigma_elem(&x[j * n + i]));
                    }
                }
                Elem::Mat(out)
            }
            (RingKind::Group { n, base }, Elem::Group(x)) => {
                Elem::Group((0..*n).map(|k| base.sigma_elem(&x[(n - k) % n])).collect())
            }
            (RingKind::Laurent { base, qmode, .. }, Elem::Laurent(x)) => {
                let coeffs: Vec<Elem> = x.coeffs.iter().map(|c| base.sigma_elem(c)).collect();
                if !qmode {
                    return Elem::Laurent(LaurentElem { lo: x.lo, coeffs, den: x.den.clone() });
                }
                if coeffs.is_empty() {
                    return self.zero_elem();
                }
                // s ↦ s⁻¹ on n(s)/d(s) gives n(1/s)·s^deg(d) / rev(d)(s)
                let hi = x.lo + coeffs.len() as i64 - 1;
                let rev: Vec<Elem> = coeffs.into_iter().rev().collect();
                let lo = -hi + x.den.degree() as i64;
                self.laurent_norm(lo, rev, x.den.reversed(), base)
            }
            _ => panic!("payload does not match ring {}", self.spec()),
        }
    }

    /// Inverse in the ambient ring (over the field of fractions of the integral base).
    pub(crate) fn inverse_elem(&self, a: &Elem) -> Result<Elem, RingError> {
        match (self.kind(), a) {
            (_, Elem::Num(x)) => {
                if x.is_zero() {
                    Err(RingError::NotInvertible)
                } else {
                    Ok(Elem::Num(x.recip()))
                }
            }
            (_, Elem::Complex(x, y)) => {
                let norm = x * x + y * y;
                if norm.is_zero() {
                    return Err(RingError::NotInvertible);
                }
                Ok(Elem::Complex(x / &norm, -y / &norm))
            }
            (RingKind::Dual { base, .. }, Elem::Dual(x, e)) => {
                let xi = base.inverse_elem(x)?;
                let ei = base.neg_elem(&base.mul_elem(&base.mul_elem(&xi, e), &xi));
                Ok(Elem::Dual(Box::new(xi), Box::new(ei)))
            }
            (RingKind::Mat { n: 2, base }, Elem::Mat(x)) if base.is_commutative() => inverse_2x2(base, x).map(Elem::Mat),
            (RingKind::Mat { n, base }, Elem::Mat(x)) => gauss_jordan(base, *n, x).map(Elem::Mat),
            (RingKind::Group { n, base }, Elem::Group(_)) => {
                let m = match self.hurley_elem(a) {
                    Elem::Mat(m) => m,
                    _ => unreachable!(),
                };
                let inv = gauss_jordan(base, *n, &m)?;
                let pulled = Elem::Group(inv[..*n].to_vec());
                if self.mul_elem(a, &pulled) == self.one_elem() {
                    Ok(pulled)
                } else {
                    Err(RingError::NotInvertible)
                }
            }
            (RingKind::Laurent { base, .. }, Elem::Laurent(x)) => {
                if x.coeffs.is_empty() {
                    return Err(RingError::NotInvertible);
                }
                if base.is_scalar() {
                    let num = QPoly::new(x.coeffs.iter().map(num_of).collect());
                    let coeffs = x.den.0.iter().map(|c| Elem::Num(c.clone())).collect();
                    Ok(self.laurent_norm(-x.lo, coeffs, num, base))
                } else if x.coeffs.len() == 1 && x.den.is_one() {
                    let ci = base.inverse_elem(&x.coeffs[0])?;
                    Ok(Elem::Laurent(LaurentElem { lo: -x.lo, coeffs: vec![ci], den: QPoly::one() }))
                } else {
                    Err(RingError::Unsupported(format!("inverse of non-monomial in {}", self.spec())))
                }
            }
            _ => panic!("payload does not match ring {}", self.spec()),
        }
    }

    /// Whether the payload lies in the integral subring (ℤ, ℤ[i], ℤ+ℤε, Mat_n(ℤ), ℤ[G], ℤ[t,t⁻¹], ...).
    pub(crate) fn is_integral_elem(&self, a: &Elem) -> bool {
        match (self.kind(), a) {
            (RingKind::Rat, _) => true,
            (_, Elem::Num(x)) => x.is_integer(),
            (_, Elem::Complex(x, y)) => x.is_integer() && y.is_integer(),
            (RingKind::Dual { base, .. }, Elem::Dual(x, e)) => base.is_integral_elem(x) && base.is_integral_elem(e),
            (RingKind::Mat { base, .. }, Elem::Mat(x)) | (RingKind::Group { base, .. }, Elem::Group(x)) => {
                x.iter().all(|c| base.is_integral_elem(c))
            }
            (RingKind::Laurent { base, .. }, Elem::Laurent(x)) => {
                x.den.is_one() && x.coeffs.iter().all(|c| base.is_integral_elem(c))
            }
            _ => false,
        }
    }

    /// Circulant image in `mat:n:<base>`: entry (i, j) is the coefficient of Z^(j-i).
    pub(crate) fn hurley_elem(&self, a: &Elem) -> Elem {
        match (self.kind(), a) {
            (RingKind::Group { n, .. }, Elem::Group(c)) => {
                let n = *n;
                let mut m = Vec::with_capacity(n * n);
                for i in 0..n {
                    for j in 0..n {
                        m.push(c[(j + n - i) % n].clone());
                    }
                }
                Elem::Mat(m)
            }
            _ => panic!("hurley embedding needs a group ring, got {}", self.spec()),
        }
    }

    fn laurent_add(&self, base: &Ring, x: &LaurentElem, y: &LaurentElem) -> Elem {
        if x.coeffs.is_empty() {
            return Elem::Laurent(y.clone());
        }
        if y.coeffs.is_empty() {
            return Elem::Laurent(x.clone());
        }
        if x.den == y.den {
            let (lo, coeffs) = add_aligned(base, x.lo, &x.coeffs, y.lo, &y.coeffs);
            return self.laurent_norm(lo, coeffs, x.den.clone(), base);
        }
        let xn = times_qpoly(base, &x.coeffs, &y.den);
        let yn = times_qpoly(base, &y.coeffs, &x.den);
        let (lo, coeffs) = add_aligned(base, x.lo, &xn, y.lo, &yn);
        self.laurent_norm(lo, coeffs, x.den.mul(&y.den), base)
    }

    fn laurent_mul(&self, base: &Ring, x: &LaurentElem, y: &LaurentElem) -> Elem {
        if x.coeffs.is_empty() || y.coeffs.is_empty() {
            return self.zero_elem();
        }
        let mut out = vec![base.zero_elem(); x.coeffs.len() + y.coeffs.len() - 1];
        for (i, p) in x.coeffs.iter().enumerate() {
            if base.is_zero_elem(p) {
                continue;
            }
            for (j, q) in y.coeffs.iter().enumerate() {
                if base.is_zero_elem(q) {
                    continue;
                }
                out[i + j] = base.add_elem(&out[i + j], &base.mul_elem(p, q));
            }
        }
        self.laurent_norm(x.lo + y.lo, out, x.den.mul(&y.den), base)
    }

    /// Canonical form: trimmed coefficients, monic denominator with nonzero constant term,
    /// and (over a scalar base) numerator and denominator coprime.
    pub(crate) fn laurent_norm(&self, mut lo: i64, mut coeffs: Vec<Elem>, mut den: QPoly, base: &Ring) -> Elem {
        while coeffs.last().is_some_and(|c| base.is_zero_elem(c)) {
            coeffs.pop();
        }
        let lead_zeros = coeffs.iter().take_while(|c| base.is_zero_elem(c)).count();
        if lead_zeros > 0 {
            coeffs.drain(..lead_zeros);
            lo += lead_zeros as i64;
        }
        if coeffs.is_empty() {
            return self.zero_elem();
        }
        if den.is_one() {
            return Elem::Laurent(LaurentElem { lo, coeffs, den });
        }
        let k = den.low_zeros();
        if k > 0 {
            den = den.shift_down(k);
            lo -= k as i64;
        }
        if base.is_scalar() {
            let mut num = QPoly::new(coeffs.iter().map(num_of).collect());
            let (q, r) = num.div_rem(&den);
            if r.is_zero() {
                let coeffs: Vec<Elem> = q.0.into_iter().map(Elem::Num).collect();
                return self.laurent_norm(lo, coeffs, QPoly::one(), base);
            }
            let g = QPoly::gcd(&den, &r);
            if !g.is_one() {
                num = num.div_rem(&g).0;
                den = den.div_rem(&g).0;
            }
            let l = den.lead().recip();
            den = den.scale(&l);
            num = num.scale(&l);
            coeffs = num.0.into_iter().map(Elem::Num).collect();
        } else {
            let l = den.lead().recip();
            den = den.scale(&l);
            coeffs = coeffs.iter().map(|c| base.scale_elem(&l, c)).collect();
        }
        Elem::Laurent(LaurentElem { lo, coeffs, den })
    }

    /// Evaluates a Laurent element at a rational point of its variable.
    pub(crate) fn laurent_eval(&self, a: &Elem, at: &BigRational) -> Result<Elem, RingError> {
        let (base, x) = match (self.kind(), a) {
            (RingKind::Laurent { base, .. }, Elem::Laurent(x)) => (base, x),
            _ => return Err(RingError::Unsupported(format!("{} is not a Laurent ring", self.spec()))),
        };
        if at.is_zero() && (x.lo < 0) {
            return Err(RingError::Unsupported("negative power evaluated at zero".into()));
        }
        let d = x.den.eval(at);
        if d.is_zero() {
            return Err(RingError::Unsupported("denominator vanishes at evaluation point".into()));
        }
        let mut acc = base.zero_elem();
        for (k, c) in x.coeffs.iter().enumerate() {
            let p = pow_q(at, x.lo + k as i64);
            acc = base.add_elem(&acc, &base.scale_elem(&p, c));
        }
        Ok(base.scale_elem(&d.recip(), &acc))
    }

    pub(crate) fn format_elem(&self, a: &Elem) -> String {
        match (self.kind(), a) {
            (_, Elem::Num(x)) => fmt_q(x),
            (_, Elem::Complex(x, y)) => {
                let im = match (y.is_zero(), y.abs().is_one()) {
                    (true, _) => String::new(),
                    (false, true) => "i".into(),
                    (false, false) => format!("{}i", fmt_q(&y.abs())),
                };
                match (x.is_zero(), y.is_zero()) {
                    (_, true) => fmt_q(x),
                    (true, false) => format!("{}{im}", if y.is_negative() { "-" } else { "" }),
                    (false, false) => format!("{} {} {im}", fmt_q(x), if y.is_negative() { "-" } else { "+" }),
                }
            }
            (RingKind::Dual { base, .. }, Elem::Dual(x, e)) => {
                if let (Elem::Num(r), Elem::Num(s)) = (x.as_ref(), e.as_ref()) {
                    return format_scalar_poly(
                        &[(0, r.clone()), (1, s.clone())].into_iter().filter(|(_, c)| !c.is_zero()).collect::<Vec<_>>(),
                        "ε",
                    );
                }
                format!("({}) + ({})ε", base.format_elem(x), base.format_elem(e))
            }
            (RingKind::Mat { n, base }, Elem::Mat(x)) => {
                let rows: Vec<String> = (0..*n)
                    .map(|i| {
                        let r: Vec<String> = (0..*n).map(|j| base.format_elem(&x[i * n + j])).collect();
                        format!("[{}]", r.join(", "))
                    })
                    .collect();
                format!("[{}]", rows.join(", "))
            }
            (RingKind::Group { base, .. }, Elem::Group(c)) => {
                format_poly(base, c.iter().enumerate().map(|(k, e)| (k as i64, e)), "Z")
            }
            (RingKind::Laurent { var, base, .. }, Elem::Laurent(x)) => {
                let num = format_poly(base, x.coeffs.iter().enumerate().map(|(k, e)| (x.lo + k as i64, e)), var);
                if x.den.is_one() {
                    num
                } else {
                    format!("({num})/({})", x.den.fmt_in(var))
                }
            }
            _ => panic!("payload does not match ring {}", self.spec()),
        }
    }

    /// Structural shape check used when decoding.
    pub(crate) fn conforms(&self, a: &Elem) -> bool {
        match (self.kind(), a) {
            (RingKind::Int | RingKind::Rat, Elem::Num(_)) => true,
            (RingKind::ComplexConj, Elem::Complex(..)) => true,
            (RingKind::Dual { base, .. }, Elem::Dual(x, e)) => base.conforms(x) && base.conforms(e),
            (RingKind::Mat { n, base }, Elem::Mat(x)) => x.len() == n * n && x.iter().all(|c| base.conforms(c)),
            (RingKind::Group { n, base }, Elem::Group(x)) => x.len() == *n && x.iter().all(|c| base.conforms(c)),
            (RingKind::Laurent { base, .. }, Elem::Laurent(x)) => x.coeffs.iter().all(|c| base.conforms(c)),
            _ => false,
        }
    }
}

fn format_poly<'a>(base: &Ring, terms: impl Iterator<Item = (i64, &'a Elem)>, var: &str) -> String {
    let terms: Vec<(i64, &Elem)> = terms.filter(|(_, e)| !base.is_zero_elem(e)).collect();
    if base.is_scalar() {
        let qs: Vec<(i64, BigRational)> = terms.iter().map(|(k, e)| (*k, num_of(e))).collect();
        return format_scalar_poly(&qs, var);
    }
    if terms.is_empty() {
        return "0".into();
    }
    terms
        .iter()
        .map(|(k, e)| match k {
            0 => format!("({})", base.format_elem(e)),
            1 => format!("({}){var}", base.format_elem(e)),
            _ => format!("({}){var}^{k}", base.format_elem(e)),
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

fn num_of(e: &Elem) -> BigRational {
    match e {
        Elem::Num(q) => q.clone(),
        _ => panic!("expected a scalar coefficient"),
    }
}

fn pow_q(x: &BigRational, e: i64) -> BigRational {
    let p = num_traits::pow(x.clone(), e.unsigned_abs() as usize);
    if e < 0 {
        p.recip()
    } else {
        p
    }
}

fn add_aligned(base: &Ring, lo1: i64, c1: &[Elem], lo2: i64, c2: &[Elem]) -> (i64, Vec<Elem>) {
    let lo = lo1.min(lo2);
    let hi = (lo1 + c1.len() as i64).max(lo2 + c2.len() as i64);
    let mut out = vec![base.zero_elem(); (hi - lo) as usize];
    for (k, c) in c1.iter().enumerate() {
        let idx = (lo1 - lo) as usize + k;
        out[idx] = base.add_elem(&out[idx], c);
    }
    for (k, c) in c2.iter().enumerate() {
        let idx = (lo2 - lo) as usize + k;
        out[idx] = base.add_elem(&out[idx], c);
    }
    (lo, out)
}

fn times_qpoly(base: &Ring, coeffs: &[Elem], p: &QPoly) -> Vec<Elem> {
    let mut out = vec![base.zero_elem(); coeffs.len() + p.0.len() - 1];
    for (i, c) in coeffs.iter().enumerate() {
        for (j, q) in p.0.iter().enumerate() {
            if q.is_zero() {
                continue;
            }
            out[i + j] = base.add_elem(&out[i + j], &base.scale_elem(q, c));
        }
    }
    out
}

/// Adjugate over the determinant. Over Laurent bases this avoids the rational-function
/// intermediates of elimination.
fn inverse_2x2(base: &Ring, m: &[Elem]) -> Result<Vec<Elem>, RingError> {
    if base.is_zero_elem(&m[1]) && base.is_zero_elem(&m[2]) {
        let z = base.zero_elem();
        return Ok(vec![base.inverse_elem(&m[0])?, z.clone(), z, base.inverse_elem(&m[3])?]);
    }
    let det = base.sub_elem(&base.mul_elem(&m[0], &m[3]), &base.mul_elem(&m[1], &m[2]));
    if base.is_zero_elem(&det) {
        return Err(RingError::NotInvertible);
    }
    let di = base.inverse_elem(&det)?;
    Ok(vec![
        base.mul_elem(&di, &m[3]),
        base.neg_elem(&base.mul_elem(&di, &m[1])),
        base.neg_elem(&base.mul_elem(&di, &m[2])),
        base.mul_elem(&di, &m[0]),
    ])
}

/// Gauss–Jordan inversion with left-multiplied pivot inverses, valid over noncommutative bases.
fn gauss_jordan(base: &Ring, n: usize, m: &[Elem]) -> Result<Vec<Elem>, RingError> {
    let mut a: Vec<Vec<Elem>> = (0..n).map(|i| m[i * n..(i + 1) * n].to_vec()).collect();
    let mut inv: Vec<Vec<Elem>> =
        (0..n).map(|i| (0..n).map(|j| if i == j { base.one_elem() } else { base.zero_elem() }).collect()).collect();
    for col in 0..n {
        let mut found = None;
        for r in col..n {
            if base.is_zero_elem(&a[r][col]) {
                continue;
            }
            if let Ok(pinv) = base.inverse_elem(&a[r][col]) {
                found = Some((r, pinv));
                break;
            }
        }
        let (r, pinv) = found.ok_or(RingError::NotInvertible)?;
        a.swap(col, r);
        inv.swap(col, r);
        for j in 0..n {
            a[col][j] = base.mul_elem(&pinv, &a[col][j]);
            inv[col][j] = base.mul_elem(&pinv, &inv[col][j]);
        }
        for r in 0..n {
            if r == col || base.is_zero_elem(&a[r][col]) {
                continue;
            }
            let f = a[r][col].clone();
            for j in 0..n {
                let da = base.mul_elem(&f, &a[col][j]);
                a[r][j] = base.sub_elem(&a[r][j], &da);
                let di = base.mul_elem(&f, &inv[col][j]);
                inv[r][j] = base.sub_elem(&inv[r][j], &di);
            }
        }
    }
    Ok(inv.into_iter().flatten().collect())
}

/// An element of a registered involutive ring.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RingValue {
    ring: Ring,
    elem: Elem,
}

impl RingValue {
    /// Wraps a payload, checking that its shape matches the ring.
    pub fn new(ring: &Ring, elem: Elem) -> Result<Self, RingError> {
        if !ring.conforms(&elem) {
            return Err(RingError::Malformed(format!("payload does not fit {}", ring.spec())));
        }
        Ok(Self::from_parts(ring, elem))
    }

    pub(crate) fn from_parts(ring: &Ring, elem: Elem) -> Self {
        RingValue { ring: ring.clone(), elem }
    }

    pub fn zero(ring: &Ring) -> Self {
        Self::from_parts(ring, ring.zero_elem())
    }

    pub fn one(ring: &Ring) -> Self {
        Self::from_parts(ring, ring.one_elem())
    }

    pub fn from_int(ring: &Ring, n: i64) -> Self {
        Self::from_parts(ring, ring.from_q(&q_int(n)))
    }

    pub fn from_rational(ring: &Ring, q: BigRational) -> Self {
        Self::from_parts(ring, ring.from_q(&q))
    }

    /// The generator `name` (`i`, `ε`, `Z`, or a Laurent variable), looking through base rings.
    pub fn symbol(ring: &Ring, name: &str) -> Option<Self> {
        ring.symbol(name).map(|e| Self::from_parts(ring, e))
    }

    /// Builds a matrix-ring element from row-major base values.
    pub fn matrix(ring: &Ring, entries: Vec<RingValue>) -> Result<Self, RingError> {
        match ring.kind() {
            RingKind::Mat { n, base } if entries.len() == n * n => {
                for e in &entries {
                    if e.ring() != base {
                        return Err(RingError::RingMismatch(e.ring().spec(), base.spec()));
                    }
                }
                Ok(Self::from_parts(ring, Elem::Mat(entries.into_iter().map(|v| v.elem).collect())))
            }
            _ => Err(RingError::Malformed(format!("{} entries do not form a matrix in {}", entries.len(), ring.spec()))),
        }
    }

    /// Dual number `a + αε` from base values.
    pub fn dual(ring: &Ring, a: RingValue, alpha: RingValue) -> Result<Self, RingError> {
        match ring.kind() {
            RingKind::Dual { base, .. } if a.ring() == base && alpha.ring() == base => {
                Ok(Self::from_parts(ring, Elem::Dual(Box::new(a.elem), Box::new(alpha.elem))))
            }
            _ => Err(RingError::Malformed(format!("not a dual pair over {}", ring.spec()))),
        }
    }

    /// Group-ring element from its coefficients `c_0 .. c_{n-1}`.
    pub fn group_coeffs(ring: &Ring, coeffs: &[i64]) -> Result<Self, RingError> {
        match ring.kind() {
            RingKind::Group { n, base } if coeffs.len() == *n => Ok(Self::from_parts(
                ring,
                Elem::Group(coeffs.iter().map(|&c| base.from_q(&q_int(c))).collect()),
            )),
            _ => Err(RingError::Malformed(format!("{} coefficients for {}", coeffs.len(), ring.spec()))),
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    /// Image under the structural embedding of the base into `outer`
    /// (constant term, diagonal matrix, real part, or coefficient of the identity).
    pub fn embed_into(&self, outer: &Ring) -> Result<RingValue, RingError> {
        if outer.base() != Some(&self.ring) {
            return Err(RingError::RingMismatch(self.ring.spec(), outer.spec()));
        }
        Ok(Self::from_parts(outer, outer.embed_base(self.elem.clone())))
    }

    pub fn elem(&self) -> &Elem {
        &self.elem
    }

    pub fn into_elem(self) -> Elem {
        self.elem
    }

    pub fn is_zero(&self) -> bool {
        self.ring.is_zero_elem(&self.elem)
    }

    pub fn is_one(&self) -> bool {
        self.elem == self.ring.one_elem()
    }

    pub fn sigma(&self) -> Self {
        Self::from_parts(&self.ring, self.ring.sigma_elem(&self.elem))
    }

    pub fn is_sigma_fixed(&self) -> bool {
        self.ring.sigma_elem(&self.elem) == self.elem
    }

    /// Inverse in the ambient ring; mutation formulas and angles use this one.
    pub fn inverse(&self) -> Result<Self, RingError> {
        Ok(Self::from_parts(&self.ring, self.ring.inverse_elem(&self.elem)?))
    }

    /// `(N, d)` with `self⁻¹ = N·d⁻¹` and `d` central. For 2×2 matrices over a commutative
    /// base this is the adjugate over the determinant, so products can be formed with
    /// polynomial entries and divided once at the end.
    pub fn inverse_fraction(&self) -> Result<(Self, Self), RingError> {
        match (self.ring.kind(), &self.elem) {
            (RingKind::Mat { n: 2, base }, Elem::Mat(m)) if base.is_commutative() && !base.is_scalar() => {
                let det = base.sub_elem(&base.mul_elem(&m[0], &m[3]), &base.mul_elem(&m[1], &m[2]));
                if base.is_zero_elem(&det) {
                    return Err(RingError::NotInvertible);
                }
                let z = base.zero_elem();
                let adj = vec![m[3].clone(), base.neg_elem(&m[1]), base.neg_elem(&m[2]), m[0].clone()];
                let d = vec![det.clone(), z.clone(), z, det];
                Ok((Self::from_parts(&self.ring, Elem::Mat(adj)), Self::from_parts(&self.ring, Elem::Mat(d))))
            }
            _ => Ok((self.inverse()?, Self::one(&self.ring))),
        }
    }

    /// Inverse inside the integral subring: fails with `NotInvertible` unless both
    /// the value and its inverse are integral.
    pub fn try_inverse(&self) -> Result<Self, RingError> {
        if !self.is_integral() {
            return Err(RingError::NotInvertible);
        }
        let inv = self.inverse()?;
        if inv.is_integral() {
            Ok(inv)
        } else {
            Err(RingError::NotInvertible)
        }
    }

    pub fn is_integral(&self) -> bool {
        self.ring.is_integral_elem(&self.elem)
    }

    pub fn is_unit(&self) -> bool {
        self.try_inverse().is_ok()
    }

    pub fn scale(&self, k: &BigRational) -> Self {
        Self::from_parts(&self.ring, self.ring.scale_elem(k, &self.elem))
    }

    /// Integer power; negative exponents use the ambient inverse.
    pub fn pow(&self, e: i64) -> Result<Self, RingError> {
        let mut base = if e < 0 { self.inverse()? } else { self.clone() };
        let mut k = e.unsigned_abs();
        let mut acc = Self::one(&self.ring);
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            k >>= 1;
        }
        Ok(acc)
    }

    /// Left σ-twisted commutator σ(a)b − σ(b)a.
    pub fn twisted_commutator_left(&self, b: &Self) -> Self {
        &(&self.sigma() * b) - &(&b.sigma() * self)
    }

    /// Right σ-twisted commutator aσ(b) − bσ(a).
    pub fn twisted_commutator_right(&self, b: &Self) -> Self {
        &(self * &b.sigma()) - &(b * &self.sigma())
    }

    /// ½(x + σ(x)).
    pub fn project_sigma(&self) -> Result<Self, RingError> {
        if !self.ring.has_half() {
            return Err(RingError::HalfUnavailable(self.ring.spec()));
        }
        Ok((self + &self.sigma()).scale(&BigRational::new(1.into(), 2.into())))
    }

    /// Scalar image of the integer part, when the value is a rational scalar.
    pub fn as_rational(&self) -> Option<BigRational> {
        match &self.elem {
            Elem::Num(q) => Some(q.clone()),
            _ => None,
        }
    }

    /// Row-major entries of a matrix-ring value.
    pub fn matrix_entries(&self) -> Option<Vec<RingValue>> {
        match (self.ring.kind(), &self.elem) {
            (RingKind::Mat { base, .. }, Elem::Mat(x)) => {
                Some(x.iter().map(|e| Self::from_parts(base, e.clone())).collect())
            }
            _ => None,
        }
    }

    /// Coefficients of a group-ring value.
    pub fn group_coefficients(&self) -> Option<Vec<RingValue>> {
        match (self.ring.kind(), &self.elem) {
            (RingKind::Group { base, .. }, Elem::Group(x)) => {
                Some(x.iter().map(|e| Self::from_parts(base, e.clone())).collect())
            }
            _ => None,
        }
    }

    /// Real and ε parts of a dual number.
    pub fn dual_parts(&self) -> Option<(RingValue, RingValue)> {
        match (self.ring.kind(), &self.elem) {
            (RingKind::Dual { base, .. }, Elem::Dual(x, e)) => {
                Some((Self::from_parts(base, (**x).clone()), Self::from_parts(base, (**e).clone())))
            }
            _ => None,
        }
    }

    /// Substitutes a rational value for the Laurent variable.
    pub fn eval_laurent(&self, at: &BigRational) -> Result<RingValue, RingError> {
        let base = self.ring.base().cloned().ok_or_else(|| RingError::Unsupported("not a Laurent ring".into()))?;
        Ok(Self::from_parts(&base, self.ring.laurent_eval(&self.elem, at)?))
    }

    /// Applies `f` to every entry of a matrix over a Laurent ring (or directly to a Laurent value).
    pub fn eval_laurent_deep(&self, at: &BigRational) -> Result<RingValue, RingError> {
        match self.ring.kind() {
            RingKind::Laurent { .. } => self.eval_laurent(at),
            RingKind::Mat { n, base } => {
                let entries = self.matrix_entries().unwrap();
                let evald = entries.iter().map(|e| e.eval_laurent_deep(at)).collect::<Result<Vec<_>, _>>()?;
                let target = Ring::mat(*n, evald.first().map(|v| v.ring().clone()).unwrap_or_else(|| base.clone()));
                RingValue::matrix(&target, evald)
            }
            _ => Err(RingError::Unsupported(format!("no Laurent layer in {}", self.ring.spec()))),
        }
    }

    fn check_same(&self, o: &Self) {
        assert!(self.ring == o.ring, "ring mismatch: {} vs {}", self.ring.spec(), o.ring.spec());
    }
}

impl fmt::Display for RingValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.ring.format_elem(&self.elem))
    }
}

impl fmt::Debug for RingValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} in {}", self, self.ring.spec())
    }
}

impl<'a> Add<&'a RingValue> for &'a RingValue {
    type Output = RingValue;
    fn add(self, o: &RingValue) -> RingValue {
        self.check_same(o);
        RingValue::from_parts(&self.ring, self.ring.add_elem(&self.elem, &o.elem))
    }
}

impl<'a> Sub<&'a RingValue> for &'a RingValue {
    type Output = RingValue;
    fn sub(self, o: &RingValue) -> RingValue {
        self.check_same(o);
        RingValue::from_parts(&self.ring, self.ring.sub_elem(&self.elem, &o.elem))
    }
}

impl<'a> Mul<&'a RingValue> for &'a RingValue {
    type Output = RingValue;
    fn mul(self, o: &RingValue) -> RingValue {
        self.check_same(o);
        RingValue::from_parts(&self.ring, self.ring.mul_elem(&self.elem, &o.elem))
    }
}

impl Neg for &RingValue {
    type Output = RingValue;
    fn neg(self) -> RingValue {
        RingValue::from_parts(&self.ring, self.ring.neg_elem(&self.elem))
    }
}

macro_rules! owned_ops {
    ($tr:ident, $m:ident) => {
        impl $tr<RingValue> for RingValue {
            type Output = RingValue;
            fn $m(self, o: RingValue) -> RingValue {
                (&self).$m(&o)
            }
        }
        impl<'a> $tr<&'a RingValue> for RingValue {
            type Output = RingValue;
            fn $m(self, o: &RingValue) -> RingValue {
                (&self).$m(o)
            }
        }
        impl<'a> $tr<RingValue> for &'a RingValue {
            type Output = RingValue;
            fn $m(self, o: RingValue) -> RingValue {
                self.$m(&o)
            }
        }
    };
}

owned_ops!(Add, add);
owned_ops!(Sub, sub);
owned_ops!(Mul, mul);

impl Neg for RingValue {
    type Output = RingValue;
    fn neg(self) -> RingValue {
        -&self
    }
}
