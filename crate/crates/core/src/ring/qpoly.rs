//! Dense univariate polynomials over ℚ, used as Laurent denominators.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Coefficients from degree 0 upward, never with a trailing zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) struct QPoly(pub(crate) Vec<BigRational>);

impl QPoly {
    pub(crate) fn new(mut c: Vec<BigRational>) -> Self {
        while c.last().is_some_and(Zero::is_zero) {
            c.pop();
        }
        QPoly(c)
    }

    pub(crate) fn one() -> Self {
        QPoly(vec![BigRational::one()])
    }

    pub(crate) fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub(crate) fn is_one(&self) -> bool {
        self.0.len() == 1 && self.0[0].is_one()
    }

    pub(crate) fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub(crate) fn lead(&self) -> &BigRational {
        self.0.last().expect("zero polynomial has no leading coefficient")
    }

    pub(crate) fn mul(&self, o: &QPoly) -> QPoly {
        if self.is_zero() || o.is_zero() {
            return QPoly(vec![]);
        }
        let mut out = vec![BigRational::zero(); self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        QPoly::new(out)
    }

    pub(crate) fn scale(&self, k: &BigRational) -> QPoly {
        QPoly::new(self.0.iter().map(|c| c * k).collect())
    }

    pub(crate) fn div_rem(&self, d: &QPoly) -> (QPoly, QPoly) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let mut rem = self.0.clone();
        if rem.len() < d.0.len() {
            return (QPoly(vec![]), self.clone());
        }
        let mut quot = vec![BigRational::zero(); rem.len() - d.0.len() + 1];
        let lead = d.lead();
        for k in (0..quot.len()).rev() {
            let c = &rem[k + d.0.len() - 1] / lead;
            if c.is_zero() {
                continue;
            }
            for (j, dj) in d.0.iter().enumerate() {
                rem[k + j] -= &c * dj;
            }
            quot[k] = c;
        }
        (QPoly::new(quot), QPoly::new(rem))
    }

    pub(crate) fn monic(&self) -> QPoly {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self.lead().recip();
        self.scale(&inv)
    }

    pub(crate) fn gcd(a: &QPoly, b: &QPoly) -> QPoly {
        if a.degree() == 0 && !a.is_zero() || b.degree() == 0 && !b.is_zero() {
            return QPoly::one();
        }
        if coprime_mod_p(a, b) {
            return QPoly::one();
        }
        // Monic remainders keep the rational coefficients small.
        let (mut x, mut y) = (a.monic(), b.monic());
        while !y.is_zero() {
            let (_, r) = x.div_rem(&y);
            x = y;
            y = r.monic();
        }
        x
    }

    /// Number of leading zero coefficients, i.e. the power of the variable dividing `self`.
    pub(crate) fn low_zeros(&self) -> usize {
        self.0.iter().take_while(|c| c.is_zero()).count()
    }

    pub(crate) fn shift_down(&self, k: usize) -> QPoly {
        QPoly::new(self.0[k..].to_vec())
    }

    /// `x^deg · p(1/x)`.
    pub(crate) fn reversed(&self) -> QPoly {
        QPoly::new(self.0.iter().rev().cloned().collect())
    }

    pub(crate) fn eval(&self, x: &BigRational) -> BigRational {
        self.0.iter().rev().fold(BigRational::zero(), |acc, c| acc * x + c)
    }

    pub(crate) fn fmt_in(&self, var: &str) -> String {
        let terms: Vec<(i64, BigRational)> =
            self.0.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (i as i64, c.clone())).collect();
        format_scalar_poly(&terms, var)
    }
}

/// Human-readable `3 - 2t + t^2` style rendering of `(exponent, coefficient)` pairs.
const P: u64 = (1 << 61) - 1;

fn mulmod(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % P as u128) as u64
}

fn powmod(mut a: u64, mut e: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, a);
        }
        a = mulmod(a, a);
        e >>= 1;
    }
    r
}

fn reduce(n: &BigInt) -> u64 {
    let p = BigInt::from(P);
    let r = ((n % &p) + &p) % &p;
    r.try_into().expect("residue fits in u64")
}

/// Image in 𝔽_p, or `None` when some denominator is divisible by p.
fn to_mod_p(a: &QPoly) -> Option<Vec<u64>> {
    a.0.iter()
        .map(|c| {
            let d = reduce(c.denom());
            (d != 0).then(|| mulmod(reduce(c.numer()), powmod(d, P - 2)))
        })
        .collect()
}

fn trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

/// Sufficient test for gcd(a, b) = 1 over ℚ: if a keeps its degree mod p, every common
/// factor of positive degree survives reduction, so a constant gcd mod p rules them out.
fn coprime_mod_p(a: &QPoly, b: &QPoly) -> bool {
    let (Some(mut x), Some(mut y)) = (to_mod_p(a), to_mod_p(b)) else { return false };
    if x.len() != a.0.len() {
        return false;
    }
    trim(&mut y);
    while !y.is_empty() {
        let inv = powmod(*y.last().unwrap(), P - 2);
        while x.len() >= y.len() {
            let c = mulmod(*x.last().unwrap(), inv);
            let off = x.len() - y.len();
            for (j, &yj) in y.iter().enumerate() {
                x[off + j] = (x[off + j] + P - mulmod(c, yj)) % P;
            }
            trim(&mut x);
        }
        std::mem::swap(&mut x, &mut y);
    }
    x.len() == 1
}

pub(crate) fn format_scalar_poly(terms: &[(i64, BigRational)], var: &str) -> String {
    if terms.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (idx, (e, c)) in terms.iter().enumerate() {
        let neg = c.is_negative();
        let mag = c.abs();
        if idx == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let mono = match *e {
            0 => String::new(),
            1 => var.to_string(),
            k => format!("{var}^{k}"),
        };
        if mono.is_empty() {
            out.push_str(&fmt_q(&mag));
        } else if mag.is_one() {
            out.push_str(&mono);
        } else {
            out.push_str(&fmt_q(&mag));
            out.push_str(&mono);
        }
    }
    out
}

pub(crate) fn fmt_q(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub(crate) fn q_int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}
