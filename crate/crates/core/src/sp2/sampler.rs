use num_rational::BigRational;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::matrix::Mat2;
use crate::ring::{Elem, Ring, RingKind, RingValue};

/// One letter of a generator word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Generator {
    /// `[[1, b], [0, 1]]`, b σ-fixed.
    Upper(RingValue),
    /// `[[1, 0], [c, 1]]`, c σ-fixed.
    Lower(RingValue),
    /// `[[u, 0], [0, σ(u)⁻¹]]`, u a unit.
    Diagonal(RingValue),
}

impl Generator {
    pub fn matrix(&self) -> Mat2 {
        match self {
            Generator::Upper(b) => Mat2::upper(b.clone()),
            Generator::Lower(c) => Mat2::lower(c.clone()),
            Generator::Diagonal(u) => {
                Mat2::diagonal(u.clone(), u.sigma().inverse().expect("diagonal generator needs a unit"))
            }
        }
    }
}

pub fn symplectic_word(ring: &Ring, word: &[Generator]) -> Mat2 {
    word.iter().fold(Mat2::identity(ring), |acc, g| &acc * &g.matrix())
}

/// Deterministic random element of the symplectic group built from `word_length` generators.
pub fn random_symplectic(ring: &Ring, seed: u64, word_length: usize) -> Mat2 {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_symplectic_with(ring, &mut rng, word_length)
}

pub fn random_symplectic_with(ring: &Ring, rng: &mut impl Rng, word_length: usize) -> Mat2 {
    let word: Vec<Generator> = (0..word_length)
        .map(|_| match rng.gen_range(0..3) {
            0 => Generator::Upper(random_sigma_fixed(ring, rng)),
            1 => Generator::Lower(random_sigma_fixed(ring, rng)),
            _ => Generator::Diagonal(random_unit(ring, rng)),
        })
        .collect();
    symplectic_word(ring, &word)
}

/// Symplectic sample whose four entries are all invertible (in the ambient ring).
pub fn random_symplectic_invertible(ring: &Ring, rng: &mut impl Rng, word_length: usize) -> Mat2 {
    for _ in 0..1000 {
        let m = random_symplectic_with(ring, rng, word_length);
        if m.entries().iter().all(|x| x.inverse().is_ok()) {
            return m;
        }
    }
    panic!("no sample with invertible entries over {ring}");
}

/// Arbitrary matrix with small random entries.
pub fn random_mat2(ring: &Ring, rng: &mut impl Rng) -> Mat2 {
    Mat2 {
        a: random_element(ring, rng),
        b: random_element(ring, rng),
        c: random_element(ring, rng),
        d: random_element(ring, rng),
    }
}

/// Small random element; integral whenever the ring has an integral structure.
pub fn random_element(ring: &Ring, rng: &mut impl Rng) -> RingValue {
    RingValue::new(ring, random_elem(ring, rng)).unwrap()
}

fn small_q(ring: &Ring, rng: &mut impl Rng) -> BigRational {
    let n: i64 = rng.gen_range(-3..=3);
    if matches!(ring.kind(), RingKind::Rat) && rng.gen_bool(0.3) {
        BigRational::new(n.into(), rng.gen_range(1..=3i64).into())
    } else {
        BigRational::from_integer(n.into())
    }
}

fn random_elem(ring: &Ring, rng: &mut impl Rng) -> Elem {
    match ring.kind() {
        RingKind::Int | RingKind::Rat => Elem::Num(small_q(ring, rng)),
        RingKind::ComplexConj => Elem::Complex(small_q(ring, rng), small_q(ring, rng)),
        RingKind::Dual { base, .. } => {
            Elem::Dual(Box::new(random_elem(base, rng)), Box::new(random_elem(base, rng)))
        }
        RingKind::Mat { n, base } => Elem::Mat((0..n * n).map(|_| random_elem(base, rng)).collect()),
        RingKind::Group { n, base } => Elem::Group((0..*n).map(|_| random_elem(base, rng)).collect()),
        RingKind::Laurent { var, base, .. } => {
            let t = RingValue::symbol(ring, var).unwrap();
            let mut acc = RingValue::zero(ring);
            for k in -1..=1 {
                let c = RingValue::from_parts(ring, ring.embed_base(random_elem(base, rng)));
                acc = acc + c * t.pow(k).unwrap();
            }
            acc.into_elem()
        }
    }
}

/// σ-fixed draw: a small scalar, x + σ(x), or x·σ(x).
pub fn random_sigma_fixed(ring: &Ring, rng: &mut impl Rng) -> RingValue {
    match rng.gen_range(0..3) {
        0 => RingValue::from_rational(ring, small_q(ring, rng)),
        1 => {
            let x = random_element(ring, rng);
            &x + &x.sigma()
        }
        _ => {
            let x = random_element(ring, rng);
            &x * &x.sigma()
        }
    }
}

/// Random unit whose inverse stays integral where the ring has an integral structure.
pub fn random_unit(ring: &Ring, rng: &mut impl Rng) -> RingValue {
    let sign = if rng.gen_bool(0.5) { 1 } else { -1 };
    match ring.kind() {
        RingKind::Int => RingValue::from_int(ring, sign),
        RingKind::Rat => {
            RingValue::from_rational(ring, BigRational::new((sign * rng.gen_range(1..=3i64)).into(), rng.gen_range(1..=3i64).into()))
        }
        RingKind::ComplexConj => {
            let i = RingValue::symbol(ring, "i").unwrap();
            i.pow(rng.gen_range(0..4)).unwrap()
        }
        RingKind::Dual { base, .. } => {
            let u = random_unit(base, rng);
            let a = random_element(base, rng);
            RingValue::dual(ring, u, a).unwrap()
        }
        RingKind::Mat { n, base } => {
            let n = *n;
            let mut perm: Vec<usize> = (0..n).collect();
            perm.shuffle(rng);
            let mut p = vec![RingValue::zero(base); n * n];
            for (i, &j) in perm.iter().enumerate() {
                p[i * n + j] = random_unit(base, rng);
            }
            let p = RingValue::matrix(ring, p).unwrap();
            if n < 2 {
                return p;
            }
            let (i, j) = (rng.gen_range(0..n), rng.gen_range(0..n));
            let mut e: Vec<RingValue> =
                (0..n * n).map(|k| if k % (n + 1) == 0 { RingValue::one(base) } else { RingValue::zero(base) }).collect();
            if i != j {
                e[i * n + j] = random_element(base, rng);
            }
            p * RingValue::matrix(ring, e).unwrap()
        }
        RingKind::Group { n, base } => {
            let z = RingValue::symbol(ring, "Z").unwrap();
            let u = RingValue::from_parts(ring, ring.embed_base(random_unit(base, rng).into_elem()));
            u * z.pow(rng.gen_range(0..*n as i64)).unwrap()
        }
        RingKind::Laurent { var, base, .. } => {
            let t = RingValue::symbol(ring, var).unwrap();
            let u = RingValue::from_parts(ring, ring.embed_base(random_unit(base, rng).into_elem()));
            u * t.pow(rng.gen_range(-1..=1)).unwrap()
        }
    }
}
