use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::descriptor::{DualFlavor, Ring, RingKind};
use super::value::{Elem, RingValue};

/// Membership test for the positive cone of σ-fixed units.
///
/// Matrices over Laurent rings are only checked at the sample points in `grid`,
/// so a `true` there means "positive definite at every sample".
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PositivityCone {
    grid: Vec<BigRational>,
}

impl Default for PositivityCone {
    fn default() -> Self {
        let q = |n: i64, d: i64| BigRational::new(n.into(), d.into());
        PositivityCone { grid: vec![q(-2, 1), q(-1, 1), q(-1, 2), q(1, 2), q(1, 1), q(2, 1)] }
    }
}

impl PositivityCone {
    pub fn with_grid(grid: Vec<BigRational>) -> Self {
        PositivityCone { grid }
    }

    pub fn grid(&self) -> &[BigRational] {
        &self.grid
    }

    pub fn contains(&self, x: &RingValue) -> bool {
        self.pos(x.ring(), x.elem())
    }

    fn pos(&self, ring: &Ring, e: &Elem) -> bool {
        match (ring.kind(), e) {
            (RingKind::Int | RingKind::Rat, Elem::Num(x)) => x.is_positive(),
            (RingKind::ComplexConj, Elem::Complex(re, im)) => im.is_zero() && re.is_positive(),
            (RingKind::Dual { flavor, base }, Elem::Dual(a, da)) => match flavor {
                DualFlavor::Trivial => ring.sigma_elem(e) == *e && self.pos(base, a),
                DualFlavor::Conjugate => base.is_zero_elem(da) && self.pos(base, a),
            },
            (RingKind::Mat { n, base }, Elem::Mat(m)) => {
                if ring.sigma_elem(e) != *e {
                    return false;
                }
                if let RingKind::Laurent { base: inner, .. } = base.kind() {
                    let target = Ring::mat(*n, inner.clone());
                    return self.grid.iter().all(|t| {
                        let evald: Result<Vec<Elem>, _> = m.iter().map(|x| base.laurent_eval(x, t)).collect();
                        evald.is_ok_and(|v| self.pos(&target, &Elem::Mat(v)))
                    });
                }
                self.block_pivots_positive(base, *n, m)
            }
            (RingKind::Group { n, base }, Elem::Group(_)) => {
                self.pos(&Ring::mat(*n, base.clone()), &ring.hurley_elem(e))
            }
            (RingKind::Laurent { base, .. }, Elem::Laurent(_)) => {
                ring.sigma_elem(e) == *e
                    && self.grid.iter().all(|t| ring.laurent_eval(e, t).is_ok_and(|v| self.pos(base, &v)))
            }
            _ => false,
        }
    }

    /// Sylvester's criterion by symmetric elimination without pivoting: every pivot
    /// (a Schur complement) must itself be positive in the base.
    fn block_pivots_positive(&self, base: &Ring, n: usize, m: &[Elem]) -> bool {
        let mut a: Vec<Vec<Elem>> = (0..n).map(|i| m[i * n..(i + 1) * n].to_vec()).collect();
        for k in 0..n {
            if !self.pos(base, &a[k][k]) {
                return false;
            }
            let Ok(pinv) = base.inverse_elem(&a[k][k]) else {
                return false;
            };
            for i in k + 1..n {
                let f = base.mul_elem(&a[i][k], &pinv);
                for j in k + 1..n {
                    let d = base.mul_elem(&f, &a[k][j]);
                    a[i][j] = base.sub_elem(&a[i][j], &d);
                }
            }
        }
        true
    }
}

/// Cone membership with the default sampling grid.
pub fn is_positive(x: &RingValue, cone: &PositivityCone) -> bool {
    cone.contains(x)
}
