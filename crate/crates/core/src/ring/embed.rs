use super::descriptor::{DualFlavor, Ring, RingKind};
use super::value::{RingError, RingValue};

/// Coefficient matrix of a group-ring element: entry (i, j) is the coefficient of g_i⁻¹g_j.
pub fn hurley_embed(x: &RingValue) -> Result<RingValue, RingError> {
    match x.ring().kind() {
        RingKind::Group { n, base } => {
            let target = Ring::mat(*n, base.clone());
            Ok(RingValue::from_parts(&target, x.ring().hurley_elem(x.elem())))
        }
        _ => Err(RingError::Unsupported(format!("hurley embedding needs a group ring, got {}", x.ring()))),
    }
}

/// `ring[ε]/(ε²)` with σ(a + αε) = σ(a) + σ(α)ε.
pub fn dual_extend(ring: &Ring) -> Ring {
    Ring::dual(DualFlavor::Trivial, ring.clone())
}

/// Embeds `x` as the real part of a dual value over `dual_extend(x.ring())`.
pub fn dual_lift(x: &RingValue, eps_part: &RingValue) -> RingValue {
    let ring = dual_extend(x.ring());
    RingValue::dual(&ring, x.clone(), eps_part.clone()).expect("parts share the base ring")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn z2_embedding() {
        let x = RingValue::group_coeffs(&Ring::parse("group:Z2").unwrap(), &[1, 1]).unwrap();
        assert_eq!(hurley_embed(&x).unwrap().to_string(), "[[1, 1], [1, 1]]");
    }

    #[test]
    fn z3_generator_has_order_three() {
        let g = Ring::parse("group:Z3").unwrap();
        let z = RingValue::symbol(&g, "Z").unwrap();
        let m = hurley_embed(&z).unwrap();
        assert_eq!(m.pow(3).unwrap(), RingValue::one(m.ring()));
        assert_eq!(hurley_embed(&RingValue::one(&g)).unwrap(), RingValue::one(m.ring()));
    }

    #[test]
    fn dual_extension_product() {
        let z = Ring::int();
        let a = dual_lift(&RingValue::from_int(&z, 2), &RingValue::from_int(&z, 3));
        let b = dual_lift(&RingValue::from_int(&z, 5), &RingValue::from_int(&z, 7));
        assert_eq!(a * b, dual_lift(&RingValue::from_int(&z, 10), &RingValue::from_int(&z, 29)));
    }
}
