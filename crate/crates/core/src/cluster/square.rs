use super::seed::{ClusterError, ClusterSeed};
use crate::ring::RingValue;
use crate::sp2::{symplectic_report, Mat2};

/// Boundary of the square, frozen in every square seed.
const SQUARE_BOUNDARY: [(usize, usize); 4] = [(1, 2), (2, 3), (3, 4), (1, 4)];

/// Square seed of a symplectic matrix: A on the diagonal 1→3, C on 2→3, B on 1→4 and
/// 1 on 1→2 and 3→4.
pub fn seed_from_matrix(m: &Mat2) -> Result<ClusterSeed, ClusterError> {
    if !symplectic_report(m).is_full {
        return Err(ClusterError::NotSymplectic);
    }
    for (name, x) in [('A', &m.a), ('B', &m.b), ('C', &m.c), ('D', &m.d)] {
        if x.inverse().is_err() {
            return Err(ClusterError::EntryNotInvertible(name));
        }
    }
    let ring = m.ring();
    let one = RingValue::one(ring);
    ClusterSeed::new(
        ring,
        vec![1, 2, 3, 4],
        [
            ((1, 2), one.clone()),
            ((1, 3), m.a.clone()),
            ((2, 3), m.c.clone()),
            ((1, 4), m.b.clone()),
            ((3, 4), one),
        ],
        vec![[1, 2, 3], [1, 3, 4]],
        SQUARE_BOUNDARY,
    )
}

/// Reads `[[A, B], [C, D]]` off the square with corners `p` (in the order of the square
/// seed's vertices 1..4). D comes from the edge p₂–p₄ when present, otherwise from
/// D = CA⁻¹B + σ(A⁻¹).
pub fn extract_matrix(seed: &ClusterSeed, p: [usize; 4]) -> Result<Mat2, ClusterError> {
    let a = seed.value(p[0], p[2])?;
    let b = seed.value(p[0], p[3])?;
    let c = seed.value(p[1], p[2])?;
    let d = match seed.value(p[1], p[3]) {
        Ok(d) => d,
        Err(ClusterError::MissingEdge(..)) => {
            let a_inv = a.inverse()?;
            &c * &a_inv * &b + a_inv.sigma()
        }
        Err(e) => return Err(e),
    };
    Ok(Mat2::new(a, b, c, d)?)
}

/// Angle sum at the marked point obtained by gluing vertices 2 and 3; AC⁻¹ + C⁻¹D on a square seed.
pub fn phi_r(seed: &ClusterSeed) -> Result<RingValue, ClusterError> {
    Ok(seed.vertex_angle_sum(2)? + seed.vertex_angle_sum(3)?)
}

/// Angle sum at the marked point obtained by gluing vertices 1 and 4; DB⁻¹ + B⁻¹A on a square seed.
pub fn phi_l(seed: &ClusterSeed) -> Result<RingValue, ClusterError> {
    Ok(seed.vertex_angle_sum(1)? + seed.vertex_angle_sum(4)?)
}

/// Half turn of the square, relabelling 1↔3 and 2↔4. The result is the seed of
/// `[[σA, σC], [σB, σD]]`.
pub fn rotate_180(seed: &ClusterSeed) -> Result<ClusterSeed, ClusterError> {
    seed.relabel(|v| match v {
        1 => 3,
        2 => 4,
        3 => 1,
        4 => 2,
        other => other,
    })
}

/// Glues the square of `n` onto the square of `m` along the edge 3–4, performs the three
/// flips that turn the hexagon into a triangulation containing the square (1, 2, 6, 5),
/// and reads off the product.
pub fn amalgamate_multiply(m: &Mat2, n: &Mat2) -> Result<(ClusterSeed, Mat2), ClusterError> {
    let sm = seed_from_matrix(m)?;
    let sn = seed_from_matrix(n)?;
    // n's square sits on vertices 1,2,3,4 ↦ 4,3,6,5.
    let sn = sn.relabel(|v| [0, 4, 3, 6, 5][v])?;
    let mut edges: Vec<_> = sm.edges().iter().map(|(&k, x)| (k, x.clone())).collect();
    edges.extend(sn.edges().iter().filter(|(&k, _)| k != (3, 4)).map(|(&k, x)| (k, x.clone())));
    let mut triangles = sm.triangles().to_vec();
    triangles.extend_from_slice(sn.triangles());
    let frozen = [(1, 2), (2, 3), (1, 4), (4, 5), (3, 6), (5, 6)];
    let glued = ClusterSeed::new(m.ring(), vec![1, 2, 3, 4, 5, 6], edges, triangles, frozen)?;
    let s = glued.mutate_edge(3, 4)?.mutate_edge(1, 3)?.mutate_edge(4, 6)?;
    let product = extract_matrix(&s, [1, 2, 6, 5])?;
    Ok((s, product))
}
