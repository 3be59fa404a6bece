//! Acceptance run: one PASS/FAIL line per criterion.
//!
//! A criterion that fails only in the way recorded in the decisions ledger is still
//! printed as FAIL, but does not fail the run. Any other failure does.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use sp2sigma::cluster::TorusSeed;
use sp2sigma::literal::{parse_triple, parse_value};
use sp2sigma::markov::*;
use sp2sigma::ring::{PositivityCone, Ring, RingValue};
use sp2sigma::sp2::random_unit;
use sp2sigma::suites::{cluster_suite, identity_suite, quantum_suite};

struct Verdict {
    ok: bool,
    detail: String,
    /// The failure is the documented one (see the ledger), not a regression.
    known_gap: bool,
}

impl Verdict {
    fn check(ok: bool, detail: impl Into<String>) -> Self {
        Verdict { ok, detail: detail.into(), known_gap: false }
    }
}

fn ring(s: &str) -> Ring {
    Ring::parse(s).unwrap()
}

fn val(r: &Ring, s: &str) -> RingValue {
    parse_value(r, s).unwrap()
}

fn triple(r: &Ring, s: &str) -> MarkovTriple {
    MarkovTriple::from_array(parse_triple(r, s).unwrap()).unwrap()
}

fn int(x: &RingValue) -> BigInt {
    x.as_rational().expect("scalar").to_integer()
}

fn within(elapsed: Duration, limit: Duration) -> bool {
    elapsed < limit
}

// 1 ------------------------------------------------------------------------------------

/// Plain Vieta jumps on ordered integer triples, no immediate repeat.
fn classical_values(depth: usize) -> BTreeSet<i128> {
    let mut out = BTreeSet::from([1]);
    let mut frontier: Vec<([i128; 3], Option<usize>)> = vec![([1, 1, 1], None)];
    for _ in 0..depth {
        let mut next = Vec::new();
        for (t, last) in frontier {
            for p in (0..3).filter(|&p| Some(p) != last) {
                let mut u = t;
                u[p] = 3 * t[(p + 1) % 3] * t[(p + 2) % 3] - t[p];
                out.insert(u[p]);
                next.push((u, Some(p)));
            }
        }
        frontier = next;
    }
    out
}

fn criterion_1() -> Verdict {
    let z = Ring::int();
    let t0 = Instant::now();
    let tree = enumerate_tree(&MarkovTriple::unit(&z), 6, TreePolicy::default()).unwrap();
    let elapsed = t0.elapsed();
    let values: BTreeSet<BigInt> = tree.values().map(int).collect();
    let required = [1, 2, 5, 13, 29, 34, 169, 194, 433, 985];
    let has_required = required.iter().all(|&k| values.contains(&BigInt::from(k)));
    let oracle: BTreeSet<BigInt> = classical_values(6).into_iter().map(BigInt::from).collect();
    let six = RingValue::from_int(&z, 6);
    let f_ok = tree.nodes.iter().all(|n| n.markov_value.as_ref() == Some(&six));
    let eq_ok = tree.nodes.iter().filter_map(|n| n.triple.as_ref()).all(|t| {
        let [a, b, c] = [int(t.get(0)), int(t.get(1)), int(t.get(2))];
        &a * &a + &b * &b + &c * &c == BigInt::from(3) * &a * &b * &c
    });
    Verdict::check(
        has_required && values == oracle && f_ok && eq_ok && within(elapsed, Duration::from_secs(1)),
        format!(
            "{} nodes, {} values (oracle {}), required set {}, F=6 {}, a²+b²+c²=3abc {}, {elapsed:.2?}",
            tree.nodes.len(),
            values.len(),
            oracle.len(),
            has_required,
            f_ok,
            eq_ok
        ),
    )
}

// 2 ------------------------------------------------------------------------------------

const D1: &str = "[[t^2 + 2, -t], [-t^3 - 3t, t^2 + 2]]";
const D2: &str = "[[t^4 + 5t^2 + 5, -t^5 - 6t^3 - 8t], [-t^3 - 3t, t^4 + 5t^2 + 5]]";
const D3: &str = "[[t^6 + 8t^4 + 19t^2 + 13, -t^5 - 6t^3 - 8t], [-t^7 - 9t^5 - 25t^3 - 21t, t^6 + 8t^4 + 19t^2 + 13]]";
const ALT: [&str; 3] = [
    "[[2, 2t], [-2t, 2]]",
    "[[5, -4t], [4t^3 + 11t, 5]]",
    "[[-16t^4 - 32t^2 + 29, -16t^3 - 52t], [36t^3 + 93t, -16t^4 - 32t^2 + 29]]",
];

fn bt_triple(r: &Ring) -> MarkovTriple {
    let bt = val(r, "[[1, t], [0, 1]]");
    MarkovTriple::new(RingValue::one(r), bt.clone(), bt.inverse().unwrap()).unwrap()
}

fn criterion_2() -> Verdict {
    let r = ring("mat:2:laurent:t:int");
    let t0 = Instant::now();
    let root = bt_triple(&r);
    let branch = fibonacci_branch(&root, 0, 5).unwrap();
    let shown = branch.oriented_terms();
    let display = [root.get(1).clone(), val(&r, D1), val(&r, D2), val(&r, D3)];
    let got = [&shown[0], &shown[2], &shown[3], &shown[4]];
    let branch_hits = display.iter().zip(got).filter(|(a, b)| a == b).count();

    let mut t = root.clone();
    let mut alt_hits = 0;
    let mut alt_admissible = true;
    for (p, want) in [0usize, 1, 0].into_iter().zip(ALT) {
        t = mutate(&t, p).unwrap();
        alt_hits += usize::from(t.get(p) == &val(&r, want));
        alt_admissible &= node_admissible(&t, &PositivityCone::default()).admissible;
    }
    let elapsed = t0.elapsed();
    Verdict::check(
        branch_hits == 4
            && alt_hits == 3
            && branch.agree()
            && branch.phi_invariant
            && alt_admissible
            && within(elapsed, Duration::from_secs(1)),
        format!(
            "frozen-identity branch {branch_hits}/4, alternate path {alt_hits}/3, recurrence = mutation {}, Φ invariant {}, \
             alternate-path angles positive {alt_admissible}, {elapsed:.2?}",
            branch.agree(),
            branch.phi_invariant
        ),
    )
}

// 3 ------------------------------------------------------------------------------------

const SHADOWS: [(i64, i64, i64); 6] = [(0, 0, 0), (1, -1, 0), (2, 3, -5), (1, 2, 3), (2, -5, 7), (-3, 1, 1)];

fn dual_unit(r: &Ring, (a, b, c): (i64, i64, i64)) -> MarkovTriple {
    triple(r, &format!("[1 + ({a})ε, 1 + ({b})ε, 1 + ({c})ε]"))
}

fn criterion_3() -> Verdict {
    let m = ring("mat:2:laurent:t:int");
    let mat_ok = markov_function(&bt_triple(&m)).unwrap() == val(&m, "[[6 + 2t^2, 0], [0, 6 + 2t^2]]");
    let d = val(&m, "[[t, 0], [0, t^-1]]");
    let diag = MarkovTriple::new(RingValue::one(&m), d.clone(), d.inverse().unwrap()).unwrap();
    let diag_ok = markov_function(&diag).unwrap() == val(&m, "[[2t^-2 + 2 + 2t^2, 0], [0, 2t^-2 + 2 + 2t^2]]");
    let g = ring("group:Z5:int");
    let z5_ok =
        markov_function(&triple(&g, "[Z, 1 - Z + Z^2, 1 + Z - Z^3]")).unwrap() == val(&g, "14 - 2(Z + Z^2 + Z^3 + Z^4)");

    let formula = |r: &Ring, s: (i64, i64, i64)| val(r, &format!("6 - 2({})ε", s.0 + s.1 + s.2));
    let conj = ring("dual:conj");
    let triv = ring("dual:triv");
    let conj_f: Vec<RingValue> = SHADOWS.iter().map(|&s| markov_function(&dual_unit(&conj, s)).unwrap()).collect();
    let conj_hits: Vec<bool> = SHADOWS.iter().zip(&conj_f).map(|(&s, f)| f == &formula(&conj, s)).collect();
    let conj_ok = conj_hits.iter().all(|&h| h);
    let triv_ok = SHADOWS.iter().all(|&s| markov_function(&dual_unit(&triv, s)).unwrap() == formula(&triv, s));

    let ok = mat_ok && diag_ok && z5_ok && conj_ok;
    // Over dual:conj every angle is (b/ac)(1 + (α+β+γ)ε), so F = 6 + 6(α+β+γ)ε. The displayed
    // 6 − 2(α+β+γ)ε is the trivial-involution value; both agree exactly when α+β+γ = 0.
    let conj_matches_its_own_value = SHADOWS
        .iter()
        .zip(&conj_f)
        .all(|(&s, f)| f == &val(&conj, &format!("6 + 6({})ε", s.0 + s.1 + s.2)));
    let hits_exactly_on_zero_sum = SHADOWS.iter().zip(&conj_hits).all(|(&s, &h)| h == (s.0 + s.1 + s.2 == 0));
    let known_gap = !ok && mat_ok && diag_ok && z5_ok && triv_ok && conj_matches_its_own_value && hits_exactly_on_zero_sum;
    Verdict {
        ok,
        detail: format!(
            "(6+2t²)Id {mat_ok}, (2t⁻²+2+2t²)Id {diag_ok}, Z5 {z5_ok}, dual:conj 6−2(α+β+γ)ε on {}/{} shadow vectors \
             (only α+β+γ = 0; dual:conj gives 6+6(α+β+γ)ε, dual:triv gives 6−2(α+β+γ)ε on all: {triv_ok})",
            conj_hits.iter().filter(|&&h| h).count(),
            SHADOWS.len()
        ),
        known_gap,
    }
}

// 4 ------------------------------------------------------------------------------------

fn group_value(r: &Ring, coeffs: &[i64]) -> RingValue {
    let z = RingValue::symbol(r, "Z").unwrap();
    coeffs
        .iter()
        .enumerate()
        .fold(RingValue::zero(r), |acc, (k, &c)| acc + RingValue::from_int(r, c) * z.pow(k as i64).unwrap())
}

fn criterion_4() -> Verdict {
    let g = ring("group:Z5:int");
    let t0 = Instant::now();
    let root = triple(&g, "[Z, 1 - Z + Z^2, 1 + Z - Z^3]");
    let angles = torus_angles(&root).unwrap();
    let got: BTreeSet<String> = angles.iter().map(|a| a.to_string()).collect();
    let want: BTreeSet<String> = ["1", "3 - 2(Z + Z^4) + (Z^2 + Z^3)", "3 + (Z + Z^4) - 2(Z^2 + Z^3)"]
        .iter()
        .map(|s| val(&g, s).to_string())
        .collect();
    let cone = PositivityCone::default();
    let positive = angles.iter().all(|a| cone.contains(a));

    let rows: Vec<(i64, RingValue)> = Z5_DEFORMATIONS.iter().map(|(n, c)| (*n, group_value(&g, c))).collect();
    let augment_ok = rows.iter().all(|(n, v)| augmentation(v) == Some(BigRational::from_integer((*n).into())));
    let row_values: Vec<RingValue> = rows.iter().map(|(_, v)| v.clone()).collect();
    let mut depth_used = 0;
    let mut found = (0, 0);
    for depth in 1..=8 {
        let hits = deformation_scan(&root, depth, &[2, 5]).unwrap();
        let matched = match_rows(&hits, &row_values);
        depth_used = depth;
        found = (
            matched.iter().filter(|m| matches!(m, Some((_, false)))).count(),
            matched.iter().filter(|m| matches!(m, Some((_, true)))).count(),
        );
        if matched.iter().all(Option::is_some) {
            break;
        }
    }
    let elapsed = t0.elapsed();
    let all_rows = found.0 + found.1 == rows.len();
    Verdict::check(
        got == want && positive && augment_ok && all_rows && within(elapsed, Duration::from_secs(30)),
        format!(
            "angles {}, Hurley-positive {positive}, rows {}/{} ({} as written, {} as σ of the edge) by depth {depth_used}, \
             Z=1 values {augment_ok}, {elapsed:.2?}",
            got == want,
            found.0 + found.1,
            rows.len(),
            found.0,
            found.1
        ),
    )
}

// 5 ------------------------------------------------------------------------------------

fn shadows_at(root: &MarkovTriple, depth: usize, real: i64) -> BTreeSet<BigRational> {
    let tree = enumerate_tree(root, depth, TreePolicy::default()).unwrap();
    let real = BigRational::from_integer(real.into());
    tree.values()
        .filter_map(|x| x.dual_parts())
        .filter(|(a, _)| a.as_rational() == Some(real.clone()))
        .map(|(_, da)| da.as_rational().unwrap())
        .collect()
}

fn criterion_5() -> Verdict {
    let r = ring("dual:triv");
    let want: BTreeSet<BigRational> = [-411, -172, 921].iter().map(|&k| BigRational::from_integer(k.into())).collect();
    let t0 = Instant::now();
    let stated = shadows_at(&triple(&r, "[1, 1 + ε, 1 - ε]"), 8, 169);
    let elapsed = t0.elapsed();
    // The displayed shadows belong to the tree of (1, 1+ε, 1+ε).
    let other = shadows_at(&triple(&r, "[1, 1 + ε, 1 + ε]"), 8, 169);
    let fmt = |s: &BTreeSet<BigRational>| s.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ");
    let ok = stated == want && within(elapsed, Duration::from_secs(10));
    Verdict {
        ok,
        detail: format!(
            "(1, 1+ε, 1−ε): shadows at 169 {{{}}}; (1, 1+ε, 1+ε): {{{}}}; {elapsed:.2?}",
            fmt(&stated),
            fmt(&other)
        ),
        known_gap: !ok && other == want,
    }
}

// 6 ------------------------------------------------------------------------------------

fn sorted_entries(t: &MarkovTriple) -> Vec<String> {
    let mut v: Vec<String> = t.entries().iter().map(|x| x.to_string()).collect();
    v.sort();
    v
}

fn criterion_6() -> Verdict {
    let c = ring("complex-conj");
    let z4 = ring("group:Z4:int");
    let root_polar = [Polar::from_ints(1, 0, 1), Polar::from_ints(1, 1, 4), Polar::from_ints(1, 3, 4)];
    let root = triple(&c, "[1, i, -i]");
    let as_complex = |p: &[Polar; 3]| -> MarkovTriple {
        let [a, b, d] = p.clone().map(|x| polar_to_complex(&c, &x).unwrap());
        MarkovTriple::new(a, b, d).unwrap()
    };
    let mut nodes = 0;
    let mut agree = as_complex(&root_polar) == root;
    let mut frontier = vec![(root_polar.clone(), root.clone(), None::<usize>)];
    let mut neighbors = BTreeSet::new();
    for level in 0..5 {
        let mut next = Vec::new();
        for (polar, exact, last) in &frontier {
            for p in (0..3).filter(|&p| Some(p) != *last) {
                let by_rule = complex_polar_mutate(polar, p).unwrap();
                let by_group = group_oracle_mutate(&z4, polar, p).unwrap();
                let by_complex = mutate(exact, p).unwrap();
                agree &= by_rule == by_group && as_complex(&by_rule) == by_complex;
                if level == 0 {
                    neighbors.insert(sorted_entries(&by_complex));
                }
                nodes += 1;
                next.push((by_rule, by_complex, Some(p)));
            }
        }
        frontier = next;
    }
    let expected: BTreeSet<Vec<String>> =
        [triple(&c, "[-2, -i, -i]"), triple(&c, "[-2i, 1, i]")].iter().map(sorted_entries).collect();
    Verdict::check(
        neighbors == expected && agree,
        format!("depth-1 neighbors {:?}, rule = group:Z4 = complex on {nodes} nodes: {agree}", neighbors),
    )
}

// 7 ------------------------------------------------------------------------------------

const IDENTITY_RINGS: [&str; 7] = ["int", "rat", "complex-conj", "dual:conj", "mat:2:int", "mat:3:int", "group:Z5:int"];

fn criterion_7() -> Verdict {
    let t0 = Instant::now();
    let reports: Vec<_> = IDENTITY_RINGS.iter().map(|s| identity_suite(&ring(s), 100, 7)).collect();
    let elapsed = t0.elapsed();
    let failing: Vec<(String, &str, usize)> = reports
        .iter()
        .flat_map(|r| r.checks.iter().filter(|c| !c.passed()).map(move |c| (r.ring.clone(), c.name, c.failures)))
        .collect();
    let ok = failing.is_empty() && within(elapsed, Duration::from_secs(30));
    // Only the power-trace (Chebyshev) identity over the matrix rings is expected to fail.
    let known_gap = !ok
        && within(elapsed, Duration::from_secs(30))
        && failing.iter().all(|(r, name, _)| *name == "chebyshev" && r.starts_with("mat:"))
        && failing.len() == 2;
    let checks = reports[0].checks.len();
    Verdict {
        ok,
        detail: format!(
            "{} rings × {checks} checks × 100 samples, failing {:?}, {elapsed:.2?}",
            IDENTITY_RINGS.len(),
            failing
        ),
        known_gap,
    }
}

// 8 ------------------------------------------------------------------------------------

fn criterion_8() -> Verdict {
    let bases = ["int", "rat", "complex-conj", "dual:conj", "mat:2:int", "group:Z5:int"];
    let reports: Vec<_> = bases.iter().map(|s| quantum_suite(&ring(s), 100, 8)).collect();
    let failing: Vec<(&str, &str)> = reports
        .iter()
        .zip(bases)
        .flat_map(|(r, b)| r.checks.iter().filter(|c| !c.passed()).map(move |c| (b, c.name)))
        .collect();
    Verdict::check(failing.is_empty(), format!("{} bases × 100 lifts, failing {failing:?}", bases.len()))
}

// 9 ------------------------------------------------------------------------------------

fn criterion_9() -> Verdict {
    let rings = ["int", "rat", "complex-conj", "dual:conj", "mat:2:rat", "group:Z5:int"];
    let reports: Vec<_> = rings.iter().map(|s| cluster_suite(&ring(s), 100, 9)).collect();
    let failing: Vec<(&str, &str, usize)> = reports
        .iter()
        .zip(rings)
        .flat_map(|(r, s)| r.checks.iter().filter(|c| !c.passed()).map(move |c| (s, c.name, c.failures)))
        .collect();
    let pairs: usize = reports.iter().filter_map(|r| r.check("amalgamation")).map(|c| c.samples).sum();
    Verdict::check(
        failing.is_empty(),
        format!("{} rings, {pairs} amalgamated pairs, failing {failing:?}", rings.len()),
    )
}

// 10 -----------------------------------------------------------------------------------

fn fixed_roots() -> Vec<MarkovTriple> {
    let mut out = vec![
        MarkovTriple::unit(&Ring::int()),
        triple(&ring("complex-conj"), "[1, i, -i]"),
        triple(&ring("dual:triv"), "[1, 1 + ε, 1 + ε]"),
        triple(&ring("dual:conj"), "[1, 1 + ε, 1 - ε]"),
        triple(&ring("group:Z5:int"), "[Z, 1 - Z + Z^2, 1 + Z - Z^3]"),
        triple(&ring("group:Z4:int"), "[1, Z, Z^3]"),
        bt_triple(&ring("mat:2:laurent:t:int")),
    ];
    let m = ring("mat:2:int");
    let b = val(&m, "[[2, 1], [1, 1]]");
    out.push(MarkovTriple::new(RingValue::one(&m), b.clone(), b.inverse().unwrap()).unwrap());
    out
}

/// (1, B, B⁻¹) for a random unit B, moved by a random gauge change at the marked point.
fn random_root(r: &Ring, rng: &mut ChaCha8Rng) -> MarkovTriple {
    let b = random_unit(r, rng);
    let t = MarkovTriple::new(RingValue::one(r), b.clone(), b.inverse().unwrap()).unwrap();
    let g = random_unit(r, rng);
    TorusSeed::new(t).rescale_vertex(&g).unwrap().triple().clone()
}

fn criterion_10() -> Verdict {
    let mut roots = fixed_roots();
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    for spec in ["int", "complex-conj", "dual:triv", "dual:conj", "mat:2:int", "mat:3:int", "group:Z5:int", "group:Z4:int"] {
        let r = ring(spec);
        for _ in 0..6 {
            roots.push(random_root(&r, &mut rng));
        }
    }
    let mut nodes = 0;
    let mut bad: Vec<String> = Vec::new();
    for root in &roots {
        if !is_admissible(root).admissible {
            bad.push(format!("root {root:?} inadmissible"));
            continue;
        }
        match enumerate_tree(root, 5, TreePolicy::default()) {
            Ok(tree) => {
                nodes += tree.nodes.len();
                for n in tree.nodes.iter().filter(|n| !n.admissible()) {
                    bad.push(format!("{root:?} word {}: {:?}", n.word_string(), n.failure));
                }
            }
            Err(e) => bad.push(format!("{root:?}: {e}")),
        }
    }
    let c = ring("complex-conj");
    let negative = triple(&c, "[1, 1, i]");
    let rejected = !is_admissible(&negative).admissible
        && matches!(enumerate_tree(&negative, 1, TreePolicy::default()), Err(MarkovError::InadmissibleRoot(_)));
    let would_hit_zero = matches!(mutate(&negative, 0), Err(MarkovError::MutationNotInvertible(0)));
    Verdict::check(
        bad.is_empty() && rejected && would_hit_zero,
        format!(
            "{} roots, {nodes} nodes to depth 5, {} failures{}; (1,1,i) rejected {rejected} (its first flip hits 0: {would_hit_zero})",
            roots.len(),
            bad.len(),
            bad.first().map(|b| format!(" (first: {b})")).unwrap_or_default()
        ),
    )
}

fn main() {
    let criteria: [(&str, fn() -> Verdict); 10] = [
        ("classical Markov recovery", criterion_1),
        ("matrix Markov tables", criterion_2),
        ("Markov-function goldens", criterion_3),
        ("group-ring angles and deformations", criterion_4),
        ("dual shadows", criterion_5),
        ("complex split", criterion_6),
        ("identity suites", criterion_7),
        ("quantum suite", criterion_8),
        ("cluster suite", criterion_9),
        ("positivity propagation", criterion_10),
    ];
    let mut unexpected = Vec::new();
    let mut passed = 0;
    for (k, (title, run)) in criteria.iter().enumerate() {
        let t0 = Instant::now();
        let v = run();
        let tag = if v.ok { "PASS" } else { "FAIL" };
        let note = if !v.ok && v.known_gap { " [documented gap]" } else { "" };
        println!("{tag} {:>2} {title} ({:.2?}){note}: {}", k + 1, t0.elapsed(), v.detail);
        if v.ok {
            passed += 1;
        } else if !v.known_gap {
            unexpected.push(k + 1);
        }
    }
    println!("acceptance: {passed}/{} PASS, unexpected failures {unexpected:?}", criteria.len());
    if !unexpected.is_empty() {
        std::process::exit(1);
    }
}
