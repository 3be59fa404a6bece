use proptest::prelude::*;
use sp2sigma::literal::parse_triple;
use sp2sigma::markov::{dual_split_mutate, markov_function, mutate, mutate_rotated, torus_angles, MarkovTriple};
use sp2sigma::ring::{json, Ring, RingValue};
use sp2sigma::sp2::{random_element, random_symplectic, random_unit, symplectic_report};
use sp2sigma::suites::sample_rng;

const RINGS: &[&str] =
    &["int", "rat", "complex-conj", "dual:triv", "dual:conj", "mat:2:int", "group:Z5:int", "laurent:t:int", "mat:2:laurent:t:int"];

const ROOTS: &[(&str, &str)] = &[
    ("int", "[1, 1, 1]"),
    ("complex-conj", "[1, i, -i]"),
    ("dual:triv", "[1, 1 + eps, 1 - eps]"),
    ("group:Z5:int", "[Z, 1 - Z + Z^2, 1 + Z - Z^3]"),
    ("mat:2:laurent:t:int", "[Id, [[1, t], [0, 1]], [[1, -t], [0, 1]]]"),
];

fn ring(s: &str) -> Ring {
    Ring::parse(s).unwrap()
}

fn root(k: usize) -> MarkovTriple {
    let (r, t) = ROOTS[k];
    MarkovTriple::from_array(parse_triple(&ring(r), t).unwrap()).unwrap()
}

fn naive_angles(t: &MarkovTriple) -> [RingValue; 6] {
    let [a, b, c] = t.entries();
    let [sa, sb, sc] = [a, b, c].map(|x| x.inverse().unwrap().sigma());
    [&sa * b * &sc, &sb * c * &sa, &sc * a * &sb, &sc * b * &sa, &sa * c * &sb, &sb * a * &sc]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn markov_function_is_constant_along_mutation_words(k in 0..ROOTS.len(), word in prop::collection::vec(0usize..3, 0..5)) {
        let t0 = root(k);
        let f0 = markov_function(&t0).unwrap();
        let mut t = t0;
        for p in word {
            t = mutate(&t, p).unwrap();
            prop_assert_eq!(markov_function(&t).unwrap(), f0.clone());
        }
    }

    #[test]
    fn both_placements_carry_the_same_values(k in 0..ROOTS.len(), p in 0usize..3) {
        let t = root(k);
        let mut a: Vec<String> = mutate(&t, p).unwrap().entries().iter().map(|x| x.to_string()).collect();
        let mut b: Vec<String> = mutate_rotated(&t, p).unwrap().entries().iter().map(|x| x.to_string()).collect();
        a.sort();
        b.sort();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn angles_match_the_ambient_inverse_formula(r in 0..RINGS.len(), seed in any::<u64>()) {
        let ring = ring(RINGS[r]);
        let mut rng = sample_rng(seed, 0);
        let t = MarkovTriple::from_array([random_unit(&ring, &mut rng), random_unit(&ring, &mut rng), random_unit(&ring, &mut rng)]).unwrap();
        prop_assert_eq!(torus_angles(&t).unwrap(), naive_angles(&t));
        let sum = naive_angles(&t).iter().skip(1).fold(naive_angles(&t)[0].clone(), |acc, x| &acc + x);
        prop_assert_eq!(markov_function(&t).unwrap(), sum);
    }

    #[test]
    fn json_round_trips(r in 0..RINGS.len(), seed in any::<u64>()) {
        let ring = ring(RINGS[r]);
        let x = random_element(&ring, &mut sample_rng(seed, 1));
        prop_assert_eq!(json::decode(&ring, &json::encode(&x)).unwrap(), x);
    }

    #[test]
    fn sampled_words_are_symplectic(r in 0..RINGS.len(), seed in any::<u64>(), len in 1usize..7) {
        let m = random_symplectic(&ring(RINGS[r]), seed, len);
        prop_assert!(symplectic_report(&m).is_full);
    }

    #[test]
    fn trivial_dual_split_agrees_with_mutation(
        a in 1i64..6, b in 1i64..6, c in 1i64..6,
        al in -4i64..5, be in -4i64..5, ga in -4i64..5, p in 0usize..3,
    ) {
        let r = ring("dual:triv");
        let text = format!("[{a} + {al} eps, {b} + {be} eps, {c} + {ga} eps]");
        let t = MarkovTriple::from_array(parse_triple(&r, &text).unwrap()).unwrap();
        prop_assert!(dual_split_mutate(&t, p).unwrap().agree());
    }
}
