use num_bigint::{BigInt, BigUint};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use salient::perm::RankSet;
use salient::poset::{
    all_posets, are_isomorphic, beta, extension_count, flag_vector, graded_ordinal_sum,
    ideals_lattice, is_multiplicity_free, lattice_from_gamma, q_from_commuting_word, q_from_gamma,
    random_graded_poset, stretch, to_dot, GammaWord, GradedPoset, NaturalPoset,
};
use salient::Limits;

#[test]
fn ordinal_sums_multiply_extension_counts() {
    let l = Limits::default();
    let small: Vec<NaturalPoset> = (1..=3).flat_map(|n| all_posets(n, &l).unwrap()).collect();
    for a in &small {
        for b in &small {
            let s = a.ordinal_sum(b).unwrap();
            let product = extension_count(a, &l).unwrap() * extension_count(b, &l).unwrap();
            assert_eq!(extension_count(&s, &l).unwrap(), product);
        }
    }
    let long = NaturalPoset::chain(2)
        .ordinal_sum(&NaturalPoset::chain(3))
        .unwrap();
    assert_eq!(long, NaturalPoset::chain(5));
}

/// With a single element `t` at rank `i`, beta factors through the two
/// intervals below and above `t` and vanishes when `i` is in `S`.
#[test]
fn single_element_ranks_factor_beta() {
    let l = Limits::default();
    let pieces: Vec<NaturalPoset> = (1..=4).flat_map(|n| all_posets(n, &l).unwrap()).collect();
    for q1 in &pieces {
        for q2 in &pieces {
            let q = q1.ordinal_sum(q2).unwrap();
            let j = ideals_lattice(&q, &l).unwrap();
            let fv = flag_vector(&j).unwrap();
            let i = q1.len();
            let lower = flag_vector(&ideals_lattice(q1, &l).unwrap()).unwrap();
            let upper = flag_vector(&ideals_lattice(q2, &l).unwrap()).unwrap();
            for (s, _, b) in fv.rows() {
                let bits = s.bits();
                let want = if s.contains(i) {
                    BigInt::from(0)
                } else {
                    let lo = RankSet::from_bits(q1.len(), bits & ((1 << (i - 1)) - 1)).unwrap();
                    let hi = RankSet::from_bits(q2.len(), bits >> i).unwrap();
                    lower.beta(&lo).unwrap() * upper.beta(&hi).unwrap()
                };
                assert_eq!(
                    b,
                    &want,
                    "{:?} + {:?} at {s}",
                    q1.relations(),
                    q2.relations()
                );
            }
        }
    }
}

#[test]
fn stretching_preserves_multiplicity_freeness() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut seen = 0;
    while seen < 20 {
        let r = random_graded_poset(&mut rng, 5, 10).unwrap();
        if !r.at_most_two_per_rank() {
            continue;
        }
        assert!(is_multiplicity_free(&r).unwrap());
        for i in 1..r.rank() {
            assert!(is_multiplicity_free(&stretch(&r, i).unwrap()).unwrap());
        }
        seen += 1;
    }
}

#[test]
fn gamma_lattices_have_sparse_support() {
    for n in 1..=9 {
        for g in GammaWord::all(n) {
            let fv = flag_vector(&lattice_from_gamma(&g).unwrap()).unwrap();
            for (s, _, b) in fv.rows() {
                assert!(
                    *b == BigInt::from(0) || (*b == BigInt::from(1) && s.is_sparse()),
                    "{g} at {s}"
                );
            }
        }
    }
}

#[test]
fn named_examples() {
    let l = Limits::default();
    let q5 = q_from_commuting_word(5).unwrap();
    assert!(are_isomorphic(&q_from_gamma(&"0101".parse().unwrap()).unwrap(), &q5, &l).unwrap());
    assert!(is_multiplicity_free(&lattice_from_gamma(&"01001".parse().unwrap()).unwrap()).unwrap());
    assert_eq!(extension_count(&q5, &l).unwrap(), BigUint::from(8u32));
    let b2 = ideals_lattice(&NaturalPoset::antichain(2), &l).unwrap();
    assert!(!are_isomorphic(&b2, &GradedPoset::chain(3), &l).unwrap());
    for p in [b2.clone(), GradedPoset::chain(4)] {
        for i in 1..p.rank() {
            let s = RankSet::new(p.rank(), [i]).unwrap();
            let atoms = p.elements_of_rank(i).len() as i64;
            assert_eq!(beta(&p, &s).unwrap(), BigInt::from(atoms - 1));
        }
    }
    let sum = graded_ordinal_sum(&b2, &b2).unwrap();
    assert_eq!(sum.rank_sizes(), vec![1, 2, 1, 1, 2, 1]);
}

#[test]
fn poset_json_round_trips() {
    let l = lattice_from_gamma(&"01001".parse().unwrap()).unwrap();
    let text = serde_json::to_string(&l).unwrap();
    assert_eq!(serde_json::from_str::<GradedPoset>(&text).unwrap(), l);
    let dot = to_dot(&l);
    assert_eq!(dot.matches("->").count(), l.covers().len());
}
