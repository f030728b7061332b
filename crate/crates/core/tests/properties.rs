use lattice_factor::charpoly::{char_poly, lm_expansion};
use lattice_factor::corpus::random_meet_sublattice;
use lattice_factor::families::{boolean_lattice, partition_lattice, tamari};
use lattice_factor::format::LatticeFile;
use lattice_factor::modularity::{is_graded, is_left_modular, lm_characterizations};
use lattice_factor::nbb::{mobius_via_nbb_all, AtomOrder, LevelStructure};
use lattice_factor::{FiniteLattice, GeneralizedRank, MobiusTable};
use num_bigint::BigInt;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn random_lattice() -> impl Strategy<Value = FiniteLattice> {
    (0usize..4, any::<u64>(), 0.1f64..0.7).prop_map(|(base, seed, density)| {
        let base = match base {
            0 => boolean_lattice(4).unwrap(),
            1 => partition_lattice(4).unwrap(),
            2 => tamari(4).unwrap(),
            _ => boolean_lattice(3)
                .unwrap()
                .product(&partition_lattice(3).unwrap()),
        };
        random_meet_sublattice(&base, &mut ChaCha8Rng::seed_from_u64(seed), density)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn lattice_laws(l in random_lattice()) {
        let n = l.size();
        for x in 0..n {
            for y in 0..n {
                let (m, j) = (l.meet(x, y), l.join(x, y));
                prop_assert_eq!(m, l.meet(y, x));
                prop_assert_eq!(l.join(x, m), x);
                prop_assert_eq!(l.meet(x, j), x);
                prop_assert!(l.leq(m, x) && l.leq(x, j));
                prop_assert_eq!(l.leq(x, y), m == x);
            }
        }
    }

    #[test]
    fn mobius_recursion(l in random_lattice()) {
        let mt = MobiusTable::new(&l);
        for x in 0..l.size() {
            for y in 0..l.size() {
                if !l.leq(x, y) {
                    continue;
                }
                let sum: BigInt = (0..l.size())
                    .filter(|&z| l.leq(x, z) && l.leq(z, y))
                    .map(|z| mt.mobius(x, z).unwrap())
                    .sum();
                prop_assert_eq!(sum, BigInt::from(u8::from(x == y)));
            }
        }
    }

    #[test]
    fn mobius_is_multiplicative(a in random_lattice(), b in random_lattice()) {
        let p = a.product(&b);
        let mu = |l: &FiniteLattice| MobiusTable::new(l).mu_top();
        prop_assert_eq!(mu(&p), mu(&a) * mu(&b));
    }

    #[test]
    fn dual_preserves_mobius(l in random_lattice()) {
        prop_assert_eq!(MobiusTable::new(&l).mu_top(), MobiusTable::new(&l.dual()).mu_top());
    }

    #[test]
    fn left_modularity_tests_agree(l in random_lattice()) {
        for x in 0..l.size() {
            let r = lm_characterizations(&l, x);
            prop_assert!(r.consistent());
            prop_assert_eq!(r.by_definition, is_left_modular(&l, x));
        }
    }

    #[test]
    fn expansion_matches_chi(l in random_lattice()) {
        prop_assume!(is_graded(&l));
        let rank = GeneralizedRank::ordinary(&l).unwrap();
        let mt = MobiusTable::new(&l);
        let chi = char_poly(&mt, &rank);
        for x in (0..l.size()).filter(|&x| is_left_modular(&l, x)) {
            prop_assert_eq!(lm_expansion(&mt, x, &rank).unwrap(), chi.clone());
        }
    }

    #[test]
    fn nbb_counts_give_mobius(l in random_lattice()) {
        let mt = MobiusTable::new(&l);
        let anti = mobius_via_nbb_all(&l, &AtomOrder::antichain(&l));
        prop_assert_eq!(anti, mt.bottom_vector());
        let chain = lattice_factor::corpus::first_maximal_chain(&l);
        let order = LevelStructure::new(&l, &chain).unwrap().atom_order(&l);
        prop_assert_eq!(mobius_via_nbb_all(&l, &order), mt.bottom_vector());
    }

    #[test]
    fn file_round_trip(l in random_lattice()) {
        let text = LatticeFile::from_lattice(&l, None).to_json();
        let back = LatticeFile::parse(&text).unwrap().lattice().unwrap();
        prop_assert_eq!(back.labels(), l.labels());
        prop_assert_eq!(back.covers(), l.covers());
    }
}
