use std::collections::BTreeSet;

use lattice_factor::charpoly::lm_factorization;
use lattice_factor::families::{
    boolean_lattice, chain, divisor_lattice, noncrossing_lattice, partition_family,
    partition_lattice, shuffle_poset,
};
use lattice_factor::iso::is_isomorphic;
use lattice_factor::modularity::{
    is_left_modular, is_modular_element, is_modular_pair, is_semimodular,
};
use lattice_factor::nbb::{is_bounded_below, ll_interval_structure, nbb_bases, LevelStructure};
use lattice_factor::{ExactPoly, FiniteLattice, GeneralizedRank, MobiusTable};
use num_bigint::BigInt;

fn labels(l: &FiniteLattice, xs: &[usize]) -> BTreeSet<String> {
    xs.iter().map(|&x| l.label(x).to_string()).collect()
}

fn set(items: &[&str]) -> BTreeSet<String> {
    items.iter().map(|s| s.to_string()).collect()
}

#[test]
fn complements_in_pi3() {
    let l = partition_lattice(3).unwrap();
    let c = l
        .complements_in(l.index_of("12").unwrap(), l.bottom(), l.top())
        .unwrap();
    assert_eq!(labels(&l, &c), set(&["13", "23"]));
}

#[test]
fn complements_in_nc4() {
    let l = noncrossing_lattice(4).unwrap();
    let c = l
        .complements_in(l.index_of("123").unwrap(), l.bottom(), l.top())
        .unwrap();
    assert!(set(&["14", "24", "34"]).is_subset(&labels(&l, &c)));
}

#[test]
fn divisor_twelve_support() {
    let l = divisor_lattice(12).unwrap();
    let mt = MobiusTable::new(&l);
    assert_eq!(labels(&l, &mt.support()), set(&["1", "2", "3", "6"]));
}

#[test]
fn complementation_expansion_small() {
    for l in [partition_lattice(3).unwrap(), boolean_lattice(3).unwrap()] {
        let mt = MobiusTable::new(&l);
        for y in 0..l.size() {
            for a in 0..l.size() {
                if l.leq(a, y) {
                    assert!(mt.crapo_expansion_check(y, a).unwrap());
                }
            }
        }
    }
}

#[test]
fn noncrossing_four() {
    let l = noncrossing_lattice(4).unwrap();
    let mt = MobiusTable::new(&l);
    assert_eq!(mt.mu_top(), BigInt::from(-5));
    let chi = lattice_factor::charpoly::char_poly(&mt, &GeneralizedRank::ordinary(&l).unwrap());
    assert_eq!(chi, ExactPoly::from_coeffs([-5, 10, -6, 1]));
    let (pi, sigma) = (l.index_of("123").unwrap(), l.index_of("24").unwrap());
    assert!(!is_modular_pair(&l, sigma, pi));
    assert!(is_left_modular(&l, pi));
    assert!(!is_modular_element(&l, pi));
    assert!(!is_semimodular(&l));
}

#[test]
fn shuffle_duality_and_intervals() {
    let w21 = shuffle_poset(2, 1).unwrap();
    assert!(is_isomorphic(&w21.dual(), &shuffle_poset(1, 2).unwrap()));
    let lo = w21.index_of("de").unwrap();
    let hi = w21.index_of("∅").unwrap();
    assert!(is_isomorphic(
        &w21.interval(lo, hi).unwrap(),
        &boolean_lattice(2).unwrap()
    ));
}

#[test]
fn shuffle_factorization_at_empty_word() {
    let l = shuffle_poset(2, 2).unwrap();
    let mt = MobiusTable::new(&l);
    let x = l.index_of("∅").unwrap();
    assert!(lm_factorization(&mt, x, &GeneralizedRank::ordinary(&l).unwrap()).is_ok());
}

#[test]
fn pi3_levels_and_nbb_bases() {
    let f = partition_family(3).unwrap();
    let l = &f.lattice;
    let c = lattice_factor::families::initial_block_chain(&f, 3);
    let ls = LevelStructure::new(l, &c).unwrap();
    let level: Vec<BTreeSet<String>> = ls.levels.iter().map(|a| labels(l, a)).collect();
    assert_eq!(level, [set(&["12"]), set(&["13", "23"])]);
    let order = ls.atom_order(l);
    let bases: BTreeSet<BTreeSet<String>> = nbb_bases(l, l.top(), &order)
        .iter()
        .map(|b| labels(l, &b.atoms))
        .collect();
    assert_eq!(
        bases,
        [set(&["12", "13"]), set(&["12", "23"])]
            .into_iter()
            .collect()
    );
    let d = [l.index_of("13").unwrap(), l.index_of("23").unwrap()];
    assert!(is_bounded_below(l, &d, &order).unwrap());
}

#[test]
fn pi4_upper_interval_is_pi3() {
    let f = partition_family(4).unwrap();
    let l = &f.lattice;
    let ls = LevelStructure::new(l, &lattice_factor::families::initial_block_chain(&f, 4)).unwrap();
    let b = l.index_of("14").unwrap();
    let up = ll_interval_structure(l, &ls, b).unwrap();
    assert!(is_isomorphic(&up.interval, &partition_lattice(3).unwrap()));
    assert_eq!(up.levels.level_sizes(), [1, 2]);
}

#[test]
fn chains_and_products() {
    let l = chain(4).unwrap().product(&chain(3).unwrap());
    assert_eq!(l.size(), 12);
    assert_eq!(MobiusTable::new(&l).mu_top(), BigInt::from(0));
    let b2 = chain(2).unwrap().product(&chain(2).unwrap());
    assert!(is_isomorphic(&b2, &boolean_lattice(2).unwrap()));
}

#[test]
fn tamari_separates_left_modular_from_modular() {
    use lattice_factor::families::tamari;
    use lattice_factor::modularity::{left_modular_elements, modular_elements};
    for n in 3..=6 {
        let l = tamari(n).unwrap();
        let m = modular_elements(&l);
        let only_left: Vec<usize> = left_modular_elements(&l).into_iter().filter(|x| !m.contains(x)).collect();
        assert!(!only_left.is_empty(), "Tamari_{n}");
    }
}
