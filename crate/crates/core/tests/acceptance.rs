//! Acceptance run: one PASS/FAIL line per criterion. Each criterion is the
//! library check plus an independent oracle computed here from the order
//! relation alone, with small machine integers.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use lattice_factor::charpoly::char_poly;
use lattice_factor::corpus::{build_corpus, CorpusConfig, CorpusItem};
use lattice_factor::criteria::{self, CriterionResult};
use lattice_factor::families::formulas::nc_charpoly_recurrence;
use lattice_factor::families::{
    boolean_lattice, noncrossing_lattice, partition_lattice, shuffle_poset,
};
use lattice_factor::modularity::{is_graded, is_left_modular};
use lattice_factor::nbb::{is_ll, mobius_via_nbb, LevelStructure};
use lattice_factor::{ExactPoly, FiniteLattice, GeneralizedRank, MobiusTable};

/// Exact arithmetic throughout; the only pinned tolerance is wall time.
const KREWERAS_TIME_LIMIT: Duration = Duration::from_secs(60);
const ORACLE_MAX_SIZE: usize = 250;

type Poly = Vec<i128>;

fn binomial(n: i128, k: i128) -> i128 {
    if k < 0 || k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn catalan(n: i128) -> i128 {
    binomial(2 * n, n) / (n + 1)
}

fn poly_mul(a: &Poly, b: &Poly) -> Poly {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn from_roots(roots: impl IntoIterator<Item = i128>) -> Poly {
    roots
        .into_iter()
        .fold(vec![1], |acc, r| poly_mul(&acc, &vec![-r, 1]))
}

fn as_exact(p: &Poly) -> ExactPoly {
    ExactPoly::from_coeffs(p.iter().copied())
}

/// `μ(0̂, x)` from `Σ_{0̂ ≤ z ≤ x} μ(0̂, z) = δ`, by brute force over `leq`.
fn brute_mu(l: &FiniteLattice) -> Vec<i128> {
    let n = l.size();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&x| (0..n).filter(|&z| l.leq(z, x)).count());
    let mut mu = vec![0i128; n];
    for &x in &order {
        mu[x] = if x == l.bottom() {
            1
        } else {
            -(0..n)
                .filter(|&z| z != x && l.leq(z, x))
                .map(|z| mu[z])
                .sum::<i128>()
        };
    }
    mu
}

/// Longest chain length from `0̂`.
fn brute_rank(l: &FiniteLattice) -> Vec<usize> {
    let n = l.size();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&x| (0..n).filter(|&z| l.leq(z, x)).count());
    let mut r = vec![0usize; n];
    for &x in &order {
        r[x] = (0..n)
            .filter(|&z| z != x && l.leq(z, x))
            .map(|z| r[z] + 1)
            .max()
            .unwrap_or(0);
    }
    r
}

fn brute_chi(l: &FiniteLattice) -> Poly {
    let (mu, r) = (brute_mu(l), brute_rank(l));
    let top = r[l.top()];
    let mut p = vec![0; top + 1];
    for x in 0..l.size() {
        p[top - r[x]] += mu[x];
    }
    p
}

/// `Σ_i (−1)^i C(m,i) C(n,i) (t−1)^{m+n−i}`.
fn greene(m: i128, n: i128) -> Poly {
    let mut out = vec![0; (m + n + 1) as usize];
    for i in 0..=m.min(n) {
        let c = if i % 2 == 0 { 1 } else { -1 } * binomial(m, i) * binomial(n, i);
        let term = from_roots(std::iter::repeat_n(1, (m + n - i) as usize));
        for (k, v) in term.iter().enumerate() {
            out[k] += c * v;
        }
    }
    out
}

fn left_modular_by_definition(l: &FiniteLattice, x: usize) -> bool {
    let n = l.size();
    (0..n).all(|y| {
        (0..n)
            .filter(|&z| l.lt(y, z))
            .all(|z| l.meet(l.join(y, x), z) == l.join(y, l.meet(x, z)))
    })
}

fn oracle(checks: impl IntoIterator<Item = (bool, String)>) -> Vec<String> {
    checks
        .into_iter()
        .filter(|(ok, _)| !ok)
        .map(|(_, why)| why)
        .collect()
}

fn small(items: &[CorpusItem]) -> impl Iterator<Item = &CorpusItem> {
    items
        .iter()
        .filter(|it| it.lattice.size() <= ORACLE_MAX_SIZE)
}

fn oracles(id: u8, items: &[CorpusItem]) -> Vec<String> {
    match id {
        1 => oracle((1..=8).map(|n| {
            let mu = brute_mu(&noncrossing_lattice(n).unwrap());
            let want = if n % 2 == 1 { 1 } else { -1 } * catalan(n as i128 - 1);
            (
                mu[mu.len() - 1] == want,
                format!("oracle μ(NC_{n}) = {} vs {want}", mu[mu.len() - 1]),
            )
        })),
        2 => oracle((1..=7).map(|n| {
            let chi = brute_chi(&noncrossing_lattice(n).unwrap());
            (
                as_exact(&chi) == nc_charpoly_recurrence(n),
                format!("oracle χ(NC_{n}) = {chi:?}"),
            )
        })),
        3 => oracle(
            (0..=6i128)
                .flat_map(|s| (0..=s).map(move |m| (m, s - m)))
                .map(|(m, n)| {
                    let l = shuffle_poset(m as usize, n as usize).unwrap();
                    let (chi, mu) = (brute_chi(&l), brute_mu(&l)[l.top()]);
                    let sign = if (m + n) % 2 == 0 { 1 } else { -1 };
                    let ok = chi == greene(m, n) && mu == sign * binomial(m + n, n);
                    (ok, format!("oracle W_{{{m},{n}}}: χ = {chi:?}, μ = {mu}"))
                }),
        ),
        4 => {
            let l = shuffle_poset(2, 1).unwrap();
            let r = brute_rank(&l);
            let profile: Vec<usize> = (0..4)
                .map(|k| r.iter().filter(|&&x| x == k).count())
                .collect();
            let covers = (0..l.size())
                .flat_map(|a| (0..l.size()).map(move |b| (a, b)))
                .filter(|&(a, b)| l.lt(a, b) && (0..l.size()).all(|z| !(l.lt(a, z) && l.lt(z, b))))
                .count();
            oracle([
                (profile == [1, 5, 5, 1], format!("rank profile {profile:?}")),
                (covers == 22, format!("{covers} covering pairs")),
                (
                    brute_chi(&l) == from_roots([1, 1, 3]),
                    "χ(W_{2,1})".to_string(),
                ),
            ])
        }
        5 => oracle(
            items
                .iter()
                .filter(|it| it.lattice.size() <= 40)
                .flat_map(|it| {
                    let l = &it.lattice;
                    (0..l.size()).map(move |x| {
                        (
                            is_left_modular(l, x) == left_modular_by_definition(l, x),
                            format!("{} at {}", it.name, l.label(x)),
                        )
                    })
                }),
        ),
        6 => oracle(small(items).filter(|it| is_graded(&it.lattice)).map(|it| {
            let l = &it.lattice;
            let chi = char_poly(&MobiusTable::new(l), &GeneralizedRank::ordinary(l).unwrap());
            (
                chi == as_exact(&brute_chi(l)),
                format!("oracle χ({})", it.name),
            )
        })),
        7 => oracle((0..=5).map(|n| {
            let chi = brute_chi(&boolean_lattice(n).unwrap());
            (
                chi == from_roots(std::iter::repeat_n(1, n)),
                format!("oracle χ(B_{n}) = {chi:?}"),
            )
        })),
        8 => oracle((1..=6).map(|n| {
            let chi = brute_chi(&partition_lattice(n).unwrap());
            (
                chi == from_roots(1..n as i128),
                format!("oracle χ(Pi_{n}) = {chi:?}"),
            )
        })),
        9 => oracle(small(items).map(|it| {
            let l = &it.lattice;
            let order = LevelStructure::new(l, &it.working_chain())
                .unwrap()
                .atom_order(l);
            let via_nbb = mobius_via_nbb(l, l.top(), &order);
            let mu = brute_mu(l)[l.top()];
            (
                via_nbb == mu.into(),
                format!("{}: NBB {via_nbb} vs oracle {mu}", it.name),
            )
        })),
        10 => oracle(
            small(items)
                .filter_map(|it| it.chain.as_ref().map(|c| (it, c)))
                .filter(|(it, c)| is_graded(&it.lattice) && is_ll(&it.lattice, c).unwrap())
                .map(|(it, c)| {
                    let l = &it.lattice;
                    let sizes = LevelStructure::new(l, c).unwrap().level_sizes();
                    let want = from_roots(sizes.iter().map(|&s| s as i128));
                    (
                        brute_chi(l) == want,
                        format!("oracle χ({}) vs level sizes {sizes:?}", it.name),
                    )
                }),
        ),
        11 => {
            let l = noncrossing_lattice(4).unwrap();
            let r = brute_rank(&l);
            let (p, s) = (l.index_of("13").unwrap(), l.index_of("24").unwrap());
            let ok = r[p] + r[s] < r[l.meet(p, s)] + r[l.join(p, s)];
            oracle([(ok, "NC_4 semimodularity failure at 13, 24".to_string())])
        }
        12 => oracle(small(items).map(|it| {
            let l = &it.lattice;
            let mt = MobiusTable::new(l);
            let ok = brute_mu(l)
                .iter()
                .zip(mt.bottom_vector())
                .all(|(a, b)| b == (*a).into());
            (ok, format!("{}: μ table vs oracle", it.name))
        })),
        _ => Vec::new(),
    }
}

fn main() -> ExitCode {
    let start = Instant::now();
    let items = build_corpus(&CorpusConfig::default());
    println!(
        "acceptance: corpus of {} lattices built in {:.2?}",
        items.len(),
        start.elapsed()
    );
    let mut failed = 0;
    for r in criteria::run_all(&items) {
        let CriterionResult {
            id,
            title,
            mut passed,
            detail,
            elapsed,
        } = r;
        let extra = oracles(id, &items);
        if id == 1 && elapsed >= KREWERAS_TIME_LIMIT {
            passed = false;
        }
        passed &= extra.is_empty();
        let tag = if passed { "PASS" } else { "FAIL" };
        println!("criterion {id:>2} {tag} {title}: {detail} [{elapsed:.2?}]");
        for why in extra.iter().take(5) {
            println!("    oracle mismatch: {why}");
        }
        failed += usize::from(!passed);
    }
    println!(
        "acceptance: {} of 12 criteria pass in {:.2?}",
        12 - failed,
        start.elapsed()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
