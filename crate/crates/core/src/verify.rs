//! Exhaustive checkers that run the library's identities on one lattice and
//! report pass, fail, or unmet hypotheses with witnesses.

use num_bigint::BigInt;
use serde::Serialize;
use serde_json::{json, Value};

use crate::charpoly::{
    char_poly, complement_support, lm_expansion, lm_factorization,
    partial_factorization_semimodular, stanley_partial, total_factorization_supersolvable,
};
use crate::error::Error;
use crate::lattice::FiniteLattice;
use crate::maps::{interval_rank, tau_join};
use crate::modularity::{
    is_left_modular, is_modular_element, is_semimodular, left_modular_elements,
    lm_characterizations,
};
use crate::moebius::MobiusTable;
use crate::nbb::{
    lemma_cover_witness, ll_factorization, ll_interval_structure, ll_report, mobius_via_nbb_all,
    property_a_check, property_b_check, property_c_check, AtomOrder, LevelStructure,
};
use crate::rank::GeneralizedRank;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    HypothesisFailed,
}

#[derive(Clone, Debug, Serialize)]
pub struct Outcome {
    pub check: String,
    pub status: Status,
    /// Element labels (or short descriptions) explaining a failure.
    pub witnesses: Vec<String>,
    pub payload: Value,
}

impl Outcome {
    fn new(check: &str, status: Status, witnesses: Vec<String>, payload: Value) -> Self {
        Self {
            check: check.into(),
            status,
            witnesses,
            payload,
        }
    }

    fn from_failures(check: &str, failures: Vec<String>, payload: Value) -> Self {
        let status = if failures.is_empty() {
            Status::Pass
        } else {
            Status::Fail
        };
        Self::new(check, status, failures, payload)
    }

    fn hypothesis(check: &str, why: impl Into<String>) -> Self {
        Self::new(
            check,
            Status::HypothesisFailed,
            vec![why.into()],
            Value::Null,
        )
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

fn labels(l: &FiniteLattice, xs: impl IntoIterator<Item = usize>) -> Vec<String> {
    xs.into_iter().map(|x| l.label(x).to_string()).collect()
}

fn mu_json(v: &[BigInt]) -> Value {
    Value::Array(v.iter().map(|m| json!(m.to_string())).collect())
}

/// Which rank a check runs under.
#[derive(Clone, Debug)]
pub enum RankChoice {
    Ordinary,
    /// Level rank of the given maximal chain.
    Levels(Vec<usize>),
    Given(GeneralizedRank),
}

impl RankChoice {
    pub fn resolve(&self, l: &FiniteLattice) -> Result<GeneralizedRank, Error> {
        match self {
            RankChoice::Ordinary => GeneralizedRank::ordinary(l),
            RankChoice::Levels(c) => Ok(LevelStructure::new(l, c)?.ll_rank_function(l)),
            RankChoice::Given(r) => Ok(r.clone()),
        }
    }
}

/// The four left-modularity tests agree on every element.
pub fn check_thm3(l: &FiniteLattice) -> Outcome {
    let reports: Vec<_> = (0..l.size()).map(|x| lm_characterizations(l, x)).collect();
    let bad = reports
        .iter()
        .filter(|r| !r.consistent())
        .map(|r| l.label(r.element).to_string())
        .collect();
    let lm = labels(
        l,
        reports
            .iter()
            .filter(|r| r.by_definition)
            .map(|r| r.element),
    );
    Outcome::from_failures(
        "thm3",
        bad,
        json!({ "elements": l.size(), "left_modular": lm }),
    )
}

/// The left-modular expansion equals `χ` for each left-modular element.
pub fn check_lmgr(mt: &MobiusTable, rank: &GeneralizedRank, elements: Option<&[usize]>) -> Outcome {
    let l = mt.lattice();
    let chi = char_poly(mt, rank);
    let xs: Vec<usize> = match elements {
        Some(e) => e.to_vec(),
        None => left_modular_elements(l),
    };
    let mut bad = Vec::new();
    for &x in &xs {
        match lm_expansion(mt, x, rank) {
            Ok(p) if p == chi => {}
            Ok(p) => bad.push(format!("{}: {p}", l.label(x))),
            Err(Error::NotLeftModular(_)) if elements.is_some() => {
                return Outcome::hypothesis("lmgr", format!("{} is not left-modular", l.label(x)));
            }
            Err(e) => bad.push(format!("{}: {e}", l.label(x))),
        }
    }
    Outcome::from_failures(
        "lmgr",
        bad,
        json!({ "checked": xs.len(), "chi": chi.to_json() }),
    )
}

/// Factorization at each left-modular element whose `τ_b` maps are
/// rank-preserving; the product must equal `χ`.
pub fn check_lmfac(
    mt: &MobiusTable,
    rank: &GeneralizedRank,
    elements: Option<&[usize]>,
) -> Outcome {
    let l = mt.lattice();
    let xs: Vec<usize> = match elements {
        Some(e) => e.to_vec(),
        None => left_modular_elements(l),
    };
    let (mut factored, mut skipped, mut bad) = (Vec::new(), Vec::new(), Vec::new());
    for &x in &xs {
        match lm_factorization(mt, x, rank) {
            Ok((lower, cofactor)) => factored.push(json!({
                "element": l.label(x),
                "lower": lower.to_json(),
                "cofactor": cofactor.to_json(),
            })),
            Err(Error::RankPreservationFails(b)) => {
                skipped.push(format!("{} (b = {})", l.label(x), l.label(b)))
            }
            Err(Error::NotLeftModular(_)) => {
                skipped.push(format!("{} not left-modular", l.label(x)))
            }
            Err(e) => bad.push(format!("{}: {e}", l.label(x))),
        }
    }
    let payload = json!({ "factored": factored, "hypothesis_failed": skipped });
    if bad.is_empty() && factored.is_empty() {
        return Outcome::new("lmfac", Status::HypothesisFailed, skipped, payload);
    }
    Outcome::from_failures("lmfac", bad, payload)
}

/// Transfer identities along each `τ_b : [0̂, x] → [b, b ∨ x]` with `x`
/// left-modular and `b ∈ H`, `b ∧ x = 0̂`: `μ` always, `χ` where the map is
/// rank-preserving on `H(0̂, x) ∪ {x}`.
#[derive(Clone, Debug, Default, Serialize)]
pub struct TransferTally {
    pub maps: usize,
    pub mobius_pass: usize,
    pub chi_qualifying: usize,
    pub chi_pass: usize,
    pub failures: Vec<String>,
}

pub fn transfer_tally(mt: &MobiusTable, rank: &GeneralizedRank, xs: &[usize]) -> TransferTally {
    let l = mt.lattice();
    let mut t = TransferTally::default();
    for &x in xs {
        if !is_left_modular(l, x) {
            continue;
        }
        let src_rank = interval_rank(l, rank, l.bottom(), x);
        for b in complement_support(mt, x) {
            let map = tau_join(l, x, b);
            t.maps += 1;
            let tag = || format!("x = {}, b = {}", l.label(x), l.label(b));
            match map.mobius_transfer_check() {
                Ok(true) => t.mobius_pass += 1,
                Ok(false) => t.failures.push(format!("mobius transfer at {}", tag())),
                Err(e) => t
                    .failures
                    .push(format!("mobius transfer hypotheses at {}: {e}", tag())),
            }
            let tgt_rank = interval_rank(l, rank, b, l.join(b, x));
            match map.chi_transfer_check(&src_rank, &tgt_rank) {
                Ok(true) => {
                    t.chi_qualifying += 1;
                    t.chi_pass += 1;
                }
                Ok(false) => {
                    t.chi_qualifying += 1;
                    t.failures.push(format!("chi transfer at {}", tag()));
                }
                Err(Error::HypothesisFailed(_)) => {}
                Err(e) => t.failures.push(format!("chi transfer at {}: {e}", tag())),
            }
        }
    }
    t
}

pub fn check_transfer(
    mt: &MobiusTable,
    rank: &GeneralizedRank,
    elements: Option<&[usize]>,
) -> Outcome {
    let xs: Vec<usize> = match elements {
        Some(e) => e.to_vec(),
        None => left_modular_elements(mt.lattice()),
    };
    let t = transfer_tally(mt, rank, &xs);
    let failures = t.failures.clone();
    Outcome::from_failures("transfer", failures, serde_json::to_value(&t).unwrap())
}

/// Partial factorization at modular elements: under semimodularity, and
/// summing over all complements when the lattice is geometric.
pub fn check_stanley1(mt: &MobiusTable, elements: Option<&[usize]>) -> Outcome {
    let l = mt.lattice();
    if !is_semimodular(l) {
        return Outcome::hypothesis("stanley1", "lattice is not semimodular");
    }
    let geometric = l.is_atomic();
    let xs: Vec<usize> = match elements {
        Some(e) => e.to_vec(),
        None => (0..l.size())
            .filter(|&x| is_modular_element(l, x))
            .collect(),
    };
    let (mut done, mut bad) = (Vec::new(), Vec::new());
    for &x in &xs {
        let semi = partial_factorization_semimodular(mt, x);
        let geo = geometric.then(|| stanley_partial(mt, x));
        match (semi, geo) {
            (Ok((lo, co)), None | Some(Ok(_))) => done.push(json!({
                "element": l.label(x),
                "lower": lo.to_json(),
                "cofactor": co.to_json(),
            })),
            (Err(Error::NotModular(_)), _) if elements.is_some() => {
                return Outcome::hypothesis("stanley1", format!("{} is not modular", l.label(x)));
            }
            (Err(e), _) | (_, Some(Err(e))) => bad.push(format!("{}: {e}", l.label(x))),
        }
    }
    Outcome::from_failures(
        "stanley1",
        bad,
        json!({ "geometric": geometric, "factored": done }),
    )
}

/// Total factorization along a chain of modular elements.
pub fn check_stanley2(mt: &MobiusTable, chain: &[usize]) -> Outcome {
    let l = mt.lattice();
    match total_factorization_supersolvable(mt, chain) {
        Ok((a, p)) => Outcome::new(
            "stanley2",
            Status::Pass,
            Vec::new(),
            json!({ "chain": labels(l, chain.iter().copied()), "a": a, "chi": p.to_json() }),
        ),
        Err(Error::ContractViolation(s)) => {
            Outcome::new("stanley2", Status::Fail, vec![s], Value::Null)
        }
        Err(Error::ChainNotModular(x)) => {
            Outcome::hypothesis("stanley2", format!("{} is not modular", l.label(x)))
        }
        Err(e) => Outcome::hypothesis("stanley2", e.to_string()),
    }
}

/// Signed NBB-base counts equal `μ(0̂, x)` under the level order of `chain`
/// and under the antichain order.
pub fn check_nbbmu(mt: &MobiusTable, chain: &[usize]) -> Outcome {
    let l = mt.lattice();
    let ls = match LevelStructure::new(l, chain) {
        Ok(ls) => ls,
        Err(e) => return Outcome::hypothesis("nbbmu", e.to_string()),
    };
    let mu = mt.bottom_vector();
    let mut bad = Vec::new();
    for (name, order) in [
        ("levels", ls.atom_order(l)),
        ("antichain", AtomOrder::antichain(l)),
    ] {
        let got = mobius_via_nbb_all(l, &order);
        bad.extend(
            (0..l.size())
                .filter(|&x| got[x] != mu[x])
                .map(|x| format!("{name}: {}", l.label(x))),
        );
    }
    Outcome::from_failures("nbbmu", bad, json!({ "mobius": mu_json(&mu) }))
}

/// LL detection along `chain`; on LL lattices the level factorization,
/// properties (A)–(C), and the upper-interval structure for each top-level
/// atom.
pub fn check_ll(mt: &MobiusTable, chain: &[usize]) -> Outcome {
    let l = mt.lattice();
    let ls = match LevelStructure::new(l, chain) {
        Ok(ls) => ls,
        Err(e) => return Outcome::hypothesis("ll", e.to_string()),
    };
    let report = ll_report(l, chain).expect("chain already validated");
    let level_labels: Vec<Vec<String>> = ls
        .levels
        .iter()
        .map(|lv| labels(l, lv.iter().copied()))
        .collect();
    let mut payload = json!({ "chain": labels(l, chain.iter().copied()), "levels": level_labels });
    let mut bad = Vec::new();
    if report.not_left_modular.is_none() && property_a_check(l, &ls) != Ok(true) {
        bad.push("property (A)".into());
    }
    if !report.is_ll() {
        let mut w = Vec::new();
        if let Some(x) = report.not_left_modular {
            w.push(format!("{} is not left-modular", l.label(x)));
        }
        if let Some(seq) = &report.level_violation {
            w.push(format!(
                "level condition: {}",
                labels(l, seq.iter().copied()).join(" ◁ ")
            ));
        }
        w.extend(bad);
        let status = if w.iter().any(|s| s.starts_with("property")) {
            Status::Fail
        } else {
            Status::HypothesisFailed
        };
        return Outcome::new("ll", status, w, payload);
    }
    match ll_factorization(mt, &ls) {
        Ok(p) => payload["factorization"] = json!(p.to_json()),
        Err(e) => bad.push(format!("factorization: {e}")),
    }
    if property_b_check(l, &ls) != Ok(true) {
        bad.push("property (B)".into());
    }
    if property_c_check(l, &ls) != Ok(true) {
        bad.push("property (C)".into());
    }
    if let Some(top) = ls.levels.last() {
        for &b in top {
            if let Err(e) = ll_interval_structure(l, &ls, b) {
                bad.push(format!("upper interval at {}: {e}", l.label(b)));
            }
        }
    }
    Outcome::from_failures("ll", bad, payload)
}

/// The cover lemma for left-modular elements and the complementation
/// expansion of `μ` for every `a <= y`.
pub fn check_lemmas(mt: &MobiusTable) -> Outcome {
    let l = mt.lattice();
    let mut bad = Vec::new();
    if let Some((w, v, u)) = lemma_cover_witness(l) {
        bad.push(format!(
            "cover lemma: w = {}, v = {}, u = {}",
            l.label(w),
            l.label(v),
            l.label(u)
        ));
    }
    let mut pairs = 0usize;
    for y in 0..l.size() {
        for a in l.down_set(y).iter() {
            pairs += 1;
            if mt.crapo_expansion_check(y, a) != Ok(true) {
                bad.push(format!(
                    "complementation at y = {}, a = {}",
                    l.label(y),
                    l.label(a)
                ));
            }
        }
    }
    Outcome::from_failures("lemmas", bad, json!({ "crapo_pairs": pairs }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{initial_block_chain, noncrossing_family, partition_family};

    #[test]
    fn partition_four_all_pass() {
        let f = partition_family(4).unwrap();
        let l = &f.lattice;
        let mt = MobiusTable::new(l);
        let r = GeneralizedRank::ordinary(l).unwrap();
        let chain = initial_block_chain(&f, 4);
        assert!(check_thm3(l).passed());
        assert!(check_lmgr(&mt, &r, None).passed());
        assert!(check_lmfac(&mt, &r, None).passed());
        assert!(check_transfer(&mt, &r, None).passed());
        assert!(check_stanley1(&mt, None).passed());
        let s2 = check_stanley2(&mt, &chain);
        assert!(s2.passed());
        assert_eq!(s2.payload["a"], json!([1, 2, 3]));
        assert!(check_nbbmu(&mt, &chain).passed());
        assert!(check_ll(&mt, &chain).passed());
        assert!(check_lemmas(&mt).passed());
    }

    #[test]
    fn noncrossing_four_not_ll() {
        let f = noncrossing_family(4).unwrap();
        let l = &f.lattice;
        let mt = MobiusTable::new(l);
        let o = check_ll(&mt, &initial_block_chain(&f, 4));
        assert_eq!(o.status, Status::HypothesisFailed);
        assert_eq!(
            o.witnesses,
            vec!["level condition: 12 ◁ 13 ◁ 24".to_string()]
        );
        assert_eq!(check_stanley1(&mt, None).status, Status::HypothesisFailed);
    }
}
