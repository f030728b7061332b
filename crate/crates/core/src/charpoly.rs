//! Characteristic polynomials and their factorizations.
//!
//! `χ(L, t) = Σ_x μ(0̂, x) t^{ρ(1̂) − ρ(x)}` for a generalized rank `ρ`. The
//! left-modular expansion rewrites `χ` as a sum over the support elements
//! `b` with `b ∧ x = 0̂`; when every `τ_b : v ↦ v ∨ b` is rank-preserving the
//! sum collapses to a product.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::modularity::{is_left_modular, is_modular_element, is_semimodular};
use crate::moebius::MobiusTable;
use crate::poly::ExactPoly;
use crate::rank::GeneralizedRank;

/// `χ(L, t)` under `rank`.
pub fn char_poly(mt: &MobiusTable, rank: &GeneralizedRank) -> ExactPoly {
    let l = mt.lattice();
    interval_char_poly(mt, l.bottom(), l.top(), rank)
}

/// `χ([lo, hi], t) = Σ_{y ∈ [lo, hi]} μ(lo, y) t^{ρ(hi) − ρ(y)}`.
pub fn interval_char_poly(
    mt: &MobiusTable,
    lo: usize,
    hi: usize,
    rank: &GeneralizedRank,
) -> ExactPoly {
    let l = mt.lattice();
    let mut p = ExactPoly::zero();
    for y in l.interval_elements(lo, hi) {
        let mu = mt.get(lo, y).expect("lo <= y");
        if !mu.is_zero() {
            p.add_term(mu.clone(), rank.between(y, hi));
        }
    }
    p
}

/// One summand of the left-modular expansion.
#[derive(Clone, Debug)]
pub struct ExpansionTerm {
    pub b: usize,
    pub mu_b: BigInt,
    /// `b ∨ x`
    pub top: usize,
    /// `χ([b, b ∨ x], t)`
    pub interval_poly: ExactPoly,
    /// `μ(b) t^{ρ(1̂) − ρ(b ∨ x)} χ([b, b ∨ x], t)`
    pub term: ExactPoly,
}

/// Support elements `b` with `b ∧ x = 0̂`, ascending.
pub fn complement_support(mt: &MobiusTable, x: usize) -> Vec<usize> {
    let l = mt.lattice();
    mt.support()
        .into_iter()
        .filter(|&b| l.meet(b, x) == l.bottom())
        .collect()
}

pub fn lm_expansion_terms(
    mt: &MobiusTable,
    x: usize,
    rank: &GeneralizedRank,
) -> Result<Vec<ExpansionTerm>> {
    let l = mt.lattice();
    if !is_left_modular(l, x) {
        return Err(Error::NotLeftModular(x));
    }
    Ok(complement_support(mt, x)
        .into_iter()
        .map(|b| {
            let top = l.join(b, x);
            let mu_b = mt.mobius_bottom(b).clone();
            let interval_poly = interval_char_poly(mt, b, top, rank);
            let term = interval_poly
                .shift(&rank.between(top, l.top()))
                .scale(&mu_b);
            ExpansionTerm {
                b,
                mu_b,
                top,
                interval_poly,
                term,
            }
        })
        .collect())
}

/// `Σ_{b ∈ H(L), b ∧ x = 0̂} μ(b) t^{ρ(1̂) − ρ(b ∨ x)} χ([b, b ∨ x], t)` for a
/// left-modular `x`; equals [`char_poly`] for every rank.
pub fn lm_expansion(mt: &MobiusTable, x: usize, rank: &GeneralizedRank) -> Result<ExactPoly> {
    Ok(lm_expansion_terms(mt, x, rank)?
        .into_iter()
        .map(|t| t.term)
        .sum())
}

/// Checks that `τ_b` maps `H(0̂, x) ∪ {x}` rank-preservingly into `[b, b ∨ x]`.
/// Returns the first offending element.
pub fn tau_rank_failure(
    mt: &MobiusTable,
    x: usize,
    b: usize,
    rank: &GeneralizedRank,
) -> Option<usize> {
    let l = mt.lattice();
    let mut subset = mt.interval_support(l.bottom(), x);
    if !subset.contains(&x) {
        subset.push(x);
    }
    // 0̂ lies in the subset (μ(0̂, 0̂) = 1), so comparing each element against
    // 0̂ ↦ b covers every pair u <= v by subtraction.
    subset
        .into_iter()
        .find(|&v| rank.between(b, l.join(v, b)) != *rank.of(v))
}

/// `(χ([0̂, x], t), Σ_b μ(b) t^{ρ(1̂) − ρ(x) − ρ(b)})` for a left-modular `x`
/// whose `τ_b` maps are all rank-preserving. The product is checked against
/// `χ(L, t)`.
pub fn lm_factorization(
    mt: &MobiusTable,
    x: usize,
    rank: &GeneralizedRank,
) -> Result<(ExactPoly, ExactPoly)> {
    let l = mt.lattice();
    if !is_left_modular(l, x) {
        return Err(Error::NotLeftModular(x));
    }
    let bs = complement_support(mt, x);
    if let Some(&b) = bs
        .iter()
        .find(|&&b| tau_rank_failure(mt, x, b, rank).is_some())
    {
        return Err(Error::RankPreservationFails(b));
    }
    factor_pair(mt, x, &bs, rank)
}

fn factor_pair(
    mt: &MobiusTable,
    x: usize,
    bs: &[usize],
    rank: &GeneralizedRank,
) -> Result<(ExactPoly, ExactPoly)> {
    let l = mt.lattice();
    let lower = interval_char_poly(mt, l.bottom(), x, rank);
    let base = rank.between(x, l.top());
    let mut cofactor = ExactPoly::zero();
    for &b in bs {
        cofactor.add_term(mt.mobius_bottom(b).clone(), &base - rank.of(b));
    }
    let chi = char_poly(mt, rank);
    if &lower * &cofactor != chi {
        return Err(Error::ContractViolation(format!(
            "({lower}) * ({cofactor}) != {chi} at x = {x}"
        )));
    }
    Ok((lower, cofactor))
}

/// The product formula for a modular element of a semimodular lattice under
/// its ordinary rank. Rank preservation of each `τ_b` follows from the
/// hypotheses and is not re-checked.
pub fn partial_factorization_semimodular(
    mt: &MobiusTable,
    x: usize,
) -> Result<(ExactPoly, ExactPoly)> {
    let l = mt.lattice();
    if !is_semimodular(l) {
        return Err(Error::NotSemimodular);
    }
    if !is_modular_element(l, x) {
        return Err(Error::NotModular(x));
    }
    let rank = GeneralizedRank::ordinary(l)?;
    factor_pair(mt, x, &complement_support(mt, x), &rank)
}

/// Partial factorization for a modular element of a geometric lattice, summing
/// over every `b` with `b ∧ x = 0̂`.
pub fn stanley_partial(mt: &MobiusTable, x: usize) -> Result<(ExactPoly, ExactPoly)> {
    let l = mt.lattice();
    if !l.is_atomic() || !is_semimodular(l) {
        return Err(Error::NotGeometric);
    }
    if !is_modular_element(l, x) {
        return Err(Error::NotModular(x));
    }
    let rank = GeneralizedRank::ordinary(l)?;
    let bs: Vec<usize> = (0..l.size())
        .filter(|&b| l.meet(b, x) == l.bottom())
        .collect();
    factor_pair(mt, x, &bs, &rank)
}

/// Total factorization along a chain of modular elements in a semimodular
/// lattice: `a_i` counts atoms below `x_i` but not below `x_{i−1}`, and
/// `χ = ∏ (t − a_i)`.
pub fn total_factorization_supersolvable(
    mt: &MobiusTable,
    chain: &[usize],
) -> Result<(Vec<usize>, ExactPoly)> {
    let l = mt.lattice();
    if !is_semimodular(l) {
        return Err(Error::NotSemimodular);
    }
    if !l.is_maximal_chain(chain) {
        return Err(Error::NotMaximalChain);
    }
    if let Some(&x) = chain.iter().find(|&&x| !is_modular_element(l, x)) {
        return Err(Error::ChainNotModular(x));
    }
    let a: Vec<usize> = chain
        .windows(2)
        .map(|w| {
            l.atoms()
                .iter()
                .filter(|&&at| l.leq(at, w[1]) && !l.leq(at, w[0]))
                .count()
        })
        .collect();
    let poly = ExactPoly::from_roots(a.iter().map(|&v| v as i64));
    let chi = char_poly(mt, &GeneralizedRank::ordinary(l)?);
    if poly != chi {
        return Err(Error::ContractViolation(format!("{poly} != {chi}")));
    }
    Ok((a, poly))
}
