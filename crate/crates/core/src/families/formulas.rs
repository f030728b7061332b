//! Closed forms and recurrences for the characteristic polynomials of the
//! noncrossing partition lattices and the shuffle posets.

use num_bigint::BigInt;

use crate::poly::ExactPoly;
pub use crate::poly::{binom, catalan, catalan_by_recurrence};

/// `χ(NC_1) = 1`, `χ(NC_n) = t χ(NC_{n−1}) − Σ_{i=1}^{n−1} χ(NC_i) χ(NC_{n−i})`.
pub fn nc_charpoly_recurrence(n: usize) -> ExactPoly {
    assert!(n >= 1, "NC_n needs n >= 1");
    let mut chi: Vec<ExactPoly> = vec![ExactPoly::zero(), ExactPoly::one()];
    for k in 2..=n {
        let mut p = &ExactPoly::t() * &chi[k - 1];
        for i in 1..k {
            p = p - &chi[i] * &chi[k - i];
        }
        chi.push(p);
    }
    chi.swap_remove(n)
}

/// `(t − 1)^m Σ_{i=0}^{n} (−1)^i C(n, i) C(m + i, i) t^{n − i}`.
pub fn shuffle_charpoly_formula(m: usize, n: usize) -> ExactPoly {
    let mut sum = ExactPoly::zero();
    for i in 0..=n {
        let c = binom(n as u64, i as u64) * binom((m + i) as u64, i as u64);
        let c = if i % 2 == 0 { c } else { -c };
        sum =
            sum + ExactPoly::from_coeffs(std::iter::repeat_n(BigInt::from(0), n - i).chain([c]));
    }
    ExactPoly::linear(1).pow(m as u32) * sum
}

/// `(t − 1)^{m+n} Σ_{i>=0} C(m, i) C(n, i) (1 − t)^{−i}` with the
/// denominators cleared: `Σ_i (−1)^i C(m, i) C(n, i) (t − 1)^{m+n−i}`.
pub fn greene_charpoly(m: usize, n: usize) -> ExactPoly {
    (0..=m.min(n))
        .map(|i| {
            let c = binom(m as u64, i as u64) * binom(n as u64, i as u64);
            let c = if i % 2 == 0 { c } else { -c };
            ExactPoly::linear(1).pow((m + n - i) as u32).scale(&c)
        })
        .sum()
}
