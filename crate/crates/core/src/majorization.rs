//! Majorization order on sorted distributions and its lattice meet.

use crate::dist::{MarginalFamily, Pmf, EPS};
use crate::error::Result;

/// Masses at or below this are treated as zero when building the meet.
const ZERO_MASS: f64 = 1e-12;

fn prefix_sums(p: &Pmf, len: usize) -> Vec<f64> {
    let mut acc = 0.0;
    let mut out: Vec<f64> = p
        .masses()
        .map(|m| {
            acc += m;
            acc
        })
        .collect();
    out.resize(len, acc);
    out
}

/// `true` when `p` majorizes `q`: every prefix sum of `q` is at most the
/// corresponding prefix sum of `p`, after zero-padding to a common length.
pub fn majorizes(p: &Pmf, q: &Pmf) -> bool {
    let len = p.support_size().max(q.support_size());
    prefix_sums(p, len)
        .iter()
        .zip(prefix_sums(q, len))
        .all(|(&sp, sq)| sq <= sp + EPS)
}

/// Greatest lower bound of the family members in the majorization order.
///
/// Its prefix sums are the pointwise minimum of the members' prefix sums.
/// Each member's prefix vector is concave and a minimum of concave
/// sequences is concave, so the first differences come out non-increasing.
pub fn majorization_meet(family: &MarginalFamily) -> Pmf {
    let len = family
        .members()
        .iter()
        .map(Pmf::support_size)
        .max()
        .unwrap_or(1);
    let mut lower = vec![f64::INFINITY; len];
    for member in family.members() {
        for (slot, s) in lower.iter_mut().zip(prefix_sums(member, len)) {
            *slot = slot.min(s);
        }
    }
    let mut masses = Vec::with_capacity(len);
    let mut prev = 0.0;
    for &s in &lower {
        masses.push(s - prev);
        prev = s;
    }
    debug_assert!(
        masses.windows(2).all(|w| w[1] <= w[0] + 1e-9),
        "meet differences increase: {masses:?}"
    );
    while masses.last().is_some_and(|&m| m <= ZERO_MASS) {
        masses.pop();
    }
    for m in masses.iter_mut() {
        if *m < 0.0 {
            *m = 0.0;
        }
    }
    Pmf::new(&masses).expect("meet of normalized members is normalized")
}

/// Rényi entropy of the majorization meet.
pub fn meet_bound(family: &MarginalFamily, alpha: f64) -> Result<f64> {
    majorization_meet(family).renyi_entropy(alpha)
}
