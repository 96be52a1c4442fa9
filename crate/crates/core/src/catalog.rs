//! Built-in reference families used by the CLI, tests and benches.

use crate::dist::{JointPmf, MarginalFamily, Pmf};
use crate::error::Result;

/// The three six-outcome conditionals of the Rényi-entropy comparison example.
pub const EXAMPLE1_CONDITIONALS: [[f64; 6]; 3] = [
    [0.5, 0.125, 0.125, 0.125, 0.125, 0.0],
    [0.4, 0.4, 0.1, 0.1, 0.0, 0.0],
    [0.35, 0.35, 0.25, 0.04, 0.005, 0.005],
];

pub fn example1_family() -> MarginalFamily {
    MarginalFamily::from_raw(&EXAMPLE1_CONDITIONALS).expect("static family is valid")
}

/// Joint with uniform `Y` whose conditionals are [`EXAMPLE1_CONDITIONALS`].
pub fn example1_joint() -> JointPmf {
    let rows = EXAMPLE1_CONDITIONALS
        .iter()
        .map(|r| r.iter().map(|m| m / 3.0).collect())
        .collect();
    JointPmf::new(rows).expect("static joint is valid")
}

/// Published greedy spectrum-maximal distribution for example 1.
pub fn example1_qstar() -> Vec<f64> {
    vec![0.35, 0.15, 0.125, 0.125, 0.1, 0.1, 0.04, 0.005, 0.005]
}

/// Published majorization meet for example 1.
pub fn example1_meet() -> Vec<f64> {
    vec![0.35, 0.275, 0.125, 0.125, 0.12, 0.005]
}

/// Binary family `{[0.9, 0.1], [1 - p, p]}` for `p` in `[0, 0.5]`.
pub fn example2_family(p: f64) -> Result<MarginalFamily> {
    binary_family(0.1, p)
}

/// Binary family `{[1 - a, a], [1 - p, p]}`.
///
/// With `a = 0.11` this matches the curves drawn for the binary example
/// rather than its stated `a = 0.1`.
pub fn binary_family(a: f64, p: f64) -> Result<MarginalFamily> {
    MarginalFamily::new(vec![Pmf::new(&[1.0 - a, a])?, Pmf::new(&[1.0 - p, p])?])
}

/// Closed-form greedy distribution for the binary example, zero atoms removed.
pub fn example2_qstar(p: f64) -> Vec<f64> {
    let raw = if p <= 0.1 {
        vec![0.9, 0.1 - p, p]
    } else {
        vec![1.0 - p, p - 0.1, 0.1]
    };
    sorted_nonzero(raw)
}

/// Closed-form meet for the binary example.
pub fn example2_meet(p: f64) -> Vec<f64> {
    let raw = if p <= 0.1 {
        vec![0.9, 0.1]
    } else {
        vec![1.0 - p, p]
    };
    sorted_nonzero(raw)
}

fn sorted_nonzero(mut v: Vec<f64>) -> Vec<f64> {
    v.retain(|&m| m > 1e-12);
    v.sort_by(|a, b| b.total_cmp(a));
    v
}
