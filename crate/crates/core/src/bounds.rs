//! The greedy spectrum-maximal distribution `Q*` and the bound comparison.
//!
//! `Q*` is the majorization-largest distribution whose information spectrum
//! lies below every member's spectrum, so its Rényi entropy is the
//! strongest of the lower bounds computed here.

use crate::coupling::{coupling_entropy, greedy_coupling};
use crate::dist::{sup_conditional_entropy, MarginalFamily, Pmf, EPS};
use crate::error::{Error, Result};
use crate::majorization::meet_bound;
use crate::spectrum::{cdf_envelope, k_alpha};

/// Assigned masses at or below this are discarded.
const MIN_MASS: f64 = 1e-12;

/// Greedy construction of `Q*` against the pointwise-minimum spectrum `C`.
///
/// Masses are assigned in non-increasing order; each is the largest `q` not
/// above the previous mass with `assigned + q <= C(log2(1/q))`. Pieces of `C`
/// are scanned left to right and never revisited, since both the previous
/// mass and the remaining headroom only shrink.
pub fn qstar_greedy(family: &MarginalFamily) -> Pmf {
    let pieces = cdf_envelope(family).pieces();
    let mut masses: Vec<f64> = Vec::new();
    let mut assigned = 0.0;
    let mut prev = 1.0_f64;
    let mut idx = 0;
    while assigned < 1.0 - EPS && idx < pieces.len() {
        let piece = pieces[idx];
        let last = idx + 1 == pieces.len();
        let ceiling = (-piece.start).exp2();
        let mut q = prev.min(piece.value - assigned).min(ceiling);
        if q <= MIN_MASS {
            if last {
                break;
            }
            idx += 1;
            continue;
        }
        // q must carry information inside [start, end) to be bound by this piece
        if !last && q <= (-piece.end).exp2() - EPS {
            idx += 1;
            continue;
        }
        if assigned + q > 1.0 {
            q = 1.0 - assigned;
        }
        masses.push(q);
        assigned += q;
        prev = q;
    }
    debug_assert!(masses.len() <= 2 * family.total_support().max(1) + 1);
    let total: f64 = masses.iter().sum();
    // residual float drift goes to the smallest atom
    if let Some(last) = masses.last_mut() {
        *last += 1.0 - total;
    }
    Pmf::new(&masses).expect("greedy masses sum to one")
}

/// Rényi entropy of [`qstar_greedy`].
pub fn qstar_bound(family: &MarginalFamily, alpha: f64) -> Result<f64> {
    qstar_greedy(family).renyi_entropy(alpha)
}

/// All four lower bounds at one order, plus the greedy-coupling upper bound
/// when requested.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundsReport {
    pub alpha: f64,
    pub qstar_bound: f64,
    pub k_alpha_bound: f64,
    pub meet_bound: f64,
    pub sup_bound: f64,
    pub greedy_upper: Option<f64>,
}

impl BoundsReport {
    /// Checks the ordering `qstar >= {k_alpha, meet} >= sup` and
    /// `greedy_upper >= qstar`, each with `slack`.
    pub fn ordering_violations(&self, slack: f64) -> Vec<&'static str> {
        let mut out = Vec::new();
        if self.qstar_bound < self.k_alpha_bound - slack {
            out.push("qstar < k_alpha");
        }
        if self.qstar_bound < self.meet_bound - slack {
            out.push("qstar < meet");
        }
        if self.k_alpha_bound < self.sup_bound - slack {
            out.push("k_alpha < sup");
        }
        if self.meet_bound < self.sup_bound - slack {
            out.push("meet < sup");
        }
        if let Some(upper) = self.greedy_upper {
            if upper < self.qstar_bound - slack {
                out.push("greedy_upper < qstar");
            }
        }
        out
    }

    pub fn is_consistent(&self) -> bool {
        self.ordering_violations(1e-9).is_empty()
    }
}

pub fn compare_bounds(
    family: &MarginalFamily,
    alpha: f64,
    with_upper: bool,
) -> Result<BoundsReport> {
    if alpha.is_nan() || alpha < 0.0 {
        return Err(Error::NegativeAlpha(alpha));
    }
    let greedy_upper = if with_upper {
        Some(coupling_entropy(&greedy_coupling(family), alpha)?)
    } else {
        None
    };
    Ok(BoundsReport {
        alpha,
        qstar_bound: qstar_bound(family, alpha)?,
        k_alpha_bound: k_alpha(family, alpha)?,
        meet_bound: meet_bound(family, alpha)?,
        sup_bound: sup_conditional_entropy(family, alpha)?,
        greedy_upper,
    })
}
