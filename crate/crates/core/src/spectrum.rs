//! Information spectra as right-continuous step functions.
//!
//! The spectrum of a distribution is the CDF of its information
//! `log2(1 / P(x))`. For a family of conditionals we keep two envelopes:
//! the pointwise-minimum CDF, which constrains prefix sums of any feasible
//! representation variable, and its complement, the maximum survival
//! function, which is integrated to obtain the `K_alpha` bound.

use std::f64::consts::LN_2;

use crate::dist::{information_of, MarginalFamily, Pmf, EPS, SHANNON_BAND};
use crate::error::{Error, Result};

/// Breakpoints closer than this are treated as the same information value.
pub const MERGE_TOL: f64 = 1e-12;

/// Absolute mass error tolerated when lining up atoms of two distributions.
pub const MASS_NOISE: f64 = 1e-15;

/// One constant piece `[start, end)` of a step function; the last piece of
/// every function has `end == f64::INFINITY`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Piece {
    pub start: f64,
    pub end: f64,
    pub value: f64,
}

impl Piece {
    pub fn width(&self) -> f64 {
        self.end - self.start
    }
}

/// Non-decreasing right-continuous step function on `[0, inf)`, zero before
/// the first breakpoint.
#[derive(Debug, Clone, PartialEq)]
pub struct StepCdf {
    breakpoints: Vec<f64>,
    values: Vec<f64>,
}

impl StepCdf {
    fn from_parts(breakpoints: Vec<f64>, values: Vec<f64>) -> Self {
        debug_assert_eq!(breakpoints.len(), values.len());
        debug_assert!(breakpoints.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(values.windows(2).all(|w| w[0] <= w[1] + EPS));
        StepCdf {
            breakpoints,
            values,
        }
    }

    pub fn breakpoints(&self) -> &[f64] {
        &self.breakpoints
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// Value at `t`.
    pub fn eval(&self, t: f64) -> f64 {
        let n = self.breakpoints.partition_point(|&b| b <= t);
        if n == 0 {
            0.0
        } else {
            self.values[n - 1]
        }
    }

    /// Value at `t`, treating breakpoints within [`MERGE_TOL`] above `t`
    /// as already reached.
    pub(crate) fn eval_merged(&self, t: f64) -> f64 {
        self.eval(t + MERGE_TOL)
    }

    /// Constant pieces covering `[0, inf)`, including the zero piece before
    /// the first breakpoint when it has positive width.
    pub fn pieces(&self) -> Vec<Piece> {
        let mut out = Vec::with_capacity(self.breakpoints.len() + 1);
        if let Some(&first) = self.breakpoints.first() {
            if first > 0.0 {
                out.push(Piece {
                    start: 0.0,
                    end: first,
                    value: 0.0,
                });
            }
        }
        for (j, (&start, &value)) in self.breakpoints.iter().zip(&self.values).enumerate() {
            let end = self
                .breakpoints
                .get(j + 1)
                .copied()
                .unwrap_or(f64::INFINITY);
            out.push(Piece { start, end, value });
        }
        out
    }

    /// `1 - F` on the same grid.
    pub fn complement(&self) -> Survival {
        Survival { cdf: self.clone() }
    }
}

/// Non-increasing right-continuous step function `1 - F(t)`.
#[derive(Debug, Clone, PartialEq)]
pub struct Survival {
    cdf: StepCdf,
}

impl Survival {
    pub fn breakpoints(&self) -> &[f64] {
        self.cdf.breakpoints()
    }

    pub fn eval(&self, t: f64) -> f64 {
        1.0 - self.cdf.eval(t)
    }

    pub fn pieces(&self) -> Vec<Piece> {
        self.cdf
            .pieces()
            .into_iter()
            .map(|p| Piece {
                value: 1.0 - p.value,
                ..p
            })
            .collect()
    }

    pub fn cdf(&self) -> &StepCdf {
        &self.cdf
    }
}

/// Information spectrum of `p`: the CDF of `log2(1 / P(X))`.
pub fn info_spectrum(p: &Pmf) -> StepCdf {
    let mut breakpoints: Vec<f64> = Vec::new();
    let mut values: Vec<f64> = Vec::new();
    let mut cumulative = 0.0;
    // storage order is by non-increasing mass, hence non-decreasing information
    for atom in p.atoms() {
        let t = information_of(atom.mass);
        cumulative += atom.mass;
        match breakpoints.last() {
            Some(&last) if t - last <= MERGE_TOL => *values.last_mut().unwrap() = cumulative,
            _ => {
                breakpoints.push(t);
                values.push(cumulative);
            }
        }
    }
    if let Some(last) = values.last_mut() {
        *last = 1.0;
    }
    for v in values.iter_mut() {
        *v = v.min(1.0);
    }
    StepCdf::from_parts(breakpoints, values)
}

fn merged_grid<'a>(cdfs: impl IntoIterator<Item = &'a StepCdf>) -> Vec<f64> {
    let mut grid: Vec<f64> = cdfs
        .into_iter()
        .flat_map(|c| c.breakpoints().iter().copied())
        .collect();
    grid.sort_by(f64::total_cmp);
    grid.dedup_by(|b, a| *b - *a <= MERGE_TOL);
    grid
}

/// Pointwise minimum of the members' information spectra.
pub fn cdf_envelope(family: &MarginalFamily) -> StepCdf {
    let spectra: Vec<StepCdf> = family.members().iter().map(info_spectrum).collect();
    let grid = merged_grid(&spectra);
    let mut values: Vec<f64> = grid
        .iter()
        .map(|&t| {
            spectra
                .iter()
                .map(|s| s.eval_merged(t))
                .fold(f64::INFINITY, f64::min)
        })
        .collect();
    if let Some(last) = values.last_mut() {
        *last = 1.0;
    }
    StepCdf::from_parts(grid, values)
}

/// `G(t) = max_y P[i(X|Y) > t | Y = y]`, the complement of [`cdf_envelope`].
pub fn survival_envelope(family: &MarginalFamily) -> Survival {
    cdf_envelope(family).complement()
}

/// Whether the spectrum of `q` lies pointwise below the spectrum of `p`
/// (`q` has at least as much mass above every information level).
///
/// Breakpoints are matched with a window that also covers an absolute mass
/// error of [`MASS_NOISE`]: masses obtained as differences of numbers near 1
/// carry that much error, which for small atoms is well over `MERGE_TOL`
/// bits.
pub fn spectrum_dominates(q: &Pmf, p: &Pmf) -> bool {
    let fq = info_spectrum(q);
    let fp = info_spectrum(p);
    merged_grid([&fq, &fp]).iter().all(|&t| {
        let s = t + MERGE_TOL.max(MASS_NOISE * t.exp2() / LN_2);
        fq.eval(s) <= fp.eval(s) + EPS
    })
}

/// Spectrum-integral lower bound `K_alpha` on the minimum Rényi entropy of
/// any functional representation of the family.
///
/// Each constant piece of `G` contributes in closed form, so no sampling is
/// involved: `alpha = 1` integrates `G` directly, other orders integrate
/// `ln2 (1 - alpha) G(t) 2^((1 - alpha) t)`.
pub fn k_alpha(family: &MarginalFamily, alpha: f64) -> Result<f64> {
    if alpha.is_nan() || alpha < 0.0 {
        return Err(Error::NegativeAlpha(alpha));
    }
    let pieces = survival_envelope(family).pieces();
    let gap = 1.0 - alpha;
    if gap.abs() < SHANNON_BAND {
        return Ok(pieces
            .iter()
            .filter(|p| p.value > 0.0 && p.end.is_finite())
            .map(|p| p.value * p.width())
            .sum());
    }
    let mut integral = 0.0;
    for piece in pieces.iter().filter(|p| p.value > 0.0) {
        // 2^(gap b) - 2^(gap a) written to stay accurate when gap is tiny
        let scale = (gap * piece.start * LN_2).exp();
        if piece.end.is_finite() {
            integral += piece.value * scale * (gap * piece.width() * LN_2).exp_m1();
        } else if gap < 0.0 {
            integral -= piece.value * scale;
        } else {
            return Ok(f64::INFINITY);
        }
    }
    Ok((integral.ln_1p() / (gap * LN_2)).max(0.0))
}

/// Earlier `tau`-slack converse: a lower bound on `P[i(Z) > t]` equal to
/// `max(0, G(t + tau) - exp(-tau))`.
pub fn old_spectrum_lower_bound(family: &MarginalFamily, t: f64, tau: f64) -> Result<f64> {
    old_spectrum_lower_bound_with_base(family, t, tau, std::f64::consts::E)
}

/// As [`old_spectrum_lower_bound`] with the slack term `base^(-tau)`.
pub fn old_spectrum_lower_bound_with_base(
    family: &MarginalFamily,
    t: f64,
    tau: f64,
    base: f64,
) -> Result<f64> {
    if t.is_nan() || t < 0.0 {
        return Err(Error::InvalidParameter(format!("t must be >= 0, got {t}")));
    }
    if tau.is_nan() || tau <= 0.0 {
        return Err(Error::InvalidParameter(format!(
            "tau must be > 0, got {tau}"
        )));
    }
    if base.is_nan() || base <= 1.0 {
        return Err(Error::InvalidParameter(format!(
            "base must be > 1, got {base}"
        )));
    }
    let tail = survival_envelope(family).eval(t + tau);
    Ok((tail - base.powf(-tau)).max(0.0))
}
