//! Test-only generators and independent oracles.
//!
//! Nothing here calls into the spectrum or bound code under test: tail
//! probabilities are summed directly from raw masses and integrals are
//! evaluated by adaptive Simpson quadrature.

#![allow(dead_code)]

use mec_core::{MarginalFamily, Pmf};
use rand::Rng;

/// Random distribution with `1..=max_support` atoms.
///
/// About a third of draws use masses on a 0.05 grid so that families share
/// exact mass values and tie-handling paths get exercised.
pub fn random_masses<R: Rng>(rng: &mut R, max_support: usize) -> Vec<f64> {
    let n = rng.random_range(1..=max_support);
    if n <= 20 && rng.random_bool(0.3) {
        let mut units = vec![1u32; n];
        for _ in n..20 {
            units[rng.random_range(0..n)] += 1;
        }
        return units.iter().map(|&u| u as f64 / 20.0).collect();
    }
    // Dirichlet(1): normalized exponentials
    let w: Vec<f64> = (0..n)
        .map(|_| -(1.0 - rng.random::<f64>()).ln() + 1e-3)
        .collect();
    let s: f64 = w.iter().sum();
    w.iter().map(|x| x / s).collect()
}

pub fn random_pmf<R: Rng>(rng: &mut R, max_support: usize) -> Pmf {
    Pmf::new(&random_masses(rng, max_support)).unwrap()
}

pub fn random_family<R: Rng>(
    rng: &mut R,
    max_members: usize,
    max_support: usize,
) -> MarginalFamily {
    let m = rng.random_range(1..=max_members);
    MarginalFamily::new((0..m).map(|_| random_pmf(rng, max_support)).collect()).unwrap()
}

/// Splits atoms of `p` at random; the result is spectrum-dominated by `p`.
pub fn random_refinement<R: Rng>(rng: &mut R, p: &[f64], max_pieces: usize) -> Vec<f64> {
    let mut out = Vec::new();
    for &m in p {
        let k = rng.random_range(1..=max_pieces);
        let w: Vec<f64> = (0..k).map(|_| rng.random::<f64>() + 0.05).collect();
        let s: f64 = w.iter().sum();
        out.extend(w.iter().map(|x| m * x / s));
    }
    out
}

/// Bits of information of `mass`.
pub fn info(mass: f64) -> f64 {
    -mass.log2()
}

/// `P[i(X) > t]` summed from raw masses; `slack` widens the strict
/// comparison by that many bits in the caller's chosen direction.
pub fn tail(masses: &[f64], t: f64, slack: f64) -> f64 {
    masses
        .iter()
        .filter(|&&p| p > 0.0 && info(p) > t + slack)
        .sum()
}

/// `G(t) = max_y P[i(X|Y) > t | y]` straight from raw masses.
pub fn max_tail(members: &[Vec<f64>], t: f64, slack: f64) -> f64 {
    members
        .iter()
        .map(|m| tail(m, t, slack))
        .fold(0.0, f64::max)
}

pub fn raw_members(family: &MarginalFamily) -> Vec<Vec<f64>> {
    family.members().iter().map(Pmf::to_vec).collect()
}

fn simpson(a: f64, b: f64, fa: f64, fm: f64, fb: f64) -> f64 {
    (b - a) / 6.0 * (fa + 4.0 * fm + fb)
}

#[allow(clippy::too_many_arguments)]
fn adaptive<F: Fn(f64) -> f64>(
    f: &F,
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
    tol: f64,
    depth: u32,
) -> f64 {
    let m = 0.5 * (a + b);
    let lm = 0.5 * (a + m);
    let rm = 0.5 * (m + b);
    let flm = f(lm);
    let frm = f(rm);
    let left = simpson(a, m, fa, flm, fm);
    let right = simpson(m, b, fm, frm, fb);
    let delta = left + right - whole;
    if depth == 0 || delta.abs() <= 15.0 * tol {
        return left + right + delta / 15.0;
    }
    adaptive(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1)
        + adaptive(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1)
}

/// Adaptive Simpson integral of `f` over `[a, b]`, started from `panels`
/// equal panels so isolated jumps cannot hide between sample points.
pub fn integrate<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, tol: f64, panels: usize) -> f64 {
    let h = (b - a) / panels as f64;
    (0..panels)
        .map(|i| {
            let lo = a + i as f64 * h;
            let hi = lo + h;
            let (flo, fmid, fhi) = (f(lo), f(0.5 * (lo + hi)), f(hi));
            let whole = simpson(lo, hi, flo, fmid, fhi);
            adaptive(&f, lo, hi, flo, fmid, fhi, whole, tol / panels as f64, 60)
        })
        .sum()
}

/// `K_alpha` by numerical quadrature of its defining integrals.
pub fn k_alpha_quadrature(members: &[Vec<f64>], alpha: f64) -> f64 {
    let top = members
        .iter()
        .flatten()
        .filter(|&&p| p > 0.0)
        .map(|&p| info(p))
        .fold(0.0, f64::max);
    let end = top + 1.0;
    let g = |t: f64| max_tail(members, t, 0.0);
    if alpha == 1.0 {
        return integrate(g, 0.0, end, 1e-11, 256);
    }
    let gap = 1.0 - alpha;
    let ln2 = std::f64::consts::LN_2;
    let j = |t: f64| ln2 * gap * g(t) * (gap * t).exp2();
    let scale = (gap * end).exp2().max(1.0);
    let integral = integrate(j, 0.0, end, 1e-11 * scale, 256);
    (1.0 + integral).log2() / gap
}
