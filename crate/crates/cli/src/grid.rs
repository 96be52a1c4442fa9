//! Parsing of `--alpha` / `--p-grid` value lists.

use anyhow::{bail, ensure, Context, Result};

/// Values closer than this are one grid point.
const GRID_TOL: f64 = 1e-12;

/// Refuses grids that would allocate absurd amounts of rows.
const MAX_POINTS: usize = 1_000_000;

/// Parses `"start:stop:step"` (both ends inclusive) or a comma list.
///
/// The result is sorted ascending with near-duplicates removed.
pub fn parse_grid(spec: &str) -> Result<Vec<f64>> {
    let spec = spec.trim();
    ensure!(!spec.is_empty(), "empty grid");
    let mut values = if spec.contains(':') {
        parse_range(spec)?
    } else {
        spec.split(',')
            .map(|s| parse_number(s.trim()))
            .collect::<Result<Vec<_>>>()?
    };
    values.sort_by(f64::total_cmp);
    values.dedup_by(|b, a| (*b - *a).abs() <= GRID_TOL);
    Ok(values)
}

/// Like [`parse_grid`] but rejects negative orders.
pub fn parse_alpha_grid(spec: &str) -> Result<Vec<f64>> {
    let values = parse_grid(spec).with_context(|| format!("invalid alpha spec {spec:?}"))?;
    if let Some(bad) = values.iter().find(|a| **a < 0.0) {
        bail!("alpha must be non-negative, got {bad}");
    }
    Ok(values)
}

fn parse_number(s: &str) -> Result<f64> {
    let v: f64 = s.parse().with_context(|| format!("not a number: {s:?}"))?;
    ensure!(v.is_finite(), "not a finite number: {s:?}");
    Ok(v)
}

fn parse_range(spec: &str) -> Result<Vec<f64>> {
    let parts: Vec<&str> = spec.split(':').map(str::trim).collect();
    let [start, stop, step] = parts[..] else {
        bail!("range must look like start:stop:step, got {spec:?}");
    };
    let (start, stop, step) = (
        parse_number(start)?,
        parse_number(stop)?,
        parse_number(step)?,
    );
    ensure!(step > 0.0, "step must be positive, got {step}");
    ensure!(
        start <= stop + GRID_TOL,
        "start {start} exceeds stop {stop}"
    );
    let count = ((stop - start) / step + GRID_TOL / step).floor() + 1.0;
    ensure!(
        count <= MAX_POINTS as f64,
        "range has more than {MAX_POINTS} points"
    );
    let mut values: Vec<f64> = (0..count as usize)
        .map(|i| start + i as f64 * step)
        .collect();
    // land exactly on stop when it is reached up to rounding
    if let Some(last) = values.last_mut() {
        if (*last - stop).abs() <= GRID_TOL.max(step * 1e-9) {
            *last = stop;
        }
    }
    Ok(values)
}
