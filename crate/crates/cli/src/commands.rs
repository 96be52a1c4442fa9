//! Subcommand implementations. Each writes its whole output to `out`.

use std::io::Write;

use anyhow::{bail, Context, Result};
use mec_core::{
    brute_force_min_entropy, catalog, cdf_envelope, compare_bounds, coupling_entropy,
    greedy_coupling, majorization_meet, qstar_greedy, to_functional_representation,
    verify_representation, BoundsReport, MarginalFamily, Pmf,
};
use rayon::prelude::*;

use crate::input::Input;

/// Fixed-point with 9 decimals; negative zero prints as zero.
pub fn fmt9(x: f64) -> String {
    let s = format!("{x:.9}");
    if s == "-0.000000000" {
        "0.000000000".to_string()
    } else {
        s
    }
}

fn fmt_pmf(p: &Pmf) -> String {
    p.masses().map(fmt9).collect::<Vec<_>>().join(" ")
}

struct Row {
    report: BoundsReport,
    oracle: Option<f64>,
}

fn bound_rows(
    family: &MarginalFamily,
    alphas: &[f64],
    with_upper: bool,
    oracle: bool,
) -> Result<Vec<Row>> {
    // par_iter + collect keeps the input order
    alphas
        .par_iter()
        .map(|&alpha| {
            let report = compare_bounds(family, alpha, with_upper)?;
            let oracle = if oracle {
                Some(brute_force_min_entropy(family, alpha)?.0)
            } else {
                None
            };
            Ok(Row { report, oracle })
        })
        .collect::<mec_core::Result<Vec<_>>>()
        .context("computing bounds")
}

fn write_bound_rows<W: Write>(out: W, rows: &[Row], with_upper: bool, oracle: bool) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    let mut header = vec!["alpha", "qstar", "k_alpha", "meet", "sup"];
    if with_upper {
        header.push("greedy_upper");
    }
    if oracle {
        header.push("oracle");
    }
    w.write_record(&header)?;
    for row in rows {
        let r = &row.report;
        let mut rec = vec![
            fmt9(r.alpha),
            fmt9(r.qstar_bound),
            fmt9(r.k_alpha_bound),
            fmt9(r.meet_bound),
            fmt9(r.sup_bound),
        ];
        rec.extend(r.greedy_upper.map(fmt9));
        rec.extend(row.oracle.map(fmt9));
        w.write_record(&rec)?;
    }
    w.flush()?;
    Ok(())
}

/// Bound table over an alpha grid.
pub fn bounds<W: Write>(
    input: &Input,
    alphas: &[f64],
    with_upper: bool,
    oracle: bool,
    out: W,
) -> Result<()> {
    let rows = bound_rows(&input.family, alphas, with_upper, oracle)?;
    write_bound_rows(out, &rows, with_upper, oracle)
}

/// First example: the family, `Q*`, the meet as `#` comments, then the
/// bound table.
pub fn example1<W: Write>(alphas: &[f64], with_upper: bool, mut out: W) -> Result<()> {
    let family = catalog::example1_family();
    for (y, member) in family.members().iter().enumerate() {
        writeln!(out, "# P(x|y{y}) = {}", fmt_pmf(member))?;
    }
    writeln!(out, "# Q* = {}", fmt_pmf(&qstar_greedy(&family)))?;
    writeln!(out, "# meet = {}", fmt_pmf(&majorization_meet(&family)))?;
    let rows = bound_rows(&family, alphas, with_upper, false)?;
    write_bound_rows(out, &rows, with_upper, false)
}

/// Second example: one row per `(p, alpha)` with the four lower bounds, the
/// greedy upper bound, `Q*` and the meet (space-separated masses).
pub fn example2<W: Write>(ps: &[f64], alphas: &[f64], out: W) -> Result<()> {
    let mut jobs = Vec::with_capacity(ps.len() * alphas.len());
    for &p in ps {
        if !(0.0..=1.0).contains(&p) {
            bail!("p must lie in [0, 1], got {p}");
        }
        for &alpha in alphas {
            jobs.push((p, alpha));
        }
    }
    let rows = jobs
        .par_iter()
        .map(|&(p, alpha)| {
            let family = catalog::example2_family(p)?;
            let report = compare_bounds(&family, alpha, true)?;
            Ok((p, report, qstar_greedy(&family), majorization_meet(&family)))
        })
        .collect::<mec_core::Result<Vec<_>>>()
        .context("computing example 2")?;
    let mut w = csv::Writer::from_writer(out);
    w.write_record([
        "p",
        "alpha",
        "qstar",
        "k_alpha",
        "meet",
        "sup",
        "greedy_upper",
        "qstar_pmf",
        "meet_pmf",
    ])?;
    for (p, r, q, meet) in rows {
        w.write_record([
            fmt9(p),
            fmt9(r.alpha),
            fmt9(r.qstar_bound),
            fmt9(r.k_alpha_bound),
            fmt9(r.meet_bound),
            fmt9(r.sup_bound),
            fmt9(r.greedy_upper.unwrap_or(f64::NAN)),
            fmt_pmf(&q),
            fmt_pmf(&meet),
        ])?;
    }
    w.flush()?;
    Ok(())
}

/// Envelope breakpoints `t` with `C(t)` and `G(t) = 1 - C(t)`.
pub fn spectrum<W: Write>(input: &Input, out: W) -> Result<()> {
    let cdf = cdf_envelope(&input.family);
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["t", "cdf", "survival"])?;
    for (&t, &c) in cdf.breakpoints().iter().zip(cdf.values()) {
        w.write_record([fmt9(t), fmt9(c), fmt9(1.0 - c)])?;
    }
    w.flush()?;
    Ok(())
}

/// Functional representation built from the greedy coupling of a joint's
/// conditionals, with its diagnostics and the Shannon lower bounds.
pub fn frl<W: Write>(input: &Input, mut out: W) -> Result<()> {
    if input.joint.is_none() {
        bail!("frl needs a \"joint\" input");
    }
    let family = &input.family;
    let weights = family
        .y_weights()
        .context("joint input without y weights")?;
    let labels: Vec<usize> = (0..family.len()).collect();
    let y = Pmf::with_labels(weights, &labels)?;
    let coupling = greedy_coupling(family);
    let rep = to_functional_representation(&coupling, &y)?;
    let report = verify_representation(&rep, family)?;
    let bounds = compare_bounds(family, 1.0, false)?;

    writeln!(out, "values of y: {}", family.len())?;
    writeln!(out, "atoms of Z: {}", rep.z_masses.len())?;
    writeln!(out, "H(Z) = {}", fmt9(coupling_entropy(&coupling, 1.0)?))?;
    writeln!(out, "H(X|Y,Z) = {}", fmt9(report.conditional_entropy))?;
    writeln!(out, "I(Y;Z) = {}", fmt9(report.mutual_information))?;
    writeln!(
        out,
        "max marginal deviation = {}",
        fmt9(report.max_marginal_deviation)
    )?;
    writeln!(out, "lower bounds at alpha = 1:")?;
    writeln!(out, "  qstar   {}", fmt9(bounds.qstar_bound))?;
    writeln!(out, "  k_alpha {}", fmt9(bounds.k_alpha_bound))?;
    writeln!(out, "  meet    {}", fmt9(bounds.meet_bound))?;
    writeln!(out, "  sup     {}", fmt9(bounds.sup_bound))?;
    writeln!(out, "g(y, z):")?;
    write!(out, "  {:>12}", "P(z)")?;
    for &m in &rep.z_masses {
        write!(out, " {:>11}", fmt9(m))?;
    }
    writeln!(out)?;
    for (label, row) in input.labels.iter().zip(&rep.g_table) {
        write!(out, "  {label:>12}")?;
        for x in row {
            write!(out, " {x:>11}")?;
        }
        writeln!(out)?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixed_point() {
        assert_eq!(fmt9(0.5), "0.500000000");
        assert_eq!(fmt9(-1e-15), "0.000000000");
        assert_eq!(fmt9(-0.0), "0.000000000");
        assert_eq!(fmt9(2.0f64.log2() * 1.5), "1.500000000");
        assert_eq!(fmt9(-0.25), "-0.250000000");
    }

    #[test]
    fn example2_rows() {
        let mut buf = Vec::new();
        example2(&[0.3], &[1.0], &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let row = text.lines().nth(1).unwrap();
        assert!(row.ends_with(",0.700000000 0.300000000"), "{row}");
    }
}
