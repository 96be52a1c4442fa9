//! Finite discrete distributions, information values and Rényi entropies.
//!
//! All logarithms are base two; entropies are reported in bits.

use std::f64::consts::LN_2;

use crate::error::{Error, Result};

/// Normalization tolerance shared by every constructor in the crate.
pub const EPS: f64 = 1e-9;

/// Orders closer than this to one are evaluated with the Shannon formula.
pub(crate) const SHANNON_BAND: f64 = 1e-9;

/// One outcome of a [`Pmf`]: the caller's label (its position in the raw
/// input unless relabelled) and its probability.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Atom {
    pub label: usize,
    pub mass: f64,
}

/// A finite probability mass function.
///
/// Atoms are stored by non-increasing mass, ties ordered by ascending label.
/// Zero-mass atoms never appear and the masses are rescaled to sum to one
/// exactly (up to rounding) after the input sum has been validated.
#[derive(Debug, Clone, PartialEq)]
pub struct Pmf {
    atoms: Vec<Atom>,
}

impl Pmf {
    /// Builds a distribution from raw masses labelled by position.
    pub fn new(raw: &[f64]) -> Result<Self> {
        let labels: Vec<usize> = (0..raw.len()).collect();
        Self::with_labels(raw, &labels)
    }

    /// Builds a distribution with explicit labels, one per raw mass.
    pub fn with_labels(raw: &[f64], labels: &[usize]) -> Result<Self> {
        if raw.len() != labels.len() {
            return Err(Error::DimensionMismatch {
                expected: raw.len(),
                found: labels.len(),
            });
        }
        if raw.is_empty() {
            return Err(Error::Empty);
        }
        for (index, &value) in raw.iter().enumerate() {
            if !value.is_finite() {
                return Err(Error::NonFiniteMass { index, value });
            }
            if value < -EPS {
                return Err(Error::NegativeMass { index, value });
            }
        }
        let sum: f64 = raw.iter().map(|&m| m.max(0.0)).sum();
        if (sum - 1.0).abs() > EPS {
            return Err(Error::NotNormalized {
                sum,
                tolerance: EPS,
            });
        }
        let mut atoms: Vec<Atom> = raw
            .iter()
            .zip(labels)
            .filter(|(&m, _)| m > 0.0)
            .map(|(&m, &label)| Atom {
                label,
                mass: m / sum,
            })
            .collect();
        atoms.sort_by(|a, b| b.mass.total_cmp(&a.mass).then(a.label.cmp(&b.label)));
        Ok(Pmf { atoms })
    }

    /// Point mass on label 0.
    pub fn point_mass() -> Self {
        Pmf {
            atoms: vec![Atom {
                label: 0,
                mass: 1.0,
            }],
        }
    }

    /// Uniform distribution over `n >= 1` outcomes.
    pub fn uniform(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::Empty);
        }
        Self::new(&vec![1.0 / n as f64; n])
    }

    pub fn atoms(&self) -> &[Atom] {
        &self.atoms
    }

    /// Masses in storage (non-increasing) order.
    pub fn masses(&self) -> impl ExactSizeIterator<Item = f64> + Clone + '_ {
        self.atoms.iter().map(|a| a.mass)
    }

    pub fn to_vec(&self) -> Vec<f64> {
        self.masses().collect()
    }

    pub fn support_size(&self) -> usize {
        self.atoms.len()
    }

    /// Mass carried by `label`, zero when the label is not in the support.
    pub fn mass_of(&self, label: usize) -> f64 {
        self.atoms
            .iter()
            .find(|a| a.label == label)
            .map_or(0.0, |a| a.mass)
    }

    /// Information (surprisal) of the atom at storage position `k`, in bits.
    pub fn information(&self, k: usize) -> Result<f64> {
        self.atoms
            .get(k)
            .map(|a| information_of(a.mass))
            .ok_or(Error::IndexOutOfRange {
                index: k,
                len: self.atoms.len(),
            })
    }

    /// Rényi entropy of order `alpha`, in bits.
    pub fn renyi_entropy(&self, alpha: f64) -> Result<f64> {
        renyi_entropy_of(self.masses(), alpha)
    }

    pub fn shannon_entropy(&self) -> f64 {
        shannon(self.masses())
    }
}

/// `log2(1 / mass)`, clamped at zero for masses that round above one.
pub fn information_of(mass: f64) -> f64 {
    (-mass.log2()).max(0.0)
}

fn shannon(masses: impl Iterator<Item = f64>) -> f64 {
    masses
        .filter(|&p| p > 0.0)
        .map(|p| p * information_of(p))
        .sum()
}

/// Rényi entropy of an arbitrary non-negative mass vector that sums to one.
///
/// Used for distributions that are not stored as a [`Pmf`], such as the
/// entry masses of a coupling.
pub fn renyi_entropy_of<I>(masses: I, alpha: f64) -> Result<f64>
where
    I: IntoIterator<Item = f64>,
    I::IntoIter: Clone,
{
    if alpha.is_nan() || alpha < 0.0 {
        return Err(Error::NegativeAlpha(alpha));
    }
    let masses = masses.into_iter().filter(|&p| p > 0.0);
    if alpha == 0.0 {
        let n = masses.count();
        return Ok(if n == 0 { 0.0 } else { (n as f64).log2() });
    }
    let gap = 1.0 - alpha;
    if gap.abs() < SHANNON_BAND {
        return Ok(shannon(masses));
    }
    let value = if gap.abs() < 0.5 {
        // sum p^alpha - 1 evaluated without cancellation near alpha = 1
        let excess: f64 = masses.map(|p| p * (gap * -p.ln()).exp_m1()).sum();
        excess.ln_1p() / (gap * LN_2)
    } else {
        let top = masses.clone().fold(0.0_f64, f64::max);
        if top == 0.0 {
            return Ok(0.0);
        }
        let scaled: f64 = masses.map(|p| (p / top).powf(alpha)).sum();
        (alpha * top.ln() + scaled.ln()) / (gap * LN_2)
    };
    Ok(value.max(0.0))
}

/// Conditional distributions `P_{X|Y=y}`, one member per `y`.
#[derive(Debug, Clone, PartialEq)]
pub struct MarginalFamily {
    members: Vec<Pmf>,
    y_weights: Option<Vec<f64>>,
}

impl MarginalFamily {
    pub fn new(members: Vec<Pmf>) -> Result<Self> {
        if members.is_empty() {
            return Err(Error::Empty);
        }
        Ok(MarginalFamily {
            members,
            y_weights: None,
        })
    }

    /// Family with a distribution over the conditioning variable attached.
    pub fn with_weights(members: Vec<Pmf>, y_weights: Vec<f64>) -> Result<Self> {
        if members.is_empty() {
            return Err(Error::Empty);
        }
        if y_weights.len() != members.len() {
            return Err(Error::DimensionMismatch {
                expected: members.len(),
                found: y_weights.len(),
            });
        }
        for (index, &value) in y_weights.iter().enumerate() {
            if value.is_nan() || value <= 0.0 {
                return Err(Error::NegativeMass { index, value });
            }
        }
        let sum: f64 = y_weights.iter().sum();
        if (sum - 1.0).abs() > EPS {
            return Err(Error::NotNormalized {
                sum,
                tolerance: EPS,
            });
        }
        Ok(MarginalFamily {
            members,
            y_weights: Some(y_weights),
        })
    }

    /// Convenience constructor from raw mass vectors.
    pub fn from_raw<R: AsRef<[f64]>>(raw: &[R]) -> Result<Self> {
        let members = raw
            .iter()
            .map(|r| Pmf::new(r.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        Self::new(members)
    }

    pub fn members(&self) -> &[Pmf] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn y_weights(&self) -> Option<&[f64]> {
        self.y_weights.as_deref()
    }

    /// Sum of member support sizes.
    pub fn total_support(&self) -> usize {
        self.members.iter().map(Pmf::support_size).sum()
    }
}

/// Largest member entropy, the classical lower bound on the minimum
/// coupling entropy.
pub fn sup_conditional_entropy(family: &MarginalFamily, alpha: f64) -> Result<f64> {
    let mut best = 0.0_f64;
    for member in family.members() {
        best = best.max(member.renyi_entropy(alpha)?);
    }
    Ok(best)
}

/// Joint distribution `P_{XY}` stored as rows indexed by `y`.
#[derive(Debug, Clone, PartialEq)]
pub struct JointPmf {
    rows: Vec<Vec<f64>>,
}

impl JointPmf {
    pub fn new(rows: Vec<Vec<f64>>) -> Result<Self> {
        let width = rows.first().map(Vec::len).ok_or(Error::Empty)?;
        if width == 0 {
            return Err(Error::Empty);
        }
        let mut index = 0;
        for (row, masses) in rows.iter().enumerate() {
            if masses.len() != width {
                return Err(Error::RaggedJoint {
                    row,
                    expected: width,
                    found: masses.len(),
                });
            }
            for &value in masses {
                if !value.is_finite() {
                    return Err(Error::NonFiniteMass { index, value });
                }
                if value < 0.0 {
                    return Err(Error::NegativeMass { index, value });
                }
                index += 1;
            }
        }
        let total: f64 = rows.iter().flatten().sum();
        if (total - 1.0).abs() > EPS {
            return Err(Error::NotNormalized {
                sum: total,
                tolerance: EPS,
            });
        }
        Ok(JointPmf { rows })
    }

    pub fn rows(&self) -> &[Vec<f64>] {
        &self.rows
    }

    pub fn x_len(&self) -> usize {
        self.rows[0].len()
    }

    pub fn y_len(&self) -> usize {
        self.rows.len()
    }

    /// Marginal of `X`, indexed by column.
    pub fn x_marginal(&self) -> Vec<f64> {
        (0..self.x_len())
            .map(|x| self.rows.iter().map(|r| r[x]).sum())
            .collect()
    }
}

/// Splits a joint into its conditionals `P_{X|Y=y}` and the weights `P_Y`.
///
/// Member atoms keep the column index of `x` as their label.
pub fn conditionals_from_joint(joint: &JointPmf) -> Result<MarginalFamily> {
    let mut members = Vec::with_capacity(joint.y_len());
    let mut weights = Vec::with_capacity(joint.y_len());
    for (y, row) in joint.rows().iter().enumerate() {
        let total: f64 = row.iter().sum();
        if total <= 0.0 {
            return Err(Error::EmptyRow(y));
        }
        let normalized: Vec<f64> = row.iter().map(|m| m / total).collect();
        members.push(Pmf::new(&normalized)?);
        weights.push(total);
    }
    let sum: f64 = weights.iter().sum();
    weights.iter_mut().for_each(|w| *w /= sum);
    MarginalFamily::with_weights(members, weights)
}
