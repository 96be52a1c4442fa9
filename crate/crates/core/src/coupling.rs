//! Couplings of a marginal family and the functional representations they
//! induce.
//!
//! A coupling of the conditionals `P_{X|Y=y}` yields a representation
//! `X = g(Y, Z)` with `Z` independent of `Y`: take `Z` to be the coupled
//! tuple and let `g(y, z)` read off coordinate `y`. The two problems share
//! the same minimum entropy, which is what makes the lower bounds in this
//! crate apply to both.

use std::collections::{BTreeMap, HashSet};

use crate::dist::{renyi_entropy_of, MarginalFamily, Pmf};
use crate::error::{Error, Result};

/// Residual masses at or below this count as exhausted.
const SATURATED: f64 = 1e-12;

/// Sparse joint distribution over tuples of member-atom positions.
///
/// Coordinate `i` of a key indexes into `family.members()[i].atoms()`.
#[derive(Debug, Clone, PartialEq)]
pub struct Coupling {
    entries: BTreeMap<Vec<usize>, f64>,
    family: MarginalFamily,
}

impl Coupling {
    /// Builds a coupling from explicit entries, dropping masses below 1e-12.
    pub fn from_entries(
        family: &MarginalFamily,
        entries: impl IntoIterator<Item = (Vec<usize>, f64)>,
    ) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (key, mass) in entries {
            if key.len() != family.len() {
                return Err(Error::DimensionMismatch {
                    expected: family.len(),
                    found: key.len(),
                });
            }
            for (member, &idx) in family.members().iter().zip(&key) {
                if idx >= member.support_size() {
                    return Err(Error::IndexOutOfRange {
                        index: idx,
                        len: member.support_size(),
                    });
                }
            }
            if mass > SATURATED {
                *map.entry(key).or_insert(0.0) += mass;
            }
        }
        Ok(Coupling {
            entries: map,
            family: family.clone(),
        })
    }

    pub fn entries(&self) -> &BTreeMap<Vec<usize>, f64> {
        &self.entries
    }

    pub fn family(&self) -> &MarginalFamily {
        &self.family
    }

    pub fn masses(&self) -> impl Iterator<Item = f64> + Clone + '_ {
        self.entries.values().copied()
    }

    pub fn total_mass(&self) -> f64 {
        self.masses().sum()
    }

    /// Largest absolute gap between a coupled marginal and its member.
    pub fn marginal_deviation(&self) -> f64 {
        let mut worst = 0.0_f64;
        for (i, member) in self.family.members().iter().enumerate() {
            let mut pushed = vec![0.0; member.support_size()];
            for (key, &mass) in &self.entries {
                pushed[key[i]] += mass;
            }
            for (got, want) in pushed.iter().zip(member.masses()) {
                worst = worst.max((got - want).abs());
            }
        }
        worst
    }
}

/// Greedy coupling: repeatedly join the largest residual atom of every
/// member with mass equal to the smallest of those maxima.
///
/// Every step exhausts at least one atom, so the loop runs at most
/// `total_support` times.
pub fn greedy_coupling(family: &MarginalFamily) -> Coupling {
    let mut residual: Vec<Vec<f64>> = family.members().iter().map(Pmf::to_vec).collect();
    let mut entries = BTreeMap::new();
    for _ in 0..=family.total_support() {
        let mut key = Vec::with_capacity(residual.len());
        let mut step = f64::INFINITY;
        for row in &residual {
            // first maximum wins, i.e. the lowest storage index
            let (idx, &top) = row
                .iter()
                .enumerate()
                .fold((0, &f64::NEG_INFINITY), |best, cur| {
                    if *cur.1 > *best.1 {
                        cur
                    } else {
                        best
                    }
                });
            key.push(idx);
            step = step.min(top);
        }
        if step <= SATURATED {
            break;
        }
        for (row, &idx) in residual.iter_mut().zip(&key) {
            row[idx] -= step;
            if row[idx] <= SATURATED {
                row[idx] = 0.0;
            }
        }
        *entries.entry(key).or_insert(0.0) += step;
    }
    Coupling {
        entries,
        family: family.clone(),
    }
}

/// Joint Rényi entropy of the coupled tuple.
pub fn coupling_entropy(coupling: &Coupling, alpha: f64) -> Result<f64> {
    renyi_entropy_of(coupling.masses(), alpha)
}

/// A representation `X = g(Y, Z)`.
///
/// `yz_joint[y][z]` is the joint law of `(Y, Z)`, `z_masses` its `Z`
/// marginal and `g_table[y][z]` the label of `x` produced for that pair.
/// `z_atoms[z]` records the coupling tuple each `z` came from.
#[derive(Debug, Clone, PartialEq)]
pub struct FunctionalRepresentation {
    pub z_atoms: Vec<Vec<usize>>,
    pub z_masses: Vec<f64>,
    pub yz_joint: Vec<Vec<f64>>,
    pub g_table: Vec<Vec<usize>>,
}

impl FunctionalRepresentation {
    pub fn z_pmf(&self) -> Result<Pmf> {
        Pmf::new(&self.z_masses)
    }

    /// Marginal of `Y`.
    pub fn y_masses(&self) -> Vec<f64> {
        self.yz_joint.iter().map(|r| r.iter().sum()).collect()
    }

    pub fn z_entropy(&self, alpha: f64) -> Result<f64> {
        renyi_entropy_of(self.z_masses.iter().copied(), alpha)
    }
}

/// Turns a coupling into a representation with `Z` independent of `Y`.
///
/// `y_weights` must have one atom per family member, labelled by member
/// position.
pub fn to_functional_representation(
    coupling: &Coupling,
    y_weights: &Pmf,
) -> Result<FunctionalRepresentation> {
    let family = coupling.family();
    let m = family.len();
    if y_weights.support_size() != m {
        return Err(Error::DimensionMismatch {
            expected: m,
            found: y_weights.support_size(),
        });
    }
    let mut weights = vec![0.0; m];
    for atom in y_weights.atoms() {
        if atom.label >= m {
            return Err(Error::IndexOutOfRange {
                index: atom.label,
                len: m,
            });
        }
        weights[atom.label] = atom.mass;
    }
    let (z_atoms, z_masses): (Vec<Vec<usize>>, Vec<f64>) = coupling
        .entries()
        .iter()
        .map(|(k, &v)| (k.clone(), v))
        .unzip();
    let yz_joint = weights
        .iter()
        .map(|w| z_masses.iter().map(|z| w * z).collect())
        .collect();
    let g_table = family
        .members()
        .iter()
        .enumerate()
        .map(|(y, member)| {
            z_atoms
                .iter()
                .map(|tuple| member.atoms()[tuple[y]].label)
                .collect()
        })
        .collect();
    Ok(FunctionalRepresentation {
        z_atoms,
        z_masses,
        yz_joint,
        g_table,
    })
}

/// Diagnostics of the two representation conditions plus marginal fit.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RepresentationReport {
    /// `H(X | Y, Z)` in bits.
    pub conditional_entropy: f64,
    /// `I(Y; Z)` in bits.
    pub mutual_information: f64,
    /// Largest `|P(x | y) - P_{X|Y=y}(x)|` over all `x, y`.
    pub max_marginal_deviation: f64,
}

impl RepresentationReport {
    pub fn is_valid(&self, tol: f64) -> bool {
        self.conditional_entropy <= tol
            && self.mutual_information <= tol
            && self.max_marginal_deviation <= tol
    }
}

/// Evaluates a representation against the family it claims to represent,
/// using the explicit joint over `(X, Y, Z)`.
pub fn verify_representation(
    rep: &FunctionalRepresentation,
    family: &MarginalFamily,
) -> Result<RepresentationReport> {
    let m = family.len();
    if rep.yz_joint.len() != m || rep.g_table.len() != m {
        return Err(Error::DimensionMismatch {
            expected: m,
            found: rep.yz_joint.len().min(rep.g_table.len()),
        });
    }
    let nz = rep.z_atoms.len();
    if rep.z_masses.len() != nz {
        return Err(Error::DimensionMismatch {
            expected: nz,
            found: rep.z_masses.len(),
        });
    }
    for (row, g) in rep.yz_joint.iter().zip(&rep.g_table) {
        if row.len() != nz || g.len() != nz {
            return Err(Error::DimensionMismatch {
                expected: nz,
                found: row.len().min(g.len()),
            });
        }
    }

    // joint over (x, y, z), keyed sparsely
    let mut xyz: BTreeMap<(usize, usize, usize), f64> = BTreeMap::new();
    for (y, (row, g)) in rep.yz_joint.iter().zip(&rep.g_table).enumerate() {
        for (z, (&mass, &x)) in row.iter().zip(g).enumerate() {
            if mass > 0.0 {
                *xyz.entry((x, y, z)).or_insert(0.0) += mass;
            }
        }
    }
    let py = rep.y_masses();
    let mut pz = vec![0.0; nz];
    for row in &rep.yz_joint {
        for (slot, m) in pz.iter_mut().zip(row) {
            *slot += m;
        }
    }

    let mut conditional_entropy = 0.0;
    for (&(_, y, z), &mass) in &xyz {
        let pair = rep.yz_joint[y][z];
        conditional_entropy += mass * (pair / mass).log2();
    }

    let mut mutual_information = 0.0;
    for (y, row) in rep.yz_joint.iter().enumerate() {
        for (z, &mass) in row.iter().enumerate() {
            if mass > 0.0 {
                mutual_information += mass * (mass / (py[y] * pz[z])).log2();
            }
        }
    }

    let mut max_marginal_deviation = 0.0_f64;
    for (y, member) in family.members().iter().enumerate() {
        let mut pushed: BTreeMap<usize, f64> = BTreeMap::new();
        for (&(x, yy, _), &mass) in &xyz {
            if yy == y {
                *pushed.entry(x).or_insert(0.0) += mass / py[y];
            }
        }
        let labels: HashSet<usize> = pushed
            .keys()
            .copied()
            .chain(member.atoms().iter().map(|a| a.label))
            .collect();
        for x in labels {
            let got = pushed.get(&x).copied().unwrap_or(0.0);
            max_marginal_deviation = max_marginal_deviation.max((got - member.mass_of(x)).abs());
        }
    }

    Ok(RepresentationReport {
        conditional_entropy: conditional_entropy.max(0.0),
        mutual_information: mutual_information.max(0.0),
        max_marginal_deviation,
    })
}

/// Largest member support the exhaustive search accepts.
pub const ORACLE_MAX_SUPPORT: usize = 4;

/// Exact minimum Rényi entropy of a coupling of two small distributions.
///
/// `H_alpha` is concave in the joint masses for `alpha <= 1` and a
/// decreasing function of a convex quantity for `alpha > 1`, so in both
/// cases the minimum over the transportation polytope sits at a vertex.
/// Vertices are reached by repeatedly saturating some unsaturated
/// (row, column) cell with the smaller of the two residuals; every order of
/// saturation is explored, with partial couplings deduplicated.
pub fn brute_force_min_entropy(family: &MarginalFamily, alpha: f64) -> Result<(f64, Coupling)> {
    if family.len() != 2 {
        return Err(Error::TooLarge(format!(
            "exhaustive search needs exactly two members, got {}",
            family.len()
        )));
    }
    let rows = family.members()[0].to_vec();
    let cols = family.members()[1].to_vec();
    if rows.len() > ORACLE_MAX_SUPPORT || cols.len() > ORACLE_MAX_SUPPORT {
        return Err(Error::TooLarge(format!(
            "supports {} x {} exceed {ORACLE_MAX_SUPPORT}",
            rows.len(),
            cols.len()
        )));
    }
    if alpha.is_nan() || alpha < 0.0 {
        return Err(Error::NegativeAlpha(alpha));
    }

    let mut search = VertexSearch {
        alpha,
        seen: HashSet::new(),
        best: None,
    };
    search.explore(&rows, &cols, &mut Vec::new())?;
    let (value, cells) = search.best.expect("transportation polytope is non-empty");
    let coupling = Coupling::from_entries(
        family,
        cells.into_iter().map(|(i, j, mass)| (vec![i, j], mass)),
    )?;
    Ok((value, coupling))
}

type Cell = (usize, usize, f64);

struct VertexSearch {
    alpha: f64,
    seen: HashSet<Vec<(usize, usize, u64)>>,
    best: Option<(f64, Vec<Cell>)>,
}

impl VertexSearch {
    fn state_key(cells: &[Cell]) -> Vec<(usize, usize, u64)> {
        let mut key: Vec<_> = cells
            .iter()
            .map(|&(i, j, m)| (i, j, (m * 1e10).round() as u64))
            .collect();
        key.sort_unstable();
        key
    }

    fn explore(&mut self, rows: &[f64], cols: &[f64], cells: &mut Vec<Cell>) -> Result<()> {
        if !self.seen.insert(Self::state_key(cells)) {
            return Ok(());
        }
        let open_rows: Vec<usize> = (0..rows.len()).filter(|&i| rows[i] > SATURATED).collect();
        let open_cols: Vec<usize> = (0..cols.len()).filter(|&j| cols[j] > SATURATED).collect();
        if open_rows.is_empty() || open_cols.is_empty() {
            let value = renyi_entropy_of(cells.iter().map(|c| c.2), self.alpha)?;
            if self.best.as_ref().is_none_or(|(b, _)| value < *b) {
                self.best = Some((value, cells.clone()));
            }
            return Ok(());
        }
        for &i in &open_rows {
            for &j in &open_cols {
                let mass = rows[i].min(cols[j]);
                let mut r = rows.to_vec();
                let mut c = cols.to_vec();
                r[i] -= mass;
                c[j] -= mass;
                cells.push((i, j, mass));
                self.explore(&r, &c, cells)?;
                cells.pop();
            }
        }
        Ok(())
    }
}
