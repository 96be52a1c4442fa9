//! Randomized checks of order-theoretic properties, driven by seeded
//! generators rather than shrinking strategies so that the interesting
//! (rare) cases can be constructed directly.

mod support;

use mec_core::{
    compare_bounds, greedy_coupling, majorization_meet, majorizes, qstar_greedy,
    spectrum_dominates, MarginalFamily, Pmf,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const ALPHAS: [f64; 5] = [0.0, 0.5, 1.0, 2.0, 10.0];

/// Merges random groups of atoms; `base` is majorized by and spectrum-below
/// every coarsening.
fn coarsen<R: Rng>(rng: &mut R, base: &[f64]) -> Vec<f64> {
    let groups = rng.random_range(1..=base.len());
    let mut out = vec![0.0; groups];
    for (i, &m) in base.iter().enumerate() {
        let slot = if i < groups {
            i
        } else {
            rng.random_range(0..groups)
        };
        out[slot] += m;
    }
    out
}

/// Moves mass from a smaller atom onto a larger one.
fn reverse_robin_hood<R: Rng>(rng: &mut R, base: &[f64]) -> Vec<f64> {
    let mut out = base.to_vec();
    if out.len() < 2 {
        return out;
    }
    out.sort_by(|a, b| b.total_cmp(a));
    let rich = rng.random_range(0..out.len() - 1);
    let poor = rng.random_range(rich + 1..out.len());
    let shift = out[poor] * rng.random::<f64>();
    out[rich] += shift;
    out[poor] -= shift;
    out
}

#[test]
fn meet_is_greatest_lower_bound() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut hits = 0;
    let mut draws = 0;
    while hits < 1000 {
        draws += 1;
        assert!(draws < 200_000, "only {hits} common lower bounds found");
        let fam = support::random_family(&mut rng, 3, 4);
        let q = support::random_pmf(&mut rng, 6);
        if fam.members().iter().all(|m| majorizes(m, &q)) {
            hits += 1;
            assert!(
                majorizes(&majorization_meet(&fam), &q),
                "{q:?} is below every member of {fam:?} but not below the meet"
            );
        }
    }
}

#[test]
fn qstar_majorizes_every_feasible_distribution() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    let mut checked = 0;
    for _ in 0..400 {
        let fam = support::random_family(&mut rng, 4, 5);
        let qstar = qstar_greedy(&fam);
        let mut candidates =
            vec![Pmf::new(&greedy_coupling(&fam).masses().collect::<Vec<_>>()).unwrap()];
        for _ in 0..3 {
            let refined = support::random_refinement(&mut rng, &qstar.to_vec(), 3);
            candidates.push(Pmf::new(&refined).unwrap());
        }
        for _ in 0..10 {
            candidates.push(support::random_pmf(&mut rng, 10));
        }
        for q in candidates {
            if fam.members().iter().all(|m| spectrum_dominates(&q, m)) {
                checked += 1;
                assert!(
                    majorizes(&qstar, &q),
                    "Q* fails to majorize feasible {q:?} for {fam:?}"
                );
                for alpha in ALPHAS {
                    assert!(
                        qstar.renyi_entropy(alpha).unwrap()
                            <= q.renyi_entropy(alpha).unwrap() + 1e-9
                    );
                }
            }
        }
    }
    assert!(checked >= 1600, "only {checked} feasible candidates");
}

#[test]
fn spectrally_minimal_member_collapses_all_bounds() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for _ in 0..300 {
        let base = support::random_masses(&mut rng, 6);
        let mut members = vec![Pmf::new(&base).unwrap()];
        for _ in 0..rng.random_range(0..4) {
            members.push(Pmf::new(&coarsen(&mut rng, &base)).unwrap());
        }
        let fam = MarginalFamily::new(members).unwrap();
        for alpha in ALPHAS {
            let r = compare_bounds(&fam, alpha, false).unwrap();
            for (name, v) in [
                ("qstar", r.qstar_bound),
                ("k_alpha", r.k_alpha_bound),
                ("meet", r.meet_bound),
            ] {
                assert!(
                    (v - r.sup_bound).abs() < 1e-9,
                    "{name} {v} != sup {} at alpha {alpha} for {fam:?}",
                    r.sup_bound
                );
            }
        }
    }
}

#[test]
fn majorization_minimal_member_pins_meet() {
    let mut rng = ChaCha8Rng::seed_from_u64(14);
    for _ in 0..300 {
        let base = support::random_masses(&mut rng, 6);
        let mut members = vec![Pmf::new(&base).unwrap()];
        for _ in 0..rng.random_range(1..4) {
            let mut other = reverse_robin_hood(&mut rng, &base);
            if rng.random_bool(0.5) {
                other = coarsen(&mut rng, &other);
            }
            members.push(Pmf::new(&other).unwrap());
        }
        let fam = MarginalFamily::new(members).unwrap();
        for alpha in ALPHAS {
            let r = compare_bounds(&fam, alpha, false).unwrap();
            assert!(
                (r.meet_bound - r.sup_bound).abs() < 1e-9,
                "meet {} != sup {} at alpha {alpha}",
                r.meet_bound,
                r.sup_bound
            );
        }
    }
}

#[test]
fn qstar_atom_count_is_bounded() {
    let mut rng = ChaCha8Rng::seed_from_u64(15);
    for _ in 0..2000 {
        let fam = support::random_family(&mut rng, 5, 8);
        let q = qstar_greedy(&fam);
        assert!(q.support_size() <= 2 * fam.total_support());
        assert!(fam.members().iter().all(|m| spectrum_dominates(&q, m)));
    }
}

#[test]
fn greedy_coupling_keeps_marginals() {
    let mut rng = ChaCha8Rng::seed_from_u64(16);
    for _ in 0..1000 {
        let fam = support::random_family(&mut rng, 4, 8);
        let c = greedy_coupling(&fam);
        assert!(c.marginal_deviation() <= 1e-9);
        assert!(c.entries().len() <= fam.total_support());
        assert!((c.total_mass() - 1.0).abs() <= 1e-9);
    }
}

#[test]
fn qstar_feasible_with_tiny_closing_atom() {
    // the last atom of Q* is 1 minus a sum near 1; its relative error is
    // large enough to shift its information by more than 1e-12 bits
    let fam = MarginalFamily::from_raw(&[
        vec![0.5, 0.3, 0.2],
        vec![0.15, 0.15, 0.15, 0.15, 0.15, 0.1, 0.1, 0.05],
        vec![
            0.2495562476104421,
            0.21769199516902735,
            0.20920696992587615,
            0.17172390624181594,
            0.15157262940345567,
            0.00024825164938270647,
        ],
    ])
    .unwrap();
    let q = qstar_greedy(&fam);
    assert_eq!(q.support_size(), 9);
    assert!(fam.members().iter().all(|m| spectrum_dominates(&q, m)));
}
