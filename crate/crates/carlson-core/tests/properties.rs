//! Structural invariants as property tests, plus a randomized brute-force
//! oracle for the Vandermonde weight/moment equivalence.

use core::f64::consts::TAU;

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use carlson_core::balayage::{sweep_atom, sweep_measure, SweepConfig};
use carlson_core::expsum::ExpSum;
use carlson_core::hardy::{
    cauchy_coefficients, discrete_criterion, lift_real_frequencies, moments_atomic,
    moments_density, vanishing_criterion, DEFAULT_GROUP_TOL, DEFAULT_TOL, DEFAULT_WEIGHT_TOL,
};
use carlson_core::measures::{Atom, BoundaryDensity, CircleMeasure, PlanarMeasure};
use carlson_core::periodize::{default_merge_tol, moment_pushforward_check, periodize};
use carlson_core::Complex64;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn polar(mag: f64, phase: f64) -> Complex64 {
    Complex64::from_polar(mag, phase)
}

/// Weight with magnitude in [1e-3, 10]: far from both the zero-drop rule and
/// the merge drop threshold, so merges are structure-preserving.
fn arb_weight() -> impl Strategy<Value = Complex64> {
    (1e-3f64..10.0, 0.0..TAU).prop_map(|(m, p)| polar(m, p))
}

/// Location off the origin, within a modest annulus.
fn arb_location() -> impl Strategy<Value = Complex64> {
    (0.05f64..3.0, 0.0..TAU).prop_map(|(m, p)| polar(m, p))
}

fn arb_circle_measure() -> impl Strategy<Value = CircleMeasure> {
    prop::collection::vec((arb_location(), arb_weight()), 1..8).prop_map(|atoms| {
        CircleMeasure::new(atoms.into_iter().map(|(l, w)| Atom::new(l, w)).collect()).unwrap()
    })
}

fn arb_planar_measure() -> impl Strategy<Value = PlanarMeasure> {
    prop::collection::vec(((-3.0f64..3.0, -10.0f64..10.0), arb_weight()), 1..7).prop_map(|atoms| {
        PlanarMeasure::new(
            atoms
                .into_iter()
                .map(|((re, im), w)| Atom::new(c(re, im), w))
                .collect(),
        )
        .unwrap()
    })
}

proptest! {
    #[test]
    fn merge_is_idempotent(m in arb_circle_measure(), tol in 1e-12f64..1e-6) {
        let once = m.merge_atoms(tol);
        let twice = once.merge_atoms(tol);
        prop_assert_eq!(once, twice);
    }

    #[test]
    fn merge_conserves_total_weight_up_to_dropped_residue(
        m in arb_circle_measure(),
        tol in 1e-12f64..1e-6,
    ) {
        let merged = m.merge_atoms(tol);
        // Replicate the clustering to count dropped clusters.
        let mut clusters: Vec<Atom> = Vec::new();
        for a in m.atoms() {
            match clusters.iter_mut().find(|cl| (cl.location - a.location).norm() <= tol) {
                Some(cl) => cl.weight += a.weight,
                None => clusters.push(*a),
            }
        }
        let dropped = clusters.len() - merged.len();
        let w_max = m.atoms().iter().map(|a| a.weight.norm()).fold(0.0, f64::max);
        let abs_sum: f64 = m.atoms().iter().map(|a| a.weight.norm()).sum();
        let bound = dropped as f64 * tol * w_max + 64.0 * f64::EPSILON * abs_sum;
        prop_assert!((m.total_weight() - merged.total_weight()).norm() <= bound);
    }

    #[test]
    fn merged_locations_are_pairwise_separated(
        m in arb_circle_measure(),
        tol in 1e-12f64..1e-6,
    ) {
        let merged = m.merge_atoms(tol);
        for (i, a) in merged.atoms().iter().enumerate() {
            for b in merged.atoms().iter().skip(i + 1) {
                prop_assert!((a.location - b.location).norm() > tol);
            }
        }
    }

    #[test]
    fn split_partitions_the_atoms(m in arb_circle_measure(), tol in 0.0f64..0.1) {
        let r = m.support_radius().unwrap();
        let (interior, boundary) = m.split_interior_boundary(r, tol);
        prop_assert_eq!(interior.len() + boundary.len(), m.len());
        for a in interior.atoms() {
            prop_assert!(a.location.norm() < r - tol);
        }
        for a in boundary.atoms() {
            prop_assert!(a.location.norm() >= r - tol);
        }
        // The union reconstitutes the measure atom-for-atom.
        let mut rebuilt: Vec<Atom> = interior.atoms().to_vec();
        rebuilt.extend_from_slice(boundary.atoms());
        rebuilt.sort_by(|x, y| x.location.norm().partial_cmp(&y.location.norm()).unwrap());
        let mut original = m.atoms().to_vec();
        original.sort_by(|x, y| x.location.norm().partial_cmp(&y.location.norm()).unwrap());
        prop_assert_eq!(rebuilt, original);
    }

    #[test]
    fn support_radius_bounds_every_atom(m in arb_circle_measure()) {
        let r = m.support_radius().unwrap();
        for a in m.atoms() {
            prop_assert!(r >= a.location.norm());
        }
        prop_assert!(m.atoms().iter().any(|a| a.location.norm() == r));
    }

    #[test]
    fn eval_is_linear_in_the_coefficients(
        re in -2.0f64..2.0,
        im in -2.0f64..2.0,
        s in arb_weight(),
    ) {
        let g = ExpSum::from_pairs(&[
            (c(0.4, 1.1), c(1.0, -0.5)),
            (c(-0.3, -2.0), c(0.25, 0.75)),
        ]).unwrap();
        let z = c(re, im);
        let lhs = g.scaled(s).unwrap().eval(z).unwrap();
        let rhs = g.eval(z).unwrap() * s;
        prop_assert!((lhs - rhs).norm() <= 1e-13 * rhs.norm().max(1e-300));
    }

    #[test]
    fn pushforward_preserves_moments(mu in arb_planar_measure()) {
        let nu = periodize(&mu, default_merge_tol(&mu)).unwrap();
        let n_max = 12usize;
        let disc = moment_pushforward_check(&mu, &nu, n_max);
        // Relative to the largest termwise magnitude sum over the orders.
        let scale = (0..=n_max)
            .map(|n| {
                mu.atoms()
                    .iter()
                    .map(|a| a.weight.norm() * (n as f64 * a.location.re).exp())
                    .sum::<f64>()
            })
            .fold(0.0, f64::max);
        prop_assert!(disc <= 1e-9 * (1.0 + scale));
    }

    #[test]
    fn full_turn_shifts_periodize_identically(
        re in -2.0f64..2.0,
        im in -3.1f64..3.1,
        w in arb_weight(),
        k in -10i32..=10,
    ) {
        let base = PlanarMeasure::new(vec![Atom::new(c(re, im), w)]).unwrap();
        let shifted = PlanarMeasure::new(vec![Atom::new(c(re, im + TAU * k as f64), w)]).unwrap();
        let tol = default_merge_tol(&base);
        let na = periodize(&base, tol).unwrap();
        let nb = periodize(&shifted, tol).unwrap();
        prop_assert!(na.approx_eq(&nb, tol, tol * 10.0));
    }

    #[test]
    fn periodize_is_additive(mu1 in arb_planar_measure(), mu2 in arb_planar_measure()) {
        let mut union_atoms = mu1.atoms().to_vec();
        union_atoms.extend_from_slice(mu2.atoms());
        let union = PlanarMeasure::new(union_atoms).unwrap();
        let tol = default_merge_tol(&union);

        let direct = periodize(&union, tol).unwrap();
        let n1 = periodize(&mu1, tol).unwrap();
        let n2 = periodize(&mu2, tol).unwrap();
        let mut concat = n1.atoms().to_vec();
        concat.extend_from_slice(n2.atoms());
        let recombined = CircleMeasure::new(concat).unwrap().merge_atoms(tol);

        let scale = direct.atoms().iter().map(|a| a.weight.norm()).fold(1.0, f64::max);
        prop_assert!(direct.approx_eq(&recombined, tol * 2.0, 1e-12 * scale));
    }

    #[test]
    fn sweeping_is_linear_in_the_weights(
        a1 in (0.0f64..0.9, 0.0..TAU).prop_map(|(m, p)| polar(m, p)),
        a2 in (0.0f64..0.9, 0.0..TAU).prop_map(|(m, p)| polar(m, p)),
        w1 in arb_weight(),
        w2 in arb_weight(),
    ) {
        let cfg = SweepConfig::with_grid(64).unwrap();
        let nu = CircleMeasure::new(vec![
            Atom::new(a1 + c(0.001, 0.0), w1),
            Atom::new(a2 + c(0.0, 0.001), w2),
        ]);
        prop_assume!(nu.is_ok());
        let nu = nu.unwrap();
        prop_assume!(nu.len() == 2);
        prop_assume!(nu.atoms().iter().all(|a| a.location.norm() < 0.95));

        let combined = sweep_measure(&nu, 1.0, &cfg).unwrap();
        let ha = sweep_atom(nu.atoms()[0].location, 1.0, &cfg).unwrap().scaled(w1).unwrap();
        let hb = sweep_atom(nu.atoms()[1].location, 1.0, &cfg).unwrap().scaled(w2).unwrap();
        let sum = ha.pointwise_add(&hb).unwrap();
        for (x, y) in combined.samples().iter().zip(sum.samples().iter()) {
            prop_assert!((x - y).norm() <= 1e-12 * y.norm().max(1.0));
        }
    }

    #[test]
    fn swept_atom_reproduces_monomials(
        a in (0.0f64..0.95, 0.0..TAU).prop_map(|(m, p)| polar(m, p)),
        n in 0usize..=256,
    ) {
        let cfg = SweepConfig::with_grid(1024).unwrap();
        let h = sweep_atom(a, 1.0, &cfg).unwrap();
        let quad = moments_density(&h, n).unwrap().values()[n];
        let exact = a.powu(n as u32);
        // Always within the module's own (1 + r^n)-scaled budget.
        prop_assert!((quad - exact).norm() <= 1e-9 * 2.0);
        // Where the double format can express it, also strictly relative:
        // low orders of atoms that are not too small.
        if n <= 16 && a.norm() >= 0.5 {
            prop_assert!((quad - exact).norm() <= 1e-9 * exact.norm());
        }
    }

    #[test]
    fn criterion_verdicts_ignore_global_scaling(
        m in arb_circle_measure(),
        s_mag in prop::sample::select(vec![1e-6f64, 1e-3, 1e3, 1e6]),
        s_phase in 0.0f64..TAU,
    ) {
        let s = polar(s_mag, s_phase);
        let scaled = CircleMeasure::new(
            m.atoms().iter().map(|a| Atom::new(a.location, a.weight * s)).collect(),
        ).unwrap();
        prop_assert_eq!(
            vanishing_criterion(&m, DEFAULT_TOL).verdict,
            vanishing_criterion(&scaled, DEFAULT_TOL).verdict
        );
    }

    #[test]
    fn zeroth_coefficient_is_bitwise_the_zeroth_moment(
        samples in prop::collection::vec((-5.0f64..5.0, -5.0f64..5.0), 8..64),
        radius in 0.25f64..4.0,
    ) {
        let h = BoundaryDensity::new(
            radius,
            samples.into_iter().map(|(re, im)| c(re, im)).collect(),
        ).unwrap();
        let n_max = h.grid_size() / 4;
        let m = moments_density(&h, n_max).unwrap();
        let a = cauchy_coefficients(&h, n_max).unwrap();
        prop_assert_eq!(m.values()[0], a.values()[0]);
    }
}

/// Brute-force Vandermonde oracle: over measures with well-separated atoms,
/// "all merged weights vanish" and "the first K moments vanish" are the same
/// predicate, in both directions. Moments are computed here by naive power
/// sums, independent of the library's log-scaled accumulation.
#[test]
fn vandermonde_weight_moment_equivalence() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0001);
    for round in 0..30 {
        let k = rng.gen_range(1..=8usize);
        let locations = draw_separated_locations(&mut rng, k, 0.3);
        let vanishing = round % 2 == 0;

        let mut atoms = Vec::new();
        for &loc in &locations {
            let w = polar(rng.gen_range(0.2..1.0), rng.gen_range(0.0..TAU));
            if vanishing {
                atoms.push(Atom::new(loc, w));
                atoms.push(Atom::new(loc, -w));
            } else {
                atoms.push(Atom::new(loc, w));
            }
        }
        let nu = CircleMeasure::new(atoms).unwrap();
        let scale = nu
            .atoms()
            .iter()
            .map(|a| a.weight.norm())
            .fold(0.0, f64::max);

        // Implementation side: merged weights.
        let report = vanishing_criterion(&nu, 1e-10);
        let weights_vanish = report
            .merged_weights
            .iter()
            .all(|a| a.weight.norm() <= 1e-10 * scale);

        // Oracle side: naive power moments of the raw atom list.
        let mut moments_vanish = true;
        for n in 0..k {
            let mut m = c(0.0, 0.0);
            for a in nu.atoms() {
                let mut p = c(1.0, 0.0);
                for _ in 0..n {
                    p *= a.location;
                }
                m += a.weight * p;
            }
            if m.norm() > 1e-8 * scale {
                moments_vanish = false;
            }
        }

        assert_eq!(
            weights_vanish, moments_vanish,
            "round {round}: K = {k}, vanishing = {vanishing}"
        );
        assert_eq!(report.verdict, weights_vanish);
    }
}

fn draw_separated_locations(rng: &mut ChaCha8Rng, k: usize, min_sep: f64) -> Vec<Complex64> {
    let mut locations: Vec<Complex64> = Vec::new();
    while locations.len() < k {
        let cand = polar(rng.gen_range(0.2..1.0), rng.gen_range(0.0..TAU));
        if locations.iter().all(|l| (l - cand).norm() >= min_sep) {
            locations.push(cand);
        }
    }
    locations
}

/// Mini equivalence corpus: the mod-2π cluster criterion, the periodized
/// pipeline, and the direct integer scan agree on random real-frequency sums
/// and on constructed vanishing ones.
#[test]
fn three_criteria_agree_on_a_random_corpus() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0002);
    for round in 0..60 {
        let constructed_vanishing = round % 3 == 0;
        let g = random_real_frequency_sum(&mut rng, constructed_vanishing);

        let discrete = discrete_criterion(&g, DEFAULT_GROUP_TOL, DEFAULT_WEIGHT_TOL)
            .unwrap()
            .verdict;
        let lifted = lift_real_frequencies(&g).unwrap();
        let nu = periodize(
            &lifted.spectral_measure(),
            default_merge_tol(&lifted.spectral_measure()),
        )
        .unwrap();
        let pipeline = vanishing_criterion(&nu, DEFAULT_TOL).verdict;
        let direct = lifted.direct_integer_vanishing(30, 1e-9).vanishes;

        assert_eq!(discrete, pipeline, "round {round}");
        assert_eq!(discrete, direct, "round {round}");
        if constructed_vanishing {
            assert!(discrete, "constructed sum must vanish (round {round})");
        }

        // Atomic moments of the merged measure match the criterion verdict.
        let moments = moments_atomic(&nu, 8);
        let coeff_scale: f64 = g.terms().iter().map(|t| t.coefficient.norm()).sum();
        if pipeline {
            assert!(moments.max_abs() <= 1e-8 * (1.0 + coeff_scale));
        }
    }
}

/// When the spectral band sits strictly inside the fundamental strip
/// (−π, π) and the circle measure's support avoids the ray arg = −π, no
/// cluster structure is available: the criterion can answer true only
/// through outright weight cancellation. Sums built from singleton clusters
/// with weights bounded away from zero must therefore always fail it.
#[test]
fn strict_band_forces_weight_cancellation() {
    use carlson_core::carlson::{arg_support_range, spectral_band};
    use core::f64::consts::PI;

    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0003);
    for round in 0..50 {
        let k = rng.gen_range(1..=6usize);
        let mut bases: Vec<f64> = Vec::new();
        while bases.len() < k {
            let cand = rng.gen_range(-PI + 0.1..PI - 0.1);
            if bases.iter().all(|b| (b - cand).abs() >= 0.05) {
                bases.push(cand);
            }
        }
        let pairs: Vec<(Complex64, Complex64)> = bases
            .iter()
            .map(|&b| {
                (
                    c(0.0, b),
                    polar(rng.gen_range(0.05..1.0), rng.gen_range(0.0..TAU)),
                )
            })
            .collect();
        let g = ExpSum::from_pairs(&pairs).unwrap();
        let mu = g.spectral_measure();

        let band = spectral_band(&mu).unwrap();
        assert!(-PI < band.lower && band.upper < PI, "round {round}");

        let nu = periodize(&mu, default_merge_tol(&mu)).unwrap();
        let args = arg_support_range(&nu).unwrap();
        assert!(args.min > -PI && args.max < PI, "round {round}");

        // All merged weights are the nonzero coefficients themselves.
        let report = vanishing_criterion(&nu, DEFAULT_TOL);
        assert!(!report.verdict, "round {round}");
        assert!(report
            .merged_weights
            .iter()
            .all(|a| a.weight.norm() >= 0.05));
    }
}

/// Random sum with frequency clusters separated by at least 0.05 on the
/// circle and every nonzero cluster sum at least 0.05 in magnitude, so each
/// instance is decisively vanishing or decisively not.
fn random_real_frequency_sum(rng: &mut ChaCha8Rng, vanishing: bool) -> ExpSum {
    loop {
        let k = rng.gen_range(1..=5usize);
        let mut bases: Vec<f64> = Vec::new();
        while bases.len() < k {
            let cand = rng.gen_range(-core::f64::consts::PI..core::f64::consts::PI);
            let ok = bases.iter().all(|b| {
                let d = (b - cand).abs();
                d.min(TAU - d) >= 0.05
            });
            if ok {
                bases.push(cand);
            }
        }
        let mut pairs: Vec<(Complex64, Complex64)> = Vec::new();
        let mut sums: Vec<Complex64> = Vec::new();
        for &base in &bases {
            let coeff = polar(rng.gen_range(0.3..1.0), rng.gen_range(0.0..TAU));
            let shift = TAU * rng.gen_range(-1i32..=1) as f64;
            pairs.push((c(base + shift, 0.0), coeff));
            if vanishing {
                let partner = if base < 0.0 { base + TAU } else { base - TAU };
                pairs.push((c(partner, 0.0), -coeff));
                sums.push(c(0.0, 0.0));
            } else {
                sums.push(coeff);
            }
        }
        if sums.iter().all(|s| s.norm() == 0.0 || s.norm() >= 0.05) {
            return ExpSum::from_pairs(&pairs).unwrap();
        }
    }
}
