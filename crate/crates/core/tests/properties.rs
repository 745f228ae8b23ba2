use num::{Signed, Zero};
use proptest::prelude::*;

use singvol::cone::PolarizedCone;
use singvol::envelope::{nef_envelope_trace, volume, zariski_oracle};
use singvol::lattice::{add, leq, q, qi, sub, QVector, Rational, SymForm};
use singvol::random::{random_divisor, random_graph, random_step, rng};
use singvol::tower::{blow_up, pullback, pushforward};

fn small_rational() -> impl Strategy<Value = Rational> {
    (-12i64..=12, 1i64..=4).prop_map(|(p, d)| q(p, d))
}

fn vector(len: usize) -> impl Strategy<Value = QVector> {
    proptest::collection::vec(small_rational(), len)
}

fn form_and_vectors() -> impl Strategy<Value = (SymForm, QVector, QVector, QVector)> {
    (1usize..=4).prop_flat_map(|n| {
        (proptest::collection::vec(-4i64..=4, n * n), vector(n), vector(n), vector(n)).prop_map(
            move |(raw, a, b, c)| {
                let m: Vec<Vec<Rational>> = (0..n)
                    .map(|i| (0..n).map(|j| qi(raw[i.min(j) * n + i.max(j)])).collect())
                    .collect();
                (SymForm::new(m).unwrap(), a, b, c)
            },
        )
    })
}

/// All of {-3..3}^r except zero.
fn lattice_sample(r: usize) -> Vec<QVector> {
    let mut out = vec![vec![]];
    for _ in 0..r {
        out = out
            .into_iter()
            .flat_map(|v: QVector| {
                (-3..=3).map(move |x| {
                    let mut w = v.clone();
                    w.push(qi(x));
                    w
                })
            })
            .collect();
    }
    out.retain(|v| v.iter().any(|x| !x.is_zero()));
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn pair_is_symmetric_and_bilinear((m, a, b, c) in form_and_vectors(), s in small_rational()) {
        prop_assert_eq!(m.pair(&a, &b).unwrap(), m.pair(&b, &a).unwrap());
        let lhs = m.pair(&add(&a, &singvol::lattice::scale(&s, &c)), &b).unwrap();
        let rhs = m.pair(&a, &b).unwrap() + &s * m.pair(&c, &b).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn solve_round_trips((m, x, _, _) in form_and_vectors()) {
        match m.solve(&m.apply(&x).unwrap()) {
            Ok(y) => prop_assert_eq!(y, x),
            Err(_) => prop_assert!(m.determinant().is_zero()),
        }
    }

    #[test]
    fn definiteness_agrees_with_lattice_sample((m, _, _, _) in form_and_vectors()) {
        let sample = lattice_sample(m.dim());
        let all_negative = sample.iter().all(|x| m.pair(x, x).unwrap().is_negative());
        if m.is_negative_definite() {
            prop_assert!(all_negative);
        }
        if !all_negative {
            prop_assert!(!m.is_negative_definite());
        }
    }

    #[test]
    fn pullback_is_annihilating(seed in any::<u64>()) {
        let g = random_graph(&mut rng(seed), 6);
        let b = g.mumford_pullback_canonical().unwrap();
        let kb = add(&g.canonical_intersections(), &g.intersections(&b).unwrap());
        prop_assert!(kb.iter().all(Zero::is_zero));
        let r = g.discrepancy_report().unwrap();
        prop_assert_eq!(add(&r.b, &r.ell), vec![qi(1); g.len()]);
        prop_assert_eq!(r.is_lc, r.lc_mod_support.is_empty());
        if g.is_minimal() {
            prop_assert!(b.iter().all(|x| !x.is_negative()));
        }
        if !r.is_lc {
            prop_assert!(b.iter().any(|x| x > &qi(1)));
        }
    }

    #[test]
    fn envelope_laws(seed in any::<u64>()) {
        let mut rng = rng(seed);
        let g = random_graph(&mut rng, 5);
        let a = random_divisor(&mut rng, g.len(), 3);
        let z = nef_envelope_trace(&g, &a).unwrap();
        prop_assert_eq!(&z, &zariski_oracle(&g, &a, 12).unwrap());
        prop_assert_eq!(add(&z.p, &z.n), a.clone());
        prop_assert!(z.n.iter().all(|x| !x.is_negative()));
        let p_dot = g.intersections(&z.p).unwrap();
        prop_assert!(p_dot.iter().all(|x| !x.is_negative()));
        prop_assert!(z.active.iter().all(|&j| p_dot[j].is_zero()));
        prop_assert!(g.form().pair(&z.p, &z.n).unwrap().is_zero());

        // local maximality
        let eps = q(1, 1000);
        for i in 0..g.len() {
            let mut bumped = z.p.clone();
            bumped[i] += &eps;
            let nef = g.intersections(&bumped).unwrap().iter().all(|x| !x.is_negative());
            prop_assert!(!leq(&bumped, &a) || !nef);
        }

        // monotone in A
        let shift = random_divisor(&mut rng, g.len(), 2).into_iter().map(|x| x.abs()).collect::<Vec<_>>();
        let bigger = add(&a, &shift);
        let z2 = nef_envelope_trace(&g, &bigger).unwrap();
        prop_assert!(leq(&z.p, &z2.p));

        // effective A has zero envelope
        let effective: QVector = a.iter().map(|x| x.abs()).collect();
        let z3 = nef_envelope_trace(&g, &effective).unwrap();
        prop_assert!(z3.p.iter().all(Zero::is_zero));
    }

    #[test]
    fn volume_is_non_negative_and_vanishes_on_lc(seed in any::<u64>()) {
        let g = random_graph(&mut rng(seed), 7);
        let v = volume(&g).unwrap();
        prop_assert!(!v.volume.is_negative());
        prop_assert_eq!(v.volume.is_zero(), g.is_log_canonical().unwrap());
    }

    #[test]
    fn blowups_preserve_volume(seed in any::<u64>()) {
        let mut rng = rng(seed);
        let g = random_graph(&mut rng, 6);
        let step = random_step(&mut rng, &g);
        let up = blow_up(&g, &step).unwrap();
        prop_assert_eq!(up.len(), g.len() + 1);
        prop_assert!(up.form().is_negative_definite());
        prop_assert_eq!(volume(&up).unwrap().volume, volume(&g).unwrap().volume);
        let d = random_divisor(&mut rng, g.len(), 3);
        prop_assert_eq!(pushforward(&up, &pullback(&g, &step, &d).unwrap(), &step).unwrap(), d);
        let a = g.log_discrepancy_divisor().unwrap();
        let growth = sub(&up.log_discrepancy_divisor().unwrap(), &pullback(&g, &step, &a).unwrap());
        prop_assert!(growth.iter().all(|x| !x.is_negative()));
    }

    #[test]
    fn valuation_laws_on_ruled_surface(c0 in -6i64..=6, f in -6i64..=6, k in 1u64..=60, m in 1u64..=12) {
        let cone = PolarizedCone::ruled_surface();
        let d = vec![qi(c0), qi(f)];
        let neg: QVector = d.iter().map(|x| -x).collect();
        let limit = cone.valuation_limit(&d).unwrap();
        let vk = cone.natural_valuation(&d, k).unwrap();
        let ratio = q(vk as i64, k as i64);
        prop_assert!(ratio >= limit);
        prop_assert!(&ratio - &limit <= q(1, k as i64));
        let v1 = cone.natural_valuation(&d, 1).unwrap();
        prop_assert!(m * v1 >= cone.natural_valuation(&d, m).unwrap());
        let sum = v1 as i128 + cone.natural_valuation(&neg, 1).unwrap() as i128;
        prop_assert!(sum >= 0);
        prop_assert_eq!(cone.pseff().min_shift(cone.h(), &d), limit);
    }

    #[test]
    fn cone_and_graph_volumes_agree(genus in 0u32..=6, degree in 1i64..=8) {
        prop_assume!(!(genus == 0 && degree == 1));
        let g = singvol::cone::curve_cone_graph(genus, degree).unwrap();
        let vol = volume(&g).unwrap().volume;
        let cone = PolarizedCone::curve(genus, degree).unwrap();
        let a = cone.slope_without_boundary().unwrap();
        prop_assert_eq!(&a, &q(2 * genus as i64 - 2, degree));
        if a.is_positive() {
            prop_assert_eq!(vol, cone.vol_upper_bound(&a).unwrap());
            prop_assert_eq!(g.log_discrepancy_divisor().unwrap(), vec![cone.cone_log_discrepancy(&a).unwrap()]);
        } else {
            prop_assert!(vol.is_zero());
        }
    }
}
