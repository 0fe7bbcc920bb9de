use addprod_core::addchar::{additive_char_poly, expected_charpoly_signing, freelike_walk_count, ExpectedPoly, SigningMode};
use addprod_core::free::{free_convolution_right_edge, SpectralMeasure};
use addprod_core::graph::local_cover_ok;
use addprod_core::lift::{additive_lift, spectrum_split, LiftEncoding};
use addprod_core::poly::{certify_real_rooted, count_roots_above, power_sums, SturmChain};
use addprod_core::product::build_ball;
use addprod_core::rng;
use addprod_core::selftest::{random_potentials, random_sum_graph};
use addprod_core::{BigInt, BigRational, ExactPolynomial};
use proptest::prelude::*;

fn rat(p: i64, q: i64) -> BigRational {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 48, ..ProptestConfig::default() })]

    #[test]
    fn additive_poly_is_real_rooted_and_matches_signings(seed in any::<u64>()) {
        let s = random_sum_graph(&mut rng::stream(seed, 0), 5, 3);
        let p = additive_char_poly(&s).unwrap();
        prop_assert!(p.is_monic());
        prop_assert_eq!(p.degree(), Some(s.n()));
        prop_assert!(certify_real_rooted(&p).unwrap().real_rooted);
        let ExpectedPoly::Exact(q) = expected_charpoly_signing(&s, SigningMode::exact()).unwrap() else {
            panic!("exact mode");
        };
        prop_assert_eq!(p, q);
    }

    #[test]
    fn power_sums_count_freelike_walks(seed in any::<u64>()) {
        let s = random_sum_graph(&mut rng::stream(seed, 1), 4, 3);
        let p = additive_char_poly(&s).unwrap();
        for (i, pk) in power_sums(&p, 6).unwrap().into_iter().enumerate() {
            prop_assert_eq!(pk, BigRational::from_integer(freelike_walk_count(&s, i + 1).unwrap()));
        }
    }

    #[test]
    fn lift_spectrum_is_old_plus_new(seed in any::<u64>(), big_n in 1usize..=4) {
        let mut r = rng::stream(seed, 2);
        let s = random_sum_graph(&mut r, 4, 3);
        let qs = random_potentials(&mut r, &s, big_n);
        let split = spectrum_split(&s, &qs, big_n).unwrap();
        prop_assert_eq!(split.old.len() + split.new.len(), s.n() * big_n);
        prop_assert!(split.max_deviation <= 1e-8);
        let lifted = additive_lift(&s, &qs, big_n).unwrap();
        prop_assert_eq!(lifted.c(), s.c() * big_n);
        for (j, b) in lifted.atoms().iter().enumerate() {
            prop_assert_eq!(b.edges().len(), s.atom(j / big_n).edges().len());
        }
        let base = s.multigraph();
        let lift = lifted.multigraph();
        for v in 0..lift.n() {
            prop_assert_eq!(lift.degree(v), base.degree(v / big_n));
        }
    }

    #[test]
    fn ball_interior_covers_the_sum_graph(seed in any::<u64>()) {
        let s = random_sum_graph(&mut rng::stream(seed, 3), 4, 3);
        let ball = build_ball(&s, 3).unwrap();
        let f = ball.projection(&s);
        let h = s.multigraph();
        for i in 0..ball.len() {
            if ball.distance(i) < ball.radius() {
                prop_assert!(local_cover_ok(&f, ball.graph(), &h, i).unwrap());
            }
        }
    }

    #[test]
    fn encoding_hex_round_trips(c in 1usize..4, n in 1usize..6, big_n in 1usize..6, seed in any::<u64>()) {
        use rand::Rng;
        let mut r = rng::stream(seed, 4);
        let len = LiftEncoding::zeros(c, n, big_n).bits.len();
        let bits: Vec<bool> = (0..len).map(|_| r.random_bool(0.5)).collect();
        let e = LiftEncoding::from_bits(c, n, big_n, bits).unwrap();
        prop_assert_eq!(LiftEncoding::from_hex(c, n, big_n, &e.to_hex()).unwrap(), e.clone());
        for q in e.potentials() {
            for v in 0..n {
                let mut img = q.get(v).images().to_vec();
                img.sort_unstable();
                prop_assert_eq!(img, (0..big_n).collect::<Vec<_>>());
            }
        }
    }

    #[test]
    fn sturm_counts_integer_roots(roots in prop::collection::vec(-6i64..=6, 1..7), t in -7i64..=7) {
        let mut p = ExactPolynomial::one();
        for &r in &roots {
            p = p.mul(&ExactPolynomial::from_desc_ints(&[1, -r]));
        }
        let above = roots.iter().filter(|&&r| r > t).count();
        prop_assert_eq!(count_roots_above(&p, &rat(t, 1)).unwrap(), above);
        let cert = certify_real_rooted(&p).unwrap();
        prop_assert!(cert.real_rooted);
        prop_assert_eq!(cert.real_roots, roots.len());
        let mut distinct = roots.clone();
        distinct.sort_unstable();
        distinct.dedup();
        prop_assert_eq!(SturmChain::new(&p.squarefree_part().unwrap()).unwrap().count(), distinct.len());
    }

    #[test]
    fn division_identity(a in prop::collection::vec(-9i64..=9, 1..8), b in prop::collection::vec(-9i64..=9, 1..5)) {
        let p = ExactPolynomial::from_desc_ints(&a);
        let d = ExactPolynomial::from_desc_ints(&b);
        prop_assume!(!d.is_zero());
        let (q, r) = p.div_rem(&d).unwrap();
        prop_assert_eq!(q.mul(&d).add(&r), p);
        prop_assert!(r.is_zero() || r.degree() < d.degree());
    }

    #[test]
    fn inverse_cauchy_inverts(locs in prop::collection::vec(-5.0f64..5.0, 1..5), gap in 0.01f64..50.0) {
        let k = locs.len() as i64;
        let mu = SpectralMeasure::new(locs.iter().map(|&x| (x, rat(1, k))).collect()).unwrap();
        let y = mu.right_edge() + gap;
        let w = mu.cauchy(y).unwrap();
        let back = mu.inverse_cauchy(w).unwrap();
        prop_assert!((back - y).abs() <= 1e-9 * y.abs().max(1.0), "{} vs {}", back, y);
    }

    #[test]
    fn free_edge_dominates_and_ignores_order(choice in prop::collection::vec(0usize..3, 2..5)) {
        let pick = |i: usize| match i {
            0 => SpectralMeasure::k2(),
            1 => SpectralMeasure::c3(),
            _ => SpectralMeasure::c4(),
        };
        let ms: Vec<SpectralMeasure> = choice.iter().map(|&i| pick(i)).collect();
        let edge = free_convolution_right_edge(&ms).unwrap();
        let widest = ms.iter().map(SpectralMeasure::right_edge).fold(f64::MIN, f64::max);
        prop_assert!(edge >= widest - 1e-9);
        prop_assert!(edge <= ms.iter().map(SpectralMeasure::right_edge).sum::<f64>() + 1e-9);
        let mut rev = ms.clone();
        rev.reverse();
        prop_assert!((free_convolution_right_edge(&rev).unwrap() - edge).abs() < 1e-9);
    }
}
