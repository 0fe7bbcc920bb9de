use addprod_core::addchar::{additive_char_poly, matching_poly};
use addprod_core::free::{closed_forms, permutation_sum_lambda2};
use addprod_core::graph::{complete_edges, cycle_edges, find_isomorphism, neighbor_lists, path_edges, Atom, SumGraph};
use addprod_core::lift::{additive_lift, lift_adjacency, rep_invariance_check, spectrum_split, LiftEncoding, Potential, RepKind};
use addprod_core::perm::Permutation;
use addprod_core::presets::Preset;
use addprod_core::product::{free_product_atoms, specrad_bracket};
use addprod_core::search::{greedy_descent, quasi_ramanujan_pipeline, RhoProvenance, SearchOptions};
use addprod_core::{symmetric_spectrum, ExactPolynomial};

fn sorted(mut v: Vec<f64>) -> Vec<f64> {
    v.sort_by(|a, b| b.total_cmp(a));
    v
}

fn close(a: &[f64], b: &[f64], tol: f64) -> bool {
    a.len() == b.len() && a.iter().zip(b).all(|(x, y)| (x - y).abs() <= tol)
}

#[test]
fn bracket_on_the_integer_line() {
    let s = SumGraph::edge_atoms(4, &cycle_edges(4)).unwrap();
    let b = specrad_bracket(&s, 30, 400).unwrap();
    assert!((b.upper - 2.0).abs() < 1e-12);
    assert!(b.lower <= 2.0 && b.lower > 1.98, "{}", b.lower);
}

#[test]
fn bracket_on_the_cubic_tree() {
    let b = specrad_bracket(&Preset::T3.sum_graph(), 8, 400).unwrap();
    assert!(b.lower >= 2.7 && b.lower <= 8f64.sqrt(), "{}", b.lower);
    assert!((b.upper - 3.0).abs() < 1e-12);
}

#[test]
fn bracket_on_three_squares() {
    let b = specrad_bracket(&Preset::C4C4C4.sum_graph(), 7, 400).unwrap();
    let rho = closed_forms::c4c4c4();
    assert!(b.lower <= rho && rho <= b.upper);
    let e = b.extrapolated.unwrap();
    assert!((e - rho).abs() < 0.2, "{e}");
}

#[test]
fn disconnected_sum_factors() {
    // additive polynomial of a disjoint union is the product, checked on
    // the un-validated pieces
    let a = SumGraph::from_edge_lists(3, &[cycle_edges(3)]).unwrap();
    let b = SumGraph::edge_atoms(4, &cycle_edges(4)).unwrap();
    let u = a.disjoint_union(&b).unwrap();
    assert_eq!(additive_char_poly(&u).unwrap(), additive_char_poly(&a).unwrap().mul(&additive_char_poly(&b).unwrap()));
    assert_eq!(matching_poly(3, &[]), ExactPolynomial::from_desc_ints(&[1, 0, 0, 0]));
}

fn transposition_at(n: usize, big_n: usize, v: usize) -> Potential {
    let mut q = Potential::identity(n, big_n);
    q.perms[v] = Permutation::transposition(big_n, 0, 1);
    q
}

#[test]
fn one_crossed_edge_unwinds_c4_into_c8() {
    let s = SumGraph::edge_atoms(4, &cycle_edges(4)).unwrap();
    let edge = (0..4).find(|&j| s.atom(j).edges()[0] == (0, 1)).unwrap();
    let mut qs = vec![Potential::identity(4, 2); 4];
    qs[edge] = transposition_at(4, 2, 1);
    let lift = additive_lift(&s, &qs, 2).unwrap();
    let c8 = neighbor_lists(8, &cycle_edges(8));
    let got = neighbor_lists(8, &lift.support_edges());
    assert!(find_isomorphism(&got, &c8, None).is_some());
    let split = spectrum_split(&s, &qs, 2).unwrap();
    let r2 = 2f64.sqrt();
    assert!(close(&sorted(split.new), &[r2, r2, -r2, -r2], 1e-9));
}

#[test]
fn perm_rep_of_trivial_lift_is_a_kronecker_product() {
    let s = SumGraph::edge_atoms(4, &complete_edges(4)).unwrap();
    let qs = vec![Potential::identity(4, 3); s.c()];
    let m = lift_adjacency(&s, &qs, RepKind::Perm(3)).unwrap();
    let base = symmetric_spectrum(&s.multi_adjacency().to_f64()).unwrap();
    let want = sorted(base.iter().flat_map(|&x| [x, x, x]).collect());
    assert!(close(&symmetric_spectrum(&m).unwrap(), &want, 1e-9));
    let split = spectrum_split(&s, &qs, 3).unwrap();
    let twice = sorted(base.iter().flat_map(|&x| [x, x]).collect());
    assert!(close(&split.new, &twice, 1e-9));
}

fn canonical_class(classes: &mut Vec<Vec<Vec<usize>>>, g: Vec<Vec<usize>>) -> usize {
    if let Some(i) = classes.iter().position(|c| find_isomorphism(c, &g, None).is_some()) {
        return i;
    }
    classes.push(g);
    classes.len() - 1
}

#[test]
fn encodings_reach_every_two_lift_of_k4() {
    let s = SumGraph::edge_atoms(4, &complete_edges(4)).unwrap();
    let edges = complete_edges(4);
    let mut classes = Vec::new();
    // ordinary 2-lifts, one per edge signing
    let mut direct = std::collections::BTreeSet::new();
    for m in 0u32..64 {
        let mut lifted = Vec::new();
        for (e, &(u, v)) in edges.iter().enumerate() {
            if m >> e & 1 == 1 {
                lifted.push((2 * u, 2 * v + 1));
                lifted.push((2 * u + 1, 2 * v));
            } else {
                lifted.push((2 * u, 2 * v));
                lifted.push((2 * u + 1, 2 * v + 1));
            }
        }
        let lifted: Vec<_> = lifted.into_iter().map(|(a, b)| (a.min(b), a.max(b))).collect();
        direct.insert(canonical_class(&mut classes, neighbor_lists(8, &lifted)));
    }
    let mut reached = std::collections::BTreeSet::new();
    let bits = LiftEncoding::zeros(s.c(), 4, 2).bits.len();
    assert_eq!(bits, 24);
    // only the 12 bits at support vertices matter; enumerate them all
    let support: Vec<usize> = (0..s.c())
        .flat_map(|j| s.atom(j).support().into_iter().map(move |v| j * 4 + v))
        .collect();
    for m in 0u32..1 << support.len() {
        let mut b = vec![false; bits];
        for (k, &i) in support.iter().enumerate() {
            b[i] = m >> k & 1 == 1;
        }
        let enc = LiftEncoding::from_bits(s.c(), 4, 2, b).unwrap();
        let lift = additive_lift(&s, &enc.potentials(), 2).unwrap();
        reached.insert(canonical_class(&mut classes, neighbor_lists(8, &lift.support_edges())));
    }
    assert_eq!(reached, direct);
}

#[test]
fn small_representation_invariance_cases() {
    let doubled = SumGraph::from_edge_lists(2, &[vec![(0, 1)], vec![(0, 1)]]).unwrap();
    assert!(rep_invariance_check(&doubled, 2).unwrap().agree());
    let p3 = SumGraph::from_edge_lists(3, &[path_edges(3)]).unwrap();
    assert!(rep_invariance_check(&p3, 2).unwrap().agree());
}

#[test]
fn greedy_on_triangle_times_edge() {
    let s = free_product_atoms(&[Atom::new(3, &cycle_edges(3)).unwrap(), Atom::new(2, &[(0, 1)]).unwrap()]).unwrap();
    assert_eq!((s.n(), s.c()), (6, 5));
    let rho = closed_forms::c3c2();
    let cert = greedy_descent(&s, 2, rho, RhoProvenance::Analytic("c3c2".into()), &SearchOptions::default()).unwrap();
    assert!(cert.bound_holds);
    assert!(cert.new_spectrum.iter().all(|&x| x <= rho + 1e-9));
}

#[test]
fn three_sheets_of_k4() {
    let s = Preset::T3.sum_graph();
    let rep = quasi_ramanujan_pipeline(&s, 3, 8f64.sqrt(), RhoProvenance::User, &SearchOptions::default()).unwrap();
    let lift = SumGraph::from_document(&rep.certificate.lift).unwrap();
    assert_eq!(lift.n(), 12);
    assert!(lift.is_connected());
    assert!((0..12).all(|v| lift.multigraph().degree(v) == 3));
    assert!(rep.exceeding <= 4);
}

#[test]
fn permutation_sums_with_fixed_permutations() {
    let c4 = Atom::new(4, &cycle_edges(4)).unwrap();
    let gs = [c4.clone(), c4.clone(), c4.clone()];
    let id: Vec<usize> = (0..4).collect();
    let l = permutation_sum_lambda2(&gs, 1, &[id.clone(), id.clone(), id.clone()]).unwrap();
    // 3 A(C4) has spectrum 6, 0, 0, -6
    assert!(l.abs() < 1e-9);
    // one graph: conjugation does not change the spectrum
    let one = [c4];
    let a = permutation_sum_lambda2(&one, 2, &[(0..8).collect()]).unwrap();
    let b = permutation_sum_lambda2(&one, 2, &[vec![3, 6, 0, 7, 1, 5, 2, 4]]).unwrap();
    assert!((a - b).abs() < 1e-9);
}
