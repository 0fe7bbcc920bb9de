//! End-to-end property checks, one per acceptance criterion.

use std::time::Instant;

use num_rational::BigRational;
use num_traits::One;
use rand::seq::SliceRandom;
use rand::Rng as _;
use serde::Serialize;

use crate::addchar::{additive_char_poly, expected_charpoly_signing, freelike_walk_count, matching_poly, ExpectedPoly, SigningMode};
use crate::error::Result;
use crate::free::{closed_forms, free_convolution_right_edge, paschke_check, permutation_sum_experiment, SpectralMeasure};
use crate::graph::{complete_edges, cycle_edges, Atom, SumGraph};
use crate::lift::{decoded_law, rep_invariance_check, spectrum_split, uniform_bit_distribution, Potential};
use crate::linalg::{symmetric_spectrum, IntMatrix};
use crate::perm::Permutation;
use crate::poly::{certify_real_rooted, max_abs_root, power_sums, ExactPolynomial};
use crate::presets::Preset;
use crate::product::specrad_bracket;
use crate::rng;
use crate::search::{greedy_descent, quasi_ramanujan_pipeline, RhoProvenance, SearchOptions};

/// Seed used by `addprod selftest` and the acceptance suite.
pub const DEFAULT_SEED: u64 = 20_240_517;

#[derive(Clone, Debug, Serialize)]
pub struct CriterionOutcome {
    pub id: usize,
    pub name: &'static str,
    pub passed: bool,
    /// Failure is reported but does not fail the run.
    pub soft: bool,
    pub detail: String,
    pub elapsed_secs: f64,
}

impl CriterionOutcome {
    /// One line: `PASS|FAIL|SOFT-FAIL  id  name  (time)  detail`.
    pub fn line(&self) -> String {
        let tag = match (self.passed, self.soft) {
            (true, _) => "PASS",
            (false, false) => "FAIL",
            (false, true) => "SOFT-FAIL",
        };
        format!("{tag:<9} {:>2} {:<28} ({:.2}s) {}", self.id, self.name, self.elapsed_secs, self.detail)
    }
}

pub const CRITERIA: [(usize, &str); 12] = [
    (1, "closed-form radii"),
    (2, "oracle equivalence"),
    (3, "moment identity"),
    (4, "special cases"),
    (5, "real-rootedness"),
    (6, "root bound"),
    (7, "spectrum split"),
    (8, "representation invariance"),
    (9, "uniform encoding"),
    (10, "greedy search"),
    (11, "quasi-ramanujan pipeline"),
    (12, "permutation sums"),
];

/// Random connected atom on a random subset of `[n]` with at least two
/// vertices.
pub fn random_atom(r: &mut rng::Rng, n: usize) -> Atom {
    let k = r.random_range(2..=n);
    let mut verts: Vec<usize> = (0..n).collect();
    verts.shuffle(r);
    verts.truncate(k);
    let mut edges = Vec::new();
    for i in 1..k {
        let j = r.random_range(0..i);
        edges.push(ordered(verts[i], verts[j]));
    }
    for i in 0..k {
        for j in i + 1..k {
            let e = ordered(verts[i], verts[j]);
            if !edges.contains(&e) && r.random_bool(0.3) {
                edges.push(e);
            }
        }
    }
    Atom::new(n, &edges).expect("random atom is simple")
}

fn ordered(a: usize, b: usize) -> (usize, usize) {
    (a.min(b), a.max(b))
}

/// Random valid sum graph with `n` in `2..=n_max` and `c` in `1..=c_max`.
pub fn random_sum_graph(r: &mut rng::Rng, n_max: usize, c_max: usize) -> SumGraph {
    loop {
        let n = r.random_range(2..=n_max);
        let c = r.random_range(1..=c_max);
        let atoms = (0..c).map(|_| random_atom(r, n)).collect();
        if let Ok(s) = SumGraph::new(n, atoms) {
            if s.validate().passed() {
                return s;
            }
        }
    }
}

/// Random edge set on `[n]` with a spanning path so the graph is connected.
pub fn random_connected_edges(r: &mut rng::Rng, n: usize) -> Vec<(usize, usize)> {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(r);
    let mut edges: Vec<(usize, usize)> = perm.windows(2).map(|w| ordered(w[0], w[1])).collect();
    for u in 0..n {
        for v in u + 1..n {
            if !edges.contains(&(u, v)) && r.random_bool(0.35) {
                edges.push((u, v));
            }
        }
    }
    edges
}

/// Potentials with independent uniform permutations.
pub fn random_potentials(r: &mut rng::Rng, s: &SumGraph, big_n: usize) -> Vec<Potential> {
    (0..s.c())
        .map(|_| Potential {
            perms: (0..s.n())
                .map(|_| {
                    let mut img: Vec<usize> = (0..big_n).collect();
                    img.shuffle(r);
                    Permutation::from_images(img).unwrap()
                })
                .collect(),
        })
        .collect()
}

/// Polynomials generated by criteria 2-4, reused by 5 and 6.
struct Corpus {
    /// `(sum graph, additive characteristic polynomial)`.
    random: Vec<(SumGraph, ExactPolynomial)>,
    other: Vec<ExactPolynomial>,
}

fn corpus(seed: u64) -> Result<Corpus> {
    let mut random = Vec::new();
    let mut r = rng::stream(seed, 2);
    for _ in 0..50 {
        let s = random_sum_graph(&mut r, 5, 3);
        let p = additive_char_poly(&s)?;
        random.push((s, p));
    }
    let mut r = rng::stream(seed, 3);
    for _ in 0..30 {
        let s = random_sum_graph(&mut r, 5, 3);
        let p = additive_char_poly(&s)?;
        random.push((s, p));
    }
    let mut other = Vec::new();
    let mut r = rng::stream(seed, 4);
    for _ in 0..20 {
        let n = r.random_range(2..=6);
        let s = SumGraph::new(n, vec![random_atom(&mut r, n)])?;
        other.push(additive_char_poly(&s)?);
        let n = r.random_range(2..=7);
        let edges = random_connected_edges(&mut r, n);
        other.push(additive_char_poly(&SumGraph::edge_atoms(n, &edges)?)?);
    }
    Ok(Corpus { random, other })
}

type Check = Result<(bool, String)>;

fn closed_form_radii() -> Check {
    let mut worst_time: f64 = 0.0;
    let mut fails = Vec::new();
    let mut timed = |label: String, f: &dyn Fn() -> Result<f64>, want: f64, tol: f64| -> Result<()> {
        let t = Instant::now();
        let got = f()?;
        let dt = t.elapsed().as_secs_f64();
        worst_time = worst_time.max(dt);
        if (got - want).abs() > tol || dt >= 1.0 {
            fails.push(format!("{label}: {got} vs {want} in {dt:.3}s"));
        }
        Ok(())
    };
    for delta in 3..=6 {
        let ms = vec![SpectralMeasure::k2(); delta];
        timed(format!("T{delta}"), &|| free_convolution_right_edge(&ms), closed_forms::tree(delta), 1e-8)?;
    }
    let c4 = SpectralMeasure::c4();
    timed("C4*C4*C4".into(), &|| free_convolution_right_edge(&[c4.clone(), c4.clone(), c4.clone()]), closed_forms::c4c4c4(), 1e-6)?;
    timed("C3*C2".into(), &|| free_convolution_right_edge(&[SpectralMeasure::c3(), SpectralMeasure::k2()]), closed_forms::c3c2(), 1e-6)?;
    let paschke = paschke_check()?;
    let root = 0.5 * (paschke.root.0 + paschke.root.1);
    timed(
        "C3*C2*C2".into(),
        &|| free_convolution_right_edge(&[SpectralMeasure::c3(), SpectralMeasure::k2(), SpectralMeasure::k2()]),
        root,
        1e-6,
    )?;
    Ok((fails.is_empty(), if fails.is_empty() { format!("8 radii, slowest {worst_time:.3}s") } else { fails.join("; ") }))
}

fn oracle_equivalence(c: &Corpus) -> Check {
    let mut bad = 0;
    for (s, p) in &c.random[..50] {
        match expected_charpoly_signing(s, SigningMode::exact())? {
            ExpectedPoly::Exact(q) if q == *p => {}
            _ => bad += 1,
        }
    }
    Ok((bad == 0, format!("{} / 50 sum graphs agree exactly", 50 - bad)))
}

fn moment_identity(c: &Corpus) -> Check {
    let mut bad = 0;
    for (s, p) in &c.random[50..] {
        let sums = power_sums(p, 8)?;
        for (i, pk) in sums.iter().enumerate() {
            if *pk != BigRational::from_integer(freelike_walk_count(s, i + 1)?) {
                bad += 1;
            }
        }
    }
    Ok((bad == 0, format!("{bad} mismatches over 30 graphs x k = 1..8")))
}

fn special_cases(seed: u64) -> Check {
    let mut r = rng::stream(seed, 4);
    let mut bad = 0;
    for _ in 0..20 {
        let n = r.random_range(2..=6);
        let a = random_atom(&mut r, n);
        let det = ExactPolynomial::from_desc_ints(&a.adjacency().charpoly()?);
        if additive_char_poly(&SumGraph::new(n, vec![a])?)? != det {
            bad += 1;
        }
        let n = r.random_range(2..=7);
        let edges = random_connected_edges(&mut r, n);
        if additive_char_poly(&SumGraph::edge_atoms(n, &edges)?)? != matching_poly(n, &edges) {
            bad += 1;
        }
    }
    Ok((bad == 0, format!("{bad} mismatches over 20 atoms and 20 edge-atom graphs")))
}

fn real_rootedness(c: &Corpus) -> Check {
    let all: Vec<&ExactPolynomial> = c.random.iter().map(|(_, p)| p).chain(&c.other).collect();
    let mut bad = 0;
    for p in &all {
        if !certify_real_rooted(p)?.real_rooted {
            bad += 1;
        }
    }
    Ok((bad == 0, format!("{} / {} certified real-rooted", all.len() - bad, all.len())))
}

fn root_bound(c: &Corpus) -> Check {
    let mut fails = Vec::new();
    for p in [Preset::T3, Preset::C4C4C4, Preset::C3C2] {
        let (rho, _) = p.rho()?;
        let (_, hi) = max_abs_root(&additive_char_poly(&p.sum_graph())?, 1e-10)?;
        if hi > rho + 1e-6 {
            fails.push(format!("{p}: {hi} > {rho}"));
        }
    }
    for (s, p) in &c.random {
        let upper = specrad_bracket(s, 2, 50)?.upper;
        let (_, hi) = max_abs_root(p, 1e-10)?;
        if hi > upper + 1e-6 {
            fails.push(format!("{hi} > bracket {upper}"));
        }
    }
    Ok((fails.is_empty(), if fails.is_empty() { format!("3 presets and {} random graphs within bound", c.random.len()) } else { fails.join("; ") }))
}

fn spectrum_split_check(seed: u64) -> Check {
    let mut r = rng::stream(seed, 7);
    let mut worst: f64 = 0.0;
    for i in 0..200 {
        let s = random_sum_graph(&mut r, 5, 3);
        let big_n = 2 + i % 2;
        let qs = random_potentials(&mut r, &s, big_n);
        match spectrum_split(&s, &qs, big_n) {
            Ok(split) => worst = worst.max(split.max_deviation),
            Err(e) => return Ok((false, format!("lift {i}: {e}"))),
        }
    }
    Ok((worst <= 1e-8, format!("200 lifts, max deviation {worst:.2e}")))
}

/// Every valid sum graph with `n <= 3` and `c <= 2` (atoms ordered).
pub fn small_bases() -> Vec<SumGraph> {
    let mut out = Vec::new();
    for n in 2..=3 {
        let all = complete_edges(n);
        let atoms: Vec<Atom> = (1u32..1 << all.len())
            .filter_map(|m| {
                let e: Vec<_> = all.iter().enumerate().filter(|(i, _)| m >> i & 1 == 1).map(|(_, &e)| e).collect();
                let a = Atom::new(n, &e).ok()?;
                a.underlying_connected().then_some(a)
            })
            .collect();
        for a in &atoms {
            out.push(SumGraph::new(n, vec![a.clone()]).unwrap());
            for b in &atoms {
                out.push(SumGraph::new(n, vec![a.clone(), b.clone()]).unwrap());
            }
        }
    }
    out.retain(|s| s.validate().passed());
    out
}

fn rep_invariance() -> Check {
    let bases = small_bases();
    let mut bad = 0;
    for s in &bases {
        if !rep_invariance_check(s, 2)?.agree() {
            bad += 1;
        }
    }
    Ok((bad == 0, format!("{} / {} bases agree", bases.len() - bad, bases.len())))
}

fn uniform_encoding() -> Check {
    let mut ok = true;
    for big_n in [3usize, 4] {
        let law = decoded_law(big_n, &uniform_bit_distribution(big_n)?)?;
        let fact: u64 = (1..=big_n as u64).product();
        let want = BigRational::new(1.into(), fact.into());
        ok &= law.len() as u64 == fact && law.values().all(|p| *p == want);
        let total: BigRational = law.values().cloned().sum();
        ok &= total.is_one();
    }
    Ok((ok, "N = 3, 4: every permutation has probability exactly 1/N!".into()))
}

fn signed_top(s: &SumGraph, signs: &[i64]) -> Result<f64> {
    let mut m = IntMatrix::zeros(s.n());
    for (e, a) in s.atoms().iter().enumerate() {
        let (u, v) = a.edges()[0];
        m.add(u, v, signs[e]);
        m.add(v, u, signs[e]);
    }
    Ok(symmetric_spectrum(&m.to_f64())?[0])
}

fn greedy_search() -> Check {
    let t = Instant::now();
    let opts = SearchOptions::default();
    let mut notes = Vec::new();
    let mut ok = true;

    let t3 = Preset::T3.sum_graph();
    let rho = closed_forms::tree(3);
    let cert = greedy_descent(&t3, 2, rho, RhoProvenance::Analytic("2 sqrt(2)".into()), &opts)?;
    let top = cert.new_spectrum.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    ok &= cert.bound_holds && top <= rho + 1e-9;
    // independent route: the greedy signing rebuilt from its potentials,
    // and every one of the 2^6 signings of K4
    let qs = cert.encoding.potentials();
    let edge_sign: Vec<i64> = t3
        .atoms()
        .iter()
        .enumerate()
        .map(|(j, a)| {
            let (u, v) = a.edges()[0];
            qs[j].get(u).sign() * qs[j].get(v).sign()
        })
        .collect();
    let rebuilt = signed_top(&t3, &edge_sign)?;
    ok &= (rebuilt - top).abs() < 1e-9;
    let mut good = 0;
    let mut best = f64::INFINITY;
    for m in 0u32..64 {
        let signs: Vec<i64> = (0..6).map(|e| if m >> e & 1 == 1 { -1 } else { 1 }).collect();
        let x = signed_top(&t3, &signs)?;
        best = best.min(x);
        good += usize::from(x <= rho + 1e-9);
    }
    ok &= good > 0 && best <= top + 1e-9;
    let monotone = |path: &[crate::search::StepRecord]| {
        path.windows(2).all(|w| match (w[0].maxroot, w[1].maxroot) {
            (Some(a), Some(b)) => b.0 <= a.1 + 1e-12,
            _ => true,
        })
    };
    ok &= cert.monotone && monotone(&cert.path);
    notes.push(format!("K4 N=2 max new {top:.9}, brute force {good}/64 good, best {best:.9}"));

    let c4 = Preset::C4C4C4.sum_graph();
    let bound = 4.7095971;
    let cert = greedy_descent(&c4, 2, bound, RhoProvenance::Analytic("c4c4c4".into()), &SearchOptions { tol: 1e-6, ..opts })?;
    let top = cert.new_spectrum.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    ok &= cert.bound_holds && top <= bound + 1e-6 && cert.monotone && monotone(&cert.path);
    notes.push(format!("c4c4c4 N=2 max new {top:.9}"));

    let dt = t.elapsed().as_secs_f64();
    ok &= dt < 60.0;
    Ok((ok, notes.join("; ")))
}

fn pipeline() -> Check {
    let t3 = Preset::T3.sum_graph();
    let rho = closed_forms::tree(3);
    let mut ok = true;
    let mut notes = Vec::new();
    for big_n in [3, 4] {
        let rep = quasi_ramanujan_pipeline(&t3, big_n, rho, RhoProvenance::Analytic("2 sqrt(2)".into()), &SearchOptions::default())?;
        ok &= rep.exceeding <= 4 && (!rep.gate || rep.connected);
        notes.push(format!(
            "N={big_n}: {} above rho, connected {}, new max {:?}",
            rep.exceeding, rep.connected, rep.certificate.new_max_interval.map(|x| x.1)
        ));
    }
    Ok((ok, notes.join("; ")))
}

fn permutation_sums(seed: u64) -> Check {
    let c4 = Atom::new(4, &cycle_edges(4))?;
    let rho = closed_forms::c4c4c4();
    let stats = permutation_sum_experiment(&[c4.clone(), c4.clone(), c4], 3, 200, seed, rho, 1e-6)?;
    let min = stats.lambda2.iter().copied().fold(f64::INFINITY, f64::min);
    Ok((
        stats.fraction_within > 0.0,
        format!("{} vertices, fraction {:.3} with lambda_2 <= rho, min lambda_2 {min:.6}", stats.vertices, stats.fraction_within),
    ))
}

/// Runs one criterion; errors count as failures.
pub fn run_criterion(id: usize, seed: u64) -> CriterionOutcome {
    let name = CRITERIA.iter().find(|c| c.0 == id).map_or("unknown", |c| c.1);
    let t = Instant::now();
    let res = match id {
        1 => closed_form_radii(),
        2 => corpus(seed).and_then(|c| oracle_equivalence(&c)),
        3 => corpus(seed).and_then(|c| moment_identity(&c)),
        4 => special_cases(seed),
        5 => corpus(seed).and_then(|c| real_rootedness(&c)),
        6 => corpus(seed).and_then(|c| root_bound(&c)),
        7 => spectrum_split_check(seed),
        8 => rep_invariance(),
        9 => uniform_encoding(),
        10 => greedy_search(),
        11 => pipeline(),
        12 => permutation_sums(seed),
        _ => Ok((false, format!("no criterion {id}"))),
    };
    let (passed, detail) = res.unwrap_or_else(|e| (false, format!("error: {e}")));
    CriterionOutcome { id, name, passed, soft: id == 12, detail, elapsed_secs: t.elapsed().as_secs_f64() }
}

pub fn run_all(seed: u64) -> Vec<CriterionOutcome> {
    CRITERIA.iter().map(|&(id, _)| run_criterion(id, seed)).collect()
}

/// Hard criteria all passed.
pub fn all_passed(outcomes: &[CriterionOutcome]) -> bool {
    outcomes.iter().all(|o| o.passed || o.soft)
}

