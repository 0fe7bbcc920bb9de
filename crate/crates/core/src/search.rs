//! Conditional-expectation greedy over lift encodings, with exact
//! certification of the final lift.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use rand::Rng as _;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{GraphDocument, Indexing, SumGraph};
use crate::lift::{additive_lift, pair_count, std_charpoly, uniform_bit_distribution, LiftEncoding, Potential};
use crate::linalg::symmetric_spectrum;
use crate::poly::{certify_real_rooted, cmp_max_root, count_roots_above, max_root, rational_from_f64, ExactPolynomial};
use crate::rng;

/// Where the reference radius came from.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(rename_all = "lowercase", tag = "kind", content = "detail")]
pub enum RhoProvenance {
    Analytic(String),
    Bracket(String),
    User,
}

#[derive(Clone, Debug)]
pub struct SearchOptions {
    /// Largest number of free bits averaged over exactly.
    pub budget_bits: u32,
    /// Cap on `2^r * dim^4` for exact averaging over `r` free bits.
    pub work_cap: f64,
    /// Completions sampled per branch while the exact budget is exceeded.
    pub mc_samples: usize,
    /// Greedy runs with fresh seeds when a sampled path ends uncertified.
    pub max_attempts: usize,
    pub seed: u64,
    /// Slack added to the reference radius in the final check.
    pub tol: f64,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions { budget_bits: 22, work_cap: 4e9, mc_samples: 48, max_attempts: 8, seed: 0, tol: 1e-9 }
    }
}

/// Partial assignment of a lift encoding.
#[derive(Clone, Debug)]
pub struct SearchState {
    pub c: usize,
    pub n: usize,
    pub big_n: usize,
    /// One entry per encoding bit; bits that cannot affect the lift stay 0.
    pub prefix: Vec<Option<bool>>,
    /// Bits that affect the lift, in serialization order.
    pub free: Vec<usize>,
    /// `P(bit = 1)` per pair index.
    pub distribution: Vec<BigRational>,
}

impl SearchState {
    pub fn new(s: &SumGraph, big_n: usize) -> Result<Self> {
        let p = pair_count(big_n);
        let distribution = if big_n >= 2 { uniform_bit_distribution(big_n)? } else { Vec::new() };
        let mut prefix = vec![Some(false); s.c() * s.n() * p];
        let mut free = Vec::new();
        for (j, a) in s.atoms().iter().enumerate() {
            for v in a.support() {
                for k in 0..p {
                    let idx = (j * s.n() + v) * p + k;
                    prefix[idx] = None;
                    free.push(idx);
                }
            }
        }
        Ok(SearchState { c: s.c(), n: s.n(), big_n, prefix, free, distribution })
    }

    pub fn remaining(&self) -> Vec<usize> {
        self.free.iter().copied().filter(|&b| self.prefix[b].is_none()).collect()
    }

    pub fn assign(&mut self, bit: usize, value: bool) {
        self.prefix[bit] = Some(value);
    }

    fn pair_of(&self, bit: usize) -> usize {
        bit % pair_count(self.big_n)
    }

    /// `(numerator for 1, numerator for 0, denominator)` of a bit's law.
    fn weights(&self, bit: usize) -> (i128, i128, i128) {
        let q = &self.distribution[self.pair_of(bit)];
        let d = q.denom().to_i128().expect("small denominator");
        let one = q.numer().to_i128().expect("small numerator");
        (one, d - one, d)
    }

    fn encoding_with(&self, fill: impl Fn(usize) -> bool) -> LiftEncoding {
        let bits = self.prefix.iter().enumerate().map(|(i, b)| b.unwrap_or_else(|| fill(i))).collect();
        LiftEncoding::from_bits(self.c, self.n, self.big_n, bits).expect("dimensions fixed at construction")
    }
}

fn leaf_poly(s: &SumGraph, enc: &LiftEncoding, base: &[i128]) -> Result<Vec<i128>> {
    let qs = enc.potentials();
    std_charpoly(s, &qs, base)
}

/// Exact weighted average, over all completions of the unassigned bits, of
/// the characteristic polynomial of the std-lifted adjacency matrix.
pub fn conditional_expected_charpoly(s: &SumGraph, state: &SearchState, budget_bits: u32) -> Result<ExactPolynomial> {
    let base = s.multi_adjacency().charpoly()?;
    expected_over_completions(s, state, budget_bits, &base)
}

fn expected_over_completions(
    s: &SumGraph,
    state: &SearchState,
    budget_bits: u32,
    base: &[i128],
) -> Result<ExactPolynomial> {
    if state.big_n < 2 {
        return Ok(ExactPolynomial::one());
    }
    let rem = state.remaining();
    if rem.len() as u32 > budget_bits.min(40) {
        return Err(Error::Budget { what: "free bits", size: rem.len() as u128, limit: budget_bits as u128 });
    }
    let ws: Vec<(i128, i128, i128)> = rem.iter().map(|&b| state.weights(b)).collect();
    let den: BigInt = ws.iter().fold(BigInt::one(), |acc, w| acc * w.2);
    let deg = s.n() * (state.big_n - 1);
    let sums = (0u64..1u64 << rem.len())
        .into_par_iter()
        .map(|mask| -> Result<Vec<i128>> {
            let mut w: i128 = 1;
            for (k, wk) in ws.iter().enumerate() {
                w = w.checked_mul(if mask >> k & 1 == 1 { wk.0 } else { wk.1 }).ok_or(Error::Overflow)?;
            }
            let enc = state.encoding_with(|i| {
                let k = rem.binary_search(&i).expect("unassigned bits are remaining bits");
                mask >> k & 1 == 1
            });
            let cp = leaf_poly(s, &enc, base)?;
            cp.into_iter().map(|c| c.checked_mul(w).ok_or(Error::Overflow)).collect()
        })
        .try_fold(
            || vec![BigInt::zero(); deg + 1],
            |mut acc, x| -> Result<Vec<BigInt>> {
                for (a, b) in acc.iter_mut().zip(x?) {
                    *a += b;
                }
                Ok(acc)
            },
        )
        .try_reduce(
            || vec![BigInt::zero(); deg + 1],
            |mut a, b| {
                for (x, y) in a.iter_mut().zip(b) {
                    *x += y;
                }
                Ok(a)
            },
        )?;
    Ok(ExactPolynomial::from_desc(sums.into_iter().map(|c| BigRational::new(c, den.clone())).collect()))
}

fn sampled_average(
    s: &SumGraph,
    state: &SearchState,
    samples: usize,
    r: &mut rng::Rng,
    base: &[i128],
) -> Result<ExactPolynomial> {
    let probs: Vec<f64> = state.distribution.iter().map(|q| q.to_f64().unwrap_or(0.5)).collect();
    let deg = s.n() * (state.big_n - 1);
    let mut acc = vec![BigInt::zero(); deg + 1];
    for _ in 0..samples.max(1) {
        let draws: Vec<bool> = (0..state.prefix.len()).map(|i| r.random::<f64>() < probs[state.pair_of(i)]).collect();
        let enc = state.encoding_with(|i| draws[i]);
        for (a, c) in acc.iter_mut().zip(leaf_poly(s, &enc, base)?) {
            *a += c;
        }
    }
    let den = BigInt::from(samples.max(1));
    Ok(ExactPolynomial::from_desc(acc.into_iter().map(|c| BigRational::new(c, den.clone())).collect()))
}

/// One fixed bit on the greedy path.
#[derive(Clone, Debug, Serialize)]
pub struct StepRecord {
    pub bit: usize,
    pub value: bool,
    /// Whether the branch polynomials were exact conditional expectations.
    pub exact: bool,
    /// Isolating interval of the chosen branch's largest root.
    pub maxroot: Option<(f64, f64)>,
}

/// Certified lift produced by the greedy search.
#[derive(Clone, Debug, Serialize)]
pub struct RamanujanCertificate {
    pub version: &'static str,
    pub n: usize,
    pub big_n: usize,
    pub encoding_hex: String,
    #[serde(skip)]
    pub encoding: LiftEncoding,
    pub lift: GraphDocument,
    pub old_spectrum: Vec<f64>,
    pub new_spectrum: Vec<f64>,
    pub rho: f64,
    pub rho_provenance: RhoProvenance,
    pub tol: f64,
    /// Largest new eigenvalue, isolated exactly from the std characteristic
    /// polynomial.
    pub new_max_interval: Option<(f64, f64)>,
    /// New eigenvalues above `rho + tol`, counted exactly.
    pub new_above: usize,
    pub bound_holds: bool,
    /// Largest root of the unconditioned expected polynomial, when exact.
    pub root_maxroot: Option<(f64, f64)>,
    /// Every exactly compared step kept the largest root from increasing.
    pub monotone: bool,
    /// All steps were exact conditional expectations.
    pub exact_path: bool,
    pub attempts: usize,
    pub path: Vec<StepRecord>,
}

fn exact_affordable(s: &SumGraph, big_n: usize, r: usize, opts: &SearchOptions) -> bool {
    let dim = if big_n == 2 { s.n() } else { s.n() * big_n } as f64;
    r as u32 <= opts.budget_bits && (2f64).powi(r as i32) * dim.powi(4) <= opts.work_cap
}

fn real_rooted_or_err(p: &ExactPolynomial, step: usize) -> Result<()> {
    if !certify_real_rooted(p)?.real_rooted {
        return Err(Error::Interlacing { step, detail: format!("conditional polynomial not real-rooted: {p}") });
    }
    Ok(())
}

fn score(p: &ExactPolynomial) -> Result<f64> {
    Ok(match max_root(p, 1e-12)? {
        Some((a, b)) => 0.5 * (a + b),
        None => f64::INFINITY,
    })
}

fn run_greedy(
    s: &SumGraph,
    big_n: usize,
    opts: &SearchOptions,
    attempt: usize,
    base: &[i128],
) -> Result<(SearchState, Vec<StepRecord>, Option<(f64, f64)>, bool)> {
    let mut state = SearchState::new(s, big_n)?;
    let mut path = Vec::new();
    let mut parent: Option<ExactPolynomial> = None;
    let mut root_maxroot = None;
    let mut r = rng::stream(opts.seed.wrapping_add(attempt as u64), 1);
    let free = state.free.clone();
    for (step, &bit) in free.iter().enumerate() {
        let rem_after = free.len() - step - 1;
        let exact = exact_affordable(s, big_n, rem_after, opts);
        let branch = |v: bool, st: &SearchState, r: &mut rng::Rng| -> Result<ExactPolynomial> {
            let mut child = st.clone();
            child.assign(bit, v);
            if exact {
                expected_over_completions(s, &child, opts.budget_bits, base)
            } else {
                sampled_average(s, &child, opts.mc_samples, r, base)
            }
        };
        let p0 = branch(false, &state, &mut r)?;
        let p1 = branch(true, &state, &mut r)?;
        let value = if exact {
            real_rooted_or_err(&p0, step)?;
            real_rooted_or_err(&p1, step)?;
            let par = match parent.take() {
                Some(p) => p,
                None => {
                    // the unconditioned expectation is the mixture of the two branches
                    let (one, zero, d) = state.weights(bit);
                    let d = BigRational::from_integer(d.into());
                    let mix = p1
                        .scale(&(BigRational::from_integer(one.into()) / &d))
                        .add(&p0.scale(&(BigRational::from_integer(zero.into()) / &d)));
                    real_rooted_or_err(&mix, step)?;
                    root_maxroot = max_root(&mix, 1e-12)?;
                    mix
                }
            };
            let v = cmp_max_root(&p1, &p0)? == Ordering::Less;
            let chosen = if v { &p1 } else { &p0 };
            if cmp_max_root(chosen, &par)? == Ordering::Greater {
                return Err(Error::Interlacing { step, detail: "chosen branch exceeds its parent".into() });
            }
            v
        } else {
            score(&p1)? < score(&p0)?
        };
        let chosen = if value { p1 } else { p0 };
        path.push(StepRecord { bit, value, exact, maxroot: if exact { max_root(&chosen, 1e-12)? } else { None } });
        state.assign(bit, value);
        parent = if exact { Some(chosen) } else { None };
    }
    // a violated comparison returns early, so a finished path is monotone
    Ok((state, path, root_maxroot, true))
}

fn certify_leaf(
    s: &SumGraph,
    state: &SearchState,
    rho: f64,
    provenance: RhoProvenance,
    opts: &SearchOptions,
    base: &[i128],
) -> Result<RamanujanCertificate> {
    let encoding = state.encoding_with(|_| false);
    let qs: Vec<Potential> = encoding.potentials();
    let big_n = state.big_n;
    let lifted = additive_lift(s, &qs, big_n)?;
    let split = crate::lift::spectrum_split(s, &qs, big_n)?;
    let (new_max_interval, new_above) = if big_n >= 2 {
        let cp = ExactPolynomial::from_desc_ints(&std_charpoly(s, &qs, base)?);
        let t = rational_from_f64(rho + opts.tol)?;
        (max_root(&cp, 1e-12)?, count_roots_above(&cp, &t)?)
    } else {
        (None, 0)
    };
    Ok(RamanujanCertificate {
        version: crate::VERSION,
        n: s.n(),
        big_n,
        encoding_hex: encoding.to_hex(),
        encoding,
        lift: lifted.to_document(Indexing::Zero),
        old_spectrum: split.old,
        new_spectrum: split.new,
        rho,
        rho_provenance: provenance,
        tol: opts.tol,
        new_max_interval,
        new_above,
        bound_holds: new_above == 0,
        root_maxroot: None,
        monotone: true,
        exact_path: true,
        attempts: 0,
        path: Vec::new(),
    })
}

/// Greedy descent over the lift encoding bits: at each bit keep the branch
/// whose conditional expected std characteristic polynomial has the smaller
/// largest root (ties keep 0), then certify the final lift exactly against
/// `rho + tol`.
pub fn greedy_descent(
    s: &SumGraph,
    big_n: usize,
    rho: f64,
    provenance: RhoProvenance,
    opts: &SearchOptions,
) -> Result<RamanujanCertificate> {
    s.validate().into_result()?;
    if big_n == 0 {
        return Err(Error::Dimension("N = 0".into()));
    }
    let base = s.multi_adjacency().charpoly()?;
    let mut best: Option<RamanujanCertificate> = None;
    for attempt in 0..opts.max_attempts.max(1) {
        let (state, path, root_maxroot, monotone) = run_greedy(s, big_n, opts, attempt, &base)?;
        let exact_path = path.iter().all(|p| p.exact);
        let mut cert = certify_leaf(s, &state, rho, provenance.clone(), opts, &base)?;
        cert.path = path;
        cert.root_maxroot = root_maxroot;
        cert.monotone = monotone;
        cert.exact_path = exact_path;
        cert.attempts = attempt + 1;
        let done = cert.bound_holds || exact_path;
        if best.as_ref().is_none_or(|b| cert.new_above < b.new_above) {
            best = Some(cert);
        }
        if done {
            break;
        }
    }
    Ok(best.expect("at least one attempt"))
}

/// Lift certificate plus the quasi-Ramanujan checks on the whole lift.
#[derive(Clone, Debug, Serialize)]
pub struct PipelineReport {
    pub certificate: RamanujanCertificate,
    /// `lambda_1(H) > rho`, the condition under which connectivity follows.
    pub gate: bool,
    pub connected: bool,
    /// Eigenvalues of the lift above `rho + tol`.
    pub exceeding: usize,
    /// `lambda_{|V(H)|+1}` of the lift, if it exists.
    pub lambda_after_base: Option<f64>,
    /// `exceeding <= |V(H)|`.
    pub quasi_ok: bool,
    pub warnings: Vec<String>,
}

/// Greedy lift plus connectivity and eigenvalue-count checks.
pub fn quasi_ramanujan_pipeline(
    s: &SumGraph,
    big_n: usize,
    rho: f64,
    provenance: RhoProvenance,
    opts: &SearchOptions,
) -> Result<PipelineReport> {
    let lambda1 = symmetric_spectrum(&s.multi_adjacency().to_f64())?.first().copied().unwrap_or(0.0);
    let gate = lambda1 > rho;
    let mut warnings = Vec::new();
    if !gate {
        warnings.push(format!("lambda_1(H) = {lambda1} does not exceed rho = {rho}; connectivity is not implied"));
    }
    let certificate = greedy_descent(s, big_n, rho, provenance, opts)?;
    if !certificate.bound_holds {
        warnings.push(format!("{} new eigenvalues exceed rho + tol", certificate.new_above));
    }
    let lifted = SumGraph::from_document(&certificate.lift)?;
    let connected = lifted.is_connected();
    if gate && !connected {
        warnings.push("lift is disconnected although lambda_1(H) > rho".into());
    }
    let mut spec: Vec<f64> = certificate.old_spectrum.iter().chain(&certificate.new_spectrum).copied().collect();
    spec.sort_by(|a, b| b.total_cmp(a));
    let exceeding = spec.iter().filter(|&&x| x > rho + opts.tol).count();
    let lambda_after_base = spec.get(s.n()).copied();
    Ok(PipelineReport {
        quasi_ok: exceeding <= s.n(),
        certificate,
        gate,
        connected,
        exceeding,
        lambda_after_base,
        warnings,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::addchar::{expected_charpoly_signing, ExpectedPoly, SigningMode};
    use crate::graph::{complete_edges, cycle_edges};

    #[test]
    fn root_polynomial_for_two_sheets_is_the_signing_expectation() {
        let s = SumGraph::edge_atoms(4, &complete_edges(4)).unwrap();
        let state = SearchState::new(&s, 2).unwrap();
        assert_eq!(state.free.len(), 12);
        let p = conditional_expected_charpoly(&s, &state, 22).unwrap();
        let ExpectedPoly::Exact(q) = expected_charpoly_signing(&s, SigningMode::exact()).unwrap() else { panic!() };
        assert_eq!(p, q);
    }

    #[test]
    fn one_remaining_bit_is_a_two_leaf_mixture() {
        let s = SumGraph::edge_atoms(3, &cycle_edges(3)).unwrap();
        let mut state = SearchState::new(&s, 2).unwrap();
        let free = state.free.clone();
        for &b in &free[..free.len() - 1] {
            state.assign(b, true);
        }
        let last = *free.last().unwrap();
        let mix = conditional_expected_charpoly(&s, &state, 22).unwrap();
        let mut a = state.clone();
        a.assign(last, false);
        let mut b = state.clone();
        b.assign(last, true);
        let half = BigRational::new(1.into(), 2.into());
        let pa = conditional_expected_charpoly(&s, &a, 0).unwrap();
        let pb = conditional_expected_charpoly(&s, &b, 0).unwrap();
        assert_eq!(mix, pa.add(&pb).scale(&half));
    }

    #[test]
    fn c4_edge_atoms_two_lift() {
        let s = SumGraph::edge_atoms(4, &cycle_edges(4)).unwrap();
        let cert = greedy_descent(&s, 2, 2.0, RhoProvenance::User, &SearchOptions::default()).unwrap();
        assert!(cert.bound_holds && cert.monotone && cert.exact_path);
        assert!(cert.new_spectrum.iter().all(|&x| x <= 2.0 + 1e-9));
    }

    #[test]
    fn trivial_one_sheet_lift() {
        let s = SumGraph::edge_atoms(4, &complete_edges(4)).unwrap();
        let r = quasi_ramanujan_pipeline(&s, 1, 8f64.sqrt(), RhoProvenance::User, &SearchOptions::default()).unwrap();
        assert!(r.certificate.new_spectrum.is_empty());
        assert_eq!(r.certificate.lift.n, 4);
        assert!(r.quasi_ok);
    }
}
