//! Cauchy transforms of finitely supported spectral measures, free
//! convolution right edges and random permutation sums.

use nalgebra::DMatrix;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::seq::SliceRandom;
use rand_distr::{Distribution, StandardNormal};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Atom;
use crate::linalg::symmetric_spectrum;
use crate::poly::{max_root, rational_from_f64, ExactPolynomial};
use crate::rng;

/// Probability measure with finitely many atoms `(location, mass)`, sorted
/// by location, masses summing to exactly 1.
#[derive(Clone, Debug, PartialEq)]
pub struct SpectralMeasure {
    atoms: Vec<(f64, BigRational)>,
}

fn frac(p: i64, q: i64) -> BigRational {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

impl SpectralMeasure {
    pub fn new(mut atoms: Vec<(f64, BigRational)>) -> Result<Self> {
        if atoms.is_empty() {
            return Err(Error::Degenerate("measure without atoms".into()));
        }
        if atoms.iter().any(|(x, m)| !x.is_finite() || !m.is_positive()) {
            return Err(Error::Degenerate("atoms need finite locations and positive masses".into()));
        }
        atoms.sort_by(|a, b| a.0.total_cmp(&b.0));
        let mut merged: Vec<(f64, BigRational)> = Vec::with_capacity(atoms.len());
        for (x, m) in atoms {
            match merged.last_mut() {
                Some(last) if last.0 == x => last.1 += m,
                _ => merged.push((x, m)),
            }
        }
        let total: BigRational = merged.iter().map(|a| a.1.clone()).sum();
        if !total.is_one() {
            return Err(Error::Degenerate(format!("masses sum to {total}, not 1")));
        }
        Ok(SpectralMeasure { atoms: merged })
    }

    /// Uniform measure on a multiset of eigenvalues; values within `1e-9` of
    /// each other are merged at their first (largest) representative.
    pub fn from_eigenvalues(eigs: &[f64]) -> Result<Self> {
        let mut sorted = eigs.to_vec();
        sorted.sort_by(|a, b| b.total_cmp(a));
        let mut groups: Vec<(f64, i64)> = Vec::new();
        for x in sorted {
            match groups.last_mut() {
                Some(g) if (g.0 - x).abs() <= 1e-9 => g.1 += 1,
                _ => groups.push((x, 1)),
            }
        }
        let n = eigs.len() as i64;
        Self::new(groups.into_iter().map(|(x, k)| (if x.abs() < 1e-12 { 0.0 } else { x }, frac(k, n))).collect())
    }

    /// Spectral measure at any vertex of a vertex-transitive graph: the
    /// uniform distribution on its adjacency eigenvalues.
    pub fn of_vertex_transitive(g: &Atom) -> Result<Self> {
        let spec = symmetric_spectrum(&g.adjacency().to_f64())?;
        let rounded: Vec<f64> = spec.iter().map(|&x| snap(x)).collect();
        Self::from_eigenvalues(&rounded)
    }

    /// `(delta_1 + delta_{-1}) / 2`.
    pub fn k2() -> Self {
        Self::new(vec![(1.0, frac(1, 2)), (-1.0, frac(1, 2))]).unwrap()
    }

    /// `(delta_2 + 2 delta_{-1}) / 3`.
    pub fn c3() -> Self {
        Self::new(vec![(2.0, frac(1, 3)), (-1.0, frac(2, 3))]).unwrap()
    }

    /// `(delta_2 + 2 delta_0 + delta_{-2}) / 4`.
    pub fn c4() -> Self {
        Self::new(vec![(2.0, frac(1, 4)), (0.0, frac(1, 2)), (-2.0, frac(1, 4))]).unwrap()
    }

    pub fn atoms(&self) -> &[(f64, BigRational)] {
        &self.atoms
    }

    pub fn right_edge(&self) -> f64 {
        self.atoms.last().unwrap().0
    }

    pub fn mean(&self) -> f64 {
        self.atoms.iter().map(|(x, m)| x * m.to_f64().unwrap()).sum()
    }

    fn masses_f64(&self) -> Vec<(f64, f64)> {
        self.atoms.iter().map(|(x, m)| (*x, m.to_f64().unwrap())).collect()
    }

    /// `G(x) = sum m_i / (x - lambda_i)` for `x` right of the support.
    pub fn cauchy(&self, x: f64) -> Result<f64> {
        if x.is_nan() || x <= self.right_edge() {
            return Err(Error::OutsideDomain(x));
        }
        Ok(self.atoms.iter().map(|(l, m)| m.to_f64().unwrap() / (x - l)).sum())
    }

    /// Exact Cauchy transform at a rational point (locations are read as the
    /// exact binary rationals they hold).
    pub fn cauchy_exact(&self, x: &BigRational) -> Result<BigRational> {
        let edge = rational_from_f64(self.right_edge())?;
        if *x <= edge {
            return Err(Error::OutsideDomain(x.to_f64().unwrap_or(f64::NAN)));
        }
        let mut acc = BigRational::zero();
        for (l, m) in &self.atoms {
            acc += m / (x - rational_from_f64(*l)?);
        }
        Ok(acc)
    }

    /// Inverse of `G` on the decreasing branch right of the support:
    /// the `y > right_edge` with `G(y) = w`, for any `w > 0`.
    pub fn inverse_cauchy(&self, w: f64) -> Result<f64> {
        if !(w.is_finite() && w > 0.0) {
            return Err(Error::OutOfRange(w));
        }
        let edge = self.right_edge();
        let atoms = self.masses_f64();
        let top = atoms.last().unwrap().1;
        let g = |s: f64| -> f64 { atoms.iter().map(|(l, m)| m / (edge + s - l)).sum() };
        // G(edge + s) lies between top / s and 1 / s
        let (mut lo, mut hi) = ((top / w).ln(), (1.0 / w).ln());
        if hi - lo < 1e-15 {
            return Ok(edge + hi.exp());
        }
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if g(mid.exp()) > w {
                lo = mid;
            } else {
                hi = mid;
            }
            if hi - lo < 1e-16 {
                break;
            }
        }
        Ok(edge + (0.5 * (lo + hi)).exp())
    }
}

fn snap(x: f64) -> f64 {
    let r = x.round();
    if (x - r).abs() < 1e-9 {
        r
    } else {
        x
    }
}

/// `K(w) = sum_i K_i(w) - (l - 1) / w`.
pub fn free_k(measures: &[SpectralMeasure], w: f64) -> Result<f64> {
    let mut acc = -((measures.len() as f64) - 1.0) / w;
    for m in measures {
        acc += m.inverse_cauchy(w)?;
    }
    Ok(acc)
}

/// Right edge of the free convolution: the minimum of `K` over `w > 0`
/// (log-grid scan, then golden section). Without an interior minimum `K`
/// decreases to the sum of the individual right edges, which is returned.
pub fn free_convolution_right_edge(measures: &[SpectralMeasure]) -> Result<f64> {
    if measures.len() < 2 {
        return Err(Error::Degenerate("free convolution needs at least two measures".into()));
    }
    let f = |lw: f64| free_k(measures, lw.exp()).unwrap_or(f64::INFINITY);
    let (lo_end, hi_end) = ((1e-9f64).ln(), (1e9f64).ln());
    let steps = 600;
    let grid: Vec<f64> = (0..=steps).map(|i| lo_end + (hi_end - lo_end) * i as f64 / steps as f64).collect();
    let vals: Vec<f64> = grid.iter().map(|&x| f(x)).collect();
    let (imin, _) = vals.iter().enumerate().fold((0, f64::INFINITY), |acc, (i, &v)| if v < acc.1 { (i, v) } else { acc });
    let edge_sum: f64 = measures.iter().map(SpectralMeasure::right_edge).sum();
    if imin == 0 || imin == steps {
        return Ok(edge_sum);
    }
    let (mut a, mut b) = (grid[imin - 1], grid[imin + 1]);
    let phi = 0.5 * (5f64.sqrt() - 1.0);
    let mut x1 = b - phi * (b - a);
    let mut x2 = a + phi * (b - a);
    let (mut f1, mut f2) = (f(x1), f(x2));
    while b - a > 1e-12 {
        if f1 < f2 {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - phi * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + phi * (b - a);
            f2 = f(x2);
        }
    }
    Ok(f(0.5 * (a + b)).min(f1).min(f2))
}

/// `2 sqrt(Delta - 1)` and similar closed forms used as references.
pub mod closed_forms {
    pub fn tree(delta: usize) -> f64 {
        2.0 * ((delta as f64) - 1.0).sqrt()
    }

    /// `C4 * C4 * C4`.
    pub fn c4c4c4() -> f64 {
        (5.0 * 5f64.sqrt() + 11.0).sqrt()
    }

    /// `C3 * C2`.
    pub fn c3c2() -> f64 {
        0.5 + 0.5 * (8.0 * 2f64.sqrt() + 13.0).sqrt()
    }

    /// Edge atoms of `K_{a,b}`: the `(a, b)`-biregular tree.
    pub fn biregular_tree(a: usize, b: usize) -> f64 {
        ((a as f64) - 1.0).sqrt() + ((b as f64) - 1.0).sqrt()
    }
}

/// Coefficients of `x^5 + x^4 - x^3 - 37x^2 - 108x + 112`.
pub const PASCHKE_POLY: [i64; 6] = [1, 1, -1, -37, -108, 112];

#[derive(Clone, Debug, Serialize)]
pub struct PaschkeReport {
    pub free_edge: f64,
    /// Isolating interval of the polynomial's largest root.
    pub root: (f64, f64),
    pub agree: bool,
}

/// `C3 * C2 * C2` right edge against the largest root of
/// `x^5 + x^4 - x^3 - 37x^2 - 108x + 112`, to `1e-8`.
pub fn paschke_check() -> Result<PaschkeReport> {
    let free_edge = free_convolution_right_edge(&[SpectralMeasure::c3(), SpectralMeasure::k2(), SpectralMeasure::k2()])?;
    let root = max_root(&ExactPolynomial::from_desc_ints(&PASCHKE_POLY), 1e-13)?.ok_or(Error::NotRealRooted)?;
    let mid = 0.5 * (root.0 + root.1);
    Ok(PaschkeReport { free_edge, root, agree: (free_edge - mid).abs() <= 1e-8 })
}

/// Samples of `lambda_2` of random permutation sums.
#[derive(Clone, Debug, Serialize)]
pub struct PermSumStats {
    pub vertices: usize,
    pub rho: f64,
    pub tol: f64,
    pub lambda2: Vec<f64>,
    /// Fraction of samples with `lambda_2 <= rho + tol`.
    pub fraction_within: f64,
}

/// Block-diagonal copies: `copies` disjoint copies of `g`.
fn copies_matrix(g: &Atom, copies: usize) -> Vec<(usize, usize)> {
    let k = g.n();
    (0..copies).flat_map(|t| g.edges().iter().map(move |&(u, v)| (u + t * k, v + t * k))).collect()
}

/// `lambda_2` of `sum_i P_i A_i P_i^T` where `A_i` consists of
/// `s t / |V(G_i)|` disjoint copies of `G_i`, `s = lcm |V(G_i)|`, and `perms[i]`
/// gives the images of `P_i`.
pub fn permutation_sum_lambda2(graphs: &[Atom], t: usize, perms: &[Vec<usize>]) -> Result<f64> {
    let size = graphs.iter().fold(1usize, |acc, g| acc.lcm(&g.n().max(1))) * t;
    let mut m = DMatrix::<f64>::zeros(size, size);
    for (g, p) in graphs.iter().zip(perms) {
        if p.len() != size {
            return Err(Error::Dimension(format!("permutation of length {} for {size} vertices", p.len())));
        }
        for (u, v) in copies_matrix(g, size / g.n()) {
            m[(p[u], p[v])] += 1.0;
            m[(p[v], p[u])] += 1.0;
        }
    }
    let spec = symmetric_spectrum(&m)?;
    Ok(spec.get(1).copied().unwrap_or(f64::NEG_INFINITY))
}

/// Default cap on the vertex count of a permutation sum.
pub const PERM_SUM_VERTEX_CAP: usize = 2000;

/// Random permutation sums of copies of vertex-transitive graphs with
/// uniform independent permutations; trial `i` uses RNG stream `i`.
pub fn permutation_sum_experiment(
    graphs: &[Atom],
    t: usize,
    trials: usize,
    seed: u64,
    rho: f64,
    tol: f64,
) -> Result<PermSumStats> {
    if graphs.is_empty() || t == 0 {
        return Err(Error::Degenerate("need at least one graph and t >= 1".into()));
    }
    let size = graphs.iter().fold(1usize, |acc, g| acc.lcm(&g.n().max(1))) * t;
    if size > PERM_SUM_VERTEX_CAP {
        return Err(Error::Budget { what: "permutation sum vertices", size: size as u128, limit: PERM_SUM_VERTEX_CAP as u128 });
    }
    let lambda2 = (0..trials)
        .into_par_iter()
        .map(|i| {
            let mut r = rng::stream(seed, i as u64);
            let perms: Vec<Vec<usize>> = graphs
                .iter()
                .map(|_| {
                    let mut p: Vec<usize> = (0..size).collect();
                    p.shuffle(&mut r);
                    p
                })
                .collect();
            permutation_sum_lambda2(graphs, t, &perms)
        })
        .collect::<Result<Vec<f64>>>()?;
    let within = lambda2.iter().filter(|&&x| x <= rho + tol).count();
    Ok(PermSumStats {
        vertices: size,
        rho,
        tol,
        fraction_within: if trials == 0 { 0.0 } else { within as f64 / trials as f64 },
        lambda2,
    })
}

/// Haar-random orthogonal matrix (QR of a Gaussian matrix with the signs of
/// `R`'s diagonal folded into `Q`).
pub fn haar_orthogonal(d: usize, r: &mut rng::Rng) -> DMatrix<f64> {
    let g: DMatrix<f64> = DMatrix::from_fn(d, d, |_, _| StandardNormal.sample(r));
    let qr = g.qr();
    let (mut q, rr) = (qr.q(), qr.r());
    for j in 0..d {
        if rr[(j, j)] < 0.0 {
            for i in 0..d {
                q[(i, j)] = -q[(i, j)];
            }
        }
    }
    q
}

/// Monte Carlo estimate of the finite free convolution: average over Haar
/// orthogonal `Q` of the characteristic polynomial of
/// `diag(a) + Q diag(b) Q^T`, coefficients highest degree first. Returns
/// the averaged coefficients and their largest real root.
pub fn finite_free_convolution_mc(a: &[f64], b: &[f64], trials: usize, seed: u64) -> Result<(Vec<f64>, f64)> {
    let d = a.len();
    if b.len() != d || d == 0 || d > 12 {
        return Err(Error::Dimension(format!("root lists of lengths {} and {}", a.len(), b.len())));
    }
    let da = DMatrix::from_diagonal(&nalgebra::DVector::from_column_slice(a));
    let db = DMatrix::from_diagonal(&nalgebra::DVector::from_column_slice(b));
    let sums = (0..trials)
        .into_par_iter()
        .map(|i| {
            let mut r = rng::stream(seed, i as u64);
            let q = haar_orthogonal(d, &mut r);
            let m = &da + &q * &db * q.transpose();
            let m = (&m + m.transpose()) * 0.5;
            let eig = symmetric_spectrum(&m)?;
            // expand prod (x - lambda)
            let mut c = vec![1.0];
            for l in eig {
                let mut next = vec![0.0; c.len() + 1];
                for (k, &ck) in c.iter().enumerate() {
                    next[k] += ck;
                    next[k + 1] -= l * ck;
                }
                c = next;
            }
            Ok::<Vec<f64>, Error>(c)
        })
        .try_reduce(|| vec![0.0; d + 1], |mut x, y| {
            for (p, q) in x.iter_mut().zip(y) {
                *p += q;
            }
            Ok(x)
        })?;
    let avg: Vec<f64> = sums.into_iter().map(|c| c / trials.max(1) as f64).collect();
    let bound = 1.0 + avg.iter().skip(1).fold(0.0f64, |m, c| m.max(c.abs()));
    let eval = |x: f64| avg.iter().fold(0.0, |acc, c| acc * x + c);
    // scan down from the Cauchy bound for the first sign change
    let steps = 20000;
    let mut prev = eval(bound);
    let mut root = f64::NEG_INFINITY;
    for i in 1..=steps {
        let x = bound - 2.0 * bound * i as f64 / steps as f64;
        let v = eval(x);
        if v == 0.0 || v.signum() != prev.signum() {
            let (mut lo, mut hi) = (x, x + 2.0 * bound / steps as f64);
            for _ in 0..100 {
                let mid = 0.5 * (lo + hi);
                if eval(mid).signum() == eval(hi).signum() {
                    hi = mid;
                } else {
                    lo = mid;
                }
            }
            root = 0.5 * (lo + hi);
            break;
        }
        prev = v;
    }
    Ok((avg, root))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cauchy_examples() {
        let delta0 = SpectralMeasure::new(vec![(0.0, BigRational::one())]).unwrap();
        assert_eq!(delta0.cauchy(2.0).unwrap(), 0.5);
        assert!((SpectralMeasure::k2().cauchy(2.0).unwrap() - 2.0 / 3.0).abs() < 1e-15);
        let three = BigRational::from_integer(3.into());
        assert_eq!(SpectralMeasure::c4().cauchy_exact(&three).unwrap(), frac(28, 60));
        assert!(SpectralMeasure::c4().cauchy(2.0).is_err());
    }

    #[test]
    fn inverse_examples() {
        let delta0 = SpectralMeasure::new(vec![(0.0, BigRational::one())]).unwrap();
        assert!((delta0.inverse_cauchy(0.5).unwrap() - 2.0).abs() < 1e-12);
        let golden = 0.5 * (1.0 + 5f64.sqrt());
        assert!((SpectralMeasure::k2().inverse_cauchy(1.0).unwrap() - golden).abs() < 1e-12);
        assert!(SpectralMeasure::k2().inverse_cauchy(0.0).is_err());
        assert!(SpectralMeasure::k2().inverse_cauchy(-1.0).is_err());
    }

    #[test]
    fn closed_form_edges() {
        for delta in 3..=6 {
            let ms = vec![SpectralMeasure::k2(); delta];
            let e = free_convolution_right_edge(&ms).unwrap();
            assert!((e - closed_forms::tree(delta)).abs() < 1e-8, "{delta}: {e}");
        }
        let e = free_convolution_right_edge(&[SpectralMeasure::c4(), SpectralMeasure::c4(), SpectralMeasure::c4()]).unwrap();
        assert!((e - closed_forms::c4c4c4()).abs() < 1e-6);
        let e = free_convolution_right_edge(&[SpectralMeasure::c3(), SpectralMeasure::k2()]).unwrap();
        assert!((e - closed_forms::c3c2()).abs() < 1e-6);
    }

    #[test]
    fn two_edges_make_the_integer_line() {
        let e = free_convolution_right_edge(&[SpectralMeasure::k2(), SpectralMeasure::k2()]).unwrap();
        assert!((e - 2.0).abs() < 1e-9);
    }

    #[test]
    fn paschke() {
        let r = paschke_check().unwrap();
        assert!(r.agree, "{r:?}");
        assert!(r.root.0 > 3.6 && r.root.1 < 3.7);
    }

    #[test]
    fn measure_validation() {
        assert!(SpectralMeasure::new(vec![(0.0, frac(1, 2))]).is_err());
        assert!(SpectralMeasure::new(vec![]).is_err());
        let c4 = Atom::new(4, &crate::graph::cycle_edges(4)).unwrap();
        assert_eq!(SpectralMeasure::of_vertex_transitive(&c4).unwrap(), SpectralMeasure::c4());
    }
}
