//! Dense symmetric eigensolving, exact integer characteristic polynomials and a
//! Lanczos top-eigenvalue routine for sparse graphs.

use nalgebra::{DMatrix, SymmetricEigen};

use crate::error::{Error, Result};

/// Square integer matrix, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    n: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(n: usize) -> Self {
        IntMatrix { n, data: vec![0; n * n] }
    }

    pub fn from_rows(n: usize, data: Vec<i64>) -> Result<Self> {
        if data.len() != n * n {
            return Err(Error::Dimension(format!("{} entries for a {n}x{n} matrix", data.len())));
        }
        Ok(IntMatrix { n, data })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> i64 {
        self.data[r * self.n + c]
    }

    #[inline]
    pub fn add(&mut self, r: usize, c: usize, v: i64) {
        self.data[r * self.n + c] += v;
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: i64) {
        self.data[r * self.n + c] = v;
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|r| (0..r).all(|c| self.get(r, c) == self.get(c, r)))
    }

    pub fn to_f64(&self) -> DMatrix<f64> {
        DMatrix::from_fn(self.n, self.n, |r, c| self.get(r, c) as f64)
    }

    /// `det(xI - A)` as descending coefficients `[1, c_1, ..., c_n]`.
    pub fn charpoly(&self) -> Result<Vec<i128>> {
        charpoly_berkowitz(self)
    }
}

/// Division-free Berkowitz algorithm in checked `i128` arithmetic.
///
/// Works from the trailing principal submatrix outward: if
/// `A = [[a, R], [C, A1]]` then `charpoly(A) = T * charpoly(A1)` with `T` the
/// lower-triangular Toeplitz matrix whose first column is
/// `1, -a, -R C, -R A1 C, -R A1^2 C, ...`.
fn charpoly_berkowitz(a: &IntMatrix) -> Result<Vec<i128>> {
    let n = a.n;
    let mut poly: Vec<i128> = vec![1];
    for k in (0..n).rev() {
        let m = n - k - 1;
        let mut t = Vec::with_capacity(m + 2);
        t.push(1i128);
        t.push(-(a.get(k, k) as i128));
        // v = A1^j C, starting with C
        let mut v: Vec<i128> = (0..m).map(|i| a.get(k + 1 + i, k) as i128).collect();
        for j in 0..m {
            let mut dot: i128 = 0;
            for i in 0..m {
                let r = a.get(k, k + 1 + i) as i128;
                if r != 0 {
                    dot = dot.checked_add(r.checked_mul(v[i]).ok_or(Error::Overflow)?).ok_or(Error::Overflow)?;
                }
            }
            t.push(-dot);
            if j + 1 < m {
                let mut next = vec![0i128; m];
                for (r, slot) in next.iter_mut().enumerate() {
                    let mut acc: i128 = 0;
                    for (c, &vc) in v.iter().enumerate() {
                        let e = a.get(k + 1 + r, k + 1 + c) as i128;
                        if e != 0 && vc != 0 {
                            acc = acc.checked_add(e.checked_mul(vc).ok_or(Error::Overflow)?).ok_or(Error::Overflow)?;
                        }
                    }
                    *slot = acc;
                }
                v = next;
            }
        }
        let mut next = vec![0i128; m + 2];
        for (i, slot) in next.iter_mut().enumerate() {
            let mut acc: i128 = 0;
            for (j, &pj) in poly.iter().enumerate().take(i + 1) {
                let tij = t[i - j];
                if tij != 0 && pj != 0 {
                    acc = acc.checked_add(tij.checked_mul(pj).ok_or(Error::Overflow)?).ok_or(Error::Overflow)?;
                }
            }
            *slot = acc;
        }
        poly = next;
    }
    Ok(poly)
}

/// Exact quotient of descending coefficient vectors; `den` must be monic.
/// Returns `None` if the division leaves a remainder.
pub fn div_exact_desc(num: &[i128], den: &[i128]) -> Option<Vec<i128>> {
    if den.first() != Some(&1) || num.len() < den.len() {
        return None;
    }
    let mut rem = num.to_vec();
    let qlen = num.len() - den.len() + 1;
    let mut q = vec![0i128; qlen];
    for i in 0..qlen {
        let coef = rem[i];
        q[i] = coef;
        if coef != 0 {
            for (j, &d) in den.iter().enumerate() {
                rem[i + j] = rem[i + j].checked_sub(coef.checked_mul(d)?)?;
            }
        }
    }
    rem[qlen..].iter().all(|&r| r == 0).then_some(q)
}

/// Eigenvalues of a symmetric matrix in descending order.
pub fn symmetric_spectrum(m: &DMatrix<f64>) -> Result<Vec<f64>> {
    if !m.is_square() {
        return Err(Error::Dimension(format!("{}x{} matrix", m.nrows(), m.ncols())));
    }
    let scale = m.iter().fold(1.0f64, |acc, x| acc.max(x.abs()));
    for r in 0..m.nrows() {
        for c in 0..r {
            if (m[(r, c)] - m[(c, r)]).abs() > 1e-12 * scale {
                return Err(Error::NotSymmetric);
            }
        }
    }
    if m.nrows() == 0 {
        return Ok(Vec::new());
    }
    let eig = SymmetricEigen::new(m.clone());
    let mut vals: Vec<f64> = eig.eigenvalues.iter().copied().collect();
    vals.sort_by(|a, b| b.total_cmp(a));
    Ok(vals)
}

/// Eigenvalues and eigenvectors (columns), eigenvalues descending.
pub fn symmetric_eigen(m: &DMatrix<f64>) -> Result<(Vec<f64>, DMatrix<f64>)> {
    symmetric_spectrum(m)?;
    let eig = SymmetricEigen::new(m.clone());
    let mut order: Vec<usize> = (0..m.nrows()).collect();
    order.sort_by(|&a, &b| eig.eigenvalues[b].total_cmp(&eig.eigenvalues[a]));
    let vals = order.iter().map(|&i| eig.eigenvalues[i]).collect();
    let vecs = DMatrix::from_fn(m.nrows(), m.nrows(), |r, c| eig.eigenvectors[(r, order[c])]);
    Ok((vals, vecs))
}

/// Adjacency lists of a simple symmetric graph.
pub type AdjacencyLists = Vec<Vec<u32>>;

fn spmv(adj: &AdjacencyLists, x: &[f64], y: &mut [f64]) {
    for (i, row) in adj.iter().enumerate() {
        y[i] = row.iter().map(|&j| x[j as usize]).sum();
    }
}

/// Top eigenvalue estimate for a graph adjacency operator.
#[derive(Clone, Copy, Debug)]
pub struct TopEigen {
    /// Largest Ritz value of the Lanczos tridiagonal matrix.
    pub ritz: f64,
    /// Rayleigh quotient of the reconstructed Ritz vector; a lower bound on
    /// the largest eigenvalue up to floating point rounding.
    pub rayleigh: f64,
    pub iterations: usize,
}

/// Lanczos iteration started from the normalized all-ones vector.
///
/// The Ritz vector is rebuilt by rerunning the (deterministic) recurrence, so
/// only O(n) memory is needed.
pub fn lanczos_top(adj: &AdjacencyLists, max_iters: usize) -> TopEigen {
    let n = adj.len();
    if n == 0 {
        return TopEigen { ritz: 0.0, rayleigh: 0.0, iterations: 0 };
    }
    let m = max_iters.clamp(1, n);
    let start = vec![1.0 / (n as f64).sqrt(); n];

    let run = |steps: usize, mut visit: Option<&mut dyn FnMut(usize, &[f64])>| -> (Vec<f64>, Vec<f64>) {
        let mut alphas = Vec::with_capacity(steps);
        let mut betas = Vec::with_capacity(steps);
        let mut q_prev = vec![0.0; n];
        let mut q = start.clone();
        let mut w = vec![0.0; n];
        let mut beta_prev = 0.0;
        for j in 0..steps {
            if let Some(f) = visit.as_mut() {
                f(j, &q);
            }
            spmv(adj, &q, &mut w);
            let alpha: f64 = w.iter().zip(&q).map(|(a, b)| a * b).sum();
            for i in 0..n {
                w[i] -= alpha * q[i] + beta_prev * q_prev[i];
            }
            alphas.push(alpha);
            let beta = w.iter().map(|x| x * x).sum::<f64>().sqrt();
            if j + 1 == steps || beta < 1e-12 {
                break;
            }
            betas.push(beta);
            std::mem::swap(&mut q_prev, &mut q);
            for i in 0..n {
                q[i] = w[i] / beta;
            }
            beta_prev = beta;
        }
        (alphas, betas)
    };

    let (alphas, betas) = run(m, None);
    let k = alphas.len();
    let t = DMatrix::from_fn(k, k, |r, c| {
        if r == c {
            alphas[r]
        } else if r == c + 1 {
            betas[c]
        } else if c == r + 1 {
            betas[r]
        } else {
            0.0
        }
    });
    let eig = SymmetricEigen::new(t);
    let (top, _) = eig
        .eigenvalues
        .iter()
        .enumerate()
        .fold((0usize, f64::NEG_INFINITY), |acc, (i, &v)| if v > acc.1 { (i, v) } else { acc });
    let ritz = eig.eigenvalues[top];
    let y: Vec<f64> = (0..k).map(|j| eig.eigenvectors[(j, top)]).collect();

    let mut x = vec![0.0; n];
    {
        let mut acc = |j: usize, q: &[f64]| {
            for i in 0..n {
                x[i] += y[j] * q[i];
            }
        };
        run(k, Some(&mut acc));
    }
    let mut ax = vec![0.0; n];
    spmv(adj, &x, &mut ax);
    let num: f64 = x.iter().zip(&ax).map(|(a, b)| a * b).sum();
    let den: f64 = x.iter().map(|a| a * a).sum();
    TopEigen { ritz, rayleigh: num / den, iterations: k }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle_adj(n: usize) -> DMatrix<f64> {
        DMatrix::from_fn(n, n, |r, c| if (r + 1) % n == c || (c + 1) % n == r { 1.0 } else { 0.0 })
    }

    fn assert_close(a: &[f64], b: &[f64]) {
        assert_eq!(a.len(), b.len());
        for (x, y) in a.iter().zip(b) {
            assert!((x - y).abs() <= 1e-10 * (1.0 + y.abs()), "{a:?} vs {b:?}");
        }
    }

    #[test]
    fn small_spectra() {
        let k2 = DMatrix::from_row_slice(2, 2, &[0.0, 1.0, 1.0, 0.0]);
        assert_close(&symmetric_spectrum(&k2).unwrap(), &[1.0, -1.0]);
        assert_close(&symmetric_spectrum(&cycle_adj(3)).unwrap(), &[2.0, -1.0, -1.0]);
        assert_close(&symmetric_spectrum(&cycle_adj(4)).unwrap(), &[2.0, 0.0, 0.0, -2.0]);
    }

    #[test]
    fn rejects_asymmetric() {
        let m = DMatrix::from_row_slice(2, 2, &[0.0, 1.0, 0.0, 0.0]);
        assert!(matches!(symmetric_spectrum(&m), Err(Error::NotSymmetric)));
    }

    #[test]
    fn berkowitz_matches_hand_expansion() {
        // [[a, b], [c, d]] -> x^2 - (a + d) x + (ad - bc)
        let m = IntMatrix::from_rows(2, vec![2, 3, 5, 7]).unwrap();
        assert_eq!(m.charpoly().unwrap(), vec![1, -9, -1]);
        let c3 = IntMatrix::from_rows(3, vec![0, 1, 1, 1, 0, 1, 1, 1, 0]).unwrap();
        assert_eq!(c3.charpoly().unwrap(), vec![1, 0, -3, -2]);
        assert_eq!(IntMatrix::zeros(0).charpoly().unwrap(), vec![1]);
    }

    #[test]
    fn exact_division() {
        // (x^2 - 1)(x - 2) / (x - 2)
        assert_eq!(div_exact_desc(&[1, -2, -1, 2], &[1, -2]), Some(vec![1, 0, -1]));
        assert_eq!(div_exact_desc(&[1, 0, 1], &[1, -1]), None);
    }

    #[test]
    fn lanczos_on_path() {
        // path on 6 vertices: lambda_max = 2 cos(pi / 7)
        let n = 6;
        let adj: AdjacencyLists = (0..n)
            .map(|i| {
                let mut v = Vec::new();
                if i > 0 {
                    v.push(i as u32 - 1);
                }
                if i + 1 < n {
                    v.push(i as u32 + 1);
                }
                v
            })
            .collect();
        let top = lanczos_top(&adj, 50);
        let exact = 2.0 * (std::f64::consts::PI / 7.0).cos();
        assert!((top.ritz - exact).abs() < 1e-10);
        assert!(top.rayleigh <= exact + 1e-12 && top.rayleigh > exact - 1e-9);
    }
}
