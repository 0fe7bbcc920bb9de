//! Lift encodings, permutation potentials, balanced and additive lifts,
//! representation matrices and lifted adjacency matrices.

use std::collections::BTreeMap;

use nalgebra::DMatrix;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::addchar::additive_char_poly;
use crate::error::{Error, Result};
use crate::graph::{Atom, MultiGraph, SumGraph};
use crate::linalg::{div_exact_desc, symmetric_spectrum, IntMatrix};
use crate::perm::{Permutation, SignedPermutation};
use crate::poly::ExactPolynomial;

/// Number of bits per (color, vertex): one per pair `a < b` of `0..big_n`.
pub fn pair_count(big_n: usize) -> usize {
    big_n * big_n.saturating_sub(1) / 2
}

/// Pairs `(a, b)`, `a < b`, in lexicographic order.
pub fn pairs(big_n: usize) -> Vec<(usize, usize)> {
    (0..big_n).flat_map(|a| (a + 1..big_n).map(move |b| (a, b))).collect()
}

/// `prod over pairs (a, b) in lexicographic order of Swap_ab(x_ab)`, the
/// leftmost factor applied last.
pub fn decode_potential(bits: &[bool], big_n: usize) -> Result<Permutation> {
    if bits.len() != pair_count(big_n) {
        return Err(Error::Dimension(format!("{} bits for N = {big_n}", bits.len())));
    }
    let mut p = Permutation::identity(big_n);
    // p = t_1 t_2 ... t_m as functions: build from the right
    for (&(a, b), &x) in pairs(big_n).iter().zip(bits).rev() {
        if x {
            p = Permutation::transposition(big_n, a, b).compose(&p);
        }
    }
    Ok(p)
}

/// One permutation per vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Potential {
    pub perms: Vec<Permutation>,
}

impl Potential {
    pub fn identity(n: usize, big_n: usize) -> Self {
        Potential { perms: vec![Permutation::identity(big_n); n] }
    }

    pub fn degree(&self) -> usize {
        self.perms.first().map_or(0, Permutation::len)
    }

    pub fn get(&self, v: usize) -> &Permutation {
        &self.perms[v]
    }
}

/// Bits for every (color, vertex, pair), flat index `(j * n + v) * P + p`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LiftEncoding {
    pub c: usize,
    pub n: usize,
    pub big_n: usize,
    pub bits: Vec<bool>,
}

impl LiftEncoding {
    pub fn zeros(c: usize, n: usize, big_n: usize) -> Self {
        LiftEncoding { c, n, big_n, bits: vec![false; c * n * pair_count(big_n)] }
    }

    pub fn from_bits(c: usize, n: usize, big_n: usize, bits: Vec<bool>) -> Result<Self> {
        if bits.len() != c * n * pair_count(big_n) {
            return Err(Error::Dimension(format!("{} bits for c = {c}, n = {n}, N = {big_n}", bits.len())));
        }
        Ok(LiftEncoding { c, n, big_n, bits })
    }

    pub fn index(&self, color: usize, vertex: usize, pair: usize) -> usize {
        (color * self.n + vertex) * pair_count(self.big_n) + pair
    }

    pub fn slot(&self, color: usize, vertex: usize) -> &[bool] {
        let p = pair_count(self.big_n);
        let start = (color * self.n + vertex) * p;
        &self.bits[start..start + p]
    }

    pub fn potentials(&self) -> Vec<Potential> {
        (0..self.c)
            .map(|j| Potential {
                perms: (0..self.n)
                    .map(|v| decode_potential(self.slot(j, v), self.big_n).expect("slot width matches"))
                    .collect(),
            })
            .collect()
    }

    /// Bits packed MSB-first into hex digits, zero padded at the end.
    pub fn to_hex(&self) -> String {
        let mut out = String::with_capacity(self.bits.len().div_ceil(4));
        for chunk in self.bits.chunks(4) {
            let mut d = 0u32;
            for i in 0..4 {
                d = d << 1 | u32::from(chunk.get(i).copied().unwrap_or(false));
            }
            out.push(char::from_digit(d, 16).unwrap());
        }
        out
    }

    pub fn from_hex(c: usize, n: usize, big_n: usize, hex: &str) -> Result<Self> {
        let total = c * n * pair_count(big_n);
        let hex = hex.trim();
        if hex.len() != total.div_ceil(4) {
            return Err(Error::Encoding(format!("expected {} hex digits, got {}", total.div_ceil(4), hex.len())));
        }
        let mut bits = Vec::with_capacity(hex.len() * 4);
        for ch in hex.chars() {
            let d = ch.to_digit(16).ok_or_else(|| Error::Encoding(format!("bad hex digit {ch:?}")))?;
            for i in (0..4).rev() {
                bits.push(d >> i & 1 == 1);
            }
        }
        if bits[total..].iter().any(|&b| b) {
            return Err(Error::Encoding("nonzero padding bits".into()));
        }
        bits.truncate(total);
        Self::from_bits(c, n, big_n, bits)
    }
}

/// Bernoulli parameters `P(x_ab = 1) = 1 / (b - a + 1)` (0-indexed `a < b`)
/// under which the decoded permutation is uniform on `S_N`. Verified
/// exhaustively for `N <= 6`.
pub fn uniform_bit_distribution(big_n: usize) -> Result<Vec<BigRational>> {
    if big_n < 2 {
        return Err(Error::Dimension(format!("N = {big_n}")));
    }
    let p: Vec<BigRational> =
        pairs(big_n).into_iter().map(|(a, b)| BigRational::new(BigInt::one(), BigInt::from(b - a + 1))).collect();
    if big_n <= 6 {
        let law = decoded_law(big_n, &p)?;
        let target = BigRational::new(BigInt::one(), BigInt::from((1..=big_n).product::<usize>()));
        if law.len() != (1..=big_n).product::<usize>() || law.values().any(|q| *q != target) {
            return Err(Error::Uniformity(big_n));
        }
    }
    Ok(p)
}

/// Exact law of the decoded permutation under independent bits with the
/// given `P(bit = 1)`.
pub fn decoded_law(big_n: usize, p: &[BigRational]) -> Result<BTreeMap<Permutation, BigRational>> {
    let m = pair_count(big_n);
    if p.len() != m {
        return Err(Error::Dimension(format!("{} parameters for N = {big_n}", p.len())));
    }
    let mut law: BTreeMap<Permutation, BigRational> = BTreeMap::new();
    for mask in 0u64..(1u64 << m) {
        let bits: Vec<bool> = (0..m).map(|i| mask >> i & 1 == 1).collect();
        let mut w = BigRational::one();
        for (b, q) in bits.iter().zip(p) {
            w *= if *b { q.clone() } else { BigRational::one() - q };
        }
        *law.entry(decode_potential(&bits, big_n)?).or_insert_with(BigRational::zero) += w;
    }
    Ok(law)
}

/// Balanced lift of one atom: vertex `(v, i)` is `v * N + i`, dart
/// `((u, i), (v, j))` present iff `Q_v j = Q_u i`.
pub fn balanced_lift(a: &Atom, q: &Potential, big_n: usize) -> MultiGraph {
    let mut edges = Vec::with_capacity(a.edges().len() * big_n);
    for &(u, v) in a.edges() {
        let qv_inv = q.get(v).inverse();
        for i in 0..big_n {
            let j = qv_inv.apply(q.get(u).apply(i));
            edges.push((u * big_n + i, v * big_n + j));
        }
    }
    MultiGraph::from_edges(a.n() * big_n, &edges)
}

/// Additive lift as a sum graph on `n * N` vertices whose `N * c` atoms are
/// the lifted copies: copy `k` of atom `j` lives on `{(u, Q_{j,u}^{-1} k)}`.
/// Atoms are ordered color-major.
pub fn additive_lift(s: &SumGraph, qs: &[Potential], big_n: usize) -> Result<SumGraph> {
    if qs.len() != s.c() {
        return Err(Error::Dimension(format!("{} potentials for {} atoms", qs.len(), s.c())));
    }
    let mut atoms = Vec::with_capacity(s.c() * big_n);
    for (j, a) in s.atoms().iter().enumerate() {
        let inv: Vec<Permutation> = qs[j].perms.iter().map(Permutation::inverse).collect();
        for k in 0..big_n {
            let edges: Vec<(usize, usize)> = a
                .edges()
                .iter()
                .map(|&(u, v)| (u * big_n + inv[u].apply(k), v * big_n + inv[v].apply(k)))
                .collect();
            atoms.push(Atom::with_index(s.n() * big_n, &edges, j * big_n + k)?);
        }
    }
    SumGraph::new(s.n() * big_n, atoms)
}

/// Representations used for lifted adjacency matrices.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RepKind {
    Perm(usize),
    Std(usize),
    Sgn(usize),
}

impl RepKind {
    pub fn dim(self) -> usize {
        match self {
            RepKind::Perm(n) => n,
            RepKind::Std(n) => n.saturating_sub(1),
            RepKind::Sgn(_) => 1,
        }
    }

    pub fn degree(self) -> usize {
        match self {
            RepKind::Perm(n) | RepKind::Std(n) | RepKind::Sgn(n) => n,
        }
    }
}

/// Permutation matrix with `P[sigma(i)][i] = 1`.
pub fn perm_matrix(p: &Permutation) -> DMatrix<f64> {
    let n = p.len();
    DMatrix::from_fn(n, n, |r, c| if p.apply(c) == r { 1.0 } else { 0.0 })
}

/// Orthonormal basis of the complement of the all-ones vector: columns
/// `2..N` of the Householder reflection sending `e_1` to the normalized
/// all-ones vector.
pub fn std_basis(big_n: usize) -> DMatrix<f64> {
    let s = 1.0 / (big_n as f64).sqrt();
    let w = DMatrix::from_fn(big_n, 1, |r, _| if r == 0 { 1.0 - s } else { -s });
    let h = DMatrix::identity(big_n, big_n) - &w * w.transpose() * (2.0 / (w.transpose() * &w)[(0, 0)]);
    h.columns(1, big_n - 1).into_owned()
}

/// Matrix of `p` in the given representation.
pub fn rep_matrix(p: &Permutation, rep: RepKind) -> DMatrix<f64> {
    match rep {
        RepKind::Perm(_) => perm_matrix(p),
        RepKind::Std(n) => {
            let b = std_basis(n);
            b.transpose() * perm_matrix(p) * b
        }
        RepKind::Sgn(_) => DMatrix::from_element(1, 1, p.sign() as f64),
    }
}

/// `sum_j pi(Q_j)^T (Adj(A_j) (x) I_d) pi(Q_j)`; block `(v, u)` of atom `j`
/// is `pi(Q_{j,v})^T pi(Q_{j,u})`, vertex-major indexing `v * d + i`.
pub fn lift_adjacency(s: &SumGraph, qs: &[Potential], rep: RepKind) -> Result<DMatrix<f64>> {
    if qs.len() != s.c() {
        return Err(Error::Dimension(format!("{} potentials for {} atoms", qs.len(), s.c())));
    }
    if rep.degree() < 2 && !matches!(rep, RepKind::Perm(_)) {
        return Err(Error::Dimension("std and sgn need N >= 2".into()));
    }
    let d = rep.dim();
    let n = s.n();
    let mut m = DMatrix::zeros(n * d, n * d);
    for (j, a) in s.atoms().iter().enumerate() {
        if qs[j].perms.len() != n || qs[j].degree() != rep.degree() {
            return Err(Error::Dimension(format!("potential {j} does not match n = {n}, N = {}", rep.degree())));
        }
        let mats: Vec<DMatrix<f64>> = qs[j].perms.iter().map(|p| rep_matrix(p, rep)).collect();
        for &(u, v) in a.edges() {
            let block = mats[v].transpose() * &mats[u];
            for r in 0..d {
                for c in 0..d {
                    m[(v * d + r, u * d + c)] += block[(r, c)];
                    m[(u * d + c, v * d + r)] += block[(r, c)];
                }
            }
        }
    }
    Ok(m)
}

/// Integer adjacency of the additive lift (the permutation-representation
/// lifted adjacency).
pub fn perm_lift_matrix(s: &SumGraph, qs: &[Potential]) -> IntMatrix {
    let big_n = qs.first().map_or(1, Potential::degree);
    let dim = s.n() * big_n;
    let mut m = IntMatrix::zeros(dim);
    for (j, a) in s.atoms().iter().enumerate() {
        let inv: Vec<Permutation> = qs[j].perms.iter().map(Permutation::inverse).collect();
        for &(u, v) in a.edges() {
            for i in 0..big_n {
                let jj = inv[v].apply(qs[j].perms[u].apply(i));
                m.add(u * big_n + i, v * big_n + jj, 1);
                m.add(v * big_n + jj, u * big_n + i, 1);
            }
        }
    }
    m
}

/// Exact characteristic polynomial of the std-lifted adjacency, highest
/// degree first: the signed matrix for `N = 2`, otherwise the quotient of the
/// lift's characteristic polynomial by the base's.
pub fn std_charpoly(s: &SumGraph, qs: &[Potential], base_charpoly: &[i128]) -> Result<Vec<i128>> {
    let big_n = qs.first().map_or(1, Potential::degree);
    if big_n == 2 {
        let mut m = IntMatrix::zeros(s.n());
        for (j, a) in s.atoms().iter().enumerate() {
            for &(u, v) in a.edges() {
                let x = qs[j].perms[u].sign() * qs[j].perms[v].sign();
                m.add(u, v, x);
                m.add(v, u, x);
            }
        }
        return m.charpoly();
    }
    let full = perm_lift_matrix(s, qs).charpoly()?;
    div_exact_desc(&full, base_charpoly)
        .ok_or_else(|| Error::Reconciliation("lift characteristic polynomial not divisible by the base".into()))
}

/// Old and new spectra of an additive lift.
#[derive(Clone, Debug)]
pub struct SpectrumSplit {
    pub old: Vec<f64>,
    pub new: Vec<f64>,
    pub lift: Vec<f64>,
    /// Largest deviation in the sorted matching of `old + new` against `lift`.
    pub max_deviation: f64,
}

/// Splits the lift spectrum into the base spectrum and the std-lifted
/// spectrum, checking the multiset union within `1e-8`.
pub fn spectrum_split(s: &SumGraph, qs: &[Potential], big_n: usize) -> Result<SpectrumSplit> {
    let old = symmetric_spectrum(&s.multi_adjacency().to_f64())?;
    let new = if big_n >= 2 { symmetric_spectrum(&lift_adjacency(s, qs, RepKind::Std(big_n))?)? } else { Vec::new() };
    let lift = symmetric_spectrum(&additive_lift(s, qs, big_n)?.multi_adjacency().to_f64())?;
    let mut merged: Vec<f64> = old.iter().chain(&new).copied().collect();
    merged.sort_by(|a, b| b.total_cmp(a));
    if merged.len() != lift.len() {
        return Err(Error::Reconciliation(format!("{} old+new eigenvalues vs {} lift eigenvalues", merged.len(), lift.len())));
    }
    let max_deviation = merged.iter().zip(&lift).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max);
    if max_deviation > 1e-8 {
        return Err(Error::Reconciliation(format!("spectra differ by {max_deviation:e}")));
    }
    Ok(SpectrumSplit { old, new, lift, max_deviation })
}

/// The three expected polynomials compared by [`rep_invariance_check`].
#[derive(Clone, Debug)]
pub struct RepInvariance {
    /// Uniform `S_{N+1}` potentials, std representation.
    pub std_average: ExactPolynomial,
    /// Uniform signed-permutation potentials, defining representation.
    pub signed_average: ExactPolynomial,
    /// Uniform additive `N`-lifts, additive characteristic polynomial of the
    /// `N c` lifted atoms.
    pub lift_average: ExactPolynomial,
}

impl RepInvariance {
    pub fn agree(&self) -> bool {
        self.std_average == self.signed_average && self.signed_average == self.lift_average
    }
}

/// Default cap on enumerated potential tuples per group.
pub const DEFAULT_INVARIANCE_BUDGET: u128 = 2_000_000;

fn tuple_count(group: usize, slots: usize, budget: u128) -> Result<u64> {
    let total = (group as u128).checked_pow(slots as u32).unwrap_or(u128::MAX);
    if total > budget {
        return Err(Error::Budget { what: "potential tuples", size: total, limit: budget });
    }
    Ok(total as u64)
}

/// Mixed-radix decoding of a tuple index into per-slot group indices.
fn digits(mut idx: u64, base: usize, slots: usize) -> Vec<usize> {
    (0..slots)
        .map(|_| {
            let d = (idx % base as u64) as usize;
            idx /= base as u64;
            d
        })
        .collect()
}

fn sum_desc(acc: &mut [BigInt], x: &[i128]) {
    for (a, b) in acc.iter_mut().zip(x) {
        *a += *b;
    }
}

fn average(sum: Vec<BigInt>, count: u64) -> ExactPolynomial {
    let den = BigInt::from(count);
    ExactPolynomial::from_desc(sum.into_iter().map(|c| BigRational::new(c, den.clone())).collect())
}

/// Exhaustive comparison of expected characteristic polynomials of lifted
/// adjacency matrices under `(S_{N+1}, std)` and `(B_N, def)` potentials,
/// and of the expected additive characteristic polynomial of random additive
/// `N`-lifts. Potentials are only varied on vertices in an atom's support;
/// elsewhere they do not affect the matrices.
pub fn rep_invariance_check(s: &SumGraph, big_n: usize) -> Result<RepInvariance> {
    rep_invariance_check_with_budget(s, big_n, DEFAULT_INVARIANCE_BUDGET)
}

pub fn rep_invariance_check_with_budget(s: &SumGraph, big_n: usize, budget: u128) -> Result<RepInvariance> {
    if big_n < 1 {
        return Err(Error::Dimension("N = 0".into()));
    }
    let n = s.n();
    let slots: Vec<(usize, usize)> =
        s.atoms().iter().enumerate().flat_map(|(j, a)| a.support().into_iter().map(move |v| (j, v))).collect();
    let base = s.multi_adjacency().charpoly()?;

    let potentials_from = |choice: &[Permutation], big: usize| -> Vec<Potential> {
        let mut qs = vec![Potential::identity(n, big); s.c()];
        for (k, &(j, v)) in slots.iter().enumerate() {
            qs[j].perms[v] = choice[k].clone();
        }
        qs
    };
    let reduce = |a: Result<Vec<BigInt>>, b: Result<Vec<BigInt>>| -> Result<Vec<BigInt>> {
        let mut a = a?;
        for (x, y) in a.iter_mut().zip(b?) {
            *x += y;
        }
        Ok(a)
    };

    // (S_{N+1}, std): sum of lift char polys, then divide by the base once
    let sym = Permutation::all(big_n + 1);
    let count = tuple_count(sym.len(), slots.len(), budget)?;
    let lifted_sum = (0..count)
        .into_par_iter()
        .map(|idx| {
            let choice: Vec<Permutation> = digits(idx, sym.len(), slots.len()).into_iter().map(|d| sym[d].clone()).collect();
            let cp = perm_lift_matrix(s, &potentials_from(&choice, big_n + 1)).charpoly()?;
            let mut v = vec![BigInt::zero(); cp.len()];
            sum_desc(&mut v, &cp);
            Ok(v)
        })
        .reduce(|| Ok(vec![BigInt::zero(); n * (big_n + 1) + 1]), reduce)?;
    let lifted = ExactPolynomial::from_desc(lifted_sum.into_iter().map(BigRational::from_integer).collect());
    let (q, r) = lifted.div_rem(&ExactPolynomial::from_desc_ints(&base))?;
    if !r.is_zero() {
        return Err(Error::Reconciliation("lift sum not divisible by the base polynomial".into()));
    }
    let std_average = q.scale(&BigRational::new(BigInt::one(), BigInt::from(count)));

    // (B_N, def)
    let signed = SignedPermutation::all(big_n);
    let mats: Vec<Vec<i64>> = signed.iter().map(SignedPermutation::matrix).collect();
    let count_b = tuple_count(signed.len(), slots.len(), budget)?;
    let signed_sum = (0..count_b)
        .into_par_iter()
        .map(|idx| {
            let choice = digits(idx, signed.len(), slots.len());
            let mut per = vec![vec![usize::MAX; n]; s.c()];
            for (k, &(j, v)) in slots.iter().enumerate() {
                per[j][v] = choice[k];
            }
            let mut m = IntMatrix::zeros(n * big_n);
            for (j, a) in s.atoms().iter().enumerate() {
                for &(u, v) in a.edges() {
                    let (du, dv) = (&mats[per[j][u]], &mats[per[j][v]]);
                    // block (v, u) = D_v^T D_u
                    for r in 0..big_n {
                        for c in 0..big_n {
                            let x: i64 = (0..big_n).map(|k| dv[k * big_n + r] * du[k * big_n + c]).sum();
                            if x != 0 {
                                m.add(v * big_n + r, u * big_n + c, x);
                                m.add(u * big_n + c, v * big_n + r, x);
                            }
                        }
                    }
                }
            }
            let cp = m.charpoly()?;
            let mut v = vec![BigInt::zero(); cp.len()];
            sum_desc(&mut v, &cp);
            Ok(v)
        })
        .reduce(|| Ok(vec![BigInt::zero(); n * big_n + 1]), reduce)?;
    let signed_average = average(signed_sum, count_b);

    // random additive N-lifts, additive characteristic polynomial
    let sym_n = Permutation::all(big_n);
    let count_l = tuple_count(sym_n.len(), slots.len(), budget)?;
    let lift_sum = (0..count_l)
        .into_par_iter()
        .map(|idx| {
            let choice: Vec<Permutation> =
                digits(idx, sym_n.len(), slots.len()).into_iter().map(|d| sym_n[d].clone()).collect();
            let lifted = additive_lift(s, &potentials_from(&choice, big_n), big_n)?;
            let p = additive_char_poly(&lifted)?;
            Ok(p.coeffs_desc().into_iter().map(|c| c.to_integer()).collect::<Vec<BigInt>>())
        })
        .reduce(|| Ok(vec![BigInt::zero(); n * big_n + 1]), reduce)?;
    let lift_average = average(lift_sum, count_l);

    Ok(RepInvariance { std_average, signed_average, lift_average })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::cycle_edges;

    #[test]
    fn decode_examples() {
        assert!(decode_potential(&[false; 3], 3).unwrap().is_identity());
        assert_eq!(decode_potential(&[true], 2).unwrap().images(), &[1, 0]);
        // one-indexed: 1 -> 3, 2 -> 1, 3 -> 2
        assert_eq!(decode_potential(&[true, true, false], 3).unwrap().images(), &[2, 0, 1]);
        assert!(decode_potential(&[true], 3).is_err());
    }

    #[test]
    fn uniform_parameters() {
        let half = BigRational::new(1.into(), 2.into());
        let third = BigRational::new(1.into(), 3.into());
        assert_eq!(uniform_bit_distribution(2).unwrap(), vec![half.clone()]);
        assert_eq!(uniform_bit_distribution(3).unwrap(), vec![half.clone(), third, half]);
        assert_eq!(uniform_bit_distribution(4).unwrap().len(), 6);
    }

    #[test]
    fn hex_round_trip() {
        let mut e = LiftEncoding::zeros(2, 3, 3);
        e.bits[0] = true;
        e.bits[5] = true;
        e.bits[17] = true;
        let h = e.to_hex();
        assert_eq!(h.len(), 5);
        assert_eq!(&h[..2], "84");
        assert_eq!(LiftEncoding::from_hex(2, 3, 3, &h).unwrap(), e);
        assert!(LiftEncoding::from_hex(2, 3, 3, "8400f").is_err());
    }

    #[test]
    fn balanced_lifts_are_disjoint_copies() {
        let c3 = Atom::new(3, &cycle_edges(3)).unwrap();
        let q = Potential {
            perms: vec![
                Permutation::identity(2),
                Permutation::transposition(2, 0, 1),
                Permutation::identity(2),
            ],
        };
        let g = balanced_lift(&c3, &q, 2);
        assert_eq!(g.num_components(), 2);
        assert!(g.is_simple());
    }

    #[test]
    fn std_and_sgn_agree_for_two_sheets() {
        let s = SumGraph::edge_atoms(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let t = Permutation::transposition(2, 0, 1);
        let id = Permutation::identity(2);
        let qs = vec![
            Potential { perms: vec![t.clone(), id.clone(), id.clone()] },
            Potential { perms: vec![id.clone(), id.clone(), id.clone()] },
            Potential { perms: vec![id.clone(), id.clone(), t] },
        ];
        let a = lift_adjacency(&s, &qs, RepKind::Std(2)).unwrap();
        let b = lift_adjacency(&s, &qs, RepKind::Sgn(2)).unwrap();
        assert!((a - b).abs().max() < 1e-12);
    }

    #[test]
    fn k2_rep_invariance() {
        let s = SumGraph::from_edge_lists(2, &[vec![(0, 1)]]).unwrap();
        let r = rep_invariance_check(&s, 2).unwrap();
        assert!(r.agree(), "{r:?}");
    }
}
