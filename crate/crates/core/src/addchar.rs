//! The additive characteristic polynomial: colored cycles, trivial heaps,
//! the signing expectation and freelike walk counts.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng as _;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{neighbor_lists, SumGraph};
use crate::linalg::IntMatrix;
use crate::poly::ExactPolynomial;
use crate::rng;

/// Default cap on memoized heap-enumeration states.
pub const DEFAULT_HEAP_BUDGET: usize = 4_000_000;

/// Self-avoiding closed walk with its point forgotten, carrying a color.
///
/// `vertices` starts at the smallest vertex; a length-2 cycle is an edge
/// traversed out and back and is stored once as `[a, b]` with `a < b`. Longer
/// cycles keep their orientation.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ColoredCycle {
    pub color: usize,
    pub vertices: Vec<usize>,
}

impl ColoredCycle {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn mask(&self) -> u64 {
        self.vertices.iter().fold(0, |m, &v| m | (1u64 << v))
    }

    pub fn min_vertex(&self) -> usize {
        self.vertices[0]
    }

    /// Arcs `(u, v)` of the cycle.
    pub fn arcs(&self) -> Vec<(usize, usize)> {
        let l = self.vertices.len();
        (0..l).map(|i| (self.vertices[i], self.vertices[(i + 1) % l])).collect()
    }
}

/// Pairwise vertex-disjoint set of colored cycles.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrivialHeap {
    pub cycles: Vec<ColoredCycle>,
}

impl TrivialHeap {
    /// Number of touched vertices.
    pub fn length(&self) -> usize {
        self.cycles.iter().map(ColoredCycle::len).sum()
    }

    /// Number of cycles.
    pub fn size(&self) -> usize {
        self.cycles.len()
    }

    /// Product of cycle weights; 1 for 0/1 atoms.
    pub fn weight(&self) -> i64 {
        1
    }
}

fn check_width(n: usize) -> Result<()> {
    if n > 64 {
        return Err(Error::Budget { what: "vertices for cycle masks", size: n as u128, limit: 64 });
    }
    Ok(())
}

/// All colored cycles, sorted by (min vertex, length, color, vertex sequence).
pub fn enumerate_colored_cycles(s: &SumGraph) -> Result<Vec<ColoredCycle>> {
    check_width(s.n())?;
    let mut out = Vec::new();
    for (color, atom) in s.atoms().iter().enumerate() {
        for &(a, b) in atom.edges() {
            out.push(ColoredCycle { color, vertices: vec![a, b] });
        }
        for start in 0..s.n() {
            let mut path = vec![start];
            let mut on_path = vec![false; s.n()];
            on_path[start] = true;
            fn dfs(
                atom: &crate::graph::Atom,
                start: usize,
                path: &mut Vec<usize>,
                on_path: &mut [bool],
                color: usize,
                out: &mut Vec<ColoredCycle>,
            ) {
                let u = *path.last().unwrap();
                for &w in atom.neighbors(u) {
                    if w == start && path.len() >= 3 {
                        out.push(ColoredCycle { color, vertices: path.clone() });
                    } else if w > start && !on_path[w] {
                        on_path[w] = true;
                        path.push(w);
                        dfs(atom, start, path, on_path, color, out);
                        path.pop();
                        on_path[w] = false;
                    }
                }
            }
            dfs(atom, start, &mut path, &mut on_path, color, &mut out);
        }
    }
    out.sort_by(|x, y| (x.min_vertex(), x.len(), x.color, &x.vertices).cmp(&(y.min_vertex(), y.len(), y.color, &y.vertices)));
    Ok(out)
}

/// Every trivial heap, including the empty one. Exponential; for oracles on
/// small instances.
pub fn trivial_heaps(s: &SumGraph, limit: usize) -> Result<Vec<TrivialHeap>> {
    let cycles = enumerate_colored_cycles(s)?;
    let masks: Vec<u64> = cycles.iter().map(ColoredCycle::mask).collect();
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    fn rec(
        i: usize,
        used: u64,
        cycles: &[ColoredCycle],
        masks: &[u64],
        chosen: &mut Vec<usize>,
        out: &mut Vec<TrivialHeap>,
        limit: usize,
    ) -> Result<()> {
        if i == cycles.len() {
            if out.len() >= limit {
                return Err(Error::Budget { what: "trivial heaps", size: out.len() as u128 + 1, limit: limit as u128 });
            }
            out.push(TrivialHeap { cycles: chosen.iter().map(|&k| cycles[k].clone()).collect() });
            return Ok(());
        }
        rec(i + 1, used, cycles, masks, chosen, out, limit)?;
        if masks[i] & used == 0 {
            chosen.push(i);
            rec(i + 1, used | masks[i], cycles, masks, chosen, out, limit)?;
            chosen.pop();
        }
        Ok(())
    }
    rec(0, 0, &cycles, &masks, &mut chosen, &mut out, limit)?;
    Ok(out)
}

/// `sum over trivial heaps M of (-1)^|M| w(M) x^(n - l(M))`.
pub fn additive_char_poly(s: &SumGraph) -> Result<ExactPolynomial> {
    additive_char_poly_with_budget(s, DEFAULT_HEAP_BUDGET)
}

pub fn additive_char_poly_with_budget(s: &SumGraph, budget: usize) -> Result<ExactPolynomial> {
    let n = s.n();
    let cycles = enumerate_colored_cycles(s)?;
    // total weight of cycles per vertex set, grouped by smallest vertex
    let mut by_min: Vec<BTreeMap<u64, i128>> = vec![BTreeMap::new(); n];
    for c in &cycles {
        *by_min[c.min_vertex()].entry(c.mask()).or_insert(0) += 1;
    }
    let by_min: Vec<Vec<(u64, i128)>> = by_min.into_iter().map(|m| m.into_iter().collect()).collect();

    struct Ctx<'a> {
        n: usize,
        by_min: &'a [Vec<(u64, i128)>],
        memo: HashMap<(usize, u64), Vec<i128>>,
        budget: usize,
    }

    // signed heap weights on vertices >= v avoiding `used`, indexed by the
    // number of covered vertices
    fn solve(ctx: &mut Ctx, v: usize, used: u64) -> Result<Vec<i128>> {
        if v == ctx.n {
            return Ok(vec![1]);
        }
        let used = used & !((1u64 << v) - 1);
        if used & (1u64 << v) != 0 {
            return solve(ctx, v + 1, used);
        }
        if let Some(r) = ctx.memo.get(&(v, used)) {
            return Ok(r.clone());
        }
        if ctx.memo.len() >= ctx.budget {
            return Err(Error::Budget { what: "heap enumeration states", size: ctx.memo.len() as u128 + 1, limit: ctx.budget as u128 });
        }
        let mut res = solve(ctx, v + 1, used)?;
        let by_min = ctx.by_min;
        for &(mask, w) in &by_min[v] {
            if mask & used != 0 {
                continue;
            }
            let sub = solve(ctx, v + 1, used | mask)?;
            let shift = mask.count_ones() as usize;
            if res.len() < sub.len() + shift {
                res.resize(sub.len() + shift, 0);
            }
            for (k, &x) in sub.iter().enumerate() {
                let term = x.checked_mul(w).ok_or(Error::Overflow)?;
                res[k + shift] = res[k + shift].checked_sub(term).ok_or(Error::Overflow)?;
            }
        }
        ctx.memo.insert((v, used), res.clone());
        Ok(res)
    }

    let mut ctx = Ctx { n, by_min: &by_min, memo: HashMap::new(), budget };
    let b = solve(&mut ctx, 0, 0)?;
    let mut desc = vec![0i128; n + 1];
    for (k, &x) in b.iter().enumerate() {
        desc[k] = x;
    }
    Ok(ExactPolynomial::from_desc_ints(&desc))
}

/// `sum over matchings M of (-1)^|M| x^(n - 2|M|)` of a simple graph.
pub fn matching_poly(n: usize, edges: &[(usize, usize)]) -> ExactPolynomial {
    let nbrs = neighbor_lists(n, edges);
    let mut counts = vec![BigInt::zero(); n / 2 + 1];
    fn rec(v: usize, matched: &mut [bool], size: usize, nbrs: &[Vec<usize>], counts: &mut [BigInt]) {
        let n = nbrs.len();
        let Some(u) = (v..n).find(|&u| !matched[u]) else {
            counts[size] += 1;
            return;
        };
        matched[u] = true;
        rec(u + 1, matched, size, nbrs, counts);
        for &w in &nbrs[u] {
            if !matched[w] {
                matched[w] = true;
                rec(u + 1, matched, size + 1, nbrs, counts);
                matched[w] = false;
            }
        }
        matched[u] = false;
    }
    rec(0, &mut vec![false; n], 0, &nbrs, &mut counts);
    let mut asc = vec![BigRational::zero(); n + 1];
    for (m, c) in counts.into_iter().enumerate() {
        let v = BigRational::from_integer(if m % 2 == 1 { -c } else { c });
        asc[n - 2 * m] = v;
    }
    ExactPolynomial::from_asc(asc)
}

/// How to average over balanced signings.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SigningMode {
    Exact { budget_bits: u32 },
    MonteCarlo { trials: usize, seed: u64 },
}

impl SigningMode {
    pub const fn exact() -> Self {
        SigningMode::Exact { budget_bits: 24 }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum ExpectedPoly {
    Exact(ExactPolynomial),
    /// Averaged coefficients, highest degree first.
    MonteCarlo(Vec<f64>),
}

/// Sign variables that matter: (atom, vertex) with the vertex in the atom's
/// support.
fn signing_slots(s: &SumGraph) -> Vec<(usize, usize)> {
    s.atoms().iter().enumerate().flat_map(|(j, a)| a.support().into_iter().map(move |v| (j, v))).collect()
}

fn signed_matrix(s: &SumGraph, slots: &[(usize, usize)], bits: u64) -> IntMatrix {
    let n = s.n();
    let mut sign = vec![vec![1i64; n]; s.c()];
    for (k, &(j, v)) in slots.iter().enumerate() {
        if bits >> k & 1 == 1 {
            sign[j][v] = -1;
        }
    }
    let mut m = IntMatrix::zeros(n);
    for (j, a) in s.atoms().iter().enumerate() {
        for &(u, v) in a.edges() {
            let x = sign[j][u] * sign[j][v];
            m.add(u, v, x);
            m.add(v, u, x);
        }
    }
    m
}

/// Expected characteristic polynomial of `sum_j Q_j Adj(A_j) Q_j` over
/// independent uniform diagonal sign matrices `Q_j`.
///
/// Signs at vertices outside an atom's support do not change the matrix and
/// are left out of the average.
pub fn expected_charpoly_signing(s: &SumGraph, mode: SigningMode) -> Result<ExpectedPoly> {
    let slots = signing_slots(s);
    match mode {
        SigningMode::Exact { budget_bits } => {
            let bits = slots.len() as u32;
            if bits > budget_bits.min(62) {
                return Err(Error::Budget { what: "signing bits", size: bits as u128, limit: budget_bits as u128 });
            }
            let total = 1u64 << bits;
            let sums = (0..total)
                .into_par_iter()
                .map(|b| signed_matrix(s, &slots, b).charpoly().map(|c| c.into_iter().map(BigInt::from).collect::<Vec<_>>()))
                .try_reduce(
                    || vec![BigInt::zero(); s.n() + 1],
                    |mut acc, x| {
                        for (a, b) in acc.iter_mut().zip(x) {
                            *a += b;
                        }
                        Ok(acc)
                    },
                )?;
            let den = BigInt::from(total);
            Ok(ExpectedPoly::Exact(ExactPolynomial::from_desc(
                sums.into_iter().map(|c| BigRational::new(c, den.clone())).collect(),
            )))
        }
        SigningMode::MonteCarlo { trials, seed } => {
            let mut r = rng::stream(seed, 0);
            let mut acc = vec![0.0; s.n() + 1];
            for _ in 0..trials {
                let b: u64 = if slots.is_empty() { 0 } else { r.random::<u64>() & (u64::MAX >> (64 - slots.len().min(64))) };
                let cp = signed_matrix(s, &slots, b).charpoly()?;
                for (a, c) in acc.iter_mut().zip(cp) {
                    *a += c as f64;
                }
            }
            Ok(ExpectedPoly::MonteCarlo(acc.into_iter().map(|a| a / trials.max(1) as f64).collect()))
        }
    }
}

/// Loop-erasure pieces of a walk, scanning for the first repeated vertex and
/// restarting from the beginning after every deletion.
pub fn loop_erasure(walk: &[usize]) -> (Vec<Vec<usize>>, Vec<usize>) {
    let mut w = walk.to_vec();
    let mut pieces = Vec::new();
    'outer: loop {
        let mut first_seen: HashMap<usize, usize> = HashMap::new();
        for t in 0..w.len() {
            if let Some(&s) = first_seen.get(&w[t]) {
                pieces.push(w[s..=t].to_vec());
                w.drain(s + 1..=t);
                continue 'outer;
            }
            first_seen.insert(w[t], t);
        }
        return (pieces, w);
    }
}

/// Default cap on the number of enumerated closed walks.
pub const DEFAULT_WALK_BUDGET: u128 = 200_000_000;

/// Total weight of closed freelike walks of length `k`: every closed walk in
/// the underlying simple graph weighted by the product, over its loop-erasure
/// pieces, of the number of atoms containing all arcs of the piece.
pub fn freelike_walk_count(s: &SumGraph, k: usize) -> Result<BigInt> {
    let n = s.n();
    let nbrs = s.support_neighbors();
    let dmax = nbrs.iter().map(Vec::len).max().unwrap_or(0) as u128;
    let bound = (n as u128).saturating_mul(dmax.saturating_pow(k as u32));
    if bound > DEFAULT_WALK_BUDGET {
        return Err(Error::Budget { what: "closed walks", size: bound, limit: DEFAULT_WALK_BUDGET });
    }
    if k == 0 {
        return Ok(BigInt::from(n));
    }
    let piece_weight = |piece: &[usize]| -> u64 {
        s.atoms().iter().filter(|a| piece.windows(2).all(|e| a.has_edge(e[0], e[1]))).count() as u64
    };
    let per_start: Vec<BigInt> = (0..n)
        .into_par_iter()
        .map(|u0| {
            let mut total = BigInt::zero();
            let mut walk = vec![u0];
            fn rec(
                walk: &mut Vec<usize>,
                k: usize,
                nbrs: &[Vec<usize>],
                total: &mut BigInt,
                piece_weight: &dyn Fn(&[usize]) -> u64,
            ) {
                let u = *walk.last().unwrap();
                if walk.len() == k + 1 {
                    if u == walk[0] {
                        let (pieces, _) = loop_erasure(walk);
                        let mut w = BigInt::one();
                        for p in &pieces {
                            let pw = piece_weight(p);
                            if pw == 0 {
                                return;
                            }
                            w *= pw;
                        }
                        *total += w;
                    }
                    return;
                }
                for &v in &nbrs[u] {
                    walk.push(v);
                    rec(walk, k, nbrs, total, piece_weight);
                    walk.pop();
                }
            }
            rec(&mut walk, k, &nbrs, &mut total, &piece_weight);
            total
        })
        .collect();
    Ok(per_start.into_iter().sum())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_edges, cycle_edges};

    fn p(desc: &[i64]) -> ExactPolynomial {
        ExactPolynomial::from_desc_ints(desc)
    }

    #[test]
    fn cycle_counts() {
        let k2 = SumGraph::from_edge_lists(2, &[vec![(0, 1)]]).unwrap();
        assert_eq!(enumerate_colored_cycles(&k2).unwrap().len(), 1);
        let c3 = SumGraph::from_edge_lists(3, &[cycle_edges(3)]).unwrap();
        let cyc = enumerate_colored_cycles(&c3).unwrap();
        assert_eq!(cyc.iter().filter(|c| c.len() == 2).count(), 3);
        assert_eq!(cyc.iter().filter(|c| c.len() == 3).count(), 2);
        let c4 = SumGraph::edge_atoms(4, &cycle_edges(4)).unwrap();
        let cyc = enumerate_colored_cycles(&c4).unwrap();
        assert_eq!(cyc.len(), 4);
        assert!(cyc.iter().all(|c| c.len() == 2));
    }

    #[test]
    fn polynomial_examples() {
        let c3 = SumGraph::from_edge_lists(3, &[cycle_edges(3)]).unwrap();
        assert_eq!(additive_char_poly(&c3).unwrap(), p(&[1, 0, -3, -2]));
        let c4 = SumGraph::edge_atoms(4, &cycle_edges(4)).unwrap();
        assert_eq!(additive_char_poly(&c4).unwrap(), p(&[1, 0, -4, 0, 2]));
        assert_eq!(matching_poly(2, &[(0, 1)]), p(&[1, 0, -1]));
        assert_eq!(matching_poly(4, &cycle_edges(4)), p(&[1, 0, -4, 0, 2]));
        assert_eq!(matching_poly(3, &[]), p(&[1, 0, 0, 0]));
    }

    #[test]
    fn heap_enumeration_agrees_with_memoized_sum() {
        let s = SumGraph::from_edge_lists(4, &[complete_edges(4), cycle_edges(4), vec![(0, 2)]]).unwrap();
        let heaps = trivial_heaps(&s, 1 << 20).unwrap();
        let mut desc = vec![0i64; 5];
        for h in &heaps {
            desc[h.length()] += if h.size() % 2 == 1 { -h.weight() } else { h.weight() };
        }
        assert_eq!(additive_char_poly(&s).unwrap(), p(&desc));
    }

    #[test]
    fn signing_expectation_examples() {
        let k2 = SumGraph::from_edge_lists(2, &[vec![(0, 1)]]).unwrap();
        assert_eq!(expected_charpoly_signing(&k2, SigningMode::exact()).unwrap(), ExpectedPoly::Exact(p(&[1, 0, -1])));
        let c4 = SumGraph::edge_atoms(4, &cycle_edges(4)).unwrap();
        assert_eq!(
            expected_charpoly_signing(&c4, SigningMode::exact()).unwrap(),
            ExpectedPoly::Exact(p(&[1, 0, -4, 0, 2]))
        );
        let two_c3 = SumGraph::from_edge_lists(3, &[cycle_edges(3), cycle_edges(3)]).unwrap();
        assert_eq!(
            expected_charpoly_signing(&two_c3, SigningMode::exact()).unwrap(),
            ExpectedPoly::Exact(additive_char_poly(&two_c3).unwrap())
        );
    }

    #[test]
    fn loop_erasure_restarts_from_the_beginning() {
        // 0 1 2 1 0: first repetition is 1 at positions 1 and 3
        let (pieces, rest) = loop_erasure(&[0, 1, 2, 1, 0]);
        assert_eq!(pieces, vec![vec![1, 2, 1], vec![0, 1, 0]]);
        assert_eq!(rest, vec![0]);
    }

    #[test]
    fn walk_count_examples() {
        let k2 = SumGraph::from_edge_lists(2, &[vec![(0, 1)]]).unwrap();
        assert_eq!(freelike_walk_count(&k2, 2).unwrap(), BigInt::from(2));
        let c4 = SumGraph::edge_atoms(4, &cycle_edges(4)).unwrap();
        // roots satisfy x^2 = 2 +- sqrt 2, so p_4 = 2((2 + sqrt 2)^2 + (2 - sqrt 2)^2) = 24
        assert_eq!(freelike_walk_count(&c4, 4).unwrap(), BigInt::from(24));
        assert_eq!(freelike_walk_count(&c4, 3).unwrap(), BigInt::zero());
    }
}
