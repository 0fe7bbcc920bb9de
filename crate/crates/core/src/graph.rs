//! Atoms, sum graphs, multigraphs with explicit dart pairing, covering maps
//! and the JSON graph document.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::IntMatrix;

/// Vertex numbering used by a graph document.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Indexing {
    #[default]
    Zero,
    One,
}

impl Indexing {
    fn offset(self) -> usize {
        match self {
            Indexing::Zero => 0,
            Indexing::One => 1,
        }
    }
}

/// On-disk form of a sum graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphDocument {
    pub n: usize,
    pub atoms: Vec<Vec<[usize; 2]>>,
    #[serde(default)]
    pub indexing: Indexing,
}

impl GraphDocument {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Malformed(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("graph document serializes")
    }
}

/// Plain graph on the vertex set `0..n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Atom {
    n: usize,
    edges: Vec<(usize, usize)>,
    nbrs: Vec<Vec<usize>>,
}

impl Atom {
    /// Builds an atom; `index` is only used in error reports.
    pub fn with_index(n: usize, edges: &[(usize, usize)], index: usize) -> Result<Self> {
        let mut set = BTreeSet::new();
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { atom: index, vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop { atom: index, vertex: u });
            }
            if !set.insert((u.min(v), u.max(v))) {
                return Err(Error::DuplicateEdge { atom: index, u, v });
            }
        }
        let edges: Vec<(usize, usize)> = set.into_iter().collect();
        let mut nbrs = vec![Vec::new(); n];
        for &(u, v) in &edges {
            nbrs[u].push(v);
            nbrs[v].push(u);
        }
        for l in &mut nbrs {
            l.sort_unstable();
        }
        Ok(Atom { n, edges, nbrs })
    }

    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        Self::with_index(n, edges, 0)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.nbrs[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.nbrs[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.nbrs[u].binary_search(&v).is_ok()
    }

    /// Non-isolated vertices, increasing.
    pub fn support(&self) -> Vec<usize> {
        (0..self.n).filter(|&v| !self.nbrs[v].is_empty()).collect()
    }

    pub fn in_support(&self, v: usize) -> bool {
        !self.nbrs[v].is_empty()
    }

    /// Nonempty and connected once isolated vertices are dropped.
    pub fn underlying_connected(&self) -> bool {
        let support = self.support();
        let Some(&start) = support.first() else {
            return false;
        };
        let mut seen = vec![false; self.n];
        seen[start] = true;
        let mut stack = vec![start];
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for &w in &self.nbrs[u] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == support.len()
    }

    pub fn adjacency(&self) -> IntMatrix {
        let mut m = IntMatrix::zeros(self.n);
        for &(u, v) in &self.edges {
            m.set(u, v, 1);
            m.set(v, u, 1);
        }
        m
    }

    /// The same edges on a larger vertex set, shifted by `offset`.
    pub fn embed(&self, n: usize, offset: usize) -> Result<Atom> {
        let edges: Vec<_> = self.edges.iter().map(|&(u, v)| (u + offset, v + offset)).collect();
        Atom::new(n, &edges)
    }
}

/// Result of [`SumGraph::validate`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Diagnostics {
    pub sum_connected: bool,
    /// Indices of atoms with no edges.
    pub empty_atoms: Vec<usize>,
    /// Indices of atoms that are disconnected after removing isolated vertices.
    pub disconnected_atoms: Vec<usize>,
}

impl Diagnostics {
    pub fn passed(&self) -> bool {
        self.sum_connected && self.empty_atoms.is_empty() && self.disconnected_atoms.is_empty()
    }

    pub fn messages(&self) -> Vec<String> {
        let mut out = Vec::new();
        for &j in &self.empty_atoms {
            out.push(format!("atom {j} is empty"));
        }
        for &j in &self.disconnected_atoms {
            out.push(format!("atom {j} disconnected after isolate removal"));
        }
        if !self.sum_connected {
            out.push("sum graph disconnected".to_string());
        }
        out
    }

    pub fn into_result(self) -> Result<()> {
        if self.passed() {
            Ok(())
        } else {
            Err(Error::InvalidAtoms(self.messages()))
        }
    }
}

/// Ordered list of atoms on a common vertex set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SumGraph {
    n: usize,
    atoms: Vec<Atom>,
}

impl SumGraph {
    pub fn new(n: usize, atoms: Vec<Atom>) -> Result<Self> {
        if let Some(a) = atoms.iter().find(|a| a.n != n) {
            return Err(Error::Dimension(format!("atom on {} vertices in a sum graph on {n}", a.n)));
        }
        Ok(SumGraph { n, atoms })
    }

    /// Atoms given as edge lists.
    pub fn from_edge_lists(n: usize, atoms: &[Vec<(usize, usize)>]) -> Result<Self> {
        let atoms = atoms.iter().enumerate().map(|(j, e)| Atom::with_index(n, e, j)).collect::<Result<_>>()?;
        Self::new(n, atoms)
    }

    /// One atom per edge of a simple graph.
    pub fn edge_atoms(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let lists: Vec<Vec<(usize, usize)>> = edges.iter().map(|&e| vec![e]).collect();
        Self::from_edge_lists(n, &lists)
    }

    pub fn from_document(doc: &GraphDocument) -> Result<Self> {
        let off = doc.indexing.offset();
        let mut lists = Vec::with_capacity(doc.atoms.len());
        for (j, atom) in doc.atoms.iter().enumerate() {
            let mut edges = Vec::with_capacity(atom.len());
            for &[u, v] in atom {
                for w in [u, v] {
                    if w < off || w - off >= doc.n {
                        return Err(Error::VertexOutOfRange { atom: j, vertex: w, n: doc.n });
                    }
                }
                edges.push((u - off, v - off));
            }
            lists.push(edges);
        }
        Self::from_edge_lists(doc.n, &lists)
    }

    pub fn parse(text: &str) -> Result<Self> {
        Self::from_document(&GraphDocument::from_json(text)?)
    }

    pub fn to_document(&self, indexing: Indexing) -> GraphDocument {
        let off = indexing.offset();
        GraphDocument {
            n: self.n,
            atoms: self.atoms.iter().map(|a| a.edges.iter().map(|&(u, v)| [u + off, v + off]).collect()).collect(),
            indexing,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of atoms.
    pub fn c(&self) -> usize {
        self.atoms.len()
    }

    pub fn atoms(&self) -> &[Atom] {
        &self.atoms
    }

    pub fn atom(&self, j: usize) -> &Atom {
        &self.atoms[j]
    }

    /// `sum_j Adj(A_j)`.
    pub fn multi_adjacency(&self) -> IntMatrix {
        let mut m = IntMatrix::zeros(self.n);
        for a in &self.atoms {
            for &(u, v) in &a.edges {
                m.add(u, v, 1);
                m.add(v, u, 1);
            }
        }
        m
    }

    /// Edges of the underlying simple graph, `u < v`, sorted.
    pub fn support_edges(&self) -> Vec<(usize, usize)> {
        let set: BTreeSet<(usize, usize)> = self.atoms.iter().flat_map(|a| a.edges.iter().copied()).collect();
        set.into_iter().collect()
    }

    /// Neighbor lists of the underlying simple graph.
    pub fn support_neighbors(&self) -> Vec<Vec<usize>> {
        let mut nbrs = vec![Vec::new(); self.n];
        for (u, v) in self.support_edges() {
            nbrs[u].push(v);
            nbrs[v].push(u);
        }
        nbrs
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.atoms.iter().map(|a| a.degree(v)).sum::<usize>()).max().unwrap_or(0)
    }

    /// Connected component label of every vertex (labels in order of first
    /// appearance).
    pub fn component_labels(&self) -> Vec<usize> {
        component_labels(self.n, &self.support_edges())
    }

    pub fn is_connected(&self) -> bool {
        self.n > 0 && self.component_labels().iter().all(|&l| l == 0)
    }

    pub fn validate(&self) -> Diagnostics {
        let mut empty_atoms = Vec::new();
        let mut disconnected_atoms = Vec::new();
        for (j, a) in self.atoms.iter().enumerate() {
            if a.edges.is_empty() {
                empty_atoms.push(j);
            } else if !a.underlying_connected() {
                disconnected_atoms.push(j);
            }
        }
        Diagnostics { sum_connected: self.is_connected(), empty_atoms, disconnected_atoms }
    }

    /// Disjoint union; atoms of `self` come first.
    pub fn disjoint_union(&self, other: &SumGraph) -> Result<SumGraph> {
        let n = self.n + other.n;
        let mut atoms = Vec::with_capacity(self.c() + other.c());
        for a in &self.atoms {
            atoms.push(a.embed(n, 0)?);
        }
        for a in &other.atoms {
            atoms.push(a.embed(n, self.n)?);
        }
        SumGraph::new(n, atoms)
    }

    pub fn multigraph(&self) -> MultiGraph {
        let edges: Vec<(usize, usize)> = self.atoms.iter().flat_map(|a| a.edges.iter().copied()).collect();
        MultiGraph::from_edges(self.n, &edges)
    }
}

/// Component labels from an edge list.
pub fn component_labels(n: usize, edges: &[(usize, usize)]) -> Vec<usize> {
    let mut nbrs = vec![Vec::new(); n];
    for &(u, v) in edges {
        nbrs[u].push(v);
        nbrs[v].push(u);
    }
    let mut label = vec![usize::MAX; n];
    let mut next = 0;
    for s in 0..n {
        if label[s] != usize::MAX {
            continue;
        }
        label[s] = next;
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            for &w in &nbrs[u] {
                if label[w] == usize::MAX {
                    label[w] = next;
                    stack.push(w);
                }
            }
        }
        next += 1;
    }
    label
}

/// Multigraph given by darts; `pair[d]` is the reverse of dart `d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiGraph {
    n: usize,
    darts: Vec<(usize, usize)>,
    pair: Vec<usize>,
    out: Vec<Vec<usize>>,
}

impl MultiGraph {
    /// Each edge `{u, v}` becomes darts `2e = (u, v)` and `2e + 1 = (v, u)`.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut darts = Vec::with_capacity(2 * edges.len());
        let mut pair = Vec::with_capacity(2 * edges.len());
        for (e, &(u, v)) in edges.iter().enumerate() {
            darts.push((u, v));
            darts.push((v, u));
            pair.push(2 * e + 1);
            pair.push(2 * e);
        }
        Self::from_darts(n, darts, pair).expect("edge list gives a valid pairing")
    }

    pub fn from_darts(n: usize, darts: Vec<(usize, usize)>, pair: Vec<usize>) -> Result<Self> {
        if pair.len() != darts.len() {
            return Err(Error::Dimension("dart pairing length".into()));
        }
        for (d, &(u, v)) in darts.iter().enumerate() {
            let p = *pair.get(d).ok_or_else(|| Error::Dimension("dart pairing".into()))?;
            if u >= n || v >= n {
                return Err(Error::Dimension(format!("dart ({u}, {v}) outside {n} vertices")));
            }
            if p >= darts.len() || p == d || pair[p] != d || darts[p] != (v, u) {
                return Err(Error::Malformed(format!("dart {d} is not properly paired")));
            }
        }
        let mut out = vec![Vec::new(); n];
        for (d, &(u, _)) in darts.iter().enumerate() {
            out[u].push(d);
        }
        Ok(MultiGraph { n, darts, pair, out })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn darts(&self) -> &[(usize, usize)] {
        &self.darts
    }

    pub fn reverse(&self, d: usize) -> usize {
        self.pair[d]
    }

    pub fn darts_from(&self, v: usize) -> &[usize] {
        &self.out[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.out[v].len()
    }

    /// Edge representatives: darts `d` with `d < reverse(d)`, in order.
    pub fn edge_darts(&self) -> Vec<usize> {
        (0..self.darts.len()).filter(|&d| d < self.pair[d]).collect()
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.edge_darts().into_iter().map(|d| self.darts[d]).collect()
    }

    pub fn num_edges(&self) -> usize {
        self.darts.len() / 2
    }

    pub fn adjacency(&self) -> IntMatrix {
        let mut m = IntMatrix::zeros(self.n);
        for &(u, v) in &self.darts {
            m.add(u, v, 1);
        }
        m
    }

    pub fn neighbor_lists(&self) -> Vec<Vec<u32>> {
        (0..self.n).map(|v| self.out[v].iter().map(|&d| self.darts[d].1 as u32).collect()).collect()
    }

    pub fn component_labels(&self) -> Vec<usize> {
        component_labels(self.n, &self.edges())
    }

    pub fn num_components(&self) -> usize {
        self.component_labels().iter().max().map_or(0, |m| m + 1)
    }

    pub fn is_connected(&self) -> bool {
        self.n > 0 && self.num_components() == 1
    }

    pub fn has_loops(&self) -> bool {
        self.darts.iter().any(|&(u, v)| u == v)
    }

    pub fn is_simple(&self) -> bool {
        let set: BTreeSet<_> = self.darts.iter().collect();
        !self.has_loops() && set.len() == self.darts.len()
    }
}

/// Vertex and edge maps between multigraphs; edges are numbered as in
/// [`MultiGraph::edge_darts`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverMap {
    pub f_v: Vec<usize>,
    pub f_e: Vec<usize>,
}

impl CoverMap {
    pub fn identity(g: &MultiGraph) -> Self {
        CoverMap { f_v: (0..g.n).collect(), f_e: (0..g.num_edges()).collect() }
    }
}

fn image_darts(f: &CoverMap, g1: &MultiGraph, g2: &MultiGraph) -> Result<Vec<Option<usize>>> {
    if f.f_v.len() != g1.n || f.f_e.len() != g1.num_edges() {
        return Err(Error::Dimension("cover map domain does not match the source graph".into()));
    }
    if f.f_v.iter().any(|&v| v >= g2.n) || f.f_e.iter().any(|&e| e >= g2.num_edges()) {
        return Err(Error::Dimension("cover map image outside the target graph".into()));
    }
    let e1 = g1.edge_darts();
    let e2 = g2.edge_darts();
    let mut img = vec![None; g1.darts.len()];
    for (k, &d) in e1.iter().enumerate() {
        let t = e2[f.f_e[k]];
        for (dd, tt) in [(d, t), (g1.pair[d], g2.pair[t])] {
            let (u, v) = g1.darts[dd];
            let (a, b) = g2.darts[tt];
            if (f.f_v[u], f.f_v[v]) == (a, b) {
                img[dd] = Some(tt);
            } else if (f.f_v[u], f.f_v[v]) == (b, a) {
                img[dd] = Some(g2.pair[tt]);
            }
        }
    }
    Ok(img)
}

/// Local covering condition at vertex `u` of `g1`: the dart images out of `u`
/// biject onto the darts out of `f_v(u)`.
pub fn local_cover_ok(f: &CoverMap, g1: &MultiGraph, g2: &MultiGraph, u: usize) -> Result<bool> {
    let img = image_darts(f, g1, g2)?;
    Ok(local_ok(&img, g1, g2, f.f_v[u], u))
}

fn local_ok(img: &[Option<usize>], g1: &MultiGraph, g2: &MultiGraph, fu: usize, u: usize) -> bool {
    let mut got: Vec<usize> = Vec::new();
    for &d in &g1.out[u] {
        match img[d] {
            Some(t) if g2.darts[t].0 == fu => got.push(t),
            _ => return false,
        }
    }
    got.sort_unstable();
    let mut want = g2.out[fu].clone();
    want.sort_unstable();
    got == want
}

/// Whether `f` is a covering map `g1 -> g2`: surjective on vertices and edges,
/// edge-endpoint compatible, and locally bijective on incident edges.
pub fn check_cover(f: &CoverMap, g1: &MultiGraph, g2: &MultiGraph) -> Result<bool> {
    let img = image_darts(f, g1, g2)?;
    if img.iter().any(|d| d.is_none()) {
        return Ok(false);
    }
    let vs: BTreeSet<_> = f.f_v.iter().collect();
    let es: BTreeSet<_> = f.f_e.iter().collect();
    if vs.len() != g2.n || es.len() != g2.num_edges() {
        return Ok(false);
    }
    Ok((0..g1.n).all(|u| local_ok(&img, g1, g2, f.f_v[u], u)))
}

/// Edges of the cycle on `n >= 3` vertices (`n = 2` gives a single edge).
pub fn cycle_edges(n: usize) -> Vec<(usize, usize)> {
    match n {
        0 | 1 => Vec::new(),
        2 => vec![(0, 1)],
        _ => (0..n).map(|i| (i, (i + 1) % n)).collect(),
    }
}

pub fn complete_edges(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect()
}

pub fn path_edges(n: usize) -> Vec<(usize, usize)> {
    (1..n).map(|i| (i - 1, i)).collect()
}

/// `K_{a,b}` with parts `0..a` and `a..a+b`.
pub fn complete_bipartite_edges(a: usize, b: usize) -> Vec<(usize, usize)> {
    (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))).collect()
}

/// Neighbor lists of a simple graph.
pub fn neighbor_lists(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let mut nbrs = vec![Vec::new(); n];
    for &(u, v) in edges {
        nbrs[u].push(v);
        nbrs[v].push(u);
    }
    for l in &mut nbrs {
        l.sort_unstable();
    }
    nbrs
}

/// Isomorphism between two simple graphs given by sorted neighbor lists,
/// optionally forcing `a[fixed.0] -> b[fixed.1]`. Backtracking with degree
/// pruning; intended for small graphs.
pub fn find_isomorphism(a: &[Vec<usize>], b: &[Vec<usize>], fixed: Option<(usize, usize)>) -> Option<Vec<usize>> {
    let n = a.len();
    if b.len() != n {
        return None;
    }
    let mut da: Vec<usize> = a.iter().map(Vec::len).collect();
    let mut db: Vec<usize> = b.iter().map(Vec::len).collect();
    da.sort_unstable();
    db.sort_unstable();
    if da != db {
        return None;
    }
    // visit order: BFS from the fixed vertex (or 0), so later vertices have
    // already-mapped neighbors
    let mut order = Vec::with_capacity(n);
    let mut seen = vec![false; n];
    let starts = fixed.map(|f| f.0).into_iter().chain(0..n);
    for s in starts {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut q = std::collections::VecDeque::from([s]);
        while let Some(u) = q.pop_front() {
            order.push(u);
            for &w in &a[u] {
                if !seen[w] {
                    seen[w] = true;
                    q.push_back(w);
                }
            }
        }
    }
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn rec(
        i: usize,
        order: &[usize],
        a: &[Vec<usize>],
        b: &[Vec<usize>],
        map: &mut [usize],
        used: &mut [bool],
        fixed: Option<(usize, usize)>,
    ) -> bool {
        if i == order.len() {
            return true;
        }
        let u = order[i];
        let candidates: Vec<usize> = match fixed {
            Some((fu, fv)) if fu == u => vec![fv],
            _ => (0..b.len()).collect(),
        };
        for x in candidates {
            if used[x] || b[x].len() != a[u].len() {
                continue;
            }
            let ok = a[u].iter().all(|&w| map[w] == usize::MAX || b[x].binary_search(&map[w]).is_ok())
                && b[x].iter().filter(|&&y| used[y]).count()
                    == a[u].iter().filter(|&&w| map[w] != usize::MAX).count();
            if !ok {
                continue;
            }
            map[u] = x;
            used[x] = true;
            if rec(i + 1, order, a, b, map, used, fixed) {
                return true;
            }
            map[u] = usize::MAX;
            used[x] = false;
        }
        false
    }
    rec(0, &order, a, b, &mut map, &mut used, fixed).then_some(map)
}

/// Vertex-transitivity by searching an automorphism `0 -> v` for every `v`.
pub fn is_vertex_transitive(nbrs: &[Vec<usize>]) -> bool {
    (0..nbrs.len()).all(|v| find_isomorphism(nbrs, nbrs, Some((0, v))).is_some())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_examples() {
        let s = SumGraph::parse(r#"{"n":2,"atoms":[[[0,1]]]}"#).unwrap();
        assert_eq!((s.n(), s.c()), (2, 1));
        let s = SumGraph::parse(r#"{"n":3,"atoms":[[[0,1],[1,2],[0,2]]]}"#).unwrap();
        assert_eq!(s.atom(0).edges().len(), 3);
        let s = SumGraph::parse(r#"{"n":4,"atoms":[[[0,1]],[[1,2]],[[2,3]],[[0,3]]]}"#).unwrap();
        assert_eq!(s.c(), 4);
        assert!(s.validate().passed());
        let one = SumGraph::parse(r#"{"n":2,"atoms":[[[1,2]]],"indexing":"one"}"#).unwrap();
        assert_eq!(one.atom(0).edges(), &[(0, 1)]);
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(SumGraph::parse("{"), Err(Error::Malformed(_))));
        assert!(matches!(SumGraph::parse(r#"{"n":2,"atoms":[[[1,1]]]}"#), Err(Error::SelfLoop { .. })));
        assert!(matches!(
            SumGraph::parse(r#"{"n":2,"atoms":[[[0,1],[1,0]]]}"#),
            Err(Error::DuplicateEdge { .. })
        ));
        assert!(matches!(
            SumGraph::parse(r#"{"n":2,"atoms":[[[0,2]]]}"#),
            Err(Error::VertexOutOfRange { .. })
        ));
        assert!(matches!(
            SumGraph::parse(r#"{"n":2,"atoms":[[[0,1]]],"indexing":"one"}"#),
            Err(Error::VertexOutOfRange { .. })
        ));
    }

    #[test]
    fn validation_diagnostics() {
        let s = SumGraph::from_edge_lists(4, &[vec![(0, 1), (2, 3)], vec![(1, 2)]]).unwrap();
        let d = s.validate();
        assert_eq!(d.disconnected_atoms, vec![0]);
        assert!(d.messages().iter().any(|m| m.contains("disconnected after isolate removal")));
        let s = SumGraph::from_edge_lists(4, &[vec![(0, 1)], vec![(2, 3)]]).unwrap();
        let d = s.validate();
        assert!(!d.sum_connected);
        assert!(d.messages().iter().any(|m| m == "sum graph disconnected"));
    }

    #[test]
    fn cover_examples() {
        let c4 = MultiGraph::from_edges(4, &cycle_edges(4));
        assert!(check_cover(&CoverMap::identity(&c4), &c4, &c4).unwrap());

        let c8 = MultiGraph::from_edges(8, &cycle_edges(8));
        // edge i of C8 is {i, i+1}; its image is edge i mod 4 of C4
        let f = CoverMap { f_v: (0..8).map(|i| i % 4).collect(), f_e: (0..8).map(|i| i % 4).collect() };
        assert!(check_cover(&f, &c8, &c4).unwrap());

        let bad = CoverMap { f_v: vec![0; 3], f_e: vec![0; 2] };
        assert!(check_cover(&bad, &c4, &c4).is_err());
    }

    #[test]
    fn isomorphism_search() {
        let c6 = neighbor_lists(6, &cycle_edges(6));
        let two_c3 = neighbor_lists(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]);
        assert!(find_isomorphism(&c6, &two_c3, None).is_none());
        let shuffled = neighbor_lists(6, &[(0, 2), (2, 4), (4, 1), (1, 3), (3, 5), (5, 0)]);
        assert!(find_isomorphism(&c6, &shuffled, None).is_some());
        assert!(is_vertex_transitive(&c6));
        assert!(!is_vertex_transitive(&neighbor_lists(3, &path_edges(3))));
    }
}
