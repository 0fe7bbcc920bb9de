//! Finite balls of the additive product of a sum graph's atoms and spectral
//! radius estimates.

use std::collections::HashMap;
use std::fmt;

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Atom, CoverMap, MultiGraph, SumGraph};
use crate::linalg::{lanczos_top, symmetric_spectrum, AdjacencyLists};

/// Default cap on the number of words in a ball.
pub const DEFAULT_VERTEX_CAP: usize = 2_000_000;

const NONE: u32 = u32::MAX;

/// A word `v_1 C_1 v_2 ... C_k v_{k+1}` of the additive product.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct ProductVertex {
    pub root: usize,
    /// `(C_i, v_{i+1})` pairs.
    pub steps: Vec<(usize, usize)>,
}

impl ProductVertex {
    pub fn last_vertex(&self) -> usize {
        self.steps.last().map_or(self.root, |s| s.1)
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }
}

impl fmt::Display for ProductVertex {
    /// `"0"`, `"0 1:2 0:3"` for `v_1 = 0, C_1 = 1, v_2 = 2, ...`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.root)?;
        for (c, v) in &self.steps {
            write!(f, " {c}:{v}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug)]
struct Node {
    parent: u32,
    color: u32,
    vertex: u32,
}

/// Ball around the root word in the additive product, vertices in
/// lexicographic word order (the root is vertex 0).
#[derive(Clone, Debug)]
pub struct ProductBall {
    radius: usize,
    nodes: Vec<Node>,
    dist: Vec<usize>,
    graph: MultiGraph,
    /// Atom index of every edge, aligned with `graph.edges()`.
    edge_colors: Vec<usize>,
}

fn neighbor_keys(s: &SumGraph, nodes: &[Node], x: u32, out: &mut Vec<(u32, u32, u32)>) {
    out.clear();
    let node = nodes[x as usize];
    let u = node.vertex as usize;
    if node.parent == NONE {
        for (c, a) in s.atoms().iter().enumerate() {
            for &v in a.neighbors(u) {
                out.push((x, c as u32, v as u32));
            }
        }
        return;
    }
    let p = node.parent;
    let w = nodes[p as usize].vertex;
    let cc = node.color as usize;
    let atom = s.atom(cc);
    if atom.has_edge(w as usize, u) {
        // parent edge, marked by color NONE
        out.push((p, NONE, NONE));
    }
    for &v in atom.neighbors(u) {
        if v as u32 != w {
            out.push((p, node.color, v as u32));
        }
    }
    for (c, a) in s.atoms().iter().enumerate() {
        if c == cc {
            continue;
        }
        for &v in a.neighbors(u) {
            out.push((x, c as u32, v as u32));
        }
    }
}

impl ProductBall {
    pub fn radius(&self) -> usize {
        self.radius
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn graph(&self) -> &MultiGraph {
        &self.graph
    }

    pub fn distance(&self, i: usize) -> usize {
        self.dist[i]
    }

    pub fn edge_colors(&self) -> &[usize] {
        &self.edge_colors
    }

    pub fn word(&self, i: usize) -> ProductVertex {
        let mut steps = Vec::new();
        let mut x = i;
        while self.nodes[x].parent != NONE {
            steps.push((self.nodes[x].color as usize, self.nodes[x].vertex as usize));
            x = self.nodes[x].parent as usize;
        }
        steps.reverse();
        ProductVertex { root: self.nodes[x].vertex as usize, steps }
    }

    pub fn last_vertex(&self, i: usize) -> usize {
        self.nodes[i].vertex as usize
    }

    pub fn adjacency_lists(&self) -> AdjacencyLists {
        self.graph.neighbor_lists()
    }

    /// Projection onto the sum multigraph `s.multigraph()`: a word maps to its
    /// last vertex, an edge to the corresponding edge of the atom it came from.
    pub fn projection(&self, s: &SumGraph) -> CoverMap {
        let mut offsets = Vec::with_capacity(s.c());
        let mut acc = 0;
        for a in s.atoms() {
            offsets.push(acc);
            acc += a.edges().len();
        }
        let f_v: Vec<usize> = (0..self.len()).map(|i| self.last_vertex(i)).collect();
        let f_e = self
            .graph
            .edges()
            .iter()
            .zip(&self.edge_colors)
            .map(|(&(x, y), &c)| {
                let (a, b) = (f_v[x].min(f_v[y]), f_v[x].max(f_v[y]));
                let pos = s.atom(c).edges().binary_search(&(a, b)).expect("ball edge lies in its atom");
                offsets[c] + pos
            })
            .collect();
        CoverMap { f_v, f_e }
    }

    /// Largest eigenvalue of the ball's adjacency matrix by dense eigensolve;
    /// for small balls only.
    pub fn lambda_max_dense(&self) -> Result<f64> {
        let m = self.graph.adjacency().to_f64();
        Ok(symmetric_spectrum(&m)?.first().copied().unwrap_or(0.0))
    }
}

/// Ball of the given radius around the root word `0`.
pub fn build_ball(s: &SumGraph, radius: usize) -> Result<ProductBall> {
    build_ball_with(s, 0, radius, DEFAULT_VERTEX_CAP)
}

/// Ball with an explicit root vertex and word cap.
pub fn build_ball_with(s: &SumGraph, root: usize, radius: usize, cap: usize) -> Result<ProductBall> {
    s.validate().into_result()?;
    if root >= s.n() {
        return Err(Error::VertexOutOfRange { atom: 0, vertex: root, n: s.n() });
    }
    let mut nodes = vec![Node { parent: NONE, color: NONE, vertex: root as u32 }];
    let mut dist = vec![0usize];
    let mut index: HashMap<(u32, u32, u32), u32> = HashMap::new();
    let mut frontier = vec![0u32];
    let mut keys = Vec::new();
    for d in 1..=radius {
        let mut next = Vec::new();
        for &x in &frontier {
            neighbor_keys(s, &nodes, x, &mut keys);
            for &k in &keys {
                if k.1 == NONE || index.contains_key(&k) {
                    continue;
                }
                if nodes.len() >= cap {
                    return Err(Error::Budget { what: "ball vertices", size: nodes.len() as u128 + 1, limit: cap as u128 });
                }
                let id = nodes.len() as u32;
                index.insert(k, id);
                nodes.push(Node { parent: k.0, color: k.1, vertex: k.2 });
                dist.push(d);
                next.push(id);
            }
        }
        frontier = next;
    }

    // lexicographic order = preorder of the word trie with children sorted by (color, vertex)
    let mut children: Vec<Vec<u32>> = vec![Vec::new(); nodes.len()];
    for (i, nd) in nodes.iter().enumerate().skip(1) {
        children[nd.parent as usize].push(i as u32);
    }
    for ch in &mut children {
        ch.sort_by_key(|&c| (nodes[c as usize].color, nodes[c as usize].vertex));
    }
    let mut order = Vec::with_capacity(nodes.len());
    let mut stack = vec![0u32];
    while let Some(x) = stack.pop() {
        order.push(x);
        for &c in children[x as usize].iter().rev() {
            stack.push(c);
        }
    }
    let mut new_id = vec![0u32; nodes.len()];
    for (i, &old) in order.iter().enumerate() {
        new_id[old as usize] = i as u32;
    }

    let mut edges = Vec::new();
    for x in 0..nodes.len() as u32 {
        neighbor_keys(s, &nodes, x, &mut keys);
        for &k in &keys {
            let (y, color) = if k.1 == NONE {
                (Some(k.0), nodes[x as usize].color)
            } else {
                (index.get(&k).copied(), k.1)
            };
            if let Some(y) = y {
                let (a, b) = (new_id[x as usize], new_id[y as usize]);
                if a < b {
                    edges.push((a as usize, b as usize, color as usize));
                }
            }
        }
    }
    edges.sort_unstable();
    let new_nodes: Vec<Node> = order
        .iter()
        .map(|&old| {
            let nd = nodes[old as usize];
            Node { parent: if nd.parent == NONE { NONE } else { new_id[nd.parent as usize] }, ..nd }
        })
        .collect();
    let new_dist: Vec<usize> = order.iter().map(|&old| dist[old as usize]).collect();
    let pairs: Vec<(usize, usize)> = edges.iter().map(|&(a, b, _)| (a, b)).collect();
    Ok(ProductBall {
        radius,
        graph: MultiGraph::from_edges(new_nodes.len(), &pairs),
        edge_colors: edges.iter().map(|e| e.2).collect(),
        nodes: new_nodes,
        dist: new_dist,
    })
}

fn spmv(adj: &AdjacencyLists, x: &[f64], y: &mut [f64]) {
    for (i, row) in adj.iter().enumerate() {
        y[i] = row.iter().map(|&j| x[j as usize]).sum();
    }
}

/// `max_r (c_rr^(2k))^(1/2k)` over root vertices `r`, with `c_rr^(2k)` the
/// number of closed walks of length `2k` at the root word; a lower bound on
/// the spectral radius of the additive product.
pub fn specrad_lower_walks(s: &SumGraph, k: usize) -> Result<f64> {
    if k == 0 {
        return Ok(1.0);
    }
    let mut best: f64 = 0.0;
    for r in 0..s.n() {
        let ball = build_ball_with(s, r, k, DEFAULT_VERTEX_CAP)?;
        let adj = ball.adjacency_lists();
        let mut x = vec![0.0; ball.len()];
        x[0] = 1.0;
        let mut y = vec![0.0; ball.len()];
        // ||A^k e||^2 = c^(2k); track the log of the rescaling factors
        let mut log_scale = 0.0;
        for _ in 0..k {
            spmv(&adj, &x, &mut y);
            let m = y.iter().fold(0.0f64, |a, v| a.max(v.abs()));
            if m == 0.0 {
                return Ok(0.0);
            }
            for v in &mut y {
                *v /= m;
            }
            log_scale += m.ln();
            std::mem::swap(&mut x, &mut y);
        }
        let norm2: f64 = x.iter().map(|v| v * v).sum();
        let log_c = norm2.ln() + 2.0 * log_scale;
        best = best.max((log_c / (2.0 * k as f64)).exp());
    }
    Ok(best)
}

/// Certified lower and heuristic upper bounds on the spectral radius.
#[derive(Clone, Debug, Serialize)]
pub struct SpectralRadiusBracket {
    /// Rayleigh quotient of the top Ritz vector on the largest ball.
    pub lower: f64,
    pub upper: f64,
    pub lower_method: &'static str,
    pub upper_method: &'static str,
    /// Aitken extrapolation of the ball estimates at the last three radii;
    /// not certified.
    pub extrapolated: Option<f64>,
    /// `(radius, ball size, Rayleigh lower bound)` per computed radius.
    pub per_radius: Vec<(usize, usize, f64)>,
}

/// Bracket on the spectral radius from balls of radius `radius - 2 ..= radius`
/// and Lanczos with at most `iters` steps.
pub fn specrad_bracket(s: &SumGraph, radius: usize, iters: usize) -> Result<SpectralRadiusBracket> {
    s.validate().into_result()?;
    let mut per_radius = Vec::new();
    for r in radius.saturating_sub(2)..=radius {
        let ball = build_ball(s, r)?;
        let top = lanczos_top(&ball.adjacency_lists(), iters);
        per_radius.push((r, ball.len(), top.rayleigh));
    }
    let lower = per_radius.last().map(|t| t.2).unwrap_or(0.0);
    let extrapolated = if per_radius.len() == 3 {
        let (x0, x1, x2) = (per_radius[0].2, per_radius[1].2, per_radius[2].2);
        let denom = (x2 - x1) - (x1 - x0);
        Some(if denom.abs() < 1e-14 { x2 } else { x2 - (x2 - x1) * (x2 - x1) / denom })
    } else {
        None
    };
    let max_deg = s.max_degree() as f64;
    let (upper, upper_method) = if s.is_connected() {
        let m = s.multi_adjacency().to_f64();
        let l1 = symmetric_spectrum(&m)?[0];
        if l1 <= max_deg {
            (l1, "perron-eigenvalue")
        } else {
            (max_deg, "max-degree")
        }
    } else {
        (max_deg, "max-degree")
    };
    Ok(SpectralRadiusBracket { lower, upper, lower_method: "lanczos-rayleigh", upper_method, extrapolated, per_radius })
}

/// Sum graph whose additive product is the free product of the given
/// connected vertex-transitive graphs: `m = lcm |V(G_i)|` vertices and
/// `m / |V(G_i)|` block-placed copies of each `G_i`.
pub fn free_product_atoms(components: &[Atom]) -> Result<SumGraph> {
    if components.is_empty() {
        return Err(Error::Degenerate("free product of no graphs".into()));
    }
    let m = components.iter().fold(1usize, |acc, g| acc.lcm(&g.n().max(1)));
    let mut atoms = Vec::new();
    for g in components {
        for t in 0..m / g.n() {
            atoms.push(g.embed(m, t * g.n())?);
        }
    }
    SumGraph::new(m, atoms)
}
