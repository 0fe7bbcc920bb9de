//! Named example families and the automatic choice of reference radius.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::free::{closed_forms, free_convolution_right_edge, paschke_check, SpectralMeasure};
use crate::graph::{
    complete_bipartite_edges, complete_edges, cycle_edges, find_isomorphism, is_vertex_transitive, neighbor_lists,
    Atom, SumGraph,
};
use crate::product::{build_ball_with, free_product_atoms, specrad_bracket};
use crate::search::RhoProvenance;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Preset {
    /// Edge atoms of `K4`; the 3-regular tree.
    T3,
    /// Edge atoms of `K5`; the 4-regular tree.
    T4,
    /// Edge atoms of `K_{3,4}`; the (3,4)-biregular tree.
    T34,
    C4C4,
    C4C4C4,
    C3C2,
    C3C2C2,
}

impl Preset {
    pub const ALL: [Preset; 7] =
        [Preset::T3, Preset::T4, Preset::T34, Preset::C4C4, Preset::C4C4C4, Preset::C3C2, Preset::C3C2C2];

    pub fn name(self) -> &'static str {
        match self {
            Preset::T3 => "t3",
            Preset::T4 => "t4",
            Preset::T34 => "t34",
            Preset::C4C4 => "c4c4",
            Preset::C4C4C4 => "c4c4c4",
            Preset::C3C2 => "c3c2",
            Preset::C3C2C2 => "c3c2c2",
        }
    }

    /// Vertex-transitive factors of a free product, or `None` for the
    /// biregular tree.
    pub fn factors(self) -> Option<Vec<Atom>> {
        let k2 = || Atom::new(2, &[(0, 1)]).unwrap();
        let c3 = || Atom::new(3, &cycle_edges(3)).unwrap();
        let c4 = || Atom::new(4, &cycle_edges(4)).unwrap();
        Some(match self {
            Preset::T3 => vec![k2(), k2(), k2()],
            Preset::T4 => vec![k2(), k2(), k2(), k2()],
            Preset::T34 => return None,
            Preset::C4C4 => vec![c4(), c4()],
            Preset::C4C4C4 => vec![c4(), c4(), c4()],
            Preset::C3C2 => vec![c3(), k2()],
            Preset::C3C2C2 => vec![c3(), k2(), k2()],
        })
    }

    pub fn measures(self) -> Option<Vec<SpectralMeasure>> {
        self.factors().map(|fs| fs.iter().map(|g| SpectralMeasure::of_vertex_transitive(g).unwrap()).collect())
    }

    pub fn sum_graph(self) -> SumGraph {
        match self {
            Preset::T3 => SumGraph::edge_atoms(4, &complete_edges(4)).unwrap(),
            Preset::T4 => SumGraph::edge_atoms(5, &complete_edges(5)).unwrap(),
            Preset::T34 => SumGraph::edge_atoms(7, &complete_bipartite_edges(3, 4)).unwrap(),
            _ => free_product_atoms(&self.factors().unwrap()).unwrap(),
        }
    }

    /// Spectral radius of the additive product and a description of its form.
    pub fn rho(self) -> Result<(f64, &'static str)> {
        Ok(match self {
            Preset::T3 => (closed_forms::tree(3), "2 sqrt(2)"),
            Preset::T4 => (closed_forms::tree(4), "2 sqrt(3)"),
            Preset::T34 => (closed_forms::biregular_tree(3, 4), "sqrt(2) + sqrt(3)"),
            Preset::C4C4 => (free_convolution_right_edge(&self.measures().unwrap())?, "free convolution edge"),
            Preset::C4C4C4 => (closed_forms::c4c4c4(), "sqrt(5 sqrt(5) + 11)"),
            Preset::C3C2 => (closed_forms::c3c2(), "1/2 + 1/2 sqrt(8 sqrt(2) + 13)"),
            Preset::C3C2C2 => {
                let r = paschke_check()?.root;
                (0.5 * (r.0 + r.1), "largest root of x^5 + x^4 - x^3 - 37x^2 - 108x + 112")
            }
        })
    }
}

impl fmt::Display for Preset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Preset {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Preset::ALL
            .into_iter()
            .find(|p| p.name() == s.to_ascii_lowercase())
            .ok_or_else(|| Error::Malformed(format!("unknown preset {s:?}")))
    }
}

/// Reference radius with its provenance and any warnings.
#[derive(Clone, Debug, Serialize)]
pub struct AutoRho {
    pub rho: f64,
    pub provenance: RhoProvenance,
    pub warnings: Vec<String>,
}

fn canonical(s: &SumGraph) -> (usize, Vec<Vec<(usize, usize)>>) {
    let mut atoms: Vec<Vec<(usize, usize)>> = s.atoms().iter().map(|a| {
        let mut e = a.edges().to_vec();
        e.sort_unstable();
        e
    }).collect();
    atoms.sort();
    (s.n(), atoms)
}

fn edge_atom_rho(s: &SumGraph) -> Option<(f64, String)> {
    if !s.atoms().iter().all(|a| a.edges().len() == 1) {
        return None;
    }
    let n = s.n();
    let mut deg = vec![0usize; n];
    let mut nbrs = vec![Vec::new(); n];
    for a in s.atoms() {
        let (u, v) = a.edges()[0];
        deg[u] += 1;
        deg[v] += 1;
        nbrs[u].push(v);
        nbrs[v].push(u);
    }
    if deg.iter().all(|&d| d == deg[0]) && deg[0] >= 2 {
        return Some((closed_forms::tree(deg[0]), format!("{}-regular tree", deg[0])));
    }
    // two-colour, with constant degree on each side
    let mut side = vec![usize::MAX; n];
    side[0] = 0;
    let mut stack = vec![0];
    while let Some(u) = stack.pop() {
        for &w in &nbrs[u] {
            if side[w] == usize::MAX {
                side[w] = 1 - side[u];
                stack.push(w);
            } else if side[w] == side[u] {
                return None;
            }
        }
    }
    let side_deg = |k| deg.iter().zip(&side).filter(|(_, &sd)| sd == k).map(|(&d, _)| d).collect::<Vec<_>>();
    let (a, b) = (side_deg(0), side_deg(1));
    if a.is_empty() || b.is_empty() || !a.iter().all(|&d| d == a[0]) || !b.iter().all(|&d| d == b[0]) {
        return None;
    }
    let (a, b) = (a[0].min(b[0]), a[0].max(b[0]));
    Some((closed_forms::biregular_tree(a, b), format!("({a},{b})-biregular tree")))
}

/// Atoms are grouped into isomorphism classes of connected vertex-transitive
/// graphs; if every vertex lies in the same number `k_i` of atoms of class
/// `i`, the product is the free product of `k_i` copies of each class.
fn free_product_rho(s: &SumGraph) -> Result<Option<(f64, String)>> {
    let mut classes: Vec<(Vec<Vec<usize>>, Vec<usize>)> = Vec::new();
    for (j, a) in s.atoms().iter().enumerate() {
        if !a.underlying_connected() {
            return Ok(None);
        }
        let support = a.support();
        let local = |v: usize| support.binary_search(&v).unwrap();
        let edges: Vec<(usize, usize)> = a.edges().iter().map(|&(u, v)| (local(u), local(v))).collect();
        let nb = neighbor_lists(support.len(), &edges);
        if !is_vertex_transitive(&nb) {
            return Ok(None);
        }
        match classes.iter_mut().find(|(rep, _)| find_isomorphism(rep, &nb, None).is_some()) {
            Some((_, members)) => members.push(j),
            None => classes.push((nb, vec![j])),
        }
    }
    let mut measures = Vec::new();
    let mut names = Vec::new();
    for (rep, members) in &classes {
        let mut count = vec![0usize; s.n()];
        for &j in members {
            for v in s.atom(j).support() {
                count[v] += 1;
            }
        }
        if !count.iter().all(|&k| k == count[0]) || count[0] == 0 {
            return Ok(None);
        }
        let local_edges: Vec<(usize, usize)> =
            rep.iter().enumerate().flat_map(|(u, ws)| ws.iter().filter(move |&&w| u < w).map(move |&w| (u, w))).collect();
        let g = Atom::new(rep.len(), &local_edges)?;
        let mu = SpectralMeasure::of_vertex_transitive(&g)?;
        for _ in 0..count[0] {
            measures.push(mu.clone());
        }
        names.push(format!("{}x{}-vertex", count[0], rep.len()));
    }
    if measures.len() < 2 {
        return Ok(None);
    }
    Ok(Some((free_convolution_right_edge(&measures)?, format!("free product {}", names.join(" * ")))))
}

/// Largest ball radius from root 0 with at most this many words.
const AUTO_BALL_CAP: usize = 60_000;

/// Reference radius chosen in order: a matching preset, edge atoms of a
/// regular or biregular graph, a free product of vertex-transitive atoms,
/// and otherwise the upper side of the spectral radius bracket.
pub fn auto_rho(s: &SumGraph) -> Result<AutoRho> {
    let key = canonical(s);
    for p in Preset::ALL {
        if canonical(&p.sum_graph()) == key {
            let (rho, form) = p.rho()?;
            return Ok(AutoRho { rho, provenance: RhoProvenance::Analytic(format!("preset {p}: {form}")), warnings: vec![] });
        }
    }
    if let Some((rho, what)) = edge_atom_rho(s) {
        return Ok(AutoRho { rho, provenance: RhoProvenance::Analytic(what), warnings: vec![] });
    }
    if let Some((rho, what)) = free_product_rho(s)? {
        return Ok(AutoRho { rho, provenance: RhoProvenance::Analytic(what), warnings: vec![] });
    }
    let mut radius = 2;
    while radius < 16 {
        match build_ball_with(s, 0, radius + 1, AUTO_BALL_CAP) {
            Ok(b) if b.len() < AUTO_BALL_CAP => radius += 1,
            _ => break,
        }
    }
    let br = specrad_bracket(s, radius, 300)?;
    Ok(AutoRho {
        rho: br.upper,
        provenance: RhoProvenance::Bracket(format!("{} upper bound, lower {:.9}", br.upper_method, br.lower)),
        warnings: vec![format!(
            "no closed form recognised; using the bracket upper bound {:.9} (lower bound {:.9})",
            br.upper, br.lower
        )],
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn presets_round_trip_through_auto_rho() {
        for p in Preset::ALL {
            let a = auto_rho(&p.sum_graph()).unwrap();
            assert!((a.rho - p.rho().unwrap().0).abs() < 1e-12, "{p}");
            assert!(matches!(a.provenance, RhoProvenance::Analytic(_)));
            assert_eq!(p.name().parse::<Preset>().unwrap(), p);
        }
    }

    #[test]
    fn recognised_families() {
        let c5 = SumGraph::edge_atoms(5, &cycle_edges(5)).unwrap();
        assert!((auto_rho(&c5).unwrap().rho - 2.0).abs() < 1e-12);
        let k33 = SumGraph::edge_atoms(6, &complete_bipartite_edges(3, 3)).unwrap();
        assert!((auto_rho(&k33).unwrap().rho - closed_forms::tree(3)).abs() < 1e-12);
        // relabelled c4c4c4 atoms still detected as a free product
        let c4 = Atom::new(4, &[(0, 2), (2, 1), (1, 3), (3, 0)]).unwrap();
        let s = free_product_atoms(&[c4.clone(), c4.clone(), Atom::new(4, &cycle_edges(4)).unwrap()]).unwrap();
        let a = auto_rho(&s).unwrap();
        assert!((a.rho - closed_forms::c4c4c4()).abs() < 1e-6);
    }

    #[test]
    fn fallback_uses_the_bracket() {
        let s = SumGraph::from_edge_lists(4, &[vec![(0, 1), (1, 2), (2, 3)], vec![(0, 2)]]).unwrap();
        let a = auto_rho(&s).unwrap();
        assert!(matches!(a.provenance, RhoProvenance::Bracket(_)));
        assert_eq!(a.warnings.len(), 1);
    }
}
