use std::collections::VecDeque;

use num_bigint::BigInt;

use crate::algebra::{GroupTable, Presentation};
use crate::error::{Error, Result};

/// A finite simplicial 2-complex. Triangles list three edge indices that
/// form a closed walk through three distinct vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Complex2 {
    n_vertices: usize,
    edges: Vec<(usize, usize)>,
    triangles: Vec<[usize; 3]>,
}

/// A triangle boundary as a closed walk: each edge with `true` when it is
/// traversed from its first to its second vertex.
type Walk = [(usize, bool); 3];

impl Complex2 {
    pub fn new(n_vertices: usize, edges: Vec<(usize, usize)>, triangles: Vec<[usize; 3]>) -> Result<Self> {
        for (i, &(u, v)) in edges.iter().enumerate() {
            if u >= n_vertices || v >= n_vertices {
                return Err(Error::malformed(format!("edge {i} has a vertex out of range")));
            }
            if u == v {
                return Err(Error::malformed(format!("edge {i} is a loop")));
            }
        }
        let x = Complex2 { n_vertices, edges, triangles };
        for (t, tri) in x.triangles.iter().enumerate() {
            if tri.iter().any(|&e| e >= x.edges.len()) {
                return Err(Error::malformed(format!("triangle {t} has an edge out of range")));
            }
            if x.boundary_walk(tri).is_none() {
                return Err(Error::malformed(format!(
                    "triangle {t} edges do not form a closed walk on three vertices"
                )));
            }
        }
        Ok(x)
    }

    pub fn n_vertices(&self) -> usize {
        self.n_vertices
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn triangles(&self) -> &[[usize; 3]] {
        &self.triangles
    }

    fn boundary_walk(&self, tri: &[usize; 3]) -> Option<Walk> {
        let (a, b) = self.edges[tri[0]];
        for (start, next, fwd0) in [(a, b, true), (b, a, false)] {
            let mut walk = [(tri[0], fwd0); 3];
            let mut at = next;
            let mut ok = true;
            for (k, &e) in tri.iter().enumerate().skip(1) {
                let (u, v) = self.edges[e];
                if u == at {
                    walk[k] = (e, true);
                    at = v;
                } else if v == at {
                    walk[k] = (e, false);
                    at = u;
                } else {
                    ok = false;
                    break;
                }
            }
            let third = if walk[1].1 { self.edges[walk[1].0].1 } else { self.edges[walk[1].0].0 };
            if ok && at == start && third != start && next != start {
                return Some(walk);
            }
        }
        None
    }

    fn adjacency(&self) -> Vec<Vec<(usize, usize)>> {
        // (edge index, neighbour), in edge order
        let mut adj = vec![Vec::new(); self.n_vertices];
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            adj[u].push((i, v));
            adj[v].push((i, u));
        }
        adj
    }

    /// Connected components of the 1-skeleton, each sorted, ordered by
    /// smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let adj = self.adjacency();
        let mut comp = vec![usize::MAX; self.n_vertices];
        let mut out: Vec<Vec<usize>> = Vec::new();
        for s in 0..self.n_vertices {
            if comp[s] != usize::MAX {
                continue;
            }
            let id = out.len();
            comp[s] = id;
            let mut members = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(x) = queue.pop_front() {
                for &(_, y) in &adj[x] {
                    if comp[y] == usize::MAX {
                        comp[y] = id;
                        members.push(y);
                        queue.push_back(y);
                    }
                }
            }
            members.sort();
            out.push(members);
        }
        out
    }
}

/// π₀ together with the 0-monodromy target `M^{#X}`, kept as a factor
/// count over `M`.
#[derive(Clone, Debug)]
pub struct Monodromy0 {
    pub components: Vec<Vec<usize>>,
    pub base: GroupTable,
}

impl Monodromy0 {
    pub fn n_components(&self) -> usize {
        self.components.len()
    }

    /// `|M|^{#X}`.
    pub fn product_order(&self) -> BigInt {
        num_traits::pow(BigInt::from(self.base.order()), self.components.len())
    }

    /// The constant section with value `m` on every component.
    pub fn constant(&self, m: usize) -> Vec<usize> {
        vec![m; self.components.len()]
    }
}

pub fn pi0_and_monodromy0(x: &Complex2, m: &GroupTable) -> Monodromy0 {
    Monodromy0 { components: x.components(), base: m.clone() }
}

/// Edge-path presentation of `π₁(X, basepoint)`.
///
/// The spanning tree is the BFS tree from the basepoint with neighbours
/// visited in edge-index order. Each non-tree edge in the basepoint's
/// component becomes a generator, numbered by edge index; each triangle in
/// the component gives its boundary word. Paths compose left to right: the
/// word `g₁ g₂` runs around `g₁` first.
pub fn pi1_presentation(x: &Complex2, basepoint: usize) -> Result<Presentation> {
    if basepoint >= x.n_vertices {
        return Err(Error::VertexOutOfRange(basepoint));
    }
    let adj = x.adjacency();
    let mut seen = vec![false; x.n_vertices];
    let mut tree = vec![false; x.edges.len()];
    seen[basepoint] = true;
    let mut queue = VecDeque::from([basepoint]);
    while let Some(v) = queue.pop_front() {
        for &(e, w) in &adj[v] {
            if !seen[w] {
                seen[w] = true;
                tree[e] = true;
                queue.push_back(w);
            }
        }
    }
    let mut generator = vec![None; x.edges.len()];
    let mut n = 0;
    for (i, &(u, _)) in x.edges.iter().enumerate() {
        if seen[u] && !tree[i] {
            n += 1;
            generator[i] = Some(n as i32);
        }
    }
    let mut relators = Vec::new();
    for tri in &x.triangles {
        let walk = x.boundary_walk(tri).expect("validated");
        if !seen[x.edges[tri[0]].0] {
            continue;
        }
        let word: Vec<i32> = walk
            .iter()
            .filter_map(|&(e, fwd)| generator[e].map(|g| if fwd { g } else { -g }))
            .collect();
        relators.push(word);
    }
    Presentation::new(n, relators)
}
