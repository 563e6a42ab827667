use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use serde::{Serialize, Serializer};

use crate::arith::prime_factors;

/// Bipartite divisor graph `B(X)`: sizes `X ∖ {1}`, the primes dividing them, and an
/// edge `(q, x)` whenever `q | x`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct BipartiteDivisorGraph {
    pub primes: BTreeSet<u64>,
    pub sizes: BTreeSet<u64>,
    /// `(prime, size)` pairs.
    pub edges: BTreeSet<(u64, u64)>,
}

pub fn build_bdg<I: IntoIterator<Item = u64>>(xs: I) -> BipartiteDivisorGraph {
    let mut g = BipartiteDivisorGraph::default();
    for x in xs.into_iter().filter(|&x| x > 1) {
        if !g.sizes.insert(x) {
            continue;
        }
        for q in prime_factors(x) {
            g.primes.insert(q);
            g.edges.insert((q, x));
        }
    }
    g
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Vertex {
    Prime(u64),
    Size(u64),
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Vertex::Prime(q) => write!(f, "p_{q}"),
            Vertex::Size(x) => write!(f, "n_{x}"),
        }
    }
}

impl BipartiteDivisorGraph {
    pub fn vertex_count(&self) -> usize {
        self.primes.len() + self.sizes.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Primes first, then sizes, each ascending.
    pub fn vertices(&self) -> Vec<Vertex> {
        self.primes
            .iter()
            .map(|&q| Vertex::Prime(q))
            .chain(self.sizes.iter().map(|&x| Vertex::Size(x)))
            .collect()
    }

    /// Adjacency lists indexed like [`vertices`](Self::vertices).
    fn adjacency(&self) -> Vec<Vec<usize>> {
        let m = self.primes.len();
        let prime_pos = |q: u64| self.primes.iter().position(|&v| v == q).unwrap();
        let size_pos = |x: u64| m + self.sizes.iter().position(|&v| v == x).unwrap();
        let mut adj = vec![Vec::new(); self.vertex_count()];
        for &(q, x) in &self.edges {
            let (a, b) = (prime_pos(q), size_pos(x));
            adj[a].push(b);
            adj[b].push(a);
        }
        adj
    }

    pub fn degree(&self, v: Vertex) -> usize {
        match v {
            Vertex::Prime(q) => self.edges.iter().filter(|e| e.0 == q).count(),
            Vertex::Size(x) => self.edges.iter().filter(|e| e.1 == x).count(),
        }
    }

    /// Graphviz rendering with `p_<q>` / `n_<x>` node names, in sorted order.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("graph B {\n");
        for v in self.vertices() {
            s.push_str(&format!("  {v};\n"));
        }
        for &(q, x) in &self.edges {
            s.push_str(&format!("  {} -- {};\n", Vertex::Prime(q), Vertex::Size(x)));
        }
        s.push_str("}\n");
        s
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Girth {
    Finite(usize),
    Infinite,
}

impl Serialize for Girth {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Girth::Finite(n) => s.serialize_u64(*n as u64),
            Girth::Infinite => s.serialize_str("infinite"),
        }
    }
}

impl fmt::Display for Girth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Girth::Finite(n) => write!(f, "{n}"),
            Girth::Infinite => write!(f, "infinite"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GraphInvariants {
    pub components: usize,
    /// One entry per component, ordered by the component's first vertex.
    pub diameters: Vec<usize>,
    pub girth: Girth,
}

fn bfs(adj: &[Vec<usize>], src: usize) -> Vec<Option<usize>> {
    let mut dist = vec![None; adj.len()];
    dist[src] = Some(0);
    let mut queue = VecDeque::from([src]);
    while let Some(u) = queue.pop_front() {
        let d = dist[u].unwrap();
        for &w in &adj[u] {
            if dist[w].is_none() {
                dist[w] = Some(d + 1);
                queue.push_back(w);
            }
        }
    }
    dist
}

fn shortest_cycle_through(adj: &[Vec<usize>], src: usize) -> Option<usize> {
    let mut dist = vec![usize::MAX; adj.len()];
    let mut parent = vec![usize::MAX; adj.len()];
    dist[src] = 0;
    let mut queue = VecDeque::from([src]);
    let mut best = None;
    while let Some(u) = queue.pop_front() {
        for &w in &adj[u] {
            if dist[w] == usize::MAX {
                dist[w] = dist[u] + 1;
                parent[w] = u;
                queue.push_back(w);
            } else if parent[u] != w {
                let len = dist[u] + dist[w] + 1;
                best = Some(best.map_or(len, |b: usize| b.min(len)));
            }
        }
    }
    best
}

pub fn graph_invariants(g: &BipartiteDivisorGraph) -> GraphInvariants {
    let adj = g.adjacency();
    let n = adj.len();
    let mut component = vec![usize::MAX; n];
    let mut members: Vec<Vec<usize>> = Vec::new();
    for v in 0..n {
        if component[v] != usize::MAX {
            continue;
        }
        let reach: Vec<usize> = bfs(&adj, v)
            .iter()
            .enumerate()
            .filter_map(|(u, d)| d.map(|_| u))
            .collect();
        for &u in &reach {
            component[u] = members.len();
        }
        members.push(reach);
    }
    let diameters = members
        .iter()
        .map(|comp| {
            comp.iter()
                .map(|&u| bfs(&adj, u).into_iter().flatten().max().unwrap_or(0))
                .max()
                .unwrap_or(0)
        })
        .collect();
    let girth = (0..n)
        .filter_map(|v| shortest_cycle_through(&adj, v))
        .min()
        .map_or(Girth::Infinite, Girth::Finite);
    GraphInvariants {
        components: members.len(),
        diameters,
        girth,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind")]
pub enum ShapeKind {
    /// `m` primes, `n` sizes, all `m·n` edges.
    CompleteBipartite {
        m: usize,
        n: usize,
    },
    Cycle {
        length: usize,
    },
    Path {
        length: usize,
    },
    Other,
}

impl fmt::Display for ShapeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ShapeKind::CompleteBipartite { m, n } => write!(f, "K_{{{m},{n}}}"),
            ShapeKind::Cycle { length } => write!(f, "C_{length}"),
            ShapeKind::Path { length } => write!(f, "P_{length}"),
            ShapeKind::Other => write!(f, "other"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GraphShape {
    #[serde(flatten)]
    pub kind: ShapeKind,
    #[serde(flatten)]
    pub invariants: GraphInvariants,
}

/// Tags overlapping shapes by precedence: complete bipartite, cycle, path, other.
pub fn classify_shape(g: &BipartiteDivisorGraph) -> GraphShape {
    let invariants = graph_invariants(g);
    let (m, n) = (g.primes.len(), g.sizes.len());
    let (v, e) = (g.vertex_count(), g.edge_count());
    let degrees: Vec<usize> = g.vertices().into_iter().map(|x| g.degree(x)).collect();
    let connected = invariants.components == 1;
    let kind = if m > 0 && n > 0 && e == m * n {
        ShapeKind::CompleteBipartite { m, n }
    } else if connected && v >= 3 && degrees.iter().all(|&d| d == 2) {
        ShapeKind::Cycle { length: e }
    } else if connected && e >= 1 && e + 1 == v && degrees.iter().all(|&d| d <= 2) {
        ShapeKind::Path { length: e }
    } else {
        ShapeKind::Other
    };
    GraphShape { kind, invariants }
}
