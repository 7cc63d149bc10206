//! Exact graph coloring by saturation-ordered branch and bound.
//!
//! The search is sequential and every tie is broken by vertex index, so the
//! returned witness is a pure function of the graph.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColoringConfig {
    /// Largest vertex count accepted by the exact search.
    pub max_vertices: usize,
    /// Cap on branch-and-bound nodes summed over all searches.
    pub max_nodes: u64,
}

impl Default for ColoringConfig {
    fn default() -> Self {
        Self {
            max_vertices: 64,
            max_nodes: 200_000_000,
        }
    }
}

/// A proper coloring with colors `1..=num_colors`, every color used.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Coloring {
    pub colors: Vec<usize>,
    pub num_colors: usize,
}

impl Coloring {
    /// No edge is monochromatic, colors lie in `1..=num_colors` and all are used.
    pub fn is_proper(&self, adjacency: &[Vec<usize>]) -> bool {
        if self.colors.len() != adjacency.len() {
            return false;
        }
        let mut used = vec![false; self.num_colors];
        for (u, &c) in self.colors.iter().enumerate() {
            if c == 0 || c > self.num_colors {
                return false;
            }
            used[c - 1] = true;
            if adjacency[u].iter().any(|&v| self.colors[v] == c) {
                return false;
            }
        }
        used.into_iter().all(|u| u)
    }
}

/// Dense adjacency bitsets over a fixed vertex count.
#[derive(Clone)]
struct Graph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
}

impl Graph {
    fn from_lists(adjacency: &[Vec<usize>]) -> Self {
        let n = adjacency.len();
        let words = n.div_ceil(64).max(1);
        let mut rows = vec![0u64; n * words];
        for (u, nbrs) in adjacency.iter().enumerate() {
            for &v in nbrs {
                rows[u * words + v / 64] |= 1 << (v % 64);
            }
        }
        Self { n, words, rows }
    }

    fn row(&self, u: usize) -> &[u64] {
        &self.rows[u * self.words..(u + 1) * self.words]
    }

    fn adjacent(&self, u: usize, v: usize) -> bool {
        self.row(u)[v / 64] >> (v % 64) & 1 == 1
    }

    fn neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        bits(self.row(u))
    }

    fn degree(&self, u: usize) -> usize {
        self.row(u).iter().map(|w| w.count_ones() as usize).sum()
    }

    /// The subgraph induced on `keep`, relabeled by position.
    fn induced(&self, keep: &[usize]) -> Graph {
        let lists: Vec<Vec<usize>> = keep
            .iter()
            .map(|&u| (0..keep.len()).filter(|&j| self.adjacent(u, keep[j])).collect())
            .collect();
        Graph::from_lists(&lists)
    }
}

fn bits(words: &[u64]) -> impl Iterator<Item = usize> + '_ {
    words.iter().enumerate().flat_map(|(wi, &w)| {
        let mut rest = w;
        std::iter::from_fn(move || {
            (rest != 0).then(|| {
                let b = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                wi * 64 + b
            })
        })
    })
}

/// Exact chromatic number with a proper witness coloring.
pub fn chromatic_number(adjacency: &[Vec<usize>], config: &ColoringConfig) -> Result<Coloring> {
    let n = adjacency.len();
    if n > config.max_vertices {
        return Err(Error::Resource(format!(
            "exact coloring refused for {n} vertices (limit {})",
            config.max_vertices
        )));
    }
    if n == 0 {
        return Ok(Coloring {
            colors: Vec::new(),
            num_colors: 0,
        });
    }
    let graph = Graph::from_lists(adjacency);
    let mut budget = config.max_nodes;

    // Drop u when some non-neighbor v has N(u) ⊆ N(v): u can copy v's color.
    let mut alive = vec![true; n];
    let mut copy_of = vec![usize::MAX; n];
    loop {
        let mut changed = false;
        for u in (0..n).rev() {
            if !alive[u] {
                continue;
            }
            let dominator = (0..n).find(|&v| {
                v != u
                    && alive[v]
                    && !graph.adjacent(u, v)
                    && graph
                        .neighbors(u)
                        .filter(|&x| alive[x])
                        .all(|x| graph.adjacent(v, x))
            });
            if let Some(v) = dominator {
                alive[u] = false;
                copy_of[u] = v;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    let kept: Vec<usize> = (0..n).filter(|&u| alive[u]).collect();
    let core = graph.induced(&kept);

    // The graph is the join of its co-components; their colorings stack.
    let mut colors = vec![0usize; n];
    let mut offset = 0;
    for comp in co_components(&core) {
        let sub = core.induced(&comp);
        let (k, local) = color_connected(&sub, &mut budget)?;
        for (i, &v) in comp.iter().enumerate() {
            colors[kept[v]] = local[i] + offset + 1;
        }
        offset += k;
    }
    for u in 0..n {
        if !alive[u] {
            let mut v = copy_of[u];
            while colors[v] == 0 {
                v = copy_of[v];
            }
            colors[u] = colors[v];
        }
    }
    Ok(Coloring {
        colors,
        num_colors: offset,
    })
}

/// Connected components of the complement graph, each sorted, ordered by least vertex.
fn co_components(g: &Graph) -> Vec<Vec<usize>> {
    let mut seen = vec![false; g.n];
    let mut out = Vec::new();
    for s in 0..g.n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut comp = vec![s];
        let mut i = 0;
        while i < comp.len() {
            let u = comp[i];
            for v in 0..g.n {
                if !seen[v] && v != u && !g.adjacent(u, v) {
                    seen[v] = true;
                    comp.push(v);
                }
            }
            i += 1;
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// Greedy clique: repeatedly take the candidate of largest degree (lowest index on ties).
fn greedy_clique(g: &Graph) -> Vec<usize> {
    let mut clique = Vec::new();
    let mut candidates: Vec<usize> = (0..g.n).collect();
    while let Some(&best) = candidates
        .iter()
        .max_by_key(|&&v| (g.degree(v), std::cmp::Reverse(v)))
    {
        clique.push(best);
        candidates.retain(|&v| g.adjacent(best, v));
    }
    clique
}

/// Chromatic number and 0-based coloring of a graph whose complement is connected.
fn color_connected(g: &Graph, budget: &mut u64) -> Result<(usize, Vec<usize>)> {
    let clique = greedy_clique(g);
    let mut search = Search::new(g, usize::MAX);
    search.run(&clique, budget)?;
    let upper = search.used_max;
    for k in clique.len()..upper {
        let mut s = Search::new(g, k);
        if s.run(&clique, budget)? {
            return Ok((k, s.best));
        }
    }
    Ok((upper, search.best))
}

/// DSATUR backtracking for a coloring with at most `limit` colors.
/// With `limit = usize::MAX` it stops at the first complete coloring,
/// which is the greedy DSATUR upper bound.
struct Search<'a> {
    g: &'a Graph,
    limit: usize,
    color: Vec<usize>,
    // nbr_colors[v * limit_cap + c]: neighbors of v currently colored c.
    nbr_colors: Vec<u32>,
    saturation: Vec<usize>,
    uncolored_degree: Vec<usize>,
    cap: usize,
    used_max: usize,
    best: Vec<usize>,
}

const NONE: usize = usize::MAX;

impl<'a> Search<'a> {
    fn new(g: &'a Graph, limit: usize) -> Self {
        let cap = limit.min(g.n);
        Self {
            g,
            limit,
            color: vec![NONE; g.n],
            nbr_colors: vec![0; g.n * cap],
            saturation: vec![0; g.n],
            uncolored_degree: (0..g.n).map(|v| g.degree(v)).collect(),
            cap,
            used_max: 0,
            best: Vec::new(),
        }
    }

    fn assign(&mut self, v: usize, c: usize) {
        self.color[v] = c;
        for u in self.g.neighbors(v) {
            let slot = &mut self.nbr_colors[u * self.cap + c];
            if *slot == 0 {
                self.saturation[u] += 1;
            }
            *slot += 1;
            self.uncolored_degree[u] -= 1;
        }
    }

    fn unassign(&mut self, v: usize) {
        let c = self.color[v];
        self.color[v] = NONE;
        for u in self.g.neighbors(v) {
            let slot = &mut self.nbr_colors[u * self.cap + c];
            *slot -= 1;
            if *slot == 0 {
                self.saturation[u] -= 1;
            }
            self.uncolored_degree[u] += 1;
        }
    }

    fn pick(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        for v in 0..self.g.n {
            if self.color[v] != NONE {
                continue;
            }
            best = match best {
                None => Some(v),
                Some(b) => {
                    let key = |x: usize| (self.saturation[x], self.uncolored_degree[x]);
                    if key(v) > key(b) { Some(v) } else { Some(b) }
                }
            };
        }
        best
    }

    /// Returns whether a coloring within the limit exists; on success it is in `best`.
    fn run(&mut self, clique: &[usize], budget: &mut u64) -> Result<bool> {
        for (c, &v) in clique.iter().enumerate() {
            if c >= self.cap {
                return Ok(false);
            }
            self.assign(v, c);
        }
        self.recurse(clique.len().min(self.cap), budget)
    }

    fn recurse(&mut self, used: usize, budget: &mut u64) -> Result<bool> {
        if *budget == 0 {
            return Err(Error::Resource("coloring search exceeded its node budget".into()));
        }
        *budget -= 1;
        let Some(v) = self.pick() else {
            self.used_max = used;
            self.best = self.color.clone();
            return Ok(true);
        };
        if self.saturation[v] >= self.limit {
            return Ok(false);
        }
        // A fresh color is only tried once: all unused colors are interchangeable.
        let top = (used + 1).min(self.limit).min(self.cap);
        for c in 0..top {
            if self.nbr_colors[v * self.cap + c] != 0 {
                continue;
            }
            self.assign(v, c);
            let found = self.recurse(used.max(c + 1), budget)?;
            self.unassign(v);
            if found {
                return Ok(true);
            }
        }
        Ok(false)
    }
}
