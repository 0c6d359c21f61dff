//! The two edge metrics: path distance (consecutive edges share a vertex)
//! and copath distance (consecutive edges share a face).

use super::{EdgeSet, PolygonalComplex};
use crate::bits::BitSet;
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::VecDeque;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Metric {
    /// d: consecutive edges share a vertex.
    Path,
    /// d̂: consecutive edges share a face.
    Copath,
}

impl std::str::FromStr for Metric {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "path" => Ok(Metric::Path),
            "copath" => Ok(Metric::Copath),
            other => Err(Error::parse("metric", format!("unknown metric {other:?}"))),
        }
    }
}

impl PolygonalComplex {
    /// Neighbors of every edge under the chosen adjacency, ascending per edge.
    pub fn edge_adjacency(&self, metric: Metric) -> Vec<Vec<usize>> {
        let m = self.edge_count();
        let mut adj = vec![Vec::new(); m];
        match metric {
            Metric::Path => {
                for v in 0..self.vertex_count() {
                    let es = self.vertex_edges(v);
                    for i in 0..es.len() {
                        for j in 0..es.len() {
                            if i != j {
                                adj[es[i]].push(es[j]);
                            }
                        }
                    }
                }
            }
            Metric::Copath => {
                for f in self.faces() {
                    for &a in &f.edges {
                        for &b in &f.edges {
                            if a != b {
                                adj[a].push(b);
                            }
                        }
                    }
                }
            }
        }
        for list in adj.iter_mut() {
            list.sort_unstable();
            list.dedup();
        }
        adj
    }

    /// Single-source distances to every edge; `None` marks unreachable edges.
    pub fn edge_distances_from(&self, e: usize, metric: Metric) -> Vec<Option<usize>> {
        let adj = self.edge_adjacency(metric);
        bfs(&adj, e)
    }

    /// Exact metric distance between two edges.
    pub fn edge_distance(&self, e: usize, f: usize, metric: Metric) -> Result<usize> {
        self.edge_distances_from(e, metric)[f]
            .ok_or_else(|| Error::Unreachable(format!("no {metric:?} path from {e} to {f}")))
    }

    /// The metric ball `{e' : d(e,e') ≤ r}` as an edge set.
    pub fn ball(&self, e: usize, r: usize, metric: Metric) -> EdgeSet {
        let dist = self.edge_distances_from(e, metric);
        let mut out = BitSet::new(self.edge_count());
        for (i, d) in dist.iter().enumerate() {
            if matches!(d, Some(d) if *d <= r) {
                out.insert(i);
            }
        }
        out
    }

    /// All-pairs edge distances; `usize::MAX` marks unreachable pairs.
    pub fn all_pairs_edge_distances(&self, metric: Metric) -> Vec<Vec<usize>> {
        let adj = self.edge_adjacency(metric);
        (0..self.edge_count())
            .map(|e| {
                bfs(&adj, e)
                    .into_iter()
                    .map(|d| d.unwrap_or(usize::MAX))
                    .collect()
            })
            .collect()
    }

    /// Maximum distance over all edge pairs.
    pub fn diameter(&self, metric: Metric) -> Result<usize> {
        let mut best = 0;
        let adj = self.edge_adjacency(metric);
        for e in 0..self.edge_count() {
            for (f, d) in bfs(&adj, e).into_iter().enumerate() {
                match d {
                    Some(d) => best = best.max(d),
                    None => {
                        return Err(Error::Unreachable(format!(
                            "edges {e} and {f} are not connected"
                        )))
                    }
                }
            }
        }
        Ok(best)
    }

    /// A shortest edge path from `e` to `f` as an explicit edge sequence,
    /// choosing the lowest-index predecessor at every step so the witness is
    /// reproducible.
    pub fn canonical_path(&self, e: usize, f: usize, metric: Metric) -> Result<Vec<usize>> {
        let adj = self.edge_adjacency(metric);
        let mut dist = vec![None; self.edge_count()];
        let mut prev = vec![usize::MAX; self.edge_count()];
        let mut q = VecDeque::new();
        dist[e] = Some(0usize);
        q.push_back(e);
        while let Some(x) = q.pop_front() {
            if x == f {
                break;
            }
            for &y in &adj[x] {
                if dist[y].is_none() {
                    dist[y] = Some(dist[x].unwrap() + 1);
                    prev[y] = x;
                    q.push_back(y);
                }
            }
        }
        if dist[f].is_none() {
            return Err(Error::Unreachable(format!("no path from {e} to {f}")));
        }
        let mut path = vec![f];
        let mut cur = f;
        while cur != e {
            cur = prev[cur];
            path.push(cur);
        }
        path.reverse();
        Ok(path)
    }

    /// True when the edges of `s` form one component under share-a-vertex
    /// adjacency restricted to `s`. The empty set counts as connected.
    pub fn edge_set_path_connected(&self, s: &EdgeSet) -> bool {
        edge_set_components(&self.edge_adjacency(Metric::Path), s).len() <= 1
    }
}

fn bfs(adj: &[Vec<usize>], src: usize) -> Vec<Option<usize>> {
    let mut dist = vec![None; adj.len()];
    let mut q = VecDeque::new();
    dist[src] = Some(0usize);
    q.push_back(src);
    while let Some(x) = q.pop_front() {
        for &y in &adj[x] {
            if dist[y].is_none() {
                dist[y] = Some(dist[x].unwrap() + 1);
                q.push_back(y);
            }
        }
    }
    dist
}

/// Connected components of `s` under `adj` restricted to `s`, each sorted,
/// listed by smallest member.
pub(super) fn edge_set_components(adj: &[Vec<usize>], s: &EdgeSet) -> Vec<Vec<usize>> {
    let mut seen = BitSet::new(s.len());
    let mut comps = Vec::new();
    for start in s.iter_ones() {
        if seen.get(start) {
            continue;
        }
        let mut comp = vec![start];
        let mut stack = vec![start];
        seen.insert(start);
        while let Some(x) = stack.pop() {
            for &y in &adj[x] {
                if s.get(y) && !seen.get(y) {
                    seen.insert(y);
                    comp.push(y);
                    stack.push(y);
                }
            }
        }
        comp.sort_unstable();
        comps.push(comp);
    }
    comps
}
