//! Transition graph over the drift eigenbasis and the connectivity criterion.

use crate::criteria::regularity::check_regularity;
use crate::error::Result;
use crate::matrix::{hermitian_eigensystem, Tolerances};
use crate::system::HamiltonianSystem;

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let ra = self.find(a);
        let rb = self.find(b);
        if ra != rb {
            self.parent[ra] = rb;
        }
    }
}

/// Graph whose nodes are the ascending drift eigenstates and whose edges mark
/// eigenstate pairs coupled by at least one control.
#[derive(Debug, Clone)]
pub struct TransitionGraph {
    pub node_count: usize,
    /// 0-based node pairs (i < j).
    pub edges: Vec<(usize, usize)>,
    pub connected: bool,
    /// Component id per node, contiguous from 0.
    pub component: Vec<usize>,
    /// True when the drift spectrum is regular, i.e. the eigenbasis (and so
    /// the graph) is unique up to per-state phases.
    pub basis_unique: bool,
}

pub fn build_transition_graph(
    system: &HamiltonianSystem,
    tol: &Tolerances,
) -> Result<TransitionGraph> {
    let n = system.dim();
    let reg = check_regularity(system.h0(), tol)?;
    let eig = hermitian_eigensystem(system.h0(), tol)?;

    let transformed: Vec<_> = system
        .controls()
        .iter()
        .map(|h| h.in_basis(&eig.eigenvectors))
        .collect::<Result<_>>()?;

    let mut edges = Vec::new();
    let mut uf = UnionFind::new(n);
    for i in 0..n {
        for j in (i + 1)..n {
            let weight: f64 = transformed.iter().map(|h| h.get(i, j).norm()).sum();
            if weight > tol.zero() {
                edges.push((i, j));
                uf.union(i, j);
            }
        }
    }

    let mut component = vec![0usize; n];
    let mut ids: Vec<usize> = Vec::new();
    for k in 0..n {
        let root = uf.find(k);
        let id = match ids.iter().position(|&r| r == root) {
            Some(pos) => pos,
            None => {
                ids.push(root);
                ids.len() - 1
            }
        };
        component[k] = id;
    }
    let connected = ids.len() <= 1;

    Ok(TransitionGraph {
        node_count: n,
        edges,
        connected,
        component,
        basis_unique: reg.regular,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphVerdict {
    Controllable,
    NotControllable,
    Inconclusive,
}

impl GraphVerdict {
    pub fn label(&self) -> &'static str {
        match self {
            GraphVerdict::Controllable => "CONTROLLABLE",
            GraphVerdict::NotControllable => "NOT_CONTROLLABLE",
            GraphVerdict::Inconclusive => "INCONCLUSIVE",
        }
    }
}

#[derive(Debug, Clone)]
pub struct GraphAnalysis {
    pub graph: TransitionGraph,
    pub verdict: GraphVerdict,
    pub reason: String,
}

/// Connectivity criterion: a connected transition graph over a strongly
/// regular spectrum is sufficient for density-matrix controllability; a
/// disconnected graph over a regular spectrum certifies an invariant
/// subspace. Anything else is inconclusive.
pub fn graph_criterion(system: &HamiltonianSystem, tol: &Tolerances) -> Result<GraphAnalysis> {
    let reg = check_regularity(system.h0(), tol)?;
    let graph = build_transition_graph(system, tol)?;
    let components = graph.component.iter().copied().max().map_or(1, |m| m + 1);
    let (verdict, reason) = if reg.strongly_regular && graph.connected {
        (
            GraphVerdict::Controllable,
            "strongly regular spectrum with a connected transition graph".to_string(),
        )
    } else if reg.regular && !graph.connected {
        (
            GraphVerdict::NotControllable,
            format!("transition graph splits into {components} components"),
        )
    } else if !graph.connected {
        (
            GraphVerdict::Inconclusive,
            "transition graph is disconnected but the spectrum is degenerate, so the eigenbasis is not unique"
                .to_string(),
        )
    } else {
        (
            GraphVerdict::Inconclusive,
            "transition graph is connected but the spectrum is not strongly regular".to_string(),
        )
    };
    Ok(GraphAnalysis {
        graph,
        verdict,
        reason,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::system::build_chain;

    fn tol() -> Tolerances {
        Tolerances::default()
    }

    #[test]
    fn chain_with_distinct_gaps_is_controllable() {
        let sys = build_chain(&[0.0, 1.0, 2.5], &[1.0, 1.0], tol()).unwrap();
        let g = graph_criterion(&sys, &tol()).unwrap();
        assert_eq!(g.verdict, GraphVerdict::Controllable);
        assert!(g.graph.connected);
        assert!(g.graph.basis_unique);
        assert_eq!(g.graph.edges, vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn zero_coupling_disconnects_and_blocks() {
        let sys = build_chain(&[0.0, 1.0, 2.5], &[1.0, 0.0], tol()).unwrap();
        let g = graph_criterion(&sys, &tol()).unwrap();
        assert_eq!(g.verdict, GraphVerdict::NotControllable);
        assert!(!g.graph.connected);
        assert_eq!(g.graph.edges, vec![(0, 1)]);
        assert_eq!(g.graph.component[0], g.graph.component[1]);
        assert_ne!(g.graph.component[0], g.graph.component[2]);
    }

    #[test]
    fn uniform_ladder_is_inconclusive() {
        let sys = build_chain(&[0.0, 1.0, 2.0], &[1.0, 1.0], tol()).unwrap();
        let g = graph_criterion(&sys, &tol()).unwrap();
        assert_eq!(g.verdict, GraphVerdict::Inconclusive);
        assert!(g.graph.connected);
    }

    #[test]
    fn graph_is_read_in_the_sorted_eigenbasis() {
        // Document basis is not sorted: levels (1, 0) with a coupling.
        let sys = build_chain(&[1.0, 0.0], &[1.0], tol()).unwrap();
        let g = build_transition_graph(&sys, &tol()).unwrap();
        assert_eq!(g.edges, vec![(0, 1)]);
        assert!(g.connected);
    }
}
