use std::collections::{BTreeSet, HashMap};
use std::fmt::Write as _;

use super::chain::Chain;
use super::ObstructionSet;
use crate::order::MonomialOrder;
use crate::word::{Alphabet, Word};

/// A directed edge; `witness` is the obstruction ending `source·target`,
/// absent on edges out of the root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    pub target: usize,
    pub witness: Option<Word>,
}

/// The graph whose length-`n` paths from the root spell the `n`-chains.
///
/// Nodes are the root `1`, the letters and the proper suffixes of
/// obstructions, numbered in that order (suffixes by length, then word).
#[derive(Debug, Clone)]
pub struct ChainGraph {
    alphabet: Alphabet,
    obstructions: ObstructionSet,
    nodes: Vec<Word>,
    index: HashMap<Word, usize>,
    edges: Vec<Vec<Edge>>,
}

pub fn build_chain_graph(obs: &ObstructionSet, alphabet: &Alphabet) -> ChainGraph {
    let mut suffixes: BTreeSet<(usize, Word)> = BTreeSet::new();
    for o in obs.words() {
        for start in 1..o.len() {
            let s = o.suffix_from(start);
            if s.len() >= 2 {
                suffixes.insert((s.len(), s));
            }
        }
    }
    let mut nodes = vec![Word::empty()];
    nodes.extend(alphabet.letters().map(Word::letter));
    nodes.extend(suffixes.into_iter().map(|(_, s)| s));
    let index: HashMap<Word, usize> = nodes.iter().cloned().zip(0..).collect();

    let mut edges = vec![Vec::new(); nodes.len()];
    edges[0] = (1..=alphabet.len()).map(|t| Edge { target: t, witness: None }).collect();
    for (i, s) in nodes.iter().enumerate().skip(1) {
        for (j, t) in nodes.iter().enumerate().skip(1) {
            let st = s.concat(t);
            let occ = obs.occurrences_in(&st);
            if let [(start, end)] = occ[..] {
                if end == st.len() {
                    edges[i].push(Edge { target: j, witness: Some(st.suffix_from(start)) });
                }
            }
        }
    }
    ChainGraph { alphabet: alphabet.clone(), obstructions: obs.clone(), nodes, index, edges }
}

/// All chains of degree `n`, sorted descending by `order` on their words.
pub fn enumerate_chains(g: &ChainGraph, n: usize, order: &MonomialOrder) -> Vec<Chain> {
    g.chains(n, order)
}

impl ChainGraph {
    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn obstructions(&self) -> &ObstructionSet {
        &self.obstructions
    }

    pub fn nodes(&self) -> &[Word] {
        &self.nodes
    }

    pub fn node_index(&self, w: &Word) -> Option<usize> {
        self.index.get(w).copied()
    }

    pub fn edges_from(&self, node: usize) -> &[Edge] {
        &self.edges[node]
    }

    /// Every edge as `(source, edge)`, sources ascending.
    pub fn edges(&self) -> impl Iterator<Item = (usize, &Edge)> {
        self.edges.iter().enumerate().flat_map(|(i, es)| es.iter().map(move |e| (i, e)))
    }

    pub fn edge_count(&self) -> usize {
        self.edges.iter().map(Vec::len).sum()
    }

    pub fn edge(&self, from: &Word, to: &Word) -> Option<&Edge> {
        let i = self.node_index(from)?;
        let j = self.node_index(to)?;
        self.edges[i].iter().find(|e| e.target == j)
    }

    /// `reachable[i]` is true when node `i` lies on a path from the root.
    pub fn reachable(&self) -> Vec<bool> {
        let mut seen = vec![false; self.nodes.len()];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(i) = stack.pop() {
            for e in &self.edges[i] {
                if !seen[e.target] {
                    seen[e.target] = true;
                    stack.push(e.target);
                }
            }
        }
        seen
    }

    /// The same graph without the nodes unreachable from the root. Chains
    /// are unaffected.
    pub fn pruned(&self) -> ChainGraph {
        let keep = self.reachable();
        let mut renumber = vec![None; self.nodes.len()];
        let mut nodes = Vec::new();
        for (i, w) in self.nodes.iter().enumerate() {
            if keep[i] {
                renumber[i] = Some(nodes.len());
                nodes.push(w.clone());
            }
        }
        let edges = (0..self.nodes.len())
            .filter(|&i| keep[i])
            .map(|i| {
                self.edges[i]
                    .iter()
                    .filter_map(|e| {
                        renumber[e.target].map(|t| Edge { target: t, witness: e.witness.clone() })
                    })
                    .collect()
            })
            .collect();
        let index = nodes.iter().cloned().zip(0..).collect();
        ChainGraph {
            alphabet: self.alphabet.clone(),
            obstructions: self.obstructions.clone(),
            nodes,
            index,
            edges,
        }
    }

    /// Extends `c` by `node` when the graph has that edge.
    pub fn extend(&self, c: &Chain, node: &Word) -> Option<Chain> {
        let e = self.edge(c.last_node(), node)?;
        Some(c.extended(node, e.witness.as_ref()))
    }

    pub fn chains(&self, n: usize, order: &MonomialOrder) -> Vec<Chain> {
        let mut layer = vec![(0usize, Chain::root())];
        for _ in 0..n {
            let mut next = Vec::new();
            for (node, c) in &layer {
                for e in &self.edges[*node] {
                    next.push((e.target, c.extended(&self.nodes[e.target], e.witness.as_ref())));
                }
            }
            layer = next;
        }
        let mut out: Vec<Chain> = layer.into_iter().map(|(_, c)| c).collect();
        out.sort_by(|a, b| order.compare(b.word(), a.word()));
        out
    }

    /// Graphviz rendering with nodes in index order and edges by source
    /// then target.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph chains {\n");
        for (i, w) in self.nodes.iter().enumerate() {
            let _ = writeln!(out, "  n{i} [label=\"{}\"];", self.alphabet.format_word(w));
        }
        for (i, e) in self.edges() {
            match &e.witness {
                None => {
                    let _ = writeln!(out, "  n{i} -> n{};", e.target);
                }
                Some(s) => {
                    let _ = writeln!(
                        out,
                        "  n{i} -> n{} [label=\"{}\"];",
                        e.target,
                        self.alphabet.format_word(s)
                    );
                }
            }
        }
        out.push_str("}\n");
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chains::{is_chain_top_down, is_prechain, split_chain};

    fn example() -> (Alphabet, MonomialOrder, ChainGraph) {
        let a = Alphabet::new(&["x", "y", "z"]).unwrap();
        let obs = ObstructionSet::new(
            ["xxyx", "xxx", "yxz"].map(|s| a.parse_word(s).unwrap()),
            &a,
        )
        .unwrap();
        let g = build_chain_graph(&obs, &a);
        (a.clone(), MonomialOrder::deglex(&a), g)
    }

    fn words(a: &Alphabet, chains: &[Chain]) -> Vec<String> {
        chains.iter().map(|c| a.format_word(c.word())).collect()
    }

    #[test]
    fn example_nodes_and_edges() {
        let (a, _, g) = example();
        let nodes: BTreeSet<String> = g.nodes().iter().map(|w| a.format_word(w)).collect();
        let expected: BTreeSet<String> =
            ["1", "x", "y", "z", "xx", "xyx", "yx", "xz"].map(String::from).into();
        assert_eq!(nodes, expected);
        let w = |s: &str| a.parse_word(s).unwrap();
        let mut edges: Vec<(String, String)> = g
            .edges()
            .map(|(i, e)| (a.format_word(&g.nodes()[i]), a.format_word(&g.nodes()[e.target])))
            .collect();
        edges.sort();
        let mut expected: Vec<(String, String)> = [
            ("1", "x"), ("1", "y"), ("1", "z"), ("x", "xx"), ("x", "xyx"), ("xx", "x"),
            ("xx", "yx"), ("xyx", "xyx"), ("xyx", "xx"), ("xyx", "z"), ("yx", "xyx"),
            ("yx", "z"), ("yx", "xx"), ("y", "xz"),
        ]
        .iter()
        .map(|(s, t)| (s.to_string(), t.to_string()))
        .collect();
        expected.sort();
        assert_eq!(edges, expected);
        assert_eq!(g.edge(&w("x"), &w("xx")).unwrap().witness, Some(w("xxx")));
        // every node is reachable here
        assert!(g.reachable().iter().all(|&r| r));
    }

    #[test]
    fn chain_census() {
        let (a, o, g) = example();
        assert_eq!(words(&a, &g.chains(0, &o)), vec!["1"]);
        assert_eq!(words(&a, &g.chains(1, &o)), vec!["x", "y", "z"]);
        assert_eq!(words(&a, &g.chains(2, &o)), vec!["xxyx", "xxx", "yxz"]);
        let c3: BTreeSet<String> = words(&a, &g.chains(3, &o)).into_iter().collect();
        let e3: BTreeSet<String> =
            ["xxyxxyx", "xxyxxx", "xxyxz", "xxxyx", "xxxx"].map(String::from).into();
        assert_eq!(c3, e3);
        let c4: BTreeSet<String> = words(&a, &g.chains(4, &o)).into_iter().collect();
        let e4: BTreeSet<String> = [
            "xxyxxyxxyx", "xxyxxyxxx", "xxyxxyxz", "xxyxxxyx", "xxyxxxx", "xxxyxxyx", "xxxyxxx",
            "xxxyxz", "xxxxxyx", "xxxxxx",
        ]
        .map(String::from)
        .into();
        assert_eq!(c4, e4);
    }

    #[test]
    fn placements_follow_the_path() {
        let (a, o, g) = example();
        let c = g.chains(4, &o).into_iter().find(|c| a.format_word(c.word()) == "xxyxxyxz").unwrap();
        assert_eq!(c.starts(), &[1, 4, 6]);
        assert_eq!(c.ends(), &[4, 7, 8]);
        let td = is_chain_top_down(c.word(), 3, g.obstructions()).unwrap();
        assert_eq!(td.starts, c.starts());
        assert_eq!(td.ends, c.ends());
    }

    #[test]
    fn splitting_examples() {
        let (a, o, g) = example();
        let find = |n: usize, s: &str| {
            g.chains(n, &o).into_iter().find(|c| a.format_word(c.word()) == s).unwrap()
        };
        let split = |c: &Chain| {
            let (p, t) = split_chain(c).unwrap();
            (a.format_word(p.word()), a.format_word(&t))
        };
        assert_eq!(split(&find(3, "xxxyx")), ("xxx".into(), "yx".into()));
        assert_eq!(split(&find(3, "xxxx")), ("xxx".into(), "x".into()));
        assert_eq!(split(&find(4, "xxyxxyxz")), ("xxyxxyx".into(), "z".into()));

        let c = find(3, "xxxyx");
        assert_eq!(c.bracket_prefix(0).unwrap(), Chain::root());
        assert_eq!(a.format_word(&c.bracket_tail(0).unwrap()), "xxxyx");
        assert_eq!(c.bracket_prefix(3).unwrap(), c);
        assert!(c.bracket_tail(3).unwrap().is_empty());
        assert!(c.bracket_prefix(4).is_err());
    }

    #[test]
    fn top_down_examples() {
        let (a, _, g) = example();
        let obs = g.obstructions();
        let w = |s: &str| a.parse_word(s).unwrap();
        assert!(is_prechain(&w("xxxxx"), 2, obs));
        assert!(is_chain_top_down(&w("xxxxx"), 2, obs).is_none());
        assert!(!is_prechain(&w("xxxxx"), 3, obs));
        assert!(is_chain_top_down(&w("xxxx"), 2, obs).is_some());
        assert!(is_chain_top_down(&w("xxxyx"), 2, obs).is_some());
        assert!(is_prechain(&w("xxxxyx"), 2, obs));
        assert!(is_chain_top_down(&w("xxxxyx"), 2, obs).is_none());
        assert!(!is_prechain(&w("xxxxyx"), 3, obs));
        assert!(is_chain_top_down(&w("xxyxxyxz"), 3, obs).is_some());
    }

    #[test]
    fn free_algebra_graph() {
        let a = Alphabet::new(&["x", "y"]).unwrap();
        let g = build_chain_graph(&ObstructionSet::empty(), &a);
        let o = MonomialOrder::deglex(&a);
        assert_eq!(g.nodes().len(), 3);
        assert_eq!(g.edge_count(), 2);
        assert_eq!(g.chains(1, &o).len(), 2);
        assert!(g.chains(2, &o).is_empty());
    }

    #[test]
    fn pruning_drops_unreachable_suffixes() {
        let a = Alphabet::new(&["x", "y"]).unwrap();
        let obs = ObstructionSet::new([a.parse_word("xyyy").unwrap()], &a).unwrap();
        let g = build_chain_graph(&obs, &a);
        // yy would need a predecessor ending in xy
        let p = g.pruned();
        let kept: Vec<String> = p.nodes().iter().map(|w| a.format_word(w)).collect();
        assert_eq!(kept, vec!["1", "x", "y", "yyy"]);
        assert_eq!(g.nodes().len(), 5);
        let o = MonomialOrder::deglex(&a);
        for n in 0..5 {
            assert_eq!(words(&a, &g.chains(n, &o)), words(&a, &p.chains(n, &o)));
        }
        assert!(p.to_dot().starts_with("digraph chains {\n  n0 [label=\"1\"];"));
    }
}
