//! Crystal operators in the Lusztig-data model, computed by transport.
//!
//! To apply `f_i` to a datum: move to a word whose order starts with
//! `alpha_i` (where `f_i` just increments the first count), then move back.
//! The starred operators use the order ending in `alpha_i` and the last
//! count; note that a word ends in the letter `i*` (the diagram involution
//! induced by the longest element) exactly when its last root is `alpha_i`.
//!
//! Paths are compiled once per `(word, node)` and cached behind a lock, so
//! operator application is a pair of integer-only transports.

use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use serde::Serialize;

use crate::lusztig::{CompiledPath, LusztigDatum};
use crate::rootsys::{Node, RootSystem, TypeRank};
use crate::weyl::{self, ConvexOrder, ReducedWord};
use crate::Error;

type PathCache = RwLock<HashMap<(Vec<Node>, Node), Arc<CompiledPath>>>;

/// Crystal operator engine for one root system.
pub struct Crystal<'a> {
    rs: &'a RootSystem,
    star: Vec<Node>,
    fronts: PathCache,
    backs: PathCache,
}

impl<'a> Crystal<'a> {
    pub fn new(rs: &'a RootSystem) -> Self {
        Crystal {
            rs,
            star: weyl::star_involution(rs),
            fronts: RwLock::new(HashMap::new()),
            backs: RwLock::new(HashMap::new()),
        }
    }

    pub fn root_system(&self) -> &RootSystem {
        self.rs
    }

    /// The diagram involution `i*` with `w_0(alpha_i) = -alpha_{i*}`.
    pub fn star(&self, i: Node) -> Node {
        self.star[i - 1]
    }

    fn check_node(&self, i: Node) -> Result<(), Error> {
        if i == 0 || i > self.rs.rank() {
            return Err(Error::NodeOutOfRange {
                node: i,
                rank: self.rs.rank(),
            });
        }
        Ok(())
    }

    fn cached_path(
        &self,
        cache: &PathCache,
        word: &ReducedWord,
        i: Node,
        front: bool,
    ) -> Result<Arc<CompiledPath>, Error> {
        let key = (word.letters.clone(), i);
        if let Some(path) = cache.read().unwrap().get(&key) {
            return Ok(Arc::clone(path));
        }
        let raw = if front {
            weyl::to_front(self.rs, word, i)?
        } else {
            weyl::to_back(self.rs, word, i)?
        };
        let compiled = Arc::new(CompiledPath::compile(self.rs, &raw)?);
        cache
            .write()
            .unwrap()
            .entry(key)
            .or_insert_with(|| Arc::clone(&compiled));
        Ok(compiled)
    }

    fn front_path(&self, word: &ReducedWord, i: Node) -> Result<Arc<CompiledPath>, Error> {
        self.cached_path(&self.fronts, word, i, true)
    }

    /// Path to the order whose last root is `alpha_i`, i.e. to a word ending
    /// in the letter `i*`.
    fn back_path(&self, word: &ReducedWord, i: Node) -> Result<Arc<CompiledPath>, Error> {
        self.cached_path(&self.backs, word, self.star(i), false)
    }

    /// `f_i`: always defined; weight drops by `alpha_i`.
    pub fn f(&self, i: Node, d: &LusztigDatum) -> Result<LusztigDatum, Error> {
        self.check_node(i)?;
        let path = self.front_path(&d.order.word, i)?;
        let mut counts = d.counts.clone();
        path.transport(&mut counts);
        counts[0] += 1;
        path.transport_back(&mut counts);
        Ok(LusztigDatum {
            order: d.order.clone(),
            counts,
        })
    }

    /// `e_i`: returns `None` at the top of the `i`-string.
    pub fn e(&self, i: Node, d: &LusztigDatum) -> Result<Option<LusztigDatum>, Error> {
        self.check_node(i)?;
        let path = self.front_path(&d.order.word, i)?;
        let mut counts = d.counts.clone();
        path.transport(&mut counts);
        if counts[0] == 0 {
            return Ok(None);
        }
        counts[0] -= 1;
        path.transport_back(&mut counts);
        Ok(Some(LusztigDatum {
            order: d.order.clone(),
            counts,
        }))
    }

    /// `epsilon_i`: the first count after transport to an `alpha_i`-first order.
    pub fn epsilon(&self, i: Node, d: &LusztigDatum) -> Result<u64, Error> {
        self.check_node(i)?;
        let path = self.front_path(&d.order.word, i)?;
        let mut counts = d.counts.clone();
        path.transport(&mut counts);
        Ok(counts[0])
    }

    /// Star-twisted `f_i`, acting on the last coordinate of an
    /// `alpha_i`-last order.
    pub fn fstar(&self, i: Node, d: &LusztigDatum) -> Result<LusztigDatum, Error> {
        self.check_node(i)?;
        let path = self.back_path(&d.order.word, i)?;
        let mut counts = d.counts.clone();
        path.transport(&mut counts);
        *counts.last_mut().unwrap() += 1;
        path.transport_back(&mut counts);
        Ok(LusztigDatum {
            order: d.order.clone(),
            counts,
        })
    }

    /// Star-twisted `e_i`.
    pub fn estar(&self, i: Node, d: &LusztigDatum) -> Result<Option<LusztigDatum>, Error> {
        self.check_node(i)?;
        let path = self.back_path(&d.order.word, i)?;
        let mut counts = d.counts.clone();
        path.transport(&mut counts);
        if *counts.last().unwrap() == 0 {
            return Ok(None);
        }
        *counts.last_mut().unwrap() -= 1;
        path.transport_back(&mut counts);
        Ok(Some(LusztigDatum {
            order: d.order.clone(),
            counts,
        }))
    }

    /// Star-twisted string length.
    pub fn epsilonstar(&self, i: Node, d: &LusztigDatum) -> Result<u64, Error> {
        self.check_node(i)?;
        let path = self.back_path(&d.order.word, i)?;
        let mut counts = d.counts.clone();
        path.transport(&mut counts);
        Ok(*counts.last().unwrap())
    }
}

/// One `f_i` arrow of a crystal graph, by vertex indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GraphEdge {
    pub from: usize,
    pub to: usize,
    pub label: Node,
}

/// The part of the crystal reachable from the zero datum by at most `depth`
/// operator applications. Vertices are count tuples in lexicographic order.
#[derive(Debug, Clone)]
pub struct CrystalGraph {
    pub word: ReducedWord,
    pub depth: usize,
    pub vertices: Vec<Vec<u64>>,
    pub edges: Vec<GraphEdge>,
}

/// Breadth-first enumeration by weight height; deterministic.
pub fn crystal_graph(rs: &RootSystem, order: &ConvexOrder, depth: usize) -> Result<CrystalGraph, Error> {
    let crystal = Crystal::new(rs);
    let zero = LusztigDatum::zero(order.clone());
    let mut ids: HashMap<Vec<u64>, usize> = HashMap::new();
    ids.insert(zero.counts.clone(), 0);
    let mut vertices = vec![zero.counts.clone()];
    let mut edges: Vec<(usize, usize, Node)> = Vec::new();
    let mut level: Vec<LusztigDatum> = vec![zero];
    for _ in 0..depth {
        let mut next = Vec::new();
        for d in &level {
            let from = ids[&d.counts];
            for i in 1..=rs.rank() {
                let image = crystal.f(i, d)?;
                let to = *ids.entry(image.counts.clone()).or_insert_with(|| {
                    vertices.push(image.counts.clone());
                    next.push(image.clone());
                    vertices.len() - 1
                });
                edges.push((from, to, i));
            }
        }
        level = next;
    }
    // canonical form: vertices sorted by counts, edges by (from, label)
    let mut perm: Vec<usize> = (0..vertices.len()).collect();
    perm.sort_by(|&a, &b| vertices[a].cmp(&vertices[b]));
    let mut rank_of = vec![0; vertices.len()];
    for (new, &old) in perm.iter().enumerate() {
        rank_of[old] = new;
    }
    let mut sorted_vertices = vec![Vec::new(); vertices.len()];
    for (old, v) in vertices.into_iter().enumerate() {
        sorted_vertices[rank_of[old]] = v;
    }
    let mut edges: Vec<GraphEdge> = edges
        .into_iter()
        .map(|(f, t, l)| GraphEdge {
            from: rank_of[f],
            to: rank_of[t],
            label: l,
        })
        .collect();
    edges.sort_by_key(|e| (e.from, e.label, e.to));
    Ok(CrystalGraph {
        word: order.word.clone(),
        depth,
        vertices: sorted_vertices,
        edges,
    })
}

/// DOT rendering with count-tuple vertex labels and `f_i` edge labels.
pub fn graph_dot(g: &CrystalGraph) -> String {
    let mut out = String::from("digraph crystal {\n  rankdir=TB;\n");
    for (k, v) in g.vertices.iter().enumerate() {
        let label: Vec<String> = v.iter().map(|c| c.to_string()).collect();
        out.push_str(&format!("  v{} [label=\"({})\"];\n", k, label.join(",")));
    }
    for e in &g.edges {
        out.push_str(&format!(
            "  v{} -> v{} [label=\"f_{}\"];\n",
            e.from, e.to, e.label
        ));
    }
    out.push_str("}\n");
    out
}

#[derive(Serialize)]
struct GraphFile<'a> {
    #[serde(rename = "type")]
    letter: String,
    rank: usize,
    word: &'a [Node],
    depth: usize,
    vertices: &'a [Vec<u64>],
    edges: &'a [GraphEdge],
}

/// Adjacency JSON alternative to DOT.
pub fn graph_json(tr: TypeRank, g: &CrystalGraph) -> String {
    let file = GraphFile {
        letter: tr.letter.to_string(),
        rank: tr.rank,
        word: &g.word.letters,
        depth: g.depth,
        vertices: &g.vertices,
        edges: &g.edges,
    };
    serde_json::to_string_pretty(&file).expect("graph serialization cannot fail")
}
