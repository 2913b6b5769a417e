//! Normal quotient graphs Γ/N: vertices are the N-orbits, with an edge
//! between two orbits when some pair of their members is adjacent in the
//! base graph, plus the cover-multiplicity bookkeeping.

use std::collections::BTreeMap;

use crate::coset::CosetGraph;
use crate::error::{Error, Result};
use crate::group::{point_orbits, BigCount, PermGroup, DEFAULT_ENUM_BOUND};
use crate::perm::Permutation;

/// A quotient of a graph by a vertex partition (normally the orbits of a
/// group of automorphisms). Keeps the base adjacency so multiplicity claims
/// stay checkable.
pub struct QuotientGraph {
    block_of: Vec<usize>,
    blocks: Vec<Vec<u32>>,
    adjacency: Vec<Vec<u32>>,
    /// For each ordered adjacent block pair (Δ, Ω): how many base-neighbors
    /// the first vertex of Δ has in Ω.
    multiplicity: BTreeMap<(u32, u32), u64>,
    base_adjacency: Vec<Vec<u32>>,
    provenance: Vec<String>,
}

impl QuotientGraph {
    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    pub fn block_of(&self) -> &[usize] {
        &self.block_of
    }

    pub fn blocks(&self) -> &[Vec<u32>] {
        &self.blocks
    }

    pub fn neighbors(&self, block: usize) -> &[u32] {
        &self.adjacency[block]
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(|n| n.len()).sum::<usize>() / 2
    }

    /// All quotient edges as sorted `(u, v)`, `u < v`.
    pub fn edges(&self) -> Vec<(u32, u32)> {
        let mut edges = Vec::new();
        for (u, nbrs) in self.adjacency.iter().enumerate() {
            for &v in nbrs {
                if (u as u32) < v {
                    edges.push((u as u32, v));
                }
            }
        }
        edges.sort_unstable();
        edges
    }

    pub fn multiplicity(&self) -> &BTreeMap<(u32, u32), u64> {
        &self.multiplicity
    }

    pub fn provenance(&self) -> &[String] {
        &self.provenance
    }

    /// The quotient as a plain graph.
    pub fn as_graph(&self) -> Result<CosetGraph> {
        CosetGraph::from_edges(self.block_count(), &self.edges(), self.provenance.clone())
    }
}

/// Quotient of `graph` by the orbits of the group generated by
/// `n_generators`, each of which must be an automorphism (checked edge by
/// edge; the first violation is reported with its witness edge).
pub fn normal_quotient(
    graph: &CosetGraph,
    n_generators: &[Permutation],
) -> Result<QuotientGraph> {
    let n = graph.vertex_count();
    for (index, g) in n_generators.iter().enumerate() {
        if g.degree() != n {
            return Err(Error::DegreeMismatch(n, g.degree()));
        }
        for u in 0..n {
            for &v in graph.neighbors(u) {
                let gu = g.apply(u as u32);
                let gv = g.apply(v);
                if graph.neighbors(gu as usize).binary_search(&gv).is_err() {
                    return Err(Error::NotAutomorphism {
                        index,
                        u,
                        v: v as usize,
                    });
                }
            }
        }
    }
    let orbits = point_orbits(n, n_generators);
    let mut block_of = vec![0usize; n];
    for (b, orbit) in orbits.iter().enumerate() {
        for &v in orbit {
            block_of[v as usize] = b;
        }
    }
    quotient_by_partition(graph, block_of)
}

/// Test hook: quotient by an arbitrary partition, bypassing the
/// automorphism precondition. Cover-multiplicity constancy is then *not*
/// guaranteed — that is the point of the hook.
pub fn quotient_by_partition(
    graph: &CosetGraph,
    block_of: Vec<usize>,
) -> Result<QuotientGraph> {
    let n = graph.vertex_count();
    if block_of.len() != n {
        return Err(Error::DegreeMismatch(n, block_of.len()));
    }
    let block_count = block_of.iter().copied().max().map_or(0, |m| m + 1);
    let mut blocks: Vec<Vec<u32>> = vec![Vec::new(); block_count];
    for (v, &b) in block_of.iter().enumerate() {
        blocks[b].push(v as u32);
    }
    if blocks.iter().any(Vec::is_empty) {
        return Err(Error::Invalid("partition has empty blocks".into()));
    }
    let mut adjacency: Vec<Vec<u32>> = vec![Vec::new(); block_count];
    for u in 0..n {
        for &v in graph.neighbors(u) {
            let (bu, bv) = (block_of[u], block_of[v as usize]);
            if bu != bv {
                adjacency[bu].push(bv as u32);
            }
        }
    }
    for nbrs in &mut adjacency {
        nbrs.sort_unstable();
        nbrs.dedup();
    }
    let base_adjacency: Vec<Vec<u32>> = (0..n).map(|u| graph.neighbors(u).to_vec()).collect();
    let mut multiplicity = BTreeMap::new();
    for (bu, nbrs) in adjacency.iter().enumerate() {
        for &bv in nbrs {
            let rep = blocks[bu][0];
            let count = base_adjacency[rep as usize]
                .iter()
                .filter(|&&w| block_of[w as usize] == bv as usize)
                .count() as u64;
            multiplicity.insert((bu as u32, bv), count);
        }
    }
    let provenance = {
        let mut p = graph.provenance().to_vec();
        p.push(format!("quotient blocks {block_count}"));
        p
    };
    Ok(QuotientGraph {
        block_of,
        blocks,
        adjacency,
        multiplicity,
        base_adjacency,
        provenance,
    })
}

/// True iff for every ordered adjacent block pair (Δ, Ω), all vertices of Δ
/// have the same number of base-neighbors in Ω.
pub fn check_cover_multiplicity(q: &QuotientGraph) -> bool {
    for (bu, nbrs) in q.adjacency.iter().enumerate() {
        for &bv in nbrs {
            let expected = q.multiplicity[&(bu as u32, bv)];
            for &alpha in &q.blocks[bu] {
                let count = q.base_adjacency[alpha as usize]
                    .iter()
                    .filter(|&&w| q.block_of[w as usize] == bv as usize)
                    .count() as u64;
                if count != expected {
                    return false;
                }
            }
        }
    }
    true
}

/// Order of the setwise stabilizer of `block` in `G`, where `block` must be
/// an orbit of `N`.
pub fn stabilizer_of_block(g: &PermGroup, n: &PermGroup, block: &[u32]) -> Result<BigCount> {
    if block.is_empty() {
        return Err(Error::NotAnOrbit);
    }
    let mut sorted = block.to_vec();
    sorted.sort_unstable();
    if n.orbit(sorted[0])? != sorted {
        return Err(Error::NotAnOrbit);
    }
    let mut inside = vec![false; g.degree()];
    for &v in &sorted {
        if v as usize >= g.degree() {
            return Err(Error::PointOutOfRange {
                point: v as usize,
                degree: g.degree(),
            });
        }
        inside[v as usize] = true;
    }
    let mut count = 0u64;
    for e in g.enumerate_elements(DEFAULT_ENUM_BOUND)? {
        if sorted.iter().all(|&v| inside[e.apply(v) as usize]) {
            count += 1;
        }
    }
    Ok(BigCount::from(count))
}

/// Extended file format: the quotient edge list followed by a `blocks`
/// section mapping every base vertex to its block.
pub fn write_quotient_file(q: &QuotientGraph) -> String {
    let mut out = String::new();
    for p in q.provenance() {
        out.push_str("# ");
        out.push_str(p);
        out.push('\n');
    }
    let valency = q.adjacency.iter().map(Vec::len).max().unwrap_or(0);
    out.push_str(&format!("vertices {} valency {}\n", q.block_count(), valency));
    for (u, v) in q.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out.push_str(&format!("blocks {}\n", q.block_of.len()));
    for (v, &b) in q.block_of.iter().enumerate() {
        out.push_str(&format!("{v} {b}\n"));
    }
    out
}
