//! Double cosets, coset graphs and the half-arc-transitivity certificate.
//!
//! Everything here treats the subgroup `Y` as enumerable (order ≤ 2^16 in
//! practice ≤ 256) while the ambient group may be astronomically large; sizes
//! of double cosets come from the exact index formula, never from element
//! listing in the ambient group.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::group::{coset_key, BigCount, PermGroup, DEFAULT_ENUM_BOUND};
use crate::perm::Permutation;

fn subgroup_elements(y: &PermGroup) -> Result<Vec<Permutation>> {
    y.enumerate_elements(DEFAULT_ENUM_BOUND)
}

/// A double coset `YsY`, sized at construction.
pub struct DoubleCoset {
    middle: Permutation,
    size: BigCount,
}

impl DoubleCoset {
    pub fn new(y: &PermGroup, middle: Permutation) -> Result<Self> {
        let size = double_coset_size(y, &middle)?;
        Ok(DoubleCoset { middle, size })
    }

    pub fn middle(&self) -> &Permutation {
        &self.middle
    }

    pub fn size(&self) -> &BigCount {
        &self.size
    }

    pub fn contains(&self, y: &PermGroup, g: &Permutation) -> Result<bool> {
        double_coset_contains(y, &self.middle, g)
    }
}

/// Is `g ∈ YsY`?  Decided by scanning `h ∈ Y` and testing `s⁻¹h⁻¹g ∈ Y`.
pub fn double_coset_contains(y: &PermGroup, s: &Permutation, g: &Permutation) -> Result<bool> {
    if s.degree() != y.degree() {
        return Err(Error::DegreeMismatch(y.degree(), s.degree()));
    }
    if g.degree() != y.degree() {
        return Err(Error::DegreeMismatch(y.degree(), g.degree()));
    }
    let s_inv = s.inverse();
    for h in subgroup_elements(y)? {
        // g = h s y  ⟺  y = s⁻¹ h⁻¹ g ∈ Y
        let candidate = s_inv
            .compose_unchecked(&h.inverse())
            .compose_unchecked(g);
        if y.contains(&candidate)? {
            return Ok(true);
        }
    }
    Ok(false)
}

/// `|YsY| = |Y|² / |Y ∩ sYs⁻¹|`, exactly.
pub fn double_coset_size(y: &PermGroup, s: &Permutation) -> Result<BigCount> {
    if s.degree() != y.degree() {
        return Err(Error::DegreeMismatch(y.degree(), s.degree()));
    }
    let conj = y.conjugate_subgroup(&s.inverse())?; // sYs⁻¹
    let inter = y.intersect_small(&conj, DEFAULT_ENUM_BOUND)?;
    Ok(y.order() * y.order() / inter.order())
}

/// Size of `∪ᵣ YrY` over the representatives, merging representatives that
/// share a double coset.
pub fn union_double_coset_size(y: &PermGroup, reps: &[Permutation]) -> Result<BigCount> {
    let classes = distinct_double_coset_reps(y, reps)?;
    let mut total = BigCount::from(0u32);
    for r in &classes {
        total += double_coset_size(y, r)?;
    }
    Ok(total)
}

/// Filters `reps` down to one representative per distinct double coset,
/// keeping first occurrences.
pub fn distinct_double_coset_reps(
    y: &PermGroup,
    reps: &[Permutation],
) -> Result<Vec<Permutation>> {
    let mut classes: Vec<Permutation> = Vec::new();
    'next: for r in reps {
        for c in &classes {
            if double_coset_contains(y, c, r)? {
                continue 'next;
            }
        }
        classes.push(r.clone());
    }
    Ok(classes)
}

/// True iff `parts` is exactly a decomposition of `Y·big·Y` into right cosets:
/// each part lies in the double coset, the right cosets `Y·part` are pairwise
/// disjoint, and they exhaust it by counting.
pub fn coset_decomposition_check(
    y: &PermGroup,
    big: &Permutation,
    parts: &[Permutation],
) -> Result<bool> {
    for p in parts {
        if !double_coset_contains(y, big, p)? {
            return Ok(false);
        }
    }
    for (i, p) in parts.iter().enumerate() {
        for q in &parts[i + 1..] {
            // Y·p = Y·q  ⟺  p q⁻¹ ∈ Y
            if y.contains(&p.compose_unchecked(&q.inverse()))? {
                return Ok(false);
            }
        }
    }
    let size = double_coset_size(y, big)?;
    Ok(BigCount::from(parts.len()) * y.order() == size)
}

/// Canonical right-coset representatives of the cosets `Y·(r·h)`, `h ∈ Y`,
/// that partition the double coset `YrY`. Each returned part is the canonical
/// key of its coset.
pub fn right_coset_parts(y: &PermGroup, rep: &Permutation) -> Result<Vec<Permutation>> {
    let yelems = subgroup_elements(y)?;
    let mut parts: Vec<Permutation> = Vec::new();
    for h in &yelems {
        let key = coset_key(&yelems, &rep.compose_unchecked(h));
        if !parts.contains(&key) {
            parts.push(key);
        }
    }
    parts.sort_unstable();
    Ok(parts)
}

// ---------------------------------------------------------------------------
// Coset graphs.
// ---------------------------------------------------------------------------

/// Default vertex budget for graph construction.
pub const DEFAULT_MAX_VERTICES: usize = 5_000_000;

/// An undirected simple graph on coset vertices. The canonical coset keys are
/// kept when the graph was built from group data, and absent when it was read
/// back from a file.
pub struct CosetGraph {
    adjacency: Vec<Vec<u32>>,
    valency: usize,
    vertex_keys: Option<Vec<Permutation>>,
    provenance: Vec<String>,
}

impl CosetGraph {
    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn valency(&self) -> usize {
        self.valency
    }

    pub fn neighbors(&self, v: usize) -> &[u32] {
        &self.adjacency[v]
    }

    pub fn vertex_keys(&self) -> Option<&[Permutation]> {
        self.vertex_keys.as_deref()
    }

    pub fn provenance(&self) -> &[String] {
        &self.provenance
    }

    pub fn is_regular(&self) -> bool {
        self.adjacency.iter().all(|n| n.len() == self.valency)
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(|n| n.len()).sum::<usize>() / 2
    }

    /// All edges as sorted `(u, v)` pairs with `u < v`.
    pub fn edges(&self) -> Vec<(u32, u32)> {
        let mut edges = Vec::with_capacity(self.edge_count());
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

    /// Builds a graph from an edge list (no loops, duplicates merged).
    pub fn from_edges(
        vertex_count: usize,
        edges: &[(u32, u32)],
        provenance: Vec<String>,
    ) -> Result<Self> {
        let mut adjacency = vec![Vec::new(); vertex_count];
        for &(u, v) in edges {
            if u as usize >= vertex_count || v as usize >= vertex_count {
                return Err(Error::PointOutOfRange {
                    point: u.max(v) as usize,
                    degree: vertex_count,
                });
            }
            if u == v {
                continue;
            }
            adjacency[u as usize].push(v);
            adjacency[v as usize].push(u);
        }
        for n in &mut adjacency {
            n.sort_unstable();
            n.dedup();
        }
        let valency = adjacency.iter().map(|n| n.len()).max().unwrap_or(0);
        Ok(CosetGraph {
            adjacency,
            valency,
            vertex_keys: None,
            provenance,
        })
    }
}

/// Builds `Cos(X, Y, S)` restricted to the cosets reachable from `Y`, where
/// `S = ∪ᵣ YrY` over the given double-coset representatives. When
/// `X = ⟨Y, S⟩` the reachable set is all of `[X:Y]`. Vertices are canonical
/// coset keys; vertex 0 is the base coset `Y`.
pub fn build_coset_graph(
    x: &PermGroup,
    y: &PermGroup,
    s_reps: &[Permutation],
    max_vertices: usize,
) -> Result<CosetGraph> {
    if y.degree() != x.degree() {
        return Err(Error::DegreeMismatch(x.degree(), y.degree()));
    }
    let yelems = subgroup_elements(y)?;
    for r in s_reps {
        if y.contains(r)? {
            return Err(Error::RepInSubgroup);
        }
    }
    // S must be inverse-closed: every representative's inverse must lie in one
    // of the double cosets.
    for r in s_reps {
        let r_inv = r.inverse();
        let mut covered = false;
        for r2 in s_reps {
            if double_coset_contains(y, r2, &r_inv)? {
                covered = true;
                break;
            }
        }
        if !covered {
            return Err(Error::NotInverseClosed { rep: r.to_string() });
        }
    }
    // one set of right-coset parts per distinct double coset
    let classes = distinct_double_coset_reps(y, s_reps)?;
    let mut parts: Vec<Permutation> = Vec::new();
    for c in &classes {
        parts.extend(right_coset_parts(y, c)?);
    }
    let valency = parts.len();

    let base = coset_key(&yelems, &Permutation::identity(x.degree()));
    let mut index: HashMap<Permutation, u32> = HashMap::new();
    index.insert(base.clone(), 0);
    let mut keys = vec![base];
    let mut adjacency: Vec<Vec<u32>> = Vec::new();
    let mut head = 0;
    while head < keys.len() {
        let t = keys[head].clone();
        let mut nbrs = Vec::with_capacity(valency);
        for p in &parts {
            let key = coset_key(&yelems, &p.compose_unchecked(&t));
            let id = match index.get(&key) {
                Some(&id) => id,
                None => {
                    if keys.len() >= max_vertices {
                        return Err(Error::VertexBudget {
                            budget: max_vertices,
                        });
                    }
                    let id = keys.len() as u32;
                    index.insert(key.clone(), id);
                    keys.push(key);
                    id
                }
            };
            nbrs.push(id);
        }
        nbrs.sort_unstable();
        nbrs.dedup();
        debug_assert_eq!(nbrs.len(), valency, "distinct parts give distinct cosets");
        adjacency.push(nbrs);
        head += 1;
    }
    let provenance = vec![
        format!("ambient degree {} order {}", x.degree(), x.order()),
        format!("subgroup order {}", y.order()),
        format!(
            "double coset representatives: {}",
            s_reps
                .iter()
                .map(|r| r.to_string())
                .collect::<Vec<_>>()
                .join("  ")
        ),
    ];
    Ok(CosetGraph {
        adjacency,
        valency,
        vertex_keys: Some(keys),
        provenance,
    })
}

/// Breadth-first reachability from vertex 0.
pub fn is_connected(g: &CosetGraph) -> bool {
    let n = g.vertex_count();
    if n == 0 {
        return true;
    }
    let mut seen = vec![false; n];
    seen[0] = true;
    let mut queue = vec![0u32];
    let mut head = 0;
    let mut count = 1;
    while head < queue.len() {
        let v = queue[head] as usize;
        head += 1;
        for &w in g.neighbors(v) {
            if !seen[w as usize] {
                seen[w as usize] = true;
                count += 1;
                queue.push(w);
            }
        }
    }
    count == n
}

// ---------------------------------------------------------------------------
// Half-arc-transitivity certificate.
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Conclusion {
    HalfArcTransitiveAction,
    FailsGeneration,
    FailsValency,
    FailsAsymmetry,
}

/// The three local conditions for `X` to act half-arc-transitively on
/// `Cos(X, Y, Y{s,s⁻¹}Y)`: `⟨Y,s⟩ = X`, `|Y : Y ∩ s⁻¹Ys| = 2`, and
/// `s⁻¹ ∉ YsY`.
#[derive(Debug, Clone)]
pub struct HatCertificate {
    pub generation_ok: bool,
    pub intersection_index: u64,
    pub asymmetry_ok: bool,
    pub valency: u64,
    pub conclusion: Conclusion,
}

pub fn certify_hat_action(
    x: &PermGroup,
    y: &PermGroup,
    s: &Permutation,
) -> Result<HatCertificate> {
    if y.degree() != x.degree() || s.degree() != x.degree() {
        return Err(Error::DegreeMismatch(x.degree(), y.degree().min(s.degree())));
    }
    if y.contains(s)? {
        return Err(Error::RepInSubgroup);
    }
    let mut gens = y.generators().to_vec();
    gens.push(s.clone());
    let span = PermGroup::from_generators(x.degree(), &gens)?;
    let generation_ok = span.order() == x.order();

    let conj = y.conjugate_subgroup(s)?; // s⁻¹Ys
    let inter = y.intersect_small(&conj, DEFAULT_ENUM_BOUND)?;
    let intersection_index = u64::try_from(&(y.order() / inter.order()))
        .map_err(|_| Error::EnumerationBound {
            bound: DEFAULT_ENUM_BOUND,
        })?;

    let s_inv = s.inverse();
    let asymmetry_ok = !double_coset_contains(y, s, &s_inv)?;
    // valency of the simple graph: |YsY ∪ Ys⁻¹Y| / |Y|; the union collapses
    // to a single double coset precisely when asymmetry fails
    let union = union_double_coset_size(y, &[s.clone(), s_inv])?;
    let valency = u64::try_from(&(union / y.order())).map_err(|_| Error::EnumerationBound {
        bound: DEFAULT_ENUM_BOUND,
    })?;

    let conclusion = if !generation_ok {
        Conclusion::FailsGeneration
    } else if intersection_index != 2 {
        Conclusion::FailsValency
    } else if !asymmetry_ok {
        Conclusion::FailsAsymmetry
    } else {
        Conclusion::HalfArcTransitiveAction
    };
    Ok(HatCertificate {
        generation_ok,
        intersection_index,
        asymmetry_ok,
        valency,
        conclusion,
    })
}

/// Orbit sizes of `Y` acting by right multiplication on the cosets
/// `Y·part`, ascending. The parts must be closed under the action.
pub fn neighborhood_orbits(y: &PermGroup, s_parts: &[Permutation]) -> Result<Vec<usize>> {
    let n = s_parts.len();
    let mut orbit_of: Vec<Option<usize>> = vec![None; n];
    let mut sizes = Vec::new();
    for start in 0..n {
        if orbit_of[start].is_some() {
            continue;
        }
        let orbit_id = sizes.len();
        orbit_of[start] = Some(orbit_id);
        let mut queue = vec![start];
        let mut size = 1;
        let mut head = 0;
        while head < queue.len() {
            let i = queue[head];
            head += 1;
            for g in y.generators() {
                let image = s_parts[i].compose_unchecked(g);
                let mut found = false;
                for (j, q) in s_parts.iter().enumerate() {
                    // Y·(pᵢg) = Y·q  ⟺  pᵢ g q⁻¹ ∈ Y
                    if y.contains(&image.compose_unchecked(&q.inverse()))? {
                        if orbit_of[j].is_none() {
                            orbit_of[j] = Some(orbit_id);
                            size += 1;
                            queue.push(j);
                        }
                        found = true;
                        break;
                    }
                }
                if !found {
                    return Err(Error::Invalid(
                        "parts are not closed under the subgroup action".into(),
                    ));
                }
            }
        }
        sizes.push(size);
    }
    sizes.sort_unstable();
    Ok(sizes)
}

// ---------------------------------------------------------------------------
// File format: "# provenance" comments, "vertices N valency d" header, then
// one sorted edge per line "u v" with u < v.
// ---------------------------------------------------------------------------

pub fn write_graph_file(g: &CosetGraph) -> String {
    let mut out = String::new();
    for p in g.provenance() {
        out.push_str("# ");
        out.push_str(p);
        out.push('\n');
    }
    out.push_str(&format!(
        "vertices {} valency {}\n",
        g.vertex_count(),
        g.valency()
    ));
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn parse_graph_file(text: &str) -> Result<CosetGraph> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    let mut provenance = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(comment) = line.strip_prefix('#') {
            provenance.push(comment.trim().to_string());
            continue;
        }
        if header.is_none() {
            let parts: Vec<&str> = line.split_whitespace().collect();
            let parsed = match parts.as_slice() {
                ["vertices", n, "valency", d] => n
                    .parse::<usize>()
                    .ok()
                    .zip(d.parse::<usize>().ok()),
                _ => None,
            };
            header = Some(parsed.ok_or(Error::Parse {
                line: line_no,
                column: 1,
                msg: "expected header 'vertices <n> valency <d>'".into(),
            })?);
        } else {
            let mut it = line.split_whitespace();
            let pair = it
                .next()
                .and_then(|a| a.parse::<u32>().ok())
                .zip(it.next().and_then(|b| b.parse::<u32>().ok()));
            match (pair, it.next()) {
                (Some((u, v)), None) => edges.push((u, v)),
                _ => {
                    return Err(Error::Parse {
                        line: line_no,
                        column: 1,
                        msg: "expected edge line '<u> <v>'".into(),
                    })
                }
            }
        }
    }
    let (n, d) = header.ok_or(Error::Parse {
        line: 1,
        column: 1,
        msg: "missing graph header".into(),
    })?;
    let g = CosetGraph::from_edges(n, &edges, provenance)?;
    if g.valency() != d {
        return Err(Error::Invalid(format!(
            "header claims valency {d}, edges give {}",
            g.valency()
        )));
    }
    Ok(g)
}
