//! Subgraph-universal host of treewidth at most 3 for treewidth-2 guests,
//! built recursively: a provider graph H_n with a distinguished edge e*
//! (universal for n-vertex simple 2-paths with one pinned edge), with n-1
//! copies of the smaller host glued onto every edge of H_n.
//!
//! The provider interface is pluggable; the bundled fallback provider is
//! correct but exponential: it glues, on a single shared edge, one copy of
//! every n-vertex simple 2-path per (graph, pinnable edge) choice.

use crate::artifact::{ArtifactMeta, ClassKind, UniversalArtifact};
use crate::error::{Result, UniversalError};
use serde::{Deserialize, Serialize};
use ugraph_core::{canonical_form, Graph, Mode};
use ugraph_decomp::{exact_treewidth, simple_kpath_recognize, TreeDecomposition};

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum HnSizeClass {
    Polynomial,
    ExponentialFallback,
}

/// A provider graph with its distinguished edge and a treewidth-3
/// certificate.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct HnGraph {
    pub graph: Graph,
    pub e_star: (u32, u32),
    pub witness: TreeDecomposition,
}

pub trait HnProvider {
    fn size_class(&self) -> HnSizeClass;
    fn build(&self, n: u32, cap: usize) -> Result<HnGraph>;
}

/// Guest-size parameter of the sub-host glued on each edge.
pub fn sub_parameter(l: u32) -> u32 {
    (l + 1) / 2 + 1
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Tw2QuasiMeta {
    pub n: u32,
    pub special_edge: (u32, u32),
    pub size: u32,
    pub detail: Tw2Detail,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "shape", rename_all = "lowercase")]
pub enum Tw2Detail {
    Triangle,
    Glued {
        h: HnGraph,
        copies_per_edge: u32,
        sub: Box<Tw2QuasiMeta>,
    },
}

impl Tw2QuasiMeta {
    /// Host vertex of a local sub-host vertex inside copy `copy` glued on
    /// the `edge_idx`-th edge of H (edges in lexicographic order).
    pub fn copy_vertex(&self, h_edges: &[(u32, u32)], edge_idx: usize, copy: u32, local: u32) -> u32 {
        match &self.detail {
            Tw2Detail::Triangle => unreachable!("triangle hosts have no copies"),
            Tw2Detail::Glued { h, copies_per_edge, sub } => {
                let (p, q) = ordered(sub.special_edge);
                let (eu, ev) = h_edges[edge_idx];
                if local == p {
                    return eu;
                }
                if local == q {
                    return ev;
                }
                let block = sub.size - 2;
                let base = h.graph.n() as u32
                    + (edge_idx as u32 * copies_per_edge + copy) * block;
                let rank = local - (local > p) as u32 - (local > q) as u32;
                base + rank
            }
        }
    }
}

fn ordered(e: (u32, u32)) -> (u32, u32) {
    if e.0 < e.1 {
        e
    } else {
        (e.1, e.0)
    }
}

/// All simple 2-paths on n >= 3 vertices, one representative per
/// isomorphism class, ordered by canonical form. Enumeration follows the
/// bag evolution: start from a triangle, each step drops one of the two
/// non-newest bag vertices (any of the three at the first step) and adds a
/// fresh vertex.
pub fn enumerate_simple_2paths(n: u32) -> Result<Vec<Graph>> {
    if n < 3 {
        return Err(UniversalError::BadParameter(format!(
            "simple 2-paths need at least 3 vertices, got {n}"
        )));
    }
    let mut out: std::collections::BTreeMap<ugraph_core::CanonicalForm, Graph> =
        std::collections::BTreeMap::new();
    // state: current bag (three vertices), newest vertex, edges so far
    let mut stack: Vec<([u32; 3], u32, Vec<(u32, u32)>, u32)> = Vec::new();
    stack.push(([0, 1, 2], u32::MAX, vec![(0, 1), (0, 2), (1, 2)], 3));
    while let Some((bag, newest, edges, used)) = stack.pop() {
        if used == n {
            let g = Graph::from_edges(n as usize, edges.iter().copied())?;
            debug_assert!(simple_kpath_recognize(&g, 2).is_some());
            out.entry(canonical_form(&g)?).or_insert(g);
            continue;
        }
        for &drop in &bag {
            if drop == newest {
                continue;
            }
            let kept: Vec<u32> = bag.iter().copied().filter(|&v| v != drop).collect();
            let fresh = used;
            let mut new_edges = edges.clone();
            new_edges.push((kept[0], fresh));
            new_edges.push((kept[1], fresh));
            stack.push(([kept[0], kept[1], fresh], fresh, new_edges, used + 1));
        }
    }
    Ok(out.into_values().collect())
}

/// The fallback provider: correct by construction, exponential in size.
pub struct FallbackHnProvider;

impl HnProvider for FallbackHnProvider {
    fn size_class(&self) -> HnSizeClass {
        HnSizeClass::ExponentialFallback
    }

    fn build(&self, n: u32, cap: usize) -> Result<HnGraph> {
        let reps = enumerate_simple_2paths(n)?;
        // one copy per (representative, edge with a degree-2 endpoint),
        // glued on the shared special edge (0, 1)
        let mut copies: Vec<(usize, (u32, u32))> = Vec::new();
        for (ri, rep) in reps.iter().enumerate() {
            for (u, v) in rep.edges() {
                if rep.degree(u) == 2 || rep.degree(v) == 2 {
                    copies.push((ri, (u, v)));
                }
            }
        }
        let block = n - 2;
        let total = 2u128 + copies.len() as u128 * block as u128;
        if total > cap as u128 {
            return Err(UniversalError::VertexCapExceeded { needed: total, cap });
        }
        let mut edges: Vec<(u32, u32)> = vec![(0, 1)];
        let mut rep_witnesses: Vec<TreeDecomposition> = Vec::new();
        for rep in &reps {
            rep_witnesses.push(exact_treewidth(rep)?.1);
        }
        // witness: central bag {0,1}, one translated width-2 witness per copy
        let mut w_bags: Vec<Vec<u32>> = vec![vec![0, 1]];
        let mut w_edges: Vec<(usize, usize)> = Vec::new();
        for (ci, &(ri, (u, v))) in copies.iter().enumerate() {
            let rep = &reps[ri];
            let a = if rep.degree(u) == 2 { u } else { v };
            let b = if a == u { v } else { u };
            let base = 2 + ci as u32 * block;
            let translate = |x: u32| -> u32 {
                if x == a {
                    0
                } else if x == b {
                    1
                } else {
                    base + x - (x > a) as u32 - (x > b) as u32
                }
            };
            for (x, y) in rep.edges() {
                edges.push((translate(x), translate(y)));
            }
            let rw = &rep_witnesses[ri];
            let offset = w_bags.len();
            for bag in &rw.bags {
                let mut nb: Vec<u32> = bag.iter().map(|&x| translate(x)).collect();
                nb.sort_unstable();
                w_bags.push(nb);
            }
            for &(x, y) in &rw.edges {
                w_edges.push((offset + x, offset + y));
            }
            let anchor = rw
                .bags
                .iter()
                .position(|bag| bag.contains(&a) && bag.contains(&b))
                .expect("an edge of the representative lies in some witness bag");
            w_edges.push((0, offset + anchor));
        }
        let graph = Graph::from_edges(total as usize, edges)?;
        let witness = TreeDecomposition { bags: w_bags, edges: w_edges, root: Some(0) };
        debug_assert!(witness.width() <= 3);
        Ok(HnGraph { graph, e_star: (0, 1), witness })
    }
}

/// Exhaustive subgraph embedding of a simple 2-path into a provider graph,
/// mapping `pin` onto `e_star`. Vertices are placed in an order where each
/// has two already-placed neighbors, so candidates are common neighbors.
pub fn embed_simple_2path(
    host: &Graph,
    e_star: (u32, u32),
    guest: &Graph,
    pin: (u32, u32),
) -> Option<Vec<u32>> {
    let gn = guest.n();
    if gn > host.n() || !guest.has_edge(pin.0, pin.1) || !host.has_edge(e_star.0, e_star.1) {
        return None;
    }
    // placement order: pin endpoints, then vertices with >= 2 placed neighbors
    let mut order = vec![pin.0, pin.1];
    let mut placed = vec![false; gn];
    placed[pin.0 as usize] = true;
    placed[pin.1 as usize] = true;
    while order.len() < gn {
        let next = (0..gn as u32).find(|&v| {
            !placed[v as usize]
                && guest.neighbors(v).iter().filter(|&&w| placed[w as usize]).count() >= 2
        })?;
        placed[next as usize] = true;
        order.push(next);
    }
    for (h0, h1) in [(e_star.0, e_star.1), (e_star.1, e_star.0)] {
        let mut map = vec![u32::MAX; gn];
        let mut used = vec![false; host.n()];
        map[order[0] as usize] = h0;
        map[order[1] as usize] = h1;
        used[h0 as usize] = true;
        used[h1 as usize] = true;
        if place(host, guest, &order, 2, &mut map, &mut used) {
            return Some(map);
        }
        // reset is implicit: map/used are rebuilt per orientation
    }
    None
}

fn place(
    host: &Graph,
    guest: &Graph,
    order: &[u32],
    idx: usize,
    map: &mut Vec<u32>,
    used: &mut Vec<bool>,
) -> bool {
    if idx == order.len() {
        return true;
    }
    let v = order[idx];
    let mapped_nbrs: Vec<u32> = guest
        .neighbors(v)
        .iter()
        .copied()
        .filter(|&w| map[w as usize] != u32::MAX)
        .collect();
    // candidates: unused common neighbors of all already-placed neighbors
    let anchor = map[mapped_nbrs[0] as usize];
    'cand: for &c in host.neighbors(anchor) {
        if used[c as usize] {
            continue;
        }
        for &w in &mapped_nbrs[1..] {
            if !host.has_edge(c, map[w as usize]) {
                continue 'cand;
            }
        }
        map[v as usize] = c;
        used[c as usize] = true;
        if place(host, guest, order, idx + 1, map, used) {
            return true;
        }
        map[v as usize] = u32::MAX;
        used[c as usize] = false;
    }
    false
}

/// Exhaustive check of the provider contract for one n: every n-vertex
/// simple 2-path, pinned at every edge with a degree-2 endpoint, embeds
/// with the pin landing on e*.
pub fn verify_provider_contract(provider: &dyn HnProvider, n: u32, cap: usize) -> Result<()> {
    let hn = provider.build(n, cap)?;
    for rep in enumerate_simple_2paths(n)? {
        for (u, v) in rep.edges() {
            if rep.degree(u) != 2 && rep.degree(v) != 2 {
                continue;
            }
            let map = embed_simple_2path(&hn.graph, hn.e_star, &rep, (u, v))
                .ok_or_else(|| {
                    UniversalError::ProviderContract(format!(
                        "no pinned embedding for an {n}-vertex simple 2-path at edge ({u}, {v})"
                    ))
                })?;
            if ugraph_core::verify_map(&rep, &hn.graph, &map, Mode::Subgraph).is_err() {
                return Err(UniversalError::ProviderContract(
                    "provider embedder returned an invalid map".into(),
                ));
            }
        }
    }
    Ok(())
}

/// Host size without materializing: |U_n| = |H_n| + (n-1)|E(H_n)|(|U_m|-2).
pub fn tw2_host_size(n: u32, provider: &dyn HnProvider, cap: usize) -> Result<u128> {
    if n < 3 {
        return Err(UniversalError::BadParameter("tw2 host needs n >= 3".into()));
    }
    if n == 3 {
        return Ok(3);
    }
    let sub = tw2_host_size(sub_parameter(n), provider, cap)?;
    let h = provider.build(n, cap)?;
    Ok(h.graph.n() as u128 + (n as u128 - 1) * h.graph.edge_count() as u128 * (sub - 2))
}

pub fn build_tw2_quasi_universal(
    n: u32,
    provider: &dyn HnProvider,
    cap: usize,
) -> Result<UniversalArtifact> {
    if n < 3 {
        return Err(UniversalError::BadParameter(format!(
            "tw2 universal needs n >= 3, got {n}"
        )));
    }
    let mut chain = Vec::new();
    let mut cur = n;
    while cur > 3 {
        chain.push(cur);
        cur = sub_parameter(cur);
    }
    chain.push(3);
    chain.reverse();

    let mut graph = Graph::complete(3);
    let mut meta = Tw2QuasiMeta { n: 3, special_edge: (0, 1), size: 3, detail: Tw2Detail::Triangle };
    for &l in &chain[1..] {
        let h = provider.build(l, cap)?;
        let copies = l - 1;
        let block = meta.size as u128 - 2;
        let size =
            h.graph.n() as u128 + copies as u128 * h.graph.edge_count() as u128 * block;
        if size > cap as u128 {
            return Err(UniversalError::VertexCapExceeded { needed: size, cap });
        }
        let h_edges: Vec<(u32, u32)> = h.graph.edges().collect();
        let sub_meta = Box::new(meta);
        let next_meta = Tw2QuasiMeta {
            n: l,
            special_edge: h.e_star,
            size: size as u32,
            detail: Tw2Detail::Glued { h: h.clone(), copies_per_edge: copies, sub: sub_meta },
        };
        let mut edges: Vec<(u32, u32)> =
            Vec::with_capacity(h.graph.edge_count() * (1 + copies as usize * graph.edge_count()));
        edges.extend(h.graph.edges());
        for (edge_idx, _) in h_edges.iter().enumerate() {
            for copy in 0..copies {
                for (a, b) in graph.edges() {
                    edges.push((
                        next_meta.copy_vertex(&h_edges, edge_idx, copy, a),
                        next_meta.copy_vertex(&h_edges, edge_idx, copy, b),
                    ));
                }
            }
        }
        graph = Graph::from_edges(size as usize, edges)?;
        meta = next_meta;
    }
    Ok(UniversalArtifact {
        graph,
        class_kind: ClassKind::Tw2Quasi,
        k: 2,
        n,
        mode: Mode::Subgraph,
        meta: ArtifactMeta::Tw2Quasi(meta),
    })
}

/// Width <= 3 tree-decomposition of the host, assembled along the gluing.
pub fn witness(meta: &Tw2QuasiMeta) -> TreeDecomposition {
    match &meta.detail {
        Tw2Detail::Triangle => TreeDecomposition::single_bag(vec![0, 1, 2]),
        Tw2Detail::Glued { h, copies_per_edge, sub } => {
            let h_edges: Vec<(u32, u32)> = h.graph.edges().collect();
            let sub_witness = witness(sub);
            let (p, q) = ordered(sub.special_edge);
            let sub_anchor = sub_witness
                .bags
                .iter()
                .position(|bag| bag.contains(&p) && bag.contains(&q))
                .expect("the special edge lies in some witness bag");
            let mut bags = h.witness.bags.clone();
            let mut edges = h.witness.edges.clone();
            for (edge_idx, &(eu, ev)) in h_edges.iter().enumerate() {
                let h_anchor = h
                    .witness
                    .bags
                    .iter()
                    .position(|bag| bag.contains(&eu) && bag.contains(&ev))
                    .expect("every H edge lies in some witness bag");
                for copy in 0..*copies_per_edge {
                    let offset = bags.len();
                    for bag in &sub_witness.bags {
                        let mut nb: Vec<u32> = bag
                            .iter()
                            .map(|&x| meta.copy_vertex(&h_edges, edge_idx, copy, x))
                            .collect();
                        nb.sort_unstable();
                        bags.push(nb);
                    }
                    for &(x, y) in &sub_witness.edges {
                        edges.push((offset + x, offset + y));
                    }
                    edges.push((h_anchor, offset + sub_anchor));
                }
            }
            TreeDecomposition { bags, edges, root: h.witness.root.or(Some(0)) }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use ugraph_decomp::validate_tree;

    #[test]
    fn sub_parameters() {
        assert_eq!(sub_parameter(4), 3);
        assert_eq!(sub_parameter(5), 4);
        assert_eq!(sub_parameter(6), 4);
        assert_eq!(sub_parameter(7), 5);
        assert_eq!(sub_parameter(9), 6);
    }

    #[test]
    fn simple_2path_enumeration_counts() {
        assert_eq!(enumerate_simple_2paths(3).unwrap().len(), 1);
        assert_eq!(enumerate_simple_2paths(4).unwrap().len(), 1);
        assert_eq!(enumerate_simple_2paths(5).unwrap().len(), 1);
        // every output is recognized
        for g in enumerate_simple_2paths(7).unwrap() {
            assert!(simple_kpath_recognize(&g, 2).is_some());
            assert_eq!(g.edge_count(), 2 * g.n() - 3);
        }
    }

    #[test]
    fn triangle_base_case() {
        let a = build_tw2_quasi_universal(3, &FallbackHnProvider, 100).unwrap();
        assert_eq!(a.graph, Graph::complete(3));
        match &a.meta {
            ArtifactMeta::Tw2Quasi(m) => assert_eq!(m.special_edge, (0, 1)),
            _ => panic!("wrong meta"),
        }
    }

    #[test]
    fn u4_size_matches_recurrence() {
        let provider = FallbackHnProvider;
        let a = build_tw2_quasi_universal(4, &provider, 100_000).unwrap();
        let h = provider.build(4, 100_000).unwrap();
        let expected = h.graph.n() + 3 * h.graph.edge_count() * (3 - 2);
        assert_eq!(a.graph.n(), expected);
        assert_eq!(tw2_host_size(4, &provider, 100_000).unwrap(), expected as u128);
        let w = match &a.meta {
            ArtifactMeta::Tw2Quasi(m) => witness(m),
            _ => unreachable!(),
        };
        assert!(w.width() <= 3);
        assert_eq!(validate_tree(&w, &a.graph), Ok(()));
    }

    #[test]
    fn fallback_contract_small() {
        verify_provider_contract(&FallbackHnProvider, 5, 1_000_000).unwrap();
        verify_provider_contract(&FallbackHnProvider, 6, 1_000_000).unwrap();
    }

    #[test]
    fn embedder_pins_correctly() {
        let provider = FallbackHnProvider;
        let hn = provider.build(5, 100_000).unwrap();
        for rep in enumerate_simple_2paths(5).unwrap() {
            for (u, v) in rep.edges() {
                if rep.degree(u) != 2 && rep.degree(v) != 2 {
                    continue;
                }
                let map = embed_simple_2path(&hn.graph, hn.e_star, &rep, (u, v)).unwrap();
                let e = (map[u as usize], map[v as usize]);
                assert!(
                    (e.0.min(e.1), e.0.max(e.1)) == hn.e_star,
                    "pin must land on e*"
                );
            }
        }
    }
}
