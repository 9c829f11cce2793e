//! Labeled graphs, block decomposition, the enriched-tree correspondence,
//! graph metrics and the plane-tree walks used by the tail-bound experiments.
//!
//! Vertices are dense integers 0..n-1 internally; the text and JSON
//! interchange formats are 1-based.

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

const UNSET: u32 = u32::MAX;

/// Simple undirected graph in CSR form, immutable after construction.
/// Optional positive edge weights sit in a slot array parallel to the
/// neighbor array.
#[derive(Debug, Clone, PartialEq)]
pub struct LabeledGraph {
    offsets: Vec<u32>,
    neighbors: Vec<u32>,
    weights: Option<Vec<f64>>,
}

impl LabeledGraph {
    pub fn from_edges(n: usize, edges: &[(u32, u32)]) -> Result<Self> {
        Self::build(n, edges, None)
    }

    pub fn from_weighted_edges(n: usize, edges: &[(u32, u32)], weights: &[f64]) -> Result<Self> {
        if weights.len() != edges.len() {
            return Err(Error::ParameterOutOfRange(
                "weight count must match edge count".into(),
            ));
        }
        Self::build(n, edges, Some(weights))
    }

    fn build(n: usize, edges: &[(u32, u32)], weights: Option<&[f64]>) -> Result<Self> {
        if n == 0 {
            return Err(Error::ParameterOutOfRange("graph must be non-empty".into()));
        }
        let mut deg = vec![0u32; n];
        for &(u, v) in edges {
            if u as usize >= n || v as usize >= n {
                return Err(Error::ParameterOutOfRange(format!(
                    "edge ({u},{v}) out of range for n={n}"
                )));
            }
            if u == v {
                return Err(Error::ParameterOutOfRange(format!("loop at vertex {u}")));
            }
            deg[u as usize] += 1;
            deg[v as usize] += 1;
        }
        if let Some(ws) = weights {
            if ws.iter().any(|&w| !(w > 0.0)) {
                return Err(Error::NonPositiveWeight);
            }
        }
        let mut offsets = vec![0u32; n + 1];
        for v in 0..n {
            offsets[v + 1] = offsets[v] + deg[v];
        }
        let mut neighbors = vec![0u32; 2 * edges.len()];
        let mut wslots = weights.map(|_| vec![0.0f64; 2 * edges.len()]);
        let mut cursor: Vec<u32> = offsets[..n].to_vec();
        for (i, &(u, v)) in edges.iter().enumerate() {
            for (a, b) in [(u, v), (v, u)] {
                let slot = cursor[a as usize] as usize;
                neighbors[slot] = b;
                if let (Some(ws), Some(src)) = (wslots.as_mut(), weights) {
                    ws[slot] = src[i];
                }
                cursor[a as usize] += 1;
            }
        }
        // Sort each neighbor run (with its weight slot) and reject duplicates.
        let mut wsorted = wslots.clone();
        for v in 0..n {
            let range = offsets[v] as usize..offsets[v + 1] as usize;
            let mut idx: Vec<usize> = range.clone().collect();
            idx.sort_by_key(|&i| neighbors[i]);
            let run: Vec<u32> = idx.iter().map(|&i| neighbors[i]).collect();
            for w in run.windows(2) {
                if w[0] == w[1] {
                    return Err(Error::ParameterOutOfRange(format!(
                        "parallel edge ({v},{})",
                        w[0]
                    )));
                }
            }
            neighbors[range.clone()].copy_from_slice(&run);
            if let (Some(dst), Some(src)) = (wsorted.as_mut(), wslots.as_ref()) {
                for (k, &i) in idx.iter().enumerate() {
                    dst[offsets[v] as usize + k] = src[i];
                }
            }
        }
        Ok(LabeledGraph {
            offsets,
            neighbors,
            weights: wsorted,
        })
    }

    pub fn n(&self) -> usize {
        self.offsets.len() - 1
    }

    pub fn m(&self) -> usize {
        self.neighbors.len() / 2
    }

    pub fn neighbors(&self, v: u32) -> &[u32] {
        &self.neighbors[self.offsets[v as usize] as usize..self.offsets[v as usize + 1] as usize]
    }

    pub fn degree(&self, v: u32) -> usize {
        self.neighbors(v).len()
    }

    pub fn has_weights(&self) -> bool {
        self.weights.is_some()
    }

    /// Weights aligned with `neighbors(v)`.
    pub fn weight_slots(&self, v: u32) -> Result<&[f64]> {
        let ws = self.weights.as_ref().ok_or(Error::MissingWeights)?;
        Ok(&ws[self.offsets[v as usize] as usize..self.offsets[v as usize + 1] as usize])
    }

    /// Undirected edge list with u < v, plus the weight when present.
    pub fn edges(&self) -> Vec<(u32, u32, Option<f64>)> {
        let mut out = Vec::with_capacity(self.m());
        for u in 0..self.n() as u32 {
            let run = self.neighbors(u);
            for (k, &v) in run.iter().enumerate() {
                if u < v {
                    let w = self
                        .weights
                        .as_ref()
                        .map(|ws| ws[self.offsets[u as usize] as usize + k]);
                    out.push((u, v, w));
                }
            }
        }
        out
    }

    pub fn has_edge(&self, u: u32, v: u32) -> bool {
        self.neighbors(u).binary_search(&v).is_ok()
    }

    pub fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.n()];
        let mut queue = vec![0u32];
        seen[0] = true;
        let mut head = 0;
        while head < queue.len() {
            let v = queue[head];
            head += 1;
            for &w in self.neighbors(v) {
                if !seen[w as usize] {
                    seen[w as usize] = true;
                    queue.push(w);
                }
            }
        }
        queue.len() == self.n()
    }

    /// Copy of the graph with the given weights attached, topology unchanged.
    pub fn with_weights(&self, weights: &[f64]) -> Result<Self> {
        let edges: Vec<(u32, u32)> = self.edges().iter().map(|&(u, v, _)| (u, v)).collect();
        Self::from_weighted_edges(self.n(), &edges, weights)
    }
}

// ---------------------------------------------------------------------------
// BFS metrics

fn bfs_dist(g: &LabeledGraph, source: u32, dist: &mut [u32], queue: &mut Vec<u32>) {
    dist.fill(UNSET);
    queue.clear();
    dist[source as usize] = 0;
    queue.push(source);
    let mut head = 0;
    while head < queue.len() {
        let v = queue[head];
        head += 1;
        let dv = dist[v as usize];
        for &w in g.neighbors(v) {
            if dist[w as usize] == UNSET {
                dist[w as usize] = dv + 1;
                queue.push(w);
            }
        }
    }
}

/// Number of edges on a shortest path.
pub fn hop_distance(g: &LabeledGraph, u: u32, v: u32) -> Result<u32> {
    let mut dist = vec![UNSET; g.n()];
    let mut queue = Vec::with_capacity(g.n());
    bfs_dist(g, u, &mut dist, &mut queue);
    if dist[v as usize] == UNSET {
        return Err(Error::Disconnected);
    }
    Ok(dist[v as usize])
}

/// Maximum hop distance from the root.
pub fn height(g: &LabeledGraph, root: u32) -> Result<u32> {
    let mut dist = vec![UNSET; g.n()];
    let mut queue = Vec::with_capacity(g.n());
    bfs_dist(g, root, &mut dist, &mut queue);
    if queue.len() != g.n() {
        return Err(Error::Disconnected);
    }
    Ok(dist.iter().copied().max().unwrap())
}

/// Exact diameter by all-source BFS; O(n m), the reference mode.
pub fn diameter(g: &LabeledGraph) -> Result<u32> {
    let mut dist = vec![UNSET; g.n()];
    let mut queue = Vec::with_capacity(g.n());
    let mut best = 0u32;
    for s in 0..g.n() as u32 {
        bfs_dist(g, s, &mut dist, &mut queue);
        if queue.len() != g.n() {
            return Err(Error::Disconnected);
        }
        best = best.max(dist.iter().copied().max().unwrap());
    }
    Ok(best)
}

/// Minimum-weight path length; Dijkstra on positive weights.
pub fn weighted_distance(g: &LabeledGraph, u: u32, v: u32) -> Result<f64> {
    let dist = dijkstra(g, u)?;
    if dist[v as usize].is_infinite() {
        return Err(Error::Disconnected);
    }
    Ok(dist[v as usize])
}

pub fn dijkstra(g: &LabeledGraph, source: u32) -> Result<Vec<f64>> {
    use std::cmp::Reverse;
    use std::collections::BinaryHeap;
    g.weight_slots(0)?;
    let mut dist = vec![f64::INFINITY; g.n()];
    let mut heap: BinaryHeap<Reverse<(u64, u32)>> = BinaryHeap::new();
    dist[source as usize] = 0.0;
    heap.push(Reverse((0, source)));
    while let Some(Reverse((key, v))) = heap.pop() {
        let dv = f64::from_bits(key);
        if dv > dist[v as usize] {
            continue;
        }
        let ws = g.weight_slots(v)?;
        for (k, &w) in g.neighbors(v).iter().enumerate() {
            let cand = dv + ws[k];
            if cand < dist[w as usize] {
                dist[w as usize] = cand;
                // Nonnegative doubles order the same as their bit patterns.
                heap.push(Reverse((cand.to_bits(), w)));
            }
        }
    }
    Ok(dist)
}

/// Maximum weighted distance from the root.
pub fn weighted_height(g: &LabeledGraph, root: u32) -> Result<f64> {
    let dist = dijkstra(g, root)?;
    if dist.iter().any(|d| d.is_infinite()) {
        return Err(Error::Disconnected);
    }
    Ok(dist.iter().copied().fold(0.0, f64::max))
}

// ---------------------------------------------------------------------------
// Block decomposition

/// One block: its vertex set (sorted) and its edges.
#[derive(Debug, Clone, PartialEq)]
pub struct Block {
    pub vertices: Vec<u32>,
    pub edges: Vec<(u32, u32)>,
}

#[derive(Debug, Clone)]
pub struct BlockDecomposition {
    pub blocks: Vec<Block>,
    /// Sorted cutvertex labels.
    pub cutvertices: Vec<u32>,
    /// Blocks containing each vertex, by index into `blocks`.
    pub vertex_blocks: Vec<Vec<u32>>,
}

impl BlockDecomposition {
    /// Bipartite block-cut tree edges as (block index, cutvertex label).
    pub fn tree_edges(&self) -> Vec<(usize, u32)> {
        let mut cut = vec![false; self.vertex_blocks.len()];
        for &c in &self.cutvertices {
            cut[c as usize] = true;
        }
        let mut out = Vec::new();
        for (bi, b) in self.blocks.iter().enumerate() {
            for &v in &b.vertices {
                if cut[v as usize] {
                    out.push((bi, v));
                }
            }
        }
        out
    }

    pub fn largest_block(&self) -> usize {
        self.blocks.iter().map(|b| b.vertices.len()).max().unwrap_or(0)
    }
}

/// Lowpoint (depth-first) biconnected-components decomposition.
/// A single isolated vertex yields one block of size 1.
pub fn block_decompose(g: &LabeledGraph) -> Result<BlockDecomposition> {
    let n = g.n();
    if n == 1 {
        return Ok(BlockDecomposition {
            blocks: vec![Block {
                vertices: vec![0],
                edges: vec![],
            }],
            cutvertices: vec![],
            vertex_blocks: vec![vec![0]],
        });
    }
    let mut disc = vec![UNSET; n];
    let mut low = vec![0u32; n];
    let mut parent = vec![UNSET; n];
    let mut cursor = vec![0usize; n];
    let mut is_cut = vec![false; n];
    let mut edge_stack: Vec<(u32, u32)> = Vec::new();
    let mut blocks: Vec<Block> = Vec::new();
    let mut timer = 0u32;
    let mut root_children = 0u32;

    let root = 0u32;
    disc[0] = timer;
    low[0] = timer;
    timer += 1;
    let mut stack = vec![root];
    while let Some(&v) = stack.last() {
        let vi = v as usize;
        if cursor[vi] < g.neighbors(v).len() {
            let w = g.neighbors(v)[cursor[vi]];
            cursor[vi] += 1;
            if disc[w as usize] == UNSET {
                parent[w as usize] = v;
                disc[w as usize] = timer;
                low[w as usize] = timer;
                timer += 1;
                edge_stack.push((v, w));
                if v == root {
                    root_children += 1;
                }
                stack.push(w);
            } else if w != parent[vi] && disc[w as usize] < disc[vi] {
                edge_stack.push((v, w));
                low[vi] = low[vi].min(disc[w as usize]);
            }
        } else {
            stack.pop();
            if let Some(&p) = stack.last() {
                low[p as usize] = low[p as usize].min(low[vi]);
                if low[vi] >= disc[p as usize] {
                    // Edges down to and including (p, v) form one block.
                    let mut edges = Vec::new();
                    while let Some(e) = edge_stack.pop() {
                        edges.push(e);
                        if e == (p, v) {
                            break;
                        }
                    }
                    let mut vertices: Vec<u32> =
                        edges.iter().flat_map(|&(a, b)| [a, b]).collect();
                    vertices.sort_unstable();
                    vertices.dedup();
                    blocks.push(Block { vertices, edges });
                    if p != root {
                        is_cut[p as usize] = true;
                    }
                }
            }
        }
    }
    if timer as usize != n {
        return Err(Error::Disconnected);
    }
    if root_children >= 2 {
        is_cut[0] = true;
    }
    let cutvertices: Vec<u32> = (0..n as u32).filter(|&v| is_cut[v as usize]).collect();
    let mut vertex_blocks = vec![Vec::new(); n];
    for (bi, b) in blocks.iter().enumerate() {
        for &v in &b.vertices {
            vertex_blocks[v as usize].push(bi as u32);
        }
    }
    Ok(BlockDecomposition {
        blocks,
        cutvertices,
        vertex_blocks,
    })
}

// ---------------------------------------------------------------------------
// Derived and pointed blocks

/// A derived block: local vertex 0 is the * vertex, vertices 1..=size are
/// the ordinary labels.
#[derive(Debug, Clone, PartialEq)]
pub struct DerivedBlock {
    pub size: u32,
    pub edges: Vec<(u32, u32)>,
    /// Weights parallel to `edges`, present for first-passage percolation.
    pub weights: Option<Vec<f64>>,
}

impl DerivedBlock {
    pub fn edge(weight: Option<f64>) -> Self {
        DerivedBlock {
            size: 1,
            edges: vec![(0, 1)],
            weights: weight.map(|w| vec![w]),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.size as usize + 1
    }

    fn adjacency(&self) -> Vec<Vec<(u32, f64)>> {
        let mut adj = vec![Vec::new(); self.vertex_count()];
        for (i, &(a, b)) in self.edges.iter().enumerate() {
            let w = self.weights.as_ref().map_or(1.0, |ws| ws[i]);
            adj[a as usize].push((b, w));
            adj[b as usize].push((a, w));
        }
        adj
    }

    /// Hop distances from a local vertex to all local vertices.
    pub fn local_dists(&self, from: u32) -> Vec<u32> {
        let mut dist = vec![UNSET; self.vertex_count()];
        let adj = self.adjacency();
        let mut queue = vec![from];
        dist[from as usize] = 0;
        let mut head = 0;
        while head < queue.len() {
            let v = queue[head];
            head += 1;
            for &(w, _) in &adj[v as usize] {
                if dist[w as usize] == UNSET {
                    dist[w as usize] = dist[v as usize] + 1;
                    queue.push(w);
                }
            }
        }
        dist
    }

    /// Weighted distances from a local vertex (weight 1 per edge when no
    /// weights are attached).
    pub fn local_weighted_dists(&self, from: u32) -> Vec<f64> {
        let adj = self.adjacency();
        let nv = self.vertex_count();
        let mut dist = vec![f64::INFINITY; nv];
        let mut done = vec![false; nv];
        dist[from as usize] = 0.0;
        // Small blocks: quadratic Dijkstra is fine.
        for _ in 0..nv {
            let mut best = f64::INFINITY;
            let mut v = usize::MAX;
            for i in 0..nv {
                if !done[i] && dist[i] < best {
                    best = dist[i];
                    v = i;
                }
            }
            if v == usize::MAX {
                break;
            }
            done[v] = true;
            for &(w, c) in &adj[v] {
                if dist[v] + c < dist[w as usize] {
                    dist[w as usize] = dist[v] + c;
                }
            }
        }
        dist
    }
}

/// A derived block with a distinguished root among its non-* vertices.
#[derive(Debug, Clone, PartialEq)]
pub struct PointedBlock {
    pub block: DerivedBlock,
    /// Root label in 1..=size.
    pub root: u32,
}

impl PointedBlock {
    /// Hop length of a shortest path from the * vertex to the root.
    pub fn shp(&self) -> u32 {
        self.block.local_dists(0)[self.root as usize]
    }

    /// Weighted length of a shortest path from the * vertex to the root.
    pub fn shp_weighted(&self) -> f64 {
        self.block.local_weighted_dists(0)[self.root as usize]
    }
}

// ---------------------------------------------------------------------------
// Enriched trees

/// One enrichment entry: a derived block whose non-* vertices are mapped to
/// the listed children of the owning tree vertex.
#[derive(Debug, Clone)]
pub struct EnrichedBlock {
    pub block: DerivedBlock,
    /// Global vertex of local label i+1 is `members[i]`.
    pub members: Vec<u32>,
}

/// Rooted tree on 0..n-1 together with, per vertex, the derived blocks whose
/// vertex sets partition its offspring set.
#[derive(Debug, Clone)]
pub struct EnrichedTree {
    pub root: u32,
    pub parent: Vec<u32>,
    pub children: Vec<Vec<u32>>,
    pub depth: Vec<u32>,
    pub enrichment: Vec<Vec<EnrichedBlock>>,
}

impl EnrichedTree {
    pub fn n(&self) -> usize {
        self.parent.len()
    }

    /// Vertices ordered by decreasing depth; children precede parents.
    pub fn bottom_up(&self) -> Vec<u32> {
        let mut order: Vec<u32> = (0..self.n() as u32).collect();
        order.sort_by_key(|&v| std::cmp::Reverse(self.depth[v as usize]));
        order
    }
}

/// Decompose a rooted connected graph into its enriched tree: tree depth of
/// v equals the number of blocks on the block path from the root to v.
pub fn to_enriched_tree(g: &LabeledGraph, root: u32) -> Result<EnrichedTree> {
    let decomp = block_decompose(g)?;
    let n = g.n();
    let mut parent = vec![UNSET; n];
    let mut depth = vec![0u32; n];
    let mut children = vec![Vec::new(); n];
    let mut enrichment: Vec<Vec<EnrichedBlock>> = vec![Vec::new(); n];
    let mut claimed = vec![false; decomp.blocks.len()];
    let mut queue = vec![root];
    parent[root as usize] = root;
    let mut head = 0;
    while head < queue.len() {
        let v = queue[head];
        head += 1;
        for &bi in &decomp.vertex_blocks[v as usize] {
            if claimed[bi as usize] {
                continue;
            }
            claimed[bi as usize] = true;
            let b = &decomp.blocks[bi as usize];
            let members: Vec<u32> = b.vertices.iter().copied().filter(|&w| w != v).collect();
            // Local relabeling: 0 = v, member i -> i + 1.
            let mut local = std::collections::HashMap::new();
            local.insert(v, 0u32);
            for (i, &w) in members.iter().enumerate() {
                local.insert(w, i as u32 + 1);
            }
            let edges: Vec<(u32, u32)> = b.edges.iter().map(|&(a, c)| (local[&a], local[&c])).collect();
            for &w in &members {
                parent[w as usize] = v;
                depth[w as usize] = depth[v as usize] + 1;
                children[v as usize].push(w);
                queue.push(w);
            }
            enrichment[v as usize].push(EnrichedBlock {
                block: DerivedBlock {
                    size: members.len() as u32,
                    edges,
                    weights: None,
                },
                members,
            });
        }
    }
    if queue.len() != n {
        return Err(Error::Disconnected);
    }
    Ok(EnrichedTree {
        root,
        parent,
        children,
        depth,
        enrichment,
    })
}

/// Rebuild the graph from an enriched tree by identifying each block's *
/// vertex with its owning tree vertex.
pub fn reassemble(tree: &EnrichedTree) -> Result<LabeledGraph> {
    let mut edges = Vec::new();
    for v in 0..tree.n() as u32 {
        for eb in &tree.enrichment[v as usize] {
            for &(a, b) in &eb.block.edges {
                let ga = if a == 0 { v } else { eb.members[a as usize - 1] };
                let gb = if b == 0 { v } else { eb.members[b as usize - 1] };
                edges.push((ga.min(gb), ga.max(gb)));
            }
        }
    }
    LabeledGraph::from_edges(tree.n(), &edges)
}

/// Minimum number of blocks covering a shortest path: the depth of y in the
/// enriched tree rooted at x.
pub fn bar_distance(g: &LabeledGraph, x: u32, y: u32) -> Result<u32> {
    let t = to_enriched_tree(g, x)?;
    Ok(t.depth[y as usize])
}

// ---------------------------------------------------------------------------
// Fast exact diameter via the block tree
//
// Shortest paths between two vertices of one block stay inside the block, so
// every distance decomposes along the block path. A two-phase pass over the
// enriched tree (subtree heights, then per-block pair combination) gives the
// exact diameter in roughly linear time, against the O(n m) all-source scan.

fn block_dp_diameter(tree: &EnrichedTree, weighted: bool) -> f64 {
    let n = tree.n();
    let mut down = vec![0.0f64; n];
    let order = tree.bottom_up();
    for &v in &order {
        for eb in &tree.enrichment[v as usize] {
            let d0 = if weighted {
                eb.block.local_weighted_dists(0)
            } else {
                eb.block.local_dists(0).iter().map(|&d| d as f64).collect()
            };
            for (i, &w) in eb.members.iter().enumerate() {
                let cand = d0[i + 1] + down[w as usize];
                if cand > down[v as usize] {
                    down[v as usize] = cand;
                }
            }
        }
    }
    let mut best = 0.0f64;
    for v in 0..n as u32 {
        best = best.max(down[v as usize]);
        // Best branch value per block anchored at v, for cross-block pairs.
        let mut top1 = f64::NEG_INFINITY;
        let mut top2 = f64::NEG_INFINITY;
        for eb in &tree.enrichment[v as usize] {
            let d0 = if weighted {
                eb.block.local_weighted_dists(0)
            } else {
                eb.block.local_dists(0).iter().map(|&d| d as f64).collect()
            };
            let mut branch = f64::NEG_INFINITY;
            for (i, &w) in eb.members.iter().enumerate() {
                branch = branch.max(d0[i + 1] + down[w as usize]);
            }
            if branch > top1 {
                top2 = top1;
                top1 = branch;
            } else if branch > top2 {
                top2 = branch;
            }
            // Pairs meeting inside this block.
            if eb.members.len() >= 2 {
                for (i, &wi) in eb.members.iter().enumerate() {
                    let di = if weighted {
                        eb.block.local_weighted_dists(i as u32 + 1)
                    } else {
                        eb.block
                            .local_dists(i as u32 + 1)
                            .iter()
                            .map(|&d| d as f64)
                            .collect()
                    };
                    for (j, &wj) in eb.members.iter().enumerate().skip(i + 1) {
                        let cand = down[wi as usize] + di[j + 1] + down[wj as usize];
                        if cand > best {
                            best = cand;
                        }
                    }
                }
            }
        }
        if top2 > f64::NEG_INFINITY {
            best = best.max(top1 + top2);
        }
    }
    best
}

/// Exact diameter through the block-tree decomposition; equals
/// [`diameter`] on every connected graph at a fraction of the cost.
pub fn diameter_blockwise(g: &LabeledGraph) -> Result<u32> {
    let tree = to_enriched_tree(g, 0)?;
    Ok(block_dp_diameter(&tree, false).round() as u32)
}

/// Exact weighted diameter through the block tree. Requires edge weights.
pub fn weighted_diameter_blockwise(g: &LabeledGraph) -> Result<f64> {
    if !g.has_weights() {
        return Err(Error::MissingWeights);
    }
    let mut tree = to_enriched_tree(g, 0)?;
    // Attach weights to the enrichment blocks.
    for v in 0..tree.n() as u32 {
        for eb in tree.enrichment[v as usize].iter_mut() {
            let mut ws = Vec::with_capacity(eb.block.edges.len());
            for &(a, b) in &eb.block.edges {
                let ga = if a == 0 { v } else { eb.members[a as usize - 1] };
                let gb = if b == 0 { v } else { eb.members[b as usize - 1] };
                let k = g.neighbors(ga).binary_search(&gb).expect("edge exists");
                ws.push(g.weight_slots(ga)?[k]);
            }
            eb.block.weights = Some(ws);
        }
    }
    Ok(block_dp_diameter(&tree, true))
}

// ---------------------------------------------------------------------------
// Plane trees, contour function, DFS queues

/// Rooted ordered tree; vertex 0 is the root and children are ordered.
#[derive(Debug, Clone, PartialEq)]
pub struct PlaneTree {
    pub children: Vec<Vec<u32>>,
}

impl PlaneTree {
    pub fn n(&self) -> usize {
        self.children.len()
    }

    /// Build from the outdegree sequence in depth-first (preorder) order.
    /// The sequence must satisfy the ballot condition.
    pub fn from_preorder_degrees(degrees: &[u32]) -> Self {
        let n = degrees.len();
        let mut children = vec![Vec::new(); n];
        // pending[top] = (vertex, children still to attach)
        let mut pending: Vec<(u32, u32)> = vec![(0, degrees[0])];
        for v in 1..n as u32 {
            while let Some(&(_, 0)) = pending.last() {
                pending.pop();
            }
            let &mut (p, ref mut left) = pending.last_mut().expect("valid degree sequence");
            children[p as usize].push(v);
            *left -= 1;
            pending.push((v, degrees[v as usize]));
        }
        PlaneTree { children }
    }

    /// Vertices in lexicographic depth-first order.
    pub fn preorder(&self) -> Vec<u32> {
        let mut order = Vec::with_capacity(self.n());
        let mut stack = vec![0u32];
        while let Some(v) = stack.pop() {
            order.push(v);
            for &c in self.children[v as usize].iter().rev() {
                stack.push(c);
            }
        }
        order
    }

    pub fn mirror(&self) -> Self {
        let children = self
            .children
            .iter()
            .map(|cs| cs.iter().rev().copied().collect())
            .collect();
        PlaneTree { children }
    }

    pub fn height(&self) -> u32 {
        let mut h = 0;
        let mut stack = vec![(0u32, 0u32)];
        while let Some((v, d)) = stack.pop() {
            h = h.max(d);
            for &c in &self.children[v as usize] {
                stack.push((c, d + 1));
            }
        }
        h
    }
}

/// Depth profile of the depth-first walk: length 2(n-1)+1, starts and ends
/// at 0, steps of +-1.
pub fn contour_function(t: &PlaneTree) -> Vec<u32> {
    let mut out = Vec::with_capacity(2 * t.n() - 1);
    // (vertex, depth, next child index)
    let mut stack = vec![(0u32, 0u32, 0usize)];
    while let Some((v, d, ci)) = stack.pop() {
        if ci == 0 {
            out.push(d);
        }
        if ci < t.children[v as usize].len() {
            stack.push((v, d, ci + 1));
            stack.push((t.children[v as usize][ci], d + 1, 0));
        } else if let Some(&(_, pd, _)) = stack.last() {
            out.push(pd);
        }
    }
    out
}

/// Queue sizes of the lexicographic DFS and of the mirror-image DFS:
/// Q_0 = 1 and Q_i = Q_{i-1} - 1 + outdegree(v_{i-1}).
pub fn dfs_queues(t: &PlaneTree) -> (Vec<i64>, Vec<i64>) {
    let forward = |tree: &PlaneTree| {
        let order = tree.preorder();
        let mut q = Vec::with_capacity(tree.n() + 1);
        q.push(1i64);
        for (i, &v) in order.iter().enumerate() {
            q.push(q[i] - 1 + tree.children[v as usize].len() as i64);
        }
        q
    };
    (forward(t), forward(&t.mirror()))
}

// ---------------------------------------------------------------------------
// Outerplanarity of a 2-connected block

/// Exact outerplanarity test for a 2-connected block given as local edges
/// on vertices 0..nv-1.
///
/// Ear reduction: a Hamilton cycle must pass straight through every
/// degree-2 vertex, so removing such a vertex u with neighbors v, w forces
/// the edge (v, w) onto the cycle of the reduced graph (adding it as a
/// virtual edge when absent). A forced edge that is forced a second time
/// closes a premature triangle, a missing degree-2 vertex leaves a K4-like
/// core, and reaching a triangle certifies the dissection. Linear up to
/// set overhead. [`hamilton_outerplanar_check`] is the independent oracle.
pub fn block_is_outerplanar(nv: usize, edges: &[(u32, u32)]) -> bool {
    if nv <= 3 {
        return true;
    }
    if edges.len() > 2 * nv - 3 {
        return false;
    }
    let mut adj: Vec<std::collections::BTreeSet<u32>> = vec![Default::default(); nv];
    for &(a, b) in edges {
        adj[a as usize].insert(b);
        adj[b as usize].insert(a);
    }
    if adj.iter().any(|s| s.len() < 2) {
        return false;
    }
    let mut required = std::collections::HashSet::new();
    let mut alive = nv;
    let mut queue: Vec<u32> = (0..nv as u32).filter(|&v| adj[v as usize].len() == 2).collect();
    let mut gone = vec![false; nv];
    while alive > 3 {
        let u = loop {
            match queue.pop() {
                Some(u) if !gone[u as usize] && adj[u as usize].len() == 2 => break u,
                Some(_) => continue,
                None => return false, // no ear while more than a triangle remains
            }
        };
        let mut it = adj[u as usize].iter();
        let v = *it.next().unwrap();
        let w = *it.next().unwrap();
        let key = (v.min(w), v.max(w));
        if adj[v as usize].contains(&w) {
            // The chord (v, w) becomes a forced cycle edge; forcing it twice
            // would close a sub-Hamilton triangle.
            if !required.insert(key) {
                return false;
            }
        } else {
            adj[v as usize].insert(w);
            adj[w as usize].insert(v);
            required.insert(key);
        }
        adj[v as usize].remove(&u);
        adj[w as usize].remove(&u);
        adj[u as usize].clear();
        gone[u as usize] = true;
        alive -= 1;
        for x in [v, w] {
            if adj[x as usize].len() < 2 {
                return false;
            }
            if adj[x as usize].len() == 2 {
                queue.push(x);
            }
        }
    }
    // Three survivors must form a triangle.
    let m3: usize = adj.iter().map(|s| s.len()).sum::<usize>() / 2;
    m3 == 3
}

/// Reference outerplanarity oracle: searches for a Hamilton cycle whose
/// chords are pairwise non-crossing in the cyclic order. Exponential in
/// the worst case; intended for cross-validation on small blocks.
pub fn hamilton_outerplanar_check(nv: usize, edges: &[(u32, u32)]) -> bool {
    if nv <= 3 {
        return true;
    }
    let m = edges.len();
    if m > 2 * nv - 3 {
        return false;
    }
    let mut adj = vec![Vec::new(); nv];
    for &(a, b) in edges {
        adj[a as usize].push(b);
        adj[b as usize].push(a);
    }
    if adj.iter().any(|run| run.len() < 2) {
        return false;
    }
    let mut path = vec![0u32];
    let mut used = vec![false; nv];
    used[0] = true;
    hamilton_search(&adj, edges, nv, &mut path, &mut used)
}

fn hamilton_search(
    adj: &[Vec<u32>],
    edges: &[(u32, u32)],
    nv: usize,
    path: &mut Vec<u32>,
    used: &mut [bool],
) -> bool {
    if path.len() == nv {
        let last = *path.last().unwrap();
        if adj[last as usize].contains(&0) && chords_non_crossing(path, edges) {
            return true;
        }
        return false;
    }
    let v = *path.last().unwrap();
    for &w in &adj[v as usize] {
        if used[w as usize] {
            continue;
        }
        path.push(w);
        used[w as usize] = true;
        if hamilton_search(adj, edges, nv, path, used) {
            return true;
        }
        path.pop();
        used[w as usize] = false;
    }
    false
}

fn chords_non_crossing(cycle: &[u32], edges: &[(u32, u32)]) -> bool {
    let nv = cycle.len();
    let mut pos = vec![0usize; nv];
    for (i, &v) in cycle.iter().enumerate() {
        pos[v as usize] = i;
    }
    let mut chords = Vec::new();
    for &(a, b) in edges {
        let (pa, pb) = (pos[a as usize], pos[b as usize]);
        let gap = (pa as i64 - pb as i64).rem_euclid(nv as i64);
        if gap == 1 || gap == nv as i64 - 1 {
            continue; // cycle edge
        }
        chords.push((pa.min(pb), pa.max(pb)));
    }
    for (i, &(a1, b1)) in chords.iter().enumerate() {
        for &(a2, b2) in chords.iter().skip(i + 1) {
            if a1 == a2 || a1 == b2 || b1 == a2 || b1 == b2 {
                continue; // chords sharing an endpoint never cross
            }
            let inside1 = a1 < a2 && a2 < b1;
            let inside2 = a1 < b2 && b2 < b1;
            if inside1 != inside2 {
                return false;
            }
        }
    }
    true
}

// ---------------------------------------------------------------------------
// Interchange formats (1-based)

/// Emit the edge-list text format: first line `n m`, then `u v [w]` per
/// edge, 1-based.
pub fn to_edge_list(g: &LabeledGraph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for (u, v, w) in g.edges() {
        match w {
            Some(w) => out.push_str(&format!("{} {} {}\n", u + 1, v + 1, w)),
            None => out.push_str(&format!("{} {}\n", u + 1, v + 1)),
        }
    }
    out
}

pub fn from_edge_list(text: &str) -> Result<LabeledGraph> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let header = lines.next().ok_or_else(|| parse_err("empty input"))?;
    let mut it = header.split_whitespace();
    let n: usize = it
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| parse_err("bad n"))?;
    let m: usize = it
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| parse_err("bad m"))?;
    let mut edges = Vec::with_capacity(m);
    let mut weights = Vec::new();
    for line in lines {
        let toks: Vec<&str> = line.split_whitespace().collect();
        if toks.len() < 2 || toks.len() > 3 {
            return Err(parse_err(&format!("bad edge line '{line}'")));
        }
        let u: u32 = toks[0].parse().map_err(|_| parse_err("bad vertex"))?;
        let v: u32 = toks[1].parse().map_err(|_| parse_err("bad vertex"))?;
        if u == 0 || v == 0 {
            return Err(parse_err("vertices are 1-based"));
        }
        edges.push((u - 1, v - 1));
        if toks.len() == 3 {
            weights.push(toks[2].parse().map_err(|_| parse_err("bad weight"))?);
        }
    }
    if edges.len() != m {
        return Err(parse_err("edge count mismatch"));
    }
    if weights.is_empty() {
        LabeledGraph::from_edges(n, &edges)
    } else if weights.len() == edges.len() {
        LabeledGraph::from_weighted_edges(n, &edges, &weights)
    } else {
        Err(parse_err("some edges weighted, some not"))
    }
}

fn parse_err(msg: &str) -> Error {
    Error::ParameterOutOfRange(format!("parse: {msg}"))
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    n: usize,
    edges: Vec<[u32; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    weights: Option<Vec<f64>>,
}

/// JSON schema: {"n": .., "edges": [[u, v], ..], "weights": [..]?}, 1-based.
pub fn to_json(g: &LabeledGraph) -> String {
    let edges = g.edges();
    let j = GraphJson {
        n: g.n(),
        edges: edges.iter().map(|&(u, v, _)| [u + 1, v + 1]).collect(),
        weights: g
            .has_weights()
            .then(|| edges.iter().map(|&(_, _, w)| w.unwrap()).collect()),
    };
    serde_json::to_string(&j).expect("serializable")
}

pub fn from_json(text: &str) -> Result<LabeledGraph> {
    let j: GraphJson =
        serde_json::from_str(text).map_err(|e| parse_err(&format!("json: {e}")))?;
    let edges: Vec<(u32, u32)> = j
        .edges
        .iter()
        .map(|&[u, v]| {
            if u == 0 || v == 0 {
                Err(parse_err("vertices are 1-based"))
            } else {
                Ok((u - 1, v - 1))
            }
        })
        .collect::<Result<_>>()?;
    match j.weights {
        Some(ws) => LabeledGraph::from_weighted_edges(j.n, &edges, &ws),
        None => LabeledGraph::from_edges(j.n, &edges),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path3() -> LabeledGraph {
        LabeledGraph::from_edges(3, &[(0, 1), (1, 2)]).unwrap()
    }

    fn triangle() -> LabeledGraph {
        LabeledGraph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap()
    }

    /// Two triangles sharing vertex 2.
    fn bowtie() -> LabeledGraph {
        LabeledGraph::from_edges(5, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]).unwrap()
    }

    fn cycle(n: usize) -> LabeledGraph {
        let edges: Vec<(u32, u32)> = (0..n)
            .map(|i| (i as u32, ((i + 1) % n) as u32))
            .collect();
        LabeledGraph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn construction_rejects_bad_input() {
        assert!(LabeledGraph::from_edges(2, &[(0, 0)]).is_err());
        assert!(LabeledGraph::from_edges(2, &[(0, 1), (1, 0)]).is_err());
        assert!(LabeledGraph::from_edges(2, &[(0, 5)]).is_err());
        assert!(LabeledGraph::from_weighted_edges(2, &[(0, 1)], &[0.0]).is_err());
        assert!(LabeledGraph::from_weighted_edges(2, &[(0, 1)], &[-1.0]).is_err());
    }

    #[test]
    fn block_decompose_path() {
        let d = block_decompose(&path3()).unwrap();
        assert_eq!(d.blocks.len(), 2);
        let mut sets: Vec<Vec<u32>> = d.blocks.iter().map(|b| b.vertices.clone()).collect();
        sets.sort();
        assert_eq!(sets, vec![vec![0, 1], vec![1, 2]]);
        assert_eq!(d.cutvertices, vec![1]);
    }

    #[test]
    fn block_decompose_triangle() {
        let d = block_decompose(&triangle()).unwrap();
        assert_eq!(d.blocks.len(), 1);
        assert_eq!(d.blocks[0].vertices, vec![0, 1, 2]);
        assert!(d.cutvertices.is_empty());
    }

    #[test]
    fn block_decompose_bowtie() {
        // Oracle: hand-checked two blocks, cutvertex 2, block tree a path.
        let d = block_decompose(&bowtie()).unwrap();
        assert_eq!(d.blocks.len(), 2);
        assert_eq!(d.cutvertices, vec![2]);
        let te = d.tree_edges();
        assert_eq!(te.len(), 2);
    }

    #[test]
    fn block_decompose_single_vertex() {
        let g = LabeledGraph::from_edges(1, &[]).unwrap();
        let d = block_decompose(&g).unwrap();
        assert_eq!(d.blocks.len(), 1);
        assert_eq!(d.blocks[0].vertices, vec![0]);
    }

    #[test]
    fn block_decompose_rejects_disconnected() {
        let g = LabeledGraph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(block_decompose(&g).unwrap_err(), Error::Disconnected);
    }

    #[test]
    fn every_edge_in_exactly_one_block() {
        let g = bowtie();
        let d = block_decompose(&g).unwrap();
        let mut count = std::collections::HashMap::new();
        for b in &d.blocks {
            for &(u, v) in &b.edges {
                *count.entry((u.min(v), u.max(v))).or_insert(0) += 1;
            }
        }
        assert_eq!(count.len(), g.m());
        assert!(count.values().all(|&c| c == 1));
    }

    #[test]
    fn enriched_tree_single_edge() {
        let g = LabeledGraph::from_edges(2, &[(0, 1)]).unwrap();
        let t = to_enriched_tree(&g, 0).unwrap();
        assert_eq!(t.depth, vec![0, 1]);
        assert_eq!(t.enrichment[0].len(), 1);
        assert_eq!(t.enrichment[0][0].block.size, 1);
    }

    #[test]
    fn enriched_tree_triangle() {
        let t = to_enriched_tree(&triangle(), 0).unwrap();
        assert_eq!(t.children[0], vec![1, 2]);
        assert_eq!(t.depth, vec![0, 1, 1]);
        assert_eq!(t.enrichment[0].len(), 1);
        assert_eq!(t.enrichment[0][0].block.size, 2);
    }

    #[test]
    fn enriched_tree_bowtie_from_far_vertex() {
        let t = to_enriched_tree(&bowtie(), 0).unwrap();
        assert_eq!(t.depth[2], 1);
        assert_eq!(t.depth[3], 2);
        assert_eq!(t.depth[4], 2);
        // Reassembly oracle.
        let g2 = reassemble(&t).unwrap();
        assert_eq!(g2, bowtie());
    }

    #[test]
    fn bar_distance_examples() {
        let g = bowtie();
        assert_eq!(bar_distance(&g, 0, 1).unwrap(), 1);
        assert_eq!(bar_distance(&g, 0, 4).unwrap(), 2);
        assert_eq!(bar_distance(&g, 0, 0).unwrap(), 0);
    }

    #[test]
    fn metric_examples() {
        let c5 = cycle(5);
        assert_eq!(hop_distance(&c5, 0, 2).unwrap(), 2);
        assert_eq!(diameter(&c5).unwrap(), 2);
        let p = LabeledGraph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5)]).unwrap();
        assert_eq!(diameter(&p).unwrap(), 5);
        assert_eq!(height(&p, 0).unwrap(), 5);
        assert_eq!(diameter_blockwise(&p).unwrap(), 5);
    }

    #[test]
    fn weighted_distance_two_path_comparison() {
        let g = LabeledGraph::from_weighted_edges(
            3,
            &[(0, 1), (1, 2), (0, 2)],
            &[0.5, 2.0, 2.0],
        )
        .unwrap();
        // 0 -> 2 direct costs 2.0, via 1 costs 2.5.
        assert!((weighted_distance(&g, 0, 2).unwrap() - 2.0).abs() < 1e-12);
        assert!((weighted_distance(&g, 1, 2).unwrap() - 2.0).abs() < 1e-12);
    }

    #[test]
    fn weighted_distance_requires_weights() {
        assert_eq!(
            weighted_distance(&path3(), 0, 2).unwrap_err(),
            Error::MissingWeights
        );
    }

    #[test]
    fn blockwise_diameter_matches_all_source_bfs() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(42);
        for _ in 0..300 {
            // Random connected graph: spanning tree plus a few extra edges.
            let n = rng.gen_range(1..40usize);
            let mut edges = Vec::new();
            for v in 1..n as u32 {
                edges.push((rng.gen_range(0..v), v));
            }
            for _ in 0..rng.gen_range(0..n) {
                let u = rng.gen_range(0..n as u32);
                let v = rng.gen_range(0..n as u32);
                if u != v && !edges.contains(&(u.min(v), u.max(v))) {
                    edges.push((u.min(v), u.max(v)));
                }
            }
            let g = LabeledGraph::from_edges(n, &edges).unwrap();
            assert_eq!(diameter(&g).unwrap(), diameter_blockwise(&g).unwrap());
        }
    }

    #[test]
    fn weighted_blockwise_diameter_matches_all_source_dijkstra() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(43);
        for _ in 0..150 {
            let n = rng.gen_range(2..30usize);
            let mut edges = Vec::new();
            for v in 1..n as u32 {
                edges.push((rng.gen_range(0..v), v));
            }
            for _ in 0..rng.gen_range(0..n) {
                let u = rng.gen_range(0..n as u32);
                let v = rng.gen_range(0..n as u32);
                if u != v && !edges.contains(&(u.min(v), u.max(v))) {
                    edges.push((u.min(v), u.max(v)));
                }
            }
            let weights: Vec<f64> = (0..edges.len()).map(|_| rng.gen::<f64>() + 0.1).collect();
            let g = LabeledGraph::from_weighted_edges(n, &edges, &weights).unwrap();
            let mut want: f64 = 0.0;
            for s in 0..n as u32 {
                let d = dijkstra(&g, s).unwrap();
                want = want.max(d.iter().copied().fold(0.0, f64::max));
            }
            let got = weighted_diameter_blockwise(&g).unwrap();
            assert!((got - want).abs() < 1e-9, "n={n} got={got} want={want}");
        }
    }

    #[test]
    fn contour_of_path_and_star() {
        let path = PlaneTree {
            children: vec![vec![1], vec![2], vec![]],
        };
        assert_eq!(contour_function(&path), vec![0, 1, 2, 1, 0]);
        let star = PlaneTree {
            children: vec![vec![1, 2, 3], vec![], vec![], vec![]],
        };
        assert_eq!(contour_function(&star), vec![0, 1, 0, 1, 0, 1, 0]);
        let (qd, _) = dfs_queues(&star);
        assert_eq!(qd, vec![1, 3, 2, 1, 0]);
    }

    #[test]
    fn contour_properties_on_random_trees() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for _ in 0..20 {
            // Random recursive plane tree on 1000 vertices.
            let n = 1000;
            let mut children: Vec<Vec<u32>> = vec![Vec::new(); n];
            for v in 1..n as u32 {
                let p = rng.gen_range(0..v);
                children[p as usize].push(v);
            }
            let t = PlaneTree { children };
            let c = contour_function(&t);
            assert_eq!(c.len(), 2 * (n - 1) + 1);
            assert_eq!(c[0], 0);
            assert_eq!(*c.last().unwrap(), 0);
            assert!(c.windows(2).all(|w| w[0].abs_diff(w[1]) == 1));
            assert_eq!(c.iter().copied().max().unwrap(), t.height());
            let (qd, qr) = dfs_queues(&t);
            assert_eq!(qd[0], 1);
            assert_eq!(*qd.last().unwrap(), 0);
            // Reverse queue equals the forward queue of the mirror tree.
            let (qm, _) = dfs_queues(&t.mirror());
            assert_eq!(qr, qm);
        }
    }

    #[test]
    fn plane_tree_from_degrees_round_trips() {
        let degs = vec![2, 0, 3, 1, 0, 0, 0];
        let t = PlaneTree::from_preorder_degrees(&degs);
        let order = t.preorder();
        assert_eq!(order, (0..7u32).collect::<Vec<_>>());
        let got: Vec<u32> = order
            .iter()
            .map(|&v| t.children[v as usize].len() as u32)
            .collect();
        assert_eq!(got, degs);
    }

    #[test]
    fn outerplanarity_of_small_blocks() {
        // Triangle and square: yes. K4: crossing chords. K_{2,3}: no cycle.
        assert!(block_is_outerplanar(3, &[(0, 1), (1, 2), (0, 2)]));
        assert!(block_is_outerplanar(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]));
        assert!(block_is_outerplanar(
            4,
            &[(0, 1), (1, 2), (2, 3), (0, 3), (0, 2)]
        ));
        assert!(!block_is_outerplanar(
            4,
            &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]
        ));
        assert!(!block_is_outerplanar(
            5,
            &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]
        ));
    }

    #[test]
    fn ear_reduction_matches_hamilton_oracle_on_all_small_blocks() {
        // Every 2-connected graph on up to 6 vertices.
        for n in 4..=6usize {
            let pairs: Vec<(u32, u32)> = (0..n as u32)
                .flat_map(|i| ((i + 1)..n as u32).map(move |j| (i, j)))
                .collect();
            for mask in 0u64..(1 << pairs.len()) {
                let edges: Vec<(u32, u32)> = pairs
                    .iter()
                    .enumerate()
                    .filter(|(k, _)| mask >> k & 1 == 1)
                    .map(|(_, &e)| e)
                    .collect();
                if edges.len() < n {
                    continue;
                }
                let g = LabeledGraph::from_edges(n, &edges).unwrap();
                if !g.is_connected() {
                    continue;
                }
                let d = block_decompose(&g).unwrap();
                if d.blocks.len() != 1 {
                    continue;
                }
                assert_eq!(
                    block_is_outerplanar(n, &edges),
                    hamilton_outerplanar_check(n, &edges),
                    "disagree on n={n} edges={edges:?}"
                );
            }
        }
    }

    #[test]
    fn edge_list_round_trip() {
        let g = bowtie();
        let text = to_edge_list(&g);
        assert!(text.starts_with("5 6\n"));
        assert_eq!(from_edge_list(&text).unwrap(), g);
        let gw = g.with_weights(&[1.0, 0.5, 2.0, 1.5, 3.0, 0.25]).unwrap();
        assert_eq!(from_edge_list(&to_edge_list(&gw)).unwrap(), gw);
    }

    #[test]
    fn json_round_trip() {
        let g = bowtie();
        assert_eq!(from_json(&to_json(&g)).unwrap(), g);
        let gw = g.with_weights(&[1.0, 0.5, 2.0, 1.5, 3.0, 0.25]).unwrap();
        assert_eq!(from_json(&to_json(&gw)).unwrap(), gw);
        assert!(from_json("{\"n\":2,\"edges\":[[0,1]]}").is_err());
    }
}
