//! Blocks, block-cut trees, cactus classification, the central block and the
//! diameter/radius realizing subgraphs `H_d` and `H_r`.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;
use thiserror::Error;

use crate::graph::Graph;
use crate::metric::{self, bfs_raw, MetricError, MetricProfile};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StructureError {
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph is not a cactus")]
    NotCactus,
    #[error(transparent)]
    Metric(#[from] MetricError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BlockKind {
    Bridge,
    Cycle,
    Other,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Block {
    pub id: usize,
    pub vertices: Vec<usize>,
    pub edges: Vec<(usize, usize)>,
    pub kind: BlockKind,
}

impl Block {
    pub fn contains(&self, v: usize) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BlockDecomposition {
    /// Blocks ordered by their smallest edge; `blocks[i].id == i`.
    pub blocks: Vec<Block>,
    pub articulation_points: Vec<usize>,
    pub bridges: Vec<(usize, usize)>,
    /// Bridges with an endpoint of degree one.
    pub pendants: Vec<(usize, usize)>,
    #[serde(skip)]
    edge_block: BTreeMap<(usize, usize), usize>,
    #[serde(skip)]
    vertex_blocks: Vec<Vec<usize>>,
}

impl BlockDecomposition {
    /// Id of the block holding edge `u-v`.
    pub fn block_of_edge(&self, u: usize, v: usize) -> Option<usize> {
        self.edge_block.get(&(u.min(v), u.max(v))).copied()
    }

    /// Ids of the blocks containing `v`, ascending.
    pub fn blocks_of(&self, v: usize) -> &[usize] {
        &self.vertex_blocks[v]
    }

    pub fn is_articulation(&self, v: usize) -> bool {
        self.vertex_blocks[v].len() >= 2
    }

    pub fn count(&self, kind: BlockKind) -> usize {
        self.blocks.iter().filter(|b| b.kind == kind).count()
    }

    /// Articulation points lying on block `id`.
    pub fn articulation_points_of(&self, id: usize) -> Vec<usize> {
        self.blocks[id]
            .vertices
            .iter()
            .copied()
            .filter(|&v| self.is_articulation(v))
            .collect()
    }
}

struct Tarjan<'a> {
    g: &'a Graph,
    disc: Vec<usize>,
    low: Vec<usize>,
    time: usize,
    stack: Vec<(usize, usize)>,
    blocks: Vec<Vec<(usize, usize)>>,
}

impl Tarjan<'_> {
    fn visit(&mut self, u: usize, parent: Option<usize>) {
        self.disc[u] = self.time;
        self.low[u] = self.time;
        self.time += 1;
        for &w in self.g.neighbors(u) {
            if self.disc[w] == usize::MAX {
                self.stack.push((u, w));
                self.visit(w, Some(u));
                self.low[u] = self.low[u].min(self.low[w]);
                if self.low[w] >= self.disc[u] {
                    let mut block = Vec::new();
                    while let Some(e) = self.stack.pop() {
                        block.push((e.0.min(e.1), e.0.max(e.1)));
                        if e == (u, w) {
                            break;
                        }
                    }
                    self.blocks.push(block);
                }
            } else if Some(w) != parent && self.disc[w] < self.disc[u] {
                self.stack.push((u, w));
                self.low[u] = self.low[u].min(self.disc[w]);
            }
        }
    }
}

/// Biconnected blocks of a connected graph. A single vertex has no blocks.
pub fn block_decomposition(g: &Graph) -> Result<BlockDecomposition, StructureError> {
    if !g.is_connected() {
        return Err(StructureError::Disconnected);
    }
    let mut tarjan = Tarjan {
        g,
        disc: vec![usize::MAX; g.n()],
        low: vec![0; g.n()],
        time: 0,
        stack: Vec::new(),
        blocks: Vec::new(),
    };
    if g.n() > 0 {
        tarjan.visit(0, None);
    }
    let mut raw = tarjan.blocks;
    for block in &mut raw {
        block.sort_unstable();
    }
    raw.sort_unstable_by(|a, b| a[0].cmp(&b[0]));

    let mut blocks = Vec::with_capacity(raw.len());
    let mut edge_block = BTreeMap::new();
    let mut vertex_blocks = vec![Vec::new(); g.n()];
    for (id, edges) in raw.into_iter().enumerate() {
        let vertices: Vec<usize> = edges
            .iter()
            .flat_map(|&(u, v)| [u, v])
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        let kind = if edges.len() == 1 {
            BlockKind::Bridge
        } else if edges.len() == vertices.len() {
            BlockKind::Cycle
        } else {
            BlockKind::Other
        };
        for &e in &edges {
            edge_block.insert(e, id);
        }
        for &v in &vertices {
            vertex_blocks[v].push(id);
        }
        blocks.push(Block {
            id,
            vertices,
            edges,
            kind,
        });
    }
    let articulation_points = (0..g.n())
        .filter(|&v| vertex_blocks[v].len() >= 2)
        .collect();
    let bridges: Vec<_> = blocks
        .iter()
        .filter(|b| b.kind == BlockKind::Bridge)
        .map(|b| b.edges[0])
        .collect();
    let pendants = bridges
        .iter()
        .copied()
        .filter(|&(u, v)| g.degree(u) == 1 || g.degree(v) == 1)
        .collect();
    Ok(BlockDecomposition {
        blocks,
        articulation_points,
        bridges,
        pendants,
        edge_block,
        vertex_blocks,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "id", rename_all = "snake_case")]
pub enum BcNode {
    /// Block id.
    Block(usize),
    /// Articulation point, by vertex id.
    Cut(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "shape", rename_all = "snake_case")]
pub enum BcShape {
    /// The single-vertex graph: no blocks at all.
    Trivial,
    SingleBlock,
    Path,
    /// Exactly one node of degree above two.
    Starlike {
        root: BcNode,
        arms: usize,
    },
    Other,
}

impl BcShape {
    /// Root degree when the tree is starlike around a block node. A path
    /// counts as starlike with two arms.
    pub fn block_root_arms(&self) -> Option<usize> {
        match *self {
            BcShape::Path => Some(2),
            BcShape::Starlike {
                root: BcNode::Block(_),
                arms,
            } => Some(arms),
            _ => None,
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            BcShape::Trivial => "trivial",
            BcShape::SingleBlock => "single_block",
            BcShape::Path => "path",
            BcShape::Starlike {
                root: BcNode::Block(_),
                ..
            } => "starlike_block_root",
            BcShape::Starlike {
                root: BcNode::Cut(_),
                ..
            } => "starlike_cut_root",
            BcShape::Other => "other",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BcTree {
    /// Block nodes first (index = block id), then one node per articulation
    /// point in ascending vertex order.
    pub nodes: Vec<BcNode>,
    /// `(cut node index, block node index)` incidences.
    pub edges: Vec<(usize, usize)>,
    pub shape: BcShape,
}

impl BcTree {
    pub fn degree(&self, node: usize) -> usize {
        self.edges
            .iter()
            .filter(|&&(a, b)| a == node || b == node)
            .count()
    }

    /// Acyclic and connected.
    pub fn is_tree(&self) -> bool {
        if self.nodes.is_empty() {
            return true;
        }
        if self.edges.len() + 1 != self.nodes.len() {
            return false;
        }
        let pairs: Vec<_> = self.edges.clone();
        Graph::new(self.nodes.len(), &pairs)
            .map(|t| t.is_connected())
            .unwrap_or(false)
    }
}

pub fn build_bc_tree(dec: &BlockDecomposition) -> BcTree {
    let mut nodes: Vec<BcNode> = dec.blocks.iter().map(|b| BcNode::Block(b.id)).collect();
    let mut edges = Vec::new();
    for &a in &dec.articulation_points {
        let idx = nodes.len();
        nodes.push(BcNode::Cut(a));
        for &b in dec.blocks_of(a) {
            edges.push((idx, b));
        }
    }
    let mut degree = vec![0usize; nodes.len()];
    for &(a, b) in &edges {
        degree[a] += 1;
        degree[b] += 1;
    }
    let shape = match dec.blocks.len() {
        0 => BcShape::Trivial,
        1 => BcShape::SingleBlock,
        _ => {
            let high: Vec<usize> = (0..nodes.len()).filter(|&i| degree[i] > 2).collect();
            match high.as_slice() {
                [] => BcShape::Path,
                [root] => BcShape::Starlike {
                    root: nodes[*root],
                    arms: degree[*root],
                },
                _ => BcShape::Other,
            }
        }
    };
    BcTree {
        nodes,
        edges,
        shape,
    }
}

/// Chemical graphs: maximum degree at most four.
pub const CHEMICAL_MAX_DEGREE: usize = 4;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CactusProfile {
    pub is_tree: bool,
    pub is_cactus: bool,
    pub is_nontrivial_cactus: bool,
    pub is_chemical: bool,
    pub n: usize,
    pub edges: usize,
    /// Cycle blocks.
    pub k: usize,
    /// Bridge blocks.
    pub b: usize,
    /// Triangle blocks.
    pub t3: usize,
    /// Blocks that are neither bridges nor cycles.
    pub other_blocks: usize,
    pub central_block: Option<usize>,
    /// Articulation points on the central block.
    pub m: usize,
    pub bc_shape: BcShape,
}

pub fn classify_cactus(g: &Graph) -> Result<CactusProfile, StructureError> {
    let dec = block_decomposition(g)?;
    let mp = metric::metric_profile(g)?;
    Ok(profile_from_parts(g, &mp, &dec))
}

pub(crate) fn profile_from_parts(
    g: &Graph,
    mp: &MetricProfile,
    dec: &BlockDecomposition,
) -> CactusProfile {
    let k = dec.count(BlockKind::Cycle);
    let b = dec.count(BlockKind::Bridge);
    let other_blocks = dec.count(BlockKind::Other);
    let t3 = dec
        .blocks
        .iter()
        .filter(|bl| bl.kind == BlockKind::Cycle && bl.vertices.len() == 3)
        .count();
    let central_block = select_central_block(g, mp, dec);
    let m = central_block.map_or(0, |id| dec.articulation_points_of(id).len());
    let is_cactus = other_blocks == 0;
    CactusProfile {
        is_tree: is_cactus && k == 0,
        is_cactus,
        is_nontrivial_cactus: is_cactus && b == 0,
        is_chemical: g.max_degree() <= CHEMICAL_MAX_DEGREE,
        n: g.n(),
        edges: g.m(),
        k,
        b,
        t3,
        other_blocks,
        central_block,
        m,
        bc_shape: build_bc_tree(dec).shape,
    }
}

/// The central block: the block holding every center when there are several;
/// the block of a unique non-articulation center; for a unique articulation
/// center, an adjoining block containing the first edge of a shortest path
/// to a vertex at distance `r`. Among those, the one with the most
/// articulation points wins, then the lowest id, so `m` does not depend on
/// the labelling.
pub fn select_central_block(
    g: &Graph,
    mp: &MetricProfile,
    dec: &BlockDecomposition,
) -> Option<usize> {
    if dec.blocks.is_empty() {
        return None;
    }
    if let [center] = mp.centers.as_slice() {
        let center = *center;
        let adjoining = dec.blocks_of(center);
        if adjoining.len() == 1 {
            return Some(adjoining[0]);
        }
        let from_center = bfs_raw(g, center);
        let farthest: Vec<usize> = (0..g.n())
            .filter(|&x| from_center[x] == mp.radius)
            .collect();
        let chosen = adjoining
            .iter()
            .copied()
            .filter(|&id| {
                g.neighbors(center).iter().any(|&w| {
                    dec.block_of_edge(center, w) == Some(id) && {
                        let from_w = bfs_raw(g, w);
                        farthest.iter().any(|&x| from_w[x] + 1 == mp.radius)
                    }
                })
            })
            .min_by_key(|&id| (std::cmp::Reverse(dec.articulation_points_of(id).len()), id));
        debug_assert!(
            chosen.is_some(),
            "a unique center always starts a geodesic to a farthest vertex"
        );
        return chosen.or_else(|| adjoining.first().copied());
    }
    let holding_all = dec
        .blocks
        .iter()
        .find(|b| mp.centers.iter().all(|&c| b.contains(c)))
        .map(|b| b.id);
    debug_assert!(holding_all.is_some(), "all centers lie in a single block");
    holding_all.or_else(|| dec.blocks_of(mp.centers[0]).first().copied())
}

/// A subgraph with its dense relabelling; `vertex_map[new] = old`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RealizingSubgraph {
    #[serde(skip)]
    pub graph: Graph,
    pub vertex_map: Vec<usize>,
    /// Block ids (in the host graph) making up the subgraph.
    pub blocks: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RealizingSubgraphs {
    pub h_d: RealizingSubgraph,
    pub h_r: RealizingSubgraph,
    /// Lexicographically smallest pair at distance `d`.
    pub diameter_pair: (usize, usize),
    /// Shortest path from `diameter_pair.0` to `diameter_pair.1`.
    pub diameter_path: Vec<usize>,
    pub center_on_diameter_path: bool,
    /// Whether `H_d` alone has the radius of the host graph.
    pub h_d_keeps_radius: bool,
}

/// Shortest path from `from` to `to`, stepping back from `to` through the
/// lowest-id predecessor each time.
fn geodesic(g: &Graph, from: usize, to: usize) -> Vec<usize> {
    let dist = bfs_raw(g, from);
    let mut path = vec![to];
    let mut cur = to;
    while cur != from {
        cur = *g
            .neighbors(cur)
            .iter()
            .find(|&&w| dist[w] + 1 == dist[cur])
            .expect("connected graph");
        path.push(cur);
    }
    path.reverse();
    path
}

fn union_of_blocks(g: &Graph, dec: &BlockDecomposition, ids: BTreeSet<usize>) -> RealizingSubgraph {
    if ids.is_empty() {
        // Only the single-vertex graph has no blocks.
        return RealizingSubgraph {
            graph: Graph::empty(g.n()),
            vertex_map: (0..g.n()).collect(),
            blocks: Vec::new(),
        };
    }
    let mut edges: Vec<(usize, usize)> = ids
        .iter()
        .flat_map(|&id| dec.blocks[id].edges.iter().copied())
        .collect();
    edges.sort_unstable();
    let (graph, vertex_map) = g.edge_subgraph(&edges);
    RealizingSubgraph {
        graph,
        vertex_map,
        blocks: ids.into_iter().collect(),
    }
}

fn path_blocks(dec: &BlockDecomposition, path: &[usize]) -> BTreeSet<usize> {
    path.windows(2)
        .map(|w| {
            dec.block_of_edge(w[0], w[1])
                .expect("path edges lie in blocks")
        })
        .collect()
}

struct Context {
    dec: BlockDecomposition,
    mp: MetricProfile,
    dist: Vec<Vec<usize>>,
    pair: (usize, usize),
    path: Vec<usize>,
}

fn context(g: &Graph) -> Result<Context, StructureError> {
    let dec = block_decomposition(g)?;
    if dec.count(BlockKind::Other) > 0 {
        return Err(StructureError::NotCactus);
    }
    let dist = metric::distance_matrix(g)?;
    let mp = metric::profile_from_distances(&dist)?;
    let d = mp.diameter;
    let pair = (0..g.n())
        .flat_map(|u| (u..g.n()).map(move |v| (u, v)))
        .find(|&(u, v)| dist[u][v] == d)
        .expect("some pair realizes the diameter");
    let path = geodesic(g, pair.0, pair.1);
    Ok(Context {
        dec,
        mp,
        dist,
        pair,
        path,
    })
}

fn h_d_of(g: &Graph, ctx: &Context) -> RealizingSubgraph {
    union_of_blocks(g, &ctx.dec, path_blocks(&ctx.dec, &ctx.path))
}

/// Built from the central block even when a center lies on the diameter
/// path: `H_d` can lose the radius then (a 5-cycle with pendants on three
/// consecutive vertices is the smallest case).
fn h_r_of(g: &Graph, ctx: &Context) -> RealizingSubgraph {
    let Some(central) = select_central_block(g, &ctx.mp, &ctx.dec) else {
        return union_of_blocks(g, &ctx.dec, BTreeSet::new());
    };
    let block = &ctx.dec.blocks[central];
    let mut ids = BTreeSet::from([central]);
    for a in ctx.dec.articulation_points_of(central) {
        // Vertices cut off from the central block by `a` are exactly those
        // whose geodesics to the rest of the block pass through `a`.
        let inside: Vec<usize> = block.vertices.iter().copied().filter(|&x| x != a).collect();
        let beyond = (0..g.n()).filter(|&x| {
            x != a
                && !block.contains(x)
                && inside
                    .iter()
                    .all(|&y| ctx.dist[x][y] == ctx.dist[x][a] + ctx.dist[a][y])
        });
        let far = beyond
            .map(|x| (std::cmp::Reverse(ctx.dist[a][x]), x))
            .min()
            .map(|(_, x)| x);
        if let Some(far) = far {
            ids.extend(path_blocks(&ctx.dec, &geodesic(g, a, far)));
        }
    }
    union_of_blocks(g, &ctx.dec, ids)
}

/// `H_d`: every block containing an edge of the chosen diameter path.
pub fn extract_h_d(g: &Graph) -> Result<RealizingSubgraph, StructureError> {
    let ctx = context(g)?;
    Ok(h_d_of(g, &ctx))
}

/// `H_r`: the central block together with every block on the geodesic from
/// each of its articulation points to a farthest vertex beyond it.
pub fn extract_h_r(g: &Graph) -> Result<RealizingSubgraph, StructureError> {
    let ctx = context(g)?;
    Ok(h_r_of(g, &ctx))
}

pub fn realizing_subgraphs(g: &Graph) -> Result<RealizingSubgraphs, StructureError> {
    let ctx = context(g)?;
    let h_d = h_d_of(g, &ctx);
    let h_r = h_r_of(g, &ctx);
    let center_on_diameter_path = ctx.mp.centers.iter().any(|c| ctx.path.contains(c));
    let h_d_keeps_radius = metric::metric_profile(&h_d.graph)
        .map(|p| p.radius == ctx.mp.radius)
        .unwrap_or(false);
    Ok(RealizingSubgraphs {
        h_d,
        h_r,
        diameter_pair: ctx.pair,
        diameter_path: ctx.path.clone(),
        center_on_diameter_path,
        h_d_keeps_radius,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: usize, edges: &[(usize, usize)]) -> Graph {
        Graph::new(n, edges).unwrap()
    }

    fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        g(n, &edges)
    }

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        g(n, &edges)
    }

    fn lollipop() -> Graph {
        g(6, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (2, 5)])
    }

    /// Triangle {0,1,2}; pendant 1-3; bridge 1-4; complex block on
    /// {4,5,6,7,8} (K4 on 4,5,6,7 plus 8 adjacent to 6 and 7); pendants 8-9
    /// and 6-10.
    fn figure_one() -> Graph {
        g(
            11,
            &[
                (0, 1),
                (0, 2),
                (1, 2),
                (1, 3),
                (1, 4),
                (4, 5),
                (4, 6),
                (4, 7),
                (5, 6),
                (5, 7),
                (6, 7),
                (6, 8),
                (7, 8),
                (8, 9),
                (6, 10),
            ],
        )
    }

    #[test]
    fn figure_one_blocks() {
        let dec = block_decomposition(&figure_one()).unwrap();
        assert_eq!(dec.blocks.len(), 6);
        assert_eq!(dec.articulation_points, vec![1, 4, 6, 8]);
        assert_eq!(dec.count(BlockKind::Bridge), 4);
        assert_eq!(dec.pendants.len(), 3);
        assert_eq!(dec.count(BlockKind::Cycle), 1);
        assert_eq!(dec.count(BlockKind::Other), 1);
        let tree = build_bc_tree(&dec);
        assert_eq!(tree.nodes.len(), 10);
        assert_eq!(tree.edges.len(), 9);
        assert!(tree.is_tree());
    }

    #[test]
    fn cycle_and_path_blocks() {
        let dec = block_decomposition(&cycle(7)).unwrap();
        assert_eq!(dec.blocks.len(), 1);
        assert_eq!(dec.blocks[0].kind, BlockKind::Cycle);
        assert!(dec.articulation_points.is_empty());

        let dec = block_decomposition(&path(5)).unwrap();
        assert_eq!(dec.blocks.len(), 4);
        assert!(dec.blocks.iter().all(|b| b.kind == BlockKind::Bridge));
        assert_eq!(dec.articulation_points, vec![1, 2, 3]);

        let dec = block_decomposition(&Graph::empty(1)).unwrap();
        assert!(dec.blocks.is_empty());
        assert_eq!(
            block_decomposition(&g(4, &[(0, 1), (2, 3)])),
            Err(StructureError::Disconnected)
        );
    }

    #[test]
    fn articulation_points_match_removal_test() {
        let host = figure_one();
        let dec = block_decomposition(&host).unwrap();
        for v in 0..host.n() {
            let kept: Vec<_> = host.edges().filter(|&(a, b)| a != v && b != v).collect();
            let mut rest = Graph::new(host.n(), &kept).unwrap().component_count();
            rest -= 1; // v itself is now isolated
            assert_eq!(rest > 1, dec.is_articulation(v), "vertex {v}");
        }
    }

    #[test]
    fn bc_shapes() {
        let bouquet = g(
            7,
            &[
                (0, 1),
                (1, 2),
                (2, 0),
                (0, 3),
                (3, 4),
                (4, 0),
                (0, 5),
                (5, 6),
                (6, 0),
            ],
        );
        let shape = build_bc_tree(&block_decomposition(&bouquet).unwrap()).shape;
        assert_eq!(
            shape,
            BcShape::Starlike {
                root: BcNode::Cut(0),
                arms: 3
            }
        );
        assert_eq!(shape.block_root_arms(), None);

        let shape = build_bc_tree(&block_decomposition(&lollipop()).unwrap()).shape;
        assert_eq!(shape, BcShape::Path);
        assert_eq!(shape.block_root_arms(), Some(2));

        // C4 with three pendants on three of its vertices.
        let star_root = g(7, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (1, 5), (2, 6)]);
        let shape = build_bc_tree(&block_decomposition(&star_root).unwrap()).shape;
        assert_eq!(
            shape,
            BcShape::Starlike {
                root: BcNode::Block(0),
                arms: 3
            }
        );
        assert_eq!(
            build_bc_tree(&block_decomposition(&cycle(5)).unwrap()).shape,
            BcShape::SingleBlock
        );
    }

    #[test]
    fn classification_examples() {
        let mut k5 = Vec::new();
        for u in 0..5 {
            for v in u + 1..5 {
                k5.push((u, v));
            }
        }
        let p = classify_cactus(&g(5, &k5)).unwrap();
        assert!(!p.is_cactus);
        assert_eq!(p.other_blocks, 1);

        let p = classify_cactus(&lollipop()).unwrap();
        assert!(p.is_cactus && p.is_chemical && !p.is_nontrivial_cactus);
        assert_eq!((p.k, p.b), (1, 2));

        let two_cycles = g(6, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (4, 5), (5, 0)]);
        let p = classify_cactus(&two_cycles).unwrap();
        assert!(p.is_nontrivial_cactus);
        assert_eq!((p.k, p.b, p.t3), (2, 0, 1));
        assert_eq!(p.edges, p.n + p.k - 1);
    }

    #[test]
    fn central_block_choices() {
        // Even path: the middle bridge.
        let p6 = path(6);
        let p = classify_cactus(&p6).unwrap();
        let dec = block_decomposition(&p6).unwrap();
        assert_eq!(dec.blocks[p.central_block.unwrap()].edges, vec![(2, 3)]);
        assert_eq!(p.m, 2);

        let p = classify_cactus(&cycle(6)).unwrap();
        assert_eq!((p.central_block, p.m), (Some(0), 0));

        // Center 0 sits in a triangle {0,1,2}, in a bridge 0-3 leading to a
        // path 3-4, and in a bridge 0-5 leading to 5-6. Both bridges start
        // geodesics to distance-2 vertices; the lowest id wins.
        let star_center = g(7, &[(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (0, 5), (5, 6)]);
        let dec = block_decomposition(&star_center).unwrap();
        let mp = metric::metric_profile(&star_center).unwrap();
        assert_eq!(mp.centers, vec![0]);
        let central = select_central_block(&star_center, &mp, &dec).unwrap();
        assert_eq!(dec.blocks[central].edges, vec![(0, 3)]);
    }

    #[test]
    fn tree_h_d_is_the_diameter_path() {
        // Spider: 0-1-2-3 with 1-4 and 2-5.
        let t = g(6, &[(0, 1), (1, 2), (2, 3), (1, 4), (2, 5)]);
        let rs = realizing_subgraphs(&t).unwrap();
        assert_eq!(rs.diameter_pair, (0, 3));
        assert_eq!(rs.diameter_path, vec![0, 1, 2, 3]);
        assert_eq!(rs.h_d.vertex_map, vec![0, 1, 2, 3]);
        assert_eq!(rs.h_d.graph.m(), 3);
    }

    #[test]
    fn cycles_realize_themselves() {
        let c = cycle(6);
        let rs = realizing_subgraphs(&c).unwrap();
        assert_eq!(rs.h_d.graph, c);
        assert_eq!(rs.h_r.graph, c);
        let p = path(5);
        let rs = realizing_subgraphs(&p).unwrap();
        assert!(rs.center_on_diameter_path);
        assert!(rs.h_d_keeps_radius);
        assert_eq!(rs.h_r.graph, p);
    }

    #[test]
    fn single_vertex_realizes_itself() {
        let rs = realizing_subgraphs(&Graph::empty(1)).unwrap();
        assert_eq!(rs.h_r.graph.n(), 1);
        assert_eq!(rs.h_d.graph.n(), 1);
        assert_eq!(rs.diameter_path, vec![0]);
    }

    #[test]
    fn diameter_subgraph_can_lose_the_radius() {
        // C5 (3,6,5,4,7) with pendants on 7, 6 and 5: centers on the diameter
        // path, yet H_d drops the pendant at 5 and with it the radius.
        let host = g(
            8,
            &[
                (0, 7),
                (1, 6),
                (2, 5),
                (3, 6),
                (3, 7),
                (4, 5),
                (4, 7),
                (5, 6),
            ],
        );
        let rs = realizing_subgraphs(&host).unwrap();
        assert!(rs.center_on_diameter_path);
        assert!(!rs.h_d_keeps_radius);
        assert_eq!(metric::metric_profile(&rs.h_d.graph).unwrap().radius, 2);
        assert_eq!(metric::metric_profile(&rs.h_r.graph).unwrap().radius, 3);
    }

    #[test]
    fn h_r_from_central_cycle() {
        // Central C6 (0..5) with a C4 hanging off each of 0, 2 and 4. Two
        // centers lie on the diameter path but H_d has radius 3, not 4.
        let mut edges = vec![(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)];
        let mut next = 6;
        for &a in &[0, 2, 4] {
            let (x, y, z) = (next, next + 1, next + 2);
            edges.extend([(a, x), (x, y), (y, z), (z, a)]);
            next += 3;
        }
        let host = g(next, &edges);
        let rs = realizing_subgraphs(&host).unwrap();
        let mp = metric::metric_profile(&host).unwrap();
        let sub = metric::metric_profile(&rs.h_r.graph).unwrap();
        assert_eq!(sub.radius, mp.radius);
        assert_eq!(sub.centers.len(), 3);
        assert!(!rs.h_d_keeps_radius);
        assert_eq!(
            metric::metric_profile(&rs.h_d.graph).unwrap().diameter,
            mp.diameter
        );
    }

    #[test]
    fn non_cactus_rejected() {
        let mut k4 = Vec::new();
        for u in 0..4 {
            for v in u + 1..4 {
                k4.push((u, v));
            }
        }
        assert_eq!(extract_h_d(&g(4, &k4)), Err(StructureError::NotCactus));
        assert_eq!(extract_h_r(&g(4, &k4)), Err(StructureError::NotCactus));
    }
}
