//! The subdivision search loop.

use std::cmp::Ordering;
use std::collections::{BinaryHeap, HashMap, VecDeque};
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::cell::{contact, Cell, Contact, DyadicArc, Grid};
use super::{par_map, Configuration};
use crate::decomposition::{decompose, Decomposition, DecompositionError, RobotPolygon};
use crate::environment::{exact_collides, Environment};
use crate::geometry::{Feature, Piece, Point2};
use crate::predicates::{BoxView, Classification, FeatureSet, ParentBall, Predicate};
use crate::swept::SweptRegion;

/// Order in which MIXED boxes next to the start component are expanded.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Strategy {
    /// Nearest box center to the goal first, FIFO among ties.
    #[default]
    Greedy,
    /// First in, first out.
    Bfs,
    /// Uniformly random, seeded.
    Random,
}

impl std::str::FromStr for Strategy {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "greedy" => Ok(Strategy::Greedy),
            "bfs" => Ok(Strategy::Bfs),
            "random" => Ok(Strategy::Random),
            other => Err(format!("unknown strategy `{other}` (expected greedy, bfs or random)")),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PlannerConfig {
    /// Resolution in world units; rotation resolves to `epsilon / r0`.
    pub epsilon: f64,
    pub strategy: Strategy,
    pub seed: u64,
    /// Boxes expanded per round. Children of a round are classified together,
    /// possibly in parallel; the result does not depend on thread count.
    pub batch: usize,
    /// Use worker threads when the crate is built with `parallel`.
    pub parallel: bool,
    /// Give up (NO_PATH with reason `box_limit`) past this many boxes.
    pub max_boxes: Option<usize>,
}

impl Default for PlannerConfig {
    fn default() -> Self {
        PlannerConfig {
            epsilon: 2.0,
            strategy: Strategy::Greedy,
            seed: 0,
            batch: 32,
            parallel: true,
            max_boxes: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum PlanError {
    #[error("epsilon must be positive and finite, got {0}")]
    BadEpsilon(f64),
    #[error("batch size must be at least 1")]
    BadBatch,
    #[error("robot: {0}")]
    Robot(#[from] DecompositionError),
    #[error("configuration is not finite")]
    BadConfiguration,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum PlanStatus {
    Path,
    NoPath,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NoPathReason {
    StartInCollision,
    GoalInCollision,
    /// The start pose never became part of a FREE box at this resolution.
    StartNotResolved,
    /// Every MIXED box reachable from the start is ε-small.
    Exhausted,
    BoxLimit,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct PlanStats {
    pub boxes: usize,
    pub free_leaves: usize,
    pub stuck_leaves: usize,
    pub mixed_leaves: usize,
    /// ε-small MIXED leaves dropped from the search.
    pub discarded: usize,
    pub t_splits: usize,
    pub r_splits: usize,
    pub max_level: u8,
    pub max_depth: u8,
    pub triangles: usize,
    pub features: usize,
    pub wall_ms: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PlanResult {
    pub status: PlanStatus,
    pub reason: Option<NoPathReason>,
    /// Start, box centers and crossing points, goal.
    pub path: Vec<Configuration>,
    /// FREE leaves traversed by the path, in order.
    pub channel: Vec<usize>,
    pub stats: PlanStats,
}

/// A node of the subdivision tree.
#[derive(Clone, Debug, PartialEq)]
pub struct ConfigBox {
    pub cell: Cell,
    pub arc: DyadicArc,
    pub class: Classification,
    pub parent: Option<u32>,
    first_child: u32,
    n_children: u8,
    pub discarded: bool,
    queued: bool,
    pub features: FeatureSet,
}

impl ConfigBox {
    pub fn is_leaf(&self) -> bool {
        self.n_children == 0
    }

    pub fn children(&self) -> std::ops::Range<usize> {
        let f = self.first_child as usize;
        f..f + self.n_children as usize
    }
}

/// Flat view of a leaf for rendering and inspection.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LeafRecord {
    pub id: usize,
    pub x: f64,
    pub y: f64,
    pub size: f64,
    pub theta_lo: f64,
    pub theta_hi: f64,
    pub class: Classification,
    pub discarded: bool,
    /// Retained features per triangle (a single global count in the
    /// translational phase).
    pub feature_counts: Vec<usize>,
}

struct UnionFind {
    parent: Vec<u32>,
    size: Vec<u32>,
}

impl UnionFind {
    fn new() -> Self {
        UnionFind { parent: Vec::new(), size: Vec::new() }
    }

    fn push(&mut self) {
        let n = self.parent.len() as u32;
        self.parent.push(n);
        self.size.push(1);
    }

    fn find(&mut self, mut x: u32) -> u32 {
        while self.parent[x as usize] != x {
            let p = self.parent[x as usize];
            self.parent[x as usize] = self.parent[p as usize];
            x = p;
        }
        x
    }

    /// Returns `(root, absorbed)` when two sets merge.
    fn union(&mut self, a: u32, b: u32) -> Option<(u32, u32)> {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return None;
        }
        if self.size[ra as usize] < self.size[rb as usize] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb as usize] = ra;
        self.size[ra as usize] += self.size[rb as usize];
        Some((ra, rb))
    }
}

#[derive(Clone, Copy, Debug)]
struct QueueEntry {
    key: f64,
    seq: u64,
    id: u32,
}

impl PartialEq for QueueEntry {
    fn eq(&self, o: &Self) -> bool {
        self.cmp(o) == Ordering::Equal
    }
}

impl Eq for QueueEntry {}

impl PartialOrd for QueueEntry {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl Ord for QueueEntry {
    // Reversed: `BinaryHeap` pops the smallest key, then the oldest entry.
    fn cmp(&self, o: &Self) -> Ordering {
        o.key.total_cmp(&self.key).then(o.seq.cmp(&self.seq))
    }
}

struct ChildSpec {
    parent: u32,
    cell: Cell,
    arc: DyadicArc,
}

/// Subdivision search over one environment and robot.
pub struct Planner<'a> {
    env: &'a Environment,
    robot: &'a RobotPolygon,
    config: PlannerConfig,
    decomp: Decomposition,
    features: Vec<Feature>,
    grid: Grid,
    boxes: Vec<ConfigBox>,
    tmap: HashMap<Cell, u32>,
    regions: HashMap<DyadicArc, Vec<Vec<Piece>>>,
    uf: UnionFind,
    adj: HashMap<u32, Vec<u32>>,
    pending: HashMap<u32, Vec<u32>>,
    heap: BinaryHeap<QueueEntry>,
    seq: u64,
    rng: ChaCha8Rng,
    goal: Point2,
    stats: PlanStats,
}

impl<'a> Planner<'a> {
    pub fn new(env: &'a Environment, robot: &'a RobotPolygon, config: PlannerConfig) -> Result<Self, PlanError> {
        if !(config.epsilon.is_finite() && config.epsilon > 0.0) {
            return Err(PlanError::BadEpsilon(config.epsilon));
        }
        if config.batch == 0 {
            return Err(PlanError::BadBatch);
        }
        let decomp = decompose(robot)?;
        Self::with_decomposition(env, robot, decomp, config)
    }

    /// Like [`Planner::new`] with a caller-supplied decomposition of `robot`.
    pub fn with_decomposition(
        env: &'a Environment,
        robot: &'a RobotPolygon,
        decomp: Decomposition,
        config: PlannerConfig,
    ) -> Result<Self, PlanError> {
        if !(config.epsilon.is_finite() && config.epsilon > 0.0) {
            return Err(PlanError::BadEpsilon(config.epsilon));
        }
        if config.batch == 0 {
            return Err(PlanError::BadBatch);
        }
        let features = env.features();
        let rng = ChaCha8Rng::seed_from_u64(config.seed);
        Ok(Planner {
            env,
            robot,
            decomp,
            features,
            grid: Grid::covering(&env.bounds),
            boxes: Vec::new(),
            tmap: HashMap::new(),
            regions: HashMap::new(),
            uf: UnionFind::new(),
            adj: HashMap::new(),
            pending: HashMap::new(),
            heap: BinaryHeap::new(),
            seq: 0,
            rng,
            goal: Point2::ORIGIN,
            stats: PlanStats::default(),
            config,
        })
    }

    pub fn decomposition(&self) -> &Decomposition {
        &self.decomp
    }

    pub fn features(&self) -> &[Feature] {
        &self.features
    }

    pub fn grid(&self) -> &Grid {
        &self.grid
    }

    pub fn boxes(&self) -> &[ConfigBox] {
        &self.boxes
    }

    pub fn config(&self) -> &PlannerConfig {
        &self.config
    }

    fn predicate(&self) -> Predicate<'_> {
        Predicate::new(&self.features, &self.decomp)
    }

    /// Box geometry as seen by the predicate.
    pub fn view(&self, b: &ConfigBox) -> BoxView {
        BoxView { center: self.grid.center(&b.cell), radius: self.grid.radius(b.cell.level), range: b.arc.range() }
    }

    /// ε-small: side at most ε and angular width at most ε / r0.
    pub fn is_epsilon_small(&self, cell: &Cell, arc: &DyadicArc) -> bool {
        epsilon_small(self.grid.side(cell.level), arc.width(), self.config.epsilon, self.decomp.r0)
    }

    /// Plan from `alpha` to `beta`.
    pub fn run(&mut self, alpha: Configuration, beta: Configuration) -> Result<PlanResult, PlanError> {
        if !alpha.is_finite() || !beta.is_finite() {
            return Err(PlanError::BadConfiguration);
        }
        let start = Instant::now();
        self.goal = beta.position();
        self.stats.triangles = self.decomp.len();
        self.stats.features = self.features.len();
        let early = if exact_collides(self.robot, &alpha, self.env) {
            Some(NoPathReason::StartInCollision)
        } else if exact_collides(self.robot, &beta, self.env) {
            Some(NoPathReason::GoalInCollision)
        } else {
            None
        };
        if let Some(reason) = early {
            return Ok(self.finish(start, PlanStatus::NoPath, Some(reason), Vec::new(), Vec::new()));
        }

        self.make_root();
        loop {
            let a = self.locate(&alpha);
            let ab = &self.boxes[a as usize];
            let batch = match ab.class {
                Classification::Stuck => {
                    return Ok(self.finish(start, PlanStatus::NoPath, Some(NoPathReason::StartNotResolved), vec![], vec![]))
                }
                Classification::Mixed if ab.discarded => {
                    return Ok(self.finish(start, PlanStatus::NoPath, Some(NoPathReason::StartNotResolved), vec![], vec![]))
                }
                Classification::Mixed => vec![a],
                Classification::Free => {
                    let b = self.locate(&beta);
                    if self.boxes[b as usize].class == Classification::Free && self.uf.find(a) == self.uf.find(b) {
                        let channel = self.channel(a, b);
                        let path = self.waypoints(&alpha, &beta, &channel);
                        let channel = channel.into_iter().map(|c| c as usize).collect();
                        return Ok(self.finish(start, PlanStatus::Path, None, path, channel));
                    }
                    let root = self.uf.find(a);
                    if let Some(list) = self.pending.remove(&root) {
                        for id in list {
                            self.enqueue(id);
                        }
                    }
                    self.pop_batch()
                }
            };
            if batch.is_empty() {
                return Ok(self.finish(start, PlanStatus::NoPath, Some(NoPathReason::Exhausted), vec![], vec![]));
            }
            if let Some(limit) = self.config.max_boxes {
                if self.boxes.len() >= limit {
                    return Ok(self.finish(start, PlanStatus::NoPath, Some(NoPathReason::BoxLimit), vec![], vec![]));
                }
            }
            self.expand(&batch);
        }
    }

    fn finish(
        &mut self,
        start: Instant,
        status: PlanStatus,
        reason: Option<NoPathReason>,
        path: Vec<Configuration>,
        channel: Vec<usize>,
    ) -> PlanResult {
        let mut stats = self.stats.clone();
        stats.boxes = self.boxes.len();
        for b in self.boxes.iter().filter(|b| b.is_leaf()) {
            match b.class {
                Classification::Free => stats.free_leaves += 1,
                Classification::Stuck => stats.stuck_leaves += 1,
                Classification::Mixed if b.discarded => stats.discarded += 1,
                Classification::Mixed => stats.mixed_leaves += 1,
            }
        }
        stats.wall_ms = start.elapsed().as_secs_f64() * 1e3;
        PlanResult { status, reason, path, channel, stats }
    }

    fn make_root(&mut self) {
        let pred = self.predicate();
        let view = BoxView {
            center: self.grid.center(&Cell::ROOT),
            radius: self.grid.radius(0),
            range: DyadicArc::FULL.range(),
        };
        let (class, features) = pred.classify_translational(&view, &pred.root_set(), None);
        self.push_box(Cell::ROOT, DyadicArc::FULL, class, None, features);
        self.register(0);
    }

    fn push_box(&mut self, cell: Cell, arc: DyadicArc, class: Classification, parent: Option<u32>, features: FeatureSet) -> u32 {
        let id = self.boxes.len() as u32;
        let discarded = class == Classification::Mixed && self.is_epsilon_small(&cell, &arc);
        let features = if class == Classification::Mixed { features } else { FeatureSet::default() };
        self.boxes.push(ConfigBox {
            cell,
            arc,
            class,
            parent,
            first_child: 0,
            n_children: 0,
            discarded,
            queued: false,
            features,
        });
        self.uf.push();
        if arc.is_full() {
            self.tmap.insert(cell, id);
        }
        self.stats.max_level = self.stats.max_level.max(cell.level);
        self.stats.max_depth = self.stats.max_depth.max(arc.depth);
        id
    }

    fn enqueue(&mut self, id: u32) {
        let b = &self.boxes[id as usize];
        if b.queued || !b.is_leaf() || b.class != Classification::Mixed || b.discarded {
            return;
        }
        let key = match self.config.strategy {
            Strategy::Greedy => self.grid.center(&b.cell).dist(self.goal),
            Strategy::Bfs => 0.0,
            Strategy::Random => self.rng.gen::<f64>(),
        };
        self.boxes[id as usize].queued = true;
        self.seq += 1;
        self.heap.push(QueueEntry { key, seq: self.seq, id });
    }

    fn pop_batch(&mut self) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.config.batch);
        while out.len() < self.config.batch {
            let Some(e) = self.heap.pop() else { break };
            let b = &self.boxes[e.id as usize];
            if b.is_leaf() && b.class == Classification::Mixed && !b.discarded {
                out.push(e.id);
            }
        }
        out
    }

    /// Split every box of the batch, classify all children, then wire the
    /// children into the tree in batch order.
    fn expand(&mut self, batch: &[u32]) {
        let eps = self.config.epsilon;
        let mut specs = Vec::with_capacity(4 * batch.len());
        for &id in batch {
            let b = &self.boxes[id as usize];
            if b.arc.is_full() && self.grid.side(b.cell.level) > eps {
                self.stats.t_splits += 1;
                for cell in b.cell.children() {
                    specs.push(ChildSpec { parent: id, cell, arc: DyadicArc::FULL });
                }
            } else {
                self.stats.r_splits += 1;
                for arc in b.arc.children() {
                    specs.push(ChildSpec { parent: id, cell: b.cell, arc });
                }
            }
        }

        let mut missing: Vec<DyadicArc> = specs.iter().map(|s| s.arc).filter(|a| !a.is_full()).collect();
        missing.sort();
        missing.dedup();
        missing.retain(|a| !self.regions.contains_key(a));
        let tris = &self.decomp.triangles;
        let fresh = par_map(&missing, self.config.parallel, |arc| {
            let range = arc.range();
            tris.iter().map(|t| SweptRegion::of(t, &range).pieces()).collect::<Vec<_>>()
        });
        self.regions.extend(missing.into_iter().zip(fresh));

        let results = {
            let pred = self.predicate();
            let this = &*self;
            par_map(&specs, self.config.parallel, |s| {
                let parent = &this.boxes[s.parent as usize];
                let view = BoxView {
                    center: this.grid.center(&s.cell),
                    radius: this.grid.radius(s.cell.level),
                    range: s.arc.range(),
                };
                if s.arc.is_full() {
                    let ball = ParentBall {
                        center: this.grid.center(&parent.cell),
                        radius: this.grid.radius(parent.cell.level),
                    };
                    pred.classify_translational(&view, &parent.features, Some(ball))
                } else {
                    let regions: Vec<&[Piece]> = this.regions[&s.arc].iter().map(Vec::as_slice).collect();
                    pred.classify_rotational(&view, &parent.features, &regions)
                }
            })
        };

        let mut created = Vec::with_capacity(specs.len());
        for (s, (class, features)) in specs.into_iter().zip(results) {
            debug_assert!(features.is_subset_of(&self.boxes[s.parent as usize].features));
            let id = self.push_box(s.cell, s.arc, class, Some(s.parent), features);
            let p = &mut self.boxes[s.parent as usize];
            if p.n_children == 0 {
                p.first_child = id;
            }
            p.n_children += 1;
            created.push(id);
        }
        for &id in batch {
            self.boxes[id as usize].features = FeatureSet::default();
        }
        for id in created {
            self.register(id);
        }
    }

    /// Hook a fresh leaf into the connectivity structures.
    fn register(&mut self, id: u32) {
        let class = self.boxes[id as usize].class;
        if class == Classification::Stuck || self.boxes[id as usize].discarded {
            return;
        }
        let neighbors = self.neighbor_leaves(id);
        if class == Classification::Free {
            for n in neighbors {
                let nb = &self.boxes[n as usize];
                match nb.class {
                    Classification::Free => {
                        self.adj.entry(id).or_default().push(n);
                        self.adj.entry(n).or_default().push(id);
                        if let Some((root, absorbed)) = self.uf.union(id, n) {
                            if let Some(list) = self.pending.remove(&absorbed) {
                                self.pending.entry(root).or_default().extend(list);
                            }
                        }
                    }
                    Classification::Mixed if !nb.discarded => {
                        let root = self.uf.find(id);
                        self.pending.entry(root).or_default().push(n);
                    }
                    _ => {}
                }
            }
        } else {
            for n in neighbors {
                if self.boxes[n as usize].class == Classification::Free {
                    let root = self.uf.find(n);
                    self.pending.entry(root).or_default().push(id);
                }
            }
        }
    }

    /// Leaves whose closed box shares a face, edge or angular endpoint with
    /// leaf `id`: squares equal or sharing a side segment, arcs touching.
    pub fn neighbor_leaves(&self, id: u32) -> Vec<u32> {
        let b = &self.boxes[id as usize];
        let (cell, arc) = (b.cell, b.arc);
        let mut out = Vec::new();
        if !arc.is_full() {
            let t = self.tmap[&cell];
            self.collect_r(t, &arc, &mut out);
            out.retain(|&n| n != id);
        }
        for (dx, dy) in [(1, 0), (-1, 0), (0, 1), (0, -1)] {
            let Some(n) = cell.offset(dx, dy) else { continue };
            let mut k = n;
            let node = loop {
                if let Some(&node) = self.tmap.get(&k) {
                    break node;
                }
                k = k.parent().expect("root is always present");
            };
            self.collect_t(node, &cell, &arc, &mut out);
        }
        out.sort_unstable();
        out.dedup();
        out
    }

    fn collect_t(&self, node: u32, cell: &Cell, arc: &DyadicArc, out: &mut Vec<u32>) {
        let b = &self.boxes[node as usize];
        if contact(&b.cell, cell) != Contact::Side {
            return;
        }
        if b.is_leaf() {
            if b.arc.touches(arc) {
                out.push(node);
            }
            return;
        }
        let first = &self.boxes[b.first_child as usize];
        if first.cell != b.cell {
            for c in b.children() {
                self.collect_t(c as u32, cell, arc, out);
            }
        } else {
            self.collect_r(node, arc, out);
        }
    }

    fn collect_r(&self, node: u32, arc: &DyadicArc, out: &mut Vec<u32>) {
        let b = &self.boxes[node as usize];
        if !b.arc.touches(arc) {
            return;
        }
        if b.is_leaf() {
            out.push(node);
            return;
        }
        for c in b.children() {
            self.collect_r(c as u32, arc, out);
        }
    }

    /// Leaf containing the configuration (boundary ties go to the lower child).
    pub fn locate(&self, q: &Configuration) -> u32 {
        let p = q.position();
        let mut id = 0u32;
        loop {
            let b = &self.boxes[id as usize];
            if b.is_leaf() {
                return id;
            }
            let first = b.first_child;
            let kids = &self.boxes[b.children()];
            let pos = if kids[0].cell != b.cell {
                let c = self.grid.child_containing(&b.cell, p);
                kids.iter().position(|k| k.cell == c)
            } else {
                let a = b.arc.child_containing(q.theta);
                kids.iter().position(|k| k.arc == a)
            };
            id = first + pos.expect("children cover the parent") as u32;
        }
    }

    /// Shortest chain of adjacent FREE leaves from `a` to `b`.
    fn channel(&self, a: u32, b: u32) -> Vec<u32> {
        let mut prev: HashMap<u32, u32> = HashMap::new();
        let mut q = VecDeque::from([a]);
        prev.insert(a, a);
        while let Some(x) = q.pop_front() {
            if x == b {
                break;
            }
            for &y in self.adj.get(&x).map(Vec::as_slice).unwrap_or(&[]) {
                if let std::collections::hash_map::Entry::Vacant(e) = prev.entry(y) {
                    e.insert(x);
                    q.push_back(y);
                }
            }
        }
        let mut out = vec![b];
        let mut x = b;
        while x != a {
            x = prev[&x];
            out.push(x);
        }
        out.reverse();
        out
    }

    fn waypoints(&self, alpha: &Configuration, beta: &Configuration, channel: &[u32]) -> Vec<Configuration> {
        let mut path = vec![*alpha];
        let mut theta = alpha.theta;
        for (i, &id) in channel.iter().enumerate() {
            let b = &self.boxes[id as usize];
            if !b.arc.is_full() {
                theta = b.arc.mid();
            }
            let c = self.grid.center(&b.cell);
            path.push(Configuration::new(c.x, c.y, theta));
            if let Some(&next) = channel.get(i + 1) {
                let n = &self.boxes[next as usize];
                let p = self.grid.crossing_point(&b.cell, &n.cell);
                if !(b.arc.is_full() && n.arc.is_full()) {
                    theta = b.arc.shared_angle(&n.arc).expect("adjacent arcs touch");
                }
                path.push(Configuration::new(p.x, p.y, theta));
            }
        }
        path.push(*beta);
        path
    }

    /// Every leaf of the current tree.
    pub fn leaves(&self) -> Vec<LeafRecord> {
        self.boxes
            .iter()
            .enumerate()
            .filter(|(_, b)| b.is_leaf())
            .map(|(id, b)| {
                let lo = self.grid.min_corner(&b.cell);
                LeafRecord {
                    id,
                    x: lo.x,
                    y: lo.y,
                    size: self.grid.side(b.cell.level),
                    theta_lo: b.arc.lo(),
                    theta_hi: b.arc.hi(),
                    class: b.class,
                    discarded: b.discarded,
                    feature_counts: b.features.counts(),
                }
            })
            .collect()
    }

    /// Adjacency among FREE leaves recorded during the search.
    pub fn free_adjacency(&self) -> &HashMap<u32, Vec<u32>> {
        &self.adj
    }

    /// Whether two FREE leaves ended in the same component.
    pub fn connected(&mut self, a: u32, b: u32) -> bool {
        self.uf.find(a) == self.uf.find(b)
    }
}

/// ε-small: side at most ε and angular width at most ε / r0.
pub fn epsilon_small(side: f64, width: f64, epsilon: f64, r0: f64) -> bool {
    side <= epsilon && width <= epsilon / r0
}

/// Convenience wrapper: build a planner and run it once.
pub fn plan(
    alpha: Configuration,
    beta: Configuration,
    env: &Environment,
    robot: &RobotPolygon,
    config: PlannerConfig,
) -> Result<PlanResult, PlanError> {
    Planner::new(env, robot, config)?.run(alpha, beta)
}
