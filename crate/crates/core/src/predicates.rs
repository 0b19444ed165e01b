//! Soft classification of configuration boxes into FREE, STUCK or MIXED.
//!
//! A box keeps the features that could still touch the robot. Translational
//! boxes use one ball test around the box center; rotational boxes keep one
//! list per nice triangle, filtered against the expanded swept region of that
//! triangle. A definite verdict only arises once a list runs empty.

use serde::{Deserialize, Serialize};

use crate::decomposition::Decomposition;
use crate::geometry::{
    separation, side_of_feature, AngularRange, Feature, Piece, Point2, Side,
};
use crate::swept::{expand_and_test, separation_slack, SweptRegion};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Classification {
    Free,
    Stuck,
    Mixed,
}

/// FREE iff every verdict is FREE, STUCK iff some verdict is STUCK.
pub fn compose<I: IntoIterator<Item = Classification>>(verdicts: I) -> Classification {
    let mut all_free = true;
    for v in verdicts {
        match v {
            Classification::Stuck => return Classification::Stuck,
            Classification::Mixed => all_free = false,
            Classification::Free => {}
        }
    }
    if all_free {
        Classification::Free
    } else {
        Classification::Mixed
    }
}

/// Per-triangle state in the rotational phase.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TriangleSet {
    /// Decided FREE at an ancestor; children inherit it.
    Free,
    /// Indices of the features that may still meet this triangle's sweep.
    Open(Vec<u32>),
}

impl TriangleSet {
    pub fn len(&self) -> usize {
        match self {
            TriangleSet::Free => 0,
            TriangleSet::Open(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Feature indices kept by a box. `global` is the ball-filtered set of the
/// translational box; `per_triangle` appears once rotation is split.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FeatureSet {
    pub global: Vec<u32>,
    pub per_triangle: Option<Vec<TriangleSet>>,
}

impl FeatureSet {
    /// True when every list is contained in the matching list of `parent`.
    pub fn is_subset_of(&self, parent: &FeatureSet) -> bool {
        let sub = |a: &[u32], b: &[u32]| a.iter().all(|x| b.binary_search(x).is_ok());
        if !sub(&self.global, &parent.global) {
            return false;
        }
        match (&self.per_triangle, &parent.per_triangle) {
            (None, None) => true,
            (None, Some(_)) => false,
            (Some(mine), None) => mine.iter().all(|t| match t {
                TriangleSet::Free => true,
                TriangleSet::Open(v) => sub(v, &parent.global),
            }),
            (Some(mine), Some(theirs)) => mine.iter().zip(theirs).all(|(a, b)| match (a, b) {
                (TriangleSet::Free, TriangleSet::Free) => true,
                (_, TriangleSet::Open(p)) => match a {
                    TriangleSet::Free => true,
                    TriangleSet::Open(v) => sub(v, p),
                },
                (TriangleSet::Open(_), TriangleSet::Free) => false,
            }),
        }
    }

    /// Number of retained features per triangle (the global count before
    /// rotation is split).
    pub fn counts(&self) -> Vec<usize> {
        match &self.per_triangle {
            None => vec![self.global.len()],
            Some(v) => v.iter().map(TriangleSet::len).collect(),
        }
    }
}

/// Geometry of a box as the predicate sees it.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BoxView {
    /// Center of the translational square.
    pub center: Point2,
    /// Circumradius of the square (half-width times √2).
    pub radius: f64,
    pub range: AngularRange,
}

/// Where the features of the parent box were gathered: any feature outside
/// `parent.global` lies farther than `radius + r0` from `center`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ParentBall {
    pub center: Point2,
    pub radius: f64,
}

/// Feature-based soft predicate over a fixed environment and robot.
#[derive(Clone, Copy, Debug)]
pub struct Predicate<'a> {
    pub features: &'a [Feature],
    pub decomp: &'a Decomposition,
}

impl<'a> Predicate<'a> {
    pub fn new(features: &'a [Feature], decomp: &'a Decomposition) -> Self {
        Predicate { features, decomp }
    }

    /// Set of the root box: every feature.
    pub fn root_set(&self) -> FeatureSet {
        FeatureSet { global: (0..self.features.len() as u32).collect(), per_triangle: None }
    }

    fn feature(&self, i: u32) -> &Feature {
        &self.features[i as usize]
    }

    /// Side of `p`, from the nearest candidate when it provably beats every
    /// other feature (its distance is at most `bound`), otherwise from a scan
    /// of all features.
    pub fn side_at(&self, p: Point2, candidates: &[u32], bound: f64) -> Side {
        let mut best: Option<(u32, f64)> = None;
        for &i in candidates {
            let d = separation(p, self.feature(i));
            let better = match best {
                None => true,
                Some((j, bd)) => d < bd || (d == bd && self.feature(i).is_corner() && !self.feature(j).is_corner()),
            };
            if better {
                best = Some((i, d));
            }
        }
        match best {
            Some((i, d)) if d <= bound => side_of_feature(p, self.feature(i)),
            _ => {
                let all: Vec<u32> = (0..self.features.len() as u32).collect();
                if all.len() == candidates.len() {
                    return best.map_or(Side::Boundary, |(i, _)| side_of_feature(p, self.feature(i)));
                }
                self.side_at(p, &all, f64::INFINITY)
            }
        }
    }

    /// Translational-phase classification (full rotation range): keep the
    /// features within `r_B + r₀` of the center; an empty set is decided by
    /// the side of the center.
    pub fn classify_translational(
        &self,
        view: &BoxView,
        parent: &FeatureSet,
        parent_ball: Option<ParentBall>,
    ) -> (Classification, FeatureSet) {
        let r0 = self.decomp.r0;
        let limit = view.radius + r0;
        let limit = limit + separation_slack(limit);
        let global: Vec<u32> = parent
            .global
            .iter()
            .copied()
            .filter(|&i| separation(view.center, self.feature(i)) <= limit)
            .collect();
        if !global.is_empty() {
            return (Classification::Mixed, FeatureSet { global, per_triangle: None });
        }
        let bound = match parent_ball {
            Some(b) => b.radius + r0 - view.center.dist(b.center),
            None => f64::INFINITY,
        };
        match self.side_at(view.center, &parent.global, bound) {
            Side::Outside => (Classification::Free, FeatureSet::default()),
            Side::Inside => (Classification::Stuck, FeatureSet::default()),
            Side::Boundary => (Classification::Mixed, parent.clone()),
        }
    }

    /// Rotational-phase classification. `regions[j]` is the swept region of
    /// triangle `j` over `view.range`, in the origin-centered frame.
    pub fn classify_rotational(
        &self,
        view: &BoxView,
        parent: &FeatureSet,
        regions: &[&[Piece]],
    ) -> (Classification, FeatureSet) {
        let r0 = self.decomp.r0;
        let global = &parent.global;
        let shift = Point2::ORIGIN - view.center;
        let mid = view.range.mid();
        let mut out = Vec::with_capacity(self.decomp.len());
        let mut verdicts = Vec::with_capacity(self.decomp.len());
        for (j, t) in self.decomp.triangles.iter().enumerate() {
            let inherited = parent.per_triangle.as_ref().map(|v| &v[j]);
            let candidates: &[u32] = match inherited {
                Some(TriangleSet::Free) => {
                    out.push(TriangleSet::Free);
                    verdicts.push(Classification::Free);
                    continue;
                }
                Some(TriangleSet::Open(v)) => v,
                None => global,
            };
            let limit = view.radius + t.r;
            let limit = limit + separation_slack(limit);
            let kept: Vec<u32> = candidates
                .iter()
                .copied()
                .filter(|&i| {
                    let f = self.feature(i);
                    separation(view.center, f) <= limit
                        && expand_and_test(regions[j], view.radius, &f.translated(shift))
                })
                .collect();
            if !kept.is_empty() {
                out.push(TriangleSet::Open(kept));
                verdicts.push(Classification::Mixed);
                continue;
            }
            let w = view.center + t.centroid().rotate(mid);
            let bound = view.radius + r0 - w.dist(view.center);
            match self.side_at(w, global, bound) {
                Side::Outside => {
                    out.push(TriangleSet::Free);
                    verdicts.push(Classification::Free);
                }
                Side::Inside => {
                    out.push(TriangleSet::Open(Vec::new()));
                    verdicts.push(Classification::Stuck);
                }
                Side::Boundary => {
                    out.push(TriangleSet::Open(candidates.to_vec()));
                    verdicts.push(Classification::Mixed);
                }
            }
        }
        let class = compose(verdicts);
        (class, FeatureSet { global: global.clone(), per_triangle: Some(out) })
    }

    /// Classify a box from scratch, without an ancestor chain. Used by
    /// oracles and the convergence harness.
    pub fn classify_fresh(&self, view: &BoxView) -> Classification {
        let root = self.root_set();
        let (class, set) = self.classify_translational(
            &BoxView { range: AngularRange::full(), ..*view },
            &root,
            None,
        );
        if view.range.full_circle || class != Classification::Mixed {
            return class;
        }
        let regions: Vec<Vec<Piece>> = self
            .decomp
            .triangles
            .iter()
            .map(|t| SweptRegion::of(t, &view.range).pieces())
            .collect();
        let refs: Vec<&[Piece]> = regions.iter().map(Vec::as_slice).collect();
        self.classify_rotational(view, &set, &refs).0
    }
}
