//! Nested boxes shrinking onto one configuration, for convergence checks.

use super::cell::{Cell, DyadicArc, Grid};
use super::Configuration;
use crate::geometry::Piece;
use crate::predicates::{BoxView, Classification, ParentBall, Predicate};
use crate::swept::SweptRegion;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Descent {
    pub class: Classification,
    pub halvings: usize,
}

/// Halve the box containing `pose` until the predicate gives a definite
/// answer or `max_halvings` splits are spent. Each step halves whichever of
/// translation (circumradius) or rotation (`r0` times the angular width)
/// currently allows the larger displacement.
pub fn descend_onto(pred: &Predicate<'_>, grid: &Grid, pose: &Configuration, max_halvings: usize) -> Descent {
    let r0 = pred.decomp.r0;
    let p = pose.position();
    let mut cell = Cell::ROOT;
    let mut arc = DyadicArc::FULL;
    let view = |cell: &Cell, arc: &DyadicArc| BoxView {
        center: grid.center(cell),
        radius: grid.radius(cell.level),
        range: arc.range(),
    };
    let (mut class, mut set) = pred.classify_translational(&view(&cell, &arc), &pred.root_set(), None);
    let mut halvings = 0;
    while class == Classification::Mixed && halvings < max_halvings {
        let ball = ParentBall { center: grid.center(&cell), radius: grid.radius(cell.level) };
        if grid.radius(cell.level) >= r0 * arc.width() {
            cell = grid.child_containing(&cell, p);
        } else {
            arc = arc.child_containing(pose.theta);
        }
        let v = view(&cell, &arc);
        (class, set) = if arc.is_full() {
            pred.classify_translational(&v, &set, Some(ball))
        } else {
            let regions: Vec<Vec<Piece>> =
                pred.decomp.triangles.iter().map(|t| SweptRegion::of(t, &v.range).pieces()).collect();
            let refs: Vec<&[Piece]> = regions.iter().map(Vec::as_slice).collect();
            pred.classify_rotational(&v, &set, &refs)
        };
        halvings += 1;
    }
    Descent { class, halvings }
}
