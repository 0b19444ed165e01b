//! Subdivision of SE(2) into boxes, and the search over them.

pub mod cell;
pub mod config;
pub mod descent;
pub mod hausdorff;
pub mod planner;

pub use cell::{Cell, DyadicArc, Grid};
pub use config::Configuration;
pub use descent::{descend_onto, Descent};
pub use hausdorff::{footprint_hausdorff, hausdorff_bound_check};
pub use planner::{
    epsilon_small, plan, ConfigBox, LeafRecord, NoPathReason, PlanError, PlanResult, PlanStats, PlanStatus,
    Planner, PlannerConfig, Strategy,
};

/// Map over a slice, on worker threads when enabled and compiled in.
pub(crate) fn par_map<T, R, F>(items: &[T], parallel: bool, f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if parallel && items.len() > 1 {
        use rayon::prelude::*;
        return items.par_iter().map(f).collect();
    }
    let _ = parallel;
    items.iter().map(f).collect()
}
