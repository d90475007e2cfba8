//! Classical raster operators the binarizers and metrics are built on.

mod components;
mod contour;
mod distance;
mod edges;
mod histogram;
mod local_stats;
mod thinning;

pub use components::{connected_components, remove_small_components, Labeling};
pub use contour::extract_contour;
pub use distance::{distance_transform, squared_distance_transform, DistanceField};
pub use edges::{detect_edges, detect_edges_with_sigma, gaussian_blur, EdgeMap};
pub use histogram::histogram;
pub use local_stats::{local_stats, LocalStats};
pub use thinning::skeletonize;

/// Offsets of the 8-neighbourhood in raster order.
pub(crate) const NEIGHBORS_8: [(isize, isize); 8] = [
    (-1, -1),
    (0, -1),
    (1, -1),
    (-1, 0),
    (1, 0),
    (-1, 1),
    (0, 1),
    (1, 1),
];

pub(crate) const NEIGHBORS_4: [(isize, isize); 4] = [(0, -1), (-1, 0), (1, 0), (0, 1)];
