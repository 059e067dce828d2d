//! Ideal triangulations with shear coordinates: the model surfaces, holonomy, lengths,
//! developing maps and stretch paths.

mod develop;
mod holonomy;
mod surface;
mod triangulation;
mod word;

pub use develop::{
    develop, develop_with_limit, edge_geodesic, standard_vertices, DevelopTarget, DevelopedTriangle,
    DEFAULT_MAX_DEPTH,
};
pub use holonomy::{
    crossing_matrix, curve_length, holonomy, holonomy_axis, length_from_ln_trace, ln_trace, positive_product, LogMatrix,
};
#[allow(unused_imports)]
pub(crate) use holonomy::{length_edges, ln_trace_edges, positive_product_edges};
pub use surface::{
    build_s04_example, build_s11, s04, s04_core_curve, s04_triangulation, s11, s11_triangulation, stretch,
    ShearSurface, StretchPath,
};
pub use triangulation::{slot, split, SurfaceKind, Triangulation};
pub use word::{CrossingWord, Turn};
