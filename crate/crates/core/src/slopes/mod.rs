//! Simple closed curves on the two model surfaces as rational slopes: intersection numbers,
//! curve-graph distance, enumeration and crossing words.

mod enumerate;
mod farey;
mod slope;
mod words;

pub use enumerate::enumerate_slopes;
pub use farey::{farey_distance, CurveGraphMetric};
pub use slope::{intersection_number, Slope};
pub use words::{
    normal_coordinates, slope_edges, slope_to_word, slope_word, standard_triangulation, trace_normal_curve,
};
