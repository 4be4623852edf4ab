pub mod constructions;
pub mod exactnum;
pub mod flagspec;
pub mod geometry;
pub mod render;
