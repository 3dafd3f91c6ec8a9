pub mod algebra;
pub mod ct;
pub mod error;
pub mod linalg;
pub mod rational;
pub mod module;
pub mod homology;
pub mod presentation;
pub mod tilting;
pub mod wide;
pub mod io;
