//! r-dynamic colorings of lexicographic graph products.
//!
//! The crate builds the product families `P_l[F]` (for stars, double stars and
//! triple stars `F`) and `K_m[P_n]`, computes exact r-dynamic chromatic numbers,
//! replays the explicit colorings known for these products, and sweeps parameter
//! ranges comparing closed-form predictions against the exact solver.

pub mod cli;
pub mod coloring;
pub mod error;
pub mod formulas;
pub mod graph;
pub mod io;
pub mod product;
pub mod solver;
pub mod sweep;

pub use coloring::{is_proper, is_r_dynamic, neighborhood_color_count, Coloring, Verdict, Violation};
pub use error::{Error, Result};
pub use formulas::{construct_coloring, degree_claims, predict, Family, Instance, Prediction, PredictedValue};
pub use graph::{Graph, VertexId};
pub use product::{lex_product, product_degree};
pub use solver::{
    brute_force_chi_r, chi_r_profile, exact_chi_r, greedy_upper_bound, lemma1_lower_bound, SolveError,
    SolveResult, SolverConfig,
};
