//! Solvers for the parametric one-interdiction problem.

mod candidates;
mod doubled;
mod intervals;
mod naive;
mod sweep;

pub(crate) use candidates::find_candidates_with;
pub use candidates::{find_candidates, Candidate, CandidateCase, CandidateSet};
pub use doubled::{doubled_graphic, doubled_instance};
pub use intervals::solve_intervals;
pub use naive::solve_naive;
pub(crate) use sweep::sweep;
pub use sweep::{y_functions_sweep, SweepResult};
