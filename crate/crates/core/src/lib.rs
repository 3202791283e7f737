//! Exact solvers for the parametric matroid one-interdiction problem.
//!
//! Every element of a matroid carries a weight `a + λ·b`. For each `λ` in an
//! interval we want the element whose removal raises the minimum basis
//! weight the most, together with the resulting value `y(λ)`. All arithmetic
//! is exact over the rationals.
//!
//! ```
//! use pmi_core::{fixtures, solve_naive, pwl::int};
//!
//! let sol = solve_naive(&fixtures::p2()).unwrap();
//! assert_eq!(sol.y.eval(&int(0)), int(1));
//! assert_eq!(sol.y.eval(&int(3)), int(3));
//! ```

pub mod checks;
pub mod element;
pub mod error;
pub mod fixtures;
pub mod format;
pub mod gen;
pub mod instance;
pub mod interdiction;
pub mod matroid;
pub mod oracle;
pub mod par;
pub mod parametric;
pub mod pwl;
pub mod solution;

pub use element::ElementId;
pub use error::Error;
pub use instance::Instance;
pub use interdiction::{
    doubled_graphic, doubled_instance, find_candidates, solve_intervals, solve_naive,
    y_functions_sweep, CandidateSet,
};
pub use oracle::{compare, interdict_at, solve_bruteforce, ComparisonReport};
pub use parametric::{all_equality_points, parametric_min_basis, BasisSchedule, EqualityPoints};
pub use solution::{Segment, Solution};
