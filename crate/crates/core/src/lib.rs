//! CDCL SAT solver with clause learning from dual implication points (DIPs).
//!
//! On each conflict the solver looks for pairs of literals that together
//! separate the first UIP from the conflict, defines an extension variable for
//! one such pair and learns clauses over it, in the style of extended
//! resolution.
//!
//! ```
//! use dipsat::{gen, solve, SolverConfig, Status};
//!
//! let f = gen::gen_tseitin_grid(3, 3, 0).unwrap();
//! let r = solve(&f, SolverConfig::default()).unwrap();
//! assert_eq!(r.status, Status::Unsat);
//! ```

pub mod analyze;
pub mod batch;
pub mod ercl;
pub mod formula;
pub mod gen;
pub mod proof;
pub mod search;
pub mod stats;
pub mod tvd;

pub use ercl::{DipChoice, DipClauses, DipConfig, DipFilter};
pub use formula::{parse_dimacs, parse_dimacs_str, write_dimacs, Clause, CnfFormula, Lit, Var};
pub use proof::{check_proof, ProofEvent, ProofLog};
pub use search::{solve, SolveError, SolveResult, Solver, SolverConfig, Status};
pub use stats::SolverStats;
