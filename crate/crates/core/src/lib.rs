//! Enumeration of the satisfying teams of Poor Man's propositional
//! dependence logic: conjunctions of literals, constants and dependence
//! atoms under team semantics.
//!
//! A formula is parsed, reduced (forced literals split off, atoms restricted
//! to the free variables) and handed to one of the enumerators in
//! [`enumerate`]. Every stream reports a step count per emission so delays
//! can be measured independently of the machine.
//!
//! ```
//! use teamenum::{enumerate, parse_formula, reduce, Algorithm, EnumConfig};
//!
//! let rf = reduce(&parse_formula("dep(x1;x2)").unwrap()).unwrap();
//! let cfg = EnumConfig::new(Algorithm::Orbit).with_max_size(2);
//! let teams: Vec<String> = enumerate(&rf, &cfg).unwrap().map(|t| t.to_string()).collect();
//! assert_eq!(teams.len(), 8);
//! ```

pub mod enumerate;
pub mod exec;
pub mod families;
pub mod formula;
pub mod orbit;
pub mod report;
pub mod seeds;
pub mod steps;
pub mod team;
pub mod trie;

pub use enumerate::{
    enumerate, merge_disjunction, Algorithm, EnumConfig, EnumError, SolutionStream, SpaceUsage,
};
pub use exec::Execution;
pub use formula::{
    expand_team, parse_disjunction, parse_formula, reduce, Disjunction, Formula, FormulaError,
    Node, ReducedFormula,
};
pub use orbit::{compute_stabilizer_basis, enumerate_orbit, OrbitEnumerator, OrbitError};
pub use report::RunReport;
pub use seeds::{build_pair_seeds, seeds_for_level, SeedError, SeedStepper};
pub use steps::StepCounter;
pub use team::{
    apply_shift, compare_teams, first_assignment, last_one_position, model_check,
    next_assignment, pair_satisfies, symmetric_difference_size, Assignment, OrderKind, Team,
    TeamError, TeamOrdering,
};
