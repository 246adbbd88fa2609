//! Isosceles-orthogonality von Neumann–Jordan constants and companion
//! geometric constants of finite-dimensional real normed spaces.

pub mod constants;
pub mod error;
pub mod orthogonality;
pub mod search;
pub mod spaces;
pub mod verify;

pub use constants::{evaluate, ConstantId, ConstantRequest};
pub use error::{Error, Result};
pub use orthogonality::{is_isosceles, iso_complete, iso_defect, pair_from_sphere, IsoPair};
pub use search::{Estimate, Objective, Sense, Strategy, StrategyTag};
pub use spaces::{Exponent, NormedSpace, Polygon, Region, SpaceKind, Vector};
pub use verify::{run_check, run_check_with, run_suite, run_suite_checks, run_suite_with, CheckResult, Profile, SuiteReport};
