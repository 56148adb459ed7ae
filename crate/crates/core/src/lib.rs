pub mod algebra;
pub mod compose;
pub mod error;
pub mod exact;
pub mod grading;
pub mod io;
pub mod linalg;
pub mod magic;
pub mod report;
pub mod scenario;

pub use algebra::{Algebra, Element};
pub use error::{ForgeError, Result};
pub use exact::{Polynomial, Rational, Scalar};
pub use report::{Claim, Outcome, Report, ScenarioReport};
pub use scenario::{run_scenario, scenario_names, ScenarioOptions};
