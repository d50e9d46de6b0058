//! Corpus generators and executable structure checks.

pub mod checks;
pub mod enumerate;
pub mod gen;
pub mod suites;

pub use checks::{check_antihole_alternation, check_bull_growth, check_contact_p3, check_nearly, classify_contacts, CoC6Labeling};
pub use gen::{gen_in_class, gen_random, gen_weights, plant_alternating_antihole, plant_coc6, plant_growth, CoC6Profile, GenError, GrowthBase, Planted};
pub use suites::{run_suite, LemmaReport, SuiteConfig, SuiteId};
