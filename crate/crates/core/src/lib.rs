//! Divisor theory on graphs (chip-firing, Dhar's burning algorithm,
//! Baker–Norine rank, gonality search) together with scramble orders, with
//! constructors and certificates specialised to rook graphs.

pub mod cache;
pub mod divisor;
pub mod error;
pub mod flow;
pub mod gonality;
pub mod graph;
pub mod rank;
pub mod scramble;
pub mod subsets;
pub mod suite;
pub mod symmetry;
pub mod table;
pub mod vset;

pub use divisor::{dhar_burn, equivalent, fire_set, is_winnable, v_reduce, BurnReport, Divisor, ReductionResult};
pub use error::{Error, Result};
pub use flow::{min_cut_between, FlowResult};
pub use gonality::{k_gonality, rook_certificate_divisor, GonalityOptions, GonalityResult};
pub use graph::{cartesian_product, complete_graph, rook_graph, Cut, MultiGraph};
pub use rank::{rank, verify_rank_at_least, RankCheck, RankOracle};
pub use scramble::{
    hitting_number, min_egg_cut, scramble_order, validate_scramble, OrderReport, Scramble,
};
pub use subsets::connected_subsets;
pub use suite::{run_suite, SuiteOptions, VerificationReport};
pub use symmetry::{canonical_divisor_form, rook_symmetry, SymmetryGroup};
pub use vset::VertexSet;
