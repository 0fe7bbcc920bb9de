//! Additive products of atom graphs and their finite quotients.
//!
//! The crate is organised bottom-up:
//!
//! * [`graph`]: atoms, sum graphs, multigraphs with explicit dart pairing and
//!   covering maps, plus the JSON graph document format.
//! * [`linalg`] and [`poly`]: dense symmetric eigensolving, exact integer
//!   characteristic polynomials and Sturm-sequence root certification.
//! * [`product`]: finite balls of the additive product and spectral radius
//!   brackets.
//! * [`addchar`]: the additive characteristic polynomial (heap enumeration),
//!   its signing-expectation and freelike-walk cross checks.
//! * [`lift`]: lift encodings, potentials, balanced and additive lifts,
//!   representation matrices and lifted adjacency matrices.
//! * [`search`]: conditional-expectation greedy over lift encodings producing
//!   certified lifts whose new eigenvalues stay below a reference radius.
//! * [`free`]: Cauchy transforms and free convolution right edges.
//! * [`presets`] and [`selftest`]: named example families and the
//!   end-to-end property checks run by `addprod selftest`.

pub mod addchar;
pub mod error;
pub mod free;
pub mod graph;
pub mod lift;
pub mod linalg;
pub mod perm;
pub mod poly;
pub mod presets;
pub mod product;
pub mod rng;
pub mod search;
pub mod selftest;

pub use addchar::{
    additive_char_poly, enumerate_colored_cycles, expected_charpoly_signing, freelike_walk_count,
    matching_poly, ColoredCycle, ExpectedPoly, SigningMode, TrivialHeap,
};
pub use error::{Error, Result};
pub use free::{free_convolution_right_edge, paschke_check, permutation_sum_experiment, SpectralMeasure};
pub use graph::{check_cover, Atom, CoverMap, Diagnostics, GraphDocument, Indexing, MultiGraph, SumGraph};
pub use lift::{
    additive_lift, balanced_lift, decode_potential, lift_adjacency, rep_invariance_check, spectrum_split,
    uniform_bit_distribution, LiftEncoding, Potential, RepKind,
};
pub use linalg::symmetric_spectrum;
pub use num_bigint::BigInt;
pub use num_rational::BigRational;
pub use perm::Permutation;
pub use poly::{certify_real_rooted, max_abs_root, power_sums, ExactPolynomial, RealRootCertificate};
pub use presets::{auto_rho, AutoRho, Preset};
pub use selftest::{run_all, run_criterion, CriterionOutcome};
pub use product::{build_ball, free_product_atoms, specrad_bracket, specrad_lower_walks, ProductBall, SpectralRadiusBracket};
pub use search::{
    conditional_expected_charpoly, greedy_descent, quasi_ramanujan_pipeline, RamanujanCertificate, RhoProvenance,
    SearchOptions, SearchState,
};

/// Tool version recorded in certificates and run manifests.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
