//! Deciders for arithmetic Cohen-Macaulayness of tetrahedral curves and,
//! more generally, unmixed height-two monomial ideals.
//!
//! A tetrahedral curve is cut out by an intersection of powers of the six
//! height-two monomial primes on `a, b, c, d`; the six exponents label the
//! edges of a tetrahedron. The crate answers "is the curve arithmetically
//! Cohen-Macaulay?" by several independent routes and lets callers
//! cross-check them against each other:
//!
//! * a closed-form test on the six exponents ([`classify::classify_closed_form`]),
//! * an exhaustive four-cycle witness search ([`classify::classify_witness`]),
//! * the combinatorial pipeline: polarize, take the Alexander dual, read off
//!   an edge graph, and test the complement for chordality
//!   ([`graph::acm_via_chordality`]),
//! * desk-scale homological oracles: graded Betti numbers via Hochster's
//!   formula, linear-resolution and Reisner Cohen-Macaulayness predicates
//!   ([`homology`]).
//!
//! All arithmetic is exact. Every value is immutable after construction and
//! every operation is a pure function, so everything here is safe to call
//! concurrently.

pub mod alexander;
pub mod classify;
pub mod error;
pub mod graph;
pub mod homology;
pub mod ideal;
pub mod monomial;
pub mod polarize;
pub mod vars;

pub use alexander::{alexander_dual, alexander_dual_with_cap, dual_generators_direct};
pub use classify::{
    classify_closed_form, classify_schwartau, classify_witness, find_witness, normalize,
    unique_balanced_solution, AcmVerdict, Condition, FourCycleWitness, Method, NormalizationSwap,
};
pub use error::{Error, Result};
pub use graph::{
    acm_via_chordality, complement, graph_from_ideal, induced_cycles, induced_cycles_with_limit,
    is_chordal, ChordalityCertificate, Graph,
};
pub use homology::{
    graded_betti, graded_betti_with_cap, has_linear_resolution, has_linear_resolution_with_cap,
    is_cm_reisner, is_cm_reisner_with_cap, reduced_homology_ranks, stanley_reisner, BettiTable,
    SimplicialComplex,
};
pub use ideal::{
    minimalize, pair_prime_power, pairwise_ideal, tetrahedral_ideal, ExponentVector,
    MonomialIdeal, PairExponents, SquarefreeIdeal,
};
pub use monomial::{Monomial, SquarefreeMonomial};
pub use polarize::{depolarize_monomial, polarize_ideal, polarize_monomial};
pub use vars::{Universe, VarId};
