//! Exact combinatorics of the discrete Gini index.
//!
//! The crate computes, in exact integer arithmetic:
//!
//! - integer partitions, dominance order, words of compositions, and
//!   Young-diagram symmetric differences ([`partition`]);
//! - the discrete Gini index, its generalization to partitions of nk with
//!   at most n parts, and discrete Lorenz curves ([`mod@gini`]);
//! - Kostant's partition function and its q-analogue for type-A positive
//!   roots ([`kostant`]);
//! - Kostka numbers, the charge statistic, Kostka-Foulkes polynomials by
//!   two independent algorithms, and graded multiplicities of highest
//!   weight representations in the harmonic polynomials ([`kostka`]);
//! - the one-dimensional earth mover's distance with a BFS ground-truth
//!   oracle ([`mod@emd`]).
//!
//! The headline identity, checked exhaustively by
//! [`kostka::verify_theorem1`]: for a partition lambda of nk with at most
//! n parts and alpha = lambda - (k^n), the graded multiplicity polynomial
//! m_alpha(q) = K_{lambda,(k^n)}(q) is nonzero of degree exactly
//! g_{nk,n}(lambda), the generalized Gini index of lambda.

pub mod emd;
pub mod error;
pub mod gini;
pub mod kostant;
pub mod kostka;
pub mod partition;
pub mod qpoly;

pub use emd::{emd, emd_bfs_oracle, emd_majorized, EmdResult};
pub use error::{Error, Result};
pub use gini::{gini, gini_general, gini_via_area, lorenz_curve, weighted_total, LorenzCurve};
pub use kostant::{
    kostant_partition, kostant_partition_q, signed_permutations, KostantEvaluator, RootSystemA,
};
pub use kostka::{
    charge, graded_multiplicity, kostka_foulkes_charge, kostka_foulkes_kostant, kostka_number,
    ssyt_enumerate, verify_theorem1, verify_theorem1_parallel, GradedMultiplicityReport, Tableau,
};
pub use partition::{partitions_of, Composition, IntVector, Partition, Word};
pub use qpoly::QPolynomial;
