//! Numerical toolkit for binary forms: eigenvectors, critical low-rank
//! points of the Euclidean distance, and spectral decompositions.

pub mod cli;
pub mod eigen;
pub mod error;
pub mod experiments;
pub mod form;
pub mod json;
pub mod rank;
pub mod roots;
pub mod spectral;
pub mod tol;

pub use eigen::{
    circle_power, critical_rank_one, eigen_pairs, singular_space, CriticalRank1,
    EigenDecomposition, Hyperplane,
};
pub use error::{Error, Result};
pub use experiments::{
    gaussian_form, maccioni_sweep, root_controlled_quartic, table_search, SweepReport,
    SweepViolation, TableReport, TableRow,
};
pub use form::{
    apply_D, bombieri_dot, bombieri_dot_bilinear, contract, contract_bilinear, perp, power,
    rotate, rotate_linear, split_dot, BinaryForm, LinearForm, Scalar, ScalarField,
};
pub use json::{
    coeffs_from_inline, critical_list_to_json, critical_to_json, eigen_to_json, form_from_json,
    form_to_json, rez_to_json, spectral_to_json, sweep_to_json, table_to_json,
};
pub use rank::{
    best_rank_k, certify, count_real, critical_rank_k, CriticalRankK, RealCounts, SearchBudget,
    Summand, TangentSummand,
};
pub use roots::{fubini_study, roots, ProjectiveRoot, ProjectiveRootSet};
pub use spectral::{
    express_in_eigenbasis, rez, spectral_decompose, RezDecomposition, SpectralDecomposition,
};
