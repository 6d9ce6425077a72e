//! Minimum distance of linear codes, computed exactly through several
//! independent routes: codeword enumeration, the Tutte polynomial of the
//! column matroid, ideals generated by products of the dual linear forms,
//! the Fitting module, Macaulay inverse systems, a filtration of the
//! boolean ring over `F_2`, and Orlik-Terao betti numbers.

pub mod boolean;
pub mod budget;
pub mod catalog;
pub mod code;
pub mod codefile;
pub mod error;
pub mod field;
pub mod graded;
pub mod inverse;
pub mod matrix;
pub mod matroid;
pub mod orlik_terao;
pub mod poly;
pub mod report;

pub use boolean::{
    filtration_product_check, gr_dims, gr_jump_indices, ideal_dim, prop_check, relation_forms, BoolFn, BoolIdeal, GrDims,
    GrJumps,
};
pub use budget::Budget;
pub use catalog::{example, list_examples, NamedExample};
pub use code::{weight, BruteDistance, LinearCode};
pub use codefile::{parse_code_file, AnyCode};
pub use error::{Error, Result};
pub use field::{make_field, Field, FieldCtx, Fp, Rationals};
pub use graded::{
    afold_dim, alpha_m_fitt, delres_identity_check, distance_via_afold, dual_forms, fitt_tensor_total_dim, mds_star_check,
    p_dims, ses_dim_check, star_hs_coeffs, tutte_via_berget, LinearForm, ProductIdeals,
};
pub use inverse::{
    alpha_ann, chow_form, code_chow_form, codeword_derivative_vanishes, deriv_span_dim, inverse_bound, symmetry_check,
    ApolarProfile,
};
pub use matrix::{Echelon, Matrix, Rref};
pub use matroid::{circuits, distance_from_tutte, girth, is_mds, tutte, Circuit, Matroid, TuttePoly};
pub use orlik_terao::{
    alpha_iot, graded_betti, linear_strand_length, no_linear_syzygy_predicate, ot_distance_report, ot_generators,
    BettiTable, KoszulBetti, OTIdeal, OtDistanceReport,
};
pub use poly::{MonomialBasis, MultiPoly};
pub use report::{parse_methods, run_report, Method, Report, ReportOptions, Verdict};
