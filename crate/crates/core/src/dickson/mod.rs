//! Dickson polynomial families, their functional equations, and their
//! behaviour over prime fields.

mod families;
mod finite_field;
mod functional;

pub use families::{
    by_recurrence, dickson_type, first_kind, has_integer_coefficients, has_parity,
    is_monic_of_degree, kth_kind, pascal_rows, second_kind, third_kind, FamilyKind, FamilyListing,
    FamilySpec,
};
pub use finite_field::{
    ff_eval, ff_is_permutation, ff_is_permutation_bounded, is_prime, permutation_survey,
    reduce_rational, FieldPoly, PermutationRow, PrimeFieldElem, MAX_MODULUS, PERMUTATION_BOUND,
};
pub use functional::{functional_residual, FunctionalKind, Sign};
