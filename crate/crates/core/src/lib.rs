//! Finite double categories: the data model and validator, standard shapes
//! and embeddings, a right-lifting-property engine over a catalog of cell
//! shapes, checkers for the morphism classes that drive fibrancy
//! classification, and congruence quotients / pushout cells.

pub mod classifiers;
pub mod colimits;
pub mod constructions;
pub mod core;
pub mod corpus;
pub mod equivalences;
pub mod io;
pub mod lifting;

pub use crate::core::{
    compose_squares, invert_square, paste_grid, squares_with_boundary, validate_double_category,
    validate_double_functor, Diagnostic, Diagnostics, Dir, DoubleCategory, DoubleFunctor, HId,
    Law, MorData, ObjId, OpError, RawDoubleCategory, RawFunctorData, SqId, SquareBoundary,
    SquareData, TwoCategory, TwoFunctor, VId,
};
