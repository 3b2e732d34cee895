//! Permutation groups, exact character tables and class functions.

pub mod classfn;
pub mod perm;
pub mod quadratic;
pub mod table;

pub use classfn::{
    decompose, induce_from_stabilizer, induce_symmetric_on_orbit, inner_product, restrict_symmetric, ClassFunction,
};
pub use perm::{EnumeratedGroup, PermGroup, Permutation, StabChain, DEFAULT_ENUM_BOUND};
pub use quadratic::{QuadraticEntry, QuadraticSum, QuadraticValue};
pub use table::{product_table, symmetric_table, trivial_table, CharacterTable, ClassList, Irreducible, TableReport};
