//! Symmetric-group combinatorics: permutations, the rational group algebra,
//! Jucys-Murphy elements, 2-shuffles, block signs, standard Young tableaux,
//! Young's seminormal representations, and irreducible characters.

mod character;
mod perm;
mod qmat;
mod seminormal;
mod tableau;

pub use character::{character, cycle_type};
pub use perm::{
    block_sign, inversions, jucys_murphy, two_shuffles, GroupAlgebraElement, Permutation,
};
pub use qmat::QMat;
pub use seminormal::{SeminormalRep, MAX_SEMINORMAL_R};
pub use tableau::{
    dimension, partition_size, partitions, standard_tableaux, validate_partition, StandardTableau,
};
