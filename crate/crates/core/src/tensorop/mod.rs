//! Sparse operators on mixed tensor-product spaces with polynomial entries,
//! group-algebra-valued operators, and builders for the operator symbols
//! appearing in the identities: embedded matrices `X_i`, the flip `P`, the
//! transposed flip `Q`, permutation operators, (anti)symmetrizers, the
//! idempotent-like element `sum over sigma of sigma (x) P^sigma`, and the
//! Pfaffian pairing operators `F_m`, `G_m`.

mod builders;
mod group_op;
mod operator;

pub use builders::{
    embed_matrix, epsilon, f_operator, g_operator, perm_operator, q_operator, symmetrizer,
    OpChain, OpSum, SymKind,
};
pub use group_op::GroupOperator;
pub use operator::{vec_add_term as vec_add_term_pub, MixedSpace, SparseVec, TensorOperator};
