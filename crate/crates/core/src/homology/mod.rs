//! Normalized chains, Smith normal form and first homology.

mod chains;
mod snf;

pub use chains::{
    chain_matrices, full_chain_matrices, h1, h1_full, h1_universal_group, universal_group_direct,
    AbelianGroupPresentation, ChainMatrices, H1Input,
};
pub use snf::{smith_normal_form, IntMatrix, Snf};
