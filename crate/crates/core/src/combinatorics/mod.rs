//! Partition, multipartition, tableau and node combinatorics.

pub mod lsymbol;
pub mod node;
pub mod partition;
pub mod tableau;

pub use lsymbol::{l_symbol, LSymbol};
pub use node::{
    addable_nodes, add_node, contains, diagram, remove_node, removable_nodes, rim_hook_at,
    rim_hooks, Node, RimHook,
};
pub use partition::{
    count_identity_check, dominates, dominates_compositions, dominates_strictly,
    enumerate_multipartitions, order_of_wreath, Composition, Multicomposition, Multipartition,
    Partition,
};
pub use tableau::{
    initial_tableau, is_semistandard, omega, semistandard_tableaux, semistandard_with_fibers,
    ssyt_count, standard_tableaux, tableau_dominates, type_filling, SemistandardTableau,
    StandardTableau, TypedEntry,
};
