//! Bipartite divisor graphs of integer sets and of groups.

pub mod corpus;
mod graph;
mod table;

use std::collections::BTreeSet;

pub use graph::{
    build_bdg, classify_shape, graph_invariants, BipartiteDivisorGraph, Girth, GraphInvariants,
    GraphShape, ShapeKind, Vertex,
};
pub use table::{
    AssociativityCheck, LoadReport, TableGroup, EXHAUSTIVE_ASSOC_ORDER, MAX_TABLE_ORDER,
};

use crate::classes::class_table;
use crate::error::Result;
use crate::gate::Gate;
use crate::group::FamilyGroup;

/// Anything whose noncentral conjugacy class sizes can be computed.
pub enum GroupSource<'a> {
    Family(&'a FamilyGroup, Gate),
    Table(&'a TableGroup),
}

pub fn class_sizes_of_table_group(t: &TableGroup) -> BTreeSet<u64> {
    t.noncentral_class_sizes()
}

pub fn noncentral_class_sizes(source: &GroupSource<'_>) -> Result<BTreeSet<u64>> {
    match source {
        GroupSource::Family(g, gate) => Ok(class_table(g, gate)?.noncentral_sizes()),
        GroupSource::Table(t) => Ok(t.noncentral_class_sizes()),
    }
}

/// `B(G)` on the noncentral class sizes of `source`.
pub fn bdg_of_group(source: &GroupSource<'_>) -> Result<BipartiteDivisorGraph> {
    Ok(build_bdg(noncentral_class_sizes(source)?))
}
