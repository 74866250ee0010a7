//! Exact computation of the domination chain and its saturation and
//! irredundance relatives on small graphs, plus the graph families,
//! induced-subgraph machinery and desk-scale searches built on top.
//!
//! Vertices are bitmask indices, so everything here targets graphs of at
//! most 32 vertices; the solvers are exact exponential searches tuned for
//! that window.

pub mod codec;
pub mod families;
pub mod graph;
pub mod hfree;
pub mod matching;
pub mod ramsey;
pub mod solvers;

pub use codec::{emit_edge_list, emit_graph6, parse_edge_list, parse_graph6, CodecError};
pub use families::{
    enumerate_bistar_variants, generate, oracle_value, BistarVariantFamily, FamilyError,
    FamilySpec, OracleEntry, Provenance,
};
pub use graph::{Graph, GraphError, VertexSet, MAX_VERTICES, SOFT_VERTEX_LIMIT};
pub use hfree::{
    bounding_family, contains_bistar_variant, contains_induced, family_leq, is_isomorphic,
    longest_induced_path, FamilyHit, FamilyMember, FamilyOrder, ForbiddenFamily, HfreeError,
};
pub use matching::{matching_number, BipartiteError, BipartiteView};
pub use ramsey::{
    bipartite_ramsey_search, bound_profile, bound_profile_exhaustive_connected,
    chain_audit_exhaustive, graph_from_edge_bits, konig_audit, konig_audit_exhaustive,
    labeled_graph_count, lozin_q_exhaustive, lozin_q_profile, ramsey_witness_search,
    saturation_audit_exhaustive, verify_lemma_bistar_reduction, zverovich_audit,
    zverovich_audit_exhaustive, AuditViolation, EmpiricalBound, ExhaustiveAudit, KonigReport,
    RamseyError, ReductionReport, ScanResult, ZverovichReport,
};
pub use solvers::{
    compute, full_report, Parameter, ParameterReport, SaturationSolved, Solved, SolverError,
    CSV_HEADER, REPORT_SCHEMA_VERSION,
};
