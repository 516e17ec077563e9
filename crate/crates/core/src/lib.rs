//! Exact computation of the chromatic number and three distance-based
//! variants (2-proper, injective and square) on small graphs, together with
//! machine checks of their Nordhaus-Gaddum type bounds.
//!
//! * [`graph`]: bit-matrix graphs, complements, distances, derived graphs.
//! * [`coloring`]: exact solvers, including an L(p, q) labelling solver.
//! * [`constructions`]: the named extremal families.
//! * [`verify`]: parameter profiles, bound checks and exhaustive sweeps.
//! * [`io`]: graph6, edge-list and DOT formats.

pub mod coloring;
pub mod constructions;
pub mod graph;
pub mod io;
pub mod verify;

pub use coloring::{
    chromatic_number, greedy_upper_bound, lpq_number, max_clique_size, variant_chromatic,
    ColoringResult, LabelingResult, VariantKind,
};
pub use constructions::{build, ConstructionError, FamilySpec};
pub use graph::{DegreeStats, DerivedKind, DistanceMatrix, Graph, GraphError, MAX_ORDER};
pub use io::{export_dot, parse_edge_list, parse_graph6, write_graph6, FormatError};
pub use verify::{
    check_theorems, evaluate_graph, sweep_order, sweep_stream, CheckId, ParameterProfile, Side,
    SweepSummary, TheoremReport,
};
