//! Builders for the named graph families.
//!
//! Vertex layouts are fixed so that graph6 output is reproducible:
//!
//! * `CompleteMultipartite(parts)`: blocks laid out consecutively in the
//!   given (descending) order.
//! * `HGraph(k)`: `x_0..x_{k-1}` are `0..k`, `y_0..y_{k-1}` are `k..2k`.
//!   `HOdd` appends `∞` as `2k`; `HEven` appends `∞₁, ∞₂` as `2k, 2k+1`.
//! * `GInjective(3k+t)`: cliques `X = 0..k`, `Y = k..2k`, `Z = 2k..3k`, then
//!   the `t` extra vertices.
//! * `FSquare(n)`: the 5-cycle `x_1..x_5` is `0..5`, `y_i` follow from `5`.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::graph::{Graph, GraphError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("{family}: {message}")]
    Range {
        family: &'static str,
        message: String,
    },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("unknown family '{0}'")]
    UnknownFamily(String),
    #[error("family '{family}' expects {expected}, got '{got}'")]
    BadArguments {
        family: String,
        expected: &'static str,
        got: String,
    },
}

/// A member of one of the supported families, with its parameters.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub enum FamilySpec {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    Empty(usize),
    CompleteBipartite(usize, usize),
    /// Part sizes, non-increasing and positive.
    CompleteMultipartite(Vec<usize>),
    /// The auxiliary graph `H_k` on `2k` vertices, `k ≥ 6`.
    HGraph(usize),
    /// `H_k` plus one vertex joined to the clique side; order `2k+1`.
    HOdd(usize),
    /// `H_k` plus two independent vertices joined to the clique side;
    /// order `2k+2`.
    HEven(usize),
    /// Three `k`-cliques matched into triangles, plus `n mod 3` vertices
    /// joined to the first clique; `n ≥ 9`.
    GInjective(usize),
    /// A 5-cycle plus `n-5` independent vertices each joined to the first and
    /// third cycle vertices; `n ≥ 5`.
    FSquare(usize),
}

fn range_error(family: &'static str, message: impl Into<String>) -> ConstructionError {
    ConstructionError::Range {
        family,
        message: message.into(),
    }
}

impl FamilySpec {
    pub fn name(&self) -> &'static str {
        match self {
            FamilySpec::Path(_) => "path",
            FamilySpec::Cycle(_) => "cycle",
            FamilySpec::Complete(_) => "complete",
            FamilySpec::Empty(_) => "empty",
            FamilySpec::CompleteBipartite(..) => "complete-bipartite",
            FamilySpec::CompleteMultipartite(_) => "multipartite",
            FamilySpec::HGraph(_) => "h-graph",
            FamilySpec::HOdd(_) => "h-odd",
            FamilySpec::HEven(_) => "h-even",
            FamilySpec::GInjective(_) => "g-injective",
            FamilySpec::FSquare(_) => "f-square",
        }
    }

    /// Family names accepted by [`FamilySpec::parse`].
    pub const NAMES: [&'static str; 11] = [
        "path",
        "cycle",
        "complete",
        "empty",
        "complete-bipartite",
        "multipartite",
        "h-graph",
        "h-odd",
        "h-even",
        "g-injective",
        "f-square",
    ];

    /// Parses a family name followed by its integer parameters, e.g.
    /// `("h-odd", ["6"])` or `("multipartite", ["3", "2", "1"])`.
    pub fn parse<S: AsRef<str>>(name: &str, args: &[S]) -> Result<Self, ConstructionError> {
        let bad = |expected: &'static str| ConstructionError::BadArguments {
            family: name.to_string(),
            expected,
            got: args
                .iter()
                .map(|a| a.as_ref())
                .collect::<Vec<_>>()
                .join(" "),
        };
        let nums: Vec<usize> = args
            .iter()
            .map(|a| a.as_ref().parse::<usize>())
            .collect::<Result<_, _>>()
            .map_err(|_| bad("non-negative integer parameters"))?;
        let one = || match nums.as_slice() {
            [n] => Ok(*n),
            _ => Err(bad("exactly one integer")),
        };
        Ok(match name {
            "path" => FamilySpec::Path(one()?),
            "cycle" => FamilySpec::Cycle(one()?),
            "complete" => FamilySpec::Complete(one()?),
            "empty" => FamilySpec::Empty(one()?),
            "complete-bipartite" => match nums.as_slice() {
                [a, b] => FamilySpec::CompleteBipartite(*a, *b),
                _ => return Err(bad("exactly two integers")),
            },
            "multipartite" => FamilySpec::CompleteMultipartite(nums),
            "h-graph" => FamilySpec::HGraph(one()?),
            "h-odd" => FamilySpec::HOdd(one()?),
            "h-even" => FamilySpec::HEven(one()?),
            "g-injective" => FamilySpec::GInjective(one()?),
            "f-square" => FamilySpec::FSquare(one()?),
            other => return Err(ConstructionError::UnknownFamily(other.to_string())),
        })
    }

    /// Per-vertex display names following the documented layout.
    pub fn vertex_labels(&self) -> Vec<String> {
        match self {
            FamilySpec::HGraph(k) | FamilySpec::HOdd(k) | FamilySpec::HEven(k) => {
                let mut labels: Vec<String> = (0..*k)
                    .map(|i| format!("x{i}"))
                    .chain((0..*k).map(|i| format!("y{i}")))
                    .collect();
                match self {
                    FamilySpec::HOdd(_) => labels.push("inf".into()),
                    FamilySpec::HEven(_) => labels.extend(["inf1".into(), "inf2".into()]),
                    _ => {}
                }
                labels
            }
            FamilySpec::GInjective(n) => {
                let (k, t) = (n / 3, n % 3);
                let mut labels: Vec<String> = ["x", "y", "z"]
                    .iter()
                    .flat_map(|p| (1..=k).map(move |i| format!("{p}{i}")))
                    .collect();
                match t {
                    1 => labels.push("inf".into()),
                    2 => labels.extend(["inf1".into(), "inf2".into()]),
                    _ => {}
                }
                labels
            }
            FamilySpec::FSquare(n) => (1..=5)
                .map(|i| format!("x{i}"))
                .chain((1..=n.saturating_sub(5)).map(|i| format!("y{i}")))
                .collect(),
            other => (0..build(other).map(|g| g.order()).unwrap_or(0))
                .map(|i| i.to_string())
                .collect(),
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())?;
        match self {
            FamilySpec::CompleteBipartite(a, b) => write!(f, " {a} {b}"),
            FamilySpec::CompleteMultipartite(parts) => {
                for p in parts {
                    write!(f, " {p}")?;
                }
                Ok(())
            }
            FamilySpec::Path(n)
            | FamilySpec::Cycle(n)
            | FamilySpec::Complete(n)
            | FamilySpec::Empty(n)
            | FamilySpec::HGraph(n)
            | FamilySpec::HOdd(n)
            | FamilySpec::HEven(n)
            | FamilySpec::GInjective(n)
            | FamilySpec::FSquare(n) => write!(f, " {n}"),
        }
    }
}

impl FromStr for FamilySpec {
    type Err = ConstructionError;

    /// Parses the [`Display`](fmt::Display) form, e.g. `"h-even 7"`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut words = s.split_whitespace();
        let name = words.next().unwrap_or("");
        let args: Vec<&str> = words.collect();
        FamilySpec::parse(name, &args)
    }
}

/// Builds the graph described by `spec`.
pub fn build(spec: &FamilySpec) -> Result<Graph, ConstructionError> {
    match *spec {
        FamilySpec::Path(n) => {
            if n == 0 {
                return Err(range_error("path", "needs at least one vertex"));
            }
            Ok(Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))?)
        }
        FamilySpec::Cycle(n) => {
            if n < 3 {
                return Err(range_error("cycle", format!("needs n >= 3, got {n}")));
            }
            Ok(Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))?)
        }
        FamilySpec::Complete(n) => Ok(Graph::complete(n)?),
        FamilySpec::Empty(n) => Ok(Graph::empty(n)?),
        FamilySpec::CompleteBipartite(a, b) => Ok(Graph::from_edges(
            a + b,
            (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))),
        )?),
        FamilySpec::CompleteMultipartite(ref parts) => complete_multipartite(parts),
        FamilySpec::HGraph(k) => h_family(k, 0, "h-graph"),
        FamilySpec::HOdd(k) => h_family(k, 1, "h-odd"),
        FamilySpec::HEven(k) => h_family(k, 2, "h-even"),
        FamilySpec::GInjective(n) => g_injective(n),
        FamilySpec::FSquare(n) => f_square(n),
    }
}

fn complete_multipartite(parts: &[usize]) -> Result<Graph, ConstructionError> {
    const FAMILY: &str = "multipartite";
    if parts.is_empty() {
        return Err(range_error(FAMILY, "needs at least one part"));
    }
    if parts.contains(&0) {
        return Err(range_error(FAMILY, "part sizes must be positive"));
    }
    if parts.windows(2).any(|w| w[0] < w[1]) {
        return Err(range_error(FAMILY, "part sizes must be non-increasing"));
    }
    let n: usize = parts.iter().sum();
    let mut block = Vec::with_capacity(n);
    for (i, &size) in parts.iter().enumerate() {
        block.extend(std::iter::repeat_n(i, size));
    }
    let edges = Graph::pairs(n).filter(|&(u, v)| block[u] != block[v]);
    Ok(Graph::from_edges(n, edges)?)
}

fn h_family(k: usize, extra: usize, family: &'static str) -> Result<Graph, ConstructionError> {
    if k < 6 {
        return Err(range_error(family, format!("needs k >= 6, got {k}")));
    }
    let half = k / 2;
    let y = |i: usize| k + i % k;
    let mut edges = Vec::new();
    for i in 0..k {
        for t in (0..=half).filter(|&t| t != half - 1) {
            edges.push((i, y(i + t)));
        }
    }
    for (a, b) in Graph::pairs(k) {
        edges.push((y(a), y(b)));
    }
    for inf in 2 * k..2 * k + extra {
        edges.extend((0..k).map(|i| (inf, y(i))));
    }
    Ok(Graph::from_edges(2 * k + extra, edges)?)
}

fn g_injective(n: usize) -> Result<Graph, ConstructionError> {
    const FAMILY: &str = "g-injective";
    if n < 9 {
        return Err(range_error(FAMILY, format!("needs n >= 9, got {n}")));
    }
    let (k, t) = (n / 3, n % 3);
    let mut edges = Vec::new();
    for block in 0..3 {
        let base = block * k;
        edges.extend(Graph::pairs(k).map(|(a, b)| (base + a, base + b)));
    }
    for i in 0..k {
        edges.extend([(i, k + i), (i, 2 * k + i), (k + i, 2 * k + i)]);
    }
    // With t = 2 the two extra vertices stay non-adjacent.
    for inf in 3 * k..3 * k + t {
        edges.extend((0..k).map(|i| (inf, i)));
    }
    Ok(Graph::from_edges(n, edges)?)
}

fn f_square(n: usize) -> Result<Graph, ConstructionError> {
    if n < 5 {
        return Err(range_error("f-square", format!("needs n >= 5, got {n}")));
    }
    let mut edges: Vec<(usize, usize)> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
    for y in 5..n {
        edges.extend([(y, 0), (y, 2)]);
    }
    Ok(Graph::from_edges(n, edges)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::{variant_chromatic, VariantKind};
    use crate::graph::BitIter;

    fn chi2(g: &Graph) -> usize {
        variant_chromatic(g, VariantKind::TwoProper).value
    }

    #[test]
    fn multipartite_example() {
        let g = build(&FamilySpec::CompleteMultipartite(vec![3, 2, 1])).unwrap();
        assert_eq!(g.order(), 6);
        assert_eq!(g.edge_count(), 3 * 2 + 3 + 2);
        assert_eq!(chi2(&g), 3);
    }

    #[test]
    fn multipartite_rejects_bad_parts() {
        for parts in [vec![], vec![2, 0], vec![1, 2]] {
            assert!(matches!(
                build(&FamilySpec::CompleteMultipartite(parts)),
                Err(ConstructionError::Range { .. })
            ));
        }
    }

    #[test]
    fn range_errors() {
        for spec in [
            FamilySpec::HGraph(5),
            FamilySpec::HOdd(5),
            FamilySpec::HEven(2),
            FamilySpec::FSquare(4),
            FamilySpec::GInjective(8),
            FamilySpec::Cycle(2),
            FamilySpec::Path(0),
        ] {
            assert!(
                matches!(build(&spec), Err(ConstructionError::Range { .. })),
                "{spec}"
            );
        }
        assert!(matches!(
            build(&FamilySpec::Complete(65)),
            Err(ConstructionError::Graph(GraphError::OrderTooLarge { .. }))
        ));
    }

    #[test]
    fn f_square_five_is_c5() {
        let f = build(&FamilySpec::FSquare(5)).unwrap();
        assert_eq!(f, build(&FamilySpec::Cycle(5)).unwrap());
        let f7 = build(&FamilySpec::FSquare(7)).unwrap();
        assert_eq!(f7.neighbors(6), 0b101);
        assert!(f7.is_independent(0b1100000));
    }

    #[test]
    fn h_graph_structure() {
        for k in 6..=9 {
            let h = build(&FamilySpec::HGraph(k)).unwrap();
            assert_eq!(h.order(), 2 * k);
            let x = (1u64 << k) - 1;
            let y = x << k;
            assert!(h.is_independent(x));
            assert!(h.is_clique(y));
            for i in 0..k {
                assert_eq!(h.degree(i), k / 2);
                // The one skipped offset is ⌊k/2⌋ - 1.
                assert!(!h.has_edge(i, k + (i + k / 2 - 1) % k));
                assert!(h.has_edge(i, k + (i + k / 2) % k));
            }
            let d = h.distance_matrix();
            for i in 0..k {
                for j in 0..k {
                    if i != j {
                        assert_eq!(d.get(i, j), Some(2), "k={k} x{i} x{j}");
                    }
                }
            }
        }
    }

    #[test]
    fn h_graph_six_adjacency() {
        // x_0 joins y_0, y_1, y_3 (y_2 skipped) for k = 6.
        let h = build(&FamilySpec::HGraph(6)).unwrap();
        let ys: Vec<usize> = BitIter(h.neighbors(0)).map(|v| v - 6).collect();
        assert_eq!(ys, vec![0, 1, 3]);
        let ys: Vec<usize> = BitIter(h.neighbors(5)).map(|v| v - 6).collect();
        assert_eq!(ys, vec![0, 2, 5]);
    }

    #[test]
    fn h_variants_append_vertices() {
        let odd = build(&FamilySpec::HOdd(6)).unwrap();
        assert_eq!(odd.order(), 13);
        assert_eq!(odd.neighbors(12), 0b111111 << 6);
        let even = build(&FamilySpec::HEven(6)).unwrap();
        assert_eq!(even.order(), 14);
        assert_eq!(even.neighbors(12), 0b111111 << 6);
        assert_eq!(even.neighbors(13), 0b111111 << 6);
        assert!(!even.has_edge(12, 13));
    }

    #[test]
    fn g_injective_common_neighbors() {
        for n in 9..=14 {
            let g = build(&FamilySpec::GInjective(n)).unwrap();
            assert_eq!(g.order(), n);
            let gc = g.complement();
            for (u, v) in Graph::pairs(n) {
                assert_ne!(g.neighbors(u) & g.neighbors(v), 0, "n={n} G {u} {v}");
                assert_ne!(gc.neighbors(u) & gc.neighbors(v), 0, "n={n} Gc {u} {v}");
            }
        }
    }

    #[test]
    fn parse_and_display() {
        let spec: FamilySpec = "multipartite 3 2 1".parse().unwrap();
        assert_eq!(spec, FamilySpec::CompleteMultipartite(vec![3, 2, 1]));
        assert_eq!(spec.to_string(), "multipartite 3 2 1");
        assert_eq!(
            FamilySpec::parse("f-square", &["7"]).unwrap(),
            FamilySpec::FSquare(7)
        );
        assert!(matches!(
            "tree 4".parse::<FamilySpec>(),
            Err(ConstructionError::UnknownFamily(_))
        ));
        assert!(matches!(
            FamilySpec::parse("cycle", &["4", "5"]),
            Err(ConstructionError::BadArguments { .. })
        ));
        assert!(matches!(
            FamilySpec::parse("cycle", &["x"]),
            Err(ConstructionError::BadArguments { .. })
        ));
        for name in FamilySpec::NAMES {
            let args: &[&str] = match name {
                "complete-bipartite" => &["2", "3"],
                "multipartite" => &["2", "1"],
                _ => &["9"],
            };
            let spec = FamilySpec::parse(name, args).unwrap();
            assert_eq!(spec.name(), name);
            assert_eq!(spec.to_string().parse::<FamilySpec>().unwrap(), spec);
        }
    }

    #[test]
    fn labels_follow_layout() {
        assert_eq!(FamilySpec::HOdd(6).vertex_labels().len(), 13);
        assert_eq!(FamilySpec::HOdd(6).vertex_labels()[12], "inf");
        assert_eq!(FamilySpec::GInjective(11).vertex_labels()[10], "inf2");
        assert_eq!(FamilySpec::FSquare(6).vertex_labels()[5], "y1");
        assert_eq!(
            FamilySpec::Cycle(4).vertex_labels(),
            vec!["0", "1", "2", "3"]
        );
    }
}
