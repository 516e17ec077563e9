//! Exact chromatic numbers.
//!
//! The three distance-based variants reduce to an ordinary chromatic number
//! on a derived graph, computed by a DSATUR branch and bound. The L(p, q)
//! solver is independent of that reduction and is used to cross-check it.

use serde::Serialize;

use crate::graph::{BitIter, DerivedKind, Graph};

/// Which chromatic parameter to compute.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum VariantKind {
    /// Ordinary proper colouring.
    Proper,
    /// Vertices at distance exactly two get distinct colours.
    TwoProper,
    /// Vertices with a common neighbour get distinct colours.
    Injective,
    /// Vertices at distance one or two get distinct colours.
    Square,
}

impl VariantKind {
    pub const ALL: [VariantKind; 4] = [
        VariantKind::Proper,
        VariantKind::TwoProper,
        VariantKind::Injective,
        VariantKind::Square,
    ];

    /// The derived graph whose proper colourings are exactly the colourings
    /// of this variant; `None` for [`VariantKind::Proper`].
    pub fn derived_kind(self) -> Option<DerivedKind> {
        match self {
            VariantKind::Proper => None,
            VariantKind::TwoProper => Some(DerivedKind::DistanceExactlyTwo),
            VariantKind::Injective => Some(DerivedKind::CommonNeighbor),
            VariantKind::Square => Some(DerivedKind::DistanceAtMostTwo),
        }
    }

    /// The graph a colouring of this variant must properly colour.
    pub fn target_graph(self, g: &Graph) -> Graph {
        match self.derived_kind() {
            Some(kind) => g.derived(kind),
            None => g.clone(),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            VariantKind::Proper => "proper",
            VariantKind::TwoProper => "two-proper",
            VariantKind::Injective => "injective",
            VariantKind::Square => "square",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        VariantKind::ALL.into_iter().find(|k| k.name() == name)
    }
}

/// An optimal colouring: `assignment[v]` is in `1..=value`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ColoringResult {
    pub value: usize,
    pub assignment: Vec<usize>,
}

/// An optimal L(p, q)-labelling: labels are in `0..=value` and some vertex
/// carries `value`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LabelingResult {
    pub value: usize,
    pub labeling: Vec<usize>,
}

/// True when `assignment` gives adjacent vertices of `g` distinct colours.
pub fn is_proper_coloring(g: &Graph, assignment: &[usize]) -> bool {
    assignment.len() == g.order() && g.edges().all(|(u, v)| assignment[u] != assignment[v])
}

/// Exact clique number by bit-parallel branch and bound.
pub fn max_clique_size(g: &Graph) -> usize {
    fn expand(g: &Graph, candidates: u64, size: usize, best: &mut usize) {
        if candidates == 0 {
            *best = (*best).max(size);
            return;
        }
        let mut rest = candidates;
        while rest != 0 {
            if size + rest.count_ones() as usize <= *best {
                return;
            }
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            expand(g, rest & g.neighbors(v), size + 1, best);
        }
    }

    let mut best = 0;
    expand(g, crate::graph::low_mask(g.order()), 0, &mut best);
    best
}

/// First-fit colouring in index order.
pub fn greedy_coloring(g: &Graph) -> ColoringResult {
    let n = g.order();
    let mut assignment = vec![0usize; n];
    let mut value = 0;
    for v in 0..n {
        let mut used = 0u64;
        for w in BitIter(g.neighbors(v) & crate::graph::low_mask(v)) {
            used |= 1 << (assignment[w] - 1);
        }
        let c = (!used).trailing_zeros() as usize + 1;
        assignment[v] = c;
        value = value.max(c);
    }
    ColoringResult { value, assignment }
}

/// Number of colours used by [`greedy_coloring`].
pub fn greedy_upper_bound(g: &Graph) -> usize {
    greedy_coloring(g).value
}

struct Dsatur<'a> {
    g: &'a Graph,
    colors: Vec<usize>,
    lower: usize,
    best: usize,
    best_colors: Vec<usize>,
}

impl Dsatur<'_> {
    fn forbidden(&self, v: usize) -> u64 {
        let mut mask = 0u64;
        for w in BitIter(self.g.neighbors(v)) {
            let c = self.colors[w];
            if c != 0 {
                mask |= 1 << (c - 1);
            }
        }
        mask
    }

    fn search(&mut self, colored: usize, used: usize) {
        let n = self.g.order();
        if colored == n {
            if used < self.best {
                self.best = used;
                self.best_colors.clone_from(&self.colors);
            }
            return;
        }

        // Highest saturation first, lowest index on ties.
        let mut pick = usize::MAX;
        let mut pick_forbidden = 0u64;
        let mut pick_sat = -1i32;
        for v in 0..n {
            if self.colors[v] != 0 {
                continue;
            }
            let forbidden = self.forbidden(v);
            let sat = forbidden.count_ones() as i32;
            if sat > pick_sat {
                pick = v;
                pick_sat = sat;
                pick_forbidden = forbidden;
            }
        }

        for c in 1..=used + 1 {
            // A colouring that needs `best` colours cannot improve the incumbent.
            if c >= self.best || self.best <= self.lower {
                break;
            }
            if pick_forbidden & (1 << (c - 1)) != 0 {
                continue;
            }
            self.colors[pick] = c;
            self.search(colored + 1, used.max(c));
            self.colors[pick] = 0;
        }
    }
}

/// Exact chromatic number with an optimal colouring certificate.
///
/// Deterministic for a fixed graph: the clique bound and first-fit colouring
/// seed a DSATUR search that tries colours in ascending order.
pub fn chromatic_number(g: &Graph) -> ColoringResult {
    let n = g.order();
    if n == 0 {
        return ColoringResult {
            value: 0,
            assignment: Vec::new(),
        };
    }
    let greedy = greedy_coloring(g);
    let lower = max_clique_size(g);
    if lower == greedy.value {
        return greedy;
    }
    let mut state = Dsatur {
        g,
        colors: vec![0; n],
        lower,
        best: greedy.value,
        best_colors: greedy.assignment,
    };
    state.search(0, 0);
    ColoringResult {
        value: state.best,
        assignment: state.best_colors,
    }
}

/// Exact value of the requested chromatic variant.
pub fn variant_chromatic(g: &Graph, kind: VariantKind) -> ColoringResult {
    match kind.derived_kind() {
        None => chromatic_number(g),
        Some(d) => chromatic_number(&g.derived(d)),
    }
}

/// Exact L(p, q)-labelling number λ(G; p, q).
///
/// Tries `k = (ω - 1)·p, …` in turn and returns the first span admitting a
/// labelling, found by depth-first search in vertex order with forward
/// checking. Order 0 gives value 0 with an empty labelling.
pub fn lpq_number(g: &Graph, p: usize, q: usize) -> LabelingResult {
    let n = g.order();
    if n == 0 {
        return LabelingResult {
            value: 0,
            labeling: Vec::new(),
        };
    }
    let dist = g.distance_matrix();
    let separation: Vec<usize> = (0..n * n)
        .map(|i| match dist.get(i / n, i % n) {
            Some(1) => p,
            Some(2) => q,
            _ => 0,
        })
        .collect();
    let mut span = if p >= 1 {
        (max_clique_size(g) - 1) * p
    } else {
        0
    };
    loop {
        let mut search = LabelSearch {
            n,
            span,
            separation: &separation,
            labels: vec![None; n],
        };
        if search.assign(0) {
            let labeling: Vec<usize> = search.labels.into_iter().map(Option::unwrap).collect();
            debug_assert_eq!(labeling.iter().copied().max(), Some(span));
            return LabelingResult {
                value: span,
                labeling,
            };
        }
        span += 1;
    }
}

struct LabelSearch<'a> {
    n: usize,
    span: usize,
    separation: &'a [usize],
    labels: Vec<Option<usize>>,
}

impl LabelSearch<'_> {
    fn fits(&self, v: usize, label: usize) -> bool {
        (0..self.n).all(|w| match self.labels[w] {
            Some(other) if w != v => label.abs_diff(other) >= self.separation[v * self.n + w],
            _ => true,
        })
    }

    fn assign(&mut self, v: usize) -> bool {
        if v == self.n {
            return true;
        }
        for label in 0..=self.span {
            if !self.fits(v, label) {
                continue;
            }
            self.labels[v] = Some(label);
            let alive = (v + 1..self.n).all(|w| {
                self.separation[v * self.n + w] == 0 || (0..=self.span).any(|l| self.fits(w, l))
            });
            if alive && self.assign(v + 1) {
                return true;
            }
            self.labels[v] = None;
        }
        false
    }
}
