use ngcolor::verify::{check_theorems, evaluate_graph, CheckId, ParameterProfile, Side};
use ngcolor::{build, FamilySpec, Graph, VariantKind};

fn profile(spec: FamilySpec) -> ParameterProfile {
    evaluate_graph(&build(&spec).unwrap())
}

fn values(p: &ParameterProfile) -> [usize; 8] {
    let g = &p.graph;
    let c = &p.complement;
    [
        g.chi,
        g.chi2,
        g.chi_injective,
        g.chi_square,
        c.chi,
        c.chi2,
        c.chi_injective,
        c.chi_square,
    ]
}

fn assert_extremal(spec: FamilySpec, id: CheckId, side: Side) {
    let report = check_theorems(&profile(spec.clone()));
    let r = report.get(id, side).unwrap();
    assert!(r.applicable && r.holds && r.extremal, "{spec}: {r:?}");
    assert!(report.all_hold(), "{spec}");
}

#[test]
fn h_family_two_proper_golden_values() {
    // (spec, χ₂(H), χ₂(H̄)) computed by the exact solver.
    let golden = [
        (FamilySpec::HOdd(6), 7, 7),
        (FamilySpec::HEven(6), 8, 7),
        (FamilySpec::HOdd(7), 8, 8),
        (FamilySpec::HEven(7), 9, 8),
    ];
    for (spec, g, c) in golden {
        let p = profile(spec.clone());
        assert_eq!((p.graph.chi2, p.complement.chi2), (g, c), "{spec}");
        assert_eq!(p.sum(VariantKind::TwoProper), p.order + 1, "{spec}");
    }
}

#[test]
fn h_graph_even_k_is_self_complementary_in_profile() {
    for k in [6, 8] {
        let p = profile(FamilySpec::HGraph(k));
        let v = values(&p);
        assert_eq!(v[..4], v[4..], "k={k}");
    }
}

/// The complement of `H_k` described directly: `X` a clique, `Y` independent,
/// `y_i` joined to `x_i, …, x_{i+⌈k/2⌉}` except `x_{i+⌈k/2⌉-1}`.
fn h_complement_alternative(k: usize) -> Graph {
    let half = k.div_ceil(2);
    let mut edges: Vec<(usize, usize)> = Graph::pairs(k).collect();
    for i in 0..k {
        for t in (0..=half).filter(|&t| t != half - 1) {
            edges.push((k + i, (i + t) % k));
        }
    }
    Graph::from_edges(2 * k, edges).unwrap()
}

#[test]
fn h_graph_complement_matches_alternative_description() {
    for k in 6..=9 {
        let complement = build(&FamilySpec::HGraph(k)).unwrap().complement();
        let alt = h_complement_alternative(k);
        let mut a = complement.degree_stats().degrees;
        let mut b = alt.degree_stats().degrees;
        a.sort_unstable();
        b.sort_unstable();
        assert_eq!(a, b, "k={k}");
        assert_eq!(
            values(&evaluate_graph(&complement)),
            values(&evaluate_graph(&alt)),
            "k={k}"
        );
        if k % 2 == 1 {
            // Odd k: the independent side is pairwise at distance two.
            let d = alt.distance_matrix();
            for i in k..2 * k {
                for j in k..2 * k {
                    if i != j {
                        assert_eq!(d.get(i, j), Some(2));
                    }
                }
            }
        }
    }
}

#[test]
fn g_injective_profiles() {
    for n in 9..=11 {
        let p = profile(FamilySpec::GInjective(n));
        assert_eq!((p.graph.chi_injective, p.complement.chi_injective), (n, n));
        assert_eq!(p.product(VariantKind::Injective), n * n);
    }
}

#[test]
fn f_square_profiles() {
    for n in 5..=9 {
        let p = profile(FamilySpec::FSquare(n));
        assert_eq!((p.graph.chi_square, p.complement.chi_square), (n, n));
        assert_eq!(p.product(VariantKind::Square), n * n);
    }
}

#[test]
fn constructed_families_are_flagged_extremal() {
    for k in [6, 7] {
        assert_extremal(FamilySpec::HOdd(k), CheckId::TwoPropSum, Side::Upper);
        assert_extremal(FamilySpec::HEven(k), CheckId::TwoPropSum, Side::Upper);
    }
    for n in 9..=11 {
        assert_extremal(FamilySpec::GInjective(n), CheckId::InjSum, Side::Upper);
        assert_extremal(FamilySpec::GInjective(n), CheckId::InjProd, Side::Upper);
    }
    for n in 5..=9 {
        assert_extremal(FamilySpec::FSquare(n), CheckId::SqSum, Side::Upper);
        assert_extremal(FamilySpec::FSquare(n), CheckId::SqProd, Side::Upper);
    }
    for n in 3..=8 {
        assert_extremal(FamilySpec::Complete(n), CheckId::SqSum, Side::Lower);
        assert_extremal(FamilySpec::Complete(n), CheckId::SqProd, Side::Lower);
        assert_extremal(FamilySpec::Complete(n), CheckId::TwoPropSum, Side::Lower);
        assert_extremal(FamilySpec::Complete(n), CheckId::InjProd, Side::Lower);
    }
}

#[test]
fn injective_lower_bound_sharpness() {
    assert_extremal(FamilySpec::Path(5), CheckId::InjSum, Side::Lower);
    assert_eq!(profile(FamilySpec::Path(5)).sum(VariantKind::Injective), 5);
    for k in 3..=5 {
        assert_extremal(
            FamilySpec::CompleteBipartite(k, k),
            CheckId::InjSum,
            Side::Lower,
        );
        let p = profile(FamilySpec::CompleteBipartite(k + 1, k));
        assert_eq!(p.sum(VariantKind::Injective), 2 * k + 2);
        assert_extremal(
            FamilySpec::CompleteBipartite(k + 1, k),
            CheckId::InjSum,
            Side::Lower,
        );
    }
}

#[test]
fn small_order_injective_upper_bound_is_strict() {
    // Injective sum reaches 2n only from order 9; the first g-injective member.
    for n in 9..=10 {
        let r = check_theorems(&profile(FamilySpec::GInjective(n)));
        assert!(
            !r.get(CheckId::InjSumStrict, Side::Upper)
                .unwrap()
                .applicable
        );
    }
}
