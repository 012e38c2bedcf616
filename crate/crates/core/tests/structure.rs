use std::collections::HashSet;

use foldlift::schubert::{diagonal_value, expand_in_basis, recombine, schubert_class, schubert_value};
use foldlift::{CoxeterGroup, FoldingData, FoldingId, GroupElement, MomentGraph, Parabolic, RootDatum, Word};

fn simply_laced(name: &str) -> CoxeterGroup {
    CoxeterGroup::new(RootDatum::simply_laced_type(name).unwrap()).unwrap()
}

fn folded(id: FoldingId) -> CoxeterGroup {
    FoldingData::build(id).unwrap().folded().clone()
}

/// All products of subwords of one reduced word of `w`.
fn subword_products(g: &CoxeterGroup, w: &GroupElement) -> HashSet<GroupElement> {
    let word = g.lex_least_word(w);
    let n = word.len();
    (0u32..1 << n)
        .map(|mask| {
            let letters = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| word.letters()[i]).collect();
            g.element_of(&Word(letters)).unwrap()
        })
        .collect()
}

#[test]
fn bruhat_matches_subword_oracle() {
    for g in [simply_laced("A3"), folded(FoldingId::AC(2))] {
        let all = g.enumerate_quotient(Parabolic::empty()).unwrap();
        for w in &all {
            let below = subword_products(&g, w);
            for u in &all {
                assert_eq!(g.bruhat_leq(u, w), below.contains(u));
            }
        }
    }
}

#[test]
fn group_orders() {
    let cases = [
        (simply_laced("A2"), 6),
        (simply_laced("A3"), 24),
        (simply_laced("A4"), 120),
        (folded(FoldingId::AC(2)), 8),
        (folded(FoldingId::A4H2), 10),
        (folded(FoldingId::D6H3), 120),
        (folded(FoldingId::E6F4), 1152),
    ];
    for (g, n) in cases {
        assert_eq!(g.enumerate_quotient(Parabolic::empty()).unwrap().len(), n, "{}", g.datum().name());
    }
}

#[test]
fn root_sets_are_stable() {
    for g in [simply_laced("D5"), folded(FoldingId::E6F4), folded(FoldingId::E8H4)] {
        let roots = g.positive_roots();
        for a in roots {
            for j in 0..g.rank() {
                let b = g.datum().simple_reflect_golden(j, a);
                let neg: Vec<_> = b.iter().map(|&c| -c).collect();
                assert!(g.root_index(&b).is_some() || g.root_index(&neg).is_some());
            }
        }
    }
}

#[test]
fn catalog_invariants_hold() {
    for id in FoldingId::CATALOG {
        let fd = FoldingData::build(id).unwrap();
        for c in fd.invariant_checks() {
            assert!(c.passed, "{id}: {}", c.name);
        }
    }
}

#[test]
fn moment_graph_is_bruhat_graph() {
    for g in [simply_laced("A3"), folded(FoldingId::D6H3)] {
        let m = MomentGraph::build(&g, Parabolic::empty()).unwrap();
        let mut seen = HashSet::new();
        for e in m.edges() {
            assert!(seen.insert((e.source, e.target, e.root)));
        }
        let edges: HashSet<(usize, usize)> = m.edges().iter().map(|e| (e.source, e.target)).collect();
        for (i, w) in m.vertices().iter().enumerate() {
            for k in 0..g.positive_roots().len() {
                let v = g.mul(g.reflection(k), w);
                let j = m.vertex_index(&v).unwrap();
                assert_eq!(edges.contains(&(i, j)), w.length() < v.length());
            }
            let indeg = m.edges().iter().filter(|e| e.target == i).count();
            assert_eq!(indeg, w.length());
        }
    }
}

#[test]
fn schubert_values_are_expression_independent() {
    for g in [simply_laced("A2"), folded(FoldingId::AC(2))] {
        let all = g.enumerate_quotient(Parabolic::empty()).unwrap();
        for w in &all {
            for x in &all {
                let words = g.reduced_words(x).unwrap();
                let first = schubert_value(&g, w, words.iter().next().unwrap());
                for word in &words {
                    assert_eq!(schubert_value(&g, w, word), first);
                }
                let mut padded = words.iter().next().unwrap().clone();
                padded.0.extend([0, 0]);
                assert_eq!(schubert_value(&g, w, &padded), first);
            }
        }
    }
}

#[test]
fn schubert_support_degree_and_diagonal() {
    for g in [simply_laced("A3"), folded(FoldingId::AC(2))] {
        let m = MomentGraph::build(&g, Parabolic::empty()).unwrap();
        for w in m.vertices() {
            let y = schubert_class(&g, w, &m).unwrap();
            assert!(y.verify_membership());
            for (x, v) in m.vertices().iter().zip(y.values()) {
                assert_eq!(!v.is_zero(), g.bruhat_leq(w, x));
                if !v.is_zero() {
                    assert_eq!(v.degree(), Some(w.length()));
                    assert!(v.is_homogeneous());
                }
            }
            assert_eq!(y.value_at(w).unwrap(), &diagonal_value(&g, w));
        }
    }
}

#[test]
fn schubert_coset_invariance() {
    let g = simply_laced("A3");
    let p = Parabolic::from_one_based(&[1]);
    let m = MomentGraph::build(&g, Parabolic::empty()).unwrap();
    let s1 = g.simple(0);
    for w in g.enumerate_quotient(p).unwrap() {
        let y = schubert_class(&g, &w, &m).unwrap();
        for x in m.vertices() {
            let xy = g.mul(x, &s1);
            assert_eq!(y.value_at(x), y.value_at(&xy));
        }
    }
}

#[test]
fn expansion_round_trip() {
    let g = folded(FoldingId::A4H2);
    let m = MomentGraph::build(&g, Parabolic::empty()).unwrap();
    let a = schubert_class(&g, &g.simple(0), &m).unwrap();
    let b = schubert_class(&g, &g.simple(1), &m).unwrap();
    let xi = a.mul(&b).add(&a);
    let coeffs = expand_in_basis(&g, &xi).unwrap();
    assert_eq!(recombine(&g, &m, &coeffs).unwrap().values(), xi.values());
}

#[test]
fn folded_classes_are_members() {
    for (id, p) in [(FoldingId::A4H2, Parabolic::empty()), (FoldingId::AC(2), Parabolic::empty())] {
        let fd = FoldingData::build(id).unwrap();
        let big = MomentGraph::build(fd.original(), p).unwrap();
        let small = MomentGraph::build(fd.folded(), fd.folded_parabolic(p).unwrap()).unwrap();
        for w in big.vertices() {
            let y = schubert_class(fd.original(), w, &big).unwrap();
            assert!(fd.fold_class(&y, &small).unwrap().verify_membership(), "{id}");
        }
    }
}
