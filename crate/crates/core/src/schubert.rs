//! Combinatorial Schubert classes on moment graphs.

use alloc::vec;
use alloc::vec::Vec;

use hashbrown::HashMap;

use crate::coxeter::{CoxeterGroup, GroupElement, Word};
use crate::error::Error;
use crate::momentgraph::MomentGraph;
use crate::poly::Poly;
use crate::Result;

/// A tuple of polynomials indexed by the vertices of a moment graph.
#[derive(Debug, Clone)]
pub struct StructClass<'g> {
    graph: &'g MomentGraph,
    values: Vec<Poly>,
    degree: Option<usize>,
}

impl<'g> StructClass<'g> {
    pub fn new(graph: &'g MomentGraph, values: Vec<Poly>) -> Self {
        assert_eq!(values.len(), graph.len());
        let mut degs = values.iter().filter_map(Poly::degree);
        let first = degs.next();
        let homogeneous = values.iter().all(Poly::is_homogeneous) && degs.all(|d| Some(d) == first);
        StructClass { graph, values, degree: if homogeneous { first } else { None } }
    }

    pub fn graph(&self) -> &'g MomentGraph {
        self.graph
    }

    pub fn values(&self) -> &[Poly] {
        &self.values
    }

    pub fn value_at(&self, w: &GroupElement) -> Option<&Poly> {
        self.graph.vertex_index(w).map(|i| &self.values[i])
    }

    /// Common degree of the nonzero coordinates when all are homogeneous.
    pub fn degree(&self) -> Option<usize> {
        self.degree
    }

    pub fn constant(graph: &'g MomentGraph, c: &Poly) -> Self {
        StructClass::new(graph, vec![c.clone(); graph.len()])
    }

    pub fn add(&self, other: &StructClass<'g>) -> StructClass<'g> {
        StructClass::new(self.graph, self.values.iter().zip(&other.values).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &StructClass<'g>) -> StructClass<'g> {
        StructClass::new(self.graph, self.values.iter().zip(&other.values).map(|(a, b)| a - b).collect())
    }

    /// Pointwise product.
    pub fn mul(&self, other: &StructClass<'g>) -> StructClass<'g> {
        StructClass::new(self.graph, self.values.iter().zip(&other.values).map(|(a, b)| a * b).collect())
    }

    pub fn scale(&self, f: &Poly) -> StructClass<'g> {
        StructClass::new(self.graph, self.values.iter().map(|a| a * f).collect())
    }

    /// Every edge `w -> w'` satisfies `z_w - z_w'` divisible by its label.
    pub fn verify_membership(&self) -> bool {
        self.graph.edges().iter().all(|e| {
            let d = &self.values[e.source] - &self.values[e.target];
            d.divisible_by_linear(&self.graph.label(e)).unwrap_or(false)
        })
    }
}

/// `Y_w(x)` by the subword sum over positions of `x_word` whose letters
/// multiply to `w`. Kept as the reference path.
pub fn schubert_value(group: &CoxeterGroup, w: &GroupElement, x_word: &Word) -> Poly {
    let n = group.rank();
    let ring = group.datum().ring();
    // beta_k = s_{x_1} .. s_{x_{k-1}} (alpha_{x_k})
    let mut betas = Vec::with_capacity(x_word.len());
    let mut prefix = group.identity();
    for &l in x_word.letters() {
        betas.push(Poly::linear_golden(ring, &prefix.column(l as usize)));
        prefix = group.mul_simple_right(&prefix, l as usize);
    }
    let mut total = Poly::zero(ring, n);
    let mut stack = vec![(0usize, w.clone(), Poly::one(ring, n))];
    while let Some((pos, z, acc)) = stack.pop() {
        if z.is_identity() {
            total = &total + &acc;
            continue;
        }
        if x_word.len() - pos < z.length() {
            continue;
        }
        // Skip position `pos`.
        stack.push((pos + 1, z.clone(), acc.clone()));
        let s = x_word.letters()[pos] as usize;
        if group.is_left_descent(&z, s) {
            stack.push((pos + 1, group.mul_simple_left(s, &z), &acc * &betas[pos]));
        }
    }
    total
}

/// Dynamic program for `Y_v(x)` over all `v` obtained from `w` by stripping
/// right descents, following `Y_v(xs) = Y_v(x) + x(alpha_s) Y_{vs}(x)` when
/// `vs < v`.
#[derive(Debug, Clone)]
pub struct SchubertDp {
    ideal: Vec<GroupElement>,
    down: Vec<Vec<Option<usize>>>,
    identity: usize,
}

impl SchubertDp {
    pub fn new(group: &CoxeterGroup, w: &GroupElement) -> Self {
        let n = group.rank();
        let mut index: HashMap<GroupElement, usize> = HashMap::new();
        let mut ideal = vec![w.clone()];
        index.insert(w.clone(), 0);
        let mut down: Vec<Vec<Option<usize>>> = Vec::new();
        let mut i = 0;
        while i < ideal.len() {
            let v = ideal[i].clone();
            let mut row = vec![None; n];
            for (s, slot) in row.iter_mut().enumerate() {
                if group.is_right_descent(&v, s) {
                    let vs = group.mul_simple_right(&v, s);
                    let j = *index.entry(vs.clone()).or_insert_with(|| {
                        ideal.push(vs);
                        ideal.len() - 1
                    });
                    *slot = Some(j);
                }
            }
            down.push(row);
            i += 1;
        }
        let identity = ideal.iter().position(GroupElement::is_identity).expect("identity lies below w");
        SchubertDp { ideal, down, identity }
    }

    pub fn evaluate(&self, group: &CoxeterGroup, x_word: &Word) -> Poly {
        let n = group.rank();
        let ring = group.datum().ring();
        let mut vals: Vec<Poly> = vec![Poly::zero(ring, n); self.ideal.len()];
        vals[self.identity] = Poly::one(ring, n);
        // Ideal members are discovered in non-increasing length order, so
        // updating in index order reads each Y_{vs} before it changes.
        let mut x = group.identity();
        for &l in x_word.letters() {
            let s = l as usize;
            let xa = Poly::linear_golden(ring, &x.column(s));
            for v in 0..self.ideal.len() {
                if let Some(vs) = self.down[v][s] {
                    if !vals[vs].is_zero() {
                        let add = &xa * &vals[vs];
                        vals[v] = &vals[v] + &add;
                    }
                }
            }
            x = group.mul_simple_right(&x, s);
        }
        vals.swap_remove(0)
    }
}

/// `Y_w` on every vertex of `graph`.
pub fn schubert_class<'g>(group: &CoxeterGroup, w: &GroupElement, graph: &'g MomentGraph) -> Result<StructClass<'g>> {
    if !group.is_min_coset_rep(w, graph.parabolic()) {
        return Err(Error::NotInQuotient);
    }
    let dp = SchubertDp::new(group, w);
    let values = graph.words().iter().map(|x| dp.evaluate(group, x)).collect();
    Ok(StructClass::new(graph, values))
}

/// `Y_w(w)` as the product of the roots `b > 0` with `w^{-1}(b) < 0`.
pub fn diagonal_value(group: &CoxeterGroup, w: &GroupElement) -> Poly {
    let ring = group.datum().ring();
    let n = group.rank();
    group
        .inversion_roots(w)
        .into_iter()
        .fold(Poly::one(ring, n), |acc, k| &acc * &Poly::linear_golden(ring, &group.positive_roots()[k]))
}

/// Coefficients `c_w` with `xi = sum c_w Y_w`, in vertex order. Vertices with
/// zero coefficient are omitted.
pub fn expand_in_basis(group: &CoxeterGroup, xi: &StructClass<'_>) -> Result<Vec<(usize, Poly)>> {
    let graph = xi.graph();
    let mut residual = xi.values().to_vec();
    let mut out = Vec::new();
    for (i, w) in graph.vertices().iter().enumerate() {
        if residual[i].is_zero() {
            continue;
        }
        let mut c = residual[i].clone();
        for k in group.inversion_roots(w) {
            let l = Poly::linear_golden(group.datum().ring(), &group.positive_roots()[k]);
            c = c.div_exact_linear(&l)?.ok_or(Error::NotInSpan)?;
        }
        let y = schubert_class(group, w, graph)?;
        for (r, yv) in residual.iter_mut().zip(y.values()) {
            if !yv.is_zero() {
                *r = &*r - &(&c * yv);
            }
        }
        debug_assert!(residual[i].is_zero());
        out.push((i, c));
    }
    Ok(out)
}

/// `sum c_w Y_w` for coefficients from [`expand_in_basis`].
pub fn recombine<'g>(
    group: &CoxeterGroup,
    graph: &'g MomentGraph,
    coeffs: &[(usize, Poly)],
) -> Result<StructClass<'g>> {
    let ring = group.datum().ring();
    let mut acc = StructClass::constant(graph, &Poly::zero(ring, group.rank()));
    for (i, c) in coeffs {
        acc = acc.add(&schubert_class(group, &graph.vertices()[*i], graph)?.scale(c));
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::Parabolic;
    use crate::qring::QuadraticRing;
    use crate::rootsys::RootDatum;

    fn a2() -> CoxeterGroup {
        CoxeterGroup::new(RootDatum::simply_laced_type("A2").unwrap()).unwrap()
    }

    fn el(g: &CoxeterGroup, s: &str) -> GroupElement {
        g.element_of(&Word::parse(s, g.rank()).unwrap()).unwrap()
    }

    fn a(i: usize) -> Poly {
        Poly::var(QuadraticRing::SPLIT, 2, i - 1)
    }

    #[test]
    fn values_from_subwords() {
        let g = a2();
        let w = Word::parse("21", 2).unwrap();
        assert_eq!(schubert_value(&g, &el(&g, "1"), &w), &a(1) + &a(2));
        assert_eq!(schubert_value(&g, &g.identity(), &w), Poly::one(QuadraticRing::SPLIT, 2));
        let top = Word::parse("121", 2).unwrap();
        assert_eq!(schubert_value(&g, &el(&g, "121"), &top), &(&a(1) * &a(2)) * &(&a(1) + &a(2)));
    }

    #[test]
    fn class_of_s2s1() {
        let g = a2();
        let m = MomentGraph::build(&g, Parabolic::empty()).unwrap();
        let y = schubert_class(&g, &el(&g, "21"), &m).unwrap();
        let v = &a(2) * &(&a(1) + &a(2));
        for (i, w) in m.words().iter().enumerate() {
            let expect = match w.render(2).as_str() {
                "21" | "121" => v.clone(),
                _ => Poly::zero(QuadraticRing::SPLIT, 2),
            };
            assert_eq!(y.values()[i], expect, "vertex {w}");
        }
        assert_eq!(y.degree(), Some(2));
        assert!(y.verify_membership());
    }

    #[test]
    fn identity_class_is_constant() {
        let g = a2();
        let m = MomentGraph::build(&g, Parabolic::empty()).unwrap();
        let y = schubert_class(&g, &g.identity(), &m).unwrap();
        assert!(y.values().iter().all(|v| *v == Poly::one(QuadraticRing::SPLIT, 2)));
    }

    #[test]
    fn top_indicator_fails_membership() {
        let g = a2();
        let m = MomentGraph::build(&g, Parabolic::empty()).unwrap();
        let mut vals = vec![Poly::zero(QuadraticRing::SPLIT, 2); 6];
        vals[5] = Poly::one(QuadraticRing::SPLIT, 2);
        assert!(!StructClass::new(&m, vals).verify_membership());
        assert!(StructClass::constant(&m, &a(1)).verify_membership());
    }

    #[test]
    fn not_in_quotient() {
        let g = a2();
        let m = MomentGraph::build(&g, Parabolic::from_one_based(&[1])).unwrap();
        assert!(matches!(schubert_class(&g, &el(&g, "1"), &m), Err(Error::NotInQuotient)));
    }

    #[test]
    fn expansion_examples() {
        let g = a2();
        let m = MomentGraph::build(&g, Parabolic::empty()).unwrap();
        let y1 = schubert_class(&g, &el(&g, "1"), &m).unwrap();
        let e = expand_in_basis(&g, &y1).unwrap();
        assert_eq!(e.len(), 1);
        assert_eq!(m.vertices()[e[0].0], el(&g, "1"));
        assert_eq!(e[0].1, Poly::one(QuadraticRing::SPLIT, 2));

        let xi = StructClass::constant(&m, &a(1));
        let e = expand_in_basis(&g, &xi).unwrap();
        assert_eq!(e, vec![(0, a(1))]);

        let y2 = schubert_class(&g, &el(&g, "2"), &m).unwrap();
        let prod = y1.mul(&y2);
        let e = expand_in_basis(&g, &prod).unwrap();
        assert!(e.iter().all(|(i, _)| *i != 0));
        let back = recombine(&g, &m, &e).unwrap();
        assert_eq!(back.values(), prod.values());
    }
}
