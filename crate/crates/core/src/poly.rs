//! Sparse multivariate polynomials over `L` in the simple-root variables.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::ops::{Add, Mul, Neg, Sub};

use hashbrown::HashMap;
use num_traits::Zero;

use crate::coxeter::GroupElement;
use crate::error::Error;
use crate::qring::{GoldenInt, QElem, QuadraticRing};
use crate::Result;

pub type Monomial = Vec<u16>;

#[derive(Debug, Clone)]
pub struct Poly {
    ring: QuadraticRing,
    nvars: usize,
    terms: BTreeMap<Monomial, QElem>,
}

impl PartialEq for Poly {
    fn eq(&self, other: &Self) -> bool {
        self.nvars == other.nvars && self.terms == other.terms
    }
}

impl Eq for Poly {}

impl Poly {
    pub fn zero(ring: QuadraticRing, nvars: usize) -> Self {
        Poly { ring, nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: QElem) -> Self {
        let mut p = Poly::zero(c.ring(), nvars);
        if !c.is_zero() {
            p.terms.insert(vec![0; nvars], c);
        }
        p
    }

    pub fn one(ring: QuadraticRing, nvars: usize) -> Self {
        Poly::constant(nvars, ring.one())
    }

    pub fn var(ring: QuadraticRing, nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        let mut p = Poly::zero(ring, nvars);
        p.terms.insert(e, ring.one());
        p
    }

    /// The linear form `sum_i c_i x_i`.
    pub fn linear(ring: QuadraticRing, coords: &[QElem]) -> Self {
        let n = coords.len();
        let mut p = Poly::zero(ring, n);
        for (i, c) in coords.iter().enumerate() {
            if !c.is_zero() {
                let mut e = vec![0; n];
                e[i] = 1;
                p.terms.insert(e, c.clone());
            }
        }
        p
    }

    pub fn linear_golden(ring: QuadraticRing, coords: &[GoldenInt]) -> Self {
        let q: Vec<QElem> = coords.iter().map(|c| c.to_qelem(ring)).collect();
        Poly::linear(ring, &q)
    }

    pub fn ring(&self) -> QuadraticRing {
        self.ring
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &QElem)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Total degree of the leading part; `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(|e| e.iter().map(|&x| x as usize).sum()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|e| e.iter().map(|&x| x as usize).sum::<usize>());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|x| x == d),
        }
    }

    /// The coefficient of the constant monomial.
    pub fn constant_term(&self) -> QElem {
        self.terms.get(&vec![0; self.nvars]).cloned().unwrap_or_else(|| self.ring.zero())
    }

    fn add_term(&mut self, e: Monomial, c: QElem) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(x) => {
                *x += &c;
                if x.is_zero() {
                    self.terms.remove(&e);
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    pub fn scale(&self, c: &QElem) -> Poly {
        let mut p = Poly::zero(self.ring, self.nvars);
        if c.is_zero() {
            return p;
        }
        for (e, x) in &self.terms {
            let y = x * c;
            if !y.is_zero() {
                p.terms.insert(e.clone(), y);
            }
        }
        p
    }

    pub fn pow(&self, k: u32) -> Poly {
        let mut acc = Poly::one(self.ring, self.nvars);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Ring map sending `x_i` to `images[i]`; all images share one variable
    /// count.
    pub fn substitute(&self, images: &[Poly]) -> Poly {
        debug_assert_eq!(images.len(), self.nvars);
        let m = images.first().map(|p| p.nvars).unwrap_or(0);
        let mut powers: HashMap<(usize, u16), Poly> = HashMap::new();
        let mut out = Poly::zero(self.ring, m);
        for (e, c) in &self.terms {
            let mut term = Poly::constant(m, c.clone());
            for (i, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                let pw = powers.entry((i, k)).or_insert_with(|| images[i].pow(k as u32));
                term = &term * pw;
            }
            out = &out + &term;
        }
        out
    }

    /// Ring map sending each variable to a scalar multiple of a single
    /// target variable: `x_i -> coeffs[i] * y_{targets[i]}`.
    pub fn monomial_map(&self, targets: &[usize], coeffs: &[QElem], m: usize) -> Poly {
        let ring = coeffs.iter().find(|c| !c.is_rational()).map(|c| c.ring()).unwrap_or(self.ring);
        let mut out = Poly::zero(ring, m);
        for (e, c) in &self.terms {
            let mut ne = vec![0u16; m];
            let mut coef = c.clone();
            for (i, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                ne[targets[i]] += k;
                coef = &coef * &coeffs[i].pow(k as u32);
            }
            out.add_term(ne, coef);
        }
        out
    }

    /// Action of a group element: `x_j -> w(alpha_j) = sum_i M_ij x_i`.
    pub fn act(&self, w: &GroupElement) -> Poly {
        let n = self.nvars;
        let images: Vec<Poly> = (0..n).map(|j| Poly::linear_golden(self.ring, &w.column(j))).collect();
        self.substitute(&images)
    }

    /// Pick a variable whose coefficient in the linear form `l` is a unit.
    fn unit_variable(l: &Poly) -> Result<(usize, QElem)> {
        if l.is_zero() || l.degree() != Some(1) || !l.is_homogeneous() {
            return Err(Error::NoUnitCoefficient);
        }
        for (e, c) in &l.terms {
            if c.is_unit() {
                let k = e.iter().position(|&x| x == 1).expect("linear monomial");
                return Ok((k, c.clone()));
            }
        }
        Err(Error::NoUnitCoefficient)
    }

    /// `f` is divisible by the linear form `l`: solve `l = 0` for a variable
    /// with invertible coefficient and check that `f` vanishes there.
    pub fn divisible_by_linear(&self, l: &Poly) -> Result<bool> {
        if self.is_zero() {
            return Ok(true);
        }
        let (k, c) = Poly::unit_variable(l)?;
        let minus_inv = -&c.invert()?;
        let mut rest = l.clone();
        rest.terms.retain(|e, _| e[k] == 0);
        let root = rest.scale(&minus_inv);
        // Horner in x_k on the coefficients of f as a polynomial in x_k.
        let coeffs = self.coefficients_in(k);
        let mut acc = Poly::zero(self.ring, self.nvars);
        for cd in coeffs.iter().rev() {
            acc = &(&acc * &root) + cd;
        }
        Ok(acc.is_zero())
    }

    /// Coefficients of `f` as a polynomial in `x_k`, lowest degree first.
    fn coefficients_in(&self, k: usize) -> Vec<Poly> {
        let top = self.terms.keys().map(|e| e[k]).max().unwrap_or(0) as usize;
        let mut coeffs: Vec<Poly> = vec![Poly::zero(self.ring, self.nvars); top + 1];
        for (e, x) in &self.terms {
            let mut ne = e.clone();
            let d = ne[k] as usize;
            ne[k] = 0;
            coeffs[d].add_term(ne, x.clone());
        }
        coeffs
    }

    /// Exact quotient `f / l` for a linear form `l`, or `None` if `l` does
    /// not divide `f`.
    pub fn div_exact_linear(&self, l: &Poly) -> Result<Option<Poly>> {
        let (k, c) = Poly::unit_variable(l)?;
        let c_inv = c.invert()?;
        let mut rest = l.clone();
        rest.terms.retain(|e, _| e[k] == 0);
        let mut coeffs = self.coefficients_in(k);
        let top = coeffs.len() - 1;
        let mut q = Poly::zero(self.ring, self.nvars);
        for d in (1..=top).rev() {
            let qd = coeffs[d].scale(&c_inv);
            coeffs[d - 1] = &coeffs[d - 1] - &(&qd * &rest);
            for (e, x) in qd.terms {
                let mut ne = e;
                ne[k] = (d - 1) as u16;
                q.add_term(ne, x);
            }
        }
        Ok(if coeffs[0].is_zero() { Some(q) } else { None })
    }

    /// Exact quotient by a constant.
    pub fn div_scalar(&self, c: &QElem) -> Result<Poly> {
        Ok(self.scale(&c.invert()?))
    }

    /// `Some(c)` when `self = c * other` for a scalar `c`.
    pub fn scalar_ratio(&self, other: &Poly) -> Result<Option<QElem>> {
        if other.is_zero() {
            return Ok(if self.is_zero() { Some(self.ring.zero()) } else { None });
        }
        let (e, d) = other.terms.iter().next().expect("nonzero");
        let n = self.terms.get(e).cloned().unwrap_or_else(|| self.ring.zero());
        let c = n.div(d)?;
        Ok(if other.scale(&c) == *self { Some(c) } else { None })
    }

    /// Render with variables `{prefix}1 .. {prefix}n`, highest degree first.
    pub fn render(&self, prefix: &str) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut keys: Vec<&Monomial> = self.terms.keys().collect();
        keys.sort_by(|a, b| {
            let da: u32 = a.iter().map(|&x| x as u32).sum();
            let db: u32 = b.iter().map(|&x| x as u32).sum();
            db.cmp(&da).then_with(|| b.cmp(a))
        });
        let multi = keys.len() > 1;
        let mut out = String::new();
        for (idx, e) in keys.iter().enumerate() {
            let c = &self.terms[*e];
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(i, &k)| if k == 1 { format!("{prefix}{}", i + 1) } else { format!("{prefix}{}^{k}", i + 1) })
                .collect();
            let mono = mono.join("*");
            let compound = !c.is_rational() && !c.a().is_zero();
            let cs = format!("{c}");
            let term = if mono.is_empty() {
                if compound && multi {
                    format!("({cs})")
                } else {
                    cs
                }
            } else if c.is_one() {
                mono
            } else if (-c).is_one() {
                format!("-{mono}")
            } else if compound {
                format!("({cs})*{mono}")
            } else {
                format!("{cs}*{mono}")
            };
            if idx == 0 {
                out.push_str(&term);
            } else if let Some(t) = term.strip_prefix('-') {
                out.push_str(" - ");
                out.push_str(t);
            } else {
                out.push_str(" + ");
                out.push_str(&term);
            }
        }
        out
    }

    /// Compare leading monomials; used only for deterministic ordering.
    pub fn cmp_support(&self, other: &Poly) -> Ordering {
        self.terms.keys().cmp(other.terms.keys())
    }
}

impl<'a> Add<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let mut p = self.clone();
        if p.terms.is_empty() {
            p.ring = rhs.ring;
        }
        for (e, c) in &rhs.terms {
            p.add_term(e.clone(), c.clone());
        }
        p
    }
}

impl<'a> Sub<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let mut p = self.clone();
        for (e, c) in &rhs.terms {
            p.add_term(e.clone(), -c);
        }
        p
    }
}

impl<'a> Mul<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        let ring = if self.ring.c1() != 0 { self.ring } else { rhs.ring };
        let mut p = Poly::zero(ring, self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                let e: Monomial = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                p.add_term(e, c1 * c2);
            }
        }
        p
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        self.scale(&QElem::from_int(self.ring, -1))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::{CoxeterGroup, Word};
    use crate::rootsys::RootDatum;

    const R: QuadraticRing = QuadraticRing::SPLIT;

    fn x(i: usize) -> Poly {
        Poly::var(R, 2, i)
    }

    #[test]
    fn act_examples() {
        let g = CoxeterGroup::new(RootDatum::simply_laced_type("A2").unwrap()).unwrap();
        let s1 = g.element_of(&Word::parse("1", 2).unwrap()).unwrap();
        assert_eq!(x(1).act(&s1), &x(0) + &x(1));
        let f = &x(0) * &x(1);
        assert_eq!(f.act(&s1), &(-&x(0)) * &(&x(0) + &x(1)));
        assert_eq!(f.act(&g.identity()), f);
    }

    #[test]
    fn divisibility_examples() {
        let l = &x(0) + &x(1);
        let f = &(&x(0) * &x(1)) + &(&x(1) * &x(1));
        assert!(f.divisible_by_linear(&l).unwrap());
        assert_eq!(f.div_exact_linear(&l).unwrap(), Some(x(1)));
        assert!(!x(0).divisible_by_linear(&x(1)).unwrap());
        assert_eq!(x(0).div_exact_linear(&x(1)).unwrap(), None);
        assert!(Poly::zero(R, 2).divisible_by_linear(&x(1)).unwrap());
    }

    #[test]
    fn no_unit_coefficient() {
        let l = Poly::linear(R, &[QElem::from_ints(R, 1, 1), QElem::from_ints(R, 1, -1)]);
        assert_eq!(x(0).divisible_by_linear(&l), Err(Error::NoUnitCoefficient));
    }

    #[test]
    fn rendering() {
        let f = &(&x(0) * &x(1)) + &(&x(1) * &x(1));
        assert_eq!(f.render("a"), "a1*a2 + a2^2");
        let g = &x(0) - &x(1).scale(&QElem::from_int(R, 2));
        assert_eq!(g.render("a"), "a1 - 2*a2");
        let h = Poly::var(QuadraticRing::GOLDEN, 1, 0).scale(&QElem::from_ints(QuadraticRing::GOLDEN, 1, 1));
        assert_eq!(h.render("b"), "(1+t)*b1");
        assert_eq!(Poly::one(R, 2).render("a"), "1");
    }
}
