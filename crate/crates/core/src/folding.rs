//! Twisted quadratic foldings: the operator `theta`, the folded root system,
//! the projection `pi_tau`, the embedding `iota` and the induced map on
//! structure-algebra classes.
//!
//! In the split case (`c1 = 0`) a fixed simple root `a` projects to a
//! `(1 - t)`-torsion vector, so Cartan numbers of the folded system cannot be
//! formed in `L`. The folded side is then evaluated at `t = 1`, which turns
//! `L` into `Q` and `pi_tau(theta a)` into `pi_tau(a)`.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_rational::BigRational;
use num_traits::Zero;

use crate::coxeter::{CoxeterGroup, GroupElement, Parabolic, Word};
use crate::error::Error;
use crate::momentgraph::MomentGraph;
use crate::poly::Poly;
use crate::qring::{QElem, QuadraticRing};
use crate::rootsys::{chain, d_edges, RootDatum, RootVector};
use crate::schubert::StructClass;
use crate::Result;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FoldingId {
    /// `A_{2n-1} -> C_n`.
    AC(usize),
    /// `D_{n+1} -> B_n`.
    DB(usize),
    E6F4,
    E8H4,
    D6H3,
    A4H2,
}

impl FoldingId {
    /// The eight named catalog instances.
    pub const CATALOG: [FoldingId; 8] = [
        FoldingId::AC(2),
        FoldingId::AC(3),
        FoldingId::DB(3),
        FoldingId::DB(4),
        FoldingId::E6F4,
        FoldingId::E8H4,
        FoldingId::D6H3,
        FoldingId::A4H2,
    ];

    pub fn c1(&self) -> i64 {
        match self {
            FoldingId::AC(_) | FoldingId::DB(_) | FoldingId::E6F4 => 0,
            _ => 1,
        }
    }

    pub fn original_name(&self) -> String {
        match self {
            FoldingId::AC(n) => format!("A{}", 2 * n - 1),
            FoldingId::DB(n) => format!("D{}", n + 1),
            FoldingId::E6F4 => "E6".into(),
            FoldingId::E8H4 => "E8".into(),
            FoldingId::D6H3 => "D6".into(),
            FoldingId::A4H2 => "A4".into(),
        }
    }

    pub fn folded_name(&self) -> String {
        match self {
            FoldingId::AC(n) => format!("C{n}"),
            FoldingId::DB(n) => format!("B{n}"),
            FoldingId::E6F4 => "F4".into(),
            FoldingId::E8H4 => "H4".into(),
            FoldingId::D6H3 => "H3".into(),
            FoldingId::A4H2 => "H2".into(),
        }
    }

    fn original_edges(&self) -> (usize, Vec<(usize, usize)>) {
        match *self {
            FoldingId::AC(n) => (2 * n - 1, chain(2 * n - 1)),
            FoldingId::DB(n) => (n + 1, d_edges(n + 1)),
            FoldingId::E6F4 => (6, vec![(1, 3), (3, 4), (4, 5), (5, 6), (2, 4)]),
            FoldingId::E8H4 => (8, vec![(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (5, 8)]),
            FoldingId::D6H3 => (6, d_edges(6)),
            FoldingId::A4H2 => (4, chain(4)),
        }
    }

    /// Folded generators in order, as 1-based original indices.
    fn fibres(&self) -> Vec<Fibre> {
        use Fibre::*;
        match *self {
            FoldingId::AC(n) => {
                let mut f: Vec<Fibre> = (1..n).map(|i| Pair(i, 2 * n - i)).collect();
                f.push(Fixed(n));
                f
            }
            FoldingId::DB(n) => {
                let mut f: Vec<Fibre> = (1..n).map(Fixed).collect();
                f.push(Pair(n + 1, n));
                f
            }
            FoldingId::E6F4 => vec![Fixed(2), Fixed(4), Pair(3, 5), Pair(1, 6)],
            FoldingId::E8H4 => vec![Pair(1, 7), Pair(2, 6), Pair(3, 5), Pair(8, 4)],
            FoldingId::D6H3 => vec![Pair(1, 5), Pair(2, 4), Pair(6, 3)],
            FoldingId::A4H2 => vec![Pair(1, 3), Pair(4, 2)],
        }
    }

    /// Expected bonds of the folded diagram, 1-based, omitting `m = 2`.
    fn folded_bonds(&self) -> Vec<(usize, usize, u32)> {
        let chain_with = |n: usize, last: u32| -> Vec<(usize, usize, u32)> {
            (1..n).map(|i| (i, i + 1, if i + 1 == n { last } else { 3 })).collect()
        };
        match *self {
            FoldingId::AC(n) | FoldingId::DB(n) => chain_with(n, 4),
            FoldingId::E6F4 => vec![(1, 2, 3), (2, 3, 4), (3, 4, 3)],
            FoldingId::E8H4 => chain_with(4, 5),
            FoldingId::D6H3 => chain_with(3, 5),
            FoldingId::A4H2 => vec![(1, 2, 5)],
        }
    }
}

impl fmt::Display for FoldingId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.original_name(), self.folded_name())
    }
}

impl FromStr for FoldingId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let unknown = || Error::UnknownFolding(s.to_string());
        match s {
            "E6F4" => return Ok(FoldingId::E6F4),
            "E8H4" => return Ok(FoldingId::E8H4),
            "D6H3" => return Ok(FoldingId::D6H3),
            "A4H2" => return Ok(FoldingId::A4H2),
            _ => {}
        }
        let parse = |first: char, second: char| -> Option<(usize, usize)> {
            let rest = s.strip_prefix(first)?;
            let (a, b) = rest.split_once(second)?;
            Some((a.parse().ok()?, b.parse().ok()?))
        };
        if let Some((m, n)) = parse('A', 'C') {
            if (2..=5).contains(&n) && m == 2 * n - 1 {
                return Ok(FoldingId::AC(n));
            }
        }
        if let Some((m, n)) = parse('D', 'B') {
            if (2..=5).contains(&n) && m == n + 1 {
                return Ok(FoldingId::DB(n));
            }
        }
        Err(unknown())
    }
}

/// The preimage of one folded generator, as 1-based original indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Fibre {
    Fixed(usize),
    /// `(a, theta a)` with `a` in the rational part.
    Pair(usize, usize),
}

impl Fibre {
    pub fn members(&self) -> Vec<usize> {
        match *self {
            Fibre::Fixed(i) => vec![i - 1],
            Fibre::Pair(a, b) => vec![a - 1, b - 1],
        }
    }

    fn representative(&self) -> usize {
        match *self {
            Fibre::Fixed(i) | Fibre::Pair(i, _) => i - 1,
        }
    }
}

/// The simply-laced datum underlying a catalog folding.
pub fn catalog_original(id: FoldingId) -> Result<RootDatum> {
    let (n, edges) = id.original_edges();
    RootDatum::simply_laced(&id.original_name(), QuadraticRing::new(id.c1()), n, &edges)
}

/// Configurations of `phi^{-1}({R, R'})` for a folded bond with `m >= 3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BondPattern {
    /// One edge between singleton fibres, `m = 3`.
    A,
    /// Two disjoint edges between pairs, `m = 3`.
    B,
    /// A singleton joined to both members of a pair, `m = 4`.
    C,
    /// A path through all four vertices of two pairs, `m = 5`.
    D,
}

impl BondPattern {
    pub fn order(&self) -> u32 {
        match self {
            BondPattern::A | BondPattern::B => 3,
            BondPattern::C => 4,
            BondPattern::D => 5,
        }
    }
}

#[derive(Debug, Clone)]
pub struct InvariantCheck {
    pub name: String,
    pub passed: bool,
}

#[derive(Debug, Clone)]
pub struct FoldingData {
    id: FoldingId,
    ring: QuadraticRing,
    original: CoxeterGroup,
    folded: CoxeterGroup,
    fibres: Vec<Fibre>,
    theta: Vec<Vec<i64>>,
    phi: Vec<usize>,
    /// `pi_tau(alpha_i) = pi_coeff[i] * bar alpha_{phi(i)}` in `L`.
    pi_coeff: Vec<QElem>,
    /// The same coefficients after the split-case specialization.
    pi_coeff_folded: Vec<QElem>,
    checks: Vec<InvariantCheck>,
}

impl FoldingData {
    pub fn build(id: FoldingId) -> Result<Self> {
        let ring = QuadraticRing::new(id.c1());
        let original_datum = catalog_original(id)?;
        let n = original_datum.rank();
        let fibres = id.fibres();

        let mut phi = vec![usize::MAX; n];
        let mut theta = vec![vec![0i64; n]; n];
        let mut pi_coeff = vec![ring.one(); n];
        for (j, f) in fibres.iter().enumerate() {
            match *f {
                Fibre::Fixed(i) => {
                    phi[i - 1] = j;
                    theta[i - 1][i - 1] = 1;
                }
                Fibre::Pair(a, b) => {
                    let (a, b) = (a - 1, b - 1);
                    phi[a] = j;
                    phi[b] = j;
                    // Columns: theta(a) = b, theta(b) = c1 b + a.
                    theta[b][a] = 1;
                    theta[b][b] = ring.c1();
                    theta[a][b] = 1;
                    pi_coeff[b] = ring.tau();
                }
            }
        }
        let pi_coeff_folded: Vec<QElem> =
            pi_coeff.iter().map(|c| if ring.is_split() { c.at_tau_one() } else { c.clone() }).collect();

        let folded_datum = RootDatum::from_gram(
            &id.folded_name(),
            ring,
            folded_gram_specialized(&original_datum, &fibres, &theta, ring),
        )?;
        let original = CoxeterGroup::new(original_datum)?;
        let folded = CoxeterGroup::new(folded_datum)?;
        let mut fd = FoldingData {
            id,
            ring,
            original,
            folded,
            fibres,
            theta,
            phi,
            pi_coeff,
            pi_coeff_folded,
            checks: Vec::new(),
        };
        fd.checks = fd.run_checks();
        if let Some(bad) = fd.checks.iter().find(|c| !c.passed) {
            return Err(Error::InvariantViolation(bad.name.clone()));
        }
        Ok(fd)
    }

    pub fn id(&self) -> FoldingId {
        self.id
    }

    pub fn ring(&self) -> QuadraticRing {
        self.ring
    }

    pub fn original(&self) -> &CoxeterGroup {
        &self.original
    }

    pub fn folded(&self) -> &CoxeterGroup {
        &self.folded
    }

    pub fn original_mut(&mut self) -> &mut CoxeterGroup {
        &mut self.original
    }

    pub fn folded_mut(&mut self) -> &mut CoxeterGroup {
        &mut self.folded
    }

    pub fn fibres(&self) -> &[Fibre] {
        &self.fibres
    }

    pub fn theta_matrix(&self) -> &[Vec<i64>] {
        &self.theta
    }

    /// The build-time invariant suite, one entry per check.
    pub fn invariant_checks(&self) -> &[InvariantCheck] {
        &self.checks
    }

    /// `(fixed, rational, theta(rational))` as 0-based index lists.
    pub fn partition(&self) -> (Vec<usize>, Vec<usize>, Vec<usize>) {
        let mut fixed = Vec::new();
        let mut rat = Vec::new();
        let mut img = Vec::new();
        for f in &self.fibres {
            match *f {
                Fibre::Fixed(i) => fixed.push(i - 1),
                Fibre::Pair(a, b) => {
                    rat.push(a - 1);
                    img.push(b - 1);
                }
            }
        }
        (fixed, rat, img)
    }

    /// `phi(s_i)` for a 0-based original index.
    pub fn phi(&self, i: usize) -> usize {
        self.phi[i]
    }

    pub fn phi_map(&self) -> &[usize] {
        &self.phi
    }

    pub fn is_pair(&self, j: usize) -> bool {
        matches!(self.fibres[j], Fibre::Pair(..))
    }

    /// The other member of the fibre of `i`, if any.
    pub fn opposite(&self, i: usize) -> Option<usize> {
        self.fibres[self.phi[i]].members().into_iter().find(|&k| k != i)
    }

    /// `iota(R_j)` as original letters.
    pub fn embed_letter(&self, j: usize) -> Vec<u8> {
        self.fibres[j].members().into_iter().map(|k| k as u8).collect()
    }

    pub fn embed(&self, u_word: &Word) -> Word {
        Word(u_word.letters().iter().flat_map(|&j| self.embed_letter(j as usize)).collect())
    }

    pub fn embed_element(&self, u: &GroupElement) -> GroupElement {
        let word = self.embed(&self.folded.lex_least_word(u));
        self.original.element_of(&word).expect("embedded letters are in range")
    }

    /// `pi_tau(x)` with coefficients in `L`.
    pub fn pi_tau(&self, x: &RootVector) -> RootVector {
        self.project(x, &self.pi_coeff)
    }

    /// `pi_tau(x)` in the coordinates of the folded root system, i.e. after
    /// the split-case specialization.
    pub fn pi_tau_folded(&self, x: &RootVector) -> RootVector {
        self.project(x, &self.pi_coeff_folded)
    }

    fn project(&self, x: &RootVector, coeff: &[QElem]) -> RootVector {
        let mut out = vec![self.ring.zero(); self.fibres.len()];
        for (i, xi) in x.0.iter().enumerate() {
            if !xi.is_zero() {
                out[self.phi[i]] += &(xi * &coeff[i]);
            }
        }
        RootVector(out)
    }

    /// The ring map `S -> S_tau` on polynomials.
    pub fn pi_tau_poly(&self, f: &Poly) -> Poly {
        f.monomial_map(&self.phi, &self.pi_coeff_folded, self.fibres.len())
    }

    /// Gram matrix of the folded simple roots over `L`, before any
    /// specialization.
    pub fn folded_gram(&self) -> Vec<Vec<QElem>> {
        folded_gram_l(self.original.datum(), &self.fibres, &self.theta, self.ring)
    }

    pub fn is_theta_stable(&self, p: Parabolic) -> bool {
        self.fibres.iter().all(|f| {
            let m = f.members();
            m.iter().all(|&i| p.contains(i)) || m.iter().all(|&i| !p.contains(i))
        })
    }

    /// `phi(P)` for a stable parabolic subset of original generators.
    pub fn folded_parabolic(&self, p: Parabolic) -> Result<Parabolic> {
        if !self.is_theta_stable(p) {
            return Err(Error::ParabolicNotThetaStable);
        }
        let mut q = Parabolic::empty();
        for i in p.iter().take_while(|&i| i < self.phi.len()) {
            q.insert(self.phi[i]);
        }
        Ok(q)
    }

    /// Preimage of a folded parabolic subset.
    pub fn original_parabolic(&self, q: Parabolic) -> Parabolic {
        let mut p = Parabolic::empty();
        for (i, &j) in self.phi.iter().enumerate() {
            if q.contains(j) {
                p.insert(i);
            }
        }
        p
    }

    /// All stable parabolic subsets, by folded bitmask.
    pub fn theta_stable_parabolics(&self) -> Vec<Parabolic> {
        (0..1u64 << self.fibres.len()).map(|m| self.original_parabolic(Parabolic(m))).collect()
    }

    /// `iota^*(xi)(u) = pi_tau(xi(iota(u)))` on the folded graph.
    pub fn fold_class<'g>(&self, xi: &StructClass<'_>, folded_graph: &'g MomentGraph) -> Result<StructClass<'g>> {
        let p = xi.graph().parabolic();
        let q = self.folded_parabolic(p)?;
        if q != folded_graph.parabolic() {
            return Err(Error::ParabolicNotThetaStable);
        }
        let mut values = Vec::with_capacity(folded_graph.len());
        for u in folded_graph.vertices() {
            let w = self.embed_element(u);
            let z = xi.value_at(&w).ok_or(Error::NotInQuotient)?;
            values.push(self.pi_tau_poly(z));
        }
        Ok(StructClass::new(folded_graph, values))
    }

    /// Classify `phi^{-1}({R_j, R_k})` for a folded bond.
    pub fn bond_pattern(&self, j: usize, k: usize) -> Option<BondPattern> {
        let cox = self.original.datum().coxeter_matrix();
        let fj = self.fibres[j].members();
        let fk = self.fibres[k].members();
        let edges: Vec<(usize, usize)> =
            fj.iter().flat_map(|&s| fk.iter().map(move |&t| (s, t))).filter(|&(s, t)| cox[s][t] == 3).collect();
        if fj.iter().chain(&fk).any(|&s| fj.iter().chain(&fk).any(|&t| s != t && cox[s][t] > 3)) {
            return None;
        }
        match (fj.len(), fk.len(), edges.len()) {
            (1, 1, 1) => Some(BondPattern::A),
            (1, 2, 2) | (2, 1, 2) => Some(BondPattern::C),
            (2, 2, 2) => {
                let disjoint = edges[0].0 != edges[1].0 && edges[0].1 != edges[1].1;
                disjoint.then_some(BondPattern::B)
            }
            (2, 2, 3) => Some(BondPattern::D),
            _ => None,
        }
    }

    fn run_checks(&self) -> Vec<InvariantCheck> {
        let mut out = Vec::new();
        let mut push = |name: &str, passed: bool| out.push(InvariantCheck { name: name.to_string(), passed });
        let n = self.phi.len();
        let c1 = self.ring.c1();
        let th = &self.theta;

        let mut cover = vec![0; n];
        for f in &self.fibres {
            for i in f.members() {
                cover[i] += 1;
            }
        }
        push("partition covers the simple roots once", cover.iter().all(|&c| c == 1));

        let sq = mat_mul_i(th, th);
        let ok = (0..n).all(|r| (0..n).all(|c| sq[r][c] == c1 * th[r][c] + i64::from(r == c)));
        push("theta^2 = c1 theta + 1", ok);

        let roots = self.original.positive_roots();
        let ok = roots.iter().all(|r| {
            let v: Vec<i64> = r.iter().map(|x| x.a).collect();
            let img = mat_vec_i(th, &v);
            let pos: Vec<_> = img.iter().map(|&x| crate::qring::GoldenInt::int(x)).collect();
            let neg: Vec<_> = img.iter().map(|&x| crate::qring::GoldenInt::int(-x)).collect();
            self.original.root_index(&pos).is_some() || self.original.root_index(&neg).is_some()
        });
        // Root-set stability only holds for the diagram automorphisms of
        // the split case; the golden operator only keeps the root lattice.
        push("theta permutes the roots (split case)", !self.ring.is_split() || ok);

        let inv: Vec<Vec<i64>> = (0..n).map(|r| (0..n).map(|c| th[r][c] - c1 * i64::from(r == c)).collect()).collect();
        let id = mat_mul_i(th, &inv);
        let ok = (0..n).all(|r| (0..n).all(|c| id[r][c] == i64::from(r == c)));
        push("theta preserves the root lattice", ok);

        let gram = self.original.datum().gram();
        let g = |i: usize, j: usize| gram[i][j].a().clone();
        let gth = |i: usize, j: usize| -> BigRational {
            (0..n).fold(BigRational::zero(), |acc, k| acc + g(i, k) * BigRational::from_integer(th[k][j].into()))
        };
        let ok = (0..n).all(|i| (0..n).all(|j| gth(i, j) == gth(j, i)));
        push("theta is self-adjoint", ok);

        let (_, rat, _) = self.partition();
        let form = |x: &[i64], y: &[i64]| -> BigRational {
            let mut acc = BigRational::zero();
            for (i, &xi) in x.iter().enumerate().filter(|(_, &v)| v != 0) {
                for (j, &yj) in y.iter().enumerate().filter(|(_, &v)| v != 0) {
                    acc += g(i, j) * BigRational::from_integer((xi * yj).into());
                }
            }
            acc
        };
        let unit = |i: usize| -> Vec<i64> { (0..n).map(|k| i64::from(k == i)).collect() };
        let ok = rat.iter().all(|&a| form(&unit(a), &mat_vec_i(th, &unit(a))).is_zero());
        push("<a, theta a> = 0 on rational simple roots", ok);
        let ok = rat.iter().all(|&a| {
            let t = mat_vec_i(th, &unit(a));
            form(&t, &t) == form(&unit(a), &unit(a))
        });
        push("<theta a, theta a> = <a, a> on rational simple roots", ok);

        let cox = self.folded.datum().coxeter_matrix();
        let r = self.fibres.len();
        let mut expected = vec![vec![2u32; r]; r];
        for (i, row) in expected.iter_mut().enumerate() {
            row[i] = 1;
        }
        for (a, b, m) in self.id.folded_bonds() {
            expected[a - 1][b - 1] = m;
            expected[b - 1][a - 1] = m;
        }
        push("folded Coxeter matrix matches the target type", cox.iter().zip(&expected).all(|(x, y)| x == y));

        let ok = (0..r).all(|j| {
            (j + 1..r).all(|k| cox[j][k] < 3 || self.bond_pattern(j, k).map(|p| p.order()) == Some(cox[j][k]))
        });
        push("bond preimages match their configuration", ok);

        let ocox = self.original.datum().coxeter_matrix();
        let ok = (0..r).all(|j| {
            (0..r).all(|k| {
                j == k
                    || cox[j][k] != 2
                    || self.fibres[j]
                        .members()
                        .iter()
                        .all(|&s| self.fibres[k].members().iter().all(|&t| ocox[s][t] == 2))
            })
        });
        push("commuting folded generators have commuting preimages", ok);

        let ok = self.fibres.iter().all(|f| match *f {
            Fibre::Pair(a, b) => ocox[a - 1][b - 1] == 2,
            Fibre::Fixed(_) => true,
        });
        push("opposite simple reflections commute", ok);
        out
    }
}

fn mat_mul_i(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = a.len();
    (0..n).map(|r| (0..n).map(|c| (0..n).map(|k| a[r][k] * b[k][c]).sum()).collect()).collect()
}

fn mat_vec_i(a: &[Vec<i64>], x: &[i64]) -> Vec<i64> {
    a.iter().map(|row| row.iter().zip(x).map(|(p, q)| p * q).sum()).collect()
}

/// `<a, b>` and `<a, theta b>` for simple roots `a`, `b`.
fn pair_values(datum: &RootDatum, theta: &[Vec<i64>], a: usize, b: usize) -> (BigRational, BigRational) {
    let gram = datum.gram();
    let n = gram.len();
    let ab = gram[a][b].a().clone();
    let atb =
        (0..n).fold(BigRational::zero(), |acc, k| acc + gram[a][k].a() * BigRational::from_integer(theta[k][b].into()));
    (ab, atb)
}

fn folded_gram_l(datum: &RootDatum, fibres: &[Fibre], theta: &[Vec<i64>], ring: QuadraticRing) -> Vec<Vec<QElem>> {
    let sigma = ring.sigma();
    let d = QElem::from_int(ring, ring.discriminant());
    let factor = (&(&sigma * &sigma) + &ring.one()).div(&d).expect("discriminant is invertible");
    let r = fibres.len();
    (0..r)
        .map(|j| {
            (0..r)
                .map(|k| {
                    let (a, b) = pair_values(datum, theta, fibres[j].representative(), fibres[k].representative());
                    &factor * &QElem::new(ring, a, b)
                })
                .collect()
        })
        .collect()
}

fn folded_gram_specialized(
    datum: &RootDatum,
    fibres: &[Fibre],
    theta: &[Vec<i64>],
    ring: QuadraticRing,
) -> Vec<Vec<QElem>> {
    let g = folded_gram_l(datum, fibres, theta, ring);
    if !ring.is_split() {
        return g;
    }
    g.into_iter().map(|row| row.into_iter().map(|x| x.at_tau_one()).collect()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qring::GoldenInt;

    #[test]
    fn ids_round_trip() {
        for id in FoldingId::CATALOG {
            assert_eq!(id.to_string().parse::<FoldingId>().unwrap(), id);
        }
        assert_eq!("A9C5".parse::<FoldingId>().unwrap(), FoldingId::AC(5));
        assert_eq!("D6B5".parse::<FoldingId>().unwrap(), FoldingId::DB(5));
        assert!(matches!("A5C2".parse::<FoldingId>(), Err(Error::UnknownFolding(_))));
        assert!(matches!("G2".parse::<FoldingId>(), Err(Error::UnknownFolding(_))));
    }

    #[test]
    fn catalog_builds() {
        for id in FoldingId::CATALOG {
            let fd = FoldingData::build(id).unwrap();
            assert!(fd.invariant_checks().iter().all(|c| c.passed), "{id}");
        }
    }

    #[test]
    fn a4h2_theta() {
        let fd = FoldingData::build(FoldingId::A4H2).unwrap();
        let th = fd.theta_matrix();
        // Column 1 is theta(a1) = a3, column 3 is a1 + a3.
        assert_eq!((0..4).map(|r| th[r][0]).collect::<Vec<_>>(), [0, 0, 1, 0]);
        assert_eq!((0..4).map(|r| th[r][2]).collect::<Vec<_>>(), [1, 0, 1, 0]);
    }

    #[test]
    fn d4b3_theta_is_involution() {
        let fd = FoldingData::build(FoldingId::DB(3)).unwrap();
        let th = fd.theta_matrix();
        assert_eq!(th[0][0], 1);
        assert_eq!(th[1][1], 1);
        assert_eq!(th[2][3], 1);
        assert_eq!(th[3][2], 1);
        assert_eq!(th[2][2], 0);
    }

    #[test]
    fn e8h4_phi() {
        let fd = FoldingData::build(FoldingId::E8H4).unwrap();
        assert_eq!(fd.phi_map(), &[0, 1, 2, 3, 2, 1, 0, 3]);
    }

    #[test]
    fn a4h2_gram_and_bond() {
        let fd = FoldingData::build(FoldingId::A4H2).unwrap();
        let r = fd.ring();
        let g = fd.folded_gram();
        let factor = (&(&r.sigma() * &r.sigma()) + &r.one()).div(&QElem::from_int(r, 5)).unwrap();
        assert_eq!(g[0][1], &factor * &QElem::new(r, BigRational::zero(), BigRational::new((-1).into(), 2.into())));
        assert_eq!(fd.folded().datum().coxeter_matrix()[0][1], 5);
        assert_eq!(fd.bond_pattern(0, 1), Some(BondPattern::D));
    }

    #[test]
    fn a3c2_bond() {
        let fd = FoldingData::build(FoldingId::AC(2)).unwrap();
        assert_eq!(fd.folded().datum().coxeter_matrix()[0][1], 4);
        assert_eq!(fd.bond_pattern(0, 1), Some(BondPattern::C));
        assert!(fd.folded_gram().iter().enumerate().all(|(i, row)| !row[i].is_zero()));
    }

    #[test]
    fn embed_letters() {
        let fd = FoldingData::build(FoldingId::A4H2).unwrap();
        assert_eq!(fd.embed(&Word::parse("1", 2).unwrap()).to_string(), "13");
        let c2 = FoldingData::build(FoldingId::AC(2)).unwrap();
        assert_eq!(c2.embed(&Word::parse("2", 2).unwrap()).to_string(), "2");
        assert!(c2.embed(&Word::empty()).is_empty());
    }

    #[test]
    fn projection() {
        let fd = FoldingData::build(FoldingId::A4H2).unwrap();
        let r = fd.ring();
        let x = RootVector::from_golden(r, &[GoldenInt::ONE, GoldenInt::ZERO, GoldenInt::ONE, GoldenInt::ZERO]);
        assert_eq!(fd.pi_tau(&x).0, vec![QElem::from_ints(r, 1, 1), r.zero()]);
        let y = RootVector::from_golden(r, &[GoldenInt::ZERO, GoldenInt::ZERO, GoldenInt::ONE, GoldenInt::ZERO]);
        assert_eq!(fd.pi_tau(&y).0, vec![r.tau(), r.zero()]);
    }

    #[test]
    fn stable_parabolics() {
        let fd = FoldingData::build(FoldingId::D6H3).unwrap();
        let p = Parabolic::from_one_based(&[2, 3, 4, 6]);
        assert_eq!(fd.folded_parabolic(p).unwrap(), Parabolic::from_one_based(&[2, 3]));
        assert_eq!(fd.folded_parabolic(Parabolic::from_one_based(&[1])), Err(Error::ParabolicNotThetaStable));
        assert_eq!(fd.theta_stable_parabolics().len(), 8);
    }
}
