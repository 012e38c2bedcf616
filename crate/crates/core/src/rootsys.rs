//! Root data in the simple-root basis: Gram matrix, Cartan and Coxeter
//! matrices, reflections and positive roots.

use alloc::collections::VecDeque;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use hashbrown::HashSet;

use crate::error::Error;
use crate::qring::{GoldenInt, QElem, QuadraticRing};
use crate::Result;

/// Upper bound on root-closure steps before input is declared malformed.
pub const ROOT_ITERATION_CAP: usize = 1_000_000;

/// A vector in the simple-root basis with coordinates in `L`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootVector(pub Vec<QElem>);

impl RootVector {
    pub fn from_golden(ring: QuadraticRing, coords: &[GoldenInt]) -> Self {
        RootVector(coords.iter().map(|c| c.to_qelem(ring)).collect())
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }
}

#[derive(Debug, Clone)]
pub struct RootDatum {
    name: String,
    ring: QuadraticRing,
    gram: Vec<Vec<QElem>>,
    cartan: Vec<Vec<GoldenInt>>,
    coxeter: Vec<Vec<u32>>,
}

impl RootDatum {
    /// Build a datum from its Gram matrix. Cartan numbers must lie in `Z[t]`.
    pub fn from_gram(name: &str, ring: QuadraticRing, gram: Vec<Vec<QElem>>) -> Result<Self> {
        let n = gram.len();
        let mut cartan = vec![vec![GoldenInt::ZERO; n]; n];
        for i in 0..n {
            if gram[i].len() != n {
                return Err(Error::InvariantViolation("Gram matrix is not square".into()));
            }
            let d = &gram[i][i];
            if d.is_zero() {
                return Err(Error::IsotropicRoot);
            }
            let two_over = QElem::from_int(ring, 2).div(d)?;
            for j in 0..n {
                if gram[i][j] != gram[j][i] {
                    return Err(Error::InvariantViolation("Gram matrix is not symmetric".into()));
                }
                let c = &two_over * &gram[i][j];
                cartan[i][j] = GoldenInt::from_qelem(&c).ok_or_else(|| {
                    Error::InvariantViolation(format!("Cartan number ({},{}) = {c} is not integral", i + 1, j + 1))
                })?;
            }
        }
        let mut coxeter = vec![vec![1u32; n]; n];
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    coxeter[i][j] = bond_order(cartan[i][j] * cartan[j][i]).ok_or_else(|| {
                        Error::InvariantViolation(format!("generators {} and {} have no finite bond", i + 1, j + 1))
                    })?;
                }
            }
        }
        Ok(RootDatum { name: name.to_string(), ring, gram, cartan, coxeter })
    }

    /// Simply-laced datum with `<a,a> = 1` and `-1/2` on each (1-based) edge.
    pub fn simply_laced(name: &str, ring: QuadraticRing, rank: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut gram = vec![vec![ring.zero(); rank]; rank];
        for (i, row) in gram.iter_mut().enumerate() {
            row[i] = ring.one();
        }
        for &(i, j) in edges {
            if i == 0 || j == 0 || i > rank || j > rank {
                return Err(Error::BadIndex { index: i.max(j), rank });
            }
            gram[i - 1][j - 1] = QElem::from_ratio(ring, -1, 2);
            gram[j - 1][i - 1] = QElem::from_ratio(ring, -1, 2);
        }
        RootDatum::from_gram(name, ring, gram)
    }

    /// Simply-laced types by name: `A<n>`, `D<n>` (n >= 3), `E6`, `E7`, `E8`.
    ///
    /// `E8` uses the labelling of the E8 to H4 folding: a chain 1..7 with 8
    /// attached to 5.
    pub fn simply_laced_type(name: &str) -> Result<Self> {
        let unknown = || Error::UnknownFolding(name.to_string());
        let (letter, n) = name.split_at(1);
        let n: usize = n.parse().map_err(|_| unknown())?;
        let ring = QuadraticRing::SPLIT;
        let edges = match (letter, n) {
            ("A", n) if (1..=32).contains(&n) => chain(n),
            ("D", n) if (3..=32).contains(&n) => d_edges(n),
            ("E", 6) => vec![(1, 3), (3, 4), (4, 5), (5, 6), (2, 4)],
            ("E", 7) => vec![(1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (2, 4)],
            ("E", 8) => vec![(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (5, 8)],
            _ => return Err(unknown()),
        };
        RootDatum::simply_laced(name, ring, n, &edges)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn ring(&self) -> QuadraticRing {
        self.ring
    }

    pub fn rank(&self) -> usize {
        self.gram.len()
    }

    pub fn gram(&self) -> &[Vec<QElem>] {
        &self.gram
    }

    pub fn cartan(&self) -> &[Vec<GoldenInt>] {
        &self.cartan
    }

    pub fn coxeter_matrix(&self) -> &[Vec<u32>] {
        &self.coxeter
    }

    pub fn pairing(&self, x: &RootVector, y: &RootVector) -> QElem {
        let mut acc = self.ring.zero();
        for (i, xi) in x.0.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.0.iter().enumerate() {
                if yj.is_zero() || self.gram[i][j].is_zero() {
                    continue;
                }
                acc += &(&(xi * &self.gram[i][j]) * yj);
            }
        }
        acc
    }

    /// `s_a(x) = x - (2<a,x>/<a,a>) a`.
    pub fn reflect(&self, alpha: &RootVector, x: &RootVector) -> Result<RootVector> {
        let aa = self.pairing(alpha, alpha);
        if aa.is_zero() {
            return Err(Error::IsotropicRoot);
        }
        let two = QElem::from_int(self.ring, 2);
        let c = (&two * &self.pairing(alpha, x)).div(&aa).map_err(|_| Error::IsotropicRoot)?;
        Ok(RootVector(x.0.iter().zip(&alpha.0).map(|(xi, ai)| xi - &(&c * ai)).collect()))
    }

    pub fn positive_roots(&self) -> Result<Vec<RootVector>> {
        Ok(self.positive_roots_golden()?.iter().map(|r| RootVector::from_golden(self.ring, r)).collect())
    }

    /// Positive roots with `Z[t]` coordinates in discovery order, simple
    /// roots first.
    pub fn positive_roots_golden(&self) -> Result<Vec<Vec<GoldenInt>>> {
        let n = self.rank();
        let mut seen: HashSet<Vec<GoldenInt>> = HashSet::new();
        let mut out = Vec::new();
        let mut queue = VecDeque::new();
        for i in 0..n {
            let mut e = vec![GoldenInt::ZERO; n];
            e[i] = GoldenInt::ONE;
            seen.insert(e.clone());
            out.push(e.clone());
            queue.push_back(e);
        }
        let mut steps = 0usize;
        while let Some(x) = queue.pop_front() {
            for j in 0..n {
                steps += 1;
                if steps > ROOT_ITERATION_CAP {
                    return Err(Error::NonTerminating { cap: ROOT_ITERATION_CAP });
                }
                let y = self.simple_reflect_golden(j, &x);
                if !is_nonnegative(&y) || seen.contains(&y) {
                    continue;
                }
                seen.insert(y.clone());
                out.push(y.clone());
                queue.push_back(y);
            }
        }
        Ok(out)
    }

    /// `s_j(x) = x - (sum_k A_jk x_k) e_j`.
    pub fn simple_reflect_golden(&self, j: usize, x: &[GoldenInt]) -> Vec<GoldenInt> {
        let mut c = GoldenInt::ZERO;
        for (k, xk) in x.iter().enumerate() {
            c += self.cartan[j][k] * *xk;
        }
        let mut y = x.to_vec();
        y[j] -= c;
        y
    }
}

/// Bond order `m` from the Cartan product `4 cos^2(pi/m)`.
fn bond_order(p: GoldenInt) -> Option<u32> {
    match (p.a, p.b) {
        (0, 0) => Some(2),
        (1, 0) => Some(3),
        (2, 0) => Some(4),
        (1, 1) => Some(5),
        (3, 0) => Some(6),
        _ => None,
    }
}

fn is_nonnegative(x: &[GoldenInt]) -> bool {
    x.iter().all(|c| c.sign() != Ordering::Less)
}

pub(crate) fn chain(n: usize) -> Vec<(usize, usize)> {
    (1..n).map(|i| (i, i + 1)).collect()
}

/// `D_n`: chain `1..n-1` with `n` attached to `n-2`.
pub(crate) fn d_edges(n: usize) -> Vec<(usize, usize)> {
    let mut e = chain(n - 1);
    e.push((n - 2, n));
    e
}
