//! Words, group elements as exact matrices, Bruhat order and parabolic
//! quotients.

use alloc::boxed::Box;
use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::hash::{Hash, Hasher};

use hashbrown::{HashMap, HashSet};

use crate::error::Error;
use crate::qring::GoldenInt;
use crate::rootsys::RootDatum;
use crate::Result;

pub const DEFAULT_LENGTH_CAP: usize = 16;
pub const DEFAULT_SIZE_CAP: usize = 1_000_000;

/// A word in the simple reflections. Letters are stored 0-based; the textual
/// form is 1-based.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Word(pub Vec<u8>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn from_one_based(letters: &[usize]) -> Self {
        Word(letters.iter().map(|&l| (l - 1) as u8).collect())
    }

    /// Parse `1213`, `1,2,13` or `e` (empty). Letters are checked against
    /// `rank`.
    pub fn parse(s: &str, rank: usize) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "e" {
            return Ok(Word::empty());
        }
        let parts: Vec<&str> = if s.contains(',') {
            s.split(',').map(str::trim).collect()
        } else {
            s.char_indices().map(|(i, c)| &s[i..i + c.len_utf8()]).collect()
        };
        let mut letters = Vec::with_capacity(parts.len());
        for p in parts {
            let i: usize = p.parse().map_err(|_| Error::Parse(format!("bad letter `{p}` in word `{s}`")))?;
            if i == 0 || i > rank {
                return Err(Error::BadIndex { index: i, rank });
            }
            letters.push((i - 1) as u8);
        }
        Ok(Word(letters))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    /// Letters as 1-based indices.
    pub fn one_based(&self) -> Vec<usize> {
        self.0.iter().map(|&l| l as usize + 1).collect()
    }

    /// Digit string for rank at most 9, comma separated above; `e` when empty.
    pub fn render(&self, rank: usize) -> String {
        if self.0.is_empty() {
            return "e".to_string();
        }
        let parts: Vec<String> = self.one_based().iter().map(|l| l.to_string()).collect();
        if rank <= 9 {
            parts.concat()
        } else {
            parts.join(",")
        }
    }

    /// Render with a generator prefix, e.g. `R1R2R1`.
    pub fn render_with(&self, prefix: &str) -> String {
        if self.0.is_empty() {
            return "e".to_string();
        }
        self.one_based().iter().map(|l| format!("{prefix}{l}")).collect()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let big = self.0.iter().any(|&l| l >= 9);
        f.write_str(&self.render(if big { 10 } else { 9 }))
    }
}

/// A subset of the simple reflections, stored as a 0-based bitmask.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Parabolic(pub u64);

impl Parabolic {
    pub fn empty() -> Self {
        Parabolic(0)
    }

    pub fn full(rank: usize) -> Self {
        Parabolic((1u64 << rank) - 1)
    }

    pub fn from_one_based(indices: &[usize]) -> Self {
        Parabolic(indices.iter().fold(0, |m, &i| m | (1 << (i - 1))))
    }

    /// Parse `1,3`, `13`, or `none`/empty for the empty set.
    pub fn parse(s: &str, rank: usize) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "none" {
            return Ok(Parabolic::empty());
        }
        let w = Word::parse(s, rank)?;
        Ok(Parabolic(w.0.iter().fold(0, |m, &i| m | (1 << i))))
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    pub fn insert(&mut self, i: usize) {
        self.0 |= 1 << i;
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..64).filter(move |&i| self.contains(i))
    }

    pub fn is_superset_of(&self, other: &Parabolic) -> bool {
        self.0 & other.0 == other.0
    }

    /// 1-based indices.
    pub fn one_based(&self) -> Vec<usize> {
        self.iter().map(|i| i + 1).collect()
    }
}

impl fmt::Display for Parabolic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.one_based().iter().map(|l| l.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// A group element: its matrix on the simple-root basis, the matrix of its
/// inverse and its length. Equality and hashing use the matrix only.
#[derive(Debug, Clone)]
pub struct GroupElement {
    matrix: Box<[GoldenInt]>,
    inverse: Box<[GoldenInt]>,
    length: u32,
}

impl PartialEq for GroupElement {
    fn eq(&self, other: &Self) -> bool {
        self.matrix == other.matrix
    }
}

impl Eq for GroupElement {}

impl Hash for GroupElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.matrix.hash(state);
    }
}

impl GroupElement {
    pub fn length(&self) -> usize {
        self.length as usize
    }

    pub fn matrix(&self) -> &[GoldenInt] {
        &self.matrix
    }

    pub fn is_identity(&self) -> bool {
        self.length == 0
    }

    pub fn inverse(&self) -> GroupElement {
        GroupElement { matrix: self.inverse.clone(), inverse: self.matrix.clone(), length: self.length }
    }

    fn rank(&self) -> usize {
        let mut n = 0;
        while n * n < self.matrix.len() {
            n += 1;
        }
        n
    }

    /// Image of a vector given in the simple-root basis.
    pub fn apply(&self, x: &[GoldenInt]) -> Vec<GoldenInt> {
        mat_vec(&self.matrix, x)
    }

    /// Column `i` of the matrix, i.e. the image of `alpha_i`.
    pub fn column(&self, i: usize) -> Vec<GoldenInt> {
        let n = self.rank();
        (0..n).map(|r| self.matrix[r * n + i]).collect()
    }
}

fn mat_vec(m: &[GoldenInt], x: &[GoldenInt]) -> Vec<GoldenInt> {
    let n = x.len();
    (0..n)
        .map(|r| {
            let mut acc = GoldenInt::ZERO;
            for (c, xc) in x.iter().enumerate() {
                if !xc.is_zero() {
                    acc += m[r * n + c] * *xc;
                }
            }
            acc
        })
        .collect()
}

fn mat_mul(a: &[GoldenInt], b: &[GoldenInt], n: usize) -> Box<[GoldenInt]> {
    let mut out = vec![GoldenInt::ZERO; n * n];
    for r in 0..n {
        for k in 0..n {
            let ark = a[r * n + k];
            if ark.is_zero() {
                continue;
            }
            for c in 0..n {
                out[r * n + c] += ark * b[k * n + c];
            }
        }
    }
    out.into_boxed_slice()
}

fn identity_matrix(n: usize) -> Box<[GoldenInt]> {
    let mut m = vec![GoldenInt::ZERO; n * n];
    for i in 0..n {
        m[i * n + i] = GoldenInt::ONE;
    }
    m.into_boxed_slice()
}

/// Sign of a root: the sign of its first nonzero coordinate.
fn root_sign(coords: impl IntoIterator<Item = GoldenInt>) -> Ordering {
    coords.into_iter().map(GoldenInt::sign).find(|s| *s != Ordering::Equal).unwrap_or(Ordering::Equal)
}

/// The finite reflection group of a root datum.
#[derive(Debug, Clone)]
pub struct CoxeterGroup {
    datum: RootDatum,
    rank: usize,
    cartan: Vec<GoldenInt>,
    roots: Vec<Vec<GoldenInt>>,
    root_index: HashMap<Vec<GoldenInt>, usize>,
    reflections: Vec<GroupElement>,
    length_cap: usize,
    size_cap: usize,
}

impl CoxeterGroup {
    pub fn new(datum: RootDatum) -> Result<Self> {
        let rank = datum.rank();
        let cartan = datum.cartan().iter().flat_map(|r| r.iter().copied()).collect();
        let roots = datum.positive_roots_golden()?;
        let root_index: HashMap<Vec<GoldenInt>, usize> =
            roots.iter().cloned().enumerate().map(|(i, r)| (r, i)).collect();
        let mut g = CoxeterGroup {
            datum,
            rank,
            cartan,
            roots,
            root_index,
            reflections: Vec::new(),
            length_cap: DEFAULT_LENGTH_CAP,
            size_cap: DEFAULT_SIZE_CAP,
        };
        // s_{s_j b} = s_j s_b s_j, walking roots in discovery order.
        let mut refl: Vec<GroupElement> = Vec::with_capacity(g.roots.len());
        for k in 0..g.roots.len() {
            if k < rank {
                refl.push(g.simple(k));
                continue;
            }
            let parent = (0..rank)
                .find_map(|j| {
                    let y = g.datum.simple_reflect_golden(j, &g.roots[k]);
                    g.root_index.get(&y).filter(|&&p| p < k).map(|&p| (j, p))
                })
                .expect("every non-simple root has an earlier parent");
            let (j, p) = parent;
            let m = g.mul_simple_left(j, &g.mul_simple_right(&refl[p], j));
            refl.push(m);
        }
        g.reflections = refl;
        Ok(g)
    }

    pub fn with_length_cap(mut self, cap: usize) -> Self {
        self.length_cap = cap;
        self
    }

    pub fn with_size_cap(mut self, cap: usize) -> Self {
        self.size_cap = cap;
        self
    }

    pub fn length_cap(&self) -> usize {
        self.length_cap
    }

    pub fn set_length_cap(&mut self, cap: usize) {
        self.length_cap = cap;
    }

    pub fn datum(&self) -> &RootDatum {
        &self.datum
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn positive_roots(&self) -> &[Vec<GoldenInt>] {
        &self.roots
    }

    pub fn root_index(&self, coords: &[GoldenInt]) -> Option<usize> {
        self.root_index.get(coords).copied()
    }

    /// The reflection along the `k`-th positive root.
    pub fn reflection(&self, k: usize) -> &GroupElement {
        &self.reflections[k]
    }

    pub fn identity(&self) -> GroupElement {
        let m = identity_matrix(self.rank);
        GroupElement { inverse: m.clone(), matrix: m, length: 0 }
    }

    pub fn simple(&self, i: usize) -> GroupElement {
        self.mul_simple_right(&self.identity(), i)
    }

    fn a(&self, i: usize, j: usize) -> GoldenInt {
        self.cartan[i * self.rank + j]
    }

    /// Is `s_i` a right descent, i.e. `w(alpha_i) < 0`.
    pub fn is_right_descent(&self, w: &GroupElement, i: usize) -> bool {
        let n = self.rank;
        root_sign((0..n).map(|r| w.matrix[r * n + i])) == Ordering::Less
    }

    /// Is `s_i` a left descent, i.e. `w^{-1}(alpha_i) < 0`.
    pub fn is_left_descent(&self, w: &GroupElement, i: usize) -> bool {
        let n = self.rank;
        root_sign((0..n).map(|r| w.inverse[r * n + i])) == Ordering::Less
    }

    pub fn right_descents(&self, w: &GroupElement) -> Vec<usize> {
        (0..self.rank).filter(|&i| self.is_right_descent(w, i)).collect()
    }

    pub fn left_descents(&self, w: &GroupElement) -> Vec<usize> {
        (0..self.rank).filter(|&i| self.is_left_descent(w, i)).collect()
    }

    /// `w s_i`.
    pub fn mul_simple_right(&self, w: &GroupElement, i: usize) -> GroupElement {
        let n = self.rank;
        let up = !self.is_right_descent(w, i);
        let mut m = w.matrix.clone();
        for r in 0..n {
            let wri = w.matrix[r * n + i];
            if wri.is_zero() {
                continue;
            }
            for c in 0..n {
                let aic = self.a(i, c);
                if !aic.is_zero() {
                    m[r * n + c] -= aic * wri;
                }
            }
        }
        let mut inv = w.inverse.clone();
        self.row_op(&mut inv, &w.inverse, i);
        GroupElement { matrix: m, inverse: inv, length: if up { w.length + 1 } else { w.length - 1 } }
    }

    /// `s_i w`.
    pub fn mul_simple_left(&self, i: usize, w: &GroupElement) -> GroupElement {
        let inv = self.mul_simple_right(&w.inverse(), i);
        GroupElement { matrix: inv.inverse, inverse: inv.matrix, length: inv.length }
    }

    /// Row `i` of `s_i m` is `m_i - sum_k A_ik m_k`.
    fn row_op(&self, out: &mut [GoldenInt], m: &[GoldenInt], i: usize) {
        let n = self.rank;
        for c in 0..n {
            let mut acc = GoldenInt::ZERO;
            for k in 0..n {
                let aik = self.a(i, k);
                if !aik.is_zero() {
                    acc += aik * m[k * n + c];
                }
            }
            out[i * n + c] = m[i * n + c] - acc;
        }
    }

    pub fn mul(&self, u: &GroupElement, v: &GroupElement) -> GroupElement {
        let n = self.rank;
        let matrix = mat_mul(&u.matrix, &v.matrix, n);
        let inverse = mat_mul(&v.inverse, &u.inverse, n);
        let length = self.inversion_count(&matrix) as u32;
        GroupElement { matrix, inverse, length }
    }

    /// Number of positive roots sent to negative roots.
    pub fn inversion_count(&self, matrix: &[GoldenInt]) -> usize {
        self.roots.iter().filter(|r| root_sign(mat_vec(matrix, r)) == Ordering::Less).count()
    }

    /// Indices of positive roots `b` with `w^{-1}(b) < 0`.
    pub fn inversion_roots(&self, w: &GroupElement) -> Vec<usize> {
        (0..self.roots.len()).filter(|&k| root_sign(mat_vec(&w.inverse, &self.roots[k])) == Ordering::Less).collect()
    }

    pub fn element_of(&self, word: &Word) -> Result<GroupElement> {
        let mut w = self.identity();
        for &l in &word.0 {
            let l = l as usize;
            if l >= self.rank {
                return Err(Error::BadIndex { index: l + 1, rank: self.rank });
            }
            w = self.mul_simple_right(&w, l);
        }
        Ok(w)
    }

    pub fn is_reduced(&self, word: &Word) -> bool {
        let mut w = self.identity();
        for &l in &word.0 {
            let l = l as usize;
            if l >= self.rank || self.is_right_descent(&w, l) {
                return false;
            }
            w = self.mul_simple_right(&w, l);
        }
        true
    }

    /// Lexicographically least reduced word, built by greedy left descents.
    pub fn lex_least_word(&self, w: &GroupElement) -> Word {
        let mut letters = Vec::with_capacity(w.length());
        let mut cur = w.clone();
        while cur.length > 0 {
            let i =
                (0..self.rank).find(|&i| self.is_left_descent(&cur, i)).expect("nontrivial element has a left descent");
            letters.push(i as u8);
            cur = self.mul_simple_left(i, &cur);
        }
        Word(letters)
    }

    pub fn reduced_words(&self, w: &GroupElement) -> Result<BTreeSet<Word>> {
        if w.length() > self.length_cap {
            return Err(Error::LengthCapExceeded { length: w.length(), cap: self.length_cap });
        }
        let mut memo: HashMap<GroupElement, Vec<Word>> = HashMap::new();
        Ok(self.reduced_words_memo(w, &mut memo).into_iter().collect())
    }

    fn reduced_words_memo(&self, w: &GroupElement, memo: &mut HashMap<GroupElement, Vec<Word>>) -> Vec<Word> {
        if w.length == 0 {
            return vec![Word::empty()];
        }
        if let Some(v) = memo.get(w) {
            return v.clone();
        }
        let mut out = Vec::new();
        for s in self.right_descents(w) {
            let ws = self.mul_simple_right(w, s);
            for mut word in self.reduced_words_memo(&ws, memo) {
                word.0.push(s as u8);
                out.push(word);
            }
        }
        memo.insert(w.clone(), out.clone());
        out
    }

    /// Bruhat order by descent recursion: with `s` a right descent of `w`,
    /// `u <= w` iff `min(u, us) <= ws`.
    pub fn bruhat_leq(&self, u: &GroupElement, w: &GroupElement) -> bool {
        let mut u = u.clone();
        let mut w = w.clone();
        loop {
            if u.length > w.length {
                return false;
            }
            if u.length == 0 {
                return true;
            }
            if u.length == w.length {
                return u == w;
            }
            let s = (0..self.rank).find(|&i| self.is_right_descent(&w, i)).expect("w is not the identity");
            if self.is_right_descent(&u, s) {
                u = self.mul_simple_right(&u, s);
            }
            w = self.mul_simple_right(&w, s);
        }
    }

    pub fn is_min_coset_rep(&self, w: &GroupElement, p: Parabolic) -> bool {
        p.iter().take_while(|&i| i < self.rank).all(|i| !self.is_right_descent(w, i))
    }

    pub fn min_coset_rep(&self, w: &GroupElement, p: Parabolic) -> GroupElement {
        let mut w = w.clone();
        while let Some(i) = p.iter().take_while(|&i| i < self.rank).find(|&i| self.is_right_descent(&w, i)) {
            w = self.mul_simple_right(&w, i);
        }
        w
    }

    /// All of `W^P`, sorted by length and then lex-least reduced word.
    pub fn enumerate_quotient(&self, p: Parabolic) -> Result<Vec<GroupElement>> {
        let mut seen: HashSet<GroupElement> = HashSet::new();
        let mut level = vec![self.identity()];
        seen.insert(self.identity());
        let mut out = vec![self.identity()];
        while !level.is_empty() {
            let mut next = Vec::new();
            for w in &level {
                for i in 0..self.rank {
                    if self.is_left_descent(w, i) {
                        continue;
                    }
                    let v = self.min_coset_rep(&self.mul_simple_left(i, w), p);
                    if v.length != w.length + 1 || seen.contains(&v) {
                        continue;
                    }
                    if seen.len() >= self.size_cap {
                        return Err(Error::SizeCapExceeded { cap: self.size_cap });
                    }
                    seen.insert(v.clone());
                    next.push(v);
                }
            }
            out.extend(next.iter().cloned());
            level = next;
        }
        Ok(self.sort_elements(out))
    }

    pub fn sort_elements(&self, elems: Vec<GroupElement>) -> Vec<GroupElement> {
        let mut keyed: Vec<(usize, Word, GroupElement)> =
            elems.into_iter().map(|e| (e.length(), self.lex_least_word(&e), e)).collect();
        keyed.sort_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)));
        keyed.into_iter().map(|(_, _, e)| e).collect()
    }

    /// The longest element, found by climbing until no ascent remains.
    pub fn longest_element(&self) -> GroupElement {
        let mut w = self.identity();
        while let Some(i) = (0..self.rank).find(|&i| !self.is_right_descent(&w, i)) {
            w = self.mul_simple_right(&w, i);
        }
        w
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn group(name: &str) -> CoxeterGroup {
        CoxeterGroup::new(RootDatum::simply_laced_type(name).unwrap()).unwrap()
    }

    fn w(g: &CoxeterGroup, s: &str) -> GroupElement {
        g.element_of(&Word::parse(s, g.rank()).unwrap()).unwrap()
    }

    #[test]
    fn element_lengths() {
        let g = group("A2");
        assert_eq!(w(&g, "121").length(), 3);
        assert_eq!(w(&g, "").length(), 0);
        assert!(w(&g, "11").is_identity());
        assert_eq!(w(&g, "121"), w(&g, "212"));
        assert!(matches!(g.element_of(&Word(vec![5])), Err(Error::BadIndex { .. })));
    }

    #[test]
    fn reducedness() {
        let g = group("A2");
        assert!(g.is_reduced(&Word::parse("121", 2).unwrap()));
        assert!(!g.is_reduced(&Word::parse("11", 2).unwrap()));
        let g4 = group("A4");
        assert!(g4.is_reduced(&Word::parse("2123", 4).unwrap()));
    }

    #[test]
    fn reduced_word_sets() {
        let g = group("A2");
        let red: Vec<String> = g.reduced_words(&w(&g, "121")).unwrap().iter().map(|x| x.to_string()).collect();
        assert_eq!(red, ["121", "212"]);
        let g4 = group("A4");
        let red: Vec<String> = g4.reduced_words(&w(&g4, "2123")).unwrap().iter().map(|x| x.to_string()).collect();
        assert_eq!(red, ["1213", "1231", "2123"]);
        assert_eq!(g.reduced_words(&g.identity()).unwrap().len(), 1);
    }

    #[test]
    fn bruhat_examples() {
        let g = group("A2");
        let all = g.enumerate_quotient(Parabolic::empty()).unwrap();
        for x in &all {
            assert!(g.bruhat_leq(&g.identity(), x));
        }
        assert!(g.bruhat_leq(&w(&g, "1"), &w(&g, "21")));
        assert!(!g.bruhat_leq(&w(&g, "12"), &w(&g, "21")));
        assert!(!g.bruhat_leq(&w(&g, "21"), &w(&g, "12")));
    }

    #[test]
    fn coset_reps() {
        let g = group("A2");
        let p = Parabolic::from_one_based(&[1]);
        assert_eq!(g.min_coset_rep(&w(&g, "21"), p), w(&g, "2"));
        assert_eq!(g.min_coset_rep(&w(&g, "12"), p), w(&g, "12"));
        assert_eq!(g.min_coset_rep(&w(&g, "21"), Parabolic::empty()), w(&g, "21"));
        let q = g.enumerate_quotient(p).unwrap();
        let words: Vec<String> = q.iter().map(|x| g.lex_least_word(x).to_string()).collect();
        assert_eq!(words, ["e", "2", "12"]);
    }

    #[test]
    fn group_orders() {
        for (name, order) in [("A2", 6), ("A3", 24), ("A4", 120), ("D4", 192)] {
            assert_eq!(group(name).enumerate_quotient(Parabolic::empty()).unwrap().len(), order);
        }
    }

    #[test]
    fn size_cap_reported() {
        let g = group("A4").with_size_cap(50);
        assert_eq!(g.enumerate_quotient(Parabolic::empty()), Err(Error::SizeCapExceeded { cap: 50 }));
    }

    #[test]
    fn length_cap_reported() {
        let g = group("A4").with_length_cap(3);
        assert!(matches!(g.reduced_words(&w(&g, "1234")), Err(Error::LengthCapExceeded { length: 4, cap: 3 })));
    }

    #[test]
    fn reflections_are_involutions() {
        let g = group("A3");
        for k in 0..g.positive_roots().len() {
            let r = g.reflection(k);
            assert!(g.mul(r, r).is_identity());
            assert_eq!(r.length() % 2, 1);
        }
    }

    #[test]
    fn word_rendering() {
        assert_eq!(Word::from_one_based(&[1, 2, 13]).to_string(), "1,2,13");
        assert_eq!(Word::parse("1,2,13", 13).unwrap(), Word::from_one_based(&[1, 2, 13]));
        assert_eq!(Word::from_one_based(&[1, 2]).render_with("R"), "R1R2");
        assert_eq!(Word::empty().to_string(), "e");
    }
}
