//! Liftings of folded Schubert classes: the letter map `phi`, the folding
//! subset `F(W)`, liftability searches and nonliftability certificates.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use hashbrown::HashMap;

use crate::coxeter::{GroupElement, Parabolic, Word};
use crate::folding::{FoldingData, FoldingId};
use crate::poly::Poly;
use crate::schubert::{diagonal_value, SchubertDp};
use crate::{Error, Result};

/// How a [`LiftReport`] was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LiftMethod {
    FoldingSetSearch,
    BruteForceOracle,
    CatalogNonliftable,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LiftReport {
    pub u: GroupElement,
    /// Lex-least reduced word of `u` over the folded generators.
    pub u_word: Word,
    /// Sorted by length, then lex-least reduced word.
    pub liftings: Vec<GroupElement>,
    pub words: Vec<Word>,
    /// `m` with `iota^*(Y_w) = tau^m Y_u`, one per lifting. Empty when not
    /// requested.
    pub exponents: Vec<u32>,
    pub method: LiftMethod,
}

impl LiftReport {
    pub fn is_liftable(&self) -> bool {
        !self.liftings.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SweepVerdict {
    /// Every element of the folded quotient lifts.
    Holds { checked: usize },
    /// Every element up to the length cap lifts; longer ones were skipped.
    HoldsUpToCap { cap: usize, checked: usize },
    /// The first nonliftable element in (length, lex) order.
    Witness { u: GroupElement, word: Word },
}

/// Letterwise `phi` image, no collapsing.
pub fn phi_word(fd: &FoldingData, word: &Word) -> Word {
    Word(word.letters().iter().map(|&i| fd.phi(i as usize) as u8).collect())
}

/// `phi_hat`: letterwise image of a reduced word with adjacent equal letters
/// collapsed, scanning left to right.
pub fn phi_hat(fd: &FoldingData, word: &Word) -> Result<Word> {
    if !fd.original().is_reduced(word) {
        return Err(Error::NotReduced);
    }
    let mut out: Vec<u8> = Vec::with_capacity(word.len());
    for &i in word.letters() {
        let j = fd.phi(i as usize) as u8;
        if out.last() != Some(&j) {
            out.push(j);
        }
    }
    Ok(Word(out))
}

/// Membership in `F(W)` by enumerating `Red(w)`.
pub fn in_folding_set_enumerated(fd: &FoldingData, w: &GroupElement) -> Result<bool> {
    if w.is_identity() {
        return Ok(true);
    }
    let folded = fd.folded();
    let mut common: Option<GroupElement> = None;
    for word in fd.original().reduced_words(w)? {
        let image = phi_word(fd, &word);
        if !folded.is_reduced(&image) {
            return Ok(false);
        }
        let u = folded.element_of(&image)?;
        match &common {
            None => common = Some(u),
            Some(c) if *c != u => return Ok(false),
            Some(_) => {}
        }
    }
    Ok(true)
}

/// Number of positions where a letter is followed by its opposite.
pub fn opposite_adjacencies(fd: &FoldingData, word: &Word) -> usize {
    word.letters().windows(2).filter(|p| fd.opposite(p[0] as usize) == Some(p[1] as usize)).count()
}

/// Reduced words of `w` with the maximal number of opposite adjacencies.
pub fn adm_red(fd: &FoldingData, w: &GroupElement) -> Result<Vec<Word>> {
    let words = fd.original().reduced_words(w)?;
    let best = words.iter().map(|x| opposite_adjacencies(fd, x)).max().unwrap_or(0);
    Ok(words.into_iter().filter(|x| opposite_adjacencies(fd, x) == best).collect())
}

/// Folding-set decisions with a memo of `phi_bar`.
///
/// `w != e` lies in `F(W)` iff for every right descent `s`, `ws` lies in
/// `F(W)`, `phi_bar(ws) phi(s)` is length-additive, and all these products
/// agree. This is (FS1)/(FS2) split along the last letter of each reduced
/// word.
#[derive(Debug, Clone)]
pub struct Lifter<'a> {
    fd: &'a FoldingData,
    memo: HashMap<GroupElement, Option<GroupElement>>,
}

impl<'a> Lifter<'a> {
    pub fn new(fd: &'a FoldingData) -> Self {
        Lifter { fd, memo: HashMap::new() }
    }

    pub fn folding_data(&self) -> &'a FoldingData {
        self.fd
    }

    /// `Some(phi_bar(w))` when `w` is in `F(W)`.
    pub fn image(&mut self, w: &GroupElement) -> Option<GroupElement> {
        if w.is_identity() {
            return Some(self.fd.folded().identity());
        }
        if let Some(hit) = self.memo.get(w) {
            return hit.clone();
        }
        let orig = self.fd.original();
        let folded = self.fd.folded();
        let mut result: Option<GroupElement> = None;
        let mut ok = true;
        for s in orig.right_descents(w) {
            let ws = orig.mul_simple_right(w, s);
            let Some(x) = self.image(&ws) else {
                ok = false;
                break;
            };
            let r = self.fd.phi(s);
            if folded.is_right_descent(&x, r) {
                ok = false;
                break;
            }
            let y = folded.mul_simple_right(&x, r);
            match &result {
                None => result = Some(y),
                Some(prev) if *prev != y => {
                    ok = false;
                    break;
                }
                Some(_) => {}
            }
        }
        let out = if ok { result } else { None };
        self.memo.insert(w.clone(), out.clone());
        out
    }

    pub fn in_folding_set(&mut self, w: &GroupElement) -> bool {
        self.image(w).is_some()
    }

    pub fn phi_bar(&mut self, w: &GroupElement) -> Result<GroupElement> {
        self.image(w).ok_or(Error::NotInFoldingSet)
    }

    /// All `w` in `F(W) ∩ W^P` with `phi_bar(w) = u`.
    ///
    /// Every lifting has a reduced word matching any fixed reduced word of
    /// `u` letter by letter, and prefixes of elements of `F(W)` stay in
    /// `F(W)`, so a depth-first search over preimage letters of the
    /// lex-least word of `u` is complete.
    pub fn liftings_of(&mut self, u: &GroupElement, p: Parabolic) -> Result<LiftReport> {
        let fd = self.fd;
        let cap = fd.folded().length_cap();
        if u.length() > cap {
            return Err(Error::LengthCapExceeded { length: u.length(), cap });
        }
        let u_word = fd.folded().lex_least_word(u);
        let mut found: Vec<GroupElement> = Vec::new();
        let mut stack = vec![(0usize, fd.original().identity())];
        while let Some((depth, w)) = stack.pop() {
            if depth == u_word.len() {
                if fd.original().is_min_coset_rep(&w, p) && !found.contains(&w) {
                    found.push(w);
                }
                continue;
            }
            let j = u_word.letters()[depth] as usize;
            for s in fd.fibres()[j].members() {
                if fd.original().is_right_descent(&w, s) {
                    continue;
                }
                let ws = fd.original().mul_simple_right(&w, s);
                if self.in_folding_set(&ws) {
                    stack.push((depth + 1, ws));
                }
            }
        }
        let liftings = fd.original().sort_elements(found);
        let words = liftings.iter().map(|w| fd.original().lex_least_word(w)).collect();
        Ok(LiftReport {
            u: u.clone(),
            u_word,
            liftings,
            words,
            exponents: Vec::new(),
            method: LiftMethod::FoldingSetSearch,
        })
    }

    /// [`Lifter::liftings_of`] with the exponent of every lifting filled in.
    pub fn liftings_with_exponents(&mut self, u: &GroupElement, p: Parabolic) -> Result<LiftReport> {
        let mut report = self.liftings_of(u, p)?;
        report.exponents =
            report.liftings.iter().map(|w| lifting_exponent(self.fd, w, u)).collect::<Result<Vec<_>>>()?;
        Ok(report)
    }
}

/// `iota^*(Y_w)(v) = pi_tau(Y_w(iota(v)))` for a folded element `v`.
pub fn pullback_value(fd: &FoldingData, dp: &SchubertDp, v: &GroupElement) -> Poly {
    let word = fd.embed(&fd.folded().lex_least_word(v));
    fd.pi_tau_poly(&dp.evaluate(fd.original(), &word))
}

/// `m` with `c = tau^m`, where `c = iota^*(Y_w)(u) / Y_u(u)`.
pub fn lifting_exponent(fd: &FoldingData, w: &GroupElement, u: &GroupElement) -> Result<u32> {
    let dp = SchubertDp::new(fd.original(), w);
    let lhs = pullback_value(fd, &dp, u);
    let rhs = diagonal_value(fd.folded(), u);
    let c = lhs.scalar_ratio(&rhs)?.ok_or(Error::NotAPowerOfTau)?;
    tau_exponent(fd, &c, w.length())
}

fn tau_exponent(fd: &FoldingData, c: &crate::QElem, bound: usize) -> Result<u32> {
    let ring = fd.ring();
    if ring.is_split() {
        // The folded side evaluates tau at 1, so only c = 1 is a power.
        return if c.is_one() { Ok(0) } else { Err(Error::NotAPowerOfTau) };
    }
    let tau = ring.tau();
    let mut t = ring.one();
    for m in 0..=bound as u32 {
        if t == *c {
            return Ok(m);
        }
        t = &t * &tau;
    }
    Err(Error::NotAPowerOfTau)
}

/// Check `iota^*(Y_w) = tau^m Y_u` at every vertex of the folded quotient
/// by `phi(P)`.
pub fn verify_exponent(fd: &FoldingData, w: &GroupElement, u: &GroupElement, m: u32, p: Parabolic) -> Result<bool> {
    let q = fd.folded_parabolic(p)?;
    let folded = fd.folded();
    let ring = fd.ring();
    let scale = if ring.is_split() { ring.one() } else { ring.tau().pow(m) };
    let dw = SchubertDp::new(fd.original(), w);
    let du = SchubertDp::new(folded, u);
    for v in folded.enumerate_quotient(q)? {
        let lhs = pullback_value(fd, &dw, &v);
        let rhs = du.evaluate(folded, &folded.lex_least_word(&v)).scale(&scale);
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Liftings by conditions (C1)-(C3), using only Bruhat order and the
/// embedding. Independent of the folding subset.
pub fn brute_force_lifting_oracle(fd: &FoldingData, u: &GroupElement, p: Parabolic) -> Result<Vec<GroupElement>> {
    let q = fd.folded_parabolic(p)?;
    let orig = fd.original();
    let folded = fd.folded();
    let iu = fd.embed_element(u);
    let others: Vec<GroupElement> = folded
        .enumerate_quotient(q)?
        .into_iter()
        .filter(|v| !folded.bruhat_leq(u, v))
        .map(|v| fd.embed_element(&v))
        .collect();
    let out = orig
        .enumerate_quotient(p)?
        .into_iter()
        .filter(|w| w.length() == u.length())
        .filter(|w| orig.bruhat_leq(w, &iu))
        .filter(|w| others.iter().all(|iv| !orig.bruhat_leq(w, iv)))
        .collect();
    Ok(orig.sort_elements(out))
}

/// Report form of [`brute_force_lifting_oracle`].
pub fn brute_force_report(fd: &FoldingData, u: &GroupElement, p: Parabolic) -> Result<LiftReport> {
    let liftings = brute_force_lifting_oracle(fd, u, p)?;
    let words = liftings.iter().map(|w| fd.original().lex_least_word(w)).collect();
    Ok(LiftReport {
        u: u.clone(),
        u_word: fd.folded().lex_least_word(u),
        liftings,
        words,
        exponents: Vec::new(),
        method: LiftMethod::BruteForceOracle,
    })
}

/// Known nonliftable folded words (1-based letters) for a catalog folding.
pub fn catalog_nonliftable_words(id: FoldingId) -> Vec<Word> {
    let lists: Vec<Vec<usize>> = match id {
        FoldingId::AC(n) => {
            let mut v = vec![vec![n, n - 1, n], vec![n - 1, n, n - 1, n]];
            if n >= 3 {
                v.push(vec![n - 1, n - 2, n - 1, n, n - 1]);
            }
            v
        }
        FoldingId::DB(n) => vec![vec![n - 1, n, n - 1], vec![n - 1, n, n - 1, n]],
        FoldingId::E6F4 => vec![vec![2, 3, 2], vec![3, 4, 3, 2, 3], vec![2, 3, 2, 3]],
        FoldingId::E8H4 => vec![vec![3, 2, 3, 4, 3], vec![3, 4, 3, 4, 3]],
        FoldingId::D6H3 => vec![vec![2, 1, 2, 3, 2], vec![2, 3, 2, 3, 2]],
        FoldingId::A4H2 => vec![vec![1, 2, 1, 2, 1]],
    };
    lists.iter().map(|l| Word::from_one_based(l)).collect()
}

/// Alternating words `[R, R']_m` for every folded bond of order 4 or 5.
pub fn braid_nonliftable_words(fd: &FoldingData) -> Vec<Word> {
    let cox = fd.folded().datum().coxeter_matrix();
    let mut out = Vec::new();
    for (a, row) in cox.iter().enumerate() {
        for (b, &m) in row.iter().enumerate() {
            let m = m as usize;
            if a != b && (m == 4 || m == 5) {
                out.push(Word((0..m).map(|k| if k % 2 == 0 { a as u8 } else { b as u8 }).collect()));
            }
        }
    }
    out
}

/// Elements certified nonliftable, closed under inversion.
pub fn nonliftable_patterns(fd: &FoldingData) -> Result<BTreeSet<Word>> {
    let folded = fd.folded();
    let mut out = BTreeSet::new();
    for word in catalog_nonliftable_words(fd.id()).into_iter().chain(braid_nonliftable_words(fd)) {
        let x = folded.element_of(&word)?;
        out.insert(folded.lex_least_word(&x));
        out.insert(folded.lex_least_word(&x.inverse()));
    }
    Ok(out)
}

/// True when some reduced word of `u` has a consecutive subword equal in
/// the folded group to a certified nonliftable element. False is
/// inconclusive.
pub fn nonliftable_by_catalog(fd: &FoldingData, u_word: &Word) -> Result<bool> {
    let folded = fd.folded();
    if !folded.is_reduced(u_word) {
        return Err(Error::NotReduced);
    }
    let patterns = nonliftable_patterns(fd)?;
    let lengths: BTreeSet<usize> = patterns.iter().map(Word::len).collect();
    let u = folded.element_of(u_word)?;
    for word in folded.reduced_words(&u)? {
        let letters = word.letters();
        for &len in &lengths {
            for window in letters.windows(len) {
                let x = folded.element_of(&Word(window.to_vec()))?;
                if patterns.contains(&folded.lex_least_word(&x)) {
                    return Ok(true);
                }
            }
        }
    }
    Ok(false)
}

/// Walk the folded quotient by `phi(P)` in (length, lex) order and stop at
/// the first nonliftable element.
pub fn lifting_property_sweep(fd: &FoldingData, p: Parabolic, length_cap: usize) -> Result<SweepVerdict> {
    let q = fd.folded_parabolic(p)?;
    let folded = fd.folded();
    let quotient = folded.enumerate_quotient(q)?;
    let mut lifter = Lifter::new(fd);
    let mut checked = 0;
    let mut truncated = false;
    for u in &quotient {
        if u.length() > length_cap {
            truncated = true;
            break;
        }
        if !lifter.liftings_of(u, p)?.is_liftable() {
            return Ok(SweepVerdict::Witness { u: u.clone(), word: folded.lex_least_word(u) });
        }
        checked += 1;
    }
    Ok(if truncated {
        SweepVerdict::HoldsUpToCap { cap: length_cap, checked }
    } else {
        SweepVerdict::Holds { checked }
    })
}
