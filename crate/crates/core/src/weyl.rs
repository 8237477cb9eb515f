//! Weyl group elements with canonical reduced words, inversion sets, cell
//! dimensions and minimal coset representatives.

use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::nodeset::NodeSet;
use crate::real_form::{RankClass, RealFormDatum};
use crate::roots::{Root, RootSystem};

/// Which reduced word represents an element.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub enum WordPolicy {
    /// Lexicographically least reduced word.
    #[default]
    LexMin,
    /// Lexicographically greatest reduced word.
    LexMax,
}

/// An element of the Weyl group, stored by its action on the simple roots
/// together with a canonical reduced word.
#[derive(Clone)]
pub struct WeylElement {
    rank: usize,
    word: Vec<usize>,
    /// Column `j` (entries `j*rank .. (j+1)*rank`) is `w(alpha_j)`.
    action: Vec<i64>,
    /// Same layout for `w^{-1}`.
    inverse: Vec<i64>,
}

impl PartialEq for WeylElement {
    fn eq(&self, other: &Self) -> bool {
        self.action == other.action
    }
}

impl Eq for WeylElement {}

impl Hash for WeylElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.action.hash(state);
    }
}

impl fmt::Debug for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "WeylElement({})", self)
    }
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_word(&self.word, |i| i + 1))
    }
}

/// Renders a word as `s1*s2`, or `e` when empty, relabelling letters with `label`.
pub fn render_word(word: &[usize], label: impl Fn(usize) -> usize) -> String {
    if word.is_empty() {
        return "e".into();
    }
    let parts: Vec<String> = word.iter().map(|&i| format!("s{}", label(i))).collect();
    parts.join("*")
}

fn identity_matrix(n: usize) -> Vec<i64> {
    let mut m = vec![0; n * n];
    for i in 0..n {
        m[i * n + i] = 1;
    }
    m
}

fn column(m: &[i64], n: usize, j: usize) -> &[i64] {
    &m[j * n..(j + 1) * n]
}

fn apply_matrix(m: &[i64], n: usize, v: &[i64]) -> Vec<i64> {
    let mut out = vec![0; n];
    for (j, &c) in v.iter().enumerate() {
        if c == 0 {
            continue;
        }
        for (o, x) in out.iter_mut().zip(column(m, n, j)) {
            *o += c * x;
        }
    }
    out
}

fn is_negative(v: &[i64]) -> bool {
    v.iter().any(|&c| c < 0)
}

/// `r_i * m` for a matrix given by columns.
fn reflect_columns(rs: &RootSystem, i: usize, m: &mut [i64]) {
    let n = rs.rank();
    let row = &rs.cartan_matrix()[i];
    for j in 0..n {
        let col = &mut m[j * n..(j + 1) * n];
        let k: i64 = row.iter().zip(col.iter()).map(|(a, c)| a * c).sum();
        col[i] -= k;
    }
}

/// `m * r_i` for a matrix given by columns.
fn reflect_right(rs: &RootSystem, i: usize, m: &mut [i64]) {
    let n = rs.rank();
    let row = &rs.cartan_matrix()[i];
    let ci: Vec<i64> = column(m, n, i).to_vec();
    for j in 0..n {
        let a = row[j];
        if a == 0 {
            continue;
        }
        for (x, y) in m[j * n..(j + 1) * n].iter_mut().zip(&ci) {
            *x -= a * y;
        }
    }
}

impl WeylElement {
    pub fn identity(rank: usize) -> Self {
        WeylElement {
            rank,
            word: vec![],
            action: identity_matrix(rank),
            inverse: identity_matrix(rank),
        }
    }

    /// The product of the simple reflections in `word` (not necessarily
    /// reduced), with its canonical word.
    pub fn from_word(rs: &RootSystem, word: &[usize]) -> Result<Self> {
        Self::from_word_with(rs, word, WordPolicy::LexMin)
    }

    pub fn from_word_with(rs: &RootSystem, word: &[usize], policy: WordPolicy) -> Result<Self> {
        let n = rs.rank();
        let mut action = identity_matrix(n);
        let mut inverse = identity_matrix(n);
        for &i in word.iter().rev() {
            if i >= n {
                return Err(Error::IndexOutOfRange { index: i, rank: n });
            }
            reflect_columns(rs, i, &mut action);
            reflect_right(rs, i, &mut inverse);
        }
        Ok(Self::canonicalize(rs, action, inverse, policy))
    }

    /// Like [`from_word`](Self::from_word) but rejects non-reduced words.
    pub fn from_reduced_word(rs: &RootSystem, word: &[usize]) -> Result<Self> {
        let w = Self::from_word(rs, word)?;
        if w.length() != word.len() {
            return Err(Error::NotReduced {
                word: word.to_vec(),
            });
        }
        Ok(w)
    }

    fn canonicalize(
        rs: &RootSystem,
        action: Vec<i64>,
        inverse: Vec<i64>,
        policy: WordPolicy,
    ) -> Self {
        let n = rs.rank();
        let mut word = Vec::new();
        let mut act = action.clone();
        let mut inv = inverse.clone();
        loop {
            let mut descents = (0..n).filter(|&i| is_negative(column(&inv, n, i)));
            let next = match policy {
                WordPolicy::LexMin => descents.next(),
                WordPolicy::LexMax => descents.next_back(),
            };
            let Some(i) = next else { break };
            word.push(i);
            reflect_columns(rs, i, &mut act);
            reflect_right(rs, i, &mut inv);
        }
        WeylElement {
            rank: n,
            word,
            action,
            inverse,
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// The canonical reduced word (0-based letters).
    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn length(&self) -> usize {
        self.word.len()
    }

    pub fn is_identity(&self) -> bool {
        self.word.is_empty()
    }

    pub fn apply(&self, v: &Root) -> Root {
        Root::new(apply_matrix(&self.action, self.rank, v.coefficients()))
    }

    pub fn apply_inverse(&self, v: &Root) -> Root {
        Root::new(apply_matrix(&self.inverse, self.rank, v.coefficients()))
    }

    /// `w(alpha_j)`.
    pub fn image_of_simple(&self, j: usize) -> Root {
        Root::new(column(&self.action, self.rank, j).to_vec())
    }

    pub fn inverse(&self, rs: &RootSystem) -> WeylElement {
        Self::canonicalize(
            rs,
            self.inverse.clone(),
            self.action.clone(),
            WordPolicy::LexMin,
        )
    }

    /// `self * other`.
    pub fn compose(&self, rs: &RootSystem, other: &WeylElement) -> WeylElement {
        let n = self.rank;
        let mut action = Vec::with_capacity(n * n);
        let mut inverse = Vec::with_capacity(n * n);
        for j in 0..n {
            action.extend(apply_matrix(&self.action, n, column(&other.action, n, j)));
            inverse.extend(apply_matrix(&other.inverse, n, column(&self.inverse, n, j)));
        }
        Self::canonicalize(rs, action, inverse, WordPolicy::LexMin)
    }

    /// `Pi_w`: positive roots sent to negative roots by `w^{-1}`.
    pub fn inversion_set(&self, rs: &RootSystem) -> Vec<Root> {
        rs.positive_roots()
            .iter()
            .filter(|b| self.apply_inverse(b).is_negative())
            .cloned()
            .collect()
    }

    /// Positive roots sent to negative roots by `w` (the inversion set of `w^{-1}`).
    pub fn inverted_roots(&self, rs: &RootSystem) -> Vec<Root> {
        rs.positive_roots()
            .iter()
            .filter(|b| self.apply(b).is_negative())
            .cloned()
            .collect()
    }

    /// Simple roots `i` with `l(r_i w) < l(w)`.
    pub fn left_descents(&self) -> NodeSet {
        (0..self.rank)
            .filter(|&i| is_negative(column(&self.inverse, self.rank, i)))
            .collect()
    }

    /// Simple roots `i` with `l(w r_i) < l(w)`.
    pub fn right_descents(&self) -> NodeSet {
        (0..self.rank)
            .filter(|&i| is_negative(column(&self.action, self.rank, i)))
            .collect()
    }

    /// Whether `w` is the shortest element of `w W_Theta`: no positive root
    /// spanned by `Theta` is sent to a negative root.
    pub fn is_minimal(&self, rs: &RootSystem, theta: NodeSet) -> bool {
        !self
            .inverted_roots(rs)
            .iter()
            .any(|g| g.support().is_subset(theta))
    }
}

/// Settings for [`enumerate_weyl_with`].
#[derive(Debug, Clone, Copy)]
pub struct EnumerateOptions {
    /// Largest group order accepted for a full enumeration.
    pub cap: u128,
    pub policy: WordPolicy,
}

pub const DEFAULT_CAP: u128 = 51_840;

impl Default for EnumerateOptions {
    fn default() -> Self {
        EnumerateOptions {
            cap: DEFAULT_CAP,
            policy: WordPolicy::LexMin,
        }
    }
}

/// Elements of length at most `max_length` (all elements when `None`),
/// ordered by length and then canonical word.
pub fn enumerate_weyl(rs: &RootSystem, max_length: Option<usize>) -> Result<Vec<WeylElement>> {
    enumerate_weyl_with(rs, max_length, &EnumerateOptions::default())
}

pub fn enumerate_weyl_with(
    rs: &RootSystem,
    max_length: Option<usize>,
    opts: &EnumerateOptions,
) -> Result<Vec<WeylElement>> {
    let n = rs.rank();
    let longest = rs.positive_roots().len();
    if max_length.is_none_or(|m| m >= longest) && rs.weyl_order() > opts.cap {
        return Err(Error::EnumerationCap {
            required: rs.weyl_order(),
            cap: opts.cap,
        });
    }
    let limit = max_length.unwrap_or(longest);
    let mut out = vec![WeylElement::identity(n)];
    let mut level: Vec<WeylElement> = out.clone();
    for _ in 0..limit {
        let mut next: HashMap<Vec<i64>, WeylElement> = HashMap::new();
        for w in &level {
            for i in 0..n {
                // r_i w is longer iff w^{-1}(alpha_i) > 0
                if is_negative(column(&w.inverse, n, i)) {
                    continue;
                }
                let mut word = Vec::with_capacity(w.word.len() + 1);
                word.push(i);
                word.extend_from_slice(&w.word);
                let mut action = w.action.clone();
                reflect_columns(rs, i, &mut action);
                match next.get_mut(&action) {
                    Some(v) => {
                        let better = match opts.policy {
                            WordPolicy::LexMin => word < v.word,
                            WordPolicy::LexMax => word > v.word,
                        };
                        if better {
                            v.word = word;
                        }
                    }
                    None => {
                        let mut inverse = w.inverse.clone();
                        reflect_right(rs, i, &mut inverse);
                        next.insert(
                            action.clone(),
                            WeylElement {
                                rank: n,
                                word,
                                action,
                                inverse,
                            },
                        );
                    }
                }
            }
        }
        if next.is_empty() {
            break;
        }
        let mut v: Vec<WeylElement> = next.into_values().collect();
        v.sort_by(|a, b| a.word.cmp(&b.word));
        out.extend(v.iter().cloned());
        level = v;
    }
    Ok(out)
}

/// Dimension of a Schubert cell, exact up to 3.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CellDim {
    Finite(usize),
    /// Larger than 3, or containing a letter of unknown rank at least 3.
    Big,
}

impl CellDim {
    pub fn finite(self) -> Option<usize> {
        match self {
            CellDim::Finite(d) => Some(d),
            CellDim::Big => None,
        }
    }
}

impl fmt::Display for CellDim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CellDim::Finite(d) => write!(f, "{d}"),
            CellDim::Big => f.write_str("big"),
        }
    }
}

/// Sum of the ranks of the letters of a reduced word, saturating above 3.
pub fn word_dimension(word: &[usize], classes: &[RankClass]) -> CellDim {
    let mut total = 0;
    for &i in word {
        match classes[i].value() {
            Some(v) => total += v,
            None => return CellDim::Big,
        }
        if total > 3 {
            return CellDim::Big;
        }
    }
    CellDim::Finite(total)
}

/// `dim S_w`: the sum of the ranks of the letters of the canonical word.
pub fn cell_dimension(w: &WeylElement, rf: &RealFormDatum) -> CellDim {
    word_dimension(w.word(), &rf.rank_class)
}

/// A coset `w W_Theta` represented by its shortest element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetClass {
    pub theta: NodeSet,
    pub representative: WeylElement,
}

/// Minimal coset representatives of length at most `max_length`.
pub fn minimal_representatives(
    rs: &RootSystem,
    theta: NodeSet,
    max_length: usize,
) -> Result<Vec<CosetClass>> {
    Ok(enumerate_weyl(rs, Some(max_length))?
        .into_iter()
        .filter(|w| w.is_minimal(rs, theta))
        .map(|w| CosetClass {
            theta,
            representative: w,
        })
        .collect())
}

fn in_span(r: &Root, theta: NodeSet) -> bool {
    r.support().is_subset(theta)
}

/// Minimality of a reduced word of length at most 3 by the closed criteria:
/// `r_a` iff `a` is outside `Theta`; `r_a r_b` iff `b` is outside `Theta` and
/// `r_b(alpha_a)` is not spanned by `Theta`; `r_a r_b r_c` iff `c` is outside
/// `Theta` and neither `r_c(alpha_b)` nor `r_c r_b(alpha_a)` is spanned by `Theta`.
/// Returns `None` for longer words.
pub fn minimal_by_closed_form(rs: &RootSystem, word: &[usize], theta: NodeSet) -> Option<bool> {
    let s = |i: usize| rs.simple_root(i);
    match *word {
        [] => Some(true),
        [a] => Some(!theta.contains(a)),
        [a, b] => Some(!theta.contains(b) && !in_span(&rs.simple_reflect(b, &s(a)), theta)),
        [a, b, c] => {
            let cb = rs.simple_reflect(c, &s(b));
            let cba = rs.simple_reflect(c, &rs.simple_reflect(b, &s(a)));
            Some(!theta.contains(c) && !in_span(&cb, theta) && !in_span(&cba, theta))
        }
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::real_form::{real_form_lookup, Params, RealFormLabel};
    use crate::roots::{CartanType, Family};
    use proptest::prelude::*;
    use std::collections::HashSet;

    fn rs(f: Family, n: usize) -> RootSystem {
        RootSystem::build(f, n).unwrap()
    }

    fn small_types() -> Vec<CartanType> {
        let mut v = vec![];
        for f in Family::ALL {
            for n in 1..=4 {
                if let Ok(t) = CartanType::new(f, n) {
                    v.push(t);
                }
            }
        }
        v
    }

    /// Closure of the simple reflections as permutations of all roots.
    fn brute_force_order(rs: &RootSystem) -> usize {
        let mut roots: Vec<Root> = rs.positive_roots().to_vec();
        roots.extend(rs.positive_roots().iter().map(Root::neg));
        let idx: HashMap<Root, usize> = roots.iter().cloned().zip(0..).collect();
        let gens: Vec<Vec<usize>> = (0..rs.rank())
            .map(|i| {
                roots
                    .iter()
                    .map(|r| idx[&rs.simple_reflect(i, r)])
                    .collect()
            })
            .collect();
        let id: Vec<usize> = (0..roots.len()).collect();
        let mut seen: HashSet<Vec<usize>> = HashSet::from([id.clone()]);
        let mut stack = vec![id];
        while let Some(p) = stack.pop() {
            for g in &gens {
                let q: Vec<usize> = p.iter().map(|&k| g[k]).collect();
                if seen.insert(q.clone()) {
                    stack.push(q);
                }
            }
        }
        seen.len()
    }

    #[test]
    fn group_orders() {
        for t in small_types() {
            let r = rs(t.family, t.rank);
            let all = enumerate_weyl(&r, None).unwrap();
            assert_eq!(all.len() as u128, t.weyl_order(), "{t}");
            assert_eq!(all.len(), brute_force_order(&r), "{t}");
            let distinct: HashSet<&WeylElement> = all.iter().collect();
            assert_eq!(distinct.len(), all.len());
        }
    }

    #[test]
    fn enumeration_examples() {
        let a2 = enumerate_weyl(&rs(Family::A, 2), None).unwrap();
        let mut lens: Vec<usize> = a2.iter().map(WeylElement::length).collect();
        lens.sort();
        assert_eq!(lens, vec![0, 1, 1, 2, 2, 3]);
        assert!(a2[0].word().is_empty());
        assert_eq!(enumerate_weyl(&rs(Family::G, 2), None).unwrap().len(), 12);
        assert_eq!(enumerate_weyl(&rs(Family::B, 2), Some(2)).unwrap().len(), 5);
        let err = enumerate_weyl(&rs(Family::E, 7), None).unwrap_err();
        assert_eq!(
            err,
            Error::EnumerationCap {
                required: 2_903_040,
                cap: DEFAULT_CAP
            }
        );
        // Poincare series of E8 up to t^3: (1 - t^2) / (1 - t)^8 + O(t^4)
        assert_eq!(
            enumerate_weyl(&rs(Family::E, 8), Some(3)).unwrap().len(),
            1 + 8 + 35 + 112
        );
    }

    #[test]
    fn inversion_set_examples() {
        let a2 = rs(Family::A, 2);
        assert!(WeylElement::identity(2).inversion_set(&a2).is_empty());
        let w = WeylElement::from_word(&a2, &[0, 1]).unwrap();
        let inv: Vec<Vec<i64>> = w
            .inversion_set(&a2)
            .iter()
            .map(|r| r.coefficients().to_vec())
            .collect();
        assert_eq!(inv, vec![vec![1, 0], vec![1, 1]]);
        let w = WeylElement::from_word(&a2, &[1]).unwrap();
        assert_eq!(w.inversion_set(&a2), vec![a2.simple_root(1)]);
    }

    #[test]
    fn canonical_words() {
        let a2 = rs(Family::A, 2);
        // s2 s1 s2 = s1 s2 s1
        let w = WeylElement::from_word(&a2, &[1, 0, 1]).unwrap();
        assert_eq!(w.word(), &[0, 1, 0]);
        let w = WeylElement::from_word_with(&a2, &[0, 1, 0], WordPolicy::LexMax).unwrap();
        assert_eq!(w.word(), &[1, 0, 1]);
        assert!(WeylElement::from_reduced_word(&a2, &[0, 0]).is_err());
        assert_eq!(w.to_string(), "s2*s1*s2");
    }

    #[test]
    fn enumeration_words_are_lex_least() {
        // compare against the least word among all words of the same length
        // that produce the element
        for t in small_types().into_iter().filter(|t| t.rank <= 3) {
            let r = rs(t.family, t.rank);
            for policy in [WordPolicy::LexMin, WordPolicy::LexMax] {
                let opts = EnumerateOptions {
                    policy,
                    ..Default::default()
                };
                let all = enumerate_weyl_with(&r, Some(4), &opts).unwrap();
                let mut best: HashMap<Vec<i64>, Vec<usize>> = HashMap::new();
                for len in 0..=4usize {
                    for code in 0..r.rank().pow(len as u32) {
                        let word: Vec<usize> = (0..len)
                            .map(|k| code / r.rank().pow(k as u32) % r.rank())
                            .collect();
                        let w = WeylElement::from_word(&r, &word).unwrap();
                        if w.length() != len {
                            continue;
                        }
                        let e = best.entry(w.action.clone()).or_insert(word.clone());
                        let better = match policy {
                            WordPolicy::LexMin => word < *e,
                            WordPolicy::LexMax => word > *e,
                        };
                        if better {
                            *e = word;
                        }
                    }
                }
                for w in &all {
                    assert_eq!(w.word(), &best[&w.action][..], "{t} {policy:?}");
                    let again = WeylElement::from_word_with(&r, w.word(), policy).unwrap();
                    assert_eq!(again.word(), w.word());
                }
            }
        }
    }

    #[test]
    fn cell_dimension_examples() {
        let ai = real_form_lookup(RealFormLabel::AI, &Params::rank(3)).unwrap();
        for w in enumerate_weyl(&ai.restricted, None).unwrap() {
            let expect = if w.length() > 3 {
                CellDim::Big
            } else {
                CellDim::Finite(w.length())
            };
            assert_eq!(cell_dimension(&w, &ai), expect);
        }
        let aiii = real_form_lookup(RealFormLabel::AIII1, &Params::rank(3)).unwrap();
        let w = WeylElement::from_word(&aiii.restricted, &[0]).unwrap();
        assert_eq!(cell_dimension(&w, &aiii), CellDim::Finite(2));
        let w = WeylElement::from_word(&aiii.restricted, &[2]).unwrap();
        assert_eq!(cell_dimension(&w, &aiii), CellDim::Big);
        let di2 = real_form_lookup(RealFormLabel::DI2, &Params::rank(3)).unwrap();
        let w = WeylElement::from_word(&di2.restricted, &[0, 2]).unwrap();
        assert_eq!(cell_dimension(&w, &di2), CellDim::Finite(3));
    }

    #[test]
    fn minimal_examples() {
        let a2 = rs(Family::A, 2);
        let reps: Vec<Vec<usize>> = minimal_representatives(&a2, NodeSet::from_iter([1]), 2)
            .unwrap()
            .into_iter()
            .map(|c| c.representative.word().to_vec())
            .collect();
        assert_eq!(reps, vec![vec![], vec![0], vec![1, 0]]);
        assert_eq!(
            minimal_representatives(&a2, NodeSet::empty(), 3)
                .unwrap()
                .len(),
            6
        );
        let b2 = rs(Family::B, 2);
        let theta = NodeSet::from_iter([0]);
        assert!(WeylElement::from_word(&b2, &[1])
            .unwrap()
            .is_minimal(&b2, theta));
        assert!(!WeylElement::from_word(&b2, &[0])
            .unwrap()
            .is_minimal(&b2, theta));
    }

    #[test]
    fn closed_forms_agree_with_inversion_criterion() {
        for t in small_types() {
            let r = rs(t.family, t.rank);
            let elems = enumerate_weyl(&r, Some(3)).unwrap();
            for theta in NodeSet::subsets(r.rank()) {
                for w in &elems {
                    // a second oracle: w sends every simple root of Theta to a positive root
                    let positive_on_theta =
                        theta.iter().all(|i| w.image_of_simple(i).is_positive());
                    let general = w.is_minimal(&r, theta);
                    assert_eq!(general, positive_on_theta);
                    assert_eq!(
                        minimal_by_closed_form(&r, w.word(), theta),
                        Some(general),
                        "{t} {w} {theta}"
                    );
                }
            }
        }
    }

    #[test]
    fn unique_minimal_element_per_coset() {
        for t in small_types().into_iter().filter(|t| t.weyl_order() <= 400) {
            let r = rs(t.family, t.rank);
            let all = enumerate_weyl(&r, None).unwrap();
            for theta in NodeSet::subsets(r.rank()) {
                let parabolic: Vec<&WeylElement> = all
                    .iter()
                    .filter(|u| u.word().iter().all(|&i| theta.contains(i)))
                    .collect();
                let mut seen: HashSet<&WeylElement> = HashSet::new();
                for w in &all {
                    if seen.contains(w) {
                        continue;
                    }
                    let coset: Vec<WeylElement> =
                        parabolic.iter().map(|u| w.compose(&r, u)).collect();
                    let minimal: Vec<&WeylElement> =
                        coset.iter().filter(|x| x.is_minimal(&r, theta)).collect();
                    assert_eq!(minimal.len(), 1, "{t} {theta}");
                    let min_len = coset.iter().map(WeylElement::length).min().unwrap();
                    assert_eq!(minimal[0].length(), min_len);
                    for x in &coset {
                        seen.insert(all.iter().find(|y| *y == x).unwrap());
                    }
                }
            }
        }
    }

    fn element_strategy() -> impl Strategy<Value = (RootSystem, Vec<usize>)> {
        proptest::sample::select(small_types()).prop_flat_map(|t| {
            let r = rs(t.family, t.rank);
            let n = r.rank();
            (Just(r), proptest::collection::vec(0..n, 0..8))
        })
    }

    proptest! {
        #[test]
        fn exchange_property((r, word) in element_strategy()) {
            let w = WeylElement::from_word(&r, &word).unwrap();
            prop_assert_eq!(w.inversion_set(&r).len(), w.length());
            prop_assert_eq!(w.inverted_roots(&r).len(), w.length());
            for i in 0..r.rank() {
                let s = WeylElement::from_word(&r, &[i]).unwrap();
                let ws = w.compose(&r, &s);
                prop_assert_eq!(ws.length().abs_diff(w.length()), 1);
                prop_assert_eq!(ws.length() < w.length(), w.right_descents().contains(i));
            }
            let inv = w.inverse(&r);
            prop_assert!(w.compose(&r, &inv).is_identity());
            prop_assert_eq!(inv.length(), w.length());
            // the canonical word reproduces the element
            prop_assert_eq!(WeylElement::from_word(&r, w.word()).unwrap(), w);
        }
    }
}
