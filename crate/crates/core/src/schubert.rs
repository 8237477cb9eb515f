//! Cellular chain complexes of flag manifolds in degrees 0 to 3.
//!
//! Cells are indexed by minimal coset representatives. The magnitude of a
//! boundary coefficient is 2 exactly when the cell `w'` arises from the
//! canonical word of `w` by deleting an interior letter of rank 1 and a
//! pairing sum over the inversion set of the remaining suffix is odd. Signs
//! are not computed geometrically: they are chosen so that `d2 * d3 = 0`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::IntMatrix;
use crate::nodeset::NodeSet;
use crate::real_form::{RankClass, RealFormDatum};
use crate::roots::{Link, RootSystem};
use crate::weyl::{enumerate_weyl, render_word, word_dimension, CellDim, WeylElement};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Parity {
    Even,
    Odd,
}

/// Parity of the sum of `<alpha_i^v, beta> dim g_beta` over the inversion set
/// of `u = r_{a_{i+1}} ... r_{a_t}`, where `a` is the canonical word of `w` and
/// `i = drop` (0-based).
///
/// The inversion set of `u` is walked as `r_{a_{i+1}} ... r_{a_{k-1}}(alpha_{a_k})`,
/// each root carrying the multiplicity of the simple root it is conjugate to.
/// Roots `2 beta` contribute even terms and are skipped. Multiplicities are
/// read from the rank classes: rank 1 means `dim g_beta = 1`, rank 2 means
/// `dim g_beta = 2`; rank 3 or more leaves the parity undetermined.
pub fn sigma_parity(
    rs: &RootSystem,
    classes: &[RankClass],
    w: &WeylElement,
    drop: usize,
) -> Result<Parity> {
    let word = w.word();
    let t = word.len();
    if drop >= t {
        return Err(Error::IndexOutOfRange {
            index: drop,
            rank: t,
        });
    }
    if drop + 1 == t {
        return Err(Error::LastLetter {
            word: word.to_vec(),
        });
    }
    let mut rest = word.to_vec();
    rest.remove(drop);
    if WeylElement::from_word(rs, &rest)?.length() != t - 1 {
        return Err(Error::NotCodimensionOne {
            word: word.to_vec(),
            index: drop,
        });
    }
    let a = word[drop];
    let suffix = &word[drop + 1..];
    let mut sum = 0i64;
    for k in 0..suffix.len() {
        let mut beta = rs.simple_root(suffix[k]);
        for &b in suffix[..k].iter().rev() {
            beta = rs.simple_reflect(b, &beta);
        }
        let mult = match classes[suffix[k]] {
            RankClass::One => 1,
            RankClass::Two => 2,
            _ => return Err(Error::MultiplicityUnavailable(suffix[k])),
        };
        sum += rs.simple_pairing(a, &beta) * mult;
    }
    Ok(if sum % 2 == 0 {
        Parity::Even
    } else {
        Parity::Odd
    })
}

/// `|c(w, w')|`, which is 0 or 2.
pub fn boundary_coefficient_magnitude(
    rs: &RootSystem,
    classes: &[RankClass],
    w: &WeylElement,
    w_prime: &WeylElement,
) -> Result<u8> {
    let (d, d_prime) = (
        word_dimension(w.word(), classes),
        word_dimension(w_prime.word(), classes),
    );
    match (d, d_prime) {
        (CellDim::Finite(a), CellDim::Finite(b)) if b + 1 == a => {}
        _ => {
            return Err(Error::DimensionMismatch {
                from: d.to_string(),
                to: d_prime.to_string(),
            })
        }
    }
    let word = w.word();
    let t = word.len();
    // the last letter never contributes
    for i in 0..t.saturating_sub(1) {
        if classes[word[i]] != RankClass::One {
            continue;
        }
        let mut rest = word.to_vec();
        rest.remove(i);
        let v = WeylElement::from_word(rs, &rest)?;
        if v.length() + 1 != t || v != *w_prime {
            continue;
        }
        return Ok(match sigma_parity(rs, classes, w, i)? {
            Parity::Odd => 2,
            Parity::Even => 0,
        });
    }
    Ok(0)
}

/// Rank-1 magnitudes using `rf`'s rank classes.
pub fn boundary_coefficient_magnitude_for(
    rf: &RealFormDatum,
    w: &WeylElement,
    w_prime: &WeylElement,
) -> Result<u8> {
    boundary_coefficient_magnitude(&rf.restricted, &rf.rank_class, w, w_prime)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchubertCell {
    pub element: WeylElement,
    pub theta: NodeSet,
    pub dim: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SignStatus {
    /// Every column of `d3` admitted exactly one sign pattern once its first
    /// nonzero entry was fixed positive.
    Resolved,
    /// Some column admitted several patterns; one was picked.
    AmbiguousButIrrelevant,
}

/// Chain groups of degrees 0 to 3 with the boundary maps `d2: C2 -> C1` and
/// `d3: C3 -> C2`. (`d1` vanishes.)
#[derive(Debug, Clone)]
pub struct ChainComplexSlice {
    pub name: String,
    pub system: RootSystem,
    pub rank_class: Vec<RankClass>,
    /// Display index (1-based, in the ambient numbering) of each local simple root.
    pub node_labels: Vec<usize>,
    pub theta: NodeSet,
    pub bases: [Vec<SchubertCell>; 4],
    pub d2: IntMatrix,
    pub d3: IntMatrix,
    pub sign_status: SignStatus,
}

impl ChainComplexSlice {
    pub fn basis(&self, degree: usize) -> &[SchubertCell] {
        &self.bases[degree]
    }

    /// Position of an element in the basis of the given degree.
    pub fn cell_index(&self, degree: usize, w: &WeylElement) -> Option<usize> {
        self.bases[degree].iter().position(|c| c.element == *w)
    }

    pub fn render_word(&self, word: &[usize]) -> String {
        render_word(word, |i| self.node_labels[i])
    }

    pub fn render_cell(&self, degree: usize, k: usize) -> String {
        self.render_word(self.bases[degree][k].element.word())
    }

    /// Both matrices in the plain-text dump format.
    pub fn dump(&self) -> String {
        let mut s = String::new();
        self.d2.write_dump(2, &mut s);
        self.d3.write_dump(3, &mut s);
        s
    }
}

/// Builds the complex for a system with given rank classes, then resolves signs.
pub fn build_complex_with(
    name: impl Into<String>,
    rs: &RootSystem,
    classes: &[RankClass],
    node_labels: Vec<usize>,
    theta: NodeSet,
) -> Result<ChainComplexSlice> {
    let elems = enumerate_weyl(rs, Some(3))?;
    let mut bases: [Vec<SchubertCell>; 4] = Default::default();
    for w in elems {
        let Some(dim) = word_dimension(w.word(), classes).finite() else {
            continue;
        };
        if w.is_minimal(rs, theta) {
            bases[dim].push(SchubertCell {
                element: w,
                theta,
                dim,
            });
        }
    }
    for b in bases.iter_mut() {
        b.sort_by(|x, y| x.element.word().cmp(y.element.word()));
    }
    let magnitudes = |deg: usize| -> Result<IntMatrix> {
        let (rows, cols) = (&bases[deg - 1], &bases[deg]);
        let mut m = IntMatrix::zeros(rows.len(), cols.len());
        for (c, cell) in cols.iter().enumerate() {
            for (r, face) in rows.iter().enumerate() {
                let mag =
                    boundary_coefficient_magnitude(rs, classes, &cell.element, &face.element)?;
                m.set(r, c, i64::from(mag));
            }
        }
        Ok(m)
    };
    let d2 = magnitudes(2)?;
    let d3 = magnitudes(3)?;
    let slice = ChainComplexSlice {
        name: name.into(),
        system: rs.clone(),
        rank_class: classes.to_vec(),
        node_labels,
        theta,
        bases,
        d2,
        d3,
        sign_status: SignStatus::Resolved,
    };
    resolve_signs(slice)
}

/// The complex of a split system (every rank class 1).
pub fn build_split_complex(rs: &RootSystem, theta: NodeSet) -> Result<ChainComplexSlice> {
    let n = rs.rank();
    build_complex_with(
        rs.type_name(),
        rs,
        &vec![RankClass::One; n],
        (1..=n).collect(),
        theta,
    )
}

/// The simple roots of rank 1 as a root system of their own.
#[derive(Debug, Clone)]
pub struct SplitPart {
    pub system: RootSystem,
    /// Ambient index of each local simple root.
    pub nodes: Vec<usize>,
}

impl SplitPart {
    /// `Theta` intersected with the split roots, in local numbering.
    pub fn local_theta(&self, theta: NodeSet) -> NodeSet {
        self.nodes
            .iter()
            .enumerate()
            .filter(|(_, &g)| theta.contains(g))
            .map(|(k, _)| k)
            .collect()
    }
}

pub fn split_part(rf: &RealFormDatum) -> Result<Option<SplitPart>> {
    if rf.sigma_split.is_empty() {
        return Ok(None);
    }
    Ok(Some(SplitPart {
        system: rf.restricted.subsystem(rf.sigma_split)?,
        nodes: rf.sigma_split.iter().collect(),
    }))
}

/// The complex of the split part of `rf` for `Theta ∩ Sigma_split`, with
/// cells labelled in the ambient numbering. For a split form this is the
/// whole complex. Returns `None` when no simple root has rank 1.
pub fn build_complex(rf: &RealFormDatum, theta: NodeSet) -> Result<Option<ChainComplexSlice>> {
    let Some(sp) = split_part(rf)? else {
        return Ok(None);
    };
    let n = sp.system.rank();
    build_complex_with(
        format!("{} split part {}", rf.name(), sp.system.type_name()),
        &sp.system,
        &vec![RankClass::One; n],
        sp.nodes.iter().map(|i| i + 1).collect(),
        sp.local_theta(theta),
    )
    .map(Some)
}

/// The complex of `rf` itself, using the rank classes for cell dimensions and
/// multiplicity parities. Cells of undetermined dimension are dropped; the
/// only such cells of dimension 3 are single reflections, whose boundary
/// vanishes.
pub fn build_direct_complex(rf: &RealFormDatum, theta: NodeSet) -> Result<ChainComplexSlice> {
    build_complex_with(
        rf.name(),
        &rf.restricted,
        &rf.rank_class,
        (1..=rf.l).collect(),
        theta,
    )
}

/// Sign patterns for the nonzero entries `k` of a column, first entry positive,
/// in a fixed order.
fn column_patterns(k: usize) -> impl Iterator<Item = Vec<i64>> {
    let free = k.saturating_sub(1);
    (0..1u64 << free).map(move |bits| {
        (0..k)
            .map(|j| {
                if j > 0 && bits >> (j - 1) & 1 == 1 {
                    -1
                } else {
                    1
                }
            })
            .collect()
    })
}

/// Chooses signs so that `d2 * d3 = 0`: every nonzero entry of `d2` becomes
/// positive (cell orientations are free), and each column of `d3` takes the
/// first consistent pattern with its first nonzero entry positive.
pub fn resolve_signs(mut slice: ChainComplexSlice) -> Result<ChainComplexSlice> {
    let mut d2 = slice.d2.clone();
    for (r, c) in d2.nonzero_positions() {
        d2.set(r, c, d2.get(r, c).abs());
    }
    let mut d3 = slice.d3.clone();
    let mut status = SignStatus::Resolved;
    for c in 0..d3.cols() {
        let rows: Vec<usize> = (0..d3.rows()).filter(|&r| d3.get(r, c) != 0).collect();
        let mags: Vec<i64> = rows.iter().map(|&r| d3.get(r, c).abs()).collect();
        let mut chosen: Option<Vec<i64>> = None;
        let mut count = 0;
        for signs in column_patterns(rows.len()) {
            let mut col = vec![0; d3.rows()];
            for (k, &r) in rows.iter().enumerate() {
                col[r] = signs[k] * mags[k];
            }
            if d2.mul_vec(&col).iter().all(|&x| x == 0) {
                count += 1;
                if chosen.is_none() {
                    chosen = Some(col);
                }
            }
        }
        let col = chosen.ok_or(Error::InconsistentSigns)?;
        if count > 1 {
            status = SignStatus::AmbiguousButIrrelevant;
        }
        for (r, v) in col.into_iter().enumerate() {
            d3.set(r, c, v);
        }
    }
    slice.d2 = d2;
    slice.d3 = d3;
    slice.sign_status = status;
    Ok(slice)
}

/// Every assignment of signs to the nonzero entries of `d2` and `d3` with
/// `d2 * d3 = 0`. Refuses more than `max_entries` nonzero entries.
pub fn consistent_sign_assignments(
    slice: &ChainComplexSlice,
    max_entries: usize,
) -> Result<Vec<(IntMatrix, IntMatrix)>> {
    let p2 = slice.d2.nonzero_positions();
    let p3 = slice.d3.nonzero_positions();
    let total = p2.len() + p3.len();
    if total > max_entries {
        return Err(Error::InvalidParams {
            label: slice.name.clone(),
            reason: format!("{total} nonzero entries exceed the limit {max_entries}"),
        });
    }
    let mut out = Vec::new();
    for bits in 0..1u64 << total {
        let mut d2 = slice.d2.clone();
        let mut d3 = slice.d3.clone();
        for (k, &(r, c)) in p2.iter().enumerate() {
            let s = if bits >> k & 1 == 1 { -1 } else { 1 };
            d2.set(r, c, s * d2.get(r, c).abs());
        }
        for (k, &(r, c)) in p3.iter().enumerate() {
            let s = if bits >> (p2.len() + k) & 1 == 1 {
                -1
            } else {
                1
            };
            d3.set(r, c, s * d3.get(r, c).abs());
        }
        if d2.mul(&d3).is_zero() {
            out.push((d2, d3));
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum GeneratorKind {
    /// `S_{r_a r_b}` with `a`, `b` orthogonal.
    OrthogonalPair,
    /// `S_{r_a r_b}` with `a` short, `b` long, joined by a double bond.
    ShortDoubleLink,
    /// `S_{r_a r_b} + eta S_{r_c r_b}` through simple bonds.
    A3Configuration,
    /// As above with a double bond involved.
    C3Configuration,
}

/// A 2-cycle of the complex, as an integer combination of 2-cells.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KernelGenerator {
    pub kind: GeneratorKind,
    /// Coefficient and canonical word (local numbering) of each cell.
    pub terms: Vec<(i64, Vec<usize>)>,
}

impl KernelGenerator {
    /// Coordinates in the basis of `C2`.
    pub fn vector(&self, slice: &ChainComplexSlice) -> Result<Vec<i64>> {
        let mut v = vec![0; slice.basis(2).len()];
        for (c, word) in &self.terms {
            let w = WeylElement::from_word(&slice.system, word)?;
            let k = slice
                .cell_index(2, &w)
                .ok_or_else(|| Error::NotReduced { word: word.clone() })?;
            v[k] += c;
        }
        Ok(v)
    }

    pub fn render(&self, slice: &ChainComplexSlice) -> String {
        let mut s = String::new();
        for (k, (c, word)) in self.terms.iter().enumerate() {
            let w = slice.render_word(word);
            match (k, *c) {
                (0, 1) => s.push_str(&w),
                (0, -1) => s.push_str(&format!("-{w}")),
                (_, 1) => s.push_str(&format!(" + {w}")),
                (_, -1) => s.push_str(&format!(" - {w}")),
                (0, c) => s.push_str(&format!("{c}{w}")),
                (_, c) if c < 0 => s.push_str(&format!(" - {}{w}", -c)),
                (_, c) => s.push_str(&format!(" + {c}{w}")),
            }
        }
        s
    }
}

impl fmt::Display for GeneratorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GeneratorKind::OrthogonalPair => "orthogonal pair",
            GeneratorKind::ShortDoubleLink => "short double link",
            GeneratorKind::A3Configuration => "A3 configuration",
            GeneratorKind::C3Configuration => "C3 configuration",
        })
    }
}

/// Whether the cell `r_g r_b` of a split system has nonzero boundary, read off
/// the bond between `g` and `b`: `<alpha_g^v, alpha_b>` is odd.
fn odd_link(rs: &RootSystem, g: usize, b: usize) -> bool {
    match rs.link(g, b) {
        Link::None => false,
        Link::Single | Link::Triple { .. } => true,
        Link::Double { long } => long == g,
    }
}

/// Explicit generators of the 2-cycles of a split complex, read off the
/// Dynkin diagram:
///
/// * `S_{r_a r_b}` for orthogonal `a < b`, both outside `Theta`;
/// * `S_{r_a r_b}` for `a` short and `b` long in a double bond, `b` outside `Theta`;
/// * for each `b` outside `Theta` whose odd neighbours are `g_1 < g_2 < ...`,
///   the combinations `S_{r_{g_1} r_b} + eta S_{r_{g_k} r_b}` for `k >= 2`, with
///   `eta` fixed by the signs of `d2`.
///
/// Only the pivot `g_1` is combined with the others, so the list is a basis
/// of the kernel even when a node has three neighbours.
pub fn kernel_catalog(slice: &ChainComplexSlice) -> Result<Vec<KernelGenerator>> {
    if slice.rank_class.iter().any(|c| *c != RankClass::One) {
        return Err(Error::InvalidParams {
            label: slice.name.clone(),
            reason: "kernel catalogs are defined for split systems".into(),
        });
    }
    let rs = &slice.system;
    let theta = slice.theta;
    let n = rs.rank();
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if rs.link(a, b) == Link::None && !theta.contains(a) && !theta.contains(b) {
                out.push(KernelGenerator {
                    kind: GeneratorKind::OrthogonalPair,
                    terms: vec![(1, vec![a, b])],
                });
            }
        }
    }
    for a in 0..n {
        for b in 0..n {
            if rs.link(a, b) == (Link::Double { long: b }) && !theta.contains(b) {
                out.push(KernelGenerator {
                    kind: GeneratorKind::ShortDoubleLink,
                    terms: vec![(1, vec![a, b])],
                });
            }
        }
    }
    for b in 0..n {
        if theta.contains(b) {
            continue;
        }
        let odd: Vec<usize> = (0..n).filter(|&g| odd_link(rs, g, b)).collect();
        let Some((&pivot, others)) = odd.split_first() else {
            continue;
        };
        let row = slice
            .cell_index(1, &WeylElement::from_word(rs, &[b])?)
            .ok_or(Error::InconsistentSigns)?;
        let entry = |g: usize| -> Result<i64> {
            let col = slice
                .cell_index(2, &WeylElement::from_word(rs, &[g, b])?)
                .ok_or(Error::InconsistentSigns)?;
            Ok(slice.d2.get(row, col))
        };
        let e_pivot = entry(pivot)?;
        for &g in others {
            let e = entry(g)?;
            let eta = -e_pivot / e;
            let double = matches!(rs.link(pivot, b), Link::Double { .. })
                || matches!(rs.link(g, b), Link::Double { .. });
            out.push(KernelGenerator {
                kind: if double {
                    GeneratorKind::C3Configuration
                } else {
                    GeneratorKind::A3Configuration
                },
                terms: vec![(1, vec![pivot, b]), (eta, vec![g, b])],
            });
        }
    }
    Ok(out)
}
