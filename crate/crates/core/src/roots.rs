//! Reduced crystallographic root systems of types A through G.
//!
//! Roots are integer coefficient vectors over the simple roots. The inner
//! product is carried by an integer matrix holding twice the Gram matrix,
//! so pairings stay exact.
//!
//! Numbering: A, D, E follow Bourbaki (E: 1-3-4-5-6-7-8 with 2 attached to 4).
//! B_l has the short root last, C_l the long root last, F_4 has alpha_1 and
//! alpha_2 long. G_2 has alpha_1 long and alpha_2 short, so
//! `<alpha_2^v, alpha_1> = -3`.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::nodeset::NodeSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::A,
        Family::B,
        Family::C,
        Family::D,
        Family::E,
        Family::F,
        Family::G,
    ];

    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    pub fn from_letter(c: char) -> Option<Family> {
        Family::ALL
            .into_iter()
            .find(|f| f.letter() == c.to_ascii_uppercase())
    }
}

/// A connected Dynkin type such as `B3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CartanType {
    pub family: Family,
    pub rank: usize,
}

impl CartanType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let bad = |constraint| {
            Err(Error::InvalidRootSystem {
                family: family.letter().to_string(),
                rank,
                constraint,
            })
        };
        match family {
            Family::A if rank < 1 => bad("A_l requires l >= 1"),
            Family::B if rank < 2 => bad("B_l requires l >= 2"),
            Family::C if rank < 2 => bad("C_l requires l >= 2"),
            Family::D if rank < 4 => bad("D_l requires l >= 4"),
            Family::E if !(6..=8).contains(&rank) => bad("E_l requires l in {6, 7, 8}"),
            Family::F if rank != 4 => bad("F_l requires l = 4"),
            Family::G if rank != 2 => bad("G_l requires l = 2"),
            _ if rank > 16 => bad("rank above 16 is not supported"),
            _ => Ok(CartanType { family, rank }),
        }
    }

    /// Order of the Weyl group.
    pub fn weyl_order(&self) -> u128 {
        let fact = |n: usize| (1..=n as u128).product::<u128>();
        let n = self.rank;
        match self.family {
            Family::A => fact(n + 1),
            Family::B | Family::C => (1u128 << n) * fact(n),
            Family::D => (1u128 << (n - 1)) * fact(n),
            Family::E => match n {
                6 => 51_840,
                7 => 2_903_040,
                _ => 696_729_600,
            },
            Family::F => 1152,
            Family::G => 12,
        }
    }

    /// Number of positive roots.
    pub fn positive_root_count(&self) -> usize {
        let n = self.rank;
        match self.family {
            Family::A => n * (n + 1) / 2,
            Family::B | Family::C => n * n,
            Family::D => n * (n - 1),
            Family::E => match n {
                6 => 36,
                7 => 63,
                _ => 120,
            },
            Family::F => 24,
            Family::G => 6,
        }
    }

    /// Cartan matrix `A[i][j] = <alpha_i^v, alpha_j>` in this crate's numbering.
    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.rank;
        let mut a = vec![vec![0i64; n]; n];
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = 2;
        }
        let mut link = |i: usize, j: usize| {
            a[i][j] = -1;
            a[j][i] = -1;
        };
        match self.family {
            Family::A | Family::B | Family::C | Family::F | Family::G => {
                for i in 0..n - 1 {
                    link(i, i + 1);
                }
            }
            Family::D => {
                for i in 0..n - 2 {
                    link(i, i + 1);
                }
                link(n - 3, n - 1);
            }
            Family::E => {
                link(0, 2);
                link(1, 3);
                for i in 2..n - 1 {
                    link(i, i + 1);
                }
            }
        }
        match self.family {
            // long alpha_{l-1}, short alpha_l
            Family::B => a[n - 1][n - 2] = -2,
            // short alpha_{l-1}, long alpha_l
            Family::C => a[n - 2][n - 1] = -2,
            Family::F => a[2][1] = -2,
            Family::G => a[1][0] = -3,
            _ => {}
        }
        a
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

impl FromStr for CartanType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let family = chars
            .next()
            .and_then(Family::from_letter)
            .ok_or_else(|| Error::Parse(format!("bad Cartan type `{s}`")))?;
        let rank = chars
            .as_str()
            .trim_start_matches('_')
            .parse()
            .map_err(|_| Error::Parse(format!("bad Cartan type `{s}`")))?;
        CartanType::new(family, rank)
    }
}

/// A vector in the root lattice, written in the basis of simple roots.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Root(Vec<i64>);

impl Root {
    pub fn new(coefficients: Vec<i64>) -> Self {
        Root(coefficients)
    }

    pub fn simple(rank: usize, i: usize) -> Self {
        let mut v = vec![0; rank];
        v[i] = 1;
        Root(v)
    }

    pub fn zero(rank: usize) -> Self {
        Root(vec![0; rank])
    }

    pub fn coefficients(&self) -> &[i64] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn is_positive(&self) -> bool {
        !self.is_zero() && self.0.iter().all(|&c| c >= 0)
    }

    pub fn is_negative(&self) -> bool {
        !self.is_zero() && self.0.iter().all(|&c| c <= 0)
    }

    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    /// Simple roots with a nonzero coefficient.
    pub fn support(&self) -> NodeSet {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, _)| i)
            .collect()
    }

    pub fn neg(&self) -> Root {
        Root(self.0.iter().map(|c| -c).collect())
    }

    pub fn add(&self, other: &Root) -> Root {
        Root(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub_scaled(&self, k: i64, other: &Root) -> Root {
        Root(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a - k * b)
                .collect(),
        )
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, &c) in self.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 {
                "-"
            } else if first {
                ""
            } else {
                "+"
            };
            let mag = c.abs();
            if mag == 1 {
                write!(f, "{sign}a{}", i + 1)?;
            } else {
                write!(f, "{sign}{mag}a{}", i + 1)?;
            }
            first = false;
        }
        Ok(())
    }
}

/// How two distinct simple roots are joined in the Dynkin diagram.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Link {
    None,
    Single,
    /// Double bond; the field is the index of the long root.
    Double {
        long: usize,
    },
    /// Triple bond; the field is the index of the long root.
    Triple {
        long: usize,
    },
}

/// A finite reduced root system, possibly reducible.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootSystem {
    components: Vec<(CartanType, Vec<usize>)>,
    cartan: Vec<Vec<i64>>,
    /// Squared lengths of the simple roots, scaled so the shortest root in each
    /// component has length 1.
    lengths: Vec<i64>,
    /// `gram2[i][j] = 2 (alpha_i, alpha_j)`.
    gram2: Vec<Vec<i64>>,
    positive: Vec<Root>,
    index: HashMap<Root, usize>,
}

const MAX_ROOTS: usize = 2000;

impl RootSystem {
    /// Builds the irreducible system of the given type.
    pub fn build(family: Family, rank: usize) -> Result<Self> {
        let t = CartanType::new(family, rank)?;
        Self::from_cartan(t.cartan_matrix())
    }

    /// Builds a root system from a Cartan matrix `A[i][j] = <alpha_i^v, alpha_j>`.
    /// The matrix may be decomposable.
    pub fn from_cartan(cartan: Vec<Vec<i64>>) -> Result<Self> {
        let n = cartan.len();
        if n == 0 || n > NodeSet::MAX_NODES {
            return Err(Error::InvalidCartan(format!("rank {n} out of range")));
        }
        for (i, row) in cartan.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidCartan("matrix is not square".into()));
            }
            for (j, &a) in row.iter().enumerate() {
                if i == j && a != 2 {
                    return Err(Error::InvalidCartan("diagonal entries must be 2".into()));
                }
                if i != j && !(-3..=0).contains(&a) {
                    return Err(Error::InvalidCartan(format!("entry {a} at ({i}, {j})")));
                }
                if i != j && (a == 0) != (cartan[j][i] == 0) {
                    return Err(Error::InvalidCartan("zero pattern is not symmetric".into()));
                }
            }
        }
        let lengths = symmetrize(&cartan)?;
        let gram2: Vec<Vec<i64>> = (0..n)
            .map(|i| (0..n).map(|j| lengths[i] * cartan[i][j]).collect())
            .collect();
        for i in 0..n {
            for j in 0..n {
                if gram2[i][j] != gram2[j][i] {
                    return Err(Error::InvalidCartan("matrix is not symmetrizable".into()));
                }
            }
        }
        let positive = closure_positive_roots(&cartan)?;
        let index = positive
            .iter()
            .enumerate()
            .map(|(k, r)| (r.clone(), k))
            .collect();
        let components = connected_components(&cartan)
            .into_iter()
            .map(|nodes| identify_component(&cartan, &lengths, &nodes).map(|t| (t, nodes)))
            .collect::<Result<_>>()?;
        let rs = RootSystem {
            components,
            cartan,
            lengths,
            gram2,
            positive,
            index,
        };
        let expected: usize = rs
            .components
            .iter()
            .map(|(t, _)| t.positive_root_count())
            .sum();
        if expected != rs.positive.len() {
            return Err(Error::InvalidCartan(format!(
                "found {} positive roots, type {} needs {expected}",
                rs.positive.len(),
                rs.type_name()
            )));
        }
        Ok(rs)
    }

    /// The subsystem spanned by the given simple roots, in increasing index order.
    pub fn subsystem(&self, nodes: NodeSet) -> Result<RootSystem> {
        let idx: Vec<usize> = nodes.iter().collect();
        let cartan = idx
            .iter()
            .map(|&i| idx.iter().map(|&j| self.cartan[i][j]).collect())
            .collect();
        RootSystem::from_cartan(cartan)
    }

    pub fn rank(&self) -> usize {
        self.cartan.len()
    }

    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// Connected components as (type, simple-root indices).
    pub fn components(&self) -> &[(CartanType, Vec<usize>)] {
        &self.components
    }

    /// The type when irreducible.
    pub fn cartan_type(&self) -> Option<CartanType> {
        match self.components.as_slice() {
            [(t, _)] => Some(*t),
            _ => None,
        }
    }

    /// Type name such as `B3` or `A1xA2`.
    pub fn type_name(&self) -> String {
        let names: Vec<String> = self.components.iter().map(|(t, _)| t.to_string()).collect();
        names.join("x")
    }

    pub fn weyl_order(&self) -> u128 {
        self.components
            .iter()
            .map(|(t, _)| t.weyl_order())
            .product()
    }

    /// Squared length of simple root `i`, shortest root of its component = 1.
    pub fn simple_length(&self, i: usize) -> i64 {
        self.lengths[i]
    }

    /// Whether simple root `i` is long in its component (true for simply laced).
    pub fn is_long(&self, i: usize) -> bool {
        let comp = self
            .components
            .iter()
            .find(|(_, nodes)| nodes.contains(&i))
            .expect("node belongs to a component");
        let max = comp.1.iter().map(|&j| self.lengths[j]).max().unwrap_or(1);
        self.lengths[i] == max
    }

    pub fn link(&self, i: usize, j: usize) -> Link {
        if i == j {
            return Link::None;
        }
        let long = if self.lengths[i] >= self.lengths[j] {
            i
        } else {
            j
        };
        match self.cartan[i][j] * self.cartan[j][i] {
            0 => Link::None,
            1 => Link::Single,
            2 => Link::Double { long },
            _ => Link::Triple { long },
        }
    }

    /// Gram matrix `(alpha_i, alpha_j)` as exact fractions.
    pub fn gram(&self) -> Vec<Vec<Ratio<i64>>> {
        self.gram2
            .iter()
            .map(|row| row.iter().map(|&x| Ratio::new(x, 2)).collect())
            .collect()
    }

    /// `2 (a, b)`.
    pub fn inner2(&self, a: &Root, b: &Root) -> i64 {
        let (a, b) = (a.coefficients(), b.coefficients());
        let mut s = 0;
        for i in 0..a.len() {
            if a[i] == 0 {
                continue;
            }
            for j in 0..b.len() {
                s += a[i] * self.gram2[i][j] * b[j];
            }
        }
        s
    }

    fn check_len(&self, v: &Root) -> Result<()> {
        if v.rank() != self.rank() {
            return Err(Error::LengthMismatch {
                expected: self.rank(),
                got: v.rank(),
            });
        }
        Ok(())
    }

    /// `<a^v, b> = 2 (a, b) / (a, a)`.
    pub fn cartan_pairing(&self, a: &Root, b: &Root) -> Result<i64> {
        self.check_len(a)?;
        self.check_len(b)?;
        if a.is_zero() {
            return Err(Error::ZeroRoot);
        }
        let num = 2 * self.inner2(a, b);
        let den = self.inner2(a, a);
        if num % den != 0 {
            return Err(Error::NotARoot(a.coefficients().to_vec()));
        }
        Ok(num / den)
    }

    /// `<alpha_i^v, v>` for a simple coroot.
    pub fn simple_pairing(&self, i: usize, v: &Root) -> i64 {
        self.cartan[i]
            .iter()
            .zip(v.coefficients())
            .map(|(a, c)| a * c)
            .sum()
    }

    /// `r_alpha(v) = v - <alpha^v, v> alpha`.
    pub fn reflect(&self, alpha: &Root, v: &Root) -> Result<Root> {
        if !self.is_root(alpha) {
            return Err(Error::NotARoot(alpha.coefficients().to_vec()));
        }
        let k = self.cartan_pairing(alpha, v)?;
        Ok(v.sub_scaled(k, alpha))
    }

    pub fn simple_reflect(&self, i: usize, v: &Root) -> Root {
        let k = self.simple_pairing(i, v);
        let mut out = v.clone();
        out.0[i] -= k;
        out
    }

    pub fn simple_root(&self, i: usize) -> Root {
        Root::simple(self.rank(), i)
    }

    /// Positive roots ordered by height, then with earlier simple roots first.
    pub fn positive_roots(&self) -> &[Root] {
        &self.positive
    }

    pub fn positive_index(&self, r: &Root) -> Option<usize> {
        self.index.get(r).copied()
    }

    pub fn is_root(&self, r: &Root) -> bool {
        r.rank() == self.rank() && (self.index.contains_key(r) || self.index.contains_key(&r.neg()))
    }
}

/// Finds squared lengths `d_i` with `d_i A_ij = d_j A_ji`, scaled per component
/// so the minimum is 1.
fn symmetrize(cartan: &[Vec<i64>]) -> Result<Vec<i64>> {
    let n = cartan.len();
    let mut d: Vec<Option<Ratio<i64>>> = vec![None; n];
    for comp in connected_components(cartan) {
        d[comp[0]] = Some(Ratio::from_integer(1));
        let mut queue = VecDeque::from([comp[0]]);
        while let Some(i) = queue.pop_front() {
            for j in 0..n {
                if i == j || cartan[i][j] == 0 {
                    continue;
                }
                let dj = d[i].unwrap() * Ratio::new(cartan[i][j], cartan[j][i]);
                match d[j] {
                    None => {
                        d[j] = Some(dj);
                        queue.push_back(j);
                    }
                    Some(x) if x != dj => {
                        return Err(Error::InvalidCartan("matrix is not symmetrizable".into()))
                    }
                    _ => {}
                }
            }
        }
        let min = comp.iter().map(|&i| d[i].unwrap()).min().unwrap();
        for &i in &comp {
            let v = d[i].unwrap() / min;
            if !v.is_integer() {
                return Err(Error::InvalidCartan("non-integral length ratio".into()));
            }
            d[i] = Some(v);
        }
    }
    Ok(d.into_iter().map(|x| x.unwrap().to_integer()).collect())
}

fn connected_components(cartan: &[Vec<i64>]) -> Vec<Vec<usize>> {
    let n = cartan.len();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        let mut comp = vec![];
        let mut stack = vec![s];
        seen[s] = true;
        while let Some(i) = stack.pop() {
            comp.push(i);
            for j in 0..n {
                if !seen[j] && cartan[i][j] != 0 {
                    seen[j] = true;
                    stack.push(j);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// Identifies a connected Dynkin diagram from its shape and root lengths.
fn identify_component(cartan: &[Vec<i64>], lengths: &[i64], nodes: &[usize]) -> Result<CartanType> {
    let n = nodes.len();
    let degree = |i: usize| {
        nodes
            .iter()
            .filter(|&&j| j != i && cartan[i][j] != 0)
            .count()
    };
    let bond = |i: usize, j: usize| cartan[i][j] * cartan[j][i];
    let unknown = || Error::InvalidCartan("diagram is not of finite type".into());
    let edges: Vec<(usize, usize)> = nodes
        .iter()
        .flat_map(|&i| nodes.iter().map(move |&j| (i, j)))
        .filter(|&(i, j)| i < j && cartan[i][j] != 0)
        .collect();
    if edges.len() + 1 != n {
        return Err(unknown());
    }
    let make = |f: Family| CartanType::new(f, n);
    if n == 1 {
        return make(Family::A);
    }
    let multi: Vec<(usize, usize)> = edges
        .iter()
        .copied()
        .filter(|&(i, j)| bond(i, j) > 1)
        .collect();
    match multi.as_slice() {
        [] => {
            let branch: Vec<usize> = nodes.iter().copied().filter(|&i| degree(i) >= 3).collect();
            match branch.as_slice() {
                [] => make(Family::A),
                [b] if degree(*b) == 3 => {
                    let mut arms: Vec<usize> = nodes
                        .iter()
                        .filter(|&&j| j != *b && cartan[*b][j] != 0)
                        .map(|&j| arm_length(cartan, nodes, *b, j))
                        .collect();
                    arms.sort_unstable();
                    match arms.as_slice() {
                        [1, 1, _] => make(Family::D),
                        [1, 2, 2..=4] => make(Family::E),
                        _ => Err(unknown()),
                    }
                }
                _ => Err(unknown()),
            }
        }
        [(i, j)] => {
            if nodes.iter().any(|&k| degree(k) >= 3) {
                return Err(unknown());
            }
            match bond(*i, *j) {
                3 if n == 2 => make(Family::G),
                // two nodes: named by which end is short, as in B_l / C_l
                2 if n == 2 => {
                    let last = (*i).max(*j);
                    let first = (*i).min(*j);
                    if lengths[last] < lengths[first] {
                        make(Family::B)
                    } else {
                        make(Family::C)
                    }
                }
                2 => {
                    let (di, dj) = (degree(*i), degree(*j));
                    if di == 2 && dj == 2 {
                        if n == 4 {
                            make(Family::F)
                        } else {
                            Err(unknown())
                        }
                    } else {
                        let end = if di == 1 { *i } else { *j };
                        let other = if end == *i { *j } else { *i };
                        if lengths[end] < lengths[other] {
                            make(Family::B)
                        } else {
                            make(Family::C)
                        }
                    }
                }
                _ => Err(unknown()),
            }
        }
        _ => Err(unknown()),
    }
}

fn arm_length(cartan: &[Vec<i64>], nodes: &[usize], from: usize, start: usize) -> usize {
    let (mut prev, mut cur, mut len) = (from, start, 1);
    loop {
        let next = nodes
            .iter()
            .copied()
            .find(|&k| k != prev && k != cur && cartan[cur][k] != 0);
        match next {
            Some(k) => {
                prev = cur;
                cur = k;
                len += 1;
            }
            None => return len,
        }
    }
}

fn closure_positive_roots(cartan: &[Vec<i64>]) -> Result<Vec<Root>> {
    let n = cartan.len();
    let reflect = |i: usize, v: &[i64]| -> Vec<i64> {
        let k: i64 = cartan[i].iter().zip(v).map(|(a, c)| a * c).sum();
        let mut out = v.to_vec();
        out[i] -= k;
        out
    };
    let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut queue: VecDeque<Vec<i64>> = VecDeque::new();
    for i in 0..n {
        let mut e = vec![0; n];
        e[i] = 1;
        seen.insert(e.clone());
        queue.push_back(e);
    }
    while let Some(v) = queue.pop_front() {
        for i in 0..n {
            let w = reflect(i, &v);
            if seen.insert(w.clone()) {
                if seen.len() > MAX_ROOTS {
                    return Err(Error::InvalidCartan("root orbit is not finite".into()));
                }
                queue.push_back(w);
            }
        }
    }
    let mut pos: Vec<Root> = seen
        .into_iter()
        .map(Root)
        .filter(Root::is_positive)
        .collect();
    pos.sort_by(|a, b| a.height().cmp(&b.height()).then_with(|| b.0.cmp(&a.0)));
    Ok(pos)
}
