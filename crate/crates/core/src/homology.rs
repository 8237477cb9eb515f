//! Second homology of flag manifolds, computed from the chain complex and from
//! the classification, plus de Rham dimensions.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{invariant_factors, is_prime, rank_mod_p, rank_rational};
use crate::nodeset::NodeSet;
use crate::real_form::RealFormDatum;
use crate::roots::Family;
use crate::schubert::{build_complex, build_direct_complex, kernel_catalog, ChainComplexSlice};
use crate::weyl::{enumerate_weyl, render_word, word_dimension, CellDim};

/// Coefficient ring: `Z`, `Q` or `Z/n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RingDescriptor {
    Integers,
    IntegersMod(u64),
    Rationals,
}

impl RingDescriptor {
    pub fn integers_mod(n: u64) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidRing(format!("Z/{n}")));
        }
        Ok(RingDescriptor::IntegersMod(n))
    }

    pub fn characteristic(self) -> u64 {
        match self {
            RingDescriptor::IntegersMod(n) => n,
            _ => 0,
        }
    }

    /// Whether 2 is a unit.
    pub fn two_invertible(self) -> bool {
        match self {
            RingDescriptor::Integers => false,
            RingDescriptor::Rationals => true,
            RingDescriptor::IntegersMod(n) => n % 2 == 1,
        }
    }
}

impl fmt::Display for RingDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingDescriptor::Integers => f.write_str("Z"),
            RingDescriptor::Rationals => f.write_str("Q"),
            RingDescriptor::IntegersMod(n) => write!(f, "Z/{n}"),
        }
    }
}

impl FromStr for RingDescriptor {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "Z" => Ok(RingDescriptor::Integers),
            "Q" => Ok(RingDescriptor::Rationals),
            t => {
                let n = t
                    .strip_prefix("Z/")
                    .and_then(|n| n.parse::<u64>().ok())
                    .ok_or_else(|| Error::InvalidRing(s.to_string()))?;
                RingDescriptor::integers_mod(n).map_err(|_| Error::InvalidRing(s.to_string()))
            }
        }
    }
}

/// `H_2 = R^free_rank + (R/2R)^torsion_2`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologyResult {
    pub ring: RingDescriptor,
    pub free_rank: usize,
    /// Number of nonzero summands `R/2R`.
    pub torsion_2: usize,
    /// Cycles generating the summands, when the route knows them.
    pub generators: Option<Vec<String>>,
    /// Set when the ring has characteristic 2, where every boundary vanishes
    /// and the rank is the number of 2-cells.
    pub characteristic_two: bool,
}

impl HomologyResult {
    /// Same group, ignoring the generator lists.
    pub fn same_group(&self, other: &HomologyResult) -> bool {
        self.ring == other.ring
            && self.free_rank == other.free_rank
            && self.torsion_2 == other.torsion_2
    }
}

impl fmt::Display for HomologyResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r = self.ring;
        let mut parts = Vec::new();
        if self.free_rank > 0 {
            parts.push(format!("{r}^{}", self.free_rank));
        }
        if self.torsion_2 > 0 {
            parts.push(format!("({r}/2{r})^{}", self.torsion_2));
        }
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

/// Simple roots of rank 2 outside `Theta`, each contributing a free 2-cell.
fn free_cells(rf: &RealFormDatum, theta: NodeSet) -> NodeSet {
    rf.sigma_two.difference(theta)
}

/// Minimal 2-cells of `rf` for `Theta`, counted directly in the restricted
/// Weyl group.
pub fn minimal_two_cells(rf: &RealFormDatum, theta: NodeSet) -> Result<Vec<String>> {
    Ok(enumerate_weyl(&rf.restricted, Some(2))?
        .into_iter()
        .filter(|w| word_dimension(w.word(), &rf.rank_class) == CellDim::Finite(2))
        .filter(|w| w.is_minimal(&rf.restricted, theta))
        .map(|w| render_word(w.word(), |i| i + 1))
        .collect())
}

fn char_two(rf: &RealFormDatum, theta: NodeSet, ring: RingDescriptor) -> Result<HomologyResult> {
    let cells = minimal_two_cells(rf, theta)?;
    Ok(HomologyResult {
        ring,
        free_rank: cells.len(),
        torsion_2: 0,
        generators: Some(cells),
        characteristic_two: true,
    })
}

/// `H_2` from the classification: free rank `|Sigma_2 \ Theta|`, and over rings
/// where 2 is not a unit one `R/2R` per kernel generator of the split part
/// (none for `G_2`).
pub fn h2_classified(
    rf: &RealFormDatum,
    theta: NodeSet,
    ring: RingDescriptor,
) -> Result<HomologyResult> {
    match ring.characteristic() {
        2 => return char_two(rf, theta, ring),
        n if n % 2 == 0 && n > 0 => {
            return Err(Error::ClassificationNotApplicable(ring.to_string()))
        }
        _ => {}
    }
    let free = free_cells(rf, theta);
    let mut generators: Vec<String> = free.iter().map(|i| format!("s{}", i + 1)).collect();
    let mut torsion = 0;
    if !ring.two_invertible() {
        if let Some(slice) = build_complex(rf, theta)? {
            let is_g2 = slice
                .system
                .cartan_type()
                .is_some_and(|t| t.family == Family::G);
            if !is_g2 {
                let cat = kernel_catalog(&slice)?;
                torsion = cat.len();
                generators.extend(cat.iter().map(|g| g.render(&slice)));
            }
        }
    }
    Ok(HomologyResult {
        ring,
        free_rank: free.len(),
        torsion_2: torsion,
        generators: Some(generators),
        characteristic_two: false,
    })
}

/// Sorts a Z/n summand `Z/g` (with `g = gcd(d, n)`) into free, 2-torsion or nothing.
fn tally(g: u64, n: u64, free: &mut usize, torsion: &mut usize) -> Result<()> {
    match g {
        1 => {}
        g if g == n => *free += 1,
        2 => *torsion += 1,
        g => return Err(Error::UnexpectedTorsion(g.to_string())),
    }
    Ok(())
}

/// Homology in degree 2 of a complex plus `extra_free` free cycles that meet
/// no boundary.
pub fn homology_of_slice(
    slice: &ChainComplexSlice,
    extra_free: usize,
    ring: RingDescriptor,
) -> Result<HomologyResult> {
    let n2 = slice.basis(2).len();
    let (free, torsion) = match ring {
        RingDescriptor::IntegersMod(2) => (n2, 0),
        RingDescriptor::Rationals => (n2 - rank_rational(&slice.d2) - rank_rational(&slice.d3), 0),
        RingDescriptor::IntegersMod(p) if is_prime(p) => {
            (n2 - rank_mod_p(&slice.d2, p) - rank_mod_p(&slice.d3, p), 0)
        }
        _ => {
            let e = invariant_factors(&slice.d2);
            let d = invariant_factors(&slice.d3);
            let base_free = n2 - e.len() - d.len();
            let two = BigInt::from(2);
            for x in &d {
                if !x.is_one() && *x != two {
                    return Err(Error::UnexpectedTorsion(x.to_string()));
                }
            }
            match ring {
                RingDescriptor::Integers => (base_free, d.iter().filter(|x| **x == two).count()),
                RingDescriptor::IntegersMod(n) => {
                    // universal coefficients: H2 (x) Z/n + Tor(H1, Z/n)
                    let (mut free, mut torsion) = (base_free, 0);
                    for x in d.iter().chain(&e) {
                        let g = x.gcd(&BigInt::from(n)).to_u64().expect("gcd fits");
                        tally(g, n, &mut free, &mut torsion)?;
                    }
                    (free, torsion)
                }
                RingDescriptor::Rationals => unreachable!(),
            }
        }
    };
    Ok(HomologyResult {
        ring,
        free_rank: free + extra_free,
        torsion_2: torsion,
        generators: None,
        characteristic_two: ring.characteristic() == 2,
    })
}

/// `H_2` from the chain complex of the split part together with the free
/// cells `S_{r_a}`, `a` in `Sigma_2 \ Theta`.
pub fn h2_from_complex(
    rf: &RealFormDatum,
    theta: NodeSet,
    ring: RingDescriptor,
) -> Result<HomologyResult> {
    let extra = free_cells(rf, theta).len();
    match build_complex(rf, theta)? {
        Some(slice) => homology_of_slice(&slice, extra, ring),
        None => Ok(HomologyResult {
            ring,
            free_rank: extra,
            torsion_2: 0,
            generators: None,
            characteristic_two: ring.characteristic() == 2,
        }),
    }
}

/// `H_2` from the complex of `rf` itself, with cell dimensions and
/// multiplicity parities taken from the rank classes.
pub fn h2_direct(
    rf: &RealFormDatum,
    theta: NodeSet,
    ring: RingDescriptor,
) -> Result<HomologyResult> {
    homology_of_slice(&build_direct_complex(rf, theta)?, 0, ring)
}

/// `dim H^2_dR = |Sigma_2 \ Theta|`.
pub fn derham_dim2(rf: &RealFormDatum, theta: NodeSet) -> usize {
    free_cells(rf, theta).len()
}

/// Obstructions to an invariant symplectic form built from second cohomology.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SymplecticReport {
    /// `Theta = Sigma`: the flag manifold is a point.
    Point,
    /// No rank-2 root survives, so `H^2_dR = 0`.
    H2Obstruction,
    /// Some simple root outside `Theta` has rank other than 2 (0-based index).
    DegeneracyObstruction {
        witness: usize,
    },
    PossiblySymplectic,
}

pub fn symplectic_obstruction(rf: &RealFormDatum, theta: NodeSet) -> SymplecticReport {
    let outside = theta.complement(rf.l);
    if outside.is_empty() {
        return SymplecticReport::Point;
    }
    if rf.sigma_two.intersection(outside).is_empty() {
        return SymplecticReport::H2Obstruction;
    }
    match outside.difference(rf.sigma_two).iter().next() {
        Some(witness) => SymplecticReport::DegeneracyObstruction { witness },
        None => SymplecticReport::PossiblySymplectic,
    }
}
