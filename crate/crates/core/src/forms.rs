//! Cartan-subalgebra vectors for `su(p, q)` in exact rationals: the basis
//! attached to the arrow pairs and imaginary roots, its dual basis under the
//! trace form, and the central elements `Z_j` pairing to 1 with the Schubert
//! 2-cell of `alpha_j`.
//!
//! A vector `(x_1, ..., x_{p+q})` stands for the diagonal matrix `i diag(x)`.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::rational_inverse;
use crate::nodeset::NodeSet;
use crate::real_form::{Params, RealFormLabel};
use crate::satake::{arrow_classification, build_satake, SatakeDiagram};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DiagonalVector(pub Vec<BigRational>);

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

impl DiagonalVector {
    pub fn zeros(n: usize) -> Self {
        DiagonalVector(vec![BigRational::zero(); n])
    }

    /// `e_a - e_b` for 1-based positions.
    pub fn root(n: usize, a: usize, b: usize) -> Self {
        let mut v = Self::zeros(n);
        v.0[a - 1] += rat(1, 1);
        v.0[b - 1] -= rat(1, 1);
        v
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn trace(&self) -> BigRational {
        self.0.iter().sum()
    }

    pub fn add(&self, other: &Self) -> Self {
        DiagonalVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        DiagonalVector(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, k: &BigRational) -> Self {
        DiagonalVector(self.0.iter().map(|a| a * k).collect())
    }

    /// The factor `k > 0` with `self = k * other`, if there is one.
    pub fn positive_multiple_of(&self, other: &Self) -> Option<BigRational> {
        let (i, o) = other.0.iter().enumerate().find(|(_, x)| !x.is_zero())?;
        let k = &self.0[i] / o;
        (k.is_positive() && *self == other.scale(&k)).then_some(k)
    }
}

impl fmt::Display for DiagonalVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// `c * sum_i u_i v_i`.
pub fn killing_pairing(
    u: &DiagonalVector,
    v: &DiagonalVector,
    c: &BigRational,
) -> Result<BigRational> {
    if u.len() != v.len() {
        return Err(Error::LengthMismatch {
            expected: u.len(),
            got: v.len(),
        });
    }
    let s: BigRational = u.0.iter().zip(&v.0).map(|(a, b)| a * b).sum();
    Ok(s * c)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum BasisKind {
    /// `H_gamma - H_delta` for the arrow pair restricting to `alpha_j` (0-based).
    PerpArrow(usize),
    /// `H_gamma - H_delta` for the arrow pair next to the imaginary roots.
    LinkedArrow,
    /// `H_mu` for an imaginary simple root (0-based ambient node).
    Imaginary(usize),
}

#[derive(Debug, Clone)]
pub struct DualBasisPackage {
    pub p: usize,
    pub q: usize,
    pub scale_c: BigRational,
    pub kinds: Vec<BasisKind>,
    /// Basis vectors before normalization.
    pub raw_b: Vec<DiagonalVector>,
    /// `B / (B, B)_c`.
    pub basis_b: Vec<DiagonalVector>,
    /// `(dual_b[k], basis_b[l])_c = [k == l]`.
    pub dual_b: Vec<DiagonalVector>,
}

impl DualBasisPackage {
    /// The `p - 1` dual vectors of the arrow-pair basis vectors.
    pub fn z_vectors(&self) -> &[DiagonalVector] {
        &self.dual_b[..self.p - 1]
    }
}

fn check_pq(p: usize, q: usize) -> Result<()> {
    if p < 2 || p > q {
        return Err(Error::InvalidParams {
            label: format!("su({p},{q})"),
            reason: "requires 2 <= p <= q".into(),
        });
    }
    Ok(())
}

fn diagram(p: usize, q: usize) -> Result<SatakeDiagram> {
    let label = if p < q {
        RealFormLabel::AIII1
    } else {
        RealFormLabel::AIII2
    };
    build_satake(label, &Params::pq(p, q))
}

/// Builds the basis and its dual for `su(p, q)` with `c = 1`.
pub fn build_basis_b(p: usize, q: usize) -> Result<DualBasisPackage> {
    build_basis_b_scaled(p, q, &rat(1, 1))
}

pub fn build_basis_b_scaled(p: usize, q: usize, c: &BigRational) -> Result<DualBasisPackage> {
    check_pq(p, q)?;
    if !c.is_positive() {
        return Err(Error::InvalidParams {
            label: format!("su({p},{q})"),
            reason: "the scale c must be positive".into(),
        });
    }
    let sd = diagram(p, q)?;
    let coords = sd
        .coordinates
        .as_ref()
        .expect("su(p,q) diagrams carry coordinates");
    let n = p + q;
    let h = |k: usize| DiagonalVector::root(n, coords[k].0, coords[k].1);
    let classes = arrow_classification(&sd);
    let mut perp: Vec<(usize, (usize, usize))> = classes
        .perp
        .iter()
        .map(|&pair| (sd.restriction[pair.0].expect("white node"), pair))
        .collect();
    perp.sort();
    let mut kinds = Vec::new();
    let mut raw = Vec::new();
    for (j, (a, b)) in perp {
        kinds.push(BasisKind::PerpArrow(j));
        raw.push(h(a).sub(&h(b)));
    }
    for &(a, b) in &classes.nonperp {
        kinds.push(BasisKind::LinkedArrow);
        raw.push(h(a).sub(&h(b)));
    }
    for k in sd.black.iter() {
        kinds.push(BasisKind::Imaginary(k));
        raw.push(h(k));
    }
    let basis_b: Vec<DiagonalVector> = raw
        .iter()
        .map(|v| Ok(v.scale(&killing_pairing(v, v, c)?.recip())))
        .collect::<Result<_>>()?;
    let gram: Vec<Vec<BigRational>> = basis_b
        .iter()
        .map(|u| basis_b.iter().map(|v| killing_pairing(u, v, c)).collect())
        .collect::<Result<_>>()?;
    let inv = rational_inverse(&gram).ok_or_else(|| Error::InvalidParams {
        label: sd.name.clone(),
        reason: "basis vectors are linearly dependent".into(),
    })?;
    let dual_b = inv
        .iter()
        .map(|row| {
            row.iter()
                .zip(&basis_b)
                .fold(DiagonalVector::zeros(n), |acc, (x, v)| acc.add(&v.scale(x)))
        })
        .collect();
    Ok(DualBasisPackage {
        p,
        q,
        scale_c: c.clone(),
        kinds,
        raw_b: raw,
        basis_b,
        dual_b,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Normalization {
    /// Block form `(b .. b, -a .. -a | b .. b, -a .. -a | -a .. -a)` with
    /// `a = 2j/(p+q)` and `b = (p+q-2j)/(p+q)`.
    BlockForm,
    /// The exact dual-basis vector for the trace form scaled by `c`.
    ScaleC(BigRational),
}

/// `Z_j` for `1 <= j <= p - 1`.
pub fn z_vector(
    p: usize,
    q: usize,
    j: usize,
    normalization: &Normalization,
) -> Result<DiagonalVector> {
    check_pq(p, q)?;
    if j == 0 || j >= p {
        return Err(Error::IndexOutOfRange {
            index: j,
            rank: p - 1,
        });
    }
    match normalization {
        Normalization::BlockForm => {
            let n = (p + q) as i64;
            let a = rat(2 * j as i64, n);
            let b = rat(n - 2 * j as i64, n);
            let mut v = Vec::with_capacity(p + q);
            for _ in 0..2 {
                v.extend(std::iter::repeat_n(b.clone(), j));
                v.extend(std::iter::repeat_n(-a.clone(), p - j));
            }
            v.extend(std::iter::repeat_n(-a.clone(), q - p));
            Ok(DiagonalVector(v))
        }
        Normalization::ScaleC(c) => Ok(build_basis_b_scaled(p, q, c)?.dual_b[j - 1].clone()),
    }
}

/// `(z, basis_b[k])_c` for the `k`-th arrow-pair basis vector (0-based).
pub fn evaluate_on_cell(
    z: &DiagonalVector,
    k: usize,
    pkg: &DualBasisPackage,
) -> Result<BigRational> {
    if k + 1 >= pkg.p {
        return Err(Error::IndexOutOfRange {
            index: k,
            rank: pkg.p - 1,
        });
    }
    killing_pairing(z, &pkg.basis_b[k], &pkg.scale_c)
}

/// Indices `j` (1-based) of the `Z_j` that survive on `F_Theta`: those with
/// `alpha_j` of rank 2 and outside `Theta`.
pub fn surviving_z_indices(p: usize, theta: NodeSet) -> Vec<usize> {
    (1..p).filter(|&j| !theta.contains(j - 1)).collect()
}

/// Whether `gamma(z) = 0` for every simple root `gamma` of the diagram that
/// restricts to zero or into `Theta`.
pub fn centralizes(z: &DiagonalVector, sd: &SatakeDiagram, theta: NodeSet) -> bool {
    let Some(coords) = sd.coordinates.as_ref() else {
        return false;
    };
    coords.iter().enumerate().all(|(k, &(a, b))| {
        let in_theta = sd.restriction[k].is_none_or(|j| theta.contains(j));
        !in_theta || z.0[a - 1] == z.0[b - 1]
    })
}
