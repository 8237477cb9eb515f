//! Satake diagrams of the real forms whose flag manifolds can carry second de
//! Rham cohomology: `su(p, q)` (both restricted types), `so(l, l + 2)` and the
//! quasi-split form of `E6`.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::nodeset::NodeSet;
use crate::real_form::{Params, RealFormLabel};
use crate::roots::{CartanType, Family, Root, RootSystem};

#[derive(Debug, Clone)]
pub struct SatakeDiagram {
    pub label: RealFormLabel,
    pub name: String,
    pub ambient: RootSystem,
    /// Imaginary simple roots (0-based nodes).
    pub black: NodeSet,
    /// Arrow pairs `(a, b)` with `a < b`, sorted.
    pub arrows: Vec<(usize, usize)>,
    /// Restricted simple root (0-based) of each white node.
    pub restriction: Vec<Option<usize>>,
    pub restricted_rank: usize,
    /// For `su(p, q)`: node `k` is the root `e_a - e_b` of the diagonal torus,
    /// given as 1-based `(a, b)`. Positions `1..=2p` carry `mu`, the rest `theta`.
    pub coordinates: Option<Vec<(usize, usize)>>,
    pub p: Option<usize>,
    pub q: Option<usize>,
}

/// `D_n` Cartan matrix in Bourbaki numbering, also for `n = 3`.
fn d_cartan(n: usize) -> Vec<Vec<i64>> {
    let mut a = vec![vec![0i64; n]; n];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut link = |i: usize, j: usize| {
        a[i][j] = -1;
        a[j][i] = -1;
    };
    for i in 0..n - 2 {
        link(i, i + 1);
    }
    link(n - 3, n - 1);
    a
}

fn unsupported(label: RealFormLabel) -> Error {
    Error::UnsupportedSatake(label.to_string())
}

fn bad(label: RealFormLabel, reason: &str) -> Error {
    Error::InvalidParams {
        label: label.to_string(),
        reason: reason.into(),
    }
}

/// Builds the Satake diagram of one of the four outer families.
pub fn build_satake(label: RealFormLabel, params: &Params) -> Result<SatakeDiagram> {
    match label {
        RealFormLabel::AIII1 => {
            let p = params
                .p
                .or(params.rank)
                .ok_or_else(|| bad(label, "p is required"))?;
            let q = params.q.ok_or_else(|| bad(label, "q is required"))?;
            if p < 2 || p >= q {
                return Err(bad(label, "requires 2 <= p < q"));
            }
            Ok(su_pq(label, p, q))
        }
        RealFormLabel::AIII2 => {
            let p = params
                .p
                .or(params.rank)
                .ok_or_else(|| bad(label, "p is required"))?;
            if p < 2 || params.q.is_some_and(|q| q != p) {
                return Err(bad(label, "requires p = q >= 2"));
            }
            Ok(su_pq(label, p, p))
        }
        RealFormLabel::DI2 => {
            let l = params
                .rank
                .ok_or_else(|| bad(label, "a rank is required"))?;
            if l < 2 {
                return Err(bad(label, "requires l >= 2"));
            }
            let ambient = RootSystem::from_cartan(d_cartan(l + 1))?;
            let mut restriction: Vec<Option<usize>> = (0..l).map(Some).collect();
            restriction.push(Some(l - 1));
            Ok(SatakeDiagram {
                label,
                name: format!("so({l},{})", l + 2),
                ambient,
                black: NodeSet::empty(),
                arrows: vec![(l - 1, l)],
                restriction,
                restricted_rank: l,
                coordinates: None,
                p: None,
                q: None,
            })
        }
        RealFormLabel::EII => {
            if params.rank.is_some_and(|r| r != 4) || params.p.is_some() || params.q.is_some() {
                return Err(bad(label, "the restricted rank is fixed at 4"));
            }
            let ambient = RootSystem::build(Family::E, 6)?;
            // E6 nodes 1 3 4 5 6 along the chain, 2 attached to 4
            let restriction = vec![Some(3), Some(0), Some(2), Some(1), Some(2), Some(3)];
            Ok(SatakeDiagram {
                label,
                name: "EII".into(),
                ambient,
                black: NodeSet::empty(),
                arrows: vec![(0, 5), (2, 4)],
                restriction,
                restricted_rank: 4,
                coordinates: None,
                p: None,
                q: None,
            })
        }
        _ => Err(unsupported(label)),
    }
}

fn su_pq(label: RealFormLabel, p: usize, q: usize) -> SatakeDiagram {
    let n = p + q;
    let ambient = RootSystem::build(Family::A, n - 1).expect("A_{n-1} is valid");
    // 1-based node k; black nodes p+1 .. q-1
    let black: NodeSet = (p + 1..q).map(|k| k - 1).collect();
    let mut arrows: Vec<(usize, usize)> = if p < q {
        (1..=p).map(|j| (j - 1, n - j - 1)).collect()
    } else {
        (1..p).map(|j| (j - 1, 2 * p - j - 1)).collect()
    };
    arrows.sort();
    let mut restriction = vec![None; n - 1];
    for j in 1..=p {
        restriction[j - 1] = Some(j - 1);
        restriction[n - j - 1] = Some(j - 1);
    }
    let mut coords = Vec::with_capacity(n - 1);
    for i in 1..p {
        coords.push((i, i + 1));
    }
    if p < q {
        coords.push((p, 2 * p + 1));
        for k in 1..q - p {
            coords.push((2 * p + k, 2 * p + k + 1));
        }
        coords.push((p + q, 2 * p));
    } else {
        coords.push((p, 2 * p));
    }
    for k in 1..p {
        coords.push((2 * p - k + 1, 2 * p - k));
    }
    SatakeDiagram {
        label,
        name: format!("su({p},{q})"),
        ambient,
        black,
        arrows,
        restriction,
        restricted_rank: p,
        coordinates: Some(coords),
        p: Some(p),
        q: Some(q),
    }
}

/// Arrow pairs split by whether they are orthogonal to the imaginary roots.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArrowClassification {
    pub perp: Vec<(usize, usize)>,
    pub nonperp: Vec<(usize, usize)>,
}

impl SatakeDiagram {
    pub fn rank(&self) -> usize {
        self.ambient.rank()
    }

    pub fn white(&self) -> NodeSet {
        self.black.complement(self.rank())
    }

    pub fn paired(&self) -> NodeSet {
        self.arrows.iter().flat_map(|&(a, b)| [a, b]).collect()
    }

    fn adjacent(&self, a: usize, b: usize) -> bool {
        a != b && self.ambient.cartan_matrix()[a][b] != 0
    }

    fn touches_black(&self, a: usize) -> bool {
        self.black.iter().any(|b| self.adjacent(a, b))
    }

    /// Name of node `k` as a root of the ambient algebra.
    pub fn node_name(&self, k: usize) -> String {
        match (&self.coordinates, self.p) {
            (Some(c), Some(p)) => {
                let name = |a: usize| {
                    if a <= 2 * p {
                        format!("mu_{a}")
                    } else {
                        format!("theta_{}", a - 2 * p)
                    }
                };
                format!("{}-{}", name(c[k].0), name(c[k].1))
            }
            _ => format!("beta_{}", k + 1),
        }
    }

    /// Name of restricted simple root `j` (0-based).
    pub fn restricted_name(&self, j: usize) -> String {
        match (self.p, self.q) {
            (Some(p), Some(q)) => {
                let j = j + 1;
                if j < p {
                    format!("lambda_{j}-lambda_{}", j + 1)
                } else if p < q {
                    format!("lambda_{p}")
                } else {
                    format!("2lambda_{p}")
                }
            }
            _ => format!("alpha_{}", j + 1),
        }
    }

    /// ASCII rendering with `●` for imaginary nodes, `○` for the others and
    /// `<-->` for arrows.
    pub fn render(&self) -> String {
        let n = self.rank();
        let mut out = String::new();
        let ambient = self.ambient.type_name();
        let _ = writeln!(
            out,
            "{} : ambient {}, restricted rank {}",
            self.name, ambient, self.restricted_rank
        );
        let mark = |k: usize| if self.black.contains(k) { '●' } else { '○' };
        let is_path = (0..n.saturating_sub(1)).all(|k| self.adjacent(k, k + 1))
            && (0..n).all(|a| (a + 2..n).all(|b| !self.adjacent(a, b)));
        if is_path {
            let nodes: Vec<String> = (0..n).map(|k| format!("{}{}", mark(k), k + 1)).collect();
            let _ = writeln!(out, "{}", nodes.join(" - "));
        } else {
            let nodes: Vec<String> = (0..n).map(|k| format!("{}{}", mark(k), k + 1)).collect();
            let _ = writeln!(out, "nodes: {}", nodes.join(" "));
            let edges: Vec<String> = (0..n)
                .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
                .filter(|&(a, b)| self.adjacent(a, b))
                .map(|(a, b)| format!("{}-{}", a + 1, b + 1))
                .collect();
            let _ = writeln!(out, "edges: {}", edges.join(" "));
        }
        let arrows: Vec<String> = self
            .arrows
            .iter()
            .map(|(a, b)| format!("{} <--> {}", a + 1, b + 1))
            .collect();
        let _ = writeln!(
            out,
            "arrows: {}",
            if arrows.is_empty() {
                "none".to_string()
            } else {
                arrows.join(", ")
            }
        );
        let mut images = Vec::new();
        for j in 0..self.restricted_rank {
            let nodes: Vec<String> = (0..n)
                .filter(|&k| self.restriction[k] == Some(j))
                .map(|k| (k + 1).to_string())
                .collect();
            images.push(format!(
                "{} -> {}",
                nodes.join(","),
                self.restricted_name(j)
            ));
        }
        let _ = writeln!(out, "restriction: {}", images.join("; "));
        out
    }
}

/// Splits the arrow pairs into those with no imaginary neighbour whose two
/// nodes are orthogonal, and the rest.
pub fn arrow_classification(sd: &SatakeDiagram) -> ArrowClassification {
    let (perp, nonperp) = sd.arrows.iter().partition(|&&(a, b)| {
        !sd.touches_black(a) && !sd.touches_black(b) && sd.ambient.cartan_matrix()[a][b] == 0
    });
    ArrowClassification { perp, nonperp }
}

/// Restricted simple roots that are images of perpendicular arrow pairs.
pub fn perp_images(sd: &SatakeDiagram) -> NodeSet {
    arrow_classification(sd)
        .perp
        .iter()
        .filter_map(|&(a, _)| sd.restriction[a])
        .collect()
}

/// Dimensions in `h_k = h_Im + h_arr` and of the center of `m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct HkDecomposition {
    pub dim_h_im: usize,
    pub dim_h_arr: usize,
    pub dim_z_m: usize,
    pub is_outer: bool,
}

pub fn hk_decomposition(sd: &SatakeDiagram) -> HkDecomposition {
    HkDecomposition {
        dim_h_im: sd.black.len(),
        dim_h_arr: sd.arrows.len(),
        dim_z_m: sd.arrows.len(),
        is_outer: !sd.arrows.is_empty(),
    }
}

/// The `sl(2, C)` inside `g` attached to a perpendicular arrow pair.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Rank2Report {
    /// 0-based restricted simple root.
    pub restricted_root: usize,
    pub restricted_name: String,
    pub rank: usize,
    /// Spanning set of its Cartan subalgebra.
    pub cartan_generators: [String; 2],
}

pub fn rank2_subalgebra_check(sd: &SatakeDiagram, pair: (usize, usize)) -> Result<Rank2Report> {
    let pair = (pair.0.min(pair.1), pair.0.max(pair.1));
    if !arrow_classification(sd).perp.contains(&pair) {
        return Err(Error::NotPerpPair(pair.0 + 1, pair.1 + 1));
    }
    let j = sd.restriction[pair.0].expect("arrow nodes are white");
    let name = sd.restricted_name(j);
    Ok(Rank2Report {
        restricted_root: j,
        rank: 2,
        cartan_generators: [
            format!("H_{{{name}}}"),
            format!(
                "iH_{{({})-({})}}",
                sd.node_name(pair.0),
                sd.node_name(pair.1)
            ),
        ],
        restricted_name: name,
    })
}

/// The restricted root of each node of an `su(p, q)` diagram, computed from
/// its coordinates: `mu_a -> lambda_a`, `mu_{p+a} -> -lambda_a`, `theta -> 0`.
/// Returned as coefficients over `lambda_1..lambda_p`.
pub fn restricted_from_coordinates(sd: &SatakeDiagram) -> Option<Vec<Vec<i64>>> {
    let (coords, p) = (sd.coordinates.as_ref()?, sd.p?);
    let lam = |a: usize| -> Vec<i64> {
        let mut v = vec![0; p];
        if a <= p {
            v[a - 1] = 1;
        } else if a <= 2 * p {
            v[a - p - 1] = -1;
        }
        v
    };
    Some(
        coords
            .iter()
            .map(|&(a, b)| lam(a).iter().zip(lam(b)).map(|(x, y)| x - y).collect())
            .collect(),
    )
}

/// Pairing `<gamma^v, delta>` between two ambient simple roots.
pub fn ambient_pairing(sd: &SatakeDiagram, a: usize, b: usize) -> i64 {
    let r = sd.ambient.rank();
    sd.ambient
        .cartan_pairing(&Root::simple(r, a), &Root::simple(r, b))
        .expect("simple roots are nonzero")
}

/// Type of the ambient complex simple system.
pub fn ambient_type(sd: &SatakeDiagram) -> Option<CartanType> {
    sd.ambient.cartan_type()
}
