//! Invariant suite over every system of rank at most 4, reporting named
//! outcomes instead of panicking.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::homology::{
    derham_dim2, h2_classified, h2_direct, h2_from_complex, minimal_two_cells, RingDescriptor,
};
use crate::linalg::{rank_mod_p, rank_rational, IntMatrix};
use crate::nodeset::NodeSet;
use crate::real_form::{real_form_lookup, split_form, Params, RealFormDatum, RealFormLabel};
use crate::roots::{CartanType, Family, RootSystem};
use crate::schubert::{build_split_complex, kernel_catalog};
use crate::weyl::{enumerate_weyl, minimal_by_closed_form};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckOutcome {
    pub name: String,
    pub cases: usize,
    pub failures: Vec<String>,
}

impl CheckOutcome {
    fn new(name: &str) -> Self {
        CheckOutcome {
            name: name.into(),
            cases: 0,
            failures: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn record_result(&mut self, r: Result<bool>, what: impl FnOnce() -> String) {
        match r {
            Ok(ok) => self.record(ok, what),
            Err(e) => {
                let w = what();
                self.record(false, || format!("{w}: {e}"));
            }
        }
    }
}

/// Irreducible types of rank 1 to `max_rank`, both double-bond numberings included.
pub fn small_types(max_rank: usize) -> Vec<CartanType> {
    let mut out = Vec::new();
    for family in Family::ALL {
        for rank in 1..=max_rank {
            if let Ok(t) = CartanType::new(family, rank) {
                if !out.contains(&t) {
                    out.push(t);
                }
            }
        }
    }
    out
}

/// Table forms whose restricted rank is at most `max_rank`, at every admissible rank.
pub fn small_table_forms(max_rank: usize) -> Vec<RealFormDatum> {
    let mut out: Vec<RealFormDatum> = Vec::new();
    for label in RealFormLabel::TABLE {
        if let Ok(rf) = real_form_lookup(label, &Params::none()) {
            if rf.l <= max_rank {
                out.push(rf);
            }
            continue;
        }
        for l in 1..=max_rank {
            if let Ok(rf) = real_form_lookup(label, &Params::rank(l)) {
                out.push(rf);
            }
        }
    }
    out
}

const RINGS: [RingDescriptor; 3] = [
    RingDescriptor::Integers,
    RingDescriptor::IntegersMod(3),
    RingDescriptor::Rationals,
];

fn split_forms(max_rank: usize) -> Result<Vec<RealFormDatum>> {
    small_types(max_rank)
        .into_iter()
        .filter(|t| t.rank >= 2)
        .map(split_form)
        .collect()
}

fn column_matrix(rows: usize, cols: &[Vec<i64>]) -> IntMatrix {
    let mut m = IntMatrix::zeros(rows, cols.len());
    for (j, c) in cols.iter().enumerate() {
        for (i, &x) in c.iter().enumerate() {
            m.set(i, j, x);
        }
    }
    m
}

fn split_cross_check(forms: &[RealFormDatum]) -> CheckOutcome {
    let mut out = CheckOutcome::new("classification = complex (split, Z, Z/3, Q)");
    for rf in forms {
        for theta in NodeSet::subsets(rf.l) {
            for ring in RINGS {
                let r = h2_classified(rf, theta, ring)
                    .and_then(|a| Ok(a.same_group(&h2_from_complex(rf, theta, ring)?)));
                out.record_result(r, || format!("{} {theta} {ring}", rf.name()));
            }
        }
    }
    out
}

fn table_forms_check(forms: &[RealFormDatum]) -> CheckOutcome {
    let mut out = CheckOutcome::new("three routes agree (table forms, Z, Z/3, Q)");
    for rf in forms {
        for theta in NodeSet::subsets(rf.l) {
            for ring in RINGS {
                let r = (|| {
                    let a = h2_classified(rf, theta, ring)?;
                    let b = h2_from_complex(rf, theta, ring)?;
                    let c = h2_direct(rf, theta, ring)?;
                    Ok(a.same_group(&b) && b.same_group(&c))
                })();
                out.record_result(r, || format!("{} {theta} {ring}", rf.name()));
            }
        }
    }
    out
}

fn characteristic_two(forms: &[RealFormDatum]) -> CheckOutcome {
    let mut out = CheckOutcome::new("Z/2 rank = minimal 2-cells");
    let z2 = RingDescriptor::IntegersMod(2);
    for rf in forms {
        for theta in NodeSet::subsets(rf.l) {
            let r = (|| {
                let cells = minimal_two_cells(rf, theta)?.len();
                let a = h2_classified(rf, theta, z2)?;
                let b = h2_from_complex(rf, theta, z2)?;
                Ok(a.free_rank == cells && a.torsion_2 == 0 && a.same_group(&b))
            })();
            out.record_result(r, || format!("{} {theta}", rf.name()));
        }
    }
    out
}

fn kernel_catalog_check(types: &[CartanType]) -> CheckOutcome {
    let mut out = CheckOutcome::new("kernel catalog spans ker d2 (Q, Z/3)");
    for t in types.iter().filter(|t| t.rank >= 2) {
        let Ok(rs) = RootSystem::build(t.family, t.rank) else {
            out.record(false, || format!("{t}: build failed"));
            continue;
        };
        for theta in NodeSet::subsets(t.rank) {
            let r = (|| {
                let slice = build_split_complex(&rs, theta)?;
                let cat = kernel_catalog(&slice)?;
                let vectors: Vec<Vec<i64>> = cat
                    .iter()
                    .map(|g| g.vector(&slice))
                    .collect::<Result<_>>()?;
                let n2 = slice.basis(2).len();
                let k = column_matrix(n2, &vectors);
                let in_kernel = slice.d2.mul(&k).is_zero();
                let nullity_q = n2 - rank_rational(&slice.d2);
                let nullity_3 = n2 - rank_mod_p(&slice.d2, 3);
                Ok(in_kernel && rank_rational(&k) == nullity_q && rank_mod_p(&k, 3) == nullity_3)
            })();
            out.record_result(r, || format!("{t} {theta}"));
        }
    }
    out
}

fn minimality_check(types: &[CartanType]) -> CheckOutcome {
    let mut out = CheckOutcome::new("closed-form minimality = inversion criterion");
    for t in types {
        let Ok(rs) = RootSystem::build(t.family, t.rank) else {
            out.record(false, || format!("{t}: build failed"));
            continue;
        };
        let Ok(elements) = enumerate_weyl(&rs, Some(3)) else {
            out.record(false, || format!("{t}: enumeration failed"));
            continue;
        };
        for theta in NodeSet::subsets(t.rank) {
            for w in &elements {
                let closed = minimal_by_closed_form(&rs, w.word(), theta);
                out.record(closed == Some(w.is_minimal(&rs, theta)), || {
                    format!("{t} {theta} {w}")
                });
            }
        }
    }
    out
}

fn derham_check(forms: &[RealFormDatum]) -> CheckOutcome {
    let mut out = CheckOutcome::new("rational free rank = de Rham dimension");
    for rf in forms {
        for theta in NodeSet::subsets(rf.l) {
            let r = h2_from_complex(rf, theta, RingDescriptor::Rationals)
                .map(|h| h.torsion_2 == 0 && h.free_rank == derham_dim2(rf, theta));
            out.record_result(r, || format!("{} {theta}", rf.name()));
        }
    }
    out
}

fn monotonicity_check(forms: &[RealFormDatum]) -> CheckOutcome {
    let mut out = CheckOutcome::new("free rank is monotone in Theta");
    for rf in forms {
        for theta in NodeSet::subsets(rf.l) {
            for i in theta.complement(rf.l).iter() {
                let mut larger = theta;
                larger.insert(i);
                let r = (|| {
                    let a = h2_classified(rf, theta, RingDescriptor::Integers)?;
                    let b = h2_classified(rf, larger, RingDescriptor::Integers)?;
                    Ok(b.free_rank <= a.free_rank)
                })();
                out.record_result(r, || format!("{} {theta} + {}", rf.name(), i + 1));
            }
        }
    }
    out
}

fn table_check() -> CheckOutcome {
    let mut out = CheckOutcome::new("embedded table regenerates");
    let diff = crate::real_form::table1_diff();
    out.record(diff.is_empty(), || {
        format!("{} differing lines", diff.len())
    });
    out
}

/// Runs every check on systems of rank at most `max_rank`.
pub fn run_checks(max_rank: usize) -> Vec<CheckOutcome> {
    let types = small_types(max_rank);
    let table = small_table_forms(max_rank);
    let split = match split_forms(max_rank) {
        Ok(s) => s,
        Err(e) => {
            let mut out = CheckOutcome::new("split forms");
            out.record(false, || e.to_string());
            return vec![out];
        }
    };
    vec![
        table_check(),
        split_cross_check(&split),
        table_forms_check(&table),
        characteristic_two(&split),
        kernel_catalog_check(&types),
        minimality_check(&types),
        derham_check(&table),
        monotonicity_check(&table),
    ]
}
