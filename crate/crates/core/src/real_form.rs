//! Restricted-root data of non-compact real simple Lie algebras, backed by an
//! embedded database of the forms having simple restricted roots of rank at
//! most 2.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::nodeset::NodeSet;
use crate::roots::{CartanType, Family, RootSystem};

const TABLE_DB: &str = include_str!("../data/table1.db");
const TABLE_REFERENCE: &str = include_str!("../data/table1.txt");

/// `rank alpha = dim g_alpha + dim g_{2 alpha}`, with everything from 3 up
/// lumped together when the exact value is not needed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum RankClass {
    One,
    Two,
    Three,
    Big,
}

impl RankClass {
    /// The exact rank when known.
    pub fn value(self) -> Option<usize> {
        match self {
            RankClass::One => Some(1),
            RankClass::Two => Some(2),
            RankClass::Three => Some(3),
            RankClass::Big => None,
        }
    }
}

impl fmt::Display for RankClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RankClass::One => "1",
            RankClass::Two => "2",
            RankClass::Three => "3",
            RankClass::Big => "big",
        })
    }
}

impl FromStr for RankClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "1" => Ok(RankClass::One),
            "2" => Ok(RankClass::Two),
            "3" => Ok(RankClass::Three),
            "big" => Ok(RankClass::Big),
            _ => Err(Error::Parse(format!("unknown rank class `{s}`"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum RealFormLabel {
    AI,
    AIII1,
    AIII2,
    BI1,
    BI2,
    CI,
    DI1,
    DI2,
    DI3,
    DIII1,
    EI,
    EII,
    EV,
    EVI,
    EVII,
    EVIII,
    EIX,
    FI,
    G,
    /// Any real form outside the table: every simple restricted root has rank >= 3.
    Other,
}

impl RealFormLabel {
    pub const TABLE: [RealFormLabel; 19] = [
        RealFormLabel::AI,
        RealFormLabel::AIII1,
        RealFormLabel::AIII2,
        RealFormLabel::BI1,
        RealFormLabel::BI2,
        RealFormLabel::CI,
        RealFormLabel::DI1,
        RealFormLabel::DI2,
        RealFormLabel::DI3,
        RealFormLabel::DIII1,
        RealFormLabel::EI,
        RealFormLabel::EII,
        RealFormLabel::EV,
        RealFormLabel::EVI,
        RealFormLabel::EVII,
        RealFormLabel::EVIII,
        RealFormLabel::EIX,
        RealFormLabel::FI,
        RealFormLabel::G,
    ];

    pub fn name(self) -> &'static str {
        match self {
            RealFormLabel::AI => "AI",
            RealFormLabel::AIII1 => "AIII_1",
            RealFormLabel::AIII2 => "AIII_2",
            RealFormLabel::BI1 => "BI_1",
            RealFormLabel::BI2 => "BI_2",
            RealFormLabel::CI => "CI",
            RealFormLabel::DI1 => "DI_1",
            RealFormLabel::DI2 => "DI_2",
            RealFormLabel::DI3 => "DI_3",
            RealFormLabel::DIII1 => "DIII_1",
            RealFormLabel::EI => "EI",
            RealFormLabel::EII => "EII",
            RealFormLabel::EV => "EV",
            RealFormLabel::EVI => "EVI",
            RealFormLabel::EVII => "EVII",
            RealFormLabel::EVIII => "EVIII",
            RealFormLabel::EIX => "EIX",
            RealFormLabel::FI => "FI",
            RealFormLabel::G => "G",
            RealFormLabel::Other => "OTHER",
        }
    }

    /// Split real forms: every simple restricted root has rank 1.
    pub fn is_split(self) -> bool {
        matches!(
            self,
            RealFormLabel::AI
                | RealFormLabel::BI1
                | RealFormLabel::CI
                | RealFormLabel::DI3
                | RealFormLabel::EI
                | RealFormLabel::EV
                | RealFormLabel::EVIII
                | RealFormLabel::FI
                | RealFormLabel::G
        )
    }
}

impl fmt::Display for RealFormLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for RealFormLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let norm: String = s
            .chars()
            .filter(|c| *c != '_' && *c != '-')
            .collect::<String>()
            .to_ascii_uppercase();
        RealFormLabel::TABLE
            .into_iter()
            .chain([RealFormLabel::Other])
            .find(|l| l.name().replace('_', "") == norm)
            .ok_or_else(|| Error::UnknownLabel(s.to_string()))
    }
}

/// User-facing parameters. Which ones are needed depends on the label.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Params {
    pub rank: Option<usize>,
    pub p: Option<usize>,
    pub q: Option<usize>,
    /// Restricted type for [`RealFormLabel::Other`].
    pub restricted: Option<CartanType>,
}

impl Params {
    pub fn rank(l: usize) -> Self {
        Params {
            rank: Some(l),
            ..Params::default()
        }
    }

    pub fn pq(p: usize, q: usize) -> Self {
        Params {
            p: Some(p),
            q: Some(q),
            ..Params::default()
        }
    }

    pub fn none() -> Self {
        Params::default()
    }
}

/// Rank classes along a diagram, with an optional run that stretches to the
/// diagram's rank.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankPattern {
    prefix: Vec<RankClass>,
    fill: Option<RankClass>,
    suffix: Vec<RankClass>,
}

impl RankPattern {
    fn parse(s: &str) -> Result<Self> {
        let mut pat = RankPattern {
            prefix: vec![],
            fill: None,
            suffix: vec![],
        };
        for tok in s.split_whitespace() {
            if let Some(t) = tok.strip_suffix('*') {
                if pat.fill.is_some() {
                    return Err(Error::Parse(format!("two fill tokens in `{s}`")));
                }
                pat.fill = Some(t.parse()?);
            } else if pat.fill.is_some() {
                pat.suffix.push(tok.parse()?);
            } else {
                pat.prefix.push(tok.parse()?);
            }
        }
        Ok(pat)
    }

    fn fixed_len(&self) -> usize {
        self.prefix.len() + self.suffix.len()
    }

    /// Rank classes for a diagram of rank `l`.
    pub fn expand(&self, l: usize) -> Option<Vec<RankClass>> {
        match self.fill {
            None if l == self.prefix.len() => Some(self.prefix.clone()),
            Some(f) if l >= self.fixed_len() => {
                let mut v = self.prefix.clone();
                v.extend(std::iter::repeat_n(f, l - self.fixed_len()));
                v.extend(&self.suffix);
                Some(v)
            }
            _ => None,
        }
    }

    /// Renders the set of positions holding `class`, with `l` symbolic when the
    /// diagram has a free rank.
    fn render_set(&self, class: RankClass, fixed_rank: Option<usize>) -> String {
        let from_end = |k: usize| match fixed_rank {
            Some(n) => (n - k).to_string(),
            None => offset_l(k),
        };
        let total = self.fixed_len() + usize::from(self.fill.is_some());
        let mut items: Vec<String> = Vec::new();
        let mut count = 0;
        for (i, c) in self.prefix.iter().enumerate() {
            if *c == class {
                items.push(alpha(&(i + 1).to_string()));
                count += 1;
            }
        }
        if self.fill == Some(class) {
            let first = self.prefix.len() + 1;
            let last = from_end(self.suffix.len());
            items.push(alpha(&first.to_string()));
            items.push("...".into());
            items.push(alpha(&last));
            count += 1;
        }
        for (k, c) in self.suffix.iter().enumerate() {
            if *c == class {
                items.push(alpha(&from_end(self.suffix.len() - 1 - k)));
                count += 1;
            }
        }
        if count == 0 {
            "---".into()
        } else if count == total {
            "Sigma".into()
        } else {
            format!("{{{}}}", items.join(", "))
        }
    }
}

fn offset_l(k: usize) -> String {
    if k == 0 {
        "l".into()
    } else {
        format!("l-{k}")
    }
}

fn alpha(idx: &str) -> String {
    if idx.len() == 1 {
        format!("alpha_{idx}")
    } else {
        format!("alpha_{{{idx}}}")
    }
}

/// One record of the embedded table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableRecord {
    pub label: RealFormLabel,
    pub family: Family,
    /// `None` when the rank is a free parameter `l`.
    pub fixed_rank: Option<usize>,
    pub pattern: RankPattern,
    pub satake: Option<String>,
}

impl TableRecord {
    fn parse(line: &str) -> Result<Self> {
        let fields: Vec<&str> = line.split('|').map(str::trim).collect();
        let [label, ty, pattern, satake] = fields[..] else {
            return Err(Error::Parse(format!("expected 4 fields in `{line}`")));
        };
        let label: RealFormLabel = label.parse()?;
        let (fam, rank) = ty
            .split_once('_')
            .ok_or_else(|| Error::Parse(format!("bad type `{ty}`")))?;
        let family = fam
            .chars()
            .next()
            .and_then(Family::from_letter)
            .ok_or_else(|| Error::Parse(format!("bad type `{ty}`")))?;
        let fixed_rank = match rank {
            "l" => None,
            n => Some(
                n.parse()
                    .map_err(|_| Error::Parse(format!("bad type `{ty}`")))?,
            ),
        };
        let pattern = RankPattern::parse(pattern)?;
        let satake = (satake != "-").then(|| satake.to_string());
        Ok(TableRecord {
            label,
            family,
            fixed_rank,
            pattern,
            satake,
        })
    }

    pub fn dynkin(&self) -> String {
        match self.fixed_rank {
            Some(n) => format!("{}_{n}", self.family.letter()),
            None => format!("{}_l", self.family.letter()),
        }
    }

    pub fn render_row(&self) -> String {
        let split = self.pattern.render_set(RankClass::One, self.fixed_rank);
        let two = self.pattern.render_set(RankClass::Two, self.fixed_rank);
        format!(
            "| {} | {} | {} | {} |",
            self.label,
            self.dynkin(),
            split,
            two
        )
    }
}

/// Parses the embedded database.
pub fn table_records() -> &'static [TableRecord] {
    static RECORDS: OnceLock<Vec<TableRecord>> = OnceLock::new();
    RECORDS.get_or_init(|| parse_table(TABLE_DB).expect("embedded table parses"))
}

pub fn parse_table(text: &str) -> Result<Vec<TableRecord>> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(TableRecord::parse)
        .collect()
}

pub const TABLE_HEADER: &str = "| Lie algebra | Dynkin diagram | Sigma_split | Sigma_2 |";

/// Regenerates the table from the database.
pub fn render_table1() -> String {
    let mut out = String::from(TABLE_HEADER);
    out.push('\n');
    for rec in table_records() {
        out.push_str(&rec.render_row());
        out.push('\n');
    }
    out
}

/// Hand transcription of the published table, for comparison.
pub fn reference_table1() -> &'static str {
    TABLE_REFERENCE
}

/// Lines where the regenerated table differs from the reference, as
/// `(line number, regenerated, reference)`.
pub fn table1_diff() -> Vec<(usize, String, String)> {
    let ours = render_table1();
    let a: Vec<&str> = ours.lines().collect();
    let b: Vec<&str> = TABLE_REFERENCE.lines().collect();
    (0..a.len().max(b.len()))
        .filter(|&i| a.get(i) != b.get(i))
        .map(|i| {
            (
                i + 1,
                a.get(i).unwrap_or(&"").to_string(),
                b.get(i).unwrap_or(&"").to_string(),
            )
        })
        .collect()
}

/// A real form together with its restricted simple system and rank classes.
#[derive(Debug, Clone)]
pub struct RealFormDatum {
    pub label: RealFormLabel,
    /// Rank of the restricted system.
    pub l: usize,
    pub p: Option<usize>,
    pub q: Option<usize>,
    pub restricted: RootSystem,
    pub rank_class: Vec<RankClass>,
    pub sigma_split: NodeSet,
    pub sigma_two: NodeSet,
    pub satake: Option<String>,
}

impl RealFormDatum {
    pub fn rank(&self) -> usize {
        self.l
    }

    pub fn is_split(&self) -> bool {
        self.sigma_split == NodeSet::full(self.l)
    }

    /// Display name such as `AIII_1(p=2,q=4)` or `AI(l=3)`.
    pub fn name(&self) -> String {
        match (self.label, self.p, self.q) {
            (RealFormLabel::Other, ..) => format!("OTHER({})", self.restricted.type_name()),
            (_, Some(p), Some(q)) => format!("{}(p={p},q={q})", self.label),
            _ => match table_record(self.label).and_then(|r| r.fixed_rank) {
                Some(_) => self.label.to_string(),
                None => format!("{}(l={})", self.label, self.l),
            },
        }
    }
}

fn table_record(label: RealFormLabel) -> Option<&'static TableRecord> {
    table_records().iter().find(|r| r.label == label)
}

fn invalid(label: RealFormLabel, reason: impl Into<String>) -> Error {
    Error::InvalidParams {
        label: label.to_string(),
        reason: reason.into(),
    }
}

/// Looks up a real form and instantiates its rank data.
pub fn real_form_lookup(label: RealFormLabel, params: &Params) -> Result<RealFormDatum> {
    if label == RealFormLabel::Other {
        let t = params
            .restricted
            .ok_or_else(|| invalid(label, "a restricted type is required"))?;
        let restricted = RootSystem::build(t.family, t.rank)?;
        return Ok(RealFormDatum {
            label,
            l: t.rank,
            p: None,
            q: None,
            restricted,
            rank_class: vec![RankClass::Big; t.rank],
            sigma_split: NodeSet::empty(),
            sigma_two: NodeSet::empty(),
            satake: None,
        });
    }
    let rec = table_record(label).ok_or_else(|| Error::UnknownLabel(label.to_string()))?;
    let (l, p, q) = resolve_rank(label, rec, params)?;
    let restricted = RootSystem::build(rec.family, l).map_err(|e| invalid(label, e.to_string()))?;
    let rank_class = rec
        .pattern
        .expand(l)
        .ok_or_else(|| invalid(label, format!("rank {l} does not fit the table entry")))?;
    let pick = |c: RankClass| -> NodeSet {
        rank_class
            .iter()
            .enumerate()
            .filter(|(_, &x)| x == c)
            .map(|(i, _)| i)
            .collect()
    };
    Ok(RealFormDatum {
        label,
        l,
        p,
        q,
        restricted,
        sigma_split: pick(RankClass::One),
        sigma_two: pick(RankClass::Two),
        rank_class,
        satake: rec.satake.clone(),
    })
}

/// The split real form whose restricted system is `t`.
pub fn split_form(t: CartanType) -> Result<RealFormDatum> {
    use RealFormLabel as L;
    let (label, params) = match (t.family, t.rank) {
        (Family::A, l) => (L::AI, Params::rank(l)),
        (Family::B, l) => (L::BI1, Params::rank(l)),
        (Family::C, l) => (L::CI, Params::rank(l)),
        (Family::D, l) => (L::DI3, Params::rank(l)),
        (Family::E, 6) => (L::EI, Params::none()),
        (Family::E, 7) => (L::EV, Params::none()),
        (Family::E, _) => (L::EVIII, Params::none()),
        (Family::F, _) => (L::FI, Params::none()),
        (Family::G, _) => (L::G, Params::none()),
    };
    real_form_lookup(label, &params)
}

fn resolve_rank(
    label: RealFormLabel,
    rec: &TableRecord,
    params: &Params,
) -> Result<(usize, Option<usize>, Option<usize>)> {
    if let Some(n) = rec.fixed_rank {
        if params.rank.is_some_and(|r| r != n) {
            return Err(invalid(
                label,
                format!("the restricted rank is fixed at {n}"),
            ));
        }
        if params.p.is_some() || params.q.is_some() {
            return Err(invalid(label, "p and q do not apply"));
        }
        return Ok((n, None, None));
    }
    let pq = match label {
        RealFormLabel::AIII1 | RealFormLabel::AIII2 => true,
        _ => {
            if params.p.is_some() || params.q.is_some() {
                return Err(invalid(label, "p and q only apply to AIII"));
            }
            false
        }
    };
    let l = match (pq, params.p, params.rank) {
        (true, Some(p), Some(r)) if p != r => {
            return Err(invalid(label, "rank must equal p"));
        }
        (true, Some(p), _) => p,
        (_, _, Some(r)) => r,
        _ => return Err(invalid(label, "a rank is required")),
    };
    let (min, what) = match rec.family {
        Family::A => (1, "l >= 1"),
        Family::D => (4, "l >= 4"),
        _ => (2, "l >= 2"),
    };
    if l < min {
        return Err(invalid(label, format!("requires {what}")));
    }
    match label {
        RealFormLabel::AIII1 => {
            if let Some(q) = params.q {
                if q <= l {
                    return Err(invalid(label, "requires p < q"));
                }
            }
            Ok((l, Some(l), params.q))
        }
        RealFormLabel::AIII2 => {
            if params.q.is_some_and(|q| q != l) {
                return Err(invalid(label, "requires p = q"));
            }
            Ok((l, Some(l), Some(l)))
        }
        _ => Ok((l, None, None)),
    }
}
