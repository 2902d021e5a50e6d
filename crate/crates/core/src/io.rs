// SPDX-License-Identifier: Apache-2.0

//! JSON documents for rings, quadratic spaces, extension problems and
//! inverse problems, plus renderings of sector tables.
//!
//! Keyed maps keep insertion order, so writing a loaded document once
//! normalizes it and writing it again is a fixpoint.

use indexmap::IndexMap;
use serde::{Deserialize, Serialize};

use crate::abgroup::{FinAbGroup, GroupElement, Subgroup};
use crate::error::{Error, Result};
use crate::exactnum::{format_rational, parse_rational, Scalar, QZ};
use crate::extension::{Extension, ExtensionProblem, SectorTable};
use crate::fusion::{FusionRing, SimpleCurrentGrading};
use crate::inverse::InverseProblem;
use crate::quadspace::QuadraticSpace;

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct FusionEntryDoc {
    pub a: String,
    pub b: String,
    pub c: String,
    pub n: i64,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct RingDoc {
    pub labels: Vec<String>,
    pub unit: String,
    /// Empty means "infer from `N(X, Y, unit) = 1`".
    #[serde(default)]
    pub dual: IndexMap<String, String>,
    pub weights: IndexMap<String, String>,
    #[serde(default)]
    pub fusion: Vec<FusionEntryDoc>,
    #[serde(
        rename = "trueWeights",
        default,
        skip_serializing_if = "Option::is_none"
    )]
    pub true_weights: Option<IndexMap<String, String>>,
}

/// A group element written either as a coordinate list or, for cyclic
/// groups, as a bare integer.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(untagged)]
pub enum ElementDoc {
    Scalar(i64),
    Coords(Vec<i64>),
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct SpaceDoc {
    pub group: Vec<u64>,
    pub q: IndexMap<String, String>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct ExtensionDoc {
    #[serde(rename = "W")]
    pub w: RingDoc,
    #[serde(rename = "V")]
    pub v: SpaceDoc,
    #[serde(rename = "D")]
    pub d: Vec<ElementDoc>,
    pub grading: IndexMap<String, String>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct InverseDoc {
    #[serde(rename = "U")]
    pub u: RingDoc,
    #[serde(rename = "V")]
    pub v: SpaceDoc,
    #[serde(rename = "D")]
    pub d: Vec<ElementDoc>,
    #[serde(rename = "gradingU")]
    pub grading_u: IndexMap<String, String>,
    pub branching: IndexMap<String, ElementDoc>,
}

fn parse_err(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

fn label_pos(labels: &[String], l: &str, ctx: &str) -> Result<usize> {
    labels
        .iter()
        .position(|x| x == l)
        .ok_or_else(|| parse_err(format!("{ctx}: unknown label {l:?}")))
}

fn coords_of(e: &ElementDoc) -> Vec<i64> {
    match e {
        ElementDoc::Scalar(x) => vec![*x],
        ElementDoc::Coords(v) => v.clone(),
    }
}

/// Reads `"[1,3]"`, `"1,3"` or `"2"` as an element of `g`; coordinates
/// must already be reduced.
pub fn parse_element(g: &FinAbGroup, s: &str) -> Result<GroupElement> {
    let inner = s.trim().trim_start_matches('[').trim_end_matches(']');
    let coords: Vec<i64> = if inner.trim().is_empty() {
        Vec::new()
    } else {
        inner
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<i64>()
                    .map_err(|_| parse_err(format!("bad group element {s:?}")))
            })
            .collect::<Result<_>>()?
    };
    element_from_coords(g, &coords, s)
}

fn element_from_coords(g: &FinAbGroup, coords: &[i64], shown: &str) -> Result<GroupElement> {
    if coords.len() != g.rank() {
        return Err(parse_err(format!(
            "element {shown} needs {} coordinates for {g}",
            g.rank()
        )));
    }
    for (&c, &n) in coords.iter().zip(g.invariants()) {
        if c < 0 || c as u64 >= n {
            return Err(parse_err(format!(
                "coordinate {c} of {shown} is outside 0..{n}"
            )));
        }
    }
    g.element(coords)
}

fn element_doc(e: &GroupElement) -> ElementDoc {
    ElementDoc::Coords(e.coords().iter().map(|&c| c as i64).collect())
}

fn doc_element(g: &FinAbGroup, e: &ElementDoc) -> Result<GroupElement> {
    let coords = coords_of(e);
    element_from_coords(g, &coords, &format!("{coords:?}"))
}

impl RingDoc {
    pub fn from_ring<I: Scalar>(r: &FusionRing<I>) -> Self {
        let labels = r.labels().to_vec();
        RingDoc {
            dual: (0..r.len())
                .map(|i| (labels[i].clone(), labels[r.dual(i)].clone()))
                .collect(),
            weights: (0..r.len())
                .map(|i| (labels[i].clone(), r.weight(i).to_string()))
                .collect(),
            fusion: r
                .entries()
                .map(|(a, b, c, n)| FusionEntryDoc {
                    a: labels[a].clone(),
                    b: labels[b].clone(),
                    c: labels[c].clone(),
                    n: n as i64,
                })
                .collect(),
            true_weights: r.true_weights().map(|h| {
                h.iter()
                    .enumerate()
                    .map(|(i, x)| (labels[i].clone(), format_rational(x)))
                    .collect()
            }),
            unit: labels[r.unit()].clone(),
            labels,
        }
    }

    pub fn to_ring<I: Scalar>(&self) -> Result<FusionRing<I>> {
        let labels = &self.labels;
        let unit = label_pos(labels, &self.unit, "unit")?;
        for key in self.weights.keys() {
            label_pos(labels, key, "weights")?;
        }
        let weights = labels
            .iter()
            .map(|l| {
                let w = self
                    .weights
                    .get(l)
                    .ok_or_else(|| parse_err(format!("no weight for label {l:?}")))?;
                w.parse::<QZ<I>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let mut entries = Vec::with_capacity(self.fusion.len());
        for e in &self.fusion {
            if e.n < 0 {
                return Err(parse_err(format!(
                    "negative multiplicity N({}, {}, {}) = {}",
                    e.a, e.b, e.c, e.n
                )));
            }
            entries.push((
                label_pos(labels, &e.a, "fusion")?,
                label_pos(labels, &e.b, "fusion")?,
                label_pos(labels, &e.c, "fusion")?,
                e.n as u64,
            ));
        }
        let ring = if self.dual.is_empty() {
            FusionRing::with_inferred_duals(labels.clone(), unit, weights, entries)?
        } else {
            let dual = labels
                .iter()
                .map(|l| {
                    let d = self
                        .dual
                        .get(l)
                        .ok_or_else(|| parse_err(format!("no dual for label {l:?}")))?;
                    label_pos(labels, d, "dual")
                })
                .collect::<Result<Vec<_>>>()?;
            FusionRing::new(labels.clone(), unit, dual, weights, entries)?
        };
        match &self.true_weights {
            None => Ok(ring),
            Some(h) => {
                let h = labels
                    .iter()
                    .map(|l| {
                        let v = h
                            .get(l)
                            .ok_or_else(|| parse_err(format!("no true weight for label {l:?}")))?;
                        parse_rational::<I>(v)
                    })
                    .collect::<Result<Vec<_>>>()?;
                ring.with_true_weights(h)
            }
        }
    }
}

impl SpaceDoc {
    pub fn from_space<I: Scalar>(s: &QuadraticSpace<I>) -> Self {
        SpaceDoc {
            group: s.group().invariants().to_vec(),
            q: s.group()
                .elements()
                .map(|x| (x.to_string(), s.q(&x).to_string()))
                .collect(),
        }
    }

    pub fn to_space<I: Scalar>(&self) -> Result<QuadraticSpace<I>> {
        let g = FinAbGroup::from_invariants(&self.group).map_err(|e| parse_err(e.to_string()))?;
        let mut q: Vec<Option<QZ<I>>> = vec![None; g.order()];
        for (k, v) in &self.q {
            let x = parse_element(&g, k)?;
            if q[x.index()].replace(v.parse()?).is_some() {
                return Err(parse_err(format!("q given twice for {x}")));
            }
        }
        let q = q
            .into_iter()
            .zip(g.elements())
            .map(|(v, x)| v.ok_or_else(|| parse_err(format!("q has no value for {x}"))))
            .collect::<Result<Vec<_>>>()?;
        QuadraticSpace::new(g, q)
    }
}

fn subgroup_from_docs(g: &FinAbGroup, gens: &[ElementDoc]) -> Result<Subgroup> {
    let gens = gens
        .iter()
        .map(|e| doc_element(g, e))
        .collect::<Result<Vec<_>>>()?;
    Subgroup::generate(g, &gens)
}

/// A minimal generating list for `h`, greedily in element order.
fn generators_of(h: &Subgroup) -> Vec<GroupElement> {
    let mut gens = Vec::new();
    let mut span = Subgroup::trivial(h.owner());
    for e in h.elements() {
        if !span.contains(e) {
            gens.push(e.clone());
            span = Subgroup::generate(h.owner(), &gens).expect("same owner");
        }
    }
    gens
}

fn grading_from_doc<I: Scalar>(
    ring: &FusionRing<I>,
    domain: &Subgroup,
    map: &IndexMap<String, String>,
) -> Result<SimpleCurrentGrading> {
    let pairs = map
        .iter()
        .map(|(k, l)| {
            Ok((
                parse_element(domain.owner(), k)?,
                label_pos(ring.labels(), l, "grading")?,
            ))
        })
        .collect::<Result<Vec<_>>>()?;
    SimpleCurrentGrading::from_pairs(domain.clone(), &pairs)
}

fn grading_doc<I: Scalar>(
    ring: &FusionRing<I>,
    g: &SimpleCurrentGrading,
) -> IndexMap<String, String> {
    g.pairs()
        .map(|(e, l)| (e.to_string(), ring.label(l).to_string()))
        .collect()
}

impl ExtensionDoc {
    pub fn from_problem<I: Scalar>(p: &ExtensionProblem<I>) -> Self {
        ExtensionDoc {
            w: RingDoc::from_ring(p.w()),
            v: SpaceDoc::from_space(p.v()),
            d: generators_of(p.d()).iter().map(element_doc).collect(),
            grading: grading_doc(p.w(), p.grading()),
        }
    }

    pub fn to_problem<I: Scalar>(&self) -> Result<ExtensionProblem<I>> {
        let w = self.w.to_ring::<I>()?;
        let v = self.v.to_space::<I>()?;
        let d = subgroup_from_docs(v.group(), &self.d)?;
        let grading = grading_from_doc(&w, &d, &self.grading)?;
        ExtensionProblem::new(w, v, d, grading)
    }
}

impl InverseDoc {
    pub fn from_problem<I: Scalar>(p: &InverseProblem<I>) -> Self {
        InverseDoc {
            u: RingDoc::from_ring(p.u()),
            v: SpaceDoc::from_space(p.v()),
            d: generators_of(p.d()).iter().map(element_doc).collect(),
            grading_u: grading_doc(p.u(), p.grading()),
            branching: p
                .branching()
                .iter()
                .map(|(m, l)| (p.u().label(*m).to_string(), element_doc(l)))
                .collect(),
        }
    }

    pub fn to_problem<I: Scalar>(&self) -> Result<InverseProblem<I>> {
        let u = self.u.to_ring::<I>()?;
        let v = self.v.to_space::<I>()?;
        let d = subgroup_from_docs(v.group(), &self.d)?;
        let dperp = v.perp(&d)?;
        let grading = grading_from_doc(&u, &dperp, &self.grading_u)?;
        let branching = self
            .branching
            .iter()
            .map(|(l, e)| {
                Ok((
                    label_pos(u.labels(), l, "branching")?,
                    doc_element(v.group(), e)?,
                ))
            })
            .collect::<Result<Vec<_>>>()?;
        InverseProblem::new(u, v, d, grading, &branching)
    }
}

/// Any of the four document kinds, told apart by their keys.
#[derive(Clone, Debug)]
pub enum Document {
    Ring(RingDoc),
    Space(SpaceDoc),
    Extension(Box<ExtensionDoc>),
    Inverse(Box<InverseDoc>),
}

impl Document {
    pub fn kind(&self) -> &'static str {
        match self {
            Document::Ring(_) => "ring",
            Document::Space(_) => "space",
            Document::Extension(_) => "extension",
            Document::Inverse(_) => "inverse",
        }
    }
}

pub fn read_document(text: &str) -> Result<Document> {
    let value: serde_json::Value = serde_json::from_str(text)?;
    let has = |k: &str| value.get(k).is_some();
    Ok(if has("labels") {
        Document::Ring(serde_json::from_value(value)?)
    } else if has("group") {
        Document::Space(serde_json::from_value(value)?)
    } else if has("W") {
        Document::Extension(Box::new(serde_json::from_value(value)?))
    } else if has("U") {
        Document::Inverse(Box::new(serde_json::from_value(value)?))
    } else {
        return Err(parse_err(
            "unrecognized document: expected a ring, space, extension or inverse problem",
        ));
    })
}

/// Pretty JSON with a trailing newline.
pub fn to_json<T: Serialize>(doc: &T) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("documents serialize");
    s.push('\n');
    s
}

pub fn ring_from_json<I: Scalar>(text: &str) -> Result<FusionRing<I>> {
    serde_json::from_str::<RingDoc>(text)?.to_ring()
}

pub fn ring_to_json<I: Scalar>(r: &FusionRing<I>) -> String {
    to_json(&RingDoc::from_ring(r))
}

pub fn space_from_json<I: Scalar>(text: &str) -> Result<QuadraticSpace<I>> {
    serde_json::from_str::<SpaceDoc>(text)?.to_space()
}

pub fn space_to_json<I: Scalar>(s: &QuadraticSpace<I>) -> String {
    to_json(&SpaceDoc::from_space(s))
}

pub fn extension_from_json<I: Scalar>(text: &str) -> Result<ExtensionProblem<I>> {
    serde_json::from_str::<ExtensionDoc>(text)?.to_problem()
}

pub fn extension_to_json<I: Scalar>(p: &ExtensionProblem<I>) -> String {
    to_json(&ExtensionDoc::from_problem(p))
}

pub fn inverse_from_json<I: Scalar>(text: &str) -> Result<InverseProblem<I>> {
    serde_json::from_str::<InverseDoc>(text)?.to_problem()
}

pub fn inverse_to_json<I: Scalar>(p: &InverseProblem<I>) -> String {
    to_json(&InverseDoc::from_problem(p))
}

#[derive(Serialize)]
struct ComponentOut {
    #[serde(rename = "W")]
    w: String,
    charge: Vec<u64>,
}

#[derive(Serialize)]
struct SectorOut {
    sector: String,
    orbit: usize,
    alpha: Vec<u64>,
    weight: String,
    decomposition: Vec<ComponentOut>,
}

#[derive(Serialize)]
struct BlockOut {
    chi: String,
    sectors: Vec<SectorOut>,
}

fn decomposition_text<I: Scalar>(ext: &Extension<I>, d: &[(usize, GroupElement)]) -> String {
    let w = ext.problem().w();
    d.iter()
        .map(|(x, a)| format!("{}⊗V{a}", w.label(*x)))
        .collect::<Vec<_>>()
        .join(" + ")
}

/// Blocks of `table` as JSON; `twisted = false` keeps the untwisted block only.
pub fn sector_table_json<I: Scalar>(
    ext: &Extension<I>,
    table: &SectorTable<I>,
    twisted: bool,
) -> String {
    let w = ext.problem().w();
    let blocks: Vec<BlockOut> = table
        .blocks
        .iter()
        .take(if twisted { table.blocks.len() } else { 1 })
        .map(|b| BlockOut {
            chi: b.chi.to_string(),
            sectors: b
                .sectors
                .iter()
                .map(|s| SectorOut {
                    sector: s.id.to_string(),
                    orbit: s.id.orbit,
                    alpha: s.id.alpha.coords().to_vec(),
                    weight: s.weight.to_string(),
                    decomposition: s
                        .decomposition
                        .iter()
                        .map(|(x, a)| ComponentOut {
                            w: w.label(*x).to_string(),
                            charge: a.coords().to_vec(),
                        })
                        .collect(),
                })
                .collect(),
        })
        .collect();
    to_json(&serde_json::json!({ "characters": blocks }))
}

/// Aligned plain-text table with columns `chi  i  alpha  weight  decomposition`.
pub fn sector_table_text<I: Scalar>(
    ext: &Extension<I>,
    table: &SectorTable<I>,
    twisted: bool,
) -> String {
    let mut rows = vec![[
        "chi".to_string(),
        "i".into(),
        "alpha".into(),
        "weight".into(),
        "decomposition".into(),
    ]];
    for b in table
        .blocks
        .iter()
        .take(if twisted { table.blocks.len() } else { 1 })
    {
        for s in &b.sectors {
            rows.push([
                b.chi.to_string(),
                s.id.orbit.to_string(),
                s.id.alpha.to_string(),
                s.weight.to_string(),
                decomposition_text(ext, &s.decomposition),
            ]);
        }
    }
    let mut widths = [0usize; 5];
    for r in &rows {
        for (w, cell) in widths.iter_mut().zip(r) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let mut out = String::new();
    for r in &rows {
        let mut line = String::new();
        for (k, cell) in r.iter().enumerate() {
            if k + 1 == r.len() {
                line.push_str(cell);
            } else {
                line.push_str(cell);
                line.push_str(&" ".repeat(widths[k] - cell.chars().count() + 2));
            }
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

/// Human-readable listing: one line per label, then every nonzero product.
pub fn ring_text<I: Scalar>(r: &FusionRing<I>) -> String {
    let width = r
        .labels()
        .iter()
        .map(|l| l.chars().count())
        .max()
        .unwrap_or(0);
    let mut out = format!("{} labels, unit {}\n", r.len(), r.label(r.unit()));
    let hs: Vec<String> = r.weights().iter().map(|h| h.to_string()).collect();
    let hw = hs.iter().map(|h| h.len()).max().unwrap_or(0);
    for (i, h) in hs.iter().enumerate() {
        let l = r.label(i);
        let pad = " ".repeat(width - l.chars().count());
        out.push_str(&format!(
            "  {l}{pad}  h = {h:<hw$}  dual {}\n",
            r.label(r.dual(i))
        ));
    }
    for a in 0..r.len() {
        for b in a..r.len() {
            let terms: Vec<String> = r
                .fuse(a, b)
                .iter()
                .map(|&(c, m)| {
                    if m == 1 {
                        r.label(c).to_string()
                    } else {
                        format!("{m} {}", r.label(c))
                    }
                })
                .collect();
            out.push_str(&format!(
                "  {} x {} = {}\n",
                r.label(a),
                r.label(b),
                terms.join(" + ")
            ));
        }
    }
    out
}
