//! JSON document formats.
//!
//! Four schemas, each carrying an explicit `schema` tag: `hyperfield-table/1`
//! for finite tables, `matroid/1` for a function together with its
//! hyperfield, `algebra/1` for algebra and tensor elements, and `report/1`
//! for checker output. Serialization is canonical: map keys are sorted,
//! zero values are dropped, and parsing rejects unknown fields and
//! non-canonical keys, so parse and serialize round-trip byte for byte.

use crate::error::{Error, Result};
use crate::hopf::{AlgebraElement, Coeff, Monomial, Tensor2};
use crate::hyperfield::{Hyperfield, HyperfieldTable, TableRows};
use crate::iso::IsoClassKey;
use crate::matroid::{GPFunction, GroundSet, UnderlyingMatroid};
use crate::report::Report;
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::str::FromStr;
use std::sync::Arc;

pub const TABLE_SCHEMA: &str = "hyperfield-table/1";
pub const MATROID_SCHEMA: &str = "matroid/1";
pub const ALGEBRA_SCHEMA: &str = "algebra/1";
pub const REPORT_SCHEMA: &str = "report/1";

fn bad(msg: impl Into<String>) -> Error {
    Error::BadDocument(msg.into())
}

fn expect_schema(found: &str, want: &str) -> Result<()> {
    if found != want {
        return Err(bad(format!("schema `{found}` where `{want}` was expected")));
    }
    Ok(())
}

/// A finite hyperfield table. Binary operation maps are keyed by the two
/// operands joined with a comma, smaller symbol first; the symmetric entry
/// is implied.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TableDoc {
    pub schema: String,
    pub symbols: Vec<String>,
    pub zero: String,
    pub one: String,
    pub neg: BTreeMap<String, String>,
    pub mul: BTreeMap<String, String>,
    pub add: BTreeMap<String, Vec<String>>,
}

fn pair_key(a: &str, b: &str) -> String {
    if a <= b {
        format!("{a},{b}")
    } else {
        format!("{b},{a}")
    }
}

pub fn table_to_doc(table: &HyperfieldTable) -> TableDoc {
    let rows = table.to_rows();
    let n = rows.symbols.len();
    let mut neg = BTreeMap::new();
    let mut mul = BTreeMap::new();
    let mut add = BTreeMap::new();
    for i in 0..n {
        neg.insert(rows.symbols[i].clone(), rows.neg[i].clone());
        for j in i..n {
            let key = pair_key(&rows.symbols[i], &rows.symbols[j]);
            mul.insert(key.clone(), rows.mul[i][j].clone());
            let mut sum = rows.add[i][j].clone();
            sum.sort();
            add.insert(key, sum);
        }
    }
    TableDoc {
        schema: TABLE_SCHEMA.to_string(),
        symbols: rows.symbols,
        zero: rows.zero,
        one: rows.one,
        neg,
        mul,
        add,
    }
}

/// Builds the hyperfield from a table document. Structure is validated
/// here; axioms are a separate, reported check.
pub fn table_from_doc(doc: &TableDoc) -> Result<Hyperfield> {
    expect_schema(&doc.schema, TABLE_SCHEMA)?;
    let symbols = doc.symbols.clone();
    let index: BTreeMap<&str, usize> = symbols
        .iter()
        .enumerate()
        .map(|(i, s)| (s.as_str(), i))
        .collect();
    if index.len() != symbols.len() {
        return Err(bad("table symbols repeat"));
    }
    let mut neg = vec![String::new(); symbols.len()];
    for (a, b) in &doc.neg {
        let i = *index
            .get(a.as_str())
            .ok_or_else(|| bad(format!("negation row for unknown symbol `{a}`")))?;
        neg[i] = b.clone();
    }
    if neg.iter().any(|s| s.is_empty()) {
        return Err(bad("negation table is missing a symbol"));
    }
    let n = symbols.len();
    let mut mul = vec![vec![String::new(); n]; n];
    let mut add = vec![vec![Vec::new(); n]; n];
    let mut seen_add = vec![vec![false; n]; n];
    let lookup_pair = |key: &str| -> Result<(usize, usize)> {
        let (a, b) = key
            .split_once(',')
            .ok_or_else(|| bad(format!("operation key `{key}` is not a pair")))?;
        let i = *index
            .get(a)
            .ok_or_else(|| bad(format!("operation key names unknown symbol `{a}`")))?;
        let j = *index
            .get(b)
            .ok_or_else(|| bad(format!("operation key names unknown symbol `{b}`")))?;
        if a > b {
            return Err(bad(format!(
                "operation key `{key}` is not in canonical order"
            )));
        }
        Ok((i, j))
    };
    for (key, value) in &doc.mul {
        let (i, j) = lookup_pair(key)?;
        mul[i][j] = value.clone();
        mul[j][i] = value.clone();
    }
    for (key, value) in &doc.add {
        let (i, j) = lookup_pair(key)?;
        add[i][j] = value.clone();
        add[j][i] = value.clone();
        seen_add[i][j] = true;
        seen_add[j][i] = true;
    }
    for i in 0..n {
        for j in 0..n {
            if mul[i][j].is_empty() {
                return Err(bad(format!(
                    "multiplication table is missing `{}`",
                    pair_key(&symbols[i], &symbols[j])
                )));
            }
            if !seen_add[i][j] {
                return Err(bad(format!(
                    "addition table is missing `{}`",
                    pair_key(&symbols[i], &symbols[j])
                )));
            }
        }
    }
    let table = TableRows {
        symbols,
        zero: doc.zero.clone(),
        one: doc.one.clone(),
        neg,
        mul,
        add,
    }
    .build()?;
    Ok(Hyperfield::Table(Arc::new(table)))
}

/// Either a built-in hyperfield by name or an inline table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum HyperfieldRef {
    Name(String),
    Table(TableDoc),
}

/// A function on sorted subsets over a named or inline hyperfield. Keys are
/// the subset's labels in ground order, joined with commas; the empty
/// subset is the empty string. Zero values are omitted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatroidDoc {
    pub schema: String,
    pub hyperfield: HyperfieldRef,
    pub ground: Vec<String>,
    pub rank: usize,
    pub values: BTreeMap<String, String>,
}

pub fn matroid_to_doc(phi: &GPFunction) -> MatroidDoc {
    let h = phi.hyperfield();
    let hyperfield = match h {
        Hyperfield::Table(t) => HyperfieldRef::Table(table_to_doc(t)),
        _ => HyperfieldRef::Name(h.name()),
    };
    let mut values = BTreeMap::new();
    for (subset, v) in phi.entries() {
        let key = phi.ground().labels_of(subset).join(",");
        values.insert(key, h.format_element(v));
    }
    MatroidDoc {
        schema: MATROID_SCHEMA.to_string(),
        hyperfield,
        ground: phi.ground().labels().to_vec(),
        rank: phi.rank(),
        values,
    }
}

/// Parses a matroid document. An inline table has its hyperfield axioms
/// checked here, so every in-memory matroid lives over an actual
/// hyperfield.
pub fn matroid_from_doc(doc: &MatroidDoc) -> Result<GPFunction> {
    expect_schema(&doc.schema, MATROID_SCHEMA)?;
    let h = match &doc.hyperfield {
        HyperfieldRef::Name(name) => Hyperfield::from_name(name)?,
        HyperfieldRef::Table(t) => {
            let h = table_from_doc(t)?;
            let axioms = crate::hyperfield::verify_hyperfield_axioms(&h)?;
            if !axioms.pass {
                return Err(Error::TableAxiomsFailed(format!(
                    "{} violations, first: {}",
                    axioms.total_violations,
                    axioms
                        .violations
                        .first()
                        .map(|v| format!("{} ({})", v.witness, v.detail))
                        .unwrap_or_default()
                )));
            }
            h
        }
    };
    let ground = GroundSet::new(doc.ground.clone())?;
    let mut values = BTreeMap::new();
    for (key, text) in &doc.values {
        let subset = if key.is_empty() {
            Vec::new()
        } else {
            let labels: Vec<String> = key.split(',').map(|s| s.to_string()).collect();
            let positions = ground.positions(&labels)?;
            if ground.labels_of(&positions).join(",") != *key {
                return Err(bad(format!(
                    "subset key `{key}` is not in ground order"
                )));
            }
            positions
        };
        let value = h.parse_element(text)?;
        if values.insert(subset, value).is_some() {
            return Err(bad(format!("subset key `{key}` repeats")));
        }
    }
    GPFunction::new(h, ground, doc.rank, values)
}

/// An underlying matroid rendered as an indicator function document.
pub fn underlying_to_doc(m: &UnderlyingMatroid, ground: &GroundSet) -> MatroidDoc {
    let phi = GPFunction::indicator(
        Hyperfield::Krasner,
        ground.clone(),
        m.rank(),
        &m.bases().cloned().collect::<Vec<_>>(),
    )
    .expect("bases are valid subsets");
    matroid_to_doc(&phi)
}

/// One term of an algebra or tensor element: a rational coefficient with
/// one monomial per tensor slot.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermDoc {
    pub coefficient: String,
    pub left: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub right: Option<Vec<String>>,
}

/// An element of the algebra (`kind: "element"`) or of its two-fold tensor
/// square (`kind: "tensor"`). Monomials are lists of class-key strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraDoc {
    pub schema: String,
    pub kind: String,
    pub terms: Vec<TermDoc>,
}

fn monomial_texts(m: &Monomial) -> Vec<String> {
    m.keys().iter().map(|k| k.text.clone()).collect()
}

fn monomial_from_texts(texts: &[String]) -> Result<Monomial> {
    let keys = texts
        .iter()
        .map(|t| IsoClassKey::parse(t))
        .collect::<Result<Vec<_>>>()?;
    Ok(Monomial::from_keys(keys))
}

fn coeff_from_str(s: &str) -> Result<Coeff> {
    let c = Coeff::from_str(s).map_err(|_| bad(format!("bad rational `{s}`")))?;
    if c.is_zero() {
        return Err(bad("zero coefficient stored in a document"));
    }
    Ok(c)
}

pub fn element_to_doc(e: &AlgebraElement) -> AlgebraDoc {
    AlgebraDoc {
        schema: ALGEBRA_SCHEMA.to_string(),
        kind: "element".to_string(),
        terms: e
            .terms()
            .map(|(m, c)| TermDoc {
                coefficient: c.to_string(),
                left: monomial_texts(m),
                right: None,
            })
            .collect(),
    }
}

pub fn element_from_doc(doc: &AlgebraDoc) -> Result<AlgebraElement> {
    expect_schema(&doc.schema, ALGEBRA_SCHEMA)?;
    if doc.kind != "element" {
        return Err(bad(format!("kind `{}` where `element` was expected", doc.kind)));
    }
    let mut out = AlgebraElement::zero();
    for term in &doc.terms {
        if term.right.is_some() {
            return Err(bad("element term carries a tensor slot"));
        }
        out.add_term(monomial_from_texts(&term.left)?, coeff_from_str(&term.coefficient)?);
    }
    Ok(out)
}

pub fn tensor_to_doc(t: &Tensor2) -> AlgebraDoc {
    AlgebraDoc {
        schema: ALGEBRA_SCHEMA.to_string(),
        kind: "tensor".to_string(),
        terms: t
            .terms()
            .map(|((a, b), c)| TermDoc {
                coefficient: c.to_string(),
                left: monomial_texts(a),
                right: Some(monomial_texts(b)),
            })
            .collect(),
    }
}

pub fn tensor_from_doc(doc: &AlgebraDoc) -> Result<Tensor2> {
    expect_schema(&doc.schema, ALGEBRA_SCHEMA)?;
    if doc.kind != "tensor" {
        return Err(bad(format!("kind `{}` where `tensor` was expected", doc.kind)));
    }
    let mut out = Tensor2::zero();
    for term in &doc.terms {
        let right = term
            .right
            .as_ref()
            .ok_or_else(|| bad("tensor term is missing its right slot"))?;
        out.add_term(
            monomial_from_texts(&term.left)?,
            monomial_from_texts(right)?,
            coeff_from_str(&term.coefficient)?,
        );
    }
    Ok(out)
}

/// A checker report with its schema tag.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReportDoc {
    pub schema: String,
    pub check: String,
    pub pass: bool,
    pub violations: Vec<crate::report::Violation>,
    pub truncated: bool,
    pub total_violations: usize,
}

pub fn report_to_doc(report: &Report) -> ReportDoc {
    ReportDoc {
        schema: REPORT_SCHEMA.to_string(),
        check: report.check.clone(),
        pass: report.pass,
        violations: report.violations.clone(),
        truncated: report.truncated,
        total_violations: report.total_violations,
    }
}

pub fn report_from_doc(doc: &ReportDoc) -> Result<Report> {
    expect_schema(&doc.schema, REPORT_SCHEMA)?;
    Ok(Report {
        check: doc.check.clone(),
        pass: doc.pass,
        violations: doc.violations.clone(),
        truncated: doc.truncated,
        total_violations: doc.total_violations,
    })
}

/// Serializes any document type with a trailing newline, pretty-printed
/// with sorted keys, so equal documents give equal bytes.
pub fn to_canonical_json<T: Serialize>(doc: &T) -> Result<String> {
    let mut text = serde_json::to_string_pretty(doc)?;
    text.push('\n');
    Ok(text)
}

pub fn parse_matroid(text: &str) -> Result<GPFunction> {
    let doc: MatroidDoc = serde_json::from_str(text)?;
    matroid_from_doc(&doc)
}

pub fn parse_table(text: &str) -> Result<Hyperfield> {
    let doc: TableDoc = serde_json::from_str(text)?;
    table_from_doc(&doc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hyperfield::Element;
    use crate::matroid::sorted_subsets;

    fn u24_signs() -> GPFunction {
        GPFunction::indicator(
            Hyperfield::Signs,
            GroundSet::from_size(4),
            2,
            &sorted_subsets(4, 2),
        )
        .unwrap()
    }

    #[test]
    fn matroid_documents_round_trip() {
        let phi = u24_signs();
        let doc = matroid_to_doc(&phi);
        let text = to_canonical_json(&doc).unwrap();
        let back = parse_matroid(&text).unwrap();
        assert_eq!(phi, back);
        assert_eq!(to_canonical_json(&matroid_to_doc(&back)).unwrap(), text);
    }

    #[test]
    fn table_documents_round_trip_and_verify_on_parse() {
        let table = Hyperfield::Signs.to_table().unwrap();
        let doc = table_to_doc(&table);
        let h = table_from_doc(&doc).unwrap();
        match &h {
            Hyperfield::Table(t) => assert_eq!(t.fingerprint(), table.fingerprint()),
            _ => unreachable!(),
        }
        // A matroid over a broken inline table is refused at parse time.
        let mut broken = doc.clone();
        broken.add.insert("0,1".into(), vec!["-1".into()]);
        let matroid = MatroidDoc {
            schema: MATROID_SCHEMA.to_string(),
            hyperfield: HyperfieldRef::Table(broken),
            ground: vec!["a".into()],
            rank: 1,
            values: BTreeMap::from([("a".to_string(), "1".to_string())]),
        };
        assert!(matches!(
            matroid_from_doc(&matroid),
            Err(Error::TableAxiomsFailed(_))
        ));
    }

    #[test]
    fn non_canonical_keys_are_rejected()  {
        let phi = u24_signs();
        let mut doc = matroid_to_doc(&phi);
        let moved = doc.values.remove("1,2").unwrap();
        doc.values.insert("2,1".to_string(), moved);
        assert!(matches!(matroid_from_doc(&doc), Err(Error::BadDocument(_))));
    }

    #[test]
    fn unknown_fields_are_rejected() {
        let phi = u24_signs();
        let text = to_canonical_json(&matroid_to_doc(&phi)).unwrap();
        let with_extra = text.replacen(
            "\"schema\"",
            "\"surprise\": 1,\n  \"schema\"",
            1,
        );
        assert!(parse_matroid(&with_extra).is_err());
    }

    #[test]
    fn algebra_documents_round_trip() {
        use crate::hopf::ClassRegistry;
        let reg = ClassRegistry::new();
        let m = reg.register(&u24_signs()).unwrap();
        let delta = reg.coproduct_monomial(&m).unwrap();
        let doc = tensor_to_doc(&delta);
        let text = to_canonical_json(&doc).unwrap();
        let parsed: AlgebraDoc = serde_json::from_str(&text).unwrap();
        assert_eq!(tensor_from_doc(&parsed).unwrap(), delta);

        let s = crate::hopf::antipode::takeuchi_antipode(
            &reg,
            &AlgebraElement::from_monomial(m),
        )
        .unwrap();
        let doc = element_to_doc(&s);
        let text = to_canonical_json(&doc).unwrap();
        let parsed: AlgebraDoc = serde_json::from_str(&text).unwrap();
        assert_eq!(element_from_doc(&parsed).unwrap(), s);
    }

    #[test]
    fn report_documents_round_trip() {
        let phi = u24_signs();
        let report = crate::matroid::axioms::verify_strong_gpf(&phi).unwrap();
        let doc = report_to_doc(&report);
        let text = to_canonical_json(&doc).unwrap();
        let parsed: ReportDoc = serde_json::from_str(&text).unwrap();
        assert_eq!(report_from_doc(&parsed).unwrap(), report);
    }

    #[test]
    fn tropical_and_phase_values_round_trip() {
        let h = Hyperfield::Tropical;
        let ground = GroundSet::from_size(3);
        let mut values = BTreeMap::new();
        values.insert(vec![0], Element::tropical(0, 1));
        values.insert(vec![1], Element::tropical(3, 2));
        values.insert(vec![2], Element::tropical(-1, 1));
        let phi = GPFunction::new(h, ground, 1, values).unwrap();
        let text = to_canonical_json(&matroid_to_doc(&phi)).unwrap();
        assert_eq!(parse_matroid(&text).unwrap(), phi);
        assert!(text.contains("3/2"));
    }
}
