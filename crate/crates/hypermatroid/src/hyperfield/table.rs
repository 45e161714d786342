//! Finite hyperfields given by explicit operation tables.
//!
//! A table lists the carrier symbols together with full negation,
//! multiplication, and hyperaddition tables. Construction validates shape and
//! membership only; [`verify_hyperfield_axioms`] checks the actual axioms and
//! reports every violated instance.

use crate::error::{Error, Result};
use crate::hyperfield::Hyperfield;
use crate::report::{Report, ReportBuilder};
use sha2::{Digest, Sha256};
use std::collections::{BTreeMap, BTreeSet};

/// Characters that would collide with document key or fingerprint separators.
const FORBIDDEN: [char; 4] = [',', ';', '=', '|'];

/// Raw rows of a table, in symbol order. The exchange format for building,
/// perturbing, and serializing tables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableRows {
    pub symbols: Vec<String>,
    pub zero: String,
    pub one: String,
    pub neg: Vec<String>,
    pub mul: Vec<Vec<String>>,
    pub add: Vec<Vec<Vec<String>>>,
}

impl TableRows {
    pub fn build(self) -> Result<HyperfieldTable> {
        HyperfieldTable::from_rows(
            self.symbols,
            self.zero,
            self.one,
            self.neg,
            self.mul,
            self.add,
        )
    }
}

/// A finite hyperfield table with canonically sorted carrier.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HyperfieldTable {
    symbols: Vec<String>,
    index: BTreeMap<String, usize>,
    zero: usize,
    one: usize,
    neg: Vec<usize>,
    mul: Vec<Vec<usize>>,
    add: Vec<Vec<BTreeSet<usize>>>,
    fingerprint: String,
}

impl HyperfieldTable {
    /// Build from rows given in `symbols` order. The carrier is re-sorted
    /// internally, so two presentations of the same table compare equal.
    pub fn from_rows(
        symbols: Vec<String>,
        zero: String,
        one: String,
        neg: Vec<String>,
        mul: Vec<Vec<String>>,
        add: Vec<Vec<Vec<String>>>,
    ) -> Result<HyperfieldTable> {
        let n = symbols.len();
        if n < 2 {
            return Err(Error::BadTable("carrier needs at least two elements".into()));
        }
        for s in &symbols {
            if s.is_empty() || s.len() > 32 {
                return Err(Error::BadTable(format!(
                    "symbol `{s}` must be 1 to 32 characters"
                )));
            }
            if s.chars()
                .any(|c| FORBIDDEN.contains(&c) || c.is_whitespace() || c.is_control())
            {
                return Err(Error::BadTable(format!(
                    "symbol `{s}` contains a separator or whitespace character"
                )));
            }
        }
        let given: BTreeMap<String, usize> = symbols
            .iter()
            .enumerate()
            .map(|(i, s)| (s.clone(), i))
            .collect();
        if given.len() != n {
            return Err(Error::BadTable("duplicate symbol in carrier".into()));
        }
        let look = |s: &str| -> Result<usize> {
            given
                .get(s)
                .copied()
                .ok_or_else(|| Error::BadTable(format!("symbol `{s}` is not in the carrier")))
        };
        let zero_ix = look(&zero)?;
        let one_ix = look(&one)?;
        if zero_ix == one_ix {
            return Err(Error::BadTable("zero and one must be distinct".into()));
        }
        if neg.len() != n || mul.len() != n || add.len() != n {
            return Err(Error::BadTable("table rows do not match carrier size".into()));
        }
        let mut neg_ix = Vec::with_capacity(n);
        for s in &neg {
            neg_ix.push(look(s)?);
        }
        let mut mul_ix = Vec::with_capacity(n);
        for row in &mul {
            if row.len() != n {
                return Err(Error::BadTable("multiplication row has wrong length".into()));
            }
            let mut r = Vec::with_capacity(n);
            for s in row {
                r.push(look(s)?);
            }
            mul_ix.push(r);
        }
        let mut add_ix: Vec<Vec<BTreeSet<usize>>> = Vec::with_capacity(n);
        for row in &add {
            if row.len() != n {
                return Err(Error::BadTable("hyperaddition row has wrong length".into()));
            }
            let mut r = Vec::with_capacity(n);
            for cell in row {
                if cell.is_empty() {
                    return Err(Error::BadTable("hyperaddition output is empty".into()));
                }
                let mut set = BTreeSet::new();
                for s in cell {
                    set.insert(look(s)?);
                }
                r.push(set);
            }
            add_ix.push(r);
        }

        // Canonical order: sort symbols, remap every index through it.
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| symbols[a].cmp(&symbols[b]));
        let mut rank = vec![0usize; n];
        for (new, &old) in order.iter().enumerate() {
            rank[old] = new;
        }
        let sorted_symbols: Vec<String> = order.iter().map(|&i| symbols[i].clone()).collect();
        let index: BTreeMap<String, usize> = sorted_symbols
            .iter()
            .enumerate()
            .map(|(i, s)| (s.clone(), i))
            .collect();
        let neg: Vec<usize> = order.iter().map(|&i| rank[neg_ix[i]]).collect();
        let mul: Vec<Vec<usize>> = order
            .iter()
            .map(|&i| order.iter().map(|&j| rank[mul_ix[i][j]]).collect())
            .collect();
        let add: Vec<Vec<BTreeSet<usize>>> = order
            .iter()
            .map(|&i| {
                order
                    .iter()
                    .map(|&j| add_ix[i][j].iter().map(|&k| rank[k]).collect())
                    .collect()
            })
            .collect();

        let mut table = HyperfieldTable {
            symbols: sorted_symbols,
            index,
            zero: rank[zero_ix],
            one: rank[one_ix],
            neg,
            mul,
            add,
            fingerprint: String::new(),
        };
        table.fingerprint = table.compute_fingerprint();
        Ok(table)
    }

    fn compute_fingerprint(&self) -> String {
        let mut s = String::new();
        s.push_str(&self.symbols.join(","));
        s.push_str(&format!(
            ";z={};o={}",
            self.symbols[self.zero], self.symbols[self.one]
        ));
        for (i, &ni) in self.neg.iter().enumerate() {
            s.push_str(&format!(";n:{}={}", self.symbols[i], self.symbols[ni]));
        }
        for (i, row) in self.mul.iter().enumerate() {
            for (j, &k) in row.iter().enumerate() {
                s.push_str(&format!(
                    ";m:{},{}={}",
                    self.symbols[i], self.symbols[j], self.symbols[k]
                ));
            }
        }
        for (i, row) in self.add.iter().enumerate() {
            for (j, cell) in row.iter().enumerate() {
                let out: Vec<&str> = cell.iter().map(|&k| self.symbols[k].as_str()).collect();
                s.push_str(&format!(
                    ";a:{},{}={}",
                    self.symbols[i],
                    self.symbols[j],
                    out.join("|")
                ));
            }
        }
        let digest = Sha256::digest(s.as_bytes());
        format!("{digest:x}")[..16].to_string()
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn symbols(&self) -> &[String] {
        &self.symbols
    }

    pub fn index_of(&self, s: &str) -> Option<usize> {
        self.index.get(s).copied()
    }

    pub fn zero_symbol(&self) -> &str {
        &self.symbols[self.zero]
    }

    pub fn one_symbol(&self) -> &str {
        &self.symbols[self.one]
    }

    /// First 16 hex digits of the table's content hash. Stable under symbol
    /// reordering in the input, sensitive to any entry change.
    pub fn fingerprint(&self) -> &str {
        &self.fingerprint
    }

    fn ix(&self, s: &str) -> Result<usize> {
        self.index_of(s).ok_or_else(|| Error::NotInCarrier {
            element: s.to_string(),
            hyperfield: format!("table:{}", self.fingerprint),
        })
    }

    pub fn neg_symbol(&self, a: &str) -> Result<String> {
        Ok(self.symbols[self.neg[self.ix(a)?]].clone())
    }

    pub fn mul_symbol(&self, a: &str, b: &str) -> Result<String> {
        Ok(self.symbols[self.mul[self.ix(a)?][self.ix(b)?]].clone())
    }

    /// Multiplicative inverse by table search.
    pub fn inv_symbol(&self, a: &str) -> Result<String> {
        let i = self.ix(a)?;
        if i == self.zero {
            return Err(Error::ZeroInverse);
        }
        let row = &self.mul[i];
        let j = (0..self.symbols.len())
            .find(|&j| row[j] == self.one)
            .ok_or_else(|| {
                Error::TableAxiomsFailed(format!("`{a}` has no multiplicative inverse"))
            })?;
        Ok(self.symbols[j].clone())
    }

    pub fn add_symbols(&self, a: &str, b: &str) -> Result<Vec<String>> {
        Ok(self.add[self.ix(a)?][self.ix(b)?]
            .iter()
            .map(|&k| self.symbols[k].clone())
            .collect())
    }

    pub fn to_rows(&self) -> TableRows {
        TableRows {
            symbols: self.symbols.clone(),
            zero: self.zero_symbol().to_string(),
            one: self.one_symbol().to_string(),
            neg: self.neg.iter().map(|&i| self.symbols[i].clone()).collect(),
            mul: self
                .mul
                .iter()
                .map(|row| row.iter().map(|&k| self.symbols[k].clone()).collect())
                .collect(),
            add: self
                .add
                .iter()
                .map(|row| {
                    row.iter()
                        .map(|cell| cell.iter().map(|&k| self.symbols[k].clone()).collect())
                        .collect()
                })
                .collect(),
        }
    }
}

/// Check every hyperfield axiom on a finite hyperfield, reporting each
/// violated instance with its witnessing elements.
///
/// Checked: commutativity and associativity of hyperaddition (as sets),
/// additive identity, existence and uniqueness of additive inverses matching
/// the negation table, reversibility, the multiplicative monoid with inverses
/// on nonzero elements, absence of zero divisors, absorption by zero, and
/// distributivity as sets.
pub fn verify_hyperfield_axioms(h: &Hyperfield) -> Result<Report> {
    let table = match h {
        Hyperfield::Table(t) => (**t).clone(),
        other if other.is_finite() => other.to_table()?,
        other => {
            return Err(Error::InfiniteHyperfield {
                op: "verify_hyperfield_axioms",
                hyperfield: other.name(),
            })
        }
    };
    let n = table.len();
    let sym = |i: usize| table.symbols[i].as_str();
    let fmt_set = |s: &BTreeSet<usize>| {
        let v: Vec<&str> = s.iter().map(|&k| sym(k)).collect();
        format!("{{{}}}", v.join(","))
    };
    let mut b = ReportBuilder::new();

    for i in 0..n {
        for j in i..n {
            if table.add[i][j] != table.add[j][i] {
                b.violation(
                    format!("a={}, b={}", sym(i), sym(j)),
                    format!(
                        "hyperaddition must commute: a+b={} but b+a={}",
                        fmt_set(&table.add[i][j]),
                        fmt_set(&table.add[j][i])
                    ),
                );
            }
        }
    }

    let z = table.zero;
    for i in 0..n {
        let expected: BTreeSet<usize> = [i].into();
        if table.add[i][z] != expected {
            b.violation(
                format!("a={}", sym(i)),
                format!("a+0 must be {{a}}, got {}", fmt_set(&table.add[i][z])),
            );
        }
    }

    for i in 0..n {
        let inverses: Vec<usize> = (0..n).filter(|&j| table.add[i][j].contains(&z)).collect();
        if inverses.len() != 1 {
            let v: Vec<&str> = inverses.iter().map(|&k| sym(k)).collect();
            b.violation(
                format!("a={}", sym(i)),
                format!(
                    "a must have exactly one additive inverse, found {{{}}}",
                    v.join(",")
                ),
            );
        } else if inverses[0] != table.neg[i] {
            b.violation(
                format!("a={}", sym(i)),
                format!(
                    "negation table says -a={} but the inverse is {}",
                    sym(table.neg[i]),
                    sym(inverses[0])
                ),
            );
        }
    }

    // Reversibility: a in b+c implies c in a+(-b).
    for bb in 0..n {
        for c in 0..n {
            for &a in &table.add[bb][c] {
                if !table.add[a][table.neg[bb]].contains(&c) {
                    b.violation(
                        format!("a={}, b={}, c={}", sym(a), sym(bb), sym(c)),
                        "a in b+c but c not in a+(-b)".to_string(),
                    );
                }
            }
        }
    }

    // Associativity as sets: (a+b)+c = a+(b+c).
    for a in 0..n {
        for bb in 0..n {
            for c in 0..n {
                let lhs: BTreeSet<usize> = table.add[a][bb]
                    .iter()
                    .flat_map(|&x| table.add[x][c].iter().copied())
                    .collect();
                let rhs: BTreeSet<usize> = table.add[bb][c]
                    .iter()
                    .flat_map(|&y| table.add[a][y].iter().copied())
                    .collect();
                if lhs != rhs {
                    b.violation(
                        format!("a={}, b={}, c={}", sym(a), sym(bb), sym(c)),
                        format!(
                            "(a+b)+c={} but a+(b+c)={}",
                            fmt_set(&lhs),
                            fmt_set(&rhs)
                        ),
                    );
                }
            }
        }
    }

    for i in 0..n {
        for j in i..n {
            if table.mul[i][j] != table.mul[j][i] {
                b.violation(
                    format!("a={}, b={}", sym(i), sym(j)),
                    format!(
                        "multiplication must commute: ab={}, ba={}",
                        sym(table.mul[i][j]),
                        sym(table.mul[j][i])
                    ),
                );
            }
        }
    }
    for a in 0..n {
        for bb in 0..n {
            for c in 0..n {
                let lhs = table.mul[table.mul[a][bb]][c];
                let rhs = table.mul[a][table.mul[bb][c]];
                if lhs != rhs {
                    b.violation(
                        format!("a={}, b={}, c={}", sym(a), sym(bb), sym(c)),
                        format!("(ab)c={} but a(bc)={}", sym(lhs), sym(rhs)),
                    );
                }
            }
        }
    }
    for i in 0..n {
        if table.mul[i][table.one] != i {
            b.violation(
                format!("a={}", sym(i)),
                format!("a*1 must be a, got {}", sym(table.mul[i][table.one])),
            );
        }
        if table.mul[i][z] != z {
            b.violation(
                format!("a={}", sym(i)),
                format!("a*0 must be 0, got {}", sym(table.mul[i][z])),
            );
        }
    }
    for i in 0..n {
        if i == z {
            continue;
        }
        if !(0..n).any(|j| j != z && table.mul[i][j] == table.one) {
            b.violation(
                format!("a={}", sym(i)),
                "nonzero element has no multiplicative inverse".to_string(),
            );
        }
        for j in 0..n {
            if j != z && table.mul[i][j] == z {
                b.violation(
                    format!("a={}, b={}", sym(i), sym(j)),
                    "nonzero elements multiply to zero".to_string(),
                );
            }
        }
    }

    // Distributivity as sets: a(b+c) = ab + ac.
    for a in 0..n {
        for bb in 0..n {
            for c in 0..n {
                let lhs: BTreeSet<usize> =
                    table.add[bb][c].iter().map(|&x| table.mul[a][x]).collect();
                let rhs = &table.add[table.mul[a][bb]][table.mul[a][c]];
                if lhs != *rhs {
                    b.violation(
                        format!("a={}, b={}, c={}", sym(a), sym(bb), sym(c)),
                        format!("a(b+c)={} but ab+ac={}", fmt_set(&lhs), fmt_set(rhs)),
                    );
                }
            }
        }
    }

    Ok(b.finish("hyperfield-axioms"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_finite_hyperfields_pass() {
        for h in [Hyperfield::Krasner, Hyperfield::Signs] {
            let report = verify_hyperfield_axioms(&h).unwrap();
            assert!(report.pass, "{h}: {:?}", report.violations);
        }
    }

    #[test]
    fn table_roundtrip_keeps_fingerprint_and_passes() {
        let t = Hyperfield::Signs.to_table().unwrap();
        let fp = t.fingerprint().to_string();
        let rebuilt = t.to_rows().build().unwrap();
        assert_eq!(rebuilt.fingerprint(), fp);
        let h = Hyperfield::Table(std::sync::Arc::new(rebuilt));
        assert!(verify_hyperfield_axioms(&h).unwrap().pass);
    }

    #[test]
    fn fingerprint_ignores_symbol_order() {
        let mut rows = Hyperfield::Signs.to_table().unwrap().to_rows();
        let fp = rows.clone().build().unwrap().fingerprint().to_string();
        // Present the same table with the carrier listed in reverse.
        let perm = [2usize, 1, 0];
        rows.symbols = perm.iter().map(|&i| rows.symbols[i].clone()).collect();
        rows.neg = perm.iter().map(|&i| rows.neg[i].clone()).collect();
        rows.mul = perm
            .iter()
            .map(|&i| perm.iter().map(|&j| rows.mul[i][j].clone()).collect())
            .collect();
        rows.add = perm
            .iter()
            .map(|&i| perm.iter().map(|&j| rows.add[i][j].clone()).collect())
            .collect();
        assert_eq!(rows.build().unwrap().fingerprint(), fp);
    }

    #[test]
    fn broken_entry_is_reported() {
        let mut rows = Hyperfield::Krasner.to_table().unwrap().to_rows();
        // 1+1 must be {0,1}; claim it is {1}.
        let one = rows.symbols.iter().position(|s| s == "1").unwrap();
        rows.add[one][one] = vec!["1".into()];
        let h = Hyperfield::Table(std::sync::Arc::new(rows.build().unwrap()));
        let report = verify_hyperfield_axioms(&h).unwrap();
        assert!(!report.pass);
        assert!(report.violations.iter().any(|v| v.detail.contains("inverse")));
    }

    #[test]
    fn structural_validation_rejects_malformed_tables() {
        let rows = Hyperfield::Krasner.to_table().unwrap().to_rows();
        let mut bad = rows.clone();
        bad.symbols[1] = "a,b".into();
        assert!(bad.build().is_err());
        let mut bad = rows.clone();
        bad.add[0][0] = vec![];
        assert!(bad.build().is_err());
        let mut bad = rows.clone();
        bad.zero = "1".into();
        assert!(bad.build().is_err());
        let mut bad = rows;
        bad.neg[0] = "nope".into();
        assert!(bad.build().is_err());
    }
}
