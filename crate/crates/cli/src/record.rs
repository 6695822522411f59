//! The analysis record written by `analyze` and `search`.
//!
//! JSON keys appear in field order below; `schema` is bumped on any change
//! to the key set. CSV flattens the ledger into `ledger_*` columns and the
//! check lists into `name:status` strings joined by `;`.

use serde::{Deserialize, Serialize};

use quadbent_core::classify::{AnalysisReport, EquivalenceWitness};

use crate::format::{opt, Row};

pub const SCHEMA: u32 = 1;
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LedgerFields {
    pub j: u64,
    pub t: u64,
    pub k: Option<i64>,
    pub u: Option<u64>,
    pub r: Option<u64>,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundField {
    pub name: String,
    pub relation: String,
    pub lhs: i128,
    pub rhs: i128,
    pub status: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureField {
    pub name: String,
    pub status: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisRecord {
    pub schema: u32,
    pub tool_version: String,
    pub n: u32,
    pub modulus: String,
    pub d1: u64,
    /// Absent for monomials.
    pub d2: Option<u64>,
    pub sf_size: usize,
    pub maximal: bool,
    pub sf_is_subspace: bool,
    pub sf_is_subfield: bool,
    pub sf_equals_subfield: bool,
    pub nonlinearity: u64,
    pub delta: u32,
    pub image_size: u64,
    pub c: Option<u64>,
    pub s: Option<u64>,
    pub t: Option<u32>,
    pub nu: Option<u32>,
    pub ledger: Option<LedgerFields>,
    pub bound_checks: Vec<BoundField>,
    pub structure_checks: Vec<StructureField>,
    pub class_label: String,
    pub class_member: Option<u32>,
    pub image_matches: Option<bool>,
    pub witness: Option<String>,
    pub checks_hold: bool,
}

impl AnalysisRecord {
    pub fn from_report(r: &AnalysisReport, d1: u64, d2: Option<u64>, witness: Option<&EquivalenceWitness>) -> Self {
        AnalysisRecord {
            schema: SCHEMA,
            tool_version: TOOL_VERSION.to_string(),
            n: r.n,
            modulus: format!("{:#x}", r.modulus),
            d1,
            d2,
            sf_size: r.maximality.sf_size,
            maximal: r.maximality.maximal,
            sf_is_subspace: r.maximality.sf_is_subspace,
            sf_is_subfield: r.maximality.sf_is_subfield,
            sf_equals_subfield: r.maximality.sf_equals_subfield,
            nonlinearity: r.nonlinearity,
            delta: r.delta,
            image_size: r.image.image_size,
            c: r.image.c,
            s: r.image.s,
            t: r.t,
            nu: r.nu,
            ledger: r.ledger.as_ref().map(|l| LedgerFields {
                j: l.j_witness,
                t: l.t,
                k: l.k,
                u: l.u,
                r: l.r,
                holds: l.holds(),
            }),
            bound_checks: r
                .bounds
                .iter()
                .map(|b| BoundField {
                    name: b.name.to_string(),
                    relation: b.relation.symbol().to_string(),
                    lhs: b.lhs,
                    rhs: b.rhs,
                    status: b.status.as_str().to_string(),
                })
                .collect(),
            structure_checks: r
                .structure
                .iter()
                .map(|c| StructureField { name: c.name.to_string(), status: c.status.as_str().to_string() })
                .collect(),
            class_label: r.classification.label.as_str().to_string(),
            class_member: r.classification.member,
            image_matches: r.classification.image_matches,
            witness: witness.map(|w| w.to_string()),
            checks_hold: r.all_checks_hold(),
        }
    }

    pub fn violations(&self) -> Vec<&str> {
        self.bound_checks
            .iter()
            .map(|b| (b.name.as_str(), b.status.as_str()))
            .chain(self.structure_checks.iter().map(|c| (c.name.as_str(), c.status.as_str())))
            .filter(|(_, s)| *s == "violated")
            .map(|(n, _)| n)
            .collect()
    }

    fn exponents(&self) -> String {
        match self.d2 {
            Some(d2) => format!("x^{} + x^{}", self.d1, d2),
            None => format!("x^{}", self.d1),
        }
    }
}

fn joined<'a>(items: impl Iterator<Item = (&'a str, &'a str)>) -> String {
    items.map(|(n, s)| format!("{n}:{s}")).collect::<Vec<_>>().join(";")
}

impl Row for AnalysisRecord {
    fn columns(&self) -> Vec<(&'static str, String)> {
        let l = self.ledger.as_ref();
        vec![
            ("schema", self.schema.to_string()),
            ("tool_version", self.tool_version.clone()),
            ("n", self.n.to_string()),
            ("modulus", self.modulus.clone()),
            ("d1", self.d1.to_string()),
            ("d2", opt(&self.d2)),
            ("sf_size", self.sf_size.to_string()),
            ("maximal", self.maximal.to_string()),
            ("sf_is_subspace", self.sf_is_subspace.to_string()),
            ("sf_is_subfield", self.sf_is_subfield.to_string()),
            ("sf_equals_subfield", self.sf_equals_subfield.to_string()),
            ("nonlinearity", self.nonlinearity.to_string()),
            ("delta", self.delta.to_string()),
            ("image_size", self.image_size.to_string()),
            ("c", opt(&self.c)),
            ("s", opt(&self.s)),
            ("t", opt(&self.t)),
            ("nu", opt(&self.nu)),
            ("ledger_j", opt(&l.map(|l| l.j))),
            ("ledger_t", opt(&l.map(|l| l.t))),
            ("ledger_k", opt(&l.and_then(|l| l.k))),
            ("ledger_u", opt(&l.and_then(|l| l.u))),
            ("ledger_r", opt(&l.and_then(|l| l.r))),
            ("ledger_holds", opt(&l.map(|l| l.holds))),
            ("bound_checks", joined(self.bound_checks.iter().map(|b| (b.name.as_str(), b.status.as_str())))),
            (
                "structure_checks",
                joined(self.structure_checks.iter().map(|c| (c.name.as_str(), c.status.as_str()))),
            ),
            ("class_label", self.class_label.clone()),
            ("class_member", opt(&self.class_member)),
            ("image_matches", opt(&self.image_matches)),
            ("witness", self.witness.clone().unwrap_or_default()),
            ("checks_hold", self.checks_hold.to_string()),
        ]
    }

    fn text(&self) -> String {
        let mut s = format!(
            "n={} modulus={} F={}\n  #S_F={} maximal={} subspace={} subfield={} S_F=GF(2^m):{}\n  \
             N_F={} delta={} #Im={} c={} s={} T={} nu={}\n",
            self.n,
            self.modulus,
            self.exponents(),
            self.sf_size,
            self.maximal,
            self.sf_is_subspace,
            self.sf_is_subfield,
            self.sf_equals_subfield,
            self.nonlinearity,
            self.delta,
            self.image_size,
            opt(&self.c),
            opt(&self.s),
            opt(&self.t),
            opt(&self.nu),
        );
        if let Some(l) = &self.ledger {
            s += &format!(
                "  ledger: j={} t={} k={} u={} r={} holds={}\n",
                l.j,
                l.t,
                opt(&l.k),
                opt(&l.u),
                opt(&l.r),
                l.holds
            );
        }
        for b in &self.bound_checks {
            s += &format!("  bound {}: {} {} {} [{}]\n", b.name, b.lhs, b.relation, b.rhs, b.status);
        }
        for c in &self.structure_checks {
            s += &format!("  structure {}: {}\n", c.name, c.status);
        }
        s += &format!("  class={}", self.class_label);
        if let Some(i) = self.class_member {
            s += &format!(" (i={i})");
        }
        if let Some(w) = &self.witness {
            s += &format!("\n  witness: {w}");
        }
        s
    }
}
