//! `field`, `ell`, `table1`, `stick` and `gauss`.

use std::io::Write;
use std::time::Instant;

use anyhow::{bail, Result};
use serde::Serialize;

use quadbent_core::ellmap::{
    ell_n_brute, ell_n_lattice, sufficient_condition, table1_expected, EllMethod, EllRecord, BRUTE_DEFAULT_MAX,
    BRUTE_LONG_RUN_MAX,
};
use quadbent_core::boolfun::VectorialFn;
use quadbent_core::padic::{verify_stickelberger_and_fourier, PadicContext};
use quadbent_core::quadratic::nonbent_set_from_exponents;
use quadbent_core::stickelberger::{
    gcd_ledger, h_polynomial, nu_and_minimizers, nu_monomial, verify_valuation_law, wt2,
};
use quadbent_core::{Error, FieldContext};

use crate::format::{emit, opt, Row};
use crate::record::LedgerFields;
use crate::{EllChoice, Env, Outcome};

/// Largest n for the full valuation-law check in `stick` without `--long-run`.
const STICK_VALUATION_MAX_DEGREE: u32 = 12;
/// Largest n `table1` runs without `--long-run`.
const TABLE1_MAX_DEGREE: u32 = 20;

#[derive(Serialize)]
struct FieldRow {
    n: u32,
    m: Option<u32>,
    modulus: String,
    modulus_poly: String,
    primitive: String,
    trace_mask: String,
    tables: bool,
    tables_consistent: bool,
    subfields: Vec<u32>,
}

impl Row for FieldRow {
    fn columns(&self) -> Vec<(&'static str, String)> {
        let subs: Vec<String> = self.subfields.iter().map(u32::to_string).collect();
        vec![
            ("n", self.n.to_string()),
            ("m", opt(&self.m)),
            ("modulus", self.modulus.clone()),
            ("modulus_poly", self.modulus_poly.clone()),
            ("primitive", self.primitive.clone()),
            ("trace_mask", self.trace_mask.clone()),
            ("tables", self.tables.to_string()),
            ("tables_consistent", self.tables_consistent.to_string()),
            ("subfields", subs.join(";")),
        ]
    }

    fn text(&self) -> String {
        let subs: Vec<String> = self.subfields.iter().map(u32::to_string).collect();
        format!(
            "GF(2^{}) modulus={} ({}) primitive={} trace_mask={} tables={} consistent={} subfields={}",
            self.n,
            self.modulus,
            self.modulus_poly,
            self.primitive,
            self.trace_mask,
            self.tables,
            self.tables_consistent,
            subs.join(",")
        )
    }
}

pub fn field(env: &Env, o: &mut Outcome) -> Result<bool> {
    let ctx = env.ctx()?;
    let n = ctx.n();
    let row = FieldRow {
        n,
        m: ctx.m(),
        modulus: format!("{:#x}", ctx.modulus().0),
        modulus_poly: ctx.modulus().to_string(),
        primitive: format!("{:#x}", ctx.primitive().0),
        trace_mask: format!("{:#x}", ctx.trace_mask()),
        tables: ctx.has_tables(),
        tables_consistent: ctx.tables_consistent(),
        subfields: (1..=n).filter(|k| n % k == 0).collect(),
    };
    let ok = row.tables_consistent;
    emit(&mut o.out, env.format, &[row])?;
    if !ok {
        writeln!(o.err, "field tables are inconsistent")?;
    }
    Ok(ok)
}

#[derive(Serialize)]
struct EllRow {
    n: u32,
    ell: u32,
    method: &'static str,
    witness: String,
    annihilator: String,
    exceeds_half: bool,
    guaranteed: bool,
    expected: Option<u32>,
}

impl EllRow {
    fn new(rec: &EllRecord) -> Self {
        EllRow {
            n: rec.n,
            ell: rec.ell_n,
            method: method_name(rec.method),
            witness: format!("{:#x}", rec.witness.0),
            annihilator: rec.f_gamma.to_string(),
            exceeds_half: 2 * rec.ell_n > rec.n,
            guaranteed: sufficient_condition(rec.n).guaranteed,
            expected: table1_expected(rec.n),
        }
    }
}

fn method_name(m: EllMethod) -> &'static str {
    match m {
        EllMethod::Brute => "brute",
        EllMethod::Lattice => "lattice",
    }
}

impl Row for EllRow {
    fn columns(&self) -> Vec<(&'static str, String)> {
        vec![
            ("n", self.n.to_string()),
            ("ell", self.ell.to_string()),
            ("method", self.method.to_string()),
            ("witness", self.witness.clone()),
            ("annihilator", self.annihilator.clone()),
            ("exceeds_half", self.exceeds_half.to_string()),
            ("guaranteed", self.guaranteed.to_string()),
            ("expected", opt(&self.expected)),
        ]
    }

    fn text(&self) -> String {
        format!("ell={} method={} witness={} annihilator={}", self.ell, self.method, self.witness, self.annihilator)
    }
}

fn brute_cap(long_run: bool) -> u32 {
    if long_run {
        BRUTE_LONG_RUN_MAX
    } else {
        BRUTE_DEFAULT_MAX
    }
}

pub fn ell(env: &Env, o: &mut Outcome, choice: EllChoice) -> Result<bool> {
    let ctx = env.ctx()?;
    let n = ctx.n();
    let (brute, lattice) = match choice {
        EllChoice::Brute => (true, false),
        EllChoice::Lattice => (false, true),
        EllChoice::Both => (true, true),
        EllChoice::Auto => (n <= brute_cap(env.long_run), true),
    };
    let mut records = Vec::new();
    if lattice {
        records.push(ell_n_lattice(&ctx)?);
    }
    if brute {
        records.push(ell_n_brute(&ctx, env.long_run)?);
    }
    let rows: Vec<EllRow> = records.iter().map(EllRow::new).collect();
    emit(&mut o.out, env.format, &rows)?;
    let ell = records[0].ell_n;
    let mut ok = true;
    if records.iter().any(|r| r.ell_n != ell) {
        ok = false;
        writeln!(o.err, "methods disagree: {}", rows.iter().map(|r| format!("{}={}", r.method, r.ell)).collect::<Vec<_>>().join(" "))?;
    }
    if let Some(e) = table1_expected(n).filter(|&e| e != ell) {
        ok = false;
        writeln!(o.err, "computed l({n})={ell} differs from the published {e}")?;
    }
    if !sufficient_condition(n).consistent_with(ell) {
        ok = false;
        writeln!(o.err, "l({n})={ell} contradicts the sufficient condition l(n) > n/2")?;
    }
    if let Some(m) = ctx.m().filter(|&m| ell <= m) {
        writeln!(o.err, "warning: l({n})={ell} <= m={m}; results that assume l(n) > m do not apply at this n")?;
    }
    Ok(ok)
}

#[derive(Serialize)]
struct Table1Row {
    n: u32,
    ell: u32,
    brute: Option<u32>,
    lattice: u32,
    expected: Option<u32>,
    matches: bool,
    method: &'static str,
    elapsed_ms: u128,
}

impl Row for Table1Row {
    fn columns(&self) -> Vec<(&'static str, String)> {
        vec![
            ("n", self.n.to_string()),
            ("ell", self.ell.to_string()),
            ("brute", opt(&self.brute)),
            ("lattice", self.lattice.to_string()),
            ("expected", opt(&self.expected)),
            ("matches", self.matches.to_string()),
            ("method", self.method.to_string()),
            ("elapsed_ms", self.elapsed_ms.to_string()),
        ]
    }

    fn text(&self) -> String {
        format!(
            "n={:<3} ell={:<3} brute={:<4} lattice={:<3} expected={:<4} match={} ({} ms)",
            self.n,
            self.ell,
            opt(&self.brute),
            self.lattice,
            opt(&self.expected),
            self.matches,
            self.elapsed_ms
        )
    }
}

pub fn table1(env: &Env, o: &mut Outcome, from: u32, to: u32) -> Result<bool> {
    let degrees: Vec<u32> = match env.n {
        Some(n) => vec![n],
        None => {
            if from > to {
                bail!("empty range: --from {from} is above --to {to}");
            }
            (from..=to).step_by(2).collect()
        }
    };
    if let Some(&odd) = degrees.iter().find(|&&n| n % 2 == 1) {
        bail!("l(n) is tabulated for even n only; got n={odd}");
    }
    if let Some(&big) = degrees.iter().find(|&&n| n > TABLE1_MAX_DEGREE) {
        if !env.long_run {
            return Err(Error::ResourceGate { what: "table1", n: big }.into());
        }
    }
    let mut rows = Vec::new();
    for n in degrees {
        let start = Instant::now();
        let ctx = FieldContext::new(n)?;
        let lattice = ell_n_lattice(&ctx)?.ell_n;
        let brute = if n <= brute_cap(env.long_run) { Some(ell_n_brute(&ctx, env.long_run)?.ell_n) } else { None };
        let expected = table1_expected(n);
        rows.push(Table1Row {
            n,
            ell: lattice,
            brute,
            lattice,
            expected,
            matches: brute.map_or(true, |b| b == lattice) && expected.map_or(true, |e| e == lattice),
            method: if brute.is_some() { "both" } else { "lattice" },
            elapsed_ms: start.elapsed().as_millis(),
        });
    }
    emit(&mut o.out, env.format, &rows)?;
    let ok = rows.iter().all(|r| r.matches);
    for r in rows.iter().filter(|r| !r.matches) {
        writeln!(o.err, "mismatch at n={}: brute={:?} lattice={} expected={:?}", r.n, r.brute, r.lattice, r.expected)?;
    }
    Ok(ok)
}

#[derive(Serialize)]
struct StickRow {
    n: u32,
    d1: u64,
    d2: Option<u64>,
    nu: u32,
    lower_bound: u32,
    minimizers: usize,
    j0_size: usize,
    doubling_closed: bool,
    h_degree: Option<u64>,
    h_terms: usize,
    h_identity: Option<bool>,
    ledger: Option<LedgerFields>,
    valuation_pairs: Option<u64>,
    valuation_strict: Option<u64>,
    valuation_violations: Option<usize>,
}

impl Row for StickRow {
    fn columns(&self) -> Vec<(&'static str, String)> {
        let l = self.ledger.as_ref();
        vec![
            ("n", self.n.to_string()),
            ("d1", self.d1.to_string()),
            ("d2", opt(&self.d2)),
            ("nu", self.nu.to_string()),
            ("lower_bound", self.lower_bound.to_string()),
            ("minimizers", self.minimizers.to_string()),
            ("j0_size", self.j0_size.to_string()),
            ("doubling_closed", self.doubling_closed.to_string()),
            ("h_degree", opt(&self.h_degree)),
            ("h_terms", self.h_terms.to_string()),
            ("h_identity", opt(&self.h_identity)),
            ("ledger_j", opt(&l.map(|l| l.j))),
            ("ledger_t", opt(&l.map(|l| l.t))),
            ("ledger_k", opt(&l.and_then(|l| l.k))),
            ("ledger_u", opt(&l.and_then(|l| l.u))),
            ("ledger_r", opt(&l.and_then(|l| l.r))),
            ("ledger_holds", opt(&l.map(|l| l.holds))),
            ("valuation_pairs", opt(&self.valuation_pairs)),
            ("valuation_strict", opt(&self.valuation_strict)),
            ("valuation_violations", opt(&self.valuation_violations)),
        ]
    }

    fn text(&self) -> String {
        let mut s = format!(
            "nu={} (lower bound {}) #J={} #J0={} doubling-closed={}\n  h: degree={} terms={} identity={}",
            self.nu,
            self.lower_bound,
            self.minimizers,
            self.j0_size,
            self.doubling_closed,
            opt(&self.h_degree),
            self.h_terms,
            self.h_identity.map_or("not compared".to_string(), |b| b.to_string()),
        );
        if let Some(l) = &self.ledger {
            s += &format!(
                "\n  ledger: j={} t={} k={} u={} r={} holds={}",
                l.j,
                l.t,
                opt(&l.k),
                opt(&l.u),
                opt(&l.r),
                l.holds
            );
        }
        match (self.valuation_pairs, self.valuation_strict, self.valuation_violations) {
            (Some(p), Some(st), Some(v)) => s += &format!("\n  valuation law: pairs={p} strict={st} violations={v}"),
            _ => s += "\n  valuation law: skipped (above the default gate)",
        }
        s
    }
}

pub fn stick(env: &Env, o: &mut Outcome, d1: u64, d2: Option<u64>) -> Result<bool> {
    let ctx = env.ctx()?;
    let n = ctx.n();
    let rec = match d2 {
        Some(d2) => nu_and_minimizers(&ctx, d1, d2)?,
        None => nu_monomial(&ctx, d1)?,
    };
    // The h identity and the ledger are stated for maximal quadratic
    // binomials with l(n) > m.
    let hypotheses = match (d2, ctx.m()) {
        (Some(d2), Some(m)) if wt2(d1 as i64, n) == 2 && wt2(d2 as i64, n) == 2 => {
            let maximal = nonbent_set_from_exponents(&ctx, &[d1, d2])?.sf_size() == 1usize << m;
            maximal && ell_n_lattice(&ctx)?.ell_n > m
        }
        _ => false,
    };
    let h = h_polynomial(&rec, hypotheses);
    let ledger = if hypotheses { gcd_ledger(&ctx, &rec) } else { None };
    let valuation = if n <= STICK_VALUATION_MAX_DEGREE || env.long_run {
        let f = match d2 {
            Some(d2) => VectorialFn::binomial(&ctx, d1, d2)?,
            None => VectorialFn::monomial(&ctx, d1)?,
        };
        Some(verify_valuation_law(&f, &rec))
    } else {
        None
    };
    let row = StickRow {
        n,
        d1,
        d2,
        nu: rec.nu,
        lower_bound: rec.lower_bound,
        minimizers: rec.minimizers.len(),
        j0_size: rec.j0_slice.len(),
        doubling_closed: rec.is_doubling_closed(),
        h_degree: h.degree,
        h_terms: h.exponents.len(),
        h_identity: h.comparison.as_ref().map(|c| c.identity_holds),
        ledger: ledger.as_ref().map(|l| LedgerFields {
            j: l.j_witness,
            t: l.t,
            k: l.k,
            u: l.u,
            r: l.r,
            holds: l.holds(),
        }),
        valuation_pairs: valuation.as_ref().map(|v| v.pairs_checked),
        valuation_strict: valuation.as_ref().map(|v| v.strict),
        valuation_violations: valuation.as_ref().map(|v| v.violations.len()),
    };
    let mut ok = true;
    if row.h_identity == Some(false) {
        ok = false;
        writeln!(o.err, "violated: h identity")?;
    }
    if hypotheses && !row.ledger.as_ref().is_some_and(|l| l.holds) {
        ok = false;
        writeln!(o.err, "violated: gcd ledger")?;
    }
    if let Some(v) = valuation.as_ref().filter(|v| !v.holds()) {
        ok = false;
        writeln!(o.err, "violated: valuation law, first: {:?}", v.violations[0])?;
    }
    emit(&mut o.out, env.format, &[row])?;
    Ok(ok)
}

#[derive(Serialize)]
struct GaussRow {
    n: u32,
    kappa: u32,
    j: u64,
    wt2: u32,
    valuation: Option<u32>,
    conclusive: bool,
    congruence_holds: bool,
    value: Vec<u64>,
}

impl Row for GaussRow {
    fn columns(&self) -> Vec<(&'static str, String)> {
        let value: Vec<String> = self.value.iter().map(u64::to_string).collect();
        vec![
            ("n", self.n.to_string()),
            ("kappa", self.kappa.to_string()),
            ("j", self.j.to_string()),
            ("wt2", self.wt2.to_string()),
            ("valuation", opt(&self.valuation)),
            ("conclusive", self.conclusive.to_string()),
            ("congruence_holds", self.congruence_holds.to_string()),
            ("value", value.join(";")),
        ]
    }

    fn text(&self) -> String {
        format!(
            "j={} wt2={} v2(G)={} conclusive={} congruence={}",
            self.j,
            self.wt2,
            opt(&self.valuation),
            self.conclusive,
            self.congruence_holds
        )
    }
}

pub fn gauss(env: &Env, o: &mut Outcome, j: Option<u64>, kappa: Option<u32>) -> Result<bool> {
    let ctx = env.ctx()?;
    let n = ctx.n();
    let p = PadicContext::new(&ctx, kappa.unwrap_or(n + 2))?;
    let order = ctx.order() as u64;
    let indices: Vec<u64> = match j {
        Some(j) if j >= order => bail!("character index {j} is outside [0, {}]", order - 1),
        Some(j) => vec![j],
        None => (0..order).collect(),
    };
    let rows: Vec<GaussRow> = indices
        .iter()
        .map(|&j| {
            let g = p.gauss_sum(j);
            let w = wt2(j as i64, n);
            let congruence_holds = g.conclusive && p.congruent(&g.value, &p.from_int(1 << w), w + 1);
            GaussRow {
                n,
                kappa: p.kappa(),
                j,
                wt2: w,
                valuation: g.valuation,
                conclusive: g.conclusive,
                congruence_holds,
                value: g.value.coeffs()[..n as usize].to_vec(),
            }
        })
        .collect();
    emit(&mut o.out, env.format, &rows)?;
    let ok = if j.is_some() {
        rows.iter().all(|r| r.congruence_holds)
    } else {
        let check = verify_stickelberger_and_fourier(&p);
        writeln!(
            o.err,
            "characters={} congruence failures={} valuation failures={} product failures={} fourier failures={} inconclusive={}",
            check.characters,
            check.congruence_failures.len(),
            check.valuation_failures.len(),
            check.product_failures.len(),
            check.fourier_failures.len(),
            check.inconclusive.len()
        )?;
        check.holds()
    };
    if !ok {
        writeln!(o.err, "the Stickelberger congruence fails or is inconclusive at kappa={}", p.kappa())?;
    }
    Ok(ok)
}
