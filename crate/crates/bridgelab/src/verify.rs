//! Experiment runners that assemble exact counts into pass/fail/evidence
//! reports. Assertions run on exact integer and rational arithmetic only;
//! decimal targets appear in evidence rows and in the explicitly toleranced
//! checks of the acceptance suite.

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;

use crate::classes::ClassSpec;
use crate::codec::verify_injectivity_bound;
use crate::enumerate::{
    enumerate_all, enumerate_connected, enumeration_cap, labelled_count_from_unlabelled,
    rooted_codes, UnlabelledSet,
};
use crate::error::{Error, Result};
use crate::ratio::{inv_e_bounds, Ratio};
use crate::series;

/// Decimal targets quoted in reports. Pass/fail never compares against these
/// directly; the e^-1 check uses exact rational brackets.
#[derive(Clone, Copy, Debug)]
pub struct VerificationTargets {
    pub inv_e: &'static str,
    pub e_minus_half: &'static str,
    pub tau: &'static str,
}

pub const TARGETS: VerificationTargets = VerificationTargets {
    inv_e: "0.3679",
    e_minus_half: "0.6065",
    tau: "0.5930",
};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Model {
    Labelled,
    Unlabelled,
}

impl Model {
    pub fn as_str(&self) -> &'static str {
        match self {
            Model::Labelled => "labelled",
            Model::Unlabelled => "unlabelled",
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum VerdictKind {
    #[serde(rename = "ASSERT")]
    Assert,
    #[serde(rename = "EVIDENCE")]
    Evidence,
}

#[derive(Clone, Debug, Serialize)]
pub struct Verdict {
    pub claim: String,
    pub kind: VerdictKind,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pass: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value: Option<String>,
}

impl Verdict {
    fn assert(claim: impl Into<String>, pass: bool) -> Self {
        Verdict {
            claim: claim.into(),
            kind: VerdictKind::Assert,
            pass: Some(pass),
            value: None,
        }
    }

    fn evidence(claim: impl Into<String>, value: impl Into<String>) -> Self {
        Verdict {
            claim: claim.into(),
            kind: VerdictKind::Evidence,
            pass: None,
            value: Some(value.into()),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RatioOut {
    pub num: String,
    pub den: String,
    pub dec: String,
}

impl From<&Ratio> for RatioOut {
    fn from(r: &Ratio) -> Self {
        RatioOut {
            num: r.numerator().to_string(),
            den: r.denominator().to_string(),
            dec: r.decimal_default(),
        }
    }
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct CountsOut {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub unlabelled_total: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub unlabelled_connected: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rooted_connected: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub labelled_total: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub labelled_connected: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Row {
    pub n: usize,
    pub counts: CountsOut,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p_connected: Option<RatioOut>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub e_frag: Option<RatioOut>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub class: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub model: Option<String>,
    pub rows: Vec<Row>,
    pub verdicts: Vec<Verdict>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl Report {
    fn new(class: &ClassSpec, model: Option<Model>) -> Self {
        Report {
            class: class.to_string(),
            model: model.map(|m| m.as_str().to_string()),
            rows: Vec::new(),
            verdicts: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// CSV mirror of the rows.
    pub fn to_csv(&self) -> String {
        let mut out = String::from(
            "class,model,n,unlabelled_total,unlabelled_connected,rooted_connected,labelled_total,labelled_connected,p_num,p_den,p_dec,frag_num,frag_den,frag_dec\n",
        );
        let blank = String::new();
        for r in &self.rows {
            let c = &r.counts;
            let opt = |o: &Option<String>| o.clone().unwrap_or_default();
            let (pn, pd, pdec) = r
                .p_connected
                .as_ref()
                .map(|p| (p.num.clone(), p.den.clone(), p.dec.clone()))
                .unwrap_or((blank.clone(), blank.clone(), blank.clone()));
            let (fn_, fd, fdec) = r
                .e_frag
                .as_ref()
                .map(|p| (p.num.clone(), p.den.clone(), p.dec.clone()))
                .unwrap_or((blank.clone(), blank.clone(), blank.clone()));
            out.push_str(&format!(
                "{},{},{},{},{},{},{},{},{},{},{},{},{},{}\n",
                self.class,
                self.model.clone().unwrap_or_default(),
                r.n,
                opt(&c.unlabelled_total),
                opt(&c.unlabelled_connected),
                opt(&c.rooted_connected),
                opt(&c.labelled_total),
                opt(&c.labelled_connected),
                pn,
                pd,
                pdec,
                fn_,
                fd,
                fdec
            ));
        }
        out
    }

    pub fn all_asserts_pass(&self) -> bool {
        self.verdicts
            .iter()
            .all(|v| v.kind != VerdictKind::Assert || v.pass == Some(true))
    }

    pub fn print_text(&self) {
        println!(
            "report: class {}{}",
            self.class,
            self.model
                .as_deref()
                .map(|m| format!(", model {m}"))
                .unwrap_or_default()
        );
        for row in &self.rows {
            let mut line = format!("  n = {}", row.n);
            let mut push = |label: &str, v: &Option<String>| {
                if let Some(v) = v {
                    line.push_str(&format!("  {label} = {v}"));
                }
            };
            push("members", &row.counts.unlabelled_total);
            push("connected", &row.counts.unlabelled_connected);
            push("rooted", &row.counts.rooted_connected);
            push("labelled", &row.counts.labelled_total);
            push("labelled-connected", &row.counts.labelled_connected);
            if let Some(p) = &row.p_connected {
                line.push_str(&format!("  P(connected) = {}/{} ~ {}", p.num, p.den, p.dec));
            }
            if let Some(f) = &row.e_frag {
                line.push_str(&format!("  E[frag] = {}/{} ~ {}", f.num, f.den, f.dec));
            }
            println!("{line}");
        }
        for v in &self.verdicts {
            let kind = match v.kind {
                VerdictKind::Assert => "ASSERT",
                VerdictKind::Evidence => "EVIDENCE",
            };
            match (&v.pass, &v.value) {
                (Some(p), _) => println!(
                    "  [{kind}] {}: {}",
                    v.claim,
                    if *p { "pass" } else { "FAIL" }
                ),
                (None, Some(val)) => println!("  [{kind}] {}: {}", v.claim, val),
                (None, None) => println!("  [{kind}] {}", v.claim),
            }
        }
        for note in &self.notes {
            println!("  note: {note}");
        }
    }
}

fn big_str(v: &BigUint) -> Option<String> {
    Some(v.to_string())
}

fn frag_sum_unlabelled(set: &UnlabelledSet) -> BigUint {
    set.members().map(|m| BigUint::from(m.graph.frag())).sum()
}

/// Exact P(connected) per n in one model. The labelled rows carry the
/// asserted e^-1 lower bound; unlabelled rows are conjecture evidence.
pub fn run_connectivity(class: &ClassSpec, nmax: usize, model: Model) -> Result<Report> {
    let mut report = Report::new(class, Some(model));
    let (e_lo, e_hi) = inv_e_bounds();
    let mut all_pass = true;
    let mut min_p: Option<(BigRational, usize)> = None;
    for n in 1..=nmax {
        let all = enumerate_all(class, n)?;
        let conn = enumerate_connected(class, n)?;
        if all.is_empty() {
            report.notes.push(format!("n = {n}: class has no members"));
            continue;
        }
        let (p, counts) = match model {
            Model::Labelled => {
                let total = labelled_count_from_unlabelled(&all);
                let connected = labelled_count_from_unlabelled(&conn);
                let p = Ratio::new(connected.clone(), total.clone());
                (
                    p,
                    CountsOut {
                        unlabelled_total: big_str(&BigUint::from(all.len())),
                        unlabelled_connected: big_str(&BigUint::from(conn.len())),
                        labelled_total: big_str(&total),
                        labelled_connected: big_str(&connected),
                        ..CountsOut::default()
                    },
                )
            }
            Model::Unlabelled => {
                let p = Ratio::new(BigUint::from(conn.len()), BigUint::from(all.len()));
                (
                    p,
                    CountsOut {
                        unlabelled_total: big_str(&BigUint::from(all.len())),
                        unlabelled_connected: big_str(&BigUint::from(conn.len())),
                        ..CountsOut::default()
                    },
                )
            }
        };
        if model == Model::Labelled {
            all_pass &= ratio_at_least_bracketed(&p, &e_lo, &e_hi)?;
        }
        if min_p.as_ref().is_none_or(|(best, _)| p.rational() < best) {
            min_p = Some((p.rational().clone(), n));
        }
        report.rows.push(Row {
            n,
            counts,
            p_connected: Some(RatioOut::from(&p)),
            e_frag: None,
        });
    }
    match model {
        Model::Labelled => {
            report.verdicts.push(Verdict::assert(
                format!(
                    "labelled P(connected) >= e^-1 ~ {} for every n <= {nmax}",
                    TARGETS.inv_e
                ),
                all_pass,
            ));
        }
        Model::Unlabelled => {
            if let Some((p, n)) = &min_p {
                report.verdicts.push(Verdict::evidence(
                    "C1: some uniform delta > 0 lower-bounds unlabelled P(connected)",
                    format!("min P = {}/{} at n = {n}", p.numer(), p.denom()),
                ));
                report.verdicts.push(Verdict::evidence(
                    format!(
                        "C2: liminf of unlabelled P(connected) >= tau ~ {} (decomposable classes)",
                        TARGETS.tau
                    ),
                    format!(
                        "min P ~ {} vs tau target {}",
                        Ratio::from_rational(p.clone()).decimal(6),
                        TARGETS.tau
                    ),
                ));
            }
        }
    }
    Ok(report)
}

/// `true` iff `p >= c` where c is bracketed by (lo, hi); errs if the bracket
/// cannot decide, which at 40 terms does not happen for desk-scale ratios.
fn ratio_at_least_bracketed(p: &Ratio, lo: &BigRational, hi: &BigRational) -> Result<bool> {
    if p.rational() >= hi {
        Ok(true)
    } else if p.rational() < lo {
        Ok(false)
    } else {
        Err(Error::Internal(
            "rational bracket too coarse to decide comparison".into(),
        ))
    }
}

/// Counting inequality, codec roundtrip and injectivity per n.
pub fn run_counting_bound(class: &ClassSpec, nmax: usize) -> Result<Report> {
    let mut report = Report::new(class, Some(Model::Unlabelled));
    for n in 1..=nmax {
        let row = verify_injectivity_bound(class, n)?;
        report.rows.push(Row {
            n,
            counts: CountsOut {
                unlabelled_total: big_str(&row.unlabelled_total),
                unlabelled_connected: big_str(&row.unlabelled_connected),
                rooted_connected: big_str(&row.rooted_connected),
                ..CountsOut::default()
            },
            p_connected: None,
            e_frag: None,
        });
    }
    report.verdicts.push(Verdict::assert(
        format!("members <= 2 rooted-connected <= 2n connected for every n <= {nmax}"),
        true,
    ));
    report.verdicts.push(Verdict::assert(
        format!("decode(encode(g)) = g for every member, n <= {nmax}"),
        true,
    ));
    report.verdicts.push(Verdict::assert(
        format!("(rooted code, bit) codewords pairwise distinct, n <= {nmax}"),
        true,
    ));
    Ok(report)
}

/// Exact E[frag] per n in one model. Labelled forests run through the
/// sequence recurrences (reaching n = 60) and carry the asserted < 2 bound;
/// everything else is enumeration-backed evidence.
pub fn run_frag(class: &ClassSpec, nmax: usize, model: Model) -> Result<Report> {
    let mut report = Report::new(class, Some(model));
    let mut max_e: Option<(BigRational, usize)> = None;
    if model == Model::Labelled && *class == ClassSpec::Forests {
        let mut all_below_two = true;
        let two = BigRational::from_integer(2.into());
        for n in 1..=nmax {
            let e = series::labelled_forest_frag_expectation(n)?;
            all_below_two &= e.rational() < &two;
            report.rows.push(Row {
                n,
                counts: CountsOut::default(),
                p_connected: None,
                e_frag: Some(RatioOut::from(&e)),
            });
        }
        report.verdicts.push(Verdict::assert(
            format!("labelled forest E[frag] < 2 for every n <= {nmax}"),
            all_below_two,
        ));
        return Ok(report);
    }
    for n in 1..=nmax {
        let all = enumerate_all(class, n)?;
        if all.is_empty() {
            report.notes.push(format!("n = {n}: class has no members"));
            continue;
        }
        let e = match model {
            Model::Unlabelled => Ratio::new(frag_sum_unlabelled(&all), BigUint::from(all.len())),
            Model::Labelled => {
                let fact = crate::enumerate::factorial(n);
                let mut num = BigUint::zero();
                for m in all.members() {
                    num += BigUint::from(m.graph.frag()) * (fact.clone() / &m.aut);
                }
                Ratio::new(num, labelled_count_from_unlabelled(&all))
            }
        };
        if max_e.as_ref().is_none_or(|(best, _)| e.rational() > best) {
            max_e = Some((e.rational().clone(), n));
        }
        report.rows.push(Row {
            n,
            counts: CountsOut {
                unlabelled_total: big_str(&BigUint::from(all.len())),
                ..CountsOut::default()
            },
            p_connected: None,
            e_frag: Some(RatioOut::from(&e)),
        });
    }
    if let Some((e, n)) = &max_e {
        let value = format!("max E[frag] = {}/{} at n = {n}", e.numer(), e.denom());
        match model {
            Model::Unlabelled => {
                report.verdicts.push(Verdict::evidence(
                    "C3: E[frag] bounded per class (unlabelled)",
                    value.clone(),
                ));
                report.verdicts.push(Verdict::evidence(
                    "C4: one uniform constant bounds E[frag] over decomposable classes",
                    format!("this class contributes {value}"),
                ));
            }
            Model::Labelled => {
                report
                    .verdicts
                    .push(Verdict::evidence("labelled E[frag] (enumeration range)", value));
            }
        }
    }
    Ok(report)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum AwkwardVariant {
    AtLeast,
    Exactly,
}

impl AwkwardVariant {
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "at_least" => Ok(AwkwardVariant::AtLeast),
            "exactly" => Ok(AwkwardVariant::Exactly),
            _ => Err(Error::Parse(format!(
                "unknown variant {s:?}; expected at_least or exactly"
            ))),
        }
    }
}

/// The cycle-class example at n = 2k: lists the members and compares exact
/// P(connected) and E[frag] against the stated targets 1/2 and n/4. The
/// exactly-k reading must reproduce them; the at-least-k reading reports its
/// own values and flags the mismatch in the notes instead of failing.
pub fn run_awkward(k: usize, variant: AwkwardVariant) -> Result<Report> {
    if k < 3 || 2 * k > 10 {
        return Err(Error::CapExceeded {
            what: "cycle-class example (needs 3 <= k <= 5)",
            n: 2 * k,
            cap: 10,
        });
    }
    let class = match variant {
        AwkwardVariant::AtLeast => ClassSpec::cycles_at_least(k)?,
        AwkwardVariant::Exactly => ClassSpec::cycles_exactly(k)?,
    };
    let n = 2 * k;
    let all = enumerate_all(&class, n)?;
    let conn = all.members().filter(|m| m.graph.is_connected()).count();
    let p = Ratio::new(BigUint::from(conn), BigUint::from(all.len()));
    let e = Ratio::new(frag_sum_unlabelled(&all), BigUint::from(all.len()));

    let mut report = Report::new(&class, Some(Model::Unlabelled));
    for (code, member) in all.iter() {
        report
            .notes
            .push(format!("member {code}: edges {:?}", member.graph.edges()));
    }
    report.rows.push(Row {
        n,
        counts: CountsOut {
            unlabelled_total: big_str(&BigUint::from(all.len())),
            unlabelled_connected: big_str(&BigUint::from(conn)),
            ..CountsOut::default()
        },
        p_connected: Some(RatioOut::from(&p)),
        e_frag: Some(RatioOut::from(&e)),
    });

    let half = BigRational::new(1.into(), 2.into());
    let quarter_n = BigRational::new(n.into(), 4.into());
    let matches_targets = p.rational() == &half && e.rational() == &quarter_n;
    match variant {
        AwkwardVariant::Exactly => {
            report.verdicts.push(Verdict::assert(
                format!("P(connected) = 1/2 and E[frag] = n/4 = {n}/4 at n = {n}"),
                matches_targets,
            ));
        }
        AwkwardVariant::AtLeast => {
            report.verdicts.push(Verdict::evidence(
                format!("P(connected) and E[frag] at n = {n} (literal at-least-{k} reading)"),
                format!("P = {p}, E[frag] = {e}"),
            ));
            if !matches_targets {
                report.notes.push(format!(
                    "discrepancy: the literal at-least-{k} reading yields P = {p} and E[frag] = {e}, \
                     not the stated P = 1/2 and E[frag] = n/4; the exactly-{k} reading reproduces \
                     the stated values"
                ));
            }
        }
    }
    Ok(report)
}

/// Closure check: adding any edge between two components of a member stays
/// in the class.
pub fn check_bridge_addable(class: &ClassSpec, nmax: usize) -> Result<Report> {
    let mut report = Report::new(class, Some(Model::Unlabelled));
    let mut checked_pairs = 0usize;
    for n in 1..=nmax {
        let all = enumerate_all(class, n)?;
        for (_, member) in all.iter() {
            let g = &member.graph;
            let comps = g.components();
            for u in 0..g.n() {
                for v in (u + 1)..g.n() {
                    if comps.label_of(u) == comps.label_of(v) {
                        continue;
                    }
                    checked_pairs += 1;
                    let bigger = g.add_edge(u, v)?;
                    if !class.contains(&bigger) {
                        return Err(Error::Verification {
                            claim: format!(
                                "bridge-addability of {class}: member + edge ({u}, {v}) left the class"
                            ),
                            witness: g.to_text(),
                        });
                    }
                }
            }
        }
        let members = enumerate_all(class, n)?.len();
        report.rows.push(Row {
            n,
            counts: CountsOut {
                unlabelled_total: big_str(&BigUint::from(members)),
                ..CountsOut::default()
            },
            p_connected: None,
            e_frag: None,
        });
    }
    report.verdicts.push(Verdict::assert(
        format!(
            "class closed under cross-component edge addition, n <= {nmax} ({checked_pairs} pairs)"
        ),
        true,
    ));
    Ok(report)
}

/// The per-class suite behind `bridgelab verify`.
pub fn run_class_suite(class: &ClassSpec, nmax: usize) -> Result<Vec<Report>> {
    let cap = enumeration_cap(class);
    if nmax == 0 || nmax > cap {
        return Err(Error::CapExceeded {
            what: "verification suite",
            n: nmax,
            cap,
        });
    }
    Ok(vec![
        run_connectivity(class, nmax, Model::Labelled)?,
        run_connectivity(class, nmax, Model::Unlabelled)?,
        run_counting_bound(class, nmax)?,
        run_frag(class, nmax, Model::Labelled)?,
        run_frag(class, nmax, Model::Unlabelled)?,
        check_bridge_addable(class, nmax)?,
    ])
}

/// Unlabelled P(connected) and E[frag] straight from an enumerated set;
/// shared by tests and the tau evidence tables.
pub fn unlabelled_stats(set: &UnlabelledSet) -> Option<(Ratio, Ratio)> {
    if set.is_empty() {
        return None;
    }
    let conn = set.members().filter(|m| m.graph.is_connected()).count();
    let p = Ratio::new(BigUint::from(conn), BigUint::from(set.len()));
    let e = Ratio::new(frag_sum_unlabelled(set), BigUint::from(set.len()));
    Some((p, e))
}

/// The three exact counts of the counting inequality; used in tests.
pub fn counting_chain(class: &ClassSpec, n: usize) -> Result<(BigUint, BigUint, BigUint)> {
    let all = enumerate_all(class, n)?;
    let conn = enumerate_connected(class, n)?;
    let rooted = rooted_codes(&conn).len();
    Ok((
        BigUint::from(all.len()),
        BigUint::from(rooted),
        BigUint::from(conn.len()),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn connectivity_labelled_forests() {
        let report = run_connectivity(&ClassSpec::Forests, 4, Model::Labelled).unwrap();
        assert!(report.all_asserts_pass());
        let row4 = report.rows.iter().find(|r| r.n == 4).unwrap();
        // 16 labelled trees of 38 labelled forests, reduced
        let p = row4.p_connected.as_ref().unwrap();
        assert_eq!((p.num.as_str(), p.den.as_str()), ("8", "19"));
        assert_eq!(row4.counts.labelled_connected.as_deref(), Some("16"));
        assert_eq!(row4.counts.labelled_total.as_deref(), Some("38"));
    }

    #[test]
    fn connectivity_unlabelled_forests() {
        let report = run_connectivity(&ClassSpec::Forests, 5, Model::Unlabelled).unwrap();
        let row5 = report.rows.iter().find(|r| r.n == 5).unwrap();
        let p = row5.p_connected.as_ref().unwrap();
        assert_eq!((p.num.as_str(), p.den.as_str()), ("3", "10"));
        // evidence only, no asserts
        assert!(report
            .verdicts
            .iter()
            .all(|v| v.kind == VerdictKind::Evidence));
    }

    #[test]
    fn connectivity_trivial_all_graphs() {
        let report = run_connectivity(&ClassSpec::AllGraphs, 1, Model::Unlabelled).unwrap();
        let p = report.rows[0].p_connected.as_ref().unwrap();
        assert_eq!((p.num.as_str(), p.den.as_str()), ("1", "1"));
    }

    #[test]
    fn counting_bound_small() {
        let report = run_counting_bound(&ClassSpec::Forests, 6).unwrap();
        assert!(report.all_asserts_pass());
        assert_eq!(report.rows.len(), 6);
        let at3 = ClassSpec::cycles_at_least(3).unwrap();
        assert!(run_counting_bound(&at3, 6).unwrap().all_asserts_pass());
    }

    #[test]
    fn frag_reports() {
        let report = run_frag(&ClassSpec::Forests, 3, Model::Unlabelled).unwrap();
        let row3 = report.rows.iter().find(|r| r.n == 3).unwrap();
        let e = row3.e_frag.as_ref().unwrap();
        assert_eq!((e.num.as_str(), e.den.as_str()), ("1", "1"));

        let labelled = run_frag(&ClassSpec::Forests, 3, Model::Labelled).unwrap();
        let row3 = labelled.rows.iter().find(|r| r.n == 3).unwrap();
        let e = row3.e_frag.as_ref().unwrap();
        assert_eq!((e.num.as_str(), e.den.as_str()), ("5", "7"));
        assert!(labelled.all_asserts_pass());

        // n = 1 in any class: E[frag] = 0
        let one = run_frag(&ClassSpec::AllGraphs, 1, Model::Unlabelled).unwrap();
        let e = one.rows[0].e_frag.as_ref().unwrap();
        assert_eq!(e.num.as_str(), "0");
    }

    #[test]
    fn awkward_exactly_matches_targets() {
        let report = run_awkward(3, AwkwardVariant::Exactly).unwrap();
        assert!(report.all_asserts_pass());
        let row = &report.rows[0];
        assert_eq!(row.counts.unlabelled_total.as_deref(), Some("2"));
        let p = row.p_connected.as_ref().unwrap();
        assert_eq!((p.num.as_str(), p.den.as_str()), ("1", "2"));
        let e = row.e_frag.as_ref().unwrap();
        assert_eq!((e.num.as_str(), e.den.as_str()), ("3", "2"));
    }

    #[test]
    fn awkward_at_least_flags_discrepancy() {
        let report = run_awkward(3, AwkwardVariant::AtLeast).unwrap();
        assert!(report.all_asserts_pass()); // nothing asserted
        let row = &report.rows[0];
        assert_eq!(row.counts.unlabelled_total.as_deref(), Some("3"));
        let p = row.p_connected.as_ref().unwrap();
        assert_eq!((p.num.as_str(), p.den.as_str()), ("2", "3"));
        let e = row.e_frag.as_ref().unwrap();
        assert_eq!((e.num.as_str(), e.den.as_str()), ("1", "1"));
        assert!(report.notes.iter().any(|n| n.contains("discrepancy")));
    }

    #[test]
    fn awkward_k4_exactly() {
        let report = run_awkward(4, AwkwardVariant::Exactly).unwrap();
        assert!(report.all_asserts_pass());
        let e = report.rows[0].e_frag.as_ref().unwrap();
        assert_eq!((e.num.as_str(), e.den.as_str()), ("2", "1"));
        assert!(run_awkward(2, AwkwardVariant::Exactly).is_err());
        assert!(run_awkward(6, AwkwardVariant::Exactly).is_err());
    }

    #[test]
    fn bridge_addable_checks() {
        for class in [
            ClassSpec::Forests,
            ClassSpec::cycles_exactly(3).unwrap(),
            ClassSpec::cycles_at_least(3).unwrap(),
        ] {
            let report = check_bridge_addable(&class, 6).unwrap();
            assert!(report.all_asserts_pass(), "{class}");
        }
    }

    #[test]
    fn report_json_and_csv_shape() {
        let report = run_connectivity(&ClassSpec::Forests, 3, Model::Labelled).unwrap();
        let json = report.to_json();
        let v: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(v["class"], "forests");
        assert_eq!(v["model"], "labelled");
        assert!(v["rows"].as_array().unwrap().len() == 3);
        assert_eq!(v["verdicts"][0]["kind"], "ASSERT");
        let csv = report.to_csv();
        assert!(csv.starts_with("class,model,n,"));
        assert_eq!(csv.lines().count(), 4);
    }
}
