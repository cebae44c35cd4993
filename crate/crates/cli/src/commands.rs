use std::collections::BTreeMap;
use std::ops::RangeInclusive;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use qwalk_core::algebra::{factor_integer, FactorBudget};
use qwalk_core::canon::{enumerate_graphs_up_to, MAX_ENUM_ORDER, MAX_ENUM_ORDER_EXTENDED};
use qwalk_core::certify::{p2_prime_conditions, Certificate, Certifier, CertifyOptions, Verdict};
use qwalk_core::oracle::{cross_validate_with, find_mates, mates_of, MAX_ORACLE_ORDER};
use qwalk_core::rooted::tower_order;
use qwalk_core::walk::{
    det_walk, q_constant_term, verify_charpoly_resultant, verify_det_identity,
    verify_spectral_formula, walk_report, IdentityMode, IdentityReport, SpectralCheck,
};
use qwalk_core::{Error, Graph};

use crate::args::{Identity, RunConfig, TheoremChoice};
use crate::exit::{self, Failure};
use crate::report::{Detail, Report};

pub type Outcome = Result<(Report, u8), Failure>;

pub struct Context {
    pub config: RunConfig,
    pool: rayon::ThreadPool,
}

impl Context {
    pub fn new(config: RunConfig) -> Result<Self, Failure> {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(config.jobs as usize)
            .build()
            .map_err(|e| Failure::Usage(format!("cannot start {} workers: {e}", config.jobs)))?;
        Ok(Context { config, pool })
    }

    fn certifier(&self) -> Certifier {
        Certifier::new(CertifyOptions {
            budget: FactorBudget {
                rho_iterations: self.config.budget,
            },
            direct_cap: self.config.direct_cap as usize,
            constant_term_cap: self.config.tower_cap as usize,
        })
    }

    fn direct_cap(&self) -> usize {
        self.config.direct_cap as usize
    }

    /// Applies `f` to every item on the worker pool; results keep input order
    /// and the first failure in that order wins.
    fn map<T: Sync, R: Send>(
        &self,
        items: &[T],
        f: impl Fn(&T) -> Result<R, Failure> + Sync + Send,
    ) -> Result<Vec<R>, Failure> {
        self.pool
            .install(|| items.par_iter().map(&f).collect::<Vec<_>>())
            .into_iter()
            .collect()
    }

    fn require_direct(&self, g: &Graph, vertices: usize) -> Result<(), Failure> {
        if vertices > self.direct_cap() {
            return Err(Failure::Oversize(format!(
                "{}: {vertices} vertices exceed --direct-cap {}",
                g.id(),
                self.direct_cap()
            )));
        }
        Ok(())
    }
}

pub fn walk(ctx: &Context, graphs: &[Graph]) -> Outcome {
    let rows = ctx.map(graphs, |g| {
        ctx.require_direct(g, g.order())?;
        Ok(walk_report(g))
    })?;
    let mut report = Report::new(
        "walk",
        vec![
            ("graph", "/graph"),
            ("n", "/n"),
            ("det_WQ", "/det_WQ"),
            ("det_WQtilde", "/det_WQtilde"),
            ("v2", "/v2"),
            ("a0", "/a0"),
            ("controllable", "/controllable"),
        ],
    );
    for r in &rows {
        report.push(r);
    }
    report.set("graphs", rows.len());
    report.set(
        "controllable",
        rows.iter().filter(|r| r.controllable).count(),
    );
    Ok((report, exit::SUCCESS))
}

/// One tower level tested for family membership.
#[derive(Serialize)]
struct ProbeLevel {
    seed: String,
    k: usize,
    level: u32,
    certificate: Certificate,
}

pub fn certify(
    ctx: &Context,
    graphs: &[Graph],
    theorem: TheoremChoice,
    k: usize,
    t: u32,
    probe_k: Option<RangeInclusive<usize>>,
) -> Outcome {
    let certifier = ctx.certifier();
    if let Some(range) = probe_k {
        if theorem != TheoremChoice::Tower {
            return Err(Failure::Usage(
                "--probe-k applies to the tower selector (4.6) only".into(),
            ));
        }
        return certify_probe(ctx, &certifier, graphs, range, t);
    }
    let certs = ctx.map(graphs, |g| {
        let cert = match theorem {
            TheoremChoice::Family => certifier.family(g)?,
            TheoremChoice::Rooted => certifier.rooted(g, k)?,
            TheoremChoice::Tower => certifier.tower(g, k, t)?,
            TheoremChoice::P2 => with_prime_conditions(&certifier, g, certifier.p2_family(g)?)?,
        };
        Ok(cert)
    })?;
    let mut report = Report::new(
        "certify",
        vec![
            ("graph", "/graph"),
            ("theorem", "/theorem"),
            ("verdict", "/verdict"),
            ("certified_graph", "/certified_graph"),
            ("det_WQ", "/evidence/det_WQ"),
            ("a0", "/evidence/a0"),
            ("quotient", "/evidence/quotient"),
            ("notes", "/evidence/notes"),
        ],
    );
    if theorem == TheoremChoice::P2 {
        report.detail = Some(Detail {
            pointer: "/evidence/per_prime",
            parent: ("graph", "/graph"),
            columns: vec![
                ("p", "/p"),
                ("dim_null", "/dim_nullspace"),
                ("alpha_norm", "/alpha_norm_mod_p"),
                ("cond_i", "/cond_i"),
                ("cond_ii", "/cond_ii"),
                ("cond_ii_inverse", "/cond_ii_substituted_inverse"),
                ("p_divides_literal", "/p_divides_literal_resultant"),
                ("passes", "/passes"),
            ],
        });
    }
    for c in &certs {
        report.push(c);
    }
    report.set("graphs", certs.len());
    report.set("verdicts", verdict_counts(certs.iter()));
    Ok((report, exit::SUCCESS))
}

/// When the seed premises fail, the per-prime conditions are still
/// evaluated and reported; the verdict is left as it was.
fn with_prime_conditions(
    certifier: &Certifier,
    g: &Graph,
    mut cert: Certificate,
) -> Result<Certificate, Failure> {
    if cert.is_certified()
        || !cert.evidence.per_prime.is_empty()
        || g.order() > certifier.options.direct_cap
    {
        return Ok(cert);
    }
    let det = det_walk(g);
    if det == BigInt::from(0) {
        return Ok(cert);
    }
    let tilde = &det >> (g.order() - 1);
    let f = factor_integer(&tilde, certifier.options.budget)?;
    if !f.complete {
        return Ok(cert);
    }
    for p in f.odd_primes() {
        cert.evidence.per_prime.push(p2_prime_conditions(g, p)?);
    }
    cert.evidence.det_wq_tilde = Some(tilde);
    if !cert.evidence.per_prime.is_empty() {
        cert.evidence
            .notes
            .push("per-prime conditions evaluated without the seed premises".into());
    }
    Ok(cert)
}

fn certify_probe(
    ctx: &Context,
    certifier: &Certifier,
    graphs: &[Graph],
    range: RangeInclusive<usize>,
    t: u32,
) -> Outcome {
    let jobs: Vec<(&Graph, usize)> = graphs
        .iter()
        .flat_map(|g| range.clone().map(move |k| (g, k)))
        .collect();
    let levels = ctx.map(&jobs, |&(g, k)| {
        let certs = certifier.tower_probe(g, k, t)?;
        Ok(certs
            .into_iter()
            .zip(1..)
            .map(|(certificate, level)| ProbeLevel {
                seed: g.id(),
                k,
                level,
                certificate,
            })
            .collect::<Vec<_>>())
    })?;
    let levels: Vec<ProbeLevel> = levels.into_iter().flatten().collect();
    let mut report = Report::new(
        "certify",
        vec![
            ("seed", "/seed"),
            ("k", "/k"),
            ("level", "/level"),
            ("verdict", "/certificate/verdict"),
            ("quotient", "/certificate/evidence/quotient"),
        ],
    );
    for l in &levels {
        report.push(l);
    }
    report.set("graphs", graphs.len());
    report.set("levels", levels.len());
    report.set(
        "verdicts",
        verdict_counts(levels.iter().map(|l| &l.certificate)),
    );
    Ok((report, exit::SUCCESS))
}

fn verdict_counts<'a>(
    certs: impl Iterator<Item = &'a Certificate>,
) -> BTreeMap<&'static str, usize> {
    let mut counts: BTreeMap<&'static str, usize> =
        ["Certified", "NotApplicable", "Refuted", "Unknown"]
            .into_iter()
            .map(|v| (v, 0))
            .collect();
    for c in certs {
        let key = match c.verdict {
            Verdict::Certified => "Certified",
            Verdict::NotApplicable => "NotApplicable",
            Verdict::Refuted => "Refuted",
            Verdict::Unknown => "Unknown",
        };
        *counts.get_mut(key).expect("all verdicts present") += 1;
    }
    counts
}

#[derive(Serialize)]
struct CharpolyRow {
    graph: String,
    n: usize,
    k: usize,
    holds: bool,
}

#[derive(Serialize)]
struct SpectralRow {
    graph: String,
    n: usize,
    #[serde(flatten)]
    check: SpectralCheck,
}

#[derive(Serialize)]
struct ConstantTermRow {
    graph: String,
    n: usize,
    k: usize,
    t: u32,
    vertices: usize,
    #[serde(with = "qwalk_core::json::decimal")]
    a0: BigInt,
    #[serde(with = "qwalk_core::json::decimal")]
    a0_tower: BigInt,
    holds: bool,
}

pub struct VerifyRequest {
    pub identity: Identity,
    pub k: usize,
    pub t: u32,
    pub tol: f64,
    pub probe_k: Option<RangeInclusive<usize>>,
}

pub fn verify(ctx: &Context, graphs: &[Graph], req: VerifyRequest) -> Outcome {
    if req.k < 2 {
        return Err(Failure::Usage(format!(
            "-k must be at least 2, got {}",
            req.k
        )));
    }
    if req.t == 0 {
        return Err(Failure::Usage("-t must be at least 1".into()));
    }
    if !(req.tol.is_finite() && req.tol > 0.0) {
        return Err(Failure::Usage(format!(
            "--tol must be positive and finite, got {}",
            req.tol
        )));
    }
    if let Some(range) = req.probe_k {
        if req.identity != Identity::Det {
            return Err(Failure::Usage(
                "--probe-k applies to --identity det only".into(),
            ));
        }
        return verify_probe(ctx, graphs, range);
    }
    let (mut report, failures) = match req.identity {
        Identity::Det => {
            let rows = ctx.map(graphs, |g| det_row(ctx, g, req.k))?;
            let failures = rows.iter().filter(|r| r.holds == Some(false)).count();
            (rows_report(identity_columns(), &rows), failures)
        }
        Identity::Charpoly => {
            let rows = ctx.map(graphs, |g| {
                Ok(CharpolyRow {
                    graph: g.id(),
                    n: g.order(),
                    k: req.k,
                    holds: verify_charpoly_resultant(g, req.k)?,
                })
            })?;
            let failures = rows.iter().filter(|r| !r.holds).count();
            let cols = vec![
                ("graph", "/graph"),
                ("n", "/n"),
                ("k", "/k"),
                ("holds", "/holds"),
            ];
            (rows_report(cols, &rows), failures)
        }
        Identity::Spectral => {
            let rows = ctx.map(graphs, |g| {
                ctx.require_direct(g, g.order())?;
                Ok(SpectralRow {
                    graph: g.id(),
                    n: g.order(),
                    check: verify_spectral_formula(g, req.tol)?,
                })
            })?;
            let failures = rows.iter().filter(|r| !r.check.passes).count();
            let cols = vec![
                ("graph", "/graph"),
                ("n", "/n"),
                ("exact", "/exact"),
                ("spectral", "/spectral"),
                ("residual", "/residual"),
                ("rule", "/rule"),
                ("passes", "/passes"),
            ];
            (rows_report(cols, &rows), failures)
        }
        Identity::A0 => {
            let certifier = ctx.certifier();
            let rows = ctx.map(graphs, |g| {
                let a0 = q_constant_term(g);
                let a0_tower = certifier.tower_constant_term(g, req.k, req.t)?;
                Ok(ConstantTermRow {
                    graph: g.id(),
                    n: g.order(),
                    k: req.k,
                    t: req.t,
                    vertices: tower_order(g.order(), req.k, req.t).unwrap_or(usize::MAX),
                    holds: a0.magnitude() == a0_tower.magnitude(),
                    a0,
                    a0_tower,
                })
            })?;
            let failures = rows.iter().filter(|r| !r.holds).count();
            let cols = vec![
                ("graph", "/graph"),
                ("n", "/n"),
                ("vertices", "/vertices"),
                ("a0", "/a0"),
                ("a0_tower", "/a0_tower"),
                ("holds", "/holds"),
            ];
            (rows_report(cols, &rows), failures)
        }
    };
    report.set("identity", req.identity.name());
    report.set("mode", "asserted");
    report.set("graphs", graphs.len());
    report.set("checks", report.results.len());
    report.set("violations", failures);
    Ok((
        report,
        if failures == 0 {
            exit::SUCCESS
        } else {
            exit::VIOLATION
        },
    ))
}

impl Identity {
    fn name(self) -> &'static str {
        match self {
            Identity::Det => "det",
            Identity::Charpoly => "charpoly",
            Identity::Spectral => "spectral",
            Identity::A0 => "a0",
        }
    }
}

fn identity_columns() -> Vec<(&'static str, &'static str)> {
    vec![
        ("graph", "/graph"),
        ("n", "/n"),
        ("k", "/k"),
        ("det_WQ", "/det_WQ"),
        ("a0", "/a0"),
        ("lhs", "/lhs"),
        ("rhs", "/rhs"),
        ("holds", "/holds"),
    ]
}

fn rows_report<T: Serialize>(columns: Vec<(&'static str, &'static str)>, rows: &[T]) -> Report {
    let mut report = Report::new("verify", columns);
    for r in rows {
        report.push(r);
    }
    report
}

/// A violated identity becomes a row with both sides rather than an error.
fn det_row(ctx: &Context, g: &Graph, k: usize) -> Result<IdentityReport, Failure> {
    ctx.require_direct(g, g.order().saturating_mul(k))?;
    match verify_det_identity(g, k) {
        Ok(r) => Ok(r),
        Err(Error::IdentityViolation { graph, k, lhs, rhs }) => Ok(IdentityReport {
            graph,
            n: g.order(),
            k,
            mode: IdentityMode::Asserted,
            lhs,
            rhs: Some(rhs),
            det_wq: det_walk(g),
            a0: q_constant_term(g),
            holds: Some(false),
            probe: None,
        }),
        Err(e) => Err(e.into()),
    }
}

fn verify_probe(ctx: &Context, graphs: &[Graph], range: RangeInclusive<usize>) -> Outcome {
    let jobs: Vec<(&Graph, usize)> = graphs
        .iter()
        .flat_map(|g| range.clone().map(move |k| (g, k)))
        .collect();
    let rows = ctx.map(&jobs, |&(g, k)| det_row(ctx, g, k))?;
    let mut columns = identity_columns();
    columns.truncate(5);
    columns.extend([
        ("measured", "/probe/measured_exponent"),
        ("exact", "/probe/exact_exponent"),
        ("ceil_k/2", "/probe/conjectured_exponent"),
        ("matches", "/probe/matches_conjecture"),
    ]);
    let mut report = rows_report(columns, &rows);
    let mut exact: BTreeMap<String, BTreeMap<String, usize>> = BTreeMap::new();
    for r in rows.iter() {
        if let Some(p) = &r.probe {
            let e = p
                .exact_exponent
                .map_or_else(|| "none".to_string(), |e| e.to_string());
            *exact
                .entry(r.k.to_string())
                .or_default()
                .entry(e)
                .or_default() += 1;
        }
    }
    report.set("identity", "det");
    report.set("mode", "probe");
    report.set("graphs", graphs.len());
    report.set("checks", rows.len());
    report.set(
        "violations",
        rows.iter().filter(|r| r.holds == Some(false)).count(),
    );
    report.set("exact_exponents", exact);
    Ok((report, exit::SUCCESS))
}

#[derive(Serialize)]
struct OracleRow {
    graph: String,
    n: usize,
    verdict: Verdict,
    mates: Vec<String>,
}

pub struct MatesRequest {
    pub enumerate: Option<usize>,
    pub cross_validate: Option<usize>,
    pub oracle: bool,
    pub allow_order_8: bool,
}

fn group_columns() -> Vec<(&'static str, &'static str)> {
    vec![("n", "/n"), ("graphs", "/graphs")]
}

pub fn mates(
    ctx: &Context,
    req: MatesRequest,
    graphs: impl FnOnce() -> Result<Vec<Graph>, Failure>,
) -> Outcome {
    if let Some(n) = req.cross_validate {
        let report_n = cross_validate_with(n, &ctx.certifier())?;
        let mut report = Report::new(
            "mates",
            vec![
                ("n", "/n"),
                ("graphs", "/graphs"),
                ("certified", "/certified"),
                ("confirmed", "/confirmed"),
                ("unchecked", "/unchecked"),
                ("contradictions", "/contradictions"),
            ],
        );
        report.push(&report_n);
        report.set("mode", "cross-validate");
        report.set("n", n);
        report.set("contradictions", report_n.contradictions);
        return Ok((report, exit::SUCCESS));
    }
    if let Some(n) = req.enumerate {
        let cap = if req.allow_order_8 {
            MAX_ENUM_ORDER_EXTENDED
        } else {
            MAX_ENUM_ORDER
        };
        if n == MAX_ENUM_ORDER_EXTENDED && !req.allow_order_8 {
            return Err(Failure::Oversize(format!(
                "--enumerate {n} needs --allow-order-8"
            )));
        }
        let all = enumerate_graphs_up_to(n, cap)?;
        let groups = find_mates(all.iter().cloned())?;
        let mut report = Report::new("mates", group_columns());
        for g in &groups {
            report.push(g);
        }
        report.set("mode", "enumerate");
        report.set("n", n);
        report.set("graphs", all.len());
        report.set("groups", groups.len());
        report.set(
            "members",
            groups.iter().map(|g| g.graphs.len()).sum::<usize>(),
        );
        return Ok((report, exit::SUCCESS));
    }
    let graphs = graphs()?;
    if req.oracle {
        let rows = ctx.map(&graphs, |g| {
            if g.order() > MAX_ORACLE_ORDER {
                return Err(Failure::Oversize(format!(
                    "{}: the oracle handles at most {MAX_ORACLE_ORDER} vertices",
                    g.id()
                )));
            }
            let mates = mates_of(g)?;
            let verdict = if mates.is_empty() {
                Verdict::Certified
            } else {
                Verdict::Refuted
            };
            Ok(OracleRow {
                graph: g.id(),
                n: g.order(),
                verdict,
                mates,
            })
        })?;
        let mut report = Report::new(
            "mates",
            vec![
                ("graph", "/graph"),
                ("n", "/n"),
                ("verdict", "/verdict"),
                ("mates", "/mates"),
            ],
        );
        for r in &rows {
            report.push(r);
        }
        report.set("mode", "oracle");
        report.set("graphs", rows.len());
        report.set(
            "determined",
            rows.iter()
                .filter(|r| r.verdict == Verdict::Certified)
                .count(),
        );
        return Ok((report, exit::SUCCESS));
    }
    let count = graphs.len();
    let groups = find_mates(graphs)?;
    let mut report = Report::new("mates", group_columns());
    for g in &groups {
        report.push(g);
    }
    report.set("mode", "corpus");
    report.set("graphs", count);
    report.set("groups", groups.len());
    report.set(
        "members",
        groups.iter().map(|g| g.graphs.len()).sum::<usize>(),
    );
    Ok((report, exit::SUCCESS))
}
