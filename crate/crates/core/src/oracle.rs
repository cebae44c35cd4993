//! Ground truth by exhaustion: generalized Q-spectrum fingerprints, mate
//! search over graph corpora, and cross-validation of the certificates.

use std::collections::{BTreeMap, HashMap};
use std::sync::OnceLock;

use serde::Serialize;

use crate::algebra::IntPolynomial;
use crate::canon::{canonical_graph6, enumerate_graphs, MAX_CANON_ORDER};
use crate::certify::{Certificate, Certifier, Verdict};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6::parse_graph6;
use crate::walk::q_char_poly;

/// Largest order for which [`brute_force_dgqs`] enumerates all graphs.
pub const MAX_ORACLE_ORDER: usize = 7;
/// Largest order accepted by [`cross_validate`].
pub const MAX_CROSS_VALIDATE_ORDER: usize = 6;

/// Characteristic polynomials of `Q(G)` and `Q(Ḡ)`: equal keys mean equal
/// generalized Q-spectra.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SpectrumKey {
    pub p_g: IntPolynomial,
    pub p_gc: IntPolynomial,
}

pub fn gq_spectrum_key(g: &Graph) -> SpectrumKey {
    SpectrumKey {
        p_g: q_char_poly(g),
        p_gc: q_char_poly(&g.complement()),
    }
}

/// Pairwise non-isomorphic graphs sharing one spectrum key, listed by
/// canonical graph6 in ascending order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MateGroup {
    pub n: usize,
    pub key: SpectrumKey,
    pub graphs: Vec<String>,
}

/// All groups of at least two non-isomorphic graphs with equal keys.
/// Isomorphic duplicates in the corpus are merged first. Groups are ordered
/// by order, then by their first member.
pub fn find_mates<I: IntoIterator<Item = Graph>>(corpus: I) -> Result<Vec<MateGroup>> {
    let mut classes: BTreeMap<String, Graph> = BTreeMap::new();
    for g in corpus {
        if g.order() > MAX_CANON_ORDER {
            return Err(Error::UnsupportedSize {
                what: "mate search",
                n: g.order(),
                max: MAX_CANON_ORDER,
            });
        }
        let c = canonical_graph6(&g)?;
        classes.entry(c).or_insert(g);
    }
    let mut by_key: HashMap<SpectrumKey, Vec<String>> = HashMap::new();
    for (c, g) in &classes {
        by_key
            .entry(gq_spectrum_key(g))
            .or_default()
            .push(c.clone());
    }
    let mut groups: Vec<MateGroup> = by_key
        .into_iter()
        .filter(|(_, v)| v.len() >= 2)
        .map(|(key, mut graphs)| {
            graphs.sort();
            let n = key.p_g.degree().unwrap_or(0);
            MateGroup { n, key, graphs }
        })
        .collect();
    groups.sort_by(|a, b| (a.n, &a.graphs).cmp(&(b.n, &b.graphs)));
    Ok(groups)
}

/// Spectrum keys of every graph on `n` vertices, mapped to the canonical
/// graph6 words that carry them.
#[derive(Debug)]
pub struct KeyTable {
    pub n: usize,
    pub graphs: usize,
    table: HashMap<SpectrumKey, Vec<String>>,
}

impl KeyTable {
    pub fn build(n: usize) -> Result<KeyTable> {
        if n > MAX_ORACLE_ORDER {
            return Err(Error::UnsupportedSize {
                what: "brute-force oracle",
                n,
                max: MAX_ORACLE_ORDER,
            });
        }
        let all = enumerate_graphs(n)?;
        let mut table: HashMap<SpectrumKey, Vec<String>> = HashMap::new();
        for g in &all {
            table
                .entry(gq_spectrum_key(g))
                .or_default()
                .push(canonical_graph6(g)?);
        }
        Ok(KeyTable {
            n,
            graphs: all.len(),
            table,
        })
    }

    /// Canonical graph6 words of the graphs non-isomorphic to `g` that share
    /// its key.
    pub fn mates_of(&self, g: &Graph) -> Result<Vec<String>> {
        if g.order() != self.n {
            return Err(Error::InvalidArgument(format!(
                "graph has {} vertices, table covers {}",
                g.order(),
                self.n
            )));
        }
        let c = canonical_graph6(g)?;
        let members = self
            .table
            .get(&gq_spectrum_key(g))
            .map(Vec::as_slice)
            .unwrap_or_default();
        Ok(members.iter().filter(|m| **m != c).cloned().collect())
    }
}

fn key_table(n: usize) -> Result<&'static KeyTable> {
    static TABLES: [OnceLock<KeyTable>; MAX_ORACLE_ORDER + 1] =
        [const { OnceLock::new() }; MAX_ORACLE_ORDER + 1];
    if n > MAX_ORACLE_ORDER {
        return Err(Error::UnsupportedSize {
            what: "brute-force oracle",
            n,
            max: MAX_ORACLE_ORDER,
        });
    }
    if let Some(t) = TABLES[n].get() {
        return Ok(t);
    }
    let built = KeyTable::build(n)?;
    Ok(TABLES[n].get_or_init(|| built))
}

/// Non-isomorphic generalized Q-cospectral mates of `g`, by exhaustion.
pub fn mates_of(g: &Graph) -> Result<Vec<String>> {
    key_table(g.order())?.mates_of(g)
}

/// True iff no graph on `n ≤ 7` vertices, non-isomorphic to `g`, shares its
/// generalized Q-spectrum.
pub fn brute_force_dgqs(g: &Graph) -> Result<bool> {
    Ok(mates_of(g)?.is_empty())
}

/// [`Verdict::Certified`] or [`Verdict::Refuted`] from the oracle alone.
pub fn oracle_verdict(g: &Graph) -> Result<Verdict> {
    Ok(if brute_force_dgqs(g)? {
        Verdict::Certified
    } else {
        Verdict::Refuted
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct ValidationReport {
    pub n: usize,
    pub graphs: usize,
    /// Certified verdicts over all certificates.
    pub certified: usize,
    /// Certified verdicts on graphs the oracle agreed are determined.
    pub confirmed: usize,
    /// Certified verdicts on graphs too large for the oracle.
    pub unchecked: usize,
    pub contradictions: usize,
    /// Certified verdicts by theorem name.
    pub by_theorem: BTreeMap<String, usize>,
}

/// Runs every certificate over all graphs on `n ≤ 6` vertices and checks
/// each Certified verdict against the oracle. A contradiction is an error
/// naming the graph.
pub fn cross_validate(n: usize) -> Result<ValidationReport> {
    cross_validate_with(n, &Certifier::default())
}

pub fn cross_validate_with(n: usize, certifier: &Certifier) -> Result<ValidationReport> {
    if n == 0 || n > MAX_CROSS_VALIDATE_ORDER {
        return Err(Error::UnsupportedSize {
            what: "cross-validation",
            n,
            max: MAX_CROSS_VALIDATE_ORDER,
        });
    }
    let graphs = enumerate_graphs(n)?;
    let mut report = ValidationReport {
        n,
        graphs: graphs.len(),
        ..Default::default()
    };
    for g in &graphs {
        let mut certs: Vec<Certificate> = vec![certifier.family(g)?, certifier.p2_family(g)?];
        for k in 2..=3 {
            certs.push(certifier.rooted(g, k)?);
            for t in 1..=2 {
                certs.push(certifier.tower(g, k, t)?);
            }
        }
        for cert in certs.iter().filter(|c| c.is_certified()) {
            report.certified += 1;
            *report
                .by_theorem
                .entry(cert.theorem.name().to_string())
                .or_default() += 1;
            let word = cert.certified_graph.as_deref().unwrap_or(&cert.graph);
            // Ids of graphs beyond 62 vertices are hashes, far past the oracle anyway.
            let subject = match parse_graph6(word) {
                Ok(h) if h.order() <= MAX_ORACLE_ORDER => h,
                _ => {
                    report.unchecked += 1;
                    continue;
                }
            };
            if brute_force_dgqs(&subject)? {
                report.confirmed += 1;
            } else {
                report.contradictions += 1;
                return Err(Error::Contradiction(format!(
                    "{} certified {} by {}, but the oracle finds mates {:?}",
                    cert.graph,
                    word,
                    cert.theorem.name(),
                    mates_of(&subject)?
                )));
            }
        }
    }
    Ok(report)
}
