//! Derived integer sequences, golden fixtures and OEIS counterparts.
//!
//! Five sequence families are exposed: the k-Fibonacci and k-Lucas numbers
//! themselves (indexed from 0) and the determinant, trace and dominant
//! eigenvalue of `A(k,n)` (indexed from n = 1). Fixtures for the six OEIS
//! sequences matching `k <= 3` are bundled as b-file text so every check
//! runs without network access.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::Serialize;

use crate::bataille::{closed_det, closed_trace, lambda2, FamilyParams};
use crate::error::{Error, Result};
use crate::oeis::parse_bfile;
use crate::sequence::{kfib, klucas};

/// Which derived sequence to generate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SequenceKind {
    KFib,
    KLucas,
    Det,
    Trace,
    Lambda2,
}

impl SequenceKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            SequenceKind::KFib => "fib",
            SequenceKind::KLucas => "lucas",
            SequenceKind::Det => "det",
            SequenceKind::Trace => "trace",
            SequenceKind::Lambda2 => "lambda2",
        }
    }

    /// Index of the first term: sequence listings start at 0, matrix-derived
    /// sequences at order n = 1.
    pub fn first_index(&self) -> i64 {
        match self {
            SequenceKind::KFib | SequenceKind::KLucas => 0,
            _ => 1,
        }
    }
}

impl FromStr for SequenceKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "fib" => Ok(SequenceKind::KFib),
            "lucas" => Ok(SequenceKind::KLucas),
            "det" => Ok(SequenceKind::Det),
            "trace" => Ok(SequenceKind::Trace),
            "lambda2" => Ok(SequenceKind::Lambda2),
            other => Err(Error::InvalidParameter(format!(
                "unknown sequence kind {other:?} (expected fib, lucas, det, trace or lambda2)"
            ))),
        }
    }
}

impl fmt::Display for SequenceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A `(kind, k)` pair naming one concrete integer sequence.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SequenceId {
    kind: SequenceKind,
    k: i64,
}

impl SequenceId {
    pub fn new(kind: SequenceKind, k: i64) -> Result<Self> {
        if k < 1 {
            return Err(Error::InvalidParameter(format!("k must be >= 1, got {k}")));
        }
        Ok(SequenceId { kind, k })
    }

    pub fn kind(&self) -> SequenceKind {
        self.kind
    }

    pub fn k(&self) -> i64 {
        self.k
    }
}

impl fmt::Display for SequenceId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}(k={})", self.kind, self.k)
    }
}

/// First `count` terms of the named sequence, starting at the kind's
/// first index.
pub fn emit_sequence(id: &SequenceId, count: usize) -> Result<Vec<BigInt>> {
    if count == 0 {
        return Err(Error::InvalidParameter("term count must be >= 1".into()));
    }
    let k = id.k;
    match id.kind {
        SequenceKind::KFib => (0..count as i64).map(|i| kfib(k, i)).collect(),
        SequenceKind::KLucas => (0..count as i64).map(|i| klucas(k, i)).collect(),
        SequenceKind::Det => {
            (1..=count).map(|n| closed_det(&FamilyParams::new(k, n)?)).collect()
        }
        SequenceKind::Trace => {
            (1..=count).map(|n| closed_trace(&FamilyParams::new(k, n)?)).collect()
        }
        SequenceKind::Lambda2 => {
            (1..=count).map(|n| lambda2(&FamilyParams::new(k, n)?)).collect()
        }
    }
}

/// A stored list of sequence terms: an OEIS accession or any other label,
/// the index of the first term, and the terms themselves (never empty).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SequenceFixture {
    label: String,
    offset: i64,
    terms: Vec<BigInt>,
}

impl SequenceFixture {
    pub fn new(label: impl Into<String>, offset: i64, terms: Vec<BigInt>) -> Result<Self> {
        if terms.is_empty() {
            return Err(Error::InvalidParameter("fixture must hold at least one term".into()));
        }
        Ok(SequenceFixture { label: label.into(), offset, terms })
    }

    /// Parses b-file text into a fixture.
    pub fn from_bfile(label: impl Into<String>, text: &str) -> Result<Self> {
        let entries = parse_bfile(text)?;
        let offset = entries[0].0;
        let terms = entries.into_iter().map(|(_, v)| v).collect();
        Self::new(label, offset, terms)
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn offset(&self) -> i64 {
        self.offset
    }

    pub fn terms(&self) -> &[BigInt] {
        &self.terms
    }

    /// Keeps only the first `max_terms` terms.
    pub fn truncated(mut self, max_terms: usize) -> Self {
        self.terms.truncate(max_terms.max(1));
        self
    }
}

/// First index where a fixture disagrees with the generated sequence.
#[derive(Clone, Debug, Serialize)]
pub struct Mismatch {
    pub index: i64,
    pub expected: String,
    pub actual: String,
}

/// Outcome of comparing a generated sequence against a fixture.
#[derive(Clone, Debug, Serialize)]
pub struct MatchReport {
    pub label: String,
    pub compared: usize,
    pub first_mismatch: Option<Mismatch>,
}

impl MatchReport {
    pub fn is_match(&self) -> bool {
        self.first_mismatch.is_none()
    }
}

/// Compares the generated sequence for `id` against `fixture`, respecting the
/// fixture's offset. Fixture terms at indices before the sequence's first
/// index are ignored; a mismatch is data, not an error.
pub fn check_fixture(id: &SequenceId, fixture: &SequenceFixture) -> Result<MatchReport> {
    let base = id.kind.first_index();
    let fixture_end = fixture.offset + fixture.terms.len() as i64;
    let start = base.max(fixture.offset);
    if start >= fixture_end {
        return Ok(MatchReport {
            label: fixture.label.clone(),
            compared: 0,
            first_mismatch: None,
        });
    }
    let needed = (fixture_end - base) as usize;
    let generated = emit_sequence(id, needed)?;
    let mut first_mismatch = None;
    let mut compared = 0;
    for index in start..fixture_end {
        let expected = &fixture.terms[(index - fixture.offset) as usize];
        let actual = &generated[(index - base) as usize];
        compared += 1;
        if expected != actual {
            first_mismatch = Some(Mismatch {
                index,
                expected: expected.to_string(),
                actual: actual.to_string(),
            });
            break;
        }
    }
    Ok(MatchReport { label: fixture.label.clone(), compared, first_mismatch })
}

/// Accessions with a fixture shipped in the crate.
pub const BUNDLED_ACCESSIONS: [&str; 6] =
    ["A000032", "A000045", "A000129", "A002203", "A006190", "A006497"];

/// The bundled b-file for `accession`, if any.
pub fn bundled_fixture(accession: &str) -> Option<SequenceFixture> {
    let text = match accession {
        "A000045" => include_str!("../fixtures/A000045.bfile"),
        "A000129" => include_str!("../fixtures/A000129.bfile"),
        "A006190" => include_str!("../fixtures/A006190.bfile"),
        "A000032" => include_str!("../fixtures/A000032.bfile"),
        "A002203" => include_str!("../fixtures/A002203.bfile"),
        "A006497" => include_str!("../fixtures/A006497.bfile"),
        _ => return None,
    };
    Some(SequenceFixture::from_bfile(accession, text).expect("bundled fixtures are well-formed"))
}

/// The locally generated sequence matching a known accession.
pub fn oeis_counterpart(accession: &str) -> Option<SequenceId> {
    let (kind, k) = match accession {
        "A000045" => (SequenceKind::KFib, 1),
        "A000129" => (SequenceKind::KFib, 2),
        "A006190" => (SequenceKind::KFib, 3),
        "A000032" => (SequenceKind::KLucas, 1),
        "A002203" => (SequenceKind::KLucas, 2),
        "A006497" => (SequenceKind::KLucas, 3),
        _ => return None,
    };
    Some(SequenceId::new(kind, k).expect("k is positive"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn id(kind: SequenceKind, k: i64) -> SequenceId {
        SequenceId::new(kind, k).unwrap()
    }

    #[test]
    fn emit_known_prefixes() {
        assert_eq!(
            emit_sequence(&id(SequenceKind::Det, 2), 3).unwrap(),
            vec![big(6), big(348), big(23656)]
        );
        assert_eq!(
            emit_sequence(&id(SequenceKind::Trace, 5), 2).unwrap(),
            vec![big(27), big(18929)]
        );
        assert_eq!(
            emit_sequence(&id(SequenceKind::Lambda2, 1), 4).unwrap(),
            vec![big(3), big(15), big(103), big(712)]
        );
        assert_eq!(
            emit_sequence(&id(SequenceKind::KFib, 3), 5).unwrap(),
            vec![big(0), big(1), big(3), big(10), big(33)]
        );
    }

    #[test]
    fn invalid_ids_rejected() {
        assert!(SequenceId::new(SequenceKind::Det, 0).is_err());
        assert!(emit_sequence(&id(SequenceKind::KFib, 1), 0).is_err());
    }

    #[test]
    fn bundled_fixtures_match_generated_sequences() {
        for accession in BUNDLED_ACCESSIONS {
            let fixture = bundled_fixture(accession).expect("fixture bundled");
            assert!(fixture.terms().len() >= 20, "{accession} has too few terms");
            let counterpart = oeis_counterpart(accession).expect("mapping exists");
            let report = check_fixture(&counterpart, &fixture).unwrap();
            assert!(report.is_match(), "{accession}: {:?}", report.first_mismatch);
            assert_eq!(report.compared, fixture.terms().len());
        }
        assert!(bundled_fixture("A999999").is_none());
        assert!(oeis_counterpart("A999999").is_none());
    }

    #[test]
    fn corrupted_fixture_reports_first_mismatch() {
        let fixture = SequenceFixture::new(
            "det-k2-corrupt",
            1,
            vec![big(6), big(348), big(23657)],
        )
        .unwrap();
        let report = check_fixture(&id(SequenceKind::Det, 2), &fixture).unwrap();
        assert!(!report.is_match());
        let mismatch = report.first_mismatch.unwrap();
        assert_eq!(mismatch.index, 3);
        assert_eq!(mismatch.expected, "23657");
        assert_eq!(mismatch.actual, "23656");
    }

    #[test]
    fn offsets_align_comparison_windows() {
        // Fixture starting above the sequence's first index.
        let fixture = SequenceFixture::new("fib-tail", 2, vec![big(1), big(2), big(3)]).unwrap();
        let report = check_fixture(&id(SequenceKind::KFib, 1), &fixture).unwrap();
        assert!(report.is_match());
        assert_eq!(report.compared, 3);

        // Fixture terms below the first index are ignored.
        let fixture =
            SequenceFixture::new("det-padded", 0, vec![big(999), big(6), big(348)]).unwrap();
        let report = check_fixture(&id(SequenceKind::Det, 2), &fixture).unwrap();
        assert!(report.is_match());
        assert_eq!(report.compared, 2);
    }

    #[test]
    fn empty_fixtures_rejected() {
        assert!(SequenceFixture::new("empty", 0, vec![]).is_err());
    }

    #[test]
    fn truncation_keeps_prefix() {
        let fixture = bundled_fixture("A000045").unwrap().truncated(10);
        assert_eq!(fixture.terms().len(), 10);
        assert_eq!(fixture.terms()[9], big(34));
    }
}
