//! OEIS b-file parsing and a small fetch-with-cache client.
//!
//! A b-file is plain text with one `index value` pair per line; `#` starts a
//! comment. The client resolves terms from a local cache directory first and
//! only then from the network, storing fetched bodies byte-for-byte via a
//! write-to-temporary-then-rename so concurrent fetches cannot corrupt the
//! cache.
//!
//! Environment knobs (read only by [`OeisClient::from_env`] and the
//! convenience [`fetch_oeis`]):
//! - `OEIS_BASE_URL`: override the b-file URL root (default `https://oeis.org`)
//! - `OEIS_CACHE_DIR`: override the cache directory (default: the platform
//!   cache directory under `fiblucas-matrix/oeis`)
//! - `NO_NETWORK=1`: force offline mode; a cold cache then errors.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use num_bigint::BigInt;

use crate::catalog::SequenceFixture;
use crate::error::{Error, Result};

/// Parses b-file text into `(index, value)` pairs.
///
/// Accepts leading/trailing whitespace and CRLF line endings; skips blank
/// lines and `#` comments. Indices must increase by exactly one. Errors
/// carry the offending 1-based line number.
pub fn parse_bfile(text: &str) -> Result<Vec<(i64, BigInt)>> {
    let mut entries: Vec<(i64, BigInt)> = Vec::new();
    for (line_no, raw) in text.lines().enumerate() {
        let line_no = line_no + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut tokens = line.split_whitespace();
        let (Some(index_tok), Some(value_tok), None) =
            (tokens.next(), tokens.next(), tokens.next())
        else {
            return Err(Error::BfileParse {
                line: line_no,
                msg: format!("expected 'index value', got {line:?}"),
            });
        };
        let index: i64 = index_tok.parse().map_err(|_| Error::BfileParse {
            line: line_no,
            msg: format!("bad index {index_tok:?}"),
        })?;
        let value: BigInt = value_tok.parse().map_err(|_| Error::BfileParse {
            line: line_no,
            msg: format!("bad value {value_tok:?}"),
        })?;
        if let Some((prev, _)) = entries.last() {
            if index != prev + 1 {
                return Err(Error::BfileParse {
                    line: line_no,
                    msg: format!("index {index} does not follow {prev}"),
                });
            }
        }
        entries.push((index, value));
    }
    if entries.is_empty() {
        return Err(Error::BfileParse { line: 1, msg: "no terms found".into() });
    }
    Ok(entries)
}

/// Checks the `A` + six digits accession pattern.
pub fn validate_accession(accession: &str) -> Result<()> {
    let rest = accession.strip_prefix('A').ok_or_else(|| bad_accession(accession))?;
    if rest.len() != 6 || !rest.bytes().all(|b| b.is_ascii_digit()) {
        return Err(bad_accession(accession));
    }
    Ok(())
}

fn bad_accession(accession: &str) -> Error {
    Error::BadAccession(accession.to_string())
}

/// Fetches OEIS terms with an on-disk cache.
#[derive(Clone, Debug)]
pub struct OeisClient {
    base_url: String,
    cache_dir: PathBuf,
    offline: bool,
}

impl OeisClient {
    pub fn new(base_url: impl Into<String>, cache_dir: impl Into<PathBuf>, offline: bool) -> Self {
        OeisClient {
            base_url: base_url.into().trim_end_matches('/').to_string(),
            cache_dir: cache_dir.into(),
            offline,
        }
    }

    /// Builds a client from `OEIS_BASE_URL`, `OEIS_CACHE_DIR` and
    /// `NO_NETWORK`.
    pub fn from_env() -> Self {
        let base_url =
            std::env::var("OEIS_BASE_URL").unwrap_or_else(|_| "https://oeis.org".to_string());
        let cache_dir = std::env::var_os("OEIS_CACHE_DIR").map(PathBuf::from).unwrap_or_else(|| {
            dirs::cache_dir()
                .unwrap_or_else(std::env::temp_dir)
                .join("fiblucas-matrix")
                .join("oeis")
        });
        let offline = matches!(
            std::env::var("NO_NETWORK").as_deref(),
            Ok("1") | Ok("true") | Ok("TRUE") | Ok("yes")
        );
        Self::new(base_url, cache_dir, offline)
    }

    pub fn offline(&self) -> bool {
        self.offline
    }

    pub fn base_url(&self) -> &str {
        &self.base_url
    }

    pub fn cache_dir(&self) -> &Path {
        &self.cache_dir
    }

    /// Cache file for an accession: `<cache_dir>/<accession>.bfile`.
    pub fn cache_path(&self, accession: &str) -> PathBuf {
        self.cache_dir.join(format!("{accession}.bfile"))
    }

    /// Up to `max_terms` terms for `accession`. A cache hit bypasses the
    /// network entirely; offline mode with a cold cache is an error.
    pub fn fetch(&self, accession: &str, max_terms: usize) -> Result<SequenceFixture> {
        validate_accession(accession)?;
        if max_terms == 0 {
            return Err(Error::InvalidParameter("max_terms must be >= 1".into()));
        }
        let path = self.cache_path(accession);
        if path.exists() {
            let text = fs::read_to_string(&path)?;
            return Ok(SequenceFixture::from_bfile(accession, &text)?.truncated(max_terms));
        }
        if self.offline {
            return Err(Error::Offline(format!(
                "no cached terms for {accession} and network access is disabled"
            )));
        }
        let body = self.download(accession)?;
        // Parse before caching so a malformed body is never persisted.
        let fixture = SequenceFixture::from_bfile(accession, &body)?;
        self.store(&path, &body)?;
        Ok(fixture.truncated(max_terms))
    }

    fn download(&self, accession: &str) -> Result<String> {
        let digits = &accession[1..];
        let url = format!("{}/{}/b{}.txt", self.base_url, accession, digits);
        match ureq::get(&url).call() {
            Ok(mut response) => response
                .body_mut()
                .read_to_string()
                .map_err(|e| Error::Http(format!("reading {url}: {e}"))),
            Err(ureq::Error::StatusCode(404)) => Err(Error::NotFound(accession.to_string())),
            Err(e) => Err(Error::Http(format!("fetching {url}: {e}"))),
        }
    }

    fn store(&self, path: &Path, body: &str) -> Result<()> {
        fs::create_dir_all(&self.cache_dir)?;
        let mut tmp = tempfile::NamedTempFile::new_in(&self.cache_dir)?;
        tmp.write_all(body.as_bytes())?;
        tmp.persist(path).map_err(|e| Error::Io(e.error))?;
        Ok(())
    }
}

/// One-shot fetch through an environment-configured client.
pub fn fetch_oeis(accession: &str, max_terms: usize) -> Result<SequenceFixture> {
    OeisClient::from_env().fetch(accession, max_terms)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_comments_whitespace_and_crlf() {
        let text = "# header\r\n0 0\r\n 1 1 \n\n2 1\n3 2\r\n";
        let entries = parse_bfile(text).unwrap();
        assert_eq!(entries.len(), 4);
        assert_eq!(entries[0], (0, BigInt::from(0)));
        assert_eq!(entries[3], (3, BigInt::from(2)));
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let err = parse_bfile("0 0\n1 x\n").unwrap_err();
        assert!(matches!(err, Error::BfileParse { line: 2, .. }), "{err}");

        let err = parse_bfile("0 0\n1 1 1\n").unwrap_err();
        assert!(matches!(err, Error::BfileParse { line: 2, .. }), "{err}");

        let err = parse_bfile("0 0\n5 1\n").unwrap_err();
        assert!(matches!(err, Error::BfileParse { line: 2, .. }), "{err}");

        let err = parse_bfile("# only comments\n").unwrap_err();
        assert!(matches!(err, Error::BfileParse { line: 1, .. }), "{err}");
    }

    #[test]
    fn negative_offsets_parse() {
        let entries = parse_bfile("-2 5\n-1 3\n0 1\n").unwrap();
        assert_eq!(entries[0], (-2, BigInt::from(5)));
    }

    #[test]
    fn accession_pattern() {
        assert!(validate_accession("A000045").is_ok());
        for bad in ["A00", "B000045", "A0000456", "A00004x", "000045", ""] {
            assert!(
                matches!(validate_accession(bad), Err(Error::BadAccession(_))),
                "{bad:?} should be rejected"
            );
        }
    }

    #[test]
    fn offline_cold_cache_errors() {
        let dir = tempfile::tempdir().unwrap();
        let client = OeisClient::new("http://unused.invalid", dir.path(), true);
        let err = client.fetch("A000045", 5).unwrap_err();
        assert!(matches!(err, Error::Offline(_)), "{err}");
    }

    #[test]
    fn offline_warm_cache_hits() {
        let dir = tempfile::tempdir().unwrap();
        fs::write(dir.path().join("A000045.bfile"), "0 0\n1 1\n2 1\n3 2\n4 3\n5 5\n").unwrap();
        let client = OeisClient::new("http://unused.invalid", dir.path(), true);
        let fixture = client.fetch("A000045", 4).unwrap();
        assert_eq!(fixture.offset(), 0);
        assert_eq!(fixture.terms().len(), 4);
        assert_eq!(fixture.terms()[3], BigInt::from(2));
    }

    #[test]
    fn zero_max_terms_rejected() {
        let dir = tempfile::tempdir().unwrap();
        let client = OeisClient::new("http://unused.invalid", dir.path(), true);
        assert!(matches!(client.fetch("A000045", 0), Err(Error::InvalidParameter(_))));
    }
}
