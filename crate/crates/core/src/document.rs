//! JSON form of a sign pattern with explicit chord labels.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ngon::{canonicalize, Polygon};
use crate::urelations::SignPattern;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PatternDocument {
    pub n: usize,
    pub chords: Vec<[usize; 2]>,
    pub signs: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ordering: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub trace: Option<Vec<String>>,
}

impl PatternDocument {
    pub fn new(poly: &Polygon, s: &SignPattern) -> PatternDocument {
        PatternDocument {
            n: poly.n(),
            chords: poly.chords().iter().map(|c| [c.i, c.j]).collect(),
            signs: s.to_string(),
            ordering: None,
            trace: None,
        }
    }

    /// Checks the chord list and sign string against the canonical layout.
    pub fn pattern(&self) -> Result<(Polygon, SignPattern)> {
        let poly = Polygon::new(self.n)?;
        let expected: Vec<[usize; 2]> = poly.chords().iter().map(|c| [c.i, c.j]).collect();
        if self.chords != expected {
            return Err(Error::Document(format!("chords are not the canonical list for n = {}", self.n)));
        }
        let s = SignPattern::parse(self.n, &self.signs)?;
        if let Some(word) = &self.ordering {
            canonicalize(word)?;
            if word.len() != self.n {
                return Err(Error::SizeMismatch { expected: self.n, got: word.len() });
            }
        }
        Ok((poly, s))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes")
    }

    pub fn from_json(text: &str) -> Result<PatternDocument> {
        serde_json::from_str(text).map_err(|e| Error::Document(e.to_string()))
    }
}
