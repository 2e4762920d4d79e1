//! JSON file formats for every value the tool reads or writes.
//!
//! One dialect serves all types. Integers appear as plain JSON numbers
//! while they are exactly representable in a double (so generic tooling
//! can read the files) and switch to decimal strings past that bound;
//! rationals are `"p/q"` strings. Parsing and serialization round-trip
//! every value exactly, except for certificate enclosure endpoints,
//! which are rendered as outward-rounded decimals so the parsed record
//! is still a valid (marginally wider) enclosure.

use std::collections::BTreeMap;

use rug::{Integer, Rational};
use serde::de::DeserializeOwned;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::certify::{CriticalSystem, IrrationalityCertificate, Verdict};
use crate::cone::{ConeDesc, Covector};
use crate::dilatation::Segment;
use crate::error::{Error, Result};
use crate::groupring::GroupPoly;
use crate::intpoly::IntPoly;
use crate::penner::{PennerSpec, PennerStep, TwistKind};
use crate::polymat::PolyMatrix;
use crate::real;

/// Largest magnitude a double-backed JSON reader keeps exact.
const DOUBLE_SAFE: u64 = (1 << 53) - 1;

/// Decimal places kept when rendering enclosure endpoints; far tighter
/// than any tolerance the certificates are compared against.
const ENCLOSURE_DECIMAL_PLACES: u32 = 40;

/// Arbitrary-precision integer with a double-safe JSON encoding.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ExactInt(pub Integer);

impl Serialize for ExactInt {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self.0.to_i64() {
            Some(v) if v.unsigned_abs() <= DOUBLE_SAFE => s.serialize_i64(v),
            _ => s.serialize_str(&self.0.to_string()),
        }
    }
}

impl<'de> Deserialize<'de> for ExactInt {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Number(i64),
            Text(String),
        }
        match Repr::deserialize(d)? {
            Repr::Number(v) => Ok(ExactInt(Integer::from(v))),
            Repr::Text(s) => Integer::from_str_radix(s.trim(), 10)
                .map(ExactInt)
                .map_err(|_| serde::de::Error::custom(format!("bad integer literal {s:?}"))),
        }
    }
}

/// Rational serialized as `"p/q"` (plain numerator when the denominator
/// is 1). Input also accepts bare integers and decimal or exponent
/// literals like `"0.25"` and `"1e-3"`, all read exactly.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ExactRational(pub Rational);

impl Serialize for ExactRational {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.0.to_string())
    }
}

impl<'de> Deserialize<'de> for ExactRational {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Number(i64),
            Text(String),
        }
        match Repr::deserialize(d)? {
            Repr::Number(v) => Ok(ExactRational(Rational::from(v))),
            Repr::Text(s) => real::parse_rational(&s)
                .map(ExactRational)
                .map_err(|e| serde::de::Error::custom(e.to_string())),
        }
    }
}

#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermJson {
    pub c: ExactInt,
    pub e: Vec<i64>,
}

#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolyJson {
    pub vars: Vec<String>,
    pub terms: Vec<TermJson>,
}

impl PolyJson {
    pub fn of(p: &GroupPoly) -> PolyJson {
        PolyJson {
            vars: p.vars().to_vec(),
            terms: p
                .terms()
                .iter()
                .map(|(e, c)| TermJson {
                    c: ExactInt(c.clone()),
                    e: e.clone(),
                })
                .collect(),
        }
    }

    pub fn value(&self) -> Result<GroupPoly> {
        GroupPoly::from_terms(
            self.vars.clone(),
            self.terms.iter().map(|t| (t.e.clone(), t.c.0.clone())),
        )
    }
}

#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixJson {
    pub vars: Vec<String>,
    /// `entries[i][j]` is the term list of the `(i, j)` entry over `vars`.
    pub entries: Vec<Vec<Vec<TermJson>>>,
}

impl MatrixJson {
    pub fn of(m: &PolyMatrix) -> MatrixJson {
        let cols = m.cols();
        MatrixJson {
            vars: m.vars().to_vec(),
            entries: m
                .entries()
                .chunks(cols)
                .map(|row| row.iter().map(|p| PolyJson::of(p).terms).collect())
                .collect(),
        }
    }

    pub fn value(&self) -> Result<PolyMatrix> {
        let rows = self
            .entries
            .iter()
            .map(|row| {
                row.iter()
                    .map(|terms| {
                        GroupPoly::from_terms(
                            self.vars.clone(),
                            terms.iter().map(|t| (t.e.clone(), t.c.0.clone())),
                        )
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        PolyMatrix::from_rows(rows)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum KindJson {
    A,
    B,
}

#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StepJson {
    pub kind: KindJson,
    pub multiplicities: Vec<i64>,
}

#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PennerJson {
    pub a_curves: usize,
    pub b_curves: usize,
    pub intersection_total: i64,
    pub generic: bool,
    pub intersection: MatrixJson,
    pub word: Vec<StepJson>,
}

impl PennerJson {
    pub fn of(spec: &PennerSpec) -> PennerJson {
        PennerJson {
            a_curves: spec.m(),
            b_curves: spec.n(),
            intersection_total: spec.r(),
            generic: spec.generic,
            intersection: MatrixJson::of(spec.intersection()),
            word: spec
                .word()
                .iter()
                .map(|step| StepJson {
                    kind: match step.kind {
                        TwistKind::A => KindJson::A,
                        TwistKind::B => KindJson::B,
                    },
                    multiplicities: step.multiplicities.clone(),
                })
                .collect(),
        }
    }

    pub fn value(&self) -> Result<PennerSpec> {
        let word = self
            .word
            .iter()
            .map(|step| PennerStep {
                kind: match step.kind {
                    KindJson::A => TwistKind::A,
                    KindJson::B => TwistKind::B,
                },
                multiplicities: step.multiplicities.clone(),
            })
            .collect();
        PennerSpec::new(
            self.a_curves,
            self.b_curves,
            self.intersection.value()?,
            word,
            self.intersection_total,
            self.generic,
        )
    }
}

#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConeJson {
    pub dominant: Vec<i64>,
    pub inequalities: Vec<Vec<i64>>,
}

impl ConeJson {
    pub fn of(cone: &ConeDesc) -> ConeJson {
        ConeJson {
            dominant: cone.dominant().clone(),
            inequalities: cone.inequalities().iter().map(|w| w.0.clone()).collect(),
        }
    }

    pub fn value(&self) -> ConeDesc {
        ConeDesc::new(
            self.dominant.clone(),
            self.inequalities.iter().cloned().map(Covector).collect(),
        )
    }
}

#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SegmentJson {
    pub start: Vec<ExactRational>,
    pub end: Vec<ExactRational>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub covector: Option<Vec<i64>>,
}

impl SegmentJson {
    pub fn of(seg: &Segment) -> SegmentJson {
        SegmentJson {
            start: seg.start.iter().cloned().map(ExactRational).collect(),
            end: seg.end.iter().cloned().map(ExactRational).collect(),
            covector: seg.covector.as_ref().map(|w| w.0.clone()),
        }
    }

    pub fn value(&self) -> Result<Segment> {
        if self.start.len() != self.end.len() {
            return Err(Error::DimensionMismatch {
                expected: self.start.len(),
                got: self.end.len(),
            });
        }
        if let Some(w) = &self.covector {
            if w.len() != self.start.len() {
                return Err(Error::DimensionMismatch {
                    expected: self.start.len(),
                    got: w.len(),
                });
            }
        }
        Ok(Segment {
            start: self.start.iter().map(|q| q.0.clone()).collect(),
            end: self.end.iter().map(|q| q.0.clone()).collect(),
            covector: self.covector.clone().map(Covector),
        })
    }
}

#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SystemJson {
    pub value: PolyJson,
    pub derivative: PolyJson,
    pub x_exponent: ExactRational,
    pub y_exponent_base: ExactRational,
    pub y_exponent_slope: ExactRational,
}

impl SystemJson {
    pub fn of(system: &CriticalSystem) -> SystemJson {
        SystemJson {
            value: PolyJson::of(&system.value),
            derivative: PolyJson::of(&system.derivative),
            x_exponent: ExactRational(system.x_exponent.clone()),
            y_exponent_base: ExactRational(system.y_exponent_base.clone()),
            y_exponent_slope: ExactRational(system.y_exponent_slope.clone()),
        }
    }

    pub fn value(&self) -> Result<CriticalSystem> {
        Ok(CriticalSystem {
            value: self.value.value()?,
            derivative: self.derivative.value()?,
            x_exponent: self.x_exponent.0.clone(),
            y_exponent_base: self.y_exponent_base.0.clone(),
            y_exponent_slope: self.y_exponent_slope.0.clone(),
        })
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum VerdictJson {
    Irrational,
    Inconclusive,
}

#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CertificateJson {
    pub system: SystemJson,
    /// Ascending coefficients of the eliminant of Y + 1/Y.
    pub eliminant: Vec<ExactInt>,
    /// Ascending coefficients of the palindromic annihilator of Y.
    pub y_annihilator: Vec<ExactInt>,
    pub degree_bound: u64,
    pub scaling: ExactInt,
    pub denominator_bound: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub minimality_prime: Option<u64>,
    /// Enclosure endpoints as outward-rounded decimal strings.
    pub x_enclosure: [String; 2],
    pub y_enclosure: [String; 2],
    pub ratio_enclosure: [String; 2],
    pub excluded: bool,
    pub verdict: VerdictJson,
    pub hypotheses: String,
}

fn enclosure_text(e: &(Rational, Rational)) -> [String; 2] {
    [
        real::decimal_of_rational(&e.0, ENCLOSURE_DECIMAL_PLACES, false),
        real::decimal_of_rational(&e.1, ENCLOSURE_DECIMAL_PLACES, true),
    ]
}

fn enclosure_value(e: &[String; 2]) -> Result<(Rational, Rational)> {
    Ok((real::parse_rational(&e[0])?, real::parse_rational(&e[1])?))
}

fn coeffs_of(p: &IntPoly) -> Vec<ExactInt> {
    p.coeffs().iter().cloned().map(ExactInt).collect()
}

fn poly_of_coeffs(c: &[ExactInt]) -> IntPoly {
    IntPoly::new(c.iter().map(|v| v.0.clone()).collect())
}

impl CertificateJson {
    pub fn of(cert: &IrrationalityCertificate) -> CertificateJson {
        CertificateJson {
            system: SystemJson::of(&cert.system),
            eliminant: coeffs_of(&cert.eliminant),
            y_annihilator: coeffs_of(&cert.y_annihilator),
            degree_bound: cert.degree_bound,
            scaling: ExactInt(cert.scaling.clone()),
            denominator_bound: cert.denominator_bound,
            minimality_prime: cert.minimality_prime,
            x_enclosure: enclosure_text(&cert.x_enclosure),
            y_enclosure: enclosure_text(&cert.y_enclosure),
            ratio_enclosure: enclosure_text(&cert.ratio_enclosure),
            excluded: cert.excluded,
            verdict: match cert.verdict {
                Verdict::Irrational => VerdictJson::Irrational,
                Verdict::Inconclusive => VerdictJson::Inconclusive,
            },
            hypotheses: cert.hypotheses.clone(),
        }
    }

    pub fn value(&self) -> Result<IrrationalityCertificate> {
        Ok(IrrationalityCertificate {
            system: self.system.value()?,
            eliminant: poly_of_coeffs(&self.eliminant),
            y_annihilator: poly_of_coeffs(&self.y_annihilator),
            degree_bound: self.degree_bound,
            scaling: self.scaling.0.clone(),
            denominator_bound: self.denominator_bound,
            minimality_prime: self.minimality_prime,
            x_enclosure: enclosure_value(&self.x_enclosure)?,
            y_enclosure: enclosure_value(&self.y_enclosure)?,
            ratio_enclosure: enclosure_value(&self.ratio_enclosure)?,
            excluded: self.excluded,
            verdict: match self.verdict {
                VerdictJson::Irrational => Verdict::Irrational,
                VerdictJson::Inconclusive => Verdict::Inconclusive,
            },
            hypotheses: self.hypotheses.clone(),
        })
    }
}

/// Top-level input file: named values grouped by kind. Every section is
/// optional; JSON object keys keep the names unique.
#[derive(Clone, PartialEq, Debug, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WorkspaceJson {
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub polynomials: BTreeMap<String, PolyJson>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub matrices: BTreeMap<String, MatrixJson>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub penner: BTreeMap<String, PennerJson>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub covectors: BTreeMap<String, Vec<i64>>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub cones: BTreeMap<String, ConeJson>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub segments: BTreeMap<String, SegmentJson>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub certificates: BTreeMap<String, CertificateJson>,
}

/// Workspace with every entry converted to its exact domain type up
/// front, so name lookups during command execution cannot hit a
/// conversion error.
#[derive(Clone, Debug, Default)]
pub struct Workspace {
    pub polynomials: BTreeMap<String, GroupPoly>,
    pub matrices: BTreeMap<String, PolyMatrix>,
    pub penner: BTreeMap<String, PennerSpec>,
    pub covectors: BTreeMap<String, Covector>,
    pub cones: BTreeMap<String, ConeDesc>,
    pub segments: BTreeMap<String, Segment>,
    pub certificates: BTreeMap<String, IrrationalityCertificate>,
}

fn convert_section<J, T>(
    section: &BTreeMap<String, J>,
    convert: impl Fn(&J) -> Result<T>,
) -> Result<BTreeMap<String, T>> {
    section
        .iter()
        .map(|(name, j)| Ok((name.clone(), convert(j)?)))
        .collect()
}

fn missing(kind: &'static str, name: &str) -> Error {
    Error::NameMissing {
        kind,
        name: name.to_string(),
    }
}

impl Workspace {
    pub fn parse(text: &str) -> Result<Workspace> {
        Workspace::from_json(&from_text(text)?)
    }

    pub fn from_json(j: &WorkspaceJson) -> Result<Workspace> {
        Ok(Workspace {
            polynomials: convert_section(&j.polynomials, PolyJson::value)?,
            matrices: convert_section(&j.matrices, MatrixJson::value)?,
            penner: convert_section(&j.penner, PennerJson::value)?,
            covectors: convert_section(&j.covectors, |w| Ok(Covector(w.clone())))?,
            cones: convert_section(&j.cones, |c| Ok(c.value()))?,
            segments: convert_section(&j.segments, SegmentJson::value)?,
            certificates: convert_section(&j.certificates, CertificateJson::value)?,
        })
    }

    pub fn poly(&self, name: &str) -> Result<&GroupPoly> {
        self.polynomials.get(name).ok_or_else(|| missing("polynomial", name))
    }

    pub fn matrix(&self, name: &str) -> Result<&PolyMatrix> {
        self.matrices.get(name).ok_or_else(|| missing("matrix", name))
    }

    pub fn penner_spec(&self, name: &str) -> Result<&PennerSpec> {
        self.penner.get(name).ok_or_else(|| missing("penner spec", name))
    }

    pub fn covector(&self, name: &str) -> Result<&Covector> {
        self.covectors.get(name).ok_or_else(|| missing("covector", name))
    }

    pub fn cone(&self, name: &str) -> Result<&ConeDesc> {
        self.cones.get(name).ok_or_else(|| missing("cone", name))
    }

    pub fn segment(&self, name: &str) -> Result<&Segment> {
        self.segments.get(name).ok_or_else(|| missing("segment", name))
    }
}

/// Deserializes JSON text, translating syntax errors to positions.
fn from_text<T: DeserializeOwned>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| {
        // serde_json appends " at line L column C"; the position moves
        // into structured fields instead
        let full = e.to_string();
        let message = full.split(" at line ").next().unwrap_or(&full).to_string();
        Error::Parse {
            line: e.line(),
            column: e.column(),
            message,
        }
    })
}

/// Pretty-printed JSON with a trailing newline, ready to write to a file.
pub fn to_text<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("plain data serializes");
    s.push('\n');
    s
}

pub fn parse_poly(text: &str) -> Result<GroupPoly> {
    from_text::<PolyJson>(text)?.value()
}

pub fn parse_matrix(text: &str) -> Result<PolyMatrix> {
    from_text::<MatrixJson>(text)?.value()
}

pub fn parse_penner(text: &str) -> Result<PennerSpec> {
    from_text::<PennerJson>(text)?.value()
}

pub fn parse_covector(text: &str) -> Result<Covector> {
    Ok(Covector(from_text::<Vec<i64>>(text)?))
}

pub fn parse_cone(text: &str) -> Result<ConeDesc> {
    Ok(from_text::<ConeJson>(text)?.value())
}

pub fn parse_segment(text: &str) -> Result<Segment> {
    from_text::<SegmentJson>(text)?.value()
}

pub fn parse_certificate(text: &str) -> Result<IrrationalityCertificate> {
    from_text::<CertificateJson>(text)?.value()
}
