//! JSON interchange for barcodes, graded dimensions and domain specs.
//!
//! A barcode is
//! `{"convention":"left-closed","bars":[{"lo":{"v":"0","closed":true},"hi":{"v":"2","closed":false},"deg":0,"mult":1}]}`.
//! Values are strings (`"3/2"`, `"-inf"`, `"+inf"`, also `"2pi"`) or
//! `{"pi":"1/2","plus":"3"}` for `π/2 + 3`.

use serde::{Deserialize, Serialize, Serializer};
use serde_json::Value;
use tamarkin_core::symplectic::DomainSpec;
use tamarkin_core::value::{parse_rational, BigRational};
use tamarkin_core::{Convention, Endpoint, Ext, GradedBar, GradedBarcode, HomSpace, Interval, PiRational};

use crate::error::{Failure, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ValueJson {
    Plain(String),
    Symbolic { pi: String, plus: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EndJson {
    pub v: ValueJson,
    pub closed: bool,
}

fn one() -> u64 {
    1
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BarJson {
    pub lo: EndJson,
    pub hi: EndJson,
    pub deg: i64,
    #[serde(default = "one")]
    pub mult: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BarcodeJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub convention: Option<String>,
    pub bars: Vec<BarJson>,
}

fn rational_text(r: &BigRational) -> String {
    PiRational::rational(r.clone()).to_string()
}

pub fn value_to_json(v: &Ext) -> ValueJson {
    match v {
        Ext::NegInf => ValueJson::Plain("-inf".into()),
        Ext::PosInf => ValueJson::Plain("+inf".into()),
        Ext::Fin(p) if p.is_rational() => ValueJson::Plain(rational_text(&p.rat)),
        Ext::Fin(p) => ValueJson::Symbolic {
            pi: rational_text(&p.pi),
            plus: rational_text(&p.rat),
        },
    }
}

pub fn value_from_json(v: &ValueJson) -> Result<Ext> {
    match v {
        ValueJson::Plain(s) => parse_ext(s),
        ValueJson::Symbolic { pi, plus } => {
            let pi = parse_rational(pi).map_err(Failure::from)?;
            let plus = parse_rational(plus).map_err(Failure::from)?;
            Ok(Ext::Fin(PiRational::new(pi, plus)))
        }
    }
}

/// A finite value: `"3/2"`, `"0.25"`, `"3pi"`, `"1/2pi+1"`.
pub fn parse_value(s: &str) -> Result<PiRational> {
    s.parse::<PiRational>()
        .map_err(|e| Failure::input(format!("{s:?} is not a value ({e})")))
}

pub fn parse_ext(s: &str) -> Result<Ext> {
    match s.trim() {
        "-inf" | "-∞" => Ok(Ext::NegInf),
        "+inf" | "inf" | "+∞" | "∞" => Ok(Ext::PosInf),
        t => parse_value(t).map(Ext::Fin),
    }
}

pub fn parse_radius(s: &str) -> Result<BigRational> {
    parse_rational(s).map_err(|e| Failure::input(format!("{s:?} is not a rational ({e})")))
}

fn end_from_json(e: &EndJson) -> Result<Endpoint> {
    let v = value_from_json(&e.v)?;
    if e.closed && !v.is_finite() {
        return Err(Failure::input(format!("infinite endpoint {v} cannot be closed")));
    }
    Ok(Endpoint::new(v, e.closed))
}

fn end_to_json(e: &Endpoint) -> EndJson {
    EndJson {
        v: value_to_json(e.value()),
        closed: e.is_closed(),
    }
}

pub fn barcode_from_json(b: &BarcodeJson) -> Result<GradedBarcode> {
    let mut bars = Vec::with_capacity(b.bars.len());
    for (k, bar) in b.bars.iter().enumerate() {
        if bar.mult == 0 {
            return Err(Failure::input(format!("bar {k} has multiplicity 0")));
        }
        let i = Interval::new(end_from_json(&bar.lo)?, end_from_json(&bar.hi)?)
            .map_err(|e| Failure::input(format!("bar {k}: {e}")))?;
        bars.push(GradedBar::with_multiplicity(i, bar.deg, bar.mult));
    }
    let out = GradedBarcode::new(bars);
    if let Some(c) = &b.convention {
        let declared = Convention::parse(c).map_err(Failure::from)?;
        if !out.is_empty() && declared != out.convention() {
            return Err(Failure::input(format!(
                "declared convention {c} but bars are {}",
                out.convention().as_str()
            )));
        }
    }
    Ok(out)
}

pub fn barcode_to_json(b: &GradedBarcode) -> BarcodeJson {
    BarcodeJson {
        convention: Some(b.convention().as_str().into()),
        bars: b
            .bars()
            .iter()
            .map(|bar| BarJson {
                lo: end_to_json(bar.interval.lo()),
                hi: end_to_json(bar.interval.hi()),
                deg: bar.degree,
                mult: bar.multiplicity,
            })
            .collect(),
    }
}

pub fn parse_barcode(text: &str) -> Result<GradedBarcode> {
    let raw: BarcodeJson =
        serde_json::from_str(text).map_err(|e| Failure::input(format!("barcode JSON: {e}")))?;
    barcode_from_json(&raw)
}

pub fn emit_barcode(b: &GradedBarcode) -> String {
    to_text(&barcode_to_json(b))
}

/// Pretty JSON with a trailing newline.
pub fn to_text<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

/// `{"dims":{"0":1,"1":2}}`, degrees in increasing order.
pub fn homspace_json(h: &HomSpace) -> Value {
    struct Dims<'a>(&'a HomSpace);
    impl Serialize for Dims<'_> {
        fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
            s.collect_map(self.0.iter().map(|(d, n)| (d.to_string(), n)))
        }
    }
    serde_json::json!({ "dims": Dims(h) })
}

pub fn ext_json(v: &Ext) -> Value {
    serde_json::to_value(value_to_json(v)).expect("serializable")
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct BallJson {
    n: u32,
    r: String,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct EllipsoidJson {
    n: u32,
    r: String,
    #[serde(rename = "R")]
    big_r: String,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ScaledJson {
    c: String,
    inner: BallJson,
}

#[derive(Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
enum DomainJson {
    Ball(BallJson),
    Ellipsoid(EllipsoidJson),
    ScaledBall(ScaledJson),
}

/// `{"ball":{"n":2,"r":"1"}}`, `{"ellipsoid":{"n":2,"r":"1","R":"10"}}` or
/// `{"scaled_ball":{"c":"1/2","inner":{"n":2,"r":"1"}}}`.
pub fn parse_domain(text: &str) -> Result<DomainSpec> {
    let raw: DomainJson =
        serde_json::from_str(text).map_err(|e| Failure::input(format!("domain JSON: {e}")))?;
    let d = match raw {
        DomainJson::Ball(b) => DomainSpec::Ball { n: b.n, r: parse_radius(&b.r)? },
        DomainJson::Ellipsoid(e) => DomainSpec::Ellipsoid {
            n: e.n,
            r: parse_radius(&e.r)?,
            big_r: parse_radius(&e.big_r)?,
        },
        DomainJson::ScaledBall(s) => DomainSpec::ScaledBall {
            c: parse_radius(&s.c)?,
            n: s.inner.n,
            r: parse_radius(&s.inner.r)?,
        },
    };
    d.validate()?;
    Ok(d)
}
