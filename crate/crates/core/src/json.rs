//! JSON forms of the element types. Terms are emitted in normal-form order,
//! so encoding is deterministic and decoding then re-encoding is the
//! identity.

use serde_json::{json, Map, Value};

use crate::arith::{PosRational, QmodZ, Ring};
use crate::bc::{BcElem, BcKey};
use crate::char_p::{CpElem, CpKey, CpMatrix, PAdicFrac, TpElem};
use crate::error::{Error, Result};
use crate::group_ring::GroupRingElem;
use crate::hecke::HeckeElem;

/// Any element the encoder knows about.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Element {
    GroupRing(GroupRingElem),
    Bc(BcElem),
    Hecke(HeckeElem),
    Tp(TpElem),
    Cp(CpElem),
}

fn bad(what: &'static str, v: &Value) -> Error {
    Error::parse(what, v.to_string())
}

fn field<'a>(v: &'a Value, key: &str, what: &'static str) -> Result<&'a Value> {
    v.get(key).ok_or_else(|| bad(what, v))
}

fn str_field<'a>(v: &'a Value, key: &str, what: &'static str) -> Result<&'a str> {
    field(v, key, what)?.as_str().ok_or_else(|| bad(what, v))
}

fn ring_of(v: &Value) -> Result<Ring> {
    str_field(v, "ring", "element")?.parse()
}

fn terms_of(v: &Value) -> Result<&Vec<Value>> {
    field(v, "terms", "element")?
        .as_array()
        .ok_or_else(|| bad("element", v))
}

fn p_of(v: &Value) -> Result<u64> {
    field(v, "p", "element")?
        .as_u64()
        .ok_or_else(|| bad("element", v))
}

pub fn group_ring_to_json(x: &GroupRingElem) -> Value {
    let ring = x.ring();
    let terms: Vec<Value> = x
        .terms()
        .map(|(r, c)| json!({"r": r.to_string(), "c": ring.coeff_to_json(c)}))
        .collect();
    json!({"ring": ring.tag(), "terms": terms})
}

pub fn group_ring_from_json(v: &Value) -> Result<GroupRingElem> {
    let ring = ring_of(v)?;
    let mut terms = Vec::new();
    for t in terms_of(v)? {
        let r: QmodZ = str_field(t, "r", "term")?.parse()?;
        terms.push((r, ring.coeff_from_json(field(t, "c", "term")?)?));
    }
    Ok(GroupRingElem::from_terms(&ring, terms))
}

fn bc_terms_json(x: &BcElem) -> Vec<Value> {
    let ring = x.ring();
    x.terms()
        .map(|(k, c)| {
            json!({"r": k.r.to_string(), "deg": k.deg.to_string(), "c": ring.coeff_to_json(c)})
        })
        .collect()
}

fn bc_terms_from_json(v: &Value, ring: &Ring) -> Result<Vec<(BcKey, crate::arith::Coeff)>> {
    let mut terms = Vec::new();
    for t in terms_of(v)? {
        let r: QmodZ = str_field(t, "r", "term")?.parse()?;
        let deg: PosRational = match t.get("deg") {
            Some(d) => d.as_str().ok_or_else(|| bad("term", t))?.parse()?,
            None => PosRational::one(),
        };
        terms.push((BcKey::new(r, deg), ring.coeff_from_json(field(t, "c", "term")?)?));
    }
    Ok(terms)
}

pub fn bc_to_json(x: &BcElem) -> Value {
    json!({"ring": x.ring().tag(), "terms": bc_terms_json(x)})
}

pub fn bc_from_json(v: &Value) -> Result<BcElem> {
    let ring = ring_of(v)?;
    Ok(BcElem::from_terms(&ring, bc_terms_from_json(v, &ring)?))
}

pub fn hecke_to_json(x: &HeckeElem) -> Value {
    let inner = x.phi();
    json!({"ring": inner.ring().tag(), "basis": "nu", "terms": bc_terms_json(&inner)})
}

pub fn hecke_from_json(v: &Value) -> Result<HeckeElem> {
    Ok(HeckeElem::phi_inv(&bc_from_json(v)?))
}

pub fn tp_to_json(x: &TpElem) -> Value {
    let ring = x.ring();
    let terms: Vec<Value> = x
        .terms()
        .map(|(a, c)| json!({"a": a.to_string(), "c": ring.coeff_to_json(c)}))
        .collect();
    json!({"ring": ring.tag(), "p": x.p(), "terms": terms})
}

pub fn tp_from_json(v: &Value) -> Result<TpElem> {
    let ring = ring_of(v)?;
    let p = p_of(v)?;
    let mut terms = Vec::new();
    for t in terms_of(v)? {
        let a = PAdicFrac::parse(str_field(t, "a", "term")?, p)?;
        terms.push((a, ring.coeff_from_json(field(t, "c", "term")?)?));
    }
    TpElem::from_terms(&ring, p, terms)
}

pub fn cp_to_json(x: &CpElem) -> Value {
    let ring = x.ring();
    let terms: Vec<Value> = x
        .terms()
        .map(|(k, c)| json!({"k": k.k, "a": k.a.to_string(), "c": ring.coeff_to_json(c)}))
        .collect();
    json!({"ring": ring.tag(), "p": x.p(), "terms": terms})
}

pub fn cp_from_json(v: &Value) -> Result<CpElem> {
    let ring = ring_of(v)?;
    let p = p_of(v)?;
    let mut terms = Vec::new();
    for t in terms_of(v)? {
        let k = field(t, "k", "term")?.as_i64().ok_or_else(|| bad("term", t))?;
        let a = PAdicFrac::parse(str_field(t, "a", "term")?, p)?;
        terms.push((CpKey::new(k, a), ring.coeff_from_json(field(t, "c", "term")?)?));
    }
    CpElem::from_terms(&ring, p, terms)
}

pub fn matrix_to_json(m: &CpMatrix) -> Value {
    let rows: Vec<Value> = m
        .rows
        .iter()
        .map(|(a, entries)| {
            let entries: Vec<Value> = entries
                .iter()
                .map(|(b, c)| json!({"b": b.to_string(), "c": m.ring.coeff_to_json(c)}))
                .collect();
            json!({"a": a.to_string(), "entries": entries})
        })
        .collect();
    json!({"p": m.p, "level": m.level, "rows": rows})
}

impl Element {
    pub fn to_json(&self) -> Value {
        match self {
            Element::GroupRing(x) => group_ring_to_json(x),
            Element::Bc(x) => bc_to_json(x),
            Element::Hecke(x) => hecke_to_json(x),
            Element::Tp(x) => tp_to_json(x),
            Element::Cp(x) => cp_to_json(x),
        }
    }

    /// Picks the element type from the shape: a `"p"` field means a
    /// characteristic-p element (crossed product when any term carries
    /// `"k"`, or when there are no terms), `"basis": "nu"` a ν-presented
    /// one, and `"deg"` fields a crossed-product one.
    pub fn from_json(v: &Value) -> Result<Element> {
        let obj: &Map<String, Value> = v.as_object().ok_or_else(|| bad("element", v))?;
        let terms = terms_of(v)?;
        if obj.contains_key("p") {
            let cp = terms.is_empty() || terms.iter().any(|t| t.get("k").is_some());
            return Ok(if cp {
                Element::Cp(cp_from_json(v)?)
            } else {
                Element::Tp(tp_from_json(v)?)
            });
        }
        match obj.get("basis").and_then(Value::as_str) {
            Some("nu") => return Ok(Element::Hecke(hecke_from_json(v)?)),
            Some("mu") | None => {}
            Some(_) => return Err(bad("element", v)),
        }
        let has_deg = terms.iter().any(|t| t.get("deg").is_some());
        if has_deg || terms.is_empty() || obj.contains_key("basis") {
            Ok(Element::Bc(bc_from_json(v)?))
        } else {
            Ok(Element::GroupRing(group_ring_from_json(v)?))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_ring_form() {
        let q = Ring::Rationals;
        let x = GroupRingElem::pi(&q, 2).unwrap();
        let v = group_ring_to_json(&x);
        assert_eq!(
            v,
            json!({"ring": "q", "terms": [{"r": "0/1", "c": "1/2"}, {"r": "1/2", "c": "1/2"}]})
        );
        assert_eq!(group_ring_from_json(&v).unwrap(), x);
        assert_eq!(Element::from_json(&v).unwrap(), Element::GroupRing(x));
    }

    #[test]
    fn bc_and_hecke_forms() {
        let z = Ring::Integers;
        let x = BcElem::monomial(&z, 2u32, QmodZ::of(1, 3), 3u32, z.from_i64(-5)).unwrap();
        let v = bc_to_json(&x);
        assert_eq!(v["terms"][0]["deg"], "2/3");
        assert_eq!(v["terms"][0]["c"], "-5");
        assert_eq!(Element::from_json(&v).unwrap(), Element::Bc(x.clone()));
        let h = HeckeElem::phi_inv(&x);
        let hv = hecke_to_json(&h);
        assert_eq!(hv["basis"], "nu");
        assert_eq!(Element::from_json(&hv).unwrap(), Element::Hecke(h));
    }

    #[test]
    fn char_p_forms() {
        let f3 = Ring::PrimeField(3);
        let a = PAdicFrac::new(2u32, 3, 2).unwrap();
        let t = TpElem::delta(&f3, 3, a.clone()).unwrap().scale(&f3.from_i64(2));
        assert_eq!(Element::from_json(&tp_to_json(&t)).unwrap(), Element::Tp(t.clone()));
        let c = CpElem::mu_tilde(&f3, 3).unwrap().mul(&CpElem::from_tp(&t)).unwrap();
        let v = cp_to_json(&c);
        assert_eq!(v["terms"][0]["k"], 1);
        assert_eq!(Element::from_json(&v).unwrap(), Element::Cp(c));
        let m = CpElem::mu_star(&f3, 3).unwrap().matrix(1);
        let mv = matrix_to_json(&m);
        assert_eq!(mv["rows"].as_array().unwrap().len(), 3);
        assert_eq!(mv["rows"][0]["entries"][0]["b"], "0/1");
    }

    #[test]
    fn malformed_input() {
        assert!(Element::from_json(&json!({"ring": "z"})).is_err());
        assert!(Element::from_json(&json!({"ring": "w", "terms": []})).is_err());
        assert!(Element::from_json(&json!({"ring": "z", "terms": [{"r": "1/0", "c": "1"}]})).is_err());
        assert!(Element::from_json(&json!({"ring": "fp:2", "p": 2, "terms": [{"a": "1/3", "c": 1}]})).is_err());
    }
}
