//! JSON forms of Laurent polynomials and rational functions.

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::coeff::{parse_ratio, ratio_string, Coefficient};
use super::laurent::{Exps, LaurentPoly};
use super::ratfunc::RatFunc;

#[derive(Serialize, Deserialize)]
struct TermJson {
    exp: Vec<i32>,
    re: String,
    im: String,
}

#[derive(Serialize, Deserialize)]
struct PolyJson {
    vars: Vec<String>,
    terms: Vec<TermJson>,
}

#[derive(Serialize, Deserialize)]
struct RatJson {
    num: PolyJson,
    den: PolyJson,
}

fn to_json(p: &LaurentPoly) -> PolyJson {
    PolyJson {
        vars: p.vars().to_vec(),
        terms: p
            .terms()
            .rev()
            .map(|(e, c)| TermJson { exp: e.to_vec(), re: ratio_string(&c.re), im: ratio_string(&c.im) })
            .collect(),
    }
}

fn from_json(j: PolyJson) -> Result<LaurentPoly, String> {
    let mut terms = Vec::new();
    for t in j.terms {
        if t.exp.len() != j.vars.len() {
            return Err("exponent length does not match vars".into());
        }
        let re = parse_ratio(&t.re).ok_or_else(|| format!("bad rational {:?}", t.re))?;
        let im = parse_ratio(&t.im).ok_or_else(|| format!("bad rational {:?}", t.im))?;
        terms.push((Exps::from_vec(t.exp), Coefficient::from_parts(re, im)));
    }
    Ok(LaurentPoly::from_terms(j.vars, terms))
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        to_json(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        from_json(PolyJson::deserialize(d)?).map_err(D::Error::custom)
    }
}

impl Serialize for RatFunc {
    /// Serialized in reduced form so equal values print identically.
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let r = self.reduce();
        RatJson { num: to_json(r.num()), den: to_json(&r.den()) }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for RatFunc {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let j = RatJson::deserialize(d)?;
        let num = from_json(j.num).map_err(D::Error::custom)?;
        let den = from_json(j.den).map_err(D::Error::custom)?;
        RatFunc::new(num, den).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::qint;

    #[test]
    fn poly_round_trip() {
        let p = qint(3).mul(&LaurentPoly::var("t1")).add(&LaurentPoly::constant(Coefficient::iota()));
        let text = serde_json::to_string(&p).unwrap();
        let back: LaurentPoly = serde_json::from_str(&text).unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn documented_shape() {
        let p = LaurentPoly::monomial("s", 2, Coefficient::from_int(-1));
        let text = serde_json::to_string(&p).unwrap();
        assert_eq!(text, r#"{"vars":["s"],"terms":[{"exp":[2],"re":"-1","im":"0"}]}"#);
    }

    #[test]
    fn ratfunc_round_trip() {
        let f = RatFunc::from_qints(-1, 2, &[3], &[2, 5]).unwrap();
        let text = serde_json::to_string(&f).unwrap();
        let back: RatFunc = serde_json::from_str(&text).unwrap();
        assert_eq!(back, f);
    }
}
