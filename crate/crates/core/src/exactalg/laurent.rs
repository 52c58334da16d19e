//! Sparse multivariate Laurent polynomials over Gaussian rationals.

use std::collections::BTreeMap;
use std::fmt;

use smallvec::SmallVec;

use super::coeff::Coefficient;

pub type Exps = SmallVec<[i32; 4]>;

/// Variables are kept sorted; exponent vectors are aligned with `vars`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct LaurentPoly {
    vars: Vec<String>,
    terms: BTreeMap<Exps, Coefficient>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly { vars: Vec::new(), terms: BTreeMap::new() }
    }

    pub fn constant(c: Coefficient) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Exps::new(), c);
        }
        LaurentPoly { vars: Vec::new(), terms }
    }

    pub fn one() -> Self {
        Self::constant(Coefficient::one())
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(Coefficient::from_int(n))
    }

    /// `c · var^exp`.
    pub fn monomial(var: &str, exp: i32, c: Coefficient) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        if exp == 0 {
            return Self::constant(c);
        }
        let mut terms = BTreeMap::new();
        terms.insert(SmallVec::from_slice(&[exp]), c);
        LaurentPoly { vars: vec![var.to_string()], terms }
    }

    pub fn var(name: &str) -> Self {
        Self::monomial(name, 1, Coefficient::one())
    }

    /// Builds a univariate polynomial from `(exponent, integer coefficient)` pairs.
    pub fn univariate(var: &str, coeffs: &[(i32, i64)]) -> Self {
        let mut p = Self::zero();
        for &(e, c) in coeffs {
            p = p.add(&Self::monomial(var, e, Coefficient::from_int(c)));
        }
        p
    }

    pub fn from_terms(vars: Vec<String>, terms: impl IntoIterator<Item = (Exps, Coefficient)>) -> Self {
        let mut sorted: Vec<String> = vars.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), vars.len(), "duplicate variable names");
        let perm: Vec<usize> = sorted.iter().map(|v| vars.iter().position(|w| w == v).unwrap()).collect();
        let mut map: BTreeMap<Exps, Coefficient> = BTreeMap::new();
        for (e, c) in terms {
            assert_eq!(e.len(), vars.len());
            let key: Exps = perm.iter().map(|&p| e[p]).collect();
            let slot = map.entry(key).or_insert_with(Coefficient::zero);
            *slot += &c;
        }
        map.retain(|_, c| !c.is_zero());
        LaurentPoly { vars: sorted, terms: map }.trimmed()
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Exps, &Coefficient)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.constant_term().is_one()
    }

    pub fn constant_term(&self) -> Coefficient {
        let zero: Exps = SmallVec::from_elem(0, self.vars.len());
        self.terms.get(&zero).cloned().unwrap_or_else(Coefficient::zero)
    }

    /// `Some((c, exps))` when the polynomial has exactly one term.
    pub fn as_monomial(&self) -> Option<(&Coefficient, &Exps)> {
        if self.terms.len() == 1 {
            let (e, c) = self.terms.iter().next().unwrap();
            Some((c, e))
        } else {
            None
        }
    }

    pub fn is_univariate(&self) -> bool {
        self.vars.len() == 1
    }

    /// Drops variables that occur with exponent 0 in every term.
    fn trimmed(mut self) -> Self {
        let n = self.vars.len();
        let used: Vec<bool> = (0..n).map(|i| self.terms.keys().any(|e| e[i] != 0)).collect();
        if used.iter().all(|&u| u) {
            return self;
        }
        let vars = self.vars.iter().zip(&used).filter(|(_, &u)| u).map(|(v, _)| v.clone()).collect();
        let terms = std::mem::take(&mut self.terms)
            .into_iter()
            .map(|(e, c)| (e.iter().zip(&used).filter(|(_, &u)| u).map(|(x, _)| *x).collect(), c))
            .collect();
        LaurentPoly { vars, terms }
    }

    fn with_vars(&self, vars: &[String]) -> BTreeMap<Exps, Coefficient> {
        if self.vars == vars {
            return self.terms.clone();
        }
        let pos: Vec<Option<usize>> = vars.iter().map(|v| self.vars.iter().position(|w| w == v)).collect();
        self.terms
            .iter()
            .map(|(e, c)| (pos.iter().map(|p| p.map_or(0, |i| e[i])).collect(), c.clone()))
            .collect()
    }

    fn merged_vars(&self, o: &Self) -> Vec<String> {
        if self.vars == o.vars || o.vars.is_empty() {
            return self.vars.clone();
        }
        if self.vars.is_empty() {
            return o.vars.clone();
        }
        let mut v: Vec<String> = self.vars.iter().chain(o.vars.iter()).cloned().collect();
        v.sort();
        v.dedup();
        v
    }

    pub fn add(&self, o: &Self) -> Self {
        self.combine(o, false)
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.combine(o, true)
    }

    fn combine(&self, o: &Self, negate: bool) -> Self {
        if o.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return if negate { o.neg() } else { o.clone() };
        }
        let vars = self.merged_vars(o);
        let mut terms = self.with_vars(&vars);
        let other = if o.vars == vars { None } else { Some(o.with_vars(&vars)) };
        let other_ref = other.as_ref().unwrap_or(&o.terms);
        for (e, c) in other_ref {
            match terms.get_mut(e) {
                Some(slot) => {
                    *slot = if negate { &*slot - c } else { &*slot + c };
                    if slot.is_zero() {
                        terms.remove(e);
                    }
                }
                None => {
                    terms.insert(e.clone(), if negate { -c } else { c.clone() });
                }
            }
        }
        LaurentPoly { vars, terms }.trimmed()
    }

    pub fn neg(&self) -> Self {
        LaurentPoly { vars: self.vars.clone(), terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect() }
    }

    pub fn scale(&self, c: &Coefficient) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        if c.is_one() {
            return self.clone();
        }
        LaurentPoly { vars: self.vars.clone(), terms: self.terms.iter().map(|(e, x)| (e.clone(), x * c)).collect() }
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let vars = self.merged_vars(o);
        let a = if self.vars == vars { None } else { Some(self.with_vars(&vars)) };
        let b = if o.vars == vars { None } else { Some(o.with_vars(&vars)) };
        let a = a.as_ref().unwrap_or(&self.terms);
        let b = b.as_ref().unwrap_or(&o.terms);
        let mut terms: BTreeMap<Exps, Coefficient> = BTreeMap::new();
        for (ea, ca) in a {
            for (eb, cb) in b {
                let e: Exps = ea.iter().zip(eb.iter()).map(|(x, y)| x + y).collect();
                let prod = ca * cb;
                match terms.get_mut(&e) {
                    Some(slot) => *slot += &prod,
                    None => {
                        terms.insert(e, prod);
                    }
                }
            }
        }
        terms.retain(|_, c| !c.is_zero());
        LaurentPoly { vars, terms }.trimmed()
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut r = Self::one();
        for _ in 0..n {
            r = r.mul(self);
        }
        r
    }

    /// Multiplies by the monomial with exponent vector `shift` (aligned with `vars`).
    pub fn shift(&self, vars: &[String], shift: &[i32]) -> Self {
        let m = LaurentPoly::from_terms(vars.to_vec(), [(Exps::from_slice(shift), Coefficient::one())]);
        self.mul(&m)
    }

    /// Componentwise minimum exponent per variable.
    pub fn min_exps(&self) -> Exps {
        let mut m: Exps = SmallVec::from_elem(i32::MAX, self.vars.len());
        for e in self.terms.keys() {
            for (slot, x) in m.iter_mut().zip(e.iter()) {
                *slot = (*slot).min(*x);
            }
        }
        m
    }

    /// Largest term in lexicographic exponent order.
    pub fn leading(&self) -> Option<(&Exps, &Coefficient)> {
        self.terms.iter().next_back()
    }

    /// Exact division. Returns `None` unless `d` divides `self` in the Laurent ring.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        if let Some((c, e)) = d.as_monomial() {
            let inv = c.inv()?;
            let neg: Vec<i32> = e.iter().map(|x| -x).collect();
            return Some(self.scale(&inv).shift(d.vars(), &neg));
        }
        let vars = self.merged_vars(d);
        if d.vars.iter().any(|v| !self.vars.contains(v)) {
            return None;
        }
        // normalize divisor to an ordinary polynomial with its lex-leading term inverted
        let dmin = d.min_exps();
        let dneg: Vec<i32> = dmin.iter().map(|x| -x).collect();
        let dn = d.shift(&d.vars, &dneg);
        let dterms = dn.with_vars(&vars);
        let (dlead_e, dlead_c) = dterms.iter().next_back().map(|(e, c)| (e.clone(), c.clone()))?;
        let dlead_inv = dlead_c.inv()?;
        let smin = self.min_exps();
        let sneg: Vec<i32> = smin.iter().map(|x| -x).collect();
        let mut rem = self.shift(&self.vars, &sneg).with_vars(&vars);
        let mut quot: BTreeMap<Exps, Coefficient> = BTreeMap::new();
        while let Some((re, rc)) = rem.iter().next_back().map(|(e, c)| (e.clone(), c.clone())) {
            let qe: Exps = re.iter().zip(dlead_e.iter()).map(|(a, b)| a - b).collect();
            if qe.iter().any(|&x| x < 0) {
                return None;
            }
            let qc = &rc * &dlead_inv;
            for (de, dc) in &dterms {
                let e: Exps = qe.iter().zip(de.iter()).map(|(a, b)| a + b).collect();
                let v = &qc * dc;
                match rem.get_mut(&e) {
                    Some(slot) => {
                        *slot = &*slot - &v;
                        if slot.is_zero() {
                            rem.remove(&e);
                        }
                    }
                    None => {
                        if e.iter().any(|&x| x < 0) {
                            return None;
                        }
                        rem.insert(e, -v);
                    }
                }
            }
            quot.insert(qe, qc);
        }
        let q = LaurentPoly { vars: vars.clone(), terms: quot }.trimmed();
        // undo the normalizing shifts: self = q · dn · x^{smin} / ... so quotient = q · x^{smin - dmin}
        let shift_self = LaurentPoly::from_terms(self.vars.clone(), [(smin, Coefficient::one())]);
        let shift_d = LaurentPoly::from_terms(d.vars.clone(), [(Exps::from_slice(&dneg), Coefficient::one())]);
        Some(q.mul(&shift_self).mul(&shift_d))
    }

    /// Substitutes a Laurent polynomial for every occurrence of each listed variable.
    pub fn substitute(&self, subs: &BTreeMap<String, LaurentPoly>, inverses: &BTreeMap<String, LaurentPoly>) -> Option<Self> {
        let mut out = Self::zero();
        for (e, c) in &self.terms {
            let mut term = Self::constant(c.clone());
            for (v, &x) in self.vars.iter().zip(e.iter()) {
                let factor = match subs.get(v) {
                    Some(p) => {
                        if x >= 0 {
                            p.pow(x as u32)
                        } else {
                            inverses.get(v)?.pow((-x) as u32)
                        }
                    }
                    None => Self::monomial(v, x, Coefficient::one()),
                };
                term = term.mul(&factor);
            }
            out = out.add(&term);
        }
        Some(out)
    }

    /// Degree span `(min, max)` in a univariate polynomial.
    pub fn degree_span(&self) -> Option<(i32, i32)> {
        if !self.is_univariate() {
            return None;
        }
        let lo = self.terms.keys().next()?[0];
        let hi = self.terms.keys().next_back()?[0];
        Some((lo, hi))
    }

    /// Substitutes `var ↦ var^k` (used for `q = s^2` style specializations).
    pub fn rescale_var(&self, var: &str, k: i32) -> Self {
        match self.vars.iter().position(|v| v == var) {
            None => self.clone(),
            Some(p) => {
                let terms = self
                    .terms
                    .iter()
                    .map(|(e, c)| {
                        let mut e = e.clone();
                        e[p] *= k;
                        (e, c.clone())
                    })
                    .collect();
                LaurentPoly { vars: self.vars.clone(), terms }.trimmed()
            }
        }
    }

    /// Evaluates a univariate polynomial with real coefficients at a real point.
    pub fn eval_f64(&self, x: f64) -> f64 {
        let mut acc = 0.0;
        for (e, c) in &self.terms {
            let (re, _) = c.to_f64_pair();
            let mut t = re;
            for &k in e.iter() {
                t *= x.powi(k);
            }
            acc += t;
        }
        acc
    }
}

fn fmt_monomial(vars: &[String], e: &Exps) -> String {
    let mut parts = Vec::new();
    for (v, &x) in vars.iter().zip(e.iter()) {
        match x {
            0 => {}
            1 => parts.push(v.clone()),
            _ => parts.push(format!("{}^{}", v, x)),
        }
    }
    parts.join("*")
}

impl fmt::Display for LaurentPoly {
    /// Signed terms sorted by descending exponent, e.g. `-1*s^2 - 1*s^-2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            let (neg, mag) = if c.is_real() && c.re < num_rational::BigRational::from_integer(0.into()) {
                (true, -c)
            } else {
                (false, c.clone())
            };
            let mono = fmt_monomial(&self.vars, e);
            let body = if mono.is_empty() { mag.to_string() } else { format!("{}*{}", mag, mono) };
            if first {
                write!(f, "{}{}", if neg { "-" } else { "" }, body)?;
            } else {
                write!(f, " {} {}", if neg { "-" } else { "+" }, body)?;
            }
            first = false;
        }
        Ok(())
    }
}
