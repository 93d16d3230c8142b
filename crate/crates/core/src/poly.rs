//! Laurent-style polynomials in `t` whose exponents are affine expressions
//! in per-component base variables `x_i`.
//!
//! Component 0 is the gauge: `x_0` is fixed to zero and never stored. An
//! exponent that arises as a label difference `x_i - x_j + k` therefore has
//! coefficients summing to zero once `x_0` is put back, and [`AffineExponent::eval`]
//! restores it that way.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num::{BigInt, BigRational, One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// `constant + sum_i coeffs[i] * x_i`, with `x_0` gauged away.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct AffineExponent {
    #[serde(rename = "const")]
    constant: i64,
    #[serde(rename = "vars", with = "var_keys")]
    coeffs: BTreeMap<usize, i64>,
}

mod var_keys {
    use std::collections::BTreeMap;

    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(m: &BTreeMap<usize, i64>, s: S) -> Result<S::Ok, S::Error> {
        let as_str: BTreeMap<String, i64> = m.iter().map(|(k, v)| (k.to_string(), *v)).collect();
        as_str.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BTreeMap<usize, i64>, D::Error> {
        let raw = BTreeMap::<String, i64>::deserialize(d)?;
        raw.into_iter()
            .map(|(k, v)| k.parse::<usize>().map(|k| (k, v)).map_err(serde::de::Error::custom))
            .collect()
    }
}

impl AffineExponent {
    pub fn constant(c: i64) -> Self {
        AffineExponent { constant: c, coeffs: BTreeMap::new() }
    }

    /// `x_i`; zero for the gauge component.
    pub fn var(i: usize) -> Self {
        let mut e = AffineExponent::default();
        e.add_var(i, 1);
        e
    }

    pub fn from_parts(constant: i64, coeffs: impl IntoIterator<Item = (usize, i64)>) -> Self {
        let mut e = AffineExponent::constant(constant);
        for (i, c) in coeffs {
            e.add_var(i, c);
        }
        e
    }

    fn add_var(&mut self, i: usize, c: i64) {
        if i == 0 || c == 0 {
            return;
        }
        let v = self.coeffs.entry(i).or_insert(0);
        *v += c;
        if *v == 0 {
            self.coeffs.remove(&i);
        }
    }

    pub fn const_part(&self) -> i64 {
        self.constant
    }

    pub fn coeffs(&self) -> &BTreeMap<usize, i64> {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> i64 {
        self.coeffs.get(&i).copied().unwrap_or(0)
    }

    pub fn is_integer(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn as_integer(&self) -> Option<i64> {
        self.is_integer().then_some(self.constant)
    }

    /// Coefficient of `x_0` when the exponent is read as a label difference.
    pub fn gauge_coeff(&self) -> i64 {
        -self.coeffs.values().sum::<i64>()
    }

    /// Substitutes integer values for base variables. `x_0` takes
    /// `assignment[0]` (default 0) with coefficient [`Self::gauge_coeff`], so
    /// only the differences `a_i - a_0` enter. Variables without a value are
    /// kept when `partial` is set.
    fn substitute(&self, assignment: &BTreeMap<usize, i64>, partial: bool) -> Result<AffineExponent> {
        let x0 = assignment.get(&0).copied().unwrap_or(0);
        let mut out = AffineExponent::constant(self.constant);
        for (&i, &c) in &self.coeffs {
            match assignment.get(&i) {
                Some(v) => out.constant += c * (v - x0),
                None if partial => out.add_var(i, c),
                None => return Err(Error::MissingAssignment(i)),
            }
        }
        Ok(out)
    }

    pub fn eval(&self, assignment: &BTreeMap<usize, i64>) -> Result<i64> {
        Ok(self.substitute(assignment, false)?.constant)
    }

    pub fn shifted(&self, by: i64) -> Self {
        AffineExponent { constant: self.constant + by, coeffs: self.coeffs.clone() }
    }

    /// True for `k` or `k ± (x_i - x_j)`, the shapes label differences take.
    pub fn is_difference_form(&self) -> bool {
        match self.coeffs.len() {
            0 => true,
            1 => self.coeffs.values().all(|c| c.abs() == 1),
            2 => {
                let v: Vec<i64> = self.coeffs.values().copied().collect();
                v[0] + v[1] == 0 && v[0].abs() == 1
            }
            _ => false,
        }
    }

    /// The pair `(i, j)` with `i < j` such that the variable part is
    /// `±(x_i - x_j)`, plus that sign. `None` for integers.
    fn difference_pair(&self) -> Option<((usize, usize), i64)> {
        if !self.is_difference_form() || self.is_integer() {
            return None;
        }
        let mut full: Vec<(usize, i64)> = self.coeffs.iter().map(|(k, v)| (*k, *v)).collect();
        let g = self.gauge_coeff();
        if g != 0 {
            full.insert(0, (0, g));
        }
        let (i, ci) = full[0];
        let (j, _) = full[1];
        Some(((i, j), ci))
    }

    fn fmt_with(&self, f: &mut impl fmt::Write, style: VarStyle) -> fmt::Result {
        if self.is_integer() {
            return write!(f, "{}", self.constant);
        }
        let mut parts: Vec<(i64, String)> = Vec::new();
        match style {
            VarStyle::Differences => {
                for (&i, &c) in &self.coeffs {
                    parts.push((-c, format!("N{i}")));
                }
            }
            VarStyle::Bases => {
                let g = self.gauge_coeff();
                if g != 0 {
                    parts.push((g, "x0".to_string()));
                }
                for (&i, &c) in &self.coeffs {
                    parts.push((c, format!("x{i}")));
                }
            }
        }
        let constant_first = parts[0].0 < 0 && self.constant > 0;
        let mut first = true;
        let mut term = |f: &mut dyn fmt::Write, c: i64, name: &str| -> fmt::Result {
            let mag = c.unsigned_abs();
            if first {
                if c < 0 {
                    f.write_char('-')?;
                }
            } else {
                f.write_char(if c < 0 { '-' } else { '+' })?;
            }
            first = false;
            match (name.is_empty(), mag) {
                (true, _) => write!(f, "{mag}"),
                (false, 1) => f.write_str(name),
                (false, _) => write!(f, "{mag}{name}"),
            }
        };
        if constant_first {
            term(f, self.constant, "")?;
        }
        for (c, name) in &parts {
            term(f, *c, name)?;
        }
        if !constant_first && self.constant != 0 {
            term(f, self.constant, "")?;
        }
        Ok(())
    }
}

impl Add for &AffineExponent {
    type Output = AffineExponent;

    fn add(self, rhs: &AffineExponent) -> AffineExponent {
        let mut out = self.clone();
        out.constant += rhs.constant;
        for (&i, &c) in &rhs.coeffs {
            out.add_var(i, c);
        }
        out
    }
}

impl Sub for &AffineExponent {
    type Output = AffineExponent;

    fn sub(self, rhs: &AffineExponent) -> AffineExponent {
        self + &(-rhs)
    }
}

impl Neg for &AffineExponent {
    type Output = AffineExponent;

    fn neg(self) -> AffineExponent {
        AffineExponent {
            constant: -self.constant,
            coeffs: self.coeffs.iter().map(|(&i, &c)| (i, -c)).collect(),
        }
    }
}

impl fmt::Display for AffineExponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let style = if self.coeffs.len() <= 1 { VarStyle::Differences } else { VarStyle::Bases };
        self.fmt_with(f, style)
    }
}

#[derive(Clone, Copy)]
enum VarStyle {
    /// `N_i := x_0 - x_i`
    Differences,
    /// raw `x_i`, with `x_0` restored
    Bases,
}

/// Value of `t` when evaluating a polynomial.
#[derive(Debug, Clone, PartialEq)]
pub enum TValue {
    Formal,
    Value(BigRational),
}

#[derive(Debug, Clone, PartialEq)]
pub enum Evaluated {
    Polynomial(IndexPolynomial),
    Number(BigRational),
}

/// Finitely supported map from exponents to nonzero integer coefficients.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct IndexPolynomial {
    terms: BTreeMap<AffineExponent, i64>,
}

/// One term in the JSON rendering.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Term {
    pub coeff: i64,
    pub exponent: AffineExponent,
}

impl IndexPolynomial {
    pub fn zero() -> Self {
        IndexPolynomial::default()
    }

    pub fn monomial(coeff: i64, exponent: AffineExponent) -> Self {
        let mut p = IndexPolynomial::zero();
        p.add_term(exponent, coeff);
        p
    }

    /// Builds from integer exponents, e.g. `[(1, 1), (-1, 1), (0, -2)]`.
    pub fn from_integer_terms(terms: impl IntoIterator<Item = (i64, i64)>) -> Self {
        let mut p = IndexPolynomial::zero();
        for (e, c) in terms {
            p.add_term(AffineExponent::constant(e), c);
        }
        p
    }

    pub fn add_term(&mut self, exponent: AffineExponent, coeff: i64) {
        if coeff == 0 {
            return;
        }
        let slot = self.terms.entry(exponent).or_insert(0);
        *slot += coeff;
        if *slot == 0 {
            self.terms.retain(|_, c| *c != 0);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &BTreeMap<AffineExponent, i64> {
        &self.terms
    }

    pub fn coeff(&self, exponent: &AffineExponent) -> i64 {
        self.terms.get(exponent).copied().unwrap_or(0)
    }

    pub fn is_integral(&self) -> bool {
        self.terms.keys().all(AffineExponent::is_integer)
    }

    pub fn negate(&self) -> Self {
        IndexPolynomial { terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect() }
    }

    /// `t -> t^-1`: every exponent negated.
    pub fn invert_t(&self) -> Self {
        IndexPolynomial { terms: self.terms.iter().map(|(e, c)| (-e, *c)).collect() }
    }

    /// Substitutes base values, keeping unassigned variables symbolic.
    pub fn substitute(&self, assignment: &BTreeMap<usize, i64>) -> IndexPolynomial {
        let mut out = IndexPolynomial::zero();
        for (e, &c) in &self.terms {
            let e = e.substitute(assignment, true).expect("partial substitution never fails");
            out.add_term(e, c);
        }
        out
    }

    pub fn eval(&self, assignment: &BTreeMap<usize, i64>, t: &TValue) -> Result<Evaluated> {
        match t {
            TValue::Formal => Ok(Evaluated::Polynomial(self.substitute(assignment))),
            TValue::Value(t) => self.eval_at(assignment, t).map(Evaluated::Number),
        }
    }

    /// Exact value at a rational `t`. Every variable must be assigned.
    pub fn eval_at(&self, assignment: &BTreeMap<usize, i64>, t: &BigRational) -> Result<BigRational> {
        let mut sum = BigRational::zero();
        for (e, &c) in &self.terms {
            let n = e.eval(assignment)?;
            let pow = if n >= 0 {
                num::pow(t.clone(), n as usize)
            } else {
                if t.is_zero() {
                    return Err(Error::InvalidLabeling("negative power of t = 0".into()));
                }
                num::pow(t.recip(), n.unsigned_abs() as usize)
            };
            sum += BigRational::from_integer(BigInt::from(c)) * pow;
        }
        Ok(sum)
    }

    /// Value at `t = 1`, the sum of coefficients.
    pub fn at_one(&self) -> i64 {
        self.terms.values().sum()
    }

    pub fn to_terms(&self) -> Vec<Term> {
        self.ordered().into_iter().map(|(e, c)| Term { coeff: c, exponent: e.clone() }).collect()
    }

    pub fn from_terms(terms: impl IntoIterator<Item = Term>) -> Self {
        let mut p = IndexPolynomial::zero();
        for t in terms {
            p.add_term(t.exponent, t.coeff);
        }
        p
    }

    // Non-zero exponents ascending, the constant term last.
    fn ordered(&self) -> Vec<(&AffineExponent, i64)> {
        let zero = AffineExponent::default();
        let mut out: Vec<_> = self.terms.iter().filter(|(e, _)| **e != zero).map(|(e, c)| (e, *c)).collect();
        if let Some((e, c)) = self.terms.get_key_value(&zero) {
            out.push((e, *c));
        }
        out
    }

    /// Canonical representative under shifts `x_i -> x_i + c_i` of the base
    /// variables.
    ///
    /// A link's labeling is only determined up to such per-component shifts,
    /// so two polynomials of the same link may differ by one. Components are
    /// linked whenever some exponent involves `x_i - x_j`; along a spanning
    /// forest of that graph each shift is chosen so that the smallest
    /// constant among exponents in `x_child - x_parent` becomes zero.
    /// Exponents not of difference shape are left untouched.
    pub fn shift_normal_form(&self) -> IndexPolynomial {
        // pair (i, j), i < j -> constants of exponents read as (x_j - x_i) + k
        let mut families: BTreeMap<(usize, usize), Vec<i64>> = BTreeMap::new();
        for e in self.terms.keys() {
            if let Some(((i, j), ci)) = e.difference_pair() {
                // keyed so that raising x_j - x_i by d raises every key by d
                let k = if ci == 1 { -e.constant } else { e.constant };
                families.entry((i, j)).or_default().push(k);
            }
        }
        if families.is_empty() {
            return self.clone();
        }
        let mut adj: BTreeMap<usize, BTreeSet<usize>> = BTreeMap::new();
        for &(i, j) in families.keys() {
            adj.entry(i).or_default().insert(j);
            adj.entry(j).or_default().insert(i);
        }
        let mut shift: BTreeMap<usize, i64> = BTreeMap::new();
        for &root in adj.keys() {
            if shift.contains_key(&root) {
                continue;
            }
            shift.insert(root, 0);
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                for &w in &adj[&u] {
                    if shift.contains_key(&w) {
                        continue;
                    }
                    // constants of (x_w - x_u) + k
                    let ks: Vec<i64> = if u < w {
                        families[&(u, w)].clone()
                    } else {
                        families[&(w, u)].iter().map(|k| -k).collect()
                    };
                    // after the shift, (x_w - x_u) + k becomes (x_w - x_u) + k + s_w - s_u
                    let min = *ks.iter().min().expect("family is non-empty");
                    let s = shift[&u] - min;
                    shift.insert(w, s);
                    queue.push_back(w);
                }
            }
        }
        // A component's shift only matters relative to the gauge x_0.
        let s0 = shift.get(&0).copied().unwrap_or(0);
        let mut out = IndexPolynomial::zero();
        for (e, &c) in &self.terms {
            if !e.is_difference_form() {
                out.add_term(e.clone(), c);
                continue;
            }
            let delta: i64 = e.coeffs.iter().map(|(i, ci)| ci * (shift.get(i).copied().unwrap_or(0) - s0)).sum();
            out.add_term(e.shifted(delta), c);
        }
        out
    }
}

impl Add for &IndexPolynomial {
    type Output = IndexPolynomial;

    fn add(self, rhs: &IndexPolynomial) -> IndexPolynomial {
        let mut out = self.clone();
        for (e, &c) in &rhs.terms {
            out.add_term(e.clone(), c);
        }
        out
    }
}

impl Sub for &IndexPolynomial {
    type Output = IndexPolynomial;

    #[allow(clippy::suspicious_arithmetic_impl)]
    fn sub(self, rhs: &IndexPolynomial) -> IndexPolynomial {
        self + &rhs.negate()
    }
}

impl Neg for &IndexPolynomial {
    type Output = IndexPolynomial;

    fn neg(self) -> IndexPolynomial {
        self.negate()
    }
}

impl fmt::Display for IndexPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let style = if self.terms.keys().all(|e| e.coeffs.len() <= 1) {
            VarStyle::Differences
        } else {
            VarStyle::Bases
        };
        for (k, (e, c)) in self.ordered().into_iter().enumerate() {
            let mag = c.unsigned_abs();
            match (k, c < 0) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if e.is_integer() && e.constant == 0 {
                write!(f, "{mag}")?;
                continue;
            }
            if mag != 1 {
                write!(f, "{mag}")?;
            }
            f.write_str("t")?;
            match e.as_integer() {
                Some(1) => {}
                Some(n) => write!(f, "^{n}")?,
                None => {
                    let mut s = String::new();
                    e.fmt_with(&mut s, style)?;
                    write!(f, "^({s})")?;
                }
            }
        }
        Ok(())
    }
}

/// Polynomial over GF(2) in `t` with non-negative exponents.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct FlatPolynomial {
    exponents: BTreeSet<u64>,
}

impl FlatPolynomial {
    pub fn zero() -> Self {
        FlatPolynomial::default()
    }

    /// Adds `t^e` (mod 2).
    pub fn add_term(&mut self, e: u64) {
        if !self.exponents.remove(&e) {
            self.exponents.insert(e);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.exponents.is_empty()
    }

    pub fn exponents(&self) -> impl Iterator<Item = u64> + '_ {
        self.exponents.iter().copied()
    }
}

impl Add for &FlatPolynomial {
    type Output = FlatPolynomial;

    fn add(self, rhs: &FlatPolynomial) -> FlatPolynomial {
        FlatPolynomial { exponents: self.exponents.symmetric_difference(&rhs.exponents).copied().collect() }
    }
}

impl fmt::Display for FlatPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, e) in self.exponents.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            match e {
                0 => f.write_str("1")?,
                1 => f.write_str("t")?,
                n => write!(f, "t^{n}")?,
            }
        }
        Ok(())
    }
}

pub fn rational(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn rational_one() -> BigRational {
    BigRational::one()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int_poly(terms: &[(i64, i64)]) -> IndexPolynomial {
        IndexPolynomial::from_integer_terms(terms.iter().copied())
    }

    // t^(N1 - 1) + t^(1 - N1) - 2 with N1 = x_0 - x_1 = -x_1
    fn hopf() -> IndexPolynomial {
        let mut p = IndexPolynomial::zero();
        p.add_term(AffineExponent::from_parts(-1, [(1, -1)]), 1);
        p.add_term(AffineExponent::from_parts(1, [(1, 1)]), 1);
        p.add_term(AffineExponent::constant(0), -2);
        p
    }

    #[test]
    fn add_and_negate() {
        let vt = int_poly(&[(1, 1), (-1, 1), (0, -2)]);
        let inv = int_poly(&[(0, 2), (1, -1), (-1, -1)]);
        assert!((&vt + &inv).is_zero());
        assert_eq!(&vt + &IndexPolynomial::zero(), vt);
        let tm1 = int_poly(&[(1, 1), (0, -1)]);
        assert_eq!(&tm1 + &tm1, int_poly(&[(1, 2), (0, -2)]));
        assert_eq!(vt.negate(), inv);
        assert!((&vt - &vt).is_zero());
    }

    #[test]
    fn invert_t() {
        assert_eq!(int_poly(&[(2, 1), (0, -1)]).invert_t(), int_poly(&[(-2, 1), (0, -1)]));
        let vt = int_poly(&[(1, 1), (-1, 1), (0, -2)]);
        assert_eq!(vt.invert_t(), vt);
        let p = IndexPolynomial::monomial(1, AffineExponent::from_parts(-1, [(1, -1)]));
        let q = IndexPolynomial::monomial(1, AffineExponent::from_parts(1, [(1, 1)]));
        assert_eq!(p.invert_t(), q);
    }

    #[test]
    fn eval_by_substitution() {
        let p = hopf();
        let at_zero = p.substitute(&BTreeMap::from([(1, 0)]));
        assert_eq!(at_zero, int_poly(&[(1, 1), (-1, 1), (0, -2)]));
        assert_eq!(at_zero.to_string(), "t^-1 + t - 2");
        // N1 = 3 means x_1 = -3
        let n3 = p.substitute(&BTreeMap::from([(1, -3)]));
        assert_eq!(n3, int_poly(&[(2, 1), (-2, 1), (0, -2)]));
        // x_0 assigned too: only the difference matters
        let shifted = p.substitute(&BTreeMap::from([(0, 5), (1, 2)]));
        assert_eq!(shifted, n3);
    }

    #[test]
    fn numeric_eval() {
        let one = rational_one();
        assert_eq!(hopf().eval_at(&BTreeMap::from([(1, 4)]), &one).unwrap(), BigRational::zero());
        assert_eq!(hopf().eval_at(&BTreeMap::new(), &one), Err(Error::MissingAssignment(1)));
        assert_eq!(IndexPolynomial::zero().eval_at(&BTreeMap::new(), &rational(3, 7)).unwrap(), BigRational::zero());
        let vt = int_poly(&[(1, 1), (-1, 1), (0, -2)]);
        // 2 + 1/2 - 2
        assert_eq!(vt.eval_at(&BTreeMap::new(), &rational(2, 1)).unwrap(), rational(1, 2));
        match hopf().eval(&BTreeMap::from([(1, 0)]), &TValue::Formal).unwrap() {
            Evaluated::Polynomial(p) => assert_eq!(p.to_string(), "t^-1 + t - 2"),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn rendering() {
        assert_eq!(int_poly(&[(1, 1), (-1, 1), (0, -2)]).to_string(), "t^-1 + t - 2");
        assert_eq!(int_poly(&[(1, 2), (-1, 2), (0, -4)]).to_string(), "2t^-1 + 2t - 4");
        assert_eq!(int_poly(&[(1, -1), (-1, -1), (0, 2)]).to_string(), "-t^-1 - t + 2");
        assert_eq!(IndexPolynomial::zero().to_string(), "0");
        let p = IndexPolynomial::monomial(1, AffineExponent::from_parts(-1, [(1, -1)]));
        assert_eq!(p.to_string(), "t^(N1-1)");
        assert_eq!(hopf().to_string(), "t^(N1-1) + t^(1-N1) - 2");
        let three = IndexPolynomial::monomial(-1, AffineExponent::from_parts(2, [(1, 1), (2, -1)]));
        assert_eq!(three.to_string(), "-t^(x1-x2+2)");
        let gauge = IndexPolynomial::monomial(1, AffineExponent::from_parts(0, [(1, 1), (2, 1)]));
        assert_eq!(gauge.to_string(), "t^(-2x0+x1+x2)");
    }

    #[test]
    fn flat_arithmetic() {
        let mut a = FlatPolynomial::zero();
        a.add_term(1);
        a.add_term(0);
        assert_eq!(a.to_string(), "1 + t");
        assert!((&a + &a).is_zero());
        assert_eq!((&a + &a).to_string(), "0");
        let mut b = FlatPolynomial::zero();
        b.add_term(3);
        assert_eq!((&a + &b).to_string(), "1 + t + t^3");
    }

    #[test]
    fn json_terms() {
        let v = serde_json::to_value(hopf().to_terms()).unwrap();
        assert_eq!(
            v,
            serde_json::json!([
                {"coeff": 1, "exponent": {"const": -1, "vars": {"1": -1}}},
                {"coeff": 1, "exponent": {"const": 1, "vars": {"1": 1}}},
                {"coeff": -2, "exponent": {"const": 0, "vars": {}}},
            ])
        );
        let back: Vec<Term> = serde_json::from_value(v).unwrap();
        assert_eq!(IndexPolynomial::from_terms(back), hopf());
    }

    #[test]
    fn shift_normal_form_identifies_shifted_labelings() {
        let h = hopf();
        // x_1 -> x_1 + 3
        let moved = h.substitute(&BTreeMap::new());
        let mut shifted = IndexPolynomial::zero();
        for (e, c) in moved.terms() {
            shifted.add_term(e.shifted(3 * e.coeff(1)), *c);
        }
        assert_ne!(shifted, h);
        assert_eq!(shifted.shift_normal_form(), h.shift_normal_form());
        let vt = int_poly(&[(1, 1), (-1, 1), (0, -2)]);
        assert_eq!(vt.shift_normal_form(), vt);
    }

    #[test]
    fn difference_shapes() {
        assert!(AffineExponent::from_parts(3, [(1, -1)]).is_difference_form());
        assert!(AffineExponent::from_parts(0, [(1, 1), (2, -1)]).is_difference_form());
        assert!(!AffineExponent::from_parts(0, [(1, 2)]).is_difference_form());
        assert!(!AffineExponent::from_parts(0, [(1, 1), (2, 1)]).is_difference_form());
        assert_eq!(AffineExponent::var(0), AffineExponent::constant(0));
    }
}
