//! Sparse multivariate series over exact rationals.
//!
//! Every Walsh series in the crate lives in one ring: polynomials in the
//! indexed families `a_k`, `b_k`, `c_k`, `beta_k`, `gamma_k` and the scalars
//! `x`, `y`, `z`, with big-rational coefficients. Series may be truncated in
//! the *grade* `sum_k k * exp(a_k) + exp(x)`, which counts vertices once the
//! `a`-family is specialized to powers of `x`.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// Convenience constructor for small rationals.
pub fn ratio(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn int(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

/// Variable families. The declaration order is the canonical print order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    A,
    B,
    C,
    Beta,
    Gamma,
    X,
    Y,
    Z,
}

impl Family {
    pub fn symbol(self) -> &'static str {
        match self {
            Family::A => "a",
            Family::B => "b",
            Family::C => "c",
            Family::Beta => "beta",
            Family::Gamma => "gamma",
            Family::X => "x",
            Family::Y => "y",
            Family::Z => "z",
        }
    }

    /// Scalar families carry no index.
    pub fn is_scalar(self) -> bool {
        matches!(self, Family::X | Family::Y | Family::Z)
    }

    fn from_symbol(s: &str) -> Option<Family> {
        Some(match s {
            "a" => Family::A,
            "b" => Family::B,
            "c" => Family::C,
            "beta" => Family::Beta,
            "gamma" => Family::Gamma,
            "x" => Family::X,
            "y" => Family::Y,
            "z" => Family::Z,
            _ => return None,
        })
    }
}

/// A single variable such as `a_3` or `y`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VarRef {
    family: Family,
    index: u32,
}

impl VarRef {
    pub fn new(family: Family, index: u32) -> Result<Self> {
        if index == 0 || (family.is_scalar() && index != 1) {
            return Err(Error::InvalidVariable {
                family: family.symbol(),
                index,
            });
        }
        Ok(VarRef { family, index })
    }

    fn indexed(family: Family, index: u32) -> Self {
        assert!(index >= 1, "{}{index}: indices start at 1", family.symbol());
        VarRef { family, index }
    }

    pub fn a(k: u32) -> Self {
        Self::indexed(Family::A, k)
    }
    pub fn b(k: u32) -> Self {
        Self::indexed(Family::B, k)
    }
    pub fn c(k: u32) -> Self {
        Self::indexed(Family::C, k)
    }
    pub fn beta(k: u32) -> Self {
        Self::indexed(Family::Beta, k)
    }
    pub fn gamma(k: u32) -> Self {
        Self::indexed(Family::Gamma, k)
    }
    pub fn x() -> Self {
        VarRef {
            family: Family::X,
            index: 1,
        }
    }
    pub fn y() -> Self {
        VarRef {
            family: Family::Y,
            index: 1,
        }
    }
    pub fn z() -> Self {
        VarRef {
            family: Family::Z,
            index: 1,
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn index(&self) -> u32 {
        self.index
    }

    /// Contribution of one power of this variable to the truncation grade.
    pub fn grade(&self) -> u32 {
        match self.family {
            Family::A => self.index,
            Family::X => 1,
            _ => 0,
        }
    }
}

impl fmt::Display for VarRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.family.is_scalar() {
            write!(f, "{}", self.family.symbol())
        } else {
            write!(f, "{}{}", self.family.symbol(), self.index)
        }
    }
}

impl std::str::FromStr for VarRef {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let split = s.find(|c: char| c.is_ascii_digit()).unwrap_or(s.len());
        let (name, digits) = s.split_at(split);
        let family = Family::from_symbol(name).ok_or_else(|| format!("unknown variable `{s}`"))?;
        let index = if digits.is_empty() {
            1
        } else {
            digits
                .parse::<u32>()
                .map_err(|e| format!("bad index in `{s}`: {e}"))?
        };
        if !family.is_scalar() && digits.is_empty() {
            return Err(format!("`{s}` needs an index"));
        }
        if family.is_scalar() && !digits.is_empty() {
            return Err(format!("scalar `{name}` takes no index"));
        }
        VarRef::new(family, index).map_err(|e| e.to_string())
    }
}

/// A product of variable powers, stored as a sorted exponent vector with no
/// zero exponents.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(Vec<(VarRef, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(v: VarRef) -> Self {
        Monomial(vec![(v, 1)])
    }

    pub fn power(v: VarRef, e: u32) -> Self {
        if e == 0 {
            Self::one()
        } else {
            Monomial(vec![(v, e)])
        }
    }

    /// Builds a monomial from arbitrary `(variable, exponent)` pairs, merging
    /// repeats and dropping zero exponents.
    pub fn from_pairs<I: IntoIterator<Item = (VarRef, u32)>>(pairs: I) -> Self {
        let mut map: BTreeMap<VarRef, u32> = BTreeMap::new();
        for (v, e) in pairs {
            *map.entry(v).or_insert(0) += e;
        }
        Monomial(map.into_iter().filter(|&(_, e)| e > 0).collect())
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (VarRef, u32)> + '_ {
        self.0.iter().copied()
    }

    pub fn exponent(&self, v: VarRef) -> u32 {
        match self.0.binary_search_by(|(w, _)| w.cmp(&v)) {
            Ok(i) => self.0[i].1,
            Err(_) => 0,
        }
    }

    /// Truncation grade: `sum_k k * exp(a_k) + exp(x)`.
    pub fn grade(&self) -> u32 {
        self.0.iter().map(|(v, e)| v.grade() * e).sum()
    }

    pub fn contains_family(&self, family: Family) -> bool {
        self.0.iter().any(|(v, _)| v.family == family)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial(out)
    }

    /// `self / other` if `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = Vec::with_capacity(self.0.len());
        let mut j = 0;
        for &(v, e) in &self.0 {
            if j < other.0.len() && other.0[j].0 == v {
                let d = other.0[j].1;
                if d > e {
                    return None;
                }
                if e > d {
                    out.push((v, e - d));
                }
                j += 1;
            } else if j < other.0.len() && other.0[j].0 < v {
                return None;
            } else {
                out.push((v, e));
            }
        }
        (j == other.0.len()).then_some(Monomial(out))
    }

    /// Index dilation `v_i -> v_{k i}`; scalar exponents are multiplied by `k`.
    pub fn reindex(&self, k: u32) -> Monomial {
        Monomial::from_pairs(self.0.iter().map(|&(v, e)| {
            if v.family.is_scalar() {
                (v, e * k)
            } else {
                (VarRef::indexed(v.family, v.index * k), e)
            }
        }))
    }
}

/// Parses the space-separated display form, e.g. `a1^5 b1^10` or `1`.
impl std::str::FromStr for Monomial {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let mut pairs = Vec::new();
        for factor in s.split_whitespace() {
            if factor == "1" {
                continue;
            }
            let (name, e) = match factor.split_once('^') {
                Some((name, e)) => (
                    name,
                    e.parse::<u32>()
                        .map_err(|err| format!("`{factor}`: {err}"))?,
                ),
                None => (factor, 1),
            };
            pairs.push((name.parse::<VarRef>()?, e));
        }
        Ok(Monomial::from_pairs(pairs))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (i, (v, e)) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            if *e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

/// A finite linear combination of monomials with exact rational
/// coefficients, optionally truncated at a maximum grade.
///
/// `trunc == None` means the series is exact. With `Some(t)`, no stored term
/// has grade above `t` and the terms of grade `<= t` are exact.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndexSeries {
    terms: BTreeMap<Monomial, Rational>,
    trunc: Option<u32>,
}

fn min_trunc(a: Option<u32>, b: Option<u32>) -> Option<u32> {
    match (a, b) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (Some(x), None) | (None, Some(x)) => Some(x),
        (None, None) => None,
    }
}

fn within(grade: u32, trunc: Option<u32>) -> bool {
    trunc.is_none_or(|t| grade <= t)
}

impl Default for IndexSeries {
    fn default() -> Self {
        Self::zero()
    }
}

impl IndexSeries {
    pub fn zero() -> Self {
        IndexSeries {
            terms: BTreeMap::new(),
            trunc: None,
        }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::term(c, Monomial::one())
    }

    pub fn var(v: VarRef) -> Self {
        Self::term(Rational::one(), Monomial::var(v))
    }

    pub fn term(c: Rational, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        IndexSeries { terms, trunc: None }
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, Rational)>>(terms: I) -> Self {
        let mut out = Self::zero();
        for (m, c) in terms {
            out.add_term(m, c);
        }
        out
    }

    /// Adds `c * m` in place, respecting the truncation.
    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() || !within(m.grade(), self.trunc) {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn trunc(&self) -> Option<u32> {
        self.trunc
    }

    /// Drops terms above `order` and lowers the truncation accordingly.
    pub fn truncate(mut self, order: u32) -> Self {
        let order = min_trunc(self.trunc, Some(order));
        self.terms.retain(|m, _| within(m.grade(), order));
        self.trunc = order;
        self
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn variables(&self) -> BTreeSet<VarRef> {
        self.terms
            .keys()
            .flat_map(|m| m.iter().map(|(v, _)| v))
            .collect()
    }

    pub fn max_grade(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::grade).max()
    }

    /// Lowest grade present, or `None` for the zero series.
    pub fn min_grade(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::grade).min()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return IndexSeries {
                terms: BTreeMap::new(),
                trunc: self.trunc,
            };
        }
        IndexSeries {
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
            trunc: self.trunc,
        }
    }

    pub fn add(&self, other: &IndexSeries) -> IndexSeries {
        let trunc = min_trunc(self.trunc, other.trunc);
        let mut out = IndexSeries {
            terms: BTreeMap::new(),
            trunc,
        };
        for (m, c) in self.terms.iter().chain(other.terms.iter()) {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &IndexSeries) -> IndexSeries {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> IndexSeries {
        IndexSeries {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
            trunc: self.trunc,
        }
    }

    pub fn mul(&self, other: &IndexSeries) -> IndexSeries {
        let trunc = min_trunc(self.trunc, other.trunc);
        let rhs: Vec<(&Monomial, &Rational, u32)> =
            other.terms.iter().map(|(m, c)| (m, c, m.grade())).collect();
        let mut acc: HashMap<Monomial, Rational> = HashMap::new();
        for (ma, ca) in &self.terms {
            let ga = ma.grade();
            if !within(ga, trunc) {
                continue;
            }
            for &(mb, cb, gb) in &rhs {
                if !within(ga + gb, trunc) {
                    continue;
                }
                let m = ma.mul(mb);
                let c = ca * cb;
                match acc.get_mut(&m) {
                    Some(slot) => *slot += c,
                    None => {
                        acc.insert(m, c);
                    }
                }
            }
        }
        IndexSeries {
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
            trunc,
        }
    }

    pub fn pow(&self, e: u32) -> IndexSeries {
        let mut result = IndexSeries::one();
        result.trunc = self.trunc;
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    /// Plethystic dilation: every `v_i` becomes `v_{k i}` and every scalar
    /// `s` becomes `s^k`. Grades scale by `k`, and so does the truncation.
    pub fn reindex(&self, k: u32) -> IndexSeries {
        assert!(k >= 1, "reindex factor must be positive");
        if k == 1 {
            return self.clone();
        }
        IndexSeries {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.reindex(k), c.clone()))
                .collect(),
            trunc: self.trunc.map(|t| t * k),
        }
    }

    /// [`reindex`](Self::reindex) followed by truncation at `cap`.
    pub fn reindex_capped(&self, k: u32, cap: u32) -> IndexSeries {
        self.reindex(k).truncate(cap)
    }

    pub fn partial_derivative(&self, v: VarRef) -> IndexSeries {
        let mut out = IndexSeries {
            terms: BTreeMap::new(),
            trunc: self.trunc,
        };
        for (m, c) in &self.terms {
            let e = m.exponent(v);
            if e == 0 {
                continue;
            }
            let reduced = m.div(&Monomial::var(v)).expect("exponent checked");
            out.add_term(reduced, c * Rational::from_integer(BigInt::from(e)));
        }
        out
    }

    /// Exact division by a monomial; fails if any term lacks the factor.
    pub fn divide_by_monomial(&self, d: &Monomial) -> Result<IndexSeries> {
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let q = m.div(d).ok_or_else(|| Error::InexactDivision {
                divisor: d.to_string(),
                term: m.to_string(),
            })?;
            terms.insert(q, c.clone());
        }
        // Dividing by a graded monomial lowers grades, so the truncation
        // bound drops by the same amount.
        let g = d.grade();
        let trunc = self.trunc.map(|t| t.saturating_sub(g));
        Ok(IndexSeries { terms, trunc })
    }

    /// Replaces variables by series.
    ///
    /// `image(v)` returns the replacement for `v`, or `None` to leave `v`
    /// untouched. The result is expanded and truncated at `trunc` (further
    /// limited by the input's own truncation and that of every image).
    pub fn substitute_with<F>(&self, trunc: Option<u32>, mut image: F) -> Result<IndexSeries>
    where
        F: FnMut(VarRef) -> Option<IndexSeries>,
    {
        let mut images: BTreeMap<VarRef, IndexSeries> = BTreeMap::new();
        let mut out_trunc = min_trunc(trunc, self.trunc);
        for v in self.variables() {
            if let Some(s) = image(v) {
                // Terms dropped by truncating the input can only be ignored
                // if substitution never lowers their grade.
                if self.trunc.is_some() && s.min_grade().is_some_and(|g| g < v.grade()) {
                    return Err(Error::TruncationUnsound { var: v });
                }
                out_trunc = min_trunc(out_trunc, s.trunc);
                images.insert(v, s);
            }
        }

        let mut powers: HashMap<VarRef, Vec<IndexSeries>> = HashMap::new();
        let mut out = IndexSeries {
            terms: BTreeMap::new(),
            trunc: out_trunc,
        };
        for (m, c) in &self.terms {
            if !within(m.grade(), out_trunc) {
                continue;
            }
            let mut kept = Vec::new();
            let mut acc = IndexSeries::constant(c.clone());
            acc.trunc = out_trunc;
            for (v, e) in m.iter() {
                let Some(base) = images.get(&v) else {
                    kept.push((v, e));
                    continue;
                };
                let table = powers.entry(v).or_insert_with(|| {
                    let mut unit = IndexSeries::one();
                    unit.trunc = out_trunc;
                    vec![unit]
                });
                while table.len() <= e as usize {
                    let next = table.last().unwrap().mul(base).truncate_opt(out_trunc);
                    table.push(next);
                }
                acc = acc.mul(&table[e as usize]);
                if acc.is_zero() {
                    break;
                }
            }
            if acc.is_zero() {
                continue;
            }
            let rest = Monomial(kept);
            for (am, ac) in acc.terms {
                out.add_term(am.mul(&rest), ac);
            }
        }
        Ok(out)
    }

    /// Substitution from an explicit assignment map; unassigned variables
    /// pass through unchanged.
    pub fn substitute(
        &self,
        assignment: &BTreeMap<VarRef, IndexSeries>,
        trunc: Option<u32>,
    ) -> Result<IndexSeries> {
        self.substitute_with(trunc, |v| assignment.get(&v).cloned())
    }

    fn truncate_opt(self, order: Option<u32>) -> Self {
        match order {
            Some(t) => self.truncate(t),
            None => self,
        }
    }

    /// True if every coefficient is a nonnegative integer.
    pub fn is_counting(&self) -> bool {
        self.terms
            .values()
            .all(|c| c.is_integer() && !c.is_negative())
    }

    /// Canonical text form: a header, the truncation, then one term per
    /// line as `p/q monomial` in monomial order.
    pub fn to_canonical_text(&self) -> String {
        let mut s = String::from("walsh-series v1\n");
        match self.trunc {
            Some(t) => s.push_str(&format!("trunc {t}\n")),
            None => s.push_str("trunc exact\n"),
        }
        for (m, c) in &self.terms {
            s.push_str(&format!("{}/{} {}\n", c.numer(), c.denom(), m));
        }
        s
    }

    pub fn parse_canonical_text(text: &str) -> Result<IndexSeries> {
        let err = |line: usize, message: String| Error::Parse { line, message };
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        match lines.next() {
            Some((_, "walsh-series v1")) => {}
            Some((n, other)) => return Err(err(n, format!("unexpected header `{other}`"))),
            None => return Err(err(0, "empty input".into())),
        }
        let trunc = match lines.next() {
            Some((_, "trunc exact")) => None,
            Some((n, l)) => {
                let t = l
                    .strip_prefix("trunc ")
                    .and_then(|t| t.parse::<u32>().ok())
                    .ok_or_else(|| err(n, format!("bad truncation line `{l}`")))?;
                Some(t)
            }
            None => return Err(err(0, "missing truncation line".into())),
        };
        let mut out = IndexSeries {
            terms: BTreeMap::new(),
            trunc,
        };
        for (n, l) in lines {
            let mut parts = l.split_whitespace();
            let coef = parts.next().unwrap();
            let (p, q) = coef
                .split_once('/')
                .ok_or_else(|| err(n, format!("coefficient `{coef}` is not p/q")))?;
            let p: BigInt = p.parse().map_err(|e| err(n, format!("{e}")))?;
            let q: BigInt = q.parse().map_err(|e| err(n, format!("{e}")))?;
            if q.is_zero() {
                return Err(err(n, "zero denominator".into()));
            }
            let rest: Vec<&str> = parts.collect();
            let m: Monomial = rest.join(" ").parse().map_err(|e| err(n, e))?;
            out.add_term(m, Rational::new(p, q));
        }
        Ok(out)
    }
}

impl fmt::Display for IndexSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let (sign, mag) = if c.is_negative() {
                ("-", -c)
            } else {
                ("+", c.clone())
            };
            if i == 0 {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            match (mag.is_one(), m.is_one()) {
                (true, true) => write!(f, "1")?,
                (true, false) => write!(f, "{}", m.to_string().replace(' ', "*"))?,
                (false, true) => write!(f, "{mag}")?,
                (false, false) => write!(f, "{mag}*{}", m.to_string().replace(' ', "*"))?,
            }
        }
        Ok(())
    }
}

impl Add for &IndexSeries {
    type Output = IndexSeries;
    fn add(self, rhs: &IndexSeries) -> IndexSeries {
        IndexSeries::add(self, rhs)
    }
}

impl Sub for &IndexSeries {
    type Output = IndexSeries;
    fn sub(self, rhs: &IndexSeries) -> IndexSeries {
        IndexSeries::sub(self, rhs)
    }
}

impl Mul for &IndexSeries {
    type Output = IndexSeries;
    fn mul(self, rhs: &IndexSeries) -> IndexSeries {
        IndexSeries::mul(self, rhs)
    }
}

impl Neg for &IndexSeries {
    type Output = IndexSeries;
    fn neg(self) -> IndexSeries {
        IndexSeries::neg(self)
    }
}

/// Shorthand for building monomials in tests and data tables:
/// `mono(&[(a(1), 5), (b(1), 10)])`.
pub fn mono(pairs: &[(VarRef, u32)]) -> Monomial {
    Monomial::from_pairs(pairs.iter().copied())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a(k: u32) -> VarRef {
        VarRef::a(k)
    }
    fn b(k: u32) -> VarRef {
        VarRef::b(k)
    }
    fn c(k: u32) -> VarRef {
        VarRef::c(k)
    }

    fn s(v: VarRef) -> IndexSeries {
        IndexSeries::var(v)
    }

    #[test]
    fn like_terms_collect() {
        let p = &s(a(1)) + &s(a(1));
        assert_eq!(p.coefficient(&Monomial::var(a(1))), int(2));
        assert_eq!(p.len(), 1);
    }

    #[test]
    fn cancellation_leaves_empty_series() {
        let m = mono(&[(a(1), 2), (b(1), 1)]);
        let p = IndexSeries::term(ratio(1, 2), m.clone());
        let q = IndexSeries::term(ratio(-1, 2), m);
        assert!((&p + &q).is_zero());
    }

    #[test]
    fn disjoint_supports_survive_addition() {
        let p = IndexSeries::term(ratio(1, 120), mono(&[(a(1), 5), (b(1), 10)]));
        let q = IndexSeries::term(int(1), mono(&[(VarRef::x(), 8), (VarRef::y(), 19)])).add(
            &IndexSeries::term(int(1), mono(&[(VarRef::x(), 8), (VarRef::y(), 18)])),
        );
        let r = &p + &q;
        assert_eq!(r.len(), 3);
        assert_eq!(
            r.coefficient(&mono(&[(a(1), 5), (b(1), 10)])),
            ratio(1, 120)
        );
    }

    #[test]
    fn products() {
        assert_eq!(
            &s(a(1)) * &s(a(2)),
            IndexSeries::term(int(1), mono(&[(a(1), 1), (a(2), 1)]))
        );
        let lhs = &(&s(a(1)) + &s(a(2))) * &(&s(a(1)) - &s(a(2)));
        let rhs = &IndexSeries::term(int(1), mono(&[(a(1), 2)]))
            - &IndexSeries::term(int(1), mono(&[(a(2), 2)]));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn grade_overflow_is_pruned() {
        let x = VarRef::x();
        let p = IndexSeries::term(int(1), mono(&[(x, 1), (a(1), 1)])).truncate(3);
        let q = IndexSeries::term(int(1), mono(&[(x, 3), (a(3), 1)]));
        assert!((&p * &q).is_zero());
    }

    #[test]
    fn reindex_dilates_indices() {
        let p = IndexSeries::term(int(1), mono(&[(a(1), 1), (b(1), 2)]));
        assert_eq!(
            p.reindex(3),
            IndexSeries::term(int(1), mono(&[(a(3), 1), (b(3), 2)]))
        );
        assert_eq!(p.reindex(1), p);
        let q = &s(a(1)) + &IndexSeries::term(int(1), mono(&[(b(2), 1), (c(1), 1)]));
        assert_eq!(q.reindex(2).reindex(3), q.reindex(6));
        assert_eq!(
            q.reindex(6).coefficient(&mono(&[(b(12), 1), (c(6), 1)])),
            int(1)
        );
    }

    #[test]
    fn reindex_scales_scalars_and_truncation() {
        let p = IndexSeries::term(int(1), mono(&[(VarRef::x(), 2), (VarRef::y(), 3)])).truncate(4);
        let r = p.reindex(2);
        assert_eq!(r.trunc(), Some(8));
        assert_eq!(
            r.coefficient(&mono(&[(VarRef::x(), 4), (VarRef::y(), 6)])),
            int(1)
        );
        assert!(p.reindex_capped(3, 5).is_zero());
    }

    #[test]
    fn substitute_scalars() {
        let p = IndexSeries::term(int(1), mono(&[(a(1), 2), (b(1), 1)]));
        let mut map = BTreeMap::new();
        map.insert(a(1), s(VarRef::x()));
        map.insert(b(1), s(VarRef::y()));
        let r = p.substitute(&map, None).unwrap();
        assert_eq!(
            r,
            IndexSeries::term(int(1), mono(&[(VarRef::x(), 2), (VarRef::y(), 1)]))
        );
    }

    #[test]
    fn substitute_b2_by_dilated_network() {
        let net = IndexSeries::term(int(1), mono(&[(VarRef::x(), 3), (VarRef::y(), 9)]));
        let mut map = BTreeMap::new();
        map.insert(b(2), net.reindex(2));
        let r = s(b(2)).substitute(&map, None).unwrap();
        assert_eq!(
            r,
            IndexSeries::term(int(1), mono(&[(VarRef::x(), 6), (VarRef::y(), 18)]))
        );
    }

    #[test]
    fn unassigned_variables_pass_through() {
        let p = IndexSeries::term(int(3), mono(&[(a(1), 2), (c(4), 1)]));
        let mut map = BTreeMap::new();
        map.insert(a(1), s(VarRef::x()));
        let r = p.substitute(&map, None).unwrap();
        assert_eq!(
            r,
            IndexSeries::term(int(3), mono(&[(c(4), 1), (VarRef::x(), 2)]))
        );
    }

    #[test]
    fn grade_lowering_substitution_of_truncated_series_is_rejected() {
        let p = s(a(1)).truncate(3);
        let err = p
            .substitute_with(None, |v| (v == a(1)).then(IndexSeries::one))
            .unwrap_err();
        assert_eq!(err, Error::TruncationUnsound { var: a(1) });
        // Exact inputs are always fine.
        assert_eq!(
            s(a(1))
                .substitute_with(None, |_| Some(IndexSeries::one()))
                .unwrap(),
            IndexSeries::one()
        );
    }

    #[test]
    fn derivatives() {
        let p = IndexSeries::term(int(1), mono(&[(b(1), 10)]));
        assert_eq!(
            p.partial_derivative(b(1)),
            IndexSeries::term(int(10), mono(&[(b(1), 9)]))
        );
        let q = IndexSeries::term(ratio(1, 120), mono(&[(a(1), 5), (b(1), 10)]));
        assert_eq!(
            q.partial_derivative(b(1)),
            IndexSeries::term(ratio(1, 12), mono(&[(a(1), 5), (b(1), 9)]))
        );
        let r = IndexSeries::term(int(1), mono(&[(a(2), 1), (b(2), 4)]));
        assert!(r.partial_derivative(c(1)).is_zero());
    }

    #[test]
    fn coefficients() {
        let x = VarRef::x();
        let y = VarRef::y();
        let p = &IndexSeries::term(int(1), mono(&[(x, 5), (y, 10)]))
            + &IndexSeries::term(int(2), mono(&[(x, 8), (y, 19)]));
        assert_eq!(p.coefficient(&mono(&[(x, 8), (y, 19)])), int(2));
        assert_eq!(IndexSeries::zero().coefficient(&mono(&[(x, 1)])), int(0));
    }

    #[test]
    fn exact_division() {
        let p = IndexSeries::term(int(2), mono(&[(a(1), 3), (b(1), 1)]));
        let q = p.divide_by_monomial(&mono(&[(a(1), 2)])).unwrap();
        assert_eq!(q, IndexSeries::term(int(2), mono(&[(a(1), 1), (b(1), 1)])));
        assert!(p.divide_by_monomial(&mono(&[(a(2), 1)])).is_err());
    }

    #[test]
    fn canonical_text_round_trip() {
        let p = &IndexSeries::term(ratio(1, 120), mono(&[(a(1), 5), (b(1), 10)]))
            + &IndexSeries::term(
                ratio(-3, 7),
                mono(&[(VarRef::beta(2), 1), (VarRef::gamma(1), 2)]),
            );
        let p = &p + &IndexSeries::one();
        let text = p.to_canonical_text();
        assert!(text.contains("1/120 a1^5 b1^10\n"));
        assert!(text.contains("1/1 1\n"));
        assert_eq!(IndexSeries::parse_canonical_text(&text).unwrap(), p);
        let t = p.truncate(4);
        assert_eq!(
            IndexSeries::parse_canonical_text(&t.to_canonical_text()).unwrap(),
            t
        );
    }

    #[test]
    fn variable_parsing() {
        assert_eq!("beta12".parse::<VarRef>().unwrap(), VarRef::beta(12));
        assert_eq!("y".parse::<VarRef>().unwrap(), VarRef::y());
        assert!("a0".parse::<VarRef>().is_err());
        assert!("x2".parse::<VarRef>().is_err());
        assert!("q1".parse::<VarRef>().is_err());
        assert!(VarRef::new(Family::Y, 2).is_err());
    }
}
