//! Network substitution into core graphs, and the labelled and tilde
//! specializations of Walsh series.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::series::{Family, IndexSeries, Monomial, Rational, VarRef};

/// A truncated power series in the scalars `x` (vertices) and `y` (edges).
///
/// With `trunc == Some(t)` the coefficients of `x^i` for `i <= t` are exact
/// and nothing above `t` is stored.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct BivariateSeries {
    terms: BTreeMap<(u32, u32), Rational>,
    trunc: Option<u32>,
}

fn min_trunc(a: Option<u32>, b: Option<u32>) -> Option<u32> {
    match (a, b) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (x, None) => x,
        (None, y) => y,
    }
}

impl BivariateSeries {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(Rational::one(), 0, 0)
    }

    /// `c x^i y^j`.
    pub fn monomial(c: Rational, i: u32, j: u32) -> Self {
        let mut out = Self::zero();
        out.add_term(i, j, c);
        out
    }

    pub fn from_terms<I: IntoIterator<Item = ((u32, u32), Rational)>>(terms: I) -> Self {
        let mut out = Self::zero();
        for ((i, j), c) in terms {
            out.add_term(i, j, c);
        }
        out
    }

    /// Integer coefficients given as `(x-exponent, y-exponent, count)`.
    pub fn from_counts(counts: &[(u32, u32, i64)]) -> Self {
        Self::from_terms(
            counts
                .iter()
                .map(|&(i, j, c)| ((i, j), Rational::from_integer(c.into()))),
        )
    }

    pub fn add_term(&mut self, i: u32, j: u32, c: Rational) {
        if c.is_zero() || self.trunc.is_some_and(|t| i > t) {
            return;
        }
        let slot = self.terms.entry((i, j)).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&(i, j));
        }
    }

    pub fn trunc(&self) -> Option<u32> {
        self.trunc
    }

    pub fn truncate(mut self, order: u32) -> Self {
        let t = min_trunc(self.trunc, Some(order));
        self.terms.retain(|&(i, _), _| t.is_none_or(|t| i <= t));
        self.trunc = t;
        self
    }

    /// Replaces the truncation bound without checking it; used when the
    /// caller knows a sharper exactness bound than the operands carry.
    pub(crate) fn with_trunc(mut self, order: Option<u32>) -> Self {
        self.trunc = None;
        match order {
            Some(t) => self.truncate(t),
            None => self,
        }
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

    pub fn iter(&self) -> impl Iterator<Item = ((u32, u32), &Rational)> {
        self.terms.iter().map(|(&k, c)| (k, c))
    }

    pub fn coefficient(&self, i: u32, j: u32) -> Rational {
        self.terms
            .get(&(i, j))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn max_x_degree(&self) -> Option<u32> {
        self.terms.keys().map(|&(i, _)| i).max()
    }

    pub fn min_x_degree(&self) -> Option<u32> {
        self.terms.keys().map(|&(i, _)| i).min()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self {
                terms: BTreeMap::new(),
                trunc: self.trunc,
            };
        }
        Self {
            terms: self.terms.iter().map(|(&k, v)| (k, v * c)).collect(),
            trunc: self.trunc,
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let trunc = min_trunc(self.trunc, other.trunc);
        let mut out = self.clone().with_trunc(trunc);
        for (&(i, j), c) in &other.terms {
            out.add_term(i, j, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn mul(&self, other: &Self) -> Self {
        let trunc = min_trunc(self.trunc, other.trunc);
        let mut acc: HashMap<(u32, u32), Rational> = HashMap::new();
        for (&(i1, j1), c1) in &self.terms {
            for (&(i2, j2), c2) in &other.terms {
                let i = i1 + i2;
                if trunc.is_some_and(|t| i > t) {
                    continue;
                }
                *acc.entry((i, j1 + j2)).or_insert_with(Rational::zero) += c1 * c2;
            }
        }
        Self {
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
            trunc,
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = Self::one().with_trunc(self.trunc);
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// `f(x^k, y^k)`.
    pub fn reindex(&self, k: u32) -> Self {
        assert!(k >= 1);
        Self {
            terms: self
                .terms
                .iter()
                .map(|(&(i, j), c)| ((i * k, j * k), c.clone()))
                .collect(),
            trunc: self.trunc.map(|t| t * k),
        }
    }

    pub fn derivative_y(&self) -> Self {
        let mut out = Self::zero().with_trunc(self.trunc);
        for (&(i, j), c) in &self.terms {
            if j > 0 {
                out.add_term(i, j - 1, c * Rational::from_integer(j.into()));
            }
        }
        out
    }

    /// `f(x, g(x, y))`, truncated at `trunc` (and at the operands' bounds).
    pub fn substitute_y(&self, g: &Self, trunc: Option<u32>) -> Self {
        let t = min_trunc(trunc, min_trunc(self.trunc, g.trunc));
        let g = g.clone().with_trunc(t);
        let mut powers = vec![Self::one().with_trunc(t)];
        let mut out = Self::zero().with_trunc(t);
        for (&(i, j), c) in &self.terms {
            if t.is_some_and(|t| i > t) {
                continue;
            }
            while powers.len() <= j as usize {
                let next = powers.last().unwrap().mul(&g);
                powers.push(next);
            }
            for (&(pi, pj), pc) in &powers[j as usize].terms {
                out.add_term(i + pi, pj, c * pc);
            }
        }
        out
    }

    /// True if every coefficient is a nonnegative integer.
    pub fn is_counting(&self) -> bool {
        self.terms
            .values()
            .all(|c| c.is_integer() && !c.is_negative())
    }

    /// Fails with [`Error::NotACount`] on the first coefficient that is not
    /// a nonnegative integer.
    pub fn check_counting(&self) -> Result<()> {
        for (&(i, j), c) in &self.terms {
            if !(c.is_integer() && !c.is_negative()) {
                return Err(Error::NotACount {
                    term: format!("x^{i} y^{j}"),
                    value: c.to_string(),
                });
            }
        }
        Ok(())
    }

    /// `f(x, 1)` as coefficients of `x^i`.
    pub fn y_marginal(&self) -> BTreeMap<u32, Rational> {
        let mut out: BTreeMap<u32, Rational> = BTreeMap::new();
        for (&(i, _), c) in &self.terms {
            *out.entry(i).or_insert_with(Rational::zero) += c;
        }
        out.retain(|_, c| !c.is_zero());
        out
    }

    /// Reads a series whose only variables are `x` and `y`.
    pub fn from_index_series(s: &IndexSeries) -> Result<Self> {
        let mut out = Self::zero().with_trunc(s.trunc());
        for (m, c) in s.iter() {
            for (v, _) in m.iter() {
                if v != VarRef::x() && v != VarRef::y() {
                    return Err(Error::UnexpectedVariable { var: v });
                }
            }
            out.add_term(m.exponent(VarRef::x()), m.exponent(VarRef::y()), c.clone());
        }
        Ok(out)
    }

    pub fn to_index_series(&self) -> IndexSeries {
        let s = IndexSeries::from_terms(self.terms.iter().map(|(&(i, j), c)| {
            (
                Monomial::from_pairs([(VarRef::x(), i), (VarRef::y(), j)]),
                c.clone(),
            )
        }));
        match self.trunc {
            Some(t) => s.truncate(t),
            None => s,
        }
    }
}

impl fmt::Display for BivariateSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (&(i, j), c)) in self.terms.iter().enumerate() {
            if n > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}*x^{i}*y^{j}")?;
        }
        if let Some(t) = self.trunc {
            write!(f, " + O(x^{})", t + 1)?;
        }
        Ok(())
    }
}

impl Add for &BivariateSeries {
    type Output = BivariateSeries;
    fn add(self, rhs: Self) -> BivariateSeries {
        BivariateSeries::add(self, rhs)
    }
}

impl Sub for &BivariateSeries {
    type Output = BivariateSeries;
    fn sub(self, rhs: Self) -> BivariateSeries {
        BivariateSeries::sub(self, rhs)
    }
}

impl Mul for &BivariateSeries {
    type Output = BivariateSeries;
    fn mul(self, rhs: Self) -> BivariateSeries {
        BivariateSeries::mul(self, rhs)
    }
}

/// Tilde series of a network class: `plus` counts all networks up to
/// pole-fixing isomorphism, `minus` the pole-exchange symmetric ones.
/// `x` marks internal vertices and `y` edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NetworkSeriesPair {
    pub plus: BivariateSeries,
    pub minus: BivariateSeries,
}

impl NetworkSeriesPair {
    /// Validates the counting invariants: nonnegative integer coefficients
    /// and `minus <= plus` termwise.
    pub fn new(plus: BivariateSeries, minus: BivariateSeries) -> Result<Self> {
        plus.check_counting()?;
        minus.check_counting()?;
        for ((i, j), c) in minus.iter() {
            let p = plus.coefficient(i, j);
            if *c > p {
                return Err(Error::NotACount {
                    term: format!("x^{i} y^{j}"),
                    value: format!("symmetric count {c} exceeds total {p}"),
                });
            }
        }
        Ok(Self { plus, minus })
    }

    /// The tilde pair of a network class given by its Walsh series.
    pub fn from_walsh(plus: &IndexSeries, minus: &IndexSeries) -> Result<Self> {
        Self::new(specialize_tilde(plus)?, specialize_tilde(minus)?)
    }

    /// Largest internal-vertex count for which both series are exact.
    pub fn extent(&self) -> Option<u32> {
        min_trunc(self.plus.trunc, self.minus.trunc)
    }
}

fn reindex_cache<'a>(
    cache: &'a mut HashMap<(bool, u32), IndexSeries>,
    plus: &IndexSeries,
    minus: &IndexSeries,
    is_plus: bool,
    k: u32,
) -> &'a IndexSeries {
    cache.entry((is_plus, k)).or_insert_with(|| {
        if is_plus {
            plus.reindex(k)
        } else {
            minus.reindex(k)
        }
    })
}

fn substitute_edge_family(
    w: &IndexSeries,
    plus: &IndexSeries,
    minus: &IndexSeries,
    trunc: Option<u32>,
    cylindrical: Family,
    mobius: Family,
) -> Result<IndexSeries> {
    let mut cache = HashMap::new();
    w.substitute_with(trunc, |v| {
        let is_plus = if v.family() == cylindrical {
            true
        } else if v.family() == mobius {
            false
        } else {
            return None;
        };
        Some(reindex_cache(&mut cache, plus, minus, is_plus, v.index()).clone())
    })
}

/// Substitutes networks for the edges of a core class: `b_k` becomes
/// `W^+` with indices multiplied by `k`, and `c_k` likewise becomes `W^-`.
pub fn compose_walsh(
    core: &IndexSeries,
    plus: &IndexSeries,
    minus: &IndexSeries,
    trunc: Option<u32>,
) -> Result<IndexSeries> {
    substitute_edge_family(core, plus, minus, trunc, Family::B, Family::C)
}

/// Substitutes networks for the unmatched edges (`beta`, `gamma`) of a
/// matched core class, leaving matched edges (`b`, `c`) in place.
pub fn compose_matched(
    matched_core: &IndexSeries,
    plus: &IndexSeries,
    minus: &IndexSeries,
    trunc: Option<u32>,
) -> Result<IndexSeries> {
    substitute_edge_family(
        matched_core,
        plus,
        minus,
        trunc,
        Family::Beta,
        Family::Gamma,
    )
}

/// Tilde series of the composition of a core class with a network class,
/// computed without forming the composed Walsh series.
///
/// Networks missing from truncated data have more internal vertices than
/// the data covers, so the result is exact up to the smallest core size
/// plus `nets.extent()`; the returned truncation is at most that.
pub fn tilde_of_composition(
    core: &IndexSeries,
    nets: &NetworkSeriesPair,
    trunc: Option<u32>,
) -> Result<BivariateSeries> {
    let mut t = min_trunc(trunc, core.trunc());
    if let (Some(extent), Some(g)) = (nets.extent(), core.min_grade()) {
        t = min_trunc(t, Some(g + extent));
    }
    let plus = nets.plus.clone().with_trunc(None);
    let minus = nets.minus.clone().with_trunc(None);
    let mut powers: HashMap<(bool, u32, u32), BivariateSeries> = HashMap::new();
    let mut out = BivariateSeries::zero().with_trunc(t);
    for (m, c) in core.iter() {
        let mut x_exp = 0;
        let mut y_exp = 0;
        let mut factors = Vec::new();
        for (v, e) in m.iter() {
            let k = v.index();
            match v.family() {
                Family::A => x_exp += k * e,
                Family::X => x_exp += e,
                Family::Y => y_exp += e,
                Family::B => factors.push((true, k, e)),
                Family::C => factors.push((false, k, e)),
                _ => return Err(Error::UnexpectedVariable { var: v }),
            }
        }
        if t.is_some_and(|t| x_exp > t) {
            continue;
        }
        let mut acc = BivariateSeries::monomial(c.clone(), x_exp, y_exp).with_trunc(t);
        for (is_plus, k, e) in factors {
            let factor = powers.entry((is_plus, k, e)).or_insert_with(|| {
                let base = if is_plus { &plus } else { &minus };
                base.reindex(k).with_trunc(t).pow(e)
            });
            acc = acc.mul(factor);
            if acc.is_zero() {
                break;
            }
        }
        for ((i, j), c) in acc.iter() {
            out.add_term(i, j, c.clone());
        }
    }
    out.check_counting()?;
    Ok(out)
}

/// Labelled exponential generating function: `a1 -> x`, `b1 -> y`, every
/// other variable to zero. The coefficient of `x^n y^m` is the number of
/// labelled structures divided by `n!`.
pub fn specialize_labelled(w: &IndexSeries) -> BivariateSeries {
    let mut out = BivariateSeries::zero().with_trunc(w.trunc());
    'terms: for (m, c) in w.iter() {
        let (mut i, mut j) = (0, 0);
        for (v, e) in m.iter() {
            match (v.family(), v.index()) {
                (Family::A, 1) | (Family::X, _) => i += e,
                (Family::B, 1) | (Family::Y, _) => j += e,
                _ => continue 'terms,
            }
        }
        out.add_term(i, j, c.clone());
    }
    out
}

/// Returns the `(x, y, z)` exponents of a monomial under `a_i -> x^i`,
/// `b_i, c_i -> y^i`, `beta_i, gamma_i -> z^i`.
fn tilde_exponents(m: &Monomial) -> (u32, u32, u32) {
    let (mut i, mut j, mut k) = (0, 0, 0);
    for (v, e) in m.iter() {
        let idx = v.index();
        match v.family() {
            Family::A => i += idx * e,
            Family::X => i += e,
            Family::B | Family::C => j += idx * e,
            Family::Y => j += e,
            Family::Beta | Family::Gamma => k += idx * e,
            Family::Z => k += e,
        }
    }
    (i, j, k)
}

/// Unlabelled (tilde) generating function: `a_i -> x^i`, `b_i, c_i -> y^i`.
/// Fails if the result is not a counting series.
pub fn specialize_tilde(w: &IndexSeries) -> Result<BivariateSeries> {
    let mut out = BivariateSeries::zero().with_trunc(w.trunc());
    for (m, c) in w.iter() {
        if let Some((v, _)) = m
            .iter()
            .find(|(v, _)| matches!(v.family(), Family::Beta | Family::Gamma | Family::Z))
        {
            return Err(Error::UnexpectedVariable { var: v });
        }
        let (i, j, _) = tilde_exponents(m);
        out.add_term(i, j, c.clone());
    }
    out.check_counting()?;
    Ok(out)
}

/// Tilde specialization of a two-sort series, with `beta_i, gamma_i -> z^i`;
/// the result is a series in the scalars `x`, `y`, `z`.
pub fn specialize_tilde_matched(w: &IndexSeries) -> Result<IndexSeries> {
    let mut out = IndexSeries::zero();
    for (m, c) in w.iter() {
        let (i, j, k) = tilde_exponents(m);
        let mono = Monomial::from_pairs([(VarRef::x(), i), (VarRef::y(), j), (VarRef::z(), k)]);
        out.add_term(mono, c.clone());
    }
    if !out.is_counting() {
        let (m, c) = out
            .iter()
            .find(|(_, c)| !(c.is_integer() && !c.is_negative()))
            .expect("some coefficient is not a count");
        return Err(Error::NotACount {
            term: m.to_string(),
            value: c.to_string(),
        });
    }
    Ok(match w.trunc() {
        Some(t) => out.truncate(t),
        None => out,
    })
}

/// Checks `composed(x, y) = core(x, networks(x, y))` up to the common
/// truncation order (labelled generating functions).
pub fn labelled_composition_check(
    core: &BivariateSeries,
    networks: &BivariateSeries,
    composed: &BivariateSeries,
) -> bool {
    let t = min_trunc(composed.trunc, min_trunc(core.trunc, networks.trunc));
    let lhs = core.substitute_y(networks, t);
    let rhs = composed.clone();
    match t {
        Some(t) => lhs.truncate(t).terms == rhs.truncate(t).terms,
        None => lhs.terms == rhs.terms,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cores::{walsh_complete, walsh_cycle, walsh_k5, walsh_k5e, walsh_matched_path};
    use crate::oracle::Sign;
    use crate::series::{int, ratio};

    fn bv(counts: &[(u32, u32, i64)]) -> BivariateSeries {
        BivariateSeries::from_counts(counts)
    }

    #[test]
    fn bivariate_arithmetic() {
        let one_plus_y = bv(&[(0, 0, 1), (0, 1, 1)]);
        assert_eq!(one_plus_y.pow(2), bv(&[(0, 0, 1), (0, 1, 2), (0, 2, 1)]));
        let x = bv(&[(1, 0, 1)]).truncate(2);
        assert_eq!(
            (&x + &BivariateSeries::one()).pow(4),
            bv(&[(0, 0, 1), (1, 0, 4), (2, 0, 6)]).truncate(2)
        );
        assert_eq!(bv(&[(1, 2, 3)]).reindex(2), bv(&[(2, 4, 3)]));
        assert_eq!(bv(&[(1, 3, 1)]).derivative_y(), bv(&[(1, 2, 3)]));
    }

    #[test]
    fn labelled_examples() {
        assert_eq!(
            specialize_labelled(&walsh_k5()),
            BivariateSeries::monomial(ratio(1, 120), 5, 10)
        );
        assert_eq!(
            specialize_labelled(&walsh_cycle(4)),
            BivariateSeries::monomial(ratio(1, 8), 4, 4)
        );
        assert!(specialize_labelled(&IndexSeries::zero()).is_zero());
    }

    #[test]
    fn tilde_examples() {
        assert_eq!(specialize_tilde(&walsh_k5()).unwrap(), bv(&[(5, 10, 1)]));
        for sign in [Sign::Plus, Sign::Minus] {
            assert_eq!(
                specialize_tilde(&walsh_k5e(sign)).unwrap(),
                bv(&[(3, 9, 1)])
            );
        }
        let half = IndexSeries::term(ratio(1, 2), Monomial::var(VarRef::a(1)));
        assert!(matches!(
            specialize_tilde(&half),
            Err(Error::NotACount { .. })
        ));
    }

    #[test]
    fn unit_network_is_identity() {
        let w = walsh_complete(4);
        let b1 = IndexSeries::var(VarRef::b(1));
        let c1 = IndexSeries::var(VarRef::c(1));
        assert_eq!(compose_walsh(&w, &b1, &c1, None).unwrap(), w);
        let wm = walsh_matched_path(3);
        let beta = IndexSeries::var(VarRef::beta(1));
        let gamma = IndexSeries::var(VarRef::gamma(1));
        assert_eq!(compose_matched(&wm, &beta, &gamma, None).unwrap(), wm);
    }

    #[test]
    fn bare_edges_collapse_matched_paths() {
        let b1 = IndexSeries::var(VarRef::b(1));
        let c1 = IndexSeries::var(VarRef::c(1));
        let merged = compose_matched(&walsh_matched_path(2), &b1, &c1, None).unwrap();
        // Both matchings of P2 collapse onto the plain edge, counted twice.
        let p2 = walsh_complete(2).scale(&int(2));
        assert_eq!(merged, p2);
    }

    #[test]
    fn crowns_on_a_triangle() {
        let wp = walsh_k5e(Sign::Plus);
        let wm = walsh_k5e(Sign::Minus);
        let full = compose_walsh(&walsh_cycle(3), &wp, &wm, None).unwrap();
        assert_eq!(specialize_tilde(&full).unwrap(), bv(&[(12, 27, 1)]));
    }

    #[test]
    fn matched_crowns_on_a_triangle() {
        let wp = walsh_k5e(Sign::Plus);
        let wm = walsh_k5e(Sign::Minus);
        let crowns =
            compose_matched(&crate::cores::walsh_matched_cycle(3), &wp, &wm, None).unwrap();
        assert_eq!(
            specialize_tilde(&crowns).unwrap(),
            bv(&[(9, 19, 1), (12, 27, 1)])
        );
    }

    #[test]
    fn bare_edge_networks_reproduce_the_core() {
        let nets = NetworkSeriesPair::new(bv(&[(0, 1, 1)]), bv(&[(0, 1, 1)])).unwrap();
        let t = tilde_of_composition(&walsh_k5(), &nets, None).unwrap();
        assert_eq!(t, bv(&[(5, 10, 1)]));
    }

    #[test]
    fn optional_edges_count_graphs() {
        let nets = NetworkSeriesPair::new(bv(&[(0, 0, 1), (0, 1, 1)]), bv(&[(0, 0, 1), (0, 1, 1)]))
            .unwrap();
        let t = tilde_of_composition(&walsh_complete(4), &nets, None).unwrap();
        let counts: Vec<i64> = (0..=6)
            .map(|m| t.coefficient(4, m).to_integer().try_into().unwrap())
            .collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 2, 1, 1]);
    }

    #[test]
    fn symmetric_count_cannot_exceed_total() {
        assert!(NetworkSeriesPair::new(bv(&[(1, 1, 1)]), bv(&[(1, 1, 2)])).is_err());
    }

    #[test]
    fn labelled_check_examples() {
        let k5 = BivariateSeries::monomial(ratio(1, 120), 5, 10);
        let y = bv(&[(0, 1, 1)]);
        assert!(labelled_composition_check(&k5, &y, &k5));
        assert!(!labelled_composition_check(&k5, &bv(&[(0, 1, 2)]), &k5));
        let g = &bv(&[(2, 0, 1)]) + &k5;
        assert!(labelled_composition_check(
            &g,
            &BivariateSeries::zero(),
            &bv(&[(2, 0, 1)])
        ));
    }
}
