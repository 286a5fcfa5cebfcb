//! Closed-form Walsh series for the core graphs: complete graphs, cycles,
//! matched paths and cycles, `K5`, the `K5 \ e` network and the `M`/`M*`
//! graphs, plus the passage from a 2-connected class to its networks.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

use crate::error::Result;
use crate::matching::{cycle_matching, evaluate_at, path_matching, path_matching_times_z};
use crate::oracle::Sign;
use crate::series::{int, ratio, IndexSeries, Monomial, Rational, VarRef};

fn v(var: VarRef) -> IndexSeries {
    IndexSeries::var(var)
}

fn m(pairs: &[(VarRef, u32)]) -> IndexSeries {
    IndexSeries::term(Rational::one(), Monomial::from_pairs(pairs.iter().copied()))
}

fn from_table(denominator: i64, rows: &[(i64, &str)]) -> IndexSeries {
    IndexSeries::from_terms(rows.iter().map(|&(c, mono)| {
        (
            mono.parse::<Monomial>().expect("well-formed table entry"),
            ratio(c, denominator),
        )
    }))
}

pub fn divisors(n: u32) -> Vec<u32> {
    (1..=n).filter(|&d| n.is_multiple_of(d)).collect()
}

/// Euler's totient by trial division.
pub fn totient(n: u32) -> u32 {
    let mut result = n;
    let mut rest = n;
    let mut p = 2;
    while p * p <= rest {
        if rest.is_multiple_of(p) {
            while rest.is_multiple_of(p) {
                rest /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if rest > 1 {
        result -= result / rest;
    }
    result
}

/// `W_{K5}`, transcribed term by term (seven conjugacy classes of `S_5`).
pub fn walsh_k5() -> IndexSeries {
    from_table(
        120,
        &[
            (1, "a1^5 b1^10"),
            (10, "a1^3 a2 b1^3 b2^3 c1"),
            (15, "a1 a2^2 b2^4 c1^2"),
            (20, "a1^2 a3 b1 b3^3"),
            (20, "a2 a3 b3 b6 c1"),
            (30, "a1 a4 b4^2 c2"),
            (24, "a5 b5^2"),
        ],
    )
}

/// `W^{+/-}` of the `K5 \ e` network, derived from [`walsh_k5`].
pub fn walsh_k5e(sign: Sign) -> IndexSeries {
    let (plus, minus) = edge_deleted_networks(&walsh_k5()).expect("K5 has both edge types");
    match sign {
        Sign::Plus => plus,
        Sign::Minus => minus,
    }
}

/// `W_M`: two `K5`s glued along an edge. `|Aut(M)| = 144`.
pub fn walsh_m() -> IndexSeries {
    from_table(
        144,
        &[
            (1, "a1^8 b1^19"),
            (1, "a1^6 a2 b1^6 b2^6 c1"),
            (6, "a1^6 a2 b1^12 b2^3 c1"),
            (6, "a1^4 a2^2 b1^3 b2^7 c1^2"),
            (9, "a1^4 a2^2 b1^5 b2^6 c1^2"),
            (9, "a1^2 a2^3 b2^8 c1^3"),
            (6, "a1^2 a2^3 b1 b2^9"),
            (6, "a2^4 b2^9 c1"),
            (4, "a1^5 a3 b1^10 b3^3"),
            (4, "a1^3 a2 a3 b1^3 b2^3 b3 b6 c1"),
            (12, "a1^3 a2 a3 b1^3 b2^3 b3^3 c1"),
            (12, "a1 a2^2 a3 b2^4 b3 b6 c1^2"),
            (4, "a1^2 a3^2 b1 b3^6"),
            (4, "a2 a3^2 b3^2 b6^2 c1"),
            (18, "a1^2 a2 a4 b1 b2^2 b4^3 c2"),
            (18, "a2^2 a4 b2^2 b4^3 c1 c2"),
            (12, "a1^2 a6 b1 b6^3"),
            (12, "a2 a6 b6^3 c1"),
        ],
    )
}

/// `W_{M*}`: the `M`-graph with the shared edge removed.
pub fn walsh_mstar() -> IndexSeries {
    from_table(
        144,
        &[
            (1, "a1^8 b1^18"),
            (1, "a1^6 a2 b1^6 b2^6"),
            (6, "a1^6 a2 b1^11 b2^3 c1"),
            (6, "a1^4 a2^2 b1^3 b2^7 c1"),
            (9, "a1^4 a2^2 b1^4 b2^6 c1^2"),
            (9, "a1^2 a2^3 b2^8 c1^2"),
            (6, "a1^2 a2^3 b2^9"),
            (6, "a2^4 b2^9"),
            (4, "a1^5 a3 b1^9 b3^3"),
            (4, "a1^3 a2 a3 b1^3 b2^3 b3 b6"),
            (12, "a1^3 a2 a3 b1^2 b2^3 b3^3 c1"),
            (12, "a1 a2^2 a3 b2^4 b3 b6 c1"),
            (4, "a1^2 a3^2 b3^6"),
            (4, "a2 a3^2 b3^2 b6^2"),
            (18, "a1^2 a2 a4 b2^2 b4^3 c2"),
            (18, "a2^2 a4 b2^2 b4^3 c2"),
            (12, "a1^2 a6 b6^3"),
            (12, "a2 a6 b6^3"),
        ],
    )
}

/// Walsh series of the `n`-cycle (dihedral action), `n >= 3`.
pub fn walsh_cycle(n: u32) -> IndexSeries {
    assert!(n >= 3, "cycles start at n = 3");
    let (a, b, c) = (VarRef::a, VarRef::b, VarRef::c);
    let mut out = IndexSeries::zero();
    for d in divisors(n) {
        let term = m(&[(a(d), n / d), (b(d), n / d)]);
        out = &out + &term.scale(&ratio(totient(d) as i64, 2 * n as i64));
    }
    let reflections = if n % 2 == 1 {
        let h = (n - 1) / 2;
        m(&[(a(1), 1), (a(2), h), (b(2), h), (c(1), 1)]).scale(&ratio(1, 2))
    } else {
        let h = n / 2;
        // Axis through two opposite edges, then through two opposite vertices.
        let through_edges = m(&[(a(2), h), (b(2), h - 1), (c(1), 2)]);
        let through_vertices = m(&[(a(1), 2), (a(2), h - 1), (b(2), h)]);
        (&through_edges + &through_vertices).scale(&ratio(1, 4))
    };
    &out + &reflections
}

/// Integer partitions of `n` as multiplicity vectors (`mult[i-1]` parts of size `i`).
fn partitions(n: u32) -> Vec<Vec<u32>> {
    fn rec(rest: u32, max_part: u32, mult: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if rest == 0 {
            out.push(mult.clone());
            return;
        }
        for part in (1..=max_part.min(rest)).rev() {
            mult[part as usize - 1] += 1;
            rec(rest - part, part, mult, out);
            mult[part as usize - 1] -= 1;
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut vec![0; n as usize], &mut out);
    out
}

fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// `W_{K_n}` summed over cycle types of `S_n`.
pub fn walsh_complete(n: u32) -> IndexSeries {
    assert!(
        (1..=12).contains(&n),
        "walsh_complete supports 1 <= n <= 12"
    );
    let mut out = IndexSeries::zero();
    for mult in partitions(n) {
        let mut pairs = Vec::new();
        let mut denom = BigInt::one();
        for (idx, &ni) in mult.iter().enumerate() {
            let i = idx as u32 + 1;
            if ni == 0 {
                continue;
            }
            denom *= BigInt::from(i).pow(ni) * factorial(ni);
            pairs.push((VarRef::a(i), ni));
            // Edges inside one block of cycles of equal length i.
            let cyl = i * (ni * (ni - 1) / 2) + ((i - 1) / 2) * ni;
            pairs.push((VarRef::b(i), cyl));
            // Long diagonals of the 2i-cycles are Möbius i-cycles.
            if i.is_multiple_of(2) {
                pairs.push((VarRef::c(i / 2), ni));
            }
            for (jdx, &nj) in mult.iter().enumerate().skip(idx + 1) {
                let j = jdx as u32 + 1;
                if nj > 0 {
                    pairs.push((VarRef::b(i.lcm(&j)), i.gcd(&j) * ni * nj));
                }
            }
        }
        let coef = Rational::new(BigInt::one(), denom);
        out.add_term(Monomial::from_pairs(pairs), coef);
    }
    out
}

/// `V_j(b_k, beta_k) = beta_k * U_j(b_k, beta_k)`, polynomial for all `j >= 0`.
fn beta_times_path(j: u32, k: u32) -> IndexSeries {
    evaluate_at(
        &path_matching_times_z(j),
        &v(VarRef::b(k)),
        &v(VarRef::beta(k)),
    )
}

fn path_at(j: u32, k: u32) -> IndexSeries {
    let u = path_matching(j).expect("index >= 1 at every call site");
    evaluate_at(&u, &v(VarRef::b(k)), &v(VarRef::beta(k)))
}

/// Extended Walsh series of matched paths on `n >= 1` vertices.
///
/// Products `beta_2 * U_0(b_2, beta_2)` are cancelled to `1` before being
/// formed, so `n = 1` and `n = 2` need no special cases.
pub fn walsh_matched_path(n: u32) -> IndexSeries {
    assert!(n >= 1);
    let (a, c, gamma) = (VarRef::a, VarRef::c, VarRef::gamma);
    let identity = &m(&[(a(1), n)]) * &path_at(n, 1);
    let reflection = if n % 2 == 1 {
        let h = (n - 1) / 2;
        &m(&[(a(1), 1), (a(2), h)]) * &beta_times_path(h, 2)
    } else {
        let h = n / 2;
        let free = &v(gamma(1)) * &path_at(h, 2);
        let fixed = &v(c(1)) * &beta_times_path(h - 1, 2);
        &m(&[(a(2), h)]) * &(&free + &fixed)
    };
    (&identity + &reflection).scale(&ratio(1, 2))
}

/// Extended Walsh series of matched `n`-cycles, `n >= 3`.
pub fn walsh_matched_cycle(n: u32) -> IndexSeries {
    assert!(n >= 3, "cycles start at n = 3");
    let (a, b, c, beta, gamma) = (VarRef::a, VarRef::b, VarRef::c, VarRef::beta, VarRef::gamma);
    let mut rotations = IndexSeries::zero();
    for d in divisors(n) {
        let k = n / d;
        let t = evaluate_at(&cycle_matching(d), &v(b(k)), &v(beta(k)));
        let term = &m(&[(a(k), d)]) * &t;
        rotations = &rotations + &term.scale(&ratio(totient(k) as i64, 2 * n as i64));
    }
    let reflections = if n % 2 == 1 {
        let h = (n - 1) / 2;
        // beta2 gamma1 U_h + beta2^2 c1 U_{h-1}
        let inner = &(&v(gamma(1)) * &beta_times_path(h, 2))
            + &(&m(&[(beta(2), 1), (c(1), 1)]) * &beta_times_path(h - 1, 2));
        (&m(&[(a(1), 1), (a(2), h)]) * &inner).scale(&ratio(1, 2))
    } else {
        let h = n / 2;
        let through_vertices =
            &m(&[(a(1), 2), (a(2), h - 1), (beta(2), 1)]) * &beta_times_path(h - 1, 2);
        let edge_terms = &(&(&m(&[(gamma(1), 2)]) * &path_at(h, 2))
            + &(&m(&[(c(1), 1), (gamma(1), 1)]) * &beta_times_path(h - 1, 2)).scale(&int(2)))
            + &(&m(&[(c(1), 2), (beta(2), 1)]) * &beta_times_path(h - 2, 2));
        let through_edges = &m(&[(a(2), h)]) * &edge_terms;
        (&through_vertices + &through_edges).scale(&ratio(1, 4))
    };
    &rotations + &reflections
}

/// Tilde generating function of unlabelled matched `n`-cycles in `x`, `y`
/// (matched edges) and `z` (unmatched edges), from the closed form rather
/// than by specializing [`walsh_matched_cycle`].
pub fn matched_cycle_tilde(n: u32) -> IndexSeries {
    assert!(n >= 3);
    let (x, y, z) = (VarRef::x(), VarRef::y(), VarRef::z());
    let at = |poly: &IndexSeries, k: u32| -> IndexSeries {
        evaluate_at(
            poly,
            &IndexSeries::term(int(1), Monomial::power(y, k)),
            &IndexSeries::term(int(1), Monomial::power(z, k)),
        )
    };
    let yz = |i: u32, j: u32| m(&[(y, i), (z, j)]);
    let mut body = IndexSeries::zero();
    for d in divisors(n) {
        let k = n / d;
        body = &body + &at(&cycle_matching(d), k).scale(&ratio(totient(k) as i64, 2 * n as i64));
    }
    let v_at = |j: u32| at(&path_matching_times_z(j), 2);
    let reflections = if n % 2 == 1 {
        let h = (n - 1) / 2;
        // z^3 U_h + y z^4 U_{h-1}, with every U at (y^2, z^2).
        (&(&yz(0, 1) * &v_at(h)) + &(&yz(1, 2) * &v_at(h - 1))).scale(&ratio(1, 2))
    } else {
        let h = n / 2;
        let u_h = at(&path_matching(h).expect("h >= 2"), 2);
        let sum = &(&(&yz(0, 2) * &v_at(h - 1)) + &(&yz(0, 2) * &u_h))
            + &(&(&yz(1, 1) * &v_at(h - 1)).scale(&int(2)) + &(&yz(2, 2) * &v_at(h - 2)));
        sum.scale(&ratio(1, 4))
    };
    &m(&[(x, n)]) * &(&body + &reflections)
}

/// `(W^+_{B01}, W^-_{B01})`: remove an edge from a 2-connected class and
/// make its ends the poles, via `(2/a1^2) dW/db1` and `(2/a2) dW/dc1`.
pub fn edge_deleted_networks(w_b: &IndexSeries) -> Result<(IndexSeries, IndexSeries)> {
    let two = int(2);
    let plus = w_b
        .partial_derivative(VarRef::b(1))
        .scale(&two)
        .divide_by_monomial(&Monomial::power(VarRef::a(1), 2))?;
    let minus = w_b
        .partial_derivative(VarRef::c(1))
        .scale(&two)
        .divide_by_monomial(&Monomial::var(VarRef::a(2)))?;
    Ok((plus, minus))
}

/// The four network series of a 2-connected class `B` containing `K2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiconnectedNetworks {
    /// `W^+` of `B_{0,1}`.
    pub b01_plus: IndexSeries,
    /// `W^-` of `B_{0,1}`.
    pub b01_minus: IndexSeries,
    /// `W^+` of `N_B = (1 + b1) B_{0,1} - 1`.
    pub net_plus: IndexSeries,
    /// `W^-` of `N_B = (1 + c1) B_{0,1} - 1`.
    pub net_minus: IndexSeries,
}

pub fn networks_from_biconnected(w_b: &IndexSeries) -> Result<BiconnectedNetworks> {
    let (b01_plus, b01_minus) = edge_deleted_networks(w_b)?;
    let one = IndexSeries::one();
    let net_plus = &(&(&one + &v(VarRef::b(1))) * &b01_plus) - &one;
    let net_minus = &(&(&one + &v(VarRef::c(1))) * &b01_minus) - &one;
    Ok(BiconnectedNetworks {
        b01_plus,
        b01_minus,
        net_plus,
        net_minus,
    })
}
