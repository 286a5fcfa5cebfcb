//! Homogeneous matching polynomials of paths and cycles.
//!
//! `U_n(y, z)` is the matching polynomial of the path on `n` vertices and
//! `T_n(y, z)` that of the `n`-cycle, with `y` marking matched edges and `z`
//! the unmatched ones. The formal value `U_0 = 1/z` is never materialized;
//! callers that need it use [`path_matching_times_z`], which is polynomial
//! for every `n >= 0`.

use crate::error::{Error, Result};
use crate::series::{int, IndexSeries, Monomial, VarRef};

fn y() -> IndexSeries {
    IndexSeries::var(VarRef::y())
}

fn z() -> IndexSeries {
    IndexSeries::var(VarRef::z())
}

fn yz() -> IndexSeries {
    IndexSeries::term(
        int(1),
        Monomial::from_pairs([(VarRef::y(), 1), (VarRef::z(), 1)]),
    )
}

/// `z * U_n(y, z)` for `n >= 0`, via `V_0 = 1`, `V_1 = z`,
/// `V_n = yz V_{n-2} + z V_{n-1}`.
pub fn path_matching_times_z(n: u32) -> IndexSeries {
    let mut prev = IndexSeries::one();
    if n == 0 {
        return prev;
    }
    let mut cur = z();
    for _ in 2..=n {
        let next = &(&yz() * &prev) + &(&z() * &cur);
        prev = cur;
        cur = next;
    }
    cur
}

/// `U_n(y, z)`, homogeneous of degree `n - 1`.
pub fn path_matching(n: u32) -> Result<IndexSeries> {
    match n {
        0 => Err(Error::PathOfLengthZero),
        1 => Ok(IndexSeries::one()),
        _ => {
            let (mut prev, mut cur) = (IndexSeries::one(), &y() + &z());
            for _ in 3..=n {
                let next = &(&yz() * &prev) + &(&z() * &cur);
                prev = cur;
                cur = next;
            }
            Ok(cur)
        }
    }
}

/// `T_n(y, z)`, with `T_1 = z` and `T_2 = 2yz + z^2`; for `n >= 3` this is
/// `y z^2 U_{n-2} + z U_n`.
pub fn cycle_matching(n: u32) -> IndexSeries {
    assert!(n >= 1, "cycle_matching needs n >= 1");
    match n {
        1 => z(),
        2 => {
            &IndexSeries::term(
                int(2),
                Monomial::from_pairs([(VarRef::y(), 1), (VarRef::z(), 1)]),
            ) + &IndexSeries::term(int(1), Monomial::power(VarRef::z(), 2))
        }
        _ => {
            // y z^2 U_{n-2} = y z (z U_{n-2}), which also covers n = 2 formally.
            let left = &yz() * &path_matching_times_z(n - 2);
            let right = &z() * &path_matching(n).expect("n >= 3");
            &left + &right
        }
    }
}

/// Substitutes `y -> first`, `z -> second` into a matching polynomial.
pub fn evaluate_at(poly: &IndexSeries, first: &IndexSeries, second: &IndexSeries) -> IndexSeries {
    poly.substitute_with(None, |v| {
        if v == VarRef::y() {
            Some(first.clone())
        } else if v == VarRef::z() {
            Some(second.clone())
        } else {
            None
        }
    })
    .expect("matching polynomials are exact")
}

/// Checks the ordinary generating functions
/// `sum U_n x^n = 1 / ((1 - xz - x^2 yz) z)` and
/// `sum T_n x^n = (xz + 2x^2 yz) / (1 - xz - x^2 yz)` through `x^max_n`.
///
/// Both rational functions are expanded as geometric series in
/// `q = xz + x^2 yz`, independently of the recurrences. The path identity is
/// compared after clearing the `1/z`, so its `x^0` coefficient checks the
/// `U_0 = 1/z` convention.
pub fn verify_matching_gf(max_n: u32) -> bool {
    let x = VarRef::x();
    let xz = IndexSeries::term(int(1), Monomial::from_pairs([(x, 1), (VarRef::z(), 1)]));
    let x2yz = IndexSeries::term(
        int(1),
        Monomial::from_pairs([(x, 2), (VarRef::y(), 1), (VarRef::z(), 1)]),
    );
    let q = (&xz + &x2yz).truncate(max_n);

    // 1 / (1 - q) = sum_k q^k; q has x-grade >= 1 so k <= max_n suffices.
    let mut geometric = IndexSeries::one().truncate(max_n);
    let mut power = IndexSeries::one().truncate(max_n);
    for _ in 0..max_n {
        power = &power * &q;
        geometric = &geometric + &power;
    }
    let cycle_numer = &xz + &x2yz.scale(&int(2));
    let cycle_gf = &cycle_numer * &geometric;

    let x_coefficient =
        |series: &IndexSeries, n: u32| -> IndexSeries {
            IndexSeries::from_terms(series.iter().filter(|(m, _)| m.exponent(x) == n).map(
                |(m, c)| {
                    (
                        m.div(&Monomial::power(x, n)).expect("exponent checked"),
                        c.clone(),
                    )
                },
            ))
        };

    (0..=max_n).all(|n| {
        let path_ok = x_coefficient(&geometric, n) == path_matching_times_z(n);
        let cycle_ok = n == 0 || x_coefficient(&cycle_gf, n) == cycle_matching(n);
        path_ok && cycle_ok
    })
}
