//! Rational generating functions guessed from linear recurrences.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// `numerator / denominator` with integer coefficients, lowest degree first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalSeries {
    pub numerator: Vec<i64>,
    pub denominator: Vec<i64>,
    /// Order of the recurrence satisfied by the tail.
    pub order: usize,
    /// Index from which the recurrence holds.
    pub start: usize,
    /// Number of terms checked beyond those used for fitting.
    pub validated_terms: usize,
}

impl RationalSeries {
    /// Power-series coefficients of the quotient.
    pub fn expand(&self, terms: usize) -> Vec<i64> {
        // denominator[0] is always 1.
        let mut out = Vec::with_capacity(terms);
        for n in 0..terms {
            let mut a = *self.numerator.get(n).unwrap_or(&0);
            for i in 1..self.denominator.len().min(n + 1) {
                a -= self.denominator[i] * out[n - i];
            }
            out.push(a);
        }
        out
    }
}

fn poly_fmt(c: &[i64]) -> String {
    let mut s = String::new();
    for (i, &a) in c.iter().enumerate() {
        if a == 0 {
            continue;
        }
        let sign = if a < 0 { "-" } else { "+" };
        if s.is_empty() {
            if a < 0 {
                s.push('-');
            }
        } else {
            s.push_str(&format!(" {sign} "));
        }
        let m = a.abs();
        match (i, m) {
            (0, _) => s.push_str(&m.to_string()),
            (_, 1) => {}
            _ => s.push_str(&m.to_string()),
        }
        match i {
            0 => {}
            1 => s.push('x'),
            _ => s.push_str(&format!("x^{i}")),
        }
    }
    if s.is_empty() {
        s.push('0');
    }
    s
}

impl fmt::Display for RationalSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({})/({})",
            poly_fmt(&self.numerator),
            poly_fmt(&self.denominator)
        )
    }
}

/// Fits the shortest linear recurrence with integer coefficients
/// `a_n = c_1 a_{n-1} + ... + c_d a_{n-d}` (valid from some index on) using
/// at most the first half of the terms, and keeps it only if it reproduces
/// every remaining term. Needs at least 8 terms.
pub fn guess_series(counts: &[u64]) -> Option<RationalSeries> {
    let n = counts.len();
    if n < 8 {
        return None;
    }
    let a: Vec<BigRational> = counts
        .iter()
        .map(|&c| BigRational::from_integer(BigInt::from(c)))
        .collect();
    let fit_limit = n.div_ceil(2);
    for d in 0..=n / 2 {
        for s in d..fit_limit {
            if s + d > fit_limit {
                break;
            }
            let Some(c) = solve_recurrence(&a, d, s) else {
                continue;
            };
            let Some(ci) = integral(&c) else {
                continue;
            };
            if !(s + d..n).all(|m| recurrence_holds(counts, &ci, m)) {
                continue;
            }
            let mut denominator = vec![1i64];
            denominator.extend(ci.iter().map(|&x| -x));
            let numerator = numerator_of(counts, &denominator, s);
            return Some(RationalSeries {
                numerator,
                denominator,
                order: d,
                start: s,
                validated_terms: n - (s + d),
            });
        }
    }
    None
}

/// Solves for `c` from the `d` equations at indices `s..s+d`.
fn solve_recurrence(a: &[BigRational], d: usize, s: usize) -> Option<Vec<BigRational>> {
    if d == 0 {
        return Some(Vec::new());
    }
    let mut m: Vec<Vec<BigRational>> = (0..d)
        .map(|r| {
            let idx = s + r;
            let mut row: Vec<BigRational> = (1..=d).map(|i| a[idx - i].clone()).collect();
            row.push(a[idx].clone());
            row
        })
        .collect();
    for col in 0..d {
        let pivot = (col..d).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, pivot);
        let inv = BigRational::one() / m[col][col].clone();
        for x in m[col].iter_mut() {
            *x = x.clone() * inv.clone();
        }
        for r in 0..d {
            if r != col && !m[r][col].is_zero() {
                let factor = m[r][col].clone();
                for k in col..=d {
                    let sub = factor.clone() * m[col][k].clone();
                    m[r][k] = m[r][k].clone() - sub;
                }
            }
        }
    }
    Some(m.into_iter().map(|row| row[d].clone()).collect())
}

fn integral(c: &[BigRational]) -> Option<Vec<i64>> {
    c.iter()
        .map(|x| {
            if x.is_integer() && x.numer().abs() < BigInt::from(1i64 << 40) {
                x.to_integer().to_i64()
            } else {
                None
            }
        })
        .collect()
}

fn recurrence_holds(a: &[u64], c: &[i64], m: usize) -> bool {
    let mut sum: i128 = 0;
    for (i, &ci) in c.iter().enumerate() {
        sum += ci as i128 * a[m - 1 - i] as i128;
    }
    sum == a[m] as i128
}

/// `(A(x) · Q(x)) mod x^{max(s, deg Q)}`.
fn numerator_of(a: &[u64], q: &[i64], s: usize) -> Vec<i64> {
    let len = s.max(q.len() - 1).max(1);
    let mut p = vec![0i64; len];
    for (k, slot) in p.iter_mut().enumerate() {
        let mut sum = 0i64;
        for (i, &qi) in q.iter().enumerate() {
            if i <= k {
                sum += qi * a[k - i] as i64;
            }
        }
        *slot = sum;
    }
    while p.len() > 1 && p.last() == Some(&0) {
        p.pop();
    }
    p
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constant_tail_is_the_line() {
        let s = guess_series(&[1, 2, 2, 2, 2, 2, 2, 2]).unwrap();
        assert_eq!(s.numerator, vec![1, 1]);
        assert_eq!(s.denominator, vec![1, -1]);
        assert_eq!(s.to_string(), "(1 + x)/(1 - x)");
    }

    #[test]
    fn geometric_series() {
        let s = guess_series(&[1, 3, 9, 27, 81, 243, 729, 2187]).unwrap();
        assert_eq!(s.numerator, vec![1]);
        assert_eq!(s.denominator, vec![1, -3]);
        assert_eq!(s.order, 1);
    }

    #[test]
    fn expansion_reproduces_input() {
        let counts = [1u64, 5, 15, 40, 105, 275, 720, 1885, 4935, 12920];
        let s = guess_series(&counts).unwrap();
        assert_eq!(s.expand(counts.len()), counts.map(|c| c as i64).to_vec());
        assert!(s.validated_terms > 0);
    }

    #[test]
    fn rejects_unstructured_or_short_input() {
        assert!(guess_series(&[1, 2, 3]).is_none());
        assert!(guess_series(&[1, 7, 2, 9, 4, 1, 8, 3]).is_none());
    }
}
