//! The LP dual certificate for sigma-maximization over trees of maximum
//! degree `delta`, the slack function `F`, the penalty of a tree, and the
//! exact decomposition `sigma = lambda*n + mu*(n-1) - penalty`.
//!
//! With `A = 4*delta - 6` and `B = delta^2 - 6*delta + 3 + 6/delta`:
//!
//! ```text
//! lambda = A,   mu = B,   F(i,j) = A*(1/i + 1/j) + B - (i-j)^2
//! ```
//!
//! `F` is nonnegative on `1 <= i <= j <= delta` and vanishes exactly at
//! `(1, delta)` and `(2, delta)`; those are the edge types the optimum uses.

use crate::error::{Error, Result};
use crate::profile::DegreeProfile;
use crate::rational::{frac, rat, Rational};
use num::bigint::BigInt;
use num::Zero;

/// Largest `delta` for which the full slack table is materialized eagerly.
/// Above this, `slack` evaluates on demand.
pub const EAGER_TABLE_MAX_DELTA: usize = 1000;

/// Largest `delta` for which the scaled integer slack provably fits in
/// `i128`: the three terms of `scaled_slack` are each below `1.1 * delta^5`,
/// so values stay under `4 * 10^30` at `delta = 10^6`.
pub const SCALED_SLACK_MAX_DELTA: usize = 1_000_000;

/// `i * j * delta * F(i, j)` as an exact integer.
///
/// Clearing the denominators of `F` against `i * j * delta > 0` preserves the
/// sign, so nonnegativity and zero tests of `F` reduce to integer tests.
/// Callers must keep `delta <= SCALED_SLACK_MAX_DELTA` and `1 <= i, j <= delta`.
pub(crate) fn scaled_slack(i: i128, j: i128, delta: i128) -> i128 {
    debug_assert!(1 <= i && i <= delta && 1 <= j && j <= delta);
    debug_assert!(delta <= SCALED_SLACK_MAX_DELTA as i128);
    let a = 4 * delta - 6;
    let b_num = delta * delta * delta - 6 * delta * delta + 3 * delta + 6; // delta * B
    a * delta * (i + j) + i * j * b_num - i * j * delta * (i - j) * (i - j)
}

/// `F(i, j)` as an exact rational, straight from the defining constants.
/// Used where building a whole certificate would be wasteful.
pub(crate) fn slack_rational(i: usize, j: usize, delta: usize) -> Rational {
    let d = delta as i64;
    let a = rat(4 * d - 6);
    let b = rat(d * d - 6 * d + 3) + frac(6, d);
    let diff = rat(i as i64 - j as i64);
    a * (frac(1, i as i64) + frac(1, j as i64)) + b - &diff * &diff
}

/// `scaled_slack` over big integers, valid for any `delta`.
pub(crate) fn scaled_slack_big(i: usize, j: usize, delta: usize) -> BigInt {
    let (i, j, d) = (BigInt::from(i), BigInt::from(j), BigInt::from(delta));
    let a = 4 * &d - 6;
    let b_num = d.pow(3) - 6 * d.pow(2) + 3 * &d + 6;
    a * &d * (&i + &j) - &i * &j * &d * (&i - &j).pow(2) + i * j * b_num
}

/// Compares `p1/q1` with `p2/q2` for positive `q1`, `q2`, cross-multiplying
/// in `i128` and falling back to big integers on overflow.
pub(crate) fn cmp_scaled(p1: i128, q1: i128, p2: i128, q2: i128) -> std::cmp::Ordering {
    debug_assert!(q1 > 0 && q2 > 0);
    match (p1.checked_mul(q2), p2.checked_mul(q1)) {
        (Some(l), Some(r)) => l.cmp(&r),
        _ => (BigInt::from(p1) * BigInt::from(q2)).cmp(&(BigInt::from(p2) * BigInt::from(q1))),
    }
}

/// The dual certificate for a fixed `delta`: the dual variables, the slack
/// constants, and the slack table.
#[derive(Debug, Clone)]
pub struct DualCertificate {
    delta: usize,
    lambda: Rational,
    mu: Rational,
    a_const: Rational,
    b_const: Rational,
    /// Eager slack table for `delta <= EAGER_TABLE_MAX_DELTA`, indexed by
    /// `j(j-1)/2 + (i-1)` over pairs `1 <= i <= j <= delta`. `None` means
    /// on-demand evaluation.
    table: Option<Vec<Rational>>,
}

impl DualCertificate {
    pub fn delta(&self) -> usize {
        self.delta
    }

    pub fn lambda(&self) -> &Rational {
        &self.lambda
    }

    pub fn mu(&self) -> &Rational {
        &self.mu
    }

    pub fn a_const(&self) -> &Rational {
        &self.a_const
    }

    pub fn b_const(&self) -> &Rational {
        &self.b_const
    }

    pub fn has_eager_table(&self) -> bool {
        self.table.is_some()
    }

    /// `F(i, j)`. Argument order is immaterial. Panics outside
    /// `1 <= i, j <= delta`; the table domain is the certificate's contract.
    pub fn slack(&self, i: usize, j: usize) -> Rational {
        let (i, j) = if i <= j { (i, j) } else { (j, i) };
        assert!(
            i >= 1 && j <= self.delta,
            "slack index ({i},{j}) outside 1..={}",
            self.delta
        );
        if let Some(table) = &self.table {
            return table[j * (j - 1) / 2 + (i - 1)].clone();
        }
        self.slack_direct(i, j)
    }

    fn slack_direct(&self, i: usize, j: usize) -> Rational {
        slack_rational(i, j, self.delta)
    }

    /// `F(delta, delta) = 2A/delta + B`, the penalty floor when `delta | n`.
    pub fn f_delta_delta(&self) -> Rational {
        self.slack(self.delta, self.delta)
    }

    /// The LP objective bound `lambda*n + mu*(n-1)`.
    pub fn bound(&self, n: usize) -> Rational {
        &self.lambda * rat(n as i64) + &self.mu * rat(n as i64 - 1)
    }

    /// Iterates `((i, j), F(i, j))` over the full table domain.
    pub fn slack_entries(&self) -> impl Iterator<Item = ((usize, usize), Rational)> + '_ {
        (1..=self.delta)
            .flat_map(|j| (1..=j).map(move |i| (i, j)))
            .map(|(i, j)| ((i, j), self.slack(i, j)))
    }
}

/// Builds the dual certificate for `delta >= 4`.
///
/// For `delta <= EAGER_TABLE_MAX_DELTA` the full table is materialized and
/// the sign pattern (nonnegative, zero exactly at `(1, delta)` and
/// `(2, delta)`) is verified entry by entry at construction. Above the
/// threshold the two zeros are verified and the full sweep is left to
/// `lemmas::verify_slack_pattern`.
pub fn certificate(delta: usize) -> Result<DualCertificate> {
    if delta < 4 {
        return Err(Error::domain(format!(
            "certificate requires delta >= 4, got {delta}"
        )));
    }
    let d = delta as i64;
    let lambda = rat(4 * d - 6);
    let mu = rat(d * d - 6 * d + 3) + frac(6, d);
    let cert = DualCertificate {
        delta,
        lambda: lambda.clone(),
        mu: mu.clone(),
        a_const: lambda,
        b_const: mu,
        table: None,
    };

    if !scaled_slack_big(1, delta, delta).is_zero()
        || !scaled_slack_big(2, delta, delta).is_zero()
    {
        return Err(Error::domain(format!(
            "slack does not vanish at (1,{delta}) and (2,{delta}); \
             the dual construction is broken"
        )));
    }

    if delta > EAGER_TABLE_MAX_DELTA {
        return Ok(cert);
    }

    let mut table = Vec::with_capacity(delta * (delta + 1) / 2);
    for j in 1..=delta {
        for i in 1..=j {
            let scaled = scaled_slack(i as i128, j as i128, delta as i128);
            let zero_point = (i == 1 || i == 2) && j == delta;
            if zero_point && scaled != 0 {
                return Err(Error::domain(format!(
                    "slack at ({i},{j}) is nonzero for delta {delta}"
                )));
            }
            if !zero_point && scaled <= 0 {
                return Err(Error::domain(format!(
                    "slack at ({i},{j}) is not positive for delta {delta}"
                )));
            }
            let value = cert.slack_direct(i, j);
            debug_assert_eq!(
                &value * rat((i * j * delta) as i64),
                rat(scaled as i64),
                "integer and rational slack disagree at ({i},{j})"
            );
            table.push(value);
        }
    }
    Ok(DualCertificate {
        table: Some(table),
        ..cert
    })
}

/// The unique LP optimum for given order and maximum degree.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct LpOptimum {
    pub n: usize,
    pub delta: usize,
    #[serde(with = "crate::rational::serde_string")]
    pub m_1_delta: Rational,
    #[serde(with = "crate::rational::serde_string")]
    pub m_2_delta: Rational,
    #[serde(with = "crate::rational::serde_string")]
    pub sigma_bound: Rational,
}

impl LpOptimum {
    /// Whether both edge-count values are integers. True exactly when
    /// `delta` divides `2(n-1)`, a weaker condition than the tightness
    /// criterion `n = 1 (mod delta)`, since for even `delta` the residue
    /// `1 + delta/2` also clears the denominators while the implied number
    /// of maximum-degree vertices `(n-1)/delta` stays fractional.
    pub fn is_integral(&self) -> bool {
        crate::rational::is_integral(&self.m_1_delta)
            && crate::rational::is_integral(&self.m_2_delta)
    }
}

/// Solves the LP in closed form: `m_{1,delta} = ((delta-2)n + delta+2)/delta`,
/// `m_{2,delta} = 2(n - delta - 1)/delta`, objective `lambda*n + mu*(n-1)`.
pub fn lp_optimum(n: usize, delta: usize) -> Result<LpOptimum> {
    if delta < 4 {
        return Err(Error::domain(format!(
            "the bound requires delta >= 4, got {delta}"
        )));
    }
    if n <= delta {
        return Err(Error::domain(format!(
            "no tree of order {n} has maximum degree {delta}"
        )));
    }
    let (nn, d) = (n as i64, delta as i64);
    let m_1_delta = frac((d - 2) * nn + d + 2, d);
    let m_2_delta = frac(2 * (nn - d - 1), d);
    let lambda = rat(4 * d - 6);
    let mu = rat(d * d - 6 * d + 3) + frac(6, d);
    let sigma_bound = &lambda * rat(nn) + &mu * rat(nn - 1);
    debug_assert_eq!(&m_1_delta + &m_2_delta, rat(nn - 1));
    Ok(LpOptimum {
        n,
        delta,
        m_1_delta,
        m_2_delta,
        sigma_bound,
    })
}

/// The penalty `P = sum of F(i,j) * m_{i,j}` of a tree's profile against a
/// certificate with `cert.delta >= profile.delta`. Nonnegative; zero iff the
/// profile is supported on the slack zeros.
pub fn penalty(profile: &DegreeProfile, cert: &DualCertificate) -> Result<Rational> {
    if profile.delta > cert.delta() {
        return Err(Error::domain(format!(
            "profile has maximum degree {} but the certificate covers degrees up to {}",
            profile.delta,
            cert.delta()
        )));
    }
    let mut total = Rational::zero();
    for (&(i, j), &m) in &profile.pair_counts {
        if m > 0 {
            total += cert.slack(i, j) * rat(m as i64);
        }
    }
    Ok(total)
}

/// Evaluates `lambda*n + mu*(n-1) - penalty`, which equals sigma exactly for
/// every tree of order `n >= 2` with maximum degree at most `cert.delta`.
pub fn sigma_via_decomposition(
    profile: &DegreeProfile,
    cert: &DualCertificate,
    n: usize,
) -> Result<Rational> {
    if profile.n != n {
        return Err(Error::domain(format!(
            "profile describes a tree of order {}, not {n}",
            profile.n
        )));
    }
    if n < 2 {
        return Err(Error::Degenerate(
            "the decomposition needs at least one edge (n >= 2)".into(),
        ));
    }
    let p = penalty(profile, cert)?;
    Ok(cert.bound(n) - p)
}

/// The exact maximum of sigma over trees of order `n` with maximum degree
/// `delta`, where the residue of `n` mod `delta` pins it down.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SigmaMax {
    /// `n = 0 or 1 (mod delta)`: the exact value.
    Covered { value: Rational, residue: usize },
    /// Other residues: only a strict upper bound is known.
    NotCovered { strict_upper_bound: Rational },
}

/// Resolves `sigma_max(n, delta)` where the theory covers it: the LP bound
/// itself when `n = 1 (mod delta)`, the bound minus `F(delta, delta)` when
/// `delta` divides `n`, and a strict-bound marker otherwise.
pub fn exact_sigma_max(n: usize, delta: usize) -> Result<SigmaMax> {
    let opt = lp_optimum(n, delta)?;
    let cert = certificate(delta)?;
    let residue = n % delta;
    match residue {
        1 => Ok(SigmaMax::Covered {
            value: opt.sigma_bound,
            residue,
        }),
        0 => Ok(SigmaMax::Covered {
            value: opt.sigma_bound - cert.f_delta_delta(),
            residue,
        }),
        _ => Ok(SigmaMax::NotCovered {
            strict_upper_bound: opt.sigma_bound,
        }),
    }
}
