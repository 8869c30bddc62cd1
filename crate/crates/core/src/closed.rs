//! Exact arbitrary-precision closed forms: binomials, Catalan and Fibonacci
//! numbers, the independent-set counts `I(n, k)` on the staircase downcore,
//! the refinement `J(l, k)` of the 132-avoiders by nonzero boxes, and the
//! peak values at the largest nonzero `k`.
//!
//! No floating point anywhere; every division is asserted exact.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::{Error, Result};

/// Exact nonnegative count.
pub type Count = BigUint;

/// `C(a, b)` with the convention that it is 0 whenever `b < 0`, `b > a`, or
/// `a < 0`.
pub fn binomial(a: i64, b: i64) -> Count {
    if a < 0 || b < 0 || b > a {
        return Count::zero();
    }
    let b = b.min(a - b) as u64;
    let a = a as u64;
    let mut result = Count::one();
    for t in 1..=b {
        result = result * (a - b + t) / t;
    }
    result
}

/// The `i`-th Catalan number `C(2i, i) / (i + 1)`.
pub fn catalan(i: u64) -> Count {
    exact_div(binomial(2 * i as i64, i as i64), &Count::from(i + 1))
}

/// Fibonacci numbers with `F_1 = F_2 = 1`.
pub fn fibonacci(m: u64) -> Result<Count> {
    if m < 1 {
        return Err(Error::Domain("Fibonacci index must be at least 1".into()));
    }
    let (mut a, mut b) = (Count::one(), Count::one());
    for _ in 2..m {
        let next = &a + &b;
        a = b;
        b = next;
    }
    Ok(b)
}

/// Number of independent sets of size `k` in the downcore of the size-`n`
/// staircase grid, by the closed-form sum
/// `(1/n) sum_j C(n, k-j) C(n, j+1) C(n-1+j, n-1)`.
pub fn i_closed(n: u64, k: u64) -> Count {
    if n == 0 {
        return if k == 0 { Count::one() } else { Count::zero() };
    }
    let (n, k) = (n as i64, k as i64);
    let mut sum = Count::zero();
    for j in 0..n {
        sum += binomial(n, k - j) * binomial(n, j + 1) * binomial(n - 1 + j, n - 1);
    }
    exact_div(sum, &Count::from(n as u64))
}

/// Number of 132-avoiding permutations of length `l` whose staircase
/// encoding has exactly `k` nonzero boxes:
/// `sum_n I(n, k) C(l-n-1, k-1)` for `k >= 1`, and 1 for `k = 0` (the
/// decreasing permutation).
pub fn j_closed(l: u64, k: u64) -> Count {
    if k == 0 {
        return Count::one();
    }
    let mut sum = Count::zero();
    for n in 0..=l {
        sum += i_closed(n, k) * binomial(l as i64 - n as i64 - 1, k as i64 - 1);
    }
    sum
}

/// The largest `k` with `J(l, k) != 0`, namely `floor((2l - 1) / 3)`.
pub fn max_nonzero_k(l: u64) -> Result<u64> {
    if l < 1 {
        return Err(Error::Domain("l must be at least 1".into()));
    }
    Ok((2 * l - 1) / 3)
}

/// `J(l, k)` at the largest nonzero `k`, via the per-residue case
/// formulas: `C_i` for `l = 3i+2`, `(3/2) C(2i, i)` for `l = 3i+1`, and for
/// `l = 3i` the value 4 at `i = 1` and `C(2i-2, i) (9i^2 + 3i - 4) / (2(i-1))`
/// for `i >= 2`.
pub fn peak_value(l: u64) -> Result<Count> {
    if l < 2 {
        return Err(Error::Domain("peak value requires l >= 2".into()));
    }
    let value = match l % 3 {
        2 => catalan((l - 2) / 3),
        1 => {
            let i = (l - 1) / 3;
            exact_div(
                Count::from(3u32) * binomial(2 * i as i64, i as i64),
                &Count::from(2u32),
            )
        }
        _ => {
            let i = l / 3;
            if i == 1 {
                Count::from(4u32)
            } else {
                exact_div(
                    binomial(2 * i as i64 - 2, i as i64) * Count::from(9 * i * i + 3 * i - 4),
                    &Count::from(2 * (i - 1)),
                )
            }
        }
    };
    Ok(value)
}

fn exact_div(num: Count, den: &Count) -> Count {
    assert!((&num % den).is_zero(), "division must be exact");
    num / den
}
