//! Closed forms for the families whose counts the lattices reproduce.

use num::bigint::BigUint;
use num::traits::One;
use num::Integer;
use oillab_core::{CoreError, Result};

pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::ZERO;
    }
    let mut out = BigUint::one();
    for i in 0..k.min(n - k) {
        out = out * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    out
}

/// C_n = (2n choose n) / (n + 1).
pub fn catalan_number(n: usize) -> BigUint {
    binomial(2 * n, n) / BigUint::from(n + 1)
}

/// Alternating sign matrices: prod over i < n of (3i+1)! / (n+i)!. The
/// quotient is taken once at the end and must leave no remainder.
pub fn asm_number(n: usize) -> BigUint {
    if n == 0 {
        return BigUint::one();
    }
    let top = 3 * n - 2;
    let mut fact = Vec::with_capacity(top + 1);
    fact.push(BigUint::one());
    for m in 1..=top {
        let next = fact.last().unwrap() * BigUint::from(m);
        fact.push(next);
    }
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for i in 0..n {
        num *= &fact[3 * i + 1];
        den *= &fact[n + i];
    }
    let (q, r) = num.div_rem(&den);
    assert!(r == BigUint::ZERO, "the product formula divides exactly");
    q
}

/// Parking functions of length n: (n + 1)^(n - 1).
pub fn parking_count(n: usize) -> Result<BigUint> {
    if n < 1 {
        return Err(CoreError::TooSmall { what: "parking function count", have: n, min: 1 });
    }
    Ok(BigUint::from(n + 1).pow((n - 1) as u32))
}

/// Dispatch by family name; the two-parameter families require `k`.
pub fn closed_form(family: &str, n: usize, k: Option<usize>) -> Result<BigUint> {
    let need_k = || k.ok_or(CoreError::TooSmall { what: "family parameter k", have: 0, min: 1 });
    match family {
        "catalan" => Ok(catalan_number(n)),
        "asm" => Ok(asm_number(n)),
        "parking" => parking_count(n),
        "narayana" => Ok(oillab_setparts::narayana_number(n, need_k()?)),
        "binomial" => {
            let k = need_k()?;
            Ok(binomial(n + k, k))
        }
        other => Err(CoreError::UnknownFamily(other.to_string())),
    }
}
