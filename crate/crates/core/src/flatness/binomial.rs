//! The alternating binomial identity
//! `Σ_{k=0}^{m} (-1)^k C(n-k, l) C(m, k) = C(n-m, l-m)`,
//! which is what makes `Δ` of `m` circuits in the flatness-degree-`n` family
//! collapse to `m - n + 1`.

use serde::Serialize;

use crate::error::{Error, Result};

/// `C(a, b)`, zero when `b < 0` or `b > a`. Exact; errors on `i128` overflow.
pub fn binomial(a: i64, b: i64) -> Result<i128> {
    if b < 0 || b > a {
        return Ok(0);
    }
    let b = b.min(a - b);
    let mut acc: i128 = 1;
    for i in 0..b {
        // acc * (a - i) is divisible by (i + 1): it is C(a, i+1) * (i+1)
        acc = acc
            .checked_mul((a - i) as i128)
            .ok_or_else(|| Error::Unsupported(format!("C({a}, {b}) overflows i128")))?
            / (i as i128 + 1);
    }
    Ok(acc)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct IdentityCheck {
    pub n: i64,
    pub l: i64,
    pub m: i64,
    pub lhs: i128,
    pub rhs: i128,
    pub holds: bool,
}

/// Evaluates both sides exactly.
pub fn binomial_identity_check(n: i64, l: i64, m: i64) -> Result<IdentityCheck> {
    if m < 0 {
        return Err(Error::InvalidArgument(format!("m must be >= 0, got {m}")));
    }
    let mut lhs: i128 = 0;
    for k in 0..=m {
        let term = binomial(n - k, l)? * binomial(m, k)?;
        lhs += if k % 2 == 0 { term } else { -term };
    }
    let rhs = binomial(n - m, l - m)?;
    Ok(IdentityCheck {
        n,
        l,
        m,
        lhs,
        rhs,
        holds: lhs == rhs,
    })
}
