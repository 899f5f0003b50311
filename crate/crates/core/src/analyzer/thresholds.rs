use super::AnalyzerError;
use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

/// Results larger than this many bits are refused by [`extend_thresholds`].
pub const EXTEND_BIT_CAP: u64 = 1 << 24;

/// Leaf bound for rooted trees of maximum degree `d` with binary-minor depth
/// at most `b` whose root-leaf paths have fewer than `k` branching vertices:
/// 1 when `k = 1` or `b = 0`, otherwise `f(d, b, k-1) + (d-1) f(d, b-1, k-1)`.
pub fn bound_leaves_threshold(d: u64, b: u64, k: u64) -> BigUint {
    // Row over b for the current k, built up from k = 1.
    let mut row = vec![BigUint::from(1u32); b as usize + 1];
    for _ in 2..=k {
        let mut next = vec![BigUint::from(1u32); b as usize + 1];
        for j in 1..=b as usize {
            next[j] = &row[j] + &row[j - 1] * BigUint::from(d.saturating_sub(1));
        }
        row = next;
    }
    row[b as usize].clone()
}

/// `d(l) = (t (s1 - 1))^l`.
pub fn d_value(t: u64, s1: &BigUint, l: u32) -> BigUint {
    let base = BigUint::from(t) * (s1 - BigUint::from(1u32));
    base.pow(l)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtendThresholds {
    pub s1: BigUint,
    pub s2: BigUint,
    pub d_s2: BigUint,
    pub f_extend: BigUint,
}

/// `s1 = 2 f(D, b, 3k+5)`, `s2 = 2 s1 m`, `d(s2)` and `t d(s2) + 1`.
/// Fails when `d(s2)` is known to need more than [`EXTEND_BIT_CAP`] bits.
pub fn extend_thresholds(d: u64, b: u64, m: u64, k: u64, t: u64) -> Result<ExtendThresholds, AnalyzerError> {
    for (name, v) in [("D", d), ("b", b), ("m", m), ("k", k), ("t", t)] {
        if v == 0 {
            return Err(AnalyzerError::ZeroArgument(name));
        }
    }
    let s1 = BigUint::from(2u32) * bound_leaves_threshold(d, b, 3 * k + 5);
    let s2 = BigUint::from(2u32) * &s1 * BigUint::from(m);
    let base = BigUint::from(t) * (&s1 - BigUint::from(1u32));
    let bits = base.bits();
    let d_s2 = if bits <= 1 {
        base.clone()
    } else {
        let too_large = AnalyzerError::TooLarge(EXTEND_BIT_CAP);
        let exp: u32 = (&s2).try_into().map_err(|_| too_large.clone())?;
        if (bits - 1).saturating_mul(exp as u64) > EXTEND_BIT_CAP {
            return Err(too_large);
        }
        base.pow(exp)
    };
    let f_extend = BigUint::from(t) * &d_s2 + BigUint::from(1u32);
    Ok(ExtendThresholds { s1, s2, d_s2, f_extend })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashMap;

    fn bound_leaves_memo(d: u64, b: u64, k: u64, memo: &mut HashMap<(u64, u64), BigUint>) -> BigUint {
        if k <= 1 || b == 0 {
            return BigUint::from(1u32);
        }
        if let Some(v) = memo.get(&(b, k)) {
            return v.clone();
        }
        let v = bound_leaves_memo(d, b, k - 1, memo) + BigUint::from(d.saturating_sub(1)) * bound_leaves_memo(d, b - 1, k - 1, memo);
        memo.insert((b, k), v.clone());
        v
    }

    #[test]
    fn base_cases_and_small_values() {
        for d in 1..6 {
            for k in 1..6 {
                assert_eq!(bound_leaves_threshold(d, 0, k), BigUint::from(1u32));
            }
            for b in 0..6 {
                assert_eq!(bound_leaves_threshold(d, b, 1), BigUint::from(1u32));
            }
        }
        assert_eq!(bound_leaves_threshold(3, 1, 2), BigUint::from(3u32));
        assert_eq!(bound_leaves_threshold(2, 2, 3), BigUint::from(4u32));
    }

    #[test]
    fn row_and_memo_agree() {
        for d in 1..=5 {
            let mut memo = HashMap::new();
            for b in 0..=5 {
                for k in 1..=5 {
                    assert_eq!(bound_leaves_threshold(d, b, k), bound_leaves_memo(d, b, k, &mut memo));
                }
            }
        }
    }

    #[test]
    fn extend_smallest() {
        let e = extend_thresholds(1, 1, 1, 1, 1).unwrap();
        assert_eq!(e.s1, BigUint::from(2u32));
        assert_eq!(e.s2, BigUint::from(4u32));
        assert_eq!(e.d_s2, BigUint::from(1u32));
        assert_eq!(e.f_extend, BigUint::from(2u32));
        assert_eq!(d_value(1, &e.s1, 4), e.d_s2);
    }

    #[test]
    fn extend_rejects_zero_and_huge() {
        assert_eq!(extend_thresholds(0, 1, 1, 1, 1), Err(AnalyzerError::ZeroArgument("D")));
        assert!(matches!(extend_thresholds(5, 5, 50, 10, 9), Err(AnalyzerError::TooLarge(_))));
    }
}
