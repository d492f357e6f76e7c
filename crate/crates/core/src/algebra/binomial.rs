use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Generalized binomial coefficient `n(n-1)...(n-k+1)/k!` for any integer `n`.
///
/// Each partial product is itself a binomial coefficient, so the division
/// at every step is exact.
pub fn choose(n: i64, k: u64) -> BigInt {
    if n >= 0 && k > n as u64 {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= BigInt::from(n) - BigInt::from(i);
        acc /= BigInt::from(i + 1);
    }
    acc
}

/// Checked front end for [`choose`]: a negative `k` is rejected.
pub fn binom(n: i64, k: i64) -> Result<BigInt> {
    if k < 0 {
        return Err(Error::invalid(format!(
            "binomial coefficient with negative k = {k}"
        )));
    }
    Ok(choose(n, k as u64))
}

/// Counting binomial: the number of `k`-subsets of an `n`-set, zero when
/// `n < k` including every negative `n`.
pub fn choose_nonneg(n: i64, k: u64) -> BigInt {
    if n < 0 {
        BigInt::zero()
    } else {
        choose(n, k)
    }
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

/// `(sum parts)! / prod(parts_i!)`, built as a product of binomials.
pub fn multinomial(parts: &[u64]) -> BigInt {
    let mut total: u64 = 0;
    let mut acc = BigInt::one();
    for &p in parts {
        total += p;
        acc *= choose(total as i64, p);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn factorial_binom(n: u64, k: u64) -> BigInt {
        factorial(n) / (factorial(k) * factorial(n - k))
    }

    #[test]
    fn small_values() {
        assert_eq!(binom(5, 2).unwrap(), BigInt::from(10));
        assert_eq!(binom(-2, 2).unwrap(), BigInt::from(3));
        assert_eq!(binom(2, 3).unwrap(), BigInt::zero());
        assert_eq!(binom(7, 0).unwrap(), BigInt::one());
        assert_eq!(binom(-1, 5).unwrap(), BigInt::from(-1));
    }

    #[test]
    fn negative_k_rejected() {
        assert!(matches!(binom(4, -1), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn multinomials() {
        assert_eq!(multinomial(&[1, 1]), BigInt::from(2));
        assert_eq!(multinomial(&[2, 1]), BigInt::from(3));
        assert_eq!(
            multinomial(&[2, 2, 2]),
            factorial(6) / (factorial(2) * factorial(2) * factorial(2))
        );
        assert_eq!(multinomial(&[2, 2, 2]), BigInt::from(90));
        assert_eq!(multinomial(&[]), BigInt::one());
        assert_eq!(multinomial(&[0, 3, 0]), BigInt::one());
    }

    #[test]
    fn counting_binomial_vanishes_on_negative_top() {
        assert_eq!(choose(-1, 3), BigInt::from(-1));
        assert_eq!(choose_nonneg(-1, 3), BigInt::zero());
        assert_eq!(choose_nonneg(6, 2), BigInt::from(15));
    }

    #[test]
    fn large_values_do_not_overflow() {
        let expected: BigInt = "98913082887808032681188722800".parse().unwrap();
        assert_eq!(choose(100, 49), expected);
    }

    #[test]
    fn agrees_with_factorials() {
        for n in 0..40u64 {
            for k in 0..=n {
                assert_eq!(choose(n as i64, k), factorial_binom(n, k), "({n},{k})");
            }
        }
    }

    #[test]
    fn negative_upper_sign_law() {
        for n in 1..15i64 {
            for k in 0..15u64 {
                let sign = if k % 2 == 0 { 1 } else { -1 };
                assert_eq!(
                    choose(-n, k),
                    BigInt::from(sign) * choose(n + k as i64 - 1, k),
                    "({},{k})",
                    -n
                );
            }
        }
    }
}
