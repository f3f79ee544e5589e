//! Closed-form counts of fully commutative elements, as exact big-integer
//! functions. Any division that fails to be exact is an error, never a
//! rounding.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::{Error, Result};

fn exact_div(num: BigInt, den: &BigInt) -> Result<BigInt> {
    let (q, r) = num.div_rem(den);
    if r.is_zero() {
        Ok(q)
    } else {
        Err(Error::InexactDivision {
            num: num.to_string(),
            den: den.to_string(),
        })
    }
}

/// Binomial coefficient C(n, k), zero outside 0 <= k <= n.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

fn factorial(n: u64) -> BigInt {
    (1..=n).map(BigInt::from).product()
}

/// The n-th Catalan number C(2n, n) / (n + 1).
pub fn catalan(n: u64) -> BigInt {
    exact_div(binomial(2 * n, n), &BigInt::from(n + 1)).expect("Catalan division is exact")
}

/// Fully commutative elements of B_n: (n+2) C_n - 1.
pub fn fc_count_b(n: u64) -> BigInt {
    assert!(n >= 1);
    BigInt::from(n + 2) * catalan(n) - 1
}

/// Fully commutative elements of D_n: (n+3) C_n / 2 - 1.
pub fn fc_count_d(n: u64) -> Result<BigInt> {
    assert!(n >= 2);
    Ok(exact_div(BigInt::from(n + 3) * catalan(n), &BigInt::from(2))? - 1)
}

/// Fully commutative elements of G(m,1,n) for n >= 3:
/// m(m-1) sum_{s=0}^{n-2} (n+s)!(n-s+1)/(s!(n+1)!) m^{n-2-s} + (2m-1)C_n - (m-1).
pub fn fc_count_fklo(m: u64, n: u64) -> Result<BigInt> {
    assert!(n >= 3, "the formula requires n >= 3");
    assert!(m >= 1);
    let m_big = BigInt::from(m);
    let mut sum = BigInt::zero();
    for s in 0..=n - 2 {
        let num = factorial(n + s) * BigInt::from(n - s + 1);
        let den = factorial(s) * factorial(n + 1);
        let term = exact_div(num, &den)?;
        sum += term * m_big.pow((n - 2 - s) as u32);
    }
    Ok(BigInt::from(m) * BigInt::from(m - 1) * sum + BigInt::from(2 * m - 1) * catalan(n)
        - BigInt::from(m - 1))
}

/// Fully commutative elements of G(m,1,n) as a polynomial in (m-1):
/// sum_k (C(2n,n+k) - C(2n,n+k+1)) (m-1)^k + (C_n - 1)(m-1).
pub fn fc_count_formula1(m: u64, n: u64) -> BigInt {
    assert!(n >= 1);
    assert!(m >= 1);
    let q = BigInt::from(m - 1);
    let mut total = BigInt::zero();
    for k in 0..=n {
        let coeff = binomial(2 * n, n + k) - binomial(2 * n, n + k + 1);
        total += coeff * q.pow(k as u32);
    }
    total + (catalan(n) - 1) * q
}

/// Number of fully commutative elements of B_n with exactly k entries
/// equal to -1.
pub fn alpha(n: u64, k: u64) -> BigInt {
    assert!(k <= n);
    if k == 1 {
        catalan(n + 1) - 1
    } else {
        binomial(2 * n, n + k) - binomial(2 * n, n + k + 1)
    }
}

/// Fully commutative elements of H_n: C(2n+2, n+1) - 2^{n+2} + n + 3.
pub fn fc_count_h(n: u64) -> BigInt {
    assert!(n >= 2);
    binomial(2 * n + 2, n + 1) - BigInt::from(2u32).pow(n as u32 + 2) + BigInt::from(n + 3)
}

/// Fibonacci numbers under the convention f_1 = 1, f_2 = 2 (so f_3 = 3,
/// f_4 = 5, ...). This indexing is the one that reproduces the published
/// F_4 total of 106; the f_1 = f_2 = 1 convention does not (it gives 64)
/// and is kept selectable only so tests can document the rejection.
pub fn fib(n: u64, f1: u64, f2: u64) -> BigInt {
    match n {
        0 => BigInt::zero(),
        1 => BigInt::from(f1),
        _ => {
            let (mut a, mut b) = (BigInt::from(f1), BigInt::from(f2));
            for _ in 2..n {
                let c = &a + &b;
                a = b;
                b = c;
            }
            b
        }
    }
}

fn fc_count_f_with_convention(n: u64, f1: u64, f2: u64) -> Result<BigInt> {
    assert!(n >= 3);
    let f = |k: u64| fib(k, f1, f2);
    let mut sum = BigInt::zero();
    for k in 2..=n - 1 {
        // f_{3k-5} / (n-k+1) * C(2n-2k, n-k) = f_{3k-5} * Catalan(n-k)
        let term = exact_div(
            f(3 * k - 5) * binomial(2 * (n - k), n - k),
            &BigInt::from(n - k + 1),
        )?;
        sum += term;
    }
    let lead = BigInt::from(5) * f(3 * n - 4) - BigInt::from(5) * sum;
    let middle = exact_div(binomial(2 * n - 2, n - 1), &BigInt::from(n))?;
    Ok(lead + middle - 2 * f(2 * n - 2) - 2 * f(2 * n - 4) + f(n - 1) - 1)
}

/// Fully commutative elements of F_n, n >= 3.
pub fn fc_count_f(n: u64) -> Result<BigInt> {
    fc_count_f_with_convention(n, 1, 2)
}

/// Same formula under the rejected Fibonacci convention f_1 = f_2 = 1;
/// exists only as a documented negative control.
pub fn fc_count_f_rejected_convention(n: u64) -> Result<BigInt> {
    fc_count_f_with_convention(n, 1, 1)
}

/// Cycle data of a permutation: cycle lengths, the number of fixed points
/// different from position 1, and the rank n.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleType {
    pub lengths: Vec<u64>,
    pub fixed_not_first: u64,
    pub n: u64,
}

impl CycleType {
    /// Reads the cycle type off a 0-indexed one-line permutation.
    pub fn of_permutation(perm: &[usize]) -> CycleType {
        let n = perm.len();
        let mut seen = vec![false; n];
        let mut lengths = Vec::new();
        let mut fixed_not_first = 0u64;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0u64;
            let mut j = start;
            loop {
                seen[j] = true;
                len += 1;
                j = perm[j];
                if j == start {
                    break;
                }
            }
            if len == 1 && start != 0 {
                fixed_not_first += 1;
            }
            lengths.push(len);
        }
        CycleType {
            lengths,
            fixed_not_first,
            n: n as u64,
        }
    }
}

/// Number of minimal star factorizations of a permutation with the given
/// cycle type: (n + m - 2(k+1))! / (n - k)! * l_1 ... l_m, where m is the
/// cycle count and k the number of fixed points different from 1.
pub fn star_factorization_count(ct: &CycleType) -> Result<BigInt> {
    let m = ct.lengths.len() as u64;
    let k = ct.fixed_not_first;
    let n = ct.n;
    if ct.lengths.iter().sum::<u64>() != n {
        return Err(Error::InvalidCycleType(format!(
            "cycle lengths sum to {} but n = {n}",
            ct.lengths.iter().sum::<u64>()
        )));
    }
    if n + m < 2 * (k + 1) {
        return Err(Error::InvalidCycleType(format!(
            "negative factorial argument: n + m - 2(k+1) = {} + {} - {}",
            n,
            m,
            2 * (k + 1)
        )));
    }
    let num = factorial(n + m - 2 * (k + 1)) * ct.lengths.iter().map(|&l| BigInt::from(l)).product::<BigInt>();
    exact_div(num, &factorial(n - k))
}

/// Fully commutative elements of S_n under the star generators:
/// 1 + sum_{t=1}^{n-1} prod_{j=1}^{t} (n-j).
pub fn fc_count_star_sym(n: u64) -> BigInt {
    assert!(n >= 2);
    let mut total = BigInt::one();
    for t in 1..n {
        let mut prod = BigInt::one();
        for j in 1..=t {
            prod *= BigInt::from(n - j);
        }
        total += prod;
    }
    total
}

/// Fully commutative elements of G(m,m,2): 4 at m = 2, else 2m - 1.
pub fn fc_count_mm2(m: u64) -> BigInt {
    assert!(m >= 2);
    if m == 2 {
        BigInt::from(4)
    } else {
        BigInt::from(2 * m - 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn catalan_values() {
        assert_eq!(catalan(0), int(1));
        assert_eq!(catalan(3), int(5));
        assert_eq!(catalan(4), int(14));
    }

    #[test]
    fn fc_counts_b_and_d() {
        assert_eq!(fc_count_b(2), int(7));
        assert_eq!(fc_count_b(3), int(24));
        assert_eq!(fc_count_b(4), int(83));
        assert_eq!(fc_count_d(2).unwrap(), int(4));
        assert_eq!(fc_count_d(3).unwrap(), int(14));
        assert_eq!(fc_count_d(4).unwrap(), int(48));
    }

    #[test]
    fn fklo_values() {
        assert_eq!(fc_count_fklo(2, 4).unwrap(), fc_count_b(4));
        assert_eq!(fc_count_fklo(3, 3).unwrap(), int(59));
        assert_eq!(fc_count_fklo(1, 3).unwrap(), catalan(3));
    }

    #[test]
    fn formula1_matches_fklo_on_a_grid() {
        for m in 1..=6u64 {
            for n in 3..=8u64 {
                assert_eq!(
                    fc_count_formula1(m, n),
                    fc_count_fklo(m, n).unwrap(),
                    "m={m} n={n}"
                );
            }
        }
    }

    #[test]
    fn formula1_small_cases() {
        for m in 1..=5u64 {
            assert_eq!(fc_count_formula1(m, 2), int((m * m + 2 * m - 1) as i64));
        }
        for n in 2..=6u64 {
            assert_eq!(fc_count_formula1(2, n), fc_count_b(n));
        }
        assert_eq!(fc_count_formula1(3, 3), int(59));
    }

    #[test]
    fn alpha_values() {
        let row2: Vec<BigInt> = (0..=2).map(|k| alpha(2, k)).collect();
        assert_eq!(row2, vec![int(2), int(4), int(1)]);
        let row3: Vec<BigInt> = (0..=3).map(|k| alpha(3, k)).collect();
        assert_eq!(row3, vec![int(5), int(13), int(5), int(1)]);
        for n in 2..=8u64 {
            assert_eq!(alpha(n, 0), catalan(n));
            assert_eq!(alpha(n, n), int(1), "leading coefficient");
            let total: BigInt = (0..=n).map(|k| alpha(n, k)).sum();
            assert_eq!(total, fc_count_b(n), "n={n}");
        }
    }

    #[test]
    fn shephard_pins() {
        assert_eq!(fc_count_h(3), int(44));
        assert_eq!(fc_count_h(4), int(195));
        assert_eq!(fc_count_h(2), int(9));
        assert_eq!(fc_count_f(4).unwrap(), int(106));
        // regression pin; no published total for n=3
        assert_eq!(fc_count_f(3).unwrap(), int(24));
        // the f_1 = f_2 = 1 convention is rejected by the published total
        assert_eq!(fc_count_f_rejected_convention(4).unwrap(), int(64));
    }

    #[test]
    fn star_factorization_examples() {
        // identity of S_n
        let id = CycleType::of_permutation(&[0, 1, 2]);
        assert_eq!(star_factorization_count(&id).unwrap(), int(1));
        // (12) in S_3
        let t = CycleType::of_permutation(&[1, 0, 2]);
        assert_eq!(star_factorization_count(&t).unwrap(), int(1));
        // (123) in S_3
        let c = CycleType::of_permutation(&[1, 2, 0]);
        assert_eq!(star_factorization_count(&c).unwrap(), int(1));
        // (23) in S_3 has two minimal star factorizations
        let t23 = CycleType::of_permutation(&[0, 2, 1]);
        assert_eq!(star_factorization_count(&t23).unwrap(), int(2));
    }

    #[test]
    fn star_sym_totals() {
        assert_eq!(fc_count_star_sym(3), int(5));
        assert_eq!(fc_count_star_sym(4), int(16));
        assert_eq!(fc_count_star_sym(5), int(65));
        assert_eq!(fc_count_star_sym(6), int(326));
    }

    #[test]
    fn mm2_values() {
        assert_eq!(fc_count_mm2(2), int(4));
        assert_eq!(fc_count_mm2(3), int(5));
        assert_eq!(fc_count_mm2(7), int(13));
    }

    #[test]
    fn cycle_type_reading() {
        // [(12)(345)(6)] as 0-indexed one-line 214536 -> perm of columns
        let ct = CycleType::of_permutation(&[1, 0, 3, 4, 2, 5]);
        let mut lengths = ct.lengths.clone();
        lengths.sort_unstable();
        assert_eq!(lengths, vec![1, 2, 3]);
        assert_eq!(ct.fixed_not_first, 1);
        assert_eq!(ct.n, 6);
    }
}
