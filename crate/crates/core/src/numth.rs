//! Square roots of unity modulo `n` and the closed formula for their count.
//!
//! The residues `m` with `m² ≡ 1 (mod n)` are the candidate exponents of an
//! involution acting on a cyclic group of order `n` by `h -> h^m`.

/// All `m` in `[1, n]` with `m² ≡ 1 (mod n)`, by direct enumeration.
///
/// `n = 1` gives `[1]`, since every residue is `0 ≡ 1`.
pub fn square_roots_of_unity(n: u64) -> Vec<u64> {
    if n == 1 {
        return vec![1];
    }
    let n128 = u128::from(n);
    (1..n)
        .filter(|&m| (u128::from(m) * u128::from(m)) % n128 == 1)
        .collect()
}

/// Number of distinct prime divisors, by trial division.
pub fn distinct_prime_divisors(mut n: u64) -> u32 {
    let mut count = 0;
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            count += 1;
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        count += 1;
    }
    count
}

/// Closed-form count of square roots of unity modulo `n`.
///
/// For odd `n` it is `2^a` with `a` the number of distinct prime divisors;
/// for `n = 2^{k+1}·u` with `u` odd it is `2^{a + min(k, 2)}` with `a`
/// counted on `u`. `n = 1, 2` give 1.
pub fn predicted_count(n: u64) -> u64 {
    if n <= 2 {
        return 1;
    }
    let twos = n.trailing_zeros();
    let odd = n >> twos;
    let a = distinct_prime_divisors(odd);
    if twos == 0 {
        1 << a
    } else {
        let k = twos - 1;
        1 << (a + k.min(2))
    }
}
