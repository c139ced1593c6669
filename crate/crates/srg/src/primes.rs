//! Prime generation and small primality helpers.

/// All primes `<= limit` in ascending order, by the sieve of Eratosthenes.
pub fn primes_up_to(limit: u64) -> Vec<u64> {
    if limit < 2 {
        return Vec::new();
    }
    let n = limit as usize;
    let mut composite = vec![false; n + 1];
    let mut primes = Vec::new();
    for p in 2..=n {
        if composite[p] {
            continue;
        }
        primes.push(p as u64);
        if let Some(start) = p.checked_mul(p) {
            let mut multiple = start;
            while multiple <= n {
                composite[multiple] = true;
                multiple += p;
            }
        }
    }
    primes
}

/// Deterministic trial-division primality test.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut f: u64 = 3;
    while (f as u128) * (f as u128) <= n as u128 {
        if n % f == 0 {
            return false;
        }
        f += 2;
    }
    true
}

pub fn is_odd_prime(n: u64) -> bool {
    n > 2 && is_prime(n)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sieve_matches_trial_division() {
        let sieved = primes_up_to(1000);
        let checked: Vec<u64> = (0..=1000).filter(|&n| is_prime(n)).collect();
        assert_eq!(sieved, checked);
        assert_eq!(sieved.len(), 168);
    }

    #[test]
    fn sieve_edge_bounds() {
        assert!(primes_up_to(0).is_empty());
        assert!(primes_up_to(1).is_empty());
        assert_eq!(primes_up_to(2), vec![2]);
        assert_eq!(primes_up_to(13), vec![2, 3, 5, 7, 11, 13]);
    }

    #[test]
    fn odd_prime_excludes_two() {
        assert!(!is_odd_prime(2));
        assert!(is_odd_prime(3));
        assert!(!is_odd_prime(9));
        assert!(is_odd_prime(101));
    }
}
