//! Small integer number theory: gcd/lcm, modular arithmetic, factorization,
//! unit groups of Z/m and integer partitions.

/// Greatest common divisor.
pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub fn gcd_u128(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Least common multiple; panics on overflow.
pub fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        return 0;
    }
    a / gcd(a, b) * b
}

pub fn lcm_u128(a: u128, b: u128) -> u128 {
    if a == 0 || b == 0 {
        return 0;
    }
    a / gcd_u128(a, b) * b
}

/// `base^exp mod m` with 128-bit intermediates; `m` must be nonzero.
pub fn mod_pow(base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut b = (base % m) as u128;
    let mut acc: u128 = 1;
    let m = m as u128;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        exp >>= 1;
    }
    acc as u64
}

/// Modular inverse of `a` mod `m` when `gcd(a, m) = 1`.
pub fn mod_inv(a: u64, m: u64) -> Option<u64> {
    let (g, x, _) = ext_gcd(a as i128, m as i128);
    if g != 1 {
        return None;
    }
    Some((x.rem_euclid(m as i128)) as u64)
}

fn ext_gcd(a: i128, b: i128) -> (i128, i128, i128) {
    if b == 0 {
        (a, 1, 0)
    } else {
        let (g, x, y) = ext_gcd(b, a % b);
        (g, y, x - (a / b) * y)
    }
}

/// Deterministic Miller-Rabin for u64.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = mod_pow(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..s - 1 {
            x = ((x as u128 * x as u128) % n as u128) as u64;
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Prime factorization by trial division, `(prime, multiplicity)` pairs ascending.
pub fn factor(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            let mut m = 0;
            while n % p == 0 {
                n /= p;
                m += 1;
            }
            out.push((p, m));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn prime_divisors(n: u64) -> Vec<u64> {
    factor(n).into_iter().map(|(p, _)| p).collect()
}

pub fn prime_divisors_u128(mut n: u128) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2u128;
    while p * p <= n {
        if n % p == 0 {
            out.push(p as u64);
            while n % p == 0 {
                n /= p;
            }
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        assert!(n <= u64::MAX as u128, "prime divisor out of range");
        out.push(n as u64);
    }
    out
}

/// All divisors of `n`, ascending.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut out = vec![1u64];
    for (p, m) in factor(n) {
        let prev = out.clone();
        let mut pk = 1;
        for _ in 0..m {
            pk *= p;
            out.extend(prev.iter().map(|d| d * pk));
        }
    }
    out.sort_unstable();
    out
}

/// Euler totient.
pub fn euler_phi(n: u64) -> u64 {
    let mut phi = n;
    for (p, _) in factor(n) {
        phi = phi / p * (p - 1);
    }
    phi
}

/// Residues in `1..m` coprime to `m`; for `m = 1` returns `[0]` (the trivial unit).
pub fn units(m: u64) -> Vec<u64> {
    if m == 1 {
        return vec![0];
    }
    (1..m).filter(|&j| gcd(j, m) == 1).collect()
}

/// Chinese remainder lift: x ≡ a (mod m), x ≡ b (mod n) for coprime m, n.
pub fn crt(a: u64, m: u64, b: u64, n: u64) -> u64 {
    let inv = mod_inv(m % n, n).expect("crt moduli must be coprime");
    let k = ((b + n - a % n) % n) as u128 * inv as u128 % n as u128;
    (a as u128 + k * m as u128) as u64
}

fn primitive_root_mod_prime_power(p: u64, a: u32) -> u64 {
    // smallest primitive root mod p, lifted to p^a
    let phi = p - 1;
    let fac = prime_divisors(phi);
    let mut g = 2;
    loop {
        if fac.iter().all(|&q| mod_pow(g, phi / q, p) != 1) {
            break;
        }
        g += 1;
    }
    if a == 1 {
        return g;
    }
    let pa = p.pow(a);
    // g generates mod p^a unless g^(p-1) ≡ 1 mod p^2, in which case g + p does
    if mod_pow(g, p - 1, p * p) == 1 {
        g += p;
    }
    g % pa
}

/// Generators of the unit group (Z/m)^×, lifted to residues mod m.
pub fn unit_group_generators(m: u64) -> Vec<u64> {
    if m <= 2 {
        return Vec::new();
    }
    let mut gens = Vec::new();
    let fac = factor(m);
    for &(p, a) in &fac {
        let pa = p.pow(a);
        let rest = m / pa;
        let local: Vec<u64> = if p == 2 {
            match a {
                1 => vec![],
                2 => vec![3],
                _ => vec![pa - 1, 5],
            }
        } else {
            vec![primitive_root_mod_prime_power(p, a)]
        };
        for g in local {
            if rest == 1 {
                gens.push(g);
            } else {
                gens.push(crt(g, pa, 1, rest));
            }
        }
    }
    gens
}

/// Partitions of `n` with parts descending, enumerated in descending
/// lexicographic order (so `[n]` first, `[1,...,1]` last).
pub fn partitions(n: u64) -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn rec(remaining: u64, max_part: u64, current: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if remaining == 0 {
            out.push(current.clone());
            return;
        }
        let top = max_part.min(remaining);
        for part in (1..=top).rev() {
            current.push(part);
            rec(remaining - part, part, current, out);
            current.pop();
        }
    }
    rec(n, n, &mut current, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gcd_lcm_basics() {
        assert_eq!(gcd(12, 18), 6);
        assert_eq!(lcm(4, 6), 12);
        assert_eq!(gcd(0, 5), 5);
    }

    #[test]
    fn mod_pow_inv() {
        assert_eq!(mod_pow(3, 4, 7), 4);
        assert_eq!(mod_inv(3, 7), Some(5));
        assert_eq!(mod_inv(2, 4), None);
    }

    #[test]
    fn primes_and_factors() {
        assert!(is_prime(2521));
        assert!(!is_prime(1261)); // 13 * 97
        assert_eq!(factor(360), vec![(2, 3), (3, 2), (5, 1)]);
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(euler_phi(42), 12);
    }

    #[test]
    fn unit_generators_generate() {
        for m in 2..200u64 {
            let gens = unit_group_generators(m);
            // close the generated set and compare against all units
            let mut seen = std::collections::BTreeSet::new();
            seen.insert(1 % m);
            let mut frontier = vec![1 % m];
            while let Some(x) = frontier.pop() {
                for &g in &gens {
                    let y = (x as u128 * g as u128 % m as u128) as u64;
                    if seen.insert(y) {
                        frontier.push(y);
                    }
                }
            }
            assert_eq!(seen.len() as u64, euler_phi(m), "units mod {m}");
        }
    }

    #[test]
    fn crt_agrees() {
        assert_eq!(crt(2, 3, 3, 5) % 3, 2);
        assert_eq!(crt(2, 3, 3, 5) % 5, 3);
    }

    #[test]
    fn partition_counts() {
        assert_eq!(partitions(5).len(), 7);
        assert_eq!(partitions(22).len(), 1002);
        assert_eq!(partitions(4)[0], vec![4]);
        assert_eq!(partitions(4).last().unwrap(), &vec![1, 1, 1, 1]);
    }
}
