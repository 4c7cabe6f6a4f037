//! Exact arithmetic in cyclotomic fields over the power basis modulo the
//! cyclotomic polynomial. Coefficients are integers throughout: character
//! values are sums of roots of unity with nonnegative integer multiplicities,
//! so no rational arithmetic is ever required.

use crate::arith;

/// Shared context for one conductor: the reduction table of monomials
/// `x^u mod Phi_e` for `u` in `phi(e)..e`.
pub struct CycCtx {
    e: u64,
    phi: usize,
    rows: Vec<Vec<i64>>,
}

/// An element of the e-th cyclotomic field, reduced to the power basis
/// `1, z, ..., z^(phi(e)-1)` modulo `Phi_e`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cyclotomic {
    pub conductor: u64,
    pub coeffs: Vec<i64>,
}

impl CycCtx {
    pub fn new(e: u64) -> CycCtx {
        assert!(e >= 1);
        let phi = if e == 1 { 1 } else { arith::euler_phi(e) as usize };
        let cyclo = cyclotomic_polynomial(e);
        debug_assert_eq!(cyclo.len(), phi + 1);
        debug_assert_eq!(cyclo[phi], 1, "cyclotomic polynomial is monic");
        // rows[u - phi] = x^u reduced, for u in phi..e
        let mut rows: Vec<Vec<i64>> = Vec::with_capacity((e as usize).saturating_sub(phi));
        if (e as usize) > phi {
            let first: Vec<i64> = cyclo[..phi].iter().map(|&c| -c).collect();
            rows.push(first);
            for _ in phi + 1..e as usize {
                let prev = rows.last().unwrap();
                let top = prev[phi - 1];
                let mut next = vec![0i64; phi];
                for i in 1..phi {
                    next[i] = prev[i - 1];
                }
                if top != 0 {
                    let lead = &rows[0];
                    for i in 0..phi {
                        next[i] += top * lead[i];
                    }
                }
                rows.push(next);
            }
        }
        CycCtx { e, phi, rows }
    }

    pub fn conductor(&self) -> u64 {
        self.e
    }

    pub fn degree(&self) -> usize {
        self.phi
    }

    pub fn zero(&self) -> Cyclotomic {
        Cyclotomic {
            conductor: self.e,
            coeffs: vec![0; self.phi],
        }
    }

    pub fn integer(&self, n: i64) -> Cyclotomic {
        let mut z = self.zero();
        z.coeffs[0] = n;
        z
    }

    /// `coeff * z^u` reduced into the power basis.
    pub fn monomial(&self, u: u64, coeff: i64) -> Cyclotomic {
        let mut z = self.zero();
        self.add_monomial(&mut z, u, coeff);
        z
    }

    pub fn add_monomial(&self, z: &mut Cyclotomic, u: u64, coeff: i64) {
        debug_assert_eq!(z.conductor, self.e);
        if coeff == 0 {
            return;
        }
        let u = (u % self.e) as usize;
        if u < self.phi {
            z.coeffs[u] += coeff;
        } else {
            let row = &self.rows[u - self.phi];
            for i in 0..self.phi {
                z.coeffs[i] += coeff * row[i];
            }
        }
    }

    pub fn add(&self, a: &Cyclotomic, b: &Cyclotomic) -> Cyclotomic {
        let mut out = a.clone();
        for i in 0..self.phi {
            out.coeffs[i] += b.coeffs[i];
        }
        out
    }

    pub fn sub(&self, a: &Cyclotomic, b: &Cyclotomic) -> Cyclotomic {
        let mut out = a.clone();
        for i in 0..self.phi {
            out.coeffs[i] -= b.coeffs[i];
        }
        out
    }

    pub fn mul(&self, a: &Cyclotomic, b: &Cyclotomic) -> Cyclotomic {
        debug_assert_eq!(a.conductor, self.e);
        debug_assert_eq!(b.conductor, self.e);
        let n = self.phi;
        let mut raw = vec![0i128; 2 * n - 1];
        for (i, &x) in a.coeffs.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.coeffs.iter().enumerate() {
                raw[i + j] += x as i128 * y as i128;
            }
        }
        let mut out = self.zero();
        for (u, &v) in raw.iter().enumerate() {
            if v == 0 {
                continue;
            }
            let v = i64::try_from(v).expect("cyclotomic coefficient overflow");
            // product exponents can pass the conductor; wrap them first
            let u = u % self.e as usize;
            if u < n {
                out.coeffs[u] += v;
            } else {
                let row = &self.rows[u - n];
                for i in 0..n {
                    out.coeffs[i] += v * row[i];
                }
            }
        }
        out
    }

    /// Galois action `z -> z^j` for `j` coprime to the conductor.
    pub fn galois(&self, a: &Cyclotomic, j: u64) -> Cyclotomic {
        debug_assert_eq!(arith::gcd(j % self.e, self.e), 1);
        let mut out = self.zero();
        for (i, &c) in a.coeffs.iter().enumerate() {
            if c != 0 {
                self.add_monomial(&mut out, (i as u64 * j) % self.e, c);
            }
        }
        out
    }

    /// Complex conjugation.
    pub fn conj(&self, a: &Cyclotomic) -> Cyclotomic {
        if self.e <= 2 {
            return a.clone();
        }
        self.galois(a, self.e - 1)
    }
}

impl Cyclotomic {
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// Rational exactly when only the constant coordinate survives reduction.
    pub fn is_rational(&self) -> bool {
        self.coeffs[1..].iter().all(|&c| c == 0)
    }

    pub fn rational_part(&self) -> Option<i64> {
        if self.is_rational() {
            Some(self.coeffs[0])
        } else {
            None
        }
    }
}

/// Integer coefficients of Phi_e, ascending degree, computed by exact
/// division of x^d - 1 by the cyclotomic polynomials of proper divisors.
pub fn cyclotomic_polynomial(e: u64) -> Vec<i64> {
    if e == 1 {
        return vec![-1, 1];
    }
    let mut cache: std::collections::BTreeMap<u64, Vec<i64>> = std::collections::BTreeMap::new();
    cache.insert(1, vec![-1, 1]);
    for d in arith::divisors(e) {
        if d == 1 {
            continue;
        }
        // x^d - 1
        let mut num = vec![0i64; d as usize + 1];
        num[0] = -1;
        num[d as usize] = 1;
        for dd in arith::divisors(d) {
            if dd == d {
                continue;
            }
            num = poly_div_exact(&num, &cache[&dd]);
        }
        cache.insert(d, num);
    }
    cache.remove(&e).unwrap()
}

fn poly_div_exact(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dn = den.len() - 1;
    debug_assert_eq!(den[dn], 1, "divisor must be monic");
    let qd = rem.len() - 1 - dn;
    let mut quot = vec![0i64; qd + 1];
    for k in (0..=qd).rev() {
        let c = rem[k + dn];
        quot[k] = c;
        if c != 0 {
            for i in 0..=dn {
                rem[k + i] -= c * den[i];
            }
        }
    }
    debug_assert!(rem.iter().all(|&c| c == 0), "division must be exact");
    quot
}
