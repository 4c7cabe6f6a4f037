//! Linear algebra and polynomial root finding over a prime field, as needed
//! by the eigenspace-splitting step of the character table computation.

use crate::arith;

/// Arithmetic mod an odd prime p (p fits comfortably in u64; products go
/// through u128).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Fp {
    pub p: u64,
}

impl Fp {
    pub fn add(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        (a as u128 * b as u128 % self.p as u128) as u64
    }

    pub fn pow(&self, a: u64, e: u64) -> u64 {
        arith::mod_pow(a, e, self.p)
    }

    pub fn inv(&self, a: u64) -> u64 {
        arith::mod_inv(a % self.p, self.p).expect("inverse of zero")
    }

    pub fn neg(&self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    /// Square root mod p by Tonelli-Shanks; returns the root in (0, p/2]
    /// when one exists.
    pub fn sqrt(&self, a: u64) -> Option<u64> {
        let p = self.p;
        if a == 0 {
            return Some(0);
        }
        if self.pow(a, (p - 1) / 2) != 1 {
            return None;
        }
        let r = if p % 4 == 3 {
            self.pow(a, (p + 1) / 4)
        } else {
            // Tonelli-Shanks with the smallest quadratic non-residue
            let mut q = p - 1;
            let mut s = 0;
            while q % 2 == 0 {
                q /= 2;
                s += 1;
            }
            let mut z = 2;
            while self.pow(z, (p - 1) / 2) != p - 1 {
                z += 1;
            }
            let mut m = s;
            let mut c = self.pow(z, q);
            let mut t = self.pow(a, q);
            let mut r = self.pow(a, (q + 1) / 2);
            while t != 1 {
                let mut i = 0;
                let mut tt = t;
                while tt != 1 {
                    tt = self.mul(tt, tt);
                    i += 1;
                }
                let b = self.pow(c, 1 << (m - i - 1));
                m = i;
                c = self.mul(b, b);
                t = self.mul(t, c);
                r = self.mul(r, b);
            }
            r
        };
        Some(r.min(p - r))
    }

    /// A generator of the multiplicative group (smallest).
    pub fn generator(&self) -> u64 {
        let fac = arith::prime_divisors(self.p - 1);
        let mut g = 2;
        loop {
            if fac.iter().all(|&q| self.pow(g, (self.p - 1) / q) != 1) {
                return g;
            }
            g += 1;
        }
    }
}

// ------------------------------------------------------------------
// dense polynomials, little-endian coefficients, always trimmed
// ------------------------------------------------------------------

pub type Poly = Vec<u64>;

fn trim(mut f: Poly) -> Poly {
    while f.len() > 1 && *f.last().unwrap() == 0 {
        f.pop();
    }
    f
}

pub fn poly_deg(f: &Poly) -> usize {
    f.len() - 1
}

fn poly_is_zero(f: &Poly) -> bool {
    f.iter().all(|&c| c == 0)
}

pub fn poly_mul(fp: Fp, a: &Poly, b: &Poly) -> Poly {
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = fp.add(out[i + j], fp.mul(x, y));
        }
    }
    trim(out)
}

pub fn poly_rem(fp: Fp, a: &Poly, m: &Poly) -> Poly {
    let mut r = a.clone();
    let dm = poly_deg(m);
    let lead_inv = fp.inv(m[dm]);
    while !poly_is_zero(&r) && poly_deg(&r) >= dm {
        let dr = poly_deg(&r);
        let c = fp.mul(r[dr], lead_inv);
        if c != 0 {
            for i in 0..=dm {
                r[dr - dm + i] = fp.sub(r[dr - dm + i], fp.mul(c, m[i]));
            }
        }
        r = trim(r);
        if poly_deg(&r) < dm || poly_is_zero(&r) {
            break;
        }
    }
    trim(r)
}

pub fn poly_gcd(fp: Fp, a: &Poly, b: &Poly) -> Poly {
    let mut a = trim(a.clone());
    let mut b = trim(b.clone());
    while !poly_is_zero(&b) {
        let r = poly_rem(fp, &a, &b);
        a = b;
        b = r;
    }
    // monic normalization
    if !poly_is_zero(&a) {
        let inv = fp.inv(*a.last().unwrap());
        for c in &mut a {
            *c = fp.mul(*c, inv);
        }
    }
    a
}

fn poly_powmod(fp: Fp, base: &Poly, mut exp: u64, m: &Poly) -> Poly {
    let mut acc = vec![1u64];
    let mut b = poly_rem(fp, base, m);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = poly_rem(fp, &poly_mul(fp, &acc, &b), m);
        }
        b = poly_rem(fp, &poly_mul(fp, &b, &b), m);
        exp >>= 1;
    }
    acc
}

fn poly_derivative(fp: Fp, f: &Poly) -> Poly {
    if f.len() <= 1 {
        return vec![0];
    }
    trim(
        f.iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| fp.mul(c, i as u64 % fp.p))
            .collect(),
    )
}

/// Distinct roots of `f` in F_p, ascending. The polynomials arising from
/// class-matrix restrictions split completely, so every irreducible factor of
/// the squarefree part is linear.
pub fn poly_roots(fp: Fp, f: &Poly) -> Vec<u64> {
    let f = trim(f.clone());
    if poly_deg(&f) == 0 {
        return Vec::new();
    }
    // squarefree part
    let d = poly_derivative(fp, &f);
    let sf = if poly_is_zero(&d) {
        f.clone()
    } else {
        let g = poly_gcd(fp, &f, &d);
        if poly_deg(&g) == 0 {
            f.clone()
        } else {
            poly_div(fp, &f, &g)
        }
    };
    // keep only the part splitting into distinct linear factors
    let xp = poly_powmod(fp, &vec![0, 1], fp.p, &sf);
    let mut xpx = xp;
    if xpx.len() < 2 {
        xpx.resize(2, 0);
    }
    xpx[1] = fp.sub(xpx[1], 1);
    let linear = poly_gcd(fp, &sf, &trim(xpx));
    let mut out = Vec::new();
    split_roots(fp, &linear, 0, &mut out);
    out.sort_unstable();
    out
}

fn poly_div(fp: Fp, a: &Poly, b: &Poly) -> Poly {
    // exact division
    let mut r = a.clone();
    let db = poly_deg(b);
    let lead_inv = fp.inv(b[db]);
    let mut q = vec![0u64; a.len() - db];
    while !poly_is_zero(&r) && poly_deg(&r) >= db {
        let dr = poly_deg(&r);
        let c = fp.mul(r[dr], lead_inv);
        q[dr - db] = c;
        for i in 0..=db {
            r[dr - db + i] = fp.sub(r[dr - db + i], fp.mul(c, b[i]));
        }
        r = trim(r);
        if poly_deg(&r) < db {
            break;
        }
    }
    trim(q)
}

fn split_roots(fp: Fp, f: &Poly, shift: u64, out: &mut Vec<u64>) {
    let f = trim(f.clone());
    match poly_deg(&f) {
        0 => {}
        1 => {
            // c0 + c1 x = 0
            out.push(fp.mul(fp.neg(f[0]), fp.inv(f[1])));
        }
        2 => {
            // quadratic formula
            let a = f[2];
            let b = f[1];
            let c = f[0];
            let disc = fp.sub(fp.mul(b, b), fp.mul(4 % fp.p, fp.mul(a, c)));
            let s = fp.sqrt(disc).expect("split polynomial has square discriminant");
            let inv2a = fp.inv(fp.mul(2, a));
            out.push(fp.mul(fp.sub(s, b), inv2a));
            out.push(fp.mul(fp.sub(fp.neg(s), b), inv2a));
        }
        _ => {
            // deterministic delta sweep: gcd(f(x), (x+delta)^((p-1)/2) - 1)
            let mut delta = shift;
            loop {
                let base = vec![delta % fp.p, 1];
                let mut h = poly_powmod(fp, &base, (fp.p - 1) / 2, &f);
                if h.is_empty() {
                    h = vec![0];
                }
                h[0] = fp.sub(h[0], 1);
                let g = poly_gcd(fp, &f, &trim(h));
                let dg = poly_deg(&g);
                if dg > 0 && dg < poly_deg(&f) {
                    let rest = poly_div(fp, &f, &g);
                    split_roots(fp, &g, delta + 1, out);
                    split_roots(fp, &rest, delta + 1, out);
                    return;
                }
                delta += 1;
                assert!(delta < fp.p, "root splitting failed to converge");
            }
        }
    }
}

// ------------------------------------------------------------------
// dense matrices over F_p, stored by rows
// ------------------------------------------------------------------

#[derive(Debug, Clone)]
pub struct Mat {
    pub rows: Vec<Vec<u64>>,
}

impl Mat {
    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.rows.first().map_or(0, |r| r.len())
    }
}

/// Reduced row echelon form (in place); returns the pivot columns.
pub fn rref(fp: Fp, m: &mut Mat) -> Vec<usize> {
    let (nr, nc) = (m.nrows(), m.ncols());
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..nc {
        if row >= nr {
            break;
        }
        let Some(sel) = (row..nr).find(|&r| m.rows[r][col] != 0) else {
            continue;
        };
        m.rows.swap(row, sel);
        let inv = fp.inv(m.rows[row][col]);
        for c in col..nc {
            m.rows[row][c] = fp.mul(m.rows[row][c], inv);
        }
        for r in 0..nr {
            if r != row && m.rows[r][col] != 0 {
                let f = m.rows[r][col];
                for c in col..nc {
                    let t = fp.mul(f, m.rows[row][c]);
                    m.rows[r][c] = fp.sub(m.rows[r][c], t);
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    m.rows.truncate(row);
    pivots
}

/// Basis of the right kernel `{v : M v = 0}`, rows in canonical order.
pub fn kernel(fp: Fp, m: &Mat) -> Vec<Vec<u64>> {
    let nc = m.ncols();
    let mut work = m.clone();
    let pivots = rref(fp, &mut work);
    let pivot_set: std::collections::BTreeSet<usize> = pivots.iter().copied().collect();
    let mut basis = Vec::new();
    for free in 0..nc {
        if pivot_set.contains(&free) {
            continue;
        }
        let mut v = vec![0u64; nc];
        v[free] = 1;
        for (r, &pc) in pivots.iter().enumerate() {
            v[pc] = fp.neg(work.rows[r][free]);
        }
        basis.push(v);
    }
    basis
}

/// Characteristic polynomial via Hessenberg reduction, monic, ascending
/// coefficients.
pub fn charpoly(fp: Fp, a: &Mat) -> Poly {
    let n = a.nrows();
    assert_eq!(n, a.ncols());
    if n == 0 {
        return vec![1];
    }
    let mut h = a.rows.clone();
    // similarity reduction to upper Hessenberg form
    for j in 0..n.saturating_sub(2) {
        let Some(piv) = (j + 1..n).find(|&r| h[r][j] != 0) else {
            continue;
        };
        if piv != j + 1 {
            h.swap(piv, j + 1);
            for row in h.iter_mut() {
                row.swap(piv, j + 1);
            }
        }
        let inv = fp.inv(h[j + 1][j]);
        for i in j + 2..n {
            let f = fp.mul(h[i][j], inv);
            if f == 0 {
                continue;
            }
            for c in 0..n {
                let t = fp.mul(f, h[j + 1][c]);
                h[i][c] = fp.sub(h[i][c], t);
            }
            for r in 0..n {
                let t = fp.mul(f, h[r][i]);
                h[r][j + 1] = fp.add(h[r][j + 1], t);
            }
        }
    }
    // recurrence on leading principal characteristic polynomials
    let mut p: Vec<Poly> = Vec::with_capacity(n + 1);
    p.push(vec![1]);
    for k in 1..=n {
        // (x - h[k-1][k-1]) * p[k-1]
        let prev = &p[k - 1];
        let mut cur = vec![0u64; prev.len() + 1];
        for (i, &c) in prev.iter().enumerate() {
            cur[i + 1] = fp.add(cur[i + 1], c);
            cur[i] = fp.sub(cur[i], fp.mul(h[k - 1][k - 1], c));
        }
        let mut prod = 1u64;
        for i in (1..k).rev() {
            prod = fp.mul(prod, h[i][i - 1]);
            if prod == 0 {
                break;
            }
            let coef = fp.mul(h[i - 1][k - 1], prod);
            if coef == 0 {
                continue;
            }
            for (idx, &c) in p[i - 1].iter().enumerate() {
                cur[idx] = fp.sub(cur[idx], fp.mul(coef, c));
            }
        }
        p.push(trim(cur));
    }
    p.pop().unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    const P: Fp = Fp { p: 101 };

    #[test]
    fn sqrt_works() {
        for a in 0..101u64 {
            if let Some(r) = P.sqrt(a) {
                assert_eq!(P.mul(r, r), a);
            } else {
                assert_eq!(P.pow(a, 50), 100);
            }
        }
    }

    #[test]
    fn roots_of_products() {
        // (x-3)(x-5)(x-10)^2
        let f = |r: u64| vec![P.neg(r), 1];
        let poly = poly_mul(P, &poly_mul(P, &f(3), &f(5)), &poly_mul(P, &f(10), &f(10)));
        assert_eq!(poly_roots(P, &poly), vec![3, 5, 10]);
    }

    #[test]
    fn charpoly_diagonal() {
        let m = Mat {
            rows: vec![vec![2, 0, 0], vec![0, 3, 0], vec![0, 0, 3]],
        };
        let cp = charpoly(P, &m);
        // (x-2)(x-3)^2 = x^3 - 8x^2 + 21x - 18
        assert_eq!(cp, vec![P.neg(18), 21, P.neg(8), 1]);
        assert_eq!(poly_roots(P, &cp), vec![2, 3]);
    }

    #[test]
    fn charpoly_companion() {
        // companion matrix of x^3 + 4x + 7
        let m = Mat {
            rows: vec![vec![0, 0, P.neg(7)], vec![1, 0, P.neg(4)], vec![0, 1, 0]],
        };
        let cp = charpoly(P, &m);
        assert_eq!(cp, vec![7, 4, 0, 1]);
    }

    #[test]
    fn kernel_and_rref() {
        let m = Mat {
            rows: vec![vec![1, 2, 3], vec![2, 4, 6]],
        };
        let k = kernel(P, &m);
        assert_eq!(k.len(), 2);
        for v in &k {
            let dot = v
                .iter()
                .zip(&[1u64, 2, 3])
                .fold(0u64, |acc, (&a, &b)| P.add(acc, P.mul(a, b)));
            assert_eq!(dot, 0);
        }
    }
}
