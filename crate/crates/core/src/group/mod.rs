//! Group realization: compact specifications expanded into concrete finite
//! groups with an indexed element universe, multiplication, inverses and
//! element orders.
//!
//! Elements are indices `0..order` into a canonical normal-form ordering
//! (lexicographic per backend), so all downstream structure is deterministic.

mod classes;
mod subgroup;

pub use classes::{conjugacy_classes, ClassData, ClassTable};
pub use subgroup::{
    center, centralizer, commutator_subgroup, cyclic_normalizer, index_two_abelian_subgroups,
    is_abelian, solvability_flags, subgroup_closure, sylow_subgroup, sylow_subgroup_parts,
    SolvabilityFlags, Subgroup,
};

use crate::arith;
use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

/// Default cap on the number of elements a realized group may have.
pub const DEFAULT_CAP: u64 = 1_000_000;

#[derive(Debug, Clone, thiserror::Error, PartialEq, Eq)]
pub enum GroupError {
    #[error("invalid group specification: {0}")]
    InvalidSpec(String),
    #[error("group order {order} exceeds enumeration cap {cap}")]
    OrderCapExceeded { order: u64, cap: u64 },
    #[error("prime {p} does not divide the group order {order}")]
    PNotDividing { p: u64, order: u64 },
}

/// Compact description of a finite group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupSpec {
    /// Subgroup of Sym(degree) generated by the listed permutations
    /// (each given as an image table on `0..degree`).
    Permutation {
        degree: usize,
        generators: Vec<Vec<usize>>,
    },
    /// `⟨a, b | a^n = 1, b^t = a^l, b^-1 a b = a^r⟩` with `r^t ≡ 1 (mod n)`,
    /// `l(r-1) ≡ 0 (mod n)` and `l | n`.
    Metacyclic { n: u64, t: u64, l: u64, r: u64 },
    /// Split extension of the abelian group with the given invariant factors
    /// by a cyclic group of order `t`; the action matrix describes conjugation
    /// by the distinguished generator `c`, i.e. `c v c^-1 = M v`.
    AbelianByCyclic {
        invariants: Vec<u64>,
        action: Vec<Vec<u64>>,
        t: u64,
    },
    /// Direct sum of cyclic groups of the given orders.
    Abelian { invariants: Vec<u64> },
    DirectProduct(Vec<GroupSpec>),
    /// Named shorthand: `G1`, `G2`, `C<k>`, `D<k>` (dihedral of order k),
    /// `Q<k>` (generalized quaternion of order k), `Sym(n)`, `Alt(n)`.
    Named(String),
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Permutation { degree, generators } => {
                write!(f, "perm({degree}; ")?;
                for (i, g) in generators.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write_cycles(f, g)?;
                }
                write!(f, ")")
            }
            GroupSpec::Metacyclic { n, t, l, r } => write!(f, "metacyclic({n},{t},{l},{r})"),
            GroupSpec::AbelianByCyclic {
                invariants,
                action,
                t,
            } => {
                let inv: Vec<String> = invariants.iter().map(|d| d.to_string()).collect();
                let mat: Vec<String> = action
                    .iter()
                    .flat_map(|row| row.iter().map(|x| x.to_string()))
                    .collect();
                write!(f, "abc({}; {}; {})", inv.join(","), mat.join(","), t)
            }
            GroupSpec::Abelian { invariants } => {
                let inv: Vec<String> = invariants.iter().map(|d| d.to_string()).collect();
                write!(f, "abelian({})", inv.join(","))
            }
            GroupSpec::DirectProduct(parts) => {
                write!(f, "product(")?;
                for (i, p) in parts.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{p}")?;
                }
                write!(f, ")")
            }
            GroupSpec::Named(name) => {
                if let Some(n) = name.strip_prefix("Sym(").and_then(|s| s.strip_suffix(')')) {
                    write!(f, "sym({n})")
                } else if let Some(n) = name.strip_prefix("Alt(").and_then(|s| s.strip_suffix(')'))
                {
                    write!(f, "alt({n})")
                } else {
                    write!(f, "{name}")
                }
            }
        }
    }
}

fn write_cycles(f: &mut fmt::Formatter<'_>, images: &[usize]) -> fmt::Result {
    let n = images.len();
    let mut seen = vec![false; n];
    let mut wrote = false;
    for start in 0..n {
        if seen[start] || images[start] == start {
            seen[start] = true;
            continue;
        }
        write!(f, "(")?;
        let mut p = start;
        let mut first = true;
        while !seen[p] {
            seen[p] = true;
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{}", p + 1)?;
            first = false;
            p = images[p];
        }
        write!(f, ")")?;
        wrote = true;
    }
    if !wrote {
        write!(f, "()")?;
    }
    Ok(())
}

impl GroupSpec {
    /// Expands named shorthands into concrete specifications.
    pub fn expand_named(&self) -> Result<GroupSpec, GroupError> {
        let GroupSpec::Named(name) = self else {
            return Ok(self.clone());
        };
        match name.as_str() {
            "G1" => Ok(GroupSpec::AbelianByCyclic {
                invariants: vec![8, 2],
                action: vec![vec![3, 4], vec![0, 1]],
                t: 2,
            }),
            "G2" => Ok(GroupSpec::AbelianByCyclic {
                invariants: vec![8, 2],
                action: vec![vec![3, 0], vec![1, 1]],
                t: 2,
            }),
            _ => {
                if let Some(k) = name.strip_prefix('C').and_then(|s| s.parse::<u64>().ok()) {
                    if k == 0 {
                        return Err(GroupError::InvalidSpec("C0 is not a group".into()));
                    }
                    return Ok(GroupSpec::Abelian {
                        invariants: vec![k],
                    });
                }
                if let Some(k) = name.strip_prefix('D').and_then(|s| s.parse::<u64>().ok()) {
                    // dihedral group of order k
                    if k < 4 || k % 2 != 0 {
                        return Err(GroupError::InvalidSpec(format!(
                            "D{k}: dihedral shorthand takes an even order >= 4"
                        )));
                    }
                    let n = k / 2;
                    return Ok(GroupSpec::Metacyclic {
                        n,
                        t: 2,
                        l: n,
                        r: n - 1,
                    });
                }
                if let Some(k) = name.strip_prefix('Q').and_then(|s| s.parse::<u64>().ok()) {
                    // generalized quaternion group of order k = 2^m >= 8
                    if k < 8 || !k.is_power_of_two() {
                        return Err(GroupError::InvalidSpec(format!(
                            "Q{k}: quaternion shorthand takes a 2-power order >= 8"
                        )));
                    }
                    return Ok(GroupSpec::Metacyclic {
                        n: k / 2,
                        t: 2,
                        l: k / 4,
                        r: k / 2 - 1,
                    });
                }
                if let Some(n) = parse_named_arg(name, "Sym") {
                    return sym_spec(n);
                }
                if let Some(n) = parse_named_arg(name, "Alt") {
                    return alt_spec(n);
                }
                Err(GroupError::InvalidSpec(format!("unknown named group {name}")))
            }
        }
    }
}

fn parse_named_arg(name: &str, prefix: &str) -> Option<u64> {
    name.strip_prefix(prefix)?
        .strip_prefix('(')?
        .strip_suffix(')')?
        .parse()
        .ok()
}

fn sym_spec(n: u64) -> Result<GroupSpec, GroupError> {
    if n == 0 {
        return Err(GroupError::InvalidSpec("sym(0) is not supported".into()));
    }
    if n >= 10 {
        // large symmetric groups are served by cycle-type class tables, not
        // element enumeration
        return Err(GroupError::InvalidSpec(format!(
            "sym({n}): groups of degree >= 10 are analyzed at class level only"
        )));
    }
    let n = n as usize;
    let mut generators = Vec::new();
    if n >= 2 {
        generators.push(transposition(n, 0, 1));
    }
    if n >= 3 {
        generators.push(full_cycle(n, 0));
    }
    Ok(GroupSpec::Permutation {
        degree: n,
        generators,
    })
}

fn alt_spec(n: u64) -> Result<GroupSpec, GroupError> {
    if n == 0 {
        return Err(GroupError::InvalidSpec("alt(0) is not supported".into()));
    }
    if n >= 10 {
        return Err(GroupError::InvalidSpec(format!(
            "alt({n}): groups of degree >= 10 are analyzed at class level only"
        )));
    }
    let n = n as usize;
    let mut generators = Vec::new();
    if n >= 3 {
        let mut three = identity_perm(n);
        three[0] = 1;
        three[1] = 2;
        three[2] = 0;
        generators.push(three);
        if n >= 4 {
            if n % 2 == 1 {
                generators.push(full_cycle(n, 0));
            } else {
                generators.push(full_cycle(n, 1));
            }
        }
    }
    Ok(GroupSpec::Permutation {
        degree: n,
        generators,
    })
}

fn identity_perm(n: usize) -> Vec<usize> {
    (0..n).collect()
}

fn transposition(n: usize, a: usize, b: usize) -> Vec<usize> {
    let mut p = identity_perm(n);
    p.swap(a, b);
    p
}

/// Cycle on points `start..n`, fixing `0..start`.
fn full_cycle(n: usize, start: usize) -> Vec<usize> {
    let mut p = identity_perm(n);
    for i in start..n {
        p[i] = if i + 1 < n { i + 1 } else { start };
    }
    p
}

enum Backend {
    Perm {
        elems: Vec<Box<[u8]>>,
        index: HashMap<Box<[u8]>, u32>,
    },
    Metacyclic {
        n: u64,
        t: u64,
        l: u64,
        rpow: Vec<u64>,
    },
    Abelian {
        factors: Vec<u64>,
    },
    AbelianByCyclic {
        factors: Vec<u64>,
        t: u64,
        /// powers of the action matrix, `mats[s] = M^s`, entries reduced per row
        mats: Vec<Vec<Vec<u64>>>,
    },
    Product {
        left: FiniteGroup,
        right: FiniteGroup,
    },
    Section {
        parent: FiniteGroup,
        elems: Vec<u32>,
    },
}

struct GroupInner {
    backend: Backend,
    order: u64,
    exponent: u64,
    identity: u32,
    generators: Vec<u32>,
    inverses: Vec<u32>,
    elem_orders: Vec<u64>,
}

/// A realized finite group. Cheap to clone and safe to share across threads;
/// all tables are immutable after construction.
#[derive(Clone)]
pub struct FiniteGroup {
    inner: Arc<GroupInner>,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteGroup(order={})", self.order())
    }
}

impl FiniteGroup {
    pub fn order(&self) -> u64 {
        self.inner.order
    }

    pub fn exponent(&self) -> u64 {
        self.inner.exponent
    }

    pub fn identity(&self) -> u32 {
        self.inner.identity
    }

    pub fn generators(&self) -> &[u32] {
        &self.inner.generators
    }

    pub fn inv(&self, x: u32) -> u32 {
        self.inner.inverses[x as usize]
    }

    pub fn elem_order(&self, x: u32) -> u64 {
        self.inner.elem_orders[x as usize]
    }

    pub fn mul(&self, x: u32, y: u32) -> u32 {
        match &self.inner.backend {
            Backend::Perm { elems, index } => {
                let a = &elems[x as usize];
                let b = &elems[y as usize];
                let mut c = vec![0u8; a.len()];
                for i in 0..a.len() {
                    c[i] = a[b[i] as usize];
                }
                index[c.as_slice()]
            }
            Backend::Metacyclic { n, t, l, rpow } => {
                let (i1, j1) = (x as u64 / t, x as u64 % t);
                let (i2, j2) = (y as u64 / t, y as u64 % t);
                let mut i = (i1 + i2 % n * rpow[j1 as usize]) % n;
                let js = j1 + j2;
                if js >= *t {
                    i = (i + l) % n;
                }
                (i * t + js % t) as u32
            }
            Backend::Abelian { factors } => {
                let mut idx = 0u64;
                let (mut xv, mut yv) = (x as u64, y as u64);
                // decode both in one pass, least significant coordinate last
                let mut coords = Vec::with_capacity(factors.len());
                for &d in factors.iter().rev() {
                    coords.push(((xv % d) + (yv % d)) % d);
                    xv /= d;
                    yv /= d;
                }
                for (&d, c) in factors.iter().zip(coords.iter().rev()) {
                    idx = idx * d + c;
                }
                idx as u32
            }
            Backend::AbelianByCyclic { factors, t, mats } => {
                let (v1, s1) = (x as u64 / t, x as u64 % t);
                let (v2, s2) = (y as u64 / t, y as u64 % t);
                let c1 = decode_vec(v1, factors);
                let c2 = decode_vec(v2, factors);
                let m = &mats[s1 as usize];
                let mut res = vec![0u64; factors.len()];
                for r in 0..factors.len() {
                    let mut acc = c1[r] as u128;
                    for c in 0..factors.len() {
                        acc += m[r][c] as u128 * c2[c] as u128;
                    }
                    res[r] = (acc % factors[r] as u128) as u64;
                }
                (encode_vec(&res, factors) * t + (s1 + s2) % t) as u32
            }
            Backend::Product { left, right } => {
                let rb = right.order();
                let (xa, xb) = (x as u64 / rb, x as u64 % rb);
                let (ya, yb) = (y as u64 / rb, y as u64 % rb);
                let za = left.mul(xa as u32, ya as u32) as u64;
                let zb = right.mul(xb as u32, yb as u32) as u64;
                (za * rb + zb) as u32
            }
            Backend::Section { parent, elems } => {
                let z = parent.mul(elems[x as usize], elems[y as usize]);
                elems.binary_search(&z).expect("section closed under product") as u32
            }
        }
    }

    /// `x^k` for any integer `k` (negative via the inverse).
    pub fn pow(&self, x: u32, k: i64) -> u32 {
        let o = self.elem_order(x) as i64;
        let mut k = k.rem_euclid(o) as u64;
        let mut base = x;
        let mut acc = self.identity();
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    /// Conjugate `x^g = g^-1 x g`.
    pub fn conj(&self, x: u32, g: u32) -> u32 {
        self.mul(self.mul(self.inv(g), x), g)
    }

    pub fn commutator(&self, x: u32, y: u32) -> u32 {
        self.mul(self.mul(self.inv(x), self.inv(y)), self.mul(x, y))
    }

    pub fn is_abelian(&self) -> bool {
        let gens = self.generators();
        for (i, &a) in gens.iter().enumerate() {
            for &b in &gens[i + 1..] {
                if self.mul(a, b) != self.mul(b, a) {
                    return false;
                }
            }
        }
        true
    }

    /// Coordinates of the element universe when the group is a direct sum of
    /// cyclic groups realized as such (possibly via nested direct products).
    /// Returns the cyclic factor orders; the element index is the mixed-radix
    /// encoding of its coordinate vector.
    pub fn abelian_coordinates(&self) -> Option<Vec<u64>> {
        match &self.inner.backend {
            Backend::Abelian { factors } => Some(factors.clone()),
            Backend::Product { left, right } => {
                let mut f = left.abelian_coordinates()?;
                f.extend(right.abelian_coordinates()?);
                Some(f)
            }
            _ => None,
        }
    }

    fn assemble(backend: Backend, order: u64, generators: Vec<u32>) -> FiniteGroup {
        assert!(order >= 1);
        let identity = match &backend {
            Backend::Perm { elems, index } => {
                let n = elems[0].len();
                let id: Box<[u8]> = (0..n as u8).collect();
                index[&id]
            }
            Backend::Product { left, right } => {
                (left.identity() as u64 * right.order() + right.identity() as u64) as u32
            }
            Backend::Section { parent, elems } => elems
                .binary_search(&parent.identity())
                .expect("identity in section") as u32,
            _ => 0,
        };
        let mut inner = GroupInner {
            backend,
            order,
            exponent: 1,
            identity,
            generators,
            inverses: Vec::new(),
            elem_orders: Vec::new(),
        };
        inner.fill_tables();
        FiniteGroup {
            inner: Arc::new(inner),
        }
    }
}

fn decode_vec(mut idx: u64, factors: &[u64]) -> Vec<u64> {
    let mut v = vec![0u64; factors.len()];
    for (i, &d) in factors.iter().enumerate().rev() {
        v[i] = idx % d;
        idx /= d;
    }
    v
}

fn encode_vec(v: &[u64], factors: &[u64]) -> u64 {
    let mut idx = 0;
    for (x, &d) in v.iter().zip(factors) {
        debug_assert!(*x < d);
        idx = idx * d + x;
    }
    idx
}

impl GroupInner {
    fn fill_tables(&mut self) {
        let order = self.order;
        let mul = |backend: &Backend, x: u32, y: u32| -> u32 {
            match backend {
                Backend::Perm { elems, index } => {
                    let a = &elems[x as usize];
                    let b = &elems[y as usize];
                    let mut c = vec![0u8; a.len()];
                    for i in 0..a.len() {
                        c[i] = a[b[i] as usize];
                    }
                    index[c.as_slice()]
                }
                Backend::Metacyclic { n, t, l, rpow } => {
                    let (i1, j1) = (x as u64 / t, x as u64 % t);
                    let (i2, j2) = (y as u64 / t, y as u64 % t);
                    let mut i = (i1 + i2 % n * rpow[j1 as usize]) % n;
                    let js = j1 + j2;
                    if js >= *t {
                        i = (i + l) % n;
                    }
                    (i * t + js % t) as u32
                }
                Backend::Abelian { factors } => {
                    let c1 = decode_vec(x as u64, factors);
                    let c2 = decode_vec(y as u64, factors);
                    let sum: Vec<u64> = c1
                        .iter()
                        .zip(&c2)
                        .zip(factors)
                        .map(|((a, b), d)| (a + b) % d)
                        .collect();
                    encode_vec(&sum, factors) as u32
                }
                Backend::AbelianByCyclic { factors, t, mats } => {
                    let (v1, s1) = (x as u64 / t, x as u64 % t);
                    let (v2, s2) = (y as u64 / t, y as u64 % t);
                    let c1 = decode_vec(v1, factors);
                    let c2 = decode_vec(v2, factors);
                    let m = &mats[s1 as usize];
                    let mut res = vec![0u64; factors.len()];
                    for r in 0..factors.len() {
                        let mut acc = c1[r] as u128;
                        for c in 0..factors.len() {
                            acc += m[r][c] as u128 * c2[c] as u128;
                        }
                        res[r] = (acc % factors[r] as u128) as u64;
                    }
                    (encode_vec(&res, factors) * t + (s1 + s2) % t) as u32
                }
                Backend::Product { left, right } => {
                    let rb = right.order();
                    let (xa, xb) = (x as u64 / rb, x as u64 % rb);
                    let (ya, yb) = (y as u64 / rb, y as u64 % rb);
                    (left.mul(xa as u32, ya as u32) as u64 * rb
                        + right.mul(xb as u32, yb as u32) as u64) as u32
                }
                Backend::Section { parent, elems } => {
                    let z = parent.mul(elems[x as usize], elems[y as usize]);
                    elems.binary_search(&z).expect("section closed") as u32
                }
            }
        };

        // element orders, with cheap backend-specific paths
        let mut orders = vec![0u64; order as usize];
        match &self.backend {
            Backend::Perm { elems, .. } => {
                for (i, p) in elems.iter().enumerate() {
                    orders[i] = perm_order(p);
                }
            }
            Backend::Abelian { factors } => {
                for i in 0..order {
                    let v = decode_vec(i, factors);
                    let mut o = 1u64;
                    for (x, &d) in v.iter().zip(factors) {
                        o = arith::lcm(o, d / arith::gcd(*x, d));
                    }
                    orders[i as usize] = o;
                }
            }
            Backend::Product { left, right } => {
                let rb = right.order();
                for i in 0..order {
                    orders[i as usize] = arith::lcm(
                        left.elem_order((i / rb) as u32),
                        right.elem_order((i % rb) as u32),
                    );
                }
            }
            _ => {
                let fac = arith::factor(order);
                for x in 0..order as u32 {
                    orders[x as usize] = generic_order(
                        |a, b| mul(&self.backend, a, b),
                        self.identity,
                        order,
                        &fac,
                        x,
                    );
                }
            }
        }

        // inverses
        let mut inverses = vec![0u32; order as usize];
        match &self.backend {
            Backend::Perm { elems, index } => {
                for (i, p) in elems.iter().enumerate() {
                    let mut q = vec![0u8; p.len()];
                    for (a, &b) in p.iter().enumerate() {
                        q[b as usize] = a as u8;
                    }
                    inverses[i] = index[q.as_slice()];
                }
            }
            Backend::Abelian { factors } => {
                for i in 0..order {
                    let v = decode_vec(i, factors);
                    let neg: Vec<u64> = v.iter().zip(factors).map(|(x, d)| (d - x) % d).collect();
                    inverses[i as usize] = encode_vec(&neg, factors) as u32;
                }
            }
            Backend::Product { left, right } => {
                let rb = right.order();
                for i in 0..order {
                    inverses[i as usize] = (left.inv((i / rb) as u32) as u64 * rb
                        + right.inv((i % rb) as u32) as u64)
                        as u32;
                }
            }
            _ => {
                for x in 0..order as u32 {
                    // x^(o-1)
                    let o = orders[x as usize];
                    let mut acc = self.identity;
                    let mut base = x;
                    let mut k = o - 1;
                    while k > 0 {
                        if k & 1 == 1 {
                            acc = mul(&self.backend, acc, base);
                        }
                        base = mul(&self.backend, base, base);
                        k >>= 1;
                    }
                    inverses[x as usize] = acc;
                }
            }
        }

        let mut exponent = 1u64;
        for &o in &orders {
            exponent = arith::lcm(exponent, o);
        }
        self.elem_orders = orders;
        self.inverses = inverses;
        self.exponent = exponent;
    }
}

fn perm_order(p: &[u8]) -> u64 {
    let mut seen = vec![false; p.len()];
    let mut o = 1u64;
    for start in 0..p.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0u64;
        let mut q = start;
        while !seen[q] {
            seen[q] = true;
            q = p[q] as usize;
            len += 1;
        }
        o = arith::lcm(o, len);
    }
    o
}

fn generic_order(
    mul: impl Fn(u32, u32) -> u32,
    identity: u32,
    group_order: u64,
    fac: &[(u64, u32)],
    x: u32,
) -> u64 {
    let pow = |x: u32, mut k: u64| -> u32 {
        let mut acc = identity;
        let mut base = x;
        while k > 0 {
            if k & 1 == 1 {
                acc = mul(acc, base);
            }
            base = mul(base, base);
            k >>= 1;
        }
        acc
    };
    let mut o = group_order;
    for &(p, _) in fac {
        while o % p == 0 && pow(x, o / p) == identity {
            o /= p;
        }
    }
    o
}

/// Realizes a group specification, enforcing the element cap.
pub fn realize(spec: &GroupSpec, cap: u64) -> Result<FiniteGroup, GroupError> {
    let spec = spec.expand_named()?;
    match spec {
        GroupSpec::Named(_) => unreachable!("expanded above"),
        GroupSpec::Abelian { invariants } => realize_abelian(&invariants, cap),
        GroupSpec::Metacyclic { n, t, l, r } => realize_metacyclic(n, t, l, r, cap),
        GroupSpec::AbelianByCyclic {
            invariants,
            action,
            t,
        } => realize_abelian_by_cyclic(&invariants, &action, t, cap),
        GroupSpec::Permutation { degree, generators } => {
            realize_permutation(degree, &generators, cap)
        }
        GroupSpec::DirectProduct(parts) => {
            if parts.is_empty() {
                return realize_abelian(&[1], cap);
            }
            let mut groups = parts.iter().map(|p| realize(p, cap));
            let mut acc = groups.next().unwrap()?;
            for g in groups {
                acc = direct_product(&acc, &g?, cap)?;
            }
            Ok(acc)
        }
    }
}

fn check_cap(order: u64, cap: u64) -> Result<(), GroupError> {
    if order > cap {
        Err(GroupError::OrderCapExceeded { order, cap })
    } else {
        Ok(())
    }
}

fn realize_abelian(invariants: &[u64], cap: u64) -> Result<FiniteGroup, GroupError> {
    if invariants.iter().any(|&d| d == 0) {
        return Err(GroupError::InvalidSpec(
            "abelian invariant factors must be positive".into(),
        ));
    }
    let factors: Vec<u64> = invariants.iter().copied().filter(|&d| d > 1).collect();
    let mut order = 1u64;
    for &d in &factors {
        order = order
            .checked_mul(d)
            .ok_or(GroupError::OrderCapExceeded { order: u64::MAX, cap })?;
        check_cap(order, cap)?;
    }
    // generators: one per cyclic factor
    let mut gens = Vec::new();
    for i in 0..factors.len() {
        let mut v = vec![0u64; factors.len()];
        v[i] = 1;
        gens.push(encode_vec(&v, &factors) as u32);
    }
    Ok(FiniteGroup::assemble(
        Backend::Abelian { factors },
        order,
        gens,
    ))
}

fn realize_metacyclic(n: u64, t: u64, l: u64, r: u64, cap: u64) -> Result<FiniteGroup, GroupError> {
    if n == 0 || t == 0 || l == 0 || l > n {
        return Err(GroupError::InvalidSpec(format!(
            "metacyclic({n},{t},{l},{r}): parameters must be positive with l <= n"
        )));
    }
    if n % l != 0 {
        return Err(GroupError::InvalidSpec(format!(
            "metacyclic({n},{t},{l},{r}): l must divide n"
        )));
    }
    let r = r % n.max(1);
    if arith::mod_pow(r, t, n) != 1 % n {
        return Err(GroupError::InvalidSpec(format!(
            "metacyclic({n},{t},{l},{r}): r^t must be 1 mod n"
        )));
    }
    if (l as u128 * ((r + n - 1) % n) as u128) % n as u128 != 0 {
        return Err(GroupError::InvalidSpec(format!(
            "metacyclic({n},{t},{l},{r}): l(r-1) must be 0 mod n"
        )));
    }
    let order = n
        .checked_mul(t)
        .ok_or(GroupError::OrderCapExceeded { order: u64::MAX, cap })?;
    check_cap(order, cap)?;
    let mut rpow = Vec::with_capacity(t as usize);
    let mut acc = 1 % n;
    for _ in 0..t {
        rpow.push(acc);
        acc = acc * r % n;
    }
    let mut gens = Vec::new();
    if n > 1 {
        gens.push(t as u32); // a = (1, 0)
    }
    if t > 1 {
        gens.push(1); // b = (0, 1)
    }
    let g = FiniteGroup::assemble(
        Backend::Metacyclic {
            n,
            t,
            l: l % n,
            rpow,
        },
        order,
        gens,
    );
    // relation audit on the realized elements: b a = a^r b and b^t = a^l
    if n > 1 && t > 1 {
        let a = t as u32;
        let b = 1u32;
        debug_assert_eq!(
            g.mul(b, a),
            g.mul(g.pow(a, r as i64), b),
            "metacyclic conjugation relation"
        );
        debug_assert_eq!(
            g.pow(b, t as i64),
            g.pow(a, l as i64),
            "metacyclic power relation"
        );
    }
    Ok(g)
}

fn realize_abelian_by_cyclic(
    invariants: &[u64],
    action: &[Vec<u64>],
    t: u64,
    cap: u64,
) -> Result<FiniteGroup, GroupError> {
    if t == 0 {
        return Err(GroupError::InvalidSpec("abc: t must be positive".into()));
    }
    if invariants.iter().any(|&d| d == 0) {
        return Err(GroupError::InvalidSpec(
            "abc: invariant factors must be positive".into(),
        ));
    }
    let factors: Vec<u64> = invariants.iter().copied().filter(|&d| d > 1).collect();
    let k = factors.len();
    // re-filter the action matrix to the nontrivial coordinates
    let keep: Vec<usize> = invariants
        .iter()
        .enumerate()
        .filter(|(_, &d)| d > 1)
        .map(|(i, _)| i)
        .collect();
    if action.len() != invariants.len() || action.iter().any(|row| row.len() != invariants.len()) {
        return Err(GroupError::InvalidSpec(
            "abc: action matrix must be square over the invariant factors".into(),
        ));
    }
    let mat: Vec<Vec<u64>> = keep
        .iter()
        .enumerate()
        .map(|(ri, &r)| keep.iter().map(|&c| action[r][c] % factors[ri]).collect())
        .collect();
    // well-definedness: d_c * M[r][c] ≡ 0 mod d_r
    for r in 0..k {
        for c in 0..k {
            if (factors[c] as u128 * mat[r][c] as u128) % factors[r] as u128 != 0 {
                return Err(GroupError::InvalidSpec(format!(
                    "abc: action matrix does not define an endomorphism (entry {r},{c})"
                )));
            }
        }
    }
    // powers of the matrix and the order-t check
    let mut mats = Vec::with_capacity(t as usize);
    let ident: Vec<Vec<u64>> = (0..k)
        .map(|r| (0..k).map(|c| u64::from(r == c)).collect())
        .collect();
    mats.push(ident.clone());
    for s in 1..t {
        let prev = &mats[(s - 1) as usize];
        let mut next = vec![vec![0u64; k]; k];
        for r in 0..k {
            for c in 0..k {
                let mut acc = 0u128;
                for m in 0..k {
                    acc += mat[r][m] as u128 * prev[m][c] as u128;
                }
                next[r][c] = (acc % factors[r] as u128) as u64;
            }
        }
        mats.push(next);
    }
    // M^t must be the identity
    let mut mt = vec![vec![0u64; k]; k];
    let last = mats.last().unwrap();
    for r in 0..k {
        for c in 0..k {
            let mut acc = 0u128;
            for m in 0..k {
                acc += mat[r][m] as u128 * last[m][c] as u128;
            }
            mt[r][c] = (acc % factors[r] as u128) as u64;
        }
    }
    if mt != ident {
        return Err(GroupError::InvalidSpec(
            "abc: action matrix order does not divide t".into(),
        ));
    }
    let mut a_order = 1u64;
    for &d in &factors {
        a_order = a_order
            .checked_mul(d)
            .ok_or(GroupError::OrderCapExceeded { order: u64::MAX, cap })?;
    }
    let order = a_order
        .checked_mul(t)
        .ok_or(GroupError::OrderCapExceeded { order: u64::MAX, cap })?;
    check_cap(order, cap)?;
    let mut gens = Vec::new();
    for i in 0..k {
        let mut v = vec![0u64; k];
        v[i] = 1;
        gens.push((encode_vec(&v, &factors) * t) as u32);
    }
    if t > 1 {
        gens.push(1); // the cyclic generator c = (0, 1)
    }
    Ok(FiniteGroup::assemble(
        Backend::AbelianByCyclic { factors, t, mats },
        order,
        gens,
    ))
}

fn realize_permutation(
    degree: usize,
    generators: &[Vec<usize>],
    cap: u64,
) -> Result<FiniteGroup, GroupError> {
    if degree == 0 || degree > 255 {
        return Err(GroupError::InvalidSpec(
            "perm: degree must be between 1 and 255".into(),
        ));
    }
    let mut gen_perms: Vec<Box<[u8]>> = Vec::new();
    for g in generators {
        if g.len() != degree {
            return Err(GroupError::InvalidSpec(
                "perm: generator length does not match degree".into(),
            ));
        }
        let mut seen = vec![false; degree];
        for &img in g {
            if img >= degree || seen[img] {
                return Err(GroupError::InvalidSpec(
                    "perm: generator is not a permutation".into(),
                ));
            }
            seen[img] = true;
        }
        gen_perms.push(g.iter().map(|&x| x as u8).collect());
    }
    // breadth-first closure from the identity
    let id: Box<[u8]> = (0..degree as u8).collect();
    let mut elems: Vec<Box<[u8]>> = vec![id.clone()];
    let mut seen: HashMap<Box<[u8]>, ()> = HashMap::new();
    seen.insert(id, ());
    let mut head = 0;
    while head < elems.len() {
        let cur = elems[head].clone();
        head += 1;
        for g in &gen_perms {
            let mut next = vec![0u8; degree];
            for i in 0..degree {
                next[i] = cur[g[i] as usize];
            }
            let next: Box<[u8]> = next.into();
            if !seen.contains_key(&next) {
                if elems.len() as u64 >= cap {
                    return Err(GroupError::OrderCapExceeded {
                        order: elems.len() as u64 + 1,
                        cap,
                    });
                }
                seen.insert(next.clone(), ());
                elems.push(next);
            }
        }
    }
    elems.sort();
    let order = elems.len() as u64;
    let index: HashMap<Box<[u8]>, u32> = elems
        .iter()
        .enumerate()
        .map(|(i, e)| (e.clone(), i as u32))
        .collect();
    let gens: Vec<u32> = gen_perms.iter().map(|g| index[g]).collect();
    Ok(FiniteGroup::assemble(
        Backend::Perm { elems, index },
        order,
        gens,
    ))
}

/// Componentwise direct product.
pub fn direct_product(
    a: &FiniteGroup,
    b: &FiniteGroup,
    cap: u64,
) -> Result<FiniteGroup, GroupError> {
    let order = a
        .order()
        .checked_mul(b.order())
        .ok_or(GroupError::OrderCapExceeded { order: u64::MAX, cap })?;
    check_cap(order, cap)?;
    let rb = b.order();
    let mut gens = Vec::new();
    for &g in a.generators() {
        gens.push((g as u64 * rb + b.identity() as u64) as u32);
    }
    for &g in b.generators() {
        gens.push((a.identity() as u64 * rb + g as u64) as u32);
    }
    Ok(FiniteGroup::assemble(
        Backend::Product {
            left: a.clone(),
            right: b.clone(),
        },
        order,
        gens,
    ))
}

/// Re-realizes a set of element indices of `parent` (closed under the group
/// operations) as a standalone group.
pub fn section_group(parent: &FiniteGroup, elements: &[u32], generators: &[u32]) -> FiniteGroup {
    let mut elems = elements.to_vec();
    elems.sort_unstable();
    elems.dedup();
    let order = elems.len() as u64;
    let gens: Vec<u32> = generators
        .iter()
        .map(|g| elems.binary_search(g).expect("generator in section") as u32)
        .collect();
    FiniteGroup::assemble(
        Backend::Section {
            parent: parent.clone(),
            elems,
        },
        order,
        gens,
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(s: &str) -> GroupSpec {
        crate::cli::parse_spec(s).unwrap()
    }

    #[test]
    fn metacyclic_d10() {
        let g = realize(&spec("metacyclic(5,2,5,4)"), DEFAULT_CAP).unwrap();
        assert_eq!(g.order(), 10);
        assert_eq!(g.exponent(), 10);
        // b a b^-1 = a^4 audit on indices: a = (1,0) -> 2, b = (0,1) -> 1
        let (a, b) = (2u32, 1u32);
        assert_eq!(g.conj(a, b), g.pow(a, 4));
    }

    #[test]
    fn metacyclic_q8() {
        let g = realize(&spec("metacyclic(4,2,2,3)"), DEFAULT_CAP).unwrap();
        assert_eq!(g.order(), 8);
        let order2 = (0..8).filter(|&x| g.elem_order(x) == 2).count();
        assert_eq!(order2, 1, "Q8 has a unique involution");
        assert_eq!(g.exponent(), 4);
    }

    #[test]
    fn named_g1_g2() {
        let g1 = realize(&GroupSpec::Named("G1".into()), DEFAULT_CAP).unwrap();
        assert_eq!(g1.order(), 32);
        let g2 = realize(&GroupSpec::Named("G2".into()), DEFAULT_CAP).unwrap();
        assert_eq!(g2.order(), 32);
        assert_eq!(g1.exponent(), 8);
        assert_eq!(g2.exponent(), 8);
    }

    #[test]
    fn trivial_group() {
        let g = realize(&spec("abelian(1)"), DEFAULT_CAP).unwrap();
        assert_eq!(g.order(), 1);
        assert_eq!(g.exponent(), 1);
        assert_eq!(g.identity(), 0);
    }

    #[test]
    fn sym_alt_realization() {
        let s4 = realize(&GroupSpec::Named("Sym(4)".into()), DEFAULT_CAP).unwrap();
        assert_eq!(s4.order(), 24);
        let a5 = realize(&GroupSpec::Named("Alt(5)".into()), DEFAULT_CAP).unwrap();
        assert_eq!(a5.order(), 60);
        assert!(realize(&GroupSpec::Named("Alt(10)".into()), DEFAULT_CAP).is_err());
    }

    #[test]
    fn group_laws_sampled() {
        for s in [
            "metacyclic(5,2,5,4)",
            "metacyclic(4,2,2,3)",
            "G1",
            "G2",
            "abelian(8,2)",
            "product(C3, C4)",
            "sym(4)",
        ] {
            let g = realize(&spec(s), DEFAULT_CAP).unwrap();
            let n = g.order() as u32;
            let e = g.identity();
            for x in 0..n {
                assert_eq!(g.mul(x, e), x);
                assert_eq!(g.mul(e, x), x);
                assert_eq!(g.mul(x, g.inv(x)), e);
                assert_eq!(g.pow(x, g.elem_order(x) as i64), e);
            }
            // associativity on a deterministic sample of triples
            let step = (n / 7).max(1);
            for x in (0..n).step_by(step as usize) {
                for y in (0..n).step_by(step as usize) {
                    for z in (0..n).step_by(step as usize) {
                        assert_eq!(g.mul(g.mul(x, y), z), g.mul(x, g.mul(y, z)));
                    }
                }
            }
        }
    }

    #[test]
    fn product_order_exponent() {
        let q8 = realize(&spec("Q8"), DEFAULT_CAP).unwrap();
        let c2 = realize(&spec("C2"), DEFAULT_CAP).unwrap();
        let p = direct_product(&q8, &c2, DEFAULT_CAP).unwrap();
        assert_eq!(p.order(), 16);
        assert_eq!(p.exponent(), 4);
    }

    #[test]
    fn cap_enforced() {
        assert!(matches!(
            realize(&spec("C100"), 50),
            Err(GroupError::OrderCapExceeded { .. })
        ));
        assert!(matches!(
            realize(&spec("sym(5)"), 100),
            Err(GroupError::OrderCapExceeded { .. })
        ));
    }

    #[test]
    fn invalid_metacyclic_rejected() {
        // r^t != 1 mod n
        assert!(realize(&spec("metacyclic(5,2,5,2)"), DEFAULT_CAP).is_err());
        // l does not divide n
        assert!(realize(&spec("metacyclic(6,2,4,5)"), DEFAULT_CAP).is_err());
    }

    #[test]
    fn spec_display_round_trip() {
        for s in [
            "metacyclic(5,2,5,4)",
            "abelian(8,2)",
            "product(C3, C4)",
            "G1",
            "sym(5)",
            "alt(13)",
            "perm(4; (1 2), (1 2 3 4))",
            "abc(8,2; 3,4,0,1; 2)",
        ] {
            let sp = spec(s);
            let rendered = sp.to_string();
            assert_eq!(crate::cli::parse_spec(&rendered).unwrap(), sp, "{s} -> {rendered}");
        }
    }
}
