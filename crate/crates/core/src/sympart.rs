//! Class tables for symmetric and alternating groups by cycle-type
//! combinatorics, with no element enumeration.
//!
//! A class of Sym(n) is a partition of n. It meets Alt(n) when the permutation
//! is even, and splits into two Alt(n) classes exactly when all parts are odd
//! and pairwise distinct. Power maps on split classes are resolved by the
//! parity of an explicit conjugator, which is what the rationality machinery
//! consumes.

use crate::arith;
use crate::group::ClassData;
use std::collections::BTreeMap;

/// Largest degree served; partitions of 22 keep every survey instant.
pub const MAX_DEGREE: u64 = 22;

#[derive(Debug, Clone, thiserror::Error, PartialEq, Eq)]
pub enum SymError {
    #[error("degree {0} out of range 1..={MAX_DEGREE}")]
    NOutOfRange(u64),
    #[error("power {j} is not coprime to the element order {order}")]
    JNotCoprime { j: i64, order: u64 },
}

/// Partition of n with parts descending.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct CycleType(pub Vec<u64>);

impl CycleType {
    pub fn degree(&self) -> u64 {
        self.0.iter().sum()
    }

    pub fn element_order(&self) -> u64 {
        self.0.iter().fold(1, |acc, &p| arith::lcm(acc, p))
    }

    /// Parity of a permutation with this cycle type: even iff n minus the
    /// number of parts is even.
    pub fn is_even(&self) -> bool {
        (self.degree() - self.0.len() as u64) % 2 == 0
    }

    /// Size of the Sym(n) conjugacy class with this type.
    pub fn sym_class_size(&self) -> u128 {
        factorial(self.degree()) / self.centralizer_order()
    }

    /// Order of the Sym(n) centralizer: product of part^mult * mult!.
    pub fn centralizer_order(&self) -> u128 {
        let mut z: u128 = 1;
        let mut i = 0;
        while i < self.0.len() {
            let part = self.0[i];
            let mut mult = 0u64;
            while i < self.0.len() && self.0[i] == part {
                mult += 1;
                i += 1;
            }
            for _ in 0..mult {
                z *= part as u128;
            }
            z *= factorial(mult);
        }
        z
    }

    /// Cycle type of the j-th power: each k-cycle falls apart into gcd(j, k)
    /// cycles of length k / gcd(j, k).
    pub fn power_type(&self, j: u64) -> CycleType {
        let mut parts = Vec::new();
        for &k in &self.0 {
            let g = if j % k == 0 { k } else { arith::gcd(j % k, k) };
            for _ in 0..g {
                parts.push(k / g);
            }
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        CycleType(parts)
    }

    /// Canonical representative: cycles on consecutive points, largest part
    /// first, as an image table on 0..n.
    pub fn canonical_perm(&self) -> Vec<u8> {
        let n = self.degree() as usize;
        let mut p: Vec<u8> = (0..n as u8).collect();
        let mut base = 0usize;
        for &k in &self.0 {
            let k = k as usize;
            for i in 0..k {
                p[base + i] = (base + if i + 1 < k { i + 1 } else { 0 }) as u8;
            }
            base += k;
        }
        p
    }
}

fn factorial(n: u64) -> u128 {
    (1..=n as u128).product()
}

/// Whether the Sym(n) class of this type splits into two Alt(n) classes:
/// all parts odd and pairwise distinct (and n >= 2, so that odd permutations
/// exist at all).
pub fn an_class_splits(ty: &CycleType) -> bool {
    if ty.degree() < 2 || !ty.is_even() {
        return false;
    }
    ty.0.iter().all(|&p| p % 2 == 1) && ty.0.windows(2).all(|w| w[0] != w[1])
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum SplitTag {
    Whole,
    Plus,
    Minus,
}

/// A conjugacy class of Alt(n): a cycle type plus a split tag.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AltClassLabel {
    pub ty: CycleType,
    pub tag: SplitTag,
}

fn cycles_of(p: &[u8]) -> Vec<Vec<u8>> {
    let mut seen = vec![false; p.len()];
    let mut cycles = Vec::new();
    for start in 0..p.len() {
        if seen[start] {
            continue;
        }
        let mut cycle = Vec::new();
        let mut q = start;
        while !seen[q] {
            seen[q] = true;
            cycle.push(q as u8);
            q = p[q] as usize;
        }
        cycles.push(cycle);
    }
    cycles
}

fn perm_parity(p: &[u8]) -> bool {
    // true = even
    let cycles = cycles_of(p);
    (p.len() - cycles.len()) % 2 == 0
}

fn type_of(p: &[u8]) -> CycleType {
    let mut parts: Vec<u64> = cycles_of(p).iter().map(|c| c.len() as u64).collect();
    parts.sort_unstable_by(|a, b| b.cmp(a));
    CycleType(parts)
}

/// Split tag of an even permutation whose type splits: Plus iff it is
/// Alt-conjugate to the canonical representative of its type. Decided by the
/// parity of the conjugator aligning cycles in canonical order.
fn tag_of(p: &[u8]) -> SplitTag {
    let ty = type_of(p);
    debug_assert!(an_class_splits(&ty));
    let canon = ty.canonical_perm();
    // cycles sorted by length descending; parts are distinct so the matching
    // is unambiguous
    let mut target = cycles_of(p);
    target.retain(|c| !c.is_empty());
    target.sort_by(|a, b| b.len().cmp(&a.len()).then(a[0].cmp(&b[0])));
    let mut sigma = vec![0u8; p.len()];
    let canon_cycles = cycles_of(&canon);
    let mut canon_sorted = canon_cycles;
    canon_sorted.sort_by(|a, b| b.len().cmp(&a.len()).then(a[0].cmp(&b[0])));
    // rotate each target cycle to start at its minimal point
    for (cc, tc) in canon_sorted.iter().zip(target.iter()) {
        debug_assert_eq!(cc.len(), tc.len());
        let min_pos = tc
            .iter()
            .enumerate()
            .min_by_key(|(_, &v)| v)
            .map(|(i, _)| i)
            .unwrap();
        for (i, &a) in cc.iter().enumerate() {
            sigma[a as usize] = tc[(min_pos + i) % tc.len()];
        }
    }
    if perm_parity(&sigma) {
        SplitTag::Plus
    } else {
        SplitTag::Minus
    }
}

/// Power map on Alt(n) class labels for j coprime to the element order.
/// Non-split labels are fixed; split labels flip exactly when the canonical
/// conjugator carrying x to x^j is odd.
pub fn alt_power_class(label: &AltClassLabel, j: i64) -> Result<AltClassLabel, SymError> {
    let order = label.ty.element_order();
    let jm = j.rem_euclid(order as i64) as u64;
    if arith::gcd(jm, order) != 1 {
        return Err(SymError::JNotCoprime { j, order });
    }
    if label.tag == SplitTag::Whole {
        return Ok(label.clone());
    }
    // parity of the multiplication-by-j map on each cycle
    let mut flips = false;
    for &k in &label.ty.0 {
        let jk = jm % k;
        // count cycles of i -> i*j mod k on Z/k
        let mut seen = vec![false; k as usize];
        let mut cycles = 0u64;
        for s in 0..k {
            if seen[s as usize] {
                continue;
            }
            cycles += 1;
            let mut q = s;
            while !seen[q as usize] {
                seen[q as usize] = true;
                q = q * jk % k;
            }
        }
        if (k - cycles) % 2 == 1 {
            flips = !flips;
        }
    }
    let tag = match (label.tag, flips) {
        (SplitTag::Plus, false) | (SplitTag::Minus, true) => SplitTag::Plus,
        _ => SplitTag::Minus,
    };
    Ok(AltClassLabel {
        ty: label.ty.clone(),
        tag,
    })
}

/// Class table of Alt(n), n <= 22, driven entirely by cycle types.
pub struct AltClassTable {
    pub n: u64,
    labels: Vec<AltClassLabel>,
    sizes: Vec<u128>,
    orders: Vec<u64>,
    index: BTreeMap<(Vec<u64>, SplitTag), usize>,
    order: u128,
    exponent: u64,
    identity: usize,
}

impl AltClassTable {
    pub fn new(n: u64) -> Result<AltClassTable, SymError> {
        if n == 0 || n > MAX_DEGREE {
            return Err(SymError::NOutOfRange(n));
        }
        let mut labels = Vec::new();
        let mut sizes = Vec::new();
        let mut orders = Vec::new();
        for parts in arith::partitions(n) {
            let ty = CycleType(parts);
            if !ty.is_even() {
                continue;
            }
            let o = ty.element_order();
            if an_class_splits(&ty) {
                let half = ty.sym_class_size() / 2;
                for tag in [SplitTag::Plus, SplitTag::Minus] {
                    labels.push(AltClassLabel { ty: ty.clone(), tag });
                    sizes.push(half);
                    orders.push(o);
                }
            } else {
                labels.push(AltClassLabel {
                    ty: ty.clone(),
                    tag: SplitTag::Whole,
                });
                sizes.push(ty.sym_class_size());
                orders.push(o);
            }
        }
        let index: BTreeMap<(Vec<u64>, SplitTag), usize> = labels
            .iter()
            .enumerate()
            .map(|(i, l)| ((l.ty.0.clone(), l.tag), i))
            .collect();
        let order = if n >= 2 { factorial(n) / 2 } else { 1 };
        let exponent = orders.iter().fold(1, |acc, &o| arith::lcm(acc, o));
        let identity = index[&(vec![1u64; n as usize], SplitTag::Whole)];
        Ok(AltClassTable {
            n,
            labels,
            sizes,
            orders,
            index,
            order,
            exponent,
            identity,
        })
    }

    pub fn labels(&self) -> &[AltClassLabel] {
        &self.labels
    }
}

impl ClassData for AltClassTable {
    fn class_count(&self) -> usize {
        self.labels.len()
    }

    fn group_order(&self) -> u128 {
        self.order
    }

    fn exponent(&self) -> u64 {
        self.exponent
    }

    fn class_size(&self, k: usize) -> u128 {
        self.sizes[k]
    }

    fn rep_order(&self, k: usize) -> u64 {
        self.orders[k]
    }

    fn power_class(&self, k: usize, j: i64) -> usize {
        let label = &self.labels[k];
        let o = self.orders[k];
        let jm = j.rem_euclid(o as i64) as u64;
        if arith::gcd(jm.max(1), o) == 1 && jm != 0 {
            // coprime powers stay on the same type; resolved by parity
            let out = alt_power_class(label, jm as i64).expect("coprime power");
            return self.index[&(out.ty.0, out.tag)];
        }
        // general powers change the type; resolve the tag explicitly
        let rep = match label.tag {
            SplitTag::Minus => {
                let mut p = label.ty.canonical_perm();
                p = conj_by_swap01(&p);
                p
            }
            _ => label.ty.canonical_perm(),
        };
        let powered = perm_power(&rep, jm);
        let ty = type_of(&powered);
        if an_class_splits(&ty) {
            let tag = tag_of(&powered);
            self.index[&(ty.0, tag)]
        } else {
            self.index[&(ty.0, SplitTag::Whole)]
        }
    }

    fn identity_class(&self) -> usize {
        self.identity
    }
}

fn conj_by_swap01(p: &[u8]) -> Vec<u8> {
    // conjugate by the transposition (0 1); an odd permutation, so this turns
    // a Plus representative into a Minus one
    let swap = |x: u8| match x {
        0 => 1,
        1 => 0,
        v => v,
    };
    let mut q = vec![0u8; p.len()];
    for i in 0..p.len() {
        q[swap(i as u8) as usize] = swap(p[i]);
    }
    q
}

fn perm_power(p: &[u8], mut k: u64) -> Vec<u8> {
    let n = p.len();
    let mut acc: Vec<u8> = (0..n as u8).collect();
    let mut base = p.to_vec();
    while k > 0 {
        if k & 1 == 1 {
            let mut next = vec![0u8; n];
            for i in 0..n {
                next[i] = acc[base[i] as usize];
            }
            acc = next;
        }
        let mut sq = vec![0u8; n];
        for i in 0..n {
            sq[i] = base[base[i] as usize];
        }
        base = sq;
        k >>= 1;
    }
    acc
}

/// Class table of Sym(n), n <= 22. Every class is rational, so the power map
/// only moves between cycle types.
pub struct SymClassTable {
    pub n: u64,
    types: Vec<CycleType>,
    sizes: Vec<u128>,
    orders: Vec<u64>,
    index: BTreeMap<Vec<u64>, usize>,
    order: u128,
    exponent: u64,
    identity: usize,
}

impl SymClassTable {
    pub fn new(n: u64) -> Result<SymClassTable, SymError> {
        if n == 0 || n > MAX_DEGREE {
            return Err(SymError::NOutOfRange(n));
        }
        let types: Vec<CycleType> = arith::partitions(n).into_iter().map(CycleType).collect();
        let sizes: Vec<u128> = types.iter().map(|t| t.sym_class_size()).collect();
        let orders: Vec<u64> = types.iter().map(|t| t.element_order()).collect();
        let index: BTreeMap<Vec<u64>, usize> = types
            .iter()
            .enumerate()
            .map(|(i, t)| (t.0.clone(), i))
            .collect();
        let exponent = orders.iter().fold(1, |acc, &o| arith::lcm(acc, o));
        let identity = index[&vec![1u64; n as usize]];
        Ok(SymClassTable {
            n,
            order: factorial(n),
            types,
            sizes,
            orders,
            index,
            exponent,
            identity,
        })
    }
}

impl ClassData for SymClassTable {
    fn class_count(&self) -> usize {
        self.types.len()
    }

    fn group_order(&self) -> u128 {
        self.order
    }

    fn exponent(&self) -> u64 {
        self.exponent
    }

    fn class_size(&self, k: usize) -> u128 {
        self.sizes[k]
    }

    fn rep_order(&self, k: usize) -> u64 {
        self.orders[k]
    }

    fn power_class(&self, k: usize, j: i64) -> usize {
        let o = self.orders[k];
        let jm = j.rem_euclid(o as i64) as u64;
        let ty = self.types[k].power_type(if jm == 0 { o } else { jm });
        self.index[&ty.0]
    }

    fn identity_class(&self) -> usize {
        self.identity
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn split_criterion() {
        assert!(an_class_splits(&CycleType(vec![5])));
        assert!(!an_class_splits(&CycleType(vec![3, 1, 1])));
        assert!(!an_class_splits(&CycleType(vec![2, 2, 1])));
        assert!(an_class_splits(&CycleType(vec![5, 3, 1])));
        assert!(!an_class_splits(&CycleType(vec![3, 3, 1])));
    }

    #[test]
    fn alt5_power_classes() {
        let five = AltClassLabel {
            ty: CycleType(vec![5]),
            tag: SplitTag::Plus,
        };
        // reversing a 5-cycle is even: j = 4 fixes the class
        assert_eq!(alt_power_class(&five, 4).unwrap().tag, SplitTag::Plus);
        // squaring swaps the two classes
        assert_eq!(alt_power_class(&five, 2).unwrap().tag, SplitTag::Minus);
        let nonsplit = AltClassLabel {
            ty: CycleType(vec![3, 1, 1]),
            tag: SplitTag::Whole,
        };
        assert_eq!(alt_power_class(&nonsplit, 2).unwrap().tag, SplitTag::Whole);
        assert!(alt_power_class(&five, 5).is_err());
    }

    #[test]
    fn alt_class_counts() {
        assert_eq!(AltClassTable::new(5).unwrap().class_count(), 5);
        assert_eq!(AltClassTable::new(4).unwrap().class_count(), 4);
        assert_eq!(AltClassTable::new(1).unwrap().class_count(), 1);
        assert!(AltClassTable::new(23).is_err());
        assert!(AltClassTable::new(0).is_err());
    }

    #[test]
    fn alt_sizes_sum() {
        for n in 2..=12u64 {
            let t = AltClassTable::new(n).unwrap();
            let total: u128 = (0..t.class_count()).map(|k| t.class_size(k)).sum();
            assert_eq!(total, t.group_order(), "n = {n}");
        }
    }

    #[test]
    fn power_map_composition() {
        // power maps compose multiplicatively on coprime exponents
        for n in [5u64, 7, 9, 11] {
            let t = AltClassTable::new(n).unwrap();
            for k in 0..t.class_count() {
                let o = t.rep_order(k);
                assert_eq!(t.power_class(t.power_class(k, -1), -1), k);
                for j1 in 1..o.min(12) {
                    if arith::gcd(j1, o) != 1 {
                        continue;
                    }
                    for j2 in 1..o.min(12) {
                        if arith::gcd(j2, o) != 1 {
                            continue;
                        }
                        let a = t.power_class(t.power_class(k, j1 as i64), j2 as i64);
                        let b = t.power_class(k, (j1 * j2 % o) as i64);
                        assert_eq!(a, b);
                    }
                }
            }
        }
    }

    #[test]
    fn sym_tables_are_rational() {
        let t = SymClassTable::new(10).unwrap();
        for k in 0..t.class_count() {
            let o = t.rep_order(k);
            for j in 1..o {
                if arith::gcd(j, o) == 1 {
                    assert_eq!(t.power_class(k, j as i64), k);
                }
            }
        }
        assert_eq!(t.group_order(), 3628800);
    }

    #[test]
    fn agrees_with_brute_force_small_n() {
        // class counts, size multisets and the derived rationality data
        // against element enumeration
        for n in 3..=8u64 {
            let t = AltClassTable::new(n).unwrap();
            let g = crate::group::realize(
                &crate::group::GroupSpec::Named(format!("Alt({n})")),
                crate::group::DEFAULT_CAP,
            )
            .unwrap();
            let bt = crate::group::conjugacy_classes(&g);
            assert_eq!(t.class_count(), crate::group::ClassData::class_count(&bt), "n={n}");
            let mut a: Vec<u128> = (0..t.class_count()).map(|k| t.class_size(k)).collect();
            let mut b: Vec<u128> = (0..t.class_count())
                .map(|k| crate::group::ClassData::class_size(&bt, k))
                .collect();
            a.sort_unstable();
            b.sort_unstable();
            assert_eq!(a, b, "n={n}");
            // everything the split-parity resolution feeds must agree
            assert_eq!(
                crate::surveys::class_side_flags(&t),
                crate::surveys::class_side_flags(&bt),
                "n={n}"
            );
            assert_eq!(
                crate::classify::rank_rho(&t),
                crate::classify::rank_rho(&bt),
                "n={n}"
            );
            let ua = crate::classify::usr_values(&t);
            let ub = crate::classify::usr_values(&bt);
            assert_eq!((ua.modulus, ua.residues), (ub.modulus, ub.residues), "n={n}");
        }
    }
}
