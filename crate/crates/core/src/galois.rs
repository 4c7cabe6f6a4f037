//! Galois action on conjugacy classes: stabilizer unit groups B_G(x),
//! rational and real class partitions, and exact identification of the
//! element field Q(x) as Q or a quadratic field.

use crate::arith;
use crate::group::ClassData;

#[derive(Debug, Clone, thiserror::Error, PartialEq, Eq)]
pub enum GaloisError {
    #[error("no quadratic field matches an index-2 unit subgroup mod {0}; inconsistent data")]
    NoQuadraticFound(u64),
}

/// A subgroup of the unit group (Z/m)^×, as sorted residues.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnitSubgroup {
    pub modulus: u64,
    pub residues: Vec<u64>,
}

impl UnitSubgroup {
    pub fn full(m: u64) -> UnitSubgroup {
        UnitSubgroup {
            modulus: m,
            residues: arith::units(m),
        }
    }

    pub fn order(&self) -> u64 {
        self.residues.len() as u64
    }

    /// Index in the full unit group mod m.
    pub fn index(&self) -> u64 {
        let phi = if self.modulus == 1 {
            1
        } else {
            arith::euler_phi(self.modulus)
        };
        phi / self.order()
    }

    pub fn contains(&self, j: u64) -> bool {
        self.residues.binary_search(&(j % self.modulus.max(1))).is_ok()
    }

    /// Intersection with another subgroup of the same modulus.
    pub fn intersect(&self, other: &UnitSubgroup) -> UnitSubgroup {
        assert_eq!(self.modulus, other.modulus);
        UnitSubgroup {
            modulus: self.modulus,
            residues: self
                .residues
                .iter()
                .copied()
                .filter(|&j| other.contains(j))
                .collect(),
        }
    }
}

/// The image of B_G(x) = N_G(<x>)/C_G(<x>) inside Aut(<x>) = (Z/|x|)^×,
/// read off the class table as the residues fixing the class of x.
pub fn stabilizer_units(t: &dyn ClassData, k: usize) -> UnitSubgroup {
    let o = t.rep_order(k);
    if o <= 2 {
        return UnitSubgroup::full(o);
    }
    let residues: Vec<u64> = arith::units(o)
        .into_iter()
        .filter(|&j| t.power_class(k, j as i64) == k)
        .collect();
    UnitSubgroup {
        modulus: o,
        residues,
    }
}

/// A partition of the class indices into blocks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GaloisPartition {
    pub block_of: Vec<usize>,
    pub block_count: usize,
}

fn partition_from_merges(n: usize, merges: impl Fn(usize) -> Vec<usize>) -> GaloisPartition {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut Vec<usize>, mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for k in 0..n {
        for m in merges(k) {
            let (a, b) = (find(&mut parent, k), find(&mut parent, m));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    let mut block_of = vec![0usize; n];
    let mut roots: Vec<usize> = Vec::new();
    for k in 0..n {
        let r = find(&mut parent, k);
        let id = match roots.iter().position(|&x| x == r) {
            Some(i) => i,
            None => {
                roots.push(r);
                roots.len() - 1
            }
        };
        block_of[k] = id;
    }
    GaloisPartition {
        block_of,
        block_count: roots.len(),
    }
}

/// Q-classes: k is merged with the class of every coprime power of its
/// representative. Powers run over generators of (Z/|x|)^×, which reach the
/// whole orbit.
pub fn q_class_partition(t: &dyn ClassData) -> GaloisPartition {
    partition_from_merges(t.class_count(), |k| {
        let o = t.rep_order(k);
        arith::unit_group_generators(o)
            .into_iter()
            .map(|j| t.power_class(k, j as i64))
            .collect()
    })
}

/// R-classes: k is merged with its inverse class.
pub fn r_class_partition(t: &dyn ClassData) -> GaloisPartition {
    partition_from_merges(t.class_count(), |k| vec![t.inverse_class(k)])
}

/// Q-classes computed with exponents coprime to the group order rather than
/// the element order; yields the same partition and exists as a cross-check.
pub fn q_class_partition_group_modulus(t: &dyn ClassData) -> GaloisPartition {
    let e = t.exponent();
    partition_from_merges(t.class_count(), |k| {
        arith::unit_group_generators(e)
            .into_iter()
            .map(|j| t.power_class(k, (j % t.rep_order(k).max(1)) as i64))
            .collect()
    })
}

/// Kronecker symbol (a | n), the completely multiplicative extension of the
/// Legendre symbol with the usual conventions at 2, -1 and 0.
pub fn kronecker_symbol(a: i64, n: i64) -> i32 {
    if n == 0 {
        return if a == 1 || a == -1 { 1 } else { 0 };
    }
    let mut a = a;
    let mut n = n;
    let mut result = 1i32;
    if n < 0 {
        n = -n;
        if a < 0 {
            result = -result;
        }
    }
    // factor out twos from n
    let mut twos = 0;
    while n % 2 == 0 {
        n /= 2;
        twos += 1;
    }
    if twos > 0 {
        if a % 2 == 0 {
            return 0;
        }
        // (a|2) = 1 if a ≡ ±1 mod 8, -1 if a ≡ ±3 mod 8
        let r = a.rem_euclid(8);
        let sym2 = if r == 1 || r == 7 { 1 } else { -1 };
        if twos % 2 == 1 {
            result *= sym2;
        }
    }
    // now n is odd and positive: Jacobi symbol via reciprocity
    a = a.rem_euclid(n);
    while a != 0 {
        while a % 2 == 0 {
            a /= 2;
            let r = n % 8;
            if r == 3 || r == 5 {
                result = -result;
            }
        }
        std::mem::swap(&mut a, &mut n);
        if a % 4 == 3 && n % 4 == 3 {
            result = -result;
        }
        a %= n;
    }
    if n == 1 {
        result
    } else {
        0
    }
}

/// Identification of a subfield of the m-th cyclotomic field.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldId {
    Rationals,
    /// Q(sqrt(d)) for squarefree d, negative for imaginary fields.
    Quadratic(i64),
    HigherDegree(u64),
}

impl FieldId {
    pub fn degree(&self) -> u64 {
        match self {
            FieldId::Rationals => 1,
            FieldId::Quadratic(_) => 2,
            FieldId::HigherDegree(d) => *d,
        }
    }
}

fn is_squarefree(n: u64) -> bool {
    arith::factor(n).iter().all(|&(_, m)| m == 1)
}

/// Fundamental discriminant of Q(sqrt(d)) for squarefree d.
fn fundamental_discriminant(d: i64) -> i64 {
    if d.rem_euclid(4) == 1 {
        d
    } else {
        4 * d
    }
}

/// Candidate squarefree d (both signs) whose quadratic field embeds in the
/// m-th cyclotomic field, i.e. whose conductor |disc| divides m.
fn quadratic_candidates(m: u64) -> Vec<i64> {
    let mut out = Vec::new();
    for dv in arith::divisors(m) {
        for sign in [1i64, -1] {
            let d = sign * dv as i64;
            if d == 1 || d == 0 || !is_squarefree(dv) {
                continue;
            }
            let cond = fundamental_discriminant(d).unsigned_abs();
            if m % cond == 0 && !out.contains(&d) {
                out.push(d);
            }
        }
    }
    out.sort_unstable();
    out
}

/// The fixed field of a unit subgroup h <= (Z/m)^× inside the m-th cyclotomic
/// field: rational for the full group, an explicit quadratic field for
/// index 2, and just the degree beyond that.
pub fn fixed_field_id(h: &UnitSubgroup) -> Result<FieldId, GaloisError> {
    let index = h.index();
    match index {
        1 => Ok(FieldId::Rationals),
        2 => {
            let m = h.modulus;
            let mut found = Vec::new();
            for d in quadratic_candidates(m) {
                let disc = fundamental_discriminant(d);
                if h.residues
                    .iter()
                    .all(|&j| kronecker_symbol(disc, j as i64) == 1)
                {
                    found.push(d);
                }
            }
            match found.as_slice() {
                [d] => {
                    // imaginary exactly when inversion is not fixed
                    debug_assert_eq!(*d < 0, !h.contains(m - 1));
                    Ok(FieldId::Quadratic(*d))
                }
                _ => Err(GaloisError::NoQuadraticFound(m)),
            }
        }
        d => Ok(FieldId::HigherDegree(d)),
    }
}

/// Q(x) for the representative of class k: the fixed field of its stabilizer
/// units in the |x|-th cyclotomic field.
pub fn element_field(t: &dyn ClassData, k: usize) -> Result<FieldId, GaloisError> {
    fixed_field_id(&stabilizer_units(t, k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{conjugacy_classes, realize, ClassData, DEFAULT_CAP};

    fn table(s: &str) -> crate::group::ClassTable {
        conjugacy_classes(&realize(&crate::cli::parse_spec(s).unwrap(), DEFAULT_CAP).unwrap())
    }

    #[test]
    fn stabilizer_examples() {
        let t = table("D10");
        let k = (0..t.class_count()).find(|&k| t.rep_order(k) == 5).unwrap();
        let b = stabilizer_units(&t, k);
        assert_eq!(b.modulus, 5);
        assert_eq!(b.residues, vec![1, 4]);
        // transpositions in Sym(3) are rational
        let t = table("sym(3)");
        let k = (0..t.class_count()).find(|&k| t.rep_order(k) == 2).unwrap();
        assert_eq!(stabilizer_units(&t, k).index(), 1);
        // identity class: trivial unit group mod 1
        assert_eq!(stabilizer_units(&t, t.identity_class()).modulus, 1);
    }

    #[test]
    fn partition_examples() {
        let t = table("alt(5)");
        assert_eq!(r_class_partition(&t).block_count, 5);
        assert_eq!(q_class_partition(&t).block_count, 4);
        let t = table("C12");
        assert_eq!(r_class_partition(&t).block_count, 7);
        assert_eq!(q_class_partition(&t).block_count, 6);
        let t = table("abelian(2,2)");
        assert_eq!(r_class_partition(&t).block_count, 4);
        assert_eq!(q_class_partition(&t).block_count, 4);
    }

    #[test]
    fn r_refines_q() {
        for s in ["sym(4)", "C12", "G1", "G2", "metacyclic(13,6,13,4)"] {
            let t = table(s);
            let q = q_class_partition(&t);
            let r = r_class_partition(&t);
            assert!(r.block_count >= q.block_count);
            // every R-block sits inside one Q-block
            let mut map = vec![usize::MAX; r.block_count];
            for k in 0..t.class_count() {
                let (rb, qb) = (r.block_of[k], q.block_of[k]);
                if map[rb] == usize::MAX {
                    map[rb] = qb;
                } else {
                    assert_eq!(map[rb], qb, "{s}");
                }
            }
            // and the group-order-modulus variant agrees
            let q2 = q_class_partition_group_modulus(&t);
            assert_eq!(q.block_count, q2.block_count, "{s}");
            assert_eq!(q.block_of, q2.block_of, "{s}");
        }
    }

    #[test]
    fn kronecker_values() {
        assert_eq!(kronecker_symbol(5, 4), 1);
        assert_eq!(kronecker_symbol(7, 1), 1);
        assert_eq!(kronecker_symbol(-11, 1), 1);
        // (-3|2): -3 ≡ 5 mod 8, so the symbol at 2 is -1; this matches the
        // quadratic-subfield oracle below (2 is inert in Q(sqrt(-3)))
        assert_eq!(kronecker_symbol(-3, 2), -1);
        assert_eq!(kronecker_symbol(5, 2), -1);
        assert_eq!(kronecker_symbol(-4, 3), -1);
        assert_eq!(kronecker_symbol(12, 5), -1);
        assert_eq!(kronecker_symbol(12, 11), 1);
        // complete multiplicativity spot checks
        for a in -20i64..20 {
            for (n1, n2) in [(3i64, 5i64), (5, 7), (2, 9), (4, 3)] {
                assert_eq!(
                    kronecker_symbol(a, n1 * n2),
                    kronecker_symbol(a, n1) * kronecker_symbol(a, n2),
                    "a={a} n={n1}*{n2}"
                );
            }
        }
    }

    /// Golden oracle: the quadratic subfields of Q(zeta_m) for small m are
    /// classical; fixed_field_id must reproduce them from index-2 subgroups.
    #[test]
    fn quadratic_subfield_oracle() {
        // (m, subgroup residues, expected d)
        let cases: &[(u64, &[u64], i64)] = &[
            (3, &[1], -3),
            (4, &[1], -1),
            (5, &[1, 4], 5),
            (7, &[1, 2, 4], -7),
            (8, &[1, 7], 2),
            (8, &[1, 3], -2),
            (8, &[1, 5], -1),
            (12, &[1, 11], 3),
            (12, &[1, 7], -3),
            (12, &[1, 5], -1),
            (24, &[1, 5, 19, 23], 6),
            (24, &[1, 7, 17, 23], 2),
            (24, &[1, 11, 13, 23], 3),
            (24, &[1, 5, 7, 11], -6),
            (24, &[1, 11, 17, 19], -2),
            (24, &[1, 7, 13, 19], -3),
            (24, &[1, 5, 13, 17], -1),
        ];
        for &(m, residues, d) in cases {
            let h = UnitSubgroup {
                modulus: m,
                residues: residues.to_vec(),
            };
            assert_eq!(
                fixed_field_id(&h).unwrap(),
                FieldId::Quadratic(d),
                "m={m} h={residues:?}"
            );
        }
    }

    #[test]
    fn fixed_field_examples() {
        assert_eq!(
            fixed_field_id(&UnitSubgroup::full(12)).unwrap(),
            FieldId::Rationals
        );
        let h = UnitSubgroup {
            modulus: 5,
            residues: vec![1],
        };
        assert_eq!(fixed_field_id(&h).unwrap(), FieldId::HigherDegree(4));
    }

    #[test]
    fn element_field_examples() {
        let t = table("D10");
        let k = (0..t.class_count()).find(|&k| t.rep_order(k) == 5).unwrap();
        assert_eq!(element_field(&t, k).unwrap(), FieldId::Quadratic(5));
        // all classes of a rational group
        let t = table("sym(4)");
        for k in 0..t.class_count() {
            assert_eq!(element_field(&t, k).unwrap(), FieldId::Rationals);
        }
        // order-7 classes in the cut group C7:C3
        let t = table("metacyclic(7,3,7,2)");
        let k = (0..t.class_count()).find(|&k| t.rep_order(k) == 7).unwrap();
        let b = stabilizer_units(&t, k);
        assert_eq!(b.residues, vec![1, 2, 4]);
        assert_eq!(element_field(&t, k).unwrap(), FieldId::Quadratic(-7));
    }

    #[test]
    fn field_degree_times_stabilizer_is_phi() {
        for s in ["G1", "G2", "D10", "Q16", "metacyclic(13,6,13,4)"] {
            let t = table(s);
            for k in 0..t.class_count() {
                let b = stabilizer_units(&t, k);
                let f = element_field(&t, k).unwrap();
                let o = t.rep_order(k);
                let phi = if o == 1 { 1 } else { arith::euler_phi(o) };
                assert_eq!(f.degree() * b.order(), phi, "{s} class {k}");
                // -1 fixed iff the class is real iff the field is real
                let real_class = t.inverse_class(k) == k;
                assert_eq!(b.contains(o.max(2) - 1) || o <= 2, real_class, "{s} {k}");
                match f {
                    FieldId::Quadratic(d) => assert_eq!(d > 0, real_class, "{s} {k}"),
                    _ => {}
                }
            }
        }
    }
}
