//! Subgroup computations on realized groups: closures, centralizers,
//! normalizers of cyclic subgroups, commutator subgroups and derived/lower
//! central series, Sylow subgroups, and index-two abelian subgroups.

use super::{section_group, FiniteGroup, GroupError};
use crate::arith;
use std::collections::BTreeSet;

/// A subgroup given by its sorted element indices in the parent group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subgroup {
    pub elements: Vec<u32>,
    pub generators: Vec<u32>,
}

impl Subgroup {
    pub fn order(&self) -> u64 {
        self.elements.len() as u64
    }

    pub fn contains(&self, x: u32) -> bool {
        self.elements.binary_search(&x).is_ok()
    }

    pub fn trivial(g: &FiniteGroup) -> Subgroup {
        Subgroup {
            elements: vec![g.identity()],
            generators: Vec::new(),
        }
    }

    /// Standalone realization of this subgroup.
    pub fn as_group(&self, parent: &FiniteGroup) -> FiniteGroup {
        let gens = if self.generators.is_empty() {
            vec![parent.identity()]
        } else {
            self.generators.clone()
        };
        section_group(parent, &self.elements, &gens)
    }

    pub fn is_abelian(&self, g: &FiniteGroup) -> bool {
        let gens = if self.generators.is_empty() {
            &self.elements
        } else {
            &self.generators
        };
        for (i, &a) in gens.iter().enumerate() {
            for &b in &gens[i + 1..] {
                if g.mul(a, b) != g.mul(b, a) {
                    return false;
                }
            }
        }
        true
    }
}

/// Smallest subgroup containing `gens`, by breadth-first closure.
pub fn subgroup_closure(g: &FiniteGroup, gens: &[u32]) -> Subgroup {
    let mut set = BTreeSet::new();
    set.insert(g.identity());
    let mut frontier: Vec<u32> = vec![g.identity()];
    while let Some(x) = frontier.pop() {
        for &gen in gens {
            let y = g.mul(x, gen);
            if set.insert(y) {
                frontier.push(y);
            }
        }
    }
    let mut gen_list: Vec<u32> = gens.to_vec();
    gen_list.sort_unstable();
    gen_list.dedup();
    Subgroup {
        elements: set.into_iter().collect(),
        generators: gen_list,
    }
}

/// Centralizer of the element `x`.
pub fn centralizer(g: &FiniteGroup, x: u32) -> Subgroup {
    let elems: Vec<u32> = (0..g.order() as u32)
        .filter(|&y| g.mul(y, x) == g.mul(x, y))
        .collect();
    Subgroup {
        generators: elems.clone(),
        elements: elems,
    }
}

/// Normalizer of the cyclic subgroup generated by `x`.
pub fn cyclic_normalizer(g: &FiniteGroup, x: u32) -> Subgroup {
    let cyc = subgroup_closure(g, &[x]);
    let elems: Vec<u32> = (0..g.order() as u32)
        .filter(|&y| cyc.contains(g.conj(x, y)))
        .collect();
    Subgroup {
        generators: elems.clone(),
        elements: elems,
    }
}

/// Normal closure in `g` of the subgroup generated by `seeds`, conjugating by
/// the generators of `within` (pass the group's own generators for a closure
/// normal in the whole group).
fn normal_closure(g: &FiniteGroup, seeds: &[u32], conjugators: &[u32]) -> Subgroup {
    let mut gens: Vec<u32> = seeds.iter().copied().filter(|&x| x != g.identity()).collect();
    gens.sort_unstable();
    gens.dedup();
    let mut sub = subgroup_closure(g, &gens);
    loop {
        // collect a bounded batch of conjugates escaping the subgroup; the
        // next closure pass absorbs them and the loop repeats until stable
        let mut new_gens = Vec::new();
        'scan: for &h in &sub.elements {
            for &c in conjugators {
                let y = g.conj(h, c);
                if !sub.contains(y) && !new_gens.contains(&y) {
                    new_gens.push(y);
                    if new_gens.len() >= 8 {
                        break 'scan;
                    }
                }
            }
        }
        if new_gens.is_empty() {
            return sub;
        }
        gens.extend(new_gens);
        gens.sort_unstable();
        gens.dedup();
        sub = subgroup_closure(g, &gens);
    }
}

/// Commutator subgroup `[G, G]`.
pub fn commutator_subgroup(g: &FiniteGroup) -> Subgroup {
    derived_of(g, g.generators())
}

fn derived_of(g: &FiniteGroup, gens: &[u32]) -> Subgroup {
    let mut seeds = Vec::new();
    for (i, &a) in gens.iter().enumerate() {
        for &b in gens[i..].iter() {
            let c = g.commutator(a, b);
            if c != g.identity() {
                seeds.push(c);
            }
        }
    }
    normal_closure(g, &seeds, gens)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolvabilityFlags {
    pub is_abelian: bool,
    pub is_nilpotent: bool,
    pub is_solvable: bool,
}

/// Abelian / nilpotent / solvable, via derived and lower central series.
pub fn solvability_flags(g: &FiniteGroup) -> SolvabilityFlags {
    let is_abelian = g.is_abelian();
    // derived series
    let mut is_solvable = false;
    let mut gens: Vec<u32> = g.generators().to_vec();
    let mut size = g.order();
    loop {
        let d = derived_of(g, &gens);
        if d.order() == 1 {
            is_solvable = true;
            break;
        }
        if d.order() == size {
            break; // perfect term, series stabilized above 1
        }
        size = d.order();
        gens = d.generators.clone();
        if gens.is_empty() {
            gens = d.elements.clone();
        }
    }
    // lower central series: next term [G, current]
    let mut is_nilpotent = false;
    let mut current: Vec<u32> = g.generators().to_vec();
    let mut size = g.order();
    loop {
        let mut seeds = Vec::new();
        for &a in g.generators() {
            for &x in &current {
                let c = g.commutator(a, x);
                if c != g.identity() {
                    seeds.push(c);
                }
            }
        }
        let next = normal_closure(g, &seeds, g.generators());
        if next.order() == 1 {
            is_nilpotent = true;
            break;
        }
        if next.order() == size {
            break;
        }
        size = next.order();
        current = next.generators.clone();
        if current.is_empty() {
            current = next.elements.clone();
        }
    }
    SolvabilityFlags {
        is_abelian,
        is_nilpotent,
        is_solvable,
    }
}

/// Center of the group.
pub fn center(g: &FiniteGroup) -> Subgroup {
    let gens = g.generators();
    let elems: Vec<u32> = (0..g.order() as u32)
        .filter(|&x| gens.iter().all(|&c| g.mul(x, c) == g.mul(c, x)))
        .collect();
    Subgroup {
        generators: elems.clone(),
        elements: elems,
    }
}

/// Sylow p-subgroup, grown from the trivial subgroup through p-elements of
/// the normalizer, re-realized as a standalone group.
pub fn sylow_subgroup(g: &FiniteGroup, p: u64) -> Result<FiniteGroup, GroupError> {
    Ok(sylow_subgroup_parts(g, p)?.as_group(g))
}

/// Sylow p-subgroup as an element set of the parent group.
pub fn sylow_subgroup_parts(g: &FiniteGroup, p: u64) -> Result<Subgroup, GroupError> {
    if g.order() % p != 0 || !arith::is_prime(p) {
        return Err(GroupError::PNotDividing { p, order: g.order() });
    }
    let mut target = 1u64;
    let mut n = g.order();
    while n % p == 0 {
        target *= p;
        n /= p;
    }
    let mut sub = Subgroup::trivial(g);
    while sub.order() < target {
        // normalizer of the current p-subgroup
        let norm: Vec<u32> = (0..g.order() as u32)
            .filter(|&y| sub.generators.iter().all(|&s| sub.contains(g.conj(s, y))))
            .collect();
        let mut grown = false;
        for &y in &norm {
            if sub.contains(y) {
                continue;
            }
            let o = g.elem_order(y);
            let mut m = o;
            while m % p == 0 {
                m /= p;
            }
            if m == o {
                continue; // y has no p-part
            }
            let u = g.pow(y, m as i64); // the p-part of y
            if !sub.contains(u) {
                let mut gens = sub.generators.clone();
                gens.push(u);
                sub = subgroup_closure(g, &gens);
                grown = true;
                break;
            }
        }
        assert!(grown, "p-subgroup growth stalled below the Sylow order");
    }
    Ok(sub)
}

/// All abelian subgroups of index 2. Index-two subgroups are pulled back from
/// hyperplanes of the elementary abelian quotient by squares and commutators.
pub fn index_two_abelian_subgroups(g: &FiniteGroup) -> Vec<Subgroup> {
    let n = g.order();
    if n % 2 != 0 {
        return Vec::new();
    }
    // K = <squares, commutators> as a normal subgroup; G/K is elementary abelian 2
    let mut seeds = Vec::new();
    for &a in g.generators() {
        seeds.push(g.mul(a, a));
        for &b in g.generators() {
            seeds.push(g.commutator(a, b));
        }
    }
    let k = normal_closure(g, &seeds, g.generators());
    let v = n / k.order();
    if v == 1 {
        return Vec::new();
    }
    let d = v.trailing_zeros() as usize;
    assert_eq!(1u64 << d, v, "quotient by squares must be a 2-group");
    assert!(d <= 20, "too many index-2 subgroups to enumerate");
    // label cosets of K and give each a coordinate in F_2^d
    let mut coset_of = vec![u32::MAX; n as usize];
    for (pos, &x) in k.elements.iter().enumerate() {
        let _ = pos;
        coset_of[x as usize] = 0;
    }
    let mut coset_reps = vec![g.identity()];
    for x in 0..n as u32 {
        if coset_of[x as usize] != u32::MAX {
            continue;
        }
        let id = coset_reps.len() as u32;
        coset_reps.push(x);
        for &kk in &k.elements {
            coset_of[g.mul(x, kk) as usize] = id;
        }
    }
    // greedy basis of the quotient, coordinates by multiplication
    let mut coords = vec![u64::MAX; coset_reps.len()];
    coords[0] = 0;
    let mut basis: Vec<u32> = Vec::new();
    for c in 1..coset_reps.len() {
        if coords[c] != u64::MAX {
            continue;
        }
        let b = coset_reps[c];
        let bit = 1u64 << basis.len();
        basis.push(b);
        // multiply every labeled coset by the new basis element
        let labeled: Vec<(usize, u64)> = coords
            .iter()
            .enumerate()
            .filter(|(_, &v)| v != u64::MAX)
            .map(|(i, &v)| (i, v))
            .collect();
        for (idx, val) in labeled {
            let y = g.mul(coset_reps[idx], b);
            let yc = coset_of[y as usize] as usize;
            if coords[yc] == u64::MAX {
                coords[yc] = val | bit;
            }
        }
    }
    assert_eq!(basis.len(), d);
    let coord_of = |x: u32| coords[coset_of[x as usize] as usize];
    // hyperplanes = kernels of nonzero functionals
    let mut out = Vec::new();
    for f in 1u64..(1 << d) {
        let gens: Vec<u32> = {
            let mut gs = k.generators.clone();
            // basis elements inside the hyperplane, plus products fixing it
            for (i, &b) in basis.iter().enumerate() {
                if f & (1 << i) == 0 {
                    gs.push(b);
                }
            }
            // one product of two out-of-hyperplane basis vectors spans the rest
            let outside: Vec<usize> = (0..d).filter(|&i| f & (1 << i) != 0).collect();
            for w in outside.windows(2) {
                gs.push(g.mul(basis[w[0]], basis[w[1]]));
            }
            gs
        };
        let h = Subgroup {
            elements: (0..n as u32)
                .filter(|&x| (coord_of(x) & f).count_ones() % 2 == 0)
                .collect(),
            generators: gens,
        };
        debug_assert_eq!(h.order() * 2, n);
        if h.is_abelian(g) {
            out.push(h);
        }
    }
    out
}

/// Whether the whole group is abelian (exposed for subgroup-free callers).
pub fn is_abelian(g: &FiniteGroup) -> bool {
    g.is_abelian()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{realize, DEFAULT_CAP};

    fn g(s: &str) -> FiniteGroup {
        realize(&crate::cli::parse_spec(s).unwrap(), DEFAULT_CAP).unwrap()
    }

    #[test]
    fn closure_examples() {
        let s4 = g("sym(4)");
        let whole = subgroup_closure(&s4, s4.generators());
        assert_eq!(whole.order(), 24);
        let triv = subgroup_closure(&s4, &[s4.identity()]);
        assert_eq!(triv.order(), 1);
        let q8 = g("Q8");
        let x = (0..8).find(|&x| q8.elem_order(x) == 4).unwrap();
        assert_eq!(subgroup_closure(&q8, &[x]).order(), 4);
    }

    #[test]
    fn centralizer_examples() {
        let s3 = g("sym(3)");
        let c3 = (0..6).find(|&x| s3.elem_order(x) == 3).unwrap();
        assert_eq!(centralizer(&s3, c3).order(), 3);
        assert_eq!(centralizer(&s3, s3.identity()).order(), 6);
        let q8 = g("Q8");
        let i4 = (0..8).find(|&x| q8.elem_order(x) == 4).unwrap();
        assert_eq!(centralizer(&q8, i4).order(), 4);
    }

    #[test]
    fn normalizer_examples() {
        let s3 = g("sym(3)");
        let c3 = (0..6).find(|&x| s3.elem_order(x) == 3).unwrap();
        assert_eq!(cyclic_normalizer(&s3, c3).order(), 6);
        assert_eq!(cyclic_normalizer(&s3, s3.identity()).order(), 6);
        let d10 = g("D10");
        let rot = (0..10).find(|&x| d10.elem_order(x) == 5).unwrap();
        assert_eq!(cyclic_normalizer(&d10, rot).order(), 10);
    }

    #[test]
    fn commutator_examples() {
        assert_eq!(commutator_subgroup(&g("abelian(6)")).order(), 1);
        assert_eq!(commutator_subgroup(&g("sym(3)")).order(), 3);
        assert_eq!(commutator_subgroup(&g("Q8")).order(), 2);
    }

    #[test]
    fn solvability_examples() {
        let f = solvability_flags(&g("abelian(6)"));
        assert_eq!((f.is_abelian, f.is_nilpotent, f.is_solvable), (true, true, true));
        let f = solvability_flags(&g("sym(4)"));
        assert_eq!((f.is_abelian, f.is_nilpotent, f.is_solvable), (false, false, true));
        let f = solvability_flags(&g("alt(5)"));
        assert_eq!((f.is_abelian, f.is_nilpotent, f.is_solvable), (false, false, false));
        let f = solvability_flags(&g("Q8"));
        assert_eq!((f.is_abelian, f.is_nilpotent, f.is_solvable), (false, true, true));
    }

    #[test]
    fn sylow_examples() {
        let s3 = g("sym(3)");
        assert_eq!(sylow_subgroup(&s3, 3).unwrap().order(), 3);
        let q8 = g("Q8");
        assert_eq!(sylow_subgroup(&q8, 2).unwrap().order(), 8);
        assert!(sylow_subgroup(&q8, 3).is_err());
        // exact p-part on a mixed order
        let c = g("product(sym(4), C3)");
        assert_eq!(sylow_subgroup(&c, 2).unwrap().order(), 8);
        assert_eq!(sylow_subgroup(&c, 3).unwrap().order(), 9);
    }

    #[test]
    fn index_two_abelian_examples() {
        let q8 = g("Q8");
        let subs = index_two_abelian_subgroups(&q8);
        assert_eq!(subs.len(), 3);
        assert!(subs.iter().all(|h| h.order() == 4));
        assert!(index_two_abelian_subgroups(&g("metacyclic(7,3,7,2)")).is_empty());
        let s3 = g("sym(3)");
        let subs = index_two_abelian_subgroups(&s3);
        assert_eq!(subs.len(), 1);
        assert_eq!(subs[0].order(), 3);
    }

    #[test]
    fn center_examples() {
        assert_eq!(center(&g("Q8")).order(), 2);
        assert_eq!(center(&g("sym(3)")).order(), 1);
        assert_eq!(center(&g("abelian(12)")).order(), 12);
    }

    #[test]
    fn section_group_round_trip() {
        let s4 = g("sym(4)");
        let syl = sylow_subgroup(&s4, 2).unwrap();
        assert_eq!(syl.order(), 8);
        assert_eq!(syl.exponent(), 4); // dihedral of order 8
        let e = syl.identity();
        for x in 0..8u32 {
            assert_eq!(syl.mul(x, syl.inv(x)), e);
        }
    }
}
