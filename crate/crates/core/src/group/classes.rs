//! Conjugacy classes and the class-level interface shared by concrete groups
//! and cycle-type class tables.

use super::FiniteGroup;

/// Class-level data every rationality classifier consumes: class sizes,
/// representative orders and the power-class map `(k, j) -> class of rep_k^j`.
///
/// Implemented by [`ClassTable`] for realized groups and by the cycle-type
/// tables in [`crate::sympart`] for large symmetric and alternating groups.
pub trait ClassData {
    fn class_count(&self) -> usize;
    fn group_order(&self) -> u128;
    fn exponent(&self) -> u64;
    fn class_size(&self, k: usize) -> u128;
    fn rep_order(&self, k: usize) -> u64;
    /// Class of `rep_k^j`; depends only on `j mod rep_order(k)`.
    fn power_class(&self, k: usize, j: i64) -> usize;
    fn identity_class(&self) -> usize;
    fn inverse_class(&self, k: usize) -> usize {
        self.power_class(k, -1)
    }
}

/// Conjugacy classes of a realized group. Representatives are the minimal
/// element index of each class; classes are sorted by representative.
pub struct ClassTable {
    group: FiniteGroup,
    reps: Vec<u32>,
    sizes: Vec<u64>,
    class_of: Vec<u32>,
    rep_orders: Vec<u64>,
    inverse: Vec<usize>,
}

impl ClassTable {
    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn representatives(&self) -> &[u32] {
        &self.reps
    }

    pub fn sizes(&self) -> &[u64] {
        &self.sizes
    }

    pub fn class_of(&self, x: u32) -> usize {
        self.class_of[x as usize] as usize
    }

    /// Elements of class `k`, ascending.
    pub fn class_elements(&self, k: usize) -> Vec<u32> {
        (0..self.group.order() as u32)
            .filter(|&x| self.class_of[x as usize] as usize == k)
            .collect()
    }
}

/// Orbits of the conjugation action, computed by breadth-first closure under
/// conjugation by the group generators.
pub fn conjugacy_classes(g: &FiniteGroup) -> ClassTable {
    let n = g.order() as usize;
    let mut class_of = vec![u32::MAX; n];
    let mut orbits: Vec<(u32, u64)> = Vec::new(); // (min element, size)
    let gens = g.generators().to_vec();
    let mut stack = Vec::new();
    for start in 0..n as u32 {
        if class_of[start as usize] != u32::MAX {
            continue;
        }
        let id = orbits.len() as u32;
        class_of[start as usize] = id;
        let mut size = 1u64;
        stack.push(start);
        while let Some(x) = stack.pop() {
            for &gen in &gens {
                let y = g.conj(x, gen);
                if class_of[y as usize] == u32::MAX {
                    class_of[y as usize] = id;
                    size += 1;
                    stack.push(y);
                }
            }
        }
        orbits.push((start, size));
    }
    // orbits are discovered in order of their minimal element, so they are
    // already sorted by representative
    let reps: Vec<u32> = orbits.iter().map(|&(r, _)| r).collect();
    let sizes: Vec<u64> = orbits.iter().map(|&(_, s)| s).collect();
    let rep_orders: Vec<u64> = reps.iter().map(|&r| g.elem_order(r)).collect();
    let inverse: Vec<usize> = reps
        .iter()
        .map(|&r| class_of[g.inv(r) as usize] as usize)
        .collect();
    ClassTable {
        group: g.clone(),
        reps,
        sizes,
        class_of,
        rep_orders,
        inverse,
    }
}

impl ClassData for ClassTable {
    fn class_count(&self) -> usize {
        self.reps.len()
    }

    fn group_order(&self) -> u128 {
        self.group.order() as u128
    }

    fn exponent(&self) -> u64 {
        self.group.exponent()
    }

    fn class_size(&self, k: usize) -> u128 {
        self.sizes[k] as u128
    }

    fn rep_order(&self, k: usize) -> u64 {
        self.rep_orders[k]
    }

    fn power_class(&self, k: usize, j: i64) -> usize {
        let x = self.group.pow(self.reps[k], j);
        self.class_of[x as usize] as usize
    }

    fn identity_class(&self) -> usize {
        self.class_of[self.group.identity() as usize] as usize
    }

    fn inverse_class(&self, k: usize) -> usize {
        self.inverse[k]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{realize, GroupSpec, DEFAULT_CAP};

    fn table(s: &str) -> ClassTable {
        conjugacy_classes(&realize(&crate::cli::parse_spec(s).unwrap(), DEFAULT_CAP).unwrap())
    }

    #[test]
    fn sym3_classes() {
        let t = table("sym(3)");
        let mut sizes = t.sizes().to_vec();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 2, 3]);
    }

    #[test]
    fn d10_classes() {
        let t = table("metacyclic(5,2,5,4)");
        let mut sizes = t.sizes().to_vec();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 2, 2, 5]);
    }

    #[test]
    fn abelian_singletons() {
        let t = table("abelian(12)");
        assert_eq!(t.class_count(), 12);
        assert!(t.sizes().iter().all(|&s| s == 1));
    }

    #[test]
    fn class_table_invariants() {
        for s in ["sym(4)", "Q8", "G1", "metacyclic(7,3,7,2)", "product(C3,C4)"] {
            let t = table(s);
            let g = t.group().clone();
            let order: u64 = t.sizes().iter().sum();
            assert_eq!(order, g.order());
            assert!(t.sizes().iter().all(|&s| g.order() % s == 0));
            for k in 0..t.class_count() {
                assert_eq!(t.class_of(t.representatives()[k]), k);
                assert_eq!(t.power_class(k, 1), k);
                assert_eq!(t.power_class(k, -1), t.inverse_class(k));
                assert_eq!(t.inverse_class(t.inverse_class(k)), k);
                let o = t.rep_order(k) as i64;
                assert_eq!(t.power_class(k, 3), t.power_class(k, 3 + o));
            }
            assert_eq!(g.exponent() % t.rep_order(0), 0);
        }
    }

    #[test]
    fn direct_product_class_count() {
        let a = table("sym(3)");
        let b = table("Q8");
        let ab = table("product(sym(3), Q8)");
        assert_eq!(ab.class_count(), a.class_count() * b.class_count());
    }

    #[test]
    fn sylow_of_sym4() {
        let g = realize(&GroupSpec::Named("Sym(4)".into()), DEFAULT_CAP).unwrap();
        let p2 = crate::group::sylow_subgroup(&g, 2).unwrap();
        assert_eq!(p2.order(), 8);
        let p3 = crate::group::sylow_subgroup(&g, 3).unwrap();
        assert_eq!(p3.order(), 3);
    }
}
