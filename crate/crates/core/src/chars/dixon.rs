//! Character tables by the Dixon-Schneider method: simultaneous eigenvectors
//! of the class-sum matrices over a prime field p = 1 (mod exponent), lifted
//! to exact cyclotomic values through root-of-unity multiplicities.
//!
//! Groups realized as direct sums of cyclic factors take a duality shortcut;
//! the general eigenspace path remains available for cross-checking.

use super::cyclotomic::CycCtx;
use super::fp::{charpoly, kernel, poly_roots, rref, Fp, Mat};
use super::{CharError, CharacterTable, Cyclotomic};
use crate::arith;
use crate::group::{ClassData, ClassTable};

#[derive(Debug, Clone, Default)]
pub struct DixonOptions {
    /// Working prime override; must be a prime = 1 (mod exponent) exceeding
    /// twice the square root of the group order.
    pub prime_override: Option<u64>,
}

/// Class multiplication constants a[i][j][k] = #{(u,v) in C_i x C_j : uv = rep_k}.
pub fn class_constants(t: &ClassTable) -> Vec<Vec<Vec<u64>>> {
    let c = t.class_count();
    let elems = class_element_lists(t);
    let mut out = vec![vec![vec![0u64; c]; c]; c];
    for i in 0..c {
        let m = class_matrix(t, &elems, i);
        for k in 0..c {
            for j in 0..c {
                out[i][j][k] = m[k][j];
            }
        }
    }
    out
}

fn class_element_lists(t: &ClassTable) -> Vec<Vec<u32>> {
    let g = t.group();
    let mut lists = vec![Vec::new(); t.class_count()];
    for x in 0..g.order() as u32 {
        lists[t.class_of(x)].push(x);
    }
    lists
}

/// Matrix of multiplication by the i-th class sum on the basis of class sums:
/// entry [k][j] counts pairs (u, v) in C_i x C_j with uv = rep_k.
fn class_matrix(t: &ClassTable, elems: &[Vec<u32>], i: usize) -> Vec<Vec<u64>> {
    let g = t.group();
    let c = t.class_count();
    let mut m = vec![vec![0u64; c]; c];
    for (k, &gk) in t.representatives().iter().enumerate() {
        for &u in &elems[i] {
            let v = g.mul(g.inv(u), gk);
            m[k][t.class_of(v)] += 1;
        }
    }
    m
}

/// Exact character table of the group behind the class table.
pub fn dixon_table(t: &ClassTable, opts: &DixonOptions) -> Result<CharacterTable, CharError> {
    let g = t.group();
    if let Some(coords) = g.abelian_coordinates() {
        return abelian_dual_table(t, &coords);
    }
    dixon_table_general(t, opts)
}

/// Characters of a direct sum of cyclic groups, by duality: rows are indexed
/// by the same coordinate space, with values determined by the pairing.
fn abelian_dual_table(t: &ClassTable, coords: &[u64]) -> Result<CharacterTable, CharError> {
    let g = t.group();
    let e = g.exponent();
    if e > 10_000 {
        return Err(CharError::ExponentTooLarge(e));
    }
    let ctx = CycCtx::new(e);
    let c = t.class_count();
    debug_assert_eq!(c as u64, g.order());
    let mut degrees = vec![1u64; c];
    let mut values = Vec::with_capacity(c);
    for w_idx in 0..c as u64 {
        let w = decode(w_idx, coords);
        let mut row = Vec::with_capacity(c);
        for k in 0..c {
            let v = decode(t.representatives()[k] as u64, coords);
            let mut exp_sum = 0u64;
            for ((wi, vi), &d) in w.iter().zip(&v).zip(coords) {
                exp_sum = (exp_sum + (wi * vi) % d * (e / d)) % e;
            }
            row.push(ctx.monomial(exp_sum, 1));
        }
        values.push(row);
    }
    sort_rows(&mut degrees, &mut values);
    Ok(CharacterTable::new(e, degrees, values, ctx))
}

fn decode(mut idx: u64, coords: &[u64]) -> Vec<u64> {
    let mut v = vec![0u64; coords.len()];
    for (i, &d) in coords.iter().enumerate().rev() {
        v[i] = idx % d;
        idx /= d;
    }
    v
}

fn sort_rows(degrees: &mut Vec<u64>, values: &mut Vec<Vec<Cyclotomic>>) {
    let mut idx: Vec<usize> = (0..degrees.len()).collect();
    idx.sort_by(|&a, &b| {
        degrees[a]
            .cmp(&degrees[b])
            .then_with(|| values[a].cmp(&values[b]))
    });
    *degrees = idx.iter().map(|&i| degrees[i]).collect();
    *values = idx.iter().map(|&i| std::mem::take(&mut values[i])).collect();
}

fn isqrt(n: u64) -> u64 {
    let mut r = (n as f64).sqrt() as u64;
    while r * r > n {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    r
}

fn choose_prime(e: u64, order: u64, override_p: Option<u64>) -> Result<u64, CharError> {
    let s = isqrt(order);
    let bound = 2 * if s * s == order { s } else { s + 1 };
    if let Some(p) = override_p {
        if !arith::is_prime(p) {
            return Err(CharError::BadPrimeOverride {
                p,
                reason: "not prime".into(),
            });
        }
        if (p - 1) % e != 0 {
            return Err(CharError::BadPrimeOverride {
                p,
                reason: format!("p - 1 not divisible by the exponent {e}"),
            });
        }
        if p <= bound {
            return Err(CharError::BadPrimeOverride {
                p,
                reason: format!("p must exceed 2*ceil(sqrt(|G|)) = {bound}"),
            });
        }
        return Ok(p);
    }
    let mut p = e + 1;
    while p <= 1 << 20 {
        if p > bound && arith::is_prime(p) {
            return Ok(p);
        }
        p += e;
    }
    Err(CharError::NoSuitablePrime { e, min: bound })
}

/// The eigenspace-splitting path, usable on any group within the caps.
pub fn dixon_table_general(t: &ClassTable, opts: &DixonOptions) -> Result<CharacterTable, CharError> {
    let g = t.group();
    let order = g.order();
    let e = g.exponent();
    if e > 10_000 {
        return Err(CharError::ExponentTooLarge(e));
    }
    let c = t.class_count();
    if c > 1024 {
        return Err(CharError::TooManyClasses(c));
    }
    let ctx = CycCtx::new(e);
    if order == 1 {
        return Ok(CharacterTable::new(1, vec![1], vec![vec![ctx.integer(1)]], ctx));
    }
    let p = choose_prime(e, order, opts.prime_override)?;
    let fp = Fp { p };
    let elems = class_element_lists(t);
    let ident = t.identity_class();

    // split the class algebra into one-dimensional common eigenspaces,
    // consuming class matrices in ascending size order
    let mut split_order: Vec<usize> = (0..c).filter(|&i| i != ident).collect();
    split_order.sort_by_key(|&i| (t.sizes()[i], i));
    let mut subspaces: Vec<(Vec<Vec<u64>>, Vec<usize>)> = vec![{
        let rows: Vec<Vec<u64>> = (0..c)
            .map(|r| (0..c).map(|j| u64::from(r == j)).collect())
            .collect();
        (rows, (0..c).collect())
    }];
    for &i in &split_order {
        if subspaces.iter().all(|(rows, _)| rows.len() == 1) {
            break;
        }
        let m = class_matrix(t, &elems, i);
        let mut next = Vec::with_capacity(subspaces.len());
        for (rows, pivots) in subspaces.into_iter() {
            let d = rows.len();
            if d == 1 {
                next.push((rows, pivots));
                continue;
            }
            // restriction to the subspace: images in basis coordinates
            let mut a = vec![vec![0u64; d]; d];
            for (r, b) in rows.iter().enumerate() {
                // u = b * M^T, i.e. u[k] = sum_j b[j] * m[k][j]
                for (s, &pc) in pivots.iter().enumerate() {
                    let mut acc = 0u64;
                    for j in 0..c {
                        if b[j] != 0 && m[pc][j] != 0 {
                            acc = fp.add(acc, fp.mul(b[j], m[pc][j] % p));
                        }
                    }
                    a[r][s] = acc;
                }
            }
            let amat = Mat { rows: a.clone() };
            let cp = charpoly(fp, &amat);
            let eigs = poly_roots(fp, &cp);
            if eigs.len() <= 1 {
                next.push((rows, pivots));
                continue;
            }
            for lambda in eigs {
                // kernel of (A^T - lambda I): coordinate vectors v with v.A = lambda v
                let mut at = vec![vec![0u64; d]; d];
                for r in 0..d {
                    for s in 0..d {
                        at[r][s] = a[s][r];
                    }
                }
                for r in 0..d {
                    at[r][r] = fp.sub(at[r][r], lambda);
                }
                let ker = kernel(fp, &Mat { rows: at });
                if ker.is_empty() {
                    continue;
                }
                let mut lifted: Vec<Vec<u64>> = ker
                    .iter()
                    .map(|v| {
                        let mut row = vec![0u64; c];
                        for (r, &coef) in v.iter().enumerate() {
                            if coef != 0 {
                                for j in 0..c {
                                    row[j] = fp.add(row[j], fp.mul(coef, rows[r][j]));
                                }
                            }
                        }
                        row
                    })
                    .collect();
                let mut mat = Mat {
                    rows: std::mem::take(&mut lifted),
                };
                let piv = rref(fp, &mut mat);
                next.push((mat.rows, piv));
            }
        }
        subspaces = next;
    }
    if subspaces.len() != c || subspaces.iter().any(|(rows, _)| rows.len() != 1) {
        return Err(CharError::SplitFailure(format!(
            "{} eigenspaces for {} classes",
            subspaces.len(),
            c
        )));
    }
    let eigen: Vec<(Vec<u64>, usize)> = subspaces
        .into_iter()
        .map(|(rows, pivots)| (rows.into_iter().next().unwrap(), pivots[0]))
        .collect();

    // central character values: omega[chi][i] from one matrix row per class
    let mut omega = vec![vec![0u64; c]; c];
    for i in 0..c {
        let m = class_matrix(t, &elems, i);
        for (chi, (v, pivot)) in eigen.iter().enumerate() {
            let mut acc = 0u64;
            for j in 0..c {
                if v[j] != 0 && m[*pivot][j] != 0 {
                    acc = fp.add(acc, fp.mul(v[j], m[*pivot][j] % p));
                }
            }
            omega[chi][i] = acc;
        }
        // eigenvector consistency on a sample of coordinates
        for (chi, (v, _)) in eigen.iter().enumerate() {
            for k in (0..c).take(4) {
                let mut acc = 0u64;
                for j in 0..c {
                    if v[j] != 0 && m[k][j] != 0 {
                        acc = fp.add(acc, fp.mul(v[j], m[k][j] % p));
                    }
                }
                if acc != fp.mul(omega[chi][i], v[k]) {
                    return Err(CharError::SplitFailure(
                        "subspace is not a common eigenvector".into(),
                    ));
                }
            }
        }
    }

    // degrees from self-orthogonality of central characters
    let size_inv: Vec<u64> = (0..c).map(|k| fp.inv(t.sizes()[k] % p)).collect();
    let order_mod = order % p;
    let mut degrees = vec![0u64; c];
    let mut chv = vec![vec![0u64; c]; c];
    for chi in 0..c {
        let mut s = 0u64;
        for i in 0..c {
            let term = fp.mul(fp.mul(omega[chi][i], omega[chi][t.inverse_class(i)]), size_inv[i]);
            s = fp.add(s, term);
        }
        if s == 0 {
            return Err(CharError::SplitFailure("degenerate central character".into()));
        }
        let d2 = fp.mul(order_mod, fp.inv(s));
        let Some(d) = fp.sqrt(d2) else {
            return Err(CharError::SplitFailure("degree squared is not a square".into()));
        };
        if d == 0 || d * d > order {
            return Err(CharError::SplitFailure("degree lift out of range".into()));
        }
        degrees[chi] = d;
        for k in 0..c {
            chv[chi][k] = fp.mul(fp.mul(omega[chi][k], d % p), size_inv[k]);
        }
        if chv[chi][ident] != d % p {
            return Err(CharError::SplitFailure("identity value mismatch".into()));
        }
    }
    let degree_sq: u64 = degrees.iter().map(|d| d * d).sum();
    if degree_sq != order {
        return Err(CharError::SplitFailure(format!(
            "degree squares sum to {degree_sq}, expected {order}"
        )));
    }

    // modular row orthogonality before lifting
    for a in 0..c {
        for b in 0..c {
            let mut acc = 0u64;
            for k in 0..c {
                let term = fp.mul(
                    fp.mul(t.sizes()[k] % p, chv[a][k]),
                    chv[b][t.inverse_class(k)],
                );
                acc = fp.add(acc, term);
            }
            let expected = if a == b { order_mod } else { 0 };
            if acc != expected {
                return Err(CharError::SplitFailure("modular orthogonality failed".into()));
            }
        }
    }

    // lift to exact cyclotomic values via multiplicities of root powers
    let zgen = fp.generator();
    let ze = fp.pow(zgen, (p - 1) / e);
    let mut values: Vec<Vec<Cyclotomic>> = Vec::with_capacity(c);
    // power-class rows per class, reused across characters
    let power_rows: Vec<Vec<usize>> = (0..c)
        .map(|k| {
            let o = t.rep_order(k);
            (0..o).map(|j| t.power_class(k, j as i64)).collect()
        })
        .collect();
    for chi in 0..c {
        let mut row = Vec::with_capacity(c);
        for k in 0..c {
            let o = t.rep_order(k);
            let root = fp.pow(ze, e / o);
            let mut pw = Vec::with_capacity(o as usize);
            let mut acc = 1u64;
            for _ in 0..o {
                pw.push(acc);
                acc = fp.mul(acc, root);
            }
            let o_inv = fp.inv(o % p);
            let mut value = Cyclotomic {
                conductor: e,
                coeffs: vec![0; if e == 1 { 1 } else { arith::euler_phi(e) as usize }],
            };
            let mut total = 0u64;
            for s in 0..o {
                let mut sum = 0u64;
                for tt in 0..o {
                    let idx = ((o - s) * tt % o) as usize;
                    sum = fp.add(sum, fp.mul(chv[chi][power_rows[k][tt as usize]], pw[idx]));
                }
                let cs = fp.mul(sum, o_inv);
                if cs > degrees[chi] {
                    return Err(CharError::SplitFailure(format!(
                        "multiplicity {cs} above degree {}",
                        degrees[chi]
                    )));
                }
                total += cs;
                if cs > 0 {
                    ctx_add(&ctx, &mut value, s * (e / o), cs as i64);
                }
            }
            if total != degrees[chi] {
                return Err(CharError::SplitFailure(
                    "eigenvalue multiplicities do not sum to the degree".into(),
                ));
            }
            row.push(value);
        }
        values.push(row);
    }
    sort_rows(&mut degrees, &mut values);
    Ok(CharacterTable::new(e, degrees, values, ctx))
}

fn ctx_add(ctx: &CycCtx, value: &mut Cyclotomic, u: u64, coeff: i64) {
    ctx.add_monomial(value, u, coeff);
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{conjugacy_classes, realize, DEFAULT_CAP};

    fn classes(s: &str) -> ClassTable {
        conjugacy_classes(&realize(&crate::cli::parse_spec(s).unwrap(), DEFAULT_CAP).unwrap())
    }

    #[test]
    fn class_constants_examples() {
        let t = classes("sym(3)");
        let a = class_constants(&t);
        let ident = t.identity_class();
        // identity row: the only pair (e, v) with v = rep_k lies in C_k
        for j in 0..3 {
            for k in 0..3 {
                let expect = u64::from(j == k);
                assert_eq!(a[ident][j][k], expect);
            }
        }
        // row sums count all pairs: sum_k a[i][j][k] * |C_k| = |C_i| * |C_j|
        for i in 0..3 {
            for j in 0..3 {
                let total: u64 = (0..3).map(|k| a[i][j][k] * t.sizes()[k]).sum();
                assert_eq!(total, t.sizes()[i] * t.sizes()[j]);
            }
        }
        // transposition class times itself hits the identity size-many times
        let tr = (0..3).find(|&k| t.rep_order(k) == 2).unwrap();
        assert_eq!(a[tr][tr][ident], 3);
        let q8 = classes("Q8");
        let aq = class_constants(&q8);
        let minus1 = (0..q8.class_count())
            .find(|&k| q8.rep_order(k) == 2)
            .unwrap();
        assert_eq!(aq[minus1][minus1][q8.identity_class()], 1);
    }

    #[test]
    fn general_path_matches_duality_on_abelian() {
        for s in ["C6", "C8", "abelian(2,2)", "abelian(4,2)", "C12"] {
            let t = classes(s);
            let dual = dixon_table(&t, &DixonOptions::default()).unwrap();
            let gen = dixon_table_general(&t, &DixonOptions::default()).unwrap();
            assert_eq!(dual.degrees, gen.degrees, "{s}");
            assert_eq!(dual.values, gen.values, "{s}");
        }
    }

    #[test]
    fn prime_override_same_table() {
        for s in ["sym(4)", "D10", "Q16", "metacyclic(7,3,7,2)"] {
            let t = classes(s);
            let a = dixon_table(&t, &DixonOptions::default()).unwrap();
            // find a different valid prime
            let e = t.group().exponent();
            let default_p = choose_prime(e, t.group().order(), None).unwrap();
            let mut q = default_p + e;
            while !arith::is_prime(q) {
                q += e;
            }
            let b = dixon_table(
                &t,
                &DixonOptions {
                    prime_override: Some(q),
                },
            )
            .unwrap();
            assert_eq!(a.degrees, b.degrees, "{s}");
            assert_eq!(a.values, b.values, "{s}");
        }
    }

    #[test]
    fn bad_override_rejected() {
        let t = classes("sym(3)");
        // composite, wrong residue, below the 2*ceil(sqrt(|G|)) bound
        for p in [10u64, 11, 5] {
            assert!(dixon_table_general(
                &t,
                &DixonOptions {
                    prime_override: Some(p)
                }
            )
            .is_err());
        }
        // the smallest valid prime works and gives the canonical table
        let a = dixon_table_general(&t, &DixonOptions::default()).unwrap();
        let b = dixon_table_general(
            &t,
            &DixonOptions {
                prime_override: Some(7),
            },
        )
        .unwrap();
        assert_eq!(a.values, b.values);
    }

    #[test]
    fn trivial_group_table() {
        let t = classes("C1");
        let ct = dixon_table(&t, &DixonOptions::default()).unwrap();
        assert_eq!(ct.degrees, vec![1]);
    }
}
