//! Exact character tables and the character-side rationality data: character
//! stabilizers, character fields, the group field Q(G), and field counts.

pub mod cyclotomic;
mod dixon;
pub mod fp;

pub use cyclotomic::{CycCtx, Cyclotomic};
pub use dixon::{class_constants, dixon_table, DixonOptions};

use crate::galois::{fixed_field_id, FieldId, GaloisError, UnitSubgroup};
use crate::group::{ClassData, ClassTable};
use crate::{arith, galois};

#[derive(Debug, Clone, thiserror::Error, PartialEq, Eq)]
pub enum CharError {
    #[error("no prime p = 1 mod {e} above {min} found below 2^20")]
    NoSuitablePrime { e: u64, min: u64 },
    #[error("dixon prime override {p} is unusable: {reason}")]
    BadPrimeOverride { p: u64, reason: String },
    #[error("eigenspace splitting failed: {0}")]
    SplitFailure(String),
    #[error("group exponent {0} too large for exact cyclotomic tables")]
    ExponentTooLarge(u64),
    #[error("class count {0} too large for the character table computation")]
    TooManyClasses(usize),
    #[error(transparent)]
    Galois(#[from] GaloisError),
}

/// Exact character table: one row per irreducible character, columns indexed
/// by the conjugacy classes of the underlying class table. Rows are sorted by
/// (degree, value vector), which makes tables reproducible across runs and
/// independent of the working prime.
pub struct CharacterTable {
    pub conductor: u64,
    pub degrees: Vec<u64>,
    /// values[chi][class]
    pub values: Vec<Vec<Cyclotomic>>,
    /// interned value ids: equal cyclotomic values share an id, so Galois
    /// stabilizer scans compare integers instead of coefficient vectors
    ids: Vec<Vec<u32>>,
    ctx: CycCtx,
}

impl CharacterTable {
    pub fn ctx(&self) -> &CycCtx {
        &self.ctx
    }

    pub fn num_chars(&self) -> usize {
        self.degrees.len()
    }

    pub(crate) fn new(conductor: u64, degrees: Vec<u64>, values: Vec<Vec<Cyclotomic>>, ctx: CycCtx) -> Self {
        let mut interner: std::collections::BTreeMap<&Cyclotomic, u32> = Default::default();
        let mut ids = Vec::with_capacity(values.len());
        for row in &values {
            let mut id_row = Vec::with_capacity(row.len());
            for v in row {
                let next = interner.len() as u32;
                id_row.push(*interner.entry(v).or_insert(next));
            }
            ids.push(id_row);
        }
        CharacterTable {
            conductor,
            degrees,
            values,
            ids,
            ctx,
        }
    }
}

/// Stabilizer of a character in Gal(Q(zeta_e)/Q): the residues j with
/// chi(x^j) = chi(x) on every class.
pub fn char_stabilizer(ct: &CharacterTable, t: &ClassTable, chi: usize) -> UnitSubgroup {
    let e = ct.conductor;
    let row = &ct.ids[chi];
    let power = power_class_rows(t, e);
    let residues: Vec<u64> = arith::units(e)
        .into_iter()
        .filter(|&j| (0..t.class_count()).all(|k| row[power[k][(j % t.rep_order(k)) as usize]] == row[k]))
        .collect();
    UnitSubgroup {
        modulus: e,
        residues,
    }
}

/// Power-class lookup per class, indexed by the exponent mod the
/// representative order.
fn power_class_rows(t: &ClassTable, _e: u64) -> Vec<Vec<usize>> {
    (0..t.class_count())
        .map(|k| {
            let o = t.rep_order(k);
            (0..o).map(|j| t.power_class(k, j as i64)).collect()
        })
        .collect()
}

/// Q(chi) identified as rational, quadratic or higher degree.
pub fn char_field(ct: &CharacterTable, t: &ClassTable, chi: usize) -> Result<FieldId, GaloisError> {
    fixed_field_id(&char_stabilizer(ct, t, chi))
}

/// Whether all values of the character are real.
pub fn char_is_real(ct: &CharacterTable, t: &ClassTable, chi: usize) -> bool {
    (0..t.class_count()).all(|k| ct.ids[chi][t.inverse_class(k)] == ct.ids[chi][k])
}

/// Whether all values of the character are rational.
pub fn char_is_rational(ct: &CharacterTable, chi: usize) -> bool {
    ct.values[chi].iter().all(|v| v.is_rational())
}

/// The subgroup of (Z/e)^× fixing every character value, together with its
/// index, i.e. the degree [Q(G) : Q].
pub fn group_field(ct: &CharacterTable, t: &ClassTable) -> (UnitSubgroup, u64) {
    let e = ct.conductor;
    let power = power_class_rows(t, e);
    let residues: Vec<u64> = arith::units(e)
        .into_iter()
        .filter(|&j| {
            (0..ct.num_chars()).all(|chi| {
                let row = &ct.ids[chi];
                (0..t.class_count()).all(|k| row[power[k][(j % t.rep_order(k)) as usize]] == row[k])
            })
        })
        .collect();
    let h = UnitSubgroup {
        modulus: e,
        residues,
    };
    let degree = h.index();
    (h, degree)
}

/// Real / rational / quadratic counts on both sides of the character table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub struct FieldCounts {
    pub real_chars: usize,
    pub rational_chars: usize,
    pub quadratic_chars: usize,
    pub real_classes: usize,
    pub rational_classes: usize,
    pub quadratic_classes: usize,
}

pub fn field_counts(ct: &CharacterTable, t: &ClassTable) -> Result<FieldCounts, GaloisError> {
    let mut out = FieldCounts {
        real_chars: 0,
        rational_chars: 0,
        quadratic_chars: 0,
        real_classes: 0,
        rational_classes: 0,
        quadratic_classes: 0,
    };
    for chi in 0..ct.num_chars() {
        if char_is_real(ct, t, chi) {
            out.real_chars += 1;
        }
        match char_field(ct, t, chi)?.degree() {
            1 => out.rational_chars += 1,
            2 => out.quadratic_chars += 1,
            _ => {}
        }
    }
    for k in 0..t.class_count() {
        if t.inverse_class(k) == k {
            out.real_classes += 1;
        }
        match galois::element_field(t, k)?.degree() {
            1 => out.rational_classes += 1,
            2 => out.quadratic_classes += 1,
            _ => {}
        }
    }
    Ok(out)
}

/// Exact row orthogonality: sum over classes of size * chi * conj(chi')
/// equals |G| on the diagonal and 0 off it. Exposed for verification.
pub fn row_orthogonality_holds(ct: &CharacterTable, t: &ClassTable) -> bool {
    let ctx = &ct.ctx;
    let order = t.group().order() as i64;
    for a in 0..ct.num_chars() {
        for b in a..ct.num_chars() {
            let mut acc = ctx.zero();
            for k in 0..t.class_count() {
                let conj = &ct.values[b][t.inverse_class(k)];
                let prod = ctx.mul(&ct.values[a][k], conj);
                for (i, c) in prod.coeffs.iter().enumerate() {
                    acc.coeffs[i] += c * t.sizes()[k] as i64;
                }
            }
            let expected = if a == b { order } else { 0 };
            if acc.rational_part() != Some(expected) {
                return false;
            }
        }
    }
    true
}

/// Column orthogonality at the identity: sum of squared degrees = |G|.
pub fn degree_sum_holds(ct: &CharacterTable, t: &ClassTable) -> bool {
    let total: u64 = ct.degrees.iter().map(|d| d * d).sum();
    total == t.group().order()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{conjugacy_classes, realize, DEFAULT_CAP};

    fn table(s: &str) -> (CharacterTable, ClassTable) {
        let g = realize(&crate::cli::parse_spec(s).unwrap(), DEFAULT_CAP).unwrap();
        let t = conjugacy_classes(&g);
        let ct = dixon_table(&t, &DixonOptions::default()).unwrap();
        (ct, t)
    }

    #[test]
    fn sym3_table() {
        let (ct, t) = table("sym(3)");
        assert_eq!(ct.degrees, vec![1, 1, 2]);
        for chi in 0..3 {
            assert!(char_is_rational(&ct, chi));
        }
        assert!(row_orthogonality_holds(&ct, &t));
        assert!(degree_sum_holds(&ct, &t));
    }

    #[test]
    fn q8_table() {
        let (ct, t) = table("Q8");
        assert_eq!(ct.degrees, vec![1, 1, 1, 1, 2]);
        assert!(row_orthogonality_holds(&ct, &t));
        // the degree-2 character has field Q (values 2, 0, 0, 0, -2)
        assert_eq!(char_field(&ct, &t, 4).unwrap(), FieldId::Rationals);
    }

    #[test]
    fn cyclic_table_is_dual() {
        let (ct, t) = table("C6");
        assert_eq!(ct.degrees, vec![1; 6]);
        assert!(row_orthogonality_holds(&ct, &t));
        // counts match across the duality in every category
        let c = field_counts(&ct, &t).unwrap();
        assert_eq!(c.real_chars, c.real_classes);
        assert_eq!(c.rational_chars, c.rational_classes);
        assert_eq!(c.quadratic_chars, c.quadratic_classes);
    }

    #[test]
    fn alt5_fields() {
        let (ct, t) = table("alt(5)");
        assert_eq!(ct.degrees, vec![1, 3, 3, 4, 5]);
        let mut quad = 0;
        for chi in 0..5 {
            match char_field(&ct, &t, chi).unwrap() {
                FieldId::Rationals => {}
                FieldId::Quadratic(d) => {
                    assert_eq!(d, 5);
                    quad += 1;
                    let st = char_stabilizer(&ct, &t, chi);
                    assert!(st.contains(st.modulus - 1), "field is real");
                }
                FieldId::HigherDegree(_) => panic!("alt(5) is quadratic rational"),
            }
        }
        assert_eq!(quad, 2);
        let (_, deg) = group_field(&ct, &t);
        assert_eq!(deg, 2);
        assert!(row_orthogonality_holds(&ct, &t));
    }

    #[test]
    fn c4_quadratic_char() {
        let (ct, t) = table("C4");
        let mut fields: Vec<FieldId> = (0..4).map(|chi| char_field(&ct, &t, chi).unwrap()).collect();
        fields.sort_by_key(|f| f.degree());
        assert_eq!(fields[0], FieldId::Rationals);
        assert_eq!(fields[1], FieldId::Rationals);
        assert_eq!(fields[2], FieldId::Quadratic(-1));
        assert_eq!(fields[3], FieldId::Quadratic(-1));
    }

    #[test]
    fn c12_group_field_degree() {
        let (ct, t) = table("C12");
        let (_, deg) = group_field(&ct, &t);
        assert_eq!(deg, 4);
    }

    #[test]
    fn char_field_degree_is_orbit_size() {
        for s in ["G1", "G2", "D10", "metacyclic(13,6,13,4)", "sym(4)"] {
            let (ct, t) = table(s);
            let e = ct.conductor;
            for chi in 0..ct.num_chars() {
                // orbit of the character under the Galois action on values
                let mut orbit = std::collections::BTreeSet::new();
                for j in arith::units(e) {
                    let row: Vec<Cyclotomic> = (0..t.class_count())
                        .map(|k| ct.values[chi][t.power_class(k, j as i64)].clone())
                        .collect();
                    orbit.insert(row);
                }
                let f = char_field(&ct, &t, chi).unwrap();
                assert_eq!(orbit.len() as u64, f.degree(), "{s} chi={chi}");
            }
        }
    }
}
