//! Dense Gaussian elimination over a finite field.

use alloc::vec;
use alloc::vec::Vec;

use crate::gf::{FieldElement, FieldSpec};

pub type Matrix = Vec<Vec<FieldElement>>;

/// Brings `m` into reduced row echelon form in place, dropping zero rows.
/// Returns the pivot column of each remaining row.
pub fn rref(m: &mut Matrix, field: &FieldSpec) -> Vec<usize> {
    let ncols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..ncols {
        if row == m.len() {
            break;
        }
        let Some(p) = (row..m.len()).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let inv = field.inv(m[row][col]).expect("pivot is nonzero");
        if inv != field.one() {
            for x in m[row].iter_mut() {
                *x = field.mul(*x, inv);
            }
        }
        for i in 0..m.len() {
            if i != row && !m[i][col].is_zero() {
                let factor = m[i][col];
                let (src, dst) = if i < row {
                    let (a, b) = m.split_at_mut(row);
                    (&b[0], &mut a[i])
                } else {
                    let (a, b) = m.split_at_mut(i);
                    (&a[row], &mut b[0])
                };
                for (x, y) in dst.iter_mut().zip(src.iter()).skip(col) {
                    if !y.is_zero() {
                        *x = field.sub(*x, field.mul(factor, *y));
                    }
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    m.truncate(row);
    pivots
}

pub fn rank(m: &Matrix, field: &FieldSpec) -> usize {
    let mut copy = m.clone();
    rref(&mut copy, field).len()
}

/// Basis of the right kernel `{x : m x = 0}` of a matrix with `ncols`
/// columns.
///
/// One vector per non-pivot column `f`: it has a one at `f`, zeros at the
/// other non-pivot columns, and is supported otherwise on pivot columns
/// smaller than `f`. With columns sorted increasingly, the largest entry of
/// each vector therefore sits at its own free column.
pub fn kernel(m: &Matrix, ncols: usize, field: &FieldSpec) -> Vec<Vec<FieldElement>> {
    let mut r = m.clone();
    let pivots = rref(&mut r, field);
    let mut is_pivot = vec![false; ncols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let mut out = Vec::new();
    for f in (0..ncols).filter(|&c| !is_pivot[c]) {
        let mut v = vec![FieldElement::ZERO; ncols];
        v[f] = field.one();
        for (row, &p) in r.iter().zip(&pivots) {
            v[p] = field.neg(row[f]);
        }
        out.push(v);
    }
    out
}

/// Incrementally maintained echelon basis of a column span, used by the
/// support searches.
#[derive(Clone, Debug)]
pub struct EchelonBasis {
    /// Reduced vectors with their pivot positions.
    rows: Vec<(usize, Vec<FieldElement>)>,
}

impl EchelonBasis {
    pub fn new() -> EchelonBasis {
        EchelonBasis { rows: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Adds `v` and reports whether it enlarged the span.
    pub fn insert(&mut self, mut v: Vec<FieldElement>, field: &FieldSpec) -> bool {
        for (p, row) in &self.rows {
            let c = v[*p];
            if !c.is_zero() {
                for (x, y) in v.iter_mut().zip(row) {
                    if !y.is_zero() {
                        *x = field.sub(*x, field.mul(c, *y));
                    }
                }
            }
        }
        match v.iter().position(|x| !x.is_zero()) {
            Some(p) => {
                let inv = field.inv(v[p]).expect("nonzero");
                for x in v.iter_mut() {
                    *x = field.mul(*x, inv);
                }
                self.rows.push((p, v));
                true
            }
            None => false,
        }
    }

    /// Removes the most recently inserted vector.
    pub fn pop(&mut self) {
        self.rows.pop();
    }

    pub fn contains(&self, v: &[FieldElement], field: &FieldSpec) -> bool {
        let mut v = v.to_vec();
        for (p, row) in &self.rows {
            let c = v[*p];
            if !c.is_zero() {
                for (x, y) in v.iter_mut().zip(row) {
                    if !y.is_zero() {
                        *x = field.sub(*x, field.mul(c, *y));
                    }
                }
            }
        }
        v.iter().all(|x| x.is_zero())
    }
}

impl Default for EchelonBasis {
    fn default() -> Self {
        Self::new()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat(field: &FieldSpec, rows: &[&[u32]]) -> Matrix {
        rows.iter().map(|r| r.iter().map(|&x| field.element(x).unwrap()).collect()).collect()
    }

    #[test]
    fn rref_and_rank() {
        let f = FieldSpec::new(3, 1).unwrap();
        let mut m = mat(&f, &[&[1, 2, 0], &[2, 1, 0], &[0, 0, 1]]);
        let piv = rref(&mut m, &f);
        assert_eq!(piv, vec![0, 2]);
        assert_eq!(m, mat(&f, &[&[1, 2, 0], &[0, 0, 1]]));
    }

    #[test]
    fn kernel_vectors_annihilate() {
        let f = FieldSpec::new(2, 2).unwrap();
        let m = mat(&f, &[&[1, 2, 3, 0], &[0, 1, 1, 1]]);
        let k = kernel(&m, 4, &f);
        assert_eq!(k.len(), 2);
        for v in &k {
            for row in &m {
                let dot = row.iter().zip(v).fold(f.zero(), |acc, (a, b)| f.add(acc, f.mul(*a, *b)));
                assert!(dot.is_zero());
            }
            // the largest nonzero position is the free column
            let last = v.iter().rposition(|x| !x.is_zero()).unwrap();
            assert_eq!(v[last], f.one());
        }
    }

    #[test]
    fn echelon_basis_insert_and_pop() {
        let f = FieldSpec::new(2, 1).unwrap();
        let mut b = EchelonBasis::new();
        let v = |xs: &[u32]| xs.iter().map(|&x| FieldElement(x)).collect::<Vec<_>>();
        assert!(b.insert(v(&[1, 1, 0]), &f));
        assert!(b.insert(v(&[0, 1, 1]), &f));
        assert!(!b.insert(v(&[1, 0, 1]), &f));
        assert!(b.contains(&v(&[1, 0, 1]), &f));
        b.pop();
        assert!(!b.contains(&v(&[1, 0, 1]), &f));
        assert_eq!(b.rank(), 1);
    }
}
