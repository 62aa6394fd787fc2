//! Exact elimination over ℚ(i): reduced row echelon form, rank and nullspace.

use num_traits::{One, Zero};

use super::scalar::GaussianRational;

type C = GaussianRational;

/// A row space kept in reduced row echelon form, grown one row at a time.
///
/// Pivot rows are sorted by pivot column and every pivot column is zero in
/// all other rows, so the state (and hence [`Echelon::nullspace`]) depends
/// only on the span of the inserted rows, never on insertion order.
#[derive(Clone, Debug)]
pub struct Echelon {
    cols: usize,
    rows: Vec<Vec<C>>,
    pivots: Vec<usize>,
}

impl Echelon {
    pub fn new(cols: usize) -> Self {
        Self { cols, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn rows(&self) -> &[Vec<C>] {
        &self.rows
    }

    /// Reduces `row` against the current pivots in place.
    fn reduce(&self, row: &mut [C]) {
        for (r, &p) in self.rows.iter().zip(&self.pivots) {
            if row[p].is_zero() {
                continue;
            }
            let f = row[p].clone();
            for (dst, src) in row.iter_mut().zip(r).skip(p) {
                if !src.is_zero() {
                    *dst -= &(&f * src);
                }
            }
        }
    }

    /// Adds a row; returns `true` if it increased the rank.
    pub fn insert(&mut self, mut row: Vec<C>) -> bool {
        assert_eq!(row.len(), self.cols, "row length");
        if self.rank() == self.cols {
            return false;
        }
        self.reduce(&mut row);
        let Some(p) = row.iter().position(|c| !c.is_zero()) else {
            return false;
        };
        if !row[p].is_one() {
            let inv = row[p].inv().expect("nonzero pivot");
            for c in row.iter_mut().skip(p) {
                if !c.is_zero() {
                    *c = &*c * &inv;
                }
            }
        }
        for r in &mut self.rows {
            if r[p].is_zero() {
                continue;
            }
            let f = r[p].clone();
            for (dst, src) in r.iter_mut().zip(&row).skip(p) {
                if !src.is_zero() {
                    *dst -= &(&f * src);
                }
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.rows.insert(at, row);
        true
    }

    /// Whether `row` lies in the current row space.
    pub fn contains(&self, row: &[C]) -> bool {
        let mut r = row.to_vec();
        self.reduce(&mut r);
        r.iter().all(Zero::is_zero)
    }

    /// Basis of `{v : A v = 0}`, one vector per free column in increasing order.
    pub fn nullspace(&self) -> Vec<Vec<C>> {
        let mut is_pivot = vec![false; self.cols];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.cols)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut v = vec![C::zero(); self.cols];
                v[f] = C::one();
                for (r, &p) in self.rows.iter().zip(&self.pivots) {
                    v[p] = -&r[f];
                }
                v
            })
            .collect()
    }
}

/// Reduced row echelon form of `a` and its pivot columns.
pub fn rref(a: &[Vec<C>]) -> (Vec<Vec<C>>, Vec<usize>) {
    let cols = a.first().map_or(0, Vec::len);
    let mut e = Echelon::new(cols);
    for row in a {
        e.insert(row.clone());
    }
    (e.rows, e.pivots)
}

pub fn rank(a: &[Vec<C>]) -> usize {
    rref(a).1.len()
}

/// Basis of the nullspace of the `rows × cols` matrix `a`.
pub fn nullspace(a: &[Vec<C>], cols: usize) -> Vec<Vec<C>> {
    let mut e = Echelon::new(cols);
    for row in a {
        e.insert(row.clone());
    }
    e.nullspace()
}

/// Product `A v`.
pub fn mat_vec(a: &[Vec<C>], v: &[C]) -> Vec<C> {
    a.iter()
        .map(|row| row.iter().zip(v).fold(C::zero(), |acc, (x, y)| &acc + &(x * y)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> Vec<Vec<C>> {
        rows.iter().map(|r| r.iter().map(|&c| C::from_int(c)).collect()).collect()
    }

    #[test]
    fn identity_has_trivial_nullspace() {
        assert!(nullspace(&m(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]), 3).is_empty());
    }

    #[test]
    fn zero_matrix_nullspace_is_everything() {
        assert_eq!(nullspace(&m(&[&[0, 0, 0], &[0, 0, 0]]), 3).len(), 3);
    }

    #[test]
    fn rank_one_two_by_two() {
        let ns = nullspace(&m(&[&[1, 1], &[2, 2]]), 2);
        assert_eq!(ns, vec![vec![C::from_int(-1), C::from_int(1)]]);
        // (1, -1) spans the same line
        let v = &ns[0];
        assert_eq!(mat_vec(&m(&[&[1, 1], &[2, 2]]), v), vec![C::zero(), C::zero()]);
    }

    #[test]
    fn complex_entries() {
        // rows (1, i) and (i, -1) are dependent
        let a = vec![vec![C::from_int(1), C::i()], vec![C::i(), C::from_int(-1)]];
        assert_eq!(rank(&a), 1);
        let ns = nullspace(&a, 2);
        assert_eq!(ns.len(), 1);
        assert!(mat_vec(&a, &ns[0]).iter().all(Zero::is_zero));
    }

    #[test]
    fn insertion_order_does_not_matter() {
        let rows = m(&[&[1, 2, 3, 4], &[2, 4, 1, 0], &[3, 6, 4, 4]]);
        let (r1, p1) = rref(&rows);
        let rev: Vec<_> = rows.iter().rev().cloned().collect();
        let (r2, p2) = rref(&rev);
        assert_eq!(r1, r2);
        assert_eq!(p1, p2);
    }
}
