//! Exact linear algebra over ℚ.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::poly::Rational;

/// Rank of a rational matrix by fraction-free (Bareiss) elimination.
///
/// Rows are first scaled to integer rows; the elimination then stays in ℤ and
/// every division is exact.
pub fn rank(rows: &[Vec<Rational>]) -> usize {
    let mut m: Vec<Vec<BigInt>> = rows.iter().map(|r| integer_row(r)).collect();
    let nrows = m.len();
    if nrows == 0 {
        return 0;
    }
    let ncols = m[0].len();
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(piv) = (r..nrows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, piv);
        for i in r + 1..nrows {
            for j in c + 1..ncols {
                let v = &m[r][c] * &m[i][j] - &m[i][c] * &m[r][j];
                m[i][j] = v / &prev;
            }
            m[i][c] = BigInt::zero();
        }
        prev = m[r][c].clone();
        r += 1;
    }
    r
}

fn integer_row(row: &[Rational]) -> Vec<BigInt> {
    let l = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    row.iter().map(|x| x.numer() * (&l / x.denom())).collect()
}

/// Reduced row echelon form. Returns the nonzero rows and their pivot columns.
pub fn rref(mut m: Vec<Vec<Rational>>) -> (Vec<Vec<Rational>>, Vec<usize>) {
    let nrows = m.len();
    let ncols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(piv) = (r..nrows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, piv);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, y) in row[c..].iter_mut().zip(&pivot_row[c..]) {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    m.truncate(r);
    (m, pivots)
}

/// Basis of the null space `{x : A x = 0}` for an `nrows × ncols` matrix.
pub fn kernel(m: Vec<Vec<Rational>>, ncols: usize) -> Vec<Vec<Rational>> {
    let (r, pivots) = rref(m);
    let mut basis = Vec::new();
    for free in (0..ncols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![Rational::zero(); ncols];
        v[free] = Rational::one();
        for (row, &pc) in r.iter().zip(&pivots) {
            v[pc] = -row[free].clone();
        }
        basis.push(v);
    }
    basis
}

/// Null space of the linear map sending the `k`-th unit vector to
/// `columns[k]`, where each column is a sparse vector with ordered keys.
///
/// Columns that share no key are solved separately, so block-diagonal maps
/// never build the full dense matrix.
pub fn kernel_of_columns<K: Ord + Clone>(columns: &[BTreeMap<K, Rational>]) -> Vec<Vec<Rational>> {
    let n = columns.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut i: usize) -> usize {
        while parent[i] != i {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        i
    }
    let mut owner: BTreeMap<&K, usize> = BTreeMap::new();
    for (j, col) in columns.iter().enumerate() {
        for k in col.keys() {
            match owner.get(k) {
                Some(&o) => {
                    let (a, b) = (find(&mut parent, o), find(&mut parent, j));
                    parent[a.max(b)] = a.min(b);
                }
                None => {
                    owner.insert(k, j);
                }
            }
        }
    }
    let mut blocks: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for j in 0..n {
        let r = find(&mut parent, j);
        blocks.entry(r).or_default().push(j);
    }
    let mut basis = Vec::new();
    for cols in blocks.values() {
        let mut keys: BTreeMap<&K, usize> = BTreeMap::new();
        for &j in cols {
            for k in columns[j].keys() {
                let len = keys.len();
                keys.entry(k).or_insert(len);
            }
        }
        let mut m = vec![vec![Rational::zero(); cols.len()]; keys.len()];
        for (jj, &j) in cols.iter().enumerate() {
            for (k, v) in &columns[j] {
                m[keys[k]][jj] = v.clone();
            }
        }
        for v in kernel(m, cols.len()) {
            let mut full = vec![Rational::zero(); n];
            for (x, &j) in v.into_iter().zip(cols) {
                full[j] = x;
            }
            basis.push(full);
        }
    }
    basis
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat;

    fn mat(rows: &[&[i64]]) -> Vec<Vec<Rational>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| rat(x, 1)).collect())
            .collect()
    }

    #[test]
    fn bareiss_rank() {
        assert_eq!(rank(&mat(&[&[0, 0], &[0, 0]])), 0);
        assert_eq!(rank(&mat(&[&[1, 0], &[0, 1]])), 2);
        assert_eq!(rank(&mat(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]])), 2);
        // sl2 rank matrix at (e,h,f) = (1,0,0)
        assert_eq!(rank(&mat(&[&[0, -2, 0], &[2, 0, 0], &[0, 0, 0]])), 2);
        let half = vec![vec![rat(1, 2), rat(1, 3)], vec![rat(3, 2), rat(1, 1)]];
        assert_eq!(rank(&half), 1);
    }

    #[test]
    fn rank_matches_rref() {
        let m = mat(&[
            &[2, -1, 0, 3],
            &[4, -2, 1, 0],
            &[6, -3, 1, 3],
            &[0, 0, 0, 0],
        ]);
        assert_eq!(rank(&m), rref(m).0.len());
    }

    #[test]
    fn kernel_is_annihilated() {
        let m = mat(&[&[1, 2, 3], &[2, 4, 6]]);
        let k = kernel(m.clone(), 3);
        assert_eq!(k.len(), 2);
        for v in &k {
            for row in &m {
                let s: Rational = row.iter().zip(v).map(|(a, b)| a * b).sum();
                assert!(s.is_zero());
            }
        }
    }

    #[test]
    fn kernel_of_block_columns() {
        let col = |pairs: &[(u8, i64)]| {
            pairs
                .iter()
                .map(|&(k, v)| (k, rat(v, 1)))
                .collect::<BTreeMap<_, _>>()
        };
        // columns 0,2 share key 0; column 1 is zero; column 3 is alone
        let cols = [col(&[(0, 1)]), col(&[]), col(&[(0, 2)]), col(&[(1, 5)])];
        let k = kernel_of_columns(&cols);
        assert_eq!(k.len(), 2);
        for v in &k {
            for key in 0..2u8 {
                let s: Rational = cols
                    .iter()
                    .zip(v)
                    .map(|(c, x)| c.get(&key).cloned().unwrap_or_default() * x)
                    .sum();
                assert!(s.is_zero());
            }
        }
    }
}
