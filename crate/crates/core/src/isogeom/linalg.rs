//! Dense Gaussian elimination over `F_p`.

use super::field::PrimeField;

/// Brings `rows` to reduced row echelon form in place, dropping zero rows.
/// Pivots are the leftmost nonzero entries, normalized to 1, with zeros
/// elsewhere in their columns. Returns the pivot columns.
pub fn rref(f: PrimeField, rows: &mut Vec<Vec<u32>>) -> Vec<usize> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(found) = (r..rows.len()).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(r, found);
        let inv = f.inv(rows[r][c]);
        for x in rows[r].iter_mut() {
            *x = f.mul(*x, inv);
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c] == 0 {
                continue;
            }
            let factor = row[c];
            for (x, &y) in row[c..ncols].iter_mut().zip(&pivot_row[c..ncols]) {
                *x = f.sub(*x, f.mul(factor, y));
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

pub fn rank(f: PrimeField, rows: &[Vec<u32>]) -> usize {
    let mut m = rows.to_vec();
    rref(f, &mut m).len()
}

/// A basis of `{x : rows · x = 0}`.
pub fn right_kernel(f: PrimeField, rows: &[Vec<u32>], ncols: usize) -> Vec<Vec<u32>> {
    let mut m = rows.to_vec();
    let pivots = rref(f, &mut m);
    let mut is_pivot = vec![false; ncols];
    for &c in &pivots {
        is_pivot[c] = true;
    }
    (0..ncols)
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut x = vec![0; ncols];
            x[free] = 1;
            for (row, &pc) in m.iter().zip(&pivots) {
                x[pc] = f.neg(row[free]);
            }
            x
        })
        .collect()
}

/// Solutions of `A x = b` as a particular solution plus a kernel basis.
pub fn solve_affine(
    f: PrimeField,
    a: &[Vec<u32>],
    b: &[u32],
    ncols: usize,
) -> Option<(Vec<u32>, Vec<Vec<u32>>)> {
    let mut aug: Vec<Vec<u32>> = a
        .iter()
        .zip(b)
        .map(|(row, &rhs)| {
            let mut r = row.clone();
            r.push(rhs);
            r
        })
        .collect();
    let pivots = rref(f, &mut aug);
    if pivots.last() == Some(&ncols) {
        return None;
    }
    let mut particular = vec![0; ncols];
    for (row, &pc) in aug.iter().zip(&pivots) {
        particular[pc] = row[ncols];
    }
    let homogeneous: Vec<Vec<u32>> = aug.iter().map(|r| r[..ncols].to_vec()).collect();
    Some((particular, right_kernel(f, &homogeneous, ncols)))
}
