//! Smith normal form of integer matrices.
//!
//! Boundary matrices are sparse with ±1 entries, so most of the work is
//! Gaussian elimination on unit pivots, which never leaves the integers.
//! Whatever survives is handed to a dense `BigInt` Smith form with greedy
//! (smallest absolute value) pivoting.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Sparse integer matrix stored by rows; each row is sorted by column.
#[derive(Debug, Clone, Default)]
pub struct SparseMatrix {
    pub nrows: usize,
    pub ncols: usize,
    pub rows: Vec<Vec<(u32, i64)>>,
}

impl SparseMatrix {
    pub fn new(nrows: usize, ncols: usize) -> Self {
        SparseMatrix { nrows, ncols, rows: vec![Vec::new(); nrows] }
    }

    pub fn from_dense(dense: &[Vec<i64>]) -> Self {
        let nrows = dense.len();
        let ncols = dense.first().map_or(0, Vec::len);
        let rows = dense
            .iter()
            .map(|r| r.iter().enumerate().filter(|(_, &v)| v != 0).map(|(j, &v)| (j as u32, v)).collect())
            .collect();
        SparseMatrix { nrows, ncols, rows }
    }
}

/// Nonzero invariant factors `d_1 | d_2 | …` (all positive).
pub fn invariant_factors(m: &SparseMatrix) -> Vec<BigInt> {
    match unit_elimination(m) {
        Some((units, rest)) => {
            let mut factors = vec![BigInt::one(); units];
            factors.extend(dense_snf(rest));
            normalize_chain(factors)
        }
        None => normalize_chain(dense_snf(to_dense(m))),
    }
}

fn to_dense(m: &SparseMatrix) -> Vec<Vec<BigInt>> {
    let mut d = vec![vec![BigInt::zero(); m.ncols]; m.nrows];
    for (i, row) in m.rows.iter().enumerate() {
        for &(j, v) in row {
            d[i][j as usize] = BigInt::from(v);
        }
    }
    d
}

/// Eliminates unit pivots sparsely. Returns the number of unit pivots and
/// the dense leftover block, or `None` on `i64` overflow.
fn unit_elimination(m: &SparseMatrix) -> Option<(usize, Vec<Vec<BigInt>>)> {
    let mut rows: Vec<Vec<(u32, i64)>> = m.rows.clone();
    let mut col_rows: Vec<Vec<u32>> = vec![Vec::new(); m.ncols];
    for (i, row) in rows.iter().enumerate() {
        for &(j, _) in row {
            col_rows[j as usize].push(i as u32);
        }
    }
    let mut alive = vec![true; rows.len()];
    let mut units = 0usize;
    let mut order: Vec<usize> = (0..rows.len()).collect();
    order.sort_by_key(|&i| rows[i].len());
    loop {
        let mut progress = false;
        for &r in &order {
            if !alive[r] || rows[r].is_empty() {
                continue;
            }
            // unit entry whose column is shortest
            let pivot =
                rows[r].iter().filter(|(_, v)| v.abs() == 1).min_by_key(|(c, _)| col_rows[*c as usize].len()).copied();
            let Some((c, pv)) = pivot else { continue };
            let pivot_row = std::mem::take(&mut rows[r]);
            let others = std::mem::take(&mut col_rows[c as usize]);
            for &o in &others {
                let o = o as usize;
                if o == r || !alive[o] {
                    continue;
                }
                let Ok(pos) = rows[o].binary_search_by_key(&c, |e| e.0) else { continue };
                let factor = rows[o][pos].1 * pv;
                let merged = axpy(&rows[o], &pivot_row, factor)?;
                for &(j, _) in &merged {
                    if rows[o].binary_search_by_key(&j, |e| e.0).is_err() {
                        col_rows[j as usize].push(o as u32);
                    }
                }
                rows[o] = merged;
            }
            alive[r] = false;
            units += 1;
            progress = true;
        }
        if !progress {
            break;
        }
    }
    let live_rows: Vec<usize> = (0..rows.len()).filter(|&i| alive[i] && !rows[i].is_empty()).collect();
    let mut live_cols: Vec<u32> = live_rows.iter().flat_map(|&i| rows[i].iter().map(|e| e.0)).collect();
    live_cols.sort_unstable();
    live_cols.dedup();
    let mut dense = vec![vec![BigInt::zero(); live_cols.len()]; live_rows.len()];
    for (di, &i) in live_rows.iter().enumerate() {
        for &(j, v) in &rows[i] {
            let dj = live_cols.binary_search(&j).expect("column collected above");
            dense[di][dj] = BigInt::from(v);
        }
    }
    Some((units, dense))
}

/// `a - factor * b` on sorted sparse rows.
fn axpy(a: &[(u32, i64)], b: &[(u32, i64)], factor: i64) -> Option<Vec<(u32, i64)>> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let take_a = j == b.len() || (i < a.len() && a[i].0 < b[j].0);
        let take_b = i == a.len() || (j < b.len() && b[j].0 < a[i].0);
        if take_a {
            out.push(a[i]);
            i += 1;
        } else if take_b {
            out.push((b[j].0, b[j].1.checked_mul(factor)?.checked_neg()?));
            j += 1;
        } else {
            let v = a[i].1.checked_sub(b[j].1.checked_mul(factor)?)?;
            if v != 0 {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    Some(out)
}

/// Dense Smith normal form; returns the nonzero diagonal (absolute values).
pub fn dense_snf(mut a: Vec<Vec<BigInt>>) -> Vec<BigInt> {
    let nrows = a.len();
    let ncols = a.first().map_or(0, Vec::len);
    let mut diag = Vec::new();
    let mut t = 0;
    while t < nrows.min(ncols) {
        // smallest nonzero entry of the trailing block
        let mut best: Option<(usize, usize)> = None;
        for i in t..nrows {
            for j in t..ncols {
                if !a[i][j].is_zero() && best.is_none_or(|(bi, bj)| a[i][j].abs() < a[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((bi, bj)) = best else { break };
        a.swap(t, bi);
        for row in a.iter_mut() {
            row.swap(t, bj);
        }
        loop {
            let mut moved = false;
            for i in (t + 1)..nrows {
                if a[i][t].is_zero() {
                    continue;
                }
                let q = a[i][t].div_floor(&a[t][t]);
                for j in t..ncols {
                    let v = &a[t][j] * &q;
                    a[i][j] -= v;
                }
                if !a[i][t].is_zero() {
                    a.swap(t, i);
                    moved = true;
                }
            }
            for j in (t + 1)..ncols {
                if a[t][j].is_zero() {
                    continue;
                }
                let q = a[t][j].div_floor(&a[t][t]);
                for row in a.iter_mut().skip(t) {
                    let v = &row[t] * &q;
                    row[j] -= v;
                }
                if !a[t][j].is_zero() {
                    for row in a.iter_mut() {
                        row.swap(t, j);
                    }
                    moved = true;
                }
            }
            if moved {
                continue;
            }
            // divisibility of the trailing block by the pivot
            let bad = (t + 1..nrows).find(|&i| (t + 1..ncols).any(|j| !(&a[i][j] % &a[t][t]).is_zero()));
            match bad {
                Some(i) => {
                    for j in t..ncols {
                        let v = a[i][j].clone();
                        a[t][j] += v;
                    }
                }
                None => break,
            }
        }
        diag.push(a[t][t].abs());
        t += 1;
    }
    diag
}

/// Rewrites any diagonal into the divisibility chain `d_1 | d_2 | …`.
fn normalize_chain(mut d: Vec<BigInt>) -> Vec<BigInt> {
    for i in 0..d.len() {
        for j in (i + 1)..d.len() {
            let g = d[i].gcd(&d[j]);
            let l = d[i].lcm(&d[j]);
            d[i] = g;
            d[j] = l;
        }
    }
    d
}
