//! Congruence of integer symmetric bilinear forms: `gᵀ M₁ g = M₂`.

use crate::error::{Error, Result};

pub type IntMatrix = Vec<Vec<i64>>;

fn check_square(m: &IntMatrix, name: &str) -> Result<usize> {
    let n = m.len();
    if m.iter().any(|r| r.len() != n) {
        return Err(Error::validation(format!("{name} is not a square matrix")));
    }
    Ok(n)
}

pub fn transpose(m: &IntMatrix) -> IntMatrix {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    (0..cols)
        .map(|j| (0..rows).map(|i| m[i][j]).collect())
        .collect()
}

pub fn mat_mul(a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| (0..inner).map(|k| row[k] * b[k][j]).sum())
                .collect()
        })
        .collect()
}

/// Integer determinant by cofactor expansion; only used for small matrices.
pub fn determinant(m: &IntMatrix) -> i64 {
    match m.len() {
        0 => 1,
        1 => m[0][0],
        2 => m[0][0] * m[1][1] - m[0][1] * m[1][0],
        n => (0..n)
            .map(|j| {
                let minor: IntMatrix = m[1..]
                    .iter()
                    .map(|r| {
                        r.iter()
                            .enumerate()
                            .filter(|&(k, _)| k != j)
                            .map(|(_, &x)| x)
                            .collect()
                    })
                    .collect();
                let sign = if j % 2 == 0 { 1 } else { -1 };
                sign * m[0][j] * determinant(&minor)
            })
            .sum(),
    }
}

/// Whether `gᵀ · m1 · g = m2` holds exactly.
pub fn congruent(m1: &IntMatrix, m2: &IntMatrix, g: &IntMatrix) -> Result<bool> {
    let n = check_square(m1, "first form")?;
    if check_square(m2, "second form")? != n || check_square(g, "change of basis")? != n {
        return Err(Error::validation("matrices have different sizes"));
    }
    Ok(mat_mul(&transpose(g), &mat_mul(m1, g)) == *m2)
}

fn form(m: &IntMatrix, u: &[i64], v: &[i64]) -> i64 {
    m.iter()
        .enumerate()
        .map(|(i, row)| u[i] * row.iter().zip(v).map(|(x, y)| x * y).sum::<i64>())
        .sum()
}

/// Searches for a unimodular `g` with entries in `[-bound, bound]` and
/// `gᵀ m1 g = m2`. Columns are chosen one at a time, keeping only vectors
/// with the right norms and pairings against earlier columns.
pub fn search_congruence(m1: &IntMatrix, m2: &IntMatrix, bound: i64) -> Result<Option<IntMatrix>> {
    let n = check_square(m1, "first form")?;
    if check_square(m2, "second form")? != n {
        return Err(Error::validation("matrices have different sizes"));
    }
    if determinant(m1) != determinant(m2) {
        return Ok(None);
    }
    let width = (2 * bound + 1) as usize;
    let mut vectors = Vec::new();
    for code in 0..width.pow(n as u32) {
        let mut c = code;
        let v: Vec<i64> = (0..n)
            .map(|_| {
                let x = (c % width) as i64 - bound;
                c /= width;
                x
            })
            .collect();
        vectors.push(v);
    }
    let candidates: Vec<Vec<&Vec<i64>>> = (0..n)
        .map(|j| {
            vectors
                .iter()
                .filter(|v| form(m1, v, v) == m2[j][j])
                .collect()
        })
        .collect();

    fn extend(
        m1: &IntMatrix,
        m2: &IntMatrix,
        candidates: &[Vec<&Vec<i64>>],
        cols: &mut Vec<Vec<i64>>,
    ) -> bool {
        let j = cols.len();
        if j == candidates.len() {
            let g = transpose(cols);
            return determinant(&g).abs() == 1;
        }
        for v in &candidates[j] {
            if (0..j).all(|k| form(m1, &cols[k], v) == m2[k][j]) {
                cols.push((*v).clone());
                if extend(m1, m2, candidates, cols) {
                    return true;
                }
                cols.pop();
            }
        }
        false
    }

    let mut cols = Vec::with_capacity(n);
    Ok(extend(m1, m2, &candidates, &mut cols).then(|| transpose(&cols)))
}
