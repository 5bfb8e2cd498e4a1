use crate::field::{FieldElement, GaloisField};

/// Basis of the right kernel of a matrix given by rows of length `cols`.
pub(crate) fn kernel(
    field: &'static GaloisField,
    mut rows: Vec<Vec<FieldElement>>,
    cols: usize,
) -> Vec<Vec<FieldElement>> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(i) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, i);
        let inv = rows[r][c].inverse().expect("pivot is nonzero");
        for x in rows[r].iter_mut() {
            *x *= inv;
        }
        let pivot_row = rows[r].clone();
        for (j, row) in rows.iter_mut().enumerate() {
            if j != r && !row[c].is_zero() {
                let factor = row[c];
                for (x, &y) in row.iter_mut().zip(&pivot_row) {
                    *x -= factor * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![field.zero(); cols];
            v[fc] = field.one();
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = -rows[i][fc];
            }
            v
        })
        .collect()
}

/// One vector per point of the projectivized span: first nonzero
/// coordinate (in basis terms) equal to one.
pub(crate) fn projective_points(
    field: &'static GaloisField,
    basis: &[Vec<FieldElement>],
) -> Vec<Vec<FieldElement>> {
    let dim = basis.len();
    let mut out = Vec::new();
    if dim == 0 {
        return out;
    }
    let q = field.order() as u64;
    let cols = basis[0].len();
    for lead in 0..dim {
        let free = dim - lead - 1;
        for idx in 0..q.pow(free as u32) {
            let mut v = basis[lead].clone();
            let mut rest = idx;
            for b in &basis[lead + 1..] {
                let c = field.element(rest % q).expect("digit in range");
                rest /= q;
                for j in 0..cols {
                    v[j] += c * b[j];
                }
            }
            out.push(v);
        }
    }
    out
}

pub(crate) fn projective_size(q: u64, dim: usize) -> u64 {
    (0..dim as u32)
        .map(|i| q.saturating_pow(i))
        .fold(0u64, |a, b| a.saturating_add(b))
}
