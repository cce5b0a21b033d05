//! Exact integer matrix routines: Hermite and Smith normal forms, kernels,
//! determinants, rank, lattice membership and saturation.
//!
//! Matrices are row-major `Vec<Vec<i64>>`. Lattices are given by generating rows.

use num_integer::Integer;

pub type Matrix = Vec<Vec<i64>>;

pub fn identity(n: usize) -> Matrix {
    (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect()
}

pub fn scale_identity(n: usize, k: i64) -> Matrix {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { k } else { 0 }).collect())
        .collect()
}

pub fn transpose(m: &[Vec<i64>], ncols: usize) -> Matrix {
    (0..ncols)
        .map(|j| m.iter().map(|row| row[j]).collect())
        .collect()
}

pub fn mat_mul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Matrix {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            assert_eq!(row.len(), inner, "dimension mismatch in mat_mul");
            (0..cols)
                .map(|j| (0..inner).map(|k| row[k] * b[k][j]).sum())
                .collect()
        })
        .collect()
}

/// `v · M` for a row vector `v`.
pub fn vec_mat(v: &[i64], m: &[Vec<i64>]) -> Vec<i64> {
    let cols = m.first().map_or(0, Vec::len);
    (0..cols)
        .map(|j| v.iter().zip(m).map(|(a, row)| a * row[j]).sum())
        .collect()
}

/// `M · v` for a column vector `v`.
pub fn mat_vec(m: &[Vec<i64>], v: &[i64]) -> Vec<i64> {
    m.iter().map(|row| dot(row, v)).collect()
}

pub fn dot(a: &[i64], b: &[i64]) -> i64 {
    assert_eq!(a.len(), b.len(), "dimension mismatch in dot");
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn add(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn scale(a: &[i64], k: i64) -> Vec<i64> {
    a.iter().map(|x| x * k).collect()
}

pub fn is_zero(a: &[i64]) -> bool {
    a.iter().all(|&x| x == 0)
}

/// Row Hermite normal form with transform: returns `(h, u)` such that `u · a = h`,
/// `u` unimodular, nonzero rows of `h` on top in echelon form with positive pivots
/// and entries above each pivot reduced into `[0, pivot)`.
pub fn hnf_with_transform(a: &[Vec<i64>], ncols: usize) -> (Matrix, Matrix) {
    let m = a.len();
    let mut h: Matrix = a.to_vec();
    let mut u = identity(m);
    let mut r = 0;
    for c in 0..ncols {
        if r == m {
            break;
        }
        loop {
            let pivot = (r..m)
                .filter(|&i| h[i][c] != 0)
                .min_by_key(|&i| h[i][c].abs());
            let Some(p) = pivot else { break };
            h.swap(r, p);
            u.swap(r, p);
            let mut done = true;
            for i in r + 1..m {
                if h[i][c] != 0 {
                    let q = Integer::div_floor(&h[i][c], &h[r][c]);
                    row_axpy(&mut h, i, r, -q);
                    row_axpy(&mut u, i, r, -q);
                    if h[i][c] != 0 {
                        done = false;
                    }
                }
            }
            if done {
                break;
            }
        }
        if h[r][c] == 0 {
            continue;
        }
        if h[r][c] < 0 {
            h[r].iter_mut().for_each(|x| *x = -*x);
            u[r].iter_mut().for_each(|x| *x = -*x);
        }
        for i in 0..r {
            let q = Integer::div_floor(&h[i][c], &h[r][c]);
            if q != 0 {
                row_axpy(&mut h, i, r, -q);
                row_axpy(&mut u, i, r, -q);
            }
        }
        r += 1;
    }
    (h, u)
}

fn row_axpy(m: &mut Matrix, target: usize, source: usize, k: i64) {
    let src = m[source].clone();
    for (t, s) in m[target].iter_mut().zip(src) {
        *t += k * s;
    }
}

/// Nonzero rows of the Hermite normal form: a canonical basis of the row lattice.
pub fn hnf(a: &[Vec<i64>], ncols: usize) -> Matrix {
    let (h, _) = hnf_with_transform(a, ncols);
    h.into_iter().filter(|row| !is_zero(row)).collect()
}

/// Basis of `{x ∈ Z^m : x · a = 0}`.
pub fn left_kernel(a: &[Vec<i64>], ncols: usize) -> Matrix {
    let (h, u) = hnf_with_transform(a, ncols);
    h.iter()
        .zip(u)
        .filter(|(row, _)| is_zero(row))
        .map(|(_, urow)| urow)
        .collect()
}

/// Basis of `{x ∈ Z^n : a · x = 0}` (always a saturated sublattice), in Hermite form.
pub fn right_kernel(a: &[Vec<i64>], ncols: usize) -> Matrix {
    let k = left_kernel(&transpose(a, ncols), a.len());
    hnf(&k, ncols)
}

pub fn rank(a: &[Vec<i64>], ncols: usize) -> usize {
    hnf(a, ncols).len()
}

/// Integer coefficients `x` with `x · basis = v`, if any. Unique when the rows are independent.
pub fn solve_in_lattice(basis: &[Vec<i64>], v: &[i64]) -> Option<Vec<i64>> {
    let n = v.len();
    if basis.is_empty() {
        return is_zero(v).then(Vec::new);
    }
    let (h, u) = hnf_with_transform(basis, n);
    let k = basis.len();
    let mut rest = v.to_vec();
    let mut coeffs = vec![0i64; k];
    for (i, row) in h.iter().enumerate() {
        let Some(c) = row.iter().position(|&x| x != 0) else {
            continue;
        };
        if rest[c] % row[c] != 0 {
            return None;
        }
        let q = rest[c] / row[c];
        coeffs[i] = q;
        for (r, x) in rest.iter_mut().zip(row) {
            *r -= q * x;
        }
    }
    if !is_zero(&rest) {
        return None;
    }
    Some(vec_mat(&coeffs, &u))
}

pub fn in_lattice(generators: &[Vec<i64>], v: &[i64]) -> bool {
    let basis = hnf(generators, v.len());
    solve_in_lattice(&basis, v).is_some()
}

/// Determinant by fraction-free Bareiss elimination.
pub fn det(a: &[Vec<i64>]) -> i64 {
    let n = a.len();
    if n == 0 {
        return 1;
    }
    let mut m: Vec<Vec<i128>> = a
        .iter()
        .map(|r| r.iter().map(|&x| i128::from(x)).collect())
        .collect();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if m[k][k] == 0 {
            let Some(p) = (k + 1..n).find(|&i| m[i][k] != 0) else {
                return 0;
            };
            m.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
        }
        prev = m[k][k];
    }
    i64::try_from(sign * m[n - 1][n - 1]).expect("determinant overflow")
}

/// Sylvester's criterion on a symmetric integer matrix.
pub fn is_positive_definite(sym: &[Vec<i64>]) -> bool {
    (1..=sym.len()).all(|k| {
        let minor: Matrix = sym[..k].iter().map(|r| r[..k].to_vec()).collect();
        det(&minor) > 0
    })
}

/// Invariant factors (nonzero diagonal of the Smith normal form).
pub fn smith_invariants(a: &[Vec<i64>], ncols: usize) -> Vec<i64> {
    let mut m: Matrix = a.to_vec();
    let rows = m.len();
    let mut diag = Vec::new();
    let mut t = 0;
    while t < rows.min(ncols) {
        let Some((pi, pj)) = (t..rows)
            .flat_map(|i| (t..ncols).map(move |j| (i, j)))
            .filter(|&(i, j)| m[i][j] != 0)
            .min_by_key(|&(i, j)| m[i][j].abs())
        else {
            break;
        };
        m.swap(t, pi);
        for row in m.iter_mut() {
            row.swap(t, pj);
        }
        let p = m[t][t];
        let mut clean = true;
        for i in t + 1..rows {
            let q = Integer::div_floor(&m[i][t], &p);
            if q != 0 {
                row_axpy(&mut m, i, t, -q);
            }
            if m[i][t] != 0 {
                clean = false;
            }
        }
        for j in t + 1..ncols {
            let q = Integer::div_floor(&m[t][j], &p);
            if q != 0 {
                for row in m.iter_mut() {
                    row[j] -= q * row[t];
                }
            }
            if m[t][j] != 0 {
                clean = false;
            }
        }
        if !clean {
            continue;
        }
        // divisibility: fold any entry not divisible by p into row t
        if let Some(i) = (t + 1..rows).find(|&i| (t + 1..ncols).any(|j| m[i][j] % p != 0)) {
            row_axpy(&mut m, t, i, 1);
            continue;
        }
        diag.push(p.abs());
        t += 1;
    }
    diag
}

/// Saturation `(L ⊗ Q) ∩ Z^n` of the lattice spanned by independent rows, with the index.
pub fn saturate(basis: &[Vec<i64>], n: usize) -> Result<(Matrix, i64), DependentRows> {
    if rank(basis, n) != basis.len() {
        return Err(DependentRows);
    }
    let annihilator = right_kernel(basis, n);
    let sat = if annihilator.is_empty() {
        identity(n)
    } else {
        right_kernel(&annihilator, n)
    };
    let index = smith_invariants(basis, n).iter().product::<i64>();
    Ok((hnf(&sat, n), index))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DependentRows;

/// Decides whether some linear functional is strictly positive on every vector,
/// by Fourier–Motzkin elimination on `v_i · f ≥ 1`.
pub fn in_open_half_space(vectors: &[Vec<i64>]) -> bool {
    let Some(dim) = vectors.first().map(Vec::len) else {
        return true;
    };
    if rank(vectors, dim) == vectors.len() {
        return true;
    }
    let mut ineqs: Vec<(Vec<i128>, i128)> = vectors
        .iter()
        .map(|v| (v.iter().map(|&x| i128::from(x)).collect(), 1))
        .collect();
    for var in 0..dim {
        let (mut pos, mut neg, mut zero) = (Vec::new(), Vec::new(), Vec::new());
        for ineq in ineqs {
            match ineq.0[var].signum() {
                1 => pos.push(ineq),
                -1 => neg.push(ineq),
                _ => zero.push(ineq),
            }
        }
        for (pa, pb) in &pos {
            for (na, nb) in &neg {
                let (cp, cn) = (pa[var], -na[var]);
                let a: Vec<i128> = pa.iter().zip(na).map(|(x, y)| x * cn + y * cp).collect();
                let b = pb * cn + nb * cp;
                zero.push(normalize_ineq(a, b));
            }
        }
        zero.sort();
        zero.dedup();
        ineqs = zero;
    }
    ineqs.iter().all(|(_, b)| *b <= 0)
}

fn normalize_ineq(a: Vec<i128>, b: i128) -> (Vec<i128>, i128) {
    let g = a.iter().fold(b.abs(), |g, x| g.gcd(x));
    if g > 1 {
        (a.iter().map(|x| x / g).collect(), b / g)
    } else {
        (a, b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hnf_and_membership() {
        let b = vec![vec![1, 1], vec![1, -1]];
        assert!(in_lattice(&b, &[2, 0]));
        assert!(!in_lattice(&b, &[1, 0]));
        assert_eq!(solve_in_lattice(&b, &[3, 1]), Some(vec![2, 1]));
    }

    #[test]
    fn saturation_index() {
        let (sat, idx) = saturate(&[vec![2]], 1).unwrap();
        assert_eq!((sat, idx), (vec![vec![1]], 2));
        let (_, idx) = saturate(&[vec![1, 1], vec![1, -1]], 2).unwrap();
        assert_eq!(idx, 2);
        let (sat, idx) = saturate(&[vec![2, 4, 0]], 3).unwrap();
        assert_eq!((sat, idx), (vec![vec![1, 2, 0]], 2));
        assert_eq!(saturate(&[vec![1, 2], vec![2, 4]], 2), Err(DependentRows));
    }

    #[test]
    fn kernels() {
        let k = right_kernel(&[vec![1, -1, 0]], 3);
        assert_eq!(k.len(), 2);
        for v in &k {
            assert_eq!(v[0], v[1]);
        }
        assert!(right_kernel(&identity(3), 3).is_empty());
    }

    #[test]
    fn determinant_and_definiteness() {
        assert_eq!(det(&[vec![2, -1], vec![-1, 2]]), 3);
        assert_eq!(det(&[vec![0, 1], vec![1, 0]]), -1);
        assert!(is_positive_definite(&[vec![2, -1], vec![-1, 2]]));
        assert!(!is_positive_definite(&[vec![2, -2], vec![-2, 2]]));
    }

    #[test]
    fn smith() {
        assert_eq!(smith_invariants(&[vec![2, 0], vec![0, 3]], 2), vec![1, 6]);
        assert_eq!(smith_invariants(&[vec![2, 4], vec![6, 8]], 2), vec![2, 4]);
    }

    #[test]
    fn half_space() {
        assert!(in_open_half_space(&[vec![1, 0], vec![0, 1], vec![1, 1]]));
        assert!(!in_open_half_space(&[vec![1, 0], vec![-1, 0]]));
        assert!(!in_open_half_space(&[vec![1, 0], vec![0, 1], vec![-1, -1]]));
    }
}
