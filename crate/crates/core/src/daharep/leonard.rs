//! The finite blocks V_{i,k} and the Leonard-pair checks on them.

use nalgebra::{DMatrix, SymmetricEigen};

use crate::exactalg::{Exact, RatFunc, Scalars};
use crate::opexpr::{Failure, Mode, VerificationReport};
use crate::skeinmod::{Basis, DumbbellAction, Loop, LoopAction, SkeinVector, Truncation};
use crate::Error;

/// Relative gap below which two numeric eigenvalues count as colliding.
const GAP_GUARD: f64 = 1e-6;

/// Dense matrix of exact entries, indexed [row][column].
pub type Matrix = Vec<Vec<RatFunc>>;

/// V_{i,k} = span of m(i, 2j, k), 0 ≤ j ≤ min(i,k).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FiniteBlock {
    pub i: i64,
    pub k: i64,
}

impl FiniteBlock {
    pub fn new(i: i64, k: i64) -> Self {
        FiniteBlock { i, k }
    }

    pub fn dim(&self) -> usize {
        (1 + self.i.min(self.k)) as usize
    }

    pub fn vectors(&self) -> Vec<[i64; 3]> {
        (0..self.dim() as i64).map(|j| [self.i, 2 * j, self.k]).collect()
    }
}

/// Matrices of A2 and X on a block: entry [r][c] is the coefficient of vector r in the
/// image of vector c.
pub fn leonard_matrices(b: FiniteBlock) -> Result<(Matrix, Matrix), Error> {
    let vecs = b.vectors();
    let action = DumbbellAction::default();
    let trunc = Truncation::new((b.i + b.k) as u32 + 2 * b.dim() as u32 + 4);
    let mut mats = Vec::new();
    for lp in [Loop::A2, Loop::X] {
        let mut m = vec![vec![RatFunc::zero(); vecs.len()]; vecs.len()];
        for (c, t) in vecs.iter().enumerate() {
            let img = action.apply(&Exact, lp, &SkeinVector::basis_element(&Exact, Basis::Dumbbell, *t)?, trunc)?;
            for (key, x) in &img.entries {
                let r = vecs.iter().position(|v| v == key).ok_or_else(|| Error::Invalid(format!("{lp} leaves the block at {key:?}")))?;
                m[r][c] = x.clone();
            }
        }
        mats.push(m);
    }
    let x = mats.pop().expect("two matrices");
    Ok((mats.pop().expect("two matrices"), x))
}

/// Violations of irreducible tridiagonality: nonzero entries off the band and vanishing
/// sub- or super-diagonal entries.
pub fn tridiagonal_defects<T>(m: &[Vec<T>], is_zero: impl Fn(&T) -> bool) -> Vec<String> {
    let mut out = Vec::new();
    for (r, row) in m.iter().enumerate() {
        for (c, x) in row.iter().enumerate() {
            let gap = r.abs_diff(c);
            if gap > 1 && !is_zero(x) {
                out.push(format!("entry ({r},{c}) off the band is nonzero"));
            }
            if gap == 1 && is_zero(x) {
                out.push(format!("entry ({r},{c}) next to the diagonal vanishes"));
            }
        }
    }
    out
}

/// Defects of X in the A2 eigenbasis, and whether the tridiagonal ordering is the
/// eigenvalue ordering (up to reversal).
fn numeric(a: &[Vec<RatFunc>], x: &[Vec<RatFunc>], s: f64, tol: f64) -> Result<(Vec<String>, bool), String> {
    let n = a.len();
    let av = DMatrix::from_fn(n, n, |r, c| a[r][c].eval_f64(s));
    let xv: Vec<f64> = (0..n).map(|r| x[r][r].eval_f64(s)).collect();
    // D A D⁻¹ is symmetric when d_{r+1}/d_r = sqrt(a_{r,r+1}/a_{r+1,r})
    let mut d = vec![1.0; n];
    for r in 0..n.saturating_sub(1) {
        let (up, down) = (av[(r, r + 1)], av[(r + 1, r)]);
        if up * down <= 0.0 {
            return Err(format!("off-diagonal pair {r} has non-positive product {}", up * down));
        }
        d[r + 1] = d[r] * (up / down).sqrt();
    }
    let sym = DMatrix::from_fn(n, n, |r, c| d[r] * av[(r, c)] / d[c]);
    let sym = (&sym + sym.transpose()) * 0.5;
    let eig = SymmetricEigen::new(sym);
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&p, &q| eig.eigenvalues[p].total_cmp(&eig.eigenvalues[q]));
    let scale_a = eig.eigenvalues.iter().fold(0.0f64, |m, v| m.max(v.abs())).max(1.0);
    for w in order.windows(2) {
        if (eig.eigenvalues[w[1]] - eig.eigenvalues[w[0]]).abs() < GAP_GUARD * scale_a {
            return Err("A2 eigenvalues collide numerically; resample s".into());
        }
    }
    let v = DMatrix::from_fn(n, n, |r, c| eig.eigenvectors[(r, order[c])]);
    // X commutes with D, so its matrix in the A2 eigenbasis D⁻¹V is VᵀXV
    let xm = v.transpose() * DMatrix::from_diagonal(&nalgebra::DVector::from_vec(xv.clone())) * &v;
    let scale = xv.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    let small = |e: f64| e.abs() <= tol * scale;
    let path = path_order(n, |r, c| !small(xm[(r, c)]));
    let perm = path.unwrap_or_else(|| (0..n).collect());
    let monotone = perm.windows(2).all(|w| w[1] == w[0] + 1) || perm.windows(2).all(|w| w[0] == w[1] + 1);
    let rows: Vec<Vec<f64>> = perm.iter().map(|&r| perm.iter().map(|&c| xm[(r, c)]).collect()).collect();
    Ok((tridiagonal_defects(&rows, |e| small(*e)), monotone))
}

/// An ordering of 0..n along which the graph with the given edges is a path, if any.
/// A Leonard pair only asks for tridiagonality in some ordering of the eigenbasis.
fn path_order(n: usize, edge: impl Fn(usize, usize) -> bool) -> Option<Vec<usize>> {
    let nbrs: Vec<Vec<usize>> = (0..n).map(|r| (0..n).filter(|&c| c != r && edge(r, c)).collect()).collect();
    if n == 1 {
        return Some(vec![0]);
    }
    let start = (0..n).find(|&r| nbrs[r].len() == 1)?;
    let mut order = vec![start];
    while order.len() < n {
        let last = *order.last().expect("nonempty");
        let next = nbrs[last].iter().copied().find(|c| !order.contains(c))?;
        order.push(next);
    }
    Some(order)
}

/// A2 and X form a Leonard pair on V_{i,k}: exactly, A2 is irreducible tridiagonal and X
/// diagonal with distinct eigenvalues; numerically at s, X is irreducible tridiagonal in
/// the A2 eigenbasis.
pub fn leonard_check(i: i64, k: i64, s: f64, tol: f64) -> VerificationReport {
    let mut report = VerificationReport::new(format!("leonard i={i} k={k}"), Mode::Exact);
    if i.min(k) < 0 || s <= 1.0 {
        report.error = Some("need i, k >= 0 and s > 1".into());
        return report;
    }
    let (a, x) = match leonard_matrices(FiniteBlock::new(i, k)) {
        Ok(m) => m,
        Err(e) => {
            report.error = Some(e.to_string());
            return report;
        }
    };
    let n = a.len();
    report.checked += 1;
    for d in tridiagonal_defects(&a, RatFunc::is_zero) {
        report.fail(Failure::new(format!("A2: {d}"), "", "irreducible tridiagonal"));
    }
    for r in 0..n {
        for c in 0..n {
            report.checked += 1;
            let ok = if r == c { true } else { x[r][c].is_zero() };
            if !ok {
                report.fail(Failure::new(format!("X entry ({r},{c})"), x[r][c].to_string(), "0"));
            }
            if r < c {
                report.checked += 1;
                if Exact.eq(&x[r][r], &x[c][c]) {
                    report.fail(Failure::new(format!("X eigenvalues {r},{c}"), x[r][r].to_string(), "distinct"));
                }
            }
        }
    }
    report.checked += 1;
    match numeric(&a, &x, s, tol) {
        Ok((defects, monotone)) => {
            if !monotone {
                report.note("X is tridiagonal only after reordering the A2 eigenvalues");
            }
            for d in defects {
                report.fail(Failure::new(format!("X in the A2 eigenbasis at s = {s}: {d}"), "", "irreducible tridiagonal"));
            }
        }
        Err(e) => report.error = Some(e),
    }
    report
}

/// Zeroing one super-diagonal entry of the exact A2 block must be detected.
pub fn leonard_control(i: i64, k: i64) -> VerificationReport {
    let mut report = VerificationReport::new(format!("control: leonard i={i} k={k} with a zeroed off-diagonal"), Mode::Exact);
    match leonard_matrices(FiniteBlock::new(i, k)) {
        Ok((mut a, _)) if a.len() > 1 => {
            a[0][1] = RatFunc::zero();
            report.checked = 1;
            if tridiagonal_defects(&a, RatFunc::is_zero).is_empty() {
                report.fail(Failure::new("zeroed entry", "accepted", "rejected"));
            }
        }
        Ok(_) => report.error = Some("block has dimension 1".into()),
        Err(e) => report.error = Some(e.to_string()),
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn block_shapes() {
        let b = FiniteBlock::new(3, 3);
        assert_eq!(b.dim(), 4);
        let (a, x) = leonard_matrices(b).unwrap();
        assert!(tridiagonal_defects(&a, RatFunc::is_zero).is_empty());
        for (j, row) in x.iter().enumerate() {
            let e = RatFunc::s_pow(4 * j as i32 + 2).add(&RatFunc::s_pow(-4 * j as i32 - 2)).neg();
            assert!(row[j].equals(&e));
        }
    }

    #[test]
    fn leonard_small() {
        for (i, k) in [(1, 5), (3, 3), (2, 4)] {
            let r = leonard_check(i, k, 1.17, 1e-8);
            assert!(r.passed(), "{i} {k} {:?} {:?}", r.failures, r.error);
        }
        assert!(leonard_control(3, 3).passed());
        assert!(leonard_check(0, 3, 1.17, 1e-8).passed());
        assert!(!leonard_check(-1, 3, 1.17, 1e-8).passed());
    }
}
