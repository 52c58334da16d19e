//! Intertwiners from polynomial representations onto the dumbbell module.

use crate::exactalg::Scalars;
use crate::opexpr::{label, run_check, Check, CheckOutcome, Failure, Mode, VerificationReport};
use crate::skeinmod::{a_eigenvalue, Basis, DumbbellAction, Loop, LoopAction, SkeinVector, Triple, Truncation};
use crate::Error;

use super::{Constants, DahaParams, DahaRep, XLaurent};

type Vector<K> = SkeinVector<<K as Scalars>::Elem>;

/// gⁿ·m₀ for n = 0..=count.
fn orbit<K: Scalars>(k: &K, g: Loop, m0: Triple, count: usize, trunc: Truncation) -> Result<Vec<Vector<K>>, Error> {
    let action = DumbbellAction::default();
    let mut out = vec![SkeinVector::basis_element(k, Basis::Dumbbell, m0)?];
    for n in 0..count {
        let next = action.apply(k, g, &out[n], trunc)?;
        out.push(next);
    }
    Ok(out)
}

/// φ(f) for f = Σ cₙxⁿ·1, where φ(xⁿ·1) = images[n].
fn image_of<K: Scalars>(k: &K, f: &XLaurent<K::Elem>, images: &[Vector<K>]) -> Result<Vector<K>, Error> {
    let coeffs = f.to_x_basis(k)?;
    if coeffs.len() > images.len() {
        return Err(Error::Invalid(format!("degree {} exceeds the precomputed orbit", coeffs.len() - 1)));
    }
    let mut out = SkeinVector::zero(Basis::Dumbbell);
    for (c, v) in coeffs.iter().zip(images) {
        out.axpy(k, c, v);
    }
    Ok(out)
}

fn compare_vectors<K: Scalars>(k: &K, out: &mut CheckOutcome, what: String, lhs: &Vector<K>, rhs: &Vector<K>) {
    out.checked += 1;
    if let Some((key, a, b)) = lhs.differences(k, rhs).into_iter().next() {
        out.failures.push(Failure::new(format!("{what} at {}", label(Basis::Dumbbell, key)), k.render(&a), k.render(&b)));
    }
}

/// Checks φ(y·xⁿ·1) = loop·φ(xⁿ·1) for n ≤ degree, where φ(xⁿ·1) = images[n].
fn intertwines<K: Scalars>(
    k: &K,
    out: &mut CheckOutcome,
    rep: &DahaRep<K>,
    images: &[Vector<K>],
    lp: Loop,
    degree: usize,
    trunc: Truncation,
) -> Result<(), Error> {
    let action = DumbbellAction::default();
    for n in 0..=degree {
        let yx = rep.y(&XLaurent::x_power(k, n as u32))?;
        let lhs = image_of(k, &yx, images)?;
        let rhs = action.apply(k, lp, &images[n], trunc)?;
        compare_vectors(k, out, format!("y x^{n}"), &lhs, &rhs);
    }
    Ok(())
}

struct Sigma11 {
    j: i64,
    k: i64,
    degree: usize,
}

impl Check for Sigma11 {
    fn run<K: Scalars>(&self, k: &K) -> Result<CheckOutcome, Error> {
        let mut out = CheckOutcome::default();
        let rep = DahaRep::new(k, &DahaParams::sigma11(self.j), Constants::Working)?;
        let i0 = self.j / 2;
        let m0 = [i0, self.j, self.k];
        let trunc = Truncation::new((i0 + self.j + self.k) as u32 + 2 * self.degree as u32 + 6);
        let images = orbit(k, Loop::B12, m0, self.degree + 1, trunc)?;
        let y1 = rep.y(&XLaurent::constant(k, k.one()))?;
        out.checked += 1;
        let ev = a_eigenvalue(k, i0);
        if !k.eq(y1.get(0).unwrap_or(&k.zero()), &ev) {
            out.failures.push(Failure::new("y 1 against the A1 eigenvalue on m0", y1.render(k), k.render(&ev)));
        }
        intertwines(k, &mut out, &rep, &images, Loop::A1, self.degree, trunc)?;
        for (n, v) in images.iter().enumerate().take(self.degree + 1) {
            let top = i0 + n as i64;
            out.checked += 1;
            let lead_ok = v.get(&[top, self.j, self.k]).is_some_and(|c| k.eq(c, &k.one()));
            let bounded = v.entries.keys().all(|t| t[0] <= top && t[1] == self.j && t[2] == self.k);
            if !(lead_ok && bounded) {
                out.failures.push(Failure::new(format!("B12^{n} m0 leading term"), format!("{:?}", v.entries.keys().collect::<Vec<_>>()), label(Basis::Dumbbell, [top, self.j, self.k])));
            }
        }
        Ok(out)
    }
}

/// φ: xⁿ·1 ↦ B12ⁿ·m(j/2, j, k) from the A₁ representation at q = s, t = −s^{−j−2}:
/// φ(y·v) = A1·φ(v) and B12ⁿ·m₀ has leading term m(j/2+n, j, k), for n ≤ degree.
pub fn intertwiner_sigma11(j: i64, k: i64, degree: u32, mode: &Mode) -> VerificationReport {
    let name = format!("intertwiner sigma11 j={j} k={k}");
    if j < 0 || j % 2 != 0 || 2 * k < j {
        let mut r = VerificationReport::new(name, mode.clone());
        r.error = Some("need j even and k >= j/2".into());
        return r;
    }
    run_check(&name, mode, &["s"], &Sigma11 { j, k, degree: degree as usize })
}

struct Sigma04 {
    i: i64,
    k: i64,
}

impl Check for Sigma04 {
    fn run<K: Scalars>(&self, k: &K) -> Result<CheckOutcome, Error> {
        let mut out = CheckOutcome::default();
        let (i, l) = (self.i, self.k);
        let rep = DahaRep::new(k, &DahaParams::eq_params(i, l), Constants::Working)?;
        let m0 = [i, 0, l];
        let low = i.min(l);
        let degree = (low + 3) as usize;
        let trunc = Truncation::new((i + l) as u32 + 2 * degree as u32 + 6);
        let images = orbit(k, Loop::A2, m0, degree, trunc)?;
        let io = k.iota();
        let params = [
            ("a1", k.mul(&io, &rep.tbar[0]), a_eigenvalue(k, i)),
            ("a2", k.mul(&io, &rep.tbar[1]), a_eigenvalue(k, l)),
            ("a3", k.mul(&io, &rep.tbar[3]), a_eigenvalue(k, l)),
            ("a4", k.mul(&io, &rep.qt3bar), a_eigenvalue(k, i)),
        ];
        for (name, daha, skein) in params {
            out.checked += 1;
            if !k.eq(&daha, &skein) {
                out.failures.push(Failure::new(format!("{name} parameter"), k.render(&daha), k.render(&skein)));
            }
        }
        let y1 = rep.y(&XLaurent::constant(k, k.one()))?;
        let base = k.neg(&k.add(&k.s_pow(2), &k.s_pow(-2)));
        out.checked += 1;
        if !k.eq(y1.get(0).unwrap_or(&k.zero()), &base) || y1.degree() != 0 {
            out.failures.push(Failure::new("x2 1", y1.render(k), k.render(&base)));
        }
        intertwines(k, &mut out, &rep, &images, Loop::X, degree - 1, trunc)?;
        for (n, v) in images.iter().enumerate() {
            out.checked += 1;
            let inside = v.entries.keys().all(|t| t[0] == i && t[2] == l);
            let n = n as i64;
            let spans = n > low || (v.get(&[i, 2 * n, l]).is_some() && v.entries.keys().all(|t| t[1] <= 2 * n));
            if !(inside && spans) {
                out.failures.push(Failure::new(format!("A2^{n} m0 in V({i},{l})"), format!("{:?}", v.entries.keys().collect::<Vec<_>>()), "leading term m(i,2n,k)"));
            }
        }
        Ok(out)
    }
}

/// φ: x₁ⁿ·1 ↦ A2ⁿ·m(i,0,k) from the (C∨₁,C₁) representation at the parameters of the
/// block V_{i,k}: φ(x₂·v) = X·φ(v) for n < min(i,k) + 3, agreement of the four
/// a-parameters with the A-loop eigenvalues, and surjectivity onto V_{i,k}.
pub fn intertwiner_sigma04(i: i64, k: i64, mode: &Mode) -> VerificationReport {
    let name = format!("intertwiner sigma04 i={i} k={k}");
    if i < 0 || k < 0 {
        let mut r = VerificationReport::new(name, mode.clone());
        r.error = Some("need i, k >= 0".into());
        return r;
    }
    run_check(&name, mode, &["s"], &Sigma04 { i, k })
}

struct Coverage {
    bound: i64,
}

impl Check for Coverage {
    fn run<K: Scalars>(&self, k: &K) -> Result<CheckOutcome, Error> {
        let mut out = CheckOutcome::default();
        let action = DumbbellAction::default();
        let trunc = Truncation::new(self.bound as u32 + 2);
        for t in Basis::Dumbbell.elements(self.bound) {
            let [i, j, l] = t;
            let blocks = (0..=i.min(l)).filter(|h| 2 * h == j).count();
            out.checked += 1;
            if blocks != 1 {
                out.failures.push(Failure::new(format!("{} lies in {blocks} blocks", label(Basis::Dumbbell, t)), blocks.to_string(), "1"));
            }
            let v = SkeinVector::basis_element(k, Basis::Dumbbell, t)?;
            for lp in [Loop::A2, Loop::X] {
                let w = action.apply(k, lp, &v, trunc)?;
                out.checked += 1;
                if !w.entries.keys().all(|s| s[0] == i && s[2] == l) {
                    out.failures.push(Failure::new(format!("{lp} {} leaves V({i},{l})", label(Basis::Dumbbell, t)), format!("{:?}", w.entries.keys().collect::<Vec<_>>()), "same (i,k)"));
                }
            }
        }
        for i in 0..=self.bound / 2 {
            for l in 0..=self.bound / 2 {
                let evs: Vec<K::Elem> = (0..=i.min(l)).map(|h| a_eigenvalue(k, 2 * h)).collect();
                for a in 0..evs.len() {
                    for b in a + 1..evs.len() {
                        out.checked += 1;
                        if k.eq(&evs[a], &evs[b]) {
                            out.failures.push(Failure::new(format!("X eigenvalues {a},{b} in V({i},{l})"), k.render(&evs[a]), "distinct"));
                        }
                    }
                }
            }
        }
        Ok(out)
    }
}

/// Every m(i,j,k) lies in exactly one block V_{i,k}, A2 and X preserve the blocks, and
/// the X eigenvalues within each block are pairwise distinct.
pub fn verify_block_coverage(bound: u32, mode: &Mode) -> VerificationReport {
    run_check("block coverage", mode, &["s"], &Coverage { bound: bound as i64 })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sigma11_small() {
        for (j, k) in [(0, 0), (2, 1), (2, 3)] {
            let r = intertwiner_sigma11(j, k, 4, &Mode::Exact);
            assert!(r.passed(), "{j} {k} {:?} {:?}", r.failures, r.error);
        }
    }

    #[test]
    fn sigma04_small() {
        for (i, k) in [(0, 2), (1, 1), (2, 1)] {
            let r = intertwiner_sigma04(i, k, &Mode::Exact);
            assert!(r.passed(), "{i} {k} {:?} {:?}", r.failures, r.error);
        }
    }

    #[test]
    fn coverage() {
        let r = verify_block_coverage(10, &Mode::Exact);
        assert!(r.passed(), "{:?}", r.failures);
    }
}
