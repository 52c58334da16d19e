//! An independent transcription of the loop-action coefficient tables, written against a
//! minimal arithmetic so it can run exactly or in a prime field.

use std::collections::BTreeMap;

use g2skein::exactalg::{ModP, PrimeFieldPoint, RatFunc, Scalars};
use g2skein::skeinmod::{Basis, DumbbellAction, Loop, LoopAction, ThetaAction, Triple};

pub trait Arith {
    type E: Clone + std::fmt::Debug;
    fn int(&self, n: i64) -> Self::E;
    fn add(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn neg(&self, a: &Self::E) -> Self::E;
    fn mul(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn inv(&self, a: &Self::E) -> Self::E;
    fn spow(&self, e: i64) -> Self::E;
    fn is_zero(&self, a: &Self::E) -> bool;

    fn sub(&self, a: &Self::E, b: &Self::E) -> Self::E {
        self.add(a, &self.neg(b))
    }
    fn q(&self, n: i64) -> Self::E {
        let num = self.sub(&self.spow(2 * n), &self.spow(-2 * n));
        let den = self.sub(&self.spow(2), &self.spow(-2));
        self.mul(&num, &self.inv(&den))
    }
    /// c·∏⟨num⟩/∏⟨den⟩, 0 when a denominator index is 0.
    fn ratio(&self, c: i64, num: &[i64], den: &[i64]) -> Self::E {
        if den.contains(&0) {
            return self.int(0);
        }
        let top = num.iter().fold(self.int(c), |acc, &n| self.mul(&acc, &self.q(n)));
        let bot = den.iter().fold(self.int(1), |acc, &n| self.mul(&acc, &self.q(n)));
        self.mul(&top, &self.inv(&bot))
    }
    fn a_loop(&self, n: i64) -> Self::E {
        self.neg(&self.add(&self.spow(2 * n + 2), &self.spow(-2 * n - 2)))
    }
    fn delta_sq(&self) -> Self::E {
        let d = self.sub(&self.spow(2), &self.spow(-2));
        self.mul(&d, &d)
    }
}

/// Residues modulo p with s fixed; elements match the prime-field scalar context.
pub struct Field {
    pub p: u128,
    pub s: u128,
}

impl Field {
    fn pow(&self, mut b: u128, mut e: u128) -> u128 {
        let mut r = 1;
        while e > 0 {
            if e & 1 == 1 {
                r = r * b % self.p;
            }
            b = b * b % self.p;
            e >>= 1;
        }
        r
    }

    /// The field and the matching scalar context.
    pub fn at(p: u64, s: u64) -> (Field, ModP) {
        let ctx = ModP::new(PrimeFieldPoint::new(p, [("s".to_string(), s)].into()).unwrap()).unwrap();
        (Field { p: p as u128, s: s as u128 % p as u128 }, ctx)
    }
}

impl Arith for Field {
    type E = u64;
    fn int(&self, n: i64) -> u64 {
        (n.rem_euclid(self.p as i64)) as u64
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 + *b as u128) % self.p) as u64
    }
    fn neg(&self, a: &u64) -> u64 {
        ((self.p - *a as u128 % self.p) % self.p) as u64
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        (*a as u128 * *b as u128 % self.p) as u64
    }
    fn inv(&self, a: &u64) -> u64 {
        assert!(!(*a as u128).is_multiple_of(self.p), "division by zero");
        self.pow(*a as u128, self.p - 2) as u64
    }
    fn spow(&self, e: i64) -> u64 {
        let b = if e >= 0 { self.s } else { self.pow(self.s, self.p - 2) };
        self.pow(b, e.unsigned_abs() as u128) as u64
    }
    fn is_zero(&self, a: &u64) -> bool {
        (*a as u128).is_multiple_of(self.p)
    }
}

/// Rational functions in s.
pub struct Symbolic;

impl Arith for Symbolic {
    type E = RatFunc;
    fn int(&self, n: i64) -> RatFunc {
        RatFunc::from_int(n)
    }
    fn add(&self, a: &RatFunc, b: &RatFunc) -> RatFunc {
        a.add(b)
    }
    fn neg(&self, a: &RatFunc) -> RatFunc {
        a.neg()
    }
    fn mul(&self, a: &RatFunc, b: &RatFunc) -> RatFunc {
        a.mul(b)
    }
    fn inv(&self, a: &RatFunc) -> RatFunc {
        a.inv().expect("division by zero")
    }
    fn spow(&self, e: i64) -> RatFunc {
        RatFunc::s_pow(e as i32)
    }
    fn is_zero(&self, a: &RatFunc) -> bool {
        a.is_zero()
    }
}

pub fn admissible(t: Triple) -> bool {
    let [i, j, k] = t;
    i >= 0 && j >= 0 && k >= 0 && (i + j + k) % 2 == 0 && (i - j).abs() <= k && k <= i + j
}

fn d<F: Arith>(f: &F, a: i64, b: i64, i: i64, j: i64, k: i64) -> F::E {
    match (a, b) {
        (1, 1) => f.int(1),
        (1, -1) => f.ratio(-1, &[(j + k - i) / 2, (j + k - i) / 2], &[j, j + 1]),
        (-1, 1) => f.ratio(-1, &[(i + k - j) / 2, (i + k - j) / 2], &[i, i + 1]),
        _ => {
            let (u, v) = ((i + j + k + 2) / 2, (i + j - k) / 2);
            f.ratio(1, &[u, u, v, v], &[i, i + 1, j, j + 1])
        }
    }
}

pub type Image<E> = BTreeMap<Triple, E>;

fn push<F: Arith>(f: &F, out: &mut Image<F::E>, t: Triple, c: F::E) {
    if !f.is_zero(&c) {
        out.insert(t, c);
    }
}

pub fn theta_oracle<F: Arith>(f: &F, lp: Loop, t: Triple) -> Image<F::E> {
    let [i, j, k] = t;
    let mut out = Image::new();
    match lp {
        Loop::A1 => push(f, &mut out, t, f.a_loop(i)),
        Loop::A2 => push(f, &mut out, t, f.a_loop(j)),
        Loop::A3 => push(f, &mut out, t, f.a_loop(k)),
        _ => {
            for a in [1, -1] {
                for b in [1, -1] {
                    let (c, target) = match lp {
                        Loop::B12 => (d(f, a, b, i, j, k), [i + a, j + b, k]),
                        Loop::B13 => (d(f, a, b, i, k, j), [i + a, j, k + b]),
                        _ => (d(f, a, b, j, k, i), [i, j + a, k + b]),
                    };
                    if !f.is_zero(&c) {
                        assert!(admissible(target), "{lp:?} {t:?} reaches {target:?}");
                    }
                    push(f, &mut out, target, c);
                }
            }
        }
    }
    out
}

pub fn dumbbell_oracle<F: Arith>(f: &F, lp: Loop, t: Triple) -> Image<F::E> {
    let [i, j, k] = t;
    let h = j / 2;
    let mut out = Image::new();
    match lp {
        Loop::X => push(f, &mut out, t, f.a_loop(j)),
        Loop::A1 => push(f, &mut out, t, f.a_loop(i)),
        Loop::A3 => push(f, &mut out, t, f.a_loop(k)),
        Loop::B12 => {
            push(f, &mut out, [i + 1, j, k], f.int(1));
            if i > h {
                // lower coefficient ⟨i+j/2+1⟩⟨i−j/2⟩/(⟨i⟩⟨i+1⟩)
                push(f, &mut out, [i - 1, j, k], f.ratio(1, &[i + h + 1, i - h], &[i, i + 1]));
            }
        }
        Loop::B23 => {
            push(f, &mut out, [i, j, k + 1], f.int(1));
            if k > h {
                push(f, &mut out, [i, j, k - 1], f.ratio(1, &[k + h + 1, k - h], &[k, k + 1]));
            }
        }
        Loop::A2 => {
            let d2 = f.delta_sq();
            if j > 0 {
                let down = f.ratio(-1, &[h, h, h, h, i + h + 1, k + h + 1], &[j - 1, j, j, j + 1]);
                push(f, &mut out, [i, j - 2, k], f.mul(&d2, &down));
            }
            push(f, &mut out, [i, j + 2, k], f.mul(&d2, &f.ratio(-1, &[i - h, k - h], &[])));
            let first = f.ratio(1, &[h + 1, h + 1, i - h, k - h], &[j + 1, j + 2]);
            let second = if j > 0 { f.ratio(1, &[h, h, i + h + 1, k + h + 1], &[j, j + 1]) } else { f.int(0) };
            let kc = f.mul(&d2, &f.add(&first, &second));
            let diag = f.neg(&f.add(&f.spow(-2 * (i + k + 1)), &f.spow(2 * (i + k + 1))));
            push(f, &mut out, t, f.add(&diag, &kc));
        }
        Loop::B13 => unreachable!(),
    }
    out
}

pub const DUMBBELL_LOOPS: [Loop; 6] = [Loop::X, Loop::A1, Loop::A2, Loop::A3, Loop::B12, Loop::B23];

/// Compares one action against its oracle on all basis elements up to the bound.
/// Returns the number of (element, loop) pairs compared and the mismatches.
pub fn compare_tables<K, F, A>(
    ctx: &K,
    f: &F,
    action: &A,
    loops: &[Loop],
    oracle: fn(&F, Loop, Triple) -> Image<F::E>,
    bound: i64,
) -> (usize, Vec<String>)
where
    K: Scalars,
    F: Arith<E = K::Elem>,
    A: LoopAction,
{
    let mut checked = 0;
    let mut bad = Vec::new();
    for t in action.basis().elements(bound) {
        for &lp in loops {
            let mut got: Image<F::E> = Image::new();
            for (key, c) in action.image(ctx, lp, t).unwrap() {
                let e = got.entry(key).or_insert_with(|| f.int(0));
                *e = f.add(e, &c);
            }
            got.retain(|_, c| !f.is_zero(c));
            let want = oracle(f, lp, t);
            let same = got.len() == want.len()
                && got.iter().zip(&want).all(|((ka, a), (kb, b))| ka == kb && f.is_zero(&f.sub(a, b)));
            if !same {
                bad.push(format!("{lp:?} on {}{t:?}: got {got:?}, want {want:?}", action.basis().tag()));
            }
            checked += 1;
        }
    }
    (checked, bad)
}

/// Both tables against the oracle.
pub fn compare_all<K: Scalars, F: Arith<E = K::Elem>>(ctx: &K, f: &F, bound: i64) -> (usize, Vec<String>) {
    let (a, mut bad) = compare_tables(ctx, f, &ThetaAction, &Loop::THETA, theta_oracle::<F>, bound);
    let (b, more) = compare_tables(ctx, f, &DumbbellAction::default(), &DUMBBELL_LOOPS, dumbbell_oracle::<F>, bound);
    bad.extend(more);
    (a + b, bad)
}

pub fn expected_pairs(bound: i64) -> usize {
    6 * Basis::Theta.elements(bound).len() + 6 * Basis::Dumbbell.elements(bound).len()
}
