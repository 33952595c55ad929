use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_integer::Integer;

use crate::arith::{factorize, mod_inv, units};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// An exact element of a cyclotomic field `Q(ζ_n)`.
///
/// Values are stored at their minimal level `n` (never `2 mod 4`) as a dense
/// coefficient vector over the exponents `0..n`, nonzero only on the
/// Zumbroich basis of `Q(ζ_n)`. The representation is unique, so equality and
/// hashing are structural.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Cyclotomic<T> {
    level: u32,
    coeffs: Vec<T>,
}

impl<T: Scalar> Cyclotomic<T> {
    pub fn zero() -> Self {
        Self::from_scalar(T::zero())
    }

    pub fn one() -> Self {
        Self::from_scalar(T::one())
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_scalar(T::from_int(n))
    }

    pub fn from_scalar(q: T) -> Self {
        Cyclotomic {
            level: 1,
            coeffs: vec![q],
        }
    }

    /// `ζ_n^k` for any `n ≥ 1`.
    pub fn root_of_unity(n: u32, k: i64) -> Self {
        Self::from_exponent_sum(n, [(k, T::one())])
    }

    /// `Σ c·ζ_n^k` over the given `(k, c)` terms, for any `n ≥ 1`.
    pub fn from_exponent_sum(n: u32, terms: impl IntoIterator<Item = (i64, T)>) -> Self {
        assert!(n >= 1, "root-of-unity order must be positive");
        // ζ_{2m} = -ζ_m^{(m+1)/2} for odd m, so such levels fold down to m.
        let (level, fold) = if n % 4 == 2 { (n / 2, true) } else { (n, false) };
        let len = level as usize;
        let mut coeffs = vec![T::zero(); len];
        for (k, c) in terms {
            let k = k.rem_euclid(n as i64) as usize;
            let (e, c) = if !fold {
                (k, c)
            } else if k % 2 == 0 {
                (k / 2, c)
            } else {
                ((k + len) / 2 % len, -c)
            };
            coeffs[e] = coeffs[e].clone() + c;
        }
        Self::canonical(level, coeffs)
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn is_zero(&self) -> bool {
        self.level == 1 && self.coeffs[0].is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.level == 1
    }

    pub fn to_scalar(&self) -> Option<T> {
        self.is_rational().then(|| self.coeffs[0].clone())
    }

    /// Nonzero `(exponent, coefficient)` pairs in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (u32, &T)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(e, c)| (e as u32, c))
    }

    pub fn scale(&self, q: &T) -> Self {
        if q.is_zero() {
            return Self::zero();
        }
        Cyclotomic {
            level: self.level,
            coeffs: self.coeffs.iter().map(|c| c.clone() * q.clone()).collect(),
        }
    }

    /// Applies `σ_k : ζ ↦ ζ^k`. `k` must be a unit modulo the level.
    pub fn galois(&self, k: i64) -> Result<Self> {
        let n = self.level as i64;
        let k_red = k.rem_euclid(n);
        if n > 1 && k_red.gcd(&n) != 1 {
            return Err(Error::NotAUnit {
                k,
                level: self.level,
            });
        }
        if n == 1 {
            return Ok(self.clone());
        }
        let mut coeffs = vec![T::zero(); n as usize];
        for (j, c) in self.terms() {
            coeffs[(j as i64 * k_red % n) as usize] = c.clone();
        }
        Ok(Self::canonical(self.level, coeffs))
    }

    /// Complex conjugation, i.e. `σ_{-1}`.
    pub fn conj(&self) -> Self {
        self.galois(-1).expect("-1 is always a unit")
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some(q) = self.to_scalar() {
            return Ok(Self::from_scalar(T::one() / q));
        }
        // x⁻¹ = (Π_{σ≠1} σ(x)) / N(x)
        let mut others = Self::one();
        for k in units(self.level as u64).into_iter().skip(1) {
            others = &others * &self.galois(k as i64)?;
        }
        let norm = (self * &others)
            .to_scalar()
            .expect("field norm is rational");
        Ok(others.scale(&(T::one() / norm)))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        Ok(self * &other.inv()?)
    }

    /// The same value written over the exponents of level `target`
    /// (a multiple of the current level), not yet reduced to the basis.
    fn embed(&self, target: u32) -> Vec<T> {
        let factor = (target / self.level) as usize;
        let mut out = vec![T::zero(); target as usize];
        for (j, c) in self.terms() {
            out[j as usize * factor] = c.clone();
        }
        out
    }

    fn canonical(level: u32, mut coeffs: Vec<T>) -> Self {
        reduce_to_basis(level, &mut coeffs);
        let (level, coeffs) = shrink(level, coeffs);
        Cyclotomic { level, coeffs }
    }
}

/// Rewrites a coefficient vector over `Z/level` so that only Zumbroich basis
/// exponents carry weight.
fn reduce_to_basis<T: Scalar>(level: u32, v: &mut [T]) {
    let n = level as usize;
    debug_assert!(n % 4 != 2);
    for (p, e) in factorize(level as u64) {
        let p = p as usize;
        let pe = p.pow(e);
        let inv = mod_inv(((n / pe) % pe) as u64, pe as u64).unwrap() as usize;
        let step = n / p;
        let top = pe / p;
        for j in 0..n {
            if v[j].is_zero() {
                continue;
            }
            let a = (j * inv) % pe;
            if p == 2 {
                if a >= top {
                    let c = std::mem::replace(&mut v[j], T::zero());
                    let t = (j + step) % n;
                    v[t] = v[t].clone() - c;
                }
            } else if a / top == 0 {
                let c = std::mem::replace(&mut v[j], T::zero());
                for b in 1..p {
                    let t = (j + b * step) % n;
                    v[t] = v[t].clone() - c.clone();
                }
            }
        }
    }
}

/// Lowers a basis-reduced vector to the smallest level that contains it.
fn shrink<T: Scalar>(mut level: u32, mut v: Vec<T>) -> (u32, Vec<T>) {
    'outer: loop {
        let n = level as usize;
        for (p, e) in factorize(level as u64) {
            let p = p as usize;
            let support_divisible = |d: usize| v.iter().enumerate().all(|(j, c)| c.is_zero() || j % d == 0);
            let lowered = if p == 2 && e == 2 {
                support_divisible(4).then_some((4, None))
            } else if e >= 2 {
                support_divisible(p).then_some((p, None))
            } else {
                // p odd and exactly dividing: the coefficients over each fibre
                // of Z/n → Z/(n/p) must agree.
                let mp = n / p;
                let uniform = (0..n).step_by(p).all(|j0| {
                    let c = &v[(j0 + mp) % n];
                    (2..p).all(|t| v[(j0 + t * mp) % n] == *c)
                });
                uniform.then_some((p, Some(mp)))
            };
            if let Some((d, fibre)) = lowered {
                let new_n = n / d;
                let mut w = vec![T::zero(); new_n];
                match fibre {
                    None => {
                        for (j, c) in v.into_iter().enumerate() {
                            if !c.is_zero() {
                                w[j / d] = c;
                            }
                        }
                    }
                    Some(mp) => {
                        for j0 in (0..n).step_by(p) {
                            w[j0 / p] = -v[(j0 + mp) % n].clone();
                        }
                    }
                }
                level = new_n as u32;
                v = w;
                continue 'outer;
            }
        }
        return (level, v);
    }
}

fn combine<T: Scalar>(a: &Cyclotomic<T>, b: &Cyclotomic<T>, f: impl Fn(T, T) -> T) -> Cyclotomic<T> {
    let level = a.level.lcm(&b.level);
    let va = a.embed(level);
    let vb = b.embed(level);
    let v = va.into_iter().zip(vb).map(|(x, y)| f(x, y)).collect();
    Cyclotomic::canonical(level, v)
}

impl<T: Scalar> Add for &Cyclotomic<T> {
    type Output = Cyclotomic<T>;
    fn add(self, rhs: Self) -> Cyclotomic<T> {
        if self.is_rational() && rhs.is_rational() {
            return Cyclotomic::from_scalar(self.coeffs[0].clone() + rhs.coeffs[0].clone());
        }
        combine(self, rhs, |x, y| x + y)
    }
}

impl<T: Scalar> Sub for &Cyclotomic<T> {
    type Output = Cyclotomic<T>;
    fn sub(self, rhs: Self) -> Cyclotomic<T> {
        combine(self, rhs, |x, y| x - y)
    }
}

impl<T: Scalar> Mul for &Cyclotomic<T> {
    type Output = Cyclotomic<T>;
    fn mul(self, rhs: Self) -> Cyclotomic<T> {
        if let Some(q) = self.to_scalar() {
            return rhs.scale(&q);
        }
        if let Some(q) = rhs.to_scalar() {
            return self.scale(&q);
        }
        let level = self.level.lcm(&rhs.level);
        let n = level as usize;
        let fa = n / self.level as usize;
        let fb = n / rhs.level as usize;
        let mut v = vec![T::zero(); n];
        for (i, x) in self.terms() {
            for (j, y) in rhs.terms() {
                let e = (i as usize * fa + j as usize * fb) % n;
                v[e] = v[e].clone() + x.clone() * y.clone();
            }
        }
        Cyclotomic::canonical(level, v)
    }
}

impl<T: Scalar> Neg for &Cyclotomic<T> {
    type Output = Cyclotomic<T>;
    fn neg(self) -> Cyclotomic<T> {
        Cyclotomic {
            level: self.level,
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<T: Scalar> $tr for Cyclotomic<T> {
            type Output = Cyclotomic<T>;
            fn $m(self, rhs: Self) -> Cyclotomic<T> {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<T: Scalar> Neg for Cyclotomic<T> {
    type Output = Cyclotomic<T>;
    fn neg(self) -> Cyclotomic<T> {
        -&self
    }
}

impl<T: Scalar> std::iter::Sum for Cyclotomic<T> {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |acc, x| &acc + &x)
    }
}

/// Renders `a0 + a1*z(n)^1 + …` over the canonical basis exponents.
impl<T: Scalar> fmt::Display for Cyclotomic<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_rational() {
            return write!(f, "{}", self.coeffs[0]);
        }
        let mut first = true;
        for (e, c) in self.terms() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if e == 0 {
                write!(f, "{c}")?;
            } else {
                write!(f, "{c}*z({})^{e}", self.level)?;
            }
        }
        Ok(())
    }
}

impl<T: Scalar> FromStr for Cyclotomic<T> {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |what: &str| Error::Parse(format!("{what} in cyclotomic literal {s:?}"));
        let mut acc = Self::zero();
        for term in s.split('+') {
            let term = term.trim();
            if term.is_empty() {
                return Err(bad("empty term"));
            }
            let (coeff, root) = match term.find("z(") {
                None => (term, None),
                Some(pos) => {
                    let head = term[..pos].trim_end_matches('*').trim();
                    (head, Some(&term[pos..]))
                }
            };
            let c = match coeff {
                "" => T::one(),
                "-" => -T::one(),
                _ => coeff.parse::<T>().map_err(|_| bad("bad coefficient"))?,
            };
            let value = match root {
                None => Self::from_scalar(c),
                Some(r) => {
                    let close = r.find(')').ok_or_else(|| bad("unclosed z("))?;
                    let n: u32 = r[2..close].trim().parse().map_err(|_| bad("bad level"))?;
                    if n == 0 {
                        return Err(bad("zero level"));
                    }
                    let rest = r[close + 1..].trim();
                    let k: i64 = if rest.is_empty() {
                        1
                    } else {
                        rest.strip_prefix('^')
                            .ok_or_else(|| bad("expected ^"))?
                            .trim()
                            .parse()
                            .map_err(|_| bad("bad exponent"))?
                    };
                    Self::from_exponent_sum(n, [(k, c)])
                }
            };
            acc = &acc + &value;
        }
        Ok(acc)
    }
}
