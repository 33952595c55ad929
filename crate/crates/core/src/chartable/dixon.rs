//! Character values over a prime field from the class-multiplication
//! coefficients, lifted to exact cyclotomic values.

use num_integer::Roots;

use super::ClassData;
use crate::arith::{factorize, is_prime, mod_inv, mod_pow, mul_mod};
use crate::error::{Error, Result};
use crate::permgroup::Group;
use crate::{CycNumber, Rational};

/// Smallest prime `p ≡ 1 (mod e)` with `p > 2⌈√|G|⌉`.
pub fn dixon_prime(order: usize, exponent: usize) -> u64 {
    let root = {
        let r = (order as u64).sqrt();
        if r * r == order as u64 {
            r
        } else {
            r + 1
        }
    };
    let e = exponent as u64;
    let mut p = e + 1;
    while p <= 2 * root || !is_prime(p) {
        p += e;
    }
    p
}

fn primitive_root(p: u64) -> u64 {
    let qs: Vec<u64> = factorize(p - 1).iter().map(|&(q, _)| q).collect();
    (2..p)
        .find(|&g| qs.iter().all(|&q| mod_pow(g, (p - 1) / q, p) != 1))
        .unwrap_or(1)
}

/// Row-reduces `rows` in place and drops zero rows; every row ends up with a
/// leading 1 in a distinct column.
fn rref(mut rows: Vec<Vec<u64>>, p: u64) -> Vec<Vec<u64>> {
    let width = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for col in 0..width {
        let Some(pivot) = (r..rows.len()).find(|&i| rows[i][col] != 0) else {
            continue;
        };
        rows.swap(r, pivot);
        let inv = mod_inv(rows[r][col], p).unwrap();
        for x in rows[r].iter_mut() {
            *x = mul_mod(*x, inv, p);
        }
        for i in 0..rows.len() {
            if i != r && rows[i][col] != 0 {
                let f = rows[i][col];
                for c in 0..width {
                    let sub = mul_mod(f, rows[r][c], p);
                    rows[i][c] = (rows[i][c] + p - sub) % p;
                }
            }
        }
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    rows
}

/// Basis of `{x : A x = 0}` for a square matrix `A`.
fn nullspace(a: Vec<Vec<u64>>, p: u64) -> Vec<Vec<u64>> {
    let d = a.len();
    let reduced = rref(a, p);
    let pivots: Vec<usize> = reduced
        .iter()
        .map(|row| row.iter().position(|&x| x != 0).unwrap())
        .collect();
    (0..d)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![0; d];
            v[free] = 1;
            for (row, &pc) in reduced.iter().zip(&pivots) {
                v[pc] = (p - row[free]) % p;
            }
            v
        })
        .collect()
}

/// Characteristic polynomial, lowest coefficient first, via reduction to
/// Hessenberg form.
fn char_poly(mut h: Vec<Vec<u64>>, p: u64) -> Vec<u64> {
    let n = h.len();
    for m in 1..n {
        let Some(i) = (m..n).find(|&i| h[i][m - 1] != 0) else {
            continue;
        };
        if i != m {
            h.swap(i, m);
            for row in h.iter_mut() {
                row.swap(i, m);
            }
        }
        let inv = mod_inv(h[m][m - 1], p).unwrap();
        for i in m + 1..n {
            let u = mul_mod(h[i][m - 1], inv, p);
            if u == 0 {
                continue;
            }
            for c in 0..n {
                let sub = mul_mod(u, h[m][c], p);
                h[i][c] = (h[i][c] + p - sub) % p;
            }
            for row in h.iter_mut() {
                let add = mul_mod(u, row[i], p);
                row[m] = (row[m] + add) % p;
            }
        }
    }
    // polys[m] is the characteristic polynomial of the leading m×m block
    let mut polys: Vec<Vec<u64>> = vec![vec![1]];
    for m in 1..=n {
        let prev = &polys[m - 1];
        let mut next = vec![0; m + 1];
        let hmm = h[m - 1][m - 1];
        for (deg, &c) in prev.iter().enumerate() {
            next[deg + 1] = (next[deg + 1] + c) % p;
            next[deg] = (next[deg] + p - mul_mod(hmm, c, p)) % p;
        }
        let mut t = 1;
        for i in 1..m {
            t = mul_mod(t, h[m - i][m - i - 1], p);
            let f = mul_mod(t, h[m - i - 1][m - 1], p);
            for (deg, &c) in polys[m - i - 1].iter().enumerate() {
                next[deg] = (next[deg] + p - mul_mod(f, c, p)) % p;
            }
        }
        polys.push(next);
    }
    polys.pop().unwrap()
}

fn roots(poly: &[u64], p: u64) -> Vec<u64> {
    (0..p)
        .filter(|&x| poly.iter().rev().fold(0, |acc, &c| (mul_mod(acc, x, p) + c) % p) == 0)
        .collect()
}

struct ClassMatrices<'a> {
    g: &'a Group,
    classes: &'a [ClassData],
    class_of: &'a [usize],
}

impl ClassMatrices<'_> {
    /// `M[i][l]` = number of `x ∈ C_j` with `x⁻¹ z_l ∈ C_i`, where `z_l` is
    /// the representative of class `l`.
    fn matrix(&self, j: usize) -> Vec<Vec<u64>> {
        let k = self.classes.len();
        let mut m = vec![vec![0u64; k]; k];
        for (l, cl) in self.classes.iter().enumerate() {
            let z = cl.representative;
            for &x in &self.classes[j].members {
                let y = self.g.mul(self.g.inv(x), z);
                m[self.class_of[y]][l] += 1;
            }
        }
        m
    }
}

fn split(space: Vec<Vec<u64>>, m: &[Vec<u64>], p: u64) -> Result<Vec<Vec<Vec<u64>>>> {
    let d = space.len();
    let k = m.len();
    let pivots: Vec<usize> = space
        .iter()
        .map(|b| b.iter().position(|&x| x != 0).unwrap())
        .collect();
    let images: Vec<Vec<u64>> = space
        .iter()
        .map(|b| {
            (0..k)
                .map(|i| (0..k).fold(0, |acc, l| (acc + mul_mod(m[i][l] % p, b[l], p)) % p))
                .collect()
        })
        .collect();
    let a: Vec<Vec<u64>> = (0..d)
        .map(|s| (0..d).map(|t| images[t][pivots[s]]).collect())
        .collect();
    let mut parts = Vec::new();
    let mut total = 0;
    for lambda in roots(&char_poly(a.clone(), p), p) {
        let mut shifted = a.clone();
        for (s, row) in shifted.iter_mut().enumerate() {
            row[s] = (row[s] + p - lambda) % p;
        }
        let coords = nullspace(shifted, p);
        total += coords.len();
        let vectors: Vec<Vec<u64>> = coords
            .iter()
            .map(|c| {
                (0..k)
                    .map(|i| (0..d).fold(0, |acc, t| (acc + mul_mod(c[t], space[t][i], p)) % p))
                    .collect()
            })
            .collect();
        parts.push(rref(vectors, p));
    }
    if total != d {
        return Err(Error::Dixon(format!(
            "class matrix is not diagonalizable on an eigenspace of dimension {d}"
        )));
    }
    Ok(parts)
}

/// Irreducible characters as value vectors over the classes, unordered.
pub(super) fn dixon_characters(
    g: &Group,
    classes: &[ClassData],
    class_of: &[usize],
) -> Result<Vec<Vec<CycNumber>>> {
    let k = classes.len();
    let order = g.order() as u64;
    let e = g.exponent() as u64;
    let p = dixon_prime(g.order(), g.exponent());
    let mats = ClassMatrices { g, classes, class_of };

    let identity: Vec<Vec<u64>> = (0..k)
        .map(|i| (0..k).map(|j| u64::from(i == j)).collect())
        .collect();
    let mut spaces = vec![identity];
    for j in 1..k {
        if spaces.iter().all(|s| s.len() == 1) {
            break;
        }
        let m = mats.matrix(j);
        let mut next = Vec::new();
        for s in spaces {
            if s.len() == 1 {
                next.push(s);
            } else {
                next.extend(split(s, &m, p)?);
            }
        }
        spaces = next;
    }
    if spaces.len() != k || spaces.iter().any(|s| s.len() != 1) {
        return Err(Error::Dixon("eigenspaces did not split into lines".into()));
    }

    let omega = mod_pow(primitive_root(p), (p - 1) / e, p);
    let max_degree = order.sqrt();
    let mut chars = Vec::with_capacity(k);
    for space in spaces {
        let w = &space[0];
        if w[0] != 1 {
            return Err(Error::Dixon("central character vanishes at the identity".into()));
        }
        let h_inv: Vec<u64> = classes
            .iter()
            .map(|c| mod_inv(c.size as u64 % p, p).unwrap())
            .collect();
        let s = (0..k).fold(0, |acc, i| {
            let t = mul_mod(mul_mod(w[i], w[classes[i].inverse_class], p), h_inv[i], p);
            (acc + t) % p
        });
        let s_inv = mod_inv(s, p)
            .ok_or_else(|| Error::Dixon("degree equation is singular modulo p".into()))?;
        let d_sq = mul_mod(order % p, s_inv, p);
        let degree = (1..=max_degree)
            .find(|&d| d * d % p == d_sq && order % d == 0)
            .ok_or_else(|| Error::Dixon("no integer degree fits the modular data".into()))?;
        let theta: Vec<u64> = (0..k)
            .map(|i| mul_mod(mul_mod(w[i], degree, p), h_inv[i], p))
            .collect();

        let values = classes
            .iter()
            .map(|c| {
                let o = c.element_order as u64;
                let root = mod_pow(omega, e / o, p);
                let root_inv = mod_inv(root, p).unwrap();
                let o_inv = mod_inv(o % p, p).unwrap();
                let traces: Vec<u64> = (0..o)
                    .map(|l| theta[class_of[g.pow(c.representative, l as i64)]])
                    .collect();
                let terms = (0..o).map(|kk| {
                    let step = mod_pow(root_inv, kk, p);
                    let mut z = 1;
                    let mut acc = 0;
                    for &t in &traces {
                        acc = (acc + mul_mod(t, z, p)) % p;
                        z = mul_mod(z, step, p);
                    }
                    let m = mul_mod(acc, o_inv, p);
                    let m = if m > p / 2 { m as i64 - p as i64 } else { m as i64 };
                    (kk as i64, Rational::from_integer(m.into()))
                });
                CycNumber::from_exponent_sum(o as u32, terms)
            })
            .collect();
        chars.push(values);
    }
    Ok(chars)
}
