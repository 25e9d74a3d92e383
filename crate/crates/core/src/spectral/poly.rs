use std::fmt;

use serde::Serialize;

use super::QuotientMatrix;
use crate::error::{Error, Result};

/// Monic integer polynomial, coefficients from the leading term down.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Polynomial {
    pub coefficients: Vec<i128>,
}

impl Polynomial {
    pub fn new(coefficients: Vec<i128>) -> Result<Self> {
        if coefficients.first() != Some(&1) {
            return Err(Error::BadParams("polynomial must be monic".into()));
        }
        Ok(Polynomial { coefficients })
    }

    pub fn degree(&self) -> usize {
        self.coefficients.len() - 1
    }

    pub fn eval(&self, x: f64) -> f64 {
        self.coefficients
            .iter()
            .fold(0.0, |acc, &c| acc * x + c as f64)
    }

    fn derivative(coeffs: &[f64]) -> Vec<f64> {
        let d = coeffs.len() - 1;
        coeffs[..d]
            .iter()
            .enumerate()
            .map(|(i, &c)| c * (d - i) as f64)
            .collect()
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = self.degree();
        let mut first = true;
        for (i, &c) in self.coefficients.iter().enumerate() {
            let p = d - i;
            if c == 0 && !(first && p == 0) {
                continue;
            }
            let sign = if c < 0 { "-" } else { "+" };
            if first {
                if c < 0 {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let a = c.unsigned_abs();
            if a != 1 || p == 0 {
                write!(f, "{a}")?;
            }
            match p {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{p}")?,
            }
            first = false;
        }
        Ok(())
    }
}

/// `det(xI − B)` by Berkowitz's division-free recurrence, exact in `i128`.
pub fn char_poly(b: &QuotientMatrix) -> Result<Polynomial> {
    let a: Vec<Vec<i128>> = b
        .entries
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    let n = a.len();
    if n == 0 {
        return Err(Error::BadParams("empty matrix".into()));
    }
    let mul = |x: i128, y: i128| x.checked_mul(y).ok_or(Error::Overflow);
    let add = |x: i128, y: i128| x.checked_add(y).ok_or(Error::Overflow);

    let mut v: Vec<i128> = vec![1, -a[0][0]];
    for r in 1..n {
        // t = [1, -a_rr, -R C, -R M C, ..., -R M^{r-1} C]
        let mut t = Vec::with_capacity(r + 2);
        t.push(1i128);
        t.push(-a[r][r]);
        let mut col: Vec<i128> = (0..r).map(|i| a[i][r]).collect();
        for _ in 0..r {
            let mut rc = 0i128;
            for (j, &cj) in col.iter().enumerate() {
                rc = add(rc, mul(a[r][j], cj)?)?;
            }
            t.push(rc.checked_neg().ok_or(Error::Overflow)?);
            let mut next = vec![0i128; r];
            for (i, slot) in next.iter_mut().enumerate() {
                let mut s = 0i128;
                for (j, &cj) in col.iter().enumerate() {
                    s = add(s, mul(a[i][j], cj)?)?;
                }
                *slot = s;
            }
            col = next;
        }
        let mut nv = vec![0i128; r + 2];
        for (i, slot) in nv.iter_mut().enumerate() {
            let mut s = 0i128;
            for (j, &vj) in v.iter().enumerate() {
                if j <= i {
                    s = add(s, mul(t[i - j], vj)?)?;
                }
            }
            *slot = s;
        }
        v = nv;
    }
    Ok(Polynomial { coefficients: v })
}

fn horner(c: &[f64], x: f64) -> f64 {
    c.iter().fold(0.0, |acc, &k| acc * x + k)
}

fn bisect(c: &[f64], mut lo: f64, mut hi: f64, tol: f64) -> f64 {
    let mut flo = horner(c, lo);
    for _ in 0..400 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi || hi - lo <= tol * 1e-3 {
            break;
        }
        let fm = horner(c, mid);
        if fm == 0.0 {
            return mid;
        }
        if (fm < 0.0) == (flo < 0.0) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Sorted real roots of the polynomial with coefficients `c` inside `[-r, r]`.
fn real_roots(c: &[f64], r: f64, tol: f64) -> Vec<f64> {
    let d = c.len() - 1;
    if d == 0 {
        return Vec::new();
    }
    if d == 1 {
        return vec![-c[1] / c[0]];
    }
    let crit = real_roots(&Polynomial::derivative(c), r, tol);
    let mut points = vec![-r];
    points.extend(crit.iter().copied().filter(|x| x.abs() < r));
    points.push(r);
    let scale: f64 = c.iter().map(|k| k.abs()).fold(1.0, f64::max);
    let mut roots = Vec::new();
    for w in points.windows(2) {
        let (a, b) = (w[0], w[1]);
        let (fa, fb) = (horner(c, a), horner(c, b));
        if (fa < 0.0) != (fb < 0.0) && fa != 0.0 && fb != 0.0 {
            roots.push(bisect(c, a, b, tol));
        }
    }
    for &x in &crit {
        if horner(c, x).abs() <= 1e-12 * scale {
            roots.push(x);
        }
    }
    for &x in &points {
        if horner(c, x) == 0.0 {
            roots.push(x);
        }
    }
    roots.sort_by(f64::total_cmp);
    roots.dedup_by(|a, b| (*a - *b).abs() <= tol);
    roots
}

/// Largest real root, located by bisection between consecutive critical
/// points on `[-R, R]` with `R = 1 + max|coefficient|`.
pub fn max_real_root(p: &Polynomial, tol: f64) -> Result<f64> {
    let c: Vec<f64> = p.coefficients.iter().map(|&k| k as f64).collect();
    let r = 1.0 + c.iter().skip(1).map(|k| k.abs()).fold(0.0, f64::max);
    real_roots(&c, r, tol)
        .last()
        .copied()
        .ok_or(Error::NoRealRootFound)
}
