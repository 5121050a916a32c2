//! Univariate polynomials over the rational scalars.
//!
//! This is deliberately a minimal toolkit: just what module decomposition
//! needs. Characteristic polynomials come from an exact Hessenberg
//! reduction, square-free structure from Yun's algorithm, and rational roots
//! from the classical numerator/denominator divisor search. There is no
//! general irreducible factorization here — splitting a module only ever
//! consumes pairwise-coprime factors, and the callers are written to survive
//! the case where no usable factor exists.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::matrix::Matrix;
use crate::scalar::Scalar;
use crate::{Error, Result};

/// Polynomial with rational coefficients, stored low degree first with no
/// trailing zeros (so the zero polynomial is an empty coefficient list).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    coeffs: Vec<Scalar>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        Poly::from_coeffs(vec![Scalar::one()])
    }

    /// `t - r`
    pub fn linear_root(r: &Scalar) -> Self {
        Poly::from_coeffs(vec![-r.clone(), Scalar::one()])
    }

    pub fn from_coeffs(coeffs: Vec<Scalar>) -> Self {
        let mut p = Poly { coeffs };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial has no degree.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&Scalar> {
        self.coeffs.last()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![Scalar::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            out[i] += c;
        }
        Poly::from_coeffs(out)
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.scale(&-Scalar::one()))
    }

    pub fn scale(&self, k: &Scalar) -> Poly {
        Poly::from_coeffs(self.coeffs.iter().map(|c| c * k).collect())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Scalar::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        Poly::from_coeffs(out)
    }

    /// Euclidean division; the divisor must be nonzero.
    pub fn divrem(&self, divisor: &Poly) -> Result<(Poly, Poly)> {
        if divisor.is_zero() {
            return Err(Error::Internal("polynomial division by zero".into()));
        }
        let dlead = divisor.leading().expect("nonzero").clone();
        let ddeg = divisor.degree().expect("nonzero");
        let mut rem = self.clone();
        let mut quot = vec![Scalar::zero(); self.coeffs.len().saturating_sub(ddeg)];
        while let Some(rdeg) = rem.degree() {
            if rdeg < ddeg {
                break;
            }
            let f = rem.leading().expect("nonzero") / &dlead;
            let shift = rdeg - ddeg;
            quot[shift] = f.clone();
            // rem -= f * t^shift * divisor
            for (i, c) in divisor.coeffs.iter().enumerate() {
                let v = &rem.coeffs[shift + i] - &(c * &f);
                rem.coeffs[shift + i] = v;
            }
            rem.trim();
        }
        Ok((Poly::from_coeffs(quot), rem))
    }

    /// Exact quotient; errors if the division leaves a remainder.
    pub fn divexact(&self, divisor: &Poly) -> Result<Poly> {
        let (q, r) = self.divrem(divisor)?;
        if !r.is_zero() {
            return Err(Error::Internal("polynomial division was not exact".into()));
        }
        Ok(q)
    }

    /// Monic scalar multiple (unchanged if zero).
    pub fn monic(&self) -> Poly {
        match self.leading() {
            Some(l) if !l.is_one() => self.scale(&l.recip()),
            _ => self.clone(),
        }
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.divrem(&b).expect("b nonzero");
            a = b;
            b = r.monic(); // normalize to tame coefficient growth
        }
        a.monic()
    }

    pub fn derivative(&self) -> Poly {
        if self.coeffs.len() <= 1 {
            return Poly::zero();
        }
        Poly::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Scalar::from_integer(BigInt::from(i)))
                .collect(),
        )
    }

    /// Horner evaluation at a scalar.
    pub fn eval(&self, x: &Scalar) -> Scalar {
        self.coeffs
            .iter()
            .rev()
            .fold(Scalar::zero(), |acc, c| acc * x + c)
    }

    /// Horner evaluation at a square matrix.
    pub fn eval_matrix(&self, a: &Matrix) -> Result<Matrix> {
        if !a.is_square() {
            return Err(Error::Shape {
                op: "eval_matrix",
                detail: format!("{}x{}", a.rows(), a.cols()),
            });
        }
        let n = a.rows();
        let mut acc = Matrix::zero(n, n);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(a)?;
            for i in 0..n {
                *acc.at_mut(i, i) += c;
            }
        }
        Ok(acc)
    }
}

/// Characteristic polynomial `det(t*I - A)` of a square matrix, via exact
/// reduction to Hessenberg form and the standard minor recurrence.
pub fn char_poly(a: &Matrix) -> Result<Poly> {
    if !a.is_square() {
        return Err(Error::Shape {
            op: "char_poly",
            detail: format!("{}x{}", a.rows(), a.cols()),
        });
    }
    let n = a.rows();
    if n == 0 {
        return Ok(Poly::one());
    }
    let h = hessenberg(a);
    // p[k] = characteristic polynomial of the leading k x k block.
    let mut p: Vec<Poly> = Vec::with_capacity(n + 1);
    p.push(Poly::one());
    for k in 1..=n {
        let t_minus_diag = Poly::linear_root(h.at(k - 1, k - 1));
        let mut pk = t_minus_diag.mul(&p[k - 1]);
        // Subdiagonal products picked up while walking up the last column.
        let mut subprod = Scalar::one();
        for m in 1..k {
            subprod = &subprod * h.at(k - m, k - m - 1);
            if subprod.is_zero() {
                break;
            }
            let c = h.at(k - 1 - m, k - 1);
            if !c.is_zero() {
                pk = pk.sub(&p[k - 1 - m].scale(&(c * &subprod)));
            }
        }
        p.push(pk);
    }
    Ok(p.pop().expect("n >= 1"))
}

/// Similarity reduction to upper Hessenberg form (exact arithmetic).
fn hessenberg(a: &Matrix) -> Matrix {
    let n = a.rows();
    let mut h = a.clone();
    for j in 0..n.saturating_sub(2) {
        let Some(p) = ((j + 1)..n).find(|&r| !h.at(r, j).is_zero()) else {
            continue;
        };
        if p != j + 1 {
            // Swap rows and matching columns to keep the transform a similarity.
            for c in 0..n {
                let (x, y) = (h.at(p, c).clone(), h.at(j + 1, c).clone());
                *h.at_mut(p, c) = y;
                *h.at_mut(j + 1, c) = x;
            }
            for r in 0..n {
                let (x, y) = (h.at(r, p).clone(), h.at(r, j + 1).clone());
                *h.at_mut(r, p) = y;
                *h.at_mut(r, j + 1) = x;
            }
        }
        let pivot = h.at(j + 1, j).clone();
        for i in (j + 2)..n {
            if h.at(i, j).is_zero() {
                continue;
            }
            let f = h.at(i, j) / &pivot;
            // row_i -= f * row_{j+1}
            for c in 0..n {
                let v = h.at(j + 1, c) * &f;
                *h.at_mut(i, c) -= v;
            }
            // col_{j+1} += f * col_i   (inverse transform)
            for r in 0..n {
                let v = h.at(r, i) * &f;
                *h.at_mut(r, j + 1) += v;
            }
        }
    }
    h
}

/// Yun's square-free decomposition of a nonzero polynomial.
///
/// Returns pairs `(g, m)` with the `g` square-free, pairwise coprime, and
/// `prod g^m` equal to the monic multiple of the input; multiplicities are
/// strictly increasing.
pub fn square_free_decomposition(f: &Poly) -> Result<Vec<(Poly, usize)>> {
    if f.is_zero() {
        return Err(Error::Internal("square-free decomposition of zero".into()));
    }
    let f = f.monic();
    if f.is_constant() {
        return Ok(vec![]);
    }
    let df = f.derivative();
    let a0 = f.gcd(&df);
    if a0.is_constant() {
        return Ok(vec![(f, 1)]);
    }
    let mut out = Vec::new();
    let mut b = f.divexact(&a0)?;
    let mut c = df.divexact(&a0)?;
    let mut d = c.sub(&b.derivative());
    let mut i = 1usize;
    while !b.is_constant() {
        let a = b.gcd(&d);
        if !a.is_constant() {
            out.push((a.clone(), i));
        }
        b = b.divexact(&a)?;
        c = d.divexact(&a)?;
        d = c.sub(&b.derivative());
        i += 1;
    }
    Ok(out)
}

/// Rational roots of a nonzero polynomial, with multiplicities, sorted by
/// value. Uses the divisor search on the primitive integer form; composite
/// coefficients are factored by trial division with a cap, so truly enormous
/// prime factors may hide a root — callers treat a missed root as "no split
/// found", never as a wrong answer (all reported roots are verified by
/// evaluation).
pub fn rational_roots(f: &Poly) -> Result<Vec<(Scalar, usize)>> {
    if f.is_zero() {
        return Err(Error::Internal("rational roots of zero polynomial".into()));
    }
    let mut out: Vec<(Scalar, usize)> = Vec::new();
    let mut g = f.clone();
    // Split off roots at zero first.
    let zero_mult = g.coeffs.iter().take_while(|c| c.is_zero()).count();
    if zero_mult > 0 {
        g = Poly::from_coeffs(g.coeffs[zero_mult..].to_vec());
        out.push((Scalar::zero(), zero_mult));
    }
    if g.is_constant() {
        out.sort_by(|a, b| a.0.cmp(&b.0));
        return Ok(out);
    }
    // Primitive integer form.
    let mut denom_lcm = BigInt::one();
    for c in g.coeffs() {
        denom_lcm = denom_lcm.lcm(c.denom());
    }
    let ints: Vec<BigInt> = g
        .coeffs()
        .iter()
        .map(|c| (c * Scalar::from_integer(denom_lcm.clone())).to_integer())
        .collect();
    let content = ints
        .iter()
        .fold(BigInt::zero(), |acc, x| acc.gcd(x))
        .max(BigInt::one());
    let ints: Vec<BigInt> = ints.iter().map(|x| x / &content).collect();
    let a0 = ints.first().expect("nonempty").abs();
    let al = ints.last().expect("nonempty").abs();
    let mut candidates: Vec<Scalar> = Vec::new();
    for p in divisors_capped(&a0) {
        for q in divisors_capped(&al) {
            let r = Scalar::new(p.clone(), q.clone());
            candidates.push(r.clone());
            candidates.push(-r);
        }
    }
    candidates.sort();
    candidates.dedup();
    for r in candidates {
        if !g.eval(&r).is_zero() {
            continue;
        }
        let lin = Poly::linear_root(&r);
        let mut mult = 0usize;
        loop {
            let (q, rem) = g.divrem(&lin)?;
            if !rem.is_zero() {
                break;
            }
            g = q;
            mult += 1;
        }
        out.push((r, mult));
        if g.is_constant() {
            break;
        }
    }
    out.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(out)
}

/// Divisors of a positive integer, via trial division up to a budget.
/// If the cofactor beyond the budget is composite its divisors are not
/// enumerated (it is treated as prime), so the list can be incomplete for
/// adversarial inputs; see `rational_roots` for why that is safe.
fn divisors_capped(n: &BigInt) -> Vec<BigInt> {
    let mut factors: Vec<(BigInt, u32)> = Vec::new();
    let mut m = n.clone();
    if m.is_zero() {
        return vec![BigInt::one()];
    }
    let mut push = |p: BigInt, e: u32| {
        if e > 0 {
            factors.push((p, e));
        }
    };
    let mut e2 = 0;
    while m.is_even() {
        m /= 2;
        e2 += 1;
    }
    push(BigInt::from(2), e2);
    let mut d = BigInt::from(3);
    let cap = BigInt::from(100_000u32);
    while &d * &d <= m && d <= cap {
        let mut e = 0;
        while (&m % &d).is_zero() {
            m /= &d;
            e += 1;
        }
        push(d.clone(), e);
        d += 2;
    }
    if m > BigInt::one() {
        push(m, 1);
    }
    let mut divs = vec![BigInt::one()];
    for (p, e) in factors {
        let mut next = Vec::with_capacity(divs.len() * (e as usize + 1));
        for dv in &divs {
            let mut pk = BigInt::one();
            for _ in 0..=e {
                next.push(dv * &pk);
                pk *= &p;
                if next.len() > 20_000 {
                    // Defensive cap; incomplete is fine (see caller).
                    break;
                }
            }
        }
        divs = next;
        divs.sort();
        divs.dedup();
    }
    divs
}
