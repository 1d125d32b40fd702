//! Polynomials over a chain ring, ascending coefficients, always trimmed.
//!
//! This one type serves both the ring R and its residue field K (a chain
//! ring with e = 1), which keeps the Hensel bridge between the two levels
//! free of conversions.

use std::fmt;

use crate::error::{Error, Result};
use crate::ring::{ChainRing, RingElt};

/// A polynomial with coefficients in a fixed chain ring. Trailing zero
/// coefficients are never stored, so the zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    ring: ChainRing,
    coeffs: Vec<RingElt>,
}

impl Poly {
    pub fn new(ring: &ChainRing, mut coeffs: Vec<RingElt>) -> Self {
        while coeffs.last().is_some_and(|c| ring.is_zero(c)) {
            coeffs.pop();
        }
        Poly {
            ring: ring.clone(),
            coeffs,
        }
    }

    pub fn zero(ring: &ChainRing) -> Self {
        Poly {
            ring: ring.clone(),
            coeffs: Vec::new(),
        }
    }

    pub fn one(ring: &ChainRing) -> Self {
        Poly::constant(ring, ring.one())
    }

    pub fn constant(ring: &ChainRing, c: RingElt) -> Self {
        Poly::new(ring, vec![c])
    }

    /// c * x^k.
    pub fn monomial(ring: &ChainRing, c: RingElt, k: usize) -> Self {
        let mut coeffs = vec![ring.zero(); k + 1];
        coeffs[k] = c;
        Poly::new(ring, coeffs)
    }

    /// Ascending integer coefficients, e.g. `[3, 1, 2]` is 3 + x + 2x^2.
    pub fn from_ints(ring: &ChainRing, coeffs: &[i64]) -> Self {
        Poly::new(ring, coeffs.iter().map(|&c| ring.from_int(c)).collect())
    }

    /// x^n - lambda.
    pub fn x_pow_minus(ring: &ChainRing, n: usize, lambda: &RingElt) -> Self {
        let mut coeffs = vec![ring.zero(); n + 1];
        coeffs[0] = ring.neg(lambda);
        coeffs[n] = ring.one();
        Poly::new(ring, coeffs)
    }

    pub fn ring(&self) -> &ChainRing {
        &self.ring
    }

    pub fn coeffs(&self) -> &[RingElt] {
        &self.coeffs
    }

    /// Coefficient of x^i (zero beyond the stored length).
    pub fn coeff(&self, i: usize) -> RingElt {
        self.coeffs.get(i).cloned().unwrap_or_else(|| self.ring.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&RingElt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| *c == self.ring.one())
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| self.ring.add(&self.coeff(i), &other.coeff(i)))
            .collect();
        Poly::new(&self.ring, coeffs)
    }

    pub fn neg(&self) -> Poly {
        Poly::new(
            &self.ring,
            self.coeffs.iter().map(|c| self.ring.neg(c)).collect(),
        )
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero(&self.ring);
        }
        let mut coeffs = vec![self.ring.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if self.ring.is_zero(a) {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                let t = self.ring.mul(a, b);
                coeffs[i + j] = self.ring.add(&coeffs[i + j], &t);
            }
        }
        Poly::new(&self.ring, coeffs)
    }

    pub fn scale(&self, c: &RingElt) -> Poly {
        Poly::new(
            &self.ring,
            self.coeffs.iter().map(|a| self.ring.mul(a, c)).collect(),
        )
    }

    /// f(s x): multiply the coefficient of x^i by s^i.
    pub fn compose_scale(&self, s: &RingElt) -> Poly {
        let mut pow = self.ring.one();
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| {
                let out = self.ring.mul(c, &pow);
                pow = self.ring.mul(&pow, s);
                out
            })
            .collect();
        Poly::new(&self.ring, coeffs)
    }

    /// Euclidean division by a monic divisor: (quotient, remainder).
    pub fn divmod(&self, divisor: &Poly) -> Result<(Poly, Poly)> {
        if !divisor.is_monic() {
            return Err(Error::NonMonicDivisor);
        }
        let d = divisor.degree().unwrap();
        let mut rem = self.coeffs.clone();
        if rem.len() <= d {
            return Ok((Poly::zero(&self.ring), self.clone()));
        }
        let mut quo = vec![self.ring.zero(); rem.len() - d];
        for i in (d..rem.len()).rev() {
            let c = rem[i].clone();
            if self.ring.is_zero(&c) {
                continue;
            }
            quo[i - d] = c.clone();
            for j in 0..=d {
                let t = self.ring.mul(&c, &divisor.coeffs[j]);
                rem[i - d + j] = self.ring.sub(&rem[i - d + j], &t);
            }
        }
        Ok((Poly::new(&self.ring, quo), Poly::new(&self.ring, rem)))
    }

    pub fn rem(&self, divisor: &Poly) -> Result<Poly> {
        Ok(self.divmod(divisor)?.1)
    }

    /// Remainder mod x^n - lambda: fold x^{n+k} onto lambda x^k.
    pub fn reduce_cyclic(&self, n: usize, lambda: &RingElt) -> Poly {
        if self.coeffs.len() <= n {
            return self.clone();
        }
        let mut coeffs = vec![self.ring.zero(); n];
        let mut mult = self.ring.one();
        for (i, c) in self.coeffs.iter().enumerate() {
            if i % n == 0 && i > 0 {
                mult = self.ring.mul(&mult, lambda);
            }
            let t = self.ring.mul(c, &mult);
            coeffs[i % n] = self.ring.add(&coeffs[i % n], &t);
        }
        Poly::new(&self.ring, coeffs)
    }

    /// Divide by the leading coefficient, which must be a unit.
    pub fn monic(&self) -> Result<Poly> {
        let lead = self.leading().ok_or(Error::ZeroPolynomial)?;
        if *lead == self.ring.one() {
            return Ok(self.clone());
        }
        let inv = self.ring.inv(lead)?;
        Ok(self.scale(&inv))
    }

    /// The reciprocal x^{deg f} f(1/x) (coefficients reversed).
    pub fn reciprocal(&self) -> Result<Poly> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        Ok(Poly::new(&self.ring, coeffs))
    }

    pub fn eval(&self, x: &RingElt) -> RingElt {
        let mut acc = self.ring.zero();
        for c in self.coeffs.iter().rev() {
            acc = self.ring.add(&self.ring.mul(&acc, x), c);
        }
        acc
    }

    /// Coefficientwise image in the residue field.
    pub fn residue(&self) -> Poly {
        let k = self.ring.residue_field();
        Poly::new(&k, self.coeffs.iter().map(|c| self.ring.residue(c)).collect())
    }

    /// Coefficientwise canonical lift into `ring` (whose residue field must
    /// be this polynomial's ring).
    pub fn lift_to(&self, ring: &ChainRing) -> Poly {
        debug_assert_eq!(ring.residue_field(), self.ring);
        Poly::new(ring, self.coeffs.iter().map(|c| ring.lift(c)).collect())
    }

    /// Total order key: degree first, then coefficients from the leading end,
    /// each by its canonical enumeration index.
    pub fn sort_key(&self) -> Vec<u64> {
        let mut key = vec![self.coeffs.len() as u64];
        key.extend(self.coeffs.iter().rev().map(|c| self.ring.encode(c)));
        key
    }

    /// Dense coefficient vector of the given length; the degree must fit.
    pub fn to_dense(&self, n: usize) -> Vec<RingElt> {
        assert!(self.coeffs.len() <= n, "degree does not fit in length {n}");
        let mut v = self.coeffs.clone();
        v.resize(n, self.ring.zero());
        v
    }

    /// Polynomial with the given dense coefficient vector.
    pub fn from_dense(ring: &ChainRing, v: &[RingElt]) -> Poly {
        Poly::new(ring, v.to_vec())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let one = self.ring.one();
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if self.ring.is_zero(c) {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            let cs = self.ring.fmt_elt(c);
            match i {
                0 => write!(f, "{cs}")?,
                1 if *c == one => write!(f, "x")?,
                1 => write!(f, "{cs}x")?,
                _ if *c == one => write!(f, "x^{i}")?,
                _ => write!(f, "{cs}x^{i}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z4() -> ChainRing {
        ChainRing::zpe(2, 2).unwrap()
    }

    #[test]
    fn trims_trailing_zeros() {
        let r = z4();
        let p = Poly::from_ints(&r, &[1, 2, 0, 4, 0]);
        assert_eq!(p.degree(), Some(1));
        assert_eq!(Poly::from_ints(&r, &[0, 0]).degree(), None);
    }

    #[test]
    fn displays_descending() {
        let r = z4();
        assert_eq!(Poly::from_ints(&r, &[3, 1, 2]).to_string(), "2x^2 + x + 3");
        assert_eq!(Poly::from_ints(&r, &[3, 1]).to_string(), "x + 3");
        assert_eq!(Poly::from_ints(&r, &[0, 0, 1]).to_string(), "x^2");
        assert_eq!(Poly::zero(&r).to_string(), "0");
    }

    #[test]
    fn divmod_roundtrips() {
        let r = z4();
        let f = Poly::x_pow_minus(&r, 7, &r.one());
        let g = Poly::from_ints(&r, &[3, 1, 2, 1]);
        let (q, rem) = f.divmod(&g).unwrap();
        assert_eq!(q.mul(&g).add(&rem), f);
        assert!(rem.degree() < g.degree());
    }

    #[test]
    fn divmod_rejects_nonmonic() {
        let r = z4();
        let f = Poly::from_ints(&r, &[1, 1, 1]);
        let g = Poly::from_ints(&r, &[1, 2]);
        assert_eq!(f.divmod(&g).unwrap_err(), Error::NonMonicDivisor);
    }

    #[test]
    fn reduce_cyclic_folds_x_n_to_lambda() {
        let r = z4();
        let lambda = r.from_int(3);
        let xn = Poly::monomial(&r, r.one(), 7);
        assert_eq!(xn.reduce_cyclic(7, &lambda), Poly::constant(&r, lambda.clone()));
        let p = Poly::from_ints(&r, &[1, 0, 0, 0, 0, 0, 0, 0, 2]);
        // x^8 = lambda x over x^7 - lambda
        let want = Poly::from_ints(&r, &[1, 2 * 3]);
        assert_eq!(p.reduce_cyclic(7, &lambda), want);
    }

    #[test]
    fn monic_scales_by_inverse_of_leading_unit() {
        let r = z4();
        let p = Poly::from_ints(&r, &[1, 3]);
        assert_eq!(p.monic().unwrap(), Poly::from_ints(&r, &[3, 1]));
        let bad = Poly::from_ints(&r, &[1, 2]);
        assert_eq!(bad.monic().unwrap_err(), Error::NotAUnit);
    }

    #[test]
    fn reciprocal_reverses_coefficients() {
        let r = z4();
        let p = Poly::from_ints(&r, &[3, 1, 2, 1]);
        assert_eq!(p.reciprocal().unwrap(), Poly::from_ints(&r, &[1, 2, 1, 3]));
        assert_eq!(Poly::zero(&r).reciprocal().unwrap_err(), Error::ZeroPolynomial);
    }

    #[test]
    fn eval_matches_naive_expansion() {
        let r = ChainRing::galois(2, 2, 2).unwrap();
        let p = Poly::from_ints(&r, &[1, 2, 3]);
        for x in r.elements().unwrap() {
            let naive = r.add(
                &r.from_int(1),
                &r.add(
                    &r.mul(&r.from_int(2), &x),
                    &r.mul(&r.from_int(3), &r.mul(&x, &x)),
                ),
            );
            assert_eq!(p.eval(&x), naive);
        }
    }

    #[test]
    fn residue_and_lift_are_inverse_on_lifted_polys() {
        let r = ChainRing::galois(2, 3, 2).unwrap();
        let k = r.residue_field();
        let p = Poly::from_ints(&k, &[1, 0, 1, 1]);
        assert_eq!(p.lift_to(&r).residue(), p);
    }

    #[test]
    fn sort_key_orders_by_degree_then_leading_coeffs() {
        let r = z4();
        let a = Poly::from_ints(&r, &[3, 1, 2, 1]);
        let b = Poly::from_ints(&r, &[3, 2, 3, 1]);
        let c = Poly::from_ints(&r, &[3, 1]);
        assert!(c.sort_key() < a.sort_key());
        assert!(a.sort_key() < b.sort_key());
    }
}
