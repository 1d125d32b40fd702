//! Factorization of x^n - lambda over a chain ring.
//!
//! The route is the classical two-step one. First the residue image
//! x^n - lambda-bar is factored into monic irreducibles over the residue
//! field K (distinct-degree splitting, then deterministic equal-degree
//! splitting with canonical candidates, so runs are reproducible). Because
//! gcd(n, p) = 1 that image is squarefree, its factors are pairwise coprime,
//! and each one lifts by Hensel's lemma to a unique monic divisor over the
//! ring. The lift is computed gamma-adically: if f = g h + gamma^k E with
//! the Bezout pair s a-bar + t b-bar = 1 in K[x], the corrections
//! delta-g = t E-bar mod a-bar and delta-h = s E-bar mod b-bar restore the
//! congruence modulo gamma^{k+1}, and after e - 1 steps the product is exact.

use std::fmt;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::ring::{ChainRing, RingElt};

pub(crate) fn gcd_u64(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd_u64(b, a % b)
    }
}

/// Division a = q b + r over a field, with b arbitrary nonzero.
fn field_divmod(a: &Poly, b: &Poly) -> Result<(Poly, Poly)> {
    let ring = a.ring();
    let lead = b.leading().ok_or(Error::ZeroPolynomial)?;
    let bm = b.monic()?;
    let (q, r) = a.divmod(&bm)?;
    Ok((q.scale(&ring.inv(lead)?), r))
}

/// Monic greatest common divisor over a field.
pub fn poly_gcd(a: &Poly, b: &Poly) -> Result<Poly> {
    let mut a = a.clone();
    let mut b = b.clone();
    while !b.is_zero() {
        let r = field_divmod(&a, &b)?.1;
        a = b;
        b = r;
    }
    if a.is_zero() {
        Ok(a)
    } else {
        a.monic()
    }
}

/// Extended Euclid over a field: returns (g, s, t) with s a + t b = g monic.
pub fn bezout(a: &Poly, b: &Poly) -> Result<(Poly, Poly, Poly)> {
    let ring = a.ring().clone();
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut s0, mut s1) = (Poly::one(&ring), Poly::zero(&ring));
    let (mut t0, mut t1) = (Poly::zero(&ring), Poly::one(&ring));
    while !r1.is_zero() {
        let (q, r) = field_divmod(&r0, &r1)?;
        (r0, r1) = (r1, r);
        (s0, s1) = (s1.clone(), s0.sub(&q.mul(&s1)));
        (t0, t1) = (t1.clone(), t0.sub(&q.mul(&t1)));
    }
    let lead = r0.leading().ok_or(Error::ZeroPolynomial)?.clone();
    let inv = ring.inv(&lead)?;
    let g = r0.scale(&inv);
    let s = s0.scale(&inv);
    let t = t0.scale(&inv);
    debug_assert_eq!(s.mul(a).add(&t.mul(b)), g);
    Ok((g, s, t))
}

pub fn are_coprime(a: &Poly, b: &Poly) -> Result<bool> {
    Ok(poly_gcd(a, b)?.degree() == Some(0))
}

/// base^exp mod a monic modulus.
pub fn pow_mod(base: &Poly, exp: &BigUint, modulus: &Poly) -> Result<Poly> {
    let mut acc = Poly::one(base.ring());
    if exp.bits() == 0 {
        return acc.rem(modulus);
    }
    let mut b = base.rem(modulus)?;
    for i in 0..exp.bits() {
        if exp.bit(i) {
            acc = acc.mul(&b).rem(modulus)?;
        }
        if i + 1 < exp.bits() {
            b = b.mul(&b).rem(modulus)?;
        }
    }
    Ok(acc)
}

/// Irreducibility over a field (Rabin's test).
pub fn is_irreducible(f: &Poly) -> Result<bool> {
    let ring = f.ring();
    assert!(ring.is_field(), "irreducibility lives over the residue field");
    let Some(d) = f.degree() else {
        return Ok(false);
    };
    if d == 0 {
        return Ok(false);
    }
    let f = f.monic()?;
    let q = BigUint::from(ring.q());
    let x = Poly::monomial(ring, ring.one(), 1);
    // x^{q^d} must be x mod f
    let frob = pow_mod(&x, &q.pow(d as u32), &f)?;
    if frob != x.rem(&f)? {
        return Ok(false);
    }
    // and no proper Frobenius power may collapse early
    let mut prime_divs = Vec::new();
    let mut m = d;
    let mut t = 2;
    while t * t <= m {
        if m % t == 0 {
            prime_divs.push(t);
            while m % t == 0 {
                m /= t;
            }
        }
        t += 1;
    }
    if m > 1 {
        prime_divs.push(m);
    }
    for s in prime_divs {
        let h = pow_mod(&x, &q.pow((d / s) as u32), &f)?;
        let g = poly_gcd(&h.sub(&x), &f)?;
        if g.degree() != Some(0) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Irreducibility of an integer-coefficient polynomial over F_p. Used while
/// validating ring moduli, so it builds its own prime field.
pub fn irreducible_over_prime(p: u64, coeffs: &[u64]) -> Result<bool> {
    let fp = ChainRing::zpe(p, 1)?;
    let f = Poly::new(&fp, coeffs.iter().map(|&c| fp.from_int(c as i64)).collect());
    is_irreducible(&f)
}

/// The canonically first monic irreducible of degree r over F_p (smallest
/// low-coefficient vector in the base-p enumeration).
pub fn default_irreducible(p: u64, r: usize) -> Result<Vec<u64>> {
    let total = p.pow(r as u32);
    for idx in 0..total {
        let mut coeffs = Vec::with_capacity(r + 1);
        let mut k = idx;
        for _ in 0..r {
            coeffs.push(k % p);
            k /= p;
        }
        coeffs.push(1);
        if irreducible_over_prime(p, &coeffs)? {
            return Ok(coeffs);
        }
    }
    unreachable!("irreducibles of every degree exist over F_p")
}

/// Monic irreducible factors of a squarefree monic polynomial over a field,
/// sorted by (degree, leading-first coefficients).
pub fn factor_over_field(f: &Poly) -> Result<Vec<Poly>> {
    let ring = f.ring().clone();
    assert!(ring.is_field(), "field factorization needs e = 1");
    let f = f.monic()?;
    let q = BigUint::from(ring.q());
    let x = Poly::monomial(&ring, ring.one(), 1);

    let mut factors = Vec::new();
    let mut rem = f;
    let mut h = x.rem(&rem)?;
    let mut d = 0usize;
    while rem.degree().unwrap_or(0) > 0 {
        d += 1;
        if 2 * d > rem.degree().unwrap() {
            factors.push(rem.clone());
            break;
        }
        h = pow_mod(&h, &q, &rem)?;
        let g = poly_gcd(&h.sub(&x), &rem)?;
        if g.degree() == Some(0) {
            continue;
        }
        split_equal_degree(&g, d, &mut factors)?;
        rem = rem.divmod(&g)?.0;
        h = h.rem(&rem)?;
    }
    factors.sort_by_key(|p| p.sort_key());
    Ok(factors)
}

/// Split a product of distinct irreducibles of the same degree d.
fn split_equal_degree(g: &Poly, d: usize, out: &mut Vec<Poly>) -> Result<()> {
    let ring = g.ring().clone();
    if g.degree() == Some(d) {
        out.push(g.monic()?);
        return Ok(());
    }
    let q = ring.q();
    // deterministic candidates: all polynomials of degree >= 1 in canonical
    // index order, coefficients little-endian base q
    let mut candidate = q as u128;
    loop {
        let v = poly_from_index(&ring, candidate);
        candidate += 1;
        if v.degree().unwrap_or(0) >= g.degree().unwrap() {
            // (cannot happen before a split: indexes below q^{deg g} cover
            // every residue, and some residue must separate the factors)
            continue;
        }
        let t = if ring.p() == 2 {
            // absolute trace to F_2 of v in K[x]/(g)
            let mut acc = v.rem(g)?;
            let mut w = v.rem(g)?;
            let steps = ring.r() * d;
            for _ in 1..steps {
                w = w.mul(&w).rem(g)?;
                acc = acc.add(&w);
            }
            poly_gcd(&acc, g)?
        } else {
            let exp = (BigUint::from(q).pow(d as u32) - 1u32) / 2u32;
            let w = pow_mod(&v, &exp, g)?;
            poly_gcd(&w.sub(&Poly::one(&ring)), g)?
        };
        let deg_t = t.degree().unwrap_or(0);
        if deg_t > 0 && deg_t < g.degree().unwrap() {
            split_equal_degree(&t, d, out)?;
            let other = g.divmod(&t)?.0;
            split_equal_degree(&other, d, out)?;
            return Ok(());
        }
    }
}

fn poly_from_index(ring: &ChainRing, mut idx: u128) -> Poly {
    let q = ring.size() as u128;
    let mut coeffs = Vec::new();
    while idx > 0 {
        coeffs.push(ring.decode((idx % q) as u64));
        idx /= q;
    }
    Poly::new(ring, coeffs)
}

/// Monic with irreducible residue.
pub fn is_basic_irreducible(f: &Poly) -> Result<bool> {
    Ok(f.is_monic() && is_irreducible(&f.residue())?)
}

/// The factorization of x^n - lambda into monic basic irreducible pairwise
/// coprime factors, in canonical order. Exists and is unique because
/// gcd(n, p) = 1 and lambda is a unit.
pub struct Factorization {
    ring: ChainRing,
    n: usize,
    lambda: RingElt,
    factors: Vec<Poly>,
}

impl std::fmt::Debug for Factorization {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Factorization({}, n={}, {})", self.ring.spec_string(), self.n, self)
    }
}

impl Factorization {
    pub fn ring(&self) -> &ChainRing {
        &self.ring
    }
    pub fn n(&self) -> usize {
        self.n
    }
    pub fn lambda(&self) -> &RingElt {
        &self.lambda
    }
    pub fn factors(&self) -> &[Poly] {
        &self.factors
    }
    pub fn len(&self) -> usize {
        self.factors.len()
    }
    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// x^n - lambda itself.
    pub fn modulus(&self) -> Poly {
        Poly::x_pow_minus(&self.ring, self.n, &self.lambda)
    }

    /// (x^n - lambda) / factors[i], by exact division.
    pub fn cofactor(&self, i: usize) -> Poly {
        let (q, r) = self.modulus().divmod(&self.factors[i]).unwrap();
        assert!(r.is_zero(), "factor divides the modulus exactly");
        q
    }

    /// Index of the monic associate of the reciprocal of factors[i]; this is
    /// an involution of the factor list because reciprocation permutes the
    /// irreducible divisors of x^n - lambda when lambda^2 = 1.
    pub fn reciprocal_partner(&self, i: usize) -> Result<usize> {
        let star = self.factors[i].reciprocal()?.monic()?;
        self.factors
            .iter()
            .position(|f| *f == star)
            .ok_or(Error::NoSuchCode)
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for p in &self.factors {
            write!(f, "({p})")?;
        }
        Ok(())
    }
}

/// Factor x^n - lambda over the chain ring.
pub fn factor_xn_minus_lambda(ring: &ChainRing, n: usize, lambda: &RingElt) -> Result<Factorization> {
    if gcd_u64(n as u64, ring.p()) != 1 {
        return Err(Error::NotCoprimeLength { n: n as u64, p: ring.p() });
    }
    if !ring.is_unit(lambda) {
        return Err(Error::NotAUnit);
    }
    let modulus = Poly::x_pow_minus(ring, n, lambda);
    let residue_factors = factor_over_field(&modulus.residue())?;
    let factors = if ring.is_field() {
        residue_factors
    } else {
        let mut lifted = hensel_list(&modulus, &residue_factors)?;
        lifted.sort_by_key(|f| f.residue().sort_key());
        lifted
    };
    let mut product = Poly::one(ring);
    for f in &factors {
        product = product.mul(f);
    }
    assert_eq!(product, modulus, "lifted factors multiply back exactly");
    Ok(Factorization {
        ring: ring.clone(),
        n,
        lambda: lambda.clone(),
        factors,
    })
}

/// Lift a full list of coprime residue factors of the monic f.
fn hensel_list(f: &Poly, residue_factors: &[Poly]) -> Result<Vec<Poly>> {
    if residue_factors.len() == 1 {
        debug_assert_eq!(f.residue().monic()?, residue_factors[0]);
        return Ok(vec![f.clone()]);
    }
    let a_bar = residue_factors[0].clone();
    let mut b_bar = Poly::one(a_bar.ring());
    for g in &residue_factors[1..] {
        b_bar = b_bar.mul(g);
    }
    let (g, h) = hensel_pair(f, &a_bar, &b_bar)?;
    let mut out = vec![g];
    out.extend(hensel_list(&h, &residue_factors[1..])?);
    Ok(out)
}

/// Lift one coprime monic splitting f-bar = a-bar b-bar to f = g h exactly.
pub fn hensel_pair(f: &Poly, a_bar: &Poly, b_bar: &Poly) -> Result<(Poly, Poly)> {
    let ring = f.ring().clone();
    let (one, s, t) = bezout(a_bar, b_bar)?;
    assert_eq!(one.degree(), Some(0), "cofactors must be coprime");

    let mut g = a_bar.lift_to(&ring);
    let mut h = b_bar.lift_to(&ring);
    for k in 1..ring.e() {
        let err = f.sub(&g.mul(&h));
        if err.is_zero() {
            break;
        }
        // err is divisible by gamma^k; its gamma^k digit lives in K[x]
        let e_bar = Poly::new(
            a_bar.ring(),
            err.coeffs()
                .iter()
                .map(|c| {
                    debug_assert!(ring.gamma_val(c) >= k);
                    ring.residue(&ring.div_gamma(c, k))
                })
                .collect(),
        );
        let dg = t.mul(&e_bar).rem(a_bar)?;
        let dh = s.mul(&e_bar).rem(b_bar)?;
        let gk = Poly::constant(&ring, ring.gamma_pow(k));
        g = g.add(&gk.mul(&dg.lift_to(&ring)));
        h = h.add(&gk.mul(&dh.lift_to(&ring)));
    }
    assert_eq!(g.mul(&h), *f, "Hensel lift is exact at full precision");
    Ok((g, h))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_irreducibles_are_the_classical_ones() {
        assert_eq!(default_irreducible(2, 2).unwrap(), vec![1, 1, 1]); // x^2+x+1
        assert_eq!(default_irreducible(2, 3).unwrap(), vec![1, 1, 0, 1]); // x^3+x+1
        assert_eq!(default_irreducible(3, 2).unwrap(), vec![1, 0, 1]); // x^2+1
        assert_eq!(default_irreducible(5, 2).unwrap(), vec![2, 0, 1]); // x^2+2
    }

    #[test]
    fn gcd_and_bezout_over_f2() {
        let f2 = ChainRing::zpe(2, 1).unwrap();
        let a = Poly::from_ints(&f2, &[1, 1, 0, 1]); // x^3+x+1
        let b = Poly::from_ints(&f2, &[1, 1]); // x+1
        assert_eq!(poly_gcd(&a, &b).unwrap().degree(), Some(0));
        let (g, s, t) = bezout(&a, &b).unwrap();
        assert_eq!(g, Poly::one(&f2));
        assert_eq!(s.mul(&a).add(&t.mul(&b)), Poly::one(&f2));
    }

    #[test]
    fn factors_x7_minus_1_over_f2() {
        let f2 = ChainRing::zpe(2, 1).unwrap();
        let f = Poly::x_pow_minus(&f2, 7, &f2.one());
        let fs = factor_over_field(&f).unwrap();
        let shown: Vec<String> = fs.iter().map(|p| p.to_string()).collect();
        assert_eq!(shown, vec!["x + 1", "x^3 + x + 1", "x^3 + x^2 + 1"]);
    }

    #[test]
    fn factors_split_completely_when_n_divides_q_minus_1() {
        let f4 = ChainRing::field(2, 2).unwrap();
        let f = Poly::x_pow_minus(&f4, 3, &f4.one());
        let fs = factor_over_field(&f).unwrap();
        assert_eq!(fs.len(), 3);
        assert!(fs.iter().all(|p| p.degree() == Some(1)));
        let mut product = Poly::one(&f4);
        for p in &fs {
            product = product.mul(p);
        }
        assert_eq!(product, f);
    }

    #[test]
    fn factors_x11_minus_1_over_f3() {
        let f3 = ChainRing::zpe(3, 1).unwrap();
        let f = Poly::x_pow_minus(&f3, 11, &f3.one());
        let fs = factor_over_field(&f).unwrap();
        let degs: Vec<usize> = fs.iter().map(|p| p.degree().unwrap()).collect();
        assert_eq!(degs, vec![1, 5, 5]);
    }

    #[test]
    fn irreducibility_catches_squares_and_products() {
        let f2 = ChainRing::zpe(2, 1).unwrap();
        assert!(is_irreducible(&Poly::from_ints(&f2, &[1, 1, 0, 1])).unwrap());
        assert!(!is_irreducible(&Poly::from_ints(&f2, &[1, 0, 1])).unwrap()); // (x+1)^2
        assert!(!is_irreducible(&Poly::from_ints(&f2, &[0, 1, 1])).unwrap()); // x(x+1)
        let f9 = ChainRing::field(3, 2).unwrap();
        // x^2 + 1 splits over F9 (i lives there already)
        assert!(!is_irreducible(&Poly::from_ints(&f9, &[1, 0, 1])).unwrap());
    }

    #[test]
    fn hensel_reproduces_the_z4_tower_for_n7() {
        let z4 = ChainRing::zpe(2, 2).unwrap();
        let fz = factor_xn_minus_lambda(&z4, 7, &z4.one()).unwrap();
        let shown: Vec<String> = fz.factors().iter().map(|p| p.to_string()).collect();
        assert_eq!(
            shown,
            vec!["x + 3", "x^3 + 2x^2 + x + 3", "x^3 + 3x^2 + 2x + 3"]
        );
        assert_eq!(fz.to_string(), "(x + 3)(x^3 + 2x^2 + x + 3)(x^3 + 3x^2 + 2x + 3)");
    }

    #[test]
    fn hensel_lifts_over_deeper_and_wider_rings() {
        for (ring, n) in [
            (ChainRing::zpe(2, 3).unwrap(), 7),
            (ChainRing::zpe(3, 2).unwrap(), 8),
            (ChainRing::galois(2, 2, 2).unwrap(), 7),
            (ChainRing::fq_u(3, 2, 2).unwrap(), 4),
        ] {
            let minus_one = ring.from_int(-1);
            for lambda in [ring.one(), minus_one] {
                let fz = factor_xn_minus_lambda(&ring, n, &lambda).unwrap();
                for f in fz.factors() {
                    assert!(is_basic_irreducible(f).unwrap());
                }
                for i in 0..fz.len() {
                    for j in 0..i {
                        assert!(are_coprime(
                            &fz.factors()[i].residue(),
                            &fz.factors()[j].residue()
                        )
                        .unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn rejects_length_sharing_a_factor_with_p() {
        let z9 = ChainRing::zpe(3, 2).unwrap();
        let err = factor_xn_minus_lambda(&z9, 6, &z9.one()).unwrap_err();
        assert_eq!(err, Error::NotCoprimeLength { n: 6, p: 3 });
        let err = factor_xn_minus_lambda(&z9, 3, &z9.from_int(3)).unwrap_err();
        assert_eq!(err, Error::NotCoprimeLength { n: 3, p: 3 });
    }

    #[test]
    fn rejects_non_unit_lambda() {
        let z4 = ChainRing::zpe(2, 2).unwrap();
        let err = factor_xn_minus_lambda(&z4, 7, &z4.from_int(2)).unwrap_err();
        assert_eq!(err, Error::NotAUnit);
    }

    #[test]
    fn reciprocal_pairing_is_an_involution() {
        let z4 = ChainRing::zpe(2, 2).unwrap();
        let fz = factor_xn_minus_lambda(&z4, 7, &z4.one()).unwrap();
        for i in 0..fz.len() {
            let j = fz.reciprocal_partner(i).unwrap();
            assert_eq!(fz.reciprocal_partner(j).unwrap(), i);
        }
        // x + 3 is self-reciprocal up to units; the two cubics swap
        assert_eq!(fz.reciprocal_partner(0).unwrap(), 0);
        assert_eq!(fz.reciprocal_partner(1).unwrap(), 2);
    }
}
