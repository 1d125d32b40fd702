//! Lambda-constacyclic codes over one chain ring.
//!
//! A lambda-constacyclic code of length n is an ideal of R[x]/(x^n - lambda).
//! With gcd(n, p) = 1 and the factorization x^n - lambda = f_1 ... f_l into
//! basic irreducibles, every ideal is determined by one level t_i in
//! {0, ..., e} per factor: the code is the set of v whose image mod f_i lies
//! in gamma^{t_i} R[x]/(f_i) for every i. Grouping the factors at a common
//! level t into F_t and writing Fhat_t = (x^n - lambda)/F_t, the code is
//! generated by the tower {gamma^t Fhat_t} and has cardinality
//! q^{sum_i (e - t_i) deg f_i}. Level e kills a factor entirely.
//!
//! The dual of a cyclic or negacyclic code is again one of the same kind:
//! it places the monic associate of the reciprocal f_i* at level e - t_i.
//! That level calculus decides self-duality; the module re-verifies every
//! dual it returns by explicit inner products, and for lambda outside
//! {1, -1} a separately named variant produces the lambda^{-1}-constacyclic
//! dual with the same checks.

use std::sync::Arc;

use num_bigint::BigUint;

use crate::cyclotomic::{self_dual_verdict, Status};
use crate::error::{Error, Result};
use crate::factor::{factor_xn_minus_lambda, pow_mod, Factorization};
use crate::poly::Poly;
use crate::ring::{ChainRing, RingElt};

/// Smallest gamma-adic valuation among the coefficients (e for the zero
/// polynomial).
pub fn poly_gamma_val(p: &Poly) -> usize {
    p.coeffs()
        .iter()
        .map(|c| p.ring().gamma_val(c))
        .min()
        .unwrap_or(p.ring().e())
}

/// Standard inner product sum u_i v_i.
pub fn inner_product(ring: &ChainRing, u: &[RingElt], v: &[RingElt]) -> RingElt {
    debug_assert_eq!(u.len(), v.len());
    let mut acc = ring.zero();
    for (a, b) in u.iter().zip(v) {
        acc = ring.add(&acc, &ring.mul(a, b));
    }
    acc
}

/// The constacyclic shift (c_0, ..., c_{n-1}) -> (lambda c_{n-1}, c_0, ...),
/// which is multiplication by x in R[x]/(x^n - lambda).
pub fn lambda_shift(ring: &ChainRing, lambda: &RingElt, v: &[RingElt]) -> Vec<RingElt> {
    let n = v.len();
    let mut out = Vec::with_capacity(n);
    out.push(ring.mul(lambda, &v[n - 1]));
    out.extend_from_slice(&v[..n - 1]);
    out
}

/// An ideal of R[x]/(x^n - lambda), presented by one level per factor.
#[derive(Clone)]
pub struct CodeSpec {
    factorization: Arc<Factorization>,
    levels: Vec<usize>,
}

impl CodeSpec {
    pub fn new(factorization: Arc<Factorization>, levels: Vec<usize>) -> Result<Self> {
        if levels.len() != factorization.len() {
            return Err(Error::ArityMismatch {
                expected: factorization.len(),
                got: levels.len(),
            });
        }
        let e = factorization.ring().e();
        assert!(levels.iter().all(|&t| t <= e), "levels live in 0..=e");
        Ok(CodeSpec {
            factorization,
            levels,
        })
    }

    pub fn ring(&self) -> &ChainRing {
        self.factorization.ring()
    }
    pub fn n(&self) -> usize {
        self.factorization.n()
    }
    pub fn lambda(&self) -> &RingElt {
        self.factorization.lambda()
    }
    pub fn factorization(&self) -> &Arc<Factorization> {
        &self.factorization
    }
    pub fn levels(&self) -> &[usize] {
        &self.levels
    }
}

impl PartialEq for CodeSpec {
    fn eq(&self, other: &Self) -> bool {
        self.ring() == other.ring()
            && self.n() == other.n()
            && self.lambda() == other.lambda()
            && self.factorization.factors() == other.factorization.factors()
            && self.levels == other.levels
    }
}

/// One rung of the generator tower: gamma^level times the cofactor of the
/// level's factor group.
#[derive(Clone)]
pub struct Generator {
    pub level: usize,
    pub hat: Poly,
}

impl Generator {
    /// The generator as an element of the quotient.
    pub fn poly(&self, ring: &ChainRing) -> Poly {
        self.hat.scale(&ring.gamma_pow(self.level))
    }
}

/// A built code: spec, materialized generator tower, exact cardinality.
#[derive(Clone)]
pub struct Code {
    spec: CodeSpec,
    generators: Vec<Generator>,
    cardinality: BigUint,
}

impl std::fmt::Debug for Code {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "Code({}, n={}, levels={:?}, |C|={})",
            self.ring().spec_string(),
            self.n(),
            self.levels(),
            self.cardinality
        )
    }
}

impl Code {
    pub fn build(spec: CodeSpec) -> Code {
        let ring = spec.ring().clone();
        let e = ring.e();
        let modulus = spec.factorization.modulus();

        let mut generators = Vec::new();
        for t in 0..e {
            let mut group = Poly::one(&ring);
            for (i, f) in spec.factorization.factors().iter().enumerate() {
                if spec.levels[i] == t {
                    group = group.mul(f);
                }
            }
            if group.degree() == Some(0) {
                continue;
            }
            let (hat, rem) = modulus.divmod(&group).unwrap();
            assert!(rem.is_zero());
            generators.push(Generator { level: t, hat });
        }

        let exponent: usize = spec
            .factorization
            .factors()
            .iter()
            .zip(&spec.levels)
            .map(|(f, &t)| (e - t) * f.degree().unwrap())
            .sum();
        let cardinality = BigUint::from(ring.q()).pow(exponent as u32);

        Code {
            spec,
            generators,
            cardinality,
        }
    }

    pub fn spec(&self) -> &CodeSpec {
        &self.spec
    }
    pub fn factorization(&self) -> &Arc<Factorization> {
        self.spec.factorization()
    }
    pub fn ring(&self) -> &ChainRing {
        self.spec.ring()
    }
    pub fn n(&self) -> usize {
        self.spec.n()
    }
    pub fn lambda(&self) -> &RingElt {
        self.spec.lambda()
    }
    pub fn levels(&self) -> &[usize] {
        self.spec.levels()
    }
    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }
    pub fn cardinality(&self) -> &BigUint {
        &self.cardinality
    }

    /// Generator polynomials gamma^t Fhat_t, as quotient elements.
    pub fn generator_polys(&self) -> Vec<Poly> {
        let ring = self.ring();
        self.generators.iter().map(|g| g.poly(ring)).collect()
    }

    /// Generators as length-n vectors.
    pub fn generator_vectors(&self) -> Vec<Vec<RingElt>> {
        self.generator_polys()
            .iter()
            .map(|p| p.to_dense(self.n()))
            .collect()
    }

    /// Membership: reduce mod each factor and compare gamma-adic valuations
    /// against the level map.
    pub fn contains(&self, v: &[RingElt]) -> Result<bool> {
        if v.len() != self.n() {
            return Err(Error::LengthMismatch {
                expected: self.n(),
                got: v.len(),
            });
        }
        let p = Poly::from_dense(self.ring(), v);
        for (f, &t) in self.spec.factorization.factors().iter().zip(self.levels()) {
            if poly_gamma_val(&p.rem(f)?) < t {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// A single polynomial generating the whole ideal: the sum of the tower
    /// rungs. Its image mod f_i has valuation exactly t_i, which is asserted.
    pub fn principal_generator(&self) -> Poly {
        let ring = self.ring().clone();
        let mut gen = Poly::zero(&ring);
        for g in &self.generators {
            gen = gen.add(&g.poly(&ring));
        }
        for (f, &t) in self.spec.factorization.factors().iter().zip(self.levels()) {
            let val = poly_gamma_val(&gen.rem(f).unwrap());
            assert_eq!(val, t, "principal generator hits each level exactly");
        }
        gen
    }

    /// Free exactly when no factor sits strictly inside the chain; the rank
    /// is what survives at level 0.
    pub fn is_free(&self) -> Option<usize> {
        let e = self.ring().e();
        if !self.levels().iter().all(|&t| t == 0 || t == e) {
            return None;
        }
        let killed: usize = self
            .spec
            .factorization
            .factors()
            .iter()
            .zip(self.levels())
            .filter(|(_, &t)| t == e)
            .map(|(f, _)| f.degree().unwrap())
            .sum();
        Some(self.n() - killed)
    }

    fn lambda_is_self_paired(&self) -> bool {
        let ring = self.ring();
        let sq = ring.mul(self.lambda(), self.lambda());
        sq == ring.one()
    }

    /// The dual code, for lambda in {1, -1} where x^n - lambda is closed
    /// under reciprocals. Orthogonality and the cardinality identity are
    /// asserted, not assumed.
    pub fn dual(&self) -> Result<Code> {
        if !self.lambda_is_self_paired() {
            return Err(Error::UnsupportedLambda);
        }
        let e = self.ring().e();
        let fz = &self.spec.factorization;
        let mut dual_levels = vec![0usize; fz.len()];
        for i in 0..fz.len() {
            dual_levels[fz.reciprocal_partner(i)?] = e - self.levels()[i];
        }
        let dual = Code::build(CodeSpec::new(Arc::clone(fz), dual_levels)?);

        let total = self.ring().size_pow(self.n());
        assert_eq!(
            self.cardinality.clone() * dual.cardinality.clone(),
            total,
            "|C| |C-dual| = |R|^n"
        );
        assert!(
            orthogonal_under_shifts(self, &dual),
            "dual generators are orthogonal to the code"
        );
        Ok(dual)
    }

    /// The lambda^{-1}-constacyclic dual, for any unit lambda. Verified by a
    /// full double shift loop plus the cardinality identity.
    pub fn dual_general(&self) -> Result<Code> {
        let ring = self.ring().clone();
        let lambda_inv = ring.inv(self.lambda())?;
        let target = Arc::new(factor_xn_minus_lambda(&ring, self.n(), &lambda_inv)?);
        let e = ring.e();
        let mut dual_levels = vec![usize::MAX; target.len()];
        for (f, &t) in self.spec.factorization.factors().iter().zip(self.levels()) {
            let star = f.reciprocal()?.monic()?;
            let j = target
                .factors()
                .iter()
                .position(|g| *g == star)
                .expect("reciprocals of factors divide x^n - 1/lambda");
            dual_levels[j] = e - t;
        }
        assert!(dual_levels.iter().all(|&t| t != usize::MAX));
        let dual = Code::build(CodeSpec::new(Arc::clone(&target), dual_levels)?);

        let total = ring.size_pow(self.n());
        assert_eq!(self.cardinality.clone() * dual.cardinality.clone(), total);
        let gens_a: Vec<_> = self.generator_vectors();
        let gens_b: Vec<_> = dual.generator_vectors();
        for ga in &gens_a {
            for gb in &gens_b {
                let mut u = ga.clone();
                for _ in 0..self.n() {
                    let mut w = gb.clone();
                    for _ in 0..self.n() {
                        assert!(
                            ring.is_zero(&inner_product(&ring, &u, &w)),
                            "every shift pair is orthogonal"
                        );
                        w = lambda_shift(&ring, &lambda_inv, &w);
                    }
                    u = lambda_shift(&ring, self.lambda(), &u);
                }
            }
        }
        Ok(dual)
    }

    /// C = C-dual, decided on the level map (lambda in {1, -1} only).
    pub fn is_self_dual(&self) -> Result<bool> {
        if !self.lambda_is_self_paired() {
            return Err(Error::UnsupportedLambda);
        }
        let e = self.ring().e();
        let fz = &self.spec.factorization;
        for i in 0..fz.len() {
            if self.levels()[fz.reciprocal_partner(i)?] != e - self.levels()[i] {
                return Ok(false);
            }
        }
        assert_eq!(
            self.cardinality.clone() * self.cardinality.clone(),
            self.ring().size_pow(self.n())
        );
        assert!(self.is_self_orthogonal()?);
        Ok(true)
    }

    /// All codeword pairs orthogonal (C contained in its dual).
    pub fn is_self_orthogonal(&self) -> Result<bool> {
        let ring = self.ring().clone();
        let gens = self.generator_vectors();
        let single_loop = self.lambda_is_self_paired();
        for ga in &gens {
            for gb in &gens {
                let mut u = ga.clone();
                for _ in 0..self.n() {
                    if single_loop {
                        if !ring.is_zero(&inner_product(&ring, &u, gb)) {
                            return Ok(false);
                        }
                    } else {
                        let mut w = gb.clone();
                        for _ in 0..self.n() {
                            if !ring.is_zero(&inner_product(&ring, &u, &w)) {
                                return Ok(false);
                            }
                            w = lambda_shift(&ring, self.lambda(), &w);
                        }
                    }
                    u = lambda_shift(&ring, self.lambda(), &u);
                }
            }
        }
        Ok(true)
    }
}

/// For lambda^2 = 1 the shift is an isometry, so one shift loop decides
/// orthogonality of two ideals.
fn orthogonal_under_shifts(a: &Code, b: &Code) -> bool {
    let ring = a.ring().clone();
    let gens_a = a.generator_vectors();
    let gens_b = b.generator_vectors();
    for ga in &gens_a {
        for gb in &gens_b {
            let mut u = ga.clone();
            for _ in 0..a.n() {
                if !ring.is_zero(&inner_product(&ring, &u, gb)) {
                    return false;
                }
                u = lambda_shift(&ring, a.lambda(), &u);
            }
        }
    }
    true
}

/// The middle-of-the-chain code generated by gamma^{e/2}: the one self-dual
/// cyclic code that exists whenever e is even.
pub fn trivial(ring: &ChainRing, n: usize) -> Result<Code> {
    if !ring.e().is_multiple_of(2) {
        return Err(Error::NoSuchCode);
    }
    let fz = Arc::new(factor_xn_minus_lambda(ring, n, &ring.one())?);
    let levels = vec![ring.e() / 2; fz.len()];
    Ok(Code::build(CodeSpec::new(fz, levels)?))
}

/// Build a nontrivial self-dual cyclic code when the verdict says one
/// exists: pick the canonically least factor whose residue roots have exact
/// order n, send it to level 0, its reciprocal partner to level e, and park
/// everything else in the middle.
pub fn construct_self_dual(ring: &ChainRing, n: usize) -> Result<Code> {
    let verdict = self_dual_verdict(ring, n)?;
    if verdict.status != Status::NontrivialExists {
        return Err(Error::NoSuchCode);
    }
    let e = ring.e();
    let fz = Arc::new(factor_xn_minus_lambda(ring, n, &ring.one())?);

    let mut proper_divisors = Vec::new();
    for d in 1..n {
        if n.is_multiple_of(d) {
            proper_divisors.push(d);
        }
    }
    let k = ring.residue_field();
    let x = Poly::monomial(&k, k.one(), 1);
    let pick = (0..fz.len())
        .find(|&i| {
            let fbar = fz.factors()[i].residue();
            proper_divisors.iter().all(|&d| {
                pow_mod(&x, &BigUint::from(d), &fbar).unwrap() != Poly::one(&k)
            })
        })
        .expect("some factor has primitive n-th roots");
    let partner = fz.reciprocal_partner(pick)?;
    assert_ne!(pick, partner, "the chosen factor pair must be asymmetric");

    let mut levels = vec![e / 2; fz.len()];
    levels[pick] = 0;
    levels[partner] = e;
    let code = Code::build(CodeSpec::new(fz, levels)?);
    assert!(code.is_self_dual()?);
    assert_ne!(
        code.levels(),
        trivial(ring, n)?.levels(),
        "constructed code is not the gamma-power code"
    );
    Ok(code)
}

/// Least unit delta (in enumeration order) with delta^n = lambda, if any.
pub fn find_nth_root(ring: &ChainRing, lambda: &RingElt, n: usize) -> Result<Option<RingElt>> {
    if !ring.is_unit(lambda) {
        return Err(Error::NotAUnit);
    }
    for u in ring.units()? {
        if ring.pow(&u, n as u64) == *lambda {
            return Ok(Some(u));
        }
    }
    Ok(None)
}

/// Check delta^n = lambda.
pub fn verify_delta_power(
    ring: &ChainRing,
    delta: &RingElt,
    n: usize,
    lambda: &RingElt,
) -> Result<()> {
    if ring.pow(delta, n as u64) != *lambda {
        return Err(Error::DeltaPowerMismatch);
    }
    Ok(())
}

/// The coordinatewise twist c_i -> delta^{-i} c_i, i.e. c(x) -> c(delta^{-1} x).
/// It maps R[x]/(x^n - 1) isomorphically onto R[x]/(x^n - delta^n).
pub fn mu_poly(poly: &Poly, delta: &RingElt, n: usize) -> Result<Poly> {
    let ring = poly.ring().clone();
    let dinv = ring.inv(delta)?;
    Ok(poly.compose_scale(&dinv).reduce_cyclic(n, &ring.pow(delta, n as u64)))
}

/// Image of a cyclic code under the twist: the delta^n-constacyclic code
/// with the same levels on the twisted factors.
pub fn mu_code(code: &Code, delta: &RingElt) -> Result<Code> {
    let ring = code.ring().clone();
    if *code.lambda() != ring.one() {
        return Err(Error::UnsupportedLambda);
    }
    let n = code.n();
    let lambda = ring.pow(delta, n as u64);
    let target = Arc::new(factor_xn_minus_lambda(&ring, n, &lambda)?);
    let mut levels = vec![usize::MAX; target.len()];
    for (f, &t) in code
        .spec()
        .factorization()
        .factors()
        .iter()
        .zip(code.levels())
    {
        let image = mu_poly(f, delta, n)?.monic()?;
        let j = target
            .factors()
            .iter()
            .position(|g| *g == image)
            .expect("twisted factors divide x^n - delta^n");
        levels[j] = t;
    }
    assert!(levels.iter().all(|&t| t != usize::MAX));
    let image = Code::build(CodeSpec::new(target, levels)?);
    assert_eq!(image.cardinality(), code.cardinality());
    Ok(image)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z4() -> ChainRing {
        ChainRing::zpe(2, 2).unwrap()
    }

    fn cyclic_code(ring: &ChainRing, n: usize, levels: Vec<usize>) -> Code {
        let fz = Arc::new(factor_xn_minus_lambda(ring, n, &ring.one()).unwrap());
        Code::build(CodeSpec::new(fz, levels).unwrap())
    }

    #[test]
    fn gamma_code_over_z4_n3() {
        let r = z4();
        let c = cyclic_code(&r, 3, vec![1, 1]);
        assert_eq!(c.cardinality(), &BigUint::from(8u32));
        let gens = c.generator_polys();
        assert_eq!(gens.len(), 1);
        assert_eq!(gens[0].to_string(), "2");
        assert!(c.contains(&[r.from_int(2), r.zero(), r.zero()]).unwrap());
        assert!(!c.contains(&[r.one(), r.zero(), r.zero()]).unwrap());
        assert!(c.is_self_dual().unwrap());
        assert!(c.is_free().is_none());
    }

    #[test]
    fn full_and_zero_codes() {
        let r = z4();
        let full = cyclic_code(&r, 3, vec![0, 0]);
        assert_eq!(full.cardinality(), &BigUint::from(64u32));
        assert_eq!(full.is_free(), Some(3));
        let zero = cyclic_code(&r, 3, vec![2, 2]);
        assert_eq!(zero.cardinality(), &BigUint::from(1u32));
        assert!(zero.generators().is_empty());
        let d = full.dual().unwrap();
        assert_eq!(d.levels(), zero.levels());
        assert!(!full.is_self_dual().unwrap());
    }

    #[test]
    fn mixed_tower_over_z4_n7_has_cardinality_128() {
        let r = z4();
        // factors sorted: x+3, x^3+2x^2+x+3, x^3+3x^2+2x+3
        let c = cyclic_code(&r, 7, vec![1, 0, 2]);
        assert_eq!(c.cardinality(), &BigUint::from(128u32));
        assert!(c.is_self_dual().unwrap());
        assert!(c.is_free().is_none());
        let d = c.dual().unwrap();
        assert_eq!(d.levels(), c.levels());
    }

    #[test]
    fn free_code_membership_matches_the_ideal() {
        let r = z4();
        // levels {x+3: 0, x^2+x+1: e} generate the ideal of x^2+x+1
        let c = cyclic_code(&r, 3, vec![0, 2]);
        assert_eq!(c.is_free(), Some(1));
        assert_eq!(c.cardinality(), &BigUint::from(4u32));
        let one = r.one();
        assert!(c.contains(&[one.clone(), one.clone(), one.clone()]).unwrap());
        assert!(!c.contains(&[one.clone(), r.zero(), r.zero()]).unwrap());
        assert_eq!(
            c.contains(&[one.clone(), one.clone()]).unwrap_err(),
            Error::LengthMismatch { expected: 3, got: 2 }
        );
    }

    #[test]
    fn dual_roundtrip_restores_the_level_map() {
        let r = z4();
        for levels in [vec![0usize, 1], vec![2, 0], vec![1, 2], vec![0, 0]] {
            let c = cyclic_code(&r, 3, levels);
            let dd = c.dual().unwrap().dual().unwrap();
            assert_eq!(dd.levels(), c.levels());
            assert_eq!(dd.cardinality(), c.cardinality());
        }
    }

    #[test]
    fn negacyclic_duals_verify() {
        let r = z4();
        let minus_one = r.from_int(-1);
        let fz = Arc::new(factor_xn_minus_lambda(&r, 3, &minus_one).unwrap());
        let levels = vec![1; fz.len()];
        let c = Code::build(CodeSpec::new(fz, levels).unwrap());
        assert!(c.is_self_dual().unwrap());
    }

    #[test]
    fn principal_generator_generates() {
        let r = z4();
        let c = cyclic_code(&r, 7, vec![1, 0, 2]);
        let g = c.principal_generator();
        assert!(c.contains(&g.to_dense(7)).unwrap());
        let t = cyclic_code(&r, 3, vec![1, 1]);
        assert_eq!(t.principal_generator().to_string(), "2");
    }

    #[test]
    fn trivial_code_is_self_dual_middle_power() {
        let r = z4();
        let t = trivial(&r, 3).unwrap();
        assert_eq!(t.cardinality(), &BigUint::from(8u32));
        assert!(t.is_self_dual().unwrap());
        let z8 = ChainRing::zpe(2, 3).unwrap();
        assert_eq!(trivial(&z8, 3).unwrap_err(), Error::NoSuchCode);
    }

    #[test]
    fn construct_self_dual_z4_n7() {
        let r = z4();
        let c = construct_self_dual(&r, 7).unwrap();
        assert_eq!(c.cardinality(), &BigUint::from(128u32));
        // the chosen factor is the least cubic; its partner is killed
        assert_eq!(c.levels(), &[1, 0, 2]);
        assert!(c.is_self_dual().unwrap());
        assert_eq!(construct_self_dual(&r, 3).unwrap_err(), Error::NoSuchCode);
    }

    #[test]
    fn construct_self_dual_over_fqu() {
        let r = ChainRing::fq_u(2, 2, 2).unwrap();
        let c = construct_self_dual(&r, 3).unwrap();
        assert!(c.is_self_dual().unwrap());
        assert_eq!(
            c.cardinality() * c.cardinality(),
            r.size_pow(3)
        );
    }

    #[test]
    fn nth_roots_in_f5() {
        let f5 = ChainRing::zpe(5, 1).unwrap();
        let four = f5.from_int(4);
        assert_eq!(find_nth_root(&f5, &four, 2).unwrap(), Some(f5.from_int(2)));
        let two = f5.from_int(2);
        assert_eq!(find_nth_root(&f5, &two, 2).unwrap(), None);
        assert_eq!(find_nth_root(&f5, &f5.one(), 2).unwrap(), Some(f5.one()));
        assert!(verify_delta_power(&f5, &f5.from_int(2), 2, &four).is_ok());
        assert_eq!(
            verify_delta_power(&f5, &f5.from_int(3), 2, &two).unwrap_err(),
            Error::DeltaPowerMismatch
        );
    }

    #[test]
    fn mu_twists_cyclic_to_negacyclic_over_f5() {
        let f5 = ChainRing::zpe(5, 1).unwrap();
        let delta = f5.from_int(2); // delta^2 = 4 = -1
        // x^2 - 1 = (x+1)(x+4); killing x+4 leaves the ideal of x - 1
        let fz = Arc::new(factor_xn_minus_lambda(&f5, 2, &f5.one()).unwrap());
        let idx = fz
            .factors()
            .iter()
            .position(|f| f.to_string() == "x + 1")
            .unwrap();
        let mut levels = vec![1; 2];
        levels[idx] = 0;
        let c = Code::build(CodeSpec::new(fz, levels).unwrap());
        assert_eq!(c.generator_polys()[0].to_string(), "x + 4");

        let image = mu_code(&c, &delta).unwrap();
        assert_eq!(image.lambda(), &f5.from_int(4));
        // mu(x - 1) = 3x - 1, whose monic associate is x + 3
        assert_eq!(image.generator_polys()[0].to_string(), "x + 3");
        // weight-preserving on a codeword: (4,1) -> (4,3)
        assert!(c.contains(&[f5.from_int(4), f5.one()]).unwrap());
        assert!(image
            .contains(&[f5.from_int(4), f5.from_int(3)])
            .unwrap());
    }

    #[test]
    fn mu_with_delta_one_is_identity() {
        let r = z4();
        let c = cyclic_code(&r, 7, vec![1, 0, 2]);
        let image = mu_code(&c, &r.one()).unwrap();
        assert_eq!(image.levels(), c.levels());
        assert_eq!(image.lambda(), &r.one());
    }

    #[test]
    fn general_dual_for_lambda_outside_plus_minus_one() {
        let z9 = ChainRing::zpe(3, 2).unwrap();
        let two = z9.from_int(2);
        let fz = Arc::new(factor_xn_minus_lambda(&z9, 2, &two).unwrap());
        assert_eq!(fz.len(), 1);
        let c = Code::build(CodeSpec::new(fz, vec![1]).unwrap());
        assert_eq!(c.dual().unwrap_err(), Error::UnsupportedLambda);
        let d = c.dual_general().unwrap();
        assert_eq!(d.lambda(), &z9.from_int(5));
        assert_eq!(
            c.cardinality() * d.cardinality(),
            z9.size_pow(2)
        );
    }

    #[test]
    fn self_orthogonal_but_not_self_dual() {
        let r = z4();
        let c = cyclic_code(&r, 3, vec![2, 1]);
        assert!(c.is_self_orthogonal().unwrap());
        assert!(!c.is_self_dual().unwrap());
    }
}
