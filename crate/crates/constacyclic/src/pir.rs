//! Finite principal ideal rings as explicit products of chain rings, and
//! constacyclic codes over them.
//!
//! Every finite commutative principal ideal ring is a product of chain
//! rings, so we take the product presentation as the input format: elements
//! are tuples, arithmetic is componentwise, and the Chinese remainder
//! correspondence between a product code and its component codes is the
//! identity on our representation. The content is in what the
//! correspondence preserves: cardinality multiplies, duality and
//! self-duality pass through components, and the constacyclic shift for a
//! unit tuple lambda acts componentwise.
//!
//! The two-factor special case R + vR (v^2 = v) gets its own presentation
//! a + bv, identified with the tuple (a + b, a), plus the classical
//! generator forms: C = <v f1, (1-v) f2> = <v f1 + (1-v) f2>.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigUint;

use crate::code::Code;
use crate::cyclotomic::{
    compose_product_status, self_dual_verdict, DecisionRule, ExistenceVerdict, Status,
};
use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::ring::{ChainRing, RingElt};

#[derive(Debug)]
struct PiData {
    components: Vec<ChainRing>,
    rvr: bool,
}

/// A product of chain rings. The `rvr` presentation marks a ring entered as
/// R + vR, which changes formatting but not arithmetic.
#[derive(Clone)]
pub struct PiRing(Arc<PiData>);

/// An element of a product ring: one coordinate per component.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PirElt {
    parts: Vec<RingElt>,
}

impl PirElt {
    pub fn parts(&self) -> &[RingElt] {
        &self.parts
    }
    pub fn part(&self, i: usize) -> &RingElt {
        &self.parts[i]
    }
}

impl PartialEq for PiRing {
    fn eq(&self, other: &Self) -> bool {
        self.0.components == other.0.components && self.0.rvr == other.0.rvr
    }
}
impl Eq for PiRing {}

impl fmt::Debug for PiRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PiRing({})", self.spec_string())
    }
}

impl fmt::Display for PiRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.spec_string())
    }
}

impl PiRing {
    pub fn new(components: Vec<ChainRing>) -> PiRing {
        assert!(!components.is_empty(), "a product needs components");
        PiRing(Arc::new(PiData {
            components,
            rvr: false,
        }))
    }

    /// R + vR with v^2 = v: the product R x R through psi(a + bv) = (a+b, a).
    pub fn rvr(base: ChainRing) -> PiRing {
        PiRing(Arc::new(PiData {
            components: vec![base.clone(), base],
            rvr: true,
        }))
    }

    pub fn from_chain(ring: ChainRing) -> PiRing {
        PiRing::new(vec![ring])
    }

    pub fn components(&self) -> &[ChainRing] {
        &self.0.components
    }
    pub fn arity(&self) -> usize {
        self.0.components.len()
    }
    pub fn is_rvr(&self) -> bool {
        self.0.rvr
    }
    pub fn rvr_base(&self) -> Option<&ChainRing> {
        self.0.rvr.then(|| &self.0.components[0])
    }

    pub fn size(&self) -> BigUint {
        self.0
            .components
            .iter()
            .map(|r| BigUint::from(r.size()))
            .product()
    }

    pub fn size_pow(&self, n: usize) -> BigUint {
        self.size().pow(n as u32)
    }

    pub fn spec_string(&self) -> String {
        if self.0.rvr {
            let base = self.0.components[0].spec_string();
            format!("{base} + v{base}")
        } else {
            self.0
                .components
                .iter()
                .map(|r| r.spec_string())
                .collect::<Vec<_>>()
                .join(" x ")
        }
    }

    // ---- CRT plumbing ----

    /// Assemble an element from component parts.
    pub fn crt_compose(&self, parts: &[RingElt]) -> Result<PirElt> {
        if parts.len() != self.arity() {
            return Err(Error::ArityMismatch {
                expected: self.arity(),
                got: parts.len(),
            });
        }
        Ok(PirElt {
            parts: parts.to_vec(),
        })
    }

    /// Project onto the i-th component.
    pub fn crt_project(&self, x: &PirElt, i: usize) -> RingElt {
        x.parts[i].clone()
    }

    /// Component units of a unit tuple.
    pub fn unit_decompose(&self, x: &PirElt) -> Result<Vec<RingElt>> {
        if !self.is_unit(x) {
            return Err(Error::NotAUnit);
        }
        Ok(x.parts.clone())
    }

    /// The indicator idempotents e_1, ..., e_k.
    pub fn idempotents(&self) -> Vec<PirElt> {
        (0..self.arity())
            .map(|i| {
                let parts = self
                    .0
                    .components
                    .iter()
                    .enumerate()
                    .map(|(j, r)| if i == j { r.one() } else { r.zero() })
                    .collect();
                PirElt { parts }
            })
            .collect()
    }

    // ---- componentwise arithmetic ----

    pub fn zero(&self) -> PirElt {
        PirElt {
            parts: self.0.components.iter().map(|r| r.zero()).collect(),
        }
    }

    pub fn one(&self) -> PirElt {
        PirElt {
            parts: self.0.components.iter().map(|r| r.one()).collect(),
        }
    }

    pub fn from_int(&self, i: i64) -> PirElt {
        PirElt {
            parts: self.0.components.iter().map(|r| r.from_int(i)).collect(),
        }
    }

    fn zip(&self, a: &PirElt, b: &PirElt, f: impl Fn(&ChainRing, &RingElt, &RingElt) -> RingElt) -> PirElt {
        PirElt {
            parts: self
                .0
                .components
                .iter()
                .zip(a.parts.iter().zip(&b.parts))
                .map(|(r, (x, y))| f(r, x, y))
                .collect(),
        }
    }

    pub fn add(&self, a: &PirElt, b: &PirElt) -> PirElt {
        self.zip(a, b, |r, x, y| r.add(x, y))
    }

    pub fn sub(&self, a: &PirElt, b: &PirElt) -> PirElt {
        self.zip(a, b, |r, x, y| r.sub(x, y))
    }

    pub fn mul(&self, a: &PirElt, b: &PirElt) -> PirElt {
        self.zip(a, b, |r, x, y| r.mul(x, y))
    }

    pub fn neg(&self, a: &PirElt) -> PirElt {
        PirElt {
            parts: self
                .0
                .components
                .iter()
                .zip(&a.parts)
                .map(|(r, x)| r.neg(x))
                .collect(),
        }
    }

    pub fn pow(&self, a: &PirElt, n: u64) -> PirElt {
        PirElt {
            parts: self
                .0
                .components
                .iter()
                .zip(&a.parts)
                .map(|(r, x)| r.pow(x, n))
                .collect(),
        }
    }

    pub fn is_zero(&self, a: &PirElt) -> bool {
        self.0
            .components
            .iter()
            .zip(&a.parts)
            .all(|(r, x)| r.is_zero(x))
    }

    pub fn is_unit(&self, a: &PirElt) -> bool {
        self.0
            .components
            .iter()
            .zip(&a.parts)
            .all(|(r, x)| r.is_unit(x))
    }

    pub fn inv(&self, a: &PirElt) -> Result<PirElt> {
        let parts = self
            .0
            .components
            .iter()
            .zip(&a.parts)
            .map(|(r, x)| r.inv(x))
            .collect::<Result<Vec<_>>>()?;
        Ok(PirElt { parts })
    }

    // ---- enumeration (mixed radix over components, first fastest) ----

    pub fn encode(&self, x: &PirElt) -> u64 {
        let mut acc = 0u64;
        for (r, p) in self.0.components.iter().zip(&x.parts).rev() {
            acc = acc * r.size() + r.encode(p);
        }
        acc
    }

    pub fn decode(&self, mut idx: u64) -> PirElt {
        let parts = self
            .0
            .components
            .iter()
            .map(|r| {
                let e = r.decode(idx % r.size());
                idx /= r.size();
                e
            })
            .collect();
        PirElt { parts }
    }

    pub fn elements_bounded(&self, bound: u64) -> Result<Vec<PirElt>> {
        let size = self.size();
        if size > BigUint::from(bound) {
            return Err(Error::RingTooLarge {
                size: u64::try_from(&size).unwrap_or(u64::MAX),
                bound,
            });
        }
        let size: u64 = size.try_into().unwrap();
        Ok((0..size).map(|i| self.decode(i)).collect())
    }

    pub fn units_bounded(&self, bound: u64) -> Result<Vec<PirElt>> {
        Ok(self
            .elements_bounded(bound)?
            .into_iter()
            .filter(|x| self.is_unit(x))
            .collect())
    }

    // ---- the a + bv presentation of R + vR ----

    /// psi(a + bv) = (a + b, a).
    pub fn rvr_from_ab(&self, a: &RingElt, b: &RingElt) -> PirElt {
        let base = self.rvr_base().expect("a + bv needs an R + vR ring");
        PirElt {
            parts: vec![base.add(a, b), a.clone()],
        }
    }

    /// Inverse of psi: recover (a, b) from the tuple.
    pub fn rvr_to_ab(&self, x: &PirElt) -> (RingElt, RingElt) {
        let base = self.rvr_base().expect("a + bv needs an R + vR ring");
        let a = x.parts[1].clone();
        let b = base.sub(&x.parts[0], &a);
        (a, b)
    }

    /// The idempotent v = psi^{-1}(1, 0).
    pub fn rvr_v(&self) -> PirElt {
        let base = self.rvr_base().expect("a + bv needs an R + vR ring");
        self.rvr_from_ab(&base.zero(), &base.one())
    }

    /// Render an element; R + vR rings use the a + bv form.
    pub fn fmt_elt(&self, x: &PirElt) -> String {
        if let Some(base) = self.rvr_base() {
            let (a, b) = self.rvr_to_ab(x);
            let a0 = base.is_zero(&a);
            let b0 = base.is_zero(&b);
            let vterm = if b == base.one() {
                "v".to_string()
            } else {
                format!("{}v", base.fmt_elt(&b))
            };
            return match (a0, b0) {
                (true, true) => "0".into(),
                (false, true) => base.fmt_elt(&a),
                (true, false) => vterm,
                (false, false) => format!("{} + {}", base.fmt_elt(&a), vterm),
            };
        }
        let inner: Vec<String> = self
            .0
            .components
            .iter()
            .zip(&x.parts)
            .map(|(r, p)| r.fmt_elt(p))
            .collect();
        format!("({})", inner.join(", "))
    }
}

/// A polynomial over a product ring: one component polynomial per factor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PirPoly {
    parts: Vec<Poly>,
}

impl PirPoly {
    pub fn new(parts: Vec<Poly>) -> PirPoly {
        PirPoly { parts }
    }
    pub fn parts(&self) -> &[Poly] {
        &self.parts
    }

    /// Dense coefficient vector of tuples.
    pub fn to_vector(&self, ring: &PiRing, n: usize) -> Vec<PirElt> {
        let dense: Vec<Vec<RingElt>> = self.parts.iter().map(|p| p.to_dense(n)).collect();
        (0..n)
            .map(|j| {
                ring.crt_compose(&dense.iter().map(|d| d[j].clone()).collect::<Vec<_>>())
                    .unwrap()
            })
            .collect()
    }

    pub fn from_vector(ring: &PiRing, v: &[PirElt]) -> PirPoly {
        let parts = ring
            .components()
            .iter()
            .enumerate()
            .map(|(i, r)| {
                Poly::new(r, v.iter().map(|x| x.parts[i].clone()).collect())
            })
            .collect();
        PirPoly { parts }
    }

    /// Render over an R + vR ring with a + bv coefficients.
    pub fn rvr_string(&self, ring: &PiRing, n: usize) -> String {
        let v = self.to_vector(ring, n);
        let terms: Vec<String> = (0..n)
            .rev()
            .filter(|&j| !ring.is_zero(&v[j]))
            .map(|j| {
                let c = ring.fmt_elt(&v[j]);
                let c = if c.contains(" + ") {
                    format!("({c})")
                } else {
                    c
                };
                match j {
                    0 => c,
                    1 if c == "1" => "x".into(),
                    1 => format!("{c}x"),
                    _ if c == "1" => format!("x^{j}"),
                    _ => format!("{c}x^{j}"),
                }
            })
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }
}

/// The constacyclic shift over a product ring.
pub fn pir_lambda_shift(ring: &PiRing, lambda: &PirElt, v: &[PirElt]) -> Vec<PirElt> {
    let n = v.len();
    let mut out = Vec::with_capacity(n);
    out.push(ring.mul(lambda, &v[n - 1]));
    out.extend_from_slice(&v[..n - 1]);
    out
}

/// A lambda-constacyclic code over a product ring: the Chinese product of
/// one component code per factor.
#[derive(Clone)]
pub struct ProductCode {
    ring: PiRing,
    components: Vec<Code>,
    cardinality: BigUint,
}

impl fmt::Debug for ProductCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "ProductCode({}, n={}, |C|={})",
            self.ring.spec_string(),
            self.n(),
            self.cardinality
        )
    }
}

/// Glue component codes of a common length into a product code.
pub fn chinese(ring: &PiRing, components: Vec<Code>) -> Result<ProductCode> {
    if components.len() != ring.arity() {
        return Err(Error::ArityMismatch {
            expected: ring.arity(),
            got: components.len(),
        });
    }
    let n = components[0].n();
    for c in &components {
        if c.n() != n {
            return Err(Error::LengthMismatch {
                expected: n,
                got: c.n(),
            });
        }
    }
    for (r, c) in ring.components().iter().zip(&components) {
        assert_eq!(c.ring(), r, "component code lives over the component ring");
    }
    let cardinality = components.iter().map(|c| c.cardinality().clone()).product();
    Ok(ProductCode {
        ring: ring.clone(),
        components,
        cardinality,
    })
}

impl ProductCode {
    pub fn ring(&self) -> &PiRing {
        &self.ring
    }
    pub fn n(&self) -> usize {
        self.components[0].n()
    }
    pub fn components(&self) -> &[Code] {
        &self.components
    }
    pub fn cardinality(&self) -> &BigUint {
        &self.cardinality
    }

    /// The unit tuple lambda assembled from component lambdas.
    pub fn lambda(&self) -> PirElt {
        self.ring
            .crt_compose(
                &self
                    .components
                    .iter()
                    .map(|c| c.lambda().clone())
                    .collect::<Vec<_>>(),
            )
            .unwrap()
    }

    pub fn contains(&self, v: &[PirElt]) -> Result<bool> {
        if v.len() != self.n() {
            return Err(Error::LengthMismatch {
                expected: self.n(),
                got: v.len(),
            });
        }
        for (i, c) in self.components.iter().enumerate() {
            let part: Vec<RingElt> = v.iter().map(|x| x.parts[i].clone()).collect();
            if !c.contains(&part)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Dual = Chinese product of the component duals.
    pub fn dual(&self) -> Result<ProductCode> {
        let duals = self
            .components
            .iter()
            .map(|c| c.dual())
            .collect::<Result<Vec<_>>>()?;
        let out = chinese(&self.ring, duals)?;
        assert_eq!(
            self.cardinality.clone() * out.cardinality.clone(),
            self.ring.size_pow(self.n())
        );
        Ok(out)
    }

    /// Self-dual exactly when every component is.
    pub fn is_self_dual(&self) -> Result<bool> {
        for c in &self.components {
            if !c.is_self_dual()? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Free of rank k exactly when every component is free of the same rank.
    pub fn is_free(&self) -> Option<usize> {
        let ranks: Vec<usize> = self
            .components
            .iter()
            .map(|c| c.is_free())
            .collect::<Option<Vec<_>>>()?;
        (ranks.windows(2).all(|w| w[0] == w[1])).then(|| ranks[0])
    }

    /// Componentwise twist by a unit tuple delta; the image is
    /// delta^n-constacyclic with identical cardinality.
    pub fn mu(&self, delta: &PirElt) -> Result<ProductCode> {
        let images = self
            .components
            .iter()
            .zip(delta.parts())
            .map(|(c, d)| crate::code::mu_code(c, d))
            .collect::<Result<Vec<_>>>()?;
        let out = chinese(&self.ring, images)?;
        assert_eq!(out.cardinality(), self.cardinality());
        Ok(out)
    }

    /// Generator vectors of all components, embedded as tuple vectors (zero
    /// in the other components). Their shift orbits span the product code.
    pub fn generator_vectors(&self) -> Vec<Vec<PirElt>> {
        let n = self.n();
        let mut out = Vec::new();
        for (i, c) in self.components.iter().enumerate() {
            for g in c.generator_vectors() {
                let vec: Vec<PirElt> = (0..n)
                    .map(|j| {
                        let parts = self
                            .ring
                            .components()
                            .iter()
                            .enumerate()
                            .map(|(l, r)| if l == i { g[j].clone() } else { r.zero() })
                            .collect();
                        PirElt { parts }
                    })
                    .collect();
                out.push(vec);
            }
        }
        out
    }
}

/// Least unit tuple delta with delta^n = lambda, assembled componentwise.
pub fn find_nth_root_pir(ring: &PiRing, lambda: &PirElt, n: usize) -> Result<Option<PirElt>> {
    let mut parts = Vec::with_capacity(ring.arity());
    for (r, l) in ring.components().iter().zip(lambda.parts()) {
        match crate::code::find_nth_root(r, l, n)? {
            Some(d) => parts.push(d),
            None => return Ok(None),
        }
    }
    Ok(Some(PirElt { parts }))
}

/// Verdict for a product ring: compose the component verdicts.
pub fn product_verdict(ring: &PiRing, n: usize) -> Result<ExistenceVerdict> {
    let verdicts = ring
        .components()
        .iter()
        .map(|r| self_dual_verdict(r, n))
        .collect::<Result<Vec<_>>>()?;
    if verdicts.len() == 1 {
        return Ok(verdicts.into_iter().next().unwrap());
    }
    let status = compose_product_status(&verdicts.iter().map(|v| v.status).collect::<Vec<_>>());
    Ok(ExistenceVerdict {
        status,
        decided_by: DecisionRule::ComponentComposition,
        witness: None,
    })
}

/// A nontrivial self-dual cyclic product code, when the composed verdict
/// admits one: nontrivial witnesses where a component has one, the trivial
/// middle-power code elsewhere.
pub fn construct_product_self_dual(ring: &PiRing, n: usize) -> Result<ProductCode> {
    let verdict = product_verdict(ring, n)?;
    if verdict.status != Status::NontrivialExists {
        return Err(Error::NoSuchCode);
    }
    let components = ring
        .components()
        .iter()
        .map(|r| match self_dual_verdict(r, n)?.status {
            Status::NontrivialExists => crate::code::construct_self_dual(r, n),
            _ => crate::code::trivial(r, n),
        })
        .collect::<Result<Vec<_>>>()?;
    let code = chinese(ring, components)?;
    assert!(code.is_self_dual()?);
    Ok(code)
}

/// The two generator presentations of a code over R + vR.
pub struct RvrGenerators {
    /// Principal generator of the v-component code.
    pub f1: Poly,
    /// Principal generator of the (1-v)-component code.
    pub f2: Poly,
    /// v f1 + (1-v) f2, generating the whole code alone.
    pub combined: PirPoly,
    /// The pair (v f1, (1-v) f2).
    pub pair: (PirPoly, PirPoly),
}

/// v f1 + (1-v) f2 as a tuple polynomial: (f1, f2).
pub fn rvr_combine(ring: &PiRing, f1: &Poly, f2: &Poly) -> PirPoly {
    assert!(ring.is_rvr(), "the v presentation needs an R + vR ring");
    assert_eq!(f1.ring(), &ring.components()[0]);
    assert_eq!(f2.ring(), &ring.components()[1]);
    PirPoly::new(vec![f1.clone(), f2.clone()])
}

/// Extract the R + vR generator forms from a product code, asserting that
/// the pair and the sum generate the same code.
pub fn rvr_generators(code: &ProductCode) -> Result<RvrGenerators> {
    let ring = code.ring();
    if !ring.is_rvr() {
        return Err(Error::MalformedDescriptor(
            "generator forms in v need an R + vR ring".into(),
        ));
    }
    let base = &ring.components()[0];
    let n = code.n();
    let f1 = code.components()[0].principal_generator();
    let f2 = code.components()[1].principal_generator();
    let combined = rvr_combine(ring, &f1, &f2);
    let vf1 = PirPoly::new(vec![f1.clone(), Poly::zero(base)]);
    let wf2 = PirPoly::new(vec![Poly::zero(base), f2.clone()]);

    // all three tuple polynomials are codewords, and multiplying the sum by
    // v and 1 - v recovers the pair, so the two ideals coincide
    for p in [&combined, &vf1, &wf2] {
        assert!(code.contains(&p.to_vector(ring, n))?);
    }
    assert_eq!(vf1.parts()[0], combined.parts()[0]);
    assert_eq!(wf2.parts()[1], combined.parts()[1]);

    Ok(RvrGenerators {
        f1,
        f2,
        combined,
        pair: (vf1, wf2),
    })
}
