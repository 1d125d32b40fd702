//! Brute-force ground truth for small instances.
//!
//! Everything here works by exhaustive enumeration over precomputed
//! operation tables: codes are literal sets of vectors, duals are full
//! orthogonality scans, factorizations are trial division. No Hensel
//! lifting, no discrete logs, no level arithmetic. The point is to check
//! the structural machinery against an implementation too simple to share
//! its bugs, so the two sides agree only if both are right.
//!
//! Sizes are capped hard: the ring itself at `ORACLE_RING_BOUND` elements
//! and the ambient space R^n at `ORACLE_SPACE_BOUND` vectors.

use std::collections::HashMap;

use crate::code::Code;
use crate::error::{Error, Result};
use crate::pir::{PiRing, PirElt, ProductCode};
use crate::poly::Poly;
use crate::ring::{ChainRing, RingElt};

/// Largest ring the oracle will tabulate.
pub const ORACLE_RING_BOUND: u64 = 512;
/// Largest ambient vector space for generator-closure work.
pub const ORACLE_SPACE_BOUND: u64 = 1 << 20;
/// Largest ambient vector space for full submodule enumeration.
pub const ORACLE_FULL_ENUM_BOUND: u64 = 1 << 14;
/// Largest candidate count for trial-division factoring.
pub const ORACLE_FACTOR_BOUND: u64 = 1_000_000;

/// Exhaustive-set machinery for codes of length n over a small product ring.
pub struct BruteForce {
    ring: PiRing,
    n: usize,
    s: u64,
    space: u64,
    elements: Vec<PirElt>,
    add: Vec<u16>,
    mul: Vec<u16>,
}

impl BruteForce {
    pub fn new(ring: &PiRing, n: usize) -> Result<BruteForce> {
        let size = ring.size();
        let s = u64::try_from(&size).unwrap_or(u64::MAX);
        if s > ORACLE_RING_BOUND {
            return Err(Error::TooLargeForOracle {
                size: s as u128,
                bound: ORACLE_RING_BOUND as u128,
            });
        }
        let space = (s as u128).pow(n as u32);
        if space > ORACLE_SPACE_BOUND as u128 {
            return Err(Error::TooLargeForOracle {
                size: space,
                bound: ORACLE_SPACE_BOUND as u128,
            });
        }
        let elements = ring.elements_bounded(ORACLE_RING_BOUND)?;
        let mut add = vec![0u16; (s * s) as usize];
        let mut mul = vec![0u16; (s * s) as usize];
        for a in 0..s {
            for b in 0..s {
                let sum = ring.add(&elements[a as usize], &elements[b as usize]);
                let prod = ring.mul(&elements[a as usize], &elements[b as usize]);
                add[(a * s + b) as usize] = ring.encode(&sum) as u16;
                mul[(a * s + b) as usize] = ring.encode(&prod) as u16;
            }
        }
        Ok(BruteForce {
            ring: ring.clone(),
            n,
            s,
            space: space as u64,
            elements,
            add,
            mul,
        })
    }

    pub fn for_chain(ring: &ChainRing, n: usize) -> Result<BruteForce> {
        BruteForce::new(&PiRing::from_chain(ring.clone()), n)
    }

    pub fn ring(&self) -> &PiRing {
        &self.ring
    }
    pub fn n(&self) -> usize {
        self.n
    }
    pub fn space(&self) -> u64 {
        self.space
    }

    pub fn elt_index(&self, x: &PirElt) -> u16 {
        self.ring.encode(x) as u16
    }

    pub fn encode_vec(&self, v: &[PirElt]) -> u32 {
        assert_eq!(v.len(), self.n);
        let mut acc = 0u64;
        for x in v.iter().rev() {
            acc = acc * self.s + self.ring.encode(x);
        }
        acc as u32
    }

    pub fn decode_vec(&self, mut code: u32) -> Vec<PirElt> {
        (0..self.n)
            .map(|_| {
                let idx = (code as u64 % self.s) as usize;
                code = (code as u64 / self.s) as u32;
                self.elements[idx].clone()
            })
            .collect()
    }

    /// Encode a vector over a single chain ring (arity-1 oracles).
    pub fn encode_chain_vec(&self, v: &[RingElt]) -> u32 {
        assert_eq!(self.ring.arity(), 1);
        let tuple: Vec<PirElt> = v
            .iter()
            .map(|x| self.ring.crt_compose(std::slice::from_ref(x)).unwrap())
            .collect();
        self.encode_vec(&tuple)
    }

    fn coords(&self, enc: u32) -> Vec<u16> {
        let mut code = enc as u64;
        (0..self.n)
            .map(|_| {
                let c = (code % self.s) as u16;
                code /= self.s;
                c
            })
            .collect()
    }

    fn encode_coords(&self, coords: &[u16]) -> u32 {
        let mut acc = 0u64;
        for &c in coords.iter().rev() {
            acc = acc * self.s + c as u64;
        }
        acc as u32
    }

    fn add_vec(&self, a: u32, b: u32) -> u32 {
        let (ca, cb) = (self.coords(a), self.coords(b));
        let sum: Vec<u16> = ca
            .iter()
            .zip(&cb)
            .map(|(&x, &y)| self.add[(x as u64 * self.s + y as u64) as usize])
            .collect();
        self.encode_coords(&sum)
    }

    fn scalar_vec(&self, r: u16, a: u32) -> u32 {
        let ca = self.coords(a);
        let out: Vec<u16> = ca
            .iter()
            .map(|&x| self.mul[(r as u64 * self.s + x as u64) as usize])
            .collect();
        self.encode_coords(&out)
    }

    /// The lambda-constacyclic shift on encoded vectors.
    pub fn shift_vec(&self, lambda: u16, a: u32) -> u32 {
        let ca = self.coords(a);
        let mut out = Vec::with_capacity(self.n);
        out.push(self.mul[(lambda as u64 * self.s + ca[self.n - 1] as u64) as usize]);
        out.extend_from_slice(&ca[..self.n - 1]);
        self.encode_coords(&out)
    }

    /// Elementwise inner product, as an element index.
    pub fn inner(&self, a: u32, b: u32) -> u16 {
        let (ca, cb) = (self.coords(a), self.coords(b));
        let mut acc = 0u16;
        for (&x, &y) in ca.iter().zip(&cb) {
            let p = self.mul[(x as u64 * self.s + y as u64) as usize];
            acc = self.add[(acc as u64 * self.s + p as u64) as usize];
        }
        acc
    }

    /// Smallest shift-closed submodule containing the generators: close the
    /// shift orbit of each generator, then sweep scalar multiples through
    /// the running span. Returns the sorted member list.
    pub fn closure(&self, gens: &[u32], lambda: &PirElt) -> Vec<u32> {
        let lam = self.elt_index(lambda);
        let mut seen = Bitset::new(self.space);
        let mut list = vec![0u32];
        seen.set(0);
        for &g in gens {
            let mut orbit = g;
            for _ in 0..self.n {
                if !seen.get(orbit) {
                    let snapshot = list.clone();
                    for r in 1..self.s as u16 {
                        let rb = self.scalar_vec(r, orbit);
                        for &v in &snapshot {
                            let w = self.add_vec(v, rb);
                            if !seen.get(w) {
                                seen.set(w);
                                list.push(w);
                            }
                        }
                    }
                }
                orbit = self.shift_vec(lam, orbit);
            }
        }
        list.sort_unstable();
        list
    }

    /// Member set of a library code, from its generator vectors.
    pub fn members_of_code(&self, code: &Code) -> Result<Vec<u32>> {
        assert_eq!(self.ring.arity(), 1);
        assert_eq!(code.n(), self.n);
        let gens: Vec<u32> = code
            .generator_vectors()
            .iter()
            .map(|g| self.encode_chain_vec(g))
            .collect();
        let lambda = self.ring.crt_compose(std::slice::from_ref(code.lambda()))?;
        Ok(self.closure(&gens, &lambda))
    }

    /// Member set of a product code, from its embedded generator vectors.
    pub fn members_of_product(&self, code: &ProductCode) -> Result<Vec<u32>> {
        assert_eq!(code.ring(), &self.ring);
        assert_eq!(code.n(), self.n);
        let gens: Vec<u32> = code
            .generator_vectors()
            .iter()
            .map(|g| self.encode_vec(g))
            .collect();
        Ok(self.closure(&gens, &code.lambda()))
    }

    /// Cartesian glue of per-component member lists into product vectors.
    pub fn glue(&self, parts: &[Vec<Vec<RingElt>>]) -> Vec<u32> {
        assert_eq!(parts.len(), self.ring.arity());
        let mut out = vec![Vec::<RingElt>::new()];
        for part in parts {
            let mut next = Vec::with_capacity(out.len() * part.len());
            for prefix in &out {
                for w in part {
                    let mut row = prefix.clone();
                    row.extend(w.iter().cloned());
                    next.push(row);
                }
            }
            out = next;
        }
        let k = self.ring.arity();
        let mut encoded: Vec<u32> = out
            .into_iter()
            .map(|row| {
                let v: Vec<PirElt> = (0..self.n)
                    .map(|j| {
                        let tuple: Vec<RingElt> =
                            (0..k).map(|i| row[i * self.n + j].clone()).collect();
                        self.ring.crt_compose(&tuple).unwrap()
                    })
                    .collect();
                self.encode_vec(&v)
            })
            .collect();
        encoded.sort_unstable();
        encoded
    }

    /// Every lambda-constacyclic code, as sorted member sets, by closing
    /// every single-vector generator. Vectors in one (unit, shift) orbit
    /// generate the same code, so only orbit representatives are closed.
    /// On very small spaces, pairwise joins are also closed and checked to
    /// land back in the list.
    pub fn all_codes(&self, lambda: &PirElt) -> Result<Vec<Vec<u32>>> {
        if self.space > ORACLE_FULL_ENUM_BOUND {
            return Err(Error::TooLargeForOracle {
                size: self.space as u128,
                bound: ORACLE_FULL_ENUM_BOUND as u128,
            });
        }
        let lam = self.elt_index(lambda);
        let units: Vec<u16> = self
            .ring
            .units_bounded(ORACLE_RING_BOUND)
            .unwrap()
            .iter()
            .map(|u| self.elt_index(u))
            .collect();
        let mut rep_to_code: HashMap<u32, usize> = HashMap::new();
        let mut codes: Vec<Vec<u32>> = Vec::new();
        let mut rep_gen: Vec<u32> = Vec::new();
        for v in 0..self.space as u32 {
            let mut rep = v;
            for &u in &units {
                let mut w = self.scalar_vec(u, v);
                for _ in 0..self.n {
                    rep = rep.min(w);
                    w = self.shift_vec(lam, w);
                }
            }
            if rep_to_code.contains_key(&rep) {
                continue;
            }
            let members = self.closure(&[rep], lambda);
            let idx = codes.iter().position(|c| *c == members).unwrap_or_else(|| {
                codes.push(members);
                rep_gen.push(rep);
                codes.len() - 1
            });
            rep_to_code.insert(rep, idx);
        }
        if self.space <= 256 {
            for i in 0..rep_gen.len() {
                for j in (i + 1)..rep_gen.len() {
                    let join = self.closure(&[rep_gen[i], rep_gen[j]], lambda);
                    assert!(
                        codes.contains(&join),
                        "pairwise joins stay in the single-generator list"
                    );
                }
            }
        }
        codes.sort_unstable();
        Ok(codes)
    }

    /// Greedily thin a member set down to a spanning generator list.
    fn spanning_gens(&self, members: &[u32], lambda: &PirElt) -> Vec<u32> {
        let mut gens = Vec::new();
        let mut span = vec![0u32];
        for &m in members {
            if span.binary_search(&m).is_err() {
                gens.push(m);
                span = self.closure(&gens, lambda);
                if span.len() == members.len() {
                    break;
                }
            }
        }
        gens
    }

    /// All vectors orthogonal to every member, by full scan against the
    /// shift orbits of a spanning generator set (the orbits span the code
    /// as a module, so orthogonality to them is orthogonality to all).
    pub fn orthogonal_complement(&self, members: &[u32], lambda: &PirElt) -> Vec<u32> {
        let lam = self.elt_index(lambda);
        let mut probes = Vec::new();
        for g in self.spanning_gens(members, lambda) {
            let mut orbit = g;
            for _ in 0..self.n {
                probes.push(orbit);
                orbit = self.shift_vec(lam, orbit);
            }
        }
        probes.sort_unstable();
        probes.dedup();
        (0..self.space as u32)
            .filter(|&w| probes.iter().all(|&g| self.inner(w, g) == 0))
            .collect()
    }

    /// Set equality with the scanned complement.
    pub fn is_self_dual_set(&self, members: &[u32], lambda: &PirElt) -> bool {
        self.orthogonal_complement(members, lambda) == members
    }

    pub fn is_shift_closed(&self, members: &[u32], lambda: &PirElt) -> bool {
        let lam = self.elt_index(lambda);
        members
            .iter()
            .all(|&m| members.binary_search(&self.shift_vec(lam, m)).is_ok())
    }

    /// Hamming weight histogram, indexed by weight 0..=n.
    pub fn weight_hist(&self, members: &[u32]) -> Vec<u64> {
        let mut hist = vec![0u64; self.n + 1];
        for &m in members {
            let wt = self.coords(m).iter().filter(|&&c| c != 0).count();
            hist[wt] += 1;
        }
        hist
    }

    /// Independent freeness test over a single chain ring: a module is free
    /// of rank k exactly when |gamma^t C| = q^{k(e-t)} for every t.
    pub fn free_rank_of_set(&self, members: &[u32]) -> Option<usize> {
        assert_eq!(self.ring.arity(), 1);
        let base = &self.ring.components()[0];
        let (q, e) = (base.q(), base.e());
        let mut sizes = Vec::with_capacity(e + 1);
        for t in 0..=e {
            let g = self
                .ring
                .crt_compose(std::slice::from_ref(&base.gamma_pow(t)))
                .unwrap();
            let gi = self.elt_index(&g);
            let mut image: Vec<u32> = members.iter().map(|&m| self.scalar_vec(gi, m)).collect();
            image.sort_unstable();
            image.dedup();
            sizes.push(image.len() as u64);
        }
        for k in 0..=self.n {
            let fits = (0..=e).all(|t| {
                let exp = (k * (e - t)) as u32;
                q.checked_pow(exp).is_some_and(|want| sizes[t] == want)
            });
            if fits {
                return Some(k);
            }
        }
        None
    }
}

/// Factor a monic polynomial over a residue field by trial division over
/// all monic candidates of ascending degree.
pub fn exhaustive_factor(f: &Poly) -> Result<Vec<Poly>> {
    let field = f.ring().clone();
    assert!(field.is_field(), "trial division runs over a field");
    assert!(f.is_monic(), "trial division expects a monic input");
    let deg = f.degree().expect("nonzero input");
    let q = field.q();
    let half = deg / 2;
    let candidates = (q as u128).checked_pow(half as u32).unwrap_or(u128::MAX);
    if candidates > ORACLE_FACTOR_BOUND as u128 {
        return Err(Error::TooLargeForOracle {
            size: candidates,
            bound: ORACLE_FACTOR_BOUND as u128,
        });
    }
    let mut rem = f.clone();
    let mut out = Vec::new();
    let mut d = 1usize;
    while rem.degree().is_some_and(|rd| rd >= 2 * d) {
        let mut hit = false;
        for idx in 0..q.pow(d as u32) {
            let g = monic_by_index(&field, d, idx);
            if rem.rem(&g).unwrap().is_zero() {
                rem = rem.divmod(&g).unwrap().0;
                out.push(g);
                hit = true;
                break;
            }
        }
        if !hit {
            d += 1;
        }
    }
    if rem.degree() != Some(0) {
        out.push(rem);
    }
    out.sort_by_key(|g| g.sort_key());
    Ok(out)
}

/// The idx-th monic polynomial of degree d, coefficients running through
/// the field in enumeration order, lowest degree fastest.
fn monic_by_index(field: &ChainRing, d: usize, mut idx: u64) -> Poly {
    let q = field.q();
    let mut coeffs = Vec::with_capacity(d + 1);
    for _ in 0..d {
        coeffs.push(field.decode(idx % q));
        idx /= q;
    }
    coeffs.push(field.one());
    Poly::new(field, coeffs)
}

struct Bitset {
    words: Vec<u64>,
}

impl Bitset {
    fn new(size: u64) -> Bitset {
        Bitset {
            words: vec![0u64; size.div_ceil(64) as usize],
        }
    }
    fn set(&mut self, i: u32) {
        self.words[(i / 64) as usize] |= 1u64 << (i % 64);
    }
    fn get(&self, i: u32) -> bool {
        self.words[(i / 64) as usize] >> (i % 64) & 1 == 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::CodeSpec;
    use crate::factor::{factor_over_field, factor_xn_minus_lambda};
    use std::sync::Arc;

    fn code_over(ring: &ChainRing, n: usize, lambda: i64, levels: Vec<usize>) -> Code {
        let fz =
            Arc::new(factor_xn_minus_lambda(ring, n, &ring.from_int(lambda)).unwrap());
        Code::build(CodeSpec::new(fz, levels).unwrap())
    }

    #[test]
    fn oracle_respects_size_caps() {
        let z = ChainRing::zpe(2, 10).unwrap();
        assert!(matches!(
            BruteForce::for_chain(&z, 1),
            Err(Error::TooLargeForOracle { .. })
        ));
        let z4 = ChainRing::zpe(2, 2).unwrap();
        assert!(matches!(
            BruteForce::for_chain(&z4, 11),
            Err(Error::TooLargeForOracle { .. })
        ));
        assert!(BruteForce::for_chain(&z4, 10).is_ok());
    }

    #[test]
    fn closure_rebuilds_library_member_sets() {
        let z4 = ChainRing::zpe(2, 2).unwrap();
        let oracle = BruteForce::for_chain(&z4, 3).unwrap();
        // gamma code: 8 members, all even vectors
        let c = code_over(&z4, 3, 1, vec![1, 1]);
        let members = oracle.members_of_code(&c).unwrap();
        assert_eq!(members.len(), 8);
        for &m in &members {
            let v = oracle.decode_vec(m);
            assert!(c
                .contains(&v.iter().map(|x| x.part(0).clone()).collect::<Vec<_>>())
                .unwrap());
        }
        // mixed tower over n = 7 matches the claimed cardinality
        let c = code_over(&z4, 7, 1, vec![1, 0, 2]);
        let oracle7 = BruteForce::for_chain(&z4, 7).unwrap();
        let members = oracle7.members_of_code(&c).unwrap();
        assert_eq!(members.len(), 128);
        let lam = oracle7.ring().one();
        assert!(oracle7.is_shift_closed(&members, &lam));
    }

    #[test]
    fn all_codes_counts_match_the_level_formula() {
        // Z4, n = 3: two factors, (e+1)^2 = 9 codes
        let z4 = ChainRing::zpe(2, 2).unwrap();
        let oracle = BruteForce::for_chain(&z4, 3).unwrap();
        let codes = oracle.all_codes(&oracle.ring().one()).unwrap();
        assert_eq!(codes.len(), 9);

        // F3, n = 4, lambda = 1: x^4 - 1 has 3 factors over F3, 2^3 = 8
        let f3 = ChainRing::zpe(3, 1).unwrap();
        let oracle = BruteForce::for_chain(&f3, 4).unwrap();
        let codes = oracle.all_codes(&oracle.ring().one()).unwrap();
        assert_eq!(codes.len(), 8);

        // negacyclic over F3, n = 2: x^2 + 1 irreducible, only zero and full
        let oracle = BruteForce::for_chain(&f3, 2).unwrap();
        let lam = oracle
            .ring()
            .crt_compose(&[f3.from_int(-1)])
            .unwrap();
        let codes = oracle.all_codes(&lam).unwrap();
        assert_eq!(codes.len(), 2);
    }

    #[test]
    fn every_enumerated_code_matches_a_level_map() {
        let z4 = ChainRing::zpe(2, 2).unwrap();
        let oracle = BruteForce::for_chain(&z4, 3).unwrap();
        let fz = Arc::new(factor_xn_minus_lambda(&z4, 3, &z4.one()).unwrap());
        let mut from_levels: Vec<Vec<u32>> = Vec::new();
        for t0 in 0..=2 {
            for t1 in 0..=2 {
                let c = Code::build(CodeSpec::new(fz.clone(), vec![t0, t1]).unwrap());
                from_levels.push(oracle.members_of_code(&c).unwrap());
            }
        }
        from_levels.sort_unstable();
        from_levels.dedup();
        let enumerated = oracle.all_codes(&oracle.ring().one()).unwrap();
        assert_eq!(from_levels, enumerated);
    }

    #[test]
    fn complement_scan_agrees_with_library_duals() {
        let z4 = ChainRing::zpe(2, 2).unwrap();
        let oracle = BruteForce::for_chain(&z4, 3).unwrap();
        let lam = oracle.ring().one();
        for levels in [vec![0, 0], vec![1, 1], vec![0, 2], vec![2, 1]] {
            let c = code_over(&z4, 3, 1, levels);
            let d = c.dual().unwrap();
            let members = oracle.members_of_code(&c).unwrap();
            let dual_members = oracle.members_of_code(&d).unwrap();
            assert_eq!(oracle.orthogonal_complement(&members, &lam), dual_members);
            assert_eq!(
                oracle.is_self_dual_set(&members, &lam),
                c.is_self_dual().unwrap()
            );
        }
    }

    #[test]
    fn weight_histogram_of_the_gamma_code() {
        let z4 = ChainRing::zpe(2, 2).unwrap();
        let oracle = BruteForce::for_chain(&z4, 3).unwrap();
        let c = code_over(&z4, 3, 1, vec![1, 1]);
        let members = oracle.members_of_code(&c).unwrap();
        assert_eq!(oracle.weight_hist(&members), vec![1, 3, 3, 1]);
    }

    #[test]
    fn free_rank_scan_agrees_with_the_level_test() {
        let z4 = ChainRing::zpe(2, 2).unwrap();
        let oracle = BruteForce::for_chain(&z4, 3).unwrap();
        for (levels, want) in [
            (vec![0, 2], Some(1)),
            (vec![2, 0], Some(2)),
            (vec![0, 0], Some(3)),
            (vec![2, 2], Some(0)),
            (vec![1, 1], None),
            (vec![0, 1], None),
        ] {
            let c = code_over(&z4, 3, 1, levels);
            let members = oracle.members_of_code(&c).unwrap();
            assert_eq!(c.is_free(), want);
            assert_eq!(oracle.free_rank_of_set(&members), want);
            assert_eq!(members.len() as u64, u64::try_from(c.cardinality()).unwrap());
        }
    }

    #[test]
    fn glued_products_close_under_the_tuple_shift() {
        let f3 = ChainRing::zpe(3, 1).unwrap();
        let ring = PiRing::rvr(f3.clone());
        let neg = Arc::new(factor_xn_minus_lambda(&f3, 2, &f3.from_int(-1)).unwrap());
        let c1 = Code::build(CodeSpec::new(neg, vec![0]).unwrap());
        let c2 = code_over(&f3, 2, 1, vec![0, 1]);
        let product = crate::pir::chinese(&ring, vec![c1.clone(), c2.clone()]).unwrap();

        let oracle = BruteForce::new(&ring, 2).unwrap();
        let closed = oracle.members_of_product(&product).unwrap();

        let single = BruteForce::for_chain(&f3, 2).unwrap();
        let part = |c: &Code| -> Vec<Vec<RingElt>> {
            single
                .members_of_code(c)
                .unwrap()
                .iter()
                .map(|&m| {
                    single
                        .decode_vec(m)
                        .iter()
                        .map(|x| x.part(0).clone())
                        .collect()
                })
                .collect()
        };
        let glued = oracle.glue(&[part(&c1), part(&c2)]);
        assert_eq!(closed, glued);
        assert_eq!(glued.len(), 27);
        assert!(oracle.is_shift_closed(&glued, &product.lambda()));
    }

    #[test]
    fn trial_division_matches_the_structured_factorizer() {
        let f2 = ChainRing::field(2, 1).unwrap();
        let f = Poly::x_pow_minus(&f2, 7, &f2.one());
        let ours = factor_over_field(&f).unwrap();
        let oracle = exhaustive_factor(&f).unwrap();
        assert_eq!(ours, oracle);

        let f3 = ChainRing::field(3, 1).unwrap();
        let f = Poly::x_pow_minus(&f3, 11, &f3.one());
        assert_eq!(factor_over_field(&f).unwrap(), exhaustive_factor(&f).unwrap());

        let f9 = ChainRing::field(3, 2).unwrap();
        let f = Poly::x_pow_minus(&f9, 4, &f9.from_int(-1));
        assert_eq!(factor_over_field(&f).unwrap(), exhaustive_factor(&f).unwrap());
    }

    #[test]
    fn trial_division_respects_its_cap() {
        let f5 = ChainRing::field(5, 1).unwrap();
        let f = Poly::x_pow_minus(&f5, 21, &f5.one());
        assert!(matches!(
            exhaustive_factor(&f),
            Err(Error::TooLargeForOracle { .. })
        ));
    }
}
