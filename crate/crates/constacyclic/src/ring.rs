//! Finite chain rings in three concrete presentations.
//!
//! A finite chain ring R has a unique maximal ideal generated by one element
//! gamma with gamma^e = 0, and its ideals form the chain
//! R ⊃ ⟨gamma⟩ ⊃ ⟨gamma^2⟩ ⊃ … ⊃ ⟨gamma^e⟩ = 0.
//! The residue field K = R/⟨gamma⟩ has q = p^r elements and |R| = q^e.
//!
//! Supported families:
//! * `Zpe`: the integers mod p^e, gamma = p;
//! * `GaloisRing`: GR(p^e, r) = Z_{p^e}[x]/(m(x)) for a monic basic
//!   irreducible m of degree r, gamma = p;
//! * `FqU`: F_{p^r}[u]/(u^e), gamma = u.
//!
//! Elements are canonical coordinate vectors (`RingElt`); all operations live
//! on [`ChainRing`] so the coordinates stay plain data.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigUint;

use crate::error::{Error, Result};

/// Default cap for whole-ring element enumeration.
pub const ENUM_BOUND: u64 = 10_000;

/// Hard cap on |R| accepted at construction, so coordinate arithmetic stays
/// comfortably inside u64.
const SIZE_CAP: u64 = 1 << 32;

/// The three supported chain-ring presentations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// Integers mod p^e.
    Zpe,
    /// Galois ring GR(p^e, r).
    GaloisRing,
    /// F_{p^r}[u]/(u^e).
    FqU,
}

#[derive(Debug)]
struct RingData {
    family: Family,
    p: u64,
    r: usize,
    e: usize,
    /// p^e (coordinate modulus for Zpe/GaloisRing).
    pe: u64,
    /// residue field size p^r.
    q: u64,
    /// |R| = p^{e r}.
    size: u64,
    /// number of stored coordinates: 1, r, or e*r.
    coord_len: usize,
    /// modulus every coordinate is reduced by: p^e, p^e, or p.
    coord_mod: u64,
    /// monic irreducible of degree r over F_p (ascending, length r+1); present iff r > 1.
    field_modulus: Option<Vec<u64>>,
    /// monic basic irreducible of degree r over Z_{p^e}; present iff family = GaloisRing.
    gr_modulus: Option<Vec<u64>>,
}

/// A finite chain ring. Cheap to clone; equality compares the presentation
/// (family, p, r, e and moduli).
#[derive(Clone)]
pub struct ChainRing(Arc<RingData>);

/// Canonical coordinate vector of a ring element. The interpretation belongs
/// to the [`ChainRing`] that produced it.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RingElt {
    coords: Vec<u64>,
}

impl RingElt {
    pub fn coords(&self) -> &[u64] {
        &self.coords
    }
}

impl PartialEq for ChainRing {
    fn eq(&self, other: &Self) -> bool {
        let (a, b) = (&self.0, &other.0);
        a.family == b.family
            && a.p == b.p
            && a.r == b.r
            && a.e == b.e
            && a.field_modulus == b.field_modulus
            && a.gr_modulus == b.gr_modulus
    }
}
impl Eq for ChainRing {}

impl fmt::Debug for ChainRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ChainRing({})", self.spec_string())
    }
}

impl fmt::Display for ChainRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.spec_string())
    }
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

fn checked_pow(base: u64, exp: usize) -> Option<u64> {
    let mut acc: u64 = 1;
    for _ in 0..exp {
        acc = acc.checked_mul(base)?;
        if acc > SIZE_CAP {
            return None;
        }
    }
    Some(acc)
}

impl ChainRing {
    /// Build a chain ring with default moduli (the lexicographically smallest
    /// monic irreducible of degree r over F_p, lifted coefficientwise for the
    /// Galois-ring family).
    pub fn new(family: Family, p: u64, r: usize, e: usize) -> Result<Self> {
        Self::with_modulus(family, p, r, e, None)
    }

    /// Integers mod p^e.
    pub fn zpe(p: u64, e: usize) -> Result<Self> {
        Self::new(Family::Zpe, p, 1, e)
    }

    /// Galois ring GR(p^e, r).
    pub fn galois(p: u64, r: usize, e: usize) -> Result<Self> {
        Self::new(Family::GaloisRing, p, r, e)
    }

    /// F_{p^r}[u]/(u^e).
    pub fn fq_u(p: u64, r: usize, e: usize) -> Result<Self> {
        Self::new(Family::FqU, p, r, e)
    }

    /// The field F_q for q = p^r (a chain ring with e = 1).
    pub fn field(p: u64, r: usize) -> Result<Self> {
        if r == 1 {
            Self::zpe(p, 1)
        } else {
            Self::galois(p, r, 1)
        }
    }

    /// Build a chain ring, optionally with an explicit modulus polynomial
    /// (ascending coefficients). For `GaloisRing` the modulus lives over
    /// Z_{p^e} and its residue must be irreducible over F_p; for `FqU` it is
    /// the degree-r field modulus over F_p. `Zpe` accepts no modulus.
    pub fn with_modulus(
        family: Family,
        p: u64,
        r: usize,
        e: usize,
        modulus: Option<&[i64]>,
    ) -> Result<Self> {
        assert!(r >= 1 && e >= 1, "need r >= 1 and e >= 1");
        if !is_prime(p) {
            return Err(Error::NonPrimeP(p));
        }
        if family == Family::Zpe {
            assert!(r == 1, "Zpe requires r = 1");
            assert!(modulus.is_none(), "Zpe takes no modulus polynomial");
        }
        let size = checked_pow(p, e * r).ok_or(Error::RingTooLarge {
            size: u64::MAX,
            bound: SIZE_CAP,
        })?;

        // Coinciding presentations get one canonical form so ring equality is
        // independent of the construction route: every family with e = 1 is
        // the field F_{p^r}, and GR(p^e, 1) is Z_{p^e}.
        let family = match (family, r, e) {
            (_, 1, 1) => Family::Zpe,
            (_, _, 1) => Family::GaloisRing,
            (Family::GaloisRing, 1, _) => Family::Zpe,
            (f, _, _) => f,
        };

        let pe = checked_pow(p, e).unwrap();
        let q = checked_pow(p, r).unwrap();
        let (coord_len, coord_mod) = match family {
            Family::Zpe => (1, pe),
            Family::GaloisRing => (r, pe),
            Family::FqU => (e * r, p),
        };

        let (field_modulus, gr_modulus) = match family {
            Family::Zpe => (None, None),
            Family::GaloisRing => {
                let m = match modulus {
                    Some(raw) => normalize_modulus(raw, r, pe)?,
                    None => crate::factor::default_irreducible(p, r)?,
                };
                let residue: Vec<u64> = m.iter().map(|c| c % p).collect();
                if !crate::factor::irreducible_over_prime(p, &residue)? {
                    return Err(Error::ReducibleModulus);
                }
                (Some(residue), Some(m))
            }
            Family::FqU => {
                if r == 1 {
                    assert!(modulus.is_none(), "FqU with r = 1 takes no modulus");
                    (None, None)
                } else {
                    let m = match modulus {
                        Some(raw) => normalize_modulus(raw, r, p)?,
                        None => crate::factor::default_irreducible(p, r)?,
                    };
                    if !crate::factor::irreducible_over_prime(p, &m)? {
                        return Err(Error::ReducibleModulus);
                    }
                    (Some(m), None)
                }
            }
        };

        Ok(ChainRing(Arc::new(RingData {
            family,
            p,
            r,
            e,
            pe,
            q,
            size,
            coord_len,
            coord_mod,
            field_modulus,
            gr_modulus,
        })))
    }

    pub fn family(&self) -> Family {
        self.0.family
    }
    pub fn p(&self) -> u64 {
        self.0.p
    }
    pub fn r(&self) -> usize {
        self.0.r
    }
    /// Nilpotency index of gamma.
    pub fn e(&self) -> usize {
        self.0.e
    }
    /// Residue field size q = p^r.
    pub fn q(&self) -> u64 {
        self.0.q
    }
    /// |R| as a machine integer.
    pub fn size(&self) -> u64 {
        self.0.size
    }
    /// |R|^n, exact.
    pub fn size_pow(&self, n: usize) -> BigUint {
        BigUint::from(self.0.size).pow(n as u32)
    }
    /// The characteristic in the chain-ring convention: the residue
    /// characteristic p.
    pub fn characteristic(&self) -> u64 {
        self.0.p
    }
    /// The additive order of 1 (p^e for Zpe and Galois rings, p for FqU).
    pub fn additive_characteristic(&self) -> u64 {
        match self.0.family {
            Family::Zpe | Family::GaloisRing => self.0.pe,
            Family::FqU => self.0.p,
        }
    }
    /// Number of stored coordinates per element.
    pub fn coord_len(&self) -> usize {
        self.0.coord_len
    }
    pub fn field_modulus(&self) -> Option<&[u64]> {
        self.0.field_modulus.as_deref()
    }
    pub fn gr_modulus(&self) -> Option<&[u64]> {
        self.0.gr_modulus.as_deref()
    }
    /// True when this ring is its own residue field.
    pub fn is_field(&self) -> bool {
        self.0.e == 1
    }

    /// The residue field K = R/⟨gamma⟩ as a chain ring with e = 1, sharing
    /// this ring's field modulus.
    pub fn residue_field(&self) -> ChainRing {
        if self.0.e == 1 {
            return self.clone();
        }
        if self.0.r == 1 {
            return ChainRing::zpe(self.0.p, 1).unwrap();
        }
        let m: Vec<i64> = self
            .0
            .field_modulus
            .as_ref()
            .expect("r > 1 has a field modulus")
            .iter()
            .map(|&c| c as i64)
            .collect();
        ChainRing::with_modulus(Family::GaloisRing, self.0.p, self.0.r, 1, Some(&m)).unwrap()
    }

    // ---- element constructors ----

    pub fn zero(&self) -> RingElt {
        RingElt {
            coords: vec![0; self.0.coord_len],
        }
    }

    pub fn one(&self) -> RingElt {
        self.from_int(1)
    }

    /// The fixed generator of the maximal ideal: p (Zpe, GaloisRing) or u (FqU).
    pub fn gamma(&self) -> RingElt {
        match self.0.family {
            Family::Zpe | Family::GaloisRing => self.from_int(self.0.p as i64),
            Family::FqU => {
                let mut coords = vec![0; self.0.coord_len];
                // coefficient 1 on u^1 (block 1, basis power 0); e >= 2 here
                // because e = 1 canonicalizes away from FqU
                coords[self.0.r] = 1;
                RingElt { coords }
            }
        }
    }

    /// gamma^k, with gamma^0 = 1 and gamma^k = 0 for k >= e.
    pub fn gamma_pow(&self, k: usize) -> RingElt {
        if k >= self.0.e {
            return self.zero();
        }
        let mut acc = self.one();
        let g = self.gamma();
        for _ in 0..k {
            acc = self.mul(&acc, &g);
        }
        acc
    }

    /// Embed an integer (the image of i under Z -> R).
    pub fn from_int(&self, i: i64) -> RingElt {
        let m = self.additive_characteristic() as i128;
        let v = (((i as i128) % m + m) % m) as u64;
        let mut coords = vec![0; self.0.coord_len];
        coords[0] = v;
        RingElt { coords }
    }

    /// Build an element from raw coordinates; rejects wrong arity or
    /// out-of-range entries.
    pub fn from_coords(&self, coords: &[i64]) -> Result<RingElt> {
        if coords.len() != self.0.coord_len {
            return Err(Error::MalformedDescriptor(format!(
                "expected {} coordinates, got {}",
                self.0.coord_len,
                coords.len()
            )));
        }
        let m = self.0.coord_mod as i128;
        let coords = coords
            .iter()
            .map(|&c| (((c as i128) % m + m) % m) as u64)
            .collect();
        Ok(RingElt { coords })
    }

    /// Index of an element in the canonical enumeration.
    pub fn encode(&self, x: &RingElt) -> u64 {
        debug_assert_eq!(x.coords.len(), self.0.coord_len);
        let mut acc = 0u64;
        for &c in x.coords.iter().rev() {
            acc = acc * self.0.coord_mod + c;
        }
        acc
    }

    /// Element with the given enumeration index.
    pub fn decode(&self, mut idx: u64) -> RingElt {
        debug_assert!(idx < self.0.size);
        let mut coords = vec![0; self.0.coord_len];
        for c in coords.iter_mut() {
            *c = idx % self.0.coord_mod;
            idx /= self.0.coord_mod;
        }
        RingElt { coords }
    }

    /// All elements in canonical order, refusing rings larger than `ENUM_BOUND`.
    pub fn elements(&self) -> Result<Vec<RingElt>> {
        self.elements_bounded(ENUM_BOUND)
    }

    pub fn elements_bounded(&self, bound: u64) -> Result<Vec<RingElt>> {
        if self.0.size > bound {
            return Err(Error::RingTooLarge {
                size: self.0.size,
                bound,
            });
        }
        Ok((0..self.0.size).map(|i| self.decode(i)).collect())
    }

    /// All units in canonical order, same bound as [`Self::elements`].
    pub fn units(&self) -> Result<Vec<RingElt>> {
        Ok(self
            .elements()?
            .into_iter()
            .filter(|x| self.is_unit(x))
            .collect())
    }

    // ---- arithmetic ----

    pub fn add(&self, a: &RingElt, b: &RingElt) -> RingElt {
        let m = self.0.coord_mod;
        RingElt {
            coords: a
                .coords
                .iter()
                .zip(&b.coords)
                .map(|(&x, &y)| (x + y) % m)
                .collect(),
        }
    }

    pub fn neg(&self, a: &RingElt) -> RingElt {
        let m = self.0.coord_mod;
        RingElt {
            coords: a.coords.iter().map(|&x| (m - x) % m).collect(),
        }
    }

    pub fn sub(&self, a: &RingElt, b: &RingElt) -> RingElt {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &RingElt, b: &RingElt) -> RingElt {
        match self.0.family {
            Family::Zpe => {
                let m = self.0.pe as u128;
                let v = (a.coords[0] as u128 * b.coords[0] as u128 % m) as u64;
                RingElt { coords: vec![v] }
            }
            Family::GaloisRing => RingElt {
                coords: polymul_mod(
                    &a.coords,
                    &b.coords,
                    self.0.pe,
                    self.0.gr_modulus.as_deref(),
                    self.0.r,
                ),
            },
            Family::FqU => {
                let (r, e, p) = (self.0.r, self.0.e, self.0.p);
                let mut out = vec![0u64; e * r];
                for i in 0..e {
                    let ai = &a.coords[i * r..(i + 1) * r];
                    if ai.iter().all(|&c| c == 0) {
                        continue;
                    }
                    for j in 0..e - i {
                        let bj = &b.coords[j * r..(j + 1) * r];
                        let prod = polymul_mod(ai, bj, p, self.0.field_modulus.as_deref(), r);
                        let blk = &mut out[(i + j) * r..(i + j + 1) * r];
                        for (o, v) in blk.iter_mut().zip(prod) {
                            *o = (*o + v) % p;
                        }
                    }
                }
                RingElt { coords: out }
            }
        }
    }

    pub fn pow(&self, a: &RingElt, mut n: u64) -> RingElt {
        let mut base = a.clone();
        let mut acc = self.one();
        while n > 0 {
            if n & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            n >>= 1;
        }
        acc
    }

    pub fn is_zero(&self, a: &RingElt) -> bool {
        a.coords.iter().all(|&c| c == 0)
    }

    /// gamma-adic valuation: the largest j <= e with x ∈ ⟨gamma^j⟩ (e for 0).
    pub fn gamma_val(&self, a: &RingElt) -> usize {
        if self.is_zero(a) {
            return self.0.e;
        }
        match self.0.family {
            Family::Zpe | Family::GaloisRing => {
                let mut v = self.0.e;
                for &c in &a.coords {
                    if c == 0 {
                        continue;
                    }
                    let mut x = c;
                    let mut k = 0;
                    while x % self.0.p == 0 {
                        x /= self.0.p;
                        k += 1;
                    }
                    v = v.min(k);
                }
                v
            }
            Family::FqU => {
                let r = self.0.r;
                for blk in 0..self.0.e {
                    if a.coords[blk * r..(blk + 1) * r].iter().any(|&c| c != 0) {
                        return blk;
                    }
                }
                self.0.e
            }
        }
    }

    /// Exactly the elements outside ⟨gamma⟩ are units.
    pub fn is_unit(&self, a: &RingElt) -> bool {
        self.gamma_val(a) == 0
    }

    /// Divide by gamma^k; requires gamma_val(a) >= k. For Zpe/GaloisRing this
    /// is exact coordinate division by p^k, for FqU a block shift.
    pub fn div_gamma(&self, a: &RingElt, k: usize) -> RingElt {
        assert!(self.gamma_val(a) >= k, "element not divisible by gamma^{k}");
        if k == 0 {
            return a.clone();
        }
        match self.0.family {
            Family::Zpe | Family::GaloisRing => {
                let pk = self.0.p.pow(k as u32);
                RingElt {
                    coords: a.coords.iter().map(|&c| c / pk).collect(),
                }
            }
            Family::FqU => {
                let r = self.0.r;
                let mut coords = vec![0; self.0.coord_len];
                for blk in k..self.0.e {
                    let src = &a.coords[blk * r..(blk + 1) * r];
                    coords[(blk - k) * r..(blk - k + 1) * r].copy_from_slice(src);
                }
                RingElt { coords }
            }
        }
    }

    /// Inverse of a unit.
    pub fn inv(&self, a: &RingElt) -> Result<RingElt> {
        if !self.is_unit(a) {
            return Err(Error::NotAUnit);
        }
        let x = match self.0.family {
            Family::Zpe => {
                let v = inv_mod_u64(a.coords[0], self.0.pe);
                RingElt { coords: vec![v] }
            }
            Family::GaloisRing if self.0.e == 1 => {
                // multiplicative group of F_q has order q - 1
                self.pow(a, self.0.q - 2)
            }
            _ => {
                // Newton iteration x <- x(2 - a x) doubles gamma-adic precision
                let k = self.residue_field();
                let res_inv = k.inv(&self.residue(a)).expect("nonzero residue");
                let mut x = self.lift(&res_inv);
                let two = self.from_int(2);
                let mut prec = 1;
                while prec < self.0.e {
                    let t = self.sub(&two, &self.mul(a, &x));
                    x = self.mul(&x, &t);
                    prec *= 2;
                }
                x
            }
        };
        debug_assert!(self.mul(a, &x) == self.one());
        Ok(x)
    }

    // ---- residue field bridge ----

    /// Image in the residue field K (an element of `self.residue_field()`).
    pub fn residue(&self, a: &RingElt) -> RingElt {
        match self.0.family {
            Family::Zpe => RingElt {
                coords: vec![a.coords[0] % self.0.p],
            },
            Family::GaloisRing => RingElt {
                coords: a.coords.iter().map(|&c| c % self.0.p).collect(),
            },
            Family::FqU => RingElt {
                coords: a.coords[..self.0.r].to_vec(),
            },
        }
    }

    /// The canonical lift K -> R (coordinatewise; a section of `residue`).
    pub fn lift(&self, a: &RingElt) -> RingElt {
        debug_assert_eq!(a.coords.len(), self.0.r);
        match self.0.family {
            Family::Zpe | Family::GaloisRing => RingElt {
                coords: a.coords.clone(),
            },
            Family::FqU => {
                let mut coords = vec![0; self.0.coord_len];
                coords[..self.0.r].copy_from_slice(&a.coords);
                RingElt { coords }
            }
        }
    }

    // ---- formatting ----

    /// Render an element: a bare integer when one coordinate suffices,
    /// otherwise the coordinate list.
    pub fn fmt_elt(&self, a: &RingElt) -> String {
        if self.0.coord_len == 1 {
            format!("{}", a.coords[0])
        } else {
            let inner: Vec<String> = a.coords.iter().map(|c| c.to_string()).collect();
            format!("[{}]", inner.join(","))
        }
    }

    /// Canonical ring-spec string ("Z/4", "GR(4,2)", "F9[u]/u^2", "F4", …).
    pub fn spec_string(&self) -> String {
        match self.0.family {
            Family::Zpe => {
                if self.0.e == 1 {
                    format!("F{}", self.0.p)
                } else {
                    format!("Z/{}", self.0.pe)
                }
            }
            Family::GaloisRing => {
                if self.0.e == 1 {
                    format!("F{}", self.0.q)
                } else {
                    format!("GR({},{})", self.0.pe, self.0.r)
                }
            }
            Family::FqU => format!("F{}[u]/u^{}", self.0.q, self.0.e),
        }
    }
}

/// Multiply two degree-<r coordinate blocks mod m, reducing by the monic
/// modulus when present (r > 1).
fn polymul_mod(a: &[u64], b: &[u64], m: u64, modulus: Option<&[u64]>, r: usize) -> Vec<u64> {
    if r == 1 {
        return vec![(a[0] as u128 * b[0] as u128 % m as u128) as u64];
    }
    let modulus = modulus.expect("r > 1 requires a modulus");
    let mut conv = vec![0u64; 2 * r - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            conv[i + j] = ((conv[i + j] as u128 + x as u128 * y as u128) % m as u128) as u64;
        }
    }
    // synthetic division by the monic modulus
    for i in (r..2 * r - 1).rev() {
        let c = conv[i];
        if c == 0 {
            continue;
        }
        conv[i] = 0;
        for j in 0..r {
            let sub = c as u128 * modulus[j] as u128 % m as u128;
            conv[i - r + j] = ((conv[i - r + j] as u128 + m as u128 - sub) % m as u128) as u64;
        }
    }
    conv.truncate(r);
    conv
}

fn inv_mod_u64(a: u64, m: u64) -> u64 {
    // extended Euclid; a is coprime to m
    let (mut t, mut new_t): (i128, i128) = (0, 1);
    let (mut rr, mut new_r): (i128, i128) = (m as i128, a as i128);
    while new_r != 0 {
        let qq = rr / new_r;
        (t, new_t) = (new_t, t - qq * new_t);
        (rr, new_r) = (new_r, rr - qq * new_r);
    }
    assert!(rr == 1, "not a unit");
    (((t % m as i128) + m as i128) % m as i128) as u64
}

fn normalize_modulus(raw: &[i64], r: usize, m: u64) -> Result<Vec<u64>> {
    if raw.len() != r + 1 {
        return Err(Error::MalformedDescriptor(format!(
            "modulus must have degree {r} (got {} coefficients)",
            raw.len()
        )));
    }
    let mm = m as i128;
    let out: Vec<u64> = raw.iter().map(|&c| (((c as i128) % mm + mm) % mm) as u64).collect();
    if out[r] != 1 {
        return Err(Error::MalformedDescriptor("modulus must be monic".into()));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constructs_the_three_families() {
        let z4 = ChainRing::zpe(2, 2).unwrap();
        assert_eq!((z4.p(), z4.r(), z4.e(), z4.q(), z4.size()), (2, 1, 2, 2, 4));
        let gr = ChainRing::galois(2, 3, 2).unwrap();
        assert_eq!((gr.q(), gr.size()), (8, 64));
        let fu = ChainRing::fq_u(3, 1, 2).unwrap();
        assert_eq!((fu.q(), fu.size()), (3, 9));
        assert_eq!(fu.additive_characteristic(), 3);
        assert_eq!(z4.additive_characteristic(), 4);
    }

    #[test]
    fn rejects_composite_p() {
        assert_eq!(ChainRing::zpe(6, 1).unwrap_err(), Error::NonPrimeP(6));
    }

    #[test]
    fn rejects_reducible_modulus() {
        // x^2 + 1 = (x+1)^2 over F_2
        let err = ChainRing::with_modulus(Family::GaloisRing, 2, 2, 2, Some(&[1, 0, 1]));
        assert_eq!(err.unwrap_err(), Error::ReducibleModulus);
    }

    #[test]
    fn e1_presentations_coincide() {
        let a = ChainRing::galois(5, 1, 1).unwrap();
        let b = ChainRing::zpe(5, 1).unwrap();
        assert_eq!(a, b);
        let c = ChainRing::fq_u(2, 2, 1).unwrap();
        let d = ChainRing::field(2, 2).unwrap();
        assert_eq!(c, d);
        assert_eq!(c.family(), Family::GaloisRing);
    }

    #[test]
    fn enumeration_is_canonical() {
        let z4 = ChainRing::zpe(2, 2).unwrap();
        let elems = z4.elements().unwrap();
        let shown: Vec<u64> = elems.iter().map(|x| x.coords()[0]).collect();
        assert_eq!(shown, vec![0, 1, 2, 3]);
        for (i, x) in elems.iter().enumerate() {
            assert_eq!(z4.encode(x), i as u64);
            assert_eq!(&z4.decode(i as u64), x);
        }
    }

    #[test]
    fn unit_group_sizes() {
        // |R*| = p^{er} - p^{(e-1)r}
        for ring in [
            ChainRing::zpe(2, 2).unwrap(),
            ChainRing::zpe(2, 3).unwrap(),
            ChainRing::zpe(3, 2).unwrap(),
            ChainRing::galois(2, 2, 2).unwrap(),
            ChainRing::galois(2, 3, 2).unwrap(),
            ChainRing::fq_u(3, 1, 2).unwrap(),
            ChainRing::fq_u(2, 1, 3).unwrap(),
            ChainRing::fq_u(3, 2, 2).unwrap(),
            ChainRing::field(9 / 3, 2).unwrap(),
        ] {
            let expected = ring.size() - ring.size() / ring.q();
            assert_eq!(ring.units().unwrap().len() as u64, expected, "{ring}");
        }
    }

    #[test]
    fn gamma_generates_the_chain() {
        for ring in [
            ChainRing::zpe(2, 3).unwrap(),
            ChainRing::galois(3, 2, 2).unwrap(),
            ChainRing::fq_u(2, 2, 3).unwrap(),
        ] {
            let e = ring.e();
            assert!(ring.is_zero(&ring.gamma_pow(e)));
            assert!(!ring.is_zero(&ring.gamma_pow(e - 1)));
            assert_eq!(ring.gamma_val(&ring.gamma_pow(e - 1)), e - 1);
            assert_eq!(ring.gamma_val(&ring.zero()), e);
            assert_eq!(ring.gamma_val(&ring.one()), 0);
        }
    }

    #[test]
    fn every_element_is_unit_or_in_gamma() {
        for ring in [
            ChainRing::zpe(2, 2).unwrap(),
            ChainRing::galois(2, 2, 2).unwrap(),
            ChainRing::fq_u(3, 2, 2).unwrap(),
        ] {
            for x in ring.elements().unwrap() {
                assert!(ring.is_unit(&x) ^ (ring.gamma_val(&x) >= 1));
            }
        }
    }

    #[test]
    fn inverses_are_exact_everywhere() {
        for ring in [
            ChainRing::zpe(2, 3).unwrap(),
            ChainRing::zpe(5, 2).unwrap(),
            ChainRing::galois(2, 3, 2).unwrap(),
            ChainRing::galois(3, 2, 2).unwrap(),
            ChainRing::fq_u(2, 2, 2).unwrap(),
            ChainRing::fq_u(3, 1, 3).unwrap(),
        ] {
            for x in ring.units().unwrap() {
                let y = ring.inv(&x).unwrap();
                assert_eq!(ring.mul(&x, &y), ring.one());
            }
            assert_eq!(ring.inv(&ring.gamma()), Err(Error::NotAUnit));
        }
    }

    #[test]
    fn residue_is_a_ring_homomorphism() {
        // exhaustive over GR(4,3) (64 elements) and F9[u]/u^2 (81 elements)
        for ring in [
            ChainRing::galois(2, 3, 2).unwrap(),
            ChainRing::fq_u(3, 2, 2).unwrap(),
        ] {
            let k = ring.residue_field();
            let elems = ring.elements().unwrap();
            for a in &elems {
                for b in &elems {
                    let lhs = ring.residue(&ring.add(a, b));
                    let rhs = k.add(&ring.residue(a), &ring.residue(b));
                    assert_eq!(lhs, rhs);
                    let lhs = ring.residue(&ring.mul(a, b));
                    let rhs = k.mul(&ring.residue(a), &ring.residue(b));
                    assert_eq!(lhs, rhs);
                }
            }
            // the canonical lift is a section
            for a in k.elements().unwrap() {
                assert_eq!(ring.residue(&ring.lift(&a)), a);
            }
        }
    }

    #[test]
    fn galois_generator_reduces_to_field_generator() {
        let gr = ChainRing::galois(2, 3, 2).unwrap();
        let k = gr.residue_field();
        let gen = gr.from_coords(&[0, 1, 0]).unwrap();
        assert_eq!(gr.residue(&gen), k.from_coords(&[0, 1, 0]).unwrap());
    }

    #[test]
    fn div_gamma_inverts_gamma_multiplication() {
        for ring in [
            ChainRing::zpe(2, 3).unwrap(),
            ChainRing::galois(3, 2, 2).unwrap(),
            ChainRing::fq_u(2, 2, 3).unwrap(),
        ] {
            for x in ring.elements().unwrap() {
                for k in 0..=ring.e() {
                    let y = ring.mul(&ring.gamma_pow(k), &x);
                    if ring.gamma_val(&y) >= k && !ring.is_zero(&y) {
                        let z = ring.div_gamma(&y, k);
                        assert_eq!(ring.mul(&ring.gamma_pow(k), &z), y);
                    }
                }
            }
        }
    }

    #[test]
    fn spec_strings_round_out() {
        assert_eq!(ChainRing::zpe(2, 2).unwrap().spec_string(), "Z/4");
        assert_eq!(ChainRing::galois(2, 2, 2).unwrap().spec_string(), "GR(4,2)");
        assert_eq!(ChainRing::fq_u(3, 2, 2).unwrap().spec_string(), "F9[u]/u^2");
        assert_eq!(ChainRing::field(2, 2).unwrap().spec_string(), "F4");
        assert_eq!(ChainRing::zpe(5, 1).unwrap().spec_string(), "F5");
    }
}
