//! Text and JSON interchange: ring spec strings, polynomial literals, and
//! the code descriptor format shared by the CLI subcommands.
//!
//! Ring specs name a chain ring ("Z/4", "GR(4,2)", "F9[u]/u^2", "F9"), a
//! product joined by " x " ("Z/4 x F3[u]/u^2"), or an R + vR presentation
//! ("F3 + vF3"). Polynomials come either as coefficient lists in ascending
//! order ("[3,1,2]") or as plain text ("3 + x + 2x^2"). Cardinalities are
//! decimal strings so descriptors survive JSON parsers that clamp integers
//! to doubles.

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::code::{Code, CodeSpec};
use crate::error::{Error, Result};
use crate::factor::{factor_xn_minus_lambda, Factorization};
use crate::pir::{chinese, PiRing, PirElt, ProductCode};
use crate::poly::Poly;
use crate::ring::{ChainRing, RingElt};

fn malformed(msg: impl Into<String>) -> Error {
    Error::MalformedDescriptor(msg.into())
}

fn parse_u64(s: &str, what: &str) -> Result<u64> {
    s.trim()
        .parse::<u64>()
        .map_err(|_| malformed(format!("{what}: expected an integer, got {s:?}")))
}

/// Split m into (p, e) with m = p^e, p prime.
fn prime_power(m: u64) -> Result<(u64, usize)> {
    if m < 2 {
        return Err(malformed(format!("{m} is not a prime power")));
    }
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            break;
        }
        p += 1;
    }
    if !m.is_multiple_of(p) {
        p = m;
    }
    let mut e = 0;
    let mut rest = m;
    while rest.is_multiple_of(p) {
        rest /= p;
        e += 1;
    }
    if rest != 1 {
        return Err(malformed(format!("{m} is not a prime power")));
    }
    Ok((p, e))
}

/// Parse a single chain ring spec: Z/N, GR(Q,r), Fq[u]/u^e, or Fq.
pub fn parse_chain_spec(s: &str) -> Result<ChainRing> {
    let s = s.trim();
    if let Some(rest) = s.strip_prefix("Z/") {
        let (p, e) = prime_power(parse_u64(rest, "Z/N")?)?;
        return ChainRing::zpe(p, e);
    }
    if let Some(rest) = s.strip_prefix("GR(") {
        let inner = rest
            .strip_suffix(')')
            .ok_or_else(|| malformed(format!("unclosed GR(..) in {s:?}")))?;
        let (q_str, r_str) = inner
            .split_once(',')
            .ok_or_else(|| malformed(format!("GR needs two arguments in {s:?}")))?;
        let (p, e) = prime_power(parse_u64(q_str, "GR characteristic")?)?;
        let r = parse_u64(r_str, "GR degree")? as usize;
        return ChainRing::galois(p, r, e);
    }
    if let Some(rest) = s.strip_prefix('F') {
        if let Some((q_str, tail)) = rest.split_once("[u]/u^") {
            let (p, r) = prime_power(parse_u64(q_str, "Fq")?)?;
            let e = parse_u64(tail, "u exponent")? as usize;
            return ChainRing::fq_u(p, r, e);
        }
        let (p, r) = prime_power(parse_u64(rest, "Fq")?)?;
        return ChainRing::field(p, r);
    }
    Err(malformed(format!("unrecognized ring spec {s:?}")))
}

/// Parse a ring spec, allowing " x " products and "R + vR".
pub fn parse_ring_spec(s: &str) -> Result<PiRing> {
    let s = s.trim();
    if let Some((left, right)) = s.split_once('+') {
        let right = right.trim();
        let rest = right
            .strip_prefix('v')
            .ok_or_else(|| malformed(format!("expected vR after + in {s:?}")))?;
        let base = parse_chain_spec(left)?;
        if parse_chain_spec(rest)? != base {
            return Err(malformed(format!("R + vR needs matching parts in {s:?}")));
        }
        return Ok(PiRing::rvr(base));
    }
    let parts = s.split(" x ").collect::<Vec<_>>();
    let components = parts
        .iter()
        .map(|p| parse_chain_spec(p))
        .collect::<Result<Vec<_>>>()?;
    Ok(PiRing::new(components))
}

/// Parse a ring element: an integer or a [c0,c1,..] coordinate list.
pub fn parse_elt(ring: &ChainRing, s: &str) -> Result<RingElt> {
    let s = s.trim();
    if s.starts_with('[') {
        let coords: Vec<i64> = serde_json::from_str(s)
            .map_err(|_| malformed(format!("bad coordinate list {s:?}")))?;
        return ring.from_coords(&coords);
    }
    let v: i64 = s
        .parse()
        .map_err(|_| malformed(format!("bad ring element {s:?}")))?;
    Ok(ring.from_int(v))
}

/// Parse a product ring element: crt(x1,..,xk), or one value applied to
/// every component.
pub fn parse_pir_elt(ring: &PiRing, s: &str) -> Result<PirElt> {
    let s = s.trim();
    let inner = s
        .strip_prefix("crt(")
        .or_else(|| s.strip_prefix("CRT("))
        .and_then(|rest| rest.strip_suffix(')'));
    if let Some(inner) = inner {
        let mut parts = Vec::new();
        let mut depth = 0usize;
        let mut start = 0usize;
        for (i, c) in inner.char_indices() {
            match c {
                '[' | '(' => depth += 1,
                ']' | ')' => depth -= 1,
                ',' if depth == 0 => {
                    parts.push(&inner[start..i]);
                    start = i + 1;
                }
                _ => {}
            }
        }
        parts.push(&inner[start..]);
        if parts.len() != ring.arity() {
            return Err(Error::ArityMismatch {
                expected: ring.arity(),
                got: parts.len(),
            });
        }
        let elts = ring
            .components()
            .iter()
            .zip(&parts)
            .map(|(r, p)| parse_elt(r, p))
            .collect::<Result<Vec<_>>>()?;
        return ring.crt_compose(&elts);
    }
    if s.starts_with('[') && ring.arity() == 1 {
        return ring.crt_compose(&[parse_elt(&ring.components()[0], s)?]);
    }
    let v: i64 = s
        .parse()
        .map_err(|_| malformed(format!("bad element {s:?} (use crt(..) for products)")))?;
    Ok(ring.from_int(v))
}

// ---- polynomial literals ----

fn value_to_elt(ring: &ChainRing, v: &Value) -> Result<RingElt> {
    match v {
        Value::Number(n) => {
            let i = n
                .as_i64()
                .ok_or_else(|| malformed(format!("non-integer coefficient {n}")))?;
            Ok(ring.from_int(i))
        }
        Value::Array(items) => {
            let coords = items
                .iter()
                .map(|x| {
                    x.as_i64()
                        .ok_or_else(|| malformed(format!("non-integer coordinate {x}")))
                })
                .collect::<Result<Vec<_>>>()?;
            ring.from_coords(&coords)
        }
        _ => Err(malformed(format!("bad coefficient {v}"))),
    }
}

fn elt_to_value(ring: &ChainRing, x: &RingElt) -> Value {
    if ring.coord_len() == 1 {
        Value::from(x.coords()[0])
    } else {
        Value::from(x.coords().to_vec())
    }
}

/// Parse one term of a text polynomial: [coeff][x[^exp]].
fn parse_term(term: &str) -> Result<(i64, usize)> {
    let term = term.trim();
    if term.is_empty() {
        return Err(malformed("empty polynomial term"));
    }
    if let Some(xpos) = term.find('x') {
        let coeff_str = term[..xpos].trim();
        let coeff = if coeff_str.is_empty() {
            1
        } else {
            coeff_str
                .parse::<i64>()
                .map_err(|_| malformed(format!("bad coefficient {coeff_str:?}")))?
        };
        let tail = term[xpos + 1..].trim();
        let exp = if tail.is_empty() {
            1
        } else if let Some(e) = tail.strip_prefix('^') {
            parse_u64(e, "exponent")? as usize
        } else {
            return Err(malformed(format!("bad term {term:?}")));
        };
        Ok((coeff, exp))
    } else {
        let c = term
            .parse::<i64>()
            .map_err(|_| malformed(format!("bad constant term {term:?}")))?;
        Ok((c, 0))
    }
}

/// Parse a polynomial, either "[3,1,2]" (ascending coefficients) or text
/// like "3 + x + 2x^2".
pub fn parse_poly(ring: &ChainRing, s: &str) -> Result<Poly> {
    let s = s.trim();
    if !s.is_ascii() {
        return Err(malformed(format!("non-ascii polynomial {s:?}")));
    }
    if s.starts_with('[') {
        let items: Vec<Value> = serde_json::from_str(s)
            .map_err(|_| malformed(format!("bad coefficient list {s:?}")))?;
        let coeffs = items
            .iter()
            .map(|v| value_to_elt(ring, v))
            .collect::<Result<Vec<_>>>()?;
        return Ok(Poly::new(ring, coeffs));
    }
    // split into signed terms
    let mut terms: Vec<(i64, usize)> = Vec::new();
    let mut sign = 1i64;
    let mut start = 0usize;
    let bytes = s.as_bytes();
    for i in 0..=s.len() {
        let boundary = i == s.len() || bytes[i] == b'+' || (bytes[i] == b'-' && i > 0);
        if boundary {
            let chunk = &s[start..i];
            if !chunk.trim().is_empty() {
                let (c, e) = parse_term(chunk)?;
                terms.push((sign * c, e));
            }
            if i < s.len() {
                sign = if bytes[i] == b'-' { -1 } else { 1 };
                start = i + 1;
            }
        } else if bytes[i] == b'-' && i == 0 {
            sign = -1;
            start = 1;
        }
    }
    if terms.is_empty() {
        return Err(malformed(format!("empty polynomial {s:?}")));
    }
    let deg = terms.iter().map(|&(_, e)| e).max().unwrap();
    let mut coeffs = vec![ring.zero(); deg + 1];
    for (c, e) in terms {
        coeffs[e] = ring.add(&coeffs[e], &ring.from_int(c));
    }
    Ok(Poly::new(ring, coeffs))
}

fn poly_to_value(p: &Poly) -> Value {
    Value::from(
        p.coeffs()
            .iter()
            .map(|c| elt_to_value(p.ring(), c))
            .collect::<Vec<_>>(),
    )
}

fn value_to_poly(ring: &ChainRing, v: &Value) -> Result<Poly> {
    match v {
        Value::String(s) => parse_poly(ring, s),
        Value::Array(items) => {
            let coeffs = items
                .iter()
                .map(|x| value_to_elt(ring, x))
                .collect::<Result<Vec<_>>>()?;
            Ok(Poly::new(ring, coeffs))
        }
        _ => Err(malformed(format!("bad polynomial {v}"))),
    }
}

// ---- descriptors ----

/// JSON form of a factorization.
#[derive(Debug, Serialize, Deserialize)]
pub struct FactorizationDescriptor {
    pub ring: String,
    pub n: u64,
    pub lambda: Value,
    pub factors: Vec<Value>,
}

pub fn describe_factorization(fz: &Factorization) -> FactorizationDescriptor {
    FactorizationDescriptor {
        ring: fz.ring().spec_string(),
        n: fz.n() as u64,
        lambda: elt_to_value(fz.ring(), fz.lambda()),
        factors: fz.factors().iter().map(poly_to_value).collect(),
    }
}

/// JSON form of a code over a single chain ring.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CodeDescriptor {
    pub ring: String,
    pub n: u64,
    pub lambda: Value,
    pub factors: Vec<Value>,
    pub levels: Vec<u64>,
    pub cardinality: String,
    pub self_dual: bool,
}

/// JSON form of a code over a product ring.
#[derive(Debug, Serialize, Deserialize)]
pub struct ProductCodeDescriptor {
    pub ring: String,
    pub n: u64,
    pub lambda: Vec<Value>,
    pub components: Vec<CodeDescriptor>,
    pub cardinality: String,
    pub self_dual: bool,
}

fn self_dual_flag(code: &Code) -> Result<bool> {
    let ring = code.ring();
    let lam = code.lambda();
    if ring.mul(lam, lam) == ring.one() {
        code.is_self_dual()
    } else {
        // the dual lives in a different ambient, so equality is impossible
        Ok(false)
    }
}

pub fn describe_code(code: &Code) -> Result<CodeDescriptor> {
    let fz = code.factorization();
    Ok(CodeDescriptor {
        ring: code.ring().spec_string(),
        n: code.n() as u64,
        lambda: elt_to_value(code.ring(), code.lambda()),
        factors: fz.factors().iter().map(poly_to_value).collect(),
        levels: code.levels().iter().map(|&t| t as u64).collect(),
        cardinality: code.cardinality().to_string(),
        self_dual: self_dual_flag(code)?,
    })
}

pub fn describe_product(code: &ProductCode) -> Result<ProductCodeDescriptor> {
    let components = code
        .components()
        .iter()
        .map(describe_code)
        .collect::<Result<Vec<_>>>()?;
    Ok(ProductCodeDescriptor {
        ring: code.ring().spec_string(),
        n: code.n() as u64,
        lambda: code
            .lambda()
            .parts()
            .iter()
            .zip(code.ring().components())
            .map(|(l, r)| elt_to_value(r, l))
            .collect(),
        cardinality: code.cardinality().to_string(),
        self_dual: code.is_self_dual().unwrap_or(false),
        components,
    })
}

/// Rebuild a code from its descriptor, revalidating the factor list
/// against a fresh factorization.
pub fn code_from_descriptor(d: &CodeDescriptor) -> Result<Code> {
    let pi = parse_ring_spec(&d.ring)?;
    if pi.arity() != 1 {
        return Err(malformed("expected a single chain ring, got a product"));
    }
    let ring = pi.components()[0].clone();
    let lambda = value_to_elt(&ring, &d.lambda)?;
    let n = d.n as usize;
    let fz = std::sync::Arc::new(factor_xn_minus_lambda(&ring, n, &lambda)?);
    if d.factors.len() != fz.len() {
        return Err(malformed(format!(
            "descriptor lists {} factors, x^{}-lambda has {}",
            d.factors.len(),
            n,
            fz.len()
        )));
    }
    if d.levels.len() != d.factors.len() {
        return Err(malformed("levels and factors differ in length"));
    }
    let mut levels = vec![usize::MAX; fz.len()];
    for (f_val, &t) in d.factors.iter().zip(&d.levels) {
        let f = value_to_poly(&ring, f_val)?;
        let idx = fz
            .factors()
            .iter()
            .position(|g| *g == f)
            .ok_or_else(|| malformed(format!("{f} is not a factor of x^{n}-lambda")))?;
        if levels[idx] != usize::MAX {
            return Err(malformed(format!("factor {f} listed twice")));
        }
        if t as usize > ring.e() {
            return Err(malformed(format!("level {t} exceeds the nilpotency index")));
        }
        levels[idx] = t as usize;
    }
    Ok(Code::build(CodeSpec::new(fz, levels)?))
}

pub fn product_from_descriptor(d: &ProductCodeDescriptor) -> Result<ProductCode> {
    let ring = parse_ring_spec(&d.ring)?;
    if d.components.len() != ring.arity() {
        return Err(Error::ArityMismatch {
            expected: ring.arity(),
            got: d.components.len(),
        });
    }
    let components = d
        .components
        .iter()
        .zip(ring.components())
        .map(|(cd, r)| {
            let code = code_from_descriptor(cd)?;
            if code.ring() != r {
                return Err(malformed(format!(
                    "component ring {} does not match product slot {}",
                    cd.ring,
                    r.spec_string()
                )));
            }
            Ok(code)
        })
        .collect::<Result<Vec<_>>>()?;
    chinese(&ring, components)
}

/// Recompute a descriptor's derived fields and report any mismatches.
pub fn check_code_descriptor(d: &CodeDescriptor) -> Result<(Code, Vec<String>)> {
    let code = code_from_descriptor(d)?;
    let mut diffs = Vec::new();
    let card = code.cardinality().to_string();
    if card != d.cardinality {
        diffs.push(format!(
            "cardinality: descriptor says {}, recomputed {}",
            d.cardinality, card
        ));
    }
    let sd = self_dual_flag(&code)?;
    if sd != d.self_dual {
        diffs.push(format!(
            "self_dual: descriptor says {}, recomputed {}",
            d.self_dual, sd
        ));
    }
    Ok((code, diffs))
}

pub fn check_product_descriptor(
    d: &ProductCodeDescriptor,
) -> Result<(ProductCode, Vec<String>)> {
    let code = product_from_descriptor(d)?;
    let mut diffs = Vec::new();
    for (i, cd) in d.components.iter().enumerate() {
        let (_, sub) = check_code_descriptor(cd)?;
        for s in sub {
            diffs.push(format!("component {i}: {s}"));
        }
    }
    let card = code.cardinality().to_string();
    if card != d.cardinality {
        diffs.push(format!(
            "cardinality: descriptor says {}, recomputed {}",
            d.cardinality, card
        ));
    }
    let sd = code.is_self_dual().unwrap_or(false);
    if sd != d.self_dual {
        diffs.push(format!(
            "self_dual: descriptor says {}, recomputed {}",
            d.self_dual, sd
        ));
    }
    Ok((code, diffs))
}

/// Parse a descriptor that may be either a single code or a product code.
pub enum AnyDescriptor {
    Single(CodeDescriptor),
    Product(ProductCodeDescriptor),
}

pub fn parse_descriptor(json: &str) -> Result<AnyDescriptor> {
    let value: Value =
        serde_json::from_str(json).map_err(|e| malformed(format!("bad JSON: {e}")))?;
    if value.get("components").is_some() {
        let d = serde_json::from_value(value)
            .map_err(|e| malformed(format!("bad product descriptor: {e}")))?;
        Ok(AnyDescriptor::Product(d))
    } else {
        let d = serde_json::from_value(value)
            .map_err(|e| malformed(format!("bad code descriptor: {e}")))?;
        Ok(AnyDescriptor::Single(d))
    }
}

/// Cardinality string sanity: decimal digits only.
pub fn parse_cardinality(s: &str) -> Result<BigUint> {
    s.parse::<BigUint>()
        .map_err(|_| malformed(format!("bad cardinality {s:?}")))
}
