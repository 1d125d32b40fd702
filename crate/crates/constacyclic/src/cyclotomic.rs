//! Number-theoretic decision kernel for self-dual existence.
//!
//! Everything here reduces to the arithmetic of q modulo n for q the residue
//! field size: multiplicative orders, q-cyclotomic cosets, whether some power
//! of q is congruent to -1, and quadratic residues. On top of those sits the
//! verdict: for a chain ring with nilpotency index e and a length n coprime
//! to p, nontrivial self-dual cyclic codes exist exactly when e is even and
//! no power of q is -1 mod n; when such a power exists the only self-dual
//! code is generated by gamma^{e/2}; and odd e admits no self-dual code at
//! all.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::factor::gcd_u64;
use crate::ring::{is_prime, ChainRing};

fn mulmod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn powmod(mut a: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    a %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, a, m);
        }
        a = mulmod(a, a, m);
        e >>= 1;
    }
    acc
}

/// Multiplicative order of q mod n (smallest l >= 1 with q^l = 1).
pub fn ord_mod(n: u64, q: u64) -> Result<u64> {
    if n < 2 {
        return Err(Error::ModulusTooSmall(n));
    }
    let q0 = q % n;
    if gcd_u64(n, q0) != 1 {
        return Err(Error::NotCoprime { n, q });
    }
    let mut x = q0;
    let mut l = 1;
    while x != 1 {
        x = mulmod(x, q0, n);
        l += 1;
    }
    Ok(l)
}

/// The q-cyclotomic cosets mod n: orbits of multiplication by q on Z_n,
/// keyed by their least element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetTable {
    n: u64,
    q: u64,
    cosets: Vec<Vec<u64>>,
}

impl CosetTable {
    pub fn n(&self) -> u64 {
        self.n
    }
    pub fn q(&self) -> u64 {
        self.q
    }
    pub fn cosets(&self) -> &[Vec<u64>] {
        &self.cosets
    }
    pub fn leaders(&self) -> impl Iterator<Item = u64> + '_ {
        self.cosets.iter().map(|c| c[0])
    }

    /// Index of the coset containing j.
    pub fn coset_of(&self, j: u64) -> usize {
        let j = j % self.n;
        self.cosets
            .iter()
            .position(|c| c.binary_search(&j).is_ok())
            .expect("cosets partition Z_n")
    }

    /// C_j = C_{-j} (as sets; equivalently -j lies in the coset of j).
    pub fn is_reversible(&self, j: u64) -> bool {
        self.coset_of(j) == self.coset_of((self.n - j % self.n) % self.n)
    }
}

/// Partition Z_n into q-cyclotomic cosets.
pub fn cosets(n: u64, q: u64) -> Result<CosetTable> {
    if n < 2 {
        return Err(Error::ModulusTooSmall(n));
    }
    let q0 = q % n;
    if gcd_u64(n, q0) != 1 {
        return Err(Error::NotCoprime { n, q });
    }
    let mut seen = vec![false; n as usize];
    let mut out = Vec::new();
    for u in 0..n {
        if seen[u as usize] {
            continue;
        }
        let mut coset = Vec::new();
        let mut j = u;
        while !seen[j as usize] {
            seen[j as usize] = true;
            coset.push(j);
            j = mulmod(j, q0, n);
        }
        coset.sort_unstable();
        out.push(coset);
    }
    Ok(CosetTable { n, q, cosets: out })
}

/// The least i >= 1 with q^i = -1 mod n, if any (the search space is one
/// multiplicative order).
pub fn exists_pow_neg1(n: u64, q: u64) -> Result<Option<u64>> {
    let ord = ord_mod(n, q)?;
    let q0 = q % n;
    let mut x = 1;
    for i in 1..=ord {
        x = mulmod(x, q0, n);
        if x == n - 1 {
            return Ok(Some(i));
        }
    }
    Ok(None)
}

/// Whether the coset of 1 is reversible (-1 is a power of q mod n). When it
/// is, reversibility propagates to every coset, and this checks that it does.
pub fn c1_reversible(n: u64, q: u64) -> Result<bool> {
    let found = exists_pow_neg1(n, q)?.is_some();
    if found {
        let table = cosets(n, q)?;
        for u in table.leaders().collect::<Vec<_>>() {
            assert!(
                table.is_reversible(u),
                "reversibility of C_1 propagates to C_{u}"
            );
        }
    }
    Ok(found)
}

/// Euler's criterion: is q a square mod the odd prime m?
pub fn is_quadratic_residue(q: u64, m: u64) -> Result<bool> {
    if m < 3 || !is_prime(m) {
        return Err(Error::NotOddPrime(m));
    }
    if q.is_multiple_of(m) {
        return Err(Error::NotCoprime { n: m, q });
    }
    Ok(powmod(q, (m - 1) / 2, m) == 1)
}

/// Outcome of the self-dual existence decision.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Status {
    /// Self-dual codes beyond the gamma-power one exist.
    NontrivialExists,
    /// Exactly one self-dual code exists, generated by gamma^{e/2}.
    OnlyTrivial,
    /// No self-dual code of this length exists at all.
    None,
}

impl std::fmt::Display for Status {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Status::NontrivialExists => "NONTRIVIAL_EXISTS",
            Status::OnlyTrivial => "ONLY_TRIVIAL",
            Status::None => "NONE",
        })
    }
}

/// Which argument settled the verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum DecisionRule {
    /// e and n both odd: |R|^n is an odd power, so no linear self-dual code
    /// of length n exists, cyclic or not.
    ParityObstruction,
    /// e odd (n even): linear self-dual codes exist, but the gamma-chain has
    /// no middle level, so no cyclic one does.
    OddNilpotency,
    /// e even: scanned q^i for -1 mod n over one multiplicative order.
    CongruenceScan,
    /// e even, n an odd prime power: ord_n(q) parity decides; the scan is
    /// still run and must agree.
    OrdParity,
    /// Product ring: composed from per-component verdicts.
    ComponentComposition,
}

impl std::fmt::Display for DecisionRule {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            DecisionRule::ParityObstruction => "PARITY_OBSTRUCTION",
            DecisionRule::OddNilpotency => "ODD_NILPOTENCY",
            DecisionRule::CongruenceScan => "CONGRUENCE_SCAN",
            DecisionRule::OrdParity => "ORD_PARITY",
            DecisionRule::ComponentComposition => "COMPONENT_COMPOSITION",
        })
    }
}

/// Evidence attached to a verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Witness {
    /// q^i = -1 mod n, forcing every code to meet its dual in the middle.
    BlockingExponent(u64),
    /// Leader of a coset not closed under negation; its factor pair splits
    /// freely between a code and its dual.
    AsymmetricCoset(u64),
}

/// The decision record for one (ring, n).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExistenceVerdict {
    pub status: Status,
    pub decided_by: DecisionRule,
    pub witness: Option<Witness>,
}

fn odd_prime_power(n: u64) -> bool {
    if n < 3 || n.is_multiple_of(2) {
        return false;
    }
    let mut f = 3;
    let mut m = n;
    while f * f <= m {
        if m.is_multiple_of(f) {
            while m.is_multiple_of(f) {
                m /= f;
            }
            return m == 1;
        }
        f += 2;
    }
    true
}

/// Decide whether self-dual cyclic codes of length n over the ring exist,
/// and whether any are nontrivial.
pub fn self_dual_verdict(ring: &ChainRing, n: usize) -> Result<ExistenceVerdict> {
    if gcd_u64(n as u64, ring.p()) != 1 {
        return Err(Error::NotCoprimeLength { n: n as u64, p: ring.p() });
    }
    let e = ring.e();
    if e % 2 == 1 {
        let decided_by = if n % 2 == 1 {
            DecisionRule::ParityObstruction
        } else {
            DecisionRule::OddNilpotency
        };
        return Ok(ExistenceVerdict {
            status: Status::None,
            decided_by,
            witness: None,
        });
    }
    let n64 = n as u64;
    if n64 == 1 {
        // x - 1 alone; the middle gamma-power is the one self-dual code
        return Ok(ExistenceVerdict {
            status: Status::OnlyTrivial,
            decided_by: DecisionRule::CongruenceScan,
            witness: Some(Witness::BlockingExponent(1)),
        });
    }
    let q = ring.q();
    let blocking = exists_pow_neg1(n64, q)?;
    let decided_by = if odd_prime_power(n64) {
        let ord = ord_mod(n64, q)?;
        assert_eq!(
            ord % 2 == 1,
            blocking.is_none(),
            "order parity and the congruence scan must agree on odd prime powers"
        );
        DecisionRule::OrdParity
    } else {
        DecisionRule::CongruenceScan
    };
    Ok(match blocking {
        Some(i) => ExistenceVerdict {
            status: Status::OnlyTrivial,
            decided_by,
            witness: Some(Witness::BlockingExponent(i)),
        },
        None => {
            let table = cosets(n64, q)?;
            let leader = table
                .leaders()
                .find(|&u| u > 0 && !table.is_reversible(u))
                .expect("an asymmetric coset exists when no power of q is -1");
            ExistenceVerdict {
                status: Status::NontrivialExists,
                decided_by,
                witness: Some(Witness::AsymmetricCoset(leader)),
            }
        }
    })
}

/// Compose a product-ring verdict from component statuses: a component with
/// no self-dual code sinks the product; otherwise one nontrivial component
/// is enough (pad the rest with their trivial codes).
pub fn compose_product_status(parts: &[Status]) -> Status {
    if parts.contains(&Status::None) {
        Status::None
    } else if parts.contains(&Status::NontrivialExists) {
        Status::NontrivialExists
    } else {
        Status::OnlyTrivial
    }
}

/// Quadratic-residue shortcuts that settle existence without a scan.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum SufficientRule {
    /// n an odd prime, n = 3 mod 4, residue field of prime order: existence
    /// holds if and only if p is a square mod n.
    PrimeQuadraticCharacter,
    /// every prime factor of n is 3 mod 4 and q is a square mod each:
    /// existence follows (one direction only).
    CompositeQuadraticResidues,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SufficientCondition {
    pub rule: SufficientRule,
    pub implies_existence: bool,
}

/// Try the quadratic-residue shortcuts. Returns None when neither applies;
/// any answer is cross-checked against the full verdict.
pub fn sufficient_condition(ring: &ChainRing, n: usize) -> Result<Option<SufficientCondition>> {
    let n64 = n as u64;
    if ring.e() % 2 == 1 || n64 < 3 || n64.is_multiple_of(2) || gcd_u64(n64, ring.p()) != 1 {
        return Ok(None);
    }
    let mut prime_factors = Vec::new();
    let mut m = n64;
    let mut f = 3;
    while f * f <= m {
        if m.is_multiple_of(f) {
            prime_factors.push(f);
            while m.is_multiple_of(f) {
                m /= f;
            }
        }
        f += 2;
    }
    if m > 1 {
        prime_factors.push(m);
    }

    let found = if prime_factors == [n64] && ring.r() == 1 && n64 % 4 == 3 {
        Some(SufficientCondition {
            rule: SufficientRule::PrimeQuadraticCharacter,
            implies_existence: is_quadratic_residue(ring.p(), n64)?,
        })
    } else if prime_factors.iter().all(|&pi| pi % 4 == 3)
        && prime_factors
            .iter()
            .map(|&pi| is_quadratic_residue(ring.q(), pi))
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .all(|b| b)
    {
        Some(SufficientCondition {
            rule: SufficientRule::CompositeQuadraticResidues,
            implies_existence: true,
        })
    } else {
        None
    };

    if let Some(sc) = found {
        let verdict = self_dual_verdict(ring, n)?;
        if sc.implies_existence {
            assert_eq!(verdict.status, Status::NontrivialExists);
        } else {
            assert_ne!(verdict.status, Status::NontrivialExists);
        }
    }
    Ok(found)
}
