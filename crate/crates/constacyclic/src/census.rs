//! Parameter-grid census of self-dual existence, and the oracle report
//! that cross-checks enumerated instances against the structure theory.
//!
//! A census walks rings x lengths in deterministic grid order, records one
//! verdict row per pair with gcd(n, p) = 1, and can materialize a verified
//! witness code for each row where one exists. An oracle report runs the
//! full brute-force enumeration on one instance and reconciles it with the
//! level-map parameterization: same code count, same member sets, same
//! self-dual census.

use serde::Serialize;
use serde_json::Value;

use crate::code::CodeSpec;
use crate::cyclotomic::{ord_mod, DecisionRule, Status, Witness};
use crate::descriptor::{describe_code, describe_product, parse_ring_spec};
use crate::error::{Error, Result};
use crate::factor::factor_xn_minus_lambda;
use crate::oracle::BruteForce;
use crate::pir::{construct_product_self_dual, product_verdict, PiRing, PirElt};
use crate::ring::ChainRing;

/// Largest number of (ring, n) cells a grid may span.
pub const GRID_BOUND: u64 = 10_000;

/// A census grid: a ring list crossed with an inclusive length range.
#[derive(Debug, Clone)]
pub struct GridSpec {
    pub rings: Vec<PiRing>,
    pub n_lo: usize,
    pub n_hi: usize,
}

/// Parse "ring1,ring2,...;lo..hi". Commas inside parentheses belong to the
/// ring spec (GR(4,2)), so only depth-zero commas separate rings.
pub fn parse_grid(s: &str) -> Result<GridSpec> {
    let (rings_part, range_part) = s.split_once(';').ok_or_else(|| {
        Error::MalformedDescriptor(format!("grid {s:?} needs the form rings;lo..hi"))
    })?;
    let mut specs = Vec::new();
    let mut depth = 0usize;
    let mut start = 0usize;
    for (i, c) in rings_part.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                specs.push(&rings_part[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    specs.push(&rings_part[start..]);
    let rings = specs
        .iter()
        .map(|r| parse_ring_spec(r))
        .collect::<Result<Vec<_>>>()?;
    let (lo, hi) = range_part.trim().split_once("..").ok_or_else(|| {
        Error::MalformedDescriptor(format!("range {range_part:?} needs the form lo..hi"))
    })?;
    let n_lo = lo
        .trim()
        .parse::<usize>()
        .map_err(|_| Error::MalformedDescriptor(format!("bad range start {lo:?}")))?;
    let n_hi = hi
        .trim()
        .parse::<usize>()
        .map_err(|_| Error::MalformedDescriptor(format!("bad range end {hi:?}")))?;
    if n_lo == 0 || n_hi < n_lo {
        return Err(Error::MalformedDescriptor(format!(
            "empty or zero-based range {range_part:?}"
        )));
    }
    Ok(GridSpec { rings, n_lo, n_hi })
}

/// One census cell: the verdict for (ring, n) plus the data behind it.
#[derive(Debug, Clone, Serialize)]
pub struct CensusRow {
    pub ring: String,
    pub n: u64,
    pub status: Status,
    pub decided_by: DecisionRule,
    pub ords: Vec<u64>,
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub construct: Option<Value>,
}

fn component_ords(ring: &PiRing, n: usize) -> Result<Vec<u64>> {
    ring.components()
        .iter()
        .map(|r| if n == 1 { Ok(1) } else { ord_mod(n as u64, r.q()) })
        .collect()
}

/// Walk the grid in order, one row per cell with gcd(n, p) = 1 in every
/// component. With `construct` set, rows whose verdict admits a nontrivial
/// self-dual code also carry a freshly verified witness descriptor.
pub fn census(grid: &GridSpec, construct: bool) -> Result<Vec<CensusRow>> {
    let cells = grid.rings.len() as u64 * (grid.n_hi - grid.n_lo + 1) as u64;
    if cells > GRID_BOUND {
        return Err(Error::GridTooLarge {
            rows: cells,
            bound: GRID_BOUND,
        });
    }
    let mut rows = Vec::new();
    for ring in &grid.rings {
        for n in grid.n_lo..=grid.n_hi {
            if ring
                .components()
                .iter()
                .any(|r| (n as u64).is_multiple_of(r.characteristic()))
            {
                continue;
            }
            let verdict = product_verdict(ring, n)?;
            let materialized = if construct && verdict.status == Status::NontrivialExists {
                let code = construct_product_self_dual(ring, n)?;
                assert_eq!(
                    code.cardinality() * code.cardinality(),
                    ring.size_pow(n),
                    "witness self-dual code squares to the ambient size"
                );
                Some(if ring.arity() == 1 {
                    serde_json::to_value(describe_code(&code.components()[0])?).unwrap()
                } else {
                    serde_json::to_value(describe_product(&code)?).unwrap()
                })
            } else {
                None
            };
            rows.push(CensusRow {
                ring: ring.spec_string(),
                n: n as u64,
                status: verdict.status,
                decided_by: verdict.decided_by,
                ords: component_ords(ring, n)?,
                witness: verdict.witness,
                construct: materialized,
            });
        }
    }
    Ok(rows)
}

/// The oracle's view of one (ring, n, lambda) instance.
#[derive(Debug, Clone, Serialize)]
pub struct OracleReport {
    pub ring: String,
    pub n: u64,
    pub lambda: String,
    pub codes_found: u64,
    pub self_dual_count: u64,
    pub self_dual_level_maps: Vec<Vec<Vec<u64>>>,
}

/// All level maps over a factor list with nilpotency index e.
fn level_maps(e: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..k {
        let mut next = Vec::with_capacity(out.len() * (e + 1));
        for prefix in &out {
            for t in 0..=e {
                let mut row = prefix.clone();
                row.push(t);
                next.push(row);
            }
        }
        out = next;
    }
    out
}

/// Enumerate every lambda-constacyclic code by brute force and reconcile
/// the haul with the level-map parameterization: the counts match the
/// structure-theorem prediction, every enumerated set is some level map's
/// code, and the self-dual sets are reported by their level maps.
pub fn oracle_enumerate(ring: &PiRing, n: usize, lambda: &PirElt) -> Result<OracleReport> {
    let oracle = BruteForce::new(ring, n)?;
    let enumerated = oracle.all_codes(lambda)?;
    for code in &enumerated {
        assert!(
            oracle.is_shift_closed(code, lambda),
            "every enumerated code is shift-closed"
        );
    }

    // member sets of each component code, per component, keyed by level map
    type LevelEntry = (Vec<usize>, Vec<Vec<crate::ring::RingElt>>);
    let mut per_component: Vec<Vec<LevelEntry>> = Vec::new();
    for (r, lam) in ring.components().iter().zip(lambda.parts()) {
        let fz = std::sync::Arc::new(factor_xn_minus_lambda(r, n, lam)?);
        let single = BruteForce::for_chain(r, n)?;
        let mut entries = Vec::new();
        for levels in level_maps(r.e(), fz.len()) {
            let code = crate::code::Code::build(CodeSpec::new(fz.clone(), levels.clone())?);
            let members = single.members_of_code(&code)?;
            let vectors = members
                .iter()
                .map(|&m| {
                    single
                        .decode_vec(m)
                        .iter()
                        .map(|x| x.part(0).clone())
                        .collect()
                })
                .collect();
            entries.push((levels, vectors));
        }
        per_component.push(entries);
    }

    // glue every combination and match it against the enumerated list
    let mut matched: Vec<(Vec<Vec<usize>>, Vec<u32>)> = vec![(Vec::new(), Vec::new())];
    for entries in &per_component {
        let mut next = Vec::with_capacity(matched.len() * entries.len());
        for (maps, _) in &matched {
            for (levels, _) in entries {
                let mut row = maps.clone();
                row.push(levels.clone());
                next.push((row, Vec::new()));
            }
        }
        matched = next;
    }
    for (maps, set) in &mut matched {
        let parts: Vec<Vec<Vec<crate::ring::RingElt>>> = maps
            .iter()
            .zip(&per_component)
            .map(|(levels, entries)| {
                entries
                    .iter()
                    .find(|(l, _)| l == levels)
                    .map(|(_, v)| v.clone())
                    .unwrap()
            })
            .collect();
        *set = oracle.glue(&parts);
        assert!(
            enumerated.contains(set),
            "every level-map code appears in the enumeration"
        );
    }
    assert_eq!(
        matched.len(),
        enumerated.len(),
        "code count matches the structure-theorem prediction"
    );
    {
        let mut sets: Vec<&Vec<u32>> = matched.iter().map(|(_, s)| s).collect();
        sets.sort_unstable();
        sets.dedup();
        assert_eq!(sets.len(), matched.len(), "level maps give distinct codes");
    }

    let mut self_dual_level_maps: Vec<Vec<Vec<u64>>> = matched
        .iter()
        .filter(|(_, set)| oracle.is_self_dual_set(set, lambda))
        .map(|(maps, _)| {
            maps.iter()
                .map(|levels| levels.iter().map(|&t| t as u64).collect())
                .collect()
        })
        .collect();
    self_dual_level_maps.sort_unstable();

    Ok(OracleReport {
        ring: ring.spec_string(),
        n: n as u64,
        lambda: ring.fmt_elt(lambda),
        codes_found: enumerated.len() as u64,
        self_dual_count: self_dual_level_maps.len() as u64,
        self_dual_level_maps,
    })
}

/// Convenience wrapper for a single chain ring.
pub fn oracle_enumerate_chain(
    ring: &ChainRing,
    n: usize,
    lambda: &crate::ring::RingElt,
) -> Result<OracleReport> {
    let pi = PiRing::from_chain(ring.clone());
    let lam = pi.crt_compose(std::slice::from_ref(lambda))?;
    oracle_enumerate(&pi, n, &lam)
}
