//! Constacyclic codes over finite chain rings and their products.
//!
//! A finite chain ring R is a finite local ring whose ideals form a single
//! chain generated by powers of one element gamma (Z/p^e, Galois rings
//! GR(p^e, r), and F_q[u]/(u^e) are the stock examples). For a unit lambda
//! and a length n coprime to the residue characteristic, the
//! lambda-constacyclic codes of length n are exactly the ideals of
//! R[x]/(x^n - lambda), and those are classified by a finite amount of
//! data: x^n - lambda factors uniquely into monic pairwise-coprime basic
//! irreducibles (Hensel lifting from the residue field), and a code
//! assigns each factor an exponent between 0 and e. Everything else in the
//! library is arithmetic over that classification:
//!
//! - [`ring`]: the three chain ring families with exact arithmetic.
//! - [`poly`]: dense polynomials over a chain ring.
//! - [`factor`]: residue-field factoring plus gamma-adic Hensel lifting.
//! - [`cyclotomic`]: coset and order computations; self-dual existence
//!   verdicts with the deciding rule and a witness.
//! - [`code`]: codes as level maps; generator towers, duals, membership,
//!   self-dual constructions, and the twist between cyclic and
//!   constacyclic ambients.
//! - [`pir`]: products of chain rings, Chinese-glued product codes, and
//!   the R + vR presentation.
//! - [`oracle`]: brute-force enumeration used to cross-check the above on
//!   small instances.
//! - [`census`]: verdict grids and oracle reports as serializable rows.
//! - [`descriptor`]: ring spec strings, polynomial literals, and the JSON
//!   code descriptor format.
//!
//! The crate deliberately favors exhaustively checkable sizes: rings are
//! capped at ten thousand elements for enumeration and the oracle refuses
//! spaces past 2^20 vectors. Within those bounds all arithmetic is exact.

pub mod census;
pub mod code;
pub mod cyclotomic;
pub mod descriptor;
pub mod error;
pub mod factor;
pub mod oracle;
pub mod pir;
pub mod poly;
pub mod ring;

pub use census::{census, oracle_enumerate, parse_grid, CensusRow, GridSpec, OracleReport};
pub use code::{construct_self_dual, find_nth_root, mu_code, trivial, Code, CodeSpec};
pub use cyclotomic::{
    self_dual_verdict, sufficient_condition, DecisionRule, ExistenceVerdict, Status, Witness,
};
pub use descriptor::{parse_chain_spec, parse_poly, parse_ring_spec, CodeDescriptor};
pub use error::{Error, Result};
pub use factor::{factor_xn_minus_lambda, Factorization};
pub use oracle::BruteForce;
pub use pir::{chinese, rvr_generators, PiRing, PirElt, ProductCode};
pub use poly::Poly;
pub use ring::{ChainRing, Family, RingElt};
