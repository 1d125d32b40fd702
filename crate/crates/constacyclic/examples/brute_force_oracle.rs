//! Enumerate every cyclic code of a small instance by brute force and
//! reconcile the haul with the level-map parameterization.
//!
//! The oracle knows nothing about factorizations: it closes single vectors
//! under shifts, sums, and scalar multiples, walking the entire ambient
//! space. Agreement with the structured library is therefore evidence, not
//! tautology.
//!
//! Run with: cargo run --example brute_force_oracle

use std::sync::Arc;

use constacyclic::census::oracle_enumerate_chain;
use constacyclic::*;

fn main() -> Result<()> {
    let z4 = ChainRing::zpe(2, 2)?;
    let oracle = BruteForce::for_chain(&z4, 3)?;
    println!(
        "walking all {} vectors of (Z/4)^3 for cyclic codes",
        oracle.space()
    );

    let one = oracle.ring().one();
    let found = oracle.all_codes(&one)?;
    println!("codes found: {}", found.len());

    // the structured library predicts (e + 1)^k codes from k factors
    let fz = Arc::new(factor_xn_minus_lambda(&z4, 3, &z4.one())?);
    println!(
        "structure prediction: (2 + 1)^{} = {}",
        fz.len(),
        3usize.pow(fz.len() as u32)
    );

    // every enumerated member set is some level map's code
    for levels in [vec![0, 0], vec![0, 1], vec![1, 1], vec![2, 2]] {
        let code = Code::build(CodeSpec::new(fz.clone(), levels)?);
        let members = oracle.members_of_code(&code)?;
        assert!(found.contains(&members));
        println!(
            "levels {:?}: {} members, weight histogram {:?}",
            code.levels(),
            members.len(),
            oracle.weight_hist(&members)
        );
    }

    // the lone self-dual code, straight from the report
    let report = oracle_enumerate_chain(&z4, 3, &z4.one())?;
    println!(
        "self-dual codes: {} with level maps {:?}",
        report.self_dual_count, report.self_dual_level_maps
    );

    // complements found by scanning match the library duals
    let code = Code::build(CodeSpec::new(fz.clone(), vec![0, 1])?);
    let members = oracle.members_of_code(&code)?;
    let complement = oracle.orthogonal_complement(&members, &one);
    let dual_members = oracle.members_of_code(&code.dual()?)?;
    assert_eq!(complement, dual_members);
    println!(
        "scanned complement of levels {:?} equals the library dual ({} members)",
        code.levels(),
        complement.len()
    );
    Ok(())
}
