//! Twist cyclic codes into constacyclic ones with the substitution
//! x -> x / delta, and confirm the twist is a cardinality- and
//! weight-preserving isomorphism in both directions.
//!
//! Run with: cargo run --example mu_isomorphism

use std::sync::Arc;

use constacyclic::*;

fn main() -> Result<()> {
    // over F5 with n = 2, delta = 2 has delta^n = 4, so cyclic codes twist
    // into 4-constacyclic ones
    let f5 = ChainRing::field(5, 1)?;
    let delta = f5.from_int(2);
    let lambda = f5.from_int(4);
    println!("delta = 2, delta^2 = {} over F5", f5.fmt_elt(&lambda));

    // lambda = 4 admits an n-th root, so the two ambients are isomorphic
    let root = find_nth_root(&f5, &lambda, 2)?;
    println!("least 2nd root of 4: {}", f5.fmt_elt(&root.unwrap()));
    println!();

    let oracle = BruteForce::for_chain(&f5, 2)?;
    let fz = Arc::new(factor_xn_minus_lambda(&f5, 2, &f5.one())?);
    for levels in [vec![0, 1], vec![1, 0]] {
        let cyclic = Code::build(CodeSpec::new(fz.clone(), levels)?);
        let twisted = mu_code(&cyclic, &delta)?;
        println!(
            "cyclic levels {:?} (gen {}) -> 4-constacyclic (gen {})",
            cyclic.levels(),
            cyclic.principal_generator(),
            twisted.principal_generator()
        );

        let src = oracle.members_of_code(&cyclic)?;
        let img = oracle.members_of_code(&twisted)?;
        assert_eq!(src.len(), img.len());
        assert_eq!(oracle.weight_hist(&src), oracle.weight_hist(&img));
        println!(
            "    cardinality {}, weight histogram {:?} on both sides",
            cyclic.cardinality(),
            oracle.weight_hist(&src)
        );

        // shift closure carries over: cyclic shift there, 4-shift back
        let lam1 = oracle.ring().one();
        let lam4 = oracle.ring().crt_compose(std::slice::from_ref(&lambda))?;
        assert!(oracle.is_shift_closed(&src, &lam1));
        assert!(oracle.is_shift_closed(&img, &lam4));
    }
    println!();

    // delta = 1 twists nothing, on any ring
    let z4 = ChainRing::zpe(2, 2)?;
    let fz = Arc::new(factor_xn_minus_lambda(&z4, 3, &z4.one())?);
    let code = Code::build(CodeSpec::new(fz, vec![1, 0])?);
    let same = mu_code(&code, &z4.one())?;
    assert_eq!(same.levels(), code.levels());
    println!("delta = 1 over Z/4 leaves levels {:?} unchanged", code.levels());
    Ok(())
}
