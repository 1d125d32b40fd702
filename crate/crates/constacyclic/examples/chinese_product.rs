//! Glue a negacyclic and a cyclic code over F3 into one constacyclic code
//! over F3 + vF3, and read its generators in v-form.
//!
//! F3 + vF3 (v^2 = v) splits as F3 x F3 through a + bv -> (a + b, a).
//! Under that splitting a pair of component codes glues to a single
//! lambda-constacyclic code whose lambda mixes the component ambients.
//!
//! Run with: cargo run --example chinese_product

use std::sync::Arc;

use constacyclic::*;

fn main() -> Result<()> {
    let f3 = ChainRing::field(3, 1)?;
    let rvr = PiRing::rvr(f3.clone());
    println!("ring {}, v = {}", rvr.spec_string(), rvr.fmt_elt(&rvr.rvr_v()));

    // component 1: the full negacyclic ambient (x^2 + 1 is irreducible)
    let neg = Arc::new(factor_xn_minus_lambda(&f3, 2, &f3.from_int(-1))?);
    let c1 = Code::build(CodeSpec::new(neg, vec![0])?);
    // component 2: the cyclic code generated by x - 1
    let cyc = Arc::new(factor_xn_minus_lambda(&f3, 2, &f3.one())?);
    let c2 = Code::build(CodeSpec::new(cyc, vec![0, 1])?);

    let product = chinese(&rvr, vec![c1, c2])?;
    let lambda = product.lambda();
    println!(
        "glued code: n = {}, lambda = {}, cardinality {} = 9 * 3",
        product.n(),
        rvr.fmt_elt(&lambda),
        product.cardinality()
    );

    // v-form generators: <v f1 + (1 - v) f2> is the whole code
    let gens = rvr_generators(&product)?;
    println!("component generators f1 = {}, f2 = {}", gens.f1, gens.f2);
    println!("combined generator {}", gens.combined.rvr_string(&rvr, product.n()));

    // brute force agrees: the member set is exactly the closure of the
    // combined generator under the lambda-shift
    let oracle = BruteForce::new(&rvr, 2)?;
    let members = oracle.members_of_product(&product)?;
    let single = oracle.closure(
        &[oracle.encode_vec(&gens.combined.to_vector(&rvr, 2))],
        &lambda,
    );
    assert_eq!(members, single);
    assert!(oracle.is_shift_closed(&members, &lambda));
    println!("closure of the combined generator has {} members", single.len());

    // duality distributes over the glue
    let dual = product.dual()?;
    let dual_gens = rvr_generators(&dual)?;
    println!(
        "dual cardinality {}, combined generator {}",
        dual.cardinality(),
        dual_gens.combined.rvr_string(&rvr, 2)
    );
    Ok(())
}
