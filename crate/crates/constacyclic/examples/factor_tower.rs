//! Factor x^n - lambda over a tower of chain rings sharing one residue
//! field, and watch the residue factorization lift layer by layer.
//!
//! Run with: cargo run --example factor_tower

use constacyclic::*;

fn main() -> Result<()> {
    // the binary tower F2 -> Z/4 -> Z/8: one residue factorization of
    // x^7 - 1, three Hensel lifts of it
    for ring in [
        ChainRing::field(2, 1)?,
        ChainRing::zpe(2, 2)?,
        ChainRing::zpe(2, 3)?,
    ] {
        let fz = factor_xn_minus_lambda(&ring, 7, &ring.one())?;
        println!("x^7 - 1 over {}", ring.spec_string());
        for f in fz.factors() {
            println!("    {f}");
        }
        println!();
    }

    // a Galois ring lift: the residue field F4 splits x^5 - 1 differently
    // than F2 does, and GR(4,2) inherits that shape
    for ring in [ChainRing::field(2, 2)?, ChainRing::galois(2, 2, 2)?] {
        let fz = factor_xn_minus_lambda(&ring, 5, &ring.one())?;
        println!("x^5 - 1 over {}", ring.spec_string());
        for f in fz.factors() {
            println!("    {f}");
        }
        println!();
    }

    // a negacyclic ambient: x^4 + 1 over Z/9
    let z9 = ChainRing::zpe(3, 2)?;
    let fz = factor_xn_minus_lambda(&z9, 4, &z9.from_int(-1))?;
    println!("x^4 + 1 over {}", z9.spec_string());
    for (i, f) in fz.factors().iter().enumerate() {
        let partner = fz.reciprocal_partner(i)?;
        println!("    {f}   (reciprocal partner: factor {partner})");
    }

    // every factorization multiplies back exactly
    let mut product = Poly::one(&z9);
    for f in fz.factors() {
        product = product.mul(f);
    }
    assert_eq!(product, Poly::x_pow_minus(&z9, 4, &z9.from_int(-1)));
    println!("\nproduct of the factors reproduces x^4 + 1 exactly");
    Ok(())
}
