//! Decide self-dual existence over product rings by composing component
//! verdicts, and assemble a product witness when the answer is positive.
//!
//! Run with: cargo run --example product_verdicts

use constacyclic::pir::{construct_product_self_dual, product_verdict};
use constacyclic::*;

fn main() -> Result<()> {
    for spec in ["Z/4 x F3[u]/u^2", "Z/4 x Z/8", "Z/4 x Z/4", "GR(4,3)"] {
        let ring = parse_ring_spec(spec)?;
        print!("{spec:<18} n = 7: ");
        let verdict = product_verdict(&ring, 7)?;
        println!("{} (decided by {})", verdict.status, verdict.decided_by);
    }
    println!();

    // a mixed product: Z/4 contributes a nontrivial self-dual code at n = 7,
    // F3[u]/u^2 pads with its trivial middle code
    let ring = parse_ring_spec("Z/4 x F3[u]/u^2")?;
    let code = construct_product_self_dual(&ring, 7)?;
    println!(
        "witness over {}: cardinality {}",
        ring.spec_string(),
        code.cardinality()
    );
    for (component, part) in ring.components().iter().zip(code.components()) {
        println!(
            "    over {:<10} levels {:?}, cardinality {}",
            component.spec_string(),
            part.levels(),
            part.cardinality()
        );
    }
    assert!(code.is_self_dual()?);
    assert_eq!(
        code.cardinality() * code.cardinality(),
        ring.size_pow(7),
        "self-dual cardinality squares to the ambient size"
    );

    // one odd-nilpotency component poisons the whole product
    let poisoned = parse_ring_spec("Z/4 x F3")?;
    let verdict = product_verdict(&poisoned, 7)?;
    println!();
    println!(
        "{} n = 7: {} (an e = 1 component admits no self-dual code)",
        poisoned.spec_string(),
        verdict.status
    );
    Ok(())
}
