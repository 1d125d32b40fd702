//! Build cyclic codes over Z/4 from level maps, inspect their generator
//! towers, and pair each code with its dual.
//!
//! A level map assigns one level in 0..=e to each factor of x^n - lambda;
//! level 0 keeps a factor fully alive, level e kills it, and the levels in
//! between scale its block by powers of gamma. Cardinality, duality, and
//! freeness all read off the map.
//!
//! Run with: cargo run --example code_and_dual

use std::sync::Arc;

use constacyclic::*;

fn main() -> Result<()> {
    let z4 = ChainRing::zpe(2, 2)?;
    let fz = Arc::new(factor_xn_minus_lambda(&z4, 7, &z4.one())?);
    println!("x^7 - 1 over Z/4 = {fz}");
    println!();

    for levels in [vec![0, 0, 2], vec![1, 1, 1], vec![1, 0, 2]] {
        let code = Code::build(CodeSpec::new(fz.clone(), levels)?);
        println!("levels {:?}", code.levels());
        for g in code.generator_polys() {
            println!("    generator {g}");
        }
        println!("    cardinality {}", code.cardinality());
        match code.is_free() {
            Some(k) => println!("    free of rank {k}"),
            None => println!("    not free"),
        }

        let dual = code.dual()?;
        println!("    dual levels {:?}, cardinality {}", dual.levels(), dual.cardinality());
        assert_eq!(
            code.cardinality() * dual.cardinality(),
            z4.size_pow(code.n()),
            "|C| |C-dual| always equals |R|^n"
        );
        if code.is_self_dual()? {
            println!("    self-dual");
        }
        println!();
    }

    // membership is checked against the generator tower
    let code = Code::build(CodeSpec::new(fz.clone(), vec![1, 0, 2])?);
    let g = code.generator_vectors().remove(0);
    println!("generator vector {:?} is a member: {}", fmt_vec(&z4, &g), code.contains(&g)?);
    let e0: Vec<RingElt> = (0..7).map(|i| if i == 0 { z4.one() } else { z4.zero() }).collect();
    println!("unit vector {:?} is a member: {}", fmt_vec(&z4, &e0), code.contains(&e0)?);
    Ok(())
}

fn fmt_vec(ring: &ChainRing, v: &[RingElt]) -> Vec<String> {
    v.iter().map(|x| ring.fmt_elt(x)).collect()
}
