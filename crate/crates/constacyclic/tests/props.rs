//! Property tests over randomized rings, lengths, and level maps.

use std::sync::Arc;

use proptest::prelude::*;

use constacyclic::*;

fn ring_pool() -> Vec<ChainRing> {
    vec![
        ChainRing::zpe(2, 2).unwrap(),
        ChainRing::zpe(3, 2).unwrap(),
        ChainRing::zpe(2, 3).unwrap(),
        ChainRing::field(2, 1).unwrap(),
        ChainRing::field(3, 1).unwrap(),
        ChainRing::field(2, 2).unwrap(),
        ChainRing::fq_u(3, 1, 2).unwrap(),
        ChainRing::galois(2, 2, 2).unwrap(),
    ]
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

proptest! {
    /// Division with remainder against a monic divisor reconstructs the
    /// dividend exactly, with the remainder degree strictly below.
    #[test]
    fn divmod_reconstructs_the_dividend(
        ring_idx in 0usize..8,
        a_coeffs in proptest::collection::vec(-9i64..9, 0..12),
        b_coeffs in proptest::collection::vec(-9i64..9, 1..6),
    ) {
        let pool = ring_pool();
        let ring = &pool[ring_idx];
        let a = Poly::from_ints(ring, &a_coeffs);
        let b = Poly::from_ints(ring, &b_coeffs)
            .add(&Poly::monomial(ring, ring.one(), b_coeffs.len()));
        let (q, r) = a.divmod(&b).unwrap();
        prop_assert_eq!(q.mul(&b).add(&r), a);
        prop_assert!(r.is_zero() || r.degree() < b.degree());
    }

    /// Over any ring, length, and level map: the dual pairs cardinalities to
    /// the full ambient size and is an involution.
    #[test]
    fn dual_is_a_cardinality_pairing_and_an_involution(
        ring_idx in 0usize..8,
        n in 1usize..=8,
        negacyclic in any::<bool>(),
        seed in any::<u64>(),
    ) {
        let pool = ring_pool();
        let ring = &pool[ring_idx];
        prop_assume!(gcd(n as u64, ring.characteristic()) == 1);
        let lambda = if negacyclic { ring.from_int(-1) } else { ring.one() };
        let fz = Arc::new(factor_xn_minus_lambda(ring, n, &lambda).unwrap());
        let mut s = seed;
        let levels: Vec<usize> = (0..fz.len())
            .map(|_| {
                let t = (s % (ring.e() as u64 + 1)) as usize;
                s /= ring.e() as u64 + 1;
                t
            })
            .collect();
        let c = Code::build(CodeSpec::new(fz, levels).unwrap());
        let d = c.dual().unwrap();
        prop_assert_eq!(c.cardinality() * d.cardinality(), ring.size_pow(n));
        let dd = d.dual().unwrap();
        prop_assert_eq!(dd.levels(), c.levels());
    }
}
