mod common;

use bce_core::char_p::{iota, CpMatrix, XiVector};
use bce_core::{sample, CpElem, GElem};
use common::{char_p_ring, rng};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

fn apply(m: &CpMatrix, v: &XiVector) -> XiVector {
    let mut out = XiVector::new();
    for (c, row) in &m.rows {
        let mut acc = m.ring.zero();
        for (d, coeff) in row {
            if let Some(vd) = v.get(d) {
                acc = m.ring.add(&acc, &m.ring.mul(coeff, vd));
            }
        }
        if !m.ring.is_zero(&acc) {
            out.insert(c.clone(), acc);
        }
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn convolution_is_commutative_and_associative((ring, p) in char_p_ring(), seed in any::<u64>()) {
        let mut r = rng(seed);
        let x = sample::tp(&mut r, &ring, p, 3, 4);
        let y = sample::tp(&mut r, &ring, p, 3, 4);
        let z = sample::tp(&mut r, &ring, p, 3, 4);
        prop_assert_eq!(x.mul(&y).unwrap(), y.mul(&x).unwrap());
        prop_assert_eq!(x.mul(&y).unwrap().mul(&z).unwrap(), x.mul(&y.mul(&z).unwrap()).unwrap());
    }

    #[test]
    fn iota_is_a_ring_isomorphism((ring, p) in char_p_ring(), seed in any::<u64>()) {
        let mut r = rng(seed);
        let x = sample::p_power_group_ring(&mut r, &ring, p, 3, 4);
        let y = sample::p_power_group_ring(&mut r, &ring, p, 3, 4);
        let ix = iota(&x, p).unwrap();
        prop_assert_eq!(iota(&x.mul(&y).unwrap(), p).unwrap(), ix.mul(&iota(&y, p).unwrap()).unwrap());
        prop_assert_eq!(ix.iota_inv(), x);
    }

    #[test]
    fn nilpotent_crossed_product_is_associative((ring, p) in char_p_ring(), seed in any::<u64>()) {
        let mut r = rng(seed);
        let x = sample::cp(&mut r, &ring, p, 3, 2, 3);
        let y = sample::cp(&mut r, &ring, p, 3, 2, 3);
        let z = sample::cp(&mut r, &ring, p, 3, 2, 3);
        prop_assert_eq!(x.mul(&y).unwrap().mul(&z).unwrap(), x.mul(&y.mul(&z).unwrap()).unwrap());
    }

    #[test]
    fn triangular_model_is_a_representation((ring, p) in char_p_ring(), seed in any::<u64>()) {
        let mut r = rng(seed);
        let x = sample::cp(&mut r, &ring, p, 2, 2, 3);
        let y = sample::cp(&mut r, &ring, p, 2, 2, 3);
        let v: XiVector = sample::tp(&mut r, &ring, p, 3, 4).terms().map(|(a, c)| (a.clone(), c.clone())).collect();
        prop_assert_eq!(x.mul(&y).unwrap().act(&v), x.act(&y.act(&v)));
        prop_assert!(x.matrix(2).is_lower_triangular());
    }

    #[test]
    fn matrix_agrees_with_action((ring, p) in char_p_ring(), seed in any::<u64>()) {
        let mut r = rng(seed);
        let x = sample::cp(&mut r, &ring, p, 2, 2, 3);
        let m = x.matrix(3);
        let v: XiVector = sample::tp(&mut r, &ring, p, 3, 4).terms().map(|(a, c)| (a.clone(), c.clone())).collect();
        let full = x.act(&v);
        let truncated: XiVector = full.into_iter().filter(|(c, _)| c.level(p) <= 3).collect();
        prop_assert_eq!(apply(&m, &v), truncated);
    }

    #[test]
    fn monomial_labels_decompose_in_the_semigroup(p in prop::sample::select(vec![2u64, 3, 5]), k in -3i64..=3, num in 0u32..27) {
        let ring = bce_core::Ring::prime_field(p).unwrap();
        let den = p.pow(3);
        let a = bce_core::PAdicFrac::new(num as u64 % den, p, 3).unwrap();
        let key = bce_core::CpKey::new(k, a);
        let g = key.to_affine(p);
        prop_assert!(g.in_plus());
        let w = g.decompose().unwrap();
        prop_assert_eq!(w.evaluate(p), g);
        let _ = CpElem::monomial(&ring, p, key).unwrap();
    }
}

#[test]
fn translations_outside_the_semigroup() {
    let g = GElem::new(2, 0, BigRational::new(BigInt::from(-1), BigInt::from(4)));
    assert!(!g.in_plus());
    assert!(g.decompose().is_none());
}
