mod common;

use bce_core::json::Element;
use bce_core::{sample, BcElem, CpElem, HeckeElem};
use common::{any_ring, char_p_ring, rng};
use proptest::prelude::*;

fn round_trip(e: Element) -> Result<(), TestCaseError> {
    let v = e.to_json();
    let back = Element::from_json(&v).map_err(|err| TestCaseError::fail(format!("{v}: {err}")))?;
    prop_assert_eq!(back.to_json(), v);
    prop_assert_eq!(back, e);
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn crossed_product_elements(ring in any_ring(), seed in any::<u64>()) {
        let mut r = rng(seed);
        let x = sample::bc(&mut r, &ring, 4, 12, 24);
        round_trip(Element::Bc(x.clone()))?;
        round_trip(Element::Hecke(HeckeElem::phi_inv(&x)))?;
        let g = sample::group_ring(&mut r, &ring, 4, 24);
        if !g.is_zero() {
            round_trip(Element::GroupRing(g.clone()))?;
        }
        round_trip(Element::Bc(BcElem::embed_gr(&g)))?;
    }

    #[test]
    fn characteristic_p_elements((ring, p) in char_p_ring(), seed in any::<u64>()) {
        let mut r = rng(seed);
        let t = sample::tp(&mut r, &ring, p, 3, 4);
        if !t.is_zero() {
            round_trip(Element::Tp(t))?;
        }
        let c = sample::nonzero_cp(&mut r, &ring, p, 3, 3, 4);
        if c.terms().any(|(k, _)| k.k != 0) {
            round_trip(Element::Cp(c))?;
        }
        round_trip(Element::Cp(CpElem::zero(&ring, p).unwrap()))?;
    }
}
