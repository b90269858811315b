//! Accumulation into sparse coefficient maps with zero-dropping.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use crate::arith::{Coeff, Ring};

/// Adds `c` at `key`, removing the entry if the sum vanishes.
pub(crate) fn accumulate<K: Ord>(map: &mut BTreeMap<K, Coeff>, ring: &Ring, key: K, c: Coeff) {
    if ring.is_zero(&c) {
        return;
    }
    match map.entry(key) {
        Entry::Vacant(v) => {
            v.insert(c);
        }
        Entry::Occupied(mut o) => {
            let sum = ring.add(o.get(), &c);
            if ring.is_zero(&sum) {
                o.remove();
            } else {
                *o.get_mut() = sum;
            }
        }
    }
}

pub(crate) fn collect<K: Ord>(
    ring: &Ring,
    items: impl IntoIterator<Item = (K, Coeff)>,
) -> BTreeMap<K, Coeff> {
    let mut map = BTreeMap::new();
    for (k, c) in items {
        accumulate(&mut map, ring, k, c);
    }
    map
}

/// Pointwise `a + sign·b`.
pub(crate) fn combine<K: Ord + Clone>(
    ring: &Ring,
    a: &BTreeMap<K, Coeff>,
    b: &BTreeMap<K, Coeff>,
    negate: bool,
) -> BTreeMap<K, Coeff> {
    let mut out = a.clone();
    for (k, c) in b {
        let c = if negate { ring.neg(c) } else { c.clone() };
        accumulate(&mut out, ring, k.clone(), c);
    }
    out
}

pub(crate) fn scale<K: Ord + Clone>(
    ring: &Ring,
    a: &BTreeMap<K, Coeff>,
    s: &Coeff,
) -> BTreeMap<K, Coeff> {
    a.iter()
        .map(|(k, c)| (k.clone(), ring.mul(c, s)))
        .filter(|(_, c)| !ring.is_zero(c))
        .collect()
}

/// Renders `Σ c·m` in the expression syntax. An empty monomial string
/// stands for the unit.
pub(crate) fn format_sum<'a>(
    ring: &Ring,
    terms: impl IntoIterator<Item = (String, &'a Coeff)>,
) -> String {
    let mut out = String::new();
    for (i, (mono, c)) in terms.into_iter().enumerate() {
        let (neg, abs) = ring.sign_split(c);
        let body = if mono.is_empty() {
            ring.format(&abs)
        } else if ring.is_one(&abs) {
            mono
        } else if ring.is_atomic(&abs) {
            format!("{}*{}", ring.format(&abs), mono)
        } else {
            format!("({})*{}", ring.format(&abs), mono)
        };
        match (i, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        out.push_str(&body);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}
