//! Breadth-first closure of a generating set inside a finite group.

use std::collections::HashSet;
use std::hash::Hash;

use crate::error::{Error, Result};

/// Elements of a group with an exactly comparable representation.
pub trait GroupElement: Clone + Eq + Hash + Ord {
    /// `self` followed by `other`.
    fn op(&self, other: &Self) -> Self;
}

/// Every product of `gens` starting from `identity`, sorted.
///
/// Right multiplication by the generators from the identity reaches the
/// whole subgroup because every generator has finite order. `admit` runs on
/// each new element and can abort the search (for example on a size bound).
pub fn closure_with<G, F>(identity: G, gens: &[G], cap: usize, mut admit: F) -> Result<Vec<G>>
where
    G: GroupElement,
    F: FnMut(&G) -> Result<()>,
{
    let mut seen: HashSet<G> = HashSet::from([identity.clone()]);
    let mut frontier = vec![identity];
    let mut all = frontier.clone();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for x in &frontier {
            for g in gens {
                let y = x.op(g);
                if !seen.contains(&y) {
                    admit(&y)?;
                    if seen.len() >= cap {
                        return Err(Error::CapExceeded { cap });
                    }
                    seen.insert(y.clone());
                    next.push(y);
                }
            }
        }
        all.extend(next.iter().cloned());
        frontier = next;
    }
    all.sort();
    Ok(all)
}

pub fn closure<G: GroupElement>(identity: G, gens: &[G], cap: usize) -> Result<Vec<G>> {
    closure_with(identity, gens, cap, |_| Ok(()))
}

/// Whether a sorted element list is closed under the operation.
pub fn is_closed<G: GroupElement>(elements: &[G]) -> bool {
    elements
        .iter()
        .all(|a| elements.iter().all(|b| elements.binary_search(&a.op(b)).is_ok()))
}

/// The order of `x` in a finite group, given the identity.
pub fn element_order<G: GroupElement>(x: &G, identity: &G, cap: usize) -> Option<usize> {
    let mut p = x.clone();
    for k in 1..=cap {
        if &p == identity {
            return Some(k);
        }
        p = p.op(x);
    }
    None
}

/// `r` when `order == p^r`.
pub fn log_p(order: usize, p: usize) -> Option<usize> {
    let (mut n, mut r) = (order, 0);
    while n > 1 {
        if n % p != 0 {
            return None;
        }
        n /= p;
        r += 1;
    }
    (n == 1).then_some(r)
}

/// Rank `r` when the group generated by `gens` (with `order` elements) is `(Z_p)^r`.
pub fn elementary_abelian_rank<G: GroupElement>(
    gens: &[G],
    identity: &G,
    order: usize,
    p: usize,
) -> Option<usize> {
    let commute = gens.iter().all(|a| gens.iter().all(|b| a.op(b) == b.op(a)));
    let exponent_p = gens.iter().all(|g| element_order(g, identity, p).is_some_and(|k| p % k == 0));
    if commute && exponent_p {
        log_p(order, p)
    } else {
        None
    }
}
