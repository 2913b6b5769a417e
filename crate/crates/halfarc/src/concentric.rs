//! Concentric tuples of 2-groups: an ordered generating tuple (a₁,…,a_m)
//! where every window ⟨a_i,…,a_j⟩ has order 2^{j−i+1} and the shift
//! a_i ↦ a_{i+1} extends to an isomorphism of the two length-(m−1) windows.
//! Also a backtracking search for such tuples.

use num_traits::One;

use crate::error::{Error, Result};
use crate::fp::extends_to_isomorphism;
use crate::group::{BigCount, PermGroup, DEFAULT_ENUM_BOUND};
use crate::perm::Permutation;

/// Default node budget for the tuple search.
pub const DEFAULT_SEARCH_BUDGET: u64 = 4096;

/// A group with a candidate ordered generating tuple.
pub struct ConcentricInstance {
    group: PermGroup,
    tuple: Vec<Permutation>,
}

impl ConcentricInstance {
    /// Validates degrees and that the tuple generates the group.
    pub fn new(group: PermGroup, tuple: Vec<Permutation>) -> Result<Self> {
        if tuple.is_empty() {
            return Err(Error::Invalid("tuple must be nonempty".into()));
        }
        for t in &tuple {
            if t.degree() != group.degree() {
                return Err(Error::DegreeMismatch(group.degree(), t.degree()));
            }
        }
        let span = PermGroup::from_generators(group.degree(), &tuple)?;
        if span.order() != group.order() {
            return Err(Error::Invalid("tuple does not generate the group".into()));
        }
        Ok(ConcentricInstance { group, tuple })
    }

    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    pub fn tuple(&self) -> &[Permutation] {
        &self.tuple
    }

    pub fn m(&self) -> usize {
        self.tuple.len()
    }
}

/// Verdict of [`is_concentric`], with the chain table for reporting.
pub struct ConcentricReport {
    pub chain_ok: bool,
    pub shift_ok: bool,
    /// First `(i, j)` (1-based, lexicographic) whose window order is wrong.
    pub failing_window: Option<(usize, usize)>,
    /// Orders of all windows `(i, j)`, 1-based, lexicographic.
    pub window_orders: Vec<(usize, usize, u64)>,
    pub verdict: bool,
}

fn window_order(degree: usize, tuple: &[Permutation], i: usize, j: usize) -> Result<u64> {
    let g = PermGroup::from_generators(degree, &tuple[i - 1..j])?;
    g.order_u64().ok_or(Error::EnumerationBound {
        bound: DEFAULT_ENUM_BOUND,
    })
}

/// Checks `|⟨a_i,…,a_j⟩| = 2^{j−i+1}` for all `1 ≤ i < j ≤ m`; on failure
/// also returns the lexicographically first bad window.
pub fn check_chain_orders(inst: &ConcentricInstance) -> Result<(bool, Option<(usize, usize)>)> {
    let m = inst.m();
    for i in 1..m {
        for j in (i + 1)..=m {
            let got = window_order(inst.group.degree(), &inst.tuple, i, j)?;
            if got != 1u64 << (j - i + 1) {
                return Ok((false, Some((i, j))));
            }
        }
    }
    Ok((true, None))
}

/// Checks that `a_i ↦ a_{i+1}` extends to an isomorphism
/// `⟨a₁,…,a_{m−1}⟩ → ⟨a₂,…,a_m⟩`. Vacuously true for m = 1.
pub fn check_shift_isomorphism(inst: &ConcentricInstance) -> Result<bool> {
    let m = inst.m();
    if m < 2 {
        return Ok(true);
    }
    let degree = inst.group.degree();
    let b = PermGroup::from_generators(degree, &inst.tuple[..m - 1])?;
    let c = PermGroup::from_generators(degree, &inst.tuple[1..])?;
    extends_to_isomorphism(&b, &inst.tuple[..m - 1], &c, &inst.tuple[1..])
}

/// Runs both conditions and assembles the report.
pub fn is_concentric(inst: &ConcentricInstance) -> Result<ConcentricReport> {
    let m = inst.m();
    let mut window_orders = Vec::new();
    let mut failing = None;
    for i in 1..m {
        for j in (i + 1)..=m {
            let got = window_order(inst.group.degree(), &inst.tuple, i, j)?;
            window_orders.push((i, j, got));
            if failing.is_none() && got != 1u64 << (j - i + 1) {
                failing = Some((i, j));
            }
        }
    }
    let chain_ok = failing.is_none();
    let shift_ok = check_shift_isomorphism(inst)?;
    Ok(ConcentricReport {
        chain_ok,
        shift_ok,
        failing_window: failing,
        window_orders,
        verdict: chain_ok && shift_ok,
    })
}

/// Outcome of [`find_concentric_tuple`]: a budget overrun is reported as
/// `Err(BudgetExhausted)` and is *not* evidence that no tuple exists.
pub fn find_concentric_tuple(
    group: &PermGroup,
    m: usize,
    budget: u64,
) -> Result<Option<Vec<Permutation>>> {
    if m == 0 || m > 16 {
        return Err(Error::Invalid(format!("tuple length {m} out of range")));
    }
    let expected = BigCount::one() << m;
    if *group.order() != expected {
        return Err(Error::Invalid(format!(
            "group order {} is not 2^{m}",
            group.order()
        )));
    }
    // candidates: the involutions, in canonical (sorted) order
    let involutions: Vec<Permutation> = group
        .enumerate_elements(DEFAULT_ENUM_BOUND)?
        .into_iter()
        .filter(|e| e.order() == 2)
        .collect();
    let mut search = Search {
        group,
        involutions,
        m,
        budget,
        nodes: 0,
    };
    let mut tuple = Vec::with_capacity(m);
    search.dfs(&mut tuple)
}

struct Search<'a> {
    group: &'a PermGroup,
    involutions: Vec<Permutation>,
    m: usize,
    budget: u64,
    nodes: u64,
}

impl Search<'_> {
    fn dfs(&mut self, tuple: &mut Vec<Permutation>) -> Result<Option<Vec<Permutation>>> {
        let k = tuple.len();
        'candidates: for idx in 0..self.involutions.len() {
            self.nodes += 1;
            if self.nodes > self.budget {
                return Err(Error::BudgetExhausted {
                    budget: self.budget,
                });
            }
            let c = self.involutions[idx].clone();
            tuple.push(c);
            // the chain condition is hereditary: check every window ending
            // at the new position
            for i in 1..=k {
                let got = window_order(self.group.degree(), tuple, i, k + 1)?;
                if got != 1u64 << (k + 2 - i) {
                    tuple.pop();
                    continue 'candidates;
                }
            }
            if k + 1 == self.m {
                let ok = if self.m == 1 {
                    // single entry: it must generate the order-2 group
                    true
                } else {
                    // full window (1, m) already certifies generation
                    let inst = ConcentricInstance::new(
                        PermGroup::from_generators(self.group.degree(), tuple)?,
                        tuple.clone(),
                    )?;
                    check_shift_isomorphism(&inst)?
                };
                if ok {
                    return Ok(Some(tuple.clone()));
                }
            } else if let Some(found) = self.dfs(tuple)? {
                return Ok(Some(found));
            }
            tuple.pop();
        }
        Ok(None)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fp::{parse_presentation, regular_representation, todd_coxeter};

    fn regular(text: &str) -> PermGroup {
        let p = parse_presentation(text).unwrap();
        let t = todd_coxeter(&p, &[], 65536).unwrap();
        regular_representation(&t).unwrap().0
    }

    fn d8() -> PermGroup {
        regular("gens 2\ng1^4\ng2^2\n(g1*g2)^2\n")
    }

    fn inst(group: &PermGroup, tuple: Vec<Permutation>) -> ConcentricInstance {
        let span = PermGroup::from_generators(group.degree(), &tuple).unwrap();
        ConcentricInstance::new(span, tuple).unwrap()
    }

    #[test]
    fn klein_basis_tuple_is_concentric() {
        let k = regular("gens 2\ng1^2\ng2^2\n(g1*g2)^2\n");
        let tuple = k.generators().to_vec();
        let i = inst(&k, tuple);
        let report = is_concentric(&i).unwrap();
        assert!(report.chain_ok && report.shift_ok && report.verdict);
        assert_eq!(report.window_orders, vec![(1, 2, 4)]);
    }

    #[test]
    fn d8_tuple_b_a2_ab_is_concentric() {
        let g = d8();
        let a = g.generators()[0].clone();
        let b = g.generators()[1].clone();
        let a2 = a.compose_unchecked(&a);
        let ab = a.compose_unchecked(&b);
        let i = inst(&g, vec![b, a2, ab]);
        let report = is_concentric(&i).unwrap();
        assert!(report.verdict, "windows: {:?}", report.window_orders);
    }

    #[test]
    fn repeated_generator_fails_the_first_window() {
        let g = d8();
        let b = g.generators()[1].clone();
        let a = g.generators()[0].clone();
        let a2 = a.compose_unchecked(&a);
        // (b, b, ...) has |<a1,a2>| = 2
        let i = inst(&g, vec![b.clone(), b.clone(), a2, a.compose_unchecked(&b)]);
        let (ok, bad) = check_chain_orders(&i).unwrap();
        assert!(!ok);
        assert_eq!(bad, Some((1, 2)));
        assert!(!is_concentric(&i).unwrap().verdict);
    }

    #[test]
    fn shift_fails_when_window_types_differ() {
        let g = d8();
        let a = g.generators()[0].clone();
        let b = g.generators()[1].clone();
        let a2 = a.compose_unchecked(&a);
        // windows <b, a2> (Klein) and <a2, a> (C4): the shift cannot extend
        let i = inst(&g, vec![b, a2, a]);
        assert!(!check_shift_isomorphism(&i).unwrap());
    }

    #[test]
    fn single_involution_tuple_is_vacuously_concentric() {
        let c2 = regular("gens 1\ng1^2\n");
        let i = inst(&c2, c2.generators().to_vec());
        assert!(is_concentric(&i).unwrap().verdict);
    }

    #[test]
    fn search_finds_a_basis_of_elementary_abelian() {
        let g = regular("gens 3\ng1^2\ng2^2\ng3^2\n(g1*g2)^2\n(g1*g3)^2\n(g2*g3)^2\n");
        let found = find_concentric_tuple(&g, 3, 4096).unwrap().unwrap();
        let i = ConcentricInstance::new(g, found).unwrap();
        assert!(is_concentric(&i).unwrap().verdict);
    }

    #[test]
    fn search_finds_a_d8_tuple() {
        let g = d8();
        let found = find_concentric_tuple(&g, 3, 4096).unwrap().unwrap();
        let i = ConcentricInstance::new(g, found.clone()).unwrap();
        assert!(is_concentric(&i).unwrap().verdict);
        // reversal is also concentric
        let rev: Vec<Permutation> = found.into_iter().rev().collect();
        let span = PermGroup::from_generators(i.group().degree(), &rev).unwrap();
        let ri = ConcentricInstance::new(span, rev).unwrap();
        assert!(is_concentric(&ri).unwrap().verdict);
    }

    #[test]
    fn quaternion_group_has_no_tuple() {
        let q8 = regular("gens 2\ng1^4\ng2^2=g1^2\ng2^-1*g1*g2*g1\n");
        assert_eq!(q8.order_u64(), Some(8));
        // a single involution can never satisfy |<a1,a2>| = 4
        assert!(find_concentric_tuple(&q8, 3, 4096).unwrap().is_none());
    }

    #[test]
    fn budget_overrun_is_distinguished_from_none() {
        let g = d8();
        assert!(matches!(
            find_concentric_tuple(&g, 3, 2),
            Err(Error::BudgetExhausted { budget: 2 })
        ));
    }

    #[test]
    fn wrong_order_is_rejected() {
        let g = d8();
        assert!(find_concentric_tuple(&g, 4, 4096).is_err());
    }
}
