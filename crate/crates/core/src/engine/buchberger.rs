//! Buchberger completion for binomial ideals.
//!
//! S-pairs and remainders of unit binomials are again unit binomials, so the
//! completion loop never touches coefficients: reducing a binomial means
//! rewriting each of its two monomials to normal form.  Pairs are selected by
//! minimal lcm degree (ties by creation order) and pruned with the
//! Gebauer-Moller update, which is where almost all of the speed comes from.
//! Every run ends with minimalization and tail reduction, so the output is
//! the unique reduced basis of the ideal for the given order, independent of
//! generator order.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashSet};

use crate::budget::{Budget, BudgetError};

use super::monomial::{Binomial, Monomial};
use super::order::MonomialOrder;

/// A reduced Gröbner basis: oriented, minimal, tail-reduced, sorted by
/// (degree, leading exponents, trailing exponents).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis {
    elements: Vec<Binomial>,
    order: MonomialOrder,
}

impl GroebnerBasis {
    pub fn elements(&self) -> &[Binomial] {
        &self.elements
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn num_vars(&self) -> usize {
        self.order.num_vars()
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn max_degree(&self) -> u32 {
        self.elements.iter().map(Binomial::degree).max().unwrap_or(0)
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.elements.iter().map(|b| b.plus().clone()).collect()
    }

    /// Count of elements per degree, ascending.
    pub fn degree_histogram(&self) -> Vec<(u32, usize)> {
        let mut hist: Vec<(u32, usize)> = Vec::new();
        for b in &self.elements {
            let d = b.degree();
            match hist.iter_mut().find(|(deg, _)| *deg == d) {
                Some((_, c)) => *c += 1,
                None => hist.push((d, 1)),
            }
        }
        hist.sort_unstable();
        hist
    }

    pub fn normal_form(&self, m: &Monomial) -> Monomial {
        nf(m.clone(), &self.elements)
    }

    /// Ideal membership for a binomial: both sides share a normal form.
    pub fn contains(&self, b: &Binomial) -> bool {
        self.normal_form(b.plus()) == self.normal_form(b.minus())
    }

    /// Render as a text block: order header, then one `lhs - rhs` line per
    /// element with powers written as repeated factors.
    pub fn to_text(&self, labels: &[String]) -> String {
        assert_eq!(labels.len(), self.num_vars());
        let mut out = String::new();
        out.push_str(&format!("# order {}\n", self.order.kind_label()));
        let perm: Vec<String> = self.order.perm().iter().map(|v| v.to_string()).collect();
        out.push_str(&format!("# perm {}\n", perm.join(" ")));
        for b in &self.elements {
            out.push_str(&format!(
                "{} - {}\n",
                monomial_text(b.plus(), labels),
                monomial_text(b.minus(), labels)
            ));
        }
        out
    }
}

fn monomial_text(m: &Monomial, labels: &[String]) -> String {
    if m.is_one() {
        return "1".to_string();
    }
    let mut factors = Vec::new();
    for (i, &e) in m.exps().iter().enumerate() {
        for _ in 0..e {
            factors.push(labels[i].clone());
        }
    }
    factors.join("*")
}

/// Normal form of a monomial against an oriented rule set: rewrite by the
/// first element whose lead divides, until none does.  Terminates because
/// each rewrite strictly decreases the monomial in the order that oriented
/// the rules.
fn nf(mut m: Monomial, oriented: &[Binomial]) -> Monomial {
    'rewrite: loop {
        for b in oriented {
            if b.plus().divides(&m) {
                m = m.div(b.plus()).mul(b.minus());
                continue 'rewrite;
            }
        }
        return m;
    }
}

/// Reduce a binomial against oriented rules; `None` when it reduces to zero.
/// The result is oriented with its leading monomial on the plus side.
fn reduce_oriented(
    b: &Binomial,
    oriented: &[Binomial],
    order: &MonomialOrder,
) -> Option<Binomial> {
    let p = nf(b.plus().clone(), oriented);
    let q = nf(b.minus().clone(), oriented);
    Binomial::new(p, q).map(|b| orient(b, order))
}

fn orient(b: Binomial, order: &MonomialOrder) -> Binomial {
    if order.cmp(b.plus(), b.minus()) == std::cmp::Ordering::Less {
        b.swap_sides()
    } else {
        b
    }
}

/// Complete `gens` to the reduced Gröbner basis of the ideal they generate.
pub fn buchberger(
    gens: &[Binomial],
    order: &MonomialOrder,
    budget: &Budget,
) -> Result<GroebnerBasis, BudgetError> {
    let mut meter = budget.start();
    let mut basis: Vec<Binomial> = Vec::new();
    // Heap entries: Reverse((lcm degree, creation index, i, j)).
    let mut heap: BinaryHeap<Reverse<(u32, u64, u32, u32)>> = BinaryHeap::new();
    let mut killed: HashSet<(u32, u32)> = HashSet::new();
    let mut alive: Vec<(u32, u32)> = Vec::new();
    let mut seq = 0u64;

    let add = |h: Binomial,
                   basis: &mut Vec<Binomial>,
                   heap: &mut BinaryHeap<Reverse<(u32, u64, u32, u32)>>,
                   killed: &mut HashSet<(u32, u32)>,
                   alive: &mut Vec<(u32, u32)>,
                   seq: &mut u64| {
        let t = basis.len();
        let lt = h.plus().clone();
        // Candidate pairs (i, t) and their lcms.
        let lcms: Vec<Monomial> = basis.iter().map(|g| g.plus().lcm(&lt)).collect();
        let coprime: Vec<bool> = basis.iter().map(|g| g.plus().is_coprime(&lt)).collect();
        // Keep (i, t) when its leads are coprime (it prunes others, then is
        // dropped) or when no other surviving candidate's lcm divides its
        // lcm; of equal lcms exactly one survives.
        let mut in_c = vec![true; t];
        let mut kept = vec![false; t];
        for i in 0..t {
            in_c[i] = false;
            kept[i] = coprime[i]
                || (0..t).all(|j| {
                    i == j || !(in_c[j] || kept[j]) || !lcms[j].divides(&lcms[i])
                });
        }
        // Prune old pairs strictly superseded by the new element.
        alive.retain(|&(i, j)| {
            let lcm_ij = basis[i as usize].plus().lcm(basis[j as usize].plus());
            let supersede = lt.divides(&lcm_ij)
                && basis[i as usize].plus().lcm(&lt) != lcm_ij
                && basis[j as usize].plus().lcm(&lt) != lcm_ij;
            if supersede {
                killed.insert((i, j));
            }
            !supersede
        });
        for i in 0..t {
            if kept[i] && !coprime[i] {
                let key = (i as u32, t as u32);
                heap.push(Reverse((lcms[i].degree(), *seq, key.0, key.1)));
                alive.push(key);
                *seq += 1;
            }
        }
        basis.push(h);
    };

    for g in gens {
        if let Some(b) = reduce_oriented(g, &basis, order) {
            add(b, &mut basis, &mut heap, &mut killed, &mut alive, &mut seq);
        }
    }

    while let Some(Reverse((_, _, i, j))) = heap.pop() {
        if killed.remove(&(i, j)) {
            continue;
        }
        meter.tick_pair(basis.len())?;
        let (f, g) = (&basis[i as usize], &basis[j as usize]);
        let lcm = f.plus().lcm(g.plus());
        // S-binomial: (lcm/LT f)·tail f  -  (lcm/LT g)·tail g.
        let a = lcm.div(f.plus()).mul(f.minus());
        let b = lcm.div(g.plus()).mul(g.minus());
        let Some(s) = Binomial::new(a, b) else { continue };
        if let Some(r) = reduce_oriented(&s, &basis, order) {
            meter.check_degree(r.degree(), basis.len())?;
            add(r, &mut basis, &mut heap, &mut killed, &mut alive, &mut seq);
        }
    }

    Ok(reduce_basis(basis, order))
}

/// Minimalize and tail-reduce an already-complete basis.
fn reduce_basis(mut elements: Vec<Binomial>, order: &MonomialOrder) -> GroebnerBasis {
    for b in &mut elements {
        *b = orient(b.clone(), order);
    }
    // Degree-ascending scan keeps divisors ahead of their multiples; equal
    // leads collapse to the first.
    elements.sort_by(|a, b| {
        (a.plus().degree(), a.plus().exps(), a.minus().exps()).cmp(&(
            b.plus().degree(),
            b.plus().exps(),
            b.minus().exps(),
        ))
    });
    let mut minimal: Vec<Binomial> = Vec::new();
    for b in elements {
        if !minimal.iter().any(|k| k.plus().divides(b.plus())) {
            minimal.push(b);
        }
    }
    // A lead never divides its own (strictly smaller) tail, so each tail can
    // be normalized against the whole minimal set.
    for i in 0..minimal.len() {
        let tail = nf(minimal[i].minus().clone(), &minimal);
        minimal[i] = Binomial::new(minimal[i].plus().clone(), tail)
            .expect("tail reduction cannot reach the lead");
    }
    minimal.sort_by(|a, b| {
        (a.degree(), a.plus().exps(), a.minus().exps()).cmp(&(
            b.degree(),
            b.plus().exps(),
            b.minus().exps(),
        ))
    });
    GroebnerBasis {
        elements: minimal,
        order: order.clone(),
    }
}

/// Buchberger's criterion: every S-binomial of the set reduces to zero.
pub fn is_groebner(
    elements: &[Binomial],
    order: &MonomialOrder,
    budget: &Budget,
) -> Result<bool, BudgetError> {
    let mut meter = budget.start();
    let oriented: Vec<Binomial> = elements.iter().map(|b| orient(b.clone(), order)).collect();
    for i in 0..oriented.len() {
        for j in i + 1..oriented.len() {
            let (f, g) = (&oriented[i], &oriented[j]);
            if f.plus().is_coprime(g.plus()) {
                continue;
            }
            meter.tick_pair(oriented.len())?;
            let lcm = f.plus().lcm(g.plus());
            let a = lcm.div(f.plus()).mul(f.minus());
            let b = lcm.div(g.plus()).mul(g.minus());
            if let Some(s) = Binomial::new(a, b) {
                if reduce_oriented(&s, &oriented, order).is_some() {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Two bases present the same ideal: each one's elements vanish modulo the
/// other.  The bases may use different orders.
pub fn same_ideal(a: &GroebnerBasis, b: &GroebnerBasis) -> bool {
    a.elements.iter().all(|x| b.contains(x)) && b.elements.iter().all(|x| a.contains(x))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(exps: &[u16]) -> Monomial {
        Monomial::from_exps(exps.to_vec())
    }

    fn b(plus: &[u16], minus: &[u16]) -> Binomial {
        Binomial::new(m(plus), m(minus)).unwrap()
    }

    #[test]
    fn normal_form_rewrites_to_fixpoint() {
        // x -> y, oriented for lex with x > y > z.
        let rules = vec![b(&[1, 0, 0], &[0, 1, 0])];
        assert_eq!(nf(m(&[2, 0, 1]), &rules), m(&[0, 2, 1]));
        assert_eq!(nf(m(&[0, 1, 1]), &rules), m(&[0, 1, 1]));
    }

    #[test]
    fn single_binomial_is_its_own_basis() {
        let order = MonomialOrder::degrevlex(3);
        let gens = vec![b(&[2, 1, 0], &[1, 0, 2])];
        let gb = buchberger(&gens, &order, &Budget::default()).unwrap();
        assert_eq!(gb.elements(), &gens[..]);
    }

    #[test]
    fn coprime_leads_finish_immediately() {
        let order = MonomialOrder::lex(4);
        let gens = vec![b(&[1, 0, 0, 0], &[0, 1, 0, 0]), b(&[0, 0, 1, 0], &[0, 0, 0, 1])];
        let gb = buchberger(&gens, &order, &Budget::default()).unwrap();
        assert_eq!(gb.len(), 2);
        assert!(is_groebner(gb.elements(), &order, &Budget::default()).unwrap());
    }

    // Vars x, y, z, w.  The ideal (xz - y^2, xw - yz) completes under lex to
    // exactly one new element y^2 w - y z^2: the S-pair of the two quadrics
    // leaves the remainder y(yw - z^2), and every further pair reduces to
    // zero (checked by hand).
    #[test]
    fn completion_adds_the_one_missing_cubic() {
        let order = MonomialOrder::lex(4);
        let f = b(&[1, 0, 1, 0], &[0, 2, 0, 0]); // xz - y^2
        let g = b(&[1, 0, 0, 1], &[0, 1, 1, 0]); // xw - yz
        let gb = buchberger(&[f.clone(), g.clone()], &order, &Budget::default()).unwrap();
        let cubic = b(&[0, 2, 0, 1], &[0, 1, 2, 0]); // y^2 w - y z^2
        // Elements sort ascending by exponent vector, so xw precedes xz.
        assert_eq!(gb.elements(), &[g, f, cubic]);
        assert!(is_groebner(gb.elements(), &order, &Budget::default()).unwrap());
    }

    #[test]
    fn twisted_cubic_three_quadrics_are_a_basis() {
        let order = MonomialOrder::degrevlex(4);
        // xz - y^2, yw - z^2, xw - yz: the degree-2 Veronese relations.
        let gens = vec![
            b(&[1, 0, 1, 0], &[0, 2, 0, 0]),
            b(&[0, 1, 0, 1], &[0, 0, 2, 0]),
            b(&[1, 0, 0, 1], &[0, 1, 1, 0]),
        ];
        assert!(is_groebner(&gens, &order, &Budget::default()).unwrap());
        let gb = buchberger(&gens, &order, &Budget::default()).unwrap();
        assert_eq!(gb.len(), 3);
    }

    #[test]
    fn reduced_basis_is_input_order_independent() {
        let order = MonomialOrder::lex(4);
        let gens = vec![
            b(&[1, 0, 1, 0], &[0, 2, 0, 0]),
            b(&[1, 0, 0, 1], &[0, 1, 1, 0]),
            b(&[0, 1, 0, 1], &[0, 0, 2, 0]),
        ];
        let reference = buchberger(&gens, &order, &Budget::default()).unwrap();
        let mut shuffled = gens.clone();
        shuffled.reverse();
        assert_eq!(buchberger(&shuffled, &order, &Budget::default()).unwrap(), reference);
    }

    #[test]
    fn inputs_vanish_modulo_their_basis() {
        let order = MonomialOrder::degrevlex(4);
        let gens = vec![
            b(&[1, 0, 1, 0], &[0, 2, 0, 0]),
            b(&[1, 0, 0, 1], &[0, 1, 1, 0]),
        ];
        let gb = buchberger(&gens, &order, &Budget::default()).unwrap();
        for g in &gens {
            assert!(gb.contains(g));
        }
    }

    #[test]
    fn degree_budget_stops_completion() {
        let order = MonomialOrder::lex(4);
        let gens = vec![
            b(&[1, 0, 1, 0], &[0, 2, 0, 0]),
            b(&[1, 0, 0, 1], &[0, 1, 1, 0]),
        ];
        // The completion needs a cubic; forbid anything above degree 2.
        let budget = Budget::default().with_max_degree(2);
        match buchberger(&gens, &order, &budget) {
            Err(BudgetError::DegreeExceeded { max_degree: 2, seen: 3, .. }) => {}
            other => panic!("expected degree budget error, got {other:?}"),
        }
    }

    #[test]
    fn pair_budget_stops_completion() {
        let order = MonomialOrder::lex(4);
        let gens = vec![
            b(&[1, 0, 1, 0], &[0, 2, 0, 0]),
            b(&[1, 0, 0, 1], &[0, 1, 1, 0]),
        ];
        let budget = Budget::default().with_max_pairs(0);
        assert!(matches!(
            buchberger(&gens, &order, &budget),
            Err(BudgetError::PairsExceeded { .. })
        ));
    }

    #[test]
    fn serialization_lists_sorted_elements() {
        let order = MonomialOrder::lex(4);
        let labels: Vec<String> = ["x", "y", "z", "w"].iter().map(|s| s.to_string()).collect();
        let gens = vec![
            b(&[1, 0, 1, 0], &[0, 2, 0, 0]),
            b(&[1, 0, 0, 1], &[0, 1, 1, 0]),
        ];
        let gb = buchberger(&gens, &order, &Budget::default()).unwrap();
        let text = gb.to_text(&labels);
        let expected = "\
# order lex
# perm 0 1 2 3
x*w - y*z
x*z - y*y
y*y*w - y*z*z
";
        assert_eq!(text, expected);
    }

    #[test]
    fn same_ideal_across_orders() {
        let gens = vec![
            b(&[1, 0, 1, 0], &[0, 2, 0, 0]),
            b(&[1, 0, 0, 1], &[0, 1, 1, 0]),
        ];
        let lex = buchberger(&gens, &MonomialOrder::lex(4), &Budget::default()).unwrap();
        let grevlex = buchberger(&gens, &MonomialOrder::degrevlex(4), &Budget::default()).unwrap();
        assert!(same_ideal(&lex, &grevlex));
        let other = buchberger(
            &[b(&[1, 0, 0, 0], &[0, 1, 0, 0])],
            &MonomialOrder::lex(4),
            &Budget::default(),
        )
        .unwrap();
        assert!(!same_ideal(&lex, &other));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        /// Random homogeneous binomial sets: the reduced basis is independent
        /// of generator order, passes the S-pair criterion, and contains the
        /// inputs.
        #[test]
        fn completion_is_canonical(seed in proptest::collection::vec((0usize..12, 0usize..12), 1..4)) {
            // Degree-2 monomials in 4 variables, indexed by ordered pairs.
            let mono = |k: usize| {
                let (a, b) = (k / 4, k % 4);
                let mut e = vec![0u16; 4];
                e[a] += 1;
                e[b] += 1;
                Monomial::from_exps(e)
            };
            let gens: Vec<Binomial> = seed
                .iter()
                .filter_map(|&(p, q)| Binomial::new(mono(p), mono(q)))
                .collect();
            let order = MonomialOrder::degrevlex(4);
            let budget = Budget::default().with_max_degree(12);
            let gb = buchberger(&gens, &order, &budget).unwrap();
            prop_assert!(is_groebner(gb.elements(), &order, &budget).unwrap());
            for g in &gens {
                prop_assert!(gb.contains(g));
            }
            let mut rev = gens.clone();
            rev.reverse();
            prop_assert_eq!(buchberger(&rev, &order, &budget).unwrap(), gb);
        }
    }
}
