//! Monomial orders: lexicographic, degree reverse lexicographic, and block
//! elimination orders, each over an arbitrary permutation of the variables.
//!
//! The permutation `perm[k]` names the variable read at position `k`; lex
//! reads positions left to right, revlex ties break at the rightmost
//! difference with the smaller exponent winning.  An elimination order is a
//! sequence of grevlex blocks compared block by block, which is exactly what
//! the composition code needs: prepending a block of duplicated variables to
//! an existing order leaves comparisons among the old variables unchanged.

use std::cmp::Ordering;

use super::monomial::Monomial;

/// The comparison scheme, prior to permuting variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OrderKind {
    Lex,
    DegRevLex,
    /// Successive grevlex blocks; sizes must sum to the variable count.
    Elim(Vec<usize>),
}

/// A total order on monomials of a fixed ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialOrder {
    kind: OrderKind,
    perm: Vec<usize>,
}

impl MonomialOrder {
    pub fn new(kind: OrderKind, perm: Vec<usize>) -> MonomialOrder {
        let n = perm.len();
        let mut seen = vec![false; n];
        for &v in &perm {
            assert!(v < n && !seen[v], "perm must be a permutation of 0..{n}");
            seen[v] = true;
        }
        if let OrderKind::Elim(blocks) = &kind {
            assert!(!blocks.is_empty() && blocks.iter().all(|&b| b > 0));
            assert_eq!(blocks.iter().sum::<usize>(), n, "block sizes must sum to {n}");
        }
        MonomialOrder { kind, perm }
    }

    pub fn lex(num_vars: usize) -> MonomialOrder {
        MonomialOrder::new(OrderKind::Lex, (0..num_vars).collect())
    }

    pub fn degrevlex(num_vars: usize) -> MonomialOrder {
        MonomialOrder::new(OrderKind::DegRevLex, (0..num_vars).collect())
    }

    pub fn elim(blocks: Vec<usize>, perm: Vec<usize>) -> MonomialOrder {
        MonomialOrder::new(OrderKind::Elim(blocks), perm)
    }

    /// Degrevlex in which variable `cheapest` is the cheapest (last position);
    /// the order used when saturating by that variable.
    pub fn degrevlex_cheapest_last(num_vars: usize, cheapest: usize) -> MonomialOrder {
        let mut perm: Vec<usize> = (0..num_vars).filter(|&v| v != cheapest).collect();
        perm.push(cheapest);
        MonomialOrder::new(OrderKind::DegRevLex, perm)
    }

    pub fn kind(&self) -> &OrderKind {
        &self.kind
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn num_vars(&self) -> usize {
        self.perm.len()
    }

    /// Short label for reports: `lex`, `degrevlex`, or `elim:4,12`.
    pub fn kind_label(&self) -> String {
        match &self.kind {
            OrderKind::Lex => "lex".to_string(),
            OrderKind::DegRevLex => "degrevlex".to_string(),
            OrderKind::Elim(blocks) => {
                let sizes: Vec<String> = blocks.iter().map(|b| b.to_string()).collect();
                format!("elim:{}", sizes.join(","))
            }
        }
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        debug_assert_eq!(a.num_vars(), self.perm.len());
        debug_assert_eq!(b.num_vars(), self.perm.len());
        match &self.kind {
            OrderKind::Lex => self.lex_positions(a, b, 0, self.perm.len()),
            OrderKind::DegRevLex => {
                let n = self.perm.len();
                a.degree()
                    .cmp(&b.degree())
                    .then_with(|| self.revlex_positions(a, b, 0, n))
            }
            OrderKind::Elim(blocks) => {
                let mut start = 0;
                for &size in blocks {
                    let end = start + size;
                    let da: u32 = (start..end).map(|p| u32::from(a.exp(self.perm[p]))).sum();
                    let db: u32 = (start..end).map(|p| u32::from(b.exp(self.perm[p]))).sum();
                    let c = da.cmp(&db).then_with(|| self.revlex_positions(a, b, start, end));
                    if c != Ordering::Equal {
                        return c;
                    }
                    start = end;
                }
                Ordering::Equal
            }
        }
    }

    /// First differing position in `start..end` wins with the larger exponent.
    fn lex_positions(&self, a: &Monomial, b: &Monomial, start: usize, end: usize) -> Ordering {
        for p in start..end {
            let v = self.perm[p];
            match a.exp(v).cmp(&b.exp(v)) {
                Ordering::Equal => {}
                c => return c,
            }
        }
        Ordering::Equal
    }

    /// Last differing position in `start..end` wins with the smaller exponent.
    fn revlex_positions(&self, a: &Monomial, b: &Monomial, start: usize, end: usize) -> Ordering {
        for p in (start..end).rev() {
            let v = self.perm[p];
            match a.exp(v).cmp(&b.exp(v)) {
                Ordering::Equal => {}
                c => return c.reverse(),
            }
        }
        Ordering::Equal
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(exps: &[u16]) -> Monomial {
        Monomial::from_exps(exps.to_vec())
    }

    #[test]
    fn lex_order() {
        let o = MonomialOrder::lex(3);
        assert_eq!(o.cmp(&m(&[1, 0, 0]), &m(&[0, 5, 5])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[1, 1, 0]), &m(&[1, 0, 5])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[1, 1, 0]), &m(&[1, 1, 0])), Ordering::Equal);
    }

    #[test]
    fn degrevlex_order() {
        let o = MonomialOrder::degrevlex(3);
        // Degree dominates.
        assert_eq!(o.cmp(&m(&[0, 0, 3]), &m(&[2, 0, 0])), Ordering::Greater);
        // Among equal degree, x*z < y^2 because z's exponent decides (smaller wins).
        assert_eq!(o.cmp(&m(&[1, 0, 1]), &m(&[0, 2, 0])), Ordering::Less);
        // x^2 > x*y > y^2 > x*z > y*z > z^2.
        let ranked = [
            m(&[2, 0, 0]),
            m(&[1, 1, 0]),
            m(&[0, 2, 0]),
            m(&[1, 0, 1]),
            m(&[0, 1, 1]),
            m(&[0, 0, 2]),
        ];
        for w in ranked.windows(2) {
            assert_eq!(o.cmp(&w[0], &w[1]), Ordering::Greater);
        }
    }

    #[test]
    fn permuted_lex_reads_positions() {
        // Position order z, y, x: z beats everything.
        let o = MonomialOrder::new(OrderKind::Lex, vec![2, 1, 0]);
        assert_eq!(o.cmp(&m(&[0, 0, 1]), &m(&[9, 9, 0])), Ordering::Greater);
    }

    #[test]
    fn cheapest_last_moves_variable() {
        let o = MonomialOrder::degrevlex_cheapest_last(3, 0);
        assert_eq!(o.perm(), &[1, 2, 0]);
        // Same degree: the monomial with less of the cheapest variable wins.
        assert_eq!(o.cmp(&m(&[2, 0, 0]), &m(&[0, 1, 1])), Ordering::Less);
    }

    #[test]
    fn elim_blocks_compare_blockwise() {
        // Block {x, y} first, then {z, w}.
        let o = MonomialOrder::elim(vec![2, 2], vec![0, 1, 2, 3]);
        // Any x beats any power of z.
        assert_eq!(o.cmp(&m(&[1, 0, 0, 0]), &m(&[0, 0, 7, 0])), Ordering::Greater);
        // Equal first block: second block decides by grevlex.
        assert_eq!(o.cmp(&m(&[1, 0, 0, 2]), &m(&[1, 0, 1, 0])), Ordering::Greater);
        // Within the first block, grevlex: x*w vs y*w, y has the later position.
        assert_eq!(o.cmp(&m(&[1, 0, 0, 1]), &m(&[0, 1, 0, 1])), Ordering::Greater);
    }

    #[test]
    fn elim_agrees_with_degrevlex_for_single_block() {
        let a = MonomialOrder::degrevlex(4);
        let b = MonomialOrder::elim(vec![4], vec![0, 1, 2, 3]);
        let ms = [
            m(&[1, 2, 0, 1]),
            m(&[0, 0, 4, 0]),
            m(&[1, 1, 1, 1]),
            m(&[2, 0, 0, 2]),
            m(&[0, 3, 1, 0]),
        ];
        for x in &ms {
            for y in &ms {
                assert_eq!(a.cmp(x, y), b.cmp(x, y));
            }
        }
    }

    #[test]
    #[should_panic(expected = "perm must be a permutation")]
    fn bad_perm_rejected() {
        MonomialOrder::new(OrderKind::Lex, vec![0, 0, 1]);
    }
}
