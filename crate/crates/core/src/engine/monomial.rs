//! Monomials and unit-coefficient binomials.
//!
//! Everything the toric engine manipulates is a difference of two monomials
//! with coefficients +1/-1: S-polynomials and reductions of such binomials
//! stay in that class, so the arithmetic is exact exponent bookkeeping.
//! A 64-bit support mask per monomial makes the frequent divisibility and
//! coprimality tests cheap (the engine caps rings at 64 variables).

/// A monomial as an exponent vector with cached degree and support mask.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u16>,
    degree: u32,
    support: u64,
}

impl Monomial {
    pub fn one(num_vars: usize) -> Self {
        assert!(num_vars <= 64);
        Monomial {
            exps: vec![0; num_vars],
            degree: 0,
            support: 0,
        }
    }

    pub fn from_exps(exps: Vec<u16>) -> Self {
        assert!(exps.len() <= 64);
        let mut degree = 0u32;
        let mut support = 0u64;
        for (i, &e) in exps.iter().enumerate() {
            degree += u32::from(e);
            if e > 0 {
                support |= 1 << i;
            }
        }
        Monomial {
            exps,
            degree,
            support,
        }
    }

    pub fn variable(i: usize, num_vars: usize) -> Self {
        let mut exps = vec![0; num_vars];
        exps[i] = 1;
        Monomial::from_exps(exps)
    }

    pub fn num_vars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn exp(&self, i: usize) -> u16 {
        self.exps[i]
    }

    pub fn exps(&self) -> &[u16] {
        &self.exps
    }

    pub fn support(&self) -> u64 {
        self.support
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.num_vars(), other.num_vars());
        let exps: Vec<u16> = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(&a, &b)| a + b)
            .collect();
        Monomial {
            degree: self.degree + other.degree,
            support: self.support | other.support,
            exps,
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        if self.support & !other.support != 0 || self.degree > other.degree {
            return false;
        }
        self.exps.iter().zip(&other.exps).all(|(&a, &b)| a <= b)
    }

    /// `self / other`; caller guarantees divisibility.
    pub fn div(&self, other: &Monomial) -> Monomial {
        debug_assert!(other.divides(self));
        Monomial::from_exps(
            self.exps
                .iter()
                .zip(&other.exps)
                .map(|(&a, &b)| a - b)
                .collect(),
        )
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial::from_exps(
            self.exps
                .iter()
                .zip(&other.exps)
                .map(|(&a, &b)| a.max(b))
                .collect(),
        )
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial::from_exps(
            self.exps
                .iter()
                .zip(&other.exps)
                .map(|(&a, &b)| a.min(b))
                .collect(),
        )
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.support & other.support == 0
    }
}

/// A binomial `plus - minus` with distinct monomials.  Orientation (which
/// side leads) is only meaningful relative to a monomial order; the
/// completion code keeps `plus` as the leading side.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Binomial {
    plus: Monomial,
    minus: Monomial,
}

impl Binomial {
    /// `None` when the two monomials coincide (the zero binomial).
    pub fn new(a: Monomial, b: Monomial) -> Option<Binomial> {
        debug_assert_eq!(a.num_vars(), b.num_vars());
        if a == b {
            None
        } else {
            Some(Binomial { plus: a, minus: b })
        }
    }

    /// `x^(v+) - x^(v-)` from an integer vector.
    pub fn from_vector(v: &[i64]) -> Option<Binomial> {
        let plus: Vec<u16> = v.iter().map(|&x| if x > 0 { x as u16 } else { 0 }).collect();
        let minus: Vec<u16> = v
            .iter()
            .map(|&x| if x < 0 { (-x) as u16 } else { 0 })
            .collect();
        Binomial::new(Monomial::from_exps(plus), Monomial::from_exps(minus))
    }

    pub fn plus(&self) -> &Monomial {
        &self.plus
    }

    pub fn minus(&self) -> &Monomial {
        &self.minus
    }

    pub fn num_vars(&self) -> usize {
        self.plus.num_vars()
    }

    pub fn degree(&self) -> u32 {
        self.plus.degree().max(self.minus.degree())
    }

    pub fn is_homogeneous(&self) -> bool {
        self.plus.degree() == self.minus.degree()
    }

    pub fn swap_sides(self) -> Binomial {
        Binomial {
            plus: self.minus,
            minus: self.plus,
        }
    }

    /// Divide both sides by their monomial gcd.
    pub fn coprime_part(&self) -> Binomial {
        let g = self.plus.gcd(&self.minus);
        if g.is_one() {
            self.clone()
        } else {
            Binomial {
                plus: self.plus.div(&g),
                minus: self.minus.div(&g),
            }
        }
    }

    /// Divide both sides by the highest common power of variable `i`.
    pub fn divide_out_variable(&self, i: usize) -> Binomial {
        let k = self.plus.exp(i).min(self.minus.exp(i));
        if k == 0 {
            return self.clone();
        }
        let strip = |m: &Monomial| {
            let mut exps = m.exps().to_vec();
            exps[i] -= k;
            Monomial::from_exps(exps)
        };
        Binomial {
            plus: strip(&self.plus),
            minus: strip(&self.minus),
        }
    }

    /// Move the binomial into a ring with `new_num_vars` variables along an
    /// injective variable map (`var_map[old] = new`).
    pub fn relabel(&self, var_map: &[usize], new_num_vars: usize) -> Binomial {
        let move_mono = |m: &Monomial| {
            let mut exps = vec![0u16; new_num_vars];
            for (old, &e) in m.exps().iter().enumerate() {
                if e > 0 {
                    exps[var_map[old]] = e;
                }
            }
            Monomial::from_exps(exps)
        };
        Binomial {
            plus: move_mono(&self.plus),
            minus: move_mono(&self.minus),
        }
    }
}
