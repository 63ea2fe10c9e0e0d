use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{forward_owned, rat_pow, rat_to_f64, write_term, PolyError, Rat, UniPoly};

/// Sparse bivariate polynomial: `(i, j)` keys stand for `X^i Y^j`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BiPoly {
    terms: BTreeMap<(u32, u32), Rat>,
}

impl BiPoly {
    pub fn zero() -> Self {
        BiPoly::default()
    }

    pub fn constant(c: Rat) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn monomial(c: Rat, i: u32, j: u32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((i, j), c);
        }
        BiPoly { terms }
    }

    pub fn x() -> Self {
        Self::monomial(Rat::one(), 1, 0)
    }

    pub fn y() -> Self {
        Self::monomial(Rat::one(), 0, 1)
    }

    /// Builds from `(coeff, i, j)` triples, summing repeated exponents.
    pub fn from_terms<I: IntoIterator<Item = (Rat, u32, u32)>>(it: I) -> Self {
        let mut p = BiPoly::zero();
        for (c, i, j) in it {
            p.add_term(i, j, c);
        }
        p
    }

    fn add_term(&mut self, i: u32, j: u32, c: Rat) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry((i, j)).or_insert_with(Rat::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&(i, j));
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &Rat)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, i: u32, j: u32) -> Rat {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total degree; 0 for the zero polynomial.
    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|(i, j)| i + j).max().unwrap_or(0)
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        BiPoly {
            terms: self.terms.iter().map(|(k, v)| (*k, v * c)).collect(),
        }
    }

    pub fn eval(&self, x: &Rat, y: &Rat) -> Rat {
        self.terms
            .iter()
            .map(|((i, j), c)| c * rat_pow(x, *i) * rat_pow(y, *j))
            .fold(Rat::zero(), |a, b| a + b)
    }

    pub fn eval_f64(&self, x: f64, y: f64) -> f64 {
        self.terms
            .iter()
            .map(|((i, j), c)| rat_to_f64(c) * x.powi(*i as i32) * y.powi(*j as i32))
            .sum()
    }

    /// `F(x0, t)` as a polynomial in `t`.
    pub fn at_x(&self, x0: &Rat) -> UniPoly {
        let mut v: Vec<Rat> = Vec::new();
        for ((i, j), c) in &self.terms {
            let j = *j as usize;
            if v.len() <= j {
                v.resize(j + 1, Rat::zero());
            }
            v[j] += c * rat_pow(x0, *i);
        }
        UniPoly::new(v)
    }

    /// `F(a X, b Y)`.
    pub fn scale_vars(&self, a: &Rat, b: &Rat) -> Self {
        BiPoly::from_terms(
            self.terms
                .iter()
                .map(|((i, j), c)| (c * rat_pow(a, *i) * rat_pow(b, *j), *i, *j)),
        )
    }

    /// Largest `e` with `X^e | F`.
    pub fn x_multiplicity(&self) -> Result<u32, PolyError> {
        self.terms
            .keys()
            .map(|(i, _)| *i)
            .min()
            .ok_or(PolyError::ZeroPolynomial)
    }

    pub fn y_divides(&self) -> Result<bool, PolyError> {
        if self.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        Ok(self.terms.keys().all(|(_, j)| *j > 0))
    }

    /// `Some((c, d))` when `F = c X^d`.
    pub fn is_cxd(&self) -> Result<Option<(Rat, u32)>, PolyError> {
        if self.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        if self.terms.len() != 1 {
            return Ok(None);
        }
        let ((i, j), c) = self.terms.iter().next().expect("one term");
        Ok((*j == 0).then(|| (c.clone(), *i)))
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        // Descending X exponent, then ascending Y exponent.
        let mut keys: Vec<_> = self.terms.keys().copied().collect();
        keys.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
        for (n, (i, j)) in keys.into_iter().enumerate() {
            let mut parts = Vec::new();
            match i {
                0 => {}
                1 => parts.push("X".to_string()),
                _ => parts.push(format!("X^{i}")),
            }
            match j {
                0 => {}
                1 => parts.push("Y".to_string()),
                _ => parts.push(format!("Y^{j}")),
            }
            write_term(f, &self.terms[&(i, j)], &parts.join("*"), n == 0)?;
        }
        Ok(())
    }
}

impl fmt::Debug for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BiPoly({self})")
    }
}

impl Add for &BiPoly {
    type Output = BiPoly;
    fn add(self, o: &BiPoly) -> BiPoly {
        let mut r = self.clone();
        for ((i, j), c) in &o.terms {
            r.add_term(*i, *j, c.clone());
        }
        r
    }
}

impl Sub for &BiPoly {
    type Output = BiPoly;
    fn sub(self, o: &BiPoly) -> BiPoly {
        let mut r = self.clone();
        for ((i, j), c) in &o.terms {
            r.add_term(*i, *j, -c);
        }
        r
    }
}

impl Mul for &BiPoly {
    type Output = BiPoly;
    fn mul(self, o: &BiPoly) -> BiPoly {
        let mut r = BiPoly::zero();
        for ((i1, j1), c1) in &self.terms {
            for ((i2, j2), c2) in &o.terms {
                r.add_term(i1 + i2, j1 + j2, c1 * c2);
            }
        }
        r
    }
}

impl Neg for &BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        BiPoly {
            terms: self.terms.iter().map(|(k, v)| (*k, -v)).collect(),
        }
    }
}

forward_owned!(Add, add, BiPoly);
forward_owned!(Sub, sub, BiPoly);
forward_owned!(Mul, mul, BiPoly);

impl Neg for BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        -&self
    }
}
