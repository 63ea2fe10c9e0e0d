use num_traits::Zero;

use super::{sign_of, PolyError, Rat, UniPoly};

/// Sturm chain of a square-free polynomial, each member scaled to a
/// primitive integer polynomial (positive factor, so signs are unchanged).
#[derive(Clone, Debug)]
pub struct SturmSeq {
    chain: Vec<UniPoly>,
}

impl SturmSeq {
    /// Builds the chain `p, p', -rem(..), ...`.
    ///
    /// `p` should be square-free; otherwise counts refer to the distinct
    /// roots of `p / gcd(p, p')` only away from the repeated roots.
    pub fn new(p: &UniPoly) -> Result<Self, PolyError> {
        if p.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        let mut chain = vec![p.primitive()];
        let d = p.derivative();
        if !d.is_zero() {
            chain.push(d.primitive());
            loop {
                let n = chain.len();
                let r = chain[n - 2].rem(&chain[n - 1]);
                if r.is_zero() {
                    break;
                }
                chain.push((-&r).primitive());
            }
        }
        Ok(SturmSeq { chain })
    }

    pub fn chain(&self) -> &[UniPoly] {
        &self.chain
    }

    pub fn head(&self) -> &UniPoly {
        &self.chain[0]
    }

    fn variations<I: Iterator<Item = i32>>(signs: I) -> usize {
        let mut last = 0;
        let mut v = 0;
        for s in signs {
            if s == 0 {
                continue;
            }
            if last != 0 && s != last {
                v += 1;
            }
            last = s;
        }
        v
    }

    pub fn variations_at(&self, x: &Rat) -> usize {
        Self::variations(self.chain.iter().map(|q| sign_of(&q.eval(x))))
    }

    pub fn variations_at_pos_inf(&self) -> usize {
        Self::variations(self.chain.iter().map(|q| sign_of(&q.lc())))
    }

    pub fn variations_at_neg_inf(&self) -> usize {
        Self::variations(self.chain.iter().map(|q| {
            let s = sign_of(&q.lc());
            if q.deg() % 2 == 1 {
                -s
            } else {
                s
            }
        }))
    }

    /// Number of distinct real roots in `(lo, hi]`; `None` bounds are infinite.
    pub fn count(&self, lo: Option<&Rat>, hi: Option<&Rat>) -> usize {
        let vl = match lo {
            Some(x) => self.variations_at(x),
            None => self.variations_at_neg_inf(),
        };
        let vh = match hi {
            Some(x) => self.variations_at(x),
            None => self.variations_at_pos_inf(),
        };
        vl.saturating_sub(vh)
    }

    /// Number of distinct real roots in the closed interval `[lo, hi]`.
    pub fn count_closed(&self, lo: &Rat, hi: &Rat) -> usize {
        let at_lo = usize::from(self.chain[0].eval(lo).is_zero());
        if lo == hi {
            return at_lo;
        }
        self.count(Some(lo), Some(hi)) + at_lo
    }

    pub fn count_all(&self) -> usize {
        self.count(None, None)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::int;

    #[test]
    fn counts_from_examples() {
        let s = SturmSeq::new(&UniPoly::from_ints(&[-2, 0, 1])).unwrap();
        assert_eq!(s.count(Some(&int(0)), Some(&int(2))), 1);
        let s = SturmSeq::new(&UniPoly::from_ints(&[1, 0, 1])).unwrap();
        assert_eq!(s.count(Some(&int(-10)), Some(&int(10))), 0);
        let s = SturmSeq::new(&UniPoly::from_ints(&[1, -3, 0, 1])).unwrap();
        assert_eq!(s.count(Some(&int(-2)), Some(&int(2))), 3);
        assert_eq!(s.count_all(), 3);
    }

    #[test]
    fn closed_counts_include_endpoints() {
        let s = SturmSeq::new(&UniPoly::from_ints(&[-1, 0, 1])).unwrap();
        assert_eq!(s.count_closed(&int(-1), &int(1)), 2);
        assert_eq!(s.count(Some(&int(-1)), Some(&int(1))), 1);
        assert_eq!(s.count_closed(&int(1), &int(1)), 1);
    }

    #[test]
    fn zero_is_rejected() {
        assert!(SturmSeq::new(&UniPoly::zero()).is_err());
    }
}
