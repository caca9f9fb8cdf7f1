//! Gabriel-Roiter measures as finite sets of lengths, with the exact
//! rational view.
//!
//! The order is implemented combinatorially and never touches rationals:
//! comparing ascending sequences elementwise, a smaller element wins (it
//! contributes a larger power of 1/2), and a proper prefix loses to its
//! extension. `measure_to_rational` provides the independent rational
//! oracle used by the verification suites.

use std::cmp::Ordering;
use std::fmt;

use num::BigInt;
use num::BigRational;
use num::One;

use crate::error::{Error, Result};

/// Exact rational value; reduced, positive denominator.
pub type ExactRational = BigRational;

/// A finite strictly increasing set of positive lengths. The empty set is
/// the measure of the zero module.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct GRMeasure {
    elements: Vec<usize>,
}

impl GRMeasure {
    pub fn new(elements: Vec<usize>) -> Result<Self> {
        if elements.contains(&0) {
            return Err(Error::Precondition("measure elements are positive".into()));
        }
        if elements.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Precondition(
                "measure elements are strictly increasing".into(),
            ));
        }
        Ok(GRMeasure { elements })
    }

    pub fn empty() -> Self {
        GRMeasure { elements: vec![] }
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn max_element(&self) -> Option<usize> {
        self.elements.last().copied()
    }

    /// Extends the measure by a new largest element.
    pub fn with_top(&self, top: usize) -> Result<GRMeasure> {
        if let Some(&last) = self.elements.last() {
            if top <= last {
                return Err(Error::Precondition(format!(
                    "top {top} does not exceed {last}"
                )));
            }
        }
        let mut elements = self.elements.clone();
        elements.push(top);
        Ok(GRMeasure { elements })
    }

    /// Drops the largest element.
    pub fn without_top(&self) -> GRMeasure {
        let mut elements = self.elements.clone();
        elements.pop();
        GRMeasure { elements }
    }

    /// The restriction to `{1, ..., bound}`.
    pub fn restrict_to(&self, bound: usize) -> GRMeasure {
        GRMeasure {
            elements: self
                .elements
                .iter()
                .copied()
                .take_while(|&e| e <= bound)
                .collect(),
        }
    }

    /// Prefix test: `self` equals `other` restricted to the largest element
    /// of `self`.
    pub fn is_start_of(&self, other: &GRMeasure) -> bool {
        match self.max_element() {
            None => true,
            Some(top) => other.restrict_to(top) == *self,
        }
    }
}

/// Total order matching the rational order of `sum 2^{-i}`.
pub fn measure_compare(a: &GRMeasure, b: &GRMeasure) -> Ordering {
    for (x, y) in a.elements.iter().zip(&b.elements) {
        match x.cmp(y) {
            // a smaller element means a larger measure
            Ordering::Less => return Ordering::Greater,
            Ordering::Greater => return Ordering::Less,
            Ordering::Equal => {}
        }
    }
    // one is a prefix of the other; the longer one is larger
    a.elements.len().cmp(&b.elements.len())
}

impl PartialOrd for GRMeasure {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for GRMeasure {
    fn cmp(&self, other: &Self) -> Ordering {
        measure_compare(self, other)
    }
}

/// Exact value `sum_{i in I} 2^{-i}` with power-of-two denominator.
pub fn measure_to_rational(m: &GRMeasure) -> ExactRational {
    let mut acc = BigRational::from_integer(BigInt::from(0));
    for &i in &m.elements {
        let den = BigInt::one() << i;
        acc += BigRational::new(BigInt::one(), den);
    }
    acc
}

impl fmt::Display for GRMeasure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.elements.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(v: &[usize]) -> GRMeasure {
        GRMeasure::new(v.to_vec()).unwrap()
    }

    #[test]
    fn equal_singletons() {
        assert_eq!(measure_compare(&m(&[1]), &m(&[1])), Ordering::Equal);
    }

    #[test]
    fn singleton_beats_deeper_start() {
        // 1/2 > 1/4 + 1/8
        assert_eq!(measure_compare(&m(&[1]), &m(&[2, 3])), Ordering::Greater);
    }

    #[test]
    fn extension_beats_prefix() {
        // 1/2 < 1/2 + 1/32
        assert_eq!(measure_compare(&m(&[1]), &m(&[1, 5])), Ordering::Less);
    }

    #[test]
    fn rational_values() {
        assert_eq!(
            measure_to_rational(&GRMeasure::empty()),
            BigRational::from_integer(0.into())
        );
        assert_eq!(
            measure_to_rational(&m(&[1])),
            BigRational::new(1.into(), 2.into())
        );
        assert_eq!(
            measure_to_rational(&m(&[1, 3])),
            BigRational::new(5.into(), 8.into())
        );
    }

    #[test]
    fn prefix_tests() {
        assert!(m(&[1, 2]).is_start_of(&m(&[1, 2, 4])));
        assert!(!m(&[1, 3]).is_start_of(&m(&[1, 2, 4])));
        assert!(GRMeasure::empty().is_start_of(&m(&[1])));
        // {1,4} is not the restriction of {1,2,4} to 4
        assert!(!m(&[1, 4]).is_start_of(&m(&[1, 2, 4])));
    }

    #[test]
    fn strictly_increasing_enforced() {
        assert!(GRMeasure::new(vec![1, 1]).is_err());
        assert!(GRMeasure::new(vec![2, 1]).is_err());
        assert!(GRMeasure::new(vec![0]).is_err());
    }
}
