//! Univariate polynomials over GF(p): irreducibility, enumeration and
//! companion matrices.
//!
//! Extension-field behaviour enters the toolkit only through companion
//! matrices over GF(p), so polynomial arithmetic stays elementary.

use std::fmt;

use crate::error::{Error, Result};
use crate::matrix::{fp_add, fp_mul, fp_neg, fp_sub, is_prime, FpMatrix};

/// Polynomial with coefficients in GF(p), little-endian, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct FpPoly {
    p: u64,
    coeffs: Vec<u64>,
}

impl FpPoly {
    pub fn new(p: u64, coeffs: Vec<u64>) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let mut coeffs: Vec<u64> = coeffs.into_iter().map(|c| c % p).collect();
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Ok(FpPoly { p, coeffs })
    }

    pub fn zero(p: u64) -> Result<Self> {
        FpPoly::new(p, vec![])
    }

    pub fn x(p: u64) -> Result<Self> {
        FpPoly::new(p, vec![0, 1])
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeff(&self, i: usize) -> u64 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last() == Some(&1)
    }

    pub fn mul(&self, other: &FpPoly) -> FpPoly {
        assert_eq!(self.p, other.p);
        if self.is_zero() || other.is_zero() {
            return FpPoly {
                p: self.p,
                coeffs: vec![],
            };
        }
        let mut coeffs = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = fp_add(coeffs[i + j], fp_mul(a, b, self.p), self.p);
            }
        }
        FpPoly { p: self.p, coeffs }
    }

    pub fn pow(&self, mut e: u32) -> FpPoly {
        let mut acc = FpPoly::new(self.p, vec![1]).expect("valid p");
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Remainder of `self` by a monic divisor.
    pub fn rem(&self, divisor: &FpPoly) -> FpPoly {
        assert!(divisor.is_monic(), "division needs a monic divisor");
        let p = self.p;
        let d = divisor.degree();
        let mut r = self.coeffs.clone();
        while r.len() > d {
            let lead = *r.last().expect("nonempty");
            let shift = r.len() - 1 - d;
            if lead != 0 {
                for (i, &c) in divisor.coeffs.iter().enumerate() {
                    r[shift + i] = fp_sub(r[shift + i], fp_mul(lead, c, p), p);
                }
            }
            r.pop();
        }
        FpPoly::new(p, r).expect("valid p")
    }

    /// Trial division by all lower-degree monic irreducibles.
    pub fn is_irreducible(&self) -> bool {
        let d = self.degree();
        if d == 0 || self.is_zero() {
            return false;
        }
        if d == 1 {
            return true;
        }
        for dd in 1..=d / 2 {
            for g in monic_irreducibles(self.p, dd).expect("p validated") {
                if self.rem(&g).is_zero() {
                    return false;
                }
            }
        }
        true
    }

    /// Companion matrix of a monic polynomial of positive degree: ones on
    /// the subdiagonal, negated coefficients in the last column.
    pub fn companion_matrix(&self) -> Result<FpMatrix> {
        if !self.is_monic() || self.degree() == 0 {
            return Err(Error::InvalidParameter(
                "companion matrix needs a monic polynomial of positive degree".into(),
            ));
        }
        let n = self.degree();
        let mut m = FpMatrix::zeros(self.p, n, n)?;
        for i in 1..n {
            m.set(i, i - 1, 1);
        }
        for i in 0..n {
            m.set(i, n - 1, fp_neg(self.coeff(i), self.p));
        }
        Ok(m)
    }

    /// Parses expressions like `x^2+2x+1`, `x-1`, `x`, `3`.
    pub fn parse(p: u64, s: &str) -> Result<FpPoly> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(Error::InvalidParameter("empty polynomial".into()));
        }
        let mut coeffs: Vec<u64> = Vec::new();
        let mut add_term = |coeff: i64, deg: usize| {
            if coeffs.len() <= deg {
                coeffs.resize(deg + 1, 0);
            }
            let c = coeff.rem_euclid(p as i64) as u64;
            coeffs[deg] = fp_add(coeffs[deg], c, p);
        };
        // split into signed terms
        let mut terms: Vec<String> = Vec::new();
        let mut cur = String::new();
        for (i, ch) in s.chars().enumerate() {
            if (ch == '+' || ch == '-') && i > 0 && !s.as_bytes()[i - 1].eq(&b'^') {
                terms.push(cur.clone());
                cur.clear();
            }
            cur.push(ch);
        }
        terms.push(cur);
        for term in terms {
            let (sign, body) = match term.strip_prefix('-') {
                Some(rest) => (-1i64, rest.to_string()),
                None => (1i64, term.trim_start_matches('+').to_string()),
            };
            if body.is_empty() {
                return Err(Error::InvalidParameter(format!("bad polynomial: {s}")));
            }
            if let Some(xpos) = body.find('x') {
                let coeff_str = &body[..xpos];
                let coeff: i64 = if coeff_str.is_empty() {
                    1
                } else {
                    coeff_str
                        .parse()
                        .map_err(|_| Error::InvalidParameter(format!("bad coefficient in {s}")))?
                };
                let rest = &body[xpos + 1..];
                let deg: usize = if rest.is_empty() {
                    1
                } else if let Some(e) = rest.strip_prefix('^') {
                    e.parse()
                        .map_err(|_| Error::InvalidParameter(format!("bad exponent in {s}")))?
                } else {
                    return Err(Error::InvalidParameter(format!("bad term in {s}")));
                };
                add_term(sign * coeff, deg);
            } else {
                let c: i64 = body
                    .parse()
                    .map_err(|_| Error::InvalidParameter(format!("bad constant in {s}")))?;
                add_term(sign * c, 0);
            }
        }
        FpPoly::new(p, coeffs)
    }
}

impl fmt::Display for FpPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (deg, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, "+")?;
            }
            first = false;
            match deg {
                0 => write!(f, "{c}")?,
                1 => {
                    if c != 1 {
                        write!(f, "{c}")?;
                    }
                    write!(f, "x")?;
                }
                _ => {
                    if c != 1 {
                        write!(f, "{c}")?;
                    }
                    write!(f, "x^{deg}")?;
                }
            }
        }
        Ok(())
    }
}

/// All monic irreducible polynomials of exact degree `d`, sorted.
pub fn monic_irreducibles(p: u64, d: usize) -> Result<Vec<FpPoly>> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if d == 0 {
        return Ok(vec![]);
    }
    let mut out = Vec::new();
    let mut coeffs = vec![0u64; d + 1];
    coeffs[d] = 1;
    loop {
        let cand = FpPoly::new(p, coeffs.clone())?;
        if cand.is_irreducible() {
            out.push(cand);
        }
        // odometer over the lower coefficients
        let mut i = 0;
        loop {
            if i == d {
                out.sort();
                return Ok(out);
            }
            coeffs[i] += 1;
            if coeffs[i] < p {
                break;
            }
            coeffs[i] = 0;
            i += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_of_monic_irreducibles() {
        // classical counts over GF(2): 2, 1, 2, 3, 6, 9 for degrees 1..6
        let counts: Vec<usize> = (1..=6)
            .map(|d| monic_irreducibles(2, d).unwrap().len())
            .collect();
        assert_eq!(counts, vec![2, 1, 2, 3, 6, 9]);
        // and over GF(3): 3, 3, 8, 18
        let counts3: Vec<usize> = (1..=4)
            .map(|d| monic_irreducibles(3, d).unwrap().len())
            .collect();
        assert_eq!(counts3, vec![3, 3, 8, 18]);
    }

    #[test]
    fn irreducibility_examples() {
        assert!(FpPoly::parse(2, "x^2+x+1").unwrap().is_irreducible());
        assert!(!FpPoly::parse(2, "x^2+1").unwrap().is_irreducible()); // (x+1)^2
        assert!(FpPoly::parse(3, "x^2+1").unwrap().is_irreducible());
        assert!(!FpPoly::parse(3, "x^2+2").unwrap().is_irreducible()); // (x+1)(x+2)
    }

    #[test]
    fn companion_matrix_of_x_squared() {
        let f = FpPoly::parse(2, "x^2").unwrap();
        let c = f.companion_matrix().unwrap();
        assert_eq!(c.row(0), &[0, 0]);
        assert_eq!(c.row(1), &[1, 0]);
    }

    #[test]
    fn parse_display_round_trip() {
        for s in ["x", "x+1", "x^2+x+1", "x^2+2x+2", "2x^3+x"] {
            let f = FpPoly::parse(3, s).unwrap();
            let g = FpPoly::parse(3, &f.to_string()).unwrap();
            assert_eq!(f, g);
        }
        // subtraction folds into the residue
        assert_eq!(
            FpPoly::parse(3, "x-1").unwrap(),
            FpPoly::parse(3, "x+2").unwrap()
        );
    }

    #[test]
    fn rem_and_pow() {
        let f = FpPoly::parse(2, "x^2+x+1").unwrap();
        let g = f.pow(2);
        assert_eq!(g.degree(), 4);
        assert!(g.rem(&f).is_zero());
        let x = FpPoly::x(2).unwrap();
        assert!(!g.rem(&x).is_zero());
    }
}
