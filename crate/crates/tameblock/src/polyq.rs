//! Exact integer-polynomial arithmetic in the variable `q`.
//!
//! Cyclotomic polynomials are built by exact division, integer roots are
//! located by scanning below a coefficient bound, and degree coincidences
//! between polynomial tables are reported exactly.  Coefficients are
//! arbitrary-precision integers; nothing here rounds.

use alloc::string::String;
use alloc::vec::Vec;
use alloc::{format, vec};
use core::fmt;
use core::str::FromStr;
use num_bigint::{BigInt, BigUint, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Dense polynomial over ℤ, lowest power first.
///
/// The representation is canonical: no trailing zero coefficients, and the
/// zero polynomial is the empty vector.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum PolyError {
    /// Operation undefined for the zero polynomial.
    ZeroPolynomial,
    /// Operation undefined for a constant polynomial.
    ConstantPolynomial,
}

impl fmt::Display for PolyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PolyError::ZeroPolynomial => write!(f, "undefined for the zero polynomial"),
            PolyError::ConstantPolynomial => write!(f, "undefined for a constant polynomial"),
        }
    }
}

/// Error from [`IntPoly::from_str`], with a byte offset into the input.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PolyParseError {
    pub pos: usize,
    pub msg: &'static str,
}

impl fmt::Display for PolyParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "polynomial parse error at byte {}: {}", self.pos, self.msg)
    }
}

impl IntPoly {
    /// Builds a polynomial from coefficients (index = power of `q`),
    /// trimming trailing zeros.
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPoly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        IntPoly::new(vec![c])
    }

    /// The monomial `q`.
    pub fn var() -> Self {
        IntPoly::new(vec![BigInt::zero(), BigInt::one()])
    }

    /// `q^k`.
    pub fn monomial(k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = BigInt::one();
        IntPoly { coeffs }
    }

    /// Convenience constructor from machine integers, lowest power first.
    pub fn from_coeffs(cs: &[i64]) -> Self {
        IntPoly::new(cs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn neg(&self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn add(&self, other: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) + other.coeff(i));
        }
        IntPoly::new(out)
    }

    pub fn sub(&self, other: &IntPoly) -> IntPoly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }

    /// Exact division: returns `Some(self / d)` when the division leaves no
    /// remainder and every intermediate quotient coefficient is integral,
    /// `None` otherwise.
    pub fn exact_div(&self, d: &IntPoly) -> Option<IntPoly> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(IntPoly::zero());
        }
        if self.coeffs.len() < d.coeffs.len() {
            return None;
        }
        let dl = d.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        let qlen = self.coeffs.len() - d.coeffs.len() + 1;
        let mut quot = vec![BigInt::zero(); qlen];
        for k in (0..qlen).rev() {
            let lead = rem[k + d.coeffs.len() - 1].clone();
            if lead.is_zero() {
                continue;
            }
            let (c, r) = num_integer::div_rem(lead, dl.clone());
            if !r.is_zero() {
                return None;
            }
            for (j, dj) in d.coeffs.iter().enumerate() {
                rem[k + j] -= &c * dj;
            }
            quot[k] = c;
        }
        if rem.iter().all(|c| c.is_zero()) {
            Some(IntPoly::new(quot))
        } else {
            None
        }
    }

    /// Exact evaluation at an integer point (Horner).
    pub fn eval(&self, q0: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * q0 + c;
        }
        acc
    }
}

impl fmt::Display for IntPoly {
    /// Renders in the text form accepted by the parser, e.g. `q^4-q^2+1`,
    /// `2q^2-7q+3`, `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.magnitude();
            if first {
                if c.sign() == Sign::Minus {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.sign() == Sign::Minus {
                write!(f, "-")?;
            } else {
                write!(f, "+")?;
            }
            let unit = mag.is_one();
            if k == 0 || !unit {
                write!(f, "{}", mag)?;
            }
            match k {
                0 => {}
                1 => write!(f, "q")?,
                _ => write!(f, "q^{}", k)?,
            }
        }
        Ok(())
    }
}

impl FromStr for IntPoly {
    type Err = PolyParseError;

    /// Parses expressions such as `q^2+q-1`, `2*q^2 - 7q + 3`, `-q^3`, `5`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bytes = s.as_bytes();
        let mut pos = 0usize;
        let mut acc: Vec<BigInt> = Vec::new();
        let err = |pos, msg| PolyParseError { pos, msg };
        let skip_ws = |pos: &mut usize| {
            while *pos < bytes.len() && bytes[*pos].is_ascii_whitespace() {
                *pos += 1;
            }
        };
        let read_uint = |pos: &mut usize| -> Option<BigUint> {
            let start = *pos;
            while *pos < bytes.len() && bytes[*pos].is_ascii_digit() {
                *pos += 1;
            }
            if *pos == start {
                None
            } else {
                BigUint::parse_bytes(&bytes[start..*pos], 10)
            }
        };
        skip_ws(&mut pos);
        if pos == bytes.len() {
            return Err(err(pos, "empty input"));
        }
        let mut first_term = true;
        while pos < bytes.len() {
            // sign
            let mut negative = false;
            skip_ws(&mut pos);
            match bytes.get(pos) {
                Some(b'+') => {
                    pos += 1;
                }
                Some(b'-') => {
                    negative = true;
                    pos += 1;
                }
                _ if first_term => {}
                _ => return Err(err(pos, "expected '+' or '-' between terms")),
            }
            first_term = false;
            skip_ws(&mut pos);
            // coefficient and/or variable
            let mag = read_uint(&mut pos);
            skip_ws(&mut pos);
            if mag.is_some() && bytes.get(pos) == Some(&b'*') {
                pos += 1;
                skip_ws(&mut pos);
            }
            let mut exp = 0usize;
            if bytes.get(pos) == Some(&b'q') {
                pos += 1;
                exp = 1;
                skip_ws(&mut pos);
                if bytes.get(pos) == Some(&b'^') {
                    pos += 1;
                    skip_ws(&mut pos);
                    let e = read_uint(&mut pos).ok_or(err(pos, "expected exponent after '^'"))?;
                    exp = e
                        .to_usize()
                        .filter(|&e| e <= 100_000)
                        .ok_or(err(pos, "exponent out of range"))?;
                }
            } else if mag.is_none() {
                return Err(err(pos, "expected coefficient or 'q'"));
            }
            let mag = mag.unwrap_or_else(BigUint::one);
            let term = BigInt::from_biguint(if negative { Sign::Minus } else { Sign::Plus }, mag);
            if acc.len() <= exp {
                acc.resize(exp + 1, BigInt::zero());
            }
            acc[exp] += term;
            skip_ws(&mut pos);
        }
        Ok(IntPoly::new(acc))
    }
}

/// 2-adic valuation of a positive integer, i.e. the exponent of the largest
/// power of two dividing it.  `None` for zero (every power divides zero).
pub fn v2(m: &BigUint) -> Option<u64> {
    m.trailing_zeros()
}

/// Euler's totient, by trial-division factorisation.  Intended for the small
/// arguments arising in [`is_cyclotomic`].
fn euler_phi(mut d: u64) -> u64 {
    let mut phi = 1u64;
    let mut p = 2u64;
    while p * p <= d {
        if d % p == 0 {
            d /= p;
            phi *= p - 1;
            while d % p == 0 {
                d /= p;
                phi *= p;
            }
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if d > 1 {
        phi *= d - 1;
    }
    phi
}

/// The `d`-th cyclotomic polynomial Φ_d, computed by exact division of
/// `q^d − 1` by the product of Φ_e over the proper divisors `e` of `d`.
///
/// # Panics
/// Panics if `d == 0`.
pub fn cyclotomic(d: u64) -> IntPoly {
    assert!(d >= 1, "cyclotomic polynomials are indexed from 1");
    if d == 1 {
        return IntPoly::from_coeffs(&[-1, 1]);
    }
    let mut num = IntPoly::monomial(d as usize);
    num = num.sub(&IntPoly::one());
    let mut den = IntPoly::one();
    for e in 1..=d / 2 {
        if d % e == 0 {
            den = den.mul(&cyclotomic(e));
        }
    }
    num.exact_div(&den)
        .expect("q^d - 1 is divisible by the product of the proper cyclotomic factors")
}

/// If `p` equals some cyclotomic polynomial Φ_d, returns `d`.
///
/// Φ_d has degree φ(d), and φ(d) ≥ √(d/2), so only `d ≤ 2·deg²` need be
/// inspected; candidates are prefiltered by totient.
pub fn is_cyclotomic(p: &IntPoly) -> Option<u64> {
    let deg = p.degree()? as u64;
    if deg == 0 {
        return None;
    }
    if p.leading() != Some(&BigInt::one()) {
        return None;
    }
    for d in 1..=2 * deg * deg {
        if euler_phi(d) == deg && &cyclotomic(d) == p {
            return Some(d);
        }
    }
    None
}

/// Root bound: twice the largest absolute coefficient divided by the
/// absolute leading coefficient.  Every real root of `p` lies within this
/// bound (it dominates the classical bound `1 + max|cᵢ|/|c_lead|`).
pub fn root_bound(p: &IntPoly) -> Result<BigRational, PolyError> {
    match p.degree() {
        None => Err(PolyError::ZeroPolynomial),
        Some(0) => Err(PolyError::ConstantPolynomial),
        Some(_) => {
            let lead = p.leading().unwrap().abs();
            let maxabs = p
                .coeffs()
                .iter()
                .map(|c| c.abs())
                .max()
                .expect("nonzero polynomial has coefficients");
            Ok(BigRational::new(maxabs * 2, lead))
        }
    }
}

/// All positive integer roots of `p`, found by exact evaluation at
/// `1..=⌈root_bound⌉`.  Constant nonzero polynomials have none; the zero
/// polynomial is rejected (every value would be a root).
pub fn positive_integer_roots(p: &IntPoly) -> Result<Vec<BigUint>, PolyError> {
    match p.degree() {
        None => Err(PolyError::ZeroPolynomial),
        Some(0) => Ok(Vec::new()),
        Some(_) => {
            let bound = root_bound(p).expect("nonconstant");
            let limit = bound.ceil().to_integer();
            let mut out = Vec::new();
            let mut x = BigInt::one();
            while x <= limit {
                if p.eval(&x).is_zero() {
                    out.push(x.magnitude().clone());
                }
                x += 1;
            }
            Ok(out)
        }
    }
}

/// Where a candidate degree polynomial coincides with a table entry.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Coincidence {
    /// The difference is identically zero: coincidence at every `q`.
    AllQ,
    /// Coincidence at this particular positive integer value of `q`.
    At(BigUint),
}

impl fmt::Display for Coincidence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coincidence::AllQ => write!(f, "all q"),
            Coincidence::At(q0) => write!(f, "q={}", q0),
        }
    }
}

/// For each table entry `t`, reports where `t − candidate` vanishes: a
/// distinguished all-`q` marker for the zero difference, otherwise every
/// positive integer root `≥ q_min`.  Results are ordered by table index.
pub fn degree_coincides(
    candidate: &IntPoly,
    table: &[IntPoly],
    q_min: &BigUint,
) -> Vec<(usize, Coincidence)> {
    let mut out = Vec::new();
    for (i, t) in table.iter().enumerate() {
        let diff = t.sub(candidate);
        if diff.is_zero() {
            out.push((i, Coincidence::AllQ));
            continue;
        }
        if diff.degree() == Some(0) {
            continue;
        }
        for r in positive_integer_roots(&diff).expect("nonzero difference") {
            if &r >= q_min {
                out.push((i, Coincidence::At(r)));
            }
        }
    }
    out
}

/// Formats a rational bound for display, reducing to an integer when exact.
pub fn format_rational(r: &BigRational) -> String {
    if r.is_integer() {
        format!("{}", r.to_integer())
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}
