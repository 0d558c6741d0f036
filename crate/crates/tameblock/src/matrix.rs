//! Decomposition matrices with row multiplicities.
//!
//! A matrix is stored as a list of row classes — ordinary character degree,
//! coefficient vector over the Brauer characters, multiplicity, and an
//! optional 2-height — plus an optional vector of Brauer character degrees.
//! Matrices that differ only by reordering rows or permuting columns are
//! identified through [`DecompMatrix::canonical`].

use alloc::vec::Vec;
use core::fmt;
use num_bigint::BigUint;
use num_traits::Zero;

/// One class of identical rows.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Row {
    pub degree: BigUint,
    pub coeffs: Vec<u32>,
    pub mult: u32,
    pub height: Option<u32>,
}

impl Row {
    pub fn new(degree: BigUint, coeffs: Vec<u32>, mult: u32, height: Option<u32>) -> Self {
        Row {
            degree,
            coeffs,
            mult,
            height,
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum MatrixError {
    NoRows,
    RaggedRows,
    ZeroMultiplicity,
    ZeroDegree,
    ZeroRow,
    ZeroColumn,
    MixedHeights,
    BrauerLengthMismatch,
    ZeroBrauerDegree,
    /// A row's degree differs from its coefficients dotted with the Brauer
    /// degrees.
    DegreeMismatch,
}

impl fmt::Display for MatrixError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let msg = match self {
            MatrixError::NoRows => "matrix has no rows",
            MatrixError::RaggedRows => "rows have differing widths",
            MatrixError::ZeroMultiplicity => "row multiplicity must be positive",
            MatrixError::ZeroDegree => "character degree must be positive",
            MatrixError::ZeroRow => "a row is identically zero",
            MatrixError::ZeroColumn => "a column is identically zero",
            MatrixError::MixedHeights => "heights must be given on all rows or none",
            MatrixError::BrauerLengthMismatch => "Brauer degree list does not match width",
            MatrixError::ZeroBrauerDegree => "Brauer degree must be positive",
            MatrixError::DegreeMismatch => {
                "row degree is not the coefficient vector dotted with the Brauer degrees"
            }
        };
        write!(f, "{}", msg)
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct DecompMatrix {
    rows: Vec<Row>,
    brauer: Option<Vec<BigUint>>,
}

impl DecompMatrix {
    pub fn new(rows: Vec<Row>, brauer: Option<Vec<BigUint>>) -> Result<Self, MatrixError> {
        if rows.is_empty() {
            return Err(MatrixError::NoRows);
        }
        let width = rows[0].coeffs.len();
        if rows.iter().any(|r| r.coeffs.len() != width) {
            return Err(MatrixError::RaggedRows);
        }
        if rows.iter().any(|r| r.mult == 0) {
            return Err(MatrixError::ZeroMultiplicity);
        }
        if rows.iter().any(|r| r.degree.is_zero()) {
            return Err(MatrixError::ZeroDegree);
        }
        if rows.iter().any(|r| r.coeffs.iter().all(|&c| c == 0)) {
            return Err(MatrixError::ZeroRow);
        }
        for j in 0..width {
            if rows.iter().all(|r| r.coeffs[j] == 0) {
                return Err(MatrixError::ZeroColumn);
            }
        }
        let with_height = rows.iter().filter(|r| r.height.is_some()).count();
        if with_height != 0 && with_height != rows.len() {
            return Err(MatrixError::MixedHeights);
        }
        if let Some(b) = &brauer {
            if b.len() != width {
                return Err(MatrixError::BrauerLengthMismatch);
            }
            if b.iter().any(|d| d.is_zero()) {
                return Err(MatrixError::ZeroBrauerDegree);
            }
            for r in &rows {
                let mut dot = BigUint::zero();
                for (c, d) in r.coeffs.iter().zip(b) {
                    dot += d * *c;
                }
                if dot != r.degree {
                    return Err(MatrixError::DegreeMismatch);
                }
            }
        }
        Ok(DecompMatrix { rows, brauer })
    }

    pub fn rows(&self) -> &[Row] {
        &self.rows
    }

    pub fn brauer(&self) -> Option<&[BigUint]> {
        self.brauer.as_deref()
    }

    /// Number of columns, i.e. the number of Brauer characters.
    pub fn l(&self) -> usize {
        self.rows[0].coeffs.len()
    }

    /// Number of ordinary characters, counted with multiplicity.
    pub fn k(&self) -> u64 {
        self.rows.iter().map(|r| r.mult as u64).sum()
    }

    /// Whether every row carries a height.
    pub fn has_heights(&self) -> bool {
        self.rows[0].height.is_some()
    }

    /// Sum of ordinary character degrees, with multiplicity.
    pub fn degree_sum(&self) -> BigUint {
        let mut total = BigUint::zero();
        for r in &self.rows {
            total += &r.degree * r.mult;
        }
        total
    }

    /// Multiplies every row multiplicity by `factor`.
    ///
    /// # Panics
    /// Panics if `factor == 0`.
    pub fn duplicate_rows(&self, factor: u32) -> DecompMatrix {
        assert!(factor >= 1, "row duplication factor must be positive");
        let rows = self
            .rows
            .iter()
            .map(|r| Row {
                mult: r.mult * factor,
                ..r.clone()
            })
            .collect();
        DecompMatrix {
            rows,
            brauer: self.brauer.clone(),
        }
    }

    /// Merges identical row classes and sorts rows by height, degree,
    /// coefficients.  Column order is untouched.
    pub fn normalized(&self) -> DecompMatrix {
        let mut rows = self.rows.clone();
        rows.sort_by(|a, b| {
            (&a.height, &a.degree, &a.coeffs).cmp(&(&b.height, &b.degree, &b.coeffs))
        });
        let mut merged: Vec<Row> = Vec::with_capacity(rows.len());
        for r in rows {
            match merged.last_mut() {
                Some(last)
                    if last.degree == r.degree
                        && last.coeffs == r.coeffs
                        && last.height == r.height =>
                {
                    last.mult += r.mult;
                }
                _ => merged.push(r),
            }
        }
        DecompMatrix {
            rows: merged,
            brauer: self.brauer.clone(),
        }
    }

    fn key(&self) -> (Option<Vec<BigUint>>, Vec<(Option<u32>, BigUint, Vec<u32>, u32)>) {
        (
            self.brauer.clone(),
            self.rows
                .iter()
                .map(|r| (r.height, r.degree.clone(), r.coeffs.clone(), r.mult))
                .collect(),
        )
    }

    /// Canonical representative under column permutation and row reordering:
    /// the column order minimising the normalised row list (and permuted
    /// Brauer degrees, when present).
    pub fn canonical(&self) -> DecompMatrix {
        let width = self.l();
        let mut best: Option<DecompMatrix> = None;
        for perm in permutations(width) {
            let rows: Vec<Row> = self
                .rows
                .iter()
                .map(|r| Row {
                    degree: r.degree.clone(),
                    coeffs: perm.iter().map(|&j| r.coeffs[j]).collect(),
                    mult: r.mult,
                    height: r.height,
                })
                .collect();
            let brauer = self
                .brauer
                .as_ref()
                .map(|b| perm.iter().map(|&j| b[j].clone()).collect());
            let cand = DecompMatrix { rows, brauer }.normalized();
            match &best {
                Some(b) if b.key() <= cand.key() => {}
                _ => best = Some(cand),
            }
        }
        best.expect("at least the identity permutation")
    }

    /// Equality up to row reordering, row-class merging and column
    /// permutation.
    pub fn canonical_eq(&self, other: &DecompMatrix) -> bool {
        self.canonical() == other.canonical()
    }
}

impl fmt::Display for DecompMatrix {
    /// One line per row class: `degree [c1 c2 ...] xmult` with an optional
    /// height marker `h=..`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (idx, r) in self.rows.iter().enumerate() {
            if idx > 0 {
                writeln!(f)?;
            }
            write!(f, "{} [", r.degree)?;
            for (j, c) in r.coeffs.iter().enumerate() {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", c)?;
            }
            write!(f, "] x{}", r.mult)?;
            if let Some(h) = r.height {
                write!(f, " h={}", h)?;
            }
        }
        Ok(())
    }
}

/// All permutations of `0..n`, in a deterministic order.
pub(crate) fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(rest: &mut Vec<usize>, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest.is_empty() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..rest.len() {
            let x = rest.remove(i);
            prefix.push(x);
            go(rest, prefix, out);
            prefix.pop();
            rest.insert(i, x);
        }
    }
    let mut out = Vec::new();
    go(&mut (0..n).collect(), &mut Vec::new(), &mut out);
    out
}
