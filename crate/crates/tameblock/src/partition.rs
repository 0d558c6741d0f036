//! Integer partitions, hooks, cores and weights.
//!
//! Two independent routes to the ℓ-core are provided: the abacus (beta-number)
//! computation in [`Partition::ell_core`], and stepwise rim-hook removal via
//! [`Partition::removable_hooks`] / [`Partition::remove_rim_hook`].  The
//! 2-cores are exactly the staircase partitions, which is what the block
//! existence queries at the bottom of the module rely on.

use alloc::string::String;
use alloc::vec::Vec;
use alloc::{format, vec};
use core::fmt;
use core::str::FromStr;
use num_bigint::BigUint;
use num_traits::One;

/// A partition of a nonnegative integer: weakly decreasing positive parts.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Partition {
    parts: Vec<u32>,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum PartitionError {
    ZeroPart,
    NotWeaklyDecreasing,
}

impl fmt::Display for PartitionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PartitionError::ZeroPart => write!(f, "partition parts must be positive"),
            PartitionError::NotWeaklyDecreasing => {
                write!(f, "partition parts must be weakly decreasing")
            }
        }
    }
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self, PartitionError> {
        if parts.contains(&0) {
            return Err(PartitionError::ZeroPart);
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(PartitionError::NotWeaklyDecreasing);
        }
        Ok(Partition { parts })
    }

    /// The empty partition (of 0).
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// The integer being partitioned.
    pub fn size(&self) -> u64 {
        self.parts.iter().map(|&p| p as u64).sum()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn conjugate(&self) -> Partition {
        if self.parts.is_empty() {
            return Partition::empty();
        }
        let cols = self.parts[0] as usize;
        let mut out = Vec::with_capacity(cols);
        for j in 0..cols as u32 {
            out.push(self.parts.iter().filter(|&&p| p > j).count() as u32);
        }
        Partition { parts: out }
    }

    /// Hook length of the cell in row `i`, column `j` (both 0-based), or
    /// `None` if the cell lies outside the diagram.
    pub fn hook_at(&self, i: usize, j: usize) -> Option<u32> {
        let row = *self.parts.get(i)? as usize;
        if j >= row {
            return None;
        }
        let arm = row - 1 - j;
        let col_len = self.parts.iter().filter(|&&p| p as usize > j).count();
        let leg = col_len - 1 - i;
        Some((arm + leg + 1) as u32)
    }

    /// Dimension of the associated irreducible representation of the
    /// symmetric group, by the hook length formula `n! / ∏ hooks`.
    /// The division is exact.
    pub fn dimension(&self) -> BigUint {
        let n = self.size();
        let mut num = BigUint::one();
        for m in 2..=n {
            num *= m;
        }
        let mut den = BigUint::one();
        for i in 0..self.parts.len() {
            for j in 0..self.parts[i] as usize {
                den *= self.hook_at(i, j).expect("cell inside diagram");
            }
        }
        num / den
    }

    /// ℓ-core and ℓ-weight by the abacus: beta numbers are pushed down
    /// within each residue class and the total displacement is the weight.
    ///
    /// # Panics
    /// Panics if `ell == 0`.
    pub fn ell_core(&self, ell: u32) -> (Partition, u64) {
        assert!(ell >= 1, "core undefined for ell = 0");
        let ell = ell as u64;
        let len = self.parts.len();
        let betas: Vec<u64> = self
            .parts
            .iter()
            .enumerate()
            .map(|(i, &p)| p as u64 + (len - 1 - i) as u64)
            .collect();
        let mut weight = 0u64;
        let mut new_betas: Vec<u64> = Vec::with_capacity(len);
        for r in 0..ell {
            let mut ms: Vec<u64> = betas
                .iter()
                .filter(|&&b| b % ell == r)
                .map(|&b| b / ell)
                .collect();
            ms.sort_unstable();
            for (j, &m) in ms.iter().enumerate() {
                weight += m - j as u64;
                new_betas.push(ell * j as u64 + r);
            }
        }
        new_betas.sort_unstable_by(|a, b| b.cmp(a));
        let mut parts: Vec<u32> = new_betas
            .iter()
            .enumerate()
            .map(|(i, &b)| (b - (len - 1 - i) as u64) as u32)
            .collect();
        while parts.last() == Some(&0) {
            parts.pop();
        }
        (Partition { parts }, weight)
    }

    /// Cells `(i, j)` whose hook length is exactly `ell`, in row-major order.
    /// Each indexes a removable rim `ell`-hook.
    pub fn removable_hooks(&self, ell: u32) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.parts.len() {
            for j in 0..self.parts[i] as usize {
                if self.hook_at(i, j) == Some(ell) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Removes the rim hook determined by the cell `(i, j)`: with `r` the
    /// last row meeting column `j`, rows `i..r` take the next row's length
    /// less one and row `r` is cut back to `j`.  Returns `None` if the cell
    /// is outside the diagram.
    pub fn remove_rim_hook(&self, i: usize, j: usize) -> Option<Partition> {
        self.hook_at(i, j)?;
        let r = self.parts.iter().filter(|&&p| p as usize > j).count() - 1;
        let mut parts = self.parts.clone();
        for x in i..r {
            parts[x] = parts[x + 1] - 1;
        }
        parts[r] = j as u32;
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Some(Partition { parts })
    }

    /// If this partition is the staircase `(k, k-1, …, 1)`, returns `k`
    /// (the empty partition is the staircase with `k = 0`).
    pub fn is_triangular(&self) -> Option<u32> {
        let k = self.parts.len() as u32;
        for (i, &p) in self.parts.iter().enumerate() {
            if p != k - i as u32 {
                return None;
            }
        }
        Some(k)
    }
}

impl fmt::Display for Partition {
    /// Comma-separated parts, or `-` for the empty partition: `8,1`, `-`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "-");
        }
        let strs: Vec<String> = self.parts.iter().map(|p| format!("{}", p)).collect();
        write!(f, "{}", strs.join(","))
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PartitionParseError {
    pub msg: String,
}

impl fmt::Display for PartitionParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "partition parse error: {}", self.msg)
    }
}

impl FromStr for Partition {
    type Err = PartitionParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s == "-" {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for tok in s.split(',') {
            let tok = tok.trim();
            let p: u32 = tok.parse().map_err(|_| PartitionParseError {
                msg: format!("invalid part {:?}", tok),
            })?;
            parts.push(p);
        }
        Partition::new(parts).map_err(|e| PartitionParseError {
            msg: format!("{}", e),
        })
    }
}

/// All partitions of `n`, in descending lexicographic order.
pub fn partitions_of(n: u32) -> Vec<Partition> {
    fn go(remaining: u32, max_part: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition {
                parts: prefix.clone(),
            });
            return;
        }
        let top = remaining.min(max_part);
        for p in (1..=top).rev() {
            prefix.push(p);
            go(remaining - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// If `m` is a triangular number `k(k+1)/2`, returns `k`.  Zero counts,
/// with `k = 0`.
pub fn is_triangular_number(m: u64) -> Option<u64> {
    // binary search for the least k with k(k+1)/2 >= m
    let tri = |k: u128| k * (k + 1) / 2;
    let m = m as u128;
    let (mut lo, mut hi) = (0u128, 1u128 << 33);
    while lo < hi {
        let mid = (lo + hi) / 2;
        if tri(mid) < m {
            lo = mid + 1;
        } else {
            hi = mid;
        }
    }
    (tri(lo) == m).then_some(lo as u64)
}

/// The 2-blocks of the symmetric group on `n` letters having weight `w`,
/// labelled by their 2-cores.  A 2-core is a staircase, so the list holds
/// one staircase when `n − 2w` is triangular and is empty otherwise.
pub fn sym_blocks_of_weight(n: u64, w: u64) -> Vec<Partition> {
    if 2 * w > n {
        return Vec::new();
    }
    match is_triangular_number(n - 2 * w) {
        Some(k) => {
            let parts: Vec<u32> = (1..=k as u32).rev().collect();
            vec![Partition { parts }]
        }
        None => Vec::new(),
    }
}

/// Whether the alternating group on `n` letters has a 2-block with dihedral
/// defect groups: this happens exactly when `n ≥ 6` and `n − 6` is
/// triangular, i.e. when the symmetric group has a weight-3 block whose
/// 2-core is fixed by conjugation.
pub fn alt_dihedral_block_exists(n: u64) -> bool {
    n >= 6 && is_triangular_number(n - 6).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn pt(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn construction_and_serialization() {
        assert_eq!(pt("8,1").parts(), &[8, 1]);
        assert_eq!(pt("8,1").to_string(), "8,1");
        assert_eq!(pt("-"), Partition::empty());
        assert_eq!(Partition::empty().to_string(), "-");
        assert!("3,5".parse::<Partition>().is_err());
        assert!("3,0".parse::<Partition>().is_err());
        assert!("".parse::<Partition>().is_err());
    }

    #[test]
    fn hooks_and_conjugates() {
        let p = pt("8,1");
        assert_eq!(p.hook_at(0, 0), Some(9));
        assert_eq!(p.hook_at(0, 6), Some(2));
        assert_eq!(p.hook_at(1, 0), Some(1));
        assert_eq!(p.hook_at(1, 1), None);
        assert_eq!(p.conjugate(), pt("2,1,1,1,1,1,1,1"));
        assert_eq!(p.conjugate().conjugate(), p);
    }

    #[test]
    fn core_of_8_1() {
        let (core, weight) = pt("8,1").ell_core(2);
        assert_eq!(core, pt("2,1"));
        assert_eq!(weight, 3);
    }

    #[test]
    fn rim_hook_steps_match_abacus() {
        // (8,1) -> (6,1) -> (4,1) -> (2,1) along 2-hook removals
        let mut p = pt("8,1");
        while let Some(&(i, j)) = p.removable_hooks(2).first() {
            p = p.remove_rim_hook(i, j).unwrap();
        }
        assert_eq!(p, pt("2,1"));
    }

    #[test]
    fn staircases_and_triangular_numbers() {
        assert_eq!(pt("3,2,1").is_triangular(), Some(3));
        assert_eq!(Partition::empty().is_triangular(), Some(0));
        assert_eq!(pt("3,1").is_triangular(), None);
        assert_eq!(is_triangular_number(0), Some(0));
        assert_eq!(is_triangular_number(10), Some(4));
        assert_eq!(is_triangular_number(11), None);
    }

    #[test]
    fn block_queries() {
        assert_eq!(sym_blocks_of_weight(9, 3), vec![pt("2,1")]);
        assert_eq!(sym_blocks_of_weight(9, 4), vec![pt("1")]);
        assert_eq!(sym_blocks_of_weight(8, 3), Vec::new());
        let expected: Vec<u64> = vec![6, 7, 9, 12, 16, 21, 27, 34, 42, 51];
        let got: Vec<u64> = (5..=60).filter(|&n| alt_dihedral_block_exists(n)).collect();
        assert_eq!(got, expected);
    }

    #[test]
    fn dimensions() {
        assert_eq!(pt("2,1").dimension(), BigUint::from(2u32));
        assert_eq!(pt("8,1").dimension(), BigUint::from(8u32));
        // sum of squared dimensions over partitions of n equals n!
        for n in 1..=7u32 {
            let total: BigUint = partitions_of(n)
                .iter()
                .map(|p| {
                    let d = p.dimension();
                    &d * &d
                })
                .sum();
            let mut fact = BigUint::one();
            for m in 2..=n {
                fact *= m;
            }
            assert_eq!(total, fact);
        }
    }

    #[test]
    fn partition_counts() {
        assert_eq!(partitions_of(0).len(), 1);
        assert_eq!(partitions_of(5).len(), 7);
        assert_eq!(partitions_of(10).len(), 42);
        assert_eq!(partitions_of(20).len(), 627);
    }
}
