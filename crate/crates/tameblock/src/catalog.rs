//! The catalog of decomposition-matrix templates for 2-blocks with dihedral,
//! semidihedral, and generalised quaternion defect groups of order 2ⁿ.
//!
//! Every template is stored as literal data: a list of coefficient rows over
//! the (at most three) Brauer characters, each carrying a height tag.  The
//! first four rows have height zero, rows tagged large have height n−2, and
//! the final row — always tagged height one — repeats 2^{n−2}−1 times.
//! Entries record for which n the class provably does not occur as a block
//! of any finite group, and which same-family entries it can be confused
//! with when only ordinary character degrees are known.
//!
//! The module also builds the principal-block data of the classical families
//! PSL₂(q), PGL₂(q), SL₂(q), GU₂(q), GL₂(q) at ℓ = 2, which realise most of
//! the classes; see [`family_block`].

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use alloc::{vec, boxed::Box};
use core::fmt;
use core::str::FromStr;
use num_bigint::BigUint;

use crate::classify::{BlockData, CharClass};
use crate::matrix::{permutations, DecompMatrix, Row};

/// Isomorphism type of the defect group.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Family {
    Dihedral,
    Semidihedral,
    Quaternion,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Dihedral => "dihedral",
            Family::Semidihedral => "semidihedral",
            Family::Quaternion => "quaternion",
        }
    }

    /// Smallest defect exponent for which groups of this type exist
    /// (semidihedral groups start at order 16).
    pub fn min_n(self) -> u32 {
        match self {
            Family::Semidihedral => 4,
            _ => 3,
        }
    }

    pub fn all() -> [Family; 3] {
        [Family::Dihedral, Family::Semidihedral, Family::Quaternion]
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "dihedral" => Ok(Family::Dihedral),
            "semidihedral" => Ok(Family::Semidihedral),
            "quaternion" => Ok(Family::Quaternion),
            other => Err(format!("unknown defect-group family {:?}", other)),
        }
    }
}

/// Height class of a template row.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum HeightTag {
    /// Height 0; the first four rows of every template.
    Zero,
    /// Height 1; the repeated final row.
    One,
    /// Height n−2.
    Large,
}

impl HeightTag {
    pub fn height(self, n: u32) -> u32 {
        match self {
            HeightTag::Zero => 0,
            HeightTag::One => 1,
            HeightTag::Large => n - 2,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct TemplateRow {
    pub coeffs: &'static [u32],
    pub tag: HeightTag,
}

/// For which n the class is known not to occur as a block.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Elimination {
    Never,
    AtLeast(u32),
    Always,
}

/// One Morita-class template.  `tags` usually has a single label; the
/// semidihedral pair 3B1/3D shares one entry because the two classes have
/// identical decomposition matrices.
#[derive(Clone, Copy, Debug)]
pub struct ClassEntry {
    pub family: Family,
    pub tags: &'static [&'static str],
    pub min_n: u32,
    pub eliminated: Elimination,
    pub rows: &'static [TemplateRow],
    /// Same-family tags whose templates can produce the same ordinary degree
    /// multiset (for suitable Brauer degrees) without being matrix-identical.
    pub ambiguous_with: &'static [&'static str],
}

const fn z(coeffs: &'static [u32]) -> TemplateRow {
    TemplateRow {
        coeffs,
        tag: HeightTag::Zero,
    }
}

const fn one(coeffs: &'static [u32]) -> TemplateRow {
    TemplateRow {
        coeffs,
        tag: HeightTag::One,
    }
}

const fn lg(coeffs: &'static [u32]) -> TemplateRow {
    TemplateRow {
        coeffs,
        tag: HeightTag::Large,
    }
}

const fn entry(
    family: Family,
    tags: &'static [&'static str],
    min_n: u32,
    eliminated: Elimination,
    rows: &'static [TemplateRow],
    ambiguous_with: &'static [&'static str],
) -> ClassEntry {
    ClassEntry {
        family,
        tags,
        min_n,
        eliminated,
        rows,
        ambiguous_with,
    }
}

use Elimination::{AtLeast, Always, Never};
use Family::{Dihedral as D, Quaternion as Q, Semidihedral as SD};

static CATALOG: [ClassEntry; 24] = [
    // Dihedral
    entry(D, &["1A"], 3, Never, &[z(&[1]), z(&[1]), z(&[1]), z(&[1]), one(&[2])], &[]),
    entry(
        D,
        &["2A"],
        3,
        Never,
        &[z(&[1, 0]), z(&[1, 0]), z(&[1, 1]), z(&[1, 1]), one(&[2, 1])],
        &[],
    ),
    entry(
        D,
        &["2B"],
        3,
        Never,
        &[z(&[1, 0]), z(&[1, 0]), z(&[1, 1]), z(&[1, 1]), one(&[0, 1])],
        &[],
    ),
    entry(
        D,
        &["3A"],
        3,
        Never,
        &[z(&[1, 0, 0]), z(&[1, 1, 0]), z(&[1, 0, 1]), z(&[1, 1, 1]), one(&[2, 1, 1])],
        &[],
    ),
    entry(
        D,
        &["3K"],
        3,
        Never,
        &[z(&[1, 0, 0]), z(&[0, 1, 0]), z(&[0, 0, 1]), z(&[1, 1, 1]), one(&[0, 1, 1])],
        &[],
    ),
    entry(
        D,
        &["3B"],
        3,
        AtLeast(4),
        &[z(&[1, 0, 0]), z(&[1, 1, 0]), z(&[1, 0, 1]), z(&[1, 1, 1]), one(&[0, 1, 0])],
        &[],
    ),
    // Generalised quaternion
    entry(Q, &["1A"], 3, Never, &[z(&[1]), z(&[1]), z(&[1]), z(&[1]), one(&[2])], &[]),
    entry(
        Q,
        &["2A"],
        3,
        Never,
        &[z(&[1, 0]), z(&[1, 0]), z(&[1, 1]), z(&[1, 1]), lg(&[0, 1]), one(&[2, 1])],
        &[],
    ),
    entry(
        Q,
        &["2B"],
        3,
        Never,
        &[z(&[1, 0]), z(&[1, 0]), z(&[1, 1]), z(&[1, 1]), lg(&[2, 1]), one(&[0, 1])],
        &[],
    ),
    entry(
        Q,
        &["3A"],
        3,
        Never,
        &[
            z(&[1, 0, 0]),
            z(&[1, 1, 0]),
            z(&[1, 0, 1]),
            z(&[1, 1, 1]),
            lg(&[0, 1, 0]),
            lg(&[0, 0, 1]),
            one(&[2, 1, 1]),
        ],
        &[],
    ),
    entry(
        Q,
        &["3K"],
        3,
        Never,
        &[
            z(&[1, 0, 0]),
            z(&[0, 1, 0]),
            z(&[0, 0, 1]),
            z(&[1, 1, 1]),
            lg(&[1, 1, 0]),
            lg(&[1, 0, 1]),
            one(&[0, 1, 1]),
        ],
        &[],
    ),
    entry(
        Q,
        &["3B"],
        3,
        AtLeast(5),
        &[
            z(&[1, 0, 0]),
            z(&[1, 1, 0]),
            z(&[1, 0, 1]),
            z(&[1, 1, 1]),
            lg(&[2, 1, 1]),
            lg(&[0, 0, 1]),
            one(&[0, 1, 0]),
        ],
        &[],
    ),
    // Semidihedral
    entry(SD, &["1A"], 4, Never, &[z(&[1]), z(&[1]), z(&[1]), z(&[1]), one(&[2])], &[]),
    entry(
        SD,
        &["2A1"],
        4,
        Never,
        &[z(&[1, 0]), z(&[1, 0]), z(&[1, 1]), z(&[1, 1]), lg(&[0, 1]), one(&[2, 1])],
        &[],
    ),
    entry(
        SD,
        &["2B2"],
        4,
        Never,
        &[z(&[1, 0]), z(&[1, 0]), z(&[1, 1]), z(&[1, 1]), lg(&[2, 1]), one(&[0, 1])],
        &[],
    ),
    entry(
        SD,
        &["2A2"],
        4,
        Never,
        &[z(&[1, 0]), z(&[1, 0]), z(&[1, 1]), z(&[1, 1]), one(&[2, 1])],
        &["2B4"],
    ),
    entry(
        SD,
        &["2B1"],
        4,
        AtLeast(5),
        &[z(&[1, 0]), z(&[1, 0]), z(&[1, 1]), z(&[1, 1]), one(&[0, 1])],
        &[],
    ),
    entry(
        SD,
        &["2B4"],
        4,
        Always,
        &[z(&[1, 0]), z(&[1, 0]), z(&[0, 1]), z(&[0, 1]), one(&[1, 1])],
        &["2A2"],
    ),
    entry(
        SD,
        &["3B1", "3D"],
        4,
        Never,
        &[
            z(&[1, 0, 0]),
            z(&[1, 1, 0]),
            z(&[1, 0, 1]),
            z(&[1, 1, 1]),
            lg(&[0, 0, 1]),
            one(&[0, 1, 0]),
        ],
        &[],
    ),
    entry(
        SD,
        &["3A1"],
        4,
        Never,
        &[
            z(&[1, 0, 0]),
            z(&[1, 1, 0]),
            z(&[1, 0, 1]),
            z(&[1, 1, 1]),
            lg(&[0, 0, 1]),
            one(&[2, 1, 1]),
        ],
        &["3C2,2"],
    ),
    entry(
        SD,
        &["3C2,2"],
        4,
        Never,
        &[
            z(&[1, 0, 0]),
            z(&[0, 1, 0]),
            z(&[1, 0, 1]),
            z(&[0, 1, 1]),
            lg(&[0, 0, 1]),
            one(&[1, 1, 1]),
        ],
        &["3A1"],
    ),
    entry(
        SD,
        &["3B2"],
        4,
        AtLeast(5),
        &[
            z(&[1, 0, 0]),
            z(&[1, 1, 0]),
            z(&[1, 0, 1]),
            z(&[1, 1, 1]),
            lg(&[2, 1, 1]),
            one(&[0, 1, 0]),
        ],
        &["3C2,1"],
    ),
    entry(
        SD,
        &["3C2,1"],
        4,
        AtLeast(5),
        &[
            z(&[1, 0, 0]),
            z(&[0, 1, 0]),
            z(&[1, 0, 1]),
            z(&[0, 1, 1]),
            lg(&[1, 1, 1]),
            one(&[0, 0, 1]),
        ],
        &["3B2"],
    ),
    entry(
        SD,
        &["3H"],
        4,
        Always,
        &[
            z(&[1, 0, 0]),
            z(&[0, 1, 0]),
            z(&[0, 0, 1]),
            z(&[1, 1, 1]),
            lg(&[0, 1, 1]),
            one(&[1, 1, 0]),
        ],
        &[],
    ),
];

/// Every template, in the order dihedral, quaternion, semidihedral.
pub fn entries() -> &'static [ClassEntry] {
    &CATALOG
}

/// Looks a class up by family and tag (either tag of a shared entry works).
pub fn find(family: Family, tag: &str) -> Option<&'static ClassEntry> {
    CATALOG
        .iter()
        .find(|e| e.family == family && e.tags.contains(&tag))
}

/// A template row with height and multiplicity made concrete at some n.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct InstRow {
    pub coeffs: &'static [u32],
    pub height: u32,
    pub mult: u32,
}

/// Distinct (coefficients, height) classes of an instantiated template.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TemplateGroup {
    pub coeffs: &'static [u32],
    pub height: u32,
    pub mult: u64,
}

/// Character counts of a template at a given n.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BlockCounts {
    /// Number of ordinary characters: 2^{n−2} + 3 + L.
    pub k: u64,
    /// Number of Brauer characters.
    pub l: usize,
    /// (height, count) pairs, ascending in height; at n = 3 the height-one
    /// and large rows share one bucket.
    pub histogram: Vec<(u32, u64)>,
}

/// Largest n the instantiation routines accept: the repeated-row
/// multiplicity 2^{n−2}−1 must fit the u32 row multiplicity.
pub const MAX_N: u32 = 34;

impl ClassEntry {
    /// Primary label of the entry.
    pub fn tag(&self) -> &'static str {
        self.tags[0]
    }

    /// Number of Brauer characters (columns).
    pub fn l(&self) -> usize {
        self.rows[0].coeffs.len()
    }

    /// Number of rows tagged large.
    pub fn large_count(&self) -> usize {
        self.rows
            .iter()
            .filter(|r| r.tag == HeightTag::Large)
            .count()
    }

    pub fn eliminated_at(&self, n: u32) -> bool {
        match self.eliminated {
            Never => false,
            AtLeast(m) => n >= m,
            Always => true,
        }
    }

    /// Whether a block in this class exists for defect exponent n: n must
    /// reach the family minimum and survive the elimination results.
    pub fn is_realizable(&self, n: u32) -> bool {
        n >= self.min_n && !self.eliminated_at(n)
    }

    fn check_n(&self, n: u32) {
        assert!(
            n >= self.min_n,
            "{} ({}) needs n >= {}",
            self.family,
            self.tag(),
            self.min_n
        );
        assert!(n <= MAX_N, "defect exponent {} exceeds supported {}", n, MAX_N);
    }

    /// Multiplicity of the repeated (height-one) row at n.
    fn repeat_mult(n: u32) -> u32 {
        (1u64 << (n - 2)).wrapping_sub(1) as u32
    }

    /// The matrix at defect exponent n: rows in stored order with concrete
    /// heights and multiplicities.
    ///
    /// # Panics
    /// Panics if `n` is below the class minimum or above [`MAX_N`].
    pub fn template(&self, n: u32) -> Vec<InstRow> {
        self.check_n(n);
        self.rows
            .iter()
            .map(|r| InstRow {
                coeffs: r.coeffs,
                height: r.tag.height(n),
                mult: if r.tag == HeightTag::One {
                    Self::repeat_mult(n)
                } else {
                    1
                },
            })
            .collect()
    }

    /// Distinct (coefficients, height) classes at n, multiplicities summed.
    pub fn groups(&self, n: u32) -> Vec<TemplateGroup> {
        let mut groups: Vec<TemplateGroup> = Vec::new();
        for r in self.template(n) {
            match groups
                .iter_mut()
                .find(|g| g.coeffs == r.coeffs && g.height == r.height)
            {
                Some(g) => g.mult += r.mult as u64,
                None => groups.push(TemplateGroup {
                    coeffs: r.coeffs,
                    height: r.height,
                    mult: r.mult as u64,
                }),
            }
        }
        groups
    }

    /// k, l, and the height histogram at n.
    ///
    /// # Panics
    /// As [`ClassEntry::template`].
    pub fn counts(&self, n: u32) -> BlockCounts {
        self.check_n(n);
        let rep = Self::repeat_mult(n) as u64;
        let large = self.large_count() as u64;
        let mut histogram = vec![(0u32, 4u64)];
        let mut add = |h: u32, c: u64| {
            if c == 0 {
                return;
            }
            match histogram.iter_mut().find(|(hh, _)| *hh == h) {
                Some((_, cc)) => *cc += c,
                None => histogram.push((h, c)),
            }
        };
        add(1, rep);
        add(n - 2, large);
        histogram.sort_unstable();
        BlockCounts {
            k: 4 + rep + large,
            l: self.l(),
            histogram,
        }
    }

    /// The decomposition matrix at n for Brauer degrees `phi`: row degrees
    /// are the template rows applied to `phi`, heights are made concrete,
    /// and `phi` is attached as the Brauer degree vector.
    ///
    /// # Panics
    /// As [`ClassEntry::template`]; also if `phi` has the wrong length or a
    /// zero entry.
    pub fn instantiate(&self, n: u32, phi: &[BigUint]) -> DecompMatrix {
        assert_eq!(phi.len(), self.l(), "Brauer degree vector has wrong length");
        let rows = self
            .template(n)
            .into_iter()
            .map(|r| {
                let mut degree = BigUint::default();
                for (c, p) in r.coeffs.iter().zip(phi) {
                    degree += p * *c;
                }
                Row::new(degree, r.coeffs.to_vec(), r.mult, Some(r.height))
            })
            .collect();
        DecompMatrix::new(rows, Some(phi.to_vec())).expect("templates are valid matrices")
    }

    /// Tags of other same-family entries whose template at n is identical
    /// up to row and column permutation (so no degree data can ever separate
    /// them).  Nonempty only for the quaternion coincidences at n = 3.
    pub fn coincident_tags(&self, n: u32) -> Vec<&'static str> {
        let mine = sorted_groups(&self.groups(n), &(0..self.l()).collect::<Vec<_>>());
        let mut out = Vec::new();
        for other in CATALOG
            .iter()
            .filter(|e| e.family == self.family && e.min_n <= n && e.tags != self.tags)
        {
            if other.l() != self.l() {
                continue;
            }
            if permutations(self.l())
                .iter()
                .any(|perm| sorted_groups(&other.groups(n), perm) == mine)
            {
                out.extend_from_slice(other.tags);
            }
        }
        out
    }
}

fn sorted_groups(groups: &[TemplateGroup], perm: &[usize]) -> Vec<(Vec<u32>, u32, u64)> {
    let mut out: Vec<(Vec<u32>, u32, u64)> = groups
        .iter()
        .map(|g| {
            (
                perm.iter().map(|&j| g.coeffs[j]).collect(),
                g.height,
                g.mult,
            )
        })
        .collect();
    out.sort_unstable();
    out
}

/// Classical group families whose principal 2-blocks realise catalog classes.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum GroupFamily {
    Psl2,
    Pgl2,
    Sl2,
    Gu2,
    Gl2,
}

impl GroupFamily {
    pub fn name(self) -> &'static str {
        match self {
            GroupFamily::Psl2 => "psl2",
            GroupFamily::Pgl2 => "pgl2",
            GroupFamily::Sl2 => "sl2",
            GroupFamily::Gu2 => "gu2",
            GroupFamily::Gl2 => "gl2",
        }
    }

    pub fn all() -> [GroupFamily; 5] {
        [
            GroupFamily::Psl2,
            GroupFamily::Pgl2,
            GroupFamily::Sl2,
            GroupFamily::Gu2,
            GroupFamily::Gl2,
        ]
    }
}

impl fmt::Display for GroupFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

impl FromStr for GroupFamily {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "psl2" => Ok(GroupFamily::Psl2),
            "pgl2" => Ok(GroupFamily::Pgl2),
            "sl2" => Ok(GroupFamily::Sl2),
            "gu2" => Ok(GroupFamily::Gu2),
            "gl2" => Ok(GroupFamily::Gl2),
            other => Err(format!("unknown group family {:?}", other)),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum FamilyError {
    /// q must be an odd prime power at least 3.
    NotOddPrimePower(u64),
    /// The defect group would be too small (e.g. Klein four for PSL₂(q)
    /// with q ≡ ±3 mod 8).
    DefectTooSmall { q: u64, n: u32, required: u32 },
    /// The defect exponent exceeds the supported range.
    DefectTooLarge { q: u64, n: u32 },
}

impl fmt::Display for FamilyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyError::NotOddPrimePower(q) => {
                write!(f, "q = {} is not an odd prime power (q >= 3 required)", q)
            }
            FamilyError::DefectTooSmall { q, n, required } => write!(
                f,
                "q = {} gives defect exponent {} but the family needs at least {}",
                q, n, required
            ),
            FamilyError::DefectTooLarge { q, n } => write!(
                f,
                "q = {} gives defect exponent {} above the supported {}",
                q, n, MAX_N
            ),
        }
    }
}

/// Principal-block data for a classical family member: the block document,
/// its decomposition matrix, and — when the block is tame — the catalog
/// class it belongs to.
#[derive(Clone, Debug)]
pub struct FamilyBlock {
    pub block: BlockData,
    pub matrix: DecompMatrix,
    pub class: Option<(Family, &'static str)>,
}

fn odd_prime_power(q: u64) -> bool {
    if q < 3 || q % 2 == 0 {
        return false;
    }
    let mut p = 3u64;
    while p * p <= q && q % p != 0 {
        p += 2;
    }
    let p = if p * p > q { q } else { p };
    let mut m = q;
    while m % p == 0 {
        m /= p;
    }
    m == 1
}

fn v2_u64(m: u64) -> u32 {
    m.trailing_zeros()
}

/// Principal 2-block of a classical group at odd q.
///
/// For PSL₂, PGL₂, SL₂ and the tame congruences of GU₂ (q ≡ 1 mod 4) and
/// GL₂ (q ≡ 3 mod 4) the block lands in a catalog class and the matrix is
/// the instantiated template.  For the other GU₂/GL₂ congruence the Sylow
/// 2-subgroup is not dihedral/semidihedral/quaternion; the block data and
/// its known decomposition matrix are returned with `class = None`.
pub fn family_block(family: GroupFamily, q: u64) -> Result<FamilyBlock, FamilyError> {
    if !odd_prime_power(q) {
        return Err(FamilyError::NotOddPrimePower(q));
    }
    let b = |d: u64| BigUint::from(d);
    let plus1 = q % 4 == 1;
    match family {
        GroupFamily::Psl2 => {
            let (tag, n) = if plus1 {
                ("3A", v2_u64(q - 1))
            } else {
                ("3K", v2_u64(q + 1))
            };
            if n < 3 {
                return Err(FamilyError::DefectTooSmall { q, n, required: 3 });
            }
            let phi = vec![b(1), b((q - 1) / 2), b((q - 1) / 2)];
            tame_family_block(format!("PSL2({})", q), q, Family::Dihedral, tag, n, &phi)
        }
        GroupFamily::Pgl2 => {
            let (tag, n) = if plus1 {
                ("2A", v2_u64(q - 1) + 1)
            } else {
                ("2B", v2_u64(q + 1) + 1)
            };
            let phi = vec![b(1), b(q - 1)];
            tame_family_block(format!("PGL2({})", q), q, Family::Dihedral, tag, n, &phi)
        }
        GroupFamily::Sl2 => {
            let (tag, n) = if plus1 {
                ("3A", v2_u64(q - 1) + 1)
            } else {
                ("3K", v2_u64(q + 1) + 1)
            };
            let phi = vec![b(1), b((q - 1) / 2), b((q - 1) / 2)];
            tame_family_block(format!("SL2({})", q), q, Family::Quaternion, tag, n, &phi)
        }
        GroupFamily::Gu2 => {
            if plus1 {
                let n = v2_u64(q - 1) + 2;
                tame_family_block(
                    format!("GU2({})", q),
                    q,
                    Family::Semidihedral,
                    "2A1",
                    n,
                    &[b(1), b(q - 1)],
                )
            } else {
                // a = |q+1|_2 >= 4, c = |q-1|_2 = 2: wreathed Sylow 2-subgroup.
                let n = 1 + 2 * v2_u64(q + 1);
                if n > MAX_N {
                    return Err(FamilyError::DefectTooLarge { q, n });
                }
                let a = 1u64 << v2_u64(q + 1);
                let rows = vec![
                    (b(1), vec![1, 0], a, 0),
                    (b(q), vec![1, 1], a, 0),
                    (b(q - 1), vec![0, 1], a * (a - 1) / 2, 1),
                    (b(q + 1), vec![2, 1], a / 2, v2_u64(q + 1)),
                ];
                wild_family_block(format!("GU2({})", q), n, &[b(1), b(q - 1)], rows)
            }
        }
        GroupFamily::Gl2 => {
            if !plus1 {
                let n = v2_u64(q + 1) + 2;
                tame_family_block(
                    format!("GL2({})", q),
                    q,
                    Family::Semidihedral,
                    "2B2",
                    n,
                    &[b(1), b(q - 1)],
                )
            } else {
                let n = 1 + 2 * v2_u64(q - 1);
                if n > MAX_N {
                    return Err(FamilyError::DefectTooLarge { q, n });
                }
                let c = 1u64 << v2_u64(q - 1);
                let rows = vec![
                    (b(1), vec![1, 0], c, 0),
                    (b(q), vec![1, 1], c, 0),
                    (b(q + 1), vec![2, 1], c * (c - 1) / 2, 1),
                    (b(q - 1), vec![0, 1], c / 2, v2_u64(q - 1)),
                ];
                wild_family_block(format!("GL2({})", q), n, &[b(1), b(q - 1)], rows)
            }
        }
    }
}

fn tame_family_block(
    label: String,
    q: u64,
    family: Family,
    tag: &'static str,
    n: u32,
    phi: &[BigUint],
) -> Result<FamilyBlock, FamilyError> {
    if n > MAX_N {
        return Err(FamilyError::DefectTooLarge { q, n });
    }
    let entry = find(family, tag).expect("catalog tag exists");
    let matrix = entry.instantiate(n, phi);
    let chars = matrix
        .rows()
        .iter()
        .map(|r| CharClass {
            degree: r.degree.clone(),
            mult: r.mult,
            height: r.height,
        })
        .collect();
    let block = BlockData::new(label, Some(family), n, chars, Some(n), Some(entry.l()))
        .expect("family blocks are well-formed");
    Ok(FamilyBlock {
        block,
        matrix,
        class: Some((family, tag)),
    })
}

fn wild_family_block(
    label: String,
    n: u32,
    brauer: &[BigUint],
    rows: Vec<(BigUint, Vec<u32>, u64, u32)>,
) -> Result<FamilyBlock, FamilyError> {
    let matrix_rows: Vec<Row> = rows
        .iter()
        .map(|(d, c, m, h)| {
            let m = u32::try_from(*m).expect("row multiplicity fits u32 below MAX_N");
            Row::new(d.clone(), c.clone(), m, Some(*h))
        })
        .collect();
    let matrix =
        DecompMatrix::new(matrix_rows, Some(brauer.to_vec())).expect("family table is valid");
    let chars = rows
        .into_iter()
        .map(|(d, _, m, h)| CharClass {
            degree: d,
            mult: u32::try_from(m).expect("multiplicity fits u32 below MAX_N"),
            height: Some(h),
        })
        .collect();
    let block = BlockData::new(label, None, n, chars, Some(n), Some(2))
        .expect("family blocks are well-formed");
    Ok(FamilyBlock {
        block,
        matrix,
        class: None,
    })
}

/// Convenience: boxed iterator over all (entry, n) pairs realizable up to
/// `max_n`, used by sweeps.
pub fn realizable_up_to(max_n: u32) -> Box<dyn Iterator<Item = (&'static ClassEntry, u32)>> {
    Box::new(CATALOG.iter().flat_map(move |e| {
        (e.min_n..=max_n)
            .filter(|&n| e.is_realizable(n))
            .map(move |n| (e, n))
    }))
}
