//! Identifying the Morita class of a tame 2-block from its ordinary
//! character degrees.
//!
//! The input is a [`BlockData`] document: degrees with multiplicities, the
//! defect exponent n, and whatever extra structure is known (explicit
//! heights, the 2-valuation of the group order, the number of Brauer
//! characters).  Heights are recovered by [`infer_heights`], then
//! [`match_templates`] tries every catalog template of the right size,
//! solving exactly for Brauer degrees and keeping only strictly positive
//! integer solutions.  [`classify_dihedral_shortcut`] is the independent
//! degree recipe that needs no template search, valid for dihedral blocks.

use alloc::collections::BTreeSet;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use num_bigint::{BigInt, BigUint, Sign};
use num_rational::BigRational;
use num_traits::Zero;

use crate::catalog::{self, ClassEntry, Family, MAX_N};
use crate::matrix::DecompMatrix;
use crate::polyq::v2;

/// One class of ordinary characters sharing a degree (and height, if known).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CharClass {
    pub degree: BigUint,
    pub mult: u32,
    pub height: Option<u32>,
}

/// A block's character-degree data.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BlockData {
    pub group_label: String,
    /// Defect-group type, when known.
    pub family: Option<Family>,
    /// Defect exponent: the defect groups have order 2ⁿ.
    pub n: u32,
    /// Merged and sorted ascending by (degree, height).
    pub chars: Vec<CharClass>,
    /// v₂ of the group order, for height computation in full-defect blocks
    /// and, more generally, whenever height = v₂(degree) − (v₂|G| − n).
    pub v2_group_order: Option<u32>,
    /// Number of Brauer characters, when known.
    pub brauer_count: Option<usize>,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum BlockError {
    NoCharacters,
    ZeroDegree,
    ZeroMultiplicity,
    MixedHeights,
    DefectTooSmall(u32),
    DefectTooLarge(u32),
    ZeroBrauerCount,
}

impl fmt::Display for BlockError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BlockError::NoCharacters => write!(f, "block has no characters"),
            BlockError::ZeroDegree => write!(f, "character degrees must be positive"),
            BlockError::ZeroMultiplicity => write!(f, "multiplicities must be positive"),
            BlockError::MixedHeights => write!(f, "heights must be given on all characters or none"),
            BlockError::DefectTooSmall(n) => write!(f, "defect exponent {} below 3", n),
            BlockError::DefectTooLarge(n) => {
                write!(f, "defect exponent {} above supported {}", n, MAX_N)
            }
            BlockError::ZeroBrauerCount => write!(f, "Brauer character count must be positive"),
        }
    }
}

impl BlockData {
    pub fn new(
        group_label: impl Into<String>,
        family: Option<Family>,
        n: u32,
        chars: Vec<CharClass>,
        v2_group_order: Option<u32>,
        brauer_count: Option<usize>,
    ) -> Result<Self, BlockError> {
        let group_label = group_label.into();
        if chars.is_empty() {
            return Err(BlockError::NoCharacters);
        }
        if chars.iter().any(|c| c.degree.is_zero()) {
            return Err(BlockError::ZeroDegree);
        }
        if chars.iter().any(|c| c.mult == 0) {
            return Err(BlockError::ZeroMultiplicity);
        }
        let with_h = chars.iter().filter(|c| c.height.is_some()).count();
        if with_h != 0 && with_h != chars.len() {
            return Err(BlockError::MixedHeights);
        }
        if n < 3 {
            return Err(BlockError::DefectTooSmall(n));
        }
        if n > MAX_N {
            return Err(BlockError::DefectTooLarge(n));
        }
        if brauer_count == Some(0) {
            return Err(BlockError::ZeroBrauerCount);
        }
        let mut chars = chars;
        chars.sort_by(|a, b| (&a.degree, a.height).cmp(&(&b.degree, b.height)));
        let mut merged: Vec<CharClass> = Vec::with_capacity(chars.len());
        for c in chars {
            match merged.last_mut() {
                Some(last) if last.degree == c.degree && last.height == c.height => {
                    last.mult += c.mult
                }
                _ => merged.push(c),
            }
        }
        Ok(BlockData {
            group_label,
            family,
            n,
            chars: merged,
            v2_group_order,
            brauer_count,
        })
    }

    /// Builds synthetic block data from a decomposition matrix, carrying the
    /// matrix's heights and Brauer-character count over.
    pub fn from_matrix(
        group_label: impl Into<String>,
        family: Option<Family>,
        n: u32,
        m: &DecompMatrix,
    ) -> Result<Self, BlockError> {
        let chars = m
            .rows()
            .iter()
            .map(|r| CharClass {
                degree: r.degree.clone(),
                mult: r.mult,
                height: r.height,
            })
            .collect();
        BlockData::new(group_label, family, n, chars, None, Some(m.l()))
    }

    /// Number of ordinary characters, with multiplicity.
    pub fn k(&self) -> u64 {
        self.chars.iter().map(|c| c.mult as u64).sum()
    }

    pub fn has_explicit_heights(&self) -> bool {
        self.chars[0].height.is_some()
    }
}

/// How heights were obtained.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum HeightSource {
    /// Heights were given on the input data.
    Explicit,
    /// height = v₂(degree) − (v₂|G| − n).
    GroupOrder,
    /// height = v₂(degree) − min v₂: valid because every tame block has
    /// height-zero characters.
    MinValuation,
}

/// Degree classes with concrete heights.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HeightAssignment {
    /// (degree, height, multiplicity), ascending by (degree, height).
    pub classes: Vec<(BigUint, u32, u64)>,
    pub source: HeightSource,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum HeightError {
    /// v₂|G| was smaller than the defect exponent.
    OrderBelowDefect { v2_group_order: u32, n: u32 },
    /// A degree's valuation fell below the height-zero baseline.
    NegativeHeight { degree: BigUint },
    /// The resulting histogram fits no admissible family at this defect:
    /// tame blocks have exactly four height-zero characters, 2^{n−2}−1 of
    /// height one, and at most two of height n−2.
    IllegalHistogram { n: u32 },
}

impl fmt::Display for HeightError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HeightError::OrderBelowDefect { v2_group_order, n } => write!(
                f,
                "v2(|G|) = {} is below the defect exponent {}",
                v2_group_order, n
            ),
            HeightError::NegativeHeight { degree } => {
                write!(f, "degree {} has valuation below the height-zero level", degree)
            }
            HeightError::IllegalHistogram { n } => {
                write!(f, "height histogram is not that of a tame block at n = {}", n)
            }
        }
    }
}

fn max_large(family: Family) -> u64 {
    match family {
        Family::Dihedral => 0,
        Family::Semidihedral => 1,
        Family::Quaternion => 2,
    }
}

fn histogram_legal(classes: &[(BigUint, u32, u64)], n: u32, family: Family) -> bool {
    if n < family.min_n() {
        return false;
    }
    let rep = (1u64 << (n - 2)) - 1;
    let mut zero = 0u64;
    let mut one = 0u64;
    let mut large = 0u64;
    for (_, h, m) in classes {
        match *h {
            0 => zero += m,
            1 => one += m,
            h if n >= 4 && h == n - 2 => large += m,
            _ => return false,
        }
    }
    if zero != 4 {
        return false;
    }
    if n == 3 {
        // height-one and large rows share the height-1 bucket
        one >= rep && one - rep <= max_large(family)
    } else {
        one == rep && large <= max_large(family)
    }
}

/// Recovers (degree, height) classes for a block: explicit heights are used
/// verbatim; otherwise heights come from v₂|G| when given, and from the
/// minimum degree valuation as a last resort.  Errors if the resulting
/// histogram fits no admissible defect-group family at the block's n.
pub fn infer_heights(block: &BlockData) -> Result<HeightAssignment, HeightError> {
    let (classes, source) = if block.has_explicit_heights() {
        let classes = block
            .chars
            .iter()
            .map(|c| (c.degree.clone(), c.height.unwrap(), c.mult as u64))
            .collect();
        (classes, HeightSource::Explicit)
    } else {
        let vals: Vec<u64> = block
            .chars
            .iter()
            .map(|c| v2(&c.degree).expect("degrees are positive"))
            .collect();
        let (shift, source) = match block.v2_group_order {
            Some(v2o) => {
                if v2o < block.n {
                    return Err(HeightError::OrderBelowDefect {
                        v2_group_order: v2o,
                        n: block.n,
                    });
                }
                ((v2o - block.n) as u64, HeightSource::GroupOrder)
            }
            None => (*vals.iter().min().expect("nonempty"), HeightSource::MinValuation),
        };
        let mut classes = Vec::with_capacity(block.chars.len());
        for (c, val) in block.chars.iter().zip(&vals) {
            if *val < shift {
                return Err(HeightError::NegativeHeight {
                    degree: c.degree.clone(),
                });
            }
            classes.push((c.degree.clone(), (val - shift) as u32, c.mult as u64));
        }
        (classes, source)
    };
    let mut classes = classes;
    classes.sort_by(|a, b| (&a.0, a.1).cmp(&(&b.0, b.1)));
    let families = match block.family {
        Some(f) => vec![f],
        None => Family::all().to_vec(),
    };
    if !families
        .iter()
        .any(|&f| histogram_legal(&classes, block.n, f))
    {
        return Err(HeightError::IllegalHistogram { n: block.n });
    }
    Ok(HeightAssignment { classes, source })
}

/// One successful template fit.
#[derive(Clone, Debug)]
pub struct TemplateSolution {
    pub entry: &'static ClassEntry,
    pub n: u32,
    /// Brauer character degrees, in template column order.
    pub phi: Vec<BigUint>,
    /// The instantiated decomposition matrix.
    pub matrix: DecompMatrix,
    /// `None` when heights could not be inferred and matching fell back to
    /// degrees alone.
    pub height_source: Option<HeightSource>,
}

/// Every catalog class whose template at the block's defect exponent can
/// produce exactly the observed degrees: multiplicities are conserved
/// exactly, heights must agree when available, and the Brauer degrees are
/// solved for exactly, kept only when strictly positive integers.  Entries
/// are filtered by the block's family and Brauer-character count when those
/// are known.  Solutions are deduplicated by (class, Brauer degrees) and
/// returned in catalog order.  An empty result means no tame template fits.
pub fn match_templates(block: &BlockData) -> Vec<TemplateSolution> {
    let families: Vec<Family> = match block.family {
        Some(f) => vec![f],
        None => Family::all().to_vec(),
    };
    let (classes, source): (Vec<(BigUint, u32, u64)>, Option<HeightSource>) =
        match infer_heights(block) {
            Ok(a) => (a.classes, Some(a.source)),
            Err(_) => {
                // fall back to degree-only matching
                let mut merged: Vec<(BigUint, u32, u64)> = Vec::new();
                for c in &block.chars {
                    match merged.iter_mut().find(|(d, _, _)| d == &c.degree) {
                        Some((_, _, m)) => *m += c.mult as u64,
                        None => merged.push((c.degree.clone(), 0, c.mult as u64)),
                    }
                }
                (merged, None)
            }
        };
    let with_heights = source.is_some();
    let k = block.k();
    let mut seen: BTreeSet<(usize, Vec<BigUint>)> = BTreeSet::new();
    let mut solutions: Vec<(usize, Vec<BigUint>)> = Vec::new();
    for (idx, entry) in catalog::entries().iter().enumerate() {
        if !families.contains(&entry.family) {
            continue;
        }
        if block.n < entry.min_n || block.n > MAX_N {
            continue;
        }
        if let Some(lb) = block.brauer_count {
            if entry.l() != lb {
                continue;
            }
        }
        if entry.counts(block.n).k != k {
            continue;
        }
        let groups: Vec<(Vec<u32>, u32, u64)> = if with_heights {
            entry
                .groups(block.n)
                .into_iter()
                .map(|g| (g.coeffs.to_vec(), g.height, g.mult))
                .collect()
        } else {
            let mut merged: Vec<(Vec<u32>, u32, u64)> = Vec::new();
            for g in entry.groups(block.n) {
                match merged.iter_mut().find(|(c, _, _)| c.as_slice() == g.coeffs) {
                    Some((_, _, m)) => *m += g.mult,
                    None => merged.push((g.coeffs.to_vec(), 0, g.mult)),
                }
            }
            merged
        };
        let l = entry.l();
        let mut remaining: Vec<u64> = classes.iter().map(|c| c.2).collect();
        let mut assignment: Vec<usize> = Vec::with_capacity(groups.len());
        search(
            &groups,
            &classes,
            with_heights,
            &mut remaining,
            &mut assignment,
            0,
            &mut |assignment| {
                let eqs: Vec<(&[u32], &BigUint)> = assignment
                    .iter()
                    .enumerate()
                    .map(|(gi, &ci)| (groups[gi].0.as_slice(), &classes[ci].0))
                    .collect();
                if let Some(phi) = solve_phi(&eqs, l) {
                    if seen.insert((idx, phi.clone())) {
                        solutions.push((idx, phi));
                    }
                }
            },
        );
    }
    solutions.sort();
    // Templates with a column symmetry (for example 3C2,2 under swapping the
    // first two columns) produce several phi vectors for one underlying
    // matrix; keep only the lexicographically least representative.
    let mut canon_seen: BTreeSet<(usize, String)> = BTreeSet::new();
    solutions
        .into_iter()
        .filter_map(|(idx, phi)| {
            let entry = &catalog::entries()[idx];
            let matrix = entry.instantiate(block.n, &phi);
            canon_seen
                .insert((idx, matrix.canonical().to_string()))
                .then(|| TemplateSolution {
                    entry,
                    n: block.n,
                    matrix,
                    phi,
                    height_source: source,
                })
        })
        .collect()
}

/// Backtracking over group-to-class assignments conserving multiplicities.
fn search(
    groups: &[(Vec<u32>, u32, u64)],
    classes: &[(BigUint, u32, u64)],
    with_heights: bool,
    remaining: &mut Vec<u64>,
    assignment: &mut Vec<usize>,
    gi: usize,
    found: &mut dyn FnMut(&[usize]),
) {
    if gi == groups.len() {
        if remaining.iter().all(|&m| m == 0) {
            found(assignment);
        }
        return;
    }
    let g = &groups[gi];
    for ci in 0..classes.len() {
        if with_heights && classes[ci].1 != g.1 {
            continue;
        }
        if remaining[ci] < g.2 {
            continue;
        }
        remaining[ci] -= g.2;
        assignment.push(ci);
        search(groups, classes, with_heights, remaining, assignment, gi + 1, found);
        assignment.pop();
        remaining[ci] += g.2;
    }
}

/// Exact solve of `coeffs · φ = degree` over the rationals; `Some` only for
/// strictly positive integer solutions satisfying every equation.
fn solve_phi(eqs: &[(&[u32], &BigUint)], l: usize) -> Option<Vec<BigUint>> {
    let rat = |i: BigInt| BigRational::from_integer(i);
    let mut rows: Vec<Vec<BigRational>> = eqs
        .iter()
        .map(|(c, d)| {
            let mut v: Vec<BigRational> = c.iter().map(|&x| rat(BigInt::from(x))).collect();
            v.push(rat(BigInt::from((*d).clone())));
            v
        })
        .collect();
    let mut rank = 0usize;
    let mut pivots: Vec<usize> = Vec::new();
    for col in 0..l {
        let Some(pr) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pr);
        let pv = rows[rank][col].clone();
        for x in rows[rank].iter_mut() {
            *x = &*x / &pv;
        }
        for r in 0..rows.len() {
            if r != rank && !rows[r][col].is_zero() {
                let f = rows[r][col].clone();
                for cc in 0..=l {
                    let delta = &f * &rows[rank][cc];
                    rows[r][cc] = &rows[r][cc] - &delta;
                }
            }
        }
        pivots.push(col);
        rank += 1;
    }
    if rank < l {
        return None;
    }
    for r in rank..rows.len() {
        if !rows[r][l].is_zero() {
            return None;
        }
    }
    let mut phi = vec![BigUint::zero(); l];
    for (r, &col) in pivots.iter().enumerate() {
        let val = &rows[r][l];
        if !val.is_integer() {
            return None;
        }
        let vi = val.to_integer();
        if vi.sign() != Sign::Plus {
            return None;
        }
        phi[col] = vi.magnitude().clone();
    }
    // exact re-verification in unsigned arithmetic
    for (c, d) in eqs {
        let mut total = BigUint::zero();
        for (x, p) in c.iter().zip(&phi) {
            total += p * *x;
        }
        if &total != *d {
            return None;
        }
    }
    Some(phi)
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ShortcutError {
    Heights(HeightError),
    /// The recipe only covers dihedral defect groups.
    NotDihedral,
    WrongShape(&'static str),
}

impl fmt::Display for ShortcutError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ShortcutError::Heights(e) => write!(f, "{}", e),
            ShortcutError::NotDihedral => write!(f, "recipe applies to dihedral blocks only"),
            ShortcutError::WrongShape(msg) => write!(f, "{}", msg),
        }
    }
}

/// The dihedral degree recipe: decides the class from the four height-zero
/// degrees and the repeated height-one degree alone.
///
/// If the height-one degree e exceeds every height-zero degree the class is
/// 1A, 2A or 3A according to the number of distinct height-zero degrees
/// (1, 2, ≥3).  Otherwise: two height-zero degrees d < D, each twice, with
/// D = d + e is 2B; a largest height-zero degree equal to the sum of the
/// other three is 3K; anything else is 3B.
pub fn classify_dihedral_shortcut(block: &BlockData) -> Result<&'static str, ShortcutError> {
    if matches!(block.family, Some(f) if f != Family::Dihedral) {
        return Err(ShortcutError::NotDihedral);
    }
    let assignment = infer_heights(block).map_err(ShortcutError::Heights)?;
    let rep = (1u64 << (block.n - 2)) - 1;
    let mut zdegs: Vec<&BigUint> = Vec::new();
    let mut one: Vec<(&BigUint, u64)> = Vec::new();
    for (deg, h, mult) in &assignment.classes {
        match *h {
            0 => {
                for _ in 0..*mult {
                    zdegs.push(deg);
                }
            }
            1 => one.push((deg, *mult)),
            _ => return Err(ShortcutError::NotDihedral),
        }
    }
    if zdegs.len() != 4 {
        return Err(ShortcutError::WrongShape("expected four height-zero characters"));
    }
    if one.len() != 1 {
        return Err(ShortcutError::WrongShape(
            "expected a single repeated height-one degree",
        ));
    }
    let (e, mult) = one[0];
    if mult != rep {
        return Err(ShortcutError::WrongShape(
            "height-one multiplicity must be 2^(n-2)-1",
        ));
    }
    zdegs.sort();
    let mut distinct: Vec<&BigUint> = zdegs.clone();
    distinct.dedup();
    if e > zdegs[3] {
        return Ok(match distinct.len() {
            1 => "1A",
            2 => "2A",
            _ => "3A",
        });
    }
    if distinct.len() == 2 && zdegs[0] == zdegs[1] && zdegs[2] == zdegs[3] {
        let sum = zdegs[0] + e;
        if &sum == zdegs[3] {
            return Ok("2B");
        }
    }
    let others = zdegs[0] + zdegs[1] + zdegs[2];
    if &others == zdegs[3] {
        return Ok("3K");
    }
    Ok("3B")
}
