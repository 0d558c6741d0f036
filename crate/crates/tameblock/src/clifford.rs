//! Index-2 fuse/split calculus for decomposition matrices at ℓ = 2.
//!
//! For N ⊲ G of index 2, each ordinary character of a block b of N either
//! splits into two characters of the covering block B or fuses with a
//! conjugate partner of equal degree into one character of doubled degree;
//! Brauer characters likewise stay fixed or pair up, collapsing columns.
//! With s split characters and f fused pairs, k(b) = s + 2f and
//! k(B) = 2s + f.  The entry of an induced row at a column orbit is the sum
//! of the orbit-row entries and must not depend on the representative
//! column — patterns violating that consistency are discarded.
//!
//! [`induce_candidates`] enumerates every admissible pattern upward given
//! target counts; [`restrict_candidates`] searches downward and keeps
//! exactly the candidates whose induction reproduces the input matrix.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;
use alloc::{format, vec};
use core::fmt;
use num_bigint::BigUint;
use num_traits::Zero;

use crate::matrix::{DecompMatrix, Row};

/// A column of the small matrix either persists or pairs with a conjugate.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum ColumnOrbit {
    Single(usize),
    Pair(usize, usize),
}

/// Row groups of the small matrix either split (two constituents upstairs)
/// or fuse pairwise; indices refer to the normalized row groups of the
/// small matrix, and `Fuse(g, g)` pairs two characters within one group.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum RowOrbit {
    Split(usize),
    Fuse(usize, usize),
}

/// One fuse/split pattern, with instance counts per row orbit.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FusionPattern {
    pub column_orbits: Vec<ColumnOrbit>,
    pub row_orbits: Vec<(RowOrbit, u64)>,
    /// The trivial restriction where every character stays irreducible and
    /// the matrix is unchanged.
    pub identity: bool,
}

impl FusionPattern {
    fn identity(l: usize) -> FusionPattern {
        FusionPattern {
            column_orbits: (0..l).map(ColumnOrbit::Single).collect(),
            row_orbits: Vec::new(),
            identity: true,
        }
    }
}

impl fmt::Display for FusionPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.identity {
            return write!(f, "identity");
        }
        write!(f, "columns")?;
        for o in &self.column_orbits {
            match o {
                ColumnOrbit::Single(c) => write!(f, " {{{}}}", c)?,
                ColumnOrbit::Pair(a, b) => write!(f, " {{{},{}}}", a, b)?,
            }
        }
        write!(f, "; rows")?;
        for (o, count) in &self.row_orbits {
            match o {
                RowOrbit::Split(g) => write!(f, " split({})x{}", g, count)?,
                RowOrbit::Fuse(a, b) => write!(f, " fuse({},{})x{}", a, b, count)?,
            }
        }
        Ok(())
    }
}

/// A pattern together with the matrix it produces.
#[derive(Clone, Debug)]
pub struct Candidate {
    pub pattern: FusionPattern,
    pub matrix: DecompMatrix,
}

/// Enumeration budget; exceeding it is a hard error, never silent
/// truncation.
#[derive(Clone, Copy, Debug)]
pub struct SearchLimits {
    pub cap: u64,
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits { cap: 1_000_000 }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum CliffordError {
    CapExceeded { cap: u64 },
}

impl fmt::Display for CliffordError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliffordError::CapExceeded { cap } => {
                write!(f, "search cap of {} pattern steps exceeded", cap)
            }
        }
    }
}

struct Budget {
    used: u64,
    cap: u64,
}

impl Budget {
    fn new(cap: u64) -> Budget {
        Budget { used: 0, cap }
    }

    fn spend(&mut self, amount: u64) -> Result<(), CliffordError> {
        self.used = self.used.saturating_add(amount);
        if self.used > self.cap {
            Err(CliffordError::CapExceeded { cap: self.cap })
        } else {
            Ok(())
        }
    }
}

/// Central-product row duplication: every multiplicity times `factor`.
pub fn duplicate_rows(m: &DecompMatrix, factor: u32) -> DecompMatrix {
    m.duplicate_rows(factor)
}

/// Solves k_small = s + 2f, k_big = 2s + f for nonnegative integers.
fn split_fuse_counts(k_small: u64, k_big: u64) -> Option<(u64, u64)> {
    let two_big = 2 * k_big;
    let two_small = 2 * k_small;
    if two_big < k_small || two_small < k_big {
        return None;
    }
    if (two_big - k_small) % 3 != 0 {
        return None;
    }
    Some(((two_big - k_small) / 3, (two_small - k_big) / 3))
}

/// All partitions of `l_small` columns into singletons and pairs with
/// exactly `l_big` orbits; paired columns must carry equal Brauer degrees
/// when those are known.
fn column_patterns(
    l_small: usize,
    l_big: usize,
    brauer: Option<&[BigUint]>,
) -> Vec<Vec<ColumnOrbit>> {
    if l_big > l_small || l_small > 2 * l_big {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut used = vec![false; l_small];
    let mut acc: Vec<ColumnOrbit> = Vec::new();
    fn rec(
        used: &mut Vec<bool>,
        acc: &mut Vec<ColumnOrbit>,
        pairs_left: usize,
        singles_left: usize,
        brauer: Option<&[BigUint]>,
        out: &mut Vec<Vec<ColumnOrbit>>,
    ) {
        let Some(first) = used.iter().position(|u| !u) else {
            out.push(acc.clone());
            return;
        };
        used[first] = true;
        if singles_left > 0 {
            acc.push(ColumnOrbit::Single(first));
            rec(used, acc, pairs_left, singles_left - 1, brauer, out);
            acc.pop();
        }
        if pairs_left > 0 {
            for j in first + 1..used.len() {
                if used[j] {
                    continue;
                }
                if let Some(b) = brauer {
                    if b[first] != b[j] {
                        continue;
                    }
                }
                used[j] = true;
                acc.push(ColumnOrbit::Pair(first, j));
                rec(used, acc, pairs_left - 1, singles_left, brauer, out);
                acc.pop();
                used[j] = false;
            }
        }
        used[first] = false;
    }
    let pairs = l_small - l_big;
    let singles = 2 * l_big - l_small;
    rec(&mut used, &mut acc, pairs, singles, brauer, &mut out);
    out
}

/// Entry of a split row at each column orbit, if consistent: the value must
/// not depend on the representative within a pair.
fn collapse_split(coeffs: &[u32], orbits: &[ColumnOrbit]) -> Option<Vec<u32>> {
    let mut out = Vec::with_capacity(orbits.len());
    for o in orbits {
        match *o {
            ColumnOrbit::Single(c) => out.push(coeffs[c]),
            ColumnOrbit::Pair(a, b) => {
                if coeffs[a] != coeffs[b] {
                    return None;
                }
                out.push(coeffs[a]);
            }
        }
    }
    Some(out)
}

/// Entry of a fused row at each column orbit: per-column sums over the two
/// fused rows, which must agree within a pair.
fn collapse_fuse(ra: &[u32], rb: &[u32], orbits: &[ColumnOrbit]) -> Option<Vec<u32>> {
    let mut out = Vec::with_capacity(orbits.len());
    for o in orbits {
        match *o {
            ColumnOrbit::Single(c) => out.push(ra[c] + rb[c]),
            ColumnOrbit::Pair(a, b) => {
                let sa = ra[a] + rb[a];
                let sb = ra[b] + rb[b];
                if sa != sb {
                    return None;
                }
                out.push(sa);
            }
        }
    }
    Some(out)
}

fn orbit_brauer(brauer: Option<&[BigUint]>, orbits: &[ColumnOrbit]) -> Option<Vec<BigUint>> {
    brauer.map(|b| {
        orbits
            .iter()
            .map(|o| match *o {
                ColumnOrbit::Single(c) => b[c].clone(),
                ColumnOrbit::Pair(x, y) => &b[x] + &b[y],
            })
            .collect()
    })
}

fn canonical_key(m: &DecompMatrix) -> String {
    format!("{}", m.canonical())
}

/// Candidate matrices for the block of G covering the block of N with
/// matrix `d_b`, given the target ordinary count `k_big` and Brauer count
/// `l_big`.  Returns the empty list when no fuse/split pattern is
/// consistent; candidates come deduplicated, in a canonical order.
pub fn induce_candidates(
    d_b: &DecompMatrix,
    k_big: u64,
    l_big: usize,
    limits: &SearchLimits,
) -> Result<Vec<Candidate>, CliffordError> {
    let nb = d_b.normalized();
    let mut budget = Budget::new(limits.cap);
    let mut out: Vec<Candidate> = Vec::new();
    let mut seen: BTreeSet<String> = BTreeSet::new();
    let Some((_, f)) = split_fuse_counts(nb.k(), k_big) else {
        return Ok(out);
    };
    let groups = nb.rows();
    for orbits in column_patterns(nb.l(), l_big, nb.brauer()) {
        budget.spend(1)?;
        // which groups tolerate splitting / fusing under these orbits
        let splittable: Vec<bool> = groups
            .iter()
            .map(|r| collapse_split(&r.coeffs, &orbits).is_some())
            .collect();
        let mut fusable: Vec<(usize, usize)> = Vec::new();
        for i in 0..groups.len() {
            for j in i..groups.len() {
                if i == j && groups[i].mult < 2 {
                    continue;
                }
                if groups[i].degree != groups[j].degree || groups[i].height != groups[j].height {
                    continue;
                }
                if collapse_fuse(&groups[i].coeffs, &groups[j].coeffs, &orbits).is_some() {
                    fusable.push((i, j));
                }
            }
        }
        let mut remaining: Vec<u64> = groups.iter().map(|r| r.mult as u64).collect();
        let mut counts: Vec<u64> = vec![0; fusable.len()];
        assign_fuses(
            &splittable,
            &fusable,
            &mut counts,
            &mut remaining,
            0,
            f,
            &mut budget,
            &mut |counts, remaining, budget| {
                budget.spend(1)?;
                if let Some(c) = build_induced(&nb, &orbits, &fusable, counts, remaining) {
                    let key = canonical_key(&c.matrix);
                    if seen.insert(key) {
                        out.push(c);
                    }
                }
                Ok(())
            },
        )?;
    }
    out.sort_by_key(|c| canonical_key(&c.matrix));
    Ok(out)
}

/// Distributes `f` fused pairs over the admissible group pairs; leftovers
/// split, which every group with a leftover must tolerate.
#[allow(clippy::too_many_arguments)]
fn assign_fuses(
    splittable: &[bool],
    fusable: &[(usize, usize)],
    counts: &mut Vec<u64>,
    remaining: &mut Vec<u64>,
    idx: usize,
    f_left: u64,
    budget: &mut Budget,
    found: &mut dyn FnMut(&[u64], &[u64], &mut Budget) -> Result<(), CliffordError>,
) -> Result<(), CliffordError> {
    budget.spend(1)?;
    if idx == fusable.len() {
        if f_left == 0 && remaining.iter().zip(splittable).all(|(&m, &s)| m == 0 || s) {
            found(counts, remaining, budget)?;
        }
        return Ok(());
    }
    let (a, b) = fusable[idx];
    let max_here = if a == b {
        remaining[a] / 2
    } else {
        remaining[a].min(remaining[b])
    };
    for c in 0..=max_here.min(f_left) {
        counts[idx] = c;
        remaining[a] -= if a == b { 2 * c } else { c };
        if a != b {
            remaining[b] -= c;
        }
        assign_fuses(
            splittable, fusable, counts, remaining, idx + 1, f_left - c, budget, found,
        )?;
        remaining[a] += if a == b { 2 * c } else { c };
        if a != b {
            remaining[b] += c;
        }
        counts[idx] = 0;
    }
    Ok(())
}

fn build_induced(
    nb: &DecompMatrix,
    orbits: &[ColumnOrbit],
    fusable: &[(usize, usize)],
    counts: &[u64],
    leftover: &[u64],
) -> Option<Candidate> {
    let groups = nb.rows();
    let mut rows: Vec<Row> = Vec::new();
    let mut row_orbits: Vec<(RowOrbit, u64)> = Vec::new();
    for (g, &m) in leftover.iter().enumerate() {
        if m == 0 {
            continue;
        }
        let coeffs = collapse_split(&groups[g].coeffs, orbits)?;
        rows.push(Row::new(
            groups[g].degree.clone(),
            coeffs,
            u32::try_from(2 * m).ok()?,
            groups[g].height,
        ));
        row_orbits.push((RowOrbit::Split(g), m));
    }
    for (idx, &(a, b)) in fusable.iter().enumerate() {
        if counts[idx] == 0 {
            continue;
        }
        let coeffs = collapse_fuse(&groups[a].coeffs, &groups[b].coeffs, orbits)?;
        rows.push(Row::new(
            &groups[a].degree + &groups[b].degree,
            coeffs,
            u32::try_from(counts[idx]).ok()?,
            groups[a].height.map(|h| h + 1),
        ));
        row_orbits.push((RowOrbit::Fuse(a, b), counts[idx]));
    }
    let matrix = DecompMatrix::new(rows, orbit_brauer(nb.brauer(), orbits)).ok()?;
    Some(Candidate {
        pattern: FusionPattern {
            column_orbits: orbits.to_vec(),
            row_orbits,
            identity: false,
        },
        matrix: matrix.normalized(),
    })
}

/// Candidate matrices for the block of N under a block of G with matrix
/// `d_big`, given target counts for the small block.  A candidate is kept
/// exactly when inducing it with the big block's own counts reproduces
/// `d_big` up to canonical form; the reported pattern is the one found by
/// that upward verification.  The identity candidate (every character
/// restricting irreducibly) is included whenever the counts allow it.
pub fn restrict_candidates(
    d_big: &DecompMatrix,
    k_small: u64,
    l_small: usize,
    limits: &SearchLimits,
) -> Result<Vec<Candidate>, CliffordError> {
    let nb = d_big.normalized();
    let k_big = nb.k();
    let l_big = nb.l();
    let mut budget = Budget::new(limits.cap);
    let mut out: Vec<Candidate> = Vec::new();
    let mut seen: BTreeSet<String> = BTreeSet::new();
    if k_small == k_big && l_small == l_big {
        seen.insert(canonical_key(&nb));
        out.push(Candidate {
            pattern: FusionPattern::identity(l_big),
            matrix: nb.clone(),
        });
    }
    let Some((s, _)) = split_fuse_counts(k_small, k_big) else {
        return Ok(out);
    };
    if l_small < l_big || l_small > 2 * l_big {
        return Ok(out);
    }
    let groups = nb.rows();
    for expanded in expansion_choices(l_big, l_small - l_big, nb.brauer()) {
        budget.spend(1)?;
        // per-group options for splitting one big row into two small rows
        let mut options: Vec<Vec<(Vec<u32>, Vec<u32>)>> = Vec::with_capacity(groups.len());
        for r in groups {
            options.push(half_rows(r, &expanded, &mut budget)?);
        }
        let small_brauer = match expanded_brauer(nb.brauer(), &expanded) {
            Ok(b) => b,
            Err(()) => continue,
        };
        let mut pair_counts: Vec<u64> = vec![0; groups.len()];
        choose_pairs(
            &nb,
            &expanded,
            &options,
            &small_brauer,
            &mut pair_counts,
            0,
            s,
            k_small,
            l_small,
            &mut budget,
            &mut out,
            &mut seen,
            limits,
        )?;
    }
    out.sort_by(|a, b| {
        (!a.pattern.identity, canonical_key(&a.matrix))
            .cmp(&(!b.pattern.identity, canonical_key(&b.matrix)))
    });
    Ok(out)
}

/// Subsets of big columns to expand into conjugate pairs; expanded columns
/// need an even Brauer degree when degrees are known.
fn expansion_choices(
    l_big: usize,
    expand: usize,
    brauer: Option<&[BigUint]>,
) -> Vec<Vec<bool>> {
    let mut out = Vec::new();
    let mut acc = vec![false; l_big];
    fn rec(
        acc: &mut Vec<bool>,
        from: usize,
        left: usize,
        brauer: Option<&[BigUint]>,
        out: &mut Vec<Vec<bool>>,
    ) {
        if left == 0 {
            out.push(acc.clone());
            return;
        }
        if from >= acc.len() {
            return;
        }
        for c in from..acc.len() {
            if let Some(b) = brauer {
                if !(&b[c] % 2u32).is_zero() {
                    continue;
                }
            }
            acc[c] = true;
            rec(acc, c + 1, left - 1, brauer, out);
            acc[c] = false;
        }
    }
    rec(&mut acc, 0, expand, brauer, &mut out);
    out
}

fn expanded_brauer(
    brauer: Option<&[BigUint]>,
    expanded: &[bool],
) -> Result<Option<Vec<BigUint>>, ()> {
    let Some(b) = brauer else { return Ok(None) };
    let mut out = Vec::new();
    for (c, &e) in expanded.iter().enumerate() {
        if e {
            if !(&b[c] % 2u32).is_zero() {
                return Err(());
            }
            let half = &b[c] / 2u32;
            out.push(half.clone());
            out.push(half);
        } else {
            out.push(b[c].clone());
        }
    }
    Ok(Some(out))
}

/// Unordered pairs of small-matrix rows a big row can split into: the
/// degree halves, the height drops by one, and within each expanded column
/// pair both per-column sums equal the big entry.
fn half_rows(
    row: &Row,
    expanded: &[bool],
    budget: &mut Budget,
) -> Result<Vec<(Vec<u32>, Vec<u32>)>, CliffordError> {
    if !(&row.degree % 2u32).is_zero() {
        return Ok(Vec::new());
    }
    if let Some(h) = row.height {
        if h == 0 {
            return Ok(Vec::new());
        }
    }
    // slots: one per unexpanded column, two per expanded column, each slot
    // carrying the big entry it must sum to
    let mut slot_targets: Vec<u32> = Vec::new();
    for (c, &e) in expanded.iter().enumerate() {
        slot_targets.push(row.coeffs[c]);
        if e {
            slot_targets.push(row.coeffs[c]);
        }
    }
    let mut out: Vec<(Vec<u32>, Vec<u32>)> = Vec::new();
    let mut first: Vec<u32> = Vec::with_capacity(slot_targets.len());
    fn rec(
        targets: &[u32],
        first: &mut Vec<u32>,
        out: &mut Vec<(Vec<u32>, Vec<u32>)>,
        budget: &mut Budget,
    ) -> Result<(), CliffordError> {
        budget.spend(1)?;
        if first.len() == targets.len() {
            let second: Vec<u32> = targets
                .iter()
                .zip(first.iter())
                .map(|(&t, &a)| t - a)
                .collect();
            if first.iter().all(|&x| x == 0) || second.iter().all(|&x| x == 0) {
                return Ok(());
            }
            if first.as_slice() <= second.as_slice() {
                out.push((first.clone(), second));
            }
            return Ok(());
        }
        for a in 0..=targets[first.len()] {
            first.push(a);
            rec(targets, first, out, budget)?;
            first.pop();
        }
        Ok(())
    }
    rec(&slot_targets, &mut first, &mut out, budget)?;
    Ok(out)
}

/// Picks how many identical pairs each big row group contributes (merging
/// down to one invariant character each), then splits the leftovers in all
/// multiset combinations and forward-verifies every assembled candidate.
#[allow(clippy::too_many_arguments)]
fn choose_pairs(
    nb: &DecompMatrix,
    expanded: &[bool],
    options: &[Vec<(Vec<u32>, Vec<u32>)>],
    small_brauer: &Option<Vec<BigUint>>,
    pair_counts: &mut Vec<u64>,
    g: usize,
    s_left: u64,
    k_small: u64,
    l_small: usize,
    budget: &mut Budget,
    out: &mut Vec<Candidate>,
    seen: &mut BTreeSet<String>,
    limits: &SearchLimits,
) -> Result<(), CliffordError> {
    budget.spend(1)?;
    let groups = nb.rows();
    if g == groups.len() {
        if s_left != 0 {
            return Ok(());
        }
        let mut chosen: Vec<Vec<usize>> = vec![Vec::new(); groups.len()];
        return choose_splits(
            nb, expanded, options, small_brauer, pair_counts, &mut chosen, 0,
            k_small, l_small, budget, out, seen, limits,
        );
    }
    let m = groups[g].mult as u64;
    for p in 0..=(m / 2).min(s_left) {
        let singles = m - 2 * p;
        // a leftover single must have at least one way to split
        if singles > 0 && options[g].is_empty() {
            continue;
        }
        pair_counts[g] = p;
        choose_pairs(
            nb, expanded, options, small_brauer, pair_counts, g + 1,
            s_left - p, k_small, l_small, budget, out, seen, limits,
        )?;
        pair_counts[g] = 0;
    }
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn choose_splits(
    nb: &DecompMatrix,
    expanded: &[bool],
    options: &[Vec<(Vec<u32>, Vec<u32>)>],
    small_brauer: &Option<Vec<BigUint>>,
    pair_counts: &[u64],
    chosen: &mut Vec<Vec<usize>>,
    g: usize,
    k_small: u64,
    l_small: usize,
    budget: &mut Budget,
    out: &mut Vec<Candidate>,
    seen: &mut BTreeSet<String>,
    limits: &SearchLimits,
) -> Result<(), CliffordError> {
    budget.spend(1)?;
    let groups = nb.rows();
    if g == groups.len() {
        return assemble_candidate(
            nb, expanded, options, small_brauer, pair_counts, chosen,
            k_small, l_small, budget, out, seen, limits,
        );
    }
    let singles = groups[g].mult as u64 - 2 * pair_counts[g];
    // multiset of option indices, nondecreasing to avoid ordered duplicates
    fn rec(
        singles: u64,
        from: usize,
        n_opts: usize,
        acc: &mut Vec<usize>,
        then: &mut dyn FnMut(&mut Vec<usize>) -> Result<(), CliffordError>,
    ) -> Result<(), CliffordError> {
        if singles == 0 {
            return then(acc);
        }
        for o in from..n_opts {
            acc.push(o);
            rec(singles - 1, o, n_opts, acc, then)?;
            acc.pop();
        }
        Ok(())
    }
    let n_opts = options[g].len();
    let mut acc: Vec<usize> = Vec::new();
    rec(singles, 0, n_opts, &mut acc, &mut |acc| {
        chosen[g] = acc.clone();
        choose_splits(
            nb, expanded, options, small_brauer, pair_counts, chosen, g + 1,
            k_small, l_small, budget, out, seen, limits,
        )
    })
}

#[allow(clippy::too_many_arguments)]
fn assemble_candidate(
    nb: &DecompMatrix,
    expanded: &[bool],
    options: &[Vec<(Vec<u32>, Vec<u32>)>],
    small_brauer: &Option<Vec<BigUint>>,
    pair_counts: &[u64],
    chosen: &[Vec<usize>],
    k_small: u64,
    l_small: usize,
    budget: &mut Budget,
    out: &mut Vec<Candidate>,
    seen: &mut BTreeSet<String>,
    limits: &SearchLimits,
) -> Result<(), CliffordError> {
    budget.spend(1)?;
    let groups = nb.rows();
    let mut rows: Vec<Row> = Vec::new();
    for (g, r) in groups.iter().enumerate() {
        if pair_counts[g] > 0 {
            // two identical big rows merge to one invariant character whose
            // entries repeat the big entry across each expanded pair
            let mut coeffs = Vec::new();
            for (c, &e) in expanded.iter().enumerate() {
                coeffs.push(r.coeffs[c]);
                if e {
                    coeffs.push(r.coeffs[c]);
                }
            }
            let Ok(m) = u32::try_from(pair_counts[g]) else {
                return Ok(());
            };
            rows.push(Row::new(r.degree.clone(), coeffs, m, r.height));
        }
        for &o in &chosen[g] {
            let (ref a, ref b) = options[g][o];
            let half = &r.degree / 2u32;
            let h = r.height.map(|h| h - 1);
            rows.push(Row::new(half.clone(), a.clone(), 1, h));
            rows.push(Row::new(half, b.clone(), 1, h));
        }
    }
    let Ok(candidate) = DecompMatrix::new(rows, small_brauer.clone()) else {
        return Ok(());
    };
    let candidate = candidate.normalized();
    if candidate.k() != k_small || candidate.l() != l_small {
        return Ok(());
    }
    let key = canonical_key(&candidate);
    if seen.contains(&key) {
        return Ok(());
    }
    // forward verification: inducing the candidate must reproduce the big
    // matrix, and yields the pattern to report
    let induced = induce_candidates(&candidate, nb.k(), nb.l(), limits)?;
    for ind in induced {
        if ind.matrix.canonical_eq(nb) {
            seen.insert(key);
            out.push(Candidate {
                pattern: ind.pattern,
                matrix: candidate,
            });
            break;
        }
    }
    Ok(())
}
