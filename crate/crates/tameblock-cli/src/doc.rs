//! Line-oriented text documents for block data and decomposition matrices.
//!
//! A block document holds one record per `block … end` section:
//!
//! ```text
//! block M11
//!   family semidihedral
//!   n 4
//!   v2order 4
//!   char 1 x1
//!   char 10 x3
//!   expect 3B1
//! end
//! ```
//!
//! Degrees are decimal strings of unbounded size.  `# …` lines and blank
//! lines are ignored.  Serialisation always emits the canonical form: fields
//! in the order above, characters sorted by (degree, height) with equal
//! classes merged — the order [`BlockData`] itself guarantees — so
//! serialising a parsed canonical document is byte-identical.
//!
//! A matrix document is the analogous `matrix … end` section with `row`
//! lines: degree, one coefficient per column, `x<mult>`, optional
//! `h<height>`.

use std::fmt;
use std::str::FromStr;

use tameblock::catalog::Family;
use tameblock::classify::{BlockData, CharClass};
use tameblock::matrix::{DecompMatrix, Row};
use tameblock::num_bigint::BigUint;

/// One block record: the data plus optional ground-truth expectations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockRecord {
    pub block: BlockData,
    /// Expected class tags, when the record carries ground truth.
    pub expect: Vec<String>,
    pub note: Option<String>,
}

#[derive(Clone, Debug)]
pub struct DocError {
    pub line: usize,
    pub msg: String,
}

impl fmt::Display for DocError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: {}", self.line, self.msg)
    }
}

impl std::error::Error for DocError {}

fn err<T>(line: usize, msg: impl Into<String>) -> Result<T, DocError> {
    Err(DocError {
        line,
        msg: msg.into(),
    })
}

pub fn family_name(f: Family) -> &'static str {
    f.name()
}

pub fn family_from_str(s: &str) -> Option<Family> {
    Family::all().into_iter().find(|f| f.name() == s)
}

struct PendingBlock {
    start: usize,
    name: String,
    family: Option<Family>,
    n: Option<u32>,
    v2order: Option<u32>,
    brauer: Option<usize>,
    chars: Vec<CharClass>,
    expect: Vec<String>,
    note: Option<String>,
}

/// Splits a trailing `x<mult>` / `h<height>` pair off a token list.
fn take_mult_height(
    toks: &mut Vec<&str>,
    lineno: usize,
) -> Result<(u32, Option<u32>), DocError> {
    let mut mult = 1u32;
    let mut height = None;
    while let Some(&last) = toks.last() {
        if let Some(rest) = last.strip_prefix('h') {
            if height.is_some() {
                return err(lineno, "height given twice");
            }
            height = Some(
                rest.parse::<u32>()
                    .map_err(|_| DocError {
                        line: lineno,
                        msg: format!("bad height '{last}'"),
                    })?,
            );
            toks.pop();
        } else if let Some(rest) = last.strip_prefix('x') {
            mult = rest.parse::<u32>().map_err(|_| DocError {
                line: lineno,
                msg: format!("bad multiplicity '{last}'"),
            })?;
            toks.pop();
            break;
        } else {
            break;
        }
    }
    Ok((mult, height))
}

fn parse_degree(tok: &str, lineno: usize) -> Result<BigUint, DocError> {
    BigUint::from_str(tok).map_err(|_| DocError {
        line: lineno,
        msg: format!("bad degree '{tok}': expected a decimal integer"),
    })
}

/// Parses a block document into its records.
pub fn parse_blocks(text: &str) -> Result<Vec<BlockRecord>, DocError> {
    let mut out = Vec::new();
    let mut cur: Option<PendingBlock> = None;
    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut toks: Vec<&str> = line.split_whitespace().collect();
        let key = toks.remove(0);
        match (&mut cur, key) {
            (None, "block") => {
                if toks.is_empty() {
                    return err(lineno, "block needs a name");
                }
                cur = Some(PendingBlock {
                    start: lineno,
                    name: toks.join(" "),
                    family: None,
                    n: None,
                    v2order: None,
                    brauer: None,
                    chars: Vec::new(),
                    expect: Vec::new(),
                    note: None,
                });
            }
            (None, other) => {
                return err(lineno, format!("expected 'block', found '{other}'"));
            }
            (Some(b), "family") => {
                let name = toks.join(" ");
                b.family = Some(family_from_str(&name).ok_or(DocError {
                    line: lineno,
                    msg: format!(
                        "unknown family '{name}' (dihedral, semidihedral, quaternion)"
                    ),
                })?);
            }
            (Some(b), "n") => {
                b.n = Some(single_u32(&toks, lineno, "n")?);
            }
            (Some(b), "v2order") => {
                b.v2order = Some(single_u32(&toks, lineno, "v2order")?);
            }
            (Some(b), "brauer") => {
                b.brauer = Some(single_u32(&toks, lineno, "brauer")? as usize);
            }
            (Some(b), "char") => {
                if toks.is_empty() {
                    return err(lineno, "char needs a degree");
                }
                let (mult, height) = take_mult_height(&mut toks, lineno)?;
                if toks.len() != 1 {
                    return err(lineno, "char takes one degree plus x/h markers");
                }
                let degree = parse_degree(toks[0], lineno)?;
                b.chars.push(CharClass {
                    degree,
                    mult,
                    height,
                });
            }
            (Some(b), "expect") => {
                b.expect.extend(toks.iter().map(|t| t.to_string()));
            }
            (Some(b), "note") => {
                b.note = Some(toks.join(" "));
            }
            (Some(_), "end") => {
                let b = cur.take().unwrap();
                let n = match b.n {
                    Some(n) => n,
                    None => return err(b.start, format!("block {}: missing n", b.name)),
                };
                let block =
                    BlockData::new(b.name.clone(), b.family, n, b.chars, b.v2order, b.brauer)
                        .map_err(|e| DocError {
                            line: b.start,
                            msg: format!("block {}: {e}", b.name),
                        })?;
                out.push(BlockRecord {
                    block,
                    expect: b.expect,
                    note: b.note,
                });
            }
            (Some(_), other) => {
                return err(lineno, format!("unknown field '{other}'"));
            }
        }
    }
    if let Some(b) = cur {
        return err(b.start, format!("block {} never ends", b.name));
    }
    Ok(out)
}

fn single_u32(toks: &[&str], lineno: usize, what: &str) -> Result<u32, DocError> {
    if toks.len() != 1 {
        return err(lineno, format!("{what} takes one value"));
    }
    toks[0].parse::<u32>().map_err(|_| DocError {
        line: lineno,
        msg: format!("bad {what} '{}'", toks[0]),
    })
}

/// Canonical serialisation of block records.
pub fn write_blocks(records: &[BlockRecord]) -> String {
    let mut s = String::new();
    for (i, r) in records.iter().enumerate() {
        if i > 0 {
            s.push('\n');
        }
        s.push_str(&format!("block {}\n", r.block.group_label));
        if let Some(f) = r.block.family {
            s.push_str(&format!("  family {}\n", f.name()));
        }
        s.push_str(&format!("  n {}\n", r.block.n));
        if let Some(v) = r.block.v2_group_order {
            s.push_str(&format!("  v2order {v}\n"));
        }
        if let Some(l) = r.block.brauer_count {
            s.push_str(&format!("  brauer {l}\n"));
        }
        for c in &r.block.chars {
            s.push_str(&format!("  char {} x{}", c.degree, c.mult));
            if let Some(h) = c.height {
                s.push_str(&format!(" h{h}"));
            }
            s.push('\n');
        }
        if !r.expect.is_empty() {
            s.push_str(&format!("  expect {}\n", r.expect.join(" ")));
        }
        if let Some(n) = &r.note {
            s.push_str(&format!("  note {n}\n"));
        }
        s.push_str("end\n");
    }
    s
}

struct PendingMatrix {
    start: usize,
    name: String,
    brauer: Option<Vec<BigUint>>,
    rows: Vec<Row>,
}

/// Parses a matrix document into named matrices.
pub fn parse_matrices(text: &str) -> Result<Vec<(String, DecompMatrix)>, DocError> {
    let mut out = Vec::new();
    let mut cur: Option<PendingMatrix> = None;
    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut toks: Vec<&str> = line.split_whitespace().collect();
        let key = toks.remove(0);
        match (&mut cur, key) {
            (None, "matrix") => {
                if toks.is_empty() {
                    return err(lineno, "matrix needs a name");
                }
                cur = Some(PendingMatrix {
                    start: lineno,
                    name: toks.join(" "),
                    brauer: None,
                    rows: Vec::new(),
                });
            }
            (None, other) => {
                return err(lineno, format!("expected 'matrix', found '{other}'"));
            }
            (Some(m), "brauer") => {
                let mut degs = Vec::new();
                for t in &toks {
                    degs.push(parse_degree(t, lineno)?);
                }
                if degs.is_empty() {
                    return err(lineno, "brauer needs at least one degree");
                }
                m.brauer = Some(degs);
            }
            (Some(m), "row") => {
                if toks.is_empty() {
                    return err(lineno, "row needs a degree and coefficients");
                }
                let (mult, height) = take_mult_height(&mut toks, lineno)?;
                if toks.len() < 2 {
                    return err(lineno, "row needs a degree and coefficients");
                }
                let degree = parse_degree(toks[0], lineno)?;
                let mut coeffs = Vec::new();
                for t in &toks[1..] {
                    coeffs.push(t.parse::<u32>().map_err(|_| DocError {
                        line: lineno,
                        msg: format!("bad coefficient '{t}'"),
                    })?);
                }
                m.rows.push(Row::new(degree, coeffs, mult, height));
            }
            (Some(_), "end") => {
                let m = cur.take().unwrap();
                let matrix = DecompMatrix::new(m.rows, m.brauer).map_err(|e| DocError {
                    line: m.start,
                    msg: format!("matrix {}: {e}", m.name),
                })?;
                out.push((m.name, matrix));
            }
            (Some(_), other) => {
                return err(lineno, format!("unknown field '{other}'"));
            }
        }
    }
    if let Some(m) = cur {
        return err(m.start, format!("matrix {} never ends", m.name));
    }
    Ok(out)
}

/// Canonical serialisation of named matrices (rows as held, which is the
/// normalised order when the matrix came from this crate's operations).
pub fn write_matrices(items: &[(String, DecompMatrix)]) -> String {
    let mut s = String::new();
    for (i, (name, m)) in items.iter().enumerate() {
        if i > 0 {
            s.push('\n');
        }
        s.push_str(&format!("matrix {name}\n"));
        if let Some(b) = m.brauer() {
            let degs: Vec<String> = b.iter().map(|d| d.to_string()).collect();
            s.push_str(&format!("  brauer {}\n", degs.join(" ")));
        }
        for r in m.rows() {
            s.push_str(&format!("  row {}", r.degree));
            for c in &r.coeffs {
                s.push_str(&format!(" {c}"));
            }
            s.push_str(&format!(" x{}", r.mult));
            if let Some(h) = r.height {
                s.push_str(&format!(" h{h}"));
            }
            s.push('\n');
        }
        s.push_str("end\n");
    }
    s
}

/// Parses a polynomial table document: named `table … end` sections of
/// `poly <text>` lines.
pub fn parse_poly_tables(
    text: &str,
) -> Result<Vec<(String, Vec<tameblock::polyq::IntPoly>)>, DocError> {
    let mut out: Vec<(String, Vec<tameblock::polyq::IntPoly>)> = Vec::new();
    let mut cur: Option<(usize, String, Vec<tameblock::polyq::IntPoly>)> = None;
    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (key, rest) = match line.split_once(char::is_whitespace) {
            Some((k, r)) => (k, r.trim()),
            None => (line, ""),
        };
        match (&mut cur, key) {
            (None, "table") => {
                if rest.is_empty() {
                    return err(lineno, "table needs a name");
                }
                cur = Some((lineno, rest.to_string(), Vec::new()));
            }
            (None, other) => return err(lineno, format!("expected 'table', found '{other}'")),
            (Some((_, _, polys)), "poly") => {
                let p = rest.parse().map_err(|e| DocError {
                    line: lineno,
                    msg: format!("bad polynomial '{rest}': {e}"),
                })?;
                polys.push(p);
            }
            (Some(_), "end") => {
                let (_, name, polys) = cur.take().unwrap();
                out.push((name, polys));
            }
            (Some(_), other) => return err(lineno, format!("unknown field '{other}'")),
        }
    }
    if let Some((start, name, _)) = cur {
        return err(start, format!("table {name} never ends"));
    }
    Ok(out)
}
