//! Command-line front end for the `tameblock` library: classify block data
//! against the catalog of tame-block decomposition matrices, instantiate
//! catalog templates, run the fuse/split calculus up or down an index-2
//! extension, and do the supporting partition and polynomial arithmetic.
//!
//! All commands write to the supplied writer and return a process exit
//! code, so integration tests can drive [`run`] directly.

pub mod datasets;
pub mod doc;
pub mod dto;

use std::collections::BTreeSet;
use std::fmt::Display;
use std::io::Write;
use std::path::Path;
use std::str::FromStr;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use tameblock::catalog::{self, ClassEntry, Family, GroupFamily};
use tameblock::classify::{self, BlockData};
use tameblock::clifford::{self, SearchLimits};
use tameblock::num_bigint::{BigInt, BigUint};
use tameblock::partition::{self, Partition};
use tameblock::polyq::{self, IntPoly};

use doc::BlockRecord;

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum Format {
    /// Human-readable lines.
    Text,
    /// JSON, one value per record for record-oriented commands.
    Machine,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum FamilyArg {
    Dihedral,
    Semidihedral,
    Quaternion,
}

impl FamilyArg {
    fn to_family(self) -> Family {
        match self {
            FamilyArg::Dihedral => Family::Dihedral,
            FamilyArg::Semidihedral => Family::Semidihedral,
            FamilyArg::Quaternion => Family::Quaternion,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum Direction {
    /// From a block of an index-2 subgroup to candidates one level up.
    Up,
    /// From a block of the big group to candidates for the subgroup.
    Down,
}

/// Tame 2-block classification toolkit.
#[derive(Parser, Debug)]
#[command(name = "tameblock", version, about)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    #[command(subcommand)]
    pub cmd: Cmd,
}

#[derive(Subcommand, Debug)]
pub enum Cmd {
    /// Match block records against the catalog of decomposition matrices.
    Classify {
        /// Block document: a file path or a bundled dataset name.
        source: String,
        /// Override the defect-group family on every record.
        #[arg(long, value_enum)]
        family: Option<FamilyArg>,
        /// Override the defect exponent n on every record.
        #[arg(long)]
        n: Option<u32>,
    },
    /// List catalog classes, or print one class's matrix at a given n.
    Catalog {
        /// Restrict to one defect-group family.
        #[arg(long, value_enum)]
        family: Option<FamilyArg>,
        /// Restrict to the class carrying this tag.
        #[arg(long)]
        tag: Option<String>,
        /// Instantiate matrices at this defect exponent.
        #[arg(long)]
        n: Option<u32>,
    },
    /// 2-core (or ell-core) and weight of a partition.
    Core {
        /// Comma-separated parts, e.g. `8,1`; `-` is the empty partition.
        partition: String,
        #[arg(long, default_value_t = 2)]
        ell: u32,
    },
    /// Which alternating groups Alt(n) have a 2-block of dihedral defect.
    Altblocks {
        /// Inclusive range of degrees, e.g. `5..60`.
        range: String,
    },
    /// Fuse/split candidates across an index-2 extension.
    Extend {
        /// Matrix document (file path).
        source: String,
        /// Ordinary character count of the target block.
        #[arg(long)]
        k: u64,
        /// Brauer character count of the target block.
        #[arg(long)]
        l: usize,
        #[arg(long, value_enum, default_value_t = Direction::Up)]
        direction: Direction,
        /// Enumeration budget; exceeding it is an error.
        #[arg(long, default_value_t = 1_000_000)]
        cap: u64,
    },
    /// Integer polynomial helpers for generic character degrees.
    Poly {
        #[command(subcommand)]
        op: PolyCmd,
    },
    /// Check every record of a block document against its expected tags.
    Batch {
        /// Block document: a file path or a bundled dataset name.
        source: String,
    },
    /// Run the built-in consistency checks.
    Selftest,
}

#[derive(Subcommand, Debug)]
pub enum PolyCmd {
    /// Print the d-th cyclotomic polynomial.
    Cyclo { d: u64 },
    /// Decide whether a polynomial is cyclotomic.
    Iscyclo { poly: String },
    /// Coefficient-ratio bound on positive real roots.
    Bound { poly: String },
    /// All positive integer roots.
    Roots { poly: String },
    /// Evaluate at an integer.
    Eval { poly: String, q0: String },
    /// Degrees coinciding with a table of degree polynomials.
    Coincide {
        /// Candidate degree polynomial in q.
        candidate: String,
        /// Bundled table name (psl2, pgl2, gl2, gu2) or a table file.
        #[arg(long)]
        table: String,
        /// Smallest q to report.
        #[arg(long, default_value = "2")]
        q_min: String,
    },
}

/// Executes a parsed command line, writing results to `out`.  The returned
/// value is the process exit code: 0 for success, 1 when a batch or
/// selftest had failures.  Usage and data errors come back as `Err`.
pub fn run(cli: &Cli, out: &mut dyn Write) -> Result<i32> {
    match &cli.cmd {
        Cmd::Classify { source, family, n } => {
            cmd_classify(out, cli.format, source, *family, *n)
        }
        Cmd::Catalog { family, tag, n } => cmd_catalog(out, cli.format, *family, tag.as_deref(), *n),
        Cmd::Core { partition, ell } => cmd_core(out, cli.format, partition, *ell),
        Cmd::Altblocks { range } => cmd_altblocks(out, cli.format, range),
        Cmd::Extend {
            source,
            k,
            l,
            direction,
            cap,
        } => cmd_extend(out, cli.format, source, *k, *l, *direction, *cap),
        Cmd::Poly { op } => cmd_poly(out, cli.format, op),
        Cmd::Batch { source } => cmd_batch(out, cli.format, source),
        Cmd::Selftest => cmd_selftest(out),
    }
}

fn load_blocks(source: &str) -> Result<Vec<BlockRecord>> {
    let text = if Path::new(source).exists() {
        std::fs::read_to_string(source).with_context(|| format!("reading {source}"))?
    } else if let Some(bundled) = datasets::bundled_blocks(source) {
        bundled.to_string()
    } else {
        bail!(
            "{source}: no such file or bundled dataset (bundled: {})",
            datasets::bundled_names().join(", ")
        );
    };
    doc::parse_blocks(&text).map_err(|e| anyhow!("{source}:{e}"))
}

fn parse_poly(text: &str) -> Result<IntPoly> {
    IntPoly::from_str(text).map_err(|e| anyhow!("bad polynomial '{text}': {e}"))
}

fn json_line(out: &mut dyn Write, value: &impl serde::Serialize) -> Result<()> {
    writeln!(out, "{}", serde_json::to_string(value)?)?;
    Ok(())
}

/// Tags of a solution list, deduplicated, in catalog order.
fn matched_tags(solutions: &[classify::TemplateSolution]) -> Vec<String> {
    let mut seen = BTreeSet::new();
    let mut tags = Vec::new();
    for s in solutions {
        for t in s.entry.tags {
            if seen.insert(*t) {
                tags.push((*t).to_string());
            }
        }
    }
    tags
}

fn phi_text(phi: &[BigUint]) -> String {
    let items: Vec<String> = phi.iter().map(|p| p.to_string()).collect();
    format!("({})", items.join(", "))
}

fn height_source_of(
    block: &BlockData,
    solutions: &[classify::TemplateSolution],
) -> &'static str {
    match solutions.first() {
        Some(s) => dto::height_source_name(s.height_source),
        None => match classify::infer_heights(block) {
            Ok(a) => dto::height_source_name(Some(a.source)),
            Err(_) => dto::height_source_name(None),
        },
    }
}

/// Applies `--family` / `--n` overrides, revalidating the record.
fn override_block(
    block: &BlockData,
    family: Option<FamilyArg>,
    n: Option<u32>,
) -> Result<BlockData> {
    if family.is_none() && n.is_none() {
        return Ok(block.clone());
    }
    BlockData::new(
        block.group_label.clone(),
        family.map(FamilyArg::to_family).or(block.family),
        n.unwrap_or(block.n),
        block.chars.clone(),
        block.v2_group_order,
        block.brauer_count,
    )
    .map_err(|e| anyhow!("{}: {e}", block.group_label))
}

fn cmd_classify(
    out: &mut dyn Write,
    format: Format,
    source: &str,
    family: Option<FamilyArg>,
    n: Option<u32>,
) -> Result<i32> {
    let records = load_blocks(source)?;
    for rec in &records {
        let block = override_block(&rec.block, family, n)?;
        let solutions = classify::match_templates(&block);
        let source_name = height_source_of(&block, &solutions);
        match format {
            Format::Machine => {
                let view = dto::ClassifyOut {
                    block: block.group_label.clone(),
                    family: block.family.map(Family::name),
                    n: block.n,
                    k: block.k(),
                    height_source: source_name,
                    solutions: solutions.iter().map(dto::SolutionOut::from).collect(),
                };
                json_line(out, &view)?;
            }
            Format::Text => {
                let family_name = block.family.map_or("unknown", Family::name);
                writeln!(
                    out,
                    "block {}: family={} n={} k={} heights={}",
                    block.group_label,
                    family_name,
                    block.n,
                    block.k(),
                    source_name
                )?;
                if solutions.is_empty() {
                    writeln!(out, "  no catalog class fits")?;
                }
                for s in &solutions {
                    write!(
                        out,
                        "  match {} {} phi={}",
                        s.entry.family.name(),
                        s.entry.tags.join("/"),
                        phi_text(&s.phi)
                    )?;
                    if !s.entry.is_realizable(s.n) {
                        write!(out, " (no blocks exist at n={})", s.n)?;
                    }
                    writeln!(out)?;
                }
                if let Some(note) = &rec.note {
                    writeln!(out, "  note: {note}")?;
                }
            }
        }
    }
    Ok(0)
}

fn elimination_text(e: &ClassEntry) -> Option<String> {
    match e.eliminated {
        catalog::Elimination::Never => None,
        catalog::Elimination::AtLeast(m) => Some(format!("no blocks for n>={m}")),
        catalog::Elimination::Always => Some("no blocks at any n".to_string()),
    }
}

fn cmd_catalog(
    out: &mut dyn Write,
    format: Format,
    family: Option<FamilyArg>,
    tag: Option<&str>,
    n: Option<u32>,
) -> Result<i32> {
    let family = family.map(FamilyArg::to_family);
    let selected: Vec<&'static ClassEntry> = catalog::entries()
        .iter()
        .filter(|e| family.is_none_or(|f| e.family == f))
        .filter(|e| tag.is_none_or(|t| e.tags.contains(&t)))
        .filter(|e| n.is_none_or(|n| n >= e.min_n && n <= catalog::MAX_N))
        .collect();
    if selected.is_empty() {
        bail!("no catalog entry matches the given family/tag/n");
    }
    if format == Format::Machine {
        let items: Vec<serde_json::Value> = selected
            .iter()
            .map(|e| {
                let mut v = serde_json::json!({
                    "family": e.family.name(),
                    "tags": e.tags,
                    "l": e.l(),
                    "min_n": e.min_n,
                    "ambiguous_with": e.ambiguous_with,
                });
                if let Some(n) = n {
                    let rows: Vec<serde_json::Value> = e
                        .template(n)
                        .iter()
                        .map(|r| {
                            serde_json::json!({
                                "coeffs": r.coeffs,
                                "mult": r.mult,
                                "height": r.height,
                            })
                        })
                        .collect();
                    v["n"] = n.into();
                    v["k"] = e.counts(n).k.into();
                    v["realizable"] = e.is_realizable(n).into();
                    v["rows"] = rows.into();
                }
                v
            })
            .collect();
        json_line(out, &items)?;
        return Ok(0);
    }
    for e in selected {
        let mut line = format!(
            "{} {}: l={}, n>={}",
            e.family.name(),
            e.tags.join("/"),
            e.l(),
            e.min_n
        );
        if let Some(extra) = elimination_text(e) {
            line.push_str(&format!(", {extra}"));
        }
        if !e.ambiguous_with.is_empty() {
            line.push_str(&format!(
                ", degree-ambiguous with {}",
                e.ambiguous_with.join(", ")
            ));
        }
        writeln!(out, "{line}")?;
        if let Some(n) = n {
            let counts = e.counts(n);
            writeln!(out, "  at n={}: k={}, l={}", n, counts.k, counts.l)?;
            for r in e.template(n) {
                let coeffs: Vec<String> = r.coeffs.iter().map(|c| c.to_string()).collect();
                writeln!(out, "  [{}] x{} h{}", coeffs.join(" "), r.mult, r.height)?;
            }
        }
    }
    Ok(0)
}

fn cmd_core(out: &mut dyn Write, format: Format, partition: &str, ell: u32) -> Result<i32> {
    if ell < 2 {
        bail!("--ell must be at least 2");
    }
    let p = Partition::from_str(partition).map_err(|e| anyhow!("bad partition: {e}"))?;
    let (core, weight) = p.ell_core(ell);
    match format {
        Format::Text => writeln!(out, "core={core} weight={weight}")?,
        Format::Machine => json_line(
            out,
            &serde_json::json!({"core": core.to_string(), "weight": weight}),
        )?,
    }
    Ok(0)
}

fn parse_range(range: &str) -> Result<(u64, u64)> {
    let (a, b) = range
        .split_once("..")
        .with_context(|| format!("bad range '{range}': expected a..b"))?;
    let a: u64 = a.trim().parse().with_context(|| format!("bad range start '{a}'"))?;
    let b: u64 = b.trim().parse().with_context(|| format!("bad range end '{b}'"))?;
    if a > b {
        bail!("bad range: {a} > {b}");
    }
    Ok((a, b))
}

fn cmd_altblocks(out: &mut dyn Write, format: Format, range: &str) -> Result<i32> {
    let (a, b) = parse_range(range)?;
    match format {
        Format::Text => {
            for n in a..=b {
                writeln!(out, "n={} {}", n, partition::alt_dihedral_block_exists(n))?;
            }
        }
        Format::Machine => {
            let items: Vec<serde_json::Value> = (a..=b)
                .map(|n| {
                    serde_json::json!({"n": n, "exists": partition::alt_dihedral_block_exists(n)})
                })
                .collect();
            json_line(out, &items)?;
        }
    }
    Ok(0)
}

fn cmd_extend(
    out: &mut dyn Write,
    format: Format,
    source: &str,
    k: u64,
    l: usize,
    direction: Direction,
    cap: u64,
) -> Result<i32> {
    let text =
        std::fs::read_to_string(source).with_context(|| format!("reading {source}"))?;
    let matrices = doc::parse_matrices(&text).map_err(|e| anyhow!("{source}:{e}"))?;
    if matrices.is_empty() {
        bail!("{source}: no matrices");
    }
    let limits = SearchLimits { cap };
    for (name, m) in &matrices {
        let candidates = match direction {
            Direction::Up => clifford::induce_candidates(m, k, l, &limits),
            Direction::Down => clifford::restrict_candidates(m, k, l, &limits),
        }
        .map_err(|e| anyhow!("{name}: {e}"))?;
        match format {
            Format::Machine => {
                let view = serde_json::json!({
                    "matrix": name,
                    "direction": match direction {
                        Direction::Up => "up",
                        Direction::Down => "down",
                    },
                    "k": k,
                    "l": l,
                    "candidates": candidates
                        .iter()
                        .map(dto::CandidateOut::from)
                        .collect::<Vec<_>>(),
                });
                json_line(out, &view)?;
            }
            Format::Text => {
                writeln!(
                    out,
                    "matrix {} (k={}, l={}) {} to k={}, l={}: {} candidate{}",
                    name,
                    m.k(),
                    m.l(),
                    match direction {
                        Direction::Up => "up",
                        Direction::Down => "down",
                    },
                    k,
                    l,
                    candidates.len(),
                    if candidates.len() == 1 { "" } else { "s" }
                )?;
                for (i, c) in candidates.iter().enumerate() {
                    writeln!(out, "  candidate {}: {}", i + 1, c.pattern)?;
                    for line in c.matrix.to_string().lines() {
                        writeln!(out, "    {line}")?;
                    }
                }
            }
        }
    }
    Ok(0)
}

/// Bundled degree-polynomial table, or the single table of a file.
fn load_poly_table(name: &str) -> Result<Vec<IntPoly>> {
    let bundled = doc::parse_poly_tables(datasets::DEGREE_POLYS)
        .expect("bundled tables parse");
    if let Some((_, polys)) = bundled.iter().find(|(n, _)| n == name) {
        return Ok(polys.clone());
    }
    if Path::new(name).exists() {
        let text = std::fs::read_to_string(name).with_context(|| format!("reading {name}"))?;
        let mut tables = doc::parse_poly_tables(&text).map_err(|e| anyhow!("{name}:{e}"))?;
        if tables.len() != 1 {
            bail!("{name}: expected exactly one table, found {}", tables.len());
        }
        return Ok(tables.remove(0).1);
    }
    let names: Vec<&str> = bundled.iter().map(|(n, _)| n.as_str()).collect();
    bail!(
        "{name}: no such table file or bundled table (bundled: {})",
        names.join(", ")
    );
}

fn cmd_poly(out: &mut dyn Write, format: Format, op: &PolyCmd) -> Result<i32> {
    let text_or_json = |out: &mut dyn Write, text: String, json: serde_json::Value| -> Result<()> {
        match format {
            Format::Text => writeln!(out, "{text}")?,
            Format::Machine => json_line(out, &json)?,
        }
        Ok(())
    };
    match op {
        PolyCmd::Cyclo { d } => {
            if *d == 0 {
                bail!("d must be positive");
            }
            let p = polyq::cyclotomic(*d);
            text_or_json(
                out,
                p.to_string(),
                serde_json::json!({"d": d, "poly": p.to_string()}),
            )?;
        }
        PolyCmd::Iscyclo { poly } => {
            let p = parse_poly(poly)?;
            match polyq::is_cyclotomic(&p) {
                Some(d) => text_or_json(
                    out,
                    format!("cyclotomic d={d}"),
                    serde_json::json!({"cyclotomic": true, "d": d}),
                )?,
                None => text_or_json(
                    out,
                    "not cyclotomic".to_string(),
                    serde_json::json!({"cyclotomic": false}),
                )?,
            }
        }
        PolyCmd::Bound { poly } => {
            let p = parse_poly(poly)?;
            let b = polyq::root_bound(&p).map_err(|e| anyhow!("{e}"))?;
            text_or_json(
                out,
                polyq::format_rational(&b),
                serde_json::json!({"bound": polyq::format_rational(&b)}),
            )?;
        }
        PolyCmd::Roots { poly } => {
            let p = parse_poly(poly)?;
            let roots = polyq::positive_integer_roots(&p).map_err(|e| anyhow!("{e}"))?;
            let strings: Vec<String> = roots.iter().map(|r| r.to_string()).collect();
            text_or_json(
                out,
                if strings.is_empty() {
                    "none".to_string()
                } else {
                    strings.join(",")
                },
                serde_json::json!({"roots": strings}),
            )?;
        }
        PolyCmd::Eval { poly, q0 } => {
            let p = parse_poly(poly)?;
            let q0 = BigInt::from_str(q0).map_err(|e| anyhow!("bad integer '{q0}': {e}"))?;
            let v = p.eval(&q0);
            text_or_json(out, v.to_string(), serde_json::json!({"value": v.to_string()}))?;
        }
        PolyCmd::Coincide {
            candidate,
            table,
            q_min,
        } => {
            let p = parse_poly(candidate)?;
            let entries = load_poly_table(table)?;
            let q_min =
                BigUint::from_str(q_min).map_err(|e| anyhow!("bad q_min '{q_min}': {e}"))?;
            let hits = polyq::degree_coincides(&p, &entries, &q_min);
            match format {
                Format::Text => {
                    if hits.is_empty() {
                        writeln!(out, "no coincidences for q >= {q_min}")?;
                    }
                    for (i, c) in &hits {
                        writeln!(out, "poly {}: {}", entries[*i], c)?;
                    }
                }
                Format::Machine => {
                    let items: Vec<serde_json::Value> = hits
                        .iter()
                        .map(|(i, c)| {
                            serde_json::json!({
                                "index": i,
                                "poly": entries[*i].to_string(),
                                "at": c.to_string(),
                            })
                        })
                        .collect();
                    json_line(out, &items)?;
                }
            }
        }
    }
    Ok(0)
}

/// Evaluates one record: PASS when every expected tag was matched.
fn batch_status(rec: &BlockRecord, matched: &[String]) -> &'static str {
    if rec.expect.is_empty() {
        "info"
    } else if rec.expect.iter().all(|t| matched.contains(t)) {
        "pass"
    } else {
        "fail"
    }
}

fn cmd_batch(out: &mut dyn Write, format: Format, source: &str) -> Result<i32> {
    let records = load_blocks(source)?;
    let mut passed = 0usize;
    let mut failed = 0usize;
    let mut with_expectations = 0usize;
    for rec in &records {
        let solutions = classify::match_templates(&rec.block);
        let matched = matched_tags(&solutions);
        let status = batch_status(rec, &matched);
        match status {
            "pass" => {
                with_expectations += 1;
                passed += 1;
            }
            "fail" => {
                with_expectations += 1;
                failed += 1;
            }
            _ => {}
        }
        match format {
            Format::Machine => {
                let view = dto::BatchOut {
                    block: rec.block.group_label.clone(),
                    matched,
                    expected: rec.expect.clone(),
                    status,
                    note: rec.note.clone(),
                };
                json_line(out, &view)?;
            }
            Format::Text => {
                writeln!(
                    out,
                    "{} {}: matched {{{}}} expected {{{}}}",
                    status.to_uppercase(),
                    rec.block.group_label,
                    matched.join(", "),
                    rec.expect.join(", ")
                )?;
                if status == "pass" && matched.len() > rec.expect.len() {
                    writeln!(out, "  matched set exceeds expectation")?;
                }
                if let Some(note) = &rec.note {
                    writeln!(out, "  note: {note}")?;
                }
            }
        }
    }
    if format == Format::Text {
        writeln!(
            out,
            "batch: {}/{} expectations met ({} records)",
            passed,
            with_expectations,
            records.len()
        )?;
    }
    Ok(if failed == 0 { 0 } else { 1 })
}

struct SelfTest<'a> {
    out: &'a mut dyn Write,
    failures: usize,
}

impl<'a> SelfTest<'a> {
    fn check(&mut self, label: &str, ok: bool, detail: impl Display) -> Result<()> {
        if ok {
            writeln!(self.out, "ok {label}")?;
        } else {
            self.failures += 1;
            writeln!(self.out, "FAIL {label}: {detail}")?;
        }
        Ok(())
    }
}

fn cmd_selftest(out: &mut dyn Write) -> Result<i32> {
    let mut t = SelfTest { out, failures: 0 };

    // Character counts of every template, small n.
    let mut counts_ok = true;
    let mut counts_detail = String::new();
    for e in catalog::entries() {
        for n in e.min_n..=8 {
            let c = e.counts(n);
            let expect = (1u64 << (n - 2)) + 3 + e.large_count() as u64;
            if c.k != expect {
                counts_ok = false;
                counts_detail = format!(
                    "{} {} at n={}: k={}, expected {}",
                    e.family.name(),
                    e.tag(),
                    n,
                    c.k,
                    expect
                );
            }
        }
    }
    t.check("catalog character counts", counts_ok, counts_detail)?;

    // Partition calculus.
    let p: Partition = "8,1".parse().unwrap();
    let (core, w) = p.ell_core(2);
    t.check(
        "2-core of (8,1)",
        core.to_string() == "2,1" && w == 3,
        format!("got core={core} weight={w}"),
    )?;
    let hits: Vec<u64> = (5..=20).filter(|&n| partition::alt_dihedral_block_exists(n)).collect();
    t.check(
        "alternating-group dihedral blocks up to 20",
        hits == [6, 7, 9, 12, 16],
        format!("got {hits:?}"),
    )?;

    // Family blocks land in their classes and match them.
    let family_cases = [
        (GroupFamily::Psl2, 7, "3K"),
        (GroupFamily::Psl2, 17, "3A"),
        (GroupFamily::Pgl2, 5, "2A"),
        (GroupFamily::Pgl2, 7, "2B"),
        (GroupFamily::Sl2, 5, "3A"),
        (GroupFamily::Sl2, 7, "3K"),
        (GroupFamily::Gu2, 5, "2A1"),
        (GroupFamily::Gl2, 3, "2B2"),
    ];
    for (fam, q, tag) in family_cases {
        let fb = catalog::family_block(fam, q).map_err(|e| anyhow!("{fam}({q}): {e}"))?;
        let class_ok = fb.class.map(|(_, t)| t) == Some(tag);
        let matched = matched_tags(&classify::match_templates(&fb.block));
        t.check(
            &format!("{fam}({q}) lands in {tag}"),
            class_ok && matched.iter().any(|m| m == tag),
            format!("class={:?} matched={matched:?}", fb.class),
        )?;
    }
    let wild = catalog::family_block(GroupFamily::Gu2, 3).map_err(|e| anyhow!("{e}"))?;
    t.check(
        "gu2(3) is outside the tame catalog",
        wild.class.is_none() && wild.block.k() == 16,
        format!("class={:?} k={}", wild.class, wild.block.k()),
    )?;

    // Bundled datasets all meet their expectations.
    for name in datasets::bundled_names() {
        let records = load_blocks(name)?;
        let mut bad = String::new();
        for rec in &records {
            let matched = matched_tags(&classify::match_templates(&rec.block));
            if batch_status(rec, &matched) == "fail" {
                bad = format!(
                    "{}: matched {matched:?}, expected {:?}",
                    rec.block.group_label, rec.expect
                );
            }
        }
        t.check(&format!("bundled dataset {name}"), bad.is_empty(), bad)?;
    }

    // Round trip: canonical serialisation is a fixed point.
    for name in datasets::bundled_names() {
        let text = datasets::bundled_blocks(name).unwrap();
        let once = doc::write_blocks(&doc::parse_blocks(text).map_err(|e| anyhow!("{e}"))?);
        let twice = doc::write_blocks(&doc::parse_blocks(&once).map_err(|e| anyhow!("{e}"))?);
        t.check(
            &format!("canonical round trip of {name}"),
            once == twice,
            "serialisation is not a fixed point",
        )?;
    }

    // Polynomial identities.
    let mut prod = IntPoly::one();
    for d in [1u64, 2, 3, 4, 6, 12] {
        prod = prod.mul(&polyq::cyclotomic(d));
    }
    let q12: IntPoly = "q^12-1".parse().unwrap();
    t.check(
        "product of cyclotomics over divisors of 12",
        prod == q12,
        format!("got {prod}"),
    )?;
    let golden: IntPoly = "q^2+q-1".parse().unwrap();
    t.check(
        "q^2+q-1 is not cyclotomic",
        polyq::is_cyclotomic(&golden).is_none(),
        "recognised as cyclotomic",
    )?;
    let roots = polyq::positive_integer_roots(&"q^2-5q+6".parse().unwrap())
        .map_err(|e| anyhow!("{e}"))?;
    let root_strings: Vec<String> = roots.iter().map(|r| r.to_string()).collect();
    t.check(
        "integer roots of q^2-5q+6",
        root_strings == ["2", "3"],
        format!("got {root_strings:?}"),
    )?;

    let failures = t.failures;
    if failures == 0 {
        writeln!(out, "selftest: all checks passed")?;
        Ok(0)
    } else {
        writeln!(out, "selftest: {failures} check(s) failed")?;
        Ok(1)
    }
}
