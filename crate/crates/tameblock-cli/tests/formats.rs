//! Document formats, bundled data integrity, and binary smoke tests.

use std::io::Write;
use std::process::{Command, Stdio};

use sha2::{Digest, Sha256};
use tameblock_cli::{datasets, doc};

fn sha256_hex(text: &str) -> String {
    let mut h = Sha256::new();
    h.update(text.as_bytes());
    format!("{:x}", h.finalize())
}

/// The bundled data files are part of the tested surface; any edit must
/// consciously update these pins.
#[test]
fn bundled_data_is_pinned() {
    assert_eq!(
        sha256_hex(datasets::SPORADIC_DIHEDRAL),
        "1dba11443f2c9d5fb15ae52158f6cee766a1e79b08b46839399831a96adfa521"
    );
    assert_eq!(
        sha256_hex(datasets::SPORADIC_SEMIDIHEDRAL),
        "bff8196f3bba494b06caf0becfcad2d0a280d9263ba20f55f154ccc1210603e2"
    );
    assert_eq!(
        sha256_hex(datasets::DEGREE_POLYS),
        "10ddb8ec92feeb89006da98831cc2b95a3c0792b7f659e91bcdde855a575a870"
    );
}

#[test]
fn block_documents_round_trip_canonically() {
    for name in datasets::bundled_names() {
        let text = datasets::bundled_blocks(name).unwrap();
        let records = doc::parse_blocks(text).unwrap();
        assert!(!records.is_empty());
        let once = doc::write_blocks(&records);
        let reparsed = doc::parse_blocks(&once).unwrap();
        assert_eq!(records, reparsed, "{name}: reparse changed the records");
        let twice = doc::write_blocks(&reparsed);
        assert_eq!(once, twice, "{name}: serialisation is not a fixed point");
    }
}

#[test]
fn block_records_carry_expectations_and_notes() {
    let records = doc::parse_blocks(datasets::SPORADIC_SEMIDIHEDRAL).unwrap();
    assert_eq!(records.len(), 3);
    let m11 = &records[0];
    assert_eq!(m11.block.group_label, "M11");
    assert_eq!(m11.expect, ["3B1"]);
    assert!(m11.note.is_some());
    let monster = &records[2];
    assert_eq!(monster.expect, ["3B2", "3C2,1"]);
    assert_eq!(monster.block.k(), 8);
}

#[test]
fn parse_errors_carry_line_numbers() {
    let bad = "block X\n  n 4\n  chr 1 x1\nend\n";
    let err = doc::parse_blocks(bad).unwrap_err();
    assert_eq!(err.line, 3);
    assert!(err.msg.contains("chr"), "{}", err.msg);

    let unterminated = "# header\nblock Y\n  n 4\n";
    let err = doc::parse_blocks(unterminated).unwrap_err();
    assert_eq!(err.line, 2);
    assert!(err.msg.contains("never ends"), "{}", err.msg);

    let bad_height = "block Z\n  n 4\n  char 7 x2 hx\nend\n";
    let err = doc::parse_blocks(bad_height).unwrap_err();
    assert_eq!(err.line, 3);
}

#[test]
fn matrix_documents_round_trip() {
    let text = "\
matrix demo
  brauer 1 2
  row 1 1 0 x4 h0
  row 3 1 1 x4 h0
  row 2 0 1 x6 h1
end
";
    let items = doc::parse_matrices(text).unwrap();
    assert_eq!(items.len(), 1);
    assert_eq!(items[0].0, "demo");
    assert_eq!(items[0].1.k(), 14);
    assert_eq!(items[0].1.l(), 2);
    let written = doc::write_matrices(&items);
    assert_eq!(doc::parse_matrices(&written).unwrap(), items);
    assert_eq!(written, text);
}

#[test]
fn poly_tables_parse() {
    let tables = doc::parse_poly_tables(datasets::DEGREE_POLYS).unwrap();
    let names: Vec<&str> = tables.iter().map(|(n, _)| n.as_str()).collect();
    assert_eq!(names, ["psl2", "pgl2", "gl2", "gu2"]);
    for (name, polys) in &tables {
        assert_eq!(polys.len(), 4, "{name}");
    }
}

fn run_binary(args: &[&str], stdin: Option<&str>) -> (String, String, i32) {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_tameblock"));
    cmd.args(args).stdout(Stdio::piped()).stderr(Stdio::piped());
    if stdin.is_some() {
        cmd.stdin(Stdio::piped());
    }
    let mut child = cmd.spawn().unwrap();
    if let Some(text) = stdin {
        child.stdin.take().unwrap().write_all(text.as_bytes()).unwrap();
    }
    let out = child.wait_with_output().unwrap();
    (
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
        out.status.code().unwrap_or(-1),
    )
}

#[test]
fn binary_core_command() {
    let (stdout, stderr, code) = run_binary(&["core", "8,1", "--ell", "2"], None);
    assert_eq!(stdout, "core=2,1 weight=3\n");
    assert_eq!(stderr, "");
    assert_eq!(code, 0);
}

#[test]
fn binary_batch_bundled_datasets() {
    for name in datasets::bundled_names() {
        let (stdout, _, code) = run_binary(&["batch", name], None);
        assert_eq!(code, 0, "{name}:\n{stdout}");
        assert!(!stdout.contains("FAIL"), "{name}:\n{stdout}");
    }
}

#[test]
fn binary_batch_reports_failures() {
    let dir = std::env::temp_dir().join("tameblock-batch-fail");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("wrong.blocks");
    // These degrees fit 2A and 3B but can never fit 3K, whose four
    // height-zero degrees are three values and their sum.
    std::fs::write(
        &path,
        "block wrong\n  family dihedral\n  n 3\n  char 1 x2\n  char 2 x2\n  char 3 x1\n  expect 3K\nend\n",
    )
    .unwrap();
    let (stdout, _, code) = run_binary(&["batch", path.to_str().unwrap()], None);
    assert_eq!(code, 1, "{stdout}");
    assert!(stdout.contains("FAIL wrong"), "{stdout}");
}

#[test]
fn binary_machine_classify_is_json_lines() {
    let (stdout, _, code) =
        run_binary(&["--format", "machine", "classify", "sporadic-dihedral"], None);
    assert_eq!(code, 0);
    let lines: Vec<&str> = stdout.lines().collect();
    assert_eq!(lines.len(), 8);
    for line in lines {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(v["n"], 3);
        assert_eq!(v["height_source"], "group-order");
        assert!(v["solutions"].as_array().is_some_and(|s| !s.is_empty()));
    }
}

#[test]
fn binary_selftest_passes() {
    let (stdout, _, code) = run_binary(&["selftest"], None);
    assert_eq!(code, 0, "{stdout}");
    assert!(stdout.contains("all checks passed"), "{stdout}");
}

#[test]
fn binary_rejects_unknown_dataset() {
    let (_, stderr, code) = run_binary(&["batch", "no-such-dataset"], None);
    assert_eq!(code, 2);
    assert!(stderr.contains("no such file or bundled dataset"), "{stderr}");
}
