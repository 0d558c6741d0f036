//! Data files compiled into the binary.

pub const SPORADIC_DIHEDRAL: &str = include_str!("../data/sporadic-dihedral.blocks");
pub const SPORADIC_SEMIDIHEDRAL: &str = include_str!("../data/sporadic-semidihedral.blocks");
pub const DEGREE_POLYS: &str = include_str!("../data/degree-polys.tables");

pub const BLOCK_DATASETS: &[(&str, &str)] = &[
    ("sporadic-dihedral", SPORADIC_DIHEDRAL),
    ("sporadic-semidihedral", SPORADIC_SEMIDIHEDRAL),
];

/// Bundled block dataset by name, with or without the `.blocks` suffix.
pub fn bundled_blocks(name: &str) -> Option<&'static str> {
    let stem = name.strip_suffix(".blocks").unwrap_or(name);
    BLOCK_DATASETS
        .iter()
        .find(|(n, _)| *n == stem)
        .map(|(_, text)| *text)
}

pub fn bundled_names() -> Vec<&'static str> {
    BLOCK_DATASETS.iter().map(|(n, _)| *n).collect()
}
