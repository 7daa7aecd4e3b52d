//! Shared fixture loading for the integration suites.
#![allow(dead_code)] // each test target uses a different subset

use affdim::Design;
use std::path::PathBuf;

pub fn fixture_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
}

pub fn load_design(name: &str) -> Design {
    let path = fixture_path(name);
    let text = std::fs::read_to_string(&path)
        .unwrap_or_else(|e| panic!("fixture {}: {e}", path.display()));
    Design::parse(&text).unwrap_or_else(|e| panic!("fixture {name}: {e}"))
}

/// `(fixture, factors, runs, det(M'M), class, relations)` for every published
/// optimal design cell reproduced at desk scale.
pub type Cell = (
    &'static str,
    usize,
    usize,
    i64,
    &'static str,
    &'static [(&'static [usize], i8)],
);

pub const FOUR_FACTOR_CELLS: &[Cell] = &[
    (
        "four_factor_r5.txt",
        4,
        5,
        2304,
        "affinely-full-dimensional",
        &[],
    ),
    (
        "four_factor_r6.txt",
        4,
        6,
        5120,
        "affinely-full-dimensional",
        &[],
    ),
    (
        "four_factor_r7.txt",
        4,
        7,
        12288,
        "subset",
        &[(&[1, 2, 3], 1)],
    ),
    (
        "four_factor_r8.txt",
        4,
        8,
        32768,
        "regular",
        &[(&[1, 2, 3], 1)],
    ),
    (
        "four_factor_r9.txt",
        4,
        9,
        53248,
        "affinely-full-dimensional",
        &[],
    ),
    (
        "four_factor_r10.txt",
        4,
        10,
        86016,
        "affinely-full-dimensional",
        &[],
    ),
];

pub const FIVE_FACTOR_CELLS: &[Cell] = &[
    (
        "five_factor_r6.txt",
        5,
        6,
        25600,
        "affinely-full-dimensional",
        &[],
    ),
    (
        "five_factor_r7.txt",
        5,
        7,
        65536,
        "subset",
        &[(&[2, 3, 4, 5], 1)],
    ),
    (
        "five_factor_r8.txt",
        5,
        8,
        262144,
        "regular",
        &[(&[1, 2, 3], 1), (&[1, 4, 5], 1)],
    ),
    (
        "five_factor_r9.txt",
        5,
        9,
        458752,
        "subset",
        &[(&[1, 2, 3], 1)],
    ),
    (
        "five_factor_r10.txt",
        5,
        10,
        802816,
        "affinely-full-dimensional",
        &[],
    ),
];

pub fn class_name(class: affdim::DesignClass) -> &'static str {
    match class {
        affdim::DesignClass::FullFactorial => "full-factorial",
        affdim::DesignClass::Regular => "regular",
        affdim::DesignClass::SubsetFractionalFactorial => "subset",
        affdim::DesignClass::AffinelyFullDimensional => "affinely-full-dimensional",
    }
}
