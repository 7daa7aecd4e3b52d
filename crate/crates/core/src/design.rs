//! Two-level designs and their matrix representations.
//!
//! A design is an ordered set of distinct runs, each run a point of
//! `{-1,+1}^s`. The design matrix prepends a constant `+1` column for the
//! intercept, and the binary matrix carries the image of the runs under the
//! level map `1 -> 0`, `-1 -> 1` together with that ones column.

use crate::error::{Error, Result};
use crate::gf2::BinaryMatrix;

/// An ordered, replication-free set of runs over `s` two-level factors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Design {
    factors: usize,
    runs: Vec<Vec<i8>>,
}

impl Design {
    /// Builds a design from explicit runs, validating every invariant:
    /// at least one factor, entries in `{-1,+1}`, equal-length rows,
    /// and no duplicated run.
    pub fn new(factors: usize, runs: Vec<Vec<i8>>) -> Result<Self> {
        if factors == 0 {
            return Err(Error::NoFactors);
        }
        if runs.is_empty() {
            return Err(Error::EmptyDesign);
        }
        for (i, run) in runs.iter().enumerate() {
            if run.len() != factors {
                return Err(Error::RaggedRow {
                    row: i + 1,
                    expected: factors,
                    found: run.len(),
                });
            }
            for (j, &x) in run.iter().enumerate() {
                if x != 1 && x != -1 {
                    return Err(Error::InvalidLevel {
                        row: i + 1,
                        col: j + 1,
                        value: x,
                    });
                }
            }
        }
        for i in 1..runs.len() {
            if runs[..i].contains(&runs[i]) {
                return Err(Error::DuplicateRun { row: i + 1 });
            }
        }
        Ok(Self { factors, runs })
    }

    /// Parses the text design format: one run per line, whitespace-separated
    /// tokens, `#` comments and blank lines ignored.
    ///
    /// Two token alphabets are accepted. The default is `1`/`+1`/`-1`. When
    /// the file contains no `-1` but does contain a `0`, it is read in 0/1
    /// form and decoded through the inverse of the binary level map, i.e.
    /// `0 -> +1` and `1 -> -1`.
    pub fn parse(text: &str) -> Result<Self> {
        let mut raw: Vec<(usize, Vec<&str>)> = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            raw.push((lineno + 1, line.split_whitespace().collect()));
        }
        if raw.is_empty() {
            return Err(Error::EmptyDesign);
        }
        let has_minus = raw.iter().any(|(_, toks)| toks.contains(&"-1"));
        let has_zero = raw.iter().any(|(_, toks)| toks.contains(&"0"));
        let binary_mode = !has_minus && has_zero;

        let mut runs = Vec::with_capacity(raw.len());
        for (row, toks) in &raw {
            let mut run = Vec::with_capacity(toks.len());
            for tok in toks {
                let level = if binary_mode {
                    match *tok {
                        "0" => 1,
                        "1" => -1,
                        other => {
                            return Err(Error::InvalidToken {
                                row: *row,
                                token: other.to_string(),
                            })
                        }
                    }
                } else {
                    match *tok {
                        "1" | "+1" => 1,
                        "-1" => -1,
                        other => {
                            return Err(Error::InvalidToken {
                                row: *row,
                                token: other.to_string(),
                            })
                        }
                    }
                };
                run.push(level);
            }
            runs.push(run);
        }
        let factors = runs[0].len();
        if factors == 0 {
            return Err(Error::EmptyDesign);
        }
        Self::new(factors, runs)
    }

    /// Rebuilds a design from packed run codes (see [`Design::run_mask`]).
    pub fn from_masks(factors: usize, masks: &[u32]) -> Result<Self> {
        let runs = masks
            .iter()
            .map(|&m| {
                (0..factors)
                    .map(|j| if (m >> j) & 1 == 1 { -1 } else { 1 })
                    .collect()
            })
            .collect();
        Self::new(factors, runs)
    }

    pub fn num_factors(&self) -> usize {
        self.factors
    }

    pub fn num_runs(&self) -> usize {
        self.runs.len()
    }

    pub fn runs(&self) -> &[Vec<i8>] {
        &self.runs
    }

    /// Packed binary code of run `i`: bit `j-1` is set exactly when factor
    /// `j` sits at level `-1`, matching the level map `x -> (1-x)/2`.
    pub fn run_mask(&self, i: usize) -> u32 {
        let mut m = 0u32;
        for (j, &x) in self.runs[i].iter().enumerate() {
            if x == -1 {
                m |= 1 << j;
            }
        }
        m
    }

    /// Sorted list of all run codes; a canonical, order-independent key used
    /// for deterministic tie-breaking between equal-valued designs.
    pub fn canonical_key(&self) -> Vec<u32> {
        let mut key: Vec<u32> = (0..self.num_runs()).map(|i| self.run_mask(i)).collect();
        key.sort_unstable();
        key
    }

    /// The `r x (s+1)` model matrix with the constant `+1` column prepended.
    pub fn to_design_matrix(&self) -> DesignMatrix {
        DesignMatrix::from_design(self)
    }

    /// The `r x (s+1)` bit matrix over F2: a ones column followed by the
    /// runs under the level map `1 -> 0`, `-1 -> 1`.
    pub fn to_binary(&self) -> BinaryMatrix {
        let rows = (0..self.num_runs())
            .map(|i| 1 | (u64::from(self.run_mask(i)) << 1))
            .collect();
        BinaryMatrix::from_rows(rows, self.factors + 1)
    }

    /// Level relabeling that makes the first run all `+1`: every factor at
    /// level `-1` in run 1 has its column negated. Classification and the
    /// D/A/E criteria are invariant under this.
    pub fn normalize_levels(&self) -> Design {
        let first = self.runs[0].clone();
        let runs = self
            .runs
            .iter()
            .map(|run| {
                run.iter()
                    .zip(&first)
                    .map(|(&x, &f)| if f == -1 { -x } else { x })
                    .collect()
            })
            .collect();
        Design {
            factors: self.factors,
            runs,
        }
    }

    /// Factors whose column is constant across all runs (all `+1` or all
    /// `-1`). Such a factor forces the one-letter relation `X_j = c`.
    pub fn constant_factors(&self) -> Vec<usize> {
        (0..self.factors)
            .filter(|&j| {
                let first = self.runs[0][j];
                self.runs.iter().all(|run| run[j] == first)
            })
            .map(|j| j + 1)
            .collect()
    }
}

/// Integer model matrix of a design: `r` rows, `s+1` columns, entries in
/// `{-1,+1}`, column 0 identically `+1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DesignMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<i8>,
}

impl DesignMatrix {
    pub fn from_design(design: &Design) -> Self {
        let rows = design.num_runs();
        let cols = design.num_factors() + 1;
        let mut entries = Vec::with_capacity(rows * cols);
        for run in design.runs() {
            entries.push(1);
            entries.extend_from_slice(run);
        }
        Self {
            rows,
            cols,
            entries,
        }
    }

    pub fn num_rows(&self) -> usize {
        self.rows
    }

    pub fn num_cols(&self) -> usize {
        self.cols
    }

    pub fn entry(&self, i: usize, j: usize) -> i8 {
        self.entries[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[i8] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    /// Drops column 0, recovering the design the matrix was built from.
    pub fn strip_constant_column(&self) -> Result<Design> {
        let runs = (0..self.rows).map(|i| self.row(i)[1..].to_vec()).collect();
        Design::new(self.cols - 1, runs)
    }
}
