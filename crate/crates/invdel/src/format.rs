//! Distance matrix output.

use std::fmt::Write;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum MatrixFormat {
    /// Square PHYLIP: a count line, then names padded to ten columns.
    #[default]
    Phylip,
    /// Tab separated with a header row; the corner cell is empty.
    Tsv,
}

const PHYLIP_NAME_WIDTH: usize = 10;

pub fn render(format: MatrixFormat, names: &[&str], matrix: &[Vec<usize>]) -> String {
    match format {
        MatrixFormat::Phylip => phylip(names, matrix),
        MatrixFormat::Tsv => tsv(names, matrix),
    }
}

fn phylip(names: &[&str], matrix: &[Vec<usize>]) -> String {
    let mut out = format!("{}\n", names.len());
    for (name, row) in names.iter().zip(matrix) {
        // Truncate by characters, not bytes.
        let short: String = name.chars().take(PHYLIP_NAME_WIDTH).collect();
        let _ = write!(out, "{short:<PHYLIP_NAME_WIDTH$}");
        for v in row {
            let _ = write!(out, " {v}");
        }
        out.push('\n');
    }
    out
}

fn tsv(names: &[&str], matrix: &[Vec<usize>]) -> String {
    let mut out = String::new();
    for name in names {
        out.push('\t');
        out.push_str(name);
    }
    out.push('\n');
    for (name, row) in names.iter().zip(matrix) {
        out.push_str(name);
        for v in row {
            let _ = write!(out, "\t{v}");
        }
        out.push('\n');
    }
    out
}
