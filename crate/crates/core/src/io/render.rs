//! Plain-text rendering of operator tables.

use crate::poset::FinitePoset;
use crate::table::SetValuedTable;

/// A single cell: the element for a singleton, `{a,b}` otherwise.
pub fn render_cell(p: &FinitePoset, t: &SetValuedTable, x: usize, y: usize) -> String {
    let c = t.cell(x, y);
    match c.single() {
        Some(e) => p.label(e).to_string(),
        None => {
            let items: Vec<&str> = c.iter().map(|e| p.label(e)).collect();
            format!("{{{}}}", items.join(","))
        }
    }
}

/// Rows are the first argument, columns the second, both in element
/// order. Columns are padded to a common width.
pub fn render_table(p: &FinitePoset, t: &SetValuedTable, op: &str) -> String {
    let n = p.len();
    let mut grid = vec![Vec::with_capacity(n + 1); n + 1];
    grid[0].push(op.to_string());
    for y in p.elements() {
        grid[0].push(p.label(y).to_string());
    }
    for x in p.elements() {
        grid[x + 1].push(p.label(x).to_string());
        for y in p.elements() {
            grid[x + 1].push(render_cell(p, t, x, y));
        }
    }
    let width: Vec<usize> = (0..=n).map(|c| grid.iter().map(|r| r[c].chars().count()).max().unwrap_or(0)).collect();
    let mut out = String::new();
    for (i, row) in grid.iter().enumerate() {
        let cells: Vec<String> = row.iter().zip(&width).map(|(s, &w)| format!("{s:<w$}")).collect();
        out.push_str(cells.join(" | ").trim_end());
        out.push('\n');
        if i == 0 {
            let rule: Vec<String> = width.iter().map(|&w| "-".repeat(w)).collect();
            out.push_str(&rule.join("-+-"));
            out.push('\n');
        }
    }
    out
}
