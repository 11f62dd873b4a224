//! Set-valued binary operators `P × P → 2^P` stored as dense tables.

use crate::subset::Subset;

/// A total map from pairs of elements to subsets, row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SetValuedTable {
    n: usize,
    cells: Vec<Subset>,
}

impl SetValuedTable {
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> Subset) -> Self {
        let mut cells = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                cells.push(f(x, y));
            }
        }
        SetValuedTable { n, cells }
    }

    /// A single-valued operator seen as a table of singletons.
    pub fn from_single(n: usize, mut f: impl FnMut(usize, usize) -> usize) -> Self {
        Self::from_fn(n, |x, y| Subset::singleton(n, f(x, y)))
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn cell(&self, x: usize, y: usize) -> &Subset {
        &self.cells[x * self.n + y]
    }

    /// The value of a singleton cell.
    pub fn single(&self, x: usize, y: usize) -> Option<usize> {
        self.cell(x, y).single()
    }

    pub fn is_single_valued(&self) -> bool {
        self.cells.iter().all(|c| c.single().is_some())
    }

    /// First cell that is empty, if any.
    pub fn empty_cell(&self) -> Option<(usize, usize)> {
        let i = self.cells.iter().position(|c| c.is_empty())?;
        Some((i / self.n, i % self.n))
    }

    /// `A * B`: the union of the cells `(x, y)` over `x ∈ A`, `y ∈ B`.
    pub fn lift(&self, a: &Subset, b: &Subset) -> Subset {
        let mut out = Subset::empty(self.n);
        for x in a.iter() {
            for y in b.iter() {
                out.union_with(self.cell(x, y));
            }
        }
        out
    }

    /// `A * y`.
    pub fn lift_left(&self, a: &Subset, y: usize) -> Subset {
        self.lift(a, &Subset::singleton(self.n, y))
    }
}
