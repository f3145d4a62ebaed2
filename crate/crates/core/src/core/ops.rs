//! Primitive square calculus: boundary queries, directed composition,
//! rectangular pasting, and inversion.

use super::*;

/// Direction of a square composition or inversion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Dir {
    Horizontal,
    Vertical,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OpError {
    #[error("boundary is not corner-compatible in this double category")]
    IncompatibleBoundary,
    #[error("squares {0} and {1} are not composable {dir:?}", dir = .2)]
    NotComposable(String, String, Dir),
    #[error("grid is ragged or empty")]
    RaggedGrid,
    #[error("square {0} is not globular for the requested direction")]
    NotGlobular(String),
}

/// All squares of `d` with exactly boundary `b`, in canonical order.
pub fn squares_with_boundary(d: &DoubleCategory, b: &SquareBoundary) -> Result<Vec<SqId>, OpError> {
    let top = d.hmor(b.top);
    let bottom = d.hmor(b.bottom);
    let left = d.vmor(b.left);
    let right = d.vmor(b.right);
    let compatible = top.src == left.src
        && top.tgt == right.src
        && bottom.src == left.tgt
        && bottom.tgt == right.tgt;
    if !compatible {
        return Err(OpError::IncompatibleBoundary);
    }
    Ok(d.boundary_squares(b).to_vec())
}

/// The table entry for `a|b` or `a/b`.
pub fn compose_squares(dir: Dir, a: SqId, b: SqId, d: &DoubleCategory) -> Result<SqId, OpError> {
    let entry = match dir {
        Dir::Horizontal => d.sq_hcomp(a, b),
        Dir::Vertical => d.sq_vcomp(a, b),
    };
    entry.ok_or_else(|| {
        OpError::NotComposable(d.square(a).name.clone(), d.square(b).name.clone(), dir)
    })
}

/// Composite of a rectangular grid of squares: rows are folded with `|`,
/// then the row composites with `/`. Interchange makes the composite
/// independent of fold order.
pub fn paste_grid(d: &DoubleCategory, grid: &[Vec<SqId>]) -> Result<SqId, OpError> {
    if grid.is_empty() || grid[0].is_empty() || grid.iter().any(|r| r.len() != grid[0].len()) {
        return Err(OpError::RaggedGrid);
    }
    let mut rows = Vec::with_capacity(grid.len());
    for row in grid {
        let mut acc = row[0];
        for &s in &row[1..] {
            acc = compose_squares(Dir::Horizontal, acc, s, d)?;
        }
        rows.push(acc);
    }
    let mut acc = rows[0];
    for &s in &rows[1..] {
        acc = compose_squares(Dir::Vertical, acc, s, d)?;
    }
    Ok(acc)
}

/// The unique inverse of a globular square in the requested direction, when
/// it exists. Vertical inversion applies to horizontal-globular squares and
/// horizontal inversion to vertical-globular ones.
pub fn invert_square(dir: Dir, a: SqId, d: &DoubleCategory) -> Result<Option<SqId>, OpError> {
    match dir {
        Dir::Vertical => {
            if !d.is_h_globular(a) {
                return Err(OpError::NotGlobular(d.square(a).name.clone()));
            }
            Ok(d.v_inverse(a))
        }
        Dir::Horizontal => {
            if !d.is_v_globular(a) {
                return Err(OpError::NotGlobular(d.square(a).name.clone()));
            }
            Ok(d.h_inverse(a))
        }
    }
}
