//! Rim hooks, `e`-rims and the `J` map on Young diagrams.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::Partition;

/// A 1-indexed cell `(row, col)` of a Young diagram.
pub type Cell = (usize, usize);

/// The rim hook `R_{i,j}`: cells `(i', j')` of the diagram with `i' >= i`,
/// `j' >= j` and `(i' + 1, j' + 1)` outside the diagram.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RimHook {
    pub start: Cell,
    /// Cells along the rim, from `(i, λ_i)` down to `(λ'_j, j)`.
    pub cells: Vec<Cell>,
    pub size: usize,
    pub arm: usize,
    pub leg: usize,
    pub top: usize,
    pub bottom: usize,
}

pub fn rim_hook(lambda: &Partition, i: usize, j: usize) -> Result<RimHook> {
    if !lambda.contains_cell(i, j) {
        return Err(Error::CellOutside { row: i, col: j });
    }
    let bottom = (i..=lambda.len())
        .take_while(|&r| lambda.part(r) >= j)
        .last()
        .unwrap_or(i);
    let mut cells = Vec::new();
    for r in i..=bottom {
        let lo = j.max(lambda.part(r + 1));
        for c in (lo..=lambda.part(r)).rev() {
            cells.push((r, c));
        }
    }
    let arm = lambda.part(i) - j;
    let leg = bottom - i;
    Ok(RimHook {
        start: (i, j),
        size: cells.len(),
        cells,
        arm,
        leg,
        top: i,
        bottom,
    })
}

/// All rim hooks whose size is divisible by `e`, one per start cell, in
/// row-major order of the start cell.
pub fn e_divisible_hooks(lambda: &Partition, e: i64) -> Vec<RimHook> {
    let e = e.max(1) as usize;
    let conj = lambda.conjugate();
    let mut out = Vec::new();
    for i in 1..=lambda.len() {
        for j in 1..=lambda.part(i) {
            let hook = lambda.part(i) - j + conj.part(j) - i + 1;
            if hook.is_multiple_of(e) {
                out.push(rim_hook(lambda, i, j).expect("cell lies in the diagram"));
            }
        }
    }
    out
}

fn remove_cells(lambda: &Partition, cells: &[Cell]) -> Partition {
    let mut parts = lambda.parts().to_vec();
    for &(r, _) in cells {
        parts[r - 1] -= 1;
    }
    Partition::new(parts).expect("removing rim cells leaves a partition")
}

/// Removes `h` from the diagram. `h` must be exactly the rim hook of `λ`
/// anchored at `h.start`.
pub fn remove_rim_hook(lambda: &Partition, h: &RimHook) -> Result<Partition> {
    let (i, j) = h.start;
    match rim_hook(lambda, i, j) {
        Ok(ref real) if real == h => Ok(remove_cells(lambda, &h.cells)),
        _ => Err(Error::NotRimHook),
    }
}

/// Cells of the rim starting at the last box of row `r` and running to the
/// last box of the first column.
fn rim_from_row(lambda: &Partition, r: usize) -> Vec<Cell> {
    let t = lambda.len();
    let (mut i, mut j) = (r, lambda.part(r));
    let mut cells = vec![(i, j)];
    loop {
        if i < t && lambda.part(i + 1) >= j {
            i += 1;
        } else if j > 1 {
            j -= 1;
        } else {
            break;
        }
        cells.push((i, j));
    }
    cells
}

/// One piece of an `e`-rim. A proper piece is a rim hook of size divisible by
/// `e`; only the final piece can fail to be proper.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RimPiece {
    pub cells: Vec<Cell>,
    pub proper: bool,
}

/// The pieces making up the `e`-rim of a nonempty partition.
pub fn e_rim_pieces(lambda: &Partition, e: i64) -> Result<Vec<RimPiece>> {
    if lambda.is_empty() {
        return Err(Error::EmptyPartition);
    }
    let e = crate::params::check_e(e)? as usize;
    let t = lambda.len();
    let mut pieces = Vec::new();
    let mut r = 1;
    while r <= t {
        let rim = rim_from_row(lambda, r);
        let cut = (e..=rim.len()).step_by(e).find(|&k| {
            let (i, j) = rim[k - 1];
            !(i < t && lambda.part(i + 1) >= j)
        });
        match cut {
            Some(k) => {
                let cells = rim[..k].to_vec();
                r = cells[k - 1].0 + 1;
                pieces.push(RimPiece {
                    cells,
                    proper: true,
                });
            }
            None => {
                pieces.push(RimPiece {
                    cells: rim,
                    proper: false,
                });
                break;
            }
        }
    }
    Ok(pieces)
}

pub fn e_rim(lambda: &Partition, e: i64) -> Result<Vec<Cell>> {
    Ok(e_rim_pieces(lambda, e)?
        .into_iter()
        .flat_map(|p| p.cells)
        .collect())
}

pub fn proper_e_rim(lambda: &Partition, e: i64) -> Result<Vec<Cell>> {
    Ok(e_rim_pieces(lambda, e)?
        .into_iter()
        .filter(|p| p.proper)
        .flat_map(|p| p.cells)
        .collect())
}

/// `λ` with its proper `e`-rim removed.
pub fn remove_proper_e_rim(lambda: &Partition, e: i64) -> Result<Partition> {
    if lambda.is_empty() {
        crate::params::check_e(e)?;
        return Ok(Partition::empty());
    }
    Ok(remove_cells(lambda, &proper_e_rim(lambda, e)?))
}

/// Removes the `e`-rim and adds a box to each of the original rows, except
/// the last one when the rim size is not a multiple of `e`.
pub fn j_map(lambda: &Partition, e: i64) -> Result<Partition> {
    if lambda.is_empty() {
        crate::params::check_e(e)?;
        return Ok(Partition::empty());
    }
    let rim = e_rim(lambda, e)?;
    let t = lambda.len();
    let mut parts = lambda.parts().to_vec();
    for &(r, _) in &rim {
        parts[r - 1] -= 1;
    }
    let skip_last = rim.len() % e as usize != 0;
    for (k, p) in parts.iter_mut().enumerate() {
        if !(skip_last && k + 1 == t) {
            *p += 1;
        }
    }
    Partition::new(parts)
}
