//! Brute-force enumeration of reachable boards.
//!
//! This module knows nothing about recurrences or generating functions; it
//! applies the move rule and counts distinct boards. Its counts are the
//! ground truth the other engines are checked against.
//!
//! A board reached from the `m >= 1` starting arrangement may still hold a
//! doubled cell. `G(k, m)` counts only the *clean* boards, those where every
//! occupied cell holds exactly one pebble.

use std::collections::{BTreeMap, HashSet};
use std::fmt;

use num_bigint::BigUint;

use crate::error::{Error, Result};

pub type Cell = (usize, usize);

/// Occupied cells with their multiplicities (1 or 2), kept in lexicographic
/// order so equal boards have identical encodings.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Board {
    cells: BTreeMap<Cell, u8>,
}

impl Board {
    pub fn from_cells<I: IntoIterator<Item = (Cell, u8)>>(cells: I) -> Self {
        Board {
            cells: cells.into_iter().filter(|&(_, n)| n > 0).collect(),
        }
    }

    pub fn multiplicity(&self, cell: Cell) -> u8 {
        self.cells.get(&cell).copied().unwrap_or(0)
    }

    pub fn pebbles(&self) -> usize {
        self.cells.values().map(|&n| n as usize).sum()
    }

    pub fn is_clean(&self) -> bool {
        self.cells.values().all(|&n| n == 1)
    }

    pub fn cells(&self) -> impl Iterator<Item = (Cell, u8)> + '_ {
        self.cells.iter().map(|(&c, &n)| (c, n))
    }

    /// Highest occupied level `i + j`.
    pub fn max_level(&self) -> Option<usize> {
        self.cells.keys().map(|&(i, j)| i + j).max()
    }

    fn can_fire(&self, (i, j): Cell) -> bool {
        self.multiplicity((i, j)) > 0
            && self.multiplicity((i + 1, j)) == 0
            && self.multiplicity((i, j + 1)) == 0
    }

    /// Cells whose pebble may move, in lexicographic order.
    pub fn legal_moves(&self) -> Vec<Cell> {
        self.cells
            .keys()
            .copied()
            .filter(|&c| self.can_fire(c))
            .collect()
    }

    /// Remove one pebble at `cell` and place one at each of its two forward
    /// neighbours.
    pub fn apply_move(&self, cell: Cell) -> Result<Board> {
        if !self.can_fire(cell) {
            return Err(Error::IllegalMove {
                i: cell.0,
                j: cell.1,
            });
        }
        let mut next = self.clone();
        let (i, j) = cell;
        match next.cells.get_mut(&cell) {
            Some(n) if *n > 1 => *n -= 1,
            _ => {
                next.cells.remove(&cell);
            }
        }
        next.cells.insert((i + 1, j), 1);
        next.cells.insert((i, j + 1), 1);
        Ok(next)
    }

    /// Canonical text encoding: one `i j mult` line per occupied cell.
    pub fn to_text(&self) -> String {
        self.to_string()
    }

    /// Parse the encoding produced by [`Board::to_text`]. Blank lines and
    /// lines starting with `#` are ignored; cells may appear in any order.
    pub fn from_text(text: &str) -> Result<Board> {
        let mut cells = BTreeMap::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let bad = |reason: &str| Error::BoardParse {
                line: idx + 1,
                reason: reason.to_owned(),
            };
            let fields: Vec<&str> = line.split_whitespace().collect();
            let [i, j, n] = fields[..] else {
                return Err(bad("expected three fields `i j mult`"));
            };
            let i: usize = i.parse().map_err(|_| bad("bad row index"))?;
            let j: usize = j.parse().map_err(|_| bad("bad column index"))?;
            let n: u8 = n.parse().map_err(|_| bad("bad multiplicity"))?;
            if !(1..=2).contains(&n) {
                return Err(bad("multiplicity must be 1 or 2"));
            }
            if cells.insert((i, j), n).is_some() {
                return Err(bad("duplicate cell"));
            }
        }
        Ok(Board { cells })
    }
}

impl fmt::Display for Board {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (&(i, j), n) in &self.cells {
            writeln!(f, "{i} {j} {n}")?;
        }
        Ok(())
    }
}

/// Starting arrangement for `G(k, m)`: one pebble on each of `(0, m+1)` and
/// `(m+1, 0)`, two on each of `(1, m), ..., (m, 1)`. For `m = 0` this is the
/// board after the first step, `{(0,1), (1,0)}`.
pub fn initial_board(m: usize) -> Board {
    let mut cells = vec![((0, m + 1), 1), ((m + 1, 0), 1)];
    cells.extend((1..=m).map(|i| ((i, m + 1 - i), 2)));
    Board::from_cells(cells)
}

/// Per-pebble-count tallies from [`enumerate_counts`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountByPebbles {
    pub m: usize,
    pub max_steps: usize,
    /// Distinct clean boards per pebble total.
    pub clean: BTreeMap<usize, BigUint>,
    /// Distinct boards (clean or not) per pebble total.
    pub visited: BTreeMap<usize, u64>,
}

impl CountByPebbles {
    pub fn clean_count(&self, pebbles: usize) -> Option<&BigUint> {
        self.clean.get(&pebbles)
    }

    /// Largest pebble total whose level was explored completely.
    pub fn last_complete(&self) -> usize {
        2 * self.m + 2 + self.max_steps
    }
}

/// Default cap on stored boards; roughly a gigabyte at the deepest levels.
pub const DEFAULT_STATE_LIMIT: usize = 4_000_000;

/// Breadth-first search over every board reachable from
/// `initial_board(m)` in at most `max_steps` moves.
///
/// Each move adds exactly one pebble, so BFS depth `d` is the level of boards
/// with `2m + 2 + d` pebbles and every level up to `2m + 2 + max_steps` is
/// complete. State counts grow roughly like `2.32^d`; `max_steps = 12` from
/// `m = 0` stores 28528 boards, 16227 of them at the last level.
pub fn enumerate_counts(m: usize, max_steps: usize) -> Result<CountByPebbles> {
    enumerate_counts_with_limit(m, max_steps, DEFAULT_STATE_LIMIT)
}

pub fn enumerate_counts_with_limit(
    m: usize,
    max_steps: usize,
    state_limit: usize,
) -> Result<CountByPebbles> {
    let start = initial_board(m);
    let base = start.pebbles();
    let mut seen: HashSet<Board> = HashSet::new();
    let mut frontier = vec![start.clone()];
    seen.insert(start);

    let mut clean = BTreeMap::new();
    let mut visited = BTreeMap::new();
    for depth in 0..=max_steps {
        let k = base + depth;
        visited.insert(k, frontier.len() as u64);
        clean.insert(
            k,
            BigUint::from(frontier.iter().filter(|b| b.is_clean()).count()),
        );
        if depth == max_steps {
            break;
        }
        let mut next = Vec::new();
        for board in &frontier {
            for cell in board.legal_moves() {
                let child = board.apply_move(cell)?;
                if !seen.contains(&child) {
                    if seen.len() >= state_limit {
                        return Err(Error::ResourceExhausted {
                            limit: state_limit,
                            last_complete: k,
                        });
                    }
                    seen.insert(child.clone());
                    next.push(child);
                }
            }
        }
        frontier = next;
    }
    Ok(CountByPebbles {
        m,
        max_steps,
        clean,
        visited,
    })
}
