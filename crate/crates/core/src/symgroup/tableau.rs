use std::fmt;

use itertools::Itertools;

use crate::error::{Error, Result};

/// A partition, weakly decreasing positive parts.
pub fn validate_partition(shape: &[u8]) -> Result<()> {
    if shape.iter().any(|&p| p == 0) {
        return Err(Error::BadShape("zero part".into()));
    }
    if shape.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::BadShape("parts must be weakly decreasing".into()));
    }
    Ok(())
}

pub fn partition_size(shape: &[u8]) -> usize {
    shape.iter().map(|&p| p as usize).sum()
}

/// All partitions of `n` in reverse-lexicographic order, `(n)` first.
pub fn partitions(n: usize) -> Vec<Vec<u8>> {
    fn rec(n: usize, max: usize, cur: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if n == 0 {
            out.push(cur.clone());
            return;
        }
        for part in (1..=n.min(max)).rev() {
            cur.push(part as u8);
            rec(n - part, part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// A standard Young tableau: rows increase left to right, columns top to
/// bottom, entries `1..=r` each once.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StandardTableau {
    rows: Vec<Vec<u8>>,
}

impl StandardTableau {
    pub fn new(rows: Vec<Vec<u8>>) -> Result<Self> {
        let shape: Vec<u8> = rows.iter().map(|r| r.len() as u8).collect();
        validate_partition(&shape)?;
        let r = partition_size(&shape);
        let mut seen = vec![false; r + 1];
        for row in &rows {
            for &v in row {
                if v == 0 || v as usize > r || seen[v as usize] {
                    return Err(Error::BadShape("entries must be 1..r without repeats".into()));
                }
                seen[v as usize] = true;
            }
        }
        for row in &rows {
            if row.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::BadShape("rows must increase".into()));
            }
        }
        for i in 1..rows.len() {
            for j in 0..rows[i].len() {
                if rows[i - 1][j] >= rows[i][j] {
                    return Err(Error::BadShape("columns must increase".into()));
                }
            }
        }
        Ok(StandardTableau { rows })
    }

    pub fn shape(&self) -> Vec<u8> {
        self.rows.iter().map(|r| r.len() as u8).collect()
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum()
    }

    pub fn rows(&self) -> &[Vec<u8>] {
        &self.rows
    }

    /// (row, column) of the cell holding `k`, 0-based.
    pub fn position_of(&self, k: u8) -> (usize, usize) {
        for (i, row) in self.rows.iter().enumerate() {
            if let Some(j) = row.iter().position(|&v| v == k) {
                return (i, j);
            }
        }
        unreachable!("standard tableau contains every entry")
    }

    /// Content `c(k) = column - row` of the cell holding `k`.
    pub fn content(&self, k: u8) -> i64 {
        let (i, j) = self.position_of(k);
        j as i64 - i as i64
    }

    /// Swap the cells holding `k` and `k+1`; `None` if the result is not
    /// standard (same row or same column).
    pub fn swap_adjacent(&self, k: u8) -> Option<StandardTableau> {
        let (r1, c1) = self.position_of(k);
        let (r2, c2) = self.position_of(k + 1);
        if r1 == r2 || c1 == c2 {
            return None;
        }
        let mut rows = self.rows.clone();
        rows[r1][c1] = k + 1;
        rows[r2][c2] = k;
        StandardTableau::new(rows).ok()
    }

    /// Row-reading word, used for the deterministic enumeration order.
    pub fn reading_word(&self) -> Vec<u8> {
        self.rows.iter().flatten().copied().collect()
    }
}

impl fmt::Display for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}]",
            self.rows
                .iter()
                .map(|r| format!("[{}]", r.iter().map(|v| v.to_string()).join(",")))
                .join(",")
        )
    }
}

/// All standard tableaux of the given shape, sorted lexicographically by
/// row-reading word.
pub fn standard_tableaux(shape: &[u8]) -> Result<Vec<StandardTableau>> {
    validate_partition(shape)?;
    let r = partition_size(shape);
    let mut rows: Vec<Vec<u8>> = shape.iter().map(|&len| vec![0; len as usize]).collect();
    let mut out = Vec::new();
    fill(1, r as u8, shape, &mut rows, &mut out);
    let mut tableaux: Vec<StandardTableau> = out
        .into_iter()
        .map(|rows| StandardTableau::new(rows).expect("constructed standard"))
        .collect();
    tableaux.sort_by_key(|t| t.reading_word());
    Ok(tableaux)
}

fn fill(next: u8, r: u8, shape: &[u8], rows: &mut Vec<Vec<u8>>, out: &mut Vec<Vec<Vec<u8>>>) {
    if next > r {
        out.push(rows.clone());
        return;
    }
    for i in 0..shape.len() {
        // First empty cell of row i; placement is valid when the cell above
        // is already filled.
        let j = rows[i].iter().position(|&v| v == 0);
        let Some(j) = j else { continue };
        if j >= shape[i] as usize {
            continue;
        }
        if i > 0 && (rows[i - 1].len() <= j || rows[i - 1][j] == 0) {
            continue;
        }
        rows[i][j] = next;
        fill(next + 1, r, shape, rows, out);
        rows[i][j] = 0;
    }
}

/// Number of standard tableaux (dimension of the irreducible module).
pub fn dimension(shape: &[u8]) -> Result<usize> {
    Ok(standard_tableaux(shape)?.len())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tableaux_of_two_one() {
        let ts = standard_tableaux(&[2, 1]).unwrap();
        assert_eq!(ts.len(), 2);
        assert_eq!(ts[0].rows(), &[vec![1, 2], vec![3]]);
        assert_eq!(ts[1].rows(), &[vec![1, 3], vec![2]]);
        assert_eq!(ts[0].content(1), 0);
        assert_eq!(ts[0].content(2), 1);
        assert_eq!(ts[0].content(3), -1);
        assert_eq!(ts[1].content(2), -1);
        assert_eq!(ts[1].content(3), 1);
    }

    #[test]
    fn hook_counts() {
        assert_eq!(dimension(&[3]).unwrap(), 1);
        assert_eq!(dimension(&[1, 1, 1]).unwrap(), 1);
        assert_eq!(dimension(&[2, 2]).unwrap(), 2);
        assert_eq!(dimension(&[3, 2]).unwrap(), 5);
        assert_eq!(dimension(&[2, 2, 1]).unwrap(), 5);
        assert_eq!(dimension(&[3, 2, 1]).unwrap(), 16);
    }

    #[test]
    fn content_multiset_is_a_shape_invariant() {
        for shape in partitions(5) {
            let ts = standard_tableaux(&shape).unwrap();
            let mut sums: Vec<i64> = ts
                .iter()
                .map(|t| (1..=5u8).map(|k| t.content(k)).sum())
                .collect();
            sums.dedup();
            assert_eq!(sums.len(), 1);
        }
    }

    #[test]
    fn rejects_bad_fillings() {
        assert!(StandardTableau::new(vec![vec![1, 3], vec![2, 4]]).is_ok());
        assert!(StandardTableau::new(vec![vec![2, 1], vec![3]]).is_err());
        assert!(StandardTableau::new(vec![vec![1, 2], vec![2]]).is_err());
        assert!(StandardTableau::new(vec![vec![1], vec![2, 3]]).is_err());
    }
}
