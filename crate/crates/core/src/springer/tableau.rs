use std::fmt;

use super::Partition;
use crate::error::{Error, Result};

/// A semistandard Young tableau in English notation: rows weakly
/// increase left to right, columns strictly increase top to bottom.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Tableau {
    shape: Partition,
    rows: Vec<Vec<u32>>,
}

impl Tableau {
    pub fn new(rows: Vec<Vec<u32>>) -> Result<Tableau> {
        let shape = Partition::new(rows.iter().map(Vec::len).collect())?;
        let bad = |msg: &str| Error::InvalidPartition(format!("{msg}: {rows:?}"));
        if rows.iter().flatten().any(|&x| x == 0) {
            return Err(bad("entries must be positive"));
        }
        if rows.iter().any(|r| r.windows(2).any(|w| w[0] > w[1])) {
            return Err(bad("row is not weakly increasing"));
        }
        for pair in rows.windows(2) {
            if pair[1].iter().zip(&pair[0]).any(|(below, above)| below <= above) {
                return Err(bad("column is not strictly increasing"));
            }
        }
        Ok(Tableau { shape, rows })
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    /// Rows from the bottom up, each read left to right.
    pub fn reading_word(&self) -> Vec<u32> {
        self.rows.iter().rev().flatten().copied().collect()
    }

    /// Number of occurrences of each value `1..=max`.
    pub fn content(&self) -> Vec<usize> {
        let max = self.rows.iter().flatten().copied().max().unwrap_or(0) as usize;
        let mut c = vec![0; max];
        for &x in self.rows.iter().flatten() {
            c[x as usize - 1] += 1;
        }
        c
    }
}

impl fmt::Debug for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.rows)
    }
}

/// All semistandard tableaux of shape `shape` in which the value `i`
/// appears `content_i` times. Cells are filled in row-reading order, trying
/// values in increasing order, so the output order is deterministic.
pub fn ssyt(shape: &Partition, content: &Partition) -> Result<Vec<Tableau>> {
    if shape.size() != content.size() {
        return Err(Error::SizeMismatch {
            left: shape.size(),
            right: content.size(),
        });
    }
    let cells: Vec<(usize, usize)> = shape
        .parts()
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
        .collect();
    let mut rows: Vec<Vec<u32>> = shape.parts().iter().map(|&len| vec![0; len]).collect();
    let mut remaining: Vec<usize> = content.parts().to_vec();
    let mut out = Vec::new();
    fill(&cells, 0, &mut rows, &mut remaining, &mut out);
    Ok(out)
}

fn fill(
    cells: &[(usize, usize)],
    k: usize,
    rows: &mut Vec<Vec<u32>>,
    remaining: &mut Vec<usize>,
    out: &mut Vec<Tableau>,
) {
    if k == cells.len() {
        out.push(Tableau {
            shape: Partition::new(rows.iter().map(Vec::len).collect()).expect("shape"),
            rows: rows.clone(),
        });
        return;
    }
    let (r, c) = cells[k];
    let left = if c > 0 { rows[r][c - 1] } else { 1 };
    let above = if r > 0 { rows[r - 1][c] + 1 } else { 1 };
    let lo = left.max(above) as usize;
    for v in lo..=remaining.len() {
        if remaining[v - 1] == 0 {
            continue;
        }
        remaining[v - 1] -= 1;
        rows[r][c] = v as u32;
        fill(cells, k + 1, rows, remaining, out);
        remaining[v - 1] += 1;
    }
    rows[r][c] = 0;
}

/// Charge of a word whose content is a partition.
///
/// Repeatedly extracts a standard subword: take the rightmost 1, then
/// search leftward (wrapping around to the right end when needed) for a 2,
/// then a 3, and so on through every letter still present. Letter `i + 1`
/// gets the index of letter `i`, plus one if the search wrapped. The
/// charge is the sum of all indices over all extracted subwords.
pub fn charge(word: &[u32]) -> usize {
    let mut letters: Vec<Option<u32>> = word.iter().copied().map(Some).collect();
    let mut total = 0;
    loop {
        let present = letters.iter().flatten().count();
        if present == 0 {
            return total;
        }
        let mut k = 1u32;
        let mut pos = match letters.iter().rposition(|&x| x == Some(1)) {
            Some(p) => p,
            None => panic!("word content is not a partition: {word:?}"),
        };
        letters[pos] = None;
        let mut index = 0;
        loop {
            k += 1;
            if !letters.contains(&Some(k)) {
                break;
            }
            let found_left = letters[..pos].iter().rposition(|&x| x == Some(k));
            pos = match found_left {
                Some(p) => p,
                None => {
                    index += 1;
                    letters.iter().rposition(|&x| x == Some(k)).expect("present")
                }
            };
            total += index;
            letters[pos] = None;
        }
    }
}

/// `n(mu) - charge` of the reading word, `mu` the content.
pub fn cocharge(t: &Tableau) -> usize {
    let content = Partition::new(t.content()).expect("content of a tableau here is a partition");
    content.n_statistic() - charge(&t.reading_word())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn tableau_validation() {
        assert!(Tableau::new(vec![vec![1, 2], vec![3]]).is_ok());
        assert!(Tableau::new(vec![vec![1, 2], vec![2]]).is_ok());
        assert!(Tableau::new(vec![vec![1, 1], vec![1]]).is_err());
        assert!(Tableau::new(vec![vec![2, 1]]).is_err());
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(ssyt(&p(&[2, 1]), &p(&[2, 1])).unwrap().len(), 1);
        assert_eq!(ssyt(&p(&[2, 1]), &p(&[1, 1, 1])).unwrap().len(), 2);
        assert!(ssyt(&p(&[1, 1]), &p(&[2])).unwrap().is_empty());
        assert!(ssyt(&p(&[2]), &p(&[1])).is_err());
        // Kostka numbers K_{(3,2),(2,2,1)} = 2, K_{(3,2,1),(1^6)} = 16.
        assert_eq!(ssyt(&p(&[3, 2]), &p(&[2, 2, 1])).unwrap().len(), 2);
        assert_eq!(ssyt(&p(&[3, 2, 1]), &p(&[1; 6])).unwrap().len(), 16);
    }

    #[test]
    fn enumerated_tableaux_are_semistandard() {
        for t in ssyt(&p(&[3, 2, 1]), &p(&[2, 2, 1, 1])).unwrap() {
            assert!(Tableau::new(t.rows().to_vec()).is_ok());
            assert_eq!(t.content(), vec![2, 2, 1, 1]);
        }
    }

    #[test]
    fn cocharge_examples() {
        let row = Tableau::new(vec![vec![1, 1, 1, 1]]).unwrap();
        assert_eq!(cocharge(&row), 0);
        let mut cc: Vec<usize> = ssyt(&p(&[2, 1]), &p(&[1, 1, 1]))
            .unwrap()
            .iter()
            .map(cocharge)
            .collect();
        cc.sort_unstable();
        assert_eq!(cc, vec![1, 2]);
        let col = Tableau::new((1..=4).map(|i| vec![i]).collect()).unwrap();
        assert_eq!(cocharge(&col), 6);
    }

    #[test]
    fn charge_of_standard_words() {
        // Charge of a permutation word: sum of indices of the letters.
        assert_eq!(charge(&[1, 2, 3]), 3);
        assert_eq!(charge(&[3, 2, 1]), 0);
        assert_eq!(charge(&[2, 1, 3]), 1);
    }
}
