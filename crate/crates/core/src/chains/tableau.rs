use std::fmt;

use crate::error::{Error, Result};

/// Largest rectangle (in cells) that [`enumerate_tableaux`] will list.
pub const MAX_TABLEAU_CELLS: usize = 16;

/// A word of length `g` over `[1, s+1]` recording which vanishing order is
/// held fixed along each component of an elliptic chain.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WordType {
    letters: Vec<usize>,
    s: usize,
}

impl WordType {
    pub fn new(letters: Vec<usize>, s: usize) -> Result<Self> {
        if let Some(&bad) = letters.iter().find(|&&l| l == 0 || l > s + 1) {
            return Err(Error::InvalidWord {
                letters,
                reason: format!("letter {bad} outside [1, {}]", s + 1),
            });
        }
        Ok(WordType { letters, s })
    }

    /// `(1 2 ... s+1)` repeated `u` times.
    pub fn canonical(s: usize, u: usize) -> Self {
        let letters = (0..(s + 1) * u).map(|j| 1 + j % (s + 1)).collect();
        WordType { letters, s }
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn rank(&self) -> usize {
        self.s
    }

    /// Word length, i.e. the genus of the chain.
    pub fn genus(&self) -> usize {
        self.letters.len()
    }
}

/// A standard Young tableau of rectangular shape.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RectTableau {
    rows: Vec<Vec<usize>>,
}

impl RectTableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let width = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != width) {
            return Err(Error::InvalidTableau("rows of unequal length".into()));
        }
        let cells = rows.len() * width;
        let mut seen = vec![false; cells + 1];
        for &v in rows.iter().flatten() {
            if v == 0 || v > cells || seen[v] {
                return Err(Error::InvalidTableau(format!(
                    "entries must be a permutation of 1..={cells}"
                )));
            }
            seen[v] = true;
        }
        for (i, row) in rows.iter().enumerate() {
            for j in 0..width {
                if j + 1 < width && row[j] >= row[j + 1] {
                    return Err(Error::InvalidTableau(format!(
                        "row {} not increasing",
                        i + 1
                    )));
                }
                if i + 1 < rows.len() && row[j] >= rows[i + 1][j] {
                    return Err(Error::InvalidTableau(format!(
                        "column {} not increasing",
                        j + 1
                    )));
                }
            }
        }
        Ok(RectTableau { rows })
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn num_cols(&self) -> usize {
        self.rows.first().map_or(0, Vec::len)
    }
}

impl fmt::Display for RectTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
            write!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

/// `T[i][j]` is the position of the `(i+1)`-th occurrence of letter `j+1`.
///
/// The word must use every letter equally often and every prefix must
/// contain at least as many `j`'s as `(j+1)`'s.
pub fn word_to_tableau(w: &WordType) -> Result<RectTableau> {
    let cols = w.s + 1;
    let letters = w.letters();
    let invalid = |reason: String| Error::InvalidWord {
        letters: letters.to_vec(),
        reason,
    };
    if !letters.len().is_multiple_of(cols) {
        return Err(invalid(format!(
            "length {} is not a multiple of {cols}",
            letters.len()
        )));
    }
    let height = letters.len() / cols;
    let mut rows = vec![vec![0usize; cols]; height];
    let mut seen = vec![0usize; cols];
    for (pos, &letter) in letters.iter().enumerate() {
        let j = letter - 1;
        if j > 0 && seen[j] >= seen[j - 1] {
            return Err(invalid(format!(
                "letter {letter} at position {} occurs before enough {}'s",
                pos + 1,
                letter - 1
            )));
        }
        if seen[j] >= height {
            return Err(invalid(format!(
                "letter {letter} occurs more than {height} times"
            )));
        }
        rows[seen[j]][j] = pos + 1;
        seen[j] += 1;
    }
    RectTableau::new(rows)
}

/// Inverse of [`word_to_tableau`].
pub fn tableau_to_word(t: &RectTableau) -> WordType {
    let cols = t.num_cols();
    let mut letters = vec![0usize; t.num_rows() * cols];
    for row in t.rows() {
        for (j, &entry) in row.iter().enumerate() {
            letters[entry - 1] = j + 1;
        }
    }
    WordType {
        letters,
        s: cols.saturating_sub(1),
    }
}

/// Every standard Young tableau of the `rows x cols` rectangle, in
/// lexicographic order of their reading words.
pub fn enumerate_tableaux(rows: usize, cols: usize) -> Result<Vec<RectTableau>> {
    let cells = rows * cols;
    if cells > MAX_TABLEAU_CELLS {
        return Err(Error::GuardExceeded {
            what: "enumerate_tableaux",
            size: cells as u128,
            limit: MAX_TABLEAU_CELLS as u128,
        });
    }
    if cols == 0 {
        return Ok(vec![RectTableau {
            rows: vec![Vec::new(); rows],
        }]);
    }

    fn rec(
        word: &mut Vec<usize>,
        counts: &mut Vec<usize>,
        height: usize,
        total: usize,
        out: &mut Vec<RectTableau>,
    ) {
        if word.len() == total {
            let w = WordType {
                letters: word.clone(),
                s: counts.len() - 1,
            };
            out.push(word_to_tableau(&w).expect("ballot words are valid"));
            return;
        }
        for j in 0..counts.len() {
            let allowed = counts[j] < height && (j == 0 || counts[j] < counts[j - 1]);
            if allowed {
                counts[j] += 1;
                word.push(j + 1);
                rec(word, counts, height, total, out);
                word.pop();
                counts[j] -= 1;
            }
        }
    }

    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![0; cols], rows, cells, &mut out);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn word_examples() {
        let t = word_to_tableau(&WordType::new(vec![1, 2, 1, 2], 1).unwrap()).unwrap();
        assert_eq!(t.rows(), &[vec![1, 2], vec![3, 4]]);
        let t = word_to_tableau(&WordType::new(vec![1, 2, 3], 2).unwrap()).unwrap();
        assert_eq!(t.rows(), &[vec![1, 2, 3]]);
        let bad = WordType::new(vec![2, 1, 1, 2], 1).unwrap();
        assert!(matches!(
            word_to_tableau(&bad),
            Err(Error::InvalidWord { .. })
        ));
    }

    #[test]
    fn tableau_examples() {
        let t = RectTableau::new(vec![vec![1, 3], vec![2, 4]]).unwrap();
        assert_eq!(tableau_to_word(&t).letters(), &[1, 1, 2, 2]);
        let t = RectTableau::new(vec![vec![1, 2, 3, 4]]).unwrap();
        assert_eq!(tableau_to_word(&t).letters(), &[1, 2, 3, 4]);
    }

    #[test]
    fn rejects_unbalanced_words() {
        assert!(word_to_tableau(&WordType::new(vec![1, 1, 2], 1).unwrap()).is_err());
        assert!(word_to_tableau(&WordType::new(vec![1, 1, 1, 2], 1).unwrap()).is_err());
        assert!(WordType::new(vec![1, 3], 1).is_err());
    }

    #[test]
    fn rejects_bad_tableaux() {
        assert!(RectTableau::new(vec![vec![2, 1]]).is_err());
        assert!(RectTableau::new(vec![vec![1, 2], vec![3]]).is_err());
        assert!(RectTableau::new(vec![vec![1, 4], vec![2, 3]]).is_err());
        assert!(RectTableau::new(vec![vec![1, 2], vec![2, 4]]).is_err());
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_tableaux(1, 3).unwrap().len(), 1);
        assert_eq!(enumerate_tableaux(2, 2).unwrap().len(), 2);
        assert_eq!(enumerate_tableaux(2, 3).unwrap().len(), 5);
        assert_eq!(enumerate_tableaux(3, 3).unwrap().len(), 42);
        assert!(matches!(
            enumerate_tableaux(3, 6),
            Err(Error::GuardExceeded { .. })
        ));
    }

    #[test]
    fn round_trip_small_rectangles() {
        for rows in 1..=4 {
            for cols in 1..=4 {
                if rows * cols > 12 {
                    continue;
                }
                for t in enumerate_tableaux(rows, cols).unwrap() {
                    assert_eq!(word_to_tableau(&tableau_to_word(&t)).unwrap(), t);
                }
            }
        }
    }

    #[test]
    fn canonical_word_is_row_reading() {
        let w = WordType::canonical(2, 3);
        assert_eq!(w.letters(), &[1, 2, 3, 1, 2, 3, 1, 2, 3]);
        let t = word_to_tableau(&w).unwrap();
        assert_eq!(t.rows(), &[vec![1, 2, 3], vec![4, 5, 6], vec![7, 8, 9]]);
    }
}
