//! Steiner-system checks for search solutions.
//!
//! A pair-stage solution for the seed `e^i` is a set of weight-3 words
//! avoiding coordinate `i`; its words, read as 3-sets of coordinates, must
//! form a Steiner triple system on the remaining `n - 1` points. A
//! quad-stage solution additionally holds weight-5 words through `i`; mapping
//! a triple `t` to the block `t ∪ {i}` and a quintuple `q` to `q \ {i}`
//! must yield a Steiner quadruple system on all `n` points.

use starcw_core::BinaryWord;
use std::fmt;
use thiserror::Error;

/// Which design the solution was checked against.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum DesignKind {
    /// Steiner triple system: every pair of points in exactly one block.
    Triples,
    /// Steiner quadruple system: every triple of points in exactly one block.
    Quadruples,
}

/// A verified design extracted from a solution.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct StsReport {
    pub kind: DesignKind,
    /// Number of points carrying the design.
    pub order: usize,
    /// Number of blocks.
    pub blocks: usize,
}

impl fmt::Display for StsReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            DesignKind::Triples => write!(
                f,
                "STS({}): {} blocks, every pair covered exactly once",
                self.order, self.blocks
            ),
            DesignKind::Quadruples => write!(
                f,
                "SQS({}): {} blocks, every triple covered exactly once",
                self.order, self.blocks
            ),
        }
    }
}

/// Why a solution failed the Steiner check.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum StsError {
    #[error("no words; a solution always has blocks")]
    Empty,
    #[error("word {word} has weight {weight}; solution words have weight 3 or 5")]
    UnexpectedWeight { word: BinaryWord, weight: u32 },
    #[error("triple {word} covers the starred coordinate {star}")]
    TripleMeetsStar { word: BinaryWord, star: usize },
    #[error("quintuple {word} misses the starred coordinate {star}")]
    QuintupleMissesStar { word: BinaryWord, star: usize },
    #[error("pair {{{a}, {b}}} covered {count} times, expected exactly once")]
    PairCoverage { a: usize, b: usize, count: u32 },
    #[error("triple {{{a}, {b}, {c}}} covered {count} times, expected exactly once")]
    TripleCoverage { a: usize, b: usize, c: usize, count: u32 },
}

fn coords(word: &BinaryWord) -> Vec<usize> {
    (0..word.len()).filter(|&i| word.bit(i)).collect()
}

/// Checks a solution for the seed `e^star`: weight-3 words only are read as
/// an STS on the `n - 1` points besides `star`; a mix of weight-3 and
/// weight-5 words is read as an SQS on all `n` points via the block maps
/// `t -> t ∪ {star}` and `q -> q \ {star}`. Reports the first violation.
pub fn check_steiner(
    n: usize,
    star: usize,
    words: &[BinaryWord],
) -> Result<StsReport, StsError> {
    assert!(star < n, "star coordinate out of range");
    if words.is_empty() {
        return Err(StsError::Empty);
    }
    let mut blocks: Vec<Vec<usize>> = Vec::with_capacity(words.len());
    let mut saw_quintuple = false;
    for word in words {
        assert_eq!(word.len(), n, "word {word} has mismatched length");
        match word.weight() {
            3 => {
                if word.bit(star) {
                    return Err(StsError::TripleMeetsStar { word: *word, star });
                }
                blocks.push(coords(word));
            }
            5 => {
                if !word.bit(star) {
                    return Err(StsError::QuintupleMissesStar { word: *word, star });
                }
                saw_quintuple = true;
                blocks.push(coords(word).into_iter().filter(|&i| i != star).collect());
            }
            weight => return Err(StsError::UnexpectedWeight { word: *word, weight }),
        }
    }
    if !saw_quintuple {
        // Triple-system check over the points other than `star`.
        let mut count = vec![0u32; n * n];
        for block in &blocks {
            for (pos, &a) in block.iter().enumerate() {
                for &b in &block[pos + 1..] {
                    count[a * n + b] += 1;
                }
            }
        }
        for a in 0..n {
            for b in a + 1..n {
                if a == star || b == star {
                    continue;
                }
                if count[a * n + b] != 1 {
                    return Err(StsError::PairCoverage {
                        a,
                        b,
                        count: count[a * n + b],
                    });
                }
            }
        }
        return Ok(StsReport {
            kind: DesignKind::Triples,
            order: n - 1,
            blocks: blocks.len(),
        });
    }
    // Quadruple-system check over all points: triples pick up `star`.
    for block in &mut blocks {
        if block.len() == 3 {
            block.push(star);
            block.sort_unstable();
        }
    }
    let mut count = vec![0u32; n * n * n];
    for block in &blocks {
        for (pos_a, &a) in block.iter().enumerate() {
            for (pos_b, &b) in block.iter().enumerate().skip(pos_a + 1) {
                for &c in &block[pos_b + 1..] {
                    count[(a * n + b) * n + c] += 1;
                }
            }
        }
    }
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                if count[(a * n + b) * n + c] != 1 {
                    return Err(StsError::TripleCoverage {
                        a,
                        b,
                        c,
                        count: count[(a * n + b) * n + c],
                    });
                }
            }
        }
    }
    Ok(StsReport {
        kind: DesignKind::Quadruples,
        order: n,
        blocks: blocks.len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn from_coords(n: usize, coords: &[usize]) -> BinaryWord {
        BinaryWord::from_coords(n, coords)
    }

    /// The Fano plane on points 1..=7, as weight-3 words avoiding 0.
    fn fano() -> Vec<BinaryWord> {
        [
            [1, 2, 3],
            [1, 4, 5],
            [1, 6, 7],
            [2, 4, 6],
            [2, 5, 7],
            [3, 4, 7],
            [3, 5, 6],
        ]
        .iter()
        .map(|t| from_coords(8, t))
        .collect()
    }

    #[test]
    fn fano_plane_is_an_sts_7() {
        let report = check_steiner(8, 0, &fano()).unwrap();
        assert_eq!(
            report,
            StsReport {
                kind: DesignKind::Triples,
                order: 7,
                blocks: 7
            }
        );
        assert_eq!(
            report.to_string(),
            "STS(7): 7 blocks, every pair covered exactly once"
        );
    }

    #[test]
    fn removing_a_block_names_an_uncovered_pair() {
        let mut words = fano();
        words.pop();
        let err = check_steiner(8, 0, &words).unwrap_err();
        assert_eq!(
            err,
            StsError::PairCoverage {
                a: 3,
                b: 5,
                count: 0
            }
        );
    }

    #[test]
    fn duplicating_a_block_is_caught_too() {
        let mut words = fano();
        words[6] = words[0];
        let err = check_steiner(8, 0, &words).unwrap_err();
        let StsError::PairCoverage { count, .. } = err else {
            panic!("expected a pair-coverage error, got {err}");
        };
        assert!(count != 1);
    }

    #[test]
    fn boolean_quadruple_system_verifies() {
        // Complementing Fano blocks inside the 7 points gives the blocks of
        // the unique SQS(8) together with the triples; as solution words the
        // quadruple blocks show up as weight-5 words through the star.
        let mut words = fano();
        for block in fano() {
            let complement = from_coords(8, &[1, 2, 3, 4, 5, 6, 7]) ^ block;
            words.push(complement ^ BinaryWord::unit(8, 0));
        }
        assert_eq!(words.len(), 14);
        let report = check_steiner(8, 0, &words).unwrap();
        assert_eq!(
            report,
            StsReport {
                kind: DesignKind::Quadruples,
                order: 8,
                blocks: 14
            }
        );
    }

    #[test]
    fn malformed_solutions_are_rejected() {
        assert_eq!(check_steiner(8, 0, &[]).unwrap_err(), StsError::Empty);
        let weight2 = from_coords(8, &[1, 2]);
        assert!(matches!(
            check_steiner(8, 0, &[weight2]),
            Err(StsError::UnexpectedWeight { weight: 2, .. })
        ));
        let through_star = from_coords(8, &[0, 1, 2]);
        assert!(matches!(
            check_steiner(8, 0, &[through_star]),
            Err(StsError::TripleMeetsStar { star: 0, .. })
        ));
        let missing_star = from_coords(8, &[1, 2, 3, 4, 5]);
        assert!(matches!(
            check_steiner(8, 0, &[fano()[0], missing_star]),
            Err(StsError::QuintupleMissesStar { star: 0, .. })
        ));
    }
}
