//! Text codecs for the native code file formats.
//!
//! Binary code files carry a header `n=<n> M=<M> count=<k>` followed by `k`
//! blocks of `M` lines each, one n-character word over `{0,1}` per line with
//! coordinate 1 leftmost; blocks are separated by a blank line. Starred word
//! files (ternary codes, anticodes, search solutions) carry a header
//! `n=<n> M=<M>` followed by `M` lines over `{0,1,*}`. Both formats
//! round-trip bit-exactly through these codecs.

use starcw_core::{BinaryCode, BinaryWord, StarredWord, TernaryCode};
use thiserror::Error;

/// Why a code file failed to parse.
#[derive(Debug, Error)]
pub enum FormatError {
    #[error("line {line}: expected header `{expected}`, found `{found}`")]
    Header {
        line: usize,
        expected: &'static str,
        found: String,
    },
    #[error("line {line}: field {field}: {reason}")]
    Field {
        line: usize,
        field: &'static str,
        reason: String,
    },
    #[error("line {line}: expected a {n}-character word over {{{alphabet}}}, found `{found}`")]
    Word {
        line: usize,
        n: usize,
        alphabet: &'static str,
        found: String,
    },
    #[error("line {line}: duplicate word `{found}`")]
    Duplicate { line: usize, found: String },
    #[error("unexpected end of file: expected {expected}")]
    Eof { expected: String },
    #[error("line {line}: unexpected trailing content `{found}`")]
    Trailing { line: usize, found: String },
}

/// Why a parsed binary code was rejected by the importer.
#[derive(Debug, Error)]
pub enum ImportError {
    #[error("code {index}: not an extended perfect code: {reason}")]
    NotPerfect { index: usize, reason: String },
}

/// Lines of `text` paired with 1-based line numbers, blanks dropped for the
/// callers that treat blank lines purely as separators.
struct Lines<'a> {
    iter: core::iter::Enumerate<core::str::Lines<'a>>,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Lines<'a> {
        Lines {
            iter: text.lines().enumerate(),
        }
    }

    /// The next non-blank line as `(line_number, content)`.
    fn next_content(&mut self) -> Option<(usize, &'a str)> {
        for (idx, raw) in self.iter.by_ref() {
            let trimmed = raw.trim_end_matches('\r');
            if !trimmed.trim().is_empty() {
                return Some((idx + 1, trimmed));
            }
        }
        None
    }
}

/// Parses a header of whitespace-separated `key=value` fields with the given
/// keys in order, returning the values.
fn parse_header(
    line_no: usize,
    line: &str,
    expected: &'static str,
    keys: &[&'static str],
) -> Result<Vec<usize>, FormatError> {
    let mut values = Vec::with_capacity(keys.len());
    let mut tokens = line.split_whitespace();
    for key in keys {
        let token = tokens.next().ok_or(FormatError::Header {
            line: line_no,
            expected,
            found: line.to_string(),
        })?;
        let value = token
            .strip_prefix(key)
            .and_then(|rest| rest.strip_prefix('='))
            .ok_or(FormatError::Header {
                line: line_no,
                expected,
                found: line.to_string(),
            })?;
        let value: usize = value.parse().map_err(|_| FormatError::Field {
            line: line_no,
            field: key,
            reason: format!("`{value}` is not a non-negative integer"),
        })?;
        values.push(value);
    }
    if let Some(extra) = tokens.next() {
        return Err(FormatError::Trailing {
            line: line_no,
            found: extra.to_string(),
        });
    }
    Ok(values)
}

fn check_length(n: usize, line_no: usize) -> Result<(), FormatError> {
    if n == 0 || n > 64 {
        return Err(FormatError::Field {
            line: line_no,
            field: "n",
            reason: format!("length {n} out of the supported range 1..=64"),
        });
    }
    Ok(())
}

fn parse_binary_word(line_no: usize, s: &str, n: usize) -> Result<BinaryWord, FormatError> {
    let word_err = || FormatError::Word {
        line: line_no,
        n,
        alphabet: "0,1",
        found: s.to_string(),
    };
    if s.len() != n {
        return Err(word_err());
    }
    let mut bits = 0u64;
    for (i, byte) in s.bytes().enumerate() {
        match byte {
            b'0' => {}
            b'1' => bits |= 1 << i,
            _ => return Err(word_err()),
        }
    }
    Ok(BinaryWord::new(n, bits))
}

fn parse_starred_word(line_no: usize, s: &str, n: usize) -> Result<StarredWord, FormatError> {
    let word_err = || FormatError::Word {
        line: line_no,
        n,
        alphabet: "0,1,*",
        found: s.to_string(),
    };
    if s.len() != n || n < 2 {
        return Err(word_err());
    }
    let mut bits = 0u64;
    let mut star = None;
    for (i, byte) in s.bytes().enumerate() {
        match byte {
            b'0' => {}
            b'1' => bits |= 1 << i,
            b'*' if star.is_none() => star = Some(i),
            _ => return Err(word_err()),
        }
    }
    let Some(star) = star else {
        return Err(word_err());
    };
    // The member with 0 at the starred coordinate; the constructor
    // canonicalizes to the even member of the pair.
    Ok(StarredWord::from_member(star, BinaryWord::new(n, bits)))
}

/// Reads a binary code file. A file with no content at all parses as an
/// empty list; otherwise the header's `count` and `M` are enforced exactly.
pub fn read_binary_codes(text: &str) -> Result<Vec<BinaryCode>, FormatError> {
    let mut lines = Lines::new(text);
    let Some((header_no, header)) = lines.next_content() else {
        return Ok(Vec::new());
    };
    let values = parse_header(
        header_no,
        header,
        "n=<int> M=<int> count=<int>",
        &["n", "M", "count"],
    )?;
    let (n, m, count) = (values[0], values[1], values[2]);
    check_length(n, header_no)?;
    let mut codes = Vec::with_capacity(count);
    for _ in 0..count {
        let mut words = Vec::with_capacity(m);
        for _ in 0..m {
            let (line_no, line) = lines.next_content().ok_or(FormatError::Eof {
                expected: format!("{m} words in each of {count} blocks"),
            })?;
            let word = parse_binary_word(line_no, line, n)?;
            if words.contains(&word) {
                return Err(FormatError::Duplicate {
                    line: line_no,
                    found: line.to_string(),
                });
            }
            words.push(word);
        }
        codes.push(BinaryCode::new(n, words));
    }
    if let Some((line_no, line)) = lines.next_content() {
        return Err(FormatError::Trailing {
            line: line_no,
            found: line.to_string(),
        });
    }
    Ok(codes)
}

/// Serializes binary codes sharing length `n` and size `m`.
pub fn write_binary_codes(n: usize, m: usize, codes: &[BinaryCode]) -> String {
    let mut out = format!("n={n} M={m} count={}\n", codes.len());
    for (index, code) in codes.iter().enumerate() {
        assert_eq!(code.n(), n, "code {index} has mismatched length");
        assert_eq!(code.len(), m, "code {index} has mismatched size");
        if index > 0 {
            out.push('\n');
        }
        for word in code.words() {
            out.push_str(&word.to_string());
            out.push('\n');
        }
    }
    out
}

/// Reads a starred-word file, returning the length and the words in file
/// order. Word count must match the header's `M`; duplicates are rejected.
pub fn read_starred_words(text: &str) -> Result<(usize, Vec<StarredWord>), FormatError> {
    let mut lines = Lines::new(text);
    let Some((header_no, header)) = lines.next_content() else {
        return Err(FormatError::Eof {
            expected: "header `n=<int> M=<int>`".to_string(),
        });
    };
    let values = parse_header(header_no, header, "n=<int> M=<int>", &["n", "M"])?;
    let (n, m) = (values[0], values[1]);
    check_length(n, header_no)?;
    if n < 2 {
        return Err(FormatError::Field {
            line: header_no,
            field: "n",
            reason: "starred words need length at least 2".to_string(),
        });
    }
    let mut words = Vec::with_capacity(m);
    for _ in 0..m {
        let (line_no, line) = lines.next_content().ok_or(FormatError::Eof {
            expected: format!("{m} words"),
        })?;
        let word = parse_starred_word(line_no, line, n)?;
        if words.contains(&word) {
            return Err(FormatError::Duplicate {
                line: line_no,
                found: line.to_string(),
            });
        }
        words.push(word);
    }
    if let Some((line_no, line)) = lines.next_content() {
        return Err(FormatError::Trailing {
            line: line_no,
            found: line.to_string(),
        });
    }
    Ok((n, words))
}

/// Serializes starred words of common length `n`.
pub fn write_starred_words(n: usize, words: &[StarredWord]) -> String {
    let mut out = format!("n={n} M={}\n", words.len());
    for word in words {
        assert_eq!(word.len(), n, "word {word} has mismatched length");
        out.push_str(&word.to_string());
        out.push('\n');
    }
    out
}

/// Reads a starred-word file as a ternary code.
pub fn read_ternary_code(text: &str) -> Result<TernaryCode, FormatError> {
    let (n, words) = read_starred_words(text)?;
    Ok(TernaryCode::new(n, words))
}

/// Serializes a ternary code.
pub fn write_ternary_code(code: &TernaryCode) -> String {
    write_starred_words(code.n(), code.words())
}

/// Verifies and normalizes parsed binary codes: each must be extended
/// perfect, and each is translated by a minimum-weight member so that the
/// zero word is a codeword. The first failing code is reported by its
/// zero-based index in the file.
pub fn import_extended_perfect(codes: Vec<BinaryCode>) -> Result<Vec<BinaryCode>, ImportError> {
    codes
        .into_iter()
        .enumerate()
        .map(|(index, code)| {
            let code = code.normalize_zero();
            match code.check_extended_perfect() {
                Ok(_) => Ok(code),
                Err(issue) => Err(ImportError::NotPerfect {
                    index,
                    reason: issue.to_string(),
                }),
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use starcw_core::binary_codes::extended_hamming;
    use starcw_core::ternary_codes::full_distance3_code;

    #[test]
    fn binary_round_trip_is_bit_exact() {
        let codes = vec![
            extended_hamming(3),
            extended_hamming(3).translate(&BinaryWord::new(8, 0b11)),
        ];
        let text = write_binary_codes(8, 16, &codes);
        let parsed = read_binary_codes(&text).unwrap();
        assert_eq!(parsed, codes);
        assert_eq!(write_binary_codes(8, 16, &parsed), text);
    }

    #[test]
    fn binary_reader_accepts_empty_file() {
        assert_eq!(read_binary_codes("").unwrap(), Vec::new());
        assert_eq!(read_binary_codes("\n  \n").unwrap(), Vec::new());
        let text = write_binary_codes(8, 16, &[]);
        assert_eq!(read_binary_codes(&text).unwrap(), Vec::new());
    }

    #[test]
    fn binary_reader_reports_line_numbers() {
        let mut text = write_binary_codes(8, 16, &[extended_hamming(3)]);
        assert!(text.contains("01011010"));
        text = text.replace("01011010", "01021010");
        let err = read_binary_codes(&text).unwrap_err();
        match err {
            FormatError::Word { line, n, .. } => {
                assert_eq!(n, 8);
                assert!(line > 1, "word errors point at the offending line");
            }
            other => panic!("expected a word error, got {other}"),
        }
    }

    #[test]
    fn binary_reader_rejects_bad_headers_and_counts() {
        assert!(matches!(
            read_binary_codes("n=8 M=16"),
            Err(FormatError::Header { .. })
        ));
        assert!(matches!(
            read_binary_codes("n=8 M=x count=1"),
            Err(FormatError::Field { .. })
        ));
        // Count promises a block that is not there.
        assert!(matches!(
            read_binary_codes("n=4 M=2 count=1"),
            Err(FormatError::Eof { .. })
        ));
        // Extra words after the promised blocks.
        let text = "n=4 M=1 count=1\n0000\n1111\n";
        assert!(matches!(
            read_binary_codes(text),
            Err(FormatError::Trailing { .. })
        ));
        let text = "n=4 M=2 count=1\n0000\n0000\n";
        assert!(matches!(
            read_binary_codes(text),
            Err(FormatError::Duplicate { .. })
        ));
    }

    #[test]
    fn coordinate_one_is_leftmost() {
        let codes = read_binary_codes("n=4 M=1 count=1\n1000\n").unwrap();
        assert_eq!(codes[0].words()[0], BinaryWord::unit(4, 0));
        let (_, words) = read_starred_words("n=4 M=1\n*100\n").unwrap();
        assert_eq!(words[0].star(), 0);
        assert_eq!(words[0].to_string(), "*100");
    }

    #[test]
    fn ternary_round_trip_is_bit_exact() {
        let code = full_distance3_code(3);
        let text = write_ternary_code(&code);
        let parsed = read_ternary_code(&text).unwrap();
        assert_eq!(parsed.words(), code.words());
        assert_eq!(write_ternary_code(&parsed), text);
    }

    #[test]
    fn starred_reader_rejects_malformed_words() {
        for bad in [
            "n=4 M=1\n0000\n",    // no star
            "n=4 M=1\n*1*0\n",    // two stars
            "n=4 M=1\n*10\n",     // short
            "n=4 M=1\n*1001\n",   // long
            "n=4 M=2\n*100\n*100\n", // duplicate
        ] {
            assert!(read_starred_words(bad).is_err(), "accepted {bad:?}");
        }
        assert!(matches!(
            read_starred_words(""),
            Err(FormatError::Eof { .. })
        ));
    }

    #[test]
    fn importer_normalizes_and_rejects() {
        // A translated copy (no longer containing 0) imports back to a code
        // containing 0; an odd translate normalizes to the same even code.
        let base = extended_hamming(3);
        let shifted = base.translate(&BinaryWord::new(8, 0b0110_1001));
        let odd = base.translate(&BinaryWord::unit(8, 3));
        let imported = import_extended_perfect(vec![shifted, odd]).unwrap();
        assert!(imported[0].contains(&BinaryWord::zero(8)));
        assert!(imported[1].contains(&BinaryWord::zero(8)));
        assert_eq!(imported[1], base);

        // Breaking one word destroys perfection and names the culprit.
        let mut words = base.words().to_vec();
        let replaced = words[3] ^ BinaryWord::unit(8, 1) ^ BinaryWord::unit(8, 2);
        words[3] = replaced;
        let broken = BinaryCode::new(8, words);
        let err = import_extended_perfect(vec![base.clone(), broken]).unwrap_err();
        let ImportError::NotPerfect { index, .. } = err;
        assert_eq!(index, 1);

        assert_eq!(import_extended_perfect(Vec::new()).unwrap(), Vec::new());
    }
}
