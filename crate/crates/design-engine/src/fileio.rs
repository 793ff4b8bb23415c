//! The design file format.
//!
//! Line 1: `v b r k lambda`. Then b lines, each with k strictly increasing
//! zero-based point indices separated by single spaces. Lines starting
//! with `#` are comments. A trailing newline is required.

use std::fmt::Write as _;

use thiserror::Error;

use crate::design::Design;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FileError {
    #[error("line {line}: {detail}")]
    Malformed { line: usize, detail: String },
    #[error("missing trailing newline")]
    MissingTrailingNewline,
    #[error("header inconsistent with body: {0}")]
    Inconsistent(String),
}

/// Header as written: (v, b, r, k, lambda).
pub type Header = (u64, u64, u64, u64, u64);

pub fn parse_design(text: &str) -> Result<(Design, Header), FileError> {
    if !text.ends_with('\n') {
        return Err(FileError::MissingTrailingNewline);
    }
    let mut header: Option<Header> = None;
    let mut blocks: Vec<Vec<u32>> = Vec::new();
    for (no, line) in text.lines().enumerate() {
        let line_no = no + 1;
        if line.starts_with('#') {
            continue;
        }
        if line.trim().is_empty() {
            return Err(FileError::Malformed {
                line: line_no,
                detail: "blank line".into(),
            });
        }
        let fields: Vec<&str> = line.split(' ').collect();
        if fields.iter().any(|f| f.is_empty()) {
            return Err(FileError::Malformed {
                line: line_no,
                detail: "fields must be separated by single spaces".into(),
            });
        }
        let nums: Result<Vec<u64>, _> = fields.iter().map(|f| f.parse::<u64>()).collect();
        let nums = nums.map_err(|e| FileError::Malformed {
            line: line_no,
            detail: format!("number: {e}"),
        })?;
        match &mut header {
            None => {
                if nums.len() != 5 {
                    return Err(FileError::Malformed {
                        line: line_no,
                        detail: "header needs `v b r k lambda`".into(),
                    });
                }
                header = Some((nums[0], nums[1], nums[2], nums[3], nums[4]));
            }
            Some((v, _, _, k, _)) => {
                if nums.len() as u64 != *k {
                    return Err(FileError::Malformed {
                        line: line_no,
                        detail: format!("expected {k} points, found {}", nums.len()),
                    });
                }
                let mut block = Vec::with_capacity(nums.len());
                for &x in &nums {
                    if x >= *v {
                        return Err(FileError::Malformed {
                            line: line_no,
                            detail: format!("point {x} out of range for v={v}"),
                        });
                    }
                    block.push(x as u32);
                }
                if !block.windows(2).all(|w| w[0] < w[1]) {
                    return Err(FileError::Malformed {
                        line: line_no,
                        detail: "points must be strictly increasing".into(),
                    });
                }
                blocks.push(block);
            }
        }
    }
    let header = header.ok_or(FileError::Malformed {
        line: 1,
        detail: "empty file".into(),
    })?;
    if blocks.len() as u64 != header.1 {
        return Err(FileError::Inconsistent(format!(
            "header says b={}, file has {} blocks",
            header.1,
            blocks.len()
        )));
    }
    Ok((Design::new(header.0 as usize, blocks), header))
}

pub fn render_design(design: &Design, r: u64, lambda: u64) -> String {
    let mut out = String::new();
    let k = design.k().expect("uniform block size");
    let _ = writeln!(
        out,
        "{} {} {} {} {}",
        design.v,
        design.b(),
        r,
        k,
        lambda
    );
    for block in &design.blocks {
        let line: Vec<String> = block.iter().map(|x| x.to_string()).collect();
        let _ = writeln!(out, "{}", line.join(" "));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip() {
        let d = Design::new(4, vec![vec![0, 1], vec![2, 3], vec![0, 2], vec![1, 3]]);
        let text = render_design(&d, 2, 1);
        let (parsed, header) = parse_design(&text).unwrap();
        assert_eq!(parsed, d);
        assert_eq!(header, (4, 4, 2, 2, 1));
    }

    #[test]
    fn comments_are_skipped() {
        let text = "# a design\n3 1 1 3 2\n0 1 2\n";
        let (d, _) = parse_design(text).unwrap();
        assert_eq!(d.blocks, vec![vec![0, 1, 2]]);
    }

    #[test]
    fn duplicated_point_is_malformed() {
        let text = "3 1 1 3 2\n0 1 1\n";
        assert!(matches!(
            parse_design(text),
            Err(FileError::Malformed { line: 2, .. })
        ));
    }

    #[test]
    fn trailing_newline_required() {
        let text = "3 1 1 3 2\n0 1 2";
        assert!(matches!(
            parse_design(text),
            Err(FileError::MissingTrailingNewline)
        ));
    }

    #[test]
    fn out_of_range_point() {
        let text = "3 1 1 3 2\n0 1 5\n";
        assert!(parse_design(text).is_err());
    }
}
