//! Generator files: one permutation per line in 1-based cycle notation.
//!
//! ```text
//! # D8 acting on a square
//! (1 2 3 4)
//! (1 3)
//! ```
//!
//! `#` starts a comment, blank lines are skipped, `()` is the identity. The
//! degree is the largest point mentioned anywhere in the file.

use std::path::Path;

use crate::error::{GroupError, Result};
use crate::group::FiniteGroup;
use crate::perm::Permutation;

/// A parse failure at a 1-based line number.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LineError {
    pub line: usize,
    pub message: String,
}

type Cycles = Vec<Vec<u32>>;

fn parse_line(text: &str) -> Result<Cycles, String> {
    let mut cycles = Vec::new();
    let mut rest = text.trim();
    while !rest.is_empty() {
        let body_start = rest
            .strip_prefix('(')
            .ok_or_else(|| format!("expected '(' at '{rest}'"))?;
        let close = body_start
            .find(')')
            .ok_or_else(|| "unclosed cycle".to_string())?;
        let mut cycle: Vec<u32> = Vec::new();
        for token in body_start[..close].split_whitespace() {
            let point: u32 = token
                .parse()
                .map_err(|_| format!("invalid point '{token}'"))?;
            if point == 0 {
                return Err("points are 1-based".into());
            }
            if cycle.contains(&(point - 1)) {
                return Err(format!("repeated point {point}"));
            }
            cycle.push(point - 1);
        }
        if cycles
            .iter()
            .any(|c: &Vec<u32>| c.iter().any(|p| cycle.contains(p)))
        {
            return Err("point appears in more than one cycle".into());
        }
        if !cycle.is_empty() {
            cycles.push(cycle);
        }
        rest = body_start[close + 1..].trim_start();
    }
    Ok(cycles)
}

/// Parses generator text into permutations of a common degree.
pub fn parse_generators(text: &str) -> Result<Vec<Permutation>, LineError> {
    let mut lines = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let cycles = parse_line(content).map_err(|message| LineError {
            line: i + 1,
            message,
        })?;
        lines.push((i + 1, cycles));
    }
    if lines.is_empty() {
        return Err(LineError {
            line: 0,
            message: "no generators".into(),
        });
    }
    let degree = lines
        .iter()
        .flat_map(|(_, cs)| cs.iter().flatten())
        .map(|&p| p as usize + 1)
        .max()
        .unwrap_or(1);
    lines
        .into_iter()
        .map(|(line, cycles)| {
            let refs: Vec<&[u32]> = cycles.iter().map(Vec::as_slice).collect();
            Permutation::from_cycles(degree, &refs).map_err(|e| LineError {
                line,
                message: e.to_string(),
            })
        })
        .collect()
}

/// Reads, validates and enumerates the group in a generator file.
pub fn load_group_file(path: impl AsRef<Path>, cap: usize) -> Result<FiniteGroup> {
    let path = path.as_ref();
    let display = path.display().to_string();
    let text = std::fs::read_to_string(path).map_err(|source| GroupError::Io {
        path: display.clone(),
        source,
    })?;
    let gens = parse_generators(&text).map_err(|e| GroupError::GeneratorFile {
        path: display,
        line: e.line,
        message: e.message,
    })?;
    FiniteGroup::enumerate(gens, cap)
}

/// Writes a generator list in the same format.
pub fn format_generators(gens: &[Permutation]) -> String {
    gens.iter().map(|g| format!("{g}\n")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn group(text: &str) -> FiniteGroup {
        FiniteGroup::enumerate(parse_generators(text).unwrap(), 5000).unwrap()
    }

    #[test]
    fn five_cycle() {
        assert_eq!(group("(1 2 3 4 5)").order(), 5);
    }

    #[test]
    fn square_symmetries() {
        let g = group("# D8\n(1 2 3 4)\n\n(1 3)   # a reflection\n");
        assert_eq!(g.order(), 8);
        assert_eq!(g.degree(), 4);
    }

    #[test]
    fn repeated_point() {
        let err = parse_generators("(1 2 3)\n(1 2 2)").unwrap_err();
        assert_eq!(err.line, 2);
        assert!(err.message.contains("repeated point"), "{}", err.message);
    }

    #[test]
    fn malformed_lines() {
        assert!(parse_generators("(1 2").is_err());
        assert!(parse_generators("1 2").is_err());
        assert!(parse_generators("(0 1)").is_err());
        assert!(parse_generators("(1 x)").is_err());
        assert!(parse_generators("(1 2)(2 3)").is_err());
        assert!(parse_generators("# nothing\n").is_err());
    }

    #[test]
    fn identity_line() {
        let gens = parse_generators("()\n(1 2)(3 4)").unwrap();
        assert_eq!(gens.len(), 2);
        assert!(gens[0].is_identity());
        assert_eq!(gens[0].degree(), 4);
    }

    #[test]
    fn format_round_trips() {
        let gens = parse_generators("(1 2 3 4)\n(1 3)\n").unwrap();
        assert_eq!(parse_generators(&format_generators(&gens)).unwrap(), gens);
    }
}
