//! Optional on-disk persistence for the Borel-Weil-Bott memo table.
//!
//! When `BWBVERIFY_CACHE_DIR` is set, the CLI loads `bwb-cache.txt` from that
//! directory before working and writes the merged table back afterwards. The
//! format is line-oriented with exact rationals (`p` or `p/q`):
//!
//! ```text
//! 1,-4,0,0,0,1 => acyclic 4 ; 2 4 3 5
//! 1,-3,1,0,1,0 => h 2 1,0,0,0,0,0 ; 2 4
//! ```

use crate::bwb::CohomologyResult;
use crate::error::{KernelError, Result};
use crate::levi::ParabolicData;
use crate::root_system::{Q, Weight, WeylWord};
use num::{BigInt, One};
use std::path::{Path, PathBuf};
use std::str::FromStr;

pub const CACHE_ENV: &str = "BWBVERIFY_CACHE_DIR";
const CACHE_FILE: &str = "bwb-cache.txt";

fn rational_to_string(x: &Q) -> String {
    if x.is_integer() {
        x.to_integer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

fn rational_from_str(s: &str) -> Result<Q> {
    let parse_int = |t: &str| {
        BigInt::from_str(t.trim()).map_err(|_| KernelError::Parse(format!("bad integer {t:?}")))
    };
    if let Some((n, d)) = s.split_once('/') {
        Ok(Q::new(parse_int(n)?, parse_int(d)?))
    } else {
        Ok(Q::new(parse_int(s)?, BigInt::one()))
    }
}

fn weight_to_field(w: &Weight) -> String {
    let parts: Vec<String> = w.coeffs().iter().map(rational_to_string).collect();
    parts.join(",")
}

fn weight_from_field(s: &str, rank: usize) -> Result<Weight> {
    let coords: Vec<Q> = s
        .split(',')
        .map(rational_from_str)
        .collect::<Result<_>>()?;
    if coords.len() != rank {
        return Err(KernelError::Parse(format!(
            "cache line has {} coordinates, expected {rank}",
            coords.len()
        )));
    }
    Ok(Weight::new(coords))
}

fn word_to_field(word: &WeylWord) -> String {
    if word.is_empty() {
        "-".to_string()
    } else {
        word.0
            .iter()
            .map(|j| j.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    }
}

fn word_from_field(s: &str) -> Result<WeylWord> {
    if s.trim() == "-" {
        return Ok(WeylWord(Vec::new()));
    }
    let idx = s
        .split_whitespace()
        .map(|t| {
            usize::from_str(t).map_err(|_| KernelError::Parse(format!("bad word index {t:?}")))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(WeylWord(idx))
}

fn cache_path(dir: &Path) -> PathBuf {
    dir.join(CACHE_FILE)
}

/// Merge the cache file (if present) into the memo table.
pub fn load(parab: &ParabolicData, dir: &Path) -> Result<usize> {
    let path = cache_path(dir);
    if !path.exists() {
        return Ok(0);
    }
    let text = std::fs::read_to_string(&path)?;
    let rank = parab.ambient().rank();
    let mut loaded = 0usize;
    let mut table = parab.bwb_cache.write().unwrap();
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (key, rest) = line
            .split_once("=>")
            .ok_or_else(|| KernelError::Parse(format!("bad cache line {line:?}")))?;
        let mu = weight_from_field(key.trim(), rank)?;
        let (body, word) = rest
            .split_once(';')
            .ok_or_else(|| KernelError::Parse(format!("bad cache line {line:?}")))?;
        let word = word_from_field(word)?;
        let fields: Vec<&str> = body.split_whitespace().collect();
        let value = match fields.as_slice() {
            ["acyclic", vertex] => CohomologyResult::Acyclic {
                singular_vertex: usize::from_str(vertex)
                    .map_err(|_| KernelError::Parse(format!("bad vertex {vertex:?}")))?,
                word,
            },
            ["h", degree, weight] => CohomologyResult::Concentrated {
                degree: usize::from_str(degree)
                    .map_err(|_| KernelError::Parse(format!("bad degree {degree:?}")))?,
                weight: weight_from_field(weight, rank)?,
                word,
            },
            _ => return Err(KernelError::Parse(format!("bad cache line {line:?}"))),
        };
        table.entry(mu).or_insert(value);
        loaded += 1;
    }
    Ok(loaded)
}

/// Write the memo table back, sorted for determinism.
pub fn save(parab: &ParabolicData, dir: &Path) -> Result<usize> {
    std::fs::create_dir_all(dir)?;
    let table = parab.bwb_cache.read().unwrap();
    let mut lines: Vec<String> = table
        .iter()
        .map(|(mu, res)| {
            let payload = match res {
                CohomologyResult::Acyclic {
                    singular_vertex,
                    word,
                } => format!("acyclic {singular_vertex} ; {}", word_to_field(word)),
                CohomologyResult::Concentrated { degree, weight, word } => format!(
                    "h {degree} {} ; {}",
                    weight_to_field(weight),
                    word_to_field(word)
                ),
            };
            format!("{} => {payload}", weight_to_field(mu))
        })
        .collect();
    lines.sort();
    let mut text = lines.join("\n");
    text.push('\n');
    std::fs::write(cache_path(dir), text)?;
    Ok(table.len())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_through_disk() {
        let parab = ParabolicData::e6_p2_owned();
        let dir = std::env::temp_dir().join(format!("bwbverify-cache-test-{}", std::process::id()));
        let mu = Weight::from_ints(&[1, -4, 0, 0, 0, 1]);
        let nu = Weight::from_ints(&[1, -3, 1, 0, 1, 0]);
        parab.bwb_cohomology(&mu).unwrap();
        parab.bwb_cohomology(&nu).unwrap();
        let saved = save(&parab, &dir).unwrap();
        assert!(saved >= 2);

        let fresh = ParabolicData::e6_p2_owned();
        let loaded = load(&fresh, &dir).unwrap();
        assert_eq!(loaded, saved);
        assert_eq!(
            fresh.bwb_cohomology(&mu).unwrap(),
            parab.bwb_cohomology(&mu).unwrap()
        );
        std::fs::remove_dir_all(&dir).ok();
    }
}
