//! Default moduli: one line per degree, `n=<int> modulus=0x<hex>`, holding
//! the numerically least irreducible polynomial of that degree.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Write;

use crate::poly2::{least_irreducible, Poly2};
use crate::{Error, Result};

/// The checked-in registry table.
pub const DEFAULT_REGISTRY: &str = include_str!("../../data/moduli.txt");

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RegistryEntry {
    pub n: u32,
    pub modulus: Poly2,
}

pub fn parse_registry(text: &str) -> Result<Vec<RegistryEntry>> {
    let mut out = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        out.push(parse_line(line).ok_or(Error::RegistrySyntax { line: idx + 1 })?);
    }
    Ok(out)
}

fn parse_line(line: &str) -> Option<RegistryEntry> {
    let mut parts = line.split_whitespace();
    let n = parts.next()?.strip_prefix("n=")?.parse().ok()?;
    let hex = parts.next()?.strip_prefix("modulus=0x")?;
    let modulus = u64::from_str_radix(hex, 16).ok()?;
    if parts.next().is_some() {
        return None;
    }
    Some(RegistryEntry { n, modulus: Poly2(modulus) })
}

pub fn format_entry(entry: &RegistryEntry) -> String {
    let mut s = String::new();
    let _ = write!(s, "n={} modulus={:#x}", entry.n, entry.modulus.0);
    s
}

pub fn default_modulus(n: u32) -> Result<Poly2> {
    parse_registry(DEFAULT_REGISTRY)?
        .into_iter()
        .find(|e| e.n == n)
        .map(|e| e.modulus)
        .ok_or(Error::MissingRegistryEntry(n))
}

/// Recomputes registry entries from scratch.
pub fn generate(degrees: impl IntoIterator<Item = u32>) -> Vec<RegistryEntry> {
    degrees
        .into_iter()
        .map(|n| RegistryEntry { n, modulus: least_irreducible(n) })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn checked_in_table_is_reproducible() {
        let parsed = parse_registry(DEFAULT_REGISTRY).unwrap();
        assert_eq!(parsed, generate(2..=30));
        let rendered: Vec<String> = parsed.iter().map(format_entry).collect();
        let original: Vec<&str> = DEFAULT_REGISTRY.lines().collect();
        assert_eq!(rendered, original);
    }

    #[test]
    fn rejects_malformed_lines() {
        assert_eq!(parse_registry("n=4 modulus=0x13\nn=5 0x25\n"), Err(Error::RegistrySyntax { line: 2 }));
        assert!(parse_registry("# comment\n\nn=4 modulus=0x13\n").is_ok());
    }
}
