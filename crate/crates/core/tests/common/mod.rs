//! String-level reference implementations, independent of the library's run
//! encoding and natural conversions.
#![allow(dead_code)]

/// Runs of the decimal-formatted binary representation, e.g. "1011001" ->
/// ["1", "0", "11", "00", "1"].
pub fn runs_of(n: u64) -> Vec<String> {
    let s = format!("{n:b}");
    let mut out: Vec<String> = Vec::new();
    for c in s.chars() {
        match out.last_mut() {
            Some(run) if run.ends_with(c) => run.push(c),
            _ => out.push(c.to_string()),
        }
    }
    out
}

pub fn expand(n: u64, d0: &str, d1: &str, append: bool) -> String {
    runs_of(n)
        .into_iter()
        .map(|run| {
            let pad = if run.starts_with('1') { d1 } else { d0 };
            if append {
                format!("{run}{pad}")
            } else {
                format!("{pad}{run}")
            }
        })
        .collect()
}

pub fn value(bits: &str) -> u128 {
    u128::from_str_radix(bits, 2).expect("fits in u128")
}

/// Sequential prefix-maximum scan.
pub fn records(limit: u64, d0: &str, d1: &str, append: bool) -> Vec<(u64, u128)> {
    let mut best: Option<u128> = None;
    let mut out = Vec::new();
    for n in 1..=limit {
        let v = value(&expand(n, d0, d1, append));
        if best.is_none_or(|b| v > b) {
            best = Some(v);
            out.push((n, v));
        }
    }
    out
}
