use std::fs;
use std::path::Path;
use std::sync::Arc;

use bbscheme_core::border::SchemePoint;
use bbscheme_core::order_ideal::OrderIdeal;
use bbscheme_core::poly::{standard_x_names, Universe};

use crate::Failure;

fn identifiers(s: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut cur = String::new();
    for ch in s.chars() {
        if ch.is_ascii_alphanumeric() || ch == '_' {
            cur.push(ch);
        } else if !cur.is_empty() {
            out.push(std::mem::take(&mut cur));
        }
    }
    if !cur.is_empty() {
        out.push(cur);
    }
    out.retain(|w| w.starts_with(|c: char| c.is_ascii_alphabetic() || c == '_'));
    out
}

/// Variable names for `n` when given, otherwise the smallest standard set
/// covering every identifier in `text`.
pub fn variable_names(text: &str, n: Option<usize>) -> Result<Vec<String>, Failure> {
    if let Some(n) = n {
        if n == 0 {
            return Err(Failure::input("-n must be positive"));
        }
        return Ok(standard_x_names(n));
    }
    let ids = identifiers(text);
    let short = ["x", "y", "z"];
    if ids.iter().all(|w| short.contains(&w.as_str())) {
        let n = ids
            .iter()
            .filter_map(|w| short.iter().position(|s| s == w))
            .max()
            .map_or(1, |k| k + 1);
        return Ok(standard_x_names(n));
    }
    let indexed: Option<Vec<usize>> = ids
        .iter()
        .map(|w| w.strip_prefix('x').and_then(|d| d.parse::<usize>().ok()).filter(|&k| k > 0))
        .collect();
    match indexed.and_then(|ks| ks.into_iter().max()) {
        Some(n) if n > 3 => Ok(standard_x_names(n)),
        _ => Err(Failure::input(format!(
            "cannot infer the variables of `{text}`; use x, y, z or x1..xn, or pass -n"
        ))),
    }
}

pub fn universe(text: &str, n: Option<usize>) -> Result<Arc<Universe>, Failure> {
    Ok(Universe::with_x(&variable_names(text, n)?)?)
}

pub fn read_file(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::input(format!("cannot read {}: {e}", path.display())))
}

/// An order ideal written inline, or stored in a file either in the text
/// grammar or as a JSON list of exponent maps.
pub fn order_ideal(inline: Option<&str>, file: Option<&Path>, n: Option<usize>) -> Result<OrderIdeal, Failure> {
    match (inline, file) {
        (Some(s), None) => Ok(OrderIdeal::parse(s, &universe(s, n)?)?),
        (None, Some(path)) => {
            let text = read_file(path)?;
            if text.trim_start().starts_with('[') {
                let js: Vec<std::collections::BTreeMap<String, u32>> =
                    serde_json::from_str(&text).map_err(|e| Failure::input(format!("{}: {e}", path.display())))?;
                let names: Vec<String> = js.iter().flat_map(|m| m.keys().cloned()).collect();
                let u = universe(&names.join(" "), n)?;
                Ok(OrderIdeal::from_json(&u, &js)?)
            } else {
                Ok(OrderIdeal::parse(text.trim(), &universe(&text, n)?)?)
            }
        }
        (None, None) => Err(Failure::input("an order ideal is required (-O or --order-ideal-file)")),
        (Some(_), Some(_)) => Err(Failure::input("give either -O or --order-ideal-file, not both")),
    }
}

pub fn point(path: &Path) -> Result<SchemePoint, Failure> {
    Ok(SchemePoint::from_json_str(&read_file(path)?)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inferred_names() {
        assert_eq!(variable_names("1, y", None).unwrap(), vec!["x", "y"]);
        assert_eq!(variable_names("1", None).unwrap(), vec!["x"]);
        assert_eq!(variable_names("1", Some(2)).unwrap(), vec!["x", "y"]);
        assert_eq!(variable_names("1, z^2", None).unwrap().len(), 3);
        assert_eq!(variable_names("1, x5", None).unwrap().len(), 5);
        assert!(variable_names("1, w", None).is_err());
    }
}
