//! Signed Gauss codes in O/U notation.
//!
//! Each component is a cyclic sequence of passes `O3+`, `U1-`, ... (layer,
//! crossing label, crossing sign). Components are separated by `,`; an
//! empty component (a crossingless circle) is written `()` or left blank
//! between commas.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::terms::CrossSign;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Layer {
    Over,
    Under,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Pass {
    pub label: u32,
    pub layer: Layer,
    pub sign: CrossSign,
}

impl fmt::Display for Pass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let l = match self.layer {
            Layer::Over => 'O',
            Layer::Under => 'U',
        };
        write!(f, "{l}{}{}", self.label, self.sign.as_char())
    }
}

/// A virtual link diagram as signed Gauss code.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GaussCode {
    pub components: Vec<Vec<Pass>>,
}

impl GaussCode {
    /// Checks that every label occurs exactly once over and once under with
    /// the same sign.
    pub fn new(components: Vec<Vec<Pass>>) -> Result<Self> {
        let code = GaussCode { components };
        code.check_pairing()?;
        Ok(code)
    }

    fn check_pairing(&self) -> Result<()> {
        let mut seen: BTreeMap<u32, (Option<CrossSign>, Option<CrossSign>)> = BTreeMap::new();
        for p in self.components.iter().flatten() {
            let slot = seen.entry(p.label).or_default();
            let side = match p.layer {
                Layer::Over => &mut slot.0,
                Layer::Under => &mut slot.1,
            };
            if side.is_some() {
                return Err(Error::Pairing(format!("crossing {} has two {:?} passes", p.label, p.layer)));
            }
            *side = Some(p.sign);
        }
        for (label, (o, u)) in seen {
            match (o, u) {
                (Some(a), Some(b)) if a == b => {}
                (Some(_), Some(_)) => return Err(Error::Pairing(format!("crossing {label} has disagreeing signs"))),
                _ => return Err(Error::Pairing(format!("crossing {label} lacks its partner pass"))),
            }
        }
        Ok(())
    }

    pub fn num_crossings(&self) -> usize {
        self.components.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn writhe(&self) -> i64 {
        self.components.iter().flatten().filter(|p| p.layer == Layer::Over).map(|p| p.sign.value()).sum()
    }

    /// Crossing labels with their sign, in order of first appearance.
    pub fn crossings(&self) -> Vec<(u32, CrossSign)> {
        let mut out: Vec<(u32, CrossSign)> = Vec::new();
        for p in self.components.iter().flatten() {
            if !out.iter().any(|(l, _)| *l == p.label) {
                out.push((p.label, p.sign));
            }
        }
        out
    }

    /// Disjoint union; labels of `other` are shifted past those of `self`.
    pub fn disjoint_union(&self, other: &GaussCode) -> GaussCode {
        let shift = self.components.iter().flatten().map(|p| p.label).max().map_or(0, |m| m + 1);
        let mut components = self.components.clone();
        components
            .extend(other.components.iter().map(|c| c.iter().map(|p| Pass { label: p.label + shift, ..*p }).collect()));
        GaussCode { components }
    }
}

impl fmt::Display for GaussCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .components
            .iter()
            .map(|c| if c.is_empty() { "()".to_string() } else { c.iter().map(Pass::to_string).collect() })
            .collect();
        f.write_str(&parts.join(","))
    }
}

fn syntax(column: usize, message: impl Into<String>) -> Error {
    Error::Syntax { line: 1, column, message: message.into() }
}

fn parse_component(chars: &[char], col0: usize) -> Result<Vec<Pass>> {
    let mut passes = Vec::new();
    let mut i = 0;
    let skip_ws = |i: &mut usize| {
        while *i < chars.len() && chars[*i].is_whitespace() {
            *i += 1;
        }
    };
    skip_ws(&mut i);
    if chars[i..].iter().collect::<String>().trim() == "()" {
        return Ok(passes);
    }
    while i < chars.len() {
        skip_ws(&mut i);
        if i >= chars.len() {
            break;
        }
        let layer = match chars[i] {
            'O' | 'o' => Layer::Over,
            'U' | 'u' => Layer::Under,
            c => return Err(syntax(col0 + i + 1, format!("expected 'O' or 'U', found '{c}'"))),
        };
        i += 1;
        let start = i;
        while i < chars.len() && chars[i].is_ascii_digit() {
            i += 1;
        }
        if start == i {
            return Err(syntax(col0 + i + 1, "expected crossing label"));
        }
        let label: u32 = chars[start..i]
            .iter()
            .collect::<String>()
            .parse()
            .map_err(|_| syntax(col0 + start + 1, "label out of range"))?;
        let sign = match chars.get(i) {
            Some('+') => CrossSign::Pos,
            Some('-') | Some('\u{2212}') => CrossSign::Neg,
            _ => return Err(syntax(col0 + i + 1, "expected crossing sign '+' or '-'")),
        };
        i += 1;
        passes.push(Pass { label, layer, sign });
    }
    Ok(passes)
}

pub fn parse_gauss(text: &str) -> Result<GaussCode> {
    if text.trim().is_empty() {
        return Ok(GaussCode::default());
    }
    let chars: Vec<char> = text.chars().collect();
    let mut components = Vec::new();
    let mut start = 0;
    for (i, &c) in chars.iter().chain(std::iter::once(&',')).enumerate() {
        if c == ',' {
            components.push(parse_component(&chars[start..i.min(chars.len())], start)?);
            start = i + 1;
        }
    }
    GaussCode::new(components)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trefoil() {
        let g = parse_gauss("O1+U2+O3+U1+O2+U3+").unwrap();
        assert_eq!(g.components.len(), 1);
        assert_eq!(g.num_crossings(), 3);
        assert!(g.components[0].iter().all(|p| p.sign == CrossSign::Pos));
        assert_eq!(g.writhe(), 3);
        assert_eq!(g.to_string(), "O1+U2+O3+U1+O2+U3+");
    }

    #[test]
    fn curl_is_valid() {
        let g = parse_gauss("O1+U1+").unwrap();
        assert_eq!(g.num_crossings(), 1);
    }

    #[test]
    fn pairing_errors() {
        assert!(matches!(parse_gauss("O1+U1\u{2212}"), Err(Error::Pairing(_))));
        assert!(matches!(parse_gauss("O1+U1-"), Err(Error::Pairing(_))));
        assert!(matches!(parse_gauss("O1+U2+"), Err(Error::Pairing(_))));
        assert!(matches!(parse_gauss("O1+O1+"), Err(Error::Pairing(_))));
    }

    #[test]
    fn syntax_errors() {
        assert!(matches!(parse_gauss("X1+"), Err(Error::Syntax { column: 1, .. })));
        assert!(matches!(parse_gauss("O1+U1"), Err(Error::Syntax { .. })));
        assert!(matches!(parse_gauss("O+U1+"), Err(Error::Syntax { column: 2, .. })));
    }

    #[test]
    fn empty_components() {
        assert_eq!(parse_gauss("").unwrap().components.len(), 0);
        assert_eq!(parse_gauss("()").unwrap().components, vec![vec![]]);
        let g = parse_gauss("(),()").unwrap();
        assert_eq!(g.components.len(), 2);
        assert_eq!(g.to_string(), "(),()");
        let hopf = parse_gauss("O1+U2+, U1+O2+").unwrap();
        assert_eq!(hopf.components.len(), 2);
        assert_eq!(hopf.to_string(), "O1+U2+,U1+O2+");
    }
}
