//! Indeterminates of the scalar field.
//!
//! The symbol set has a fixed global order: `v` first, then the pair
//! parameters grouped by node (`s_i`, `d_i`, `c_i`, `s'_i` for node `i`),
//! then free symbols registered at runtime. The order is independent of the
//! order in which symbols are first used, so canonical forms and printed
//! output are reproducible.

use std::fmt;
use std::sync::{OnceLock, RwLock};

use crate::error::{Error, Result};

/// Largest node index that owns parameter symbols.
pub const MAX_PARAM_NODE: usize = 8;
const FIRST_FREE: u8 = 1 + 4 * MAX_PARAM_NODE as u8;
const MAX_FREE: usize = 32;

/// The kind of a pair parameter attached to a node.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ParamKind {
    /// `s_i`, the additive parameter of a node in S.
    S,
    /// `d_i`, the multiplicative parameter of a node in D.
    D,
    /// `c_i`, the twist parameter of the partner automorphism.
    C,
    /// `s'_i`, the additive parameter of the partner subalgebra.
    SPrime,
}

impl ParamKind {
    fn offset(self) -> u8 {
        match self {
            ParamKind::S => 0,
            ParamKind::D => 1,
            ParamKind::C => 2,
            ParamKind::SPrime => 3,
        }
    }

    fn prefix(self) -> &'static str {
        match self {
            ParamKind::S => "s",
            ParamKind::D => "d",
            ParamKind::C => "c",
            ParamKind::SPrime => "sp",
        }
    }
}

/// An indeterminate. Smaller indices are more significant in the
/// lexicographic monomial order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Symbol(pub(crate) u8);

fn free_names() -> &'static RwLock<Vec<String>> {
    static NAMES: OnceLock<RwLock<Vec<String>>> = OnceLock::new();
    NAMES.get_or_init(|| RwLock::new(Vec::new()))
}

impl Symbol {
    /// The deformation symbol `v`, with `q = v^2`.
    pub const V: Symbol = Symbol(0);

    /// The parameter of the given kind at node `node` (1-based).
    pub fn param(kind: ParamKind, node: usize) -> Result<Symbol> {
        if node == 0 || node > MAX_PARAM_NODE {
            return Err(Error::Symbol(format!("{}{node}", kind.prefix())));
        }
        Ok(Symbol(1 + 4 * (node as u8 - 1) + kind.offset()))
    }

    /// A free symbol, registered on first use. Names that parse as
    /// structured symbols (`v`, `s2`, `sp1`, ...) resolve to those.
    pub fn named(name: &str) -> Result<Symbol> {
        if let Some(sym) = Self::parse_structured(name) {
            return Ok(sym);
        }
        if name.is_empty() || !name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
            return Err(Error::Symbol(name.to_string()));
        }
        let mut names = free_names().write().expect("symbol registry poisoned");
        if let Some(pos) = names.iter().position(|n| n == name) {
            return Ok(Symbol(FIRST_FREE + pos as u8));
        }
        if names.len() >= MAX_FREE {
            return Err(Error::Symbol(name.to_string()));
        }
        names.push(name.to_string());
        Ok(Symbol(FIRST_FREE + (names.len() - 1) as u8))
    }

    fn parse_structured(name: &str) -> Option<Symbol> {
        if name == "v" {
            return Some(Symbol::V);
        }
        for kind in [ParamKind::SPrime, ParamKind::S, ParamKind::D, ParamKind::C] {
            if let Some(rest) = name.strip_prefix(kind.prefix()) {
                if let Ok(node) = rest.parse::<usize>() {
                    return Symbol::param(kind, node).ok();
                }
            }
        }
        None
    }

    /// The parameter kind and node, for structured parameter symbols.
    pub fn as_param(self) -> Option<(ParamKind, usize)> {
        if self.0 == 0 || self.0 >= FIRST_FREE {
            return None;
        }
        let k = self.0 - 1;
        let kind = match k % 4 {
            0 => ParamKind::S,
            1 => ParamKind::D,
            2 => ParamKind::C,
            _ => ParamKind::SPrime,
        };
        Some((kind, (k / 4) as usize + 1))
    }

    /// True for every symbol except `v`.
    pub fn is_parameter(self) -> bool {
        self != Symbol::V
    }

    /// Printable name.
    pub fn name(self) -> String {
        if self == Symbol::V {
            return "v".to_string();
        }
        if let Some((kind, node)) = self.as_param() {
            return format!("{}{node}", kind.prefix());
        }
        let names = free_names().read().expect("symbol registry poisoned");
        names
            .get((self.0 - FIRST_FREE) as usize)
            .cloned()
            .unwrap_or_else(|| format!("x{}", self.0))
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn structured_names_round_trip() {
        for kind in [ParamKind::S, ParamKind::D, ParamKind::C, ParamKind::SPrime] {
            for node in 1..=MAX_PARAM_NODE {
                let sym = Symbol::param(kind, node).unwrap();
                assert_eq!(sym.as_param(), Some((kind, node)));
                assert_eq!(Symbol::named(&sym.name()).unwrap(), sym);
            }
        }
        assert_eq!(Symbol::named("v").unwrap(), Symbol::V);
    }

    #[test]
    fn free_symbols_are_stable() {
        let a = Symbol::named("alpha").unwrap();
        assert_eq!(Symbol::named("alpha").unwrap(), a);
        assert_eq!(a.name(), "alpha");
        assert!(a > Symbol::param(ParamKind::SPrime, MAX_PARAM_NODE).unwrap());
    }
}
