//! Parsing of the run configuration shared by the subcommands.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{One, Zero};
use qsym::qfield::{ParamKind, Symbol};
use qsym::qsp::PairSpec;
use qsym::rootdata::{InvolutionDatum, PairType, WeightVec};
use qsym::{Error, Result, Scalar};

/// Rational values assigned to parameter symbols; symbols left out stay
/// symbolic.
#[derive(Clone, Debug, Default)]
pub struct Assignment(BTreeMap<Symbol, BigRational>);

impl Assignment {
    /// Parses `key=value,...`. Keys are parameter names such as `s2`, `d3`,
    /// `sp1` or `c1`; a key without a node index applies to every node of
    /// the pair that carries it. The value `sym` keeps the symbol free.
    pub fn parse(text: &str, inv: &InvolutionDatum, allowed: &[ParamKind]) -> Result<Self> {
        let mut out = BTreeMap::new();
        for item in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (key, value) = item
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("expected key=value, got `{item}`")))?;
            let value = value.trim();
            let symbols = symbols_for_key(key.trim(), inv)?;
            for sym in symbols {
                let (kind, _) = sym.as_param().expect("parameter symbol");
                if !allowed.contains(&kind) {
                    return Err(Error::Parse(format!("parameter `{}` is not accepted here", sym.name())));
                }
                if value == "sym" {
                    out.remove(&sym);
                    continue;
                }
                let x = parse_rational(value)?;
                check_value(sym, &x, inv)?;
                out.insert(sym, x);
            }
        }
        Ok(Assignment(out))
    }

    pub fn merged(&self, other: &Assignment) -> Assignment {
        let mut out = self.0.clone();
        out.extend(other.0.iter().map(|(k, v)| (*k, v.clone())));
        Assignment(out)
    }

    pub fn apply(&self, spec: &PairSpec<Scalar>) -> Result<PairSpec<Scalar>> {
        let map = &self.0;
        spec.try_map(|x| x.subs(&|s| map.get(&s).cloned()))
    }

    pub fn to_json(&self) -> serde_json::Value {
        self.0
            .iter()
            .map(|(k, v)| (k.name(), serde_json::Value::String(v.to_string())))
            .collect::<serde_json::Map<_, _>>()
            .into()
    }
}

/// The nodes that carry a free parameter of the given kind.
fn carriers(kind: ParamKind, inv: &InvolutionDatum) -> &[usize] {
    match kind {
        ParamKind::S | ParamKind::SPrime => inv.s_set(),
        ParamKind::D | ParamKind::C => inv.d_set(),
    }
}

/// Off its carrier set a parameter is fixed (`s_i = 0`, `d_i = c_i = 1`);
/// `d_i` and `c_i` are never zero.
fn check_value(sym: Symbol, x: &BigRational, inv: &InvolutionDatum) -> Result<()> {
    let (kind, node) = sym.as_param().expect("parameter symbol");
    let additive = matches!(kind, ParamKind::S | ParamKind::SPrime);
    if !additive && x.is_zero() {
        return Err(Error::Invalid(format!("{} must be nonzero", sym.name())));
    }
    if !carriers(kind, inv).contains(&(node - 1)) {
        let fixed = if additive { x.is_zero() } else { x.is_one() };
        if !fixed {
            let want = if additive { 0 } else { 1 };
            return Err(Error::Invalid(format!("{} is fixed to {want} for {}", sym.name(), inv.name())));
        }
    }
    Ok(())
}

fn symbols_for_key(key: &str, inv: &InvolutionDatum) -> Result<Vec<Symbol>> {
    let kinds = [
        ("sprime", ParamKind::SPrime),
        ("sp", ParamKind::SPrime),
        ("s", ParamKind::S),
        ("d", ParamKind::D),
        ("c", ParamKind::C),
    ];
    for (prefix, kind) in kinds {
        if key == prefix {
            return carriers(kind, inv).iter().map(|&i| Symbol::param(kind, i + 1)).collect();
        }
    }
    let sym = Symbol::named(key)?;
    match sym.as_param() {
        Some((_, node)) if node <= inv.rank() => Ok(vec![sym]),
        _ => Err(Error::Parse(format!("`{key}` is not a parameter of {}", inv.name()))),
    }
}

/// Parses an integer or a fraction `p/q`.
pub fn parse_rational(text: &str) -> Result<BigRational> {
    text.parse::<BigRational>()
        .map_err(|_| Error::Parse(format!("`{text}` is not a rational number")))
}

/// Parses comma-separated fundamental-weight coordinates.
pub fn parse_coords(text: &str) -> Result<Vec<i64>> {
    text.split(',')
        .map(|c| {
            c.trim()
                .parse::<i64>()
                .map_err(|_| Error::Parse(format!("`{c}` is not an integer coordinate")))
        })
        .collect()
}

/// The pair selected by `--pair`, `--n` and `--r`. Exceptional rows and
/// `DOUBLE(G)` infer `n` when it is omitted.
pub fn involution(pair: &str, n: Option<usize>, r: Option<usize>) -> Result<InvolutionDatum> {
    let ty: PairType = pair.parse()?;
    let n = match (n, ty.fixed_rank()) {
        (Some(n), _) => n,
        (None, Some(k)) => k,
        (None, None) => return Err(Error::Invalid(format!("--n is required for {ty}"))),
    };
    InvolutionDatum::new(ty, n, r)
}

/// The highest weight with the given fundamental coordinates.
pub fn weight(inv: &InvolutionDatum, coords: &[i64]) -> Result<WeightVec> {
    if coords.len() != inv.rank() {
        return Err(Error::RankMismatch { expected: inv.rank(), got: coords.len() });
    }
    inv.root().from_fundamental(coords)
}

/// Partner subalgebra used by `zonal`.
#[derive(Clone, Debug)]
pub enum Partner {
    /// The standard partner `chi_c(B_{theta,s',c^2 d})` with the given `s'` and `c` values.
    Standard(Assignment),
    /// An arbitrary plain subalgebra, given by its `s` and `d` values.
    Custom(Assignment),
}

impl Partner {
    /// Parses `standard[:sprime=..,c=..]` or `custom[:s1=..,d1=..]`.
    pub fn parse(text: &str, inv: &InvolutionDatum) -> Result<Self> {
        let (mode, rest) = text.split_once(':').unwrap_or((text, ""));
        match mode.trim() {
            "standard" => Ok(Partner::Standard(Assignment::parse(
                rest,
                inv,
                &[ParamKind::SPrime, ParamKind::C],
            )?)),
            "custom" => Ok(Partner::Custom(Assignment::parse(
                rest,
                inv,
                &[ParamKind::S, ParamKind::D],
            )?)),
            other => Err(Error::Parse(format!("unknown partner mode `{other}`"))),
        }
    }

    pub fn is_standard(&self) -> bool {
        matches!(self, Partner::Standard(_))
    }

    /// The partner subalgebra, after the base parameters are applied.
    pub fn spec(&self, inv: &InvolutionDatum, params: &Assignment) -> Result<PairSpec<Scalar>> {
        match self {
            Partner::Standard(a) => params.merged(a).apply(&PairSpec::partner_symbolic(inv)?),
            Partner::Custom(a) => params.merged(a).apply(&PairSpec::symbolic(inv)?),
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        match self {
            Partner::Standard(a) => serde_json::json!({ "mode": "standard", "values": a.to_json() }),
            Partner::Custom(a) => serde_json::json!({ "mode": "custom", "values": a.to_json() }),
        }
    }
}
