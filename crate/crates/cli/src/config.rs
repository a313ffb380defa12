//! Session configuration read from INI-style files.
//!
//! ```ini
//! [lattice]
//! rank = 2
//! embed = 1, √2
//!
//! [algebraic]
//! # kinds: sqrt D, root N, poly c0, c1, ..., 1
//! √2 = sqrt 2
//!
//! [symbols]
//! transcendental = s, u
//!
//! [ring]
//! p = 1, 0
//! # constant or dynamic
//! variant = constant
//! t_symbol = t
//!
//! [deformation]
//! # classical, generic or root:N
//! q_mode = classical
//!
//! [galois]
//! layer = √2
//!
//! [verma]
//! negative = -1, 0; 0, -1
//! ```
//!
//! Lines starting with `#` or `;` are comments. There are no trailing comments.

use std::fmt;
use std::path::Path;

use expoweyl_core::expolyring::{Ring, Variant};
use expoweyl_core::lattice::{LatticeBasis, LatticeVector};
use expoweyl_core::repthy::NegativePart;
use expoweyl_core::scalars::{AlgebraicSymbol, Field};
use expoweyl_core::weylalg::{QMode, WeylAlgebra};
use num_rational::BigRational;

use crate::error::{CliError, CliResult};
use crate::parse::parse_scalar;

/// A configuration value with the position of its first character.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Located {
    pub value: String,
    pub line: usize,
    pub column: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SessionConfig {
    /// Where the configuration came from, for diagnostics.
    pub origin: String,
    pub rank: usize,
    /// Scalar expressions for the images of the basis vectors.
    pub embed: Vec<String>,
    pub algebraic: Vec<AlgebraicSymbol>,
    /// Transcendental symbols beyond the defaults.
    pub transcendentals: Vec<String>,
    pub p: Vec<i64>,
    pub variant: Variant,
    pub q_mode: QMode,
    pub galois_layer: Option<String>,
    pub negative: Vec<Vec<i64>>,
    embed_at: Option<(usize, usize)>,
}

impl Default for SessionConfig {
    fn default() -> Self {
        SessionConfig {
            origin: "<default>".into(),
            rank: 1,
            embed: vec!["1".into()],
            algebraic: Vec::new(),
            transcendentals: Vec::new(),
            p: vec![1],
            variant: Variant::Constant,
            q_mode: QMode::Classical,
            galois_layer: None,
            negative: vec![vec![-1]],
            embed_at: None,
        }
    }
}

/// Everything a subcommand needs, built from a [`SessionConfig`].
#[derive(Debug, Clone)]
pub struct Session {
    pub config: SessionConfig,
    pub field: Field,
    pub algebra: WeylAlgebra,
    pub negative: NegativePart,
}

/// `classical`, `generic` or `root:N`.
pub fn parse_q_mode(s: &str) -> Result<QMode, String> {
    match s.trim() {
        "classical" => Ok(QMode::Classical),
        "generic" => Ok(QMode::Generic),
        other => {
            let n = other
                .strip_prefix("root:")
                .and_then(|n| n.trim().parse::<u32>().ok())
                .filter(|&n| n >= 1)
                .ok_or_else(|| format!("unknown q mode '{other}' (expected classical, generic or root:N)"))?;
            Ok(QMode::RootOfUnity(n))
        }
    }
}

/// Comma-separated integers.
pub fn parse_int_list(s: &str) -> Result<Vec<i64>, String> {
    s.split(',')
        .map(|c| c.trim().parse::<i64>().map_err(|_| format!("'{}' is not an integer", c.trim())))
        .collect()
}

/// Semicolon-separated integer vectors.
pub fn parse_vector_list(s: &str) -> Result<Vec<Vec<i64>>, String> {
    s.split(';').map(parse_int_list).collect()
}

fn parse_algebraic(name: &str, spec: &str) -> Result<AlgebraicSymbol, String> {
    let (kind, arg) = spec.trim().split_once(char::is_whitespace).unwrap_or((spec.trim(), ""));
    let arg = arg.trim();
    let sym = match kind {
        "sqrt" => {
            let d = arg.parse::<i64>().map_err(|_| format!("'{arg}' is not an integer"))?;
            AlgebraicSymbol::sqrt(name, d)
        }
        "root" => {
            let n = arg.parse::<u32>().ok().filter(|&n| n >= 3).ok_or_else(|| format!("root order must be an integer >= 3, got '{arg}'"))?;
            AlgebraicSymbol::root_of_unity(name, n)
        }
        "poly" => {
            let coeffs = arg
                .split(',')
                .map(|c| c.trim().parse::<BigRational>().map_err(|_| format!("'{}' is not a rational number", c.trim())))
                .collect::<Result<Vec<_>, _>>()?;
            AlgebraicSymbol::new(name, coeffs)
        }
        _ => return Err(format!("unknown algebraic kind '{kind}' (expected sqrt, root or poly)")),
    };
    sym.map_err(|e| e.to_string())
}

struct Entry {
    section: String,
    key: String,
    key_col: usize,
    value: Located,
}

fn lex_ini(text: &str, origin: &str) -> CliResult<Vec<Entry>> {
    let err = |line: usize, col: usize, msg: &str| CliError::config(format!("{origin}:{line}:{col}: {msg}"));
    let mut section: Option<String> = None;
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let indent = raw.chars().take_while(|c| c.is_whitespace()).count();
        let body = raw.trim();
        let col = indent + 1;
        if body.is_empty() || body.starts_with('#') || body.starts_with(';') {
            continue;
        }
        if let Some(rest) = body.strip_prefix('[') {
            let Some(name) = rest.strip_suffix(']') else {
                return Err(err(line, col + body.chars().count(), "expected ']' to close the section header"));
            };
            let name = name.trim();
            if name.is_empty() {
                return Err(err(line, col, "empty section name"));
            }
            section = Some(name.to_string());
            continue;
        }
        let Some((key, value)) = body.split_once('=') else {
            return Err(err(line, col, "expected 'key = value'"));
        };
        let Some(sec) = &section else {
            return Err(err(line, col, "key outside of any section"));
        };
        let key = key.trim();
        if key.is_empty() {
            return Err(err(line, col, "missing key before '='"));
        }
        let eq = body.find('=').expect("split_once found '='");
        let lead = body[eq + 1..].chars().take_while(|c| c.is_whitespace()).count();
        let value_col = col + body[..eq].chars().count() + 1 + lead;
        let value = value.trim();
        if out.iter().any(|e: &Entry| e.section == *sec && e.key == key) {
            return Err(err(line, col, &format!("duplicate key '{key}' in [{sec}]")));
        }
        out.push(Entry {
            section: sec.clone(),
            key: key.to_string(),
            key_col: col,
            value: Located { value: value.to_string(), line, column: value_col },
        });
    }
    Ok(out)
}

impl SessionConfig {
    /// Parses configuration text; `origin` names the source in diagnostics.
    pub fn parse(text: &str, origin: &str) -> CliResult<Self> {
        let mut cfg = SessionConfig { origin: origin.to_string(), ..SessionConfig::default() };
        let at = |v: &Located, msg: &str| CliError::config(format!("{origin}:{}:{}: {msg}", v.line, v.column));
        let mut rank: Option<(usize, Located)> = None;
        let mut embed: Option<Located> = None;
        let mut p: Option<Located> = None;
        let mut negative: Option<Located> = None;
        let mut variant = "constant".to_string();
        let mut variant_at: Option<Located> = None;
        let mut t_symbol: Option<String> = None;
        for e in lex_ini(text, origin)? {
            let v = &e.value;
            match (e.section.as_str(), e.key.as_str()) {
                ("lattice", "rank") => {
                    let r = v.value.parse::<usize>().ok().filter(|&r| r >= 1).ok_or_else(|| at(v, "rank must be a positive integer"))?;
                    rank = Some((r, v.clone()));
                }
                ("lattice", "embed") => embed = Some(v.clone()),
                ("algebraic", name) => {
                    if name.contains(char::is_whitespace) {
                        return Err(CliError::config(format!("{origin}:{}:{}: symbol names cannot contain spaces", v.line, e.key_col)));
                    }
                    cfg.algebraic.push(parse_algebraic(name, &v.value).map_err(|m| at(v, &m))?);
                }
                ("symbols", "transcendental") => {
                    cfg.transcendentals = v.value.split(',').map(|s| s.trim().to_string()).filter(|s| !s.is_empty()).collect();
                }
                ("ring", "p") => p = Some(v.clone()),
                ("ring", "variant") => {
                    variant = v.value.clone();
                    variant_at = Some(v.clone());
                }
                ("ring", "t_symbol") => t_symbol = Some(v.value.clone()),
                ("deformation", "q_mode") => cfg.q_mode = parse_q_mode(&v.value).map_err(|m| at(v, &m))?,
                ("galois", "layer") => cfg.galois_layer = Some(v.value.clone()),
                ("verma", "negative") => negative = Some(v.clone()),
                (sec, key) => {
                    return Err(CliError::config(format!("{origin}:{}:{}: unknown key '{key}' in [{sec}]", v.line, e.key_col)));
                }
            }
        }
        cfg.embed = match &embed {
            Some(v) => v.value.split(',').map(|s| s.trim().to_string()).collect(),
            None => vec!["1".into()],
        };
        cfg.rank = match (&rank, &embed) {
            (Some((r, _)), Some(v)) if *r != cfg.embed.len() => {
                return Err(at(v, &format!("rank is {r} but {} embeddings are given", cfg.embed.len())));
            }
            (Some((r, v)), None) if *r != 1 => return Err(at(v, "rank above 1 needs an 'embed' entry in [lattice]")),
            _ => cfg.embed.len(),
        };
        cfg.embed_at = embed.as_ref().map(|v| (v.line, v.column));
        let unit = |i: usize, s: i64| (0..cfg.rank).map(|j| if j == i { s } else { 0 }).collect::<Vec<i64>>();
        cfg.p = match &p {
            Some(v) => {
                let coords = parse_int_list(&v.value).map_err(|m| at(v, &m))?;
                if coords.len() != cfg.rank {
                    return Err(at(v, &format!("p needs {} coordinates, found {}", cfg.rank, coords.len())));
                }
                coords
            }
            None => unit(0, 1),
        };
        cfg.variant = match variant.as_str() {
            "constant" => Variant::Constant,
            "dynamic" => Variant::Dynamic { t_symbol: t_symbol.unwrap_or_else(|| "t".into()) },
            other => {
                let v = variant_at.expect("variant was set from the file");
                return Err(at(&v, &format!("unknown variant '{other}' (expected constant or dynamic)")));
            }
        };
        cfg.negative = match &negative {
            Some(v) => {
                let gens = parse_vector_list(&v.value).map_err(|m| at(v, &m))?;
                if let Some(g) = gens.iter().find(|g| g.len() != cfg.rank) {
                    return Err(at(v, &format!("negative generators need {} coordinates, found {}", cfg.rank, g.len())));
                }
                gens
            }
            None => (0..cfg.rank).map(|i| unit(i, -1)).collect(),
        };
        Ok(cfg)
    }

    pub fn load(path: &Path) -> CliResult<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::config(format!("cannot read {}: {e}", path.display())))?;
        Self::parse(&text, &path.display().to_string())
    }

    fn located(&self, msg: impl fmt::Display) -> CliError {
        match self.embed_at {
            Some((line, col)) => CliError::config(format!("{}:{line}:{col}: {msg}", self.origin)),
            None => CliError::config(format!("{}: {msg}", self.origin)),
        }
    }

    /// Builds the field, ring and algebra described by this configuration.
    pub fn build(&self) -> CliResult<Session> {
        let plain = |msg: String| CliError::config(format!("{}: {msg}", self.origin));
        let mut b = Field::builder();
        for a in &self.algebraic {
            b = b.algebraic(a.clone());
        }
        if let Some(a) = self.q_mode.required_algebraic() {
            if !self.algebraic.iter().any(|s| s.name == a.name) {
                b = b.algebraic(a);
            }
        }
        b = b.default_transcendentals();
        let mut extra: Vec<String> = self.transcendentals.clone();
        for s in self.q_mode.required_transcendentals(self.rank) {
            if !extra.contains(&s) && !expoweyl_core::scalars::DEFAULT_TRANSCENDENTALS.contains(&s.as_str()) {
                extra.push(s);
            }
        }
        for s in extra {
            b = b.transcendental(s);
        }
        let field = b.build().map_err(|e| plain(e.to_string()))?;
        let embed = self
            .embed
            .iter()
            .map(|s| parse_scalar(s, &field).map_err(|e| self.located(format!("embedding '{s}': {}", e.message))))
            .collect::<CliResult<Vec<_>>>()?;
        let basis = LatticeBasis::new(embed).map_err(|e| self.located(e))?;
        let ring = Ring::new(basis, LatticeVector(self.p.clone()), self.variant.clone()).map_err(|e| plain(e.to_string()))?;
        let algebra = WeylAlgebra::new(ring, self.q_mode).map_err(|e| plain(e.to_string()))?;
        let negative = NegativePart::new(self.negative.iter().map(|g| LatticeVector(g.clone())).collect())
            .map_err(|e| plain(format!("[verma] negative: {e}")))?;
        Ok(Session { config: self.clone(), field, algebra, negative })
    }
}
