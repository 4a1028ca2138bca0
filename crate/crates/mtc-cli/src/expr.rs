//! The category-expression language.
//!
//! Grammar (recursive descent, ASCII, whitespace-insensitive between
//! tokens):
//!
//! ```text
//! expr    := term ('*' term)*
//! term    := func | atom
//! func    := ('rev' | 'adj' | 'gauge2') '(' expr (',' genspec)? ')'
//! atom    := 'qg' '(' series ',' INT ')'
//! series  := 'sl' INT | 'so' INT | 'sp' INT | 'g2'
//! genspec := 'gen=' label          (adj only)
//! ```
//!
//! `*` is the external (Deligne) product and associates to the left; the
//! AST never holds a right-nested product, which keeps `parse(render(e))
//! = e` exact. `gauge2` is the Z/2 permutation gauging of the square of
//! its argument: the squaring and the swap action are implicit.

use mtc::catops::{deligne_product, reverse, tensor_subcategory};
use mtc::gauge::{gauged_fusion_with, SqrtTwistChoice};
use mtc::liealg::{LieSpec, RootData, Series};
use mtc::modular::verlinde;
use mtc::ringtools::FusionRing;
use mtc::ModularData64;

/// Surface name of an algebra, kept verbatim for exact rendering.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeriesName {
    Sl(u32),
    So(u32),
    Sp(u32),
    G2,
}

impl SeriesName {
    /// The library series and rank this name denotes. Names that are
    /// syntactically fine but denote an unsupported rank (for example
    /// `so4`) resolve here and are rejected by the root-system layer.
    pub fn to_spec(self, level: u32) -> LieSpec {
        match self {
            SeriesName::Sl(n) => LieSpec::new(Series::A, (n as usize).saturating_sub(1), level),
            SeriesName::So(n) if n % 2 == 1 => {
                LieSpec::new(Series::B, (n as usize - 1) / 2, level)
            }
            SeriesName::So(n) => LieSpec::new(Series::D, n as usize / 2, level),
            SeriesName::Sp(n) => LieSpec::new(Series::C, n as usize / 2, level),
            SeriesName::G2 => LieSpec::new(Series::G2, 2, level),
        }
    }
}

impl std::fmt::Display for SeriesName {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SeriesName::Sl(n) => write!(f, "sl{n}"),
            SeriesName::So(n) => write!(f, "so{n}"),
            SeriesName::Sp(n) => write!(f, "sp{n}"),
            SeriesName::G2 => write!(f, "g2"),
        }
    }
}

/// A parsed category expression.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CatExpr {
    /// `qg(series, level)`: quantum-group modular data.
    Qg { name: SeriesName, level: u32 },
    /// `rev(expr)`: reversed braiding.
    Rev(Box<CatExpr>),
    /// `adj(expr)` or `adj(expr, gen=LABEL)`: tensor subcategory
    /// generated by one simple object (default: the highest-root weight
    /// object of a `qg` argument).
    Adj { inner: Box<CatExpr>, generator: Option<String> },
    /// `a * b`: external product, left-associated.
    Prod(Box<CatExpr>, Box<CatExpr>),
    /// `gauge2(expr)`: fusion ring of the Z/2 permutation gauging of the
    /// square of the argument.
    Gauge2(Box<CatExpr>),
}

impl CatExpr {
    /// Canonical renderer; `parse` inverts it exactly.
    pub fn render(&self) -> String {
        match self {
            CatExpr::Qg { name, level } => format!("qg({name},{level})"),
            CatExpr::Rev(e) => format!("rev({})", e.render()),
            CatExpr::Adj { inner, generator: None } => format!("adj({})", inner.render()),
            CatExpr::Adj { inner, generator: Some(g) } => {
                format!("adj({},gen={})", inner.render(), g)
            }
            CatExpr::Prod(a, b) => format!("{} * {}", a.render(), b.render()),
            CatExpr::Gauge2(e) => format!("gauge2({})", e.render()),
        }
    }
}

/// A parse failure, with the byte offset it was detected at.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseError {
    Syntax { offset: usize, message: String },
    Arity { offset: usize, message: String },
    UnknownSeries { offset: usize, name: String },
}

impl ParseError {
    pub fn offset(&self) -> usize {
        match self {
            ParseError::Syntax { offset, .. }
            | ParseError::Arity { offset, .. }
            | ParseError::UnknownSeries { offset, .. } => *offset,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            ParseError::Syntax { .. } => "SyntaxError",
            ParseError::Arity { .. } => "ArityError",
            ParseError::UnknownSeries { .. } => "UnknownSeries",
        }
    }

    pub fn message(&self) -> String {
        match self {
            ParseError::Syntax { message, .. } | ParseError::Arity { message, .. } => {
                message.clone()
            }
            ParseError::UnknownSeries { name, .. } => {
                format!("'{name}' is not a recognized algebra (try sl<n>, so<n>, sp<2n>, g2)")
            }
        }
    }
}

pub fn parse(text: &str) -> Result<CatExpr, ParseError> {
    let mut p = Parser { src: text.as_bytes(), pos: 0 };
    let expr = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(ParseError::Syntax {
            offset: p.pos,
            message: "unexpected trailing input".into(),
        });
    }
    Ok(expr)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8, context: &str) -> Result<(), ParseError> {
        self.skip_ws();
        if self.eat(c) {
            Ok(())
        } else {
            Err(ParseError::Syntax {
                offset: self.pos,
                message: format!("expected '{}' {context}", c as char),
            })
        }
    }

    /// `[a-zA-Z][a-zA-Z0-9]*`, with its starting offset.
    fn ident(&mut self) -> Option<(String, usize)> {
        self.skip_ws();
        let start = self.pos;
        match self.peek() {
            Some(c) if c.is_ascii_alphabetic() => {}
            _ => return None,
        }
        while matches!(self.peek(), Some(c) if c.is_ascii_alphanumeric()) {
            self.pos += 1;
        }
        Some((String::from_utf8_lossy(&self.src[start..self.pos]).into_owned(), start))
    }

    fn integer(&mut self, context: &str) -> Result<u32, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(ParseError::Syntax {
                offset: start,
                message: format!("expected an integer {context}"),
            });
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .expect("digits are utf8")
            .parse()
            .map_err(|_| ParseError::Syntax {
                offset: start,
                message: format!("integer out of range {context}"),
            })
    }

    fn expr(&mut self) -> Result<CatExpr, ParseError> {
        let mut acc = self.term()?;
        loop {
            self.skip_ws();
            if self.eat(b'*') {
                let rhs = self.term()?;
                acc = CatExpr::Prod(Box::new(acc), Box::new(rhs));
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<CatExpr, ParseError> {
        let Some((name, offset)) = self.ident() else {
            return Err(ParseError::Syntax {
                offset: self.pos,
                message: "expected an expression".into(),
            });
        };
        match name.as_str() {
            "qg" => self.qg_atom(),
            "rev" => {
                let inner = self.unary_argument("rev")?;
                Ok(CatExpr::Rev(Box::new(inner)))
            }
            "gauge2" => {
                let inner = self.unary_argument("gauge2")?;
                Ok(CatExpr::Gauge2(Box::new(inner)))
            }
            "adj" => self.adj_func(),
            _ => Err(ParseError::Syntax {
                offset,
                message: format!("unknown name '{name}' (expected qg, rev, adj, or gauge2)"),
            }),
        }
    }

    fn unary_argument(&mut self, func: &str) -> Result<CatExpr, ParseError> {
        self.expect(b'(', &format!("after {func}"))?;
        let inner = self.expr()?;
        self.skip_ws();
        if self.peek() == Some(b',') {
            return Err(ParseError::Arity {
                offset: self.pos,
                message: format!("{func} takes exactly one argument"),
            });
        }
        self.expect(b')', &format!("to close {func}(...)"))?;
        Ok(inner)
    }

    fn adj_func(&mut self) -> Result<CatExpr, ParseError> {
        self.expect(b'(', "after adj")?;
        let inner = self.expr()?;
        self.skip_ws();
        let generator = if self.eat(b',') {
            Some(self.genspec()?)
        } else {
            None
        };
        self.skip_ws();
        if self.peek() == Some(b',') {
            return Err(ParseError::Arity {
                offset: self.pos,
                message: "adj takes an expression and at most one gen= specifier".into(),
            });
        }
        self.expect(b')', "to close adj(...)")?;
        Ok(CatExpr::Adj { inner: Box::new(inner), generator })
    }

    fn genspec(&mut self) -> Result<String, ParseError> {
        self.skip_ws();
        let at = self.pos;
        match self.ident() {
            Some((kw, _)) if kw == "gen" => {}
            _ => {
                return Err(ParseError::Syntax {
                    offset: at,
                    message: "expected gen=LABEL".into(),
                })
            }
        }
        if !self.eat(b'=') {
            return Err(ParseError::Syntax {
                offset: self.pos,
                message: "expected '=' after gen".into(),
            });
        }
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_alphanumeric() || c == b'+') {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(ParseError::Syntax {
                offset: start,
                message: "expected a label after gen=".into(),
            });
        }
        Ok(String::from_utf8_lossy(&self.src[start..self.pos]).into_owned())
    }

    fn qg_atom(&mut self) -> Result<CatExpr, ParseError> {
        self.expect(b'(', "after qg")?;
        let Some((name, offset)) = self.ident() else {
            return Err(ParseError::Syntax {
                offset: self.pos,
                message: "expected an algebra name".into(),
            });
        };
        let series = resolve_series(&name, offset)?;
        self.expect(b',', "between algebra and level")?;
        let level = self.integer("level")?;
        self.skip_ws();
        if self.peek() == Some(b',') {
            return Err(ParseError::Arity {
                offset: self.pos,
                message: "qg takes an algebra name and a level".into(),
            });
        }
        self.expect(b')', "to close qg(...)")?;
        Ok(CatExpr::Qg { name: series, level })
    }
}

fn resolve_series(name: &str, offset: usize) -> Result<SeriesName, ParseError> {
    let unknown = || ParseError::UnknownSeries { offset, name: name.to_string() };
    if name == "g2" {
        return Ok(SeriesName::G2);
    }
    for (prefix, make) in [
        ("sl", SeriesName::Sl as fn(u32) -> SeriesName),
        ("so", SeriesName::So as fn(u32) -> SeriesName),
        ("sp", SeriesName::Sp as fn(u32) -> SeriesName),
    ] {
        if let Some(digits) = name.strip_prefix(prefix) {
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return Err(unknown());
            }
            let n: u32 = digits.parse().map_err(|_| unknown())?;
            if n == 0 {
                return Err(unknown());
            }
            if prefix == "sp" && n % 2 == 1 {
                return Err(unknown());
            }
            return Ok(make(n));
        }
    }
    Err(unknown())
}

/// The value of an evaluated expression: modular data, or a bare fusion
/// ring for `gauge2` (the gauging's S-matrix is out of scope).
#[derive(Debug)]
pub enum Built {
    Category(ModularData64),
    Ring(FusionRing),
}

/// Evaluation failures that are not parse errors: operand type
/// mismatches and unresolvable generator labels. Library errors travel
/// separately.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EvalError {
    Type { message: String },
    UnknownLabel { label: String },
    MissingGenerator,
}

impl EvalError {
    pub fn kind(&self) -> &'static str {
        match self {
            EvalError::Type { .. } => "TypeError",
            EvalError::UnknownLabel { .. } => "UnknownLabel",
            EvalError::MissingGenerator => "MissingGenerator",
        }
    }

    pub fn message(&self) -> String {
        match self {
            EvalError::Type { message } => message.clone(),
            EvalError::UnknownLabel { label } => {
                format!("label '{label}' does not name a simple object of the argument")
            }
            EvalError::MissingGenerator => {
                "adj needs gen=LABEL unless its argument is qg(...)".into()
            }
        }
    }
}

/// Either kind of evaluation failure.
#[derive(Debug)]
pub enum BuildError {
    Eval(EvalError),
    Math(mtc::Error),
}

impl From<EvalError> for BuildError {
    fn from(e: EvalError) -> Self {
        BuildError::Eval(e)
    }
}

impl From<mtc::Error> for BuildError {
    fn from(e: mtc::Error) -> Self {
        BuildError::Math(e)
    }
}

/// Evaluates an expression. `tolerance` is the integer-rounding
/// tolerance used for every Verlinde and gauged multiplicity.
pub fn eval(expr: &CatExpr, tolerance: f64) -> Result<Built, BuildError> {
    match expr {
        CatExpr::Qg { name, level } => {
            let md = mtc::kac_peterson(&name.to_spec(*level))?;
            Ok(Built::Category(md))
        }
        CatExpr::Rev(inner) => {
            let md = eval_category(inner, tolerance, "rev")?;
            Ok(Built::Category(reverse(&md)))
        }
        CatExpr::Adj { inner, generator } => {
            let md = eval_category(inner, tolerance, "adj")?;
            let g = match generator {
                Some(label) => md
                    .label_index(label)
                    .ok_or_else(|| EvalError::UnknownLabel { label: label.clone() })?,
                None => default_generator(inner, &md)?,
            };
            Ok(Built::Category(tensor_subcategory(&md, &[g])?))
        }
        CatExpr::Prod(a, b) => {
            let left = eval_category(a, tolerance, "the left factor of *")?;
            let right = eval_category(b, tolerance, "the right factor of *")?;
            Ok(Built::Category(deligne_product(&left, &right)))
        }
        CatExpr::Gauge2(inner) => {
            let md = eval_category(inner, tolerance, "gauge2")?;
            let sqrt = SqrtTwistChoice::principal(&md);
            Ok(Built::Ring(gauged_fusion_with(&md, &sqrt, tolerance)?))
        }
    }
}

/// Evaluates an expression that must denote modular data.
pub fn eval_category(
    expr: &CatExpr,
    tolerance: f64,
    context: &str,
) -> Result<ModularData64, BuildError> {
    match eval(expr, tolerance)? {
        Built::Category(md) => Ok(md),
        Built::Ring(_) => Err(EvalError::Type {
            message: format!(
                "{context} needs modular data, but gauge2 produces only a fusion ring"
            ),
        }
        .into()),
    }
}

/// The fusion ring an expression denotes: the Verlinde ring of modular
/// data, or the gauged ring itself.
pub fn eval_ring(expr: &CatExpr, tolerance: f64) -> Result<FusionRing, BuildError> {
    match eval(expr, tolerance)? {
        Built::Category(md) => Ok(verlinde(&md, tolerance)?),
        Built::Ring(ring) => Ok(ring),
    }
}

/// Default `adj` generator: the highest-root weight label, available
/// exactly when the argument is a literal `qg(...)`.
fn default_generator(inner: &CatExpr, md: &ModularData64) -> Result<usize, BuildError> {
    let CatExpr::Qg { name, level } = inner else {
        return Err(EvalError::MissingGenerator.into());
    };
    let spec = name.to_spec(*level);
    let root_data = RootData::new(spec.series, spec.rank)?;
    let label = mtc::liealg::render_weight(&root_data.highest_root_weight());
    md.label_index(&label)
        .ok_or_else(|| EvalError::UnknownLabel { label }.into())
}
