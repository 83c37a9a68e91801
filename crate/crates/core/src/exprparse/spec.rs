use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use super::{parse_expr_at, Expr};
use crate::error::{Error, Result};
use crate::hopfstruct::Case;
use crate::scalar::Field;

/// A parsed value with the 1-based position where it starts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Located<T> {
    pub value: T,
    pub line: usize,
    pub column: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldSpec {
    Rational,
    Cyclotomic(u32),
    RationalFunction,
}

impl FieldSpec {
    pub fn to_field(self) -> Result<Field> {
        match self {
            FieldSpec::Rational => Ok(Field::rational()),
            FieldSpec::Cyclotomic(n) => Field::cyclotomic(n),
            FieldSpec::RationalFunction => Ok(Field::rational_function()),
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rational => f.write_str("rational"),
            FieldSpec::Cyclotomic(n) => write!(f, "cyclotomic:{n}"),
            FieldSpec::RationalFunction => f.write_str("rational_function"),
        }
    }
}

/// Accepts `rational`, `Q`, `cyclotomic:N`, `Q(zeta_N)`, `rational_function`
/// and `Q(q)`.
impl FromStr for FieldSpec {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::InvalidArgument(format!("unknown field `{s}`"));
        match s {
            "rational" | "Q" => return Ok(FieldSpec::Rational),
            "rational_function" | "Q(q)" => return Ok(FieldSpec::RationalFunction),
            _ => {}
        }
        let order = s
            .strip_prefix("cyclotomic:")
            .or_else(|| s.strip_prefix("Q(zeta_").and_then(|r| r.strip_suffix(')')))
            .ok_or_else(bad)?;
        let n: u32 = order.parse().map_err(|_| bad())?;
        if !(1..=64).contains(&n) {
            return Err(Error::InvalidArgument(format!(
                "cyclotomic order {n} outside 1..=64"
            )));
        }
        Ok(FieldSpec::Cyclotomic(n))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BaseSpec {
    Polynomial {
        var: String,
    },
    Laurent {
        var: String,
    },
    Group {
        rank: usize,
        torsion: Vec<u32>,
    },
    /// `q` defaults to the field parameter.
    UqSl2 {
        q: Option<Located<Expr>>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneralFormSpec {
    pub l_plus: Located<Expr>,
    pub l_minus: Located<Expr>,
    pub r_plus: Located<Expr>,
    pub r_minus: Located<Expr>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtensionSpec {
    /// Character values keyed by generator or alias name, in file order.
    pub chi: Vec<(Located<String>, Located<Expr>)>,
    pub y_plus: Option<Located<Expr>>,
    pub y_minus: Option<Located<Expr>>,
    pub h: Located<Expr>,
    pub xi: Option<Located<Expr>>,
    pub general_form: Option<GeneralFormSpec>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum CheckKind {
    Full,
    Fast,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OptionsSpec {
    pub nmax: Option<u64>,
    pub checks: Vec<CheckKind>,
}

impl Default for OptionsSpec {
    fn default() -> Self {
        OptionsSpec {
            nmax: None,
            checks: vec![CheckKind::Full],
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PiExpect {
    No,
    Yes,
    Degree(u64),
    Unknown,
}

/// Expected outcomes, compared by the corpus runner.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ExpectSpec {
    pub check: Option<bool>,
    pub witness: Option<String>,
    pub classification: Option<BTreeSet<Case>>,
    pub gk_dim: Option<u32>,
    pub gl_dim: Option<u32>,
    pub pi: Option<PiExpect>,
    pub identities: Vec<(Located<Expr>, Located<Expr>)>,
    pub corad: Vec<(Located<Expr>, u64)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecDocument {
    pub name: Option<String>,
    /// Leading `#` comment lines, without the marker.
    pub header: Vec<String>,
    pub field: FieldSpec,
    pub base: BaseSpec,
    pub extension: ExtensionSpec,
    pub options: OptionsSpec,
    pub expect: ExpectSpec,
}

// Generic block tree

#[derive(Debug)]
struct Value {
    text: String,
    line: usize,
    col0: usize,
}

#[derive(Debug)]
enum Node {
    Pair {
        key: String,
        line: usize,
        value: Value,
    },
    Block {
        key: String,
        children: Vec<Node>,
    },
}

impl Node {
    fn key(&self) -> &str {
        match self {
            Node::Pair { key, .. } | Node::Block { key, .. } => key,
        }
    }
}

fn syntax(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Syntax {
        line,
        column,
        message: message.into(),
    }
}

fn valid_key(k: &str) -> bool {
    !k.is_empty()
        && !k
            .chars()
            .any(|c| c.is_whitespace() || c == '{' || c == '}' || c == ':')
}

fn parse_tree(src: &str) -> Result<(Vec<String>, Vec<Node>)> {
    let mut header = Vec::new();
    let mut in_header = true;
    let mut stack: Vec<(String, usize, Vec<Node>)> = vec![(String::new(), 0, Vec::new())];
    for (i, raw) in src.lines().enumerate() {
        let line = i + 1;
        let code = match raw.find('#') {
            Some(p) => {
                if in_header && raw[..p].trim().is_empty() {
                    header.push(raw[p + 1..].trim().to_string());
                }
                &raw[..p]
            }
            None => raw,
        };
        let trimmed = code.trim();
        if trimmed.is_empty() {
            continue;
        }
        in_header = false;
        let indent = code.chars().take_while(|c| c.is_whitespace()).count();
        if trimmed == "}" {
            if stack.len() == 1 {
                return Err(syntax(line, indent + 1, "unmatched `}`"));
            }
            let (key, _, children) = stack.pop().expect("nonempty");
            stack
                .last_mut()
                .expect("root")
                .2
                .push(Node::Block { key, children });
            continue;
        }
        if let Some(key) = trimmed.strip_suffix('{') {
            let key = key.trim();
            if !valid_key(key) {
                return Err(syntax(
                    line,
                    indent + 1,
                    format!("invalid block name `{key}`"),
                ));
            }
            stack.push((key.to_string(), line, Vec::new()));
            continue;
        }
        let Some(colon) = code.find(':') else {
            return Err(syntax(
                line,
                indent + 1,
                "expected `key: value`, `key {` or `}`",
            ));
        };
        let key = code[..colon].trim();
        if !valid_key(key) {
            return Err(syntax(line, indent + 1, format!("invalid key `{key}`")));
        }
        let rest = &code[colon + 1..];
        let lead = rest.chars().take_while(|c| c.is_whitespace()).count();
        let text = rest.trim().to_string();
        if text.is_empty() {
            return Err(syntax(
                line,
                code[..colon].chars().count() + 2,
                format!("missing value for `{key}`"),
            ));
        }
        let col0 = code[..colon].chars().count() + 1 + lead;
        stack.last_mut().expect("root").2.push(Node::Pair {
            key: key.to_string(),
            line,
            value: Value { text, line, col0 },
        });
    }
    if stack.len() > 1 {
        let (key, line, _) = stack.pop().expect("open block");
        return Err(syntax(line, 1, format!("block `{key}` is not closed")));
    }
    Ok((header, stack.pop().expect("root").2))
}

// Schema

fn schema(path: &str, message: impl Into<String>) -> Error {
    Error::Schema {
        path: path.to_string(),
        message: message.into(),
    }
}

fn join(prefix: &str, key: &str) -> String {
    if prefix.is_empty() {
        key.to_string()
    } else {
        format!("{prefix}.{key}")
    }
}

/// The children of one block, with strict key handling.
struct Section<'a> {
    path: String,
    nodes: &'a [Node],
}

impl<'a> Section<'a> {
    fn check_keys(&self, allowed: &[&str], repeatable: &[&str]) -> Result<()> {
        let mut seen = BTreeSet::new();
        for n in self.nodes {
            let k = n.key();
            if !allowed.contains(&k) {
                return Err(schema(&join(&self.path, k), "unknown key"));
            }
            if !seen.insert(k) && !repeatable.contains(&k) {
                return Err(schema(&join(&self.path, k), "given more than once"));
            }
        }
        Ok(())
    }

    fn pair(&self, key: &str) -> Result<Option<&'a Value>> {
        match self.nodes.iter().find(|n| n.key() == key) {
            None => Ok(None),
            Some(Node::Pair { value, .. }) => Ok(Some(value)),
            Some(Node::Block { .. }) => Err(schema(
                &join(&self.path, key),
                "expected `key: value`, found a block",
            )),
        }
    }

    fn pairs(&self, key: &str) -> Result<Vec<&'a Value>> {
        let mut out = Vec::new();
        for n in self.nodes.iter().filter(|n| n.key() == key) {
            match n {
                Node::Pair { value, .. } => out.push(value),
                Node::Block { .. } => {
                    return Err(schema(
                        &join(&self.path, key),
                        "expected `key: value`, found a block",
                    ))
                }
            }
        }
        Ok(out)
    }

    fn required(&self, key: &str) -> Result<&'a Value> {
        self.pair(key)?
            .ok_or_else(|| schema(&join(&self.path, key), "required"))
    }

    fn block(&self, key: &str) -> Result<Option<Section<'a>>> {
        match self.nodes.iter().find(|n| n.key() == key) {
            None => Ok(None),
            Some(Node::Block { children, .. }) => Ok(Some(Section {
                path: join(&self.path, key),
                nodes: children,
            })),
            Some(Node::Pair { .. }) => Err(schema(&join(&self.path, key), "expected a block")),
        }
    }

    fn required_block(&self, key: &str) -> Result<Section<'a>> {
        self.block(key)?
            .ok_or_else(|| schema(&join(&self.path, key), "required"))
    }

    fn expr(&self, key: &str) -> Result<Option<Located<Expr>>> {
        self.pair(key)?.map(located_expr).transpose()
    }

    fn required_expr(&self, key: &str) -> Result<Located<Expr>> {
        located_expr(self.required(key)?)
    }

    fn number<T: FromStr>(&self, key: &str) -> Result<Option<T>> {
        match self.pair(key)? {
            None => Ok(None),
            Some(v) => v.text.parse().map(Some).map_err(|_| {
                schema(
                    &join(&self.path, key),
                    format!("expected a nonnegative integer, found `{}`", v.text),
                )
            }),
        }
    }
}

fn located_expr(v: &Value) -> Result<Located<Expr>> {
    Ok(Located {
        value: parse_expr_at(&v.text, v.line, v.col0)?,
        line: v.line,
        column: v.col0 + 1,
    })
}

fn parse_field(s: &Section<'_>) -> Result<FieldSpec> {
    s.check_keys(&["kind", "order"], &[])?;
    let kind = s.required("kind")?;
    match kind.text.as_str() {
        "rational" => Ok(FieldSpec::Rational),
        "rational_function" => Ok(FieldSpec::RationalFunction),
        "cyclotomic" => {
            let n: u32 = s
                .number("order")?
                .ok_or_else(|| schema("field.order", "required for cyclotomic fields"))?;
            if !(1..=64).contains(&n) {
                return Err(schema("field.order", format!("{n} outside 1..=64")));
            }
            Ok(FieldSpec::Cyclotomic(n))
        }
        other => Err(schema(
            "field.kind",
            format!("expected rational, cyclotomic or rational_function, found `{other}`"),
        )),
    }
}

fn parse_var(s: &Section<'_>) -> Result<String> {
    let v = match s.pair("var")? {
        Some(v) => v.text.clone(),
        None => "t".to_string(),
    };
    let ok = v.chars().next().is_some_and(char::is_alphabetic)
        && v.chars().all(|c| c.is_alphanumeric() || c == '_')
        && !matches!(v.as_str(), "q" | "zeta" | "X");
    if !ok {
        return Err(schema(
            "base.var",
            format!("`{v}` is not a usable generator name"),
        ));
    }
    Ok(v)
}

fn parse_base(s: &Section<'_>) -> Result<BaseSpec> {
    let family = s.required("family")?;
    match family.text.as_str() {
        "polynomial" | "laurent" => {
            s.check_keys(&["family", "var"], &[])?;
            let var = parse_var(s)?;
            Ok(if family.text == "polynomial" {
                BaseSpec::Polynomial { var }
            } else {
                BaseSpec::Laurent { var }
            })
        }
        "group" => {
            s.check_keys(&["family", "rank", "torsion"], &[])?;
            let rank = s.number("rank")?.unwrap_or(0);
            let torsion = match s.pair("torsion")? {
                None => Vec::new(),
                Some(v) => {
                    let inner = v
                        .text
                        .strip_prefix('[')
                        .and_then(|r| r.strip_suffix(']'))
                        .ok_or_else(|| schema("base.torsion", "expected a list like `[2, 3]`"))?;
                    inner
                        .split(',')
                        .map(str::trim)
                        .filter(|p| !p.is_empty())
                        .map(|p| {
                            p.parse::<u32>().map_err(|_| {
                                schema("base.torsion", format!("`{p}` is not an order"))
                            })
                        })
                        .collect::<Result<Vec<_>>>()?
                }
            };
            if rank + torsion.len() == 0 {
                return Err(schema("base.rank", "group of rank 0"));
            }
            Ok(BaseSpec::Group { rank, torsion })
        }
        "uqsl2" => {
            s.check_keys(&["family", "q"], &[])?;
            Ok(BaseSpec::UqSl2 { q: s.expr("q")? })
        }
        other => Err(schema(
            "base.family",
            format!("expected polynomial, laurent, group or uqsl2, found `{other}`"),
        )),
    }
}

fn parse_extension(s: &Section<'_>) -> Result<ExtensionSpec> {
    s.check_keys(
        &["chi", "y_plus", "y_minus", "h", "xi", "general_form"],
        &[],
    )?;
    let chi_sec = s.required_block("chi")?;
    let mut seen = BTreeSet::new();
    for n in chi_sec.nodes {
        if !seen.insert(n.key()) {
            return Err(schema(
                &join(&chi_sec.path, n.key()),
                "given more than once",
            ));
        }
    }
    let mut chi = Vec::new();
    for n in chi_sec.nodes {
        match n {
            Node::Pair { key, line, value } => chi.push((
                Located {
                    value: key.clone(),
                    line: *line,
                    column: 1,
                },
                located_expr(value)?,
            )),
            Node::Block { key, .. } => {
                return Err(schema(
                    &join(&chi_sec.path, key),
                    "expected `generator: value`",
                ))
            }
        }
    }
    let general_form = match s.block("general_form")? {
        None => None,
        Some(g) => {
            g.check_keys(&["l_plus", "l_minus", "r_plus", "r_minus"], &[])?;
            Some(GeneralFormSpec {
                l_plus: g.required_expr("l_plus")?,
                l_minus: g.required_expr("l_minus")?,
                r_plus: g.required_expr("r_plus")?,
                r_minus: g.required_expr("r_minus")?,
            })
        }
    };
    let (y_plus, y_minus) = if general_form.is_some() {
        for k in ["y_plus", "y_minus"] {
            if s.pair(k)?.is_some() {
                return Err(schema(
                    &join(&s.path, k),
                    "not allowed together with general_form",
                ));
            }
        }
        (None, None)
    } else {
        (
            Some(s.required_expr("y_plus")?),
            Some(s.required_expr("y_minus")?),
        )
    };
    Ok(ExtensionSpec {
        chi,
        y_plus,
        y_minus,
        h: s.required_expr("h")?,
        xi: s.expr("xi")?,
        general_form,
    })
}

fn parse_options(s: &Section<'_>) -> Result<OptionsSpec> {
    s.check_keys(&["nmax", "checks"], &[])?;
    let mut out = OptionsSpec {
        nmax: s.number("nmax")?,
        ..OptionsSpec::default()
    };
    if let Some(v) = s.pair("checks")? {
        let mut checks = Vec::new();
        for p in v.text.split(',').map(str::trim) {
            checks.push(match p {
                "full" => CheckKind::Full,
                "fast" => CheckKind::Fast,
                other => return Err(schema("options.checks", format!("unknown check `{other}`"))),
            });
        }
        checks.sort();
        checks.dedup();
        out.checks = checks;
    }
    Ok(out)
}

fn split_equation(v: &Value, path: &str) -> Result<(Value, Value)> {
    let Some(eq) = v.text.find('=') else {
        return Err(schema(path, "expected `lhs = rhs`"));
    };
    let lhs = &v.text[..eq];
    let rhs = &v.text[eq + 1..];
    let lead = rhs.chars().take_while(|c| c.is_whitespace()).count();
    Ok((
        Value {
            text: lhs.trim().to_string(),
            line: v.line,
            col0: v.col0,
        },
        Value {
            text: rhs.trim().to_string(),
            line: v.line,
            col0: v.col0 + lhs.chars().count() + 1 + lead,
        },
    ))
}

fn parse_expect(s: &Section<'_>) -> Result<ExpectSpec> {
    s.check_keys(
        &[
            "check",
            "witness",
            "classification",
            "gk_dim",
            "gl_dim",
            "pi",
            "identity",
            "corad",
        ],
        &["identity", "corad"],
    )?;
    let mut out = ExpectSpec::default();
    if let Some(v) = s.pair("check")? {
        out.check = Some(match v.text.as_str() {
            "pass" => true,
            "fail" => false,
            other => {
                return Err(schema(
                    "expect.check",
                    format!("expected pass or fail, found `{other}`"),
                ))
            }
        });
    }
    out.witness = s.pair("witness")?.map(|v| v.text.clone());
    if let Some(v) = s.pair("classification")? {
        let inner = v.text.trim_start_matches('{').trim_end_matches('}');
        let cases = inner
            .split(',')
            .map(|p| {
                p.parse::<Case>()
                    .map_err(|m| schema("expect.classification", m))
            })
            .collect::<Result<BTreeSet<_>>>()?;
        out.classification = Some(cases);
    }
    out.gk_dim = s.number("gk_dim")?;
    out.gl_dim = s.number("gl_dim")?;
    if let Some(v) = s.pair("pi")? {
        out.pi = Some(match v.text.as_str() {
            "no" => PiExpect::No,
            "yes" => PiExpect::Yes,
            "unknown" => PiExpect::Unknown,
            other => PiExpect::Degree(other.parse().map_err(|_| {
                schema(
                    "expect.pi",
                    format!("expected no, yes, unknown or a degree, found `{other}`"),
                )
            })?),
        });
    }
    for v in s.pairs("identity")? {
        let (l, r) = split_equation(v, "expect.identity")?;
        out.identities.push((located_expr(&l)?, located_expr(&r)?));
    }
    for v in s.pairs("corad")? {
        let (l, r) = split_equation(v, "expect.corad")?;
        let n = r.text.parse().map_err(|_| {
            schema(
                "expect.corad",
                format!("expected a degree, found `{}`", r.text),
            )
        })?;
        out.corad.push((located_expr(&l)?, n));
    }
    Ok(out)
}

/// Parses a `.abhk` document. Unknown keys are rejected; missing required
/// keys are reported by dotted path, e.g. `extension.y_minus required`.
pub fn parse_spec(src: &str) -> Result<SpecDocument> {
    let (header, nodes) = parse_tree(src)?;
    let root = Section {
        path: String::new(),
        nodes: &nodes,
    };
    root.check_keys(
        &["name", "field", "base", "extension", "options", "expect"],
        &[],
    )?;
    let field = parse_field(&root.required_block("field")?)?;
    let base = parse_base(&root.required_block("base")?)?;
    let extension = parse_extension(&root.required_block("extension")?)?;
    let options = match root.block("options")? {
        Some(s) => parse_options(&s)?,
        None => OptionsSpec::default(),
    };
    let expect = match root.block("expect")? {
        Some(s) => parse_expect(&s)?,
        None => ExpectSpec::default(),
    };
    Ok(SpecDocument {
        name: root.pair("name")?.map(|v| v.text.clone()),
        header,
        field,
        base,
        extension,
        options,
        expect,
    })
}
