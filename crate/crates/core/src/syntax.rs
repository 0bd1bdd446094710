//! Labeled propositional programs with preferences on rules.
//!
//! The concrete syntax (`.lpp` files):
//!
//! ```text
//! % comment
//! r1: a :- x.
//! r2: x :- not b.
//! r3: b :- not a.
//! r4: -rec(car_1) :- rec(car_2).
//! r2 < r3.
//! ```
//!
//! A statement ends at `.` or at the end of its line. `-` is classical
//! negation, `not` is default negation, and `lo < hi` reads "`hi` is
//! preferred over `lo`".

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const RESERVED_PREFIX: &str = "__";

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Atom(String);

impl Atom {
    /// A user-facing atom; rejects the reserved `__` prefix.
    pub fn new(name: impl Into<String>) -> Result<Self> {
        let name = name.into();
        if name.starts_with(RESERVED_PREFIX) {
            return Err(Error::ReservedAtom(name));
        }
        Self::validated(name)
    }

    /// An atom in the reserved namespace, or any valid atom when reserved
    /// names are permitted.
    pub fn reserved(name: impl Into<String>) -> Result<Self> {
        Self::validated(name.into())
    }

    fn validated(name: String) -> Result<Self> {
        if !is_atom_text(&name) {
            return Err(Error::InvalidAtom(name));
        }
        Ok(Self(name))
    }

    pub fn name(&self) -> &str {
        &self.0
    }

    pub fn is_reserved(&self) -> bool {
        self.0.starts_with(RESERVED_PREFIX)
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

fn is_ident_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_'
}

/// `ident` or `ident(args)` with balanced parentheses and no whitespace.
fn is_atom_text(s: &str) -> bool {
    let stem_len = s.find('(').unwrap_or(s.len());
    if stem_len == 0 || !s[..stem_len].chars().all(is_ident_char) {
        return false;
    }
    let args = &s[stem_len..];
    if args.is_empty() {
        return true;
    }
    let mut depth = 0i32;
    for (i, c) in args.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth == 0 && i + 1 != args.len() {
                    return false;
                }
            }
            c if c.is_whitespace() => return false,
            _ => {}
        }
        if depth < 0 {
            return false;
        }
    }
    depth == 0 && args.len() > 2
}

/// A classically signed atom.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Literal {
    pub atom: Atom,
    pub positive: bool,
}

impl Literal {
    pub fn pos(atom: Atom) -> Self {
        Self { atom, positive: true }
    }

    pub fn neg(atom: Atom) -> Self {
        Self { atom, positive: false }
    }

    /// Parses `a` or `-a` with the same rules as the program parser.
    pub fn parse(text: &str) -> Result<Self> {
        let text = text.trim();
        match text.strip_prefix('-') {
            Some(rest) => Ok(Self::neg(Atom::new(rest)?)),
            None => Ok(Self::pos(Atom::new(text)?)),
        }
    }

    pub fn complement(&self) -> Self {
        Self {
            atom: self.atom.clone(),
            positive: !self.positive,
        }
    }

    pub fn is_complementary(&self, other: &Literal) -> bool {
        self.atom == other.atom && self.positive != other.positive
    }
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.positive {
            f.write_str("-")?;
        }
        write!(f, "{}", self.atom)
    }
}

impl Serialize for Literal {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Literal {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        let (positive, name) = match s.strip_prefix('-') {
            Some(rest) => (false, rest),
            None => (true, s.as_str()),
        };
        let atom = Atom::reserved(name).map_err(serde::de::Error::custom)?;
        Ok(Literal { atom, positive })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct RuleId(String);

impl RuleId {
    pub fn new(label: impl Into<String>) -> Self {
        Self(label.into())
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for RuleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<&str> for RuleId {
    fn from(s: &str) -> Self {
        Self::new(s)
    }
}

/// `head :- pos_body, not neg_body.` carrying a label that is its identity.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Rule {
    pub label: RuleId,
    pub head: Literal,
    pub pos_body: BTreeSet<Literal>,
    pub neg_body: BTreeSet<Literal>,
}

impl Rule {
    pub fn new(
        label: impl Into<RuleId>,
        head: Literal,
        pos_body: impl IntoIterator<Item = Literal>,
        neg_body: impl IntoIterator<Item = Literal>,
    ) -> Self {
        Self {
            label: label.into(),
            head,
            pos_body: pos_body.into_iter().collect(),
            neg_body: neg_body.into_iter().collect(),
        }
    }

    pub fn is_fact(&self) -> bool {
        self.pos_body.is_empty() && self.neg_body.is_empty()
    }

    /// Whether this rule's head occurs in `target`'s negative body.
    pub fn defeats(&self, target: &Rule) -> bool {
        target.neg_body.contains(&self.head)
    }

    pub fn literals(&self) -> impl Iterator<Item = &Literal> {
        std::iter::once(&self.head)
            .chain(self.pos_body.iter())
            .chain(self.neg_body.iter())
    }

    fn same_shape(&self, other: &Rule) -> bool {
        self.head == other.head && self.pos_body == other.pos_body && self.neg_body == other.neg_body
    }
}

impl From<String> for RuleId {
    fn from(s: String) -> Self {
        Self(s)
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.label, self.head)?;
        let body: Vec<String> = self
            .pos_body
            .iter()
            .map(ToString::to_string)
            .chain(self.neg_body.iter().map(|l| format!("not {l}")))
            .collect();
        if !body.is_empty() {
            write!(f, " :- {}", body.join(", "))?;
        }
        f.write_str(".")
    }
}

/// A finite set of labeled rules, kept in source order.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Program {
    rules: Vec<Rule>,
    index: HashMap<RuleId, usize>,
}

impl Program {
    /// Rejects duplicate labels and duplicate (head, body) rules.
    pub fn new(rules: impl IntoIterator<Item = Rule>) -> Result<Self> {
        let rules: Vec<Rule> = rules.into_iter().collect();
        let mut index = HashMap::with_capacity(rules.len());
        let mut shapes: HashMap<&Literal, Vec<usize>> = HashMap::new();
        for (i, rule) in rules.iter().enumerate() {
            if index.insert(rule.label.clone(), i).is_some() {
                return Err(Error::DuplicateLabel(rule.label.to_string()));
            }
            let same_head = shapes.entry(&rule.head).or_default();
            if let Some(&j) = same_head.iter().find(|&&j| rules[j].same_shape(rule)) {
                return Err(Error::DuplicateRule {
                    first: rules[j].label.to_string(),
                    second: rule.label.to_string(),
                });
            }
            same_head.push(i);
        }
        Ok(Self { rules, index })
    }

    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    pub fn len(&self) -> usize {
        self.rules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rules.is_empty()
    }

    pub fn position(&self, label: &RuleId) -> Option<usize> {
        self.index.get(label).copied()
    }

    pub fn rule(&self, label: &RuleId) -> Option<&Rule> {
        self.position(label).map(|i| &self.rules[i])
    }

    pub fn atoms(&self) -> BTreeSet<&Atom> {
        self.rules.iter().flat_map(Rule::literals).map(|l| &l.atom).collect()
    }

    pub fn literals(&self) -> BTreeSet<&Literal> {
        self.rules.iter().flat_map(Rule::literals).collect()
    }
}

impl fmt::Display for Program {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for rule in &self.rules {
            writeln!(f, "{rule}")?;
        }
        Ok(())
    }
}

/// A strict partial order on the rules of one program, stored by rule
/// position. `less(lo, hi)` means `hi` is preferred over `lo`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Preferences {
    n: usize,
    lt: Vec<bool>,
}

impl Preferences {
    pub fn empty(n: usize) -> Self {
        Self {
            n,
            lt: vec![false; n * n],
        }
    }

    /// Transitive closure of `raw` over `n` rules. On an asymmetry violation
    /// returns the offending pair of positions.
    pub fn closure(n: usize, raw: &[(usize, usize)]) -> std::result::Result<Self, (usize, usize)> {
        let mut lt = vec![false; n * n];
        for &(lo, hi) in raw {
            assert!(lo < n && hi < n, "preference position out of range");
            lt[lo * n + hi] = true;
        }
        for k in 0..n {
            for i in 0..n {
                if lt[i * n + k] {
                    for j in 0..n {
                        if lt[k * n + j] {
                            lt[i * n + j] = true;
                        }
                    }
                }
            }
        }
        // a proper pair names the cycle better than the self-loop it implies
        for i in 0..n {
            for j in i + 1..n {
                if lt[i * n + j] && lt[j * n + i] {
                    return Err((i, j));
                }
            }
        }
        if let Some(i) = (0..n).find(|&i| lt[i * n + i]) {
            return Err((i, i));
        }
        Ok(Self { n, lt })
    }

    pub fn num_rules(&self) -> usize {
        self.n
    }

    pub fn less(&self, lo: usize, hi: usize) -> bool {
        self.lt[lo * self.n + hi]
    }

    /// All `(lo, hi)` pairs, ordered by `lo` then `hi`.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for lo in 0..self.n {
            for hi in 0..self.n {
                if self.less(lo, hi) {
                    out.push((lo, hi));
                }
            }
        }
        out
    }

    pub fn len(&self) -> usize {
        self.lt.iter().filter(|&&b| b).count()
    }

    pub fn is_empty(&self) -> bool {
        !self.lt.iter().any(|&b| b)
    }

    pub fn is_subset(&self, other: &Preferences) -> bool {
        self.n == other.n && self.lt.iter().zip(&other.lt).all(|(&a, &b)| !a || b)
    }
}

/// Closes `raw_pairs` transitively against the labels of `rules`.
pub fn close_preferences(raw_pairs: &[(RuleId, RuleId)], rules: &Program) -> Result<Preferences> {
    let position = |label: &RuleId| {
        rules
            .position(label)
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    };
    let raw = raw_pairs
        .iter()
        .map(|(lo, hi)| Ok((position(lo)?, position(hi)?)))
        .collect::<Result<Vec<_>>>()?;
    Preferences::closure(rules.len(), &raw).map_err(|(a, b)| {
        Error::PreferenceCycle(rules.rules()[a].label.to_string(), rules.rules()[b].label.to_string())
    })
}

/// A program together with a closed, asymmetric preference relation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrefProgram {
    program: Program,
    prefs: Preferences,
}

impl PrefProgram {
    pub fn new(program: Program, prefs: Preferences) -> Self {
        assert_eq!(
            program.len(),
            prefs.num_rules(),
            "preferences sized for a different program"
        );
        Self { program, prefs }
    }

    pub fn without_preferences(program: Program) -> Self {
        let prefs = Preferences::empty(program.len());
        Self { program, prefs }
    }

    pub fn from_labels(program: Program, raw_pairs: &[(RuleId, RuleId)]) -> Result<Self> {
        let prefs = close_preferences(raw_pairs, &program)?;
        Ok(Self { program, prefs })
    }

    pub fn program(&self) -> &Program {
        &self.program
    }

    pub fn preferences(&self) -> &Preferences {
        &self.prefs
    }

    pub fn with_preferences(&self, prefs: Preferences) -> Self {
        Self::new(self.program.clone(), prefs)
    }

    /// Closed pairs as labels, `(lo, hi)`.
    pub fn preference_labels(&self) -> Vec<(RuleId, RuleId)> {
        let rules = self.program.rules();
        self.prefs
            .pairs()
            .into_iter()
            .map(|(lo, hi)| (rules[lo].label.clone(), rules[hi].label.clone()))
            .collect()
    }
}

impl fmt::Display for PrefProgram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.program)?;
        for (lo, hi) in self.preference_labels() {
            writeln!(f, "{lo} < {hi}.")?;
        }
        Ok(())
    }
}

/// The result of parsing: rules plus the preference pairs exactly as written.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParsedProgram {
    pub program: Program,
    pub raw_preferences: Vec<(RuleId, RuleId)>,
}

impl ParsedProgram {
    pub fn close(self) -> Result<PrefProgram> {
        PrefProgram::from_labels(self.program, &self.raw_preferences)
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ParseOptions {
    /// Accept atoms in the reserved `__` namespace (transformed programs).
    pub allow_reserved: bool,
}

pub fn parse_program(text: &str) -> Result<ParsedProgram> {
    parse_program_with(text, ParseOptions::default())
}

pub fn parse_program_with(text: &str, options: ParseOptions) -> Result<ParsedProgram> {
    Parser::new(text, options)?.program()
}

/// Parses and closes the preference relation in one step.
pub fn parse_pref_program(text: &str) -> Result<PrefProgram> {
    parse_program(text)?.close()
}

pub fn format_program(p: &PrefProgram) -> String {
    p.to_string()
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    /// An identifier immediately followed by a parenthesized argument list.
    Compound(String),
    Colon,
    If,
    Comma,
    Dot,
    Lt,
    Minus,
    Newline,
    Eof,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) | Tok::Compound(s) => write!(f, "`{s}`"),
            Tok::Colon => f.write_str("`:`"),
            Tok::If => f.write_str("`:-`"),
            Tok::Comma => f.write_str("`,`"),
            Tok::Dot => f.write_str("`.`"),
            Tok::Lt => f.write_str("`<`"),
            Tok::Minus => f.write_str("`-`"),
            Tok::Newline => f.write_str("end of line"),
            Tok::Eof => f.write_str("end of input"),
        }
    }
}

#[derive(Debug, Clone)]
struct Spanned {
    tok: Tok,
    line: usize,
    column: usize,
}

fn syntax(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Syntax {
        line,
        column,
        message: message.into(),
    }
}

fn lex(text: &str) -> Result<Vec<Spanned>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let (mut line, mut col) = (1usize, 1usize);
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let start = (line, col);
        let mut push = |tok| {
            out.push(Spanned {
                tok,
                line: start.0,
                column: start.1,
            })
        };
        match c {
            '\n' => {
                push(Tok::Newline);
                i += 1;
                line += 1;
                col = 1;
                continue;
            }
            c if c.is_whitespace() => {}
            '%' => {
                while i < chars.len() && chars[i] != '\n' {
                    i += 1;
                }
                continue;
            }
            ':' if chars.get(i + 1) == Some(&'-') => {
                push(Tok::If);
                i += 2;
                col += 2;
                continue;
            }
            ':' => push(Tok::Colon),
            ',' => push(Tok::Comma),
            '.' => push(Tok::Dot),
            '<' => push(Tok::Lt),
            '-' => push(Tok::Minus),
            c if is_ident_char(c) => {
                let mut word = String::new();
                while i < chars.len() && is_ident_char(chars[i]) {
                    word.push(chars[i]);
                    i += 1;
                    col += 1;
                }
                if chars.get(i) == Some(&'(') {
                    let mut depth = 0usize;
                    loop {
                        let Some(&c) = chars.get(i) else {
                            return Err(syntax(start.0, start.1, "unclosed `(` in atom"));
                        };
                        if c == '\n' {
                            return Err(syntax(line, col, "unclosed `(` in atom"));
                        }
                        i += 1;
                        col += 1;
                        match c {
                            '(' => depth += 1,
                            ')' => depth -= 1,
                            c if c.is_whitespace() => continue,
                            _ => {}
                        }
                        word.push(c);
                        if depth == 0 {
                            break;
                        }
                    }
                    if word.ends_with("()") {
                        return Err(syntax(start.0, start.1, "empty argument list"));
                    }
                    push(Tok::Compound(word));
                } else {
                    push(Tok::Ident(word));
                }
                continue;
            }
            other => return Err(syntax(line, col, format!("unexpected character `{other}`"))),
        }
        i += 1;
        col += 1;
    }
    out.push(Spanned {
        tok: Tok::Eof,
        line,
        column: col,
    });
    Ok(out)
}

struct Parser {
    toks: Vec<Spanned>,
    pos: usize,
    options: ParseOptions,
}

impl Parser {
    fn new(text: &str, options: ParseOptions) -> Result<Self> {
        Ok(Self {
            toks: lex(text)?,
            pos: 0,
            options,
        })
    }

    fn peek(&self) -> &Spanned {
        &self.toks[self.pos]
    }

    fn next(&mut self) -> Spanned {
        let t = self.toks[self.pos].clone();
        if t.tok != Tok::Eof {
            self.pos += 1;
        }
        t
    }

    fn error_here(&self, expected: &str) -> Error {
        let t = self.peek();
        syntax(t.line, t.column, format!("expected {expected}, found {}", t.tok))
    }

    fn program(mut self) -> Result<ParsedProgram> {
        let mut rules = Vec::new();
        let mut prefs = Vec::new();
        loop {
            match &self.peek().tok {
                Tok::Newline | Tok::Dot => {
                    self.next();
                }
                Tok::Eof => break,
                Tok::Ident(_) => {
                    let label = self.label()?;
                    match self.peek().tok {
                        Tok::Lt => {
                            self.next();
                            let hi = self.label()?;
                            prefs.push((label, hi));
                        }
                        Tok::Colon => {
                            self.next();
                            rules.push(self.rule_after_colon(label, false)?);
                        }
                        // `r1:-a.` is label `r1`, head `-a`
                        Tok::If => {
                            self.next();
                            rules.push(self.rule_after_colon(label, true)?);
                        }
                        _ => return Err(self.error_here("`:` or `<` after a label")),
                    }
                    self.end_of_statement()?;
                }
                _ => return Err(self.error_here("a rule label")),
            }
        }
        let program = Program::new(rules)?;
        for (lo, hi) in &prefs {
            for label in [lo, hi] {
                if program.position(label).is_none() {
                    return Err(Error::UnknownLabel(label.to_string()));
                }
            }
        }
        Ok(ParsedProgram {
            program,
            raw_preferences: prefs,
        })
    }

    fn label(&mut self) -> Result<RuleId> {
        match self.peek().tok.clone() {
            Tok::Ident(s) => {
                self.next();
                Ok(RuleId::new(s))
            }
            _ => Err(self.error_here("a rule label")),
        }
    }

    fn end_of_statement(&mut self) -> Result<()> {
        match self.peek().tok {
            Tok::Dot | Tok::Newline | Tok::Eof => {
                self.next();
                Ok(())
            }
            _ => Err(self.error_here("`.` or end of line")),
        }
    }

    fn rule_after_colon(&mut self, label: RuleId, head_negated: bool) -> Result<Rule> {
        let head = if head_negated {
            let atom = self.atom()?;
            Literal::neg(atom)
        } else {
            self.literal()?
        };
        let mut pos = BTreeSet::new();
        let mut neg = BTreeSet::new();
        if self.peek().tok == Tok::If {
            self.next();
            loop {
                let is_not = matches!(&self.peek().tok, Tok::Ident(s) if s == "not")
                    && matches!(
                        self.toks.get(self.pos + 1).map(|t| &t.tok),
                        Some(Tok::Ident(_) | Tok::Compound(_) | Tok::Minus)
                    );
                if is_not {
                    self.next();
                    neg.insert(self.literal()?);
                } else {
                    pos.insert(self.literal()?);
                }
                if self.peek().tok == Tok::Comma {
                    self.next();
                } else {
                    break;
                }
            }
        }
        Ok(Rule {
            label,
            head,
            pos_body: pos,
            neg_body: neg,
        })
    }

    fn literal(&mut self) -> Result<Literal> {
        if self.peek().tok == Tok::Minus {
            self.next();
            Ok(Literal::neg(self.atom()?))
        } else {
            Ok(Literal::pos(self.atom()?))
        }
    }

    fn atom(&mut self) -> Result<Atom> {
        let t = self.peek().clone();
        match t.tok {
            Tok::Ident(s) | Tok::Compound(s) => {
                if s == "not" {
                    return Err(syntax(t.line, t.column, "`not` cannot be used as an atom"));
                }
                self.next();
                let atom = if self.options.allow_reserved {
                    Atom::reserved(s)
                } else {
                    Atom::new(s)
                };
                atom.map_err(|e| match e {
                    Error::InvalidAtom(s) => syntax(t.line, t.column, format!("invalid atom `{s}`")),
                    other => other,
                })
            }
            _ => Err(self.error_here("an atom")),
        }
    }
}
