//! Propositional datatypes and DIMACS CNF input/output.

use std::fmt;
use std::io::{self, BufRead, Write};
use std::ops::Not;

use thiserror::Error;

/// A propositional variable, 0-based internally.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Var(u32);

impl Var {
    pub fn new(index: usize) -> Var {
        Var(index as u32)
    }

    /// Builds a variable from its 1-based DIMACS number.
    pub fn from_dimacs(number: u32) -> Var {
        debug_assert!(number > 0);
        Var(number - 1)
    }

    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }

    #[inline]
    pub fn dimacs(self) -> u32 {
        self.0 + 1
    }

    #[inline]
    pub fn lit(self, positive: bool) -> Lit {
        Lit::new(self, positive)
    }

    #[inline]
    pub fn pos(self) -> Lit {
        Lit::new(self, true)
    }

    #[inline]
    pub fn neg(self) -> Lit {
        Lit::new(self, false)
    }
}

/// A literal packed as `var * 2 + sign`, where sign 1 means negated.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Lit(u32);

impl Lit {
    #[inline]
    pub fn new(var: Var, positive: bool) -> Lit {
        Lit(var.0 << 1 | (!positive) as u32)
    }

    /// Parses a nonzero signed DIMACS literal.
    pub fn from_dimacs(value: i32) -> Lit {
        debug_assert!(value != 0);
        Lit::new(Var::from_dimacs(value.unsigned_abs()), value > 0)
    }

    #[inline]
    pub fn var(self) -> Var {
        Var(self.0 >> 1)
    }

    #[inline]
    pub fn is_positive(self) -> bool {
        self.0 & 1 == 0
    }

    #[inline]
    pub fn code(self) -> usize {
        self.0 as usize
    }

    #[inline]
    pub fn from_code(code: usize) -> Lit {
        Lit(code as u32)
    }

    pub fn to_dimacs(self) -> i32 {
        let v = self.var().dimacs() as i32;
        if self.is_positive() {
            v
        } else {
            -v
        }
    }
}

impl Not for Lit {
    type Output = Lit;

    #[inline]
    fn not(self) -> Lit {
        Lit(self.0 ^ 1)
    }
}

impl fmt::Debug for Lit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_dimacs())
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x{}", self.dimacs())
    }
}

impl fmt::Display for Lit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_dimacs())
    }
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum ClauseError {
    #[error("literal {0} occurs twice")]
    Duplicate(Lit),
    #[error("clause contains both {0} and its negation")]
    Tautology(Lit),
}

/// A clause of an input formula: an ordered set of literals, never tautological.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Clause {
    lits: Vec<Lit>,
}

impl Clause {
    /// Rejects duplicate literals and complementary pairs. The first offending
    /// literal in input order is reported.
    pub fn new(lits: Vec<Lit>) -> Result<Clause, ClauseError> {
        let mut sorted = lits.clone();
        sorted.sort_unstable();
        let mut first_bad: Option<(usize, ClauseError)> = None;
        for w in sorted.windows(2) {
            let err = if w[0] == w[1] {
                ClauseError::Duplicate(w[0])
            } else if w[0] == !w[1] {
                ClauseError::Tautology(w[0].var().pos())
            } else {
                continue;
            };
            let pos = lits.iter().position(|&l| l.var() == w[0].var()).unwrap();
            if first_bad.as_ref().is_none_or(|(p, _)| pos < *p) {
                first_bad = Some((pos, err));
            }
        }
        match first_bad {
            Some((_, err)) => Err(err),
            None => Ok(Clause { lits }),
        }
    }

    /// Drops repeated literals; returns `None` for tautologies.
    pub fn normalized(lits: Vec<Lit>) -> Option<Clause> {
        let mut out: Vec<Lit> = Vec::with_capacity(lits.len());
        for l in lits {
            if out.contains(&!l) {
                return None;
            }
            if !out.contains(&l) {
                out.push(l);
            }
        }
        Some(Clause { lits: out })
    }

    pub fn from_dimacs(values: &[i32]) -> Result<Clause, ClauseError> {
        Clause::new(values.iter().map(|&v| Lit::from_dimacs(v)).collect())
    }

    pub fn lits(&self) -> &[Lit] {
        &self.lits
    }

    pub fn len(&self) -> usize {
        self.lits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lits.is_empty()
    }

    pub fn max_var(&self) -> Option<Var> {
        self.lits.iter().map(|l| l.var()).max()
    }

    pub fn to_dimacs(&self) -> Vec<i32> {
        self.lits.iter().map(|l| l.to_dimacs()).collect()
    }
}

/// A CNF formula over variables `0..num_vars`.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct CnfFormula {
    num_vars: usize,
    clauses: Vec<Clause>,
}

impl CnfFormula {
    pub fn new(num_vars: usize) -> CnfFormula {
        CnfFormula {
            num_vars,
            clauses: Vec::new(),
        }
    }

    /// Adds a clause, raising `num_vars` if the clause mentions a larger variable.
    pub fn add_clause(&mut self, clause: Clause) {
        if let Some(v) = clause.max_var() {
            self.num_vars = self.num_vars.max(v.index() + 1);
        }
        self.clauses.push(clause);
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn clauses(&self) -> &[Clause] {
        &self.clauses
    }

    pub fn len(&self) -> usize {
        self.clauses.len()
    }

    pub fn is_empty(&self) -> bool {
        self.clauses.is_empty()
    }

    /// True iff every clause has a literal made true by `model` (indexed by variable).
    pub fn is_satisfied_by(&self, model: &[bool]) -> bool {
        self.clauses.iter().all(|c| {
            c.lits()
                .iter()
                .any(|l| model.get(l.var().index()).copied() == Some(l.is_positive()))
        })
    }

    pub fn from_dimacs_clauses(num_vars: usize, clauses: &[&[i32]]) -> Result<CnfFormula, ClauseError> {
        let mut f = CnfFormula::new(num_vars);
        for c in clauses {
            f.add_clause(Clause::from_dimacs(c)?);
        }
        Ok(f)
    }
}

#[derive(Error, Debug)]
pub enum ParseError {
    #[error("line {line}: malformed header: {msg}")]
    Header { line: usize, msg: String },
    #[error("line {line}: invalid token `{token}`")]
    Token { line: usize, token: String },
    #[error("line {line}: clause before `p cnf` header")]
    MissingHeader { line: usize },
    #[error("line {line}: duplicate `p` header")]
    DuplicateHeader { line: usize },
    #[error("unterminated clause at end of input (line {line})")]
    Unterminated { line: usize },
    #[error("no `p cnf` header found")]
    NoHeader,
    #[error(transparent)]
    Io(#[from] io::Error),
}

/// Reads a DIMACS CNF formula.
///
/// Repeated literals inside a clause are merged and tautological clauses are
/// dropped (both with a warning). A clause count that disagrees with the header
/// is tolerated; a variable beyond the declared count raises `num_vars`.
pub fn parse_dimacs<R: BufRead>(reader: R) -> Result<CnfFormula, ParseError> {
    let mut header: Option<(usize, usize)> = None;
    let mut formula = CnfFormula::new(0);
    let mut current: Vec<Lit> = Vec::new();
    let mut last_line = 0;
    let mut dropped = 0usize;
    let mut parsed_clauses = 0usize;

    for (idx, line) in reader.lines().enumerate() {
        let line_no = idx + 1;
        last_line = line_no;
        let line = line?;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('c') || trimmed.starts_with('%') {
            continue;
        }
        if trimmed.starts_with('p') {
            if header.is_some() {
                return Err(ParseError::DuplicateHeader { line: line_no });
            }
            let parts: Vec<&str> = trimmed.split_whitespace().collect();
            if parts.len() != 4 || parts[0] != "p" || parts[1] != "cnf" {
                return Err(ParseError::Header {
                    line: line_no,
                    msg: format!("expected `p cnf <vars> <clauses>`, got `{trimmed}`"),
                });
            }
            let nv = parts[2].parse::<usize>().map_err(|_| ParseError::Header {
                line: line_no,
                msg: format!("bad variable count `{}`", parts[2]),
            })?;
            let nc = parts[3].parse::<usize>().map_err(|_| ParseError::Header {
                line: line_no,
                msg: format!("bad clause count `{}`", parts[3]),
            })?;
            header = Some((nv, nc));
            formula.num_vars = nv;
            continue;
        }
        if header.is_none() {
            return Err(ParseError::MissingHeader { line: line_no });
        }
        for token in trimmed.split_whitespace() {
            let value: i64 = token.parse().map_err(|_| ParseError::Token {
                line: line_no,
                token: token.to_string(),
            })?;
            if value == 0 {
                parsed_clauses += 1;
                match Clause::normalized(std::mem::take(&mut current)) {
                    Some(c) => formula.add_clause(c),
                    None => dropped += 1,
                }
            } else if value.unsigned_abs() > i32::MAX as u64 {
                return Err(ParseError::Token {
                    line: line_no,
                    token: token.to_string(),
                });
            } else {
                current.push(Lit::from_dimacs(value as i32));
            }
        }
    }
    if !current.is_empty() {
        return Err(ParseError::Unterminated { line: last_line });
    }
    let (nv, nc) = header.ok_or(ParseError::NoHeader)?;
    if nc != parsed_clauses {
        log::warn!("header declares {nc} clauses but {parsed_clauses} were read");
    }
    if formula.num_vars > nv {
        log::warn!("header declares {nv} variables but literals reach {}", formula.num_vars);
    }
    if dropped > 0 {
        log::warn!("dropped {dropped} tautological clauses");
    }
    Ok(formula)
}

pub fn parse_dimacs_str(text: &str) -> Result<CnfFormula, ParseError> {
    parse_dimacs(text.as_bytes())
}

pub fn write_dimacs<W: Write>(formula: &CnfFormula, mut out: W) -> io::Result<()> {
    writeln!(out, "p cnf {} {}", formula.num_vars(), formula.len())?;
    let mut line = String::new();
    for c in formula.clauses() {
        line.clear();
        for l in c.lits() {
            line.push_str(&l.to_dimacs().to_string());
            line.push(' ');
        }
        line.push('0');
        writeln!(out, "{line}")?;
    }
    Ok(())
}

pub fn to_dimacs_string(formula: &CnfFormula) -> String {
    let mut buf = Vec::new();
    write_dimacs(formula, &mut buf).expect("writing to a Vec cannot fail");
    String::from_utf8(buf).expect("DIMACS output is ASCII")
}
