use std::collections::HashSet;

use super::{Disjunction, Formula, FormulaError, Node};

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Bang,
    Zero,
    One,
    LParen,
    RParen,
    Semi,
    Comma,
    Amp,
    Or,
    Colon,
    Eof,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(name) => format!("variable {name:?}"),
            Tok::Bang => "'!'".into(),
            Tok::Zero => "'0'".into(),
            Tok::One => "'1'".into(),
            Tok::LParen => "'('".into(),
            Tok::RParen => "')'".into(),
            Tok::Semi => "';'".into(),
            Tok::Comma => "','".into(),
            Tok::Amp => "'&'".into(),
            Tok::Or => "'\\/'".into(),
            Tok::Colon => "':'".into(),
            Tok::Eof => "end of input".into(),
        }
    }
}

#[derive(Debug, Clone)]
struct Spanned {
    tok: Tok,
    line: usize,
    column: usize,
}

fn lex(text: &str) -> Result<Vec<Spanned>, FormulaError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let (mut i, mut line, mut column) = (0, 1, 1);
    while i < chars.len() {
        let c = chars[i];
        let (start_line, start_column) = (line, column);
        let mut push = |tok| {
            out.push(Spanned {
                tok,
                line: start_line,
                column: start_column,
            })
        };
        if c == '\n' {
            i += 1;
            line += 1;
            column = 1;
            continue;
        }
        if c.is_whitespace() {
            i += 1;
            column += 1;
            continue;
        }
        if c.is_ascii_alphabetic() || c == '_' {
            let mut j = i;
            while j < chars.len() && (chars[j].is_ascii_alphanumeric() || chars[j] == '_') {
                j += 1;
            }
            push(Tok::Ident(chars[i..j].iter().collect()));
            column += j - i;
            i = j;
            continue;
        }
        let single = match c {
            '!' => Some(Tok::Bang),
            '0' => Some(Tok::Zero),
            '1' => Some(Tok::One),
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            ';' => Some(Tok::Semi),
            ',' => Some(Tok::Comma),
            '&' => Some(Tok::Amp),
            ':' => Some(Tok::Colon),
            _ => None,
        };
        if let Some(tok) = single {
            push(tok);
            i += 1;
            column += 1;
            continue;
        }
        if c == '\\' && chars.get(i + 1) == Some(&'/') {
            push(Tok::Or);
            i += 2;
            column += 2;
            continue;
        }
        return Err(FormulaError::UnknownToken {
            line,
            column,
            token: c.to_string(),
        });
    }
    out.push(Spanned {
        tok: Tok::Eof,
        line,
        column,
    });
    Ok(out)
}

struct Parser {
    toks: Vec<Spanned>,
    pos: usize,
    declared: Option<HashSet<String>>,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].tok
    }

    fn peek_at(&self, offset: usize) -> &Tok {
        let i = (self.pos + offset).min(self.toks.len() - 1);
        &self.toks[i].tok
    }

    fn bump(&mut self) -> Spanned {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error_here(&self, message: String) -> FormulaError {
        let t = &self.toks[self.pos];
        FormulaError::Syntax {
            line: t.line,
            column: t.column,
            message,
        }
    }

    fn expect(&mut self, want: Tok, context: &str) -> Result<(), FormulaError> {
        if *self.peek() == want {
            self.bump();
            Ok(())
        } else {
            Err(self.error_here(format!(
                "expected {} {context}, found {}",
                want.describe(),
                self.peek().describe()
            )))
        }
    }

    /// `VAR (','|' ')*` repeated; stops at any other token.
    fn varlist(&mut self) -> Result<Vec<String>, FormulaError> {
        let mut names = Vec::new();
        let mut seen = HashSet::new();
        loop {
            match self.peek().clone() {
                Tok::Ident(name) => {
                    let at = self.bump();
                    self.check_declared(&name, &at)?;
                    if !seen.insert(name.clone()) {
                        return Err(FormulaError::DuplicateVariable {
                            line: at.line,
                            column: at.column,
                            name,
                        });
                    }
                    names.push(name);
                }
                Tok::Comma => {
                    self.bump();
                }
                _ => return Ok(names),
            }
        }
    }

    fn check_declared(&self, name: &str, at: &Spanned) -> Result<(), FormulaError> {
        match &self.declared {
            Some(declared) if !declared.contains(name) => Err(FormulaError::UndeclaredVariable {
                line: at.line,
                column: at.column,
                name: name.to_string(),
            }),
            _ => Ok(()),
        }
    }

    fn header(&mut self) -> Result<Option<Vec<String>>, FormulaError> {
        if !(matches!(self.peek(), Tok::Ident(v) if v == "vars") && *self.peek_at(1) == Tok::Colon)
        {
            return Ok(None);
        }
        self.bump();
        self.bump();
        let names = self.varlist()?;
        self.expect(Tok::Semi, "after the vars header")?;
        self.declared = Some(names.iter().cloned().collect());
        Ok(Some(names))
    }

    fn term(&mut self) -> Result<Node, FormulaError> {
        match self.peek().clone() {
            Tok::Zero => {
                self.bump();
                Ok(Node::Const0)
            }
            Tok::One => {
                self.bump();
                Ok(Node::Const1)
            }
            Tok::Bang => {
                self.bump();
                match self.peek().clone() {
                    Tok::Ident(name) => {
                        let at = self.bump();
                        self.check_declared(&name, &at)?;
                        Ok(Node::NegVar(name))
                    }
                    other => Err(self.error_here(format!(
                        "expected a variable after '!', found {}",
                        other.describe()
                    ))),
                }
            }
            Tok::Ident(name) if name == "dep" && *self.peek_at(1) == Tok::LParen => {
                self.bump();
                self.bump();
                let p = self.varlist()?;
                self.expect(Tok::Semi, "between the two variable lists of dep")?;
                let q = self.varlist()?;
                self.expect(Tok::RParen, "to close dep")?;
                Ok(Node::Dep(p, q))
            }
            Tok::Ident(name) => {
                let at = self.bump();
                self.check_declared(&name, &at)?;
                Ok(Node::Var(name))
            }
            other => Err(self.error_here(format!("expected a term, found {}", other.describe()))),
        }
    }

    fn conj(&mut self) -> Result<Node, FormulaError> {
        let mut node = self.term()?;
        while *self.peek() == Tok::Amp {
            self.bump();
            let rhs = self.term()?;
            node = Node::And(Box::new(node), Box::new(rhs));
        }
        Ok(node)
    }

    fn disj(&mut self) -> Result<Vec<Node>, FormulaError> {
        let mut out = vec![self.conj()?];
        while *self.peek() == Tok::Or {
            self.bump();
            out.push(self.conj()?);
        }
        Ok(out)
    }

    fn finish(&self) -> Result<(), FormulaError> {
        match self.peek() {
            Tok::Eof => Ok(()),
            other => Err(self.error_here(format!("unexpected {}", other.describe()))),
        }
    }
}

fn parser(text: &str) -> Result<Parser, FormulaError> {
    Ok(Parser {
        toks: lex(text)?,
        pos: 0,
        declared: None,
    })
}

/// Parses a conjunction, optionally preceded by a `vars:` header that fixes
/// the variable order. Without a header the order is that of first
/// occurrence.
pub fn parse_formula(text: &str) -> Result<Formula, FormulaError> {
    let mut p = parser(text)?;
    let header = p.header()?;
    let root = p.conj()?;
    if *p.peek() == Tok::Or {
        return Err(p.error_here("disjunction is only accepted by parse_disjunction".into()));
    }
    p.finish()?;
    let variable_order = header.unwrap_or_else(|| root.first_occurrence_order());
    Ok(Formula {
        root,
        variable_order,
    })
}

/// Parses `conj (\/ conj)*` with one shared variable order.
pub fn parse_disjunction(text: &str) -> Result<Disjunction, FormulaError> {
    let mut p = parser(text)?;
    let header = p.header()?;
    let disjuncts = p.disj()?;
    p.finish()?;
    let variable_order = header.unwrap_or_else(|| {
        let mut seen = HashSet::new();
        let mut order = Vec::new();
        for d in &disjuncts {
            d.collect_vars(&mut seen, &mut order);
        }
        order
    });
    Ok(Disjunction {
        disjuncts,
        variable_order,
    })
}
