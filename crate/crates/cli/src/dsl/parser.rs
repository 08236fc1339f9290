use super::ast::{CheckKind, Expr, Located, Session, Statement, Stmt};
use super::lexer::{tokenize, Tok, Token};
use super::SessionError;

/// Arity of each corpus family, as (required, optional) integer arguments.
pub const CORPUS_FAMILIES: [(&str, usize, usize); 4] =
    [("example44", 2, 0), ("example42", 1, 0), ("prop41", 0, 0), ("random", 1, 2)];

struct Parser {
    toks: Vec<Token>,
    at: usize,
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.toks[self.at]
    }

    fn bump(&mut self) -> Token {
        let t = self.toks[self.at].clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn fail<T>(&self, expected: &[&str]) -> Result<T, SessionError> {
        let t = self.peek();
        Err(SessionError::ParseError {
            line: t.pos.line,
            column: t.pos.column,
            expected: expected.iter().map(|s| s.to_string()).collect(),
            found: t.tok.describe(),
        })
    }

    fn eat_sym(&mut self, c: char) -> bool {
        if self.peek().tok == Tok::Sym(c) {
            self.bump();
            true
        } else {
            false
        }
    }

    fn sym(&mut self, c: char) -> Result<(), SessionError> {
        if self.eat_sym(c) {
            Ok(())
        } else {
            self.fail(&[&format!("`{c}`")])
        }
    }

    fn keyword(&mut self, kw: &str) -> Result<(), SessionError> {
        match &self.peek().tok {
            Tok::Ident(s) if s == kw => {
                self.bump();
                Ok(())
            }
            _ => self.fail(&[&format!("`{kw}`")]),
        }
    }

    fn name(&mut self) -> Result<String, SessionError> {
        match &self.peek().tok {
            Tok::Ident(s) => {
                let s = s.clone();
                self.bump();
                Ok(s)
            }
            _ => self.fail(&["a name"]),
        }
    }

    fn int(&mut self) -> Result<u64, SessionError> {
        match self.peek().tok {
            Tok::Int(n) => {
                self.bump();
                Ok(n)
            }
            _ => self.fail(&["an integer"]),
        }
    }

    fn signed(&mut self) -> Result<i32, SessionError> {
        let neg = self.eat_sym('-');
        let pos = self.peek().pos;
        let n = self.int()?;
        let v = i32::try_from(n).map_err(|_| SessionError::ParseError {
            line: pos.line,
            column: pos.column,
            expected: vec!["a twist that fits in 32 bits".into()],
            found: format!("`{n}`"),
        })?;
        Ok(if neg { -v } else { v })
    }

    fn end_of_line(&mut self) -> Result<(), SessionError> {
        match self.peek().tok {
            Tok::Newline | Tok::Eof => {
                self.bump();
                Ok(())
            }
            _ => self.fail(&["end of line"]),
        }
    }

    fn expr(&mut self) -> Result<Located, SessionError> {
        let pos = self.peek().pos;
        let mut e = self.term()?;
        loop {
            if self.eat_sym('+') {
                e = Expr::Add(Box::new(e), Box::new(self.term()?));
            } else if self.eat_sym('-') {
                e = Expr::Sub(Box::new(e), Box::new(self.term()?));
            } else {
                return Ok(Located { expr: e, pos });
            }
        }
    }

    fn term(&mut self) -> Result<Expr, SessionError> {
        let mut e = self.unary()?;
        while self.eat_sym('*') {
            e = Expr::Mul(Box::new(e), Box::new(self.unary()?));
        }
        Ok(e)
    }

    fn unary(&mut self) -> Result<Expr, SessionError> {
        if self.eat_sym('-') {
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        let base = self.atom()?;
        if self.eat_sym('^') {
            let pos = self.peek().pos;
            let k = self.int()?;
            let k = u32::try_from(k).map_err(|_| SessionError::ParseError {
                line: pos.line,
                column: pos.column,
                expected: vec!["an exponent that fits in 32 bits".into()],
                found: format!("`{k}`"),
            })?;
            return Ok(Expr::Pow(Box::new(base), k));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Expr, SessionError> {
        match self.peek().tok.clone() {
            Tok::Int(n) => {
                self.bump();
                Ok(Expr::Int(n))
            }
            Tok::Ident(s) => {
                self.bump();
                Ok(Expr::Var(s))
            }
            Tok::Sym('(') => {
                self.bump();
                let e = self.expr()?.expr;
                self.sym(')')?;
                Ok(e)
            }
            _ => self.fail(&["an integer", "a variable", "`(`", "`-`"]),
        }
    }

    fn expr_list(&mut self) -> Result<Vec<Located>, SessionError> {
        let mut out = vec![self.expr()?];
        while self.eat_sym(',') {
            out.push(self.expr()?);
        }
        Ok(out)
    }

    fn bracketed<T>(&mut self, mut item: impl FnMut(&mut Self) -> Result<T, SessionError>) -> Result<Vec<T>, SessionError> {
        self.sym('[')?;
        let mut out = Vec::new();
        if self.eat_sym(']') {
            return Ok(out);
        }
        loop {
            out.push(item(self)?);
            if self.eat_sym(']') {
                return Ok(out);
            }
            if !self.eat_sym(',') {
                return self.fail(&["`,`", "`]`"]);
            }
        }
    }

    fn statement(&mut self) -> Result<Statement, SessionError> {
        let pos = self.peek().pos;
        let head = match &self.peek().tok {
            Tok::Ident(s) => s.clone(),
            _ => return self.fail(&STATEMENT_KEYWORDS),
        };
        let stmt = match head.as_str() {
            "prime" => {
                self.bump();
                let at = self.peek().pos;
                let p = self.int()?;
                let p = u32::try_from(p).map_err(|_| SessionError::ParseError {
                    line: at.line,
                    column: at.column,
                    expected: vec!["a prime below 2^32".into()],
                    found: format!("`{p}`"),
                })?;
                Stmt::Prime(p)
            }
            "ring" => {
                self.bump();
                let name = self.name()?;
                self.sym('=')?;
                self.keyword("vars")?;
                let mut vars = vec![self.name()?];
                while let Tok::Ident(_) = self.peek().tok {
                    vars.push(self.name()?);
                }
                Stmt::Ring { name, vars }
            }
            "ideal" | "sequence" => {
                self.bump();
                let name = self.name()?;
                self.sym('=')?;
                let list = self.expr_list()?;
                if head == "ideal" {
                    Stmt::Ideal { name, gens: list }
                } else {
                    Stmt::Sequence { name, elems: list }
                }
            }
            "algebra" => {
                self.bump();
                let name = self.name()?;
                self.sym('=')?;
                let ring = self.name()?;
                let ideal = if self.eat_sym('/') { Some(self.name()?) } else { None };
                Stmt::Algebra { name, ring, ideal }
            }
            "module" => {
                self.bump();
                let name = self.name()?;
                self.sym('=')?;
                self.keyword("coker")?;
                let algebra = self.name()?;
                let twists = self.bracketed(|p| p.signed())?;
                let rows = self.bracketed(|p| p.bracketed(|q| q.expr()))?;
                Stmt::Module {
                    name,
                    algebra,
                    twists,
                    rows,
                }
            }
            "compute" => {
                self.bump();
                self.keyword("invariants")?;
                let target = self.name()?;
                let sequence = self.name()?;
                Stmt::Compute { target, sequence }
            }
            "check" => {
                self.bump();
                let kind = match &self.peek().tok {
                    Tok::Ident(s) if s == "thm34" => CheckKind::Thm34,
                    Tok::Ident(s) if s == "prop38" => CheckKind::Prop38,
                    Tok::Ident(s) if s == "inequalities" => CheckKind::Inequalities,
                    Tok::Ident(s) if s == "ulrich" => CheckKind::Ulrich,
                    _ => return self.fail(&["`thm34`", "`prop38`", "`inequalities`", "`ulrich`"]),
                };
                self.bump();
                let args = vec![self.name()?, self.name()?];
                Stmt::Check { kind, args }
            }
            "corpus" => {
                self.bump();
                let family = match &self.peek().tok {
                    Tok::Ident(s) if CORPUS_FAMILIES.iter().any(|f| f.0 == s) => s.clone(),
                    _ => return self.fail(&["`example44`", "`example42`", "`prop41`", "`random`"]),
                };
                self.bump();
                let (_, required, optional) = *CORPUS_FAMILIES.iter().find(|f| f.0 == family).expect("known family");
                let mut args = Vec::new();
                for _ in 0..required {
                    args.push(self.int()?);
                }
                for _ in 0..optional {
                    match self.peek().tok {
                        Tok::Int(_) => args.push(self.int()?),
                        _ => break,
                    }
                }
                Stmt::Corpus { family, args }
            }
            _ => return self.fail(&STATEMENT_KEYWORDS),
        };
        self.end_of_line()?;
        Ok(Statement { stmt, pos })
    }
}

const STATEMENT_KEYWORDS: [&str; 9] = [
    "`prime`",
    "`ring`",
    "`ideal`",
    "`algebra`",
    "`module`",
    "`sequence`",
    "`compute`",
    "`check`",
    "`corpus`",
];

/// Syntax only; names and homogeneity are not checked.
pub fn parse(text: &str) -> Result<Session, SessionError> {
    let mut p = Parser {
        toks: tokenize(text)?,
        at: 0,
    };
    let mut statements = Vec::new();
    loop {
        match p.peek().tok {
            Tok::Eof => break,
            Tok::Newline => {
                p.bump();
            }
            _ => statements.push(p.statement()?),
        }
    }
    Ok(Session { statements })
}

/// Parses a single polynomial expression.
pub fn parse_expr(text: &str) -> Result<Located, SessionError> {
    let mut p = Parser {
        toks: tokenize(text)?,
        at: 0,
    };
    let e = p.expr()?;
    match p.peek().tok {
        Tok::Newline | Tok::Eof => Ok(e),
        _ => p.fail(&["end of input"]),
    }
}
