use super::ast::Pos;
use super::SessionError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Tok {
    Ident(String),
    Int(u64),
    Sym(char),
    Newline,
    Eof,
}

impl Tok {
    pub fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("`{s}`"),
            Tok::Int(n) => format!("`{n}`"),
            Tok::Sym(c) => format!("`{c}`"),
            Tok::Newline => "end of line".into(),
            Tok::Eof => "end of input".into(),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Token {
    pub tok: Tok,
    pub pos: Pos,
}

const SYMBOLS: &str = "=,[]()+-*^/";

pub fn tokenize(text: &str) -> Result<Vec<Token>, SessionError> {
    let mut out = Vec::new();
    for (li, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("");
        let chars: Vec<char> = line.chars().collect();
        let mut i = 0;
        while i < chars.len() {
            let c = chars[i];
            let pos = Pos {
                line: li + 1,
                column: i + 1,
            };
            if c.is_whitespace() {
                i += 1;
            } else if c.is_ascii_digit() {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let s: String = chars[start..i].iter().copied().collect();
                let n = s.parse::<u64>().map_err(|_| SessionError::ParseError {
                    line: pos.line,
                    column: pos.column,
                    expected: vec!["an integer below 2^64".into()],
                    found: s.clone(),
                })?;
                out.push(Token { tok: Tok::Int(n), pos });
            } else if c.is_alphabetic() || c == '_' {
                let start = i;
                while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                let s: String = chars[start..i].iter().copied().collect();
                out.push(Token { tok: Tok::Ident(s), pos });
            } else if SYMBOLS.contains(c) {
                out.push(Token { tok: Tok::Sym(c), pos });
                i += 1;
            } else {
                return Err(SessionError::ParseError {
                    line: pos.line,
                    column: pos.column,
                    expected: vec!["a name, an integer or one of = , [ ] ( ) + - * ^ /".into()],
                    found: format!("`{c}`"),
                });
            }
        }
        out.push(Token {
            tok: Tok::Newline,
            pos: Pos {
                line: li + 1,
                column: chars.len() + 1,
            },
        });
    }
    let last = out.last().map_or(Pos { line: 1, column: 1 }, |t| t.pos);
    out.push(Token { tok: Tok::Eof, pos: last });
    Ok(out)
}
