use std::fmt;

/// A polynomial expression over the variables of a ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Int(u64),
    Var(String),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
}

/// Source position, 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct Pos {
    pub line: usize,
    pub column: usize,
}

impl fmt::Display for Pos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.column)
    }
}

/// An expression with the position of its first token.
#[derive(Clone, Debug)]
pub struct Located {
    pub expr: Expr,
    pub pos: Pos,
}

impl PartialEq for Located {
    fn eq(&self, other: &Self) -> bool {
        self.expr == other.expr
    }
}

impl Eq for Located {}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckKind {
    Thm34,
    Prop38,
    Inequalities,
    Ulrich,
}

impl CheckKind {
    pub fn keyword(self) -> &'static str {
        match self {
            CheckKind::Thm34 => "thm34",
            CheckKind::Prop38 => "prop38",
            CheckKind::Inequalities => "inequalities",
            CheckKind::Ulrich => "ulrich",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Stmt {
    Prime(u32),
    Ring { name: String, vars: Vec<String> },
    Ideal { name: String, gens: Vec<Located> },
    Algebra { name: String, ring: String, ideal: Option<String> },
    Module { name: String, algebra: String, twists: Vec<i32>, rows: Vec<Vec<Located>> },
    Sequence { name: String, elems: Vec<Located> },
    Compute { target: String, sequence: String },
    Check { kind: CheckKind, args: Vec<String> },
    Corpus { family: String, args: Vec<u64> },
}

impl Stmt {
    pub fn is_command(&self) -> bool {
        matches!(self, Stmt::Compute { .. } | Stmt::Check { .. } | Stmt::Corpus { .. })
    }
}

#[derive(Clone, Debug)]
pub struct Statement {
    pub stmt: Stmt,
    pub pos: Pos,
}

impl PartialEq for Statement {
    fn eq(&self, other: &Self) -> bool {
        self.stmt == other.stmt
    }
}

impl Eq for Statement {}

/// A parsed session file.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Session {
    pub statements: Vec<Statement>,
}

impl Session {
    pub fn prime(&self) -> Option<u32> {
        self.statements.iter().find_map(|s| match s.stmt {
            Stmt::Prime(p) => Some(p),
            _ => None,
        })
    }

    pub fn commands(&self) -> impl Iterator<Item = &Statement> {
        self.statements.iter().filter(|s| s.stmt.is_command())
    }

    pub fn count(&self, pred: impl Fn(&Stmt) -> bool) -> usize {
        self.statements.iter().filter(|s| pred(&s.stmt)).count()
    }
}

fn prec(e: &Expr) -> u8 {
    match e {
        Expr::Add(..) | Expr::Sub(..) => 1,
        Expr::Mul(..) => 2,
        Expr::Neg(_) => 3,
        Expr::Pow(..) => 4,
        Expr::Int(_) | Expr::Var(_) => 5,
    }
}

fn write_expr(f: &mut fmt::Formatter<'_>, e: &Expr, min: u8) -> fmt::Result {
    let paren = prec(e) < min;
    if paren {
        write!(f, "(")?;
    }
    match e {
        Expr::Int(n) => write!(f, "{n}")?,
        Expr::Var(v) => write!(f, "{v}")?,
        Expr::Neg(a) => {
            write!(f, "-")?;
            write_expr(f, a, 3)?;
        }
        Expr::Add(a, b) => {
            write_expr(f, a, 1)?;
            write!(f, " + ")?;
            write_expr(f, b, 2)?;
        }
        Expr::Sub(a, b) => {
            write_expr(f, a, 1)?;
            write!(f, " - ")?;
            write_expr(f, b, 2)?;
        }
        Expr::Mul(a, b) => {
            write_expr(f, a, 2)?;
            write!(f, "*")?;
            write_expr(f, b, 3)?;
        }
        Expr::Pow(a, k) => {
            write_expr(f, a, 5)?;
            write!(f, "^{k}")?;
        }
    }
    if paren {
        write!(f, ")")?;
    }
    Ok(())
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_expr(f, self, 0)
    }
}

fn join(items: &[Located]) -> String {
    items.iter().map(|l| l.expr.to_string()).collect::<Vec<_>>().join(", ")
}

impl fmt::Display for Stmt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Stmt::Prime(p) => write!(f, "prime {p}"),
            Stmt::Ring { name, vars } => write!(f, "ring {name} = vars {}", vars.join(" ")),
            Stmt::Ideal { name, gens } => write!(f, "ideal {name} = {}", join(gens)),
            Stmt::Algebra { name, ring, ideal } => match ideal {
                Some(i) => write!(f, "algebra {name} = {ring} / {i}"),
                None => write!(f, "algebra {name} = {ring}"),
            },
            Stmt::Module {
                name,
                algebra,
                twists,
                rows,
            } => {
                let tw: Vec<String> = twists.iter().map(|t| t.to_string()).collect();
                let rs: Vec<String> = rows.iter().map(|r| format!("[{}]", join(r))).collect();
                write!(f, "module {name} = coker {algebra} [{}] [{}]", tw.join(", "), rs.join(", "))
            }
            Stmt::Sequence { name, elems } => write!(f, "sequence {name} = {}", join(elems)),
            Stmt::Compute { target, sequence } => write!(f, "compute invariants {target} {sequence}"),
            Stmt::Check { kind, args } => write!(f, "check {} {}", kind.keyword(), args.join(" ")),
            Stmt::Corpus { family, args } => {
                write!(f, "corpus {family}")?;
                for a in args {
                    write!(f, " {a}")?;
                }
                Ok(())
            }
        }
    }
}

impl fmt::Display for Session {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.statements {
            writeln!(f, "{}", s.stmt)?;
        }
        Ok(())
    }
}
