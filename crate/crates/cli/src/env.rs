//! Name resolution: turns the declarations of a session into engine objects.

use std::collections::BTreeMap;
use std::sync::Arc;

use genuslab::algebra::{PolyRing, Polynomial, PrimeField, DEFAULT_PRIME};
use genuslab::module::{GradedAlgebra, GradedModule};
use genuslab::Error;

use crate::dsl::{CheckKind, Expr, Located, Pos, Session, SessionError, Stmt};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Kind {
    Ring,
    Ideal,
    Algebra,
    Module,
    Sequence,
}

impl Kind {
    fn word(self) -> &'static str {
        match self {
            Kind::Ring => "ring",
            Kind::Ideal => "ideal",
            Kind::Algebra => "algebra",
            Kind::Module => "module",
            Kind::Sequence => "sequence",
        }
    }
}

/// Polynomials together with the ring they live in.
#[derive(Clone, Debug)]
pub struct Elements {
    pub ring: String,
    pub polys: Vec<Polynomial>,
}

/// A module or algebra named by a command.
#[derive(Clone, Debug)]
pub struct Target {
    pub ring: String,
    pub module: GradedModule,
}

#[derive(Debug)]
pub struct Env {
    pub field: PrimeField,
    names: BTreeMap<String, Kind>,
    rings: BTreeMap<String, PolyRing>,
    ideals: BTreeMap<String, Elements>,
    algebras: BTreeMap<String, (String, Arc<GradedAlgebra>)>,
    modules: BTreeMap<String, Target>,
    sequences: BTreeMap<String, Elements>,
    current: Option<String>,
}

fn engine(pos: Pos, e: Error) -> SessionError {
    match e {
        Error::HomogeneityViolation(d) => SessionError::homogeneity(pos, d),
        e => SessionError::invalid(pos, e.to_string()),
    }
}

/// Evaluates an expression in `ring`; unknown variables are undefined names.
pub fn eval(e: &Expr, ring: &PolyRing, pos: Pos) -> Result<Polynomial, SessionError> {
    let f = ring.field();
    Ok(match e {
        Expr::Int(n) => Polynomial::constant((n % u64::from(f.characteristic())) as u32, f),
        Expr::Var(v) => match ring.var_index(v) {
            Some(i) => Polynomial::var(i),
            None => return Err(SessionError::undefined(pos, "variable", v)),
        },
        Expr::Neg(a) => eval(a, ring, pos)?.neg(f),
        Expr::Add(a, b) => eval(a, ring, pos)?.add(&eval(b, ring, pos)?, f).map_err(|e| engine(pos, e))?,
        Expr::Sub(a, b) => eval(a, ring, pos)?.sub(&eval(b, ring, pos)?, f).map_err(|e| engine(pos, e))?,
        Expr::Mul(a, b) => eval(a, ring, pos)?.mul(&eval(b, ring, pos)?, f),
        Expr::Pow(a, k) => eval(a, ring, pos)?.pow(*k, f),
    })
}

fn same_ring(t: &Target, q: &Elements, pos: Pos) -> Result<(), SessionError> {
    if t.ring == q.ring {
        Ok(())
    } else {
        Err(SessionError::invalid(
            pos,
            format!("the module lives over ring `{}` but the elements over `{}`", t.ring, q.ring),
        ))
    }
}

impl Env {
    /// Resolves every declaration and checks every command's arguments.
    pub fn build(session: &Session) -> Result<Env, SessionError> {
        let mut env = Env {
            field: PrimeField::new(DEFAULT_PRIME).expect("default prime"),
            names: BTreeMap::new(),
            rings: BTreeMap::new(),
            ideals: BTreeMap::new(),
            algebras: BTreeMap::new(),
            modules: BTreeMap::new(),
            sequences: BTreeMap::new(),
            current: None,
        };
        let mut seen_prime = false;
        for st in &session.statements {
            let pos = st.pos;
            match &st.stmt {
                Stmt::Prime(p) => {
                    if seen_prime || !env.names.is_empty() {
                        return Err(SessionError::invalid(pos, "`prime` must come once, before any declaration"));
                    }
                    env.field = PrimeField::new(*p).map_err(|e| SessionError::invalid(pos, e.to_string()))?;
                    seen_prime = true;
                }
                Stmt::Ring { name, vars } => {
                    env.declare(name, Kind::Ring, pos)?;
                    let r = PolyRing::new(vars.clone(), env.field).map_err(|e| SessionError::invalid(pos, e.to_string()))?;
                    env.rings.insert(name.clone(), r);
                    env.current = Some(name.clone());
                }
                Stmt::Ideal { name, gens } => {
                    let e = env.elements(gens, pos)?;
                    env.declare(name, Kind::Ideal, pos)?;
                    env.ideals.insert(name.clone(), e);
                }
                Stmt::Sequence { name, elems } => {
                    let e = env.elements(elems, pos)?;
                    env.declare(name, Kind::Sequence, pos)?;
                    env.sequences.insert(name.clone(), e);
                }
                Stmt::Algebra { name, ring, ideal } => {
                    let r = env.lookup(ring, Kind::Ring, pos)?;
                    let r = env.rings[r].clone();
                    let gens = match ideal {
                        Some(i) => {
                            let i = env.lookup(i, Kind::Ideal, pos)?;
                            let e = &env.ideals[i];
                            if e.ring != *ring {
                                return Err(SessionError::invalid(
                                    pos,
                                    format!("ideal `{i}` lives in ring `{}`, not `{ring}`", e.ring),
                                ));
                            }
                            e.polys.clone()
                        }
                        None => Vec::new(),
                    };
                    let a = GradedAlgebra::new(r, gens).map_err(|e| engine(pos, e))?;
                    env.declare(name, Kind::Algebra, pos)?;
                    env.algebras.insert(name.clone(), (ring.clone(), a));
                    env.current = Some(ring.clone());
                }
                Stmt::Module {
                    name,
                    algebra,
                    twists,
                    rows,
                } => {
                    let key = env.lookup(algebra, Kind::Algebra, pos)?;
                    let (ring, a) = env.algebras[key].clone();
                    let mut mat = Vec::with_capacity(rows.len());
                    for row in rows {
                        let mut r = Vec::with_capacity(row.len());
                        for l in row {
                            r.push(eval(&l.expr, a.ring(), l.pos)?);
                        }
                        mat.push(r);
                    }
                    let m = GradedModule::cokernel(a, twists.clone(), &mat).map_err(|e| engine(pos, e))?;
                    env.declare(name, Kind::Module, pos)?;
                    env.modules.insert(name.clone(), Target { ring: ring.clone(), module: m });
                    env.current = Some(ring);
                }
                Stmt::Compute { target, sequence } => {
                    let t = env.target(target, pos)?;
                    same_ring(&t, &env.sequence(sequence, pos)?, pos)?;
                }
                Stmt::Check { kind, args } => {
                    let t = env.target(&args[0], pos)?;
                    let q = if *kind == CheckKind::Ulrich {
                        env.ideal_like(&args[1], pos)?
                    } else {
                        env.sequence(&args[1], pos)?
                    };
                    same_ring(&t, &q, pos)?;
                }
                Stmt::Corpus { .. } => {}
            }
        }
        Ok(env)
    }

    fn declare(&mut self, name: &str, kind: Kind, pos: Pos) -> Result<(), SessionError> {
        if let Some(k) = self.names.get(name) {
            return Err(SessionError::invalid(
                pos,
                format!("`{name}` is already declared as a {}", k.word()),
            ));
        }
        self.names.insert(name.to_string(), kind);
        Ok(())
    }

    fn lookup<'a>(&self, name: &'a str, kind: Kind, pos: Pos) -> Result<&'a str, SessionError> {
        match self.names.get(name) {
            Some(k) if *k == kind => Ok(name),
            Some(k) => Err(SessionError::invalid(
                pos,
                format!("`{name}` is a {}, expected a {}", k.word(), kind.word()),
            )),
            None => Err(SessionError::undefined(pos, kind.word(), name)),
        }
    }

    fn elements(&self, list: &[Located], pos: Pos) -> Result<Elements, SessionError> {
        let Some(ring) = &self.current else {
            return Err(SessionError::undefined(pos, "ring", "(none declared)"));
        };
        let r = &self.rings[ring];
        let polys = list.iter().map(|l| eval(&l.expr, r, l.pos)).collect::<Result<Vec<_>, _>>()?;
        Ok(Elements {
            ring: ring.clone(),
            polys,
        })
    }

    /// A module, or an algebra viewed as a module over itself.
    pub fn target(&self, name: &str, pos: Pos) -> Result<Target, SessionError> {
        match self.names.get(name) {
            Some(Kind::Module) => Ok(self.modules[name].clone()),
            Some(Kind::Algebra) => {
                let (ring, a) = &self.algebras[name];
                Ok(Target {
                    ring: ring.clone(),
                    module: a.as_module(),
                })
            }
            Some(k) => Err(SessionError::invalid(
                pos,
                format!("`{name}` is a {}, expected a module or algebra", k.word()),
            )),
            None => Err(SessionError::undefined(pos, "module or algebra", name)),
        }
    }

    pub fn sequence(&self, name: &str, pos: Pos) -> Result<Elements, SessionError> {
        let n = self.lookup(name, Kind::Sequence, pos)?;
        Ok(self.sequences[n].clone())
    }

    /// An ideal or a sequence, as generators.
    pub fn ideal_like(&self, name: &str, pos: Pos) -> Result<Elements, SessionError> {
        match self.names.get(name) {
            Some(Kind::Ideal) => Ok(self.ideals[name].clone()),
            Some(Kind::Sequence) => Ok(self.sequences[name].clone()),
            Some(k) => Err(SessionError::invalid(
                pos,
                format!("`{name}` is a {}, expected an ideal or sequence", k.word()),
            )),
            None => Err(SessionError::undefined(pos, "ideal", name)),
        }
    }
}
