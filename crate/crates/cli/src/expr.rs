//! The `eval` mini-language: prefix calls such as
//! `scomm(field(scalar,a,x), conj(scalar,b,y))`, parsed by recursive descent.

use std::fmt;

use superfield::algebra::{
    koszul_product, normal_order, super_bracket, GradedExpr, OpGen, Parity, Pos, Rule, Sector,
    Species,
};
use superfield::bv::{brst_operator, FiberCoord, TheorySpec};
use superfield::fields::{conjugate_field, d_basis, express_in, field, Comp, FieldSector, Stat};
use superfield::lattice::{Family, ModeLattice};
use superfield::oracle::{matrix_bracket, max_emissions, OracleSpace};
use superfield::symbolic::{Binding, FieldPoint, Idx, Scalar};
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum ExprError {
    #[error("parse error at column {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("at column {pos}: unknown identifier `{name}`")]
    Unknown { pos: usize, name: String },
    #[error("at column {pos}: {msg}")]
    Eval { pos: usize, msg: String },
}

#[derive(Clone, Debug, PartialEq)]
pub enum Node {
    Int {
        value: i64,
        pos: usize,
    },
    Ident {
        name: String,
        pos: usize,
    },
    Call {
        name: String,
        args: Vec<Node>,
        pos: usize,
    },
}

impl Node {
    pub fn pos(&self) -> usize {
        match self {
            Node::Int { pos, .. } | Node::Ident { pos, .. } | Node::Call { pos, .. } => *pos,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Ident(String),
    Int(i64),
    LParen,
    RParen,
    Comma,
    End,
}

struct Lexer {
    toks: Vec<(Tok, usize)>,
    at: usize,
}

fn lex(src: &str) -> Result<Vec<(Tok, usize)>, ExprError> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let pos = i + 1;
        match c {
            _ if c.is_whitespace() => i += 1,
            '(' => {
                out.push((Tok::LParen, pos));
                i += 1;
            }
            ')' => {
                out.push((Tok::RParen, pos));
                i += 1;
            }
            ',' => {
                out.push((Tok::Comma, pos));
                i += 1;
            }
            '-' | '0'..='9' => {
                let start = i;
                i += 1;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let text: String = chars[start..i].iter().collect();
                let value = text.parse().map_err(|_| ExprError::Parse {
                    pos,
                    msg: format!("bad integer `{text}`"),
                })?;
                out.push((Tok::Int(value), pos));
            }
            _ if c.is_alphabetic() || c == '_' => {
                let start = i;
                while i < chars.len()
                    && (chars[i].is_alphanumeric() || chars[i] == '_' || chars[i] == '\'')
                {
                    i += 1;
                }
                out.push((Tok::Ident(chars[start..i].iter().collect()), pos));
            }
            _ => {
                return Err(ExprError::Parse {
                    pos,
                    msg: format!("unexpected character `{c}`"),
                })
            }
        }
    }
    out.push((Tok::End, chars.len() + 1));
    Ok(out)
}

impl Lexer {
    fn peek(&self) -> &(Tok, usize) {
        &self.toks[self.at]
    }

    fn next(&mut self) -> (Tok, usize) {
        let t = self.toks[self.at].clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn expr(&mut self) -> Result<Node, ExprError> {
        match self.next() {
            (Tok::Int(value), pos) => Ok(Node::Int { value, pos }),
            (Tok::Ident(name), pos) => {
                if self.peek().0 != Tok::LParen {
                    return Ok(Node::Ident { name, pos });
                }
                self.next();
                let mut args = Vec::new();
                if self.peek().0 == Tok::RParen {
                    self.next();
                    return Ok(Node::Call { name, args, pos });
                }
                loop {
                    args.push(self.expr()?);
                    match self.next() {
                        (Tok::Comma, _) => continue,
                        (Tok::RParen, _) => break,
                        (t, p) => {
                            return Err(ExprError::Parse {
                                pos: p,
                                msg: format!("expected `,` or `)`, found {}", describe(&t)),
                            })
                        }
                    }
                }
                Ok(Node::Call { name, args, pos })
            }
            (t, pos) => Err(ExprError::Parse {
                pos,
                msg: format!("expected an expression, found {}", describe(&t)),
            }),
        }
    }
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Ident(s) => format!("`{s}`"),
        Tok::Int(n) => format!("`{n}`"),
        Tok::LParen => "`(`".into(),
        Tok::RParen => "`)`".into(),
        Tok::Comma => "`,`".into(),
        Tok::End => "end of input".into(),
    }
}

pub fn parse(src: &str) -> Result<Node, ExprError> {
    let mut lx = Lexer {
        toks: lex(src)?,
        at: 0,
    };
    let n = lx.expr()?;
    match lx.next() {
        (Tok::End, _) => Ok(n),
        (t, pos) => Err(ExprError::Parse {
            pos,
            msg: format!("trailing input starting with {}", describe(&t)),
        }),
    }
}

/// Result of evaluating an expression.
#[derive(Clone, Debug)]
pub enum Value {
    Op(GradedExpr),
    /// A field together with the event and family it was built at.
    Field(GradedExpr, FieldPoint, Family),
    Scalar(Scalar, Option<String>),
    Lines(Vec<String>),
}

impl Value {
    pub fn expr(&self) -> Option<&GradedExpr> {
        match self {
            Value::Op(e) | Value::Field(e, ..) => Some(e),
            _ => None,
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Op(e) | Value::Field(e, ..) => write!(f, "{e}"),
            Value::Scalar(s, None) => write!(f, "{s}"),
            Value::Scalar(s, Some(r)) => write!(f, "{r}\n  = {s}"),
            Value::Lines(v) => write!(f, "{}", v.join("\n")),
        }
    }
}

/// Events the oracle binds when representing an expression numerically.
pub const ORACLE_EVENTS: [(&str, f64, [f64; 3]); 4] = [
    ("x", 0.3, [0.7, -0.2, 0.5]),
    ("y", -0.4, [0.1, 0.9, -0.6]),
    ("z", 1.1, [-0.5, 0.4, 0.2]),
    ("w", -0.8, [0.3, -0.7, 0.9]),
];

/// Fock-space cross-check of a `scomm` at the top level.
#[derive(Clone, Debug, PartialEq)]
pub struct OracleCheck {
    pub dim: usize,
    pub residual: f64,
}

/// Builds a fiber coordinate from its concrete index values.
type CoordFn = fn(&[u8]) -> FiberCoord;

pub struct Evaluator<'a> {
    pub lattice: &'a ModeLattice,
    pub theory: &'a TheorySpec,
}

fn err(pos: usize, msg: impl Into<String>) -> ExprError {
    ExprError::Eval {
        pos,
        msg: msg.into(),
    }
}

fn ident(n: &Node) -> Result<&str, ExprError> {
    match n {
        Node::Ident { name, .. } => Ok(name),
        other => Err(err(other.pos(), "expected an identifier")),
    }
}

fn index(n: &Node) -> Result<Idx, ExprError> {
    match n {
        Node::Int { value, pos } => u32::try_from(*value)
            .map(Idx::Val)
            .map_err(|_| err(*pos, "indices are non-negative")),
        Node::Ident { name, .. } => Ok(Idx::var(name)),
        Node::Call { pos, .. } => Err(err(*pos, "expected an index")),
    }
}

fn small(n: &Node, below: i64) -> Result<usize, ExprError> {
    match n {
        Node::Int { value, .. } if (0..below).contains(value) => Ok(*value as usize),
        other => Err(err(
            other.pos(),
            format!("expected an integer in 0..{below}"),
        )),
    }
}

fn point(n: &Node) -> Result<FieldPoint, ExprError> {
    match n {
        Node::Int { value: 0, .. } => Ok(FieldPoint::origin()),
        Node::Ident { name, .. } if name == "origin" => Ok(FieldPoint::origin()),
        Node::Ident { name, .. } => Ok(FieldPoint::named(name)),
        other => Err(err(other.pos(), "expected an event name")),
    }
}

fn field_sector(n: &Node) -> Result<FieldSector, ExprError> {
    Ok(match ident(n)? {
        "scalar" => FieldSector::Scalar(Stat::Boson),
        "fscalar" | "fermi_scalar" => FieldSector::Scalar(Stat::Fermion),
        "dirac" => FieldSector::Dirac,
        "gauge" => FieldSector::Gauge,
        "ghost" => FieldSector::Ghost,
        other => {
            return Err(ExprError::Unknown {
                pos: n.pos(),
                name: other.to_string(),
            })
        }
    })
}

fn op_sector(n: &Node) -> Result<Sector, ExprError> {
    Ok(match ident(n)? {
        "scalar" => Sector::Scalar,
        "fscalar" | "fermi_scalar" => Sector::FermiScalar,
        "dirac" => Sector::DiracParticle,
        "antidirac" => Sector::DiracAntiparticle,
        "ghost" => Sector::Ghost,
        "antighost" => Sector::Antighost,
        "nl" => Sector::Nl,
        other => {
            return Err(ExprError::Unknown {
                pos: n.pos(),
                name: other.to_string(),
            })
        }
    })
}

fn arity(name: &str, args: &[Node], lo: usize, hi: usize, pos: usize) -> Result<(), ExprError> {
    if args.len() < lo || args.len() > hi {
        let want = if lo == hi {
            format!("{lo}")
        } else {
            format!("{lo} to {hi}")
        };
        return Err(err(
            pos,
            format!("`{name}` takes {want} arguments, got {}", args.len()),
        ));
    }
    Ok(())
}

impl Evaluator<'_> {
    pub fn eval_str(&self, src: &str) -> Result<Value, ExprError> {
        self.eval(&parse(src)?)
    }

    fn op(&self, n: &Node) -> Result<GradedExpr, ExprError> {
        match self.eval(n)? {
            Value::Op(e) | Value::Field(e, ..) => Ok(e),
            Value::Scalar(s, _) => Ok(GradedExpr::scalar(s)),
            Value::Lines(_) => Err(err(n.pos(), "not an operator expression")),
        }
    }

    fn build_field(&self, args: &[Node], pos: usize, conj: bool) -> Result<Value, ExprError> {
        let name = if conj { "conj" } else { "field" };
        let sector = field_sector(args.first().ok_or_else(|| err(pos, "missing sector"))?)?;
        let gauge = sector == FieldSector::Gauge;
        let base = if gauge { 4 } else { 3 };
        arity(name, args, base, base + 1, pos)?;
        let idx = index(&args[1])?;
        let comp = if gauge {
            Comp::gauge(small(&args[2], 4)? as u8, idx)
        } else {
            Comp::idx(idx)
        };
        let x = point(&args[base - 1])?;
        let deriv = args.get(base).map(|d| small(d, 4)).transpose()?;
        let e = if conj {
            conjugate_field(sector, &comp, &x, deriv, self.lattice)
        } else {
            field(sector, &comp, &x, deriv, self.lattice)
        }
        .map_err(|e| err(pos, e.to_string()))?;
        Ok(Value::Field(e, x, sector.family()))
    }

    fn generator(&self, args: &[Node], pos: usize, absorb: bool) -> Result<Value, ExprError> {
        arity(if absorb { "absorb" } else { "emit" }, args, 2, 3, pos)?;
        let sector = args
            .get(2)
            .map(op_sector)
            .transpose()?
            .unwrap_or(Sector::Scalar);
        // antiparticle-type sectors absorb with a lower index
        let lower = matches!(sector, Sector::DiracAntiparticle | Sector::Antighost);
        let a = OpGen::new(
            Species::Absorb,
            if lower { Pos::Lower } else { Pos::Upper },
            sector,
            index(&args[0])?,
            index(&args[1])?,
        );
        Ok(Value::Op(GradedExpr::gen(if absorb {
            a
        } else {
            a.partner()
        })))
    }

    fn scomm(&self, args: &[Node], pos: usize) -> Result<Value, ExprError> {
        arity("scomm", args, 2, 2, pos)?;
        let (a, b) = (self.eval(&args[0])?, self.eval(&args[1])?);
        let (ea, eb) = (
            a.expr()
                .ok_or_else(|| err(args[0].pos(), "not an operator"))?,
            b.expr()
                .ok_or_else(|| err(args[1].pos(), "not an operator"))?,
        );
        let br = super_bracket(ea, eb).map_err(|e| err(pos, e.to_string()))?;
        let Some(s) = br.as_scalar() else {
            return Ok(Value::Op(br));
        };
        let rendered = match (&a, &b) {
            (Value::Field(_, x, fa), Value::Field(_, y, fb)) if fa == fb => {
                self.render_d(&s, &x.sub(y), *fa)
            }
            _ => None,
        };
        Ok(Value::Scalar(s, rendered))
    }

    /// `s` as a multiple of `𝒟`, `D⁺ − D⁻`, `D±` or one of their derivatives.
    fn render_d(&self, s: &Scalar, y: &FieldPoint, fam: Family) -> Option<String> {
        std::iter::once(None)
            .chain((0..4).map(Some))
            .filter_map(|d| d_basis(y, self.lattice, fam, d).ok())
            .find_map(|basis| express_in(s, &basis))
            .map(|r| format!("{r} at y = {y}"))
    }

    fn brst(&self, args: &[Node], pos: usize) -> Result<Value, ExprError> {
        let name = ident(
            args.first()
                .ok_or_else(|| err(pos, "`S` needs a field name"))?,
        )?;
        let t = self.theory;
        let (d, n) = (t.dim() as u32, t.n() as u32);
        let spin = t.spinor as u32;
        let (ranges, mk): (Vec<u32>, CoordFn) = match name {
            "omega" | "ghost" => (vec![d], |v| FiberCoord::ghost(v[0])),
            "omegabar" | "antighost" => (vec![d], |v| FiberCoord::antighost(v[0])),
            "n" | "aux" => (vec![d], |v| FiberCoord::aux(v[0])),
            "A" | "gauge" => (vec![d, 4], |v| FiberCoord::gauge(v[0], v[1])),
            "psi" => (vec![spin, n], |v| FiberCoord::psi(v[0], v[1])),
            "psibar" => (vec![spin, n], |v| FiberCoord::psi_bar(v[0], v[1])),
            other => {
                return Err(ExprError::Unknown {
                    pos: args[0].pos(),
                    name: other.to_string(),
                })
            }
        };
        arity("S", args, 1 + ranges.len(), 1 + ranges.len(), pos)?;
        // symbolic arguments expand over their full range
        let mut choices: Vec<Vec<u8>> = vec![Vec::new()];
        for (a, r) in args[1..].iter().zip(&ranges) {
            let vals: Vec<u8> = match index(a)? {
                Idx::Val(v) if v < *r => vec![v as u8],
                Idx::Val(_) => return Err(err(a.pos(), format!("index out of range 0..{r}"))),
                Idx::Var(_) => (0..*r as u8).collect(),
            };
            choices = choices
                .into_iter()
                .flat_map(|c| {
                    vals.iter().map(move |v| {
                        let mut c = c.clone();
                        c.push(*v);
                        c
                    })
                })
                .collect();
        }
        let s = brst_operator(t);
        let mut lines = Vec::new();
        for c in choices {
            let coord = mk(&c);
            let img = s.image(&coord).map_err(|e| err(pos, e.to_string()))?;
            lines.push(format!("S {coord} = {img}"));
        }
        Ok(Value::Lines(lines))
    }

    /// Compares the matrix super-commutator of the two operands of a top-level
    /// `scomm` with the represented symbolic result. `None` for other nodes.
    pub fn oracle_check(
        &self,
        n: &Node,
        n_max: usize,
        cap: usize,
    ) -> Result<Option<OracleCheck>, ExprError> {
        let Node::Call { name, args, pos } = n else {
            return Ok(None);
        };
        if name != "scomm" || args.len() != 2 {
            return Ok(None);
        }
        let (a, b) = (self.op(&args[0])?, self.op(&args[1])?);
        let br = super_bracket(&a, &b).map_err(|e| err(*pos, e.to_string()))?;
        let binding = ORACLE_EVENTS
            .iter()
            .fold(Binding::default(), |bd, (name, t, x)| {
                bd.with_event(name, *t, *x)
            });
        let oracle = |e: superfield::oracle::OracleError| err(*pos, format!("oracle: {e}"));
        let sp = OracleSpace::for_exprs([&a, &b], n_max, cap).map_err(oracle)?;
        let both_odd = a.parity() == Parity::Odd && b.parity() == Parity::Odd;
        let m = matrix_bracket(
            &sp.represent(&a, &binding).map_err(oracle)?,
            &sp.represent(&b, &binding).map_err(oracle)?,
            both_odd,
        );
        let d = m.sub(&sp.represent(&br, &binding).map_err(oracle)?);
        let depth = max_emissions(&a) + max_emissions(&b);
        Ok(Some(OracleCheck {
            dim: sp.dim(),
            residual: d.max_abs_on(&sp.safe_mask(depth)),
        }))
    }

    pub fn eval(&self, n: &Node) -> Result<Value, ExprError> {
        let (name, args, pos) = match n {
            Node::Int { value, .. } => return Ok(Value::Scalar(Scalar::int(*value), None)),
            Node::Ident { name, pos } => {
                return Err(ExprError::Unknown {
                    pos: *pos,
                    name: name.clone(),
                })
            }
            Node::Call { name, args, pos } => (name.as_str(), args.as_slice(), *pos),
        };
        match name {
            "field" => self.build_field(args, pos, false),
            "conj" => self.build_field(args, pos, true),
            "absorb" => self.generator(args, pos, true),
            "emit" => self.generator(args, pos, false),
            "scomm" => self.scomm(args, pos),
            "prod" | "mprod" => {
                let rule = if name == "prod" {
                    Rule::Physical
                } else {
                    Rule::Modified
                };
                arity(name, args, 1, usize::MAX, pos)?;
                let mut acc = self.op(&args[0])?;
                for a in &args[1..] {
                    acc = koszul_product(&acc, &self.op(a)?, rule);
                }
                Ok(Value::Op(acc))
            }
            "add" => {
                arity(name, args, 1, usize::MAX, pos)?;
                let mut acc = GradedExpr::zero();
                for a in args {
                    acc.add_assign(&self.op(a)?);
                }
                Ok(Value::Op(acc))
            }
            "neg" => {
                arity(name, args, 1, 1, pos)?;
                Ok(Value::Op(self.op(&args[0])?.scale(&Scalar::int(-1))))
            }
            "normal" => {
                arity(name, args, 1, 1, pos)?;
                Ok(Value::Op(normal_order(&self.op(&args[0])?)))
            }
            "S" => self.brst(args, pos),
            other => Err(ExprError::Unknown {
                pos,
                name: other.to_string(),
            }),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use superfield::lie::su2;
    use superfield::suites::default_lattice;

    fn run(src: &str) -> Result<Value, ExprError> {
        let l = default_lattice();
        let t = TheorySpec::new(su2());
        Evaluator {
            lattice: &l,
            theory: &t,
        }
        .eval_str(src)
    }

    #[test]
    fn parses_nested_calls() {
        let n = parse("scomm(field(scalar, a, x), conj(scalar,b,y))").unwrap();
        let Node::Call { name, args, pos } = n else {
            panic!()
        };
        assert_eq!((name.as_str(), args.len(), pos), ("scomm", 2, 1));
        assert_eq!(args[1].pos(), 28);
    }

    #[test]
    fn parse_errors_have_positions() {
        assert_eq!(
            parse("scomm(a b)"),
            Err(ExprError::Parse {
                pos: 9,
                msg: "expected `,` or `)`, found `b`".into()
            })
        );
        assert!(matches!(
            parse("f(1,"),
            Err(ExprError::Parse { pos: 5, .. })
        ));
        assert!(matches!(
            parse("f(1) x"),
            Err(ExprError::Parse { pos: 6, .. })
        ));
        assert!(matches!(
            parse("f(#)"),
            Err(ExprError::Parse { pos: 3, .. })
        ));
    }

    #[test]
    fn unknown_identifiers_reported() {
        assert!(matches!(
            run("scomm(field(tachyon,a,x), conj(scalar,b,y))"),
            Err(ExprError::Unknown { pos: 13, .. })
        ));
        assert!(matches!(
            run("frob(1)"),
            Err(ExprError::Unknown { pos: 1, .. })
        ));
    }

    #[test]
    fn scalar_bracket_renders_in_d_basis() {
        let v = run("scomm(field(scalar,a,x), conj(scalar,b,y))").unwrap();
        let Value::Scalar(_, Some(r)) = &v else {
            panic!("{v}")
        };
        assert!(r.contains("𝒟"), "{r}");
        assert!(r.contains("δ"), "{r}");
    }

    #[test]
    fn normal_order_of_absorb_emit() {
        let v = run("normal(prod(absorb(p,1), emit(p,1)))").unwrap();
        let e = v.expr().unwrap();
        assert_eq!(e.len(), 2);
        assert_eq!(e.scalar_part(), Scalar::one());
        assert!(v.to_string().contains("(1)·a†_1(p) a^1(p)"), "{v}");
        let f = run("normal(prod(absorb(p,1,ghost), emit(p,1,ghost)))").unwrap();
        assert!(f.to_string().contains("(-1)"), "{f}");
    }

    #[test]
    fn oracle_agrees_on_concrete_bracket() {
        let l = default_lattice();
        let t = TheorySpec::new(su2());
        let ev = Evaluator {
            lattice: &l,
            theory: &t,
        };
        let n = parse("scomm(field(scalar,0,x), conj(scalar,0,y))").unwrap();
        let c = ev.oracle_check(&n, 3, 1024).unwrap().unwrap();
        assert!(c.residual < 1e-12, "{c:?}");
        assert!(ev
            .oracle_check(&parse("absorb(0,0)").unwrap(), 3, 1024)
            .unwrap()
            .is_none());
        let sym = parse("scomm(field(scalar,a,x), conj(scalar,b,y))").unwrap();
        assert!(ev.oracle_check(&sym, 3, 1024).is_err());
    }

    #[test]
    fn brst_of_ghost() {
        let v = run("S(omega, I)").unwrap();
        let Value::Lines(lines) = v else { panic!() };
        assert_eq!(lines.len(), 3);
        assert!(lines[0].contains("ω"), "{}", lines[0]);
        assert!(run("S(A, 0, 4)").is_err());
        assert!(run("S(omega)").is_err());
    }
}
