use std::fmt;

/// Named formal symbol (mass, gauge parameter, time or point label).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Symbol(pub String);

impl Symbol {
    pub fn new(s: impl Into<String>) -> Self {
        Symbol(s.into())
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl From<&str> for Symbol {
    fn from(s: &str) -> Self {
        Symbol(s.to_string())
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// A mode or internal index: either a concrete value or a summation variable.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Idx {
    Val(u32),
    Var(Symbol),
}

impl Idx {
    pub fn var(name: &str) -> Self {
        Idx::Var(Symbol::new(name))
    }

    pub fn as_val(&self) -> Option<u32> {
        match self {
            Idx::Val(v) => Some(*v),
            Idx::Var(_) => None,
        }
    }

    pub fn subst(&self, var: &Symbol, to: &Idx) -> Idx {
        match self {
            Idx::Var(s) if s == var => to.clone(),
            other => other.clone(),
        }
    }
}

impl From<u32> for Idx {
    fn from(v: u32) -> Self {
        Idx::Val(v)
    }
}

impl fmt::Display for Idx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Idx::Val(v) => write!(f, "{v}"),
            Idx::Var(s) => write!(f, "{s}"),
        }
    }
}

/// Kronecker delta with its two arguments stored in sorted order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Delta(Idx, Idx);

/// Outcome of building a delta: it may evaluate immediately.
pub enum DeltaValue {
    Zero,
    One,
    Symbolic(Delta),
}

impl Delta {
    pub fn build(a: Idx, b: Idx) -> DeltaValue {
        if a == b {
            return DeltaValue::One;
        }
        if let (Idx::Val(_), Idx::Val(_)) = (&a, &b) {
            return DeltaValue::Zero;
        }
        if a <= b {
            DeltaValue::Symbolic(Delta(a, b))
        } else {
            DeltaValue::Symbolic(Delta(b, a))
        }
    }

    pub fn args(&self) -> (&Idx, &Idx) {
        (&self.0, &self.1)
    }

    pub fn involves(&self, var: &Symbol) -> bool {
        matches!(&self.0, Idx::Var(s) if s == var) || matches!(&self.1, Idx::Var(s) if s == var)
    }

    /// The argument paired with `var`, if `var` occurs.
    pub fn partner(&self, var: &Symbol) -> Option<&Idx> {
        match (&self.0, &self.1) {
            (Idx::Var(s), other) if s == var => Some(other),
            (other, Idx::Var(s)) if s == var => Some(other),
            _ => None,
        }
    }

    pub fn subst(&self, var: &Symbol, to: &Idx) -> DeltaValue {
        Delta::build(self.0.subst(var, to), self.1.subst(var, to))
    }
}

impl fmt::Display for Delta {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "δ({},{})", self.0, self.1)
    }
}
