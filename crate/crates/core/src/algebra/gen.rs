use std::fmt;

use crate::symbolic::{Idx, Scalar};

/// Operator sector; fixes statistics and the generator letter.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sector {
    Scalar,
    /// Scalar-type field with fermion statistics and trivial internal transport.
    FermiScalar,
    DiracParticle,
    DiracAntiparticle,
    Gauge,
    Ghost,
    Antighost,
    Nl,
}

impl Sector {
    pub fn odd(self) -> bool {
        matches!(
            self,
            Sector::FermiScalar
                | Sector::DiracParticle
                | Sector::DiracAntiparticle
                | Sector::Ghost
                | Sector::Antighost
        )
    }

    fn letter(self) -> &'static str {
        match self {
            Sector::Scalar => "a",
            Sector::FermiScalar => "f",
            Sector::DiracParticle => "a",
            Sector::DiracAntiparticle => "c",
            Sector::Gauge => "b",
            Sector::Ghost => "g",
            Sector::Antighost => "k",
            Sector::Nl => "n",
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Sector::Scalar => "scalar",
            Sector::FermiScalar => "fermi-scalar",
            Sector::DiracParticle => "dirac-particle",
            Sector::DiracAntiparticle => "dirac-antiparticle",
            Sector::Gauge => "gauge",
            Sector::Ghost => "ghost",
            Sector::Antighost => "antighost",
            Sector::Nl => "nl",
        }
    }
}

/// Emissions sort before absorptions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Species {
    Emit,
    Absorb,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Pos {
    Upper,
    Lower,
}

impl Pos {
    pub fn flip(self) -> Pos {
        match self {
            Pos::Upper => Pos::Lower,
            Pos::Lower => Pos::Upper,
        }
    }
}

/// One elementary absorption or emission generator.
///
/// The derived order is the canonical generator order: emissions first, then
/// by sector, mode, internal index, spacetime slot and index position.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OpGen {
    pub species: Species,
    pub sector: Sector,
    pub mode: Idx,
    pub internal: Idx,
    /// Spacetime index of gauge quanta; zero elsewhere.
    pub aux: u8,
    pub pos: Pos,
}

impl OpGen {
    pub fn new(species: Species, pos: Pos, sector: Sector, mode: Idx, internal: Idx) -> Self {
        OpGen {
            species,
            sector,
            mode,
            internal,
            aux: 0,
            pos,
        }
    }

    /// `a^α(p)`: particle absorption.
    pub fn a_up(sector: Sector, mode: Idx, internal: Idx) -> Self {
        OpGen::new(Species::Absorb, Pos::Upper, sector, mode, internal)
    }

    /// `a†_α(p)`: particle emission.
    pub fn a_dag_low(sector: Sector, mode: Idx, internal: Idx) -> Self {
        OpGen::new(Species::Emit, Pos::Lower, sector, mode, internal)
    }

    /// `a_α(p)`: antiparticle absorption.
    pub fn a_low(sector: Sector, mode: Idx, internal: Idx) -> Self {
        OpGen::new(Species::Absorb, Pos::Lower, sector, mode, internal)
    }

    /// `a†^α(p)`: antiparticle emission.
    pub fn a_dag_up(sector: Sector, mode: Idx, internal: Idx) -> Self {
        OpGen::new(Species::Emit, Pos::Upper, sector, mode, internal)
    }

    /// Gauge absorption `b_λ^I(p)`.
    pub fn b(lambda: u8, internal: Idx, mode: Idx) -> Self {
        OpGen {
            aux: lambda,
            ..OpGen::a_up(Sector::Gauge, mode, internal)
        }
    }

    /// Gauge emission `b†_λ^I(p)`.
    pub fn b_dag(lambda: u8, internal: Idx, mode: Idx) -> Self {
        OpGen {
            aux: lambda,
            ..OpGen::a_dag_low(Sector::Gauge, mode, internal)
        }
    }

    pub fn odd(&self) -> bool {
        self.sector.odd()
    }

    pub fn is_absorb(&self) -> bool {
        self.species == Species::Absorb
    }

    /// The generator this one contracts with (same slot, opposite species).
    pub fn partner(&self) -> OpGen {
        OpGen {
            species: match self.species {
                Species::Emit => Species::Absorb,
                Species::Absorb => Species::Emit,
            },
            pos: self.pos.flip(),
            ..self.clone()
        }
    }

    /// `⟦x, y⟧` for an absorption `x` followed by an emission `y`; `None` if
    /// they never contract.
    pub fn contraction(x: &OpGen, y: &OpGen) -> Option<Scalar> {
        if x.species != Species::Absorb
            || y.species != Species::Emit
            || x.sector != y.sector
            || x.pos == y.pos
            || x.aux != y.aux
        {
            return None;
        }
        let d = &Scalar::delta(x.mode.clone(), y.mode.clone())
            * &Scalar::delta(x.internal.clone(), y.internal.clone());
        if x.sector == Sector::Gauge && x.aux != 0 {
            // [b_λ, b†_μ] = g_{λμ} with signature (+,-,-,-)
            Some(-d)
        } else {
            Some(d)
        }
    }
}

impl fmt::Display for OpGen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let dag = if self.species == Species::Emit {
            "†"
        } else {
            ""
        };
        let mark = match self.pos {
            Pos::Upper => "^",
            Pos::Lower => "_",
        };
        if self.sector == Sector::Gauge {
            write!(
                f,
                "{}{}_{}^{}({})",
                self.sector.letter(),
                dag,
                self.aux,
                self.internal,
                self.mode
            )
        } else {
            write!(
                f,
                "{}{}{}{}({})",
                self.sector.letter(),
                dag,
                mark,
                self.internal,
                self.mode
            )
        }
    }
}
