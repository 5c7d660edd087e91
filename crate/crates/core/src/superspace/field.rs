use serde::Serialize;
use std::fmt;

/// Component fields of the chiral and vector multiplets.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FieldKind {
    Phi,
    PhiDag,
    F,
    FDag,
    /// `A_μ`, index `μ ∈ 0..3` (lower)
    A,
    D,
    /// `ψ_α`, index `α ∈ {1, 2}` (lower)
    Psi,
    /// `ψ̄_α̇` (lower)
    PsiBar,
    Lambda,
    LambdaBar,
}

impl FieldKind {
    pub fn is_fermionic(self) -> bool {
        matches!(self, FieldKind::Psi | FieldKind::PsiBar | FieldKind::Lambda | FieldKind::LambdaBar)
    }

    pub fn conj(self) -> FieldKind {
        use FieldKind::*;
        match self {
            Phi => PhiDag,
            PhiDag => Phi,
            F => FDag,
            FDag => F,
            Psi => PsiBar,
            PsiBar => Psi,
            Lambda => LambdaBar,
            LambdaBar => Lambda,
            A => A,
            D => D,
        }
    }

    pub fn name(self) -> &'static str {
        use FieldKind::*;
        match self {
            Phi => "phi",
            PhiDag => "phi_dag",
            F => "F",
            FDag => "F_dag",
            A => "A",
            D => "D",
            Psi => "psi",
            PsiBar => "psibar",
            Lambda => "lambda",
            LambdaBar => "lambdabar",
        }
    }

    fn has_index(self) -> bool {
        matches!(self, FieldKind::A) || self.is_fermionic()
    }
}

/// A component field with an explicit index and spacetime derivatives `∂_0^{n₀}⋯∂_3^{n₃}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct FieldFactor {
    pub kind: FieldKind,
    pub index: u8,
    pub derivatives: [u8; 4],
}

impl FieldFactor {
    pub fn new(kind: FieldKind, index: u8) -> Self {
        FieldFactor { kind, index, derivatives: [0; 4] }
    }

    pub fn scalar(kind: FieldKind) -> Self {
        FieldFactor::new(kind, 0)
    }

    pub fn is_fermionic(&self) -> bool {
        self.kind.is_fermionic()
    }

    pub fn derivative_order(&self) -> u32 {
        self.derivatives.iter().map(|&n| n as u32).sum()
    }

    pub fn differentiated(mut self, mu: usize) -> Self {
        self.derivatives[mu] += 1;
        self
    }

    pub fn without_derivatives(mut self) -> Self {
        self.derivatives = [0; 4];
        self
    }

    pub fn conj(mut self) -> Self {
        self.kind = self.kind.conj();
        self
    }
}

impl fmt::Display for FieldFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (mu, &n) in self.derivatives.iter().enumerate() {
            for _ in 0..n {
                write!(f, "d{mu}")?;
            }
        }
        write!(f, "{}", self.kind.name())?;
        if self.kind.has_index() {
            write!(f, "{}", self.index)?;
        }
        Ok(())
    }
}
