//! Validation reports keyed by a fixed set of clause labels.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

/// Every checkable clause. Declaration order is the canonical report order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Clause {
    Associativity,
    UnitLaw,
    Category,
    PartialOrder,
    OG1,
    OG2,
    OG3,
    OG3Star,
    SemigroupAssociative,
    SemigroupInverses,
    IdempotentsCommute,
    IdealChain,
    Isomorphism,
    P1,
    P2,
    P3,
    PO,
    InverseMaps,
    Strong,
    PS,
    StrongMeets,
    P1Prime,
    P2Prime,
    P3Prime,
    EquivIso,
    EquivIdeals,
    EquivIntertwining,
    PremorphismI,
    PremorphismII,
    PremorphismIII,
    PremorphismDomain,
    PremorphismCorestriction,
    Global,
    Embeddings,
    GlobI,
    GlobII,
    GlobIII,
    GlobIV,
    GlobIVMinimal,
    GlobRestriction,
    GammaInverse,
    GammaComposition,
    GammaOrder,
    EmbeddingDiagonal,
    LocalUnits,
    SgpGlobI,
    SgpGlobII,
    SgpGlobIII,
    SgpGlobIV,
    Grading,
    MoritaI,
    MoritaII,
    MoritaIII,
    MoritaIV,
    ContextLaws,
    PairingsSurjective,
    UnitalModules,
    IdempotentRings,
}

impl Clause {
    pub fn label(self) -> &'static str {
        use Clause::*;
        match self {
            Associativity => "associativity",
            UnitLaw => "unit",
            Category => "category",
            PartialOrder => "partial-order",
            OG1 => "(OG1)",
            OG2 => "(OG2)",
            OG3 => "(OG3)",
            OG3Star => "(OG3*)",
            SemigroupAssociative => "semigroup-associative",
            SemigroupInverses => "unique-inverses",
            IdempotentsCommute => "idempotents-commute",
            IdealChain => "ideal-chain",
            Isomorphism => "ring-isomorphisms",
            P1 => "(P1)",
            P2 => "(P2)",
            P3 => "(P3)",
            PO => "(PO)",
            InverseMaps => "inverse-maps",
            Strong => "strong",
            PS => "(PS)",
            StrongMeets => "strong-meets",
            P1Prime => "(P1')",
            P2Prime => "(P2')",
            P3Prime => "(P3')",
            EquivIso => "equiv-iso",
            EquivIdeals => "equiv(i)",
            EquivIntertwining => "equiv(ii)",
            PremorphismI => "premorphism(i)",
            PremorphismII => "premorphism(ii)",
            PremorphismIII => "premorphism(iii)",
            PremorphismDomain => "premorphism-domain",
            PremorphismCorestriction => "premorphism-corestriction",
            Global => "global",
            Embeddings => "embeddings",
            GlobI => "glob(i)",
            GlobII => "glob(ii)",
            GlobIII => "glob(iii)",
            GlobIV => "glob(iv)",
            GlobIVMinimal => "glob(iv')",
            GlobRestriction => "glob-restriction",
            GammaInverse => "gamma-inverse",
            GammaComposition => "gamma-composition",
            GammaOrder => "gamma-order",
            EmbeddingDiagonal => "embedding-diagonal",
            LocalUnits => "local-units",
            SgpGlobI => "sgp-glob(i)",
            SgpGlobII => "sgp-glob(ii)",
            SgpGlobIII => "sgp-glob(iii)",
            SgpGlobIV => "sgp-glob(iv)",
            Grading => "grading",
            MoritaI => "morita(i)",
            MoritaII => "morita(ii)",
            MoritaIII => "morita(iii)",
            MoritaIV => "morita(iv)",
            ContextLaws => "context-laws",
            PairingsSurjective => "pairings-surjective",
            UnitalModules => "unital-modules",
            IdempotentRings => "idempotent-rings",
        }
    }
}

impl fmt::Display for Clause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub clause: Clause,
    pub detail: String,
}

/// Outcome of a validation pass: which clauses were examined and every
/// failure found. An empty violation list means the subject is valid.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    checked: BTreeSet<Clause>,
    violations: Vec<Violation>,
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn check(&mut self, clause: Clause) {
        self.checked.insert(clause);
    }

    pub fn fail(&mut self, clause: Clause, detail: impl Into<String>) {
        self.checked.insert(clause);
        self.violations.push(Violation { clause, detail: detail.into() });
    }

    /// Records `clause` as checked and fails it when `ok` is false.
    pub fn expect(&mut self, clause: Clause, ok: bool, detail: impl FnOnce() -> String) {
        if ok {
            self.check(clause);
        } else {
            self.fail(clause, detail());
        }
    }

    pub fn merge(&mut self, other: Report) {
        self.checked.extend(other.checked);
        self.violations.extend(other.violations);
    }

    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn violations(&self) -> &[Violation] {
        &self.violations
    }

    pub fn passes(&self, clause: Clause) -> bool {
        self.checked.contains(&clause) && self.violations.iter().all(|v| v.clause != clause)
    }

    pub fn failed(&self, clause: Clause) -> bool {
        self.violations.iter().any(|v| v.clause == clause)
    }

    /// Per-clause outcome in canonical order.
    pub fn clauses(&self) -> BTreeMap<Clause, bool> {
        self.checked.iter().map(|&c| (c, !self.failed(c))).collect()
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            return write!(f, "ok ({} clauses checked)", self.checked.len());
        }
        for v in &self.violations {
            writeln!(f, "{}: {}", v.clause, v.detail)?;
        }
        Ok(())
    }
}
