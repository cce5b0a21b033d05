//! Weak spherical systems `(Ξ, Σ, Sᵖ)`: the table of weak spherical roots, the
//! axioms, the lattices `Ξ_min ⊆ Ξ_sat`, `Ξ_max`, and the standard transformations.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::cartan::{self, Series, SimpleType};
use crate::error::WssError;
use crate::linalg::{self, Matrix};
use crate::rootdata::BasedRootDatum;

/// The row families of the table of weak spherical roots.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PatternKind {
    A1,
    /// `A_n`, `n ≥ 2`: ends white, interior black.
    A,
    /// `B_n`, `n ≥ 2`: only `α₁` white.
    BShortEnd,
    /// `B_n`, `n ≥ 2`: `α₁` and `α_n` white.
    BWhiteEnd,
    /// `C_n`, `n ≥ 3`: `α₂` white.
    CFirstBlack,
    /// `C_n`, `n ≥ 3`: `α₁`, `α₂` white.
    CFirstWhite,
    F4,
    /// `2α₁ + α₂` in `G₂`.
    G2Double,
    /// `α₁ + α₂` in `G₂`.
    G2Sum,
    D2,
    /// `D_n`, `n ≥ 3`.
    D,
    /// `α₁ + 2α₂ + 3α₃` in `B₃`.
    B3,
}

impl PatternKind {
    pub const ALL: [PatternKind; 12] = [
        PatternKind::A1,
        PatternKind::A,
        PatternKind::BShortEnd,
        PatternKind::BWhiteEnd,
        PatternKind::CFirstBlack,
        PatternKind::CFirstWhite,
        PatternKind::F4,
        PatternKind::G2Double,
        PatternKind::G2Sum,
        PatternKind::D2,
        PatternKind::D,
        PatternKind::B3,
    ];

    /// Whether the pattern describes a root (rows above the dividing line).
    pub fn is_root(self) -> bool {
        !matches!(self, PatternKind::D2 | PatternKind::D | PatternKind::B3)
    }

    /// Admissible support sizes.
    pub fn admits(self, n: usize) -> bool {
        match self {
            PatternKind::A1 => n == 1,
            PatternKind::A | PatternKind::BShortEnd | PatternKind::BWhiteEnd => n >= 2,
            PatternKind::CFirstBlack | PatternKind::CFirstWhite | PatternKind::D => n >= 3,
            PatternKind::F4 => n == 4,
            PatternKind::G2Double | PatternKind::G2Sum | PatternKind::D2 => n == 2,
            PatternKind::B3 => n == 3,
        }
    }

    /// Bourbaki-ordered Cartan matrix of the support.
    pub fn cartan(self, n: usize) -> Matrix {
        let t = |s, k| SimpleType::new(s, k).cartan();
        match self {
            PatternKind::A1 | PatternKind::A => t(Series::A, n),
            PatternKind::BShortEnd | PatternKind::BWhiteEnd | PatternKind::B3 => t(Series::B, n),
            PatternKind::CFirstBlack | PatternKind::CFirstWhite => t(Series::C, n),
            PatternKind::F4 => t(Series::F, 4),
            PatternKind::G2Double | PatternKind::G2Sum => t(Series::G, 2),
            PatternKind::D2 => linalg::scale_identity(2, 2),
            PatternKind::D => t(Series::D, n),
        }
    }

    /// Coefficients `n_α` in Bourbaki order.
    pub fn coefficients(self, n: usize) -> Vec<i64> {
        match self {
            PatternKind::A1
            | PatternKind::A
            | PatternKind::BShortEnd
            | PatternKind::BWhiteEnd
            | PatternKind::G2Sum
            | PatternKind::D2 => vec![1; n],
            PatternKind::CFirstBlack | PatternKind::CFirstWhite => {
                let mut c = vec![2; n];
                c[0] = 1;
                c[n - 1] = 1;
                c
            }
            PatternKind::F4 => vec![1, 2, 3, 2],
            PatternKind::G2Double => vec![2, 1],
            PatternKind::D => {
                let mut c = vec![2; n];
                c[n - 2] = 1;
                c[n - 1] = 1;
                c
            }
            PatternKind::B3 => vec![1, 2, 3],
        }
    }

    /// Black vertices (required elements of `Sᵖ`), Bourbaki order.
    pub fn black(self, n: usize) -> Vec<bool> {
        let mut b = vec![true; n];
        match self {
            PatternKind::A1 | PatternKind::G2Sum | PatternKind::D2 => b.fill(false),
            PatternKind::A | PatternKind::BWhiteEnd => {
                b[0] = false;
                b[n - 1] = false;
            }
            PatternKind::BShortEnd | PatternKind::D => b[0] = false,
            PatternKind::CFirstBlack => b[1] = false,
            PatternKind::CFirstWhite => {
                b[0] = false;
                b[1] = false;
            }
            PatternKind::F4 => b[3] = false,
            PatternKind::G2Double => b[0] = false,
            PatternKind::B3 => b[2] = false,
        }
        b
    }

    /// Printable label of the instantiated row, e.g. `B3-white-end`.
    pub fn label(self, n: usize) -> String {
        match self {
            PatternKind::A1 => "A1".into(),
            PatternKind::A => format!("A{n}"),
            PatternKind::BShortEnd => format!("B{n}-short-end"),
            PatternKind::BWhiteEnd => format!("B{n}-white-end"),
            PatternKind::CFirstBlack => format!("C{n}-first-black"),
            PatternKind::CFirstWhite => format!("C{n}-first-white"),
            PatternKind::F4 => "F4".into(),
            PatternKind::G2Double => "G2-(2,1)".into(),
            PatternKind::G2Sum => "G2-(1,1)".into(),
            PatternKind::D2 => "D2".into(),
            PatternKind::D => format!("D{n}"),
            PatternKind::B3 => "B3-special".into(),
        }
    }
}

/// A weak spherical root matched against its table row.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PatternMatch {
    pub kind: PatternKind,
    /// Size of the support.
    pub n: usize,
    /// `order[k]` is the ambient simple root playing the role of `α_{k+1}` in the row.
    pub order: Vec<usize>,
    pub is_root: bool,
}

impl PatternMatch {
    pub fn label(&self) -> String {
        self.kind.label(self.n)
    }

    /// Sorted support `|σ|`.
    pub fn support(&self) -> Vec<usize> {
        let mut s = self.order.clone();
        s.sort_unstable();
        s
    }

    /// Whether the row is `A_m` with `m` even.
    pub fn is_even_a(&self) -> bool {
        matches!(self.kind, PatternKind::A1 | PatternKind::A) && self.n % 2 == 0
    }

    /// Whether the row is `D_n` for some `n ≥ 2`.
    pub fn is_d(&self) -> bool {
        matches!(self.kind, PatternKind::D2 | PatternKind::D)
    }
}

pub fn support(sigma: &[i64]) -> Vec<usize> {
    (0..sigma.len()).filter(|&i| sigma[i] != 0).collect()
}

fn describe(sigma: &[i64]) -> String {
    let terms: Vec<String> = sigma
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(i, &c)| match c {
            1 => format!("α{}", i + 1),
            _ => format!("{c}α{}", i + 1),
        })
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join("+")
    }
}

/// Human-readable `σ` in simple-root notation.
pub fn format_root(sigma: &[i64]) -> String {
    describe(sigma)
}

/// The unique table row matching `σ` (simple-root coordinates) for the given `Sᵖ`.
pub fn match_pattern(
    sigma: &[i64],
    sp: &[usize],
    ambient: &BasedRootDatum,
) -> Result<PatternMatch, WssError> {
    if sigma.len() != ambient.num_simple() {
        return Err(WssError::Invalid(format!(
            "{} has {} coordinates, expected {}",
            describe(sigma),
            sigma.len(),
            ambient.num_simple()
        )));
    }
    if sigma.iter().any(|&c| c < 0) {
        return Err(WssError::NoPatternMatch(describe(sigma)));
    }
    let supp = support(sigma);
    let m = supp.len();
    let sub = cartan::submatrix(ambient.cartan(), &supp);
    let mut found: Vec<PatternMatch> = Vec::new();
    for kind in PatternKind::ALL {
        if !kind.admits(m) {
            continue;
        }
        let coeffs = kind.coefficients(m);
        let black = kind.black(m);
        let hit = cartan::isomorphisms(&sub, &kind.cartan(m))
            .into_iter()
            .find(|pi| {
                (0..m).all(|k| {
                    let v = supp[pi[k]];
                    sigma[v] == coeffs[k] && sp.contains(&v) == black[k]
                })
            });
        if let Some(pi) = hit {
            found.push(PatternMatch {
                kind,
                n: m,
                order: pi.iter().map(|&k| supp[k]).collect(),
                is_root: kind.is_root(),
            });
        }
    }
    match found.len() {
        0 => Err(WssError::NoPatternMatch(describe(sigma))),
        1 => {
            let p = found.pop().unwrap();
            debug_assert_eq!(p.is_root, ambient.is_positive_root(sigma));
            Ok(p)
        }
        _ => Err(WssError::AmbiguousPattern(describe(sigma))),
    }
}

/// How `Ξ` is specified.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum XiSpec {
    /// `ZΣ`.
    Min,
    Max,
    /// `(ZΣ ⊗ Q) ∩ Λ`.
    Sat,
    /// Generators in Λ-coordinates.
    Explicit(Matrix),
}

/// An axiom failure, with 0-based indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    NotInXi { sigma: usize },
    Duplicate { sigma: usize },
    Axiom1 { sigma: usize, reason: String },
    Axiom2 { alpha: usize },
    Axiom3 { sigma: usize },
    Axiom4 { alpha: usize, beta: usize },
}

impl Violation {
    pub fn axiom(&self) -> Option<u8> {
        match self {
            Violation::Axiom1 { .. } => Some(1),
            Violation::Axiom2 { .. } => Some(2),
            Violation::Axiom3 { .. } => Some(3),
            Violation::Axiom4 { .. } => Some(4),
            _ => None,
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::NotInXi { sigma } => {
                write!(f, "Σ ⊆ Ξ: spherical root #{} is not in Ξ", sigma + 1)
            }
            Violation::Duplicate { sigma } => {
                write!(f, "Σ: spherical root #{} is repeated", sigma + 1)
            }
            Violation::Axiom1 { sigma, reason } => {
                write!(f, "axiom 1: spherical root #{}: {reason}", sigma + 1)
            }
            Violation::Axiom2 { alpha } => {
                write!(f, "axiom 2: ⟨Ξ | α{}^∨⟩ ≠ 0 for α{} in Sᵖ", alpha + 1, alpha + 1)
            }
            Violation::Axiom3 { sigma } => write!(
                f,
                "axiom 3: ⟨Ξ | α^∨ − β^∨⟩ ≠ 0 for the D2 root #{}",
                sigma + 1
            ),
            Violation::Axiom4 { alpha, beta } => write!(
                f,
                "axiom 4: α{a} and α{a}+α{b} are in Σ but ⟨α{b} | α{a}^∨⟩ = −1",
                a = alpha + 1,
                b = beta + 1
            ),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeakSphericalSystem {
    ambient: BasedRootDatum,
    xi: Matrix,
    sigma: Matrix,
    sp: Vec<usize>,
}

impl WeakSphericalSystem {
    /// Assembles a system; does not check the axioms (see [`Self::validate`]).
    pub fn new(
        ambient: BasedRootDatum,
        xi: XiSpec,
        sigma: Matrix,
        mut sp: Vec<usize>,
    ) -> Result<Self, WssError> {
        let r = ambient.num_simple();
        let n = ambient.rank();
        if let Some(s) = sigma.iter().find(|s| s.len() != r) {
            return Err(WssError::Invalid(format!(
                "spherical root {s:?} must have {r} simple-root coordinates"
            )));
        }
        if let Some(&a) = sp.iter().find(|&&a| a >= r) {
            return Err(WssError::Invalid(format!(
                "Sᵖ index {} out of range 1..={r}",
                a + 1
            )));
        }
        sp.sort_unstable();
        sp.dedup();
        let xi = match xi {
            XiSpec::Min => min_lattice(&ambient, &sigma),
            XiSpec::Sat => saturation(&ambient, &sigma),
            XiSpec::Max => xi_max(&sigma, &sp, &ambient),
            XiSpec::Explicit(gens) => {
                if let Some(g) = gens.iter().find(|g| g.len() != n) {
                    return Err(WssError::Invalid(format!(
                        "Ξ generator {g:?} must have {n} coordinates"
                    )));
                }
                nonzero_hnf(&gens, n)
            }
        };
        Ok(Self {
            ambient,
            xi,
            sigma,
            sp,
        })
    }

    pub fn ambient(&self) -> &BasedRootDatum {
        &self.ambient
    }

    /// Basis of Ξ in Λ-coordinates (Hermite normal form).
    pub fn xi(&self) -> &Matrix {
        &self.xi
    }

    pub fn xi_rank(&self) -> usize {
        self.xi.len()
    }

    /// Spherical roots in simple-root coordinates.
    pub fn sigma(&self) -> &Matrix {
        &self.sigma
    }

    /// `Sᵖ`, sorted 0-based indices.
    pub fn sp(&self) -> &[usize] {
        &self.sp
    }

    /// `σ` as an element of Λ.
    pub fn sigma_vector(&self, i: usize) -> Vec<i64> {
        self.ambient.root_vector(&self.sigma[i])
    }

    pub fn sigma_vectors(&self) -> Matrix {
        (0..self.sigma.len()).map(|i| self.sigma_vector(i)).collect()
    }

    pub fn patterns(&self) -> Result<Vec<PatternMatch>, WssError> {
        self.sigma
            .iter()
            .map(|s| match_pattern(s, &self.sp, &self.ambient))
            .collect()
    }

    /// Every failed axiom; empty iff the triple is a weak spherical system.
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        let a = &self.ambient;
        for i in 0..self.sigma.len() {
            if self.sigma[..i].contains(&self.sigma[i]) {
                out.push(Violation::Duplicate { sigma: i });
            }
            if !linalg::in_lattice(&self.xi, &self.sigma_vector(i)) {
                out.push(Violation::NotInXi { sigma: i });
            }
        }
        let mut d2 = Vec::new();
        for (i, s) in self.sigma.iter().enumerate() {
            match match_pattern(s, &self.sp, a) {
                Ok(p) if p.kind == PatternKind::D2 => d2.push((i, p.order[0], p.order[1])),
                Ok(_) => {}
                Err(e) => out.push(Violation::Axiom1 {
                    sigma: i,
                    reason: e.to_string(),
                }),
            }
        }
        let coroots = a.simple_coroots();
        for &alpha in &self.sp {
            if self.xi.iter().any(|x| linalg::dot(x, &coroots[alpha]) != 0) {
                out.push(Violation::Axiom2 { alpha });
            }
        }
        for (i, x, y) in d2 {
            let c = linalg::sub(&coroots[x], &coroots[y]);
            if self.xi.iter().any(|v| linalg::dot(v, &c) != 0) {
                out.push(Violation::Axiom3 { sigma: i });
            }
        }
        let simple = |s: &[i64]| {
            let supp = support(s);
            (supp.len() == 1 && s[supp[0]] == 1).then(|| supp[0])
        };
        for s in &self.sigma {
            let Some(alpha) = simple(s) else { continue };
            for t in &self.sigma {
                let mut d = t.clone();
                d[alpha] -= 1;
                if let Some(beta) = simple(&d) {
                    if beta != alpha && a.cartan()[beta][alpha] == -1 {
                        out.push(Violation::Axiom4 { alpha, beta });
                    }
                }
            }
        }
        out
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_empty()
    }

    pub fn ensure_valid(&self) -> Result<(), WssError> {
        let v = self.validate();
        if v.is_empty() {
            Ok(())
        } else {
            Err(WssError::Invalid(
                v.iter().map(ToString::to_string).collect::<Vec<_>>().join("; "),
            ))
        }
    }

    /// Whether every root orthogonal to Ξ lies in the span of `Sᵖ`.
    pub fn is_nondegenerate(&self) -> bool {
        let a = &self.ambient;
        a.positive_roots()
            .iter()
            .zip(a.positive_coroots())
            .all(|(root, cor)| {
                let c = a.coroot_vector(cor);
                self.xi.iter().any(|x| linalg::dot(x, &c) != 0)
                    || BasedRootDatum::supported_in(root, &self.sp)
            })
    }

    /// Checks `2(ρ − ρᵖ) ∈ Ξ_max`.
    pub fn rho_membership_check(&self) -> bool {
        let a = &self.ambient;
        let r = a.num_simple();
        let mut two = vec![0i64; r];
        for root in a.positive_roots() {
            if !BasedRootDatum::supported_in(root, &self.sp) {
                two = linalg::add(&two, root);
            }
        }
        let max = xi_max(&self.sigma, &self.sp, a);
        linalg::in_lattice(&max, &a.root_vector(&two))
    }

    /// `(σ, τ) ≤ 0` for all distinct pairs, with the given per-component rescaling.
    pub fn obtuse_pairs(&self, factors: Option<&[i64]>) -> bool {
        let mut sp = self.ambient.scalar_product();
        if let Some(f) = factors {
            sp = sp.rescaled(f);
        }
        let s = &self.sigma;
        (0..s.len()).all(|i| (0..s.len()).all(|j| i == j || sp.product(&s[i], &s[j]) <= 0))
    }

    pub fn sigma_independent(&self) -> bool {
        linalg::rank(&self.sigma, self.ambient.num_simple()) == self.sigma.len()
    }

    /// `[Ξ_sat : Ξ]`.
    pub fn saturation_index(&self) -> i64 {
        if self.xi.is_empty() {
            return 1;
        }
        linalg::saturate(&self.xi, self.ambient.rank())
            .map(|(_, k)| k)
            .unwrap_or(1)
    }

    pub fn transform(&self, t: &Transformation) -> Result<WeakSphericalSystem, WssError> {
        match t {
            Transformation::ChangeXi(gens) => self.change_xi(gens),
            Transformation::LocalizeSigma(idx) => self.localize_sigma(idx),
            Transformation::LocalizeS(s0) => self.localize_s(s0),
            Transformation::ParabolicSupport => self.parabolic_support(),
            Transformation::RemoveCompact(s0p) => self.remove_compact(s0p),
        }
    }

    /// Replaces Ξ by a sublattice `Ξ₀` with `Σ ⊆ Ξ₀ ⊆ Ξ`.
    pub fn change_xi(&self, gens: &Matrix) -> Result<WeakSphericalSystem, WssError> {
        let n = self.ambient.rank();
        let xi0 = nonzero_hnf(gens, n);
        if xi0.iter().any(|v| !linalg::in_lattice(&self.xi, v)) {
            return Err(WssError::PreconditionViolated("Ξ₀ is not contained in Ξ".into()));
        }
        if (0..self.sigma.len()).any(|i| !linalg::in_lattice(&xi0, &self.sigma_vector(i))) {
            return Err(WssError::PreconditionViolated("Σ is not contained in Ξ₀".into()));
        }
        Ok(Self {
            xi: xi0,
            ..self.clone()
        })
    }

    /// Keeps the spherical roots with the given 0-based indices.
    pub fn localize_sigma(&self, idx: &[usize]) -> Result<WeakSphericalSystem, WssError> {
        if let Some(&i) = idx.iter().find(|&&i| i >= self.sigma.len()) {
            return Err(WssError::PreconditionViolated(format!(
                "Σ₀ refers to spherical root #{} which does not exist",
                i + 1
            )));
        }
        let mut idx = idx.to_vec();
        idx.sort_unstable();
        idx.dedup();
        Ok(Self {
            sigma: idx.iter().map(|&i| self.sigma[i].clone()).collect(),
            ..self.clone()
        })
    }

    /// `(Ξ, {σ : |σ| ⊆ S₀}, Sᵖ ∩ S₀)` over the Levi datum of `S₀`, renumbered.
    pub fn localize_s(&self, s0: &[usize]) -> Result<WeakSphericalSystem, WssError> {
        let r = self.ambient.num_simple();
        if s0.iter().any(|&i| i >= r) {
            return Err(WssError::PreconditionViolated("S₀ is not a subset of S".into()));
        }
        let mut s0 = s0.to_vec();
        s0.sort_unstable();
        s0.dedup();
        let pos = |i: usize| s0.iter().position(|&j| j == i);
        let sigma = self
            .sigma
            .iter()
            .filter(|s| BasedRootDatum::supported_in(s, &s0))
            .map(|s| s0.iter().map(|&i| s[i]).collect())
            .collect();
        let sp = self.sp.iter().filter_map(|&i| pos(i)).collect();
        Ok(Self {
            ambient: self.ambient.levi(&s0),
            xi: self.xi.clone(),
            sigma,
            sp,
        })
    }

    /// `Sᵖ ∪ ⋃|σ|`, the smallest set the system is parabolically induced from.
    pub fn parabolic_set(&self) -> Vec<usize> {
        let mut s0: Vec<usize> = self.sp.clone();
        for s in &self.sigma {
            s0.extend(support(s));
        }
        s0.sort_unstable();
        s0.dedup();
        s0
    }

    pub fn parabolic_support(&self) -> Result<WeakSphericalSystem, WssError> {
        self.localize_s(&self.parabolic_set())
    }

    /// Replaces `Sᵖ` by `S₀ᵖ ⊆ Sᵖ` containing every `|σ| ∩ Sᵖ`.
    pub fn remove_compact(&self, s0p: &[usize]) -> Result<WeakSphericalSystem, WssError> {
        if s0p.iter().any(|i| !self.sp.contains(i)) {
            return Err(WssError::PreconditionViolated("S₀ᵖ is not a subset of Sᵖ".into()));
        }
        for s in &self.sigma {
            if support(s)
                .iter()
                .any(|i| self.sp.contains(i) && !s0p.contains(i))
            {
                return Err(WssError::PreconditionViolated(format!(
                    "|{}| ∩ Sᵖ is not contained in S₀ᵖ",
                    describe(s)
                )));
            }
        }
        let mut sp = s0p.to_vec();
        sp.sort_unstable();
        sp.dedup();
        Ok(Self { sp, ..self.clone() })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Transformation {
    ChangeXi(Matrix),
    LocalizeSigma(Vec<usize>),
    LocalizeS(Vec<usize>),
    ParabolicSupport,
    RemoveCompact(Vec<usize>),
}

fn nonzero_hnf(gens: &[Vec<i64>], n: usize) -> Matrix {
    linalg::hnf(gens, n)
        .into_iter()
        .filter(|r| !linalg::is_zero(r))
        .collect()
}

/// `ZΣ` as a lattice basis.
pub fn min_lattice(ambient: &BasedRootDatum, sigma: &[Vec<i64>]) -> Matrix {
    let v: Matrix = sigma.iter().map(|s| ambient.root_vector(s)).collect();
    nonzero_hnf(&v, ambient.rank())
}

/// `(ZΣ ⊗ Q) ∩ Λ`.
pub fn saturation(ambient: &BasedRootDatum, sigma: &[Vec<i64>]) -> Matrix {
    let min = min_lattice(ambient, sigma);
    if min.is_empty() {
        return min;
    }
    linalg::saturate(&min, ambient.rank())
        .map(|(b, _)| b)
        .expect("HNF rows are independent")
}

/// The covectors cutting out `Ξ_max`: `α^∨` for `α ∈ Sᵖ` and `α^∨ − β^∨` for D2 roots.
pub fn xi_max_constraints(sigma: &[Vec<i64>], sp: &[usize], ambient: &BasedRootDatum) -> Matrix {
    let c = ambient.simple_coroots();
    let mut rows: Matrix = sp.iter().map(|&a| c[a].clone()).collect();
    for s in sigma {
        let supp = support(s);
        if supp.len() == 2
            && s[supp[0]] == 1
            && s[supp[1]] == 1
            && ambient.cartan()[supp[0]][supp[1]] == 0
        {
            rows.push(linalg::sub(&c[supp[0]], &c[supp[1]]));
        }
    }
    rows
}

/// `Ξ_max = {χ ∈ Λ : ⟨χ|α^∨⟩ = 0 (α ∈ Sᵖ), ⟨χ|α^∨ − β^∨⟩ = 0 (α+β ∈ Σ of type D2)}`.
pub fn xi_max(sigma: &[Vec<i64>], sp: &[usize], ambient: &BasedRootDatum) -> Matrix {
    let n = ambient.rank();
    let rows = xi_max_constraints(sigma, sp, ambient);
    if rows.is_empty() {
        return linalg::identity(n);
    }
    nonzero_hnf(&linalg::right_kernel(&rows, n), n)
}
