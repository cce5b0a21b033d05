//! Foldings: involutions `s` of the simple roots with `⟨α|ˢα^∨⟩ = 0` for `α ≠ ˢα`
//! and `⟨α − ˢα | β^∨ + ˢβ^∨⟩ = 0`, their classification, and the folded datum.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::cartan::{self, Series, SimpleType};
use crate::error::FoldingError;
use crate::linalg::{self, Matrix};
use crate::rootdata::BasedRootDatum;

/// A failed folding condition, with 0-based simple-root indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// `⟨α | ˢα^∨⟩ ≠ 0` although `α ≠ ˢα`.
    Orthogonality { alpha: usize },
    /// `⟨α − ˢα | β^∨ + ˢβ^∨⟩ ≠ 0`.
    Compatibility { alpha: usize, beta: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Orthogonality { alpha } => {
                write!(f, "condition 1: α{} is not orthogonal to its image", alpha + 1)
            }
            Violation::Compatibility { alpha, beta } => write!(
                f,
                "condition 2: ⟨α{a} − ˢα{a} | α{b}^∨ + ˢα{b}^∨⟩ ≠ 0",
                a = alpha + 1,
                b = beta + 1
            ),
        }
    }
}

fn is_involution(s: &[usize]) -> bool {
    s.iter().enumerate().all(|(i, &j)| j < s.len() && s[j] == i)
}

/// Both defining conditions; an empty list means `s` is a folding.
pub fn check_folding(datum: &BasedRootDatum, s: &[usize]) -> Result<Vec<Violation>, FoldingError> {
    check_cartan(datum.cartan(), s)
}

pub(crate) fn check_cartan(a: &[Vec<i64>], s: &[usize]) -> Result<Vec<Violation>, FoldingError> {
    if s.len() != a.len() || !is_involution(s) {
        return Err(FoldingError::NotInvolution);
    }
    let n = s.len();
    let mut out = Vec::new();
    for i in 0..n {
        if s[i] != i && a[i][s[i]] != 0 {
            out.push(Violation::Orthogonality { alpha: i });
        }
    }
    for i in 0..n {
        for j in 0..n {
            if a[i][j] + a[i][s[j]] - a[s[i]][j] - a[s[i]][s[j]] != 0 {
                out.push(Violation::Compatibility { alpha: i, beta: j });
            }
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FactorKind {
    TrivialComponent,
    SwappedPair,
    /// `A_{2n−1}` with its flip, quotient `PGL(2n)/PSp(2n)`.
    AOdd,
    /// `D_n` with the fork swap, quotient `PSO(2n)/SO(2n−1)`.
    DSeries,
    /// `E_6` with its flip, quotient `E_6^ad/F_4`.
    E6Case,
    /// `B_3` with `α₁ ↔ α₃`, quotient `SO(7)/G_2`.
    B3Case,
}

impl FactorKind {
    pub fn quotient_label(self) -> Option<&'static str> {
        match self {
            FactorKind::AOdd => Some("PGL(2n)/PSp(2n)"),
            FactorKind::DSeries => Some("PSO(2n)/SO(2n-1)"),
            FactorKind::E6Case => Some("E6/F4"),
            FactorKind::B3Case => Some("SO(7)/G2"),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FoldingFactor {
    pub kind: FactorKind,
    /// 0-based simple-root indices, sorted.
    pub support: Vec<usize>,
    /// Type of the factor before folding (one component, or one of the two swapped).
    pub source: SimpleType,
    /// Canonical type after folding.
    pub target: SimpleType,
}

#[derive(Debug, Clone)]
pub struct Folding {
    datum: BasedRootDatum,
    s: Vec<usize>,
}

impl Folding {
    pub fn new(datum: BasedRootDatum, s: Vec<usize>) -> Result<Self, FoldingError> {
        let v = check_folding(&datum, &s)?;
        if let Some(first) = v.first() {
            return Err(FoldingError::NotFolding(first.to_string()));
        }
        Ok(Self { datum, s })
    }

    pub fn datum(&self) -> &BasedRootDatum {
        &self.datum
    }

    pub fn involution(&self) -> &[usize] {
        &self.s
    }

    /// Orbit representatives (the smaller index of each orbit), increasing.
    pub fn representatives(&self) -> Vec<usize> {
        (0..self.s.len()).filter(|&i| i <= self.s[i]).collect()
    }

    /// `ᾱ^∨ = α^∨` if `α` is fixed, `α^∨ + ˢα^∨` otherwise; one per orbit, in Λ^∨.
    pub fn orbit_sum_coroots(&self) -> Vec<Vec<i64>> {
        let c = self.datum.simple_coroots();
        self.representatives()
            .into_iter()
            .map(|i| {
                if self.s[i] == i {
                    c[i].clone()
                } else {
                    linalg::add(&c[i], &c[self.s[i]])
                }
            })
            .collect()
    }

    pub fn classify(&self) -> Result<Vec<FoldingFactor>, FoldingError> {
        let a = self.datum.cartan();
        let comps = cartan::components(a);
        let comp_of = |v: usize| comps.iter().position(|c| c.contains(&v)).unwrap();
        let mut done = vec![false; comps.len()];
        let mut out = Vec::new();
        for (ci, comp) in comps.iter().enumerate() {
            if done[ci] {
                continue;
            }
            let images: Vec<usize> = comp.iter().map(|&v| comp_of(self.s[v])).collect();
            let target = images[0];
            if images.iter().any(|&c| c != target) {
                return Err(FoldingError::InternalClassificationFailure(format!(
                    "component {:?} is spread over several components",
                    comp
                )));
            }
            let label = canonical_component_label(a, comp)?;
            done[ci] = true;
            if target != ci {
                done[target] = true;
                let other = &comps[target];
                let iso = comp.iter().all(|&i| comp.iter().all(|&j| a[self.s[i]][self.s[j]] == a[i][j]));
                if !iso {
                    return Err(FoldingError::InternalClassificationFailure(
                        "swapped components are not isomorphic".into(),
                    ));
                }
                let mut support: Vec<usize> = comp.iter().chain(other).copied().collect();
                support.sort_unstable();
                out.push(FoldingFactor {
                    kind: FactorKind::SwappedPair,
                    support,
                    source: label,
                    target: label,
                });
                continue;
            }
            if comp.iter().all(|&v| self.s[v] == v) {
                out.push(FoldingFactor {
                    kind: FactorKind::TrivialComponent,
                    support: comp.clone(),
                    source: label,
                    target: label,
                });
                continue;
            }
            let automorphism = comp
                .iter()
                .all(|&i| comp.iter().all(|&j| a[self.s[i]][self.s[j]] == a[i][j]));
            let n = label.rank;
            let (kind, folded) = match (automorphism, label.series) {
                (true, Series::A) if n % 2 == 1 && n >= 3 => {
                    (FactorKind::AOdd, SimpleType::new(Series::C, (n + 1) / 2))
                }
                (true, Series::D) => (FactorKind::DSeries, SimpleType::new(Series::B, n - 1)),
                (true, Series::E) if n == 6 => (FactorKind::E6Case, SimpleType::new(Series::F, 4)),
                (false, Series::B) if n == 3 => {
                    let order = &cartan::identify(&cartan::submatrix(a, comp))?[0].order;
                    let (x, z) = (comp[order[0]], comp[order[2]]);
                    if self.s[x] != z || self.s[comp[order[1]]] != comp[order[1]] {
                        return Err(FoldingError::InternalClassificationFailure(
                            "unexpected involution of B3".into(),
                        ));
                    }
                    (FactorKind::B3Case, SimpleType::new(Series::G, 2))
                }
                _ => {
                    return Err(FoldingError::InternalClassificationFailure(format!(
                        "no folding case for {label} (automorphism: {automorphism})"
                    )))
                }
            };
            out.push(FoldingFactor {
                kind,
                support: comp.clone(),
                source: label,
                target: cartan::canonical_label(folded),
            });
        }
        Ok(out)
    }

    /// The map `Λ → Λ/K`, `K = Span_Q(α − ˢα) ∩ Λ`, as a matrix acting on column vectors.
    pub fn quotient_map(&self) -> Matrix {
        let n = self.datum.rank();
        let diffs: Matrix = (0..self.s.len())
            .filter(|&i| self.s[i] != i)
            .map(|i| {
                linalg::sub(
                    &self.datum.simple_roots()[i],
                    &self.datum.simple_roots()[self.s[i]],
                )
            })
            .collect();
        if diffs.is_empty() {
            return linalg::identity(n);
        }
        linalg::right_kernel(&diffs, n)
    }

    /// The folded datum `(Ξ, r(S), r^∨(Ξ^∨), S̄^∨)` for a map `r: Λ → Ξ` given as an
    /// `m × n` matrix acting on column vectors.
    pub fn fold(&self, r: &Matrix) -> Result<BasedRootDatum, FoldingError> {
        let n = self.datum.rank();
        let m = r.len();
        if r.iter().any(|row| row.len() != n) {
            return Err(FoldingError::PreconditionViolated(format!(
                "r must have {n} columns"
            )));
        }
        if linalg::rank(r, n) != m {
            return Err(FoldingError::PreconditionViolated(
                "r does not have finite cokernel".into(),
            ));
        }
        let roots = self.datum.simple_roots();
        for i in 0..self.s.len() {
            let d = linalg::sub(&roots[i], &roots[self.s[i]]);
            if !linalg::is_zero(&linalg::mat_vec(r, &d)) {
                return Err(FoldingError::PreconditionViolated(format!(
                    "r(α{} − ˢα{}) ≠ 0",
                    i + 1,
                    i + 1
                )));
            }
        }
        let reps = self.representatives();
        let new_roots: Matrix = reps.iter().map(|&i| linalg::mat_vec(r, &roots[i])).collect();
        let new_coroots = self
            .orbit_sum_coroots()
            .iter()
            .zip(&reps)
            .map(|(c, &i)| {
                linalg::solve_in_lattice(r, c).ok_or_else(|| {
                    FoldingError::PreconditionViolated(format!(
                        "orbit-sum coroot of α{} is not in r^∨(Ξ^∨)",
                        i + 1
                    ))
                })
            })
            .collect::<Result<Matrix, _>>()?;
        Ok(BasedRootDatum::from_simple(m, new_roots, new_coroots)?)
    }

    /// Folding onto the quotient lattice of [`Self::quotient_map`].
    pub fn fold_quotient(&self) -> Result<BasedRootDatum, FoldingError> {
        self.fold(&self.quotient_map())
    }
}

fn canonical_component_label(a: &[Vec<i64>], comp: &[usize]) -> Result<SimpleType, FoldingError> {
    Ok(cartan::identify(&cartan::submatrix(a, comp))?[0].label)
}

/// All involutions of `{0, …, n−1}`.
pub fn involutions(n: usize) -> Vec<Vec<usize>> {
    fn rec(s: &mut Vec<usize>, i: usize, out: &mut Vec<Vec<usize>>) {
        let n = s.len();
        if i == n {
            out.push(s.clone());
            return;
        }
        if s[i] != usize::MAX {
            rec(s, i + 1, out);
            return;
        }
        s[i] = i;
        rec(s, i + 1, out);
        for j in i + 1..n {
            if s[j] == usize::MAX {
                s[i] = j;
                s[j] = i;
                rec(s, i + 1, out);
                s[j] = usize::MAX;
            }
        }
        s[i] = usize::MAX;
    }
    let mut out = Vec::new();
    rec(&mut vec![usize::MAX; n], 0, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::LatticeFlavor;

    fn sc(s: &str) -> BasedRootDatum {
        BasedRootDatum::build(s, &LatticeFlavor::SimplyConnected).unwrap()
    }

    #[test]
    fn b3_example_is_a_folding_but_not_automorphism() {
        let b3 = sc("B3");
        assert!(check_folding(&b3, &[2, 1, 0]).unwrap().is_empty());
        assert!(!b3.diagram_automorphisms().contains(&vec![2, 1, 0]));
        let f = Folding::new(b3, vec![2, 1, 0]).unwrap();
        let factors = f.classify().unwrap();
        assert_eq!(factors.len(), 1);
        assert_eq!(factors[0].kind, FactorKind::B3Case);
        let folded = f.fold_quotient().unwrap();
        assert_eq!(folded.cartan_type().to_string(), "G2");
        // r(α₁) = r(α₃) is the short simple root
        assert_eq!(folded.symmetrizer(), &[1, 3]);
        assert_eq!(
            f.orbit_sum_coroots(),
            vec![
                linalg::add(&f.datum().simple_coroots()[0], &f.datum().simple_coroots()[2]),
                f.datum().simple_coroots()[1].clone()
            ]
        );
    }

    #[test]
    fn a2_swap_is_rejected() {
        let v = check_folding(&sc("A2"), &[1, 0]).unwrap();
        assert!(v.contains(&Violation::Orthogonality { alpha: 0 }));
    }

    #[test]
    fn identity_is_a_folding() {
        let d = sc("F4");
        assert!(check_folding(&d, &[0, 1, 2, 3]).unwrap().is_empty());
        let f = Folding::new(d.clone(), vec![0, 1, 2, 3]).unwrap();
        assert_eq!(f.orbit_sum_coroots(), d.simple_coroots().clone());
    }

    #[test]
    fn small_quotients() {
        let f = Folding::new(sc("A1xA1"), vec![1, 0]).unwrap();
        assert_eq!(f.classify().unwrap()[0].kind, FactorKind::SwappedPair);
        assert_eq!(f.fold_quotient().unwrap().cartan_type().to_string(), "A1");
        let f = Folding::new(sc("A3"), vec![2, 1, 0]).unwrap();
        assert_eq!(f.classify().unwrap()[0].kind, FactorKind::AOdd);
        assert_eq!(f.fold_quotient().unwrap().cartan_type().to_string(), "B2");
    }

    #[test]
    fn involution_counts() {
        let counts: Vec<usize> = (0..7).map(|n| involutions(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 10, 26, 76]);
    }

    #[test]
    fn not_an_involution() {
        assert_eq!(check_folding(&sc("A3"), &[1, 2, 0]), Err(FoldingError::NotInvolution));
    }
}
