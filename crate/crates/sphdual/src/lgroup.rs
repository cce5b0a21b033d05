//! Outer actions on a weak spherical system and the character constraints for
//! equivariant adapted and very adapted homomorphisms.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::cartan;
use crate::dualize;
use crate::error::LgroupError;
use crate::linalg::{self, Matrix};
use crate::wss::{self, PatternKind, WeakSphericalSystem};

/// A group `E` of diagram automorphisms (0-based permutations of `S`)
/// stabilizing `Ξ`, `Σ` and `Sᵖ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OuterAction {
    generators: Vec<Vec<usize>>,
    elements: Vec<Vec<usize>>,
}

fn apply(u: &[usize], v: &[i64]) -> Vec<i64> {
    let mut w = vec![0; v.len()];
    for (i, &c) in v.iter().enumerate() {
        w[u[i]] = c;
    }
    w
}

fn compose(u: &[usize], v: &[usize]) -> Vec<usize> {
    v.iter().map(|&i| u[i]).collect()
}

fn is_identity_on(u: &[usize], set: &[usize]) -> bool {
    set.iter().all(|&i| u[i] == i)
}

impl OuterAction {
    pub fn new(wss: &WeakSphericalSystem, generators: Vec<Vec<usize>>) -> Result<Self, LgroupError> {
        let a = wss.ambient();
        let r = a.num_simple();
        for u in &generators {
            let mut seen = u.clone();
            seen.sort_unstable();
            if seen != (0..r).collect::<Vec<_>>() {
                return Err(LgroupError::NotAutomorphism(format!("{u:?} is not a permutation")));
            }
            let c = a.cartan();
            if (0..r).any(|i| (0..r).any(|j| c[u[i]][u[j]] != c[i][j])) {
                return Err(LgroupError::NotAutomorphism(format!(
                    "{:?} does not preserve the Cartan matrix",
                    u.iter().map(|i| i + 1).collect::<Vec<_>>()
                )));
            }
            let sigma: BTreeSet<&Vec<i64>> = wss.sigma().iter().collect();
            if wss.sigma().iter().any(|s| !sigma.contains(&apply(u, s))) {
                return Err(LgroupError::NotPreserved("Σ".into()));
            }
            let sp: BTreeSet<usize> = wss.sp().iter().copied().collect();
            if wss.sp().iter().any(|&d| !sp.contains(&u[d])) {
                return Err(LgroupError::NotPreserved("Sᵖ".into()));
            }
            // Ξ through its pairing with the simple coroots.
            let image: Matrix = wss
                .xi()
                .iter()
                .map(|x| a.simple_coroots().iter().map(|c| linalg::dot(x, c)).collect())
                .collect();
            if image.iter().any(|p| !linalg::in_lattice(&image, &apply(u, p))) {
                return Err(LgroupError::NotPreserved("Ξ".into()));
            }
        }
        let id: Vec<usize> = (0..r).collect();
        let mut elements = vec![id];
        let mut frontier = elements.clone();
        while let Some(x) = frontier.pop() {
            for g in &generators {
                let y = compose(g, &x);
                if !elements.contains(&y) {
                    elements.push(y.clone());
                    frontier.push(y);
                }
            }
        }
        elements.sort();
        Ok(Self {
            generators,
            elements,
        })
    }

    pub fn generators(&self) -> &[Vec<usize>] {
        &self.generators
    }

    /// All elements of the generated group, identity first.
    pub fn elements(&self) -> &[Vec<usize>] {
        &self.elements
    }
}

/// `χ^∧_γ(u)` for `γ^∨ ∈ Σ^∧` (simple-coroot coordinates) fixed by `u`.
pub fn assoc_character(
    wss: &WeakSphericalSystem,
    gamma_coroot: &[i64],
    u: &[usize],
) -> Result<i64, LgroupError> {
    if apply(u, gamma_coroot) != gamma_coroot {
        return Err(LgroupError::NotStabilized);
    }
    let supp = wss::support(gamma_coroot);
    let sub = cartan::submatrix(wss.ambient().cartan(), &supp);
    let comps = cartan::identify(&sub).map_err(|e| LgroupError::Dualize(e.into()))?;
    let even_a = comps.len() == 1
        && comps[0].label.series == cartan::Series::A
        && comps[0].label.rank % 2 == 0;
    Ok(if even_a && !is_identity_on(u, &supp) { -1 } else { 1 })
}

/// Allowed values of `χ^∨_σ(u)` for one stabilizing pair.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharacterConstraint {
    /// 1-based index of `σ`.
    pub sigma: usize,
    /// 1-based images of the simple roots under `u`.
    pub u: Vec<usize>,
    pub pattern: String,
    pub restriction_trivial: bool,
    pub allowed: Vec<i64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct ConstraintOptions {
    /// Narrow `D₂` rows to `{−1}`.
    pub conjectural_d2: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Level {
    Adapted,
    VeryAdapted,
}

/// The case split of the constraint tables, on pattern type and on whether
/// `u` restricts to the identity on `|σ|`.
pub fn allowed_values(
    kind: PatternKind,
    n: usize,
    restriction_trivial: bool,
    very: bool,
    opts: ConstraintOptions,
) -> Vec<i64> {
    if restriction_trivial {
        return vec![1];
    }
    let even_a = kind == PatternKind::A && n % 2 == 0;
    match kind {
        _ if even_a => vec![-1],
        PatternKind::D2 if opts.conjectural_d2 => vec![-1],
        PatternKind::D2 => vec![1, -1],
        PatternKind::D if very => vec![-1],
        PatternKind::D => vec![1, -1],
        _ => vec![1],
    }
}

fn table(
    wss: &WeakSphericalSystem,
    action: &OuterAction,
    level: Level,
    opts: ConstraintOptions,
) -> Result<Vec<CharacterConstraint>, LgroupError> {
    let patterns = wss.patterns().map_err(|e| LgroupError::Dualize(e.into()))?;
    let mut rows = Vec::new();
    for (i, (s, p)) in wss.sigma().iter().zip(&patterns).enumerate() {
        for u in action.elements().iter().skip(1) {
            if apply(u, s) != *s {
                continue;
            }
            let trivial = is_identity_on(u, &wss::support(s));
            rows.push(CharacterConstraint {
                sigma: i + 1,
                u: u.iter().map(|k| k + 1).collect(),
                pattern: p.label(),
                restriction_trivial: trivial,
                allowed: allowed_values(p.kind, p.n, trivial, level == Level::VeryAdapted, opts),
            });
        }
    }
    Ok(rows)
}

pub fn adapted_constraints(
    wss: &WeakSphericalSystem,
    action: &OuterAction,
    opts: ConstraintOptions,
) -> Result<Vec<CharacterConstraint>, LgroupError> {
    table(wss, action, Level::Adapted, opts)
}

pub fn very_adapted_constraints(
    wss: &WeakSphericalSystem,
    action: &OuterAction,
    opts: ConstraintOptions,
) -> Result<Vec<CharacterConstraint>, LgroupError> {
    table(wss, action, Level::VeryAdapted, opts)
}

/// `χ^∧` on every `(γ^∨, u)` with `uγ^∨ = γ^∨`, `u ≠ 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AssocCharacter {
    pub gamma_coroot: Vec<i64>,
    pub u: Vec<usize>,
    pub value: i64,
}

pub fn assoc_characters(
    wss: &WeakSphericalSystem,
    action: &OuterAction,
) -> Result<Vec<AssocCharacter>, LgroupError> {
    let an = dualize::Analysis::new(wss)?;
    let mut out = Vec::new();
    for g in an.sigma_hat() {
        for u in action.elements().iter().skip(1) {
            if apply(u, &g) == g {
                out.push(AssocCharacter {
                    value: assoc_character(wss, &g, u)?,
                    gamma_coroot: g.clone(),
                    u: u.iter().map(|k| k + 1).collect(),
                });
            }
        }
    }
    Ok(out)
}

/// Everything the `lgroup` command prints.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LgroupReport {
    pub group_order: usize,
    pub assoc_characters: Vec<AssocCharacter>,
    pub adapted: Vec<CharacterConstraint>,
    pub very_adapted: Vec<CharacterConstraint>,
    pub conjectural_d2: bool,
    pub standard: bool,
}

pub fn report(
    wss: &WeakSphericalSystem,
    generators: Vec<Vec<usize>>,
    opts: ConstraintOptions,
) -> Result<LgroupReport, LgroupError> {
    wss.ensure_valid().map_err(|e| LgroupError::Dualize(e.into()))?;
    let action = OuterAction::new(wss, generators)?;
    let adapted = adapted_constraints(wss, &action, opts)?;
    let very_adapted = very_adapted_constraints(wss, &action, opts)?;
    let standard = very_adapted.iter().all(|c| c.allowed == [1]);
    Ok(LgroupReport {
        group_order: action.elements().len(),
        assoc_characters: assoc_characters(wss, &action)?,
        adapted,
        very_adapted,
        conjectural_d2: opts.conjectural_d2,
        standard,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::{BasedRootDatum, LatticeFlavor};
    use crate::wss::XiSpec;

    fn sys(t: &str, sigma: Matrix, sp: Vec<usize>) -> WeakSphericalSystem {
        let a = BasedRootDatum::build(t, &LatticeFlavor::SimplyConnected).unwrap();
        WeakSphericalSystem::new(a, XiSpec::Min, sigma, sp).unwrap()
    }

    #[test]
    fn even_a_flip_is_minus_one() {
        let w = sys("A2", vec![vec![1, 1]], vec![]);
        assert_eq!(assoc_character(&w, &[1, 1], &[1, 0]).unwrap(), -1);
        assert_eq!(assoc_character(&w, &[1, 1], &[0, 1]).unwrap(), 1);
        let act = OuterAction::new(&w, vec![vec![1, 0]]).unwrap();
        let rows = adapted_constraints(&w, &act, Default::default()).unwrap();
        assert_eq!(rows[0].allowed, vec![-1]);
    }

    #[test]
    fn d2_and_d4_rows() {
        let w = sys("A1xA1", vec![vec![1, 1]], vec![]);
        let act = OuterAction::new(&w, vec![vec![1, 0]]).unwrap();
        let opts = ConstraintOptions::default();
        assert_eq!(adapted_constraints(&w, &act, opts).unwrap()[0].allowed, vec![1, -1]);
        assert_eq!(very_adapted_constraints(&w, &act, opts).unwrap()[0].allowed, vec![1, -1]);
        let narrow = ConstraintOptions { conjectural_d2: true };
        assert_eq!(very_adapted_constraints(&w, &act, narrow).unwrap()[0].allowed, vec![-1]);

        let d4 = sys("D4", vec![vec![2, 2, 1, 1]], vec![1, 2, 3]);
        let fork = OuterAction::new(&d4, vec![vec![0, 1, 3, 2]]).unwrap();
        assert_eq!(adapted_constraints(&d4, &fork, opts).unwrap()[0].allowed, vec![1, -1]);
        assert_eq!(very_adapted_constraints(&d4, &fork, opts).unwrap()[0].allowed, vec![-1]);
    }

    #[test]
    fn rejects_bad_actions() {
        let w = sys("A3", vec![vec![1, 1, 0]], vec![]);
        assert!(matches!(
            OuterAction::new(&w, vec![vec![2, 1, 0]]),
            Err(LgroupError::NotPreserved(_))
        ));
        assert!(matches!(
            OuterAction::new(&w, vec![vec![1, 0, 2]]),
            Err(LgroupError::NotAutomorphism(_))
        ));
        assert_eq!(
            assoc_character(&w, &[1, 1, 0], &[2, 1, 0]),
            Err(LgroupError::NotStabilized)
        );
    }

    #[test]
    fn trivial_action_is_standard() {
        let w = sys("A2", vec![vec![1, 1]], vec![]);
        let r = report(&w, vec![vec![0, 1]], Default::default()).unwrap();
        assert!(r.standard);
        assert_eq!(r.group_order, 1);
    }
}
