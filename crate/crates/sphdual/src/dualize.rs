//! From a weak spherical system to its dual group: associated roots, the
//! associated group `G^∧`, the dual group `G^∨_X`, the adapted folding, the Weyl
//! lift, the Levi `L^∨`, and the centralizer `L^∧`.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::cartan::{self, CartanType, Series};
use crate::error::DualizeError;
use crate::folding::{self, FactorKind, Folding};
use crate::linalg::{self, Matrix};
use crate::rootdata::{self, BasedRootDatum};
use crate::wss::{self, PatternKind, PatternMatch, WeakSphericalSystem};

/// The roots associated to one spherical root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Associated {
    pub pattern: PatternMatch,
    /// `σ` itself, or `γ₁, γ₂` (simple-root coordinates).
    pub gammas: Matrix,
    /// `σ^∧` in simple-coroot coordinates.
    pub wedge: Matrix,
    /// `(δ₁, δ₂)` for non-roots, with `γ₁^∨ − γ₂^∨ = δ₁^∨ − δ₂^∨`.
    pub delta: Option<(usize, usize)>,
}

/// A decomposition `σ = γ₁ + γ₂` into strongly orthogonal positive roots with
/// `γ₁^∨ − γ₂^∨ = δ₁^∨ − δ₂^∨` for simple `δ₁ ≠ δ₂`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub gamma1: Vec<i64>,
    pub gamma2: Vec<i64>,
    pub delta1: usize,
    pub delta2: usize,
}

/// Exhaustive search over all pairs of positive roots.
pub fn decompositions(sigma: &[i64], ambient: &BasedRootDatum) -> Vec<Decomposition> {
    let mut out = Vec::new();
    for (i, g1) in ambient.positive_roots().iter().enumerate() {
        let g2 = linalg::sub(sigma, g1);
        let Some(j) = ambient.root_index(&g2) else { continue };
        if j <= i || !rootdata::is_strongly_orthogonal(g1, &g2, ambient) {
            continue;
        }
        let diff = linalg::sub(&ambient.positive_coroots()[i], &ambient.positive_coroots()[j]);
        let plus: Vec<usize> = (0..diff.len()).filter(|&k| diff[k] == 1).collect();
        let minus: Vec<usize> = (0..diff.len()).filter(|&k| diff[k] == -1).collect();
        let zero = diff.iter().filter(|&&c| c == 0).count();
        if plus.len() == 1 && minus.len() == 1 && zero + 2 == diff.len() {
            out.push(Decomposition {
                gamma1: g1.clone(),
                gamma2: g2,
                delta1: plus[0],
                delta2: minus[0],
            });
        }
    }
    out
}

fn unit_sum(r: usize, idx: &[usize]) -> Vec<i64> {
    let mut v = vec![0; r];
    for &i in idx {
        v[i] += 1;
    }
    v
}

/// Table lookup of `γ₁, γ₂, δ₁, δ₂` for a non-root pattern.
fn table_decomposition(p: &PatternMatch, r: usize) -> Decomposition {
    let o = &p.order;
    match p.kind {
        PatternKind::D2 => Decomposition {
            gamma1: unit_sum(r, &[o[0]]),
            gamma2: unit_sum(r, &[o[1]]),
            delta1: o[0],
            delta2: o[1],
        },
        PatternKind::D => {
            let n = p.n;
            let head = &o[..n - 2];
            Decomposition {
                gamma1: unit_sum(r, &[head, &[o[n - 2]]].concat()),
                gamma2: unit_sum(r, &[head, &[o[n - 1]]].concat()),
                delta1: o[n - 2],
                delta2: o[n - 1],
            }
        }
        PatternKind::B3 => Decomposition {
            gamma1: unit_sum(r, &[o[0], o[1], o[2], o[2]]),
            gamma2: unit_sum(r, &[o[1], o[2]]),
            delta1: o[0],
            delta2: o[1],
        },
        _ => unreachable!("root patterns have no decomposition"),
    }
}

/// `σ^∧` with its witnesses; non-roots are cross-checked against the exhaustive search.
pub fn associated_roots(
    sigma: &[i64],
    sp: &[usize],
    ambient: &BasedRootDatum,
) -> Result<Associated, DualizeError> {
    let pattern = wss::match_pattern(sigma, sp, ambient)?;
    if pattern.is_root {
        let cor = ambient.coroot_of(sigma).ok_or_else(|| {
            DualizeError::LemmaViolation(format!("{} is not a root", wss::format_root(sigma)))
        })?;
        return Ok(Associated {
            pattern,
            gammas: vec![sigma.to_vec()],
            wedge: vec![cor],
            delta: None,
        });
    }
    let d = table_decomposition(&pattern, ambient.num_simple());
    let found = decompositions(sigma, ambient);
    let agrees = |e: &Decomposition| {
        (e.gamma1 == d.gamma1 && e.gamma2 == d.gamma2 && (e.delta1, e.delta2) == (d.delta1, d.delta2))
            || (e.gamma1 == d.gamma2 && e.gamma2 == d.gamma1 && (e.delta1, e.delta2) == (d.delta2, d.delta1))
    };
    if found.len() != 1 || !agrees(&found[0]) {
        return Err(DualizeError::UniquenessFailure(
            wss::format_root(sigma),
            found.len(),
        ));
    }
    let wedge = vec![
        ambient.coroot_of(&d.gamma1).expect("table root"),
        ambient.coroot_of(&d.gamma2).expect("table root"),
    ];
    Ok(Associated {
        pattern,
        gammas: vec![d.gamma1, d.gamma2],
        wedge,
        delta: Some((d.delta1, d.delta2)),
    })
}

/// One pair of distinct elements of `Σ^∧` coming from different spherical roots.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Epsilon {
    /// 1-based indices of the spherical roots.
    pub sigmas: (usize, usize),
    pub gamma1: Vec<i64>,
    pub gamma2: Vec<i64>,
    /// `γ₁^∨ − γ₂^∨` in simple-coroot coordinates.
    pub epsilon: Vec<i64>,
    pub is_positive_coroot: bool,
}

/// Weyl-group lift of one simple reflection `s_σ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LiftElement {
    /// Roots whose reflections compose to `n_σ`.
    pub reflections: Matrix,
    /// `n_σ` acting on Λ (column vectors).
    pub matrix: Matrix,
    /// `n_σ(δ)` for each `δ ∈ Sᵖ`, aligned with `Sᵖ`.
    pub sp_image: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeylLift {
    pub elements: Vec<LiftElement>,
    /// `(i, j, order of s_σ s_τ, order of n_σ n_τ)`.
    pub relations: Vec<(usize, usize, usize, usize)>,
}

impl WeylLift {
    pub fn relations_hold(&self) -> bool {
        self.relations.iter().all(|&(_, _, a, b)| a == b)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FixedFactor {
    /// `H ⊆ H`.
    Same { h: String },
    /// `SL(2) ⊆ SL(2)^n`.
    Diagonal { n: usize },
    /// `SO(2n−1) ⊆ SO(2n)`.
    Orthogonal { n: usize },
    /// `G₂ ⊆ SO(8)`.
    Triality,
    /// `SO(3) ⊆ SL(3)`.
    Symmetric,
}

impl FixedFactor {
    /// Rank lost when passing to the fixed points.
    pub fn rank_drop(&self) -> usize {
        match self {
            FixedFactor::Same { .. } => 0,
            FixedFactor::Diagonal { n } => n - 1,
            FixedFactor::Orthogonal { .. } | FixedFactor::Symmetric => 1,
            FixedFactor::Triality => 2,
        }
    }

    pub fn describe(&self) -> String {
        match self {
            FixedFactor::Same { h } => format!("{h}⊆{h}"),
            FixedFactor::Diagonal { n } => format!("SL(2)⊆SL(2)^{n}"),
            FixedFactor::Orthogonal { n } => format!("SO({})⊆SO({})", 2 * n - 1, 2 * n),
            FixedFactor::Triality => "G2⊆SO(8)".into(),
            FixedFactor::Symmetric => "SO(3)⊆SL(3)".into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixedLevi {
    pub factors: Vec<FixedFactor>,
    /// Number of `1 ⊆ G_m` factors.
    pub trivial_tori: usize,
}

#[derive(Debug, Clone)]
pub struct Centralizer {
    pub datum: BasedRootDatum,
    /// `W_S`-orbits on `Sᵖ`, one per simple root of `L^∧`.
    pub orbits: Vec<Vec<usize>>,
    /// Torsion coefficients of `Λ^∨ / ZΣ^∧`.
    pub torsion: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdaptedFolding {
    pub folding: Folding,
    pub factors: Vec<folding::FoldingFactor>,
    pub folded: BasedRootDatum,
    pub matches_dual_group: bool,
    pub kernel_order: i64,
}

impl PartialEq for Folding {
    fn eq(&self, other: &Self) -> bool {
        self.datum() == other.datum() && self.involution() == other.involution()
    }
}

impl Eq for Folding {}

/// All derived data of a valid weak spherical system.
#[derive(Debug, Clone)]
pub struct Analysis<'a> {
    wss: &'a WeakSphericalSystem,
    assoc: Vec<Associated>,
    covectors: Matrix,
    sigma_xi: Matrix,
}

impl<'a> Analysis<'a> {
    pub fn new(wss: &'a WeakSphericalSystem) -> Result<Self, DualizeError> {
        wss.ensure_valid()?;
        let a = wss.ambient();
        let assoc = wss
            .sigma()
            .iter()
            .map(|s| associated_roots(s, wss.sp(), a))
            .collect::<Result<Vec<_>, _>>()?;
        let mut covectors = Vec::new();
        for (i, x) in assoc.iter().enumerate() {
            let values: Vec<Matrix> = x
                .wedge
                .iter()
                .map(|w| {
                    let c = a.coroot_vector(w);
                    wss.xi().iter().map(|xi| vec![linalg::dot(xi, &c)]).collect()
                })
                .collect();
            if values.iter().any(|v| *v != values[0]) {
                return Err(DualizeError::LemmaViolation(format!(
                    "⟨Ξ|γ₁^∨⟩ ≠ ⟨Ξ|γ₂^∨⟩ for spherical root #{}",
                    i + 1
                )));
            }
            covectors.push(values[0].iter().map(|v| v[0]).collect());
        }
        let sigma_xi = (0..wss.sigma().len())
            .map(|i| {
                linalg::solve_in_lattice(wss.xi(), &wss.sigma_vector(i))
                    .expect("validated: Σ ⊆ Ξ")
            })
            .collect();
        Ok(Self {
            wss,
            assoc,
            covectors,
            sigma_xi,
        })
    }

    pub fn wss(&self) -> &WeakSphericalSystem {
        self.wss
    }

    pub fn associated(&self) -> &[Associated] {
        &self.assoc
    }

    /// `σ^∨ ∈ Ξ^∨` as values on the basis of Ξ.
    pub fn sigma_covectors(&self) -> &Matrix {
        &self.covectors
    }

    /// Spherical roots in coordinates of the basis of Ξ.
    pub fn sigma_in_xi(&self) -> &Matrix {
        &self.sigma_xi
    }

    /// `Σ^∧` in simple-coroot coordinates, grouped by spherical root.
    pub fn sigma_hat(&self) -> Matrix {
        self.assoc.iter().flat_map(|x| x.wedge.clone()).collect()
    }

    fn sigma_hat_vectors(&self) -> Matrix {
        let a = self.wss.ambient();
        self.sigma_hat().iter().map(|w| a.coroot_vector(w)).collect()
    }

    fn gamma_vectors(&self) -> Matrix {
        let a = self.wss.ambient();
        self.assoc
            .iter()
            .flat_map(|x| x.gammas.iter().map(|g| a.root_vector(g)))
            .collect()
    }

    /// Datum of `G^∧`: roots `Σ^∧ ⊆ Λ^∨`, coroots the associated roots in Λ.
    pub fn associated_datum(&self) -> Result<BasedRootDatum, DualizeError> {
        let hat = self.sigma_hat();
        let dual = self.wss.ambient().dual();
        if !rootdata::is_additively_closed(&hat, &dual)? {
            return Err(DualizeError::AdditiveClosureFailure(
                "γ₁^∨ − γ₂^∨ is a positive coroot for some pair".into(),
            ));
        }
        Ok(BasedRootDatum::from_simple(
            self.wss.ambient().rank(),
            self.sigma_hat_vectors(),
            self.gamma_vectors(),
        )?)
    }

    pub fn associated_type(&self) -> Result<CartanType, DualizeError> {
        Ok(self.associated_datum()?.cartan_type())
    }

    pub fn epsilons(&self) -> Vec<Epsilon> {
        let a = self.wss.ambient();
        let dual = a.dual();
        let mut out = Vec::new();
        for (i, x) in self.assoc.iter().enumerate() {
            for (j, y) in self.assoc.iter().enumerate() {
                if i == j {
                    continue;
                }
                for (g1, w1) in x.gammas.iter().zip(&x.wedge) {
                    for (g2, w2) in y.gammas.iter().zip(&y.wedge) {
                        let e = linalg::sub(w1, w2);
                        out.push(Epsilon {
                            sigmas: (i + 1, j + 1),
                            gamma1: g1.clone(),
                            gamma2: g2.clone(),
                            is_positive_coroot: dual.is_positive_root(&e),
                            epsilon: e,
                        });
                    }
                }
            }
        }
        out
    }

    /// Datum of `G^∨_X`: `(Ξ^∨, Σ^∨, Ξ, Σ)` in the basis of Ξ and its dual.
    pub fn dual_group_datum(&self) -> Result<BasedRootDatum, DualizeError> {
        if rootdata::check_basis_criterion(&self.sigma_xi, &self.covectors).is_err() {
            return Err(DualizeError::LemmaViolation(
                "(Ξ, Σ, Ξ^∨, Σ^∨) fails the basis criterion".into(),
            ));
        }
        Ok(BasedRootDatum::from_simple(
            self.wss.xi_rank(),
            self.covectors.clone(),
            self.sigma_xi.clone(),
        )?)
    }

    /// The involution of `Σ^∧` with orbits `σ^∧`, folded along `Λ^∨ → Ξ^∨`.
    pub fn adapted_folding(&self) -> Result<AdaptedFolding, DualizeError> {
        let datum = self.associated_datum()?;
        let mut s = Vec::new();
        for x in &self.assoc {
            let k = s.len();
            if x.wedge.len() == 2 {
                s.extend([k + 1, k]);
            } else {
                s.push(k);
            }
        }
        let v = folding::check_folding(&datum, &s)?;
        if let Some(first) = v.first() {
            return Err(DualizeError::FoldingCheckFailure(first.to_string()));
        }
        let f = Folding::new(datum, s)?;
        let factors = f
            .classify()
            .map_err(|e| DualizeError::FoldingCheckFailure(e.to_string()))?;
        let folded = f.fold(self.wss.xi())?;
        let target = self.dual_group_datum()?;
        let matches = folded.simple_roots() == target.simple_roots()
            && folded.simple_coroots() == target.simple_coroots();
        if !matches {
            return Err(DualizeError::FoldingCheckFailure(
                "folded datum differs from the dual group datum".into(),
            ));
        }
        Ok(AdaptedFolding {
            folding: f,
            factors,
            folded,
            matches_dual_group: matches,
            kernel_order: self.wss.saturation_index(),
        })
    }

    /// `n_σ = s_σ` or `s_{γ₁}s_{γ₂}`, checked against `s_σ` on Ξ, the `Sᵖ` rule and
    /// the Coxeter relations of `W_S`.
    pub fn weyl_lift(&self) -> Result<WeylLift, DualizeError> {
        let a = self.wss.ambient();
        let sp = self.wss.sp();
        let mut elements = Vec::new();
        for (i, x) in self.assoc.iter().enumerate() {
            let matrix = x
                .gammas
                .iter()
                .map(|g| a.reflection_matrix(g))
                .reduce(|p, q| linalg::mat_mul(&p, &q))
                .expect("at least one root");
            for (k, xi) in self.wss.xi().iter().enumerate() {
                let expected = linalg::sub(
                    xi,
                    &linalg::scale(&self.wss.sigma_vector(i), self.covectors[i][k]),
                );
                if linalg::mat_vec(&matrix, xi) != expected {
                    return Err(DualizeError::RelationFailure(format!(
                        "n_σ ≠ s_σ on Ξ for spherical root #{}",
                        i + 1
                    )));
                }
            }
            let sv = self.wss.sigma_vector(i);
            if linalg::mat_vec(&matrix, &sv) != linalg::scale(&sv, -1) {
                return Err(DualizeError::RelationFailure(format!(
                    "n_σ(σ) ≠ −σ for spherical root #{}",
                    i + 1
                )));
            }
            let mut sp_image = Vec::new();
            for &d in sp {
                let img = linalg::mat_vec(&matrix, &a.simple_roots()[d]);
                let target = sp
                    .iter()
                    .copied()
                    .find(|&e| a.simple_roots()[e] == img)
                    .ok_or_else(|| {
                        DualizeError::RelationFailure(format!(
                            "n_σ(α{}) is not in Sᵖ for spherical root #{}",
                            d + 1,
                            i + 1
                        ))
                    })?;
                let rule = match x.delta {
                    Some((d1, d2)) if d == d1 => d2,
                    Some((d1, d2)) if d == d2 => d1,
                    _ => d,
                };
                if target != rule {
                    return Err(DualizeError::RelationFailure(format!(
                        "n_σ(α{}) = α{} breaks the Sᵖ rule",
                        d + 1,
                        target + 1
                    )));
                }
                sp_image.push(target);
            }
            elements.push(LiftElement {
                reflections: x.gammas.clone(),
                matrix,
                sp_image,
            });
        }
        let mut relations = Vec::new();
        let gx = self.dual_group_datum()?;
        let c = gx.cartan();
        for i in 0..elements.len() {
            for j in i + 1..elements.len() {
                let expected = match c[i][j] * c[j][i] {
                    0 => 2,
                    1 => 3,
                    2 => 4,
                    3 => 6,
                    _ => 0,
                };
                let p = linalg::mat_mul(&elements[i].matrix, &elements[j].matrix);
                relations.push((i + 1, j + 1, expected, matrix_order(&p, 12)));
            }
        }
        let lift = WeylLift { elements, relations };
        if !lift.relations_hold() && *self.wss.xi() == wss::xi_max(self.wss.sigma(), sp, a) {
            return Err(DualizeError::RelationFailure(
                "Coxeter relations fail with Ξ = Ξ_max".into(),
            ));
        }
        Ok(lift)
    }

    /// `W_S`-orbits on `Sᵖ` (sorted, in order of smallest element).
    pub fn sp_orbits(&self) -> Result<Vec<Vec<usize>>, DualizeError> {
        let sp = self.wss.sp();
        let lift = self.weyl_lift()?;
        let mut parent: Vec<usize> = (0..sp.len()).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            if p[x] != x {
                let r = find(p, p[x]);
                p[x] = r;
            }
            p[x]
        }
        for e in &lift.elements {
            for (k, &img) in e.sp_image.iter().enumerate() {
                let l = sp.iter().position(|&d| d == img).unwrap();
                let (x, y) = (find(&mut parent, k), find(&mut parent, l));
                parent[x] = y;
            }
        }
        let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for k in 0..sp.len() {
            let root = find(&mut parent, k);
            groups.entry(root).or_default().push(sp[k]);
        }
        let mut out: Vec<Vec<usize>> = groups.into_values().collect();
        out.sort();
        Ok(out)
    }

    /// Type of the Levi `L^∨` of `G^∨` attached to `Sᵖ`.
    pub fn levi_type(&self) -> Result<CartanType, DualizeError> {
        let a = self.wss.ambient();
        let sp = self.wss.sp();
        let roots: Matrix = sp.iter().map(|&d| a.simple_coroots()[d].clone()).collect();
        let coroots: Matrix = sp.iter().map(|&d| a.simple_roots()[d].clone()).collect();
        Ok(rootdata::recognize_type(&roots, &coroots, a.rank())?)
    }

    /// Structure of `(L^∨)^{W_S} ⊆ L^∨` as a product of standard inclusions.
    pub fn fixed_levi_structure(&self) -> Result<FixedLevi, DualizeError> {
        let a = self.wss.ambient();
        let sp = self.wss.sp();
        let orbits = self.sp_orbits()?;
        let dual_sub = linalg::transpose(&cartan::submatrix(a.cartan(), sp), sp.len());
        let comps: Vec<Vec<usize>> = cartan::components(&dual_sub)
            .into_iter()
            .map(|c| c.into_iter().map(|k| sp[k]).collect())
            .collect();
        let comp_of = |d: usize| comps.iter().position(|c| c.contains(&d)).unwrap();
        let mut block_of: Vec<usize> = (0..comps.len()).collect();
        loop {
            let mut changed = false;
            for o in &orbits {
                let target = o.iter().map(|&d| block_of[comp_of(d)]).min().unwrap();
                for &d in o {
                    let c = comp_of(d);
                    if block_of[c] != target {
                        let old = block_of[c];
                        for b in block_of.iter_mut() {
                            if *b == old {
                                *b = target;
                            }
                        }
                        changed = true;
                    }
                }
            }
            if !changed {
                break;
            }
        }
        let mut blocks: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (c, &b) in block_of.iter().enumerate() {
            blocks.entry(b).or_default().push(c);
        }
        let mut factors = Vec::new();
        for cs in blocks.values() {
            let verts: Vec<usize> = cs.iter().flat_map(|&c| comps[c].clone()).collect();
            let moving: Vec<&Vec<usize>> = orbits
                .iter()
                .filter(|o| o.len() > 1 && verts.contains(&o[0]))
                .collect();
            let sub_type = |c: &[usize]| -> Result<cartan::SimpleType, DualizeError> {
                let m = linalg::transpose(&cartan::submatrix(a.cartan(), c), c.len());
                Ok(cartan::identify(&m)?[0].label)
            };
            if moving.is_empty() {
                for &c in cs {
                    factors.push(FixedFactor::Same {
                        h: sub_type(&comps[c])?.to_string(),
                    });
                }
                continue;
            }
            let unrecognized = || {
                DualizeError::UnrecognizedComponent(format!(
                    "Sᵖ block {:?} with orbits {:?}",
                    verts.iter().map(|v| v + 1).collect::<Vec<_>>(),
                    moving
                ))
            };
            if cs.len() >= 2 {
                if cs.iter().all(|&c| comps[c].len() == 1) && moving.len() == 1 {
                    factors.push(FixedFactor::Diagonal { n: cs.len() });
                    continue;
                }
                return Err(unrecognized());
            }
            let t = sub_type(&verts)?;
            let sizes: Vec<usize> = moving.iter().map(|o| o.len()).collect();
            let f = match (t.series, t.rank, sizes.as_slice()) {
                (Series::A, 2, [2]) => FixedFactor::Symmetric,
                (Series::A, 3, [2]) => FixedFactor::Orthogonal { n: 3 },
                (Series::D, n, [2]) => FixedFactor::Orthogonal { n },
                (Series::D, 4, [3]) => FixedFactor::Triality,
                _ => return Err(unrecognized()),
            };
            factors.push(f);
        }
        let hat = self.sigma_hat().len();
        let drops: usize = factors.iter().map(FixedFactor::rank_drop).sum();
        let trivial_tori = hat.checked_sub(drops).ok_or_else(|| {
            DualizeError::UnrecognizedComponent("rank drops exceed |Σ^∧|".into())
        })?;
        Ok(FixedLevi {
            factors,
            trivial_tori,
        })
    }

    /// `L^∧`: character lattice `Λ^∨/ZΣ^∧` (free part), roots the restrictions of
    /// `δ^∨`, coroots the `W_S`-orbit sums.
    pub fn centralizer(&self) -> Result<Centralizer, DualizeError> {
        let a = self.wss.ambient();
        let n = a.rank();
        let hat = self.sigma_hat_vectors();
        let y = if hat.is_empty() {
            linalg::identity(n)
        } else {
            linalg::right_kernel(&hat, n)
        };
        let orbits = self.sp_orbits()?;
        let mut roots = Vec::new();
        let mut coroots = Vec::new();
        for o in &orbits {
            let sum = unit_sum(a.num_simple(), o);
            let p = a.simple_pairing(&sum, o[0]);
            if o.iter().any(|&d| a.simple_pairing(&sum, d) != p) {
                return Err(DualizeError::LemmaViolation(format!(
                    "orbit {o:?} has non-constant pairings"
                )));
            }
            let scale = match p {
                2 => 1,
                1 => 2,
                _ => {
                    return Err(DualizeError::LemmaViolation(format!(
                        "orbit sum pairs to {p} with its members"
                    )))
                }
            };
            let c = linalg::scale(&a.root_vector(&sum), scale);
            if hat.iter().any(|h| linalg::dot(h, &c) != 0) {
                return Err(DualizeError::LemmaViolation(
                    "orbit sum is not orthogonal to Σ^∧".into(),
                ));
            }
            let coords = linalg::solve_in_lattice(&y, &c).ok_or_else(|| {
                DualizeError::LemmaViolation("orbit sum outside the cocharacter lattice".into())
            })?;
            coroots.push(coords);
            roots.push(linalg::mat_vec(&y, &a.simple_coroots()[o[0]]));
        }
        let datum = BasedRootDatum::from_simple(y.len(), roots, coroots)?;
        let torsion = linalg::smith_invariants(&hat, n)
            .into_iter()
            .filter(|&d| d > 1)
            .collect();
        Ok(Centralizer {
            datum,
            orbits,
            torsion,
        })
    }

    /// The lattice-level shadow of "centralize each other": orbit sums pair to zero
    /// with `Σ^∧`, and `span Σ^∧ ∩ span{δ^∨} = 0` in `Λ^∨ ⊗ Q`.
    pub fn gzc_compatible(&self) -> Result<bool, DualizeError> {
        let a = self.wss.ambient();
        let hat = self.sigma_hat_vectors();
        let orbits = self.sp_orbits()?;
        let reps: Matrix = orbits
            .iter()
            .map(|o| a.simple_coroots()[o[0]].clone())
            .collect();
        let orth = orbits.iter().all(|o| {
            let c = a.root_vector(&unit_sum(a.num_simple(), o));
            hat.iter().all(|h| linalg::dot(h, &c) == 0)
        });
        let both: Matrix = hat.iter().chain(&reps).cloned().collect();
        Ok(orth && linalg::rank(&both, a.rank()) == hat.len() + reps.len())
    }

    /// `(⟨2ρᵖ|δ^∨⟩)_{δ ∈ Sᵖ}`.
    pub fn sl2_characteristic(&self) -> Vec<i64> {
        let a = self.wss.ambient();
        let sp = self.wss.sp();
        let mut two_rho = vec![0; a.num_simple()];
        for r in a.positive_roots() {
            if BasedRootDatum::supported_in(r, sp) {
                two_rho = linalg::add(&two_rho, r);
            }
        }
        sp.iter().map(|&d| a.simple_pairing(&two_rho, d)).collect()
    }

    /// Characters `γ₁^∨ − γ₂^∨` of `T^∨_ad` (simple-coroot coordinates) that a very
    /// adapted modification must kill: one per root of type `D_{n≥3}` or `B₃`.
    pub fn very_adapted_constraints(&self) -> Matrix {
        self.assoc
            .iter()
            .filter(|x| matches!(x.pattern.kind, PatternKind::D | PatternKind::B3))
            .map(|x| linalg::sub(&x.wedge[0], &x.wedge[1]))
            .collect()
    }

    pub fn report(&self) -> Result<DualReport, DualizeError> {
        let a = self.wss.ambient();
        let g_dual = a.dual().cartan_type();
        let hat_datum = self.associated_datum()?;
        let gx = self.dual_group_datum()?;
        let fold = self.adapted_folding()?;
        let lift = self.weyl_lift()?;
        let levi = self.levi_type()?;
        let fixed = self.fixed_levi_structure()?;
        let cent = self.centralizer()?;
        let characteristic = self.sl2_characteristic();
        if characteristic.iter().any(|&c| c != 2) {
            return Err(DualizeError::LemmaViolation(
                "principal SL(2) characteristic is not 2".into(),
            ));
        }
        let constraints = self.very_adapted_constraints();
        let hat = self.sigma_hat();
        let one = |v: &[usize]| v.iter().map(|i| i + 1).collect::<Vec<_>>();
        let gzc = self.gzc_compatible()?;
        Ok(DualReport {
            g_dual: TypeReport::of(&g_dual),
            g_assoc: AssocReport {
                sigma_hat: hat.clone(),
                group: TypeReport::of(&hat_datum.cartan_type()),
                epsilons: self.epsilons(),
            },
            g_dual_x: DatumReport {
                group: TypeReport::of(&gx.cartan_type()),
                roots: gx.simple_roots().clone(),
                coroots: gx.simple_coroots().clone(),
                cartan: gx.cartan().clone(),
                xi_basis: self.wss.xi().clone(),
            },
            associated: self
                .assoc
                .iter()
                .zip(&self.covectors)
                .enumerate()
                .map(|(i, (x, cov))| AssociatedReport {
                    sigma: self.wss.sigma()[i].clone(),
                    pattern: x.pattern.label(),
                    is_root: x.pattern.is_root,
                    gammas: x.gammas.clone(),
                    wedge: x.wedge.clone(),
                    delta: x.delta.map(|(d1, d2)| vec![d1 + 1, d2 + 1]),
                    covector: cov.clone(),
                })
                .collect(),
            kernel_order: fold.kernel_order,
            adapted_folding: FoldingReport {
                involution: one(fold.folding.involution()),
                factors: fold
                    .factors
                    .iter()
                    .map(|f| FactorReport {
                        kind: f.kind,
                        support: one(&f.support),
                        source: f.source.to_string(),
                        target: f.target.to_string(),
                    })
                    .collect(),
                folded_matches_dual_group: fold.matches_dual_group,
            },
            weyl_lift: WeylLiftReport {
                elements: lift
                    .elements
                    .iter()
                    .map(|e| LiftReport {
                        reflections: e.reflections.clone(),
                        matrix: e.matrix.clone(),
                        sp_image: one(&e.sp_image),
                    })
                    .collect(),
                relations: lift
                    .relations
                    .iter()
                    .map(|&(i, j, m, k)| RelationReport {
                        pair: vec![i, j],
                        expected_order: m,
                        lifted_order: k,
                    })
                    .collect(),
                relations_hold: lift.relations_hold(),
            },
            levi_type: TypeReport::of(&levi),
            fixed_levi_factors: fixed.factors.iter().map(FixedFactor::describe).collect(),
            trivial_torus_factors: fixed.trivial_tori,
            centralizer: CentralizerReport {
                group: TypeReport::of(&cent.datum.cartan_type()),
                orbits: cent.orbits.iter().map(|o| one(o)).collect(),
                roots: cent.datum.simple_roots().clone(),
                coroots: cent.datum.simple_coroots().clone(),
            },
            center_rank: a.rank() - hat.len(),
            center_torsion: cent.torsion,
            sl2_characteristic: characteristic,
            very_adapted_freedom: FreedomReport {
                free_rank: a.num_simple() - linalg::rank(&constraints, a.num_simple()),
                constraints,
            },
            z_adapted_count: 1u64 << hat.len(),
            centralizer_is_full: self.wss.is_nondegenerate(),
            gzc_compatible: gzc,
        })
    }
}

fn matrix_order(m: &Matrix, bound: usize) -> usize {
    let id = linalg::identity(m.len());
    let mut p = m.clone();
    for k in 1..=bound {
        if p == id {
            return k;
        }
        p = linalg::mat_mul(&p, m);
    }
    0
}

pub fn full_report(wss: &WeakSphericalSystem) -> Result<DualReport, DualizeError> {
    Analysis::new(wss)?.report()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TypeReport {
    pub cartan_type: String,
    pub lie_algebra: String,
}

impl TypeReport {
    pub fn of(t: &CartanType) -> Self {
        Self {
            cartan_type: t.to_string(),
            lie_algebra: t.lie_algebra(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AssocReport {
    pub sigma_hat: Matrix,
    pub group: TypeReport,
    pub epsilons: Vec<Epsilon>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DatumReport {
    pub group: TypeReport,
    pub roots: Matrix,
    pub coroots: Matrix,
    pub cartan: Matrix,
    pub xi_basis: Matrix,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AssociatedReport {
    pub sigma: Vec<i64>,
    pub pattern: String,
    pub is_root: bool,
    pub gammas: Matrix,
    pub wedge: Matrix,
    pub delta: Option<Vec<usize>>,
    pub covector: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorReport {
    pub kind: FactorKind,
    pub support: Vec<usize>,
    pub source: String,
    pub target: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FoldingReport {
    pub involution: Vec<usize>,
    pub factors: Vec<FactorReport>,
    pub folded_matches_dual_group: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LiftReport {
    pub reflections: Matrix,
    pub matrix: Matrix,
    pub sp_image: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationReport {
    pub pair: Vec<usize>,
    pub expected_order: usize,
    pub lifted_order: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeylLiftReport {
    pub elements: Vec<LiftReport>,
    pub relations: Vec<RelationReport>,
    pub relations_hold: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CentralizerReport {
    pub group: TypeReport,
    pub orbits: Vec<Vec<usize>>,
    pub roots: Matrix,
    pub coroots: Matrix,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FreedomReport {
    pub constraints: Matrix,
    pub free_rank: usize,
}

/// Everything computed for one weak spherical system.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DualReport {
    pub g_dual: TypeReport,
    pub g_assoc: AssocReport,
    #[serde(rename = "g_dual_X")]
    pub g_dual_x: DatumReport,
    pub associated: Vec<AssociatedReport>,
    pub kernel_order: i64,
    pub adapted_folding: FoldingReport,
    pub weyl_lift: WeylLiftReport,
    pub levi_type: TypeReport,
    pub fixed_levi_factors: Vec<String>,
    pub trivial_torus_factors: usize,
    pub centralizer: CentralizerReport,
    pub center_rank: usize,
    pub center_torsion: Vec<i64>,
    pub sl2_characteristic: Vec<i64>,
    pub very_adapted_freedom: FreedomReport,
    pub z_adapted_count: u64,
    pub centralizer_is_full: bool,
    pub gzc_compatible: bool,
}

impl DualReport {
    /// The five Lie algebras `𝔤^∨, 𝔤^∧_X, 𝔤^∨_X, 𝔩^∨_X, 𝔩^∧_X`.
    pub fn columns(&self) -> [&str; 5] {
        [
            &self.g_dual.lie_algebra,
            &self.g_assoc.group.lie_algebra,
            &self.g_dual_x.group.lie_algebra,
            &self.levi_type.lie_algebra,
            &self.centralizer.group.lie_algebra,
        ]
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let [g, gh, gx, l, lh] = self.columns();
        for (k, v) in [
            ("g_dual", g),
            ("g_hat", gh),
            ("g_dual_X", gx),
            ("l_dual", l),
            ("l_hat", lh),
        ] {
            let _ = writeln!(s, "{k}: {v}");
        }
        let _ = writeln!(s, "kernel_order: {}", self.kernel_order);
        let _ = writeln!(s, "center_rank: {}", self.center_rank);
        if !self.center_torsion.is_empty() {
            let _ = writeln!(s, "center_torsion: {:?}", self.center_torsion);
        }
        for (i, x) in self.associated.iter().enumerate() {
            let wedge: Vec<String> = x.wedge.iter().map(|w| format_coroot(w)).collect();
            let _ = writeln!(
                s,
                "sigma[{}]: {} ({}) wedge = {{{}}}",
                i + 1,
                wss::format_root(&x.sigma),
                x.pattern,
                wedge.join(", ")
            );
        }
        let kinds: Vec<String> = self
            .adapted_folding
            .factors
            .iter()
            .filter(|f| f.kind != FactorKind::TrivialComponent)
            .map(|f| format!("{:?} {}->{}", f.kind, f.source, f.target))
            .collect();
        let _ = writeln!(
            s,
            "adapted_folding: {}",
            if kinds.is_empty() { "trivial".to_string() } else { kinds.join(", ") }
        );
        let _ = writeln!(s, "weyl_lift_relations_hold: {}", self.weyl_lift.relations_hold);
        let factors = if self.fixed_levi_factors.is_empty() {
            "none".to_string()
        } else {
            self.fixed_levi_factors.join(", ")
        };
        let _ = writeln!(
            s,
            "fixed_levi_factors: {factors}; 1⊆G_m x{}",
            self.trivial_torus_factors
        );
        let _ = writeln!(s, "sl2_characteristic: {:?}", self.sl2_characteristic);
        let _ = writeln!(
            s,
            "very_adapted_freedom: rank {} ({} constraints)",
            self.very_adapted_freedom.free_rank,
            self.very_adapted_freedom.constraints.len()
        );
        let _ = writeln!(s, "z_adapted_count: {}", self.z_adapted_count);
        let _ = writeln!(s, "centralizer_is_full: {}", self.centralizer_is_full);
        let _ = writeln!(s, "gzc_compatible: {}", self.gzc_compatible);
        s
    }
}

/// Coroot in simple-coroot notation, e.g. `α1^∨+2α2^∨`.
pub fn format_coroot(c: &[i64]) -> String {
    wss::format_root(c)
        .split('+')
        .map(|t| format!("{t}^∨"))
        .collect::<Vec<_>>()
        .join("+")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::LatticeFlavor;
    use crate::wss::XiSpec;

    fn sys(t: &str, xi: XiSpec, sigma: Matrix, sp: Vec<usize>) -> WeakSphericalSystem {
        let a = BasedRootDatum::build(t, &LatticeFlavor::SimplyConnected).unwrap();
        WeakSphericalSystem::new(a, xi, sigma, sp).unwrap()
    }

    #[test]
    fn b3_associated_roots() {
        let w = sys("B3", XiSpec::Min, vec![vec![1, 2, 3]], vec![0, 1]);
        let an = Analysis::new(&w).unwrap();
        let x = &an.associated()[0];
        assert_eq!(x.gammas, vec![vec![1, 1, 2], vec![0, 1, 1]]);
        assert_eq!(x.wedge, vec![vec![1, 1, 1], vec![0, 2, 1]]);
        assert_eq!(x.delta, Some((0, 1)));
        assert_eq!(an.sigma_covectors(), &vec![vec![2]]);
        assert_eq!(an.associated_type().unwrap().to_string(), "A1+A1+t^1");
        let lift = an.weyl_lift().unwrap();
        assert_eq!(lift.elements[0].sp_image, vec![1, 0]);
        let c = an.centralizer().unwrap();
        assert_eq!(c.datum.cartan_type().to_string(), "A1");
        assert_eq!(
            an.fixed_levi_structure().unwrap().factors,
            vec![FixedFactor::Symmetric]
        );
        assert_eq!(an.sl2_characteristic(), vec![2, 2]);
    }

    #[test]
    fn d2_associated_roots() {
        let w = sys("A1xA1", XiSpec::Min, vec![vec![1, 1]], vec![]);
        let an = Analysis::new(&w).unwrap();
        assert_eq!(an.associated()[0].wedge, vec![vec![1, 0], vec![0, 1]]);
        assert_eq!(an.sigma_covectors(), &vec![vec![2]]);
        let f = an.adapted_folding().unwrap();
        assert_eq!(f.factors[0].kind, FactorKind::SwappedPair);
        assert_eq!(f.folded.cartan_type().to_string(), "A1");
    }

    #[test]
    fn g2_starred_case() {
        let w = sys("G2", XiSpec::Min, vec![vec![1, 1], vec![1, 0]], vec![]);
        let an = Analysis::new(&w).unwrap();
        let e = an
            .epsilons()
            .into_iter()
            .find(|e| e.sigmas == (1, 2))
            .unwrap();
        assert_eq!(e.epsilon, vec![0, 3]);
        assert!(!e.is_positive_coroot);
        assert_eq!(an.associated_type().unwrap().to_string(), "A2");
        let r = an.report().unwrap();
        assert_eq!(r.g_dual_x.group.cartan_type, "A2");
    }

    #[test]
    fn kernel_order_and_horospherical() {
        let w = sys("A1", XiSpec::Explicit(vec![vec![2]]), vec![vec![1]], vec![]);
        let r = full_report(&w).unwrap();
        assert_eq!(r.kernel_order, 2);
        assert_eq!(r.g_dual_x.group.cartan_type, "A1");
        let h = sys("A2", XiSpec::Max, vec![], vec![]);
        let r = full_report(&h).unwrap();
        assert_eq!(r.g_dual_x.group.lie_algebra, "t^2");
        assert_eq!(r.centralizer.group.lie_algebra, "t^2");
        assert_eq!(r.kernel_order, 1);
    }

    #[test]
    fn roots_have_no_decomposition() {
        let b3 = BasedRootDatum::build("B3", &LatticeFlavor::Adjoint).unwrap();
        for r in b3.positive_roots() {
            assert!(decompositions(r, &b3).is_empty(), "{r:?}");
        }
    }

    #[test]
    fn report_round_trips() {
        let w = sys("B3", XiSpec::Max, vec![vec![1, 2, 3]], vec![0, 1]);
        let r = full_report(&w).unwrap();
        let s = serde_json::to_string_pretty(&serde_json::to_value(&r).unwrap()).unwrap();
        let back: DualReport = serde_json::from_str(&s).unwrap();
        assert_eq!(back, r);
        assert!(s.contains("\"g_dual_X\""));
    }
}
