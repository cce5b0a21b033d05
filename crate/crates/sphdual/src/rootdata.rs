//! Based root data `(Λ, S, Λ^∨, S^∨)` with exact integer coordinates.
//!
//! Λ and Λ^∨ are stored in mutually dual bases, so the pairing is the dot product.
//! Roots are indexed by their coordinates in the simple roots, coroots by their
//! coordinates in the simple coroots.

use std::collections::HashMap;
use std::fmt;

use crate::cartan::{self, CartanType, Component, SimpleType};
use crate::error::RootDataError;
use crate::linalg::{self, Matrix};

/// Which lattice a [`LatticeVector`] lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Space {
    Lambda,
    LambdaDual,
    Xi,
    XiDual,
}

impl Space {
    pub fn dual(self) -> Space {
        match self {
            Space::Lambda => Space::LambdaDual,
            Space::LambdaDual => Space::Lambda,
            Space::Xi => Space::XiDual,
            Space::XiDual => Space::Xi,
        }
    }
}

impl fmt::Display for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Space::Lambda => "Λ",
            Space::LambdaDual => "Λ^∨",
            Space::Xi => "Ξ",
            Space::XiDual => "Ξ^∨",
        })
    }
}

/// An integer vector tagged with its lattice.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LatticeVector {
    pub space: Space,
    pub coords: Vec<i64>,
}

impl LatticeVector {
    pub fn new(space: Space, coords: Vec<i64>) -> Self {
        Self { space, coords }
    }

    pub fn checked_add(&self, other: &LatticeVector) -> Result<LatticeVector, RootDataError> {
        self.same_space(other)?;
        Ok(Self::new(self.space, linalg::add(&self.coords, &other.coords)))
    }

    pub fn checked_sub(&self, other: &LatticeVector) -> Result<LatticeVector, RootDataError> {
        self.same_space(other)?;
        Ok(Self::new(self.space, linalg::sub(&self.coords, &other.coords)))
    }

    pub fn neg(&self) -> LatticeVector {
        Self::new(self.space, linalg::scale(&self.coords, -1))
    }

    /// The canonical pairing with a vector of the dual lattice.
    pub fn pair(&self, other: &LatticeVector) -> Result<i64, RootDataError> {
        if other.space != self.space.dual() || other.coords.len() != self.coords.len() {
            return Err(RootDataError::SpaceMismatch(
                self.space.to_string(),
                other.space.to_string(),
            ));
        }
        Ok(linalg::dot(&self.coords, &other.coords))
    }

    fn same_space(&self, other: &LatticeVector) -> Result<(), RootDataError> {
        if self.space != other.space || self.coords.len() != other.coords.len() {
            return Err(RootDataError::SpaceMismatch(
                self.space.to_string(),
                other.space.to_string(),
            ));
        }
        Ok(())
    }
}

/// How Λ sits between the root lattice and the weight lattice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LatticeFlavor {
    SimplyConnected,
    Adjoint,
    /// Rows are a basis of Λ written in fundamental-weight coordinates
    /// (followed by torus coordinates).
    Explicit(Matrix),
}

/// A parsed ambient type such as `C3xA1` or `A2xT1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TypeSpec {
    pub factors: Vec<SimpleType>,
    pub torus_rank: usize,
}

impl TypeSpec {
    pub fn parse(s: &str) -> Result<Self, RootDataError> {
        let mut factors = Vec::new();
        let mut torus_rank = 0;
        for part in s.split(['x', '×', '*']) {
            let part = part.trim();
            if let Some(k) = part.strip_prefix(['T', 't']) {
                torus_rank += k
                    .parse::<usize>()
                    .map_err(|_| RootDataError::UnknownType(s.to_string()))?;
            } else {
                factors.push(part.parse()?);
            }
        }
        Ok(Self {
            factors,
            torus_rank,
        })
    }

    pub fn semisimple_rank(&self) -> usize {
        self.factors.iter().map(|f| f.rank).sum()
    }

    pub fn cartan(&self) -> Matrix {
        let r = self.semisimple_rank();
        let mut a = vec![vec![0; r]; r];
        let mut off = 0;
        for f in &self.factors {
            let c = f.cartan();
            for i in 0..f.rank {
                for j in 0..f.rank {
                    a[off + i][off + j] = c[i][j];
                }
            }
            off += f.rank;
        }
        a
    }
}

impl fmt::Display for TypeSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self.factors.iter().map(ToString::to_string).collect();
        if self.torus_rank > 0 {
            parts.push(format!("T{}", self.torus_rank));
        }
        f.write_str(&parts.join("x"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasedRootDatum {
    rank: usize,
    simple_roots: Matrix,
    simple_coroots: Matrix,
    cartan: Matrix,
    sym: Vec<i64>,
    components: Vec<Component>,
    positive: Vec<Vec<i64>>,
    positive_coroots: Vec<Vec<i64>>,
    index: HashMap<Vec<i64>, usize>,
}

impl BasedRootDatum {
    /// Builds a datum from simple roots (rows in Λ) and simple coroots (rows in Λ^∨).
    pub fn from_simple(
        rank: usize,
        simple_roots: Matrix,
        simple_coroots: Matrix,
    ) -> Result<Self, RootDataError> {
        if simple_roots.len() != simple_coroots.len() {
            return Err(RootDataError::Dimension(
                "roots and coroots differ in number".into(),
            ));
        }
        if simple_roots
            .iter()
            .chain(&simple_coroots)
            .any(|v| v.len() != rank)
        {
            return Err(RootDataError::Dimension(format!(
                "vectors must have length {rank}"
            )));
        }
        let cartan: Matrix = simple_roots
            .iter()
            .map(|a| simple_coroots.iter().map(|c| linalg::dot(a, c)).collect())
            .collect();
        let components = cartan::identify(&cartan)?;
        let sym = cartan::symmetrizer(&cartan)?;
        let (positive, positive_coroots) = generate_positive(&cartan, &sym);
        let index = positive
            .iter()
            .enumerate()
            .map(|(i, r)| (r.clone(), i))
            .collect();
        Ok(Self {
            rank,
            simple_roots,
            simple_coroots,
            cartan,
            sym,
            components,
            positive,
            positive_coroots,
            index,
        })
    }

    /// Standard construction from a type label and a lattice flavor,
    /// simple roots in Bourbaki order, factors concatenated.
    pub fn build(spec: &str, flavor: &LatticeFlavor) -> Result<Self, RootDataError> {
        let spec = TypeSpec::parse(spec)?;
        let a = spec.cartan();
        let r = a.len();
        let n = r + spec.torus_rank;
        let pad = |v: &[i64]| {
            let mut w = v.to_vec();
            w.resize(n, 0);
            w
        };
        let unit = |i: usize| {
            let mut w = vec![0; n];
            w[i] = 1;
            w
        };
        let column = |j: usize| a.iter().map(|row| row[j]).collect::<Vec<_>>();
        let (roots, coroots) = match flavor {
            LatticeFlavor::SimplyConnected => (
                a.iter().map(|row| pad(row)).collect(),
                (0..r).map(unit).collect(),
            ),
            LatticeFlavor::Adjoint => (
                (0..r).map(unit).collect(),
                (0..r).map(|j| pad(&column(j))).collect(),
            ),
            LatticeFlavor::Explicit(basis) => {
                if basis.len() != n || basis.iter().any(|row| row.len() != n) {
                    return Err(RootDataError::InvalidLattice(format!(
                        "basis must be {n}x{n}"
                    )));
                }
                if linalg::det(basis) == 0 {
                    return Err(RootDataError::InvalidLattice("basis is singular".into()));
                }
                let roots = a
                    .iter()
                    .enumerate()
                    .map(|(i, row)| {
                        linalg::solve_in_lattice(basis, &pad(row)).ok_or_else(|| {
                            RootDataError::InvalidLattice(format!(
                                "simple root {} is not in the lattice",
                                i + 1
                            ))
                        })
                    })
                    .collect::<Result<Matrix, _>>()?;
                let coroots = (0..r)
                    .map(|j| basis.iter().map(|row| row[j]).collect())
                    .collect();
                (roots, coroots)
            }
        };
        Self::from_simple(n, roots, coroots)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn num_simple(&self) -> usize {
        self.simple_roots.len()
    }

    pub fn simple_roots(&self) -> &Matrix {
        &self.simple_roots
    }

    pub fn simple_coroots(&self) -> &Matrix {
        &self.simple_coroots
    }

    pub fn cartan(&self) -> &Matrix {
        &self.cartan
    }

    /// Minimal integer symmetrizer `d_i = (α_i, α_i)/2` per component.
    pub fn symmetrizer(&self) -> &[i64] {
        &self.sym
    }

    /// Recognized components with their Bourbaki orders.
    pub fn components(&self) -> &[Component] {
        &self.components
    }

    /// The pairing matrix between the stored bases of Λ and Λ^∨ (always the identity).
    pub fn pairing_matrix(&self) -> Matrix {
        linalg::identity(self.rank)
    }

    pub fn cartan_type(&self) -> CartanType {
        CartanType::new(
            self.components.iter().map(|c| c.label).collect(),
            self.rank - self.num_simple(),
        )
    }

    /// Positive roots in simple-root coordinates, by increasing height.
    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive
    }

    /// Positive coroots in simple-coroot coordinates, aligned with [`Self::positive_roots`].
    pub fn positive_coroots(&self) -> &[Vec<i64>] {
        &self.positive_coroots
    }

    pub fn root_index(&self, coeffs: &[i64]) -> Option<usize> {
        self.index.get(coeffs).copied()
    }

    pub fn is_positive_root(&self, coeffs: &[i64]) -> bool {
        self.index.contains_key(coeffs)
    }

    pub fn is_root(&self, coeffs: &[i64]) -> bool {
        self.is_positive_root(coeffs) || self.is_positive_root(&linalg::scale(coeffs, -1))
    }

    /// Coroot (simple-coroot coordinates) of a root given in simple-root coordinates.
    pub fn coroot_of(&self, coeffs: &[i64]) -> Option<Vec<i64>> {
        if let Some(i) = self.root_index(coeffs) {
            return Some(self.positive_coroots[i].clone());
        }
        let neg = linalg::scale(coeffs, -1);
        self.root_index(&neg)
            .map(|i| linalg::scale(&self.positive_coroots[i], -1))
    }

    /// Element of Λ with the given simple-root coordinates.
    pub fn root_vector(&self, coeffs: &[i64]) -> Vec<i64> {
        linalg::vec_mat(coeffs, &self.simple_roots).resize_to(self.rank)
    }

    /// Element of Λ^∨ with the given simple-coroot coordinates.
    pub fn coroot_vector(&self, coeffs: &[i64]) -> Vec<i64> {
        linalg::vec_mat(coeffs, &self.simple_coroots).resize_to(self.rank)
    }

    /// `⟨x | α^∨⟩` for `x ∈ Λ` and the coroot of a root in simple-root coordinates.
    pub fn pair_with_coroot(&self, x: &[i64], root: &[i64]) -> i64 {
        let c = self.coroot_of(root).expect("not a root");
        linalg::dot(x, &self.coroot_vector(&c))
    }

    /// `⟨β | α_i^∨⟩` for a root-lattice element in simple-root coordinates.
    pub fn simple_pairing(&self, coeffs: &[i64], i: usize) -> i64 {
        coeffs.iter().zip(&self.cartan).map(|(c, row)| c * row[i]).sum()
    }

    /// Φ as tagged vectors in Λ, positive roots first, then their negatives.
    pub fn generate_roots(&self) -> Vec<LatticeVector> {
        let pos: Vec<LatticeVector> = self
            .positive
            .iter()
            .map(|c| LatticeVector::new(Space::Lambda, self.root_vector(c)))
            .collect();
        let neg: Vec<LatticeVector> = pos.iter().map(LatticeVector::neg).collect();
        pos.into_iter().chain(neg).collect()
    }

    /// Reflection `x ↦ x − ⟨x|α^∨⟩α` on Λ, as a matrix acting on column vectors.
    pub fn reflection_matrix(&self, root: &[i64]) -> Matrix {
        let a = self.root_vector(root);
        let c = self.coroot_vector(&self.coroot_of(root).expect("not a root"));
        (0..self.rank)
            .map(|i| {
                (0..self.rank)
                    .map(|j| i64::from(i == j) - a[i] * c[j])
                    .collect()
            })
            .collect()
    }

    /// The dual datum `(Λ^∨, S^∨, Λ, S)`.
    pub fn dual(&self) -> BasedRootDatum {
        Self::from_simple(
            self.rank,
            self.simple_coroots.clone(),
            self.simple_roots.clone(),
        )
        .expect("dual of a valid datum is valid")
    }

    /// The Levi datum `(Λ, S_0, Λ^∨, S_0^∨)` for a subset of simple-root indices.
    pub fn levi(&self, subset: &[usize]) -> BasedRootDatum {
        Self::from_simple(
            self.rank,
            subset.iter().map(|&i| self.simple_roots[i].clone()).collect(),
            subset
                .iter()
                .map(|&i| self.simple_coroots[i].clone())
                .collect(),
        )
        .expect("Levi of a valid datum is valid")
    }

    /// Diagram automorphisms of the Dynkin diagram (permutations of simple indices).
    pub fn diagram_automorphisms(&self) -> Vec<Vec<usize>> {
        cartan::automorphisms(&self.cartan)
    }

    pub fn scalar_product(&self) -> ScalarProduct {
        ScalarProduct::new(self.cartan.clone(), self.sym.clone())
    }

    /// Whether `coeffs` is supported inside the given simple-root index set.
    pub fn supported_in(coeffs: &[i64], set: &[usize]) -> bool {
        coeffs
            .iter()
            .enumerate()
            .all(|(i, &c)| c == 0 || set.contains(&i))
    }
}

trait ResizeTo {
    fn resize_to(self, n: usize) -> Self;
}

impl ResizeTo for Vec<i64> {
    fn resize_to(mut self, n: usize) -> Self {
        self.resize(n, 0);
        self
    }
}

fn generate_positive(cartan: &Matrix, sym: &[i64]) -> (Vec<Vec<i64>>, Vec<Vec<i64>>) {
    let n = cartan.len();
    let unit = |i: usize| {
        let mut v = vec![0i64; n];
        v[i] = 1;
        v
    };
    let mut roots: Vec<Vec<i64>> = (0..n).map(unit).collect();
    let mut seen: std::collections::HashSet<Vec<i64>> = roots.iter().cloned().collect();
    let mut layer = roots.clone();
    while !layer.is_empty() {
        let mut next = Vec::new();
        for beta in &layer {
            for i in 0..n {
                if *beta == unit(i) {
                    continue;
                }
                let mut p = 0;
                let mut down = beta.clone();
                loop {
                    down[i] -= 1;
                    if !seen.contains(&down) {
                        break;
                    }
                    p += 1;
                }
                let pairing: i64 = (0..n).map(|j| beta[j] * cartan[j][i]).sum();
                if p - pairing > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    if seen.insert(up.clone()) {
                        next.push(up);
                    }
                }
            }
        }
        next.sort();
        roots.extend(next.iter().cloned());
        layer = next;
    }
    let b = cartan::symmetrized(cartan, sym);
    let coroots = roots
        .iter()
        .map(|beta| {
            let norm2: i64 = (0..n)
                .flat_map(|j| (0..n).map(move |k| (j, k)))
                .map(|(j, k)| beta[j] * beta[k] * b[j][k])
                .sum();
            let half = norm2 / 2;
            beta.iter()
                .zip(sym)
                .map(|(c, d)| {
                    assert_eq!((c * d) % half, 0, "non-integral coroot");
                    c * d / half
                })
                .collect()
        })
        .collect();
    (roots, coroots)
}

/// The W-invariant scalar product on the root span, `(α_i, α_j) = a[i][j]·d_j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScalarProduct {
    cartan: Matrix,
    d: Vec<i64>,
}

impl ScalarProduct {
    pub fn new(cartan: Matrix, d: Vec<i64>) -> Self {
        Self { cartan, d }
    }

    /// Multiplies `d` on each connected component by the given positive factor.
    pub fn rescaled(&self, factors: &[i64]) -> ScalarProduct {
        let mut d = self.d.clone();
        for (comp, &k) in cartan::components(&self.cartan).iter().zip(factors) {
            assert!(k > 0, "rescaling factor must be positive");
            for &i in comp {
                d[i] *= k;
            }
        }
        Self::new(self.cartan.clone(), d)
    }

    pub fn gram(&self) -> Matrix {
        cartan::symmetrized(&self.cartan, &self.d)
    }

    /// `(x, y)` for root-lattice elements in simple-root coordinates.
    pub fn product(&self, x: &[i64], y: &[i64]) -> i64 {
        let g = self.gram();
        linalg::dot(x, &linalg::mat_vec(&g, y))
    }

    /// `(χ, σ)` for `χ ∈ Λ` and σ in simple-root coordinates, via `(χ, α_i) = d_i⟨χ|α_i^∨⟩`.
    pub fn weight_product(&self, datum: &BasedRootDatum, chi: &[i64], sigma: &[i64]) -> i64 {
        sigma
            .iter()
            .zip(&self.d)
            .zip(datum.simple_coroots())
            .map(|((c, d), cor)| c * d * linalg::dot(chi, cor))
            .sum()
    }

    /// Invariance under every simple reflection, tested on the basis.
    pub fn is_w_invariant(&self) -> bool {
        let n = self.cartan.len();
        let reflect = |x: &[i64], i: usize| {
            let p: i64 = (0..n).map(|j| x[j] * self.cartan[j][i]).sum();
            let mut y = x.to_vec();
            y[i] -= p;
            y
        };
        let unit = |i: usize| {
            let mut v = vec![0i64; n];
            v[i] = 1;
            v
        };
        (0..n).all(|i| {
            (0..n).all(|j| {
                (0..n).all(|k| {
                    self.product(&reflect(&unit(j), i), &reflect(&unit(k), i))
                        == self.product(&unit(j), &unit(k))
                })
            })
        })
    }
}

/// Cartan type of the system with the given simple roots and coroots.
pub fn recognize_type(
    vectors: &[Vec<i64>],
    covectors: &[Vec<i64>],
    ambient_rank: usize,
) -> Result<CartanType, RootDataError> {
    let a: Matrix = vectors
        .iter()
        .map(|v| covectors.iter().map(|c| linalg::dot(v, c)).collect())
        .collect();
    let torus = ambient_rank
        .checked_sub(vectors.len())
        .ok_or_else(|| RootDataError::Dimension("more vectors than the ambient rank".into()))?;
    cartan::cartan_type(&a, torus)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BasisFailure {
    HalfSpace,
    Pairing,
    NotPositiveDefinite,
}

/// Whether vectors with the given covectors form the basis of a finite root system.
pub fn check_basis_criterion(
    vectors: &[Vec<i64>],
    covectors: &[Vec<i64>],
) -> Result<(), BasisFailure> {
    if !linalg::in_open_half_space(vectors) {
        return Err(BasisFailure::HalfSpace);
    }
    let a: Matrix = vectors
        .iter()
        .map(|v| covectors.iter().map(|c| linalg::dot(v, c)).collect())
        .collect();
    if cartan::check_generalized(&a).is_err() {
        return Err(BasisFailure::Pairing);
    }
    match cartan::symmetrizer(&a) {
        Ok(d) if linalg::is_positive_definite(&cartan::symmetrized(&a, &d)) => Ok(()),
        _ => Err(BasisFailure::NotPositiveDefinite),
    }
}

/// Criterion for a set of positive roots to be the basis of an additively closed
/// subsystem: no difference of two of its elements is a positive root.
pub fn is_additively_closed(
    basis: &[Vec<i64>],
    ambient: &BasedRootDatum,
) -> Result<bool, RootDataError> {
    if basis.iter().any(|b| !ambient.is_positive_root(b)) {
        return Err(RootDataError::InputNotPositiveRoots);
    }
    Ok(basis.iter().all(|s| {
        basis
            .iter()
            .all(|t| s == t || !ambient.is_positive_root(&linalg::sub(s, t)))
    }))
}

/// `(Qγ₁ + Qγ₂) ∩ Φ = {±γ₁, ±γ₂}`.
pub fn is_strongly_orthogonal(g1: &[i64], g2: &[i64], ambient: &BasedRootDatum) -> bool {
    let n = g1.len();
    if linalg::rank(&[g1.to_vec(), g2.to_vec()], n) < 2 {
        return false;
    }
    ambient.positive_roots().iter().all(|beta| {
        beta == g1
            || beta == g2
            || linalg::rank(&[g1.to_vec(), g2.to_vec(), beta.clone()], n) == 3
    })
}

/// Saturation `(Ξ⊗Q) ∩ Λ` and the index `[Ξ_sat : Ξ]`.
pub fn saturate(basis: &[Vec<i64>], rank: usize) -> Result<(Matrix, i64), RootDataError> {
    linalg::saturate(basis, rank).map_err(|_| RootDataError::DependentBasis)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sc(s: &str) -> BasedRootDatum {
        BasedRootDatum::build(s, &LatticeFlavor::SimplyConnected).unwrap()
    }

    #[test]
    fn root_counts() {
        assert_eq!(sc("A2").generate_roots().len(), 6);
        assert_eq!(sc("G2").generate_roots().len(), 12);
        assert_eq!(sc("B3").generate_roots().len(), 18);
        assert_eq!(sc("E8").positive_roots().len(), 120);
    }

    #[test]
    fn flavors() {
        let a1 = sc("A1");
        assert_eq!(a1.simple_roots(), &vec![vec![2]]);
        assert_eq!(a1.cartan(), &vec![vec![2]]);
        let g2 = BasedRootDatum::build("G2", &LatticeFlavor::Adjoint).unwrap();
        assert_eq!(g2.cartan(), &vec![vec![2, -1], vec![-3, 2]]);
        let p = BasedRootDatum::build("C3xA1", &LatticeFlavor::Adjoint).unwrap();
        assert_eq!(p.rank(), 4);
        assert_eq!(p.cartan()[3][2], 0);
        let gl2 = BasedRootDatum::build("A1xT1", &LatticeFlavor::Explicit(vec![vec![1, 1], vec![-1, 1]]));
        assert!(gl2.is_ok());
        let bad = BasedRootDatum::build("A1", &LatticeFlavor::Explicit(vec![vec![4]]));
        assert!(matches!(bad, Err(RootDataError::InvalidLattice(_))));
    }

    #[test]
    fn g2_coroots() {
        let g2 = sc("G2");
        // α₁ short: the coroot of α₁+α₂ is α₁^∨+3α₂^∨
        assert_eq!(g2.coroot_of(&[1, 1]).unwrap(), vec![1, 3]);
        assert_eq!(g2.coroot_of(&[2, 1]).unwrap(), vec![2, 3]);
    }

    #[test]
    fn b3_associated_pair_is_strongly_orthogonal() {
        let b3 = sc("B3");
        assert!(is_strongly_orthogonal(&[1, 1, 2], &[0, 1, 1], &b3));
        let a2 = sc("A2");
        assert!(!is_strongly_orthogonal(&[1, 0], &[0, 1], &a2));
        let a1a1 = sc("A1xA1");
        assert!(is_strongly_orthogonal(&[1, 0], &[0, 1], &a1a1));
    }

    #[test]
    fn recognition_examples() {
        let b3 = sc("B3");
        let c1 = b3.coroot_vector(&b3.coroot_of(&[1, 1, 2]).unwrap());
        let c2 = b3.coroot_vector(&b3.coroot_of(&[0, 1, 1]).unwrap());
        assert_eq!(b3.coroot_of(&[1, 1, 2]).unwrap(), vec![1, 1, 1]);
        assert_eq!(b3.coroot_of(&[0, 1, 1]).unwrap(), vec![0, 2, 1]);
        let roots = vec![b3.root_vector(&[1, 1, 2]), b3.root_vector(&[0, 1, 1])];
        // inside the dual datum the coroots are the roots
        let t = recognize_type(&[c1, c2], &roots, 3).unwrap();
        assert_eq!(t.to_string(), "A1+A1+t^1");
        let g2 = sc("G2");
        let v = vec![g2.root_vector(&[1, 0]), g2.root_vector(&[1, 1])];
        let c = vec![
            g2.coroot_vector(&g2.coroot_of(&[1, 0]).unwrap()),
            g2.coroot_vector(&g2.coroot_of(&[1, 1]).unwrap()),
        ];
        assert_eq!(recognize_type(&v, &c, 2).unwrap().to_string(), "A2");
    }

    #[test]
    fn basis_criterion() {
        let a2 = sc("A2");
        let r = a2.simple_roots().clone();
        let c = a2.simple_coroots().clone();
        assert_eq!(check_basis_criterion(&r, &c), Ok(()));
        let a1 = sc("A1");
        let v = vec![vec![2], vec![-2]];
        let cv = vec![vec![1], vec![-1]];
        assert_eq!(check_basis_criterion(&v, &cv), Err(BasisFailure::HalfSpace));
        let _ = a1;
    }

    #[test]
    fn additive_closure() {
        let b2 = sc("B2");
        assert!(!is_additively_closed(&[vec![0, 1], vec![1, 1]], &b2).unwrap());
        let g2 = sc("G2");
        // long roots α₂ and 3α₁+α₂
        assert!(is_additively_closed(&[vec![0, 1], vec![3, 1]], &g2).unwrap());
        assert!(is_additively_closed(&[vec![1, 0]], &g2).unwrap());
        assert_eq!(
            is_additively_closed(&[vec![1, -1]], &g2),
            Err(RootDataError::InputNotPositiveRoots)
        );
    }

    #[test]
    fn duality() {
        let b3 = sc("B3");
        assert_eq!(b3.dual().cartan_type().to_string(), "C3");
        assert_eq!(b3.dual().dual(), b3);
        let g2 = sc("G2");
        assert_eq!(g2.dual().cartan_type().to_string(), "G2");
        let t = linalg::transpose(b3.cartan(), 3);
        assert_eq!(b3.dual().cartan(), &t);
    }

    #[test]
    fn scalar_product_invariance() {
        for s in ["B3", "G2", "F4", "C3xA1"] {
            let sp = sc(s).scalar_product();
            assert!(sp.is_w_invariant());
            assert!(sp.rescaled(&[3, 2]).is_w_invariant());
        }
    }

    #[test]
    fn lattice_vectors_are_tagged() {
        let a = LatticeVector::new(Space::Lambda, vec![1, 0]);
        let b = LatticeVector::new(Space::LambdaDual, vec![0, 1]);
        assert!(a.checked_add(&b).is_err());
        assert_eq!(a.pair(&b), Ok(0));
        assert!(a.pair(&a).is_err());
    }
}
