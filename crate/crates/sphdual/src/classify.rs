//! Enumeration of weak spherical systems of rank one and two by placing table
//! patterns on subdiagrams, the transcribed rank one and rank two tables, the
//! decomposition into indecomposable pieces, and brute-force oracles.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::cartan::{self, Series, SimpleType};
use crate::dualize::{self, Analysis};
use crate::error::ClassifyError;
use crate::linalg::{self, Matrix};
use crate::par::{self, Execution};
use crate::rootdata::{BasedRootDatum, LatticeFlavor, TypeSpec};
use crate::wss::{self, PatternKind, WeakSphericalSystem, XiSpec};

pub const DEFAULT_RANK_BOUND: usize = 8;

/// A spherical root together with the colouring its pattern forces on `|σ|`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Placement {
    pub sigma: Vec<i64>,
    pub support: Vec<usize>,
    /// Black vertices, i.e. `Sᵖ ∩ |σ|`.
    pub black: Vec<usize>,
}

/// Every table pattern placed on every subdiagram of `a`.
pub fn placements(a: &[Vec<i64>]) -> Vec<Placement> {
    let r = a.len();
    let mut out = BTreeSet::new();
    for mask in 1u32..(1 << r) {
        let subset: Vec<usize> = (0..r).filter(|&i| mask & (1 << i) != 0).collect();
        let m = subset.len();
        let sub = cartan::submatrix(a, &subset);
        for kind in PatternKind::ALL {
            if !kind.admits(m) {
                continue;
            }
            let coeffs = kind.coefficients(m);
            let black = kind.black(m);
            for pi in cartan::isomorphisms(&sub, &kind.cartan(m)) {
                let mut sigma = vec![0; r];
                let mut b = Vec::new();
                for k in 0..m {
                    let v = subset[pi[k]];
                    sigma[v] = coeffs[k];
                    if black[k] {
                        b.push(v);
                    }
                }
                b.sort_unstable();
                out.insert(Placement {
                    sigma,
                    support: subset.clone(),
                    black: b,
                });
            }
        }
    }
    out.into_iter().collect()
}

/// `(Σ, Sᵖ)` up to diagram automorphisms: the lexicographically least image.
pub fn canonical_form(
    sigma: &[Vec<i64>],
    sp: &[usize],
    automorphisms: &[Vec<usize>],
) -> (Matrix, Vec<usize>) {
    automorphisms
        .iter()
        .map(|u| {
            let mut s: Matrix = sigma
                .iter()
                .map(|v| {
                    let mut w = vec![0; v.len()];
                    for (i, &c) in v.iter().enumerate() {
                        w[u[i]] = c;
                    }
                    w
                })
                .collect();
            s.sort();
            let mut p: Vec<usize> = sp.iter().map(|&i| u[i]).collect();
            p.sort_unstable();
            (s, p)
        })
        .min()
        .expect("the identity is an automorphism")
}

/// One enumerated system (wonderful lattice `Ξ = ZΣ`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Entry {
    pub sigma: Matrix,
    /// 0-based.
    pub sp: Vec<usize>,
    pub patterns: Vec<String>,
    pub indecomposable: bool,
    /// `𝔤^∨, 𝔤^∧, 𝔤^∨_X, 𝔩^∨, 𝔩^∧`, or the error text.
    pub summary: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerationResult {
    pub ambient: String,
    pub entries: Vec<Entry>,
}

impl EnumerationResult {
    pub fn keys(&self) -> BTreeSet<(Matrix, Vec<usize>)> {
        self.entries
            .iter()
            .map(|e| (e.sigma.clone(), e.sp.clone()))
            .collect()
    }
}

fn ambient_datum(label: &str, bound: usize) -> Result<BasedRootDatum, ClassifyError> {
    let spec = TypeSpec::parse(label)?;
    let r = spec.semisimple_rank();
    if r > bound {
        return Err(ClassifyError::RankBoundExceeded(r, bound));
    }
    Ok(BasedRootDatum::build(label, &LatticeFlavor::SimplyConnected)?)
}

fn entry(w: &WeakSphericalSystem, autos: &[Vec<usize>]) -> Entry {
    let (sigma, sp) = canonical_form(w.sigma(), w.sp(), autos);
    let c = WeakSphericalSystem::new(w.ambient().clone(), XiSpec::Min, sigma, sp)
        .expect("same shape");
    let patterns = c
        .patterns()
        .map(|ps| ps.iter().map(|p| p.label()).collect())
        .unwrap_or_default();
    let summary = match dualize::full_report(&c) {
        Ok(r) => r.columns().join(" | "),
        Err(e) => format!("error: {e}"),
    };
    Entry {
        indecomposable: decompose(&c).len() == 1,
        sigma: c.sigma().clone(),
        sp: c.sp().to_vec(),
        patterns,
        summary,
    }
}

fn finish(label: &str, mut entries: Vec<Entry>) -> EnumerationResult {
    entries.sort_by(|a, b| (&a.sigma, &a.sp).cmp(&(&b.sigma, &b.sp)));
    entries.dedup_by(|a, b| a.sigma == b.sigma && a.sp == b.sp);
    EnumerationResult {
        ambient: label.to_string(),
        entries,
    }
}

/// All `(Zσ, {σ}, Sᵖ)` with `|σ| = S` satisfying the axioms.
pub fn enumerate_rank1(label: &str, bound: usize) -> Result<EnumerationResult, ClassifyError> {
    let a = ambient_datum(label, bound)?;
    let r = a.num_simple();
    let autos = cartan::automorphisms(a.cartan());
    let mut entries = Vec::new();
    for p in placements(a.cartan()) {
        if p.support.len() != r {
            continue;
        }
        let w = WeakSphericalSystem::new(a.clone(), XiSpec::Min, vec![p.sigma], p.black)?;
        if w.is_valid() {
            entries.push(entry(&w, &autos));
        }
    }
    Ok(finish(label, entries))
}

/// All indecomposable `(ZΣ, Σ = {σ, τ}, Sᵖ)` with `S = |σ| ∪ |τ|` satisfying the axioms.
pub fn enumerate_rank2(
    label: &str,
    bound: usize,
    exec: Execution,
) -> Result<EnumerationResult, ClassifyError> {
    let a = ambient_datum(label, bound)?;
    let r = a.num_simple();
    let autos = cartan::automorphisms(a.cartan());
    let ps = placements(a.cartan());
    let mut pairs = Vec::new();
    for i in 0..ps.len() {
        for j in i + 1..ps.len() {
            let (p, q) = (&ps[i], &ps[j]);
            if p.sigma == q.sigma {
                continue;
            }
            let union: BTreeSet<usize> = p.support.iter().chain(&q.support).copied().collect();
            if union.len() != r {
                continue;
            }
            let agree = p
                .support
                .iter()
                .filter(|v| q.support.contains(v))
                .all(|v| p.black.contains(v) == q.black.contains(v));
            if agree {
                pairs.push((i, j));
            }
        }
    }
    let found = par::map(exec, pairs, |(i, j)| {
        let (p, q) = (&ps[i], &ps[j]);
        let mut sp: Vec<usize> = p.black.iter().chain(&q.black).copied().collect();
        sp.sort_unstable();
        sp.dedup();
        let w = WeakSphericalSystem::new(
            a.clone(),
            XiSpec::Min,
            vec![p.sigma.clone(), q.sigma.clone()],
            sp,
        )
        .ok()?;
        (w.is_valid() && decompose(&w).len() == 1).then(|| canonical_form(w.sigma(), w.sp(), &autos))
    });
    let keys: BTreeSet<(Matrix, Vec<usize>)> = found.into_iter().flatten().collect();
    let entries = par::map(exec, keys.into_iter().collect(), |(sigma, sp)| {
        let w = WeakSphericalSystem::new(a.clone(), XiSpec::Min, sigma, sp).expect("valid shape");
        entry(&w, &autos)
    });
    Ok(finish(label, entries))
}

/// Finest partition of `S` into mutually orthogonal blocks each containing whole
/// supports; returns `(block, indices of the spherical roots in it)`.
pub fn decompose_blocks(w: &WeakSphericalSystem) -> Vec<(Vec<usize>, Vec<usize>)> {
    let a = w.ambient().cartan();
    let r = a.len();
    let mut parent: Vec<usize> = (0..r).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        if p[x] != x {
            let root = find(p, p[x]);
            p[x] = root;
        }
        p[x]
    }
    let join = |p: &mut Vec<usize>, x: usize, y: usize| {
        let (u, v) = (find(p, x), find(p, y));
        p[u] = v;
    };
    for i in 0..r {
        for j in 0..r {
            if i != j && a[i][j] != 0 {
                join(&mut parent, i, j);
            }
        }
    }
    for s in w.sigma() {
        let supp = wss::support(s);
        for k in 1..supp.len() {
            join(&mut parent, supp[0], supp[k]);
        }
    }
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    for i in 0..r {
        let root = find(&mut parent, i);
        match blocks.iter_mut().find(|b| find(&mut parent, b[0]) == root) {
            Some(b) => b.push(i),
            None => blocks.push(vec![i]),
        }
    }
    blocks
        .into_iter()
        .map(|b| {
            let idx = (0..w.sigma().len())
                .filter(|&k| wss::support(&w.sigma()[k]).iter().all(|v| b.contains(v)))
                .collect();
            (b, idx)
        })
        .collect()
}

/// The components of [`decompose_blocks`] as systems on their Levi data.
pub fn decompose(w: &WeakSphericalSystem) -> Vec<WeakSphericalSystem> {
    decompose_blocks(w)
        .into_iter()
        .map(|(b, _)| w.localize_s(&b).expect("blocks are subsets of S"))
        .collect()
}

/// Oracle: `Ψ` is a base of the root system `Φ ∩ ZΨ`. Closes `Ψ` under its own
/// reflections, then checks that this exhausts `Φ ∩ ZΨ` and that every element
/// has coordinates of one sign with respect to `Ψ`.
pub fn oracle_additive_closure(subset: &[Vec<i64>], ambient: &BasedRootDatum) -> bool {
    let r = ambient.num_simple();
    if subset.is_empty() {
        return true;
    }
    if subset.iter().any(|s| !ambient.is_root(s)) || linalg::rank(subset, r) < subset.len() {
        return false;
    }
    let mut system: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut frontier = Vec::new();
    for s in subset {
        for v in [s.clone(), linalg::scale(s, -1)] {
            if system.insert(v.clone()) {
                frontier.push(v);
            }
        }
    }
    while let Some(x) = frontier.pop() {
        let xv = ambient.root_vector(&x);
        for s in subset {
            let k = ambient.pair_with_coroot(&xv, s);
            let y = linalg::sub(&x, &linalg::scale(s, k));
            if system.insert(y.clone()) {
                frontier.push(y);
            }
        }
    }
    let lattice = linalg::hnf(subset, r);
    let exhausted = ambient
        .positive_roots()
        .iter()
        .filter(|p| linalg::in_lattice(&lattice, p))
        .all(|p| system.contains(p));
    let signed = system.iter().all(|x| match linalg::solve_in_lattice(subset, x) {
        Some(c) => c.iter().all(|&v| v >= 0) || c.iter().all(|&v| v <= 0),
        None => false,
    });
    exhausted && signed
}

/// Oracle: number of decompositions `σ = γ₁ + γ₂` into strongly orthogonal
/// positive roots with `γ₁^∨ − γ₂^∨ = δ₁^∨ − δ₂^∨`, found by brute force.
pub fn oracle_assoc_uniqueness(sigma: &[i64], ambient: &BasedRootDatum) -> usize {
    let pos = ambient.positive_roots();
    let mut count = 0;
    for (i, g1) in pos.iter().enumerate() {
        for (j, g2) in pos.iter().enumerate().skip(i + 1) {
            if linalg::add(g1, g2) != sigma {
                continue;
            }
            // Strong orthogonality by brute force: no root in span{γ₁, γ₂}
            // other than ±γ₁, ±γ₂.
            let ortho = ambient.pair_with_coroot(&ambient.root_vector(g1), g2) == 0;
            let span_ok = pos.iter().all(|p| {
                p == g1 || p == g2 || linalg::rank(&[g1.clone(), g2.clone(), p.clone()], p.len()) == 3
            });
            if !(ortho && span_ok) {
                continue;
            }
            let d = linalg::sub(&ambient.positive_coroots()[i], &ambient.positive_coroots()[j]);
            let mut nz: Vec<i64> = d.iter().copied().filter(|&c| c != 0).collect();
            nz.sort_unstable();
            if nz == [-1, 1] {
                count += 1;
            }
        }
    }
    count
}

fn unit(r: usize, i: usize) -> Vec<i64> {
    let mut v = vec![0; r];
    v[i] = 1;
    v
}

fn t(series: Series, rank: usize) -> String {
    SimpleType::new(series, rank).to_string()
}

/// Ambient types for the rank one table: every simple type of rank at most
/// `bound`, plus `A1xA1` for the `D₂` row.
pub fn rank1_ambients(bound: usize) -> Vec<String> {
    let mut v = Vec::new();
    for n in 1..=bound {
        v.push(t(Series::A, n));
    }
    v.push("A1xA1".into());
    for n in 2..=bound {
        v.push(t(Series::B, n));
    }
    for n in 3..=bound {
        v.push(t(Series::C, n));
    }
    for n in 4..=bound {
        v.push(t(Series::D, n));
    }
    for n in 6..=bound.min(8) {
        v.push(t(Series::E, n));
    }
    if bound >= 4 {
        v.push("F4".into());
    }
    if bound >= 2 {
        v.push("G2".into());
    }
    v
}

/// Ambient types occurring in the rank two table with parameters at most `bound`.
pub fn rank2_ambients(bound: usize) -> Vec<String> {
    let mut v = Vec::new();
    for n in 2..=bound {
        v.push(t(Series::A, n));
    }
    for n in 2..=bound {
        v.push(t(Series::B, n));
    }
    for n in 3..=bound {
        v.push(t(Series::C, n));
    }
    for n in 4..=bound {
        v.push(t(Series::D, n));
    }
    for n in 6..=bound.min(8) {
        v.push(t(Series::E, n));
    }
    if bound >= 4 {
        v.push("F4".into());
        v.push("A2xA2".into());
        v.push("C2xC2".into());
    }
    v.push("G2".into());
    if bound >= 4 {
        v.push("G2xG2".into());
    }
    for n in 2..bound {
        v.push(format!("C{n}xA1"));
    }
    v
}

type Row = (Matrix, Vec<usize>);

fn ones(r: usize, from: usize, to: usize) -> Vec<i64> {
    (0..r).map(|i| i64::from((from..=to).contains(&(i + 1)))).collect()
}

fn vec_of(r: usize, terms: &[(usize, i64)]) -> Vec<i64> {
    let mut v = vec![0; r];
    for &(i, c) in terms {
        v[i - 1] += c;
    }
    v
}

/// `Sᵖ` (0-based) from the 1-based list of white vertices.
fn from_white(r: usize, white: &[usize]) -> Vec<usize> {
    (0..r).filter(|i| !white.contains(&(i + 1))).collect()
}

/// `1, 2, …, 2, 1` on `α_from … α_to`, the `C`-type highest short root.
fn c_root(r: usize, from: usize, to: usize) -> Vec<i64> {
    let mut v = ones(r, from, to);
    for i in from + 1..to {
        v[i - 1] = 2;
    }
    v
}

/// `2, …, 2, 1, 1` on `α_from … α_n` of `D_n`.
fn d_root(n: usize, from: usize) -> Vec<i64> {
    let mut v = vec![0; n];
    for i in from..=n - 2 {
        v[i - 1] = 2;
    }
    v[n - 2] = 1;
    v[n - 1] = 1;
    v
}

/// Transcription of the rank one table for an ambient type in its own numbering.
fn table1_native(label: &str) -> Vec<Row> {
    let spec = TypeSpec::parse(label).expect("valid label");
    if label == "A1xA1" {
        return vec![(vec![vec![1, 1]], vec![])];
    }
    let st = spec.factors[0];
    let n = st.rank;
    let all = ones(n, 1, n);
    match st.series {
        Series::A if n == 1 => vec![(vec![all], vec![])],
        Series::A => {
            let mut rows = vec![(vec![all], from_white(n, &[1, n]))];
            if n == 3 {
                rows.extend(table1_transported("D3", label));
            }
            rows
        }
        Series::B => {
            let mut rows = vec![
                (vec![all.clone()], from_white(n, &[1])),
                (vec![all], from_white(n, &[1, n])),
            ];
            if n == 3 {
                rows.push((vec![vec![1, 2, 3]], vec![0, 1]));
            }
            rows
        }
        Series::C => vec![
            (vec![c_root(n, 1, n)], from_white(n, &[2])),
            (vec![c_root(n, 1, n)], from_white(n, &[1, 2])),
        ],
        Series::D => vec![(vec![d_root(n, 1)], from_white(n, &[1]))],
        Series::F => vec![(vec![vec![1, 2, 3, 2]], vec![0, 1, 2])],
        Series::G => vec![(vec![vec![2, 1]], vec![1]), (vec![vec![1, 1]], vec![])],
        Series::E => vec![],
    }
}

/// Rows written for `from` (e.g. `D3`, `C2`) carried to the isomorphic `to`.
fn transported(rows: Vec<Row>, from: &str, to: &str) -> Vec<Row> {
    let ca = TypeSpec::parse(from).unwrap().cartan();
    let cb = TypeSpec::parse(to).unwrap().cartan();
    // pi[i] is the vertex of `to` playing the role of vertex i of `from`.
    let pi = cartan::find_isomorphism(&cb, &ca).expect("isomorphic diagrams");
    rows.into_iter()
        .map(|(sigma, sp)| {
            let s = sigma
                .iter()
                .map(|v| {
                    let mut w = vec![0; v.len()];
                    for (i, &c) in v.iter().enumerate() {
                        w[pi[i]] = c;
                    }
                    w
                })
                .collect();
            (s, sp.iter().map(|&i| pi[i]).collect())
        })
        .collect()
}

fn table1_transported(from: &str, to: &str) -> Vec<Row> {
    let rows = vec![(vec![vec![2, 1, 1]], vec![1, 2])];
    transported(rows, from, to)
}

/// Transcription of the rank two table for an ambient type in its own numbering.
fn table2_native(label: &str) -> Vec<Row> {
    let spec = TypeSpec::parse(label).expect("valid label");
    let r = spec.semisimple_rank();
    let mut rows: Vec<Row> = Vec::new();
    let mut push = |sigma: Vec<Vec<i64>>, white: &[usize]| rows.push((sigma, from_white(r, white)));
    let names: Vec<String> = spec.factors.iter().map(|f| f.to_string()).collect();
    match names.iter().map(String::as_str).collect::<Vec<_>>().as_slice() {
        ["A2", "A2"] => push(
            vec![vec_of(4, &[(1, 1), (3, 1)]), vec_of(4, &[(2, 1), (4, 1)])],
            &[1, 2, 3, 4],
        ),
        ["C2", "C2"] => push(
            vec![vec_of(4, &[(1, 1), (3, 1)]), vec_of(4, &[(2, 1), (4, 1)])],
            &[1, 2, 3, 4],
        ),
        ["G2", "G2"] => push(
            vec![vec_of(4, &[(1, 1), (3, 1)]), vec_of(4, &[(2, 1), (4, 1)])],
            &[1, 2, 3, 4],
        ),
        [c, "A1"] => {
            let n: usize = c[1..].parse().unwrap();
            let mut first = c_root(r, 1, n);
            first[n] = 0;
            push(vec![vec_of(r, &[(1, 1), (n + 1, 1)]), first], &[1, 2, n + 1]);
        }
        [single] => {
            let st: SimpleType = single.parse().unwrap();
            let n = st.rank;
            match st.series {
                Series::A => {
                    for l in 1..n {
                        push(vec![ones(n, 1, l), ones(n, l + 1, n)], &[1, l, l + 1, n]);
                    }
                    if n >= 4 {
                        push(
                            vec![vec_of(n, &[(1, 1), (n, 1)]), ones(n, 2, n - 1)],
                            &[1, 2, n - 1, n],
                        );
                    }
                    if n == 5 {
                        push(
                            vec![vec_of(5, &[(1, 1), (2, 2), (3, 1)]), vec_of(5, &[(3, 1), (4, 2), (5, 1)])],
                            &[2, 4],
                        );
                    }
                    if n == 3 {
                        rows.extend(transported(table2_native("D3"), "D3", "A3"));
                    }
                }
                Series::B => {
                    for p in 1..n {
                        push(vec![ones(n, 1, p), ones(n, p + 1, n)], &[1, p, p + 1, n]);
                        push(vec![ones(n, 1, p), ones(n, p + 1, n)], &[1, p, p + 1]);
                    }
                    if n == 3 {
                        push(vec![vec![1, 1, 0], vec![0, 1, 1]], &[1, 2, 3]);
                    }
                    if n == 4 {
                        push(vec![vec![1, 1, 1, 1], vec![0, 1, 2, 3]], &[1, 4]);
                    }
                    if n == 2 {
                        rows.extend(transported(table2_native("C2"), "C2", "B2"));
                    }
                }
                Series::C => {
                    push(vec![vec_of(n, &[(1, 1)]), c_root(n, 1, n)], &[1, 2]);
                    if n >= 3 {
                        push(vec![ones(n, 1, 2), c_root(n, 2, n)], &[1, 2, 3]);
                    }
                    if n >= 4 {
                        push(vec![vec_of(n, &[(1, 1), (2, 2), (3, 1)]), c_root(n, 3, n)], &[2, 4]);
                    }
                    for p in 1..=n.saturating_sub(2) {
                        push(vec![ones(n, 1, p), c_root(n, p + 1, n)], &[1, p, p + 1, p + 2]);
                    }
                    push(vec![ones(n, 1, n - 1), vec_of(n, &[(n, 1)])], &[1, n - 1, n]);
                    if n >= 3 {
                        push(
                            vec![vec_of(n, &[(1, 1), (n, 1)]), ones(n, 2, n - 1)],
                            &[1, 2, n - 1, n],
                        );
                    }
                }
                Series::D => {
                    for p in 1..=n.saturating_sub(3) {
                        push(vec![ones(n, 1, p), d_root(n, p + 1)], &[1, p, p + 1]);
                    }
                    push(
                        vec![ones(n, 1, n - 2), vec_of(n, &[(n - 1, 1), (n, 1)])],
                        &[1, n - 2, n - 1, n],
                    );
                    if n == 5 {
                        push(
                            vec![vec_of(5, &[(1, 1), (2, 2), (3, 1)]), vec_of(5, &[(3, 1), (4, 1), (5, 1)])],
                            &[2, 4, 5],
                        );
                    }
                    let mut g1 = ones(n, 1, n - 1);
                    let mut g2 = ones(n, 1, n - 2);
                    g2[n - 1] = 1;
                    if n == 3 {
                        g1 = vec![1, 1, 0];
                        g2 = vec![1, 0, 1];
                    }
                    push(vec![g1, g2], &[1, n - 1, n]);
                }
                Series::E if n == 6 => {
                    push(
                        vec![
                            vec_of(6, &[(1, 2), (3, 2), (4, 2), (2, 1), (5, 1)]),
                            vec_of(6, &[(6, 2), (5, 2), (4, 2), (3, 1), (2, 1)]),
                        ],
                        &[1, 6],
                    );
                    push(
                        vec![
                            vec_of(6, &[(1, 1), (3, 1), (4, 1), (5, 1), (6, 1)]),
                            vec_of(6, &[(2, 2), (4, 2), (3, 1), (5, 1)]),
                        ],
                        &[1, 2, 6],
                    );
                }
                Series::F => {
                    push(vec![vec![1, 1, 0, 0], vec![0, 0, 1, 1]], &[1, 2, 3, 4]);
                    push(vec![vec![1, 1, 1, 0], vec![0, 0, 0, 1]], &[1, 3, 4]);
                    push(vec![vec![1, 1, 1, 0], vec![0, 1, 2, 1]], &[1, 3, 4]);
                    push(vec![vec![1, 0, 0, 1], vec![0, 1, 1, 0]], &[1, 2, 3, 4]);
                    push(vec![vec![1, 2, 3, 0], vec![0, 0, 0, 1]], &[3, 4]);
                }
                Series::G => {
                    push(vec![vec![1, 0], vec![0, 1]], &[1, 2]);
                    push(vec![vec![1, 0], vec![1, 1]], &[1, 2]);
                }
                Series::E => {}
            }
        }
        _ => {}
    }
    rows
}

fn canonical_rows(label: &str, rows: Vec<Row>) -> BTreeSet<Row> {
    let a = TypeSpec::parse(label).unwrap().cartan();
    let autos = cartan::automorphisms(&a);
    rows.into_iter()
        .map(|(s, p)| canonical_form(&s, &p, &autos))
        .collect()
}

/// The rank one table instantiated on `label`, canonicalized.
pub fn table1(label: &str) -> BTreeSet<Row> {
    canonical_rows(label, table1_native(label))
}

/// The rank two table instantiated on `label`, canonicalized.
pub fn table2(label: &str) -> BTreeSet<Row> {
    canonical_rows(label, table2_native(label))
}

/// Golden-file rendering: one line per system,
/// `ambient | σ; τ | Sᵖ` with `Sᵖ` 1-based and comma separated, `-` if empty.
pub fn render_rows(label: &str, rows: &BTreeSet<Row>) -> String {
    let mut s = String::new();
    for (sigma, sp) in rows {
        let roots: Vec<String> = sigma.iter().map(|v| wss::format_root(v)).collect();
        let sp: Vec<String> = sp.iter().map(|i| (i + 1).to_string()).collect();
        let sp = if sp.is_empty() { "-".into() } else { sp.join(",") };
        let _ = writeln!(s, "{label} | {} | {sp}", roots.join("; "));
    }
    s
}

pub fn golden(rank: u8, bound: usize) -> String {
    let (ambients, table): (Vec<String>, fn(&str) -> BTreeSet<Row>) = match rank {
        1 => (rank1_ambients(bound), table1),
        _ => (rank2_ambients(bound), table2),
    };
    let mut out = format!(
        "# weak spherical systems of rank {rank}, ambient rank <= {bound}\n# ambient | spherical roots | S^p\n"
    );
    for a in ambients {
        out.push_str(&render_rows(&a, &table(&a)));
    }
    out
}

pub fn enumerate_all(rank: u8, bound: usize, exec: Execution) -> Result<String, ClassifyError> {
    let ambients = match rank {
        1 => rank1_ambients(bound),
        _ => rank2_ambients(bound),
    };
    let results = par::map(exec, ambients, |a| {
        let res = match rank {
            1 => enumerate_rank1(&a, bound),
            _ => enumerate_rank2(&a, bound, Execution::Sequential),
        }?;
        Ok::<_, ClassifyError>(render_rows(&a, &res.keys()))
    });
    let mut out = format!(
        "# weak spherical systems of rank {rank}, ambient rank <= {bound}\n# ambient | spherical roots | S^p\n"
    );
    for r in results {
        out.push_str(&r?);
    }
    Ok(out)
}

/// Shipped golden files.
pub const RANK1_GOLDEN: &str = include_str!("../data/rank1.txt");
pub const RANK2_GOLDEN: &str = include_str!("../data/rank2.txt");

/// The property checks run on every enumerated system, with `Ξ = Ξ_max` where
/// the statement calls for it. Returns the names of failed checks.
pub fn property_failures(w: &WeakSphericalSystem) -> Vec<String> {
    let mut bad = Vec::new();
    let mut check = |ok: bool, name: &str| {
        if !ok {
            bad.push(name.to_string());
        }
    };
    check(w.obtuse_pairs(None), "obtuse");
    check(w.sigma_independent(), "independent");
    let Ok(an) = Analysis::new(w) else {
        bad.push("analysis".into());
        return bad;
    };
    check(an.dual_group_datum().is_ok(), "basis criterion");
    let hat = an.sigma_hat();
    let dual = w.ambient().dual();
    let closed = crate::rootdata::is_additively_closed(&hat, &dual).unwrap_or(false);
    check(closed, "additively closed");
    check(closed == oracle_additive_closure(&hat, &dual), "closure oracle");
    check(
        an.adapted_folding().map(|f| f.matches_dual_group).unwrap_or(false),
        "folding",
    );
    let a = w.ambient();
    for x in an.associated() {
        for (i, (g, gc)) in x.gammas.iter().zip(&x.wedge).enumerate() {
            for &d in w.sp() {
                let mut dc = vec![0; a.num_simple()];
                dc[d] = 1;
                let closed = gc == &dc
                    || !(dual.is_root(&linalg::add(gc, &dc)) || dual.is_root(&linalg::sub(gc, &dc)));
                if closed {
                    continue;
                }
                let Some((d1, d2)) = x.delta.filter(|_| !x.pattern.is_root) else {
                    check(false, "addclosed exception outside a non-root pattern");
                    continue;
                };
                let Some(j) = [d1, d2].iter().position(|&e| e == d) else {
                    check(false, "addclosed exception away from δ");
                    continue;
                };
                let v = a.pair_with_coroot(&a.root_vector(g), &unit(a.num_simple(), d));
                check(v == if (i + j) % 2 == 0 { 1 } else { -1 }, "pairing sign");
                let mut sum = vec![0; a.num_simple()];
                sum[d1] += 1;
                sum[d2] += 1;
                check(a.pair_with_coroot(&a.root_vector(&sum), g) == 0, "δ₁+δ₂ ⊥ γ");
            }
        }
    }
    let max = WeakSphericalSystem::new(a.clone(), XiSpec::Max, w.sigma().clone(), w.sp().to_vec()).ok();
    check(max.as_ref().is_some_and(|m| m.rho_membership_check()), "rho");
    let lifted = max
        .and_then(|m| Analysis::new(&m).ok().map(|an| an.weyl_lift().map(|l| l.relations_hold())));
    check(matches!(lifted, Some(Ok(true))), "coxeter");
    bad
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank1_small() {
        let keys = enumerate_rank1("A1", 8).unwrap().keys();
        assert_eq!(keys.into_iter().collect::<Vec<_>>(), vec![(vec![vec![1]], vec![])]);
        for a in ["B3", "G2", "A3", "A1xA1", "C4", "F4"] {
            assert_eq!(enumerate_rank1(a, 8).unwrap().keys(), table1(a), "{a}");
        }
    }

    #[test]
    fn rank2_small() {
        let g2 = enumerate_rank2("G2", 8, Execution::Sequential).unwrap();
        assert_eq!(g2.entries.len(), 2);
        for a in ["A2xA2", "B3", "C3", "A3", "B2"] {
            assert_eq!(enumerate_rank2(a, 8, Execution::Parallel).unwrap().keys(), table2(a), "{a}");
        }
    }

    #[test]
    fn rank_bound() {
        assert_eq!(
            enumerate_rank1("A9", 8).unwrap_err(),
            ClassifyError::RankBoundExceeded(9, 8)
        );
    }

    #[test]
    fn decomposition() {
        let a = BasedRootDatum::build("A1xA1", &LatticeFlavor::SimplyConnected).unwrap();
        let w = WeakSphericalSystem::new(a.clone(), XiSpec::Min, vec![vec![1, 0], vec![0, 1]], vec![])
            .unwrap();
        assert_eq!(decompose(&w).len(), 2);
        let d2 = WeakSphericalSystem::new(a.clone(), XiSpec::Min, vec![vec![1, 1]], vec![]).unwrap();
        assert_eq!(decompose(&d2).len(), 1);
        let empty = WeakSphericalSystem::new(a, XiSpec::Min, vec![], vec![]).unwrap();
        assert_eq!(decompose(&empty).len(), 2);
    }

    #[test]
    fn oracles() {
        let b3 = BasedRootDatum::build("B3", &LatticeFlavor::Adjoint).unwrap();
        assert_eq!(oracle_assoc_uniqueness(&[1, 2, 3], &b3), 1);
        assert_eq!(oracle_assoc_uniqueness(&[1, 1, 1], &b3), 0);
        let d4 = BasedRootDatum::build("D4", &LatticeFlavor::Adjoint).unwrap();
        assert_eq!(oracle_assoc_uniqueness(&[2, 2, 1, 1], &d4), 1);
        assert!(oracle_additive_closure(&[vec![1, 0, 0], vec![0, 0, 1]], &b3));
        assert!(oracle_additive_closure(&[vec![1, 0, 0], vec![0, 1, 1]], &b3));
        assert!(!oracle_additive_closure(&[vec![0, 1, 0], vec![1, 1, 0]], &b3));
        let g2 = BasedRootDatum::build("G2", &LatticeFlavor::Adjoint).unwrap();
        assert!(!oracle_additive_closure(&[vec![1, 0], vec![1, 1]], &g2));
    }
}
