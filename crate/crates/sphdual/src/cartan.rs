//! Cartan matrices of finite type: canonical matrices in Bourbaki numbering,
//! type labels, diagram isomorphisms and recognition.
//!
//! Convention: `a[i][j] = ⟨α_i | α_j^∨⟩`.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::RootDataError;
use crate::linalg::{self, Matrix};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Series {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Series {
    fn letter(self) -> char {
        match self {
            Series::A => 'A',
            Series::B => 'B',
            Series::C => 'C',
            Series::D => 'D',
            Series::E => 'E',
            Series::F => 'F',
            Series::G => 'G',
        }
    }

    fn from_letter(c: char) -> Option<Self> {
        Some(match c.to_ascii_uppercase() {
            'A' => Series::A,
            'B' => Series::B,
            'C' => Series::C,
            'D' => Series::D,
            'E' => Series::E,
            'F' => Series::F,
            'G' => Series::G,
            _ => return None,
        })
    }
}

/// A connected Dynkin type such as `B3` or `E6`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SimpleType {
    pub series: Series,
    pub rank: usize,
}

impl SimpleType {
    pub const fn new(series: Series, rank: usize) -> Self {
        Self { series, rank }
    }

    /// Whether this is a canonical label (B2 not C2, no D2/D3, ...).
    pub fn is_canonical(self) -> bool {
        let n = self.rank;
        match self.series {
            Series::A => n >= 1,
            Series::B => n >= 2,
            Series::C => n >= 3,
            Series::D => n >= 4,
            Series::E => (6..=8).contains(&n),
            Series::F => n == 4,
            Series::G => n == 2,
        }
    }

    /// Whether a Cartan matrix in Bourbaki numbering exists for this label.
    /// Besides canonical labels this admits C2 and D3 (used by patterns).
    pub fn has_cartan(self) -> bool {
        self.is_canonical()
            || (self.series == Series::C && self.rank == 2)
            || (self.series == Series::D && self.rank == 3)
    }

    pub fn cartan(self) -> Matrix {
        cartan_matrix(self)
    }

    /// Number of positive roots.
    pub fn positive_root_count(self) -> usize {
        let n = self.rank;
        match (self.series, n) {
            (Series::A, _) => n * (n + 1) / 2,
            (Series::B | Series::C, _) => n * n,
            (Series::D, _) => n * (n - 1),
            (Series::E, 6) => 36,
            (Series::E, 7) => 63,
            (Series::E, 8) => 120,
            (Series::F, _) => 24,
            (Series::G, _) => 6,
            _ => unreachable!("invalid type label"),
        }
    }

    /// Lie algebra name in the notation of the dual-group tables.
    pub fn lie_algebra(self) -> String {
        let n = self.rank;
        match self.series {
            Series::A => format!("sl({})", n + 1),
            Series::B => format!("so({})", 2 * n + 1),
            Series::C => format!("sp({})", 2 * n),
            Series::D => format!("so({})", 2 * n),
            _ => self.to_string(),
        }
    }
}

impl fmt::Display for SimpleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.series.letter(), self.rank)
    }
}

impl FromStr for SimpleType {
    type Err = RootDataError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let mut chars = s.chars();
        let series = chars
            .next()
            .and_then(Series::from_letter)
            .ok_or_else(|| RootDataError::UnknownType(s.to_string()))?;
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| RootDataError::UnknownType(s.to_string()))?;
        let t = SimpleType::new(series, rank);
        if !t.has_cartan() {
            return Err(RootDataError::UnknownType(s.to_string()));
        }
        Ok(t)
    }
}

fn cartan_matrix(t: SimpleType) -> Matrix {
    let n = t.rank;
    let mut a = linalg::scale_identity(n, 2);
    let mut link = |i: usize, j: usize, aij: i64, aji: i64| {
        a[i][j] = aij;
        a[j][i] = aji;
    };
    match t.series {
        Series::A => (0..n.saturating_sub(1)).for_each(|i| link(i, i + 1, -1, -1)),
        Series::B => {
            (0..n - 2).for_each(|i| link(i, i + 1, -1, -1));
            link(n - 2, n - 1, -2, -1);
        }
        Series::C => {
            (0..n - 2).for_each(|i| link(i, i + 1, -1, -1));
            link(n - 2, n - 1, -1, -2);
        }
        Series::D => {
            (0..n - 2).for_each(|i| link(i, i + 1, -1, -1));
            link(n - 3, n - 1, -1, -1);
        }
        Series::E => {
            link(0, 2, -1, -1);
            link(1, 3, -1, -1);
            (2..n - 1).for_each(|i| link(i, i + 1, -1, -1));
        }
        Series::F => {
            link(0, 1, -1, -1);
            link(1, 2, -2, -1);
            link(2, 3, -1, -1);
        }
        Series::G => link(0, 1, -1, -3),
    }
    a
}

/// Semisimple type (sorted canonical labels) plus central torus rank.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct CartanType {
    pub components: Vec<SimpleType>,
    pub torus_rank: usize,
}

impl CartanType {
    pub fn new(mut components: Vec<SimpleType>, torus_rank: usize) -> Self {
        components.sort();
        Self {
            components,
            torus_rank,
        }
    }

    pub fn torus(rank: usize) -> Self {
        Self::new(Vec::new(), rank)
    }

    pub fn semisimple_rank(&self) -> usize {
        self.components.iter().map(|c| c.rank).sum()
    }

    pub fn rank(&self) -> usize {
        self.semisimple_rank() + self.torus_rank
    }

    /// Rendering in Lie algebra notation, e.g. `sp(6)+t^1`.
    pub fn lie_algebra(&self) -> String {
        let mut parts: Vec<String> = self.components.iter().map(|c| c.lie_algebra()).collect();
        if self.torus_rank > 0 {
            parts.push(format!("t^{}", self.torus_rank));
        }
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join("+")
        }
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self.components.iter().map(ToString::to_string).collect();
        if self.torus_rank > 0 {
            parts.push(format!("t^{}", self.torus_rank));
        }
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join("+"))
        }
    }
}

impl FromStr for CartanType {
    type Err = RootDataError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s == "0" {
            return Ok(CartanType::default());
        }
        let mut comps = Vec::new();
        let mut torus = 0;
        for part in s.split('+') {
            let part = part.trim();
            if let Some(k) = part.strip_prefix("t^") {
                torus += k
                    .parse::<usize>()
                    .map_err(|_| RootDataError::UnknownType(s.to_string()))?;
            } else {
                let t: SimpleType = part.parse()?;
                comps.push(canonical_label(t));
            }
        }
        Ok(CartanType::new(comps, torus))
    }
}

/// Maps the non-canonical aliases C2 and D3 to B2 and A3.
pub fn canonical_label(t: SimpleType) -> SimpleType {
    match (t.series, t.rank) {
        (Series::C, 2) => SimpleType::new(Series::B, 2),
        (Series::D, 3) => SimpleType::new(Series::A, 3),
        _ => t,
    }
}

/// All bijections `π` with `target[π(i)][π(j)] == pattern[i][j]`.
pub fn isomorphisms(target: &[Vec<i64>], pattern: &[Vec<i64>]) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if target.len() != pattern.len() {
        return out;
    }
    let order = search_order(pattern);
    let n = pattern.len();
    let mut assign = vec![usize::MAX; n];
    let mut used = vec![false; n];
    extend(target, pattern, &order, 0, &mut assign, &mut used, &mut out, usize::MAX);
    out
}

/// First isomorphism found, if any.
pub fn find_isomorphism(target: &[Vec<i64>], pattern: &[Vec<i64>]) -> Option<Vec<usize>> {
    if target.len() != pattern.len() {
        return None;
    }
    let order = search_order(pattern);
    let n = pattern.len();
    let mut assign = vec![usize::MAX; n];
    let mut used = vec![false; n];
    let mut out = Vec::new();
    extend(target, pattern, &order, 0, &mut assign, &mut used, &mut out, 1);
    out.pop()
}

/// Diagram automorphisms of a Cartan matrix, as permutations of the index set.
pub fn automorphisms(a: &[Vec<i64>]) -> Vec<Vec<usize>> {
    isomorphisms(a, a)
}

fn search_order(pattern: &[Vec<i64>]) -> Vec<usize> {
    let n = pattern.len();
    let mut order = Vec::with_capacity(n);
    let mut seen = vec![false; n];
    for start in 0..n {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut queue = std::collections::VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for w in 0..n {
                if !seen[w] && pattern[v][w] != 0 {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
    }
    order
}

#[allow(clippy::too_many_arguments)]
fn extend(
    target: &[Vec<i64>],
    pattern: &[Vec<i64>],
    order: &[usize],
    depth: usize,
    assign: &mut Vec<usize>,
    used: &mut Vec<bool>,
    out: &mut Vec<Vec<usize>>,
    limit: usize,
) {
    if out.len() >= limit {
        return;
    }
    if depth == order.len() {
        out.push(assign.clone());
        return;
    }
    let p = order[depth];
    for v in 0..target.len() {
        if used[v] || target[v][v] != pattern[p][p] {
            continue;
        }
        let consistent = order[..depth].iter().all(|&q| {
            let w = assign[q];
            target[v][w] == pattern[p][q] && target[w][v] == pattern[q][p]
        });
        if !consistent {
            continue;
        }
        assign[p] = v;
        used[v] = true;
        extend(target, pattern, order, depth + 1, assign, used, out, limit);
        used[v] = false;
        assign[p] = usize::MAX;
        if out.len() >= limit {
            return;
        }
    }
}

/// Connected components of the Dynkin diagram, each sorted.
pub fn components(a: &[Vec<i64>]) -> Vec<Vec<usize>> {
    let n = a.len();
    let mut comp = vec![usize::MAX; n];
    let mut out: Vec<Vec<usize>> = Vec::new();
    for s in 0..n {
        if comp[s] != usize::MAX {
            continue;
        }
        let id = out.len();
        let mut members = vec![s];
        comp[s] = id;
        let mut i = 0;
        while i < members.len() {
            let v = members[i];
            for w in 0..n {
                if comp[w] == usize::MAX && (a[v][w] != 0 || a[w][v] != 0) {
                    comp[w] = id;
                    members.push(w);
                }
            }
            i += 1;
        }
        members.sort_unstable();
        out.push(members);
    }
    out
}

pub fn submatrix(a: &[Vec<i64>], idx: &[usize]) -> Matrix {
    idx.iter()
        .map(|&i| idx.iter().map(|&j| a[i][j]).collect())
        .collect()
}

/// Checks the generalized Cartan matrix axioms.
pub fn check_generalized(a: &[Vec<i64>]) -> Result<(), RootDataError> {
    let n = a.len();
    for i in 0..n {
        if a[i].len() != n {
            return Err(RootDataError::NotCrystallographic("matrix is not square".into()));
        }
        if a[i][i] != 2 {
            return Err(RootDataError::NotCrystallographic(format!(
                "diagonal entry {} is {}",
                i + 1,
                a[i][i]
            )));
        }
        for j in 0..n {
            if i != j && (a[i][j] > 0 || (a[i][j] == 0) != (a[j][i] == 0)) {
                return Err(RootDataError::NotCrystallographic(format!(
                    "entries ({},{})={} and ({},{})={}",
                    i + 1,
                    j + 1,
                    a[i][j],
                    j + 1,
                    i + 1,
                    a[j][i]
                )));
            }
        }
    }
    Ok(())
}

/// Minimal positive integer symmetrizer `d` with `a[i][j]·d[j] = a[j][i]·d[i]`,
/// normalized per connected component.
pub fn symmetrizer(a: &[Vec<i64>]) -> Result<Vec<i64>, RootDataError> {
    let n = a.len();
    let mut num = vec![0i64; n];
    let mut den = vec![0i64; n];
    for comp in components(a) {
        let root = comp[0];
        num[root] = 1;
        den[root] = 1;
        let mut stack = vec![root];
        while let Some(i) = stack.pop() {
            for &j in &comp {
                if i == j || a[i][j] == 0 {
                    continue;
                }
                // d_j = a[j][i] d_i / a[i][j]
                let (p, q) = reduce(a[j][i] * num[i], a[i][j] * den[i]);
                if den[j] == 0 {
                    num[j] = p;
                    den[j] = q;
                    stack.push(j);
                } else if num[j] * q != p * den[j] {
                    return Err(RootDataError::NotFiniteType(
                        "Cartan matrix is not symmetrizable".into(),
                    ));
                }
            }
        }
        let l = comp.iter().fold(1i64, |l, &i| l.lcm(&den[i]));
        let mut ints: Vec<i64> = comp.iter().map(|&i| num[i] * (l / den[i])).collect();
        let g = ints.iter().fold(0i64, |g, x| g.gcd(x));
        ints.iter_mut().for_each(|x| *x /= g);
        for (&i, v) in comp.iter().zip(ints) {
            num[i] = v;
        }
    }
    Ok(num)
}

fn reduce(p: i64, q: i64) -> (i64, i64) {
    let g = p.gcd(&q);
    let (p, q) = (p / g, q / g);
    if q < 0 {
        (-p, -q)
    } else {
        (p, q)
    }
}

/// Symmetrized matrix `b[i][j] = a[i][j]·d[j]`.
pub fn symmetrized(a: &[Vec<i64>], d: &[i64]) -> Matrix {
    a.iter()
        .map(|row| row.iter().zip(d).map(|(x, y)| x * y).collect())
        .collect()
}

/// A recognized connected component: label and Bourbaki order
/// (`order[k]` is the vertex playing the role of `α_{k+1}`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    pub label: SimpleType,
    pub order: Vec<usize>,
}

fn candidates(rank: usize) -> Vec<SimpleType> {
    let mut c = vec![SimpleType::new(Series::A, rank)];
    for (s, ok) in [
        (Series::B, rank >= 2),
        (Series::C, rank >= 3),
        (Series::D, rank >= 4),
        (Series::E, (6..=8).contains(&rank)),
        (Series::F, rank == 4),
        (Series::G, rank == 2),
    ] {
        if ok {
            c.push(SimpleType::new(s, rank));
        }
    }
    c
}

/// Identifies every connected component of a Cartan matrix of finite type.
pub fn identify(a: &[Vec<i64>]) -> Result<Vec<Component>, RootDataError> {
    check_generalized(a)?;
    let d = symmetrizer(a)?;
    if !linalg::is_positive_definite(&symmetrized(a, &d)) {
        return Err(RootDataError::NotFiniteType(
            "symmetrization is not positive definite".into(),
        ));
    }
    components(a)
        .into_iter()
        .map(|comp| {
            let sub = submatrix(a, &comp);
            candidates(comp.len())
                .into_iter()
                .find_map(|label| {
                    find_isomorphism(&sub, &label.cartan()).map(|pi| Component {
                        label,
                        order: pi.into_iter().map(|k| comp[k]).collect(),
                    })
                })
                .ok_or_else(|| {
                    RootDataError::NotFiniteType(format!(
                        "component {:?} matches no finite type",
                        comp
                    ))
                })
        })
        .collect()
}

pub fn cartan_type(a: &[Vec<i64>], torus_rank: usize) -> Result<CartanType, RootDataError> {
    let comps = identify(a)?;
    Ok(CartanType::new(
        comps.into_iter().map(|c| c.label).collect(),
        torus_rank,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display() {
        let t: CartanType = "E6+t^2".parse().unwrap();
        assert_eq!(t.to_string(), "E6+t^2");
        let t: CartanType = "C2+A1+D3".parse().unwrap();
        assert_eq!(t.to_string(), "A1+A3+B2");
        assert_eq!(CartanType::torus(0).to_string(), "0");
        assert!("Q3".parse::<CartanType>().is_err());
        assert!("D2".parse::<SimpleType>().is_err());
    }

    #[test]
    fn g2_convention() {
        assert_eq!(SimpleType::new(Series::G, 2).cartan(), vec![vec![2, -1], vec![-3, 2]]);
        assert_eq!(symmetrizer(&SimpleType::new(Series::G, 2).cartan()).unwrap(), vec![1, 3]);
        assert_eq!(symmetrizer(&SimpleType::new(Series::B, 3).cartan()).unwrap(), vec![2, 2, 1]);
    }

    #[test]
    fn recognizes_every_label() {
        for series in [Series::A, Series::B, Series::C, Series::D] {
            for n in 1..=8 {
                let t = SimpleType::new(series, n);
                if t.is_canonical() {
                    let got = identify(&t.cartan()).unwrap();
                    assert_eq!(got.len(), 1);
                    assert_eq!(got[0].label, t);
                }
            }
        }
        let d3 = SimpleType::new(Series::D, 3).cartan();
        assert_eq!(identify(&d3).unwrap()[0].label, SimpleType::new(Series::A, 3));
    }

    #[test]
    fn rejects_affine() {
        let a = vec![vec![2, -2], vec![-2, 2]];
        assert!(matches!(identify(&a), Err(RootDataError::NotFiniteType(_))));
        let a = vec![vec![2, 1], vec![1, 2]];
        assert!(matches!(identify(&a), Err(RootDataError::NotCrystallographic(_))));
    }

    #[test]
    fn automorphism_counts() {
        let count = |s, n| automorphisms(&SimpleType::new(s, n).cartan()).len();
        assert_eq!(count(Series::A, 5), 2);
        assert_eq!(count(Series::D, 4), 6);
        assert_eq!(count(Series::D, 5), 2);
        assert_eq!(count(Series::E, 6), 2);
        assert_eq!(count(Series::E, 7), 1);
        assert_eq!(count(Series::B, 3), 1);
    }
}
