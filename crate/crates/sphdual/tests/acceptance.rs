//! One line per acceptance criterion. Runs without the libtest harness so the
//! lines are always printed; exits nonzero if any criterion fails.

use std::collections::BTreeSet;
use std::time::Instant;

use sphdual::cartan::{self, SimpleType};
use sphdual::classify::{self, Entry};
use sphdual::dualize::{self, Analysis};
use sphdual::folding::{self, FactorKind, Folding};
use sphdual::input;
use sphdual::lgroup::{self, ConstraintOptions, OuterAction};
use sphdual::linalg::{self, Matrix};
use sphdual::par::Execution;
use sphdual::rootdata::TypeSpec;
use sphdual::wss::{PatternKind, XiSpec};
use sphdual::{BasedRootDatum, LatticeFlavor, Series, WeakSphericalSystem};

const BOUND: usize = 8;

type Outcome = Result<String, String>;

fn sc(label: &str) -> BasedRootDatum {
    BasedRootDatum::build(label, &LatticeFlavor::SimplyConnected).unwrap()
}

fn from_cartan(a: &Matrix) -> BasedRootDatum {
    BasedRootDatum::from_simple(a.len(), a.clone(), linalg::identity(a.len())).unwrap()
}

fn block_diag(a: &Matrix, b: &Matrix) -> Matrix {
    let (n, m) = (a.len(), b.len());
    let mut c = vec![vec![0; n + m]; n + m];
    for i in 0..n {
        c[i][..n].copy_from_slice(&a[i]);
    }
    for i in 0..m {
        c[n + i][n..].copy_from_slice(&b[i]);
    }
    c
}

fn table_check(rank: u8, golden: &str) -> Outcome {
    let t0 = Instant::now();
    let produced = classify::enumerate_all(rank, BOUND, Execution::Parallel).map_err(|e| e.to_string())?;
    let elapsed = t0.elapsed();
    if produced != classify::golden(rank, BOUND) {
        return Err("enumeration differs from the transcribed table".into());
    }
    if produced != golden {
        return Err("enumeration differs from the shipped golden file".into());
    }
    let rows = produced.lines().filter(|l| !l.starts_with('#')).count();
    Ok(format!("{rows} systems, golden file equal, {:.2} s", elapsed.as_secs_f64()))
}

fn criterion_1() -> Outcome {
    table_check(1, classify::RANK1_GOLDEN)
}

fn criterion_2() -> Outcome {
    let out = table_check(2, classify::RANK2_GOLDEN)?;
    for (a, n) in [("G2", 2), ("F4", 5)] {
        let got = classify::enumerate_rank2(a, BOUND, Execution::Sequential).unwrap().entries.len();
        if got != n {
            return Err(format!("{a}: {got} systems, expected {n}"));
        }
    }
    Ok(out)
}

/// `(ambient, σ₁, σ₂, Sᵖ, γ₁^∨, γ₂^∨, ε)` as printed, coroots in simple-coroot
/// coordinates.
type Starred = (String, Vec<i64>, Vec<i64>, Vec<usize>, Vec<i64>, Vec<i64>, Vec<i64>);

fn starred_rows() -> Vec<Starred> {
    let mut rows: Vec<Starred> = vec![
        (
            "B4".into(),
            vec![1, 1, 1, 1],
            vec![0, 1, 2, 3],
            vec![1, 2],
            vec![2, 2, 2, 1],
            vec![0, 1, 1, 1],
            vec![2, 1, 1, 0],
        ),
        (
            "B4".into(),
            vec![1, 1, 1, 1],
            vec![0, 1, 2, 3],
            vec![1, 2],
            vec![2, 2, 2, 1],
            vec![0, 0, 2, 1],
            vec![2, 2, 0, 0],
        ),
        (
            "G2".into(),
            vec![1, 1],
            vec![1, 0],
            vec![],
            vec![1, 3],
            vec![1, 0],
            vec![0, 3],
        ),
    ];
    for n in 2..=BOUND {
        let mut long = vec![2; n];
        long[0] = 1;
        long[n - 1] = 1;
        let mut coroot = vec![2; n];
        coroot[0] = 1;
        let mut eps = vec![2; n];
        eps[0] = 0;
        let mut a1 = vec![0; n];
        a1[0] = 1;
        rows.push((format!("C{n}"), long.clone(), a1.clone(), (2..n).collect(), coroot.clone(), a1.clone(), eps.clone()));
        if n < BOUND {
            let pad = |v: &Vec<i64>, last: i64| {
                let mut w = v.clone();
                w.push(last);
                w
            };
            rows.push((
                format!("C{n}xA1"),
                pad(&long, 0),
                pad(&a1, 1),
                (2..n).collect(),
                pad(&coroot, 0),
                pad(&a1, 0),
                pad(&eps, 0),
            ));
        }
    }
    rows
}

fn criterion_3() -> Outcome {
    let rows = starred_rows();
    for (label, s1, s2, sp, g1, g2, eps) in &rows {
        let w = WeakSphericalSystem::new(sc(label), XiSpec::Min, vec![s1.clone(), s2.clone()], sp.clone())
            .map_err(|e| e.to_string())?;
        let an = Analysis::new(&w).map_err(|e| format!("{label}: {e}"))?;
        let dual = w.ambient().dual();
        let all = an.epsilons();
        if all.iter().any(|e| e.is_positive_coroot) {
            return Err(format!("{label}: some ε is a positive coroot"));
        }
        let hat: Vec<Vec<i64>> = an.sigma_hat();
        let printed = linalg::sub(g1, g2);
        if &printed != eps || !hat.contains(g1) || !hat.contains(g2) {
            return Err(format!("{label}: printed ε {eps:?} not reproduced"));
        }
        if dual.is_positive_root(eps) {
            return Err(format!("{label}: ε {eps:?} is a positive coroot"));
        }
    }
    Ok(format!("{} instantiations of the five starred rows, no ε in (Φ^∨)⁺", rows.len()))
}

/// Every diagram with at most `max` vertices, as product labels.
fn diagrams(max: usize) -> Vec<String> {
    let mut simple = Vec::new();
    for n in 1..=max {
        simple.push(SimpleType::new(Series::A, n));
    }
    for n in 2..=max {
        simple.push(SimpleType::new(Series::B, n));
    }
    for n in 3..=max {
        simple.push(SimpleType::new(Series::C, n));
    }
    for n in 4..=max {
        simple.push(SimpleType::new(Series::D, n));
    }
    for t in ["E6", "F4", "G2"] {
        let t: SimpleType = t.parse().unwrap();
        if t.rank <= max {
            simple.push(t);
        }
    }
    fn rec(simple: &[SimpleType], from: usize, left: usize, cur: &mut Vec<SimpleType>, out: &mut Vec<String>) {
        if !cur.is_empty() {
            out.push(cur.iter().map(ToString::to_string).collect::<Vec<_>>().join("x"));
        }
        for i in from..simple.len() {
            if simple[i].rank <= left {
                cur.push(simple[i]);
                rec(simple, i, left - simple[i].rank, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(&simple, 0, max, &mut Vec::new(), &mut out);
    out
}

fn criterion_4() -> Outcome {
    let b3 = sc("B3");
    if !folding::check_folding(&b3, &[2, 1, 0]).unwrap().is_empty() {
        return Err("B3 with α1 ↔ α3 rejected".into());
    }
    let expected = |k: FactorKind, src: SimpleType| -> Option<SimpleType> {
        let n = src.rank;
        Some(match (k, src.series) {
            (FactorKind::AOdd, Series::A) if n % 2 == 1 => SimpleType::new(Series::C, n.div_ceil(2)),
            (FactorKind::DSeries, Series::D) => SimpleType::new(Series::B, n - 1),
            (FactorKind::E6Case, Series::E) if n == 6 => SimpleType::new(Series::F, 4),
            (FactorKind::B3Case, Series::B) if n == 3 => SimpleType::new(Series::G, 2),
            (FactorKind::SwappedPair | FactorKind::TrivialComponent, _) => src,
            _ => return None,
        })
    };
    let (mut accepted, mut rejected) = (0usize, 0usize);
    let mut kinds = BTreeSet::new();
    for label in diagrams(6) {
        let d = sc(&label);
        let a = d.cartan().clone();
        let autos = cartan::automorphisms(&a);
        for s in folding::involutions(a.len()) {
            let violations = folding::check_folding(&d, &s).map_err(|e| e.to_string())?;
            let is_auto = autos.contains(&s);
            // Automorphisms always satisfy the second condition; flips of
            // A_{2n} fail the first one.
            let second = violations.iter().any(|v| matches!(v, folding::Violation::Compatibility { .. }));
            if is_auto && second {
                return Err(format!("{label}: automorphism {s:?} fails condition 2"));
            }
            if !violations.is_empty() {
                rejected += 1;
                continue;
            }
            accepted += 1;
            let f = Folding::new(d.clone(), s.clone()).map_err(|e| e.to_string())?;
            let factors = f.classify().map_err(|e| format!("{label} {s:?}: {e}"))?;
            let mut targets = Vec::new();
            for fac in &factors {
                let sub = cartan::submatrix(&a, &fac.support);
                let local: Vec<usize> = fac
                    .support
                    .iter()
                    .map(|&i| fac.support.iter().position(|&j| j == s[i]).unwrap())
                    .collect();
                if !folding::check_folding(&from_cartan(&sub), &local).unwrap().is_empty() {
                    return Err(format!("{label} {s:?}: factor {:?} does not refold", fac.kind));
                }
                let restricted_auto = cartan::automorphisms(&sub).contains(&local);
                if !restricted_auto && fac.kind != FactorKind::B3Case {
                    return Err(format!("{label} {s:?}: non-automorphism factor {:?}", fac.kind));
                }
                if expected(fac.kind, fac.source).map(cartan::canonical_label) != Some(cartan::canonical_label(fac.target)) {
                    return Err(format!("{label} {s:?}: {:?} {} -> {}", fac.kind, fac.source, fac.target));
                }
                kinds.insert(fac.kind);
                targets.push(cartan::canonical_label(fac.target));
            }
            let folded = f.fold_quotient().map_err(|e| e.to_string())?.cartan_type();
            let mut got: Vec<SimpleType> = folded.components.clone();
            got.sort();
            targets.sort();
            if got != targets {
                return Err(format!("{label} {s:?}: folded {folded}, factors {targets:?}"));
            }
        }
    }
    for k in [FactorKind::AOdd, FactorKind::DSeries, FactorKind::E6Case, FactorKind::B3Case] {
        if !kinds.contains(&k) {
            return Err(format!("quotient {k:?} never produced"));
        }
    }
    Ok(format!("{accepted} foldings classified, {rejected} involutions rejected"))
}

fn criterion_5() -> Outcome {
    let rows = input::parse_fixtures(input::TABLE3).map_err(|e| e.to_string())?;
    let mut passed = Vec::new();
    for r in &rows {
        let o = input::check_fixture(r);
        if !o.passed() {
            return Err(format!("{}: {:?} {:?}", r.name, o.computed, o.error));
        }
        if !r.quarantined {
            passed.push(r);
        }
    }
    for need in ["so(7)/G2", "F4/so(9)", "G2/sl(3)", "E8/E7+sl(2)", "sl(5)/sp(4)"] {
        if !passed.iter().any(|r| r.name == need) {
            return Err(format!("missing row {need}"));
        }
    }
    let series: BTreeSet<String> = passed
        .iter()
        .map(|r| {
            let t = TypeSpec::parse(&r.ambient.type_label).unwrap();
            let f = t.factors[0];
            match f.series {
                Series::A | Series::B | Series::C | Series::D => format!("{:?}", f.series),
                _ => f.to_string(),
            }
        })
        .collect();
    for s in ["A", "B", "C", "D", "E6", "E7", "E8", "F4", "G2"] {
        if !series.contains(s) {
            return Err(format!("no fixture on {s}"));
        }
    }
    if passed.len() < 10 {
        return Err(format!("only {} rows", passed.len()));
    }
    Ok(format!("{} rows, all five columns reproduced", passed.len()))
}

fn enumerated() -> Vec<(String, Entry)> {
    let mut out = Vec::new();
    for a in classify::rank1_ambients(BOUND) {
        for e in classify::enumerate_rank1(&a, BOUND).unwrap().entries {
            out.push((a.clone(), e));
        }
    }
    for a in classify::rank2_ambients(BOUND) {
        for e in classify::enumerate_rank2(&a, BOUND, Execution::Parallel).unwrap().entries {
            out.push((a.clone(), e));
        }
    }
    out
}

fn criterion_6() -> Outcome {
    let systems = enumerated();
    let n = systems.len();
    let failures: Vec<String> = sphdual::par::map(Execution::Parallel, systems, |(a, e)| {
        let w = WeakSphericalSystem::new(sc(&a), XiSpec::Min, e.sigma.clone(), e.sp.clone()).unwrap();
        let bad = classify::property_failures(&w);
        (!bad.is_empty()).then(|| format!("{a} {:?} {:?}: {}", e.sigma, e.sp, bad.join(", ")))
    })
    .into_iter()
    .flatten()
    .collect();
    match failures.first() {
        None => Ok(format!("{n} systems, every property holds")),
        Some(f) => Err(format!("{} failures, first: {f}", failures.len())),
    }
}

/// `(ambient Cartan matrix, σ, Sᵖ)` for one Table 1 row placed on its own support.
fn pattern_system(kind: PatternKind, n: usize) -> (Matrix, Vec<i64>, Vec<usize>) {
    let a = kind.cartan(n);
    let sp = kind.black(n).iter().enumerate().filter(|(_, b)| **b).map(|(i, _)| i).collect();
    (a, kind.coefficients(n), sp)
}

fn criterion_7() -> Outcome {
    let mut checked = 0;
    for kind in PatternKind::ALL.into_iter().filter(|k| !k.is_root()) {
        for n in (1..=BOUND).filter(|&n| kind.admits(n)) {
            let (a, sigma, sp) = pattern_system(kind, n);
            let d = from_cartan(&a);
            let assoc = dualize::associated_roots(&sigma, &sp, &d).map_err(|e| format!("{}: {e}", kind.label(n)))?;
            let count = classify::oracle_assoc_uniqueness(&sigma, &d);
            if count != 1 {
                return Err(format!("{}: {count} decompositions", kind.label(n)));
            }
            if linalg::add(&assoc.gammas[0], &assoc.gammas[1]) != sigma {
                return Err(format!("{}: γ₁ + γ₂ ≠ σ", kind.label(n)));
            }
            checked += 1;
        }
    }
    // The same rows as they sit inside the enumerated ambients.
    for (a, e) in enumerated() {
        let d = sc(&a);
        for s in &e.sigma {
            if d.is_root(s) {
                continue;
            }
            if classify::oracle_assoc_uniqueness(s, &d) != 1 {
                return Err(format!("{a}: {s:?} is not uniquely decomposed"));
            }
            dualize::associated_roots(s, &e.sp, &d).map_err(|err| format!("{a}: {err}"))?;
            checked += 1;
        }
    }
    Ok(format!("{checked} non-root placements, unique decomposition each"))
}

/// The two constraint tables read off case by case.
fn expected_values(label: &str, trivial: bool, very: bool) -> Vec<i64> {
    if trivial {
        return vec![1];
    }
    let (letter, n) = label.split_at(1);
    let n: usize = n.parse().unwrap_or(0);
    match letter {
        "A" if n % 2 == 0 && n >= 2 => vec![-1],
        "D" if n == 2 => vec![1, -1],
        "D" if very => vec![-1],
        "D" => vec![1, -1],
        _ => vec![1],
    }
}

fn criterion_8() -> Outcome {
    let opts = ConstraintOptions::default();
    let mut rows = 0;
    let extra = vec![vec![2, 0], vec![0, 2]];
    for kind in PatternKind::ALL {
        for n in (1..=6).filter(|&n| kind.admits(n)) {
            let (a, sigma, sp) = pattern_system(kind, n);
            // Two spare A1 vertices give automorphisms that are trivial on |σ|.
            let big = block_diag(&a, &extra);
            let mut padded = sigma.clone();
            padded.extend([0, 0]);
            let w = WeakSphericalSystem::new(from_cartan(&big), XiSpec::Min, vec![padded.clone()], sp.clone())
                .unwrap();
            if !w.is_valid() {
                return Err(format!("{} placement invalid", kind.label(n)));
            }
            let label = match kind {
                PatternKind::A1 => "A1".to_string(),
                PatternKind::A => format!("A{n}"),
                PatternKind::D2 => "D2".into(),
                PatternKind::D => format!("D{n}"),
                _ => "other".into(),
            };
            for u in cartan::automorphisms(&big).into_iter().skip(1) {
                let image: Vec<i64> = {
                    let mut v = vec![0; padded.len()];
                    for (i, &c) in padded.iter().enumerate() {
                        v[u[i]] = c;
                    }
                    v
                };
                let mut usp: Vec<usize> = sp.iter().map(|&i| u[i]).collect();
                usp.sort_unstable();
                if image != padded || usp != sp {
                    continue;
                }
                let act = OuterAction::new(&w, vec![u.clone()]).map_err(|e| e.to_string())?;
                let ad = lgroup::adapted_constraints(&w, &act, opts).map_err(|e| e.to_string())?;
                let va = lgroup::very_adapted_constraints(&w, &act, opts).map_err(|e| e.to_string())?;
                for (x, y) in ad.iter().zip(&va) {
                    let trivial = (0..n).all(|i| x.u[i] == i + 1);
                    if x.allowed != expected_values(&label, trivial, false)
                        || y.allowed != expected_values(&label, trivial, true)
                    {
                        return Err(format!("{} u={:?}: {:?} / {:?}", kind.label(n), x.u, x.allowed, y.allowed));
                    }
                    if !y.allowed.iter().all(|v| x.allowed.contains(v)) {
                        return Err(format!("{}: very adapted not inside adapted", kind.label(n)));
                    }
                    rows += 1;
                }
            }
        }
    }
    Ok(format!("{rows} (pattern, automorphism) pairs match both tables"))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 8] = [
        ("rank one table", criterion_1),
        ("rank two table", criterion_2),
        ("starred ε values", criterion_3),
        ("folding suite", criterion_4),
        ("dual-group fixtures", criterion_5),
        ("property suite", criterion_6),
        ("associated-root oracle", criterion_7),
        ("character constraint tables", criterion_8),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let out = std::panic::catch_unwind(f).unwrap_or_else(|_| Err("panicked".into()));
        match out {
            Ok(msg) => println!("criterion {}: PASS  {name}: {msg}", i + 1),
            Err(msg) => {
                failed += 1;
                println!("criterion {}: FAIL  {name}: {msg}", i + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
