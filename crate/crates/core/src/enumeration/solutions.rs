use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::semigroup::{analyze, CayleyTable};
use crate::solution::{classify_properties, solution_key, verify_solution, PeSolution, ThetaFamily};

use super::search::{search, Problem, Status, UNSET};
use super::EnumerationError;

/// Class restrictions for a solution search. Flags combine conjunctively.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SearchFilter {
    pub involutive: bool,
    pub idempotent: bool,
    pub bijective: bool,
    pub non_degenerate: bool,
    pub commutative: bool,
    pub cocommutative: bool,
    /// Only matches on Clifford carriers.
    pub e_invariant: bool,
    /// Only matches on Clifford carriers.
    pub e_fixed: bool,
    pub up_to_iso: bool,
}

pub const FILTER_NAMES: [&str; 8] = [
    "involutive",
    "idempotent",
    "bijective",
    "nondegenerate",
    "commutative",
    "cocommutative",
    "e-invariant",
    "e-fixed",
];

impl SearchFilter {
    pub fn none() -> Self {
        Self::default()
    }

    /// Parses one of [`FILTER_NAMES`] and sets it.
    pub fn with_name(mut self, name: &str) -> Result<Self, EnumerationError> {
        match name {
            "involutive" => self.involutive = true,
            "idempotent" => self.idempotent = true,
            "bijective" => self.bijective = true,
            "nondegenerate" | "non-degenerate" => self.non_degenerate = true,
            "commutative" => self.commutative = true,
            "cocommutative" => self.cocommutative = true,
            "e-invariant" => self.e_invariant = true,
            "e-fixed" => self.e_fixed = true,
            other => return Err(EnumerationError::UnknownFilter(other.to_string())),
        }
        Ok(self)
    }

    pub fn names(&self) -> Vec<&'static str> {
        let flags = [
            self.involutive,
            self.idempotent,
            self.bijective,
            self.non_degenerate,
            self.commutative,
            self.cocommutative,
            self.e_invariant,
            self.e_fixed,
        ];
        FILTER_NAMES.iter().zip(flags).filter(|(_, f)| *f).map(|(n, _)| *n).collect()
    }

    /// Filters that cut the order-4 search down to a feasible size.
    pub fn is_restrictive(&self) -> bool {
        self.involutive || self.idempotent || self.bijective || self.cocommutative
    }

    /// Definitional check on a verified solution.
    pub fn matches(&self, s: &PeSolution) -> bool {
        let r = classify_properties(s).expect("property cross-checks hold on verified solutions");
        let needs_e = self.e_invariant || self.e_fixed;
        let e_ok = !needs_e || {
            let f = analyze(s.semigroup());
            f.is_clifford && {
                let e = &f.idempotents;
                let n = s.order();
                (!self.e_invariant
                    || (0..n).all(|x| e.iter().all(|&a| s.theta_at(x, a) == s.theta_at(x, e[0]))))
                    && (!self.e_fixed || (0..n).all(|x| e.iter().all(|&a| s.theta_at(x, a) == a)))
            }
        };
        (!self.involutive || r.involutive)
            && (!self.idempotent || r.idempotent)
            && (!self.bijective || r.bijective)
            && (!self.non_degenerate || r.non_degenerate)
            && (!self.commutative || r.commutative)
            && (!self.cocommutative || r.cocommutative)
            && e_ok
    }
}

/// One decidable fact about `θ`, read from the cells of the search.
#[derive(Clone, Copy, Debug)]
enum Rule {
    P1 { x: u8, y: u8, z: u8 },
    P2 { x: u8, y: u8, w: u8 },
    /// `xy·θ_x(y) = target(x, y)` where the target is `x` (involutive) or
    /// `xy` (idempotent).
    SquareFirst { x: u8, y: u8, target: u8 },
    /// `θ_xy(θ_x(y)) = y` (involutive) or `= θ_x(y)` (idempotent).
    SquareSecond { x: u8, y: u8, idempotent: bool },
    /// Two cells of `s` with equal first component need different seconds.
    Distinct { a: u16, b: u16 },
    /// `θ_a(z) = θ_b(z)`, as cells.
    Equal { a: u16, b: u16 },
    /// `x·θ_y(z) = xz`.
    LeftAbsorb { x: u8, y: u8, z: u8 },
    /// `θ_x(θ_y(z)) = θ_y(θ_x(z))`.
    Commute { x: u8, y: u8, z: u8 },
    /// `θ_x(e) = e`.
    Fixed { x: u8, e: u8 },
}

fn rules(t: &CayleyTable, f: &SearchFilter, idempotents: &[usize]) -> Vec<(usize, Rule)> {
    let n = t.order();
    let cell = |x: usize, y: usize| x * n + y;
    let b = |v: usize| v as u8;
    let mut out = Vec::new();
    for x in 0..n {
        for y in 0..n {
            let xy = t.mul(x, y);
            for z in 0..n {
                let trig = cell(x, y).max(cell(xy, z)).max(cell(x, t.mul(y, z)));
                out.push((trig, Rule::P1 { x: b(x), y: b(y), z: b(z) }));
                let trig = cell(x, y).max(cell(xy, z)).max(cell(y, z));
                out.push((trig, Rule::P2 { x: b(x), y: b(y), w: b(z) }));
            }
            if f.involutive || f.idempotent {
                let target = if f.involutive { x } else { xy };
                out.push((cell(x, y), Rule::SquareFirst { x: b(x), y: b(y), target: b(target) }));
                out.push((cell(x, y), Rule::SquareSecond { x: b(x), y: b(y), idempotent: !f.involutive }));
            }
        }
    }
    if f.involutive || f.bijective {
        for a in 0..n * n {
            for c in a + 1..n * n {
                if t.cells()[a] == t.cells()[c] {
                    out.push((c, Rule::Distinct { a: a as u16, b: c as u16 }));
                }
            }
        }
    }
    if f.non_degenerate {
        for x in 0..n {
            for y in 0..n {
                for y2 in y + 1..n {
                    out.push((cell(x, y2), Rule::Distinct { a: cell(x, y) as u16, b: cell(x, y2) as u16 }));
                }
            }
        }
    }
    if f.commutative {
        for x in 0..n {
            for y in 0..n {
                let xy = t.mul(x, y);
                for z in 0..n {
                    let (a, c) = (cell(x, z), cell(xy, z));
                    if a != c {
                        out.push((a.max(c), Rule::Equal { a: a as u16, b: c as u16 }));
                    }
                }
            }
        }
    }
    if f.cocommutative {
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    out.push((cell(y, z), Rule::LeftAbsorb { x: b(x), y: b(y), z: b(z) }));
                    out.push((cell(y, z).max(cell(x, z)), Rule::Commute { x: b(x), y: b(y), z: b(z) }));
                }
            }
        }
    }
    if f.e_invariant {
        for x in 0..n {
            for w in idempotents.windows(2) {
                let (a, c) = (cell(x, w[0]), cell(x, w[1]));
                out.push((a.max(c), Rule::Equal { a: a as u16, b: c as u16 }));
            }
        }
    }
    if f.e_fixed {
        for x in 0..n {
            for &e in idempotents {
                out.push((cell(x, e), Rule::Fixed { x: b(x), e: b(e) }));
            }
        }
    }
    out
}

fn holds(ok: bool) -> Status {
    if ok {
        Status::Holds
    } else {
        Status::Fails
    }
}

fn evaluator(t: &CayleyTable) -> impl Fn(&Rule, &[u8]) -> Status + Sync + '_ {
    let n = t.order();
    move |rule: &Rule, th: &[u8]| {
        let mul = |a: usize, c: usize| t.cells()[a * n + c];
        let at = |a: usize, c: usize| (a * n + c, th[a * n + c]);
        match *rule {
            Rule::P1 { x, y, z } => {
                let (x, y, z) = (x as usize, y as usize, z as usize);
                let a = th[x * n + y] as usize;
                let c = th[mul(x, y) as usize * n + z] as usize;
                holds(mul(a, c) == th[x * n + mul(y, z) as usize])
            }
            Rule::P2 { x, y, w } => {
                let (x, y, w) = (x as usize, y as usize, w as usize);
                let a = th[x * n + y] as usize;
                let c = th[mul(x, y) as usize * n + w] as usize;
                match at(a, c) {
                    (i, UNSET) => Status::Pending(i),
                    (_, v) => holds(v == th[y * n + w]),
                }
            }
            Rule::SquareFirst { x, y, target } => {
                let (x, y) = (x as usize, y as usize);
                holds(mul(mul(x, y) as usize, th[x * n + y] as usize) == target)
            }
            Rule::SquareSecond { x, y, idempotent } => {
                let (x, y) = (x as usize, y as usize);
                let t1 = th[x * n + y];
                let want = if idempotent { t1 } else { y as u8 };
                match at(mul(x, y) as usize, t1 as usize) {
                    (i, UNSET) => Status::Pending(i),
                    (_, v) => holds(v == want),
                }
            }
            Rule::Distinct { a, b } => {
                let (a, b) = (a as usize, b as usize);
                holds(t.cells()[a] != t.cells()[b] || th[a] != th[b])
            }
            Rule::Equal { a, b } => holds(th[a as usize] == th[b as usize]),
            Rule::LeftAbsorb { x, y, z } => {
                let (x, y, z) = (x as usize, y as usize, z as usize);
                holds(mul(x, th[y * n + z] as usize) == mul(x, z))
            }
            Rule::Commute { x, y, z } => {
                let (x, y, z) = (x as usize, y as usize, z as usize);
                let l = at(x, th[y * n + z] as usize);
                if l.1 == UNSET {
                    return Status::Pending(l.0);
                }
                let r = at(y, th[x * n + z] as usize);
                if r.1 == UNSET {
                    return Status::Pending(r.0);
                }
                holds(l.1 == r.1)
            }
            Rule::Fixed { x, e } => holds(th[x as usize * n + e as usize] == e),
        }
    }
}

/// Whether the filter can match anything on `t` at all.
fn carrier_admits(t: &CayleyTable, f: &SearchFilter) -> bool {
    if (f.e_invariant || f.e_fixed) && !analyze(t).is_clifford {
        return false;
    }
    if f.commutative {
        // s₁₂s₁₃ = s₁₃s₁₂ forces xzy = xyz.
        let n = t.order();
        let ok = (0..n).all(|x| {
            (0..n).all(|y| (0..n).all(|z| t.mul(t.mul(x, z), y) == t.mul(t.mul(x, y), z)))
        });
        if !ok {
            return false;
        }
    }
    true
}

fn setup(t: &CayleyTable, f: &SearchFilter) -> Problem<Rule> {
    let n = t.order();
    Problem {
        cells: n * n,
        domain: n,
        instances: rules(t, f, &t.idempotents()),
    }
}

/// Verifies a search leaf and applies the filter by definition, so the
/// result never depends on the pruning rules being complete.
fn accept(t: &CayleyTable, f: &SearchFilter, cells: &[u8]) -> Option<ThetaFamily> {
    let theta = ThetaFamily::from_cells(t.order(), cells.to_vec()).expect("in range");
    let s = verify_solution(t, &theta).expect("search leaves satisfy both axioms");
    f.matches(&s).then_some(theta)
}

fn finish(t: &CayleyTable, f: &SearchFilter, mut found: Vec<ThetaFamily>) -> Vec<ThetaFamily> {
    found.sort();
    found.dedup();
    if f.up_to_iso {
        let mut seen = BTreeMap::new();
        for th in found {
            let key = solution_key(&PeSolution::new_unchecked(t.clone(), th.clone())).expect("small order");
            seen.entry(key).or_insert(th);
        }
        let mut reps: Vec<ThetaFamily> = seen.into_values().collect();
        reps.sort();
        reps
    } else {
        found
    }
}

/// Every `θ` on `t` satisfying both axioms and the filter, sorted by cell
/// bytes. With `up_to_iso`, the least family of each isomorphism class.
pub fn enumerate_solutions(t: &CayleyTable, f: &SearchFilter) -> Vec<ThetaFamily> {
    if !carrier_admits(t, f) {
        return Vec::new();
    }
    let problem = setup(t, f);
    let eval = evaluator(t);
    let mut found = Vec::new();
    search(&problem, &eval, &[], problem.cells, &mut |cells| {
        if let Some(th) = accept(t, f, cells) {
            found.push(th);
        }
    });
    finish(t, f, found)
}

/// The search split by the assignment of the first row, run on `workers`
/// threads. Output is identical to [`enumerate_solutions`].
pub fn parallel_partition(t: &CayleyTable, f: &SearchFilter, workers: usize) -> Result<Vec<ThetaFamily>, EnumerationError> {
    if workers == 0 {
        return Err(EnumerationError::NoWorkers);
    }
    if !carrier_admits(t, f) {
        return Ok(Vec::new());
    }
    let problem = setup(t, f);
    let eval = evaluator(t);
    let n = t.order();
    let mut prefixes = Vec::new();
    search(&problem, &eval, &[], n, &mut |row| prefixes.push(row.to_vec()));
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| EnumerationError::ThreadPool(e.to_string()))?;
    let parts: Vec<Vec<ThetaFamily>> = pool.install(|| {
        prefixes
            .par_iter()
            .map(|prefix| {
                let mut part = Vec::new();
                search(&problem, &eval, prefix, problem.cells, &mut |cells| {
                    if let Some(th) = accept(t, f, cells) {
                        part.push(th);
                    }
                });
                part
            })
            .collect()
    });
    Ok(finish(t, f, parts.into_iter().flatten().collect()))
}

/// Scans all `n^(n²)` families. Oracle for `n ≤ 3`.
pub fn naive_solutions(t: &CayleyTable, f: &SearchFilter) -> Vec<ThetaFamily> {
    let n = t.order();
    let cells = n * n;
    let mut found = Vec::new();
    for mut code in 0..n.pow(cells as u32) {
        let mut th = vec![0u8; cells];
        for c in th.iter_mut().rev() {
            *c = (code % n) as u8;
            code /= n;
        }
        let theta = ThetaFamily::from_cells(n, th).expect("in range");
        if let Ok(s) = verify_solution(t, &theta) {
            if f.matches(&s) {
                found.push(theta);
            }
        }
    }
    finish(t, f, found)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumeration::enumerate_semigroups;
    use crate::semigroup::named;

    #[test]
    fn z2_examples() {
        let z2 = named::cyclic_group(2);
        let all = enumerate_solutions(&z2, &SearchFilter::none());
        assert_eq!(all.len(), 2);
        assert!(all.contains(&ThetaFamily::from_fn(2, |_, y| y).unwrap()));
        assert!(all.contains(&ThetaFamily::from_fn(2, |_, _| 0).unwrap()));
        let inv = enumerate_solutions(&z2, &SearchFilter::none().with_name("involutive").unwrap());
        assert_eq!(inv, vec![ThetaFamily::from_fn(2, |_, y| y).unwrap()]);
    }

    #[test]
    fn null_semigroup_contains_swap_example() {
        let null = named::null_semigroup(3);
        let swap = [0, 2, 1];
        let th = ThetaFamily::from_fn(3, |x, y| if x == 0 { y } else { swap[y] }).unwrap();
        assert!(enumerate_solutions(&null, &SearchFilter::none()).contains(&th));
    }

    #[test]
    fn search_matches_naive_scan_for_every_filter() {
        let filters: Vec<SearchFilter> = std::iter::once(SearchFilter::none())
            .chain(FILTER_NAMES.iter().map(|n| SearchFilter::none().with_name(n).unwrap()))
            .collect();
        for n in 1..=2 {
            for t in enumerate_semigroups(n, false).unwrap() {
                for f in &filters {
                    assert_eq!(enumerate_solutions(&t, f), naive_solutions(&t, f), "{t:?} {f:?}");
                }
            }
        }
        for t in enumerate_semigroups(3, true).unwrap() {
            for f in &filters {
                assert_eq!(enumerate_solutions(&t, f), naive_solutions(&t, f), "{t:?} {f:?}");
            }
        }
    }

    #[test]
    fn workers_do_not_change_output() {
        let v4 = named::klein_four();
        let f = SearchFilter::none();
        let one = parallel_partition(&v4, &f, 1).unwrap();
        assert_eq!(one, parallel_partition(&v4, &f, 4).unwrap());
        assert_eq!(one, enumerate_solutions(&v4, &f));
        assert!(parallel_partition(&v4, &f, 0).is_err());
    }
}
