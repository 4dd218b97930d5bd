use serde::Serialize;

use crate::semigroup::{named, CayleyTable, ElementMap};
use crate::solution::{verify_solution, PairMap, PeError, PeSolution, ThetaFamily};

use super::{endo_solution, kac_takesaki, ConstructionError};

/// Solutions `s` on `S` and `t` on `T` with actions `α: T → S^S`
/// (`alpha[u]`) and `β: S → T^T` (`beta[a]`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatchedQuadruple {
    pub s: PeSolution,
    pub t: PeSolution,
    pub alpha: Vec<ElementMap>,
    pub beta: Vec<ElementMap>,
}

/// The identities checked by [`check_matched_quadruple`], in order. The
/// last one is associativity of the product on `S × T`, which the
/// product construction needs as well.
pub const MATCHED_IDENTITIES: [&str; 6] = [
    "α_u(a·α_v(b)) = α_u(a)·α_{β_a(u)v}(b)",
    "β_a(β_b(u)·v) = β_{b·α_v(a)}(u)·β_a(v)",
    "θ_a(α_u(b)) = θ_{α_v(a)}(α_{β_a(v)u}(b))",
    "θ_{aα_u(b)}(c) = α_{η_{β_b(u)}(v)}(θ_{aα_u(b)}(c))",
    "η_{β_{bα_v(c)}(u)}(β_c(v)) = β_{θ_{aα_u(b)}(α_{β_b(u)v}(c))}(η_{β_b(u)}(v))",
    "the product (a,u)(b,v) = (a·α_u(b), β_b(u)·v) is associative",
];

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MatchedViolation {
    /// 1-based index into [`MATCHED_IDENTITIES`]; 0 for malformed actions.
    pub identity: usize,
    pub statement: String,
    /// First failing tuple, as `[a, b, c, u, v]` for the identities
    /// (unused variables are 0) and as three carrier elements of `S × T`
    /// for associativity.
    pub witness: Vec<usize>,
    pub failures: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MatchedVerdict {
    pub holds: bool,
    pub violations: Vec<MatchedViolation>,
}

fn well_formed(q: &MatchedQuadruple) -> Result<(), String> {
    let (n, m) = (q.s.order(), q.t.order());
    if q.alpha.len() != m || q.alpha.iter().any(|a| a.len() != n) {
        return Err("α must give one map on S per element of T".into());
    }
    if q.beta.len() != n || q.beta.iter().any(|b| b.len() != m) {
        return Err("β must give one map on T per element of S".into());
    }
    Ok(())
}

/// Evaluates every identity over all tuples, recording the first witness
/// and the number of failures of each.
pub fn check_matched_quadruple(q: &MatchedQuadruple) -> MatchedVerdict {
    if let Err(msg) = well_formed(q) {
        return MatchedVerdict {
            holds: false,
            violations: vec![MatchedViolation {
                identity: 0,
                statement: msg,
                witness: vec![],
                failures: 1,
            }],
        };
    }
    let (n, m) = (q.s.order(), q.t.order());
    let (s, t) = (&q.s, &q.t);
    let sm = |a, b| s.mul(a, b);
    let tm = |u, v| t.mul(u, v);
    let th = |a, b| s.theta_at(a, b);
    let eta = |u, v| t.theta_at(u, v);
    let al = |u: usize, a: usize| q.alpha[u].apply(a);
    let be = |a: usize, u: usize| q.beta[a].apply(u);

    let mut found: Vec<Option<MatchedViolation>> = vec![None; 6];
    let mut note = |i: usize, witness: Vec<usize>| {
        let slot = &mut found[i];
        match slot {
            Some(v) => v.failures += 1,
            None => {
                *slot = Some(MatchedViolation {
                    identity: i + 1,
                    statement: MATCHED_IDENTITIES[i].to_string(),
                    witness,
                    failures: 1,
                })
            }
        }
    };
    for a in 0..n {
        for b in 0..n {
            for u in 0..m {
                for v in 0..m {
                    if al(u, sm(a, al(v, b))) != sm(al(u, a), al(tm(be(a, u), v), b)) {
                        note(0, vec![a, b, 0, u, v]);
                    }
                    if be(a, tm(be(b, u), v)) != tm(be(sm(b, al(v, a)), u), be(a, v)) {
                        note(1, vec![a, b, 0, u, v]);
                    }
                    if th(a, al(u, b)) != th(al(v, a), al(tm(be(a, v), u), b)) {
                        note(2, vec![a, b, 0, u, v]);
                    }
                    for c in 0..n {
                        let p = sm(a, al(u, b));
                        let bu = be(b, u);
                        if th(p, c) != al(eta(bu, v), th(p, c)) {
                            note(3, vec![a, b, c, u, v]);
                        }
                        let lhs = eta(be(sm(b, al(v, c)), u), be(c, v));
                        let rhs = be(th(p, al(tm(bu, v), c)), eta(bu, v));
                        if lhs != rhs {
                            note(4, vec![a, b, c, u, v]);
                        }
                    }
                }
            }
        }
    }
    let prod = |p: usize, r: usize| {
        let (a, u, b, v) = (p / m, p % m, r / m, r % m);
        sm(a, al(u, b)) * m + tm(be(b, u), v)
    };
    for x in 0..n * m {
        for y in 0..n * m {
            for z in 0..n * m {
                if prod(prod(x, y), z) != prod(x, prod(y, z)) {
                    note(5, vec![x, y, z]);
                }
            }
        }
    }
    let violations: Vec<MatchedViolation> = found.into_iter().flatten().collect();
    MatchedVerdict {
        holds: violations.is_empty(),
        violations,
    }
}

/// The product table on `S × T` (if associative) and the map `s ⋈ t`,
/// evaluated straight from the formulas without checking the identities.
/// `(a, u)` is stored as `a * |T| + u`.
pub fn matched_product_map(q: &MatchedQuadruple) -> (Result<CayleyTable, PeError>, PairMap) {
    let (n, m) = (q.s.order(), q.t.order());
    let map = PairMap::from_fn(n * m, |p, r| {
        let (a, u, b, v) = (p / m, p % m, r / m, r % m);
        let ab = q.alpha[u].apply(b);
        let bu = q.beta[b].apply(u);
        let first = q.s.mul(a, ab) * m + q.t.mul(bu, v);
        let second = q.s.theta_at(a, ab) * m + q.t.theta_at(bu, v);
        (first, second)
    });
    let table = CayleyTable::from_fn(n * m, |p, r| map.apply(p, r).0).map_err(PeError::NotProductShaped);
    (table, map)
}

/// `s ⋈ t` on `S ⋈ T`, for a matched quadruple.
pub fn matched_product(q: &MatchedQuadruple) -> Result<PeSolution, ConstructionError> {
    let verdict = check_matched_quadruple(q);
    if !verdict.holds {
        let names: Vec<String> = verdict
            .violations
            .iter()
            .map(|v| format!("#{} {} at {:?}", v.identity, v.statement, v.witness))
            .collect();
        return Err(ConstructionError::NotMatched(names.join("; ")));
    }
    let (table, map) = matched_product_map(q);
    let table = table?;
    let theta = ThetaFamily::from_fn(table.order(), |p, r| map.apply(p, r).1)?;
    verify_solution(&table, &theta)
        .map_err(|e| PeError::InternalInconsistency(format!("matched product fails: {e}")).into())
}

/// The quadruple on `S = {1_S, x, y}` (`xy = y`, all idempotent) and
/// `T = {1_T, z}`: `α_{1_T} = id`, `α_z = γ`, `β_{1_S} = id`,
/// `β_x = β_y = 1_T`, `s(a, b) = (ab, γ(b))`, `t(u, v) = (uv, v)`.
pub fn worked_example_quadruple(gamma: &ElementMap) -> Result<MatchedQuadruple, ConstructionError> {
    let s_table = named::matched_example_s();
    let t_table = named::matched_example_t();
    Ok(MatchedQuadruple {
        s: endo_solution(&s_table, gamma)?,
        t: kac_takesaki(&t_table),
        alpha: vec![ElementMap::identity(3), gamma.clone()],
        beta: vec![ElementMap::identity(2), ElementMap::constant(2, 0), ElementMap::constant(2, 0)],
    })
}

/// The case table of the worked example, with the third case read as
/// `((ab, v), (γ(b), v))`.
pub fn worked_example_case(gamma: &ElementMap, (a, u): (usize, usize), (b, v): (usize, usize)) -> ((usize, usize), (usize, usize)) {
    let s = named::matched_example_s();
    let t = named::matched_example_t();
    match (b == 0, u == 0) {
        (true, true) => ((a, v), (0, v)),
        (true, false) => ((a, t.mul(u, v)), (0, v)),
        (false, true) => ((s.mul(a, b), v), (gamma.apply(b), v)),
        (false, false) => ((s.mul(a, gamma.apply(b)), v), (gamma.apply(b), v)),
    }
}
