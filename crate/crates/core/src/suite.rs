//! Named collections of checkable claims about rook graphs and their scrambles.
//!
//! Claims run in registry order. A claim is skipped, with a reason, when its
//! declared cost exceeds what is left of the budget. Reports carry no timing
//! unless asked, so runs with different thread counts are byte-identical.

use web_time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::divisor::{dhar_burn, fire_set, laplacian_apply, v_reduce, Divisor};
use crate::error::{Error, Result};
use crate::gonality::{k_gonality, rook_certificate_divisor, GonalityOptions};
use crate::graph::{complete_graph, rook_graph, MultiGraph};
use crate::rank::{rank, verify_rank_at_least};
use crate::scramble::{
    hitting_number, min_egg_cut_below, scramble_order, set_a_avoidance, star_scramble,
    t_star_scramble, thm56_avoidance, uniform_scramble, exhaustive_cut_bound_check,
};
use crate::subsets::connected_subsets;
use crate::symmetry::rook_symmetry;
use crate::vset::VertexSet;

pub const SUITES: [&str; 3] = ["smoke", "paper-small", "paper-full"];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ClaimStatus {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ClaimRecord {
    pub id: String,
    /// Plain-language statement of what is checked.
    pub statement: String,
    pub parameters: Value,
    pub expected: Value,
    pub computed: Value,
    pub status: ClaimStatus,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub reason: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub wall_time_ms: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub suite: String,
    pub seed: u64,
    pub claims: Vec<ClaimRecord>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.claims.iter().all(|c| c.status != ClaimStatus::Fail)
    }

    pub fn count(&self, status: ClaimStatus) -> usize {
        self.claims.iter().filter(|c| c.status == status).count()
    }
}

#[derive(Clone, Debug, Default)]
pub struct SuiteOptions {
    pub budget_secs: Option<f64>,
    pub seed: u64,
    /// Worker threads for the searches; the global pool when `None`.
    pub threads: Option<usize>,
    /// Record per-claim wall time (makes reports run-dependent).
    pub timings: bool,
}

struct Outcome {
    parameters: Value,
    expected: Value,
    computed: Value,
    pass: bool,
}

type ClaimFn = Box<dyn Fn(u64) -> Result<Outcome> + Send + Sync>;

pub struct Claim {
    pub id: String,
    pub statement: String,
    /// Rough cost in seconds on one core, used for budget decisions.
    pub cost_secs: f64,
    run: ClaimFn,
}

fn claim(id: impl Into<String>, statement: impl Into<String>, cost_secs: f64, run: ClaimFn) -> Claim {
    Claim { id: id.into(), statement: statement.into(), cost_secs, run }
}

fn label(dims: &[usize]) -> String {
    dims.iter().map(|d| d.to_string()).collect::<Vec<_>>().join("x")
}

fn sym_opts(dims: &[usize]) -> Result<GonalityOptions> {
    Ok(GonalityOptions { symmetry: Some(rook_symmetry(dims)?), ..Default::default() })
}

fn gonality_claim(n: usize, m: usize, cost: f64) -> Claim {
    claim(
        format!("gonality/{n}x{m}"),
        "the gonality of K_n x K_m is (n-1)m, with every smaller degree refuted",
        cost,
        Box::new(move |_| {
            let dims = [n, m];
            let g = rook_graph(&dims)?;
            let r = k_gonality(&g, 1, &sym_opts(&dims)?)?;
            let value = ((n - 1) * m) as i64;
            let refuted: Vec<i64> = (1..value).collect();
            Ok(Outcome {
                parameters: json!({"dims": dims, "k": 1}),
                expected: json!({"value": value, "degrees_refuted": refuted}),
                computed: json!({"value": r.value, "degrees_refuted": r.degrees_refuted}),
                pass: r.value == Some(value) && r.exhaustive && r.degrees_refuted == refuted,
            })
        }),
    )
}

fn certificate_claim() -> Claim {
    claim(
        "certificate/rank-one",
        "ones everywhere but one slice along the smallest factor has rank at least 1",
        5.0,
        Box::new(|_| {
            let mut all: Vec<Vec<usize>> = Vec::new();
            for n in 2..=6 {
                for m in n..=6 {
                    all.push(vec![n, m]);
                }
            }
            all.extend([vec![2, 2, 2], vec![2, 2, 3], vec![2, 3, 3]]);
            let mut failures = Vec::new();
            let mut degrees = Vec::new();
            for dims in &all {
                let g = rook_graph(dims)?;
                let d = rook_certificate_divisor(dims, 1)?;
                degrees.push(d.degree());
                let expected_degree = (dims[0] - 1) * dims[1..].iter().product::<usize>();
                if !verify_rank_at_least(&g, &d, 1)?.holds || d.degree() != expected_degree as i64 {
                    failures.push(label(dims));
                }
            }
            Ok(Outcome {
                parameters: json!({"dims": all}),
                expected: json!({"failures": []}),
                computed: json!({"failures": failures, "degrees": degrees}),
                pass: failures.is_empty(),
            })
        }),
    )
}

fn higher_gonality_claim(n: usize, m: usize, cost: f64) -> Claim {
    claim(
        format!("k-gonality/{n}x{m}"),
        "on K_n x K_m the 2- and 3-gonalities are nm-1 and nm, and gon_k <= gon_(k+1) - 1",
        cost,
        Box::new(move |_| {
            let dims = [n, m];
            let g = rook_graph(&dims)?;
            let opts = sym_opts(&dims)?;
            let mut values = Vec::new();
            let mut exhaustive = true;
            for k in 1..=3 {
                let r = k_gonality(&g, k, &opts)?;
                exhaustive &= r.exhaustive;
                values.push(r.value);
            }
            let nm = (n * m) as i64;
            let expected = vec![Some(((n - 1) * m) as i64), Some(nm - 1), Some(nm)];
            let chain = values.windows(2).all(|w| matches!((w[0], w[1]), (Some(a), Some(b)) if a <= b - 1));
            Ok(Outcome {
                parameters: json!({"dims": dims, "k": [1, 2, 3]}),
                expected: json!({"values": expected, "chain": true}),
                computed: json!({"values": values, "chain": chain}),
                pass: values == expected && chain && exhaustive,
            })
        }),
    )
}

fn all_ones_claim() -> Claim {
    claim(
        "certificate/all-ones-rank-three",
        "one chip on every vertex of K_n x K_m has rank at least 3",
        5.0,
        Box::new(|_| {
            let mut failures = Vec::new();
            let mut all = Vec::new();
            for n in 2..=4 {
                for m in n..=4 {
                    let g = rook_graph(&[n, m])?;
                    let d = rook_certificate_divisor(&[n, m], 3)?;
                    all.push([n, m]);
                    if !verify_rank_at_least(&g, &d, 3)?.holds {
                        failures.push(label(&[n, m]));
                    }
                }
            }
            Ok(Outcome {
                parameters: json!({"dims": all}),
                expected: json!({"failures": []}),
                computed: json!({"failures": failures}),
                pass: failures.is_empty(),
            })
        }),
    )
}

fn star_order_claim() -> Claim {
    claim(
        "scramble/star-4x4-order",
        "connected 3-sets of K_4 x K_4 form a scramble of order 11 (hitting 11, egg cut 12)",
        2.0,
        Box::new(|_| {
            let r = scramble_order(&star_scramble(4, 4)?)?;
            let computed = json!({"hitting_number": r.hitting_number, "min_egg_cut": r.min_egg_cut, "order": r.order, "max_avoidance": r.max_avoidance.len()});
            let expected = json!({"hitting_number": 11, "min_egg_cut": 12, "order": 11, "max_avoidance": 5});
            Ok(Outcome { parameters: json!({"n": 4, "m": 4}), pass: computed == expected, expected, computed })
        }),
    )
}

fn hitting_claim(id: &str, statement: &str, build: fn() -> Result<crate::scramble::Scramble>, expected: u64, cost: f64) -> Claim {
    claim(
        id,
        statement,
        cost,
        Box::new(move |_| {
            let s = build()?;
            let h = hitting_number(&s)?;
            let egg_free = s.eggs().iter().all(|e| !e.is_subset(h.avoidance_set));
            Ok(Outcome {
                parameters: json!({"eggs": s.eggs().len(), "vertices": s.host().vertex_count()}),
                expected: json!({"hitting_number": expected, "avoidance_is_egg_free": true}),
                computed: json!({"hitting_number": h.hitting_number, "avoidance_is_egg_free": egg_free}),
                pass: h.hitting_number == expected && egg_free,
            })
        }),
    )
}

fn uniform_orders_claim(id: &str, statement: &str, cases: Vec<(Vec<usize>, usize, u64)>, cost: f64) -> Claim {
    claim(
        id,
        statement,
        cost,
        Box::new(move |_| {
            let mut expected = Vec::new();
            let mut computed = Vec::new();
            for (dims, k, want) in &cases {
                let s = uniform_scramble(&rook_graph(dims)?, *k)?;
                computed.push(scramble_order(&s)?.order);
                expected.push(*want);
            }
            let params: Vec<Value> = cases.iter().map(|(d, k, _)| json!({"dims": d, "k": k})).collect();
            Ok(Outcome {
                parameters: Value::Array(params),
                expected: json!(expected),
                computed: json!(computed),
                pass: expected == computed,
            })
        }),
    )
}

fn staircase_claim() -> Claim {
    claim(
        "scramble/staircase-4x5",
        "a 6-vertex avoidance set exists for connected 3-sets on K_4 x K_5, so the order is below 15",
        1.0,
        Box::new(|_| {
            let a = thm56_avoidance(4, 5)?;
            let s = star_scramble(4, 5)?;
            let egg_free = s.eggs().iter().all(|e| !e.is_subset(a));
            let order = scramble_order(&s)?.order;
            Ok(Outcome {
                parameters: json!({"n": 4, "m": 5}),
                expected: json!({"size": 6, "egg_free": true, "order_below": 15}),
                computed: json!({"size": a.len(), "egg_free": egg_free, "order": order, "set": a}),
                pass: a.len() == 6 && egg_free && order < 15,
            })
        }),
    )
}

fn set_a_claim() -> Claim {
    claim(
        "avoidance/set-a-3",
        "the set A in K_3 x K_3 x K_3 has 10 vertices in 5 pairs and its complement hits every connected 3-set",
        1.0,
        Box::new(|_| {
            let g = rook_graph(&[3, 3, 3])?;
            let a = set_a_avoidance(3)?;
            let comps: Vec<usize> = g.components(a).iter().map(|c| c.len()).collect();
            let hitting = a.complement(27);
            let misses = connected_subsets(&g, 3).filter(|e| e.is_disjoint(hitting)).count();
            Ok(Outcome {
                parameters: json!({"n": 3}),
                expected: json!({"size": 10, "components": [2, 2, 2, 2, 2], "complement_size": 17, "missed_eggs": 0}),
                computed: json!({"size": a.len(), "components": comps, "complement_size": hitting.len(), "missed_eggs": misses}),
                pass: a.len() == 10 && comps == vec![2; 5] && misses == 0,
            })
        }),
    )
}

fn cut_bound_claim() -> Claim {
    claim(
        "cuts/row-bound",
        "every cut of K_n x K_m with both sides of size at least n-1 has at least (n-1)m edges, tight at a row",
        5.0,
        Box::new(|_| {
            let mut rows = Vec::new();
            let mut pass = true;
            for n in 2..=8 {
                for m in n..=8 {
                    if n * m > 16 {
                        continue;
                    }
                    let r = exhaustive_cut_bound_check(n, m)?;
                    pass &= r.ok() && r.row_cut_weight == r.bound && r.minimum == r.bound;
                    rows.push(json!({"dims": [n, m], "bound": r.bound, "minimum": r.minimum, "row_cut": r.row_cut_weight, "ok": r.ok()}));
                }
            }
            Ok(Outcome {
                parameters: json!({"max_vertices": 16}),
                expected: json!("minimum == row cut == (n-1)m on every board"),
                computed: Value::Array(rows),
                pass,
            })
        }),
    )
}

const SMALL_ROOKS: [&[usize]; 5] = [&[2, 2], &[2, 3], &[2, 4], &[3, 3], &[2, 2, 2]];

fn random_divisor(rng: &mut ChaCha8Rng, n: usize, span: i64) -> Divisor {
    Divisor::new((0..n).map(|_| rng.random_range(-span..=span)).collect())
}

fn pick_graph(rng: &mut ChaCha8Rng) -> Result<MultiGraph> {
    rook_graph(SMALL_ROOKS[rng.random_range(0..SMALL_ROOKS.len())])
}

fn reduction_claim() -> Claim {
    claim(
        "divisors/reduction-unique",
        "equivalent divisors have the same v-reduced form, and reducing twice changes nothing",
        1.0,
        Box::new(|seed| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed_0001);
            let mut bad = 0;
            for _ in 0..100 {
                let g = pick_graph(&mut rng)?;
                let n = g.vertex_count();
                let d = random_divisor(&mut rng, n, 4);
                let x: Vec<i64> = (0..n).map(|_| rng.random_range(-3..=3)).collect();
                let lx = laplacian_apply(&g, &x);
                let d2 = Divisor::new(d.chips.iter().zip(&lx).map(|(a, b)| a - b).collect());
                let v = rng.random_range(0..n);
                let r1 = v_reduce(&g, &d, v)?;
                let r2 = v_reduce(&g, &d2, v)?;
                let again = v_reduce(&g, &r1.reduced, v)?;
                if r1.reduced != r2.reduced || again.reduced != r1.reduced || again.firing_counts.iter().any(|&c| c != 0) {
                    bad += 1;
                }
            }
            Ok(Outcome { parameters: json!({"cases": 100}), expected: json!({"failures": 0}), computed: json!({"failures": bad}), pass: bad == 0 })
        }),
    )
}

fn firing_claim() -> Claim {
    claim(
        "divisors/firing-reversible",
        "firing a set and then its complement restores the divisor",
        0.5,
        Box::new(|seed| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed_0002);
            let mut bad = 0;
            for _ in 0..100 {
                let g = pick_graph(&mut rng)?;
                let n = g.vertex_count();
                let d = random_divisor(&mut rng, n, 4);
                let a = VertexSet(rng.random_range(1..(1u64 << n) - 1));
                let back = fire_set(&g, &fire_set(&g, &d, a), a.complement(n));
                if back != d {
                    bad += 1;
                }
            }
            Ok(Outcome { parameters: json!({"cases": 100}), expected: json!({"failures": 0}), computed: json!({"failures": bad}), pass: bad == 0 })
        }),
    )
}

fn burn_claim(max_n: usize) -> Claim {
    claim(
        format!("divisors/burn-complete-graphs-{max_n}"),
        "on K_n an effective divisor of degree at most n-2 burns completely from any empty vertex",
        0.5,
        Box::new(move |_| {
            let mut checked = 0u64;
            let mut bad = 0u64;
            for n in 2..=max_n {
                let g = complete_graph(n)?;
                for deg in 0..=(n as i64 - 2) {
                    for d in crate::gonality::effective_divisors(n, deg) {
                        for q in (0..n).filter(|&q| d.chips[q] == 0) {
                            checked += 1;
                            if !dhar_burn(&g, &d, q)?.unburnt.is_empty() {
                                bad += 1;
                            }
                        }
                    }
                }
            }
            Ok(Outcome {
                parameters: json!({"max_n": max_n}),
                expected: json!({"failures": 0}),
                computed: json!({"failures": bad, "checked": checked}),
                pass: bad == 0,
            })
        }),
    )
}

fn riemann_roch_claim() -> Claim {
    claim(
        "divisors/riemann-roch",
        "rank(D) - rank(K - D) = deg(D) + 1 - g with K(v) = deg(v) - 2",
        10.0,
        Box::new(|seed| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed_0003);
            let mut bad = 0;
            let mut cases = 0;
            while cases < 50 {
                let g = pick_graph(&mut rng)?;
                let n = g.vertex_count();
                let d = random_divisor(&mut rng, n, 2);
                if d.degree().abs() > 6 {
                    continue;
                }
                cases += 1;
                let k = Divisor::new((0..n).map(|v| g.degree(v) as i64 - 2).collect());
                let lhs = rank(&g, &d)? - rank(&g, &(&k - &d))?;
                if lhs != d.degree() + 1 - g.genus() {
                    bad += 1;
                }
            }
            Ok(Outcome { parameters: json!({"cases": 50}), expected: json!({"failures": 0}), computed: json!({"failures": bad}), pass: bad == 0 })
        }),
    )
}

fn symmetry_claim() -> Claim {
    claim(
        "gonality/symmetry-agreement",
        "searching orbit representatives gives the same k-gonality and witness as the full search",
        10.0,
        Box::new(|_| {
            let mut rows = Vec::new();
            let mut pass = true;
            for dims in SMALL_ROOKS {
                let g = rook_graph(dims)?;
                for k in 1..=3 {
                    let with = k_gonality(&g, k, &sym_opts(dims)?)?;
                    let without = k_gonality(&g, k, &GonalityOptions::default())?;
                    let same = with.value == without.value && with.witness == without.witness;
                    pass &= same;
                    rows.push(json!({"dims": dims, "k": k, "value": with.value, "agree": same}));
                }
            }
            Ok(Outcome { parameters: json!({"dims": SMALL_ROOKS}), expected: json!("agree everywhere"), computed: Value::Array(rows), pass })
        }),
    )
}

fn scramble_below_gonality_claim() -> Claim {
    claim(
        "consistency/scramble-below-gonality",
        "every computed scramble order is at most the certified gonality (n-1)m of its host",
        2.0,
        Box::new(|_| {
            let mut rows = Vec::new();
            let mut pass = true;
            for (n, m) in [(2, 3), (3, 3), (3, 4), (4, 4), (4, 5)] {
                let order = scramble_order(&star_scramble(n, m)?)?.order;
                let gon = rook_certificate_divisor(&[n, m], 1)?.degree() as u64;
                pass &= order <= gon;
                rows.push(json!({"dims": [n, m], "order": order, "certificate_degree": gon}));
            }
            Ok(Outcome { parameters: json!("star scrambles"), expected: json!("order <= certificate degree"), computed: Value::Array(rows), pass })
        }),
    )
}

fn t_star_cut_claim() -> Claim {
    claim(
        "scramble/t-star-cut",
        "adding all 2x2 squares to the 6x6 star scramble keeps every egg cut at 27 or more",
        60.0,
        Box::new(|_| {
            let s = t_star_scramble();
            // the bounded search proves the inequality; the exact value follows
            let below = min_egg_cut_below(&s, 27)?;
            let exact = crate::scramble::min_egg_cut(&s)?;
            Ok(Outcome {
                parameters: json!({"n": 6, "m": 6}),
                expected: json!({"cut_below_27": null, "min_egg_cut_at_least": 27}),
                computed: json!({"cut_below_27": below.value, "min_egg_cut": exact.value}),
                pass: below.value.is_none() && exact.value.is_some_and(|v| v >= 27),
            })
        }),
    )
}

fn four_by_four_claim() -> Claim {
    claim(
        "gonality/4x4",
        "the gonality of K_4 x K_4 is 12: no divisor of degree 11 or less has rank 1",
        60.0,
        Box::new(|_| {
            let g = rook_graph(&[4, 4])?;
            let r = k_gonality(&g, 1, &sym_opts(&[4, 4])?)?;
            let refuted: Vec<i64> = (1..12).collect();
            let orbits: Vec<u64> = r.orbit_counts.iter().map(|c| c.orbits).collect();
            Ok(Outcome {
                parameters: json!({"dims": [4, 4], "k": 1}),
                expected: json!({"value": 12, "degrees_refuted": refuted}),
                computed: json!({"value": r.value, "degrees_refuted": r.degrees_refuted, "orbits_per_degree": orbits}),
                pass: r.value == Some(12) && r.degrees_refuted == refuted,
            })
        }),
    )
}

/// Claims of a suite, in execution order.
pub fn suite_claims(name: &str) -> Result<Vec<Claim>> {
    let smoke = || {
        vec![
            gonality_claim(2, 2, 0.1),
            uniform_orders_claim(
                "scramble/singletons-2x3",
                "singleton eggs on K_2 x K_3 give order 3",
                vec![(vec![2, 3], 1, 3)],
                0.1,
            ),
            burn_claim(4),
        ]
    };
    let small = || {
        vec![
            gonality_claim(2, 2, 0.1),
            gonality_claim(2, 3, 0.1),
            gonality_claim(2, 4, 0.1),
            gonality_claim(3, 3, 0.1),
            certificate_claim(),
            higher_gonality_claim(2, 2, 0.1),
            higher_gonality_claim(2, 3, 0.1),
            higher_gonality_claim(3, 3, 0.5),
            all_ones_claim(),
            star_order_claim(),
            hitting_claim(
                "scramble/star-6x6-hitting",
                "connected 5-sets of K_6 x K_6 have hitting number 24",
                || star_scramble(6, 6),
                24,
                5.0,
            ),
            hitting_claim(
                "scramble/t-star-hitting",
                "connected 5-sets and 2x2 squares of K_6 x K_6 have hitting number 27",
                || Ok(t_star_scramble()),
                27,
                5.0,
            ),
            uniform_orders_claim(
                "scramble/singletons-k2",
                "singleton eggs on K_2 x K_m give order m",
                (2..=6).map(|m| (vec![2, m], 1, m as u64)).collect(),
                1.0,
            ),
            uniform_orders_claim(
                "scramble/adjacent-pairs-k3",
                "adjacent pairs on K_3 x K_m give order 2m",
                (3..=5).map(|m| (vec![3, m], 2, 2 * m as u64)).collect(),
                1.0,
            ),
            hitting_claim(
                "scramble/star-4x6-hitting",
                "connected 3-sets of K_4 x K_6 have hitting number 18",
                || star_scramble(4, 6),
                18,
                1.0,
            ),
            staircase_claim(),
            uniform_orders_claim(
                "scramble/pairs-2x2x2",
                "adjacent pairs on K_2 x K_2 x K_2 give order 4",
                vec![(vec![2, 2, 2], 2, 4)],
                1.0,
            ),
            uniform_orders_claim(
                "scramble/pairs-2x2x3",
                "adjacent pairs on K_2 x K_2 x K_3 give order 6",
                vec![(vec![2, 2, 3], 2, 6)],
                1.0,
            ),
            set_a_claim(),
            cut_bound_claim(),
            reduction_claim(),
            firing_claim(),
            burn_claim(6),
            riemann_roch_claim(),
            symmetry_claim(),
            scramble_below_gonality_claim(),
        ]
    };
    match name {
        "smoke" => Ok(smoke()),
        "paper-small" => Ok(small()),
        "paper-full" => {
            let mut v = small();
            v.push(gonality_claim(3, 4, 1.0));
            v.push(four_by_four_claim());
            v.push(t_star_cut_claim());
            Ok(v)
        }
        other => Err(Error::UnknownSuite(other.to_string())),
    }
}

/// Runs a suite, one log line per claim.
pub fn run_suite(name: &str, opts: &SuiteOptions) -> Result<VerificationReport> {
    let claims = suite_claims(name)?;
    let go = || run_claims(name, claims, opts);
    match opts.threads {
        Some(t) => rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build()
            .map_err(|e| Error::InvalidArguments(format!("thread pool: {e}")))?
            .install(go),
        None => go(),
    }
}

fn run_claims(name: &str, claims: Vec<Claim>, opts: &SuiteOptions) -> Result<VerificationReport> {
    let start = Instant::now();
    let mut records = Vec::with_capacity(claims.len());
    for c in claims {
        let remaining = opts.budget_secs.map(|b| b - start.elapsed().as_secs_f64());
        let record = match remaining {
            Some(left) if c.cost_secs > left => ClaimRecord {
                id: c.id,
                statement: c.statement,
                parameters: Value::Null,
                expected: Value::Null,
                computed: Value::Null,
                status: ClaimStatus::Skipped,
                reason: Some(format!(
                    "declared cost {:.1}s exceeds remaining budget {:.1}s",
                    c.cost_secs,
                    left.max(0.0)
                )),
                wall_time_ms: None,
            },
            _ => {
                let t = Instant::now();
                let out = (c.run)(opts.seed)?;
                ClaimRecord {
                    id: c.id,
                    statement: c.statement,
                    parameters: out.parameters,
                    expected: out.expected,
                    computed: out.computed,
                    status: if out.pass { ClaimStatus::Pass } else { ClaimStatus::Fail },
                    reason: None,
                    wall_time_ms: opts.timings.then(|| t.elapsed().as_millis() as u64),
                }
            }
        };
        log::info!("{:?} {}", record.status, record.id);
        records.push(record);
    }
    Ok(VerificationReport { suite: name.to_string(), seed: opts.seed, claims: records })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn smoke_suite_passes() {
        let r = run_suite("smoke", &SuiteOptions::default()).unwrap();
        assert_eq!(r.claims.len(), 3);
        assert!(r.passed(), "{r:#?}");
    }

    #[test]
    fn unknown_suite() {
        assert!(matches!(run_suite("nope", &SuiteOptions::default()), Err(Error::UnknownSuite(_))));
    }

    #[test]
    fn zero_budget_skips_everything_with_a_reason() {
        let opts = SuiteOptions { budget_secs: Some(0.0), ..Default::default() };
        let r = run_suite("smoke", &opts).unwrap();
        assert_eq!(r.count(ClaimStatus::Skipped), 3);
        assert!(r.claims.iter().all(|c| c.reason.is_some()));
        assert!(r.passed());
    }

    #[test]
    fn claim_ids_are_unique() {
        for name in SUITES {
            let mut ids: Vec<String> = suite_claims(name).unwrap().into_iter().map(|c| c.id).collect();
            let before = ids.len();
            ids.sort();
            ids.dedup();
            assert_eq!(ids.len(), before, "{name}");
        }
    }
}
