//! The full invariant suite behind `prook verify`.
//!
//! Every check runs over all shapes `(n, c)` with `n <= n_cap` and
//! `1 <= c <= c_cap`. Checks are independent and run on scoped threads; the
//! report lists them sorted by name.

use std::collections::BTreeMap;
use std::fmt;
use std::thread;

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::One;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::{left_action_x, right_action_x, x_of, x_st_product, AlgebraElement};
use crate::bratteli::{adjacency_count, vertex_count, BratteliGraph};
use crate::chartable::character_table;
use crate::diagram::{cardinality, enumerate_planar, Diagram};
use crate::profile::Profile;
use crate::repr::{
    are_isomorphic, character, character_by_trace, check_isomorphism_witness, restriction_decomposition,
    verify_irreducible, verify_matrix_algebra, verify_regular_decomposition, IrrepLabel, ModuleSpace,
};
use crate::witness::{check_cap, VerifyError, Witness, DEFAULT_DIAGRAM_CAP};

/// Exhaustive pair/triple loops above this many tuples are replaced by a
/// seeded sample of [`SAMPLE_SIZE`] tuples.
pub const TUPLE_BUDGET: u64 = 1_000_000;
pub const SAMPLE_SIZE: usize = 10_000;
const SAMPLE_SEED: u64 = 0x5eed;
const MATRIX_DIM_CAP: u64 = 4096;

/// Deliberate defects used to check that the suite can fail.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Mutation {
    /// Negates the coefficient of the empty subdiagram in every expanded
    /// `x_d` with `d` nonempty.
    FlipXSign,
}

#[derive(Clone, Debug)]
pub struct VerifyConfig {
    pub n_cap: usize,
    pub c_cap: usize,
    pub diagram_cap: u64,
    pub mutation: Option<Mutation>,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig { n_cap: 3, c_cap: 2, diagram_cap: DEFAULT_DIAGRAM_CAP, mutation: None }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    CapExceeded,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::CapExceeded => "cap_exceeded",
        })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub name: &'static str,
    pub status: Status,
    /// Number of individual cases examined before stopping.
    pub cases: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub message: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub n_cap: usize,
    pub c_cap: usize,
    pub diagram_cap: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mutation: Option<Mutation>,
    pub status: Status,
    pub checks: Vec<CheckResult>,
}

impl Report {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| c.status != Status::Pass)
    }
}

type CheckFn = fn(&Ctx, &mut u64) -> Result<(), VerifyError>;

const CHECKS: &[(&str, CheckFn)] = &[
    ("algebra.embedding", check_embedding),
    ("algebra.identity", check_identity),
    ("bratteli.structure", check_bratteli),
    ("chartable.trace", check_chartable),
    ("diagram.enumeration", check_enumeration),
    ("diagram.product", check_product),
    ("repr.characters", check_characters),
    ("repr.irreducible", check_irreducible),
    ("repr.isomorphism", check_isomorphism),
    ("repr.matrix_algebra", check_matrix_algebra),
    ("repr.regular_decomposition", check_regular),
    ("repr.restriction", check_restriction),
    ("xbasis.left_action", check_left_action),
    ("xbasis.matrix_units", check_matrix_units),
    ("xbasis.mobius", check_mobius),
    ("xbasis.right_action", check_right_action),
];

pub fn check_names() -> Vec<&'static str> {
    CHECKS.iter().map(|(name, _)| *name).collect()
}

/// Runs every check. Fails fast with `CapExceeded` when the largest shape is
/// beyond `diagram_cap`, before any work is done.
pub fn run(config: &VerifyConfig) -> Result<Report, VerifyError> {
    if config.c_cap == 0 {
        return Err(VerifyError::Invalid("c_cap must be at least 1".into()));
    }
    check_cap(config.n_cap, config.c_cap, config.diagram_cap)?;
    let ctx = Ctx { config: config.clone() };
    let mut checks: Vec<CheckResult> = thread::scope(|scope| {
        let handles: Vec<_> = CHECKS
            .iter()
            .map(|&(name, f)| {
                let ctx = &ctx;
                scope.spawn(move || run_one(ctx, name, f))
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("check thread panicked")).collect()
    });
    checks.sort_by_key(|c| c.name);
    let status = if checks.iter().any(|c| c.status == Status::Fail) {
        Status::Fail
    } else if checks.iter().any(|c| c.status == Status::CapExceeded) {
        Status::CapExceeded
    } else {
        Status::Pass
    };
    Ok(Report {
        n_cap: config.n_cap,
        c_cap: config.c_cap,
        diagram_cap: config.diagram_cap,
        mutation: config.mutation,
        status,
        checks,
    })
}

fn run_one(ctx: &Ctx, name: &'static str, f: CheckFn) -> CheckResult {
    let mut cases = 0;
    let outcome = f(ctx, &mut cases);
    let (status, witness, message) = match outcome {
        Ok(()) => (Status::Pass, None, None),
        Err(VerifyError::Failed(w)) => (Status::Fail, Some(w), None),
        Err(e) if e.is_cap() => (Status::CapExceeded, None, Some(e.to_string())),
        Err(e) => (Status::Fail, None, Some(e.to_string())),
    };
    CheckResult { name, status, cases, witness, message }
}

/// `count` diagrams drawn uniformly (with replacement) from `P_{n,c}`.
pub fn sample_diagrams(n: usize, c: usize, count: usize, seed: u64) -> Vec<Diagram> {
    let all: Vec<Diagram> = enumerate_planar(n, c).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| all.choose(&mut rng).expect("P_{n,c} is never empty").clone()).collect()
}

struct Ctx {
    config: VerifyConfig,
}

impl Ctx {
    fn shapes(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..=self.config.n_cap).flat_map(move |n| (1..=self.config.c_cap).map(move |c| (n, c)))
    }

    fn cap(&self) -> u64 {
        self.config.diagram_cap
    }

    /// `x_d`, with the configured mutation applied.
    fn x(&self, d: &Diagram) -> Result<AlgebraElement, VerifyError> {
        let x = x_of(d).map_err(invalid)?;
        match self.config.mutation {
            Some(Mutation::FlipXSign) if !d.is_empty() => {
                let empty = Diagram::empty(d.n(), d.c());
                let twice = x.coefficient(&empty) * BigRational::from_integer(2.into());
                let fix = AlgebraElement::from_terms(d.n(), d.c(), [(twice, empty)]).map_err(invalid)?;
                x.sub(&fix).map_err(invalid)
            }
            _ => Ok(x),
        }
    }
}

fn invalid(e: impl fmt::Display) -> VerifyError {
    VerifyError::Invalid(e.to_string())
}

fn fail(reason: &str, diagrams: Vec<Diagram>, detail: impl Into<String>) -> VerifyError {
    VerifyError::Failed(Witness::new(reason, diagrams).with_detail(detail))
}

fn all(n: usize, c: usize) -> Vec<Diagram> {
    enumerate_planar(n, c).collect()
}

/// All pairs, or a seeded sample when there are too many.
fn pairs(list: &[Diagram], n: usize, c: usize) -> Vec<(Diagram, Diagram)> {
    let len = list.len() as u64;
    if len * len <= TUPLE_BUDGET {
        list.iter().flat_map(|a| list.iter().map(move |b| (a.clone(), b.clone()))).collect()
    } else {
        let s = sample_diagrams(n, c, 2 * SAMPLE_SIZE, SAMPLE_SEED);
        s.chunks(2).map(|p| (p[0].clone(), p[1].clone())).collect()
    }
}

fn check_enumeration(ctx: &Ctx, cases: &mut u64) -> Result<(), VerifyError> {
    for (n, c) in ctx.shapes() {
        let list = all(n, c);
        *cases += 1;
        if BigUint::from(list.len()) != cardinality(n, c) {
            return Err(fail(
                "enumeration count differs from the cardinality formula",
                vec![],
                format!("n={n} c={c}: {} vs {}", list.len(), cardinality(n, c)),
            ));
        }
        for w in list.windows(2) {
            if w[0].enumeration_key() >= w[1].enumeration_key() {
                return Err(fail("enumeration out of order or repeated", w.to_vec(), format!("n={n} c={c}")));
            }
        }
        for d in &list {
            *cases += 1;
            if !d.is_planar() {
                return Err(fail("enumerated diagram is not planar", vec![d.clone()], ""));
            }
            let rebuilt = Diagram::from_profiles(&d.tau(), &d.beta()).map_err(invalid)?;
            if &rebuilt != d {
                return Err(fail("profiles do not determine the diagram", vec![d.clone(), rebuilt], ""));
            }
        }
    }
    Ok(())
}

fn check_product(ctx: &Ctx, cases: &mut u64) -> Result<(), VerifyError> {
    for (n, c) in ctx.shapes() {
        let list = all(n, c);
        for (a, b) in pairs(&list, n, c) {
            *cases += 1;
            let ab = a.multiply(&b).map_err(invalid)?;
            if !ab.is_planar() {
                return Err(fail("product of planar diagrams is not planar", vec![a, b, ab], ""));
            }
        }
        let len = list.len() as u64;
        let triples: Vec<[Diagram; 3]> = if len * len * len <= TUPLE_BUDGET {
            let mut out = Vec::new();
            for a in &list {
                for b in &list {
                    for d in &list {
                        out.push([a.clone(), b.clone(), d.clone()]);
                    }
                }
            }
            out
        } else {
            let s = sample_diagrams(n, c, 3 * SAMPLE_SIZE, SAMPLE_SEED ^ 3);
            s.chunks(3).map(|t| [t[0].clone(), t[1].clone(), t[2].clone()]).collect()
        };
        for [a, b, d] in triples {
            *cases += 1;
            let left = a.multiply(&b).and_then(|ab| ab.multiply(&d)).map_err(invalid)?;
            let right = b.multiply(&d).and_then(|bd| a.multiply(&bd)).map_err(invalid)?;
            if left != right {
                return Err(fail("product is not associative", vec![a, b, d], format!("{left} vs {right}")));
            }
        }
    }
    Ok(())
}

fn check_identity(ctx: &Ctx, cases: &mut u64) -> Result<(), VerifyError> {
    for (n, c) in ctx.shapes() {
        let one = AlgebraElement::identity(n, c);
        for d in all(n, c) {
            *cases += 1;
            let expected = AlgebraElement::from_diagram(&d).map_err(invalid)?;
            let left = AlgebraElement::diagram_mul(&d, &one).map_err(invalid)?;
            let right = one.mul_diagram(&d).map_err(invalid)?;
            if left != expected || right != expected {
                return Err(fail("identity is not a two-sided unit", vec![d], format!("d*1 = {left}, 1*d = {right}")));
            }
        }
    }
    Ok(())
}

fn check_embedding(ctx: &Ctx, cases: &mut u64) -> Result<(), VerifyError> {
    for (n, c) in ctx.shapes().filter(|&(n, _)| n >= 1) {
        *cases += 1;
        let lifted = AlgebraElement::identity(n - 1, c).embed();
        if lifted != AlgebraElement::identity(n, c) {
            return Err(fail("embedding is not unital", vec![], format!("n={n} c={c}: {lifted}")));
        }
        let list = all(n - 1, c);
        for (a, b) in pairs(&list, n - 1, c) {
            *cases += 1;
            let ga = AlgebraElement::from_diagram(&a).map_err(invalid)?.embed();
            let gb = AlgebraElement::from_diagram(&b).map_err(invalid)?.embed();
            let ab = AlgebraElement::from_diagram(&a.multiply(&b).map_err(invalid)?).map_err(invalid)?;
            if ga.mul(&gb).map_err(invalid)? != ab.embed() {
                return Err(fail("embedding is not multiplicative", vec![a, b], ""));
            }
        }
    }
    Ok(())
}

fn check_left_action(ctx: &Ctx, cases: &mut u64) -> Result<(), VerifyError> {
    check_action(ctx, cases, true)
}

fn check_right_action(ctx: &Ctx, cases: &mut u64) -> Result<(), VerifyError> {
    check_action(ctx, cases, false)
}

/// Fast path against the full bilinear expansion of `d · x_a` (or `x_a · d`).
fn check_action(ctx: &Ctx, cases: &mut u64, left: bool) -> Result<(), VerifyError> {
    for (n, c) in ctx.shapes() {
        let list = all(n, c);
        for (d, a) in pairs(&list, n, c) {
            *cases += 1;
            let xa = ctx.x(&a)?;
            let (fast, full) = if left {
                (left_action_x(&d, &a).map_err(invalid)?, AlgebraElement::diagram_mul(&d, &xa).map_err(invalid)?)
            } else {
                (right_action_x(&a, &d).map_err(invalid)?, xa.mul_diagram(&d).map_err(invalid)?)
            };
            let expected = match &fast {
                Some(b) => ctx.x(b)?,
                None => AlgebraElement::zero(n, c),
            };
            if full != expected {
                let side = if left { "d * x_a" } else { "x_a * d" };
                return Err(fail(
                    "fast action disagrees with the expanded product",
                    vec![d, a],
                    format!("{side} expands to {full}"),
                ));
            }
        }
    }
    Ok(())
}

fn check_mobius(ctx: &Ctx, cases: &mut u64) -> Result<(), VerifyError> {
    for (n, c) in ctx.shapes() {
        for d in all(n, c) {
            *cases += 1;
            let elem = AlgebraElement::from_diagram(&d).map_err(invalid)?;
            let coords = elem.to_x_coordinates();
            let mut back = AlgebraElement::zero(n, c);
            for (a, mu) in &coords {
                back = back.add(&ctx.x(a)?.scale(mu)).map_err(invalid)?;
            }
            if back != elem || AlgebraElement::from_x_coordinates(n, c, &coords).map_err(invalid)? != elem {
                return Err(fail("x-coordinates do not recombine to the diagram", vec![d], format!("got {back}")));
            }
            if coords.values().any(|q| !q.is_one()) || coords.len() != 1 << d.size() {
                return Err(fail("diagram is not the sum of x over its subdiagrams", vec![d], ""));
            }
        }
    }
    Ok(())
}

/// `x_{S,T} x_{U,V} = δ_{T,U} x_{S,V}` by full expansion.
fn check_matrix_units(ctx: &Ctx, cases: &mut u64) -> Result<(), VerifyError> {
    for (n, c) in ctx.shapes() {
        let list = all(n, c);
        let xs: BTreeMap<&Diagram, AlgebraElement> =
            list.iter().map(|d| Ok((d, ctx.x(d)?))).collect::<Result<_, VerifyError>>()?;
        for (a, b) in pairs(&list, n, c) {
            *cases += 1;
            let product = xs[&a].mul(&xs[&b]).map_err(invalid)?;
            let expected = match x_st_product(&a.tau(), &a.beta(), &b.tau(), &b.beta()).map_err(invalid)? {
                Some((s, v)) => ctx.x(&Diagram::from_profiles(&s, &v).map_err(invalid)?)?,
                None => AlgebraElement::zero(n, c),
            };
            if product != expected {
                return Err(fail("x-basis product is not a matrix-unit product", vec![a, b], format!("got {product}")));
            }
        }
    }
    Ok(())
}

fn check_irreducible(ctx: &Ctx, cases: &mut u64) -> Result<(), VerifyError> {
    for (n, c) in ctx.shapes() {
        for t in Profile::all(n, c) {
            *cases += 1;
            verify_irreducible(&ModuleSpace::irreducible(&t), ctx.cap())?;
        }
    }
    Ok(())
}

fn check_isomorphism(ctx: &Ctx, cases: &mut u64) -> Result<(), VerifyError> {
    for (n, c) in ctx.shapes() {
        let modules: Vec<ModuleSpace> = Profile::all(n, c).iter().map(ModuleSpace::irreducible).collect();
        for m1 in &modules {
            for m2 in &modules {
                *cases += 1;
                let iso = are_isomorphic(m1, m2).map_err(invalid)?;
                let (t, s) = (m1.bottom().expect("irreducible"), m2.bottom().expect("irreducible"));
                if iso.is_isomorphic() != t.same_sizes(s) {
                    return Err(fail(
                        "isomorphism verdict contradicts the size criterion",
                        vec![],
                        format!("{t} vs {s}"),
                    ));
                }
                check_isomorphism_witness(m1, m2, &iso, ctx.cap())?;
            }
        }
    }
    Ok(())
}

fn check_regular(ctx: &Ctx, cases: &mut u64) -> Result<(), VerifyError> {
    for (n, c) in ctx.shapes() {
        *cases += 1;
        verify_regular_decomposition(n, c, ctx.cap())?;
    }
    Ok(())
}

fn check_matrix_algebra(ctx: &Ctx, cases: &mut u64) -> Result<(), VerifyError> {
    for (n, c) in ctx.shapes() {
        for label in IrrepLabel::all(n, c) {
            *cases += 1;
            verify_matrix_algebra(n, c, &label, MATRIX_DIM_CAP, ctx.cap())?;
        }
    }
    Ok(())
}

fn check_characters(ctx: &Ctx, cases: &mut u64) -> Result<(), VerifyError> {
    for (n, c) in ctx.shapes() {
        let labels = IrrepLabel::all(n, c);
        for d in all(n, c) {
            let dv = d.vertical_subdiagram();
            for label in &labels {
                *cases += 1;
                let closed = character(&d, label).map_err(invalid)?;
                let trace = character_by_trace(&d, label).map_err(invalid)?;
                let trace_v = character_by_trace(&dv, label).map_err(invalid)?;
                if closed != trace || trace != trace_v {
                    return Err(fail(
                        "character closed form, trace and vertical trace disagree",
                        vec![d, dv],
                        format!("label {label}: {closed}, {trace}, {trace_v}"),
                    ));
                }
            }
        }
    }
    Ok(())
}

fn check_restriction(ctx: &Ctx, cases: &mut u64) -> Result<(), VerifyError> {
    for (n, c) in ctx.shapes().filter(|&(n, _)| n >= 1) {
        for t in Profile::all(n, c) {
            *cases += 1;
            let m = ModuleSpace::irreducible(&t);
            let r = restriction_decomposition(&m, ctx.cap())?;
            let expected = m.label().expect("irreducible").restriction_labels();
            if r.labels() != expected {
                return Err(fail("restriction summands are wrong", vec![], format!("{t}: {:?}", r.labels())));
            }
        }
    }
    Ok(())
}

fn check_bratteli(ctx: &Ctx, cases: &mut u64) -> Result<(), VerifyError> {
    let n_max = ctx.config.n_cap;
    for c in 1..=ctx.config.c_cap {
        *cases += 1;
        let g = BratteliGraph::build(c, n_max);
        g.verify_multinomial_recursion()?;
        for n in 0..=n_max {
            if BigUint::from(g.levels()[n].len()) != vertex_count(n, c) {
                return Err(fail("level size differs from the simplex count", vec![], format!("n={n} c={c}")));
            }
            if n >= 1 {
                for (x, count) in g.down_degree_histogram(n) {
                    if BigUint::from(count) != adjacency_count(n, c, x) {
                        return Err(fail(
                            "degree histogram differs from adjacency_count",
                            vec![],
                            format!("n={n} c={c} x={x}"),
                        ));
                    }
                }
            }
        }
        if BratteliGraph::build_from_restriction(c, n_max, ctx.cap())? != g {
            return Err(fail("graph from computed restrictions differs from the rule", vec![], format!("c={c}")));
        }
        let json = g.to_json();
        let back = BratteliGraph::from_json(&json).map_err(invalid)?;
        if back != g || back.to_json() != json {
            return Err(fail("JSON round trip is not stable", vec![], format!("c={c}")));
        }
    }
    Ok(())
}

fn check_chartable(ctx: &Ctx, cases: &mut u64) -> Result<(), VerifyError> {
    for (n, c) in ctx.shapes() {
        *cases += 1;
        character_table(n, c).verify_by_trace()?;
    }
    Ok(())
}
