//! The acceptance suites. Every check is a pure function of its parameters
//! and compares a construction against an independent count or formula.

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use superalg::brauer::{affine_graded_rank, brauer_algebra, BrauerBasis, Variant};
use superalg::coeffs::{Fp, Rational, Scalar, SpanBasis, SparseVec, Zp};
use superalg::combin::{bar_core, bar_weight, colored_compositions, compositions, factorial, multinomial, pstrict, Permutation};
use superalg::qhs::{cyclotomic_close, matrix_block_check, Qhs, QhsError, DEFAULT_Y_CAP, RELATION_NAMES};
use superalg::rootdata::{BlockLabel, RootSystem};
use superalg::schur::{generated_subalgebra, lambda_j, perm_module, schur_s, schur_t, tensor_space};
use superalg::spinblocks::block_decomposition;
use superalg::superkernel::{clifford, hecke, olshanski, twisted_sym, validate_symmetrizing, BiDegree};

type Q = Rational;

pub const SCHEMA: &str = "superalg.verify/1";

/// Environment variable scaling every time budget (a positive float).
pub const TIME_SCALE_VAR: &str = "SUPERALG_TIME_SCALE";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Quick,
    Full,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skip => "skip",
        }
    }
}

#[derive(Clone, Debug)]
pub struct CheckResult {
    pub id: usize,
    pub name: &'static str,
    pub status: Status,
    pub detail: String,
    pub seconds: f64,
    pub budget_seconds: f64,
}

impl CheckResult {
    pub fn line(&self) -> String {
        format!("[{:>2}] {:<4} {:<28} {:>8.2}s  {}", self.id, self.status.as_str().to_uppercase(), self.name, self.seconds, self.detail)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "id": self.id,
            "name": self.name,
            "status": self.status.as_str(),
            "detail": self.detail,
            "seconds": (self.seconds * 1000.0).round() / 1000.0,
            "budget_seconds": self.budget_seconds,
        })
    }
}

/// A check body returns its detail line; failures are `Err`.
type Body = fn(Suite) -> Result<String, String>;

struct Check {
    id: usize,
    name: &'static str,
    budget: f64,
    body: Body,
}

const CHECKS: &[Check] = &[
    Check { id: 1, name: "brauer-ranks", budget: 1.0, body: brauer_ranks },
    Check { id: 2, name: "permutation-modules", budget: 30.0, body: permutation_modules },
    Check { id: 3, name: "schur-triple-rank", budget: 120.0, body: triple_rank },
    Check { id: 4, name: "t-integrality", budget: 120.0, body: t_integrality },
    Check { id: 5, name: "generation", budget: 120.0, body: generation },
    Check { id: 6, name: "affine-basis", budget: 60.0, body: affine_basis },
    Check { id: 7, name: "symmetrizing-forms", budget: 60.0, body: symmetrizing_forms },
    Check { id: 8, name: "oracle-pair", budget: 60.0, body: oracle_pair },
    Check { id: 9, name: "qhs-relations", budget: 300.0, body: qhs_relations },
    Check { id: 10, name: "cyclotomic-nonvanishing", budget: 600.0, body: cyclotomic_nonvanishing },
    Check { id: 11, name: "spin-blocks", budget: 300.0, body: spin_blocks },
    Check { id: 12, name: "matrix-blocks-and-rock", budget: 300.0, body: matrix_blocks },
];

pub fn check_ids() -> Vec<usize> {
    CHECKS.iter().map(|c| c.id).collect()
}

/// Budget multiplier from the environment, defaulting to 1 in optimized
/// builds and 20 otherwise.
pub fn time_scale() -> f64 {
    let default = if cfg!(debug_assertions) { 20.0 } else { 1.0 };
    std::env::var(TIME_SCALE_VAR).ok().and_then(|v| v.parse::<f64>().ok()).filter(|x| *x > 0.0).unwrap_or(default)
}

/// Runs the selected checks in order (all when `only` is empty).
pub fn run_suite(suite: Suite, only: &[usize]) -> Vec<CheckResult> {
    let scale = time_scale();
    CHECKS.iter().filter(|c| only.is_empty() || only.contains(&c.id)).map(|c| run_check(c, suite, scale)).collect()
}

fn run_check(c: &Check, suite: Suite, scale: f64) -> CheckResult {
    let start = Instant::now();
    let outcome = std::panic::catch_unwind(|| (c.body)(suite)).unwrap_or_else(|e| {
        let msg = e.downcast_ref::<String>().cloned().or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()));
        Err(format!("panicked: {}", msg.unwrap_or_default()))
    });
    let seconds = start.elapsed().as_secs_f64();
    let budget = c.budget * scale;
    let (mut status, mut detail) = match outcome {
        Ok(d) => (Status::Pass, d),
        Err(d) => (Status::Fail, d),
    };
    if status == Status::Pass && seconds > budget {
        status = Status::Fail;
        detail = format!("{detail}; exceeded the {budget:.0}s budget");
    }
    CheckResult { id: c.id, name: c.name, status, detail, seconds, budget_seconds: budget }
}

pub fn all_passed(results: &[CheckResult]) -> bool {
    results.iter().all(|r| r.status != Status::Fail)
}

pub fn summary(suite: Suite, results: &[CheckResult]) -> Value {
    let count = |s: Status| results.iter().filter(|r| r.status == s).count();
    json!({
        "schema": SCHEMA,
        "suite": match suite { Suite::Quick => "quick", Suite::Full => "full" },
        "passed": count(Status::Pass),
        "failed": count(Status::Fail),
        "skipped": count(Status::Skip),
        "ok": all_passed(results),
        "checks": results.iter().map(CheckResult::to_json).collect::<Vec<_>>(),
    })
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn brauer_ranks_over<S: Scalar>(max_ell: usize) -> Result<(), String> {
    for ell in 1..=max_ell {
        let t = brauer_algebra::<S>(ell, Variant::Std).map_err(err)?;
        let a = &t.algebra;
        ensure(a.rank() == 4 * ell - 1, || format!("rank A_{ell} = {} over {}", a.rank(), S::ring()))?;
        for j in 0..ell {
            let mut span = SpanBasis::new(false);
            for b in 0..a.rank() {
                span.insert(&a.mul(&t.idempotent(j), &SparseVec::unit(b)));
            }
            let want = if j == ell - 1 { 3 } else { 4 };
            ensure(span.rank() == want, || format!("rank e[{j}]A_{ell} = {} over {}", span.rank(), S::ring()))?;
        }
    }
    Ok(())
}

fn brauer_ranks(_: Suite) -> Result<String, String> {
    brauer_ranks_over::<Q>(4)?;
    brauer_ranks_over::<Fp<3>>(4)?;
    brauer_ranks_over::<Fp<5>>(4)?;
    Ok("ℓ = 1..4 over Q, F3, F5".into())
}

/// multinomial(d; λ)·4^{d−m}·3^m with m the size of the parts colored ℓ−1.
fn perm_rank_formula(lambda: &[usize], colors: &[usize], ell: usize) -> u128 {
    let d: usize = lambda.iter().sum();
    let last: usize = lambda.iter().zip(colors).filter(|(_, &c)| c == ell - 1).map(|(l, _)| l).sum();
    multinomial(lambda) * 4u128.pow((d - last) as u32) * 3u128.pow(last as u32)
}

fn permutation_modules(suite: Suite) -> Result<String, String> {
    let (max_d, max_n) = if suite == Suite::Full { (4, 3) } else { (3, 2) };
    let mut count = 0;
    for ell in 1..=2 {
        for n in 1..=max_n {
            for d in 1..=max_d {
                for shape in colored_compositions(ell, n, d) {
                    let m = perm_module(&shape, ell).map_err(err)?;
                    let want = perm_rank_formula(&shape.lambda, &shape.colors, ell);
                    ensure(m.rank() as u128 == want, || format!("{shape:?}, ℓ={ell}: rank {} ≠ {want}", m.rank()))?;
                    count += 1;
                }
            }
        }
    }
    Ok(format!("{count} colored compositions, d ≤ {max_d}, n ≤ {max_n}, ℓ ≤ 2"))
}

const SCHUR_SIZES: &[(usize, usize, usize)] = &[(1, 2, 1), (2, 2, 1), (2, 2, 2), (1, 3, 1)];

fn schur_sizes(suite: Suite) -> &'static [(usize, usize, usize)] {
    if suite == Suite::Full {
        SCHUR_SIZES
    } else {
        &SCHUR_SIZES[..2]
    }
}

fn triple_rank(suite: Suite) -> Result<String, String> {
    let mut out = Vec::new();
    for &(n, d, ell) in schur_sizes(suite) {
        let s = schur_s::<Q>(n, d, ell).map_err(err)?;
        let inv = s.ambient.invariant_rank::<Q>();
        let end = tensor_space(n, d, ell).map_err(err)?.endomorphism_rank::<Q>().map_err(err)?;
        ensure(s.rank() == inv && inv == end, || format!("({n},{d},{ell}): orbits {}, invariants {inv}, End {end}", s.rank()))?;
        out.push(format!("({n},{d},{ell}):{}", s.rank()));
    }
    Ok(out.join(" "))
}

fn t_integrality(suite: Suite) -> Result<String, String> {
    for &(n, d, ell) in schur_sizes(suite) {
        let tz = schur_t::<Zp<3>>(n, d, ell).map_err(err)?;
        tz.algebra.validate().map_err(err)?;
        schur_t::<Zp<5>>(n, d, ell).map_err(err)?.algebra.validate().map_err(err)?;
        // T^m = S^m for m ≤ 3: every basis element of degree ≤ 3 has η = ξ.
        for k in 0..tz.rank() {
            let deg = tz.algebra.degree(k).deg;
            ensure(deg > 3 || tz.scale[k] == 1, || format!("({n},{d},{ell}): η_{k} = {}·ξ_{k} in degree {deg}", tz.scale[k]))?;
        }
        let tf = schur_t::<Fp<3>>(n, d, ell).map_err(err)?;
        ensure(tz.algebra.map_scalars(|x| x.reduce()).same_structure(&tf.algebra), || format!("({n},{d},{ell}): base change to F3"))?;
    }
    Ok(format!("{} sizes over Z(3), Z(5)", schur_sizes(suite).len()))
}

fn generation_over<S: Scalar>(ell: usize) -> Result<(), String> {
    let t = schur_t::<S>(2, 2, ell).map_err(err)?;
    let s = &t.schur;
    let basis = BrauerBasis { ell };
    let zero: Vec<SparseVec<S>> = t.algebra.indices_of_degree(BiDegree::ZERO).into_iter().map(SparseVec::unit).collect();
    let mut rs = zero.clone();
    let mut la = zero;
    for b in 0..basis.rank() {
        let x = SparseVec::unit(b);
        rs.push(t.from_xi(&s.i_rs(1, 1, &x).map_err(err)?).map_err(err)?);
        for lambda in lambda_j(1, 1, ell) {
            la.push(t.from_xi(&s.i_la(&lambda, &x).map_err(err)?).map_err(err)?);
        }
    }
    for (name, seeds) in [("i_11", &rs), ("i_la", &la)] {
        let rep = generated_subalgebra(&t.algebra, seeds);
        ensure(rep.equal, || format!("ℓ={ell} over {}: S⁰ ∪ {name} generates {:?}", S::ring(), rep.ranks))?;
    }
    Ok(())
}

fn generation(suite: Suite) -> Result<String, String> {
    let ells: &[usize] = if suite == Suite::Full { &[1, 2] } else { &[1] };
    for &ell in ells {
        generation_over::<Q>(ell)?;
        generation_over::<Fp<3>>(ell)?;
    }
    Ok(format!("(n,d) = (2,2), ℓ ∈ {ells:?}, over Q and F3"))
}

/// Coefficient of q^m in d!·(1 + q² + q⁴)^d/(1 − q⁴)^d, the number of
/// monomials z^n b w in H_d(𝖠_1).
fn affine_count(d: usize, m: i64) -> usize {
    if m < 0 {
        return 0;
    }
    let m = m as usize;
    let mut series = vec![0usize; m + 1];
    series[0] = 1;
    for _ in 0..d {
        let mut next = vec![0usize; m + 1];
        for (a, &c) in series.iter().enumerate() {
            for step in [0, 2, 4] {
                if a + step <= m {
                    next[a + step] += c;
                }
            }
        }
        for x in 4..=m {
            next[x] += next[x - 4];
        }
        series = next;
    }
    series[m] * factorial(d) as usize
}

fn affine_basis(suite: Suite) -> Result<String, String> {
    let top = if suite == Suite::Full { 8 } else { 4 };
    let mut ranks = Vec::new();
    for m in 0..=top {
        let rep = affine_graded_rank::<Q>(1, 2, m, 3).map_err(err)?;
        ensure(rep.agrees() && rep.monomials == affine_count(2, m), || format!("degree {m}: {rep:?}, count {}", affine_count(2, m)))?;
        ranks.push(rep.span_rank.to_string());
    }
    Ok(format!("H_2(A_1) ranks in degrees 0..{top}: {}", ranks.join(",")))
}

fn symmetrizing_forms(suite: Suite) -> Result<String, String> {
    let top = if suite == Suite::Full { 4 } else { 3 };
    let two = Q::from_i64(2);
    for ell in 1..=top {
        ensure(brauer_algebra::<Q>(ell, Variant::Std).map_err(err)?.validate_form().passes(), || format!("A_{ell}"))?;
    }
    for n in 1..=top {
        let (a, t) = clifford::<Q>(n);
        ensure(validate_symmetrizing(&a, &t).passes(), || format!("Clifford C_{n}"))?;
        let (a, t) = twisted_sym::<Q>(n);
        ensure(validate_symmetrizing(&a, &t).passes(), || format!("twisted T_{n}"))?;
        let (a, t) = hecke::<Q>(n, &two).map_err(err)?;
        ensure(validate_symmetrizing(&a, &t).passes(), || format!("Hecke H_{n}(2)"))?;
        if n <= 3 {
            let (a, t) = olshanski::<Q>(n, &two).map_err(err)?;
            ensure(validate_symmetrizing(&a, &t).passes(), || format!("Olshanski Y_{n}(2)"))?;
        }
    }
    Ok(format!("A_ℓ, C_n, T_n, H_n(2) up to {top}; Y_n(2) up to 3"))
}

fn oracle_pair(suite: Suite) -> Result<String, String> {
    let top = if suite == Suite::Full { 9 } else { 6 };
    let mut count = 0;
    for p in [3u64, 5] {
        let roots = RootSystem::new(((p - 1) / 2) as usize).map_err(err)?;
        for n in 0..=top {
            for lambda in pstrict(n, p) {
                let got = roots.nucleus_mass(&roots.content(&lambda).map_err(err)?).map_err(err)?;
                let core = bar_core(&lambda, p).map_err(err)?;
                let want = BlockLabel { rho: roots.content(&core).map_err(err)?, d: bar_weight(&lambda, p).map_err(err)? };
                ensure(got.as_ref() == Some(&want), || format!("p={p}, λ={lambda:?}: {got:?} ≠ {want:?}"))?;
                count += 1;
            }
        }
    }
    Ok(format!("{count} p-strict partitions, |λ| ≤ {top}, p ∈ {{3,5}}"))
}

fn thetas(ell: usize, heights: std::ops::RangeInclusive<usize>) -> Vec<Vec<usize>> {
    heights.flat_map(|h| compositions(ell + 1, h)).collect()
}

/// Σ_{w,𝒊} q^{deg ψ_w 1_𝒊} Π_s 1/(1 − q^{(α_{i_s}|α_{i_s})}) at degree m,
/// with deg ψ_w 1_𝒊 read off the inversions of w.
fn poincare_coefficient(roots: &RootSystem, theta: &[usize], m: i64) -> Result<usize, String> {
    let mut total = 0;
    for i in roots.words_of(theta).map_err(err)? {
        let n = i.len();
        for w in Permutation::all(n) {
            let mut d = 0;
            for a in 0..n {
                for b in a + 1..n {
                    if w.0[a] > w.0[b] {
                        d -= roots.gram[i[a]][i[b]];
                    }
                }
            }
            let rem = m - d;
            if rem < 0 {
                continue;
            }
            let mut ways = vec![0usize; rem as usize + 1];
            ways[0] = 1;
            for &it in &i {
                let c = roots.gram[it][it] as usize;
                for x in c..=rem as usize {
                    ways[x] += ways[x - c];
                }
            }
            total += ways[rem as usize];
        }
    }
    Ok(total)
}

fn qhs_relations(suite: Suite) -> Result<String, String> {
    let (per_relation, max_ht, dim_ht, dim_deg) = if suite == Suite::Full { (200, 4, 3, 8) } else { (20, 4, 2, 4) };
    let mut algebras: Vec<Qhs<Q>> = Vec::new();
    for ell in 1..=2 {
        for theta in thetas(ell, 1..=max_ht) {
            algebras.push(Qhs::new(ell, &theta, DEFAULT_Y_CAP).map_err(err)?);
        }
    }
    let mut counts = vec![0usize; RELATION_NAMES.len()];
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut rounds = 0;
    while counts.iter().any(|&c| c < per_relation) {
        rounds += 1;
        ensure(rounds < 1000 * per_relation, || format!("sampling stalled at {counts:?}"))?;
        let q = &algebras[rng.gen_range(0..algebras.len())];
        let idem = &q.words[rng.gen_range(0..q.words.len())];
        let other = &q.words[rng.gen_range(0..q.words.len())];
        let r = rng.gen_range(1..q.n.max(2));
        let s = rng.gen_range(1..=q.n);
        for rel in q.relations(idem, other, r, s).map_err(err)? {
            let k = RELATION_NAMES.iter().position(|n| *n == rel.name).expect("known relation");
            if counts[k] >= per_relation {
                continue;
            }
            ensure(rel.holds(), || format!("{} fails for θ={:?} at 𝒊={idem:?}, r={r}, s={s}", rel.name, q.theta))?;
            counts[k] += 1;
        }
    }
    let mut degrees = 0;
    for ell in 1..=2 {
        let roots = RootSystem::new(ell).map_err(err)?;
        for theta in thetas(ell, 1..=dim_ht) {
            let q = Qhs::<Q>::new(ell, &theta, DEFAULT_Y_CAP).map_err(err)?;
            for m in -dim_deg..=dim_deg {
                let g = q.graded_dim(m).map_err(|e: QhsError| e.to_string())?;
                let want = poincare_coefficient(&roots, &theta, m)?;
                ensure(g.agrees() && g.count == want, || format!("θ={theta:?}, m={m}: {g:?}, series {want}"))?;
                degrees += 1;
            }
        }
    }
    Ok(format!("{per_relation} instances of each of {} relations (ht ≤ {max_ht}); {degrees} graded dimensions", RELATION_NAMES.len()))
}

fn nonvanishing_over<S: Scalar>(max_ht: usize, max_degree: i64) -> Result<usize, String> {
    let roots = RootSystem::new(1).map_err(err)?;
    let mut count = 0;
    for theta in thetas(1, 1..=max_ht) {
        let in_w = roots.nucleus_mass(&theta).map_err(err)?.is_some();
        let h = cyclotomic_close::<S>(1, &theta, max_degree, None).map_err(err)?;
        ensure(h.stabilized, || format!("θ={theta:?} over {} did not stabilize by degree {max_degree}", S::ring()))?;
        ensure(h.nonzero == in_w, || format!("θ={theta:?} over {}: H ≠ 0 is {}, θ ∈ W is {in_w}", S::ring(), h.nonzero))?;
        count += 1;
    }
    Ok(count)
}

fn cyclotomic_nonvanishing(suite: Suite) -> Result<String, String> {
    let max_ht = if suite == Suite::Full { 4 } else { 3 };
    let f = nonvanishing_over::<Fp<3>>(max_ht, 24)?;
    let q = nonvanishing_over::<Q>(max_ht, 24)?;
    Ok(format!("{f} weights over F3 and {q} over Q, ℓ = 1, ht ≤ {max_ht}"))
}

fn spin_blocks(suite: Suite) -> Result<String, String> {
    let top = if suite == Suite::Full { 5 } else { 4 };
    let mut blocks = Vec::new();
    for n in 1..=top {
        let r = block_decomposition::<Fp<3>>(n).map_err(err)?;
        ensure(r.complete && r.orthogonal && r.central, || format!("n={n}: idempotents are not a complete central orthogonal family"))?;
        ensure(r.matches_contents, || format!("n={n}: labels {:?}", r.blocks.iter().map(|b| &b.theta).collect::<Vec<_>>()))?;
        ensure(r.total_rank() as u128 == factorial(n), || format!("n={n}: ranks sum to {}", r.total_rank()))?;
        blocks.push(r.blocks.len().to_string());
    }
    Ok(format!("n ≤ {top}, p = 3, blocks per n: {}", blocks.join(",")))
}

fn matrix_blocks(suite: Suite) -> Result<String, String> {
    let ells: &[usize] = if suite == Suite::Full { &[1, 2] } else { &[1] };
    let mut checked = Vec::new();
    for &ell in ells {
        let roots = RootSystem::new(ell).map_err(err)?;
        for (rho, _) in roots.nuclei(3) {
            match matrix_block_check::<Q>(ell, &rho, 24, None) {
                Ok(c) => {
                    ensure(c.corner_is_one && c.square_law, || format!("ℓ={ell}, ρ={rho:?}: {c:?}"))?;
                    checked.push(format!("{rho:?}:{}", c.total_rank));
                }
                Err(QhsError::Unsupported(_)) => {}
                Err(e) => return Err(format!("ℓ={ell}, ρ={rho:?}: {e}")),
            }
        }
    }
    let rock = RootSystem::new(1).map_err(err)?.smallest_rock(1, 12);
    let why = match rock {
        None => "no θ with d = 1 is RoCK at ℓ = 1".to_string(),
        Some(t) => format!("X_ρ,d is not constructed (RoCK θ = {t:?})"),
    };
    Ok(format!("square law for {} nuclei {}; dimension check skipped: {why}", checked.len(), checked.join(" ")))
}
