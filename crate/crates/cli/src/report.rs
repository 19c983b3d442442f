//! Claim reports.
//!
//! Every section is a pure function of the spec. Sections run on scoped
//! threads and are reassembled in a fixed order, so the output bytes depend
//! only on the input.

use std::fmt::Write as _;
use std::str::FromStr;
use std::sync::OnceLock;
use std::thread;

use num_traits::{One, Zero};
use phialg_core::algebra::{
    canonical_left_identity, idempotent_set, is_idempotent, is_minimal_idempotent, left_identities, norm_check,
    radical,
};
use phialg_core::arens::{arens_products, bidual_tower_regularity};
use phialg_core::bimodule::{is_left_ideal, is_modular_left_ideal, is_right_ideal, phi_kernel};
use phialg_core::cohomology::{
    cyclic_equivalence_report, h1, inner_witness_odd, make_noninner_even, maps_with_image_in,
    n_weak_amenability_profile, phi_h1_closed_form, phi_z1_closed_form,
};
use phialg_core::exactnum::rational_to_text;
use phialg_core::structure::{check_isomorphism, independent_isomorphic_functional, multipliers};
use phialg_core::{Algebra, Bimodule, DualVector, Matrix, Side, Subspace, Vector, GR};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::spec::AlgebraSpec;
use crate::CliError;

pub const TOOL: &str = "phialg";
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// Highest dual level in the report profile.
pub const PROFILE_LEVELS: usize = 4;
pub const TOWER_DEPTH: usize = 3;
/// Refuse `h1 --dual K` / `derivations --module dual:K` beyond this.
pub const MAX_DUAL_LEVEL: usize = 64;

const IDEMPOTENT_SEED: u64 = 0x7068_6961_6c67;
const IDEMPOTENT_SAMPLES: usize = 100;
/// Exhaustive coordinate-subspace enumeration up to this dimension.
const EXHAUSTIVE_IDEAL_DIM: usize = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl Status {
    fn label(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skipped => "SKIP",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Claim {
    pub claim_id: String,
    pub statement: String,
    pub status: Status,
    pub details: String,
}

impl Claim {
    fn check(id: &str, statement: &str, ok: bool, details: impl Into<String>) -> Self {
        Claim {
            claim_id: id.into(),
            statement: statement.into(),
            status: if ok { Status::Pass } else { Status::Fail },
            details: details.into(),
        }
    }

    fn skipped(id: &str, statement: &str, reason: &str) -> Self {
        Claim {
            claim_id: id.into(),
            statement: statement.into(),
            status: Status::Skipped,
            details: format!("skipped: {reason}"),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub tool: &'static str,
    pub version: &'static str,
    pub command: String,
    pub input: AlgebraSpec,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub h1_profile: Option<Vec<[usize; 2]>>,
    pub claims: Vec<Claim>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub data: Option<Value>,
}

impl Report {
    fn new(command: &str, spec: &AlgebraSpec) -> Self {
        Report {
            tool: TOOL,
            version: VERSION,
            command: command.into(),
            input: spec.clone(),
            h1_profile: None,
            claims: Vec::new(),
            data: None,
        }
    }

    pub fn claim(&self, id: &str) -> Option<&Claim> {
        self.claims.iter().find(|c| c.claim_id == id)
    }

    pub fn count(&self, status: Status) -> usize {
        self.claims.iter().filter(|c| c.status == status).count()
    }

    pub fn all_passed(&self) -> bool {
        self.count(Status::Fail) == 0
    }

    pub fn exit_code(&self) -> i32 {
        if self.all_passed() {
            0
        } else {
            1
        }
    }

    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("report serialisation cannot fail");
        out.push('\n');
        out
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let phi: Vec<String> = self.input.phi.iter().map(|s| s.0.to_string()).collect();
        let _ = writeln!(out, "{} {} {}", self.tool, self.version, self.command);
        let _ = writeln!(out, "algebra: {} (dim {})", self.input.display_name(), self.input.dim);
        let _ = writeln!(out, "phi: ({})", phi.join(", "));
        if let Some(profile) = &self.h1_profile {
            let cells: Vec<String> = profile.iter().map(|[k, h]| format!("({k},{h})")).collect();
            let _ = writeln!(out, "h1 profile: {}", cells.join(" "));
        }
        let _ = writeln!(out);
        let width = self.claims.iter().map(|c| c.claim_id.len()).max().unwrap_or(0);
        for c in &self.claims {
            let _ = writeln!(out, "{}  {:width$}  {}", c.status.label(), c.claim_id, c.statement);
            let _ = writeln!(out, "      {:width$}  {}", "", c.details);
        }
        if let Some(data) = &self.data {
            let _ = writeln!(out);
            let _ = writeln!(out, "{}", serde_json::to_string_pretty(data).expect("json value"));
        }
        let _ = writeln!(
            out,
            "\n{} pass, {} fail, {} skipped",
            self.count(Status::Pass),
            self.count(Status::Fail),
            self.count(Status::Skipped)
        );
        out
    }
}

#[derive(Clone, Debug)]
pub struct ReportOptions {
    pub max_dim: usize,
    /// Run sections on scoped threads.
    pub parallel: bool,
}

impl Default for ReportOptions {
    fn default() -> Self {
        ReportOptions { max_dim: crate::DEFAULT_MAX_DIM, parallel: true }
    }
}

fn check_cap(spec: &AlgebraSpec, options: &ReportOptions) -> Result<(), CliError> {
    if spec.dim > options.max_dim {
        return Err(CliError::ResourceCap(format!(
            "dim {} exceeds --max-dim {}",
            spec.dim, options.max_dim
        )));
    }
    Ok(())
}

struct Ctx {
    alg: Algebra,
    n: usize,
    phi: Vec<GR>,
    ker: Subspace,
    norm_requested: bool,
    profile: OnceLock<Vec<(usize, usize)>>,
}

type Section = fn(&Ctx) -> Result<Vec<Claim>, CliError>;

const SECTIONS: &[Section] = &[
    arens_section,
    span_section,
    profile_section,
    odd_section,
    even_section,
    cyclic_section,
    radical_section,
    identity_section,
    idempotent_section,
    ideal_section,
    multiplier_section,
    isomorphism_section,
    norm_section,
];

pub fn run_report(spec: &AlgebraSpec, options: &ReportOptions) -> Result<Report, CliError> {
    check_cap(spec, options)?;
    let alg = spec.algebra()?;
    let ctx = Ctx {
        n: alg.dim(),
        phi: spec.phi_coords(),
        ker: phi_kernel(&alg)?,
        norm_requested: spec.norm_check.unwrap_or(false),
        profile: OnceLock::new(),
        alg,
    };
    let outputs: Vec<Result<Vec<Claim>, CliError>> = if options.parallel {
        thread::scope(|s| {
            let handles: Vec<_> = SECTIONS.iter().map(|f| s.spawn(|| f(&ctx))).collect();
            handles
                .into_iter()
                .map(|h| h.join().unwrap_or_else(|e| std::panic::resume_unwind(e)))
                .collect()
        })
    } else {
        SECTIONS.iter().map(|f| f(&ctx)).collect()
    };
    let mut report = Report::new("report", spec);
    for out in outputs {
        report.claims.extend(out?);
    }
    report.h1_profile = ctx.profile.get().map(|p| p.iter().map(|&(k, h)| [k, h]).collect());
    Ok(report)
}

fn vec_text(v: &[GR]) -> String {
    let parts: Vec<String> = v.iter().map(GR::to_string).collect();
    format!("({})", parts.join(", "))
}

fn text_pairs(v: &[GR]) -> Vec<[String; 2]> {
    v.iter().map(GR::to_text_pair).collect()
}

fn map_rows(m: &Matrix) -> Vec<Vec<[String; 2]>> {
    m.row_iter().map(text_pairs).collect()
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn arens_section(ctx: &Ctx) -> Result<Vec<Claim>, CliError> {
    let r = arens_products(&ctx.alg);
    let phi_form = r.matches_phi_form == Some(true);
    let levels = bidual_tower_regularity(&ctx.alg, TOWER_DEPTH)?;
    let stable = levels.iter().all(|l| l.regular && l.matches_base);
    let per_level: Vec<String> = levels
        .iter()
        .map(|l| format!("level {}: regular {}, stable {}", l.level, yes_no(l.regular), yes_no(l.matches_base)))
        .collect();
    Ok(vec![
        Claim::check(
            "arens.regular",
            "The two Arens products on A** coincide and equal m□n = ⟨m, φ⟩n.",
            r.regular && phi_form,
            format!("□ = ◊: {}; φ-form: {}", yes_no(r.regular), yes_no(phi_form)),
        ),
        Claim::check(
            "arens.tower",
            "Iterating A ↦ (A**, □) keeps Arens regularity and the original product.",
            stable && levels.len() == TOWER_DEPTH,
            per_level.join("; "),
        ),
    ])
}

fn span_section(ctx: &Ctx) -> Result<Vec<Claim>, CliError> {
    let n = ctx.n;
    let dual = Bimodule::nth_dual(&ctx.alg, 1)?;
    let bidual = Bimodule::nth_dual(&ctx.alg, 2)?;
    let phi_line = Subspace::span(n, &[&ctx.phi])?;
    let a_dual = dual.action_span(Side::Left);
    let dual_a = dual.action_span(Side::Right);
    let bidual_a = bidual.action_span(Side::Right);
    let a_bidual = bidual.action_span(Side::Left);
    let dims = |s: &Subspace| format!("dim {} of {n}", s.dim());
    Ok(vec![
        Claim::check("actions.a_dual", "A·A* = ℂφ.", a_dual == phi_line, dims(&a_dual)),
        Claim::check("actions.dual_a", "A*·A = A*.", dual_a.is_full(), dims(&dual_a)),
        Claim::check("actions.bidual_a", "A**·A = A.", bidual_a.is_full(), dims(&bidual_a)),
        Claim::check("actions.a_bidual", "A·A** = A**.", a_bidual.is_full(), dims(&a_bidual)),
    ])
}

fn profile_section(ctx: &Ctx) -> Result<Vec<Claim>, CliError> {
    let n = ctx.n;
    let profile = n_weak_amenability_profile(&ctx.alg, PROFILE_LEVELS)?;
    let expected: Vec<(usize, usize)> = (0..=PROFILE_LEVELS).map(|k| (k, phi_h1_closed_form(n, k))).collect();
    let cells = |p: &[(usize, usize)]| p.iter().map(|(k, h)| format!("({k},{h})")).collect::<Vec<_>>().join(" ");
    let mut claims = vec![Claim::check(
        "h1.profile",
        "dim H¹(A, A^(k)) is 0 for odd k and n(n−2) for even k (0 when n ≤ 2), k = 0..4.",
        profile == expected,
        format!("computed {}; expected {}", cells(&profile), cells(&expected)),
    )];
    let even: Vec<usize> = profile.iter().filter(|(k, _)| k % 2 == 0).map(|&(_, h)| h).collect();
    claims.push(if n >= 3 {
        Claim::check(
            "amenability.even",
            "A is not (2m)-weakly amenable when dim ker φ ≥ 2: H¹(A, A^(2m)) ≠ 0.",
            even.iter().all(|&h| h > 0),
            format!("even-level H¹ dimensions {even:?}"),
        )
    } else {
        Claim::check(
            "amenability.even",
            "When dim ker φ < 2, every derivation into an even dual is inner.",
            even.iter().all(|&h| h == 0),
            format!("dim ker φ = {}; even-level H¹ dimensions {even:?}", n - 1),
        )
    });
    let _ = ctx.profile.set(profile);
    Ok(claims)
}

fn odd_section(ctx: &Ctx) -> Result<Vec<Claim>, CliError> {
    let n = ctx.n;
    let mut ok = true;
    let mut notes = Vec::new();
    for k in (1..=PROFILE_LEVELS).step_by(2) {
        let s = h1(&Bimodule::nth_dual(&ctx.alg, k)?)?;
        let equal = s.z1 == s.b1;
        let mut witnessed = 0;
        for v in s.z1.basis_vectors() {
            let map = Matrix::from_entries(n, n, v.to_vec())?;
            if inner_witness_odd(&ctx.alg, &map, k).is_ok() {
                witnessed += 1;
            }
        }
        ok &= equal && witnessed == s.z1.dim();
        notes.push(format!(
            "k={k}: Z¹ = B¹ {} (dim {}), {witnessed}/{} basis derivations equal δ_x for x = −D(e)",
            yes_no(equal),
            s.z1.dim(),
            s.z1.dim()
        ));
    }
    Ok(vec![Claim::check(
        "amenability.odd",
        "A is (2m−1)-weakly amenable: every derivation into an odd dual is inner.",
        ok,
        notes.join("; "),
    )])
}

fn even_section(ctx: &Ctx) -> Result<Vec<Claim>, CliError> {
    let n = ctx.n;
    let module = Bimodule::nth_dual(&ctx.alg, 2)?;
    let s = h1(&module)?;
    let expected = maps_with_image_in(&ctx.ker, n);
    let mut claims = vec![Claim::check(
        "derivations.even_range",
        "Derivations A → A** are exactly the linear maps with image in ker φ.",
        s.z1 == expected,
        format!("dim Z¹(A, A**) = {}, dim of maps into ker φ = {}", s.z1.dim(), expected.dim()),
    )];
    let statement = "D(a) = ⟨f − φ, a⟩b₀ is a derivation into A**, non-inner exactly when dim ker φ ≥ 2.";
    claims.push(if n < 2 {
        Claim::skipped("derivations.noninner_witness", statement, "requires dim ≥ 2")
    } else {
        let w = make_noninner_even(&ctx.alg)?;
        let biorthogonal = w.f.pair(&w.a0).is_zero()
            && DualVector::new(ctx.phi.clone()).pair(&w.b0).is_zero()
            && w.f.pair(&w.b0).is_one();
        Claim::check(
            "derivations.noninner_witness",
            statement,
            biorthogonal && w.inner == (n < 3),
            format!(
                "f = {}, a₀ = {}, b₀ = {}; inner: {}",
                vec_text(&w.f),
                vec_text(&w.a0),
                vec_text(&w.b0),
                yes_no(w.inner)
            ),
        )
    });
    Ok(claims)
}

fn cyclic_section(ctx: &Ctx) -> Result<Vec<Claim>, CliError> {
    let r = cyclic_equivalence_report(&ctx.alg)?;
    Ok(vec![Claim::check(
        "cyclic.amenable",
        "Every derivation A → A* is cyclic, and the cyclic derivations are exactly the inner ones.",
        r.all_derivations_cyclic && r.cyclically_amenable(),
        format!(
            "dim Z¹ = {}, dim B¹ = {}, dim cyclic = {}; all cyclic: {}",
            r.derivation_dim,
            r.inner_dim,
            r.cyclic_dim,
            yes_no(r.all_derivations_cyclic)
        ),
    )])
}

fn radical_section(ctx: &Ctx) -> Result<Vec<Claim>, CliError> {
    let n = ctx.n;
    let rad = radical(&ctx.alg);
    let basis: Vec<&[GR]> = rad.basis_vectors().collect();
    let mut square_zero = true;
    for x in &basis {
        for y in &basis {
            square_zero &= ctx.alg.multiply(x, y)?.is_zero();
        }
    }
    let semisimple = "A is not semisimple.";
    Ok(vec![
        Claim::check(
            "radical.ker_phi",
            "The Jacobson radical, from the trace form of the unitisation, equals ker φ.",
            rad == ctx.ker,
            format!("dim rad = {}, dim ker φ = {}", rad.dim(), ctx.ker.dim()),
        ),
        if n < 2 {
            Claim::skipped("radical.not_semisimple", semisimple, "requires dim ≥ 2")
        } else {
            Claim::check("radical.not_semisimple", semisimple, !rad.is_zero(), format!("dim rad = {}", rad.dim()))
        },
        Claim::check(
            "radical.square_zero",
            "rad(A)² = 0.",
            square_zero,
            format!("{} basis products checked", basis.len() * basis.len()),
        ),
    ])
}

fn identity_section(ctx: &Ctx) -> Result<Vec<Claim>, CliError> {
    let n = ctx.n;
    let phi = DualVector::new(ctx.phi.clone());
    let Some(ids) = left_identities(&ctx.alg) else {
        return Ok(vec![Claim::check(
            "identities.left",
            "The left identities are exactly {e : φ(e) = 1}.",
            false,
            "no left identity found",
        )]);
    };
    let mut acts = true;
    let samples = std::iter::once(ids.particular.clone()).chain(
        ids.directions
            .basis_vectors()
            .map(|d| Vector::new(ids.particular.iter().zip(d).map(|(p, x)| p + x).collect())),
    );
    for e in samples {
        for i in 0..n {
            let ei = Vector::unit(n, i);
            acts &= ctx.alg.multiply(&e, &ei)? == ei;
        }
    }
    let left_ok = phi.pair(&ids.particular).is_one() && ids.directions == ctx.ker && acts;
    let two_sided = "A has no two-sided identity.";
    Ok(vec![
        Claim::check(
            "identities.left",
            "The left identities are exactly {e : φ(e) = 1}.",
            left_ok,
            format!("particular e = {}, direction space dim {}", vec_text(&ids.particular), ids.directions.dim()),
        ),
        if n < 2 {
            Claim::skipped("identities.no_two_sided", two_sided, "requires dim ≥ 2")
        } else {
            Claim::check(
                "identities.no_two_sided",
                two_sided,
                ids.two_sided.is_none(),
                match &ids.two_sided {
                    None => "no left identity is also a right identity".to_string(),
                    Some(e) => format!("two-sided identity {}", vec_text(e)),
                },
            )
        },
    ])
}

fn idempotent_section(ctx: &Ctx) -> Result<Vec<Claim>, CliError> {
    let n = ctx.n;
    let phi = DualVector::new(ctx.phi.clone());
    let set = idempotent_set(&ctx.alg)?;
    let mut rng = ChaCha8Rng::seed_from_u64(IDEMPOTENT_SEED);
    let mut agree = 0;
    let mut idempotents = vec![canonical_left_identity(&ctx.alg)?];
    for s in 0..IDEMPOTENT_SAMPLES {
        let mut a: Vec<GR> = (0..n)
            .map(|_| GR::from_parts((rng.gen_range(-4..=4), rng.gen_range(1..=3)), (rng.gen_range(-2..=2), 1)))
            .collect();
        if s == 0 {
            a = vec![GR::zero(); n];
        } else if s % 2 == 1 {
            // rescale onto φ = 1 when possible
            if let Some(inv) = phi.pair(&a).inv() {
                a = a.iter().map(|x| x * &inv).collect();
            }
        }
        let predicted = a.iter().all(Zero::is_zero) || phi.pair(&a).is_one();
        let actual = is_idempotent(&ctx.alg, &a)?;
        if actual == predicted && set.contains(&a)? == predicted {
            agree += 1;
        }
        if actual && !a.iter().all(Zero::is_zero) {
            idempotents.push(Vector::new(a));
        }
    }
    let mut minimal = 0;
    for p in &idempotents {
        if is_minimal_idempotent(&ctx.alg, p)? {
            minimal += 1;
        }
    }
    Ok(vec![
        Claim::check(
            "idempotents.sample",
            "The idempotents of A are 0 and the hyperplane {a : φ(a) = 1}.",
            agree == IDEMPOTENT_SAMPLES,
            format!("{agree}/{IDEMPOTENT_SAMPLES} seeded samples agree (seed {IDEMPOTENT_SEED:#x})"),
        ),
        Claim::check(
            "idempotents.minimal",
            "Every nonzero idempotent p is minimal: pAp = ℂp.",
            minimal == idempotents.len(),
            format!("{minimal}/{} nonzero idempotents minimal", idempotents.len()),
        ),
    ])
}

fn ideal_candidates(n: usize, ker: &Subspace) -> Vec<Subspace> {
    let mut out: Vec<Subspace> = if n <= EXHAUSTIVE_IDEAL_DIM {
        (0u32..1 << n)
            .map(|mask| {
                let idx: Vec<usize> = (0..n).filter(|&i| mask & (1 << i) != 0).collect();
                Subspace::coordinate(n, &idx)
            })
            .collect()
    } else {
        let mut v = vec![Subspace::zero(n), Subspace::full(n)];
        for i in 0..n {
            v.push(Subspace::coordinate(n, &[i]));
            let rest: Vec<usize> = (0..n).filter(|&j| j != i).collect();
            v.push(Subspace::coordinate(n, &rest));
        }
        v
    };
    out.push(ker.clone());
    out
}

fn ideal_section(ctx: &Ctx) -> Result<Vec<Claim>, CliError> {
    let candidates = ideal_candidates(ctx.n, &ctx.ker);
    let (mut left, mut right, mut modular) = (0, 0, 0);
    let (mut right_count, mut modular_count) = (0, 0);
    for i in &candidates {
        let is_a = i.is_full();
        let in_ker = i.is_subspace_of(&ctx.ker)?;
        let r = is_right_ideal(&ctx.alg, i)?;
        let m = is_modular_left_ideal(&ctx.alg, i)?;
        left += usize::from(is_left_ideal(&ctx.alg, i)?);
        right += usize::from(r == (is_a || in_ker));
        modular += usize::from(m == (is_a || *i == ctx.ker));
        right_count += usize::from(r);
        modular_count += usize::from(m);
    }
    let total = candidates.len();
    let scope = if ctx.n <= EXHAUSTIVE_IDEAL_DIM {
        "all coordinate subspaces plus ker φ"
    } else {
        "coordinate lines, hyperplanes, 0, A and ker φ"
    };
    Ok(vec![
        Claim::check(
            "ideals.left",
            "Every subspace of A is a left ideal.",
            left == total,
            format!("{left}/{total} candidates ({scope})"),
        ),
        Claim::check(
            "ideals.right",
            "A subspace I is a right ideal iff I = A or I ⊆ ker φ.",
            right == total,
            format!("{right}/{total} classified as predicted, {right_count} right ideals"),
        ),
        Claim::check(
            "ideals.modular_left",
            "A left ideal I is modular iff I = A or I = ker φ.",
            modular == total,
            format!("{modular}/{total} classified as predicted, {modular_count} modular"),
        ),
    ])
}

fn multiplier_section(ctx: &Ctx) -> Result<Vec<Claim>, CliError> {
    let n = ctx.n;
    let left = multipliers(&ctx.alg, Side::Left);
    let right = multipliers(&ctx.alg, Side::Right);
    Ok(vec![
        Claim::check(
            "multipliers.left",
            "The left multipliers are the scalar multiples of the identity.",
            left.dim() == 1 && left.contains_map(&Matrix::identity(n))?,
            format!("dim {}", left.dim()),
        ),
        Claim::check(
            "multipliers.right",
            "Every linear map on A is a right multiplier.",
            right.dim() == n * n,
            format!("dim {} of {}", right.dim(), n * n),
        ),
    ])
}

fn isomorphism_section(ctx: &Ctx) -> Result<Vec<Claim>, CliError> {
    let n = ctx.n;
    let two = GR::from_int(2);
    let half = GR::from_ratio(1, 2);
    let target = Algebra::phi_algebra(DualVector::new(ctx.phi.iter().map(|x| x * &half).collect()))?;
    let t = Matrix::identity(n).scale(&two);
    let scaling = check_isomorphism(&t, &ctx.alg, &target)?;
    let identity_fails = !check_isomorphism(&Matrix::identity(n), &ctx.alg, &target)?;
    let twin = "_φA ≅ _ψA for some ψ linearly independent of φ.";
    Ok(vec![
        Claim::check(
            "isomorphism.scaling",
            "a ↦ 2a is an isomorphism from _φA onto _(φ/2)A.",
            scaling && identity_fails,
            format!("2I iso: {}; identity rejected: {}", yes_no(scaling), yes_no(identity_fails)),
        ),
        if n < 2 {
            Claim::skipped("isomorphism.independent_functional", twin, "requires dim ≥ 2")
        } else {
            match independent_isomorphic_functional(&ctx.alg)? {
                Some((t, psi)) => {
                    let b = Algebra::phi_algebra(psi.clone())?;
                    Claim::check(
                        "isomorphism.independent_functional",
                        twin,
                        check_isomorphism(&t, &ctx.alg, &b)?,
                        format!("ψ = {}", vec_text(&psi)),
                    )
                }
                None => Claim::check("isomorphism.independent_functional", twin, false, "no candidate map found"),
            }
        },
    ])
}

fn norm_section(ctx: &Ctx) -> Result<Vec<Claim>, CliError> {
    let statement = "‖φ‖∞ ≤ 1, so the ℓ¹ norm on coordinates is submultiplicative.";
    if !ctx.norm_requested {
        return Ok(vec![Claim::skipped("norm.admissible", statement, "norm check not requested")]);
    }
    let r = norm_check(&ctx.alg)?;
    Ok(vec![Claim::check(
        "norm.admissible",
        statement,
        r.admissible,
        format!("max |φᵢ|² = {}", rational_to_text(&r.max_modulus_sqr)),
    )])
}

/// Target module for `derivations --module`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ModuleChoice {
    Regular,
    Dual(usize),
}

impl ModuleChoice {
    pub fn level(self) -> usize {
        match self {
            ModuleChoice::Regular => 0,
            ModuleChoice::Dual(k) => k,
        }
    }
}

impl FromStr for ModuleChoice {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "regular" {
            return Ok(ModuleChoice::Regular);
        }
        s.strip_prefix("dual:")
            .and_then(|k| k.parse().ok())
            .map(ModuleChoice::Dual)
            .ok_or_else(|| format!("expected `regular` or `dual:K`, got {s:?}"))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Command {
    H1 { dual: usize },
    Derivations { module: ModuleChoice },
    Arens { depth: usize },
    Radical,
    Multipliers { side: Side },
    Ideals { subspace: Subspace },
}

fn check_level(k: usize) -> Result<(), CliError> {
    if k > MAX_DUAL_LEVEL {
        return Err(CliError::ResourceCap(format!("dual level {k} exceeds {MAX_DUAL_LEVEL}")));
    }
    Ok(())
}

fn side_name(side: Side) -> &'static str {
    match side {
        Side::Left => "left",
        Side::Right => "right",
    }
}

/// A single analysis. Claims are limited to what the command computes; raw
/// results go in `data`.
pub fn run_command(spec: &AlgebraSpec, command: &Command, options: &ReportOptions) -> Result<Report, CliError> {
    check_cap(spec, options)?;
    let alg = spec.algebra()?;
    let n = alg.dim();
    let ker = phi_kernel(&alg)?;
    let ctx = Ctx {
        n,
        phi: spec.phi_coords(),
        ker: ker.clone(),
        norm_requested: false,
        profile: OnceLock::new(),
        alg: alg.clone(),
    };
    let (name, claims, data) = match command {
        Command::H1 { dual } => {
            check_level(*dual)?;
            let s = h1(&Bimodule::nth_dual(&alg, *dual)?)?;
            let expected = phi_h1_closed_form(n, *dual);
            let claim = Claim::check(
                &format!("h1.dual_{dual}"),
                "dim H¹(A, A^(k)) is 0 for odd k and n(n−2) for even k (0 when n ≤ 2).",
                s.h1_dim == expected,
                format!("computed {}, expected {expected}", s.h1_dim),
            );
            let data = json!({"dual": dual, "z1_dim": s.z1.dim(), "b1_dim": s.b1.dim(), "h1_dim": s.h1_dim});
            ("h1", vec![claim], data)
        }
        Command::Derivations { module } => {
            let k = module.level();
            check_level(k)?;
            let s = h1(&Bimodule::nth_dual(&alg, k)?)?;
            let expected = phi_z1_closed_form(n, k);
            let claim = Claim::check(
                &format!("derivations.dual_{k}"),
                "dim Z¹(A, A^(k)) is n−1 for odd k and n(n−1) for even k.",
                s.z1.dim() == expected,
                format!("computed {}, expected {expected}; dim B¹ = {}", s.z1.dim(), s.b1.dim()),
            );
            let to_maps = |space: &Subspace| -> Result<Vec<Vec<Vec<[String; 2]>>>, CliError> {
                space
                    .basis_vectors()
                    .map(|v| Ok(map_rows(&Matrix::from_entries(n, n, v.to_vec())?)))
                    .collect()
            };
            let data = json!({
                "module": k,
                "z1_dim": s.z1.dim(),
                "b1_dim": s.b1.dim(),
                "h1_dim": s.h1_dim,
                "z1_basis": to_maps(&s.z1)?,
                "b1_basis": to_maps(&s.b1)?,
            });
            ("derivations", vec![claim], data)
        }
        Command::Arens { depth } => {
            let levels = bidual_tower_regularity(&alg, *depth)?;
            let r = arens_products(&alg);
            let claim = Claim::check(
                "arens.regular",
                "The two Arens products on A** coincide and equal m□n = ⟨m, φ⟩n.",
                r.regular && r.matches_phi_form == Some(true),
                format!("tower depth {depth}"),
            );
            let tower = Claim::check(
                "arens.tower",
                "Iterating A ↦ (A**, □) keeps Arens regularity and the original product.",
                levels.iter().all(|l| l.regular && l.matches_base),
                format!("{} levels", levels.len()),
            );
            let rows: Vec<Value> = levels
                .iter()
                .map(|l| json!({"level": l.level, "regular": l.regular, "matches_base": l.matches_base}))
                .collect();
            ("arens", vec![claim, tower], json!({ "levels": rows }))
        }
        Command::Radical => {
            let claims = radical_section(&ctx)?;
            let rad = radical(&alg);
            let basis: Vec<_> = rad.basis_vectors().map(text_pairs).collect();
            ("radical", claims, json!({"dim": rad.dim(), "basis": basis}))
        }
        Command::Multipliers { side } => {
            let claims: Vec<Claim> = multiplier_section(&ctx)?
                .into_iter()
                .filter(|c| c.claim_id.ends_with(side_name(*side)))
                .collect();
            let space = multipliers(&alg, *side);
            let maps: Vec<_> = space.maps(n).iter().map(map_rows).collect();
            ("multipliers", claims, json!({"side": side_name(*side), "dim": space.dim(), "basis": maps}))
        }
        Command::Ideals { subspace } => {
            if subspace.ambient_dim() != n {
                return Err(CliError::Domain(format!(
                    "subspace lives in dimension {} but dim is {n}",
                    subspace.ambient_dim()
                )));
            }
            let is_a = subspace.is_full();
            let left = is_left_ideal(&alg, subspace)?;
            let right = is_right_ideal(&alg, subspace)?;
            let witness = phialg_core::bimodule::modular_left_ideal_witness(&alg, subspace)?;
            let claims = vec![
                Claim::check("ideals.left", "Every subspace of A is a left ideal.", left, format!("left ideal: {}", yes_no(left))),
                Claim::check(
                    "ideals.right",
                    "A subspace I is a right ideal iff I = A or I ⊆ ker φ.",
                    right == (is_a || subspace.is_subspace_of(&ker)?),
                    format!("right ideal: {}", yes_no(right)),
                ),
                Claim::check(
                    "ideals.modular_left",
                    "A left ideal I is modular iff I = A or I = ker φ.",
                    witness.is_some() == (is_a || *subspace == ker),
                    format!("modular: {}", yes_no(witness.is_some())),
                ),
            ];
            let data = json!({
                "dim": subspace.dim(),
                "left": left,
                "right": right,
                "modular_left": witness.is_some(),
                "modular_unit": witness.as_deref().map(text_pairs),
            });
            ("ideals", claims, data)
        }
    };
    let mut report = Report::new(name, spec);
    report.claims = claims;
    report.data = Some(data);
    Ok(report)
}
