//! Executable checks: membership in `U(g, f)`, graded symbols against the
//! centralizer elements `ζ_i^{j,t}`, generation of `g^f`, and the operator
//! identities relating `Y`, `Z` and `L_R(z)`.
//!
//! Every check is exact. A failing check carries a [`Witness`] naming the
//! first offending index in a fixed order.

use std::fmt;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::laurent::{Frame, LaurentMatrix, LaurentPoly};
use crate::lax::{extract_generators, extract_main, main_orders, ExtractOptions, GeneratorRecord, Mode, RecordJson};
use crate::liealg::{bracket_closure, Combination, Kind, Realization};
use crate::linalg::QMatrix;
use crate::pyramid::{Half, Partition};
use crate::scalar::{sign, Q};
use crate::uea::{QuotientElement, Uea, UeaElement};

/// Where a check failed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub realization: String,
    pub indices: String,
    pub element: String,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at {}: {}", self.realization, self.indices, self.element)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail(Witness),
}

impl Verdict {
    pub fn passed(&self) -> bool {
        matches!(self, Verdict::Pass)
    }

    pub fn witness(&self) -> Option<&Witness> {
        match self {
            Verdict::Pass => None,
            Verdict::Fail(w) => Some(w),
        }
    }
}

fn fail(r: &Realization, indices: String, element: String) -> Verdict {
    Verdict::Fail(Witness { realization: r.id(), indices, element })
}

/// First `m` (in basis order) from `ms` with `[m, w] ≠ 0` in `U(g)/J`.
fn first_noninvariant(u: &Uea, w: &QuotientElement, ms: &[usize]) -> Result<Verdict> {
    for &m in ms {
        let v = u.adjoint_action(m, w)?;
        if !v.is_zero() {
            return Ok(fail(u.realization(), format!("m = {}", u.name(m)), u.format(v.lift())));
        }
    }
    Ok(Verdict::Pass)
}

/// Passes iff `[m, w] = 0` for every basis element `m` of `g_{≥1}`.
/// Requires an even grading.
pub fn check_membership(u: &Uea, w: &QuotientElement) -> Result<Verdict> {
    u.realization().require_even()?;
    first_noninvariant(u, w, &u.realization().positive_part())
}

/// Invariance under all of `g_{≥1/2}`; the defining condition of `U(g, f)`
/// for any grading.
pub fn check_invariance(u: &Uea, w: &QuotientElement) -> Result<Verdict> {
    let r = u.realization();
    let ms: Vec<usize> = (0..r.dim()).filter(|&i| r.grade(i) > Half::ZERO).collect();
    first_noninvariant(u, w, &ms)
}

/// The `±ζ_i^{j,t}` a record's graded symbol should equal.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ZetaPrediction {
    pub i: usize,
    pub j: usize,
    pub t: usize,
    pub sign: i64,
}

fn int_of(h: Half) -> Result<i64> {
    h.to_int().map(i64::from).ok_or_else(|| Error::HalfIntegerSign(h.to_string()))
}

/// The predicted symbol of an `L_k` or `L_{k;R}` record: `i = row(c)`,
/// `j = row(d)`, with `t = λ_i - p` and sign `(-1)^{p+λ_i}` for `L_k`, and
/// `t = (λ_i+λ_j)/2 - p` and sign `(-1)^{e_l+1+p+λ_j}` for `L_{k;R}`,
/// where `e_l` is the column of `c` in the pyramid of `g^k`.
pub fn predict_zeta(r: &Realization, rec: &GeneratorRecord) -> Result<ZetaPrediction> {
    let py = r.pyramid();
    let (i, j) = (py.row(rec.c), py.row(rec.d));
    let (li, lj) = (py.row_len(i) as i64, py.row_len(j) as i64);
    let p = int_of(rec.p)?;
    let (t, e) = match rec.mode {
        Mode::Lk => (li - p, p + li),
        Mode::LkR => {
            if (li + lj) % 2 != 0 {
                return Err(Error::HalfIntegerSign(format!("e_l = {}", Half((li + lj) as i32))));
            }
            let e_l = (li + lj) / 2;
            (e_l - p, e_l + 1 + p + lj)
        }
        m => return Err(Error::NotApplicable(format!("no graded symbol is predicted for {m} records"))),
    };
    if t < 0 {
        return Err(Error::ZetaIndex(format!("t = {t} for p = {}", rec.p)));
    }
    let s = if sign(e) == Q::one() { 1 } else { -1 };
    Ok(ZetaPrediction { i, j, t: t as usize, sign: s })
}

/// `ζ_i^{j,t}`, with the zero element for vanishing ones.
fn zeta_or_zero(r: &Realization, i: usize, j: usize, t: usize) -> Result<Combination> {
    match r.zeta(i, j, t) {
        Ok(z) => Ok(z),
        Err(Error::ZeroZeta { .. }) => Ok(Vec::new()),
        Err(e) => Err(e),
    }
}

/// The part of a record in filtration degree `p - 1`, without its
/// constant term.
pub fn symbol_part(u: &Uea, rec: &GeneratorRecord) -> UeaElement {
    let mut part = u.homogeneous_part(rec.value.lift(), rec.p - Half::int(1));
    let c = part.constant();
    part.add_term(Vec::new(), -c);
    part
}

/// Compares the graded symbol of `rec` with `pred`: nothing may exceed
/// degree `p - 1`, and the degree `p - 1` part (modulo scalars) must be
/// `sign · ζ_i^{j,t}`.
pub fn check_gr_against(u: &Uea, rec: &GeneratorRecord, pred: &ZetaPrediction) -> Result<Verdict> {
    let r = u.realization();
    let at = format!("{} c={} d={} p={}", rec.mode, rec.c, rec.d, rec.p);
    if let Ok((top, _)) = u.gr_symbol(rec.value.lift()) {
        if top > rec.p - Half::int(1) {
            return Ok(fail(r, at, format!("degree {top} exceeds p - 1")));
        }
    }
    let want = UeaElement::linear(&zeta_or_zero(r, pred.i, pred.j, pred.t)?).scale(&sign(i64::from(pred.sign != 1)));
    let got = symbol_part(u, rec);
    if got == want {
        Ok(Verdict::Pass)
    } else {
        let sgn = if pred.sign == 1 { "+" } else { "-" };
        Ok(fail(r, at, format!("symbol {} but expected {sgn}zeta_{}^{{{},{}}} = {}", u.format(&got), pred.i, pred.j, pred.t, u.format(&want))))
    }
}

/// [`check_gr_against`] with the predicted symbol.
pub fn check_gr_zeta(u: &Uea, rec: &GeneratorRecord) -> Result<Verdict> {
    check_gr_against(u, rec, &predict_zeta(u.realization(), rec)?)
}

/// The nonzero degree `p - 1` symbols of `L_k` and `L_{k;R}` records, as
/// elements of `g`.
pub fn obtained_symbols(u: &Uea, records: &[GeneratorRecord]) -> Vec<Combination> {
    records
        .iter()
        .filter(|x| matches!(x.mode, Mode::Lk | Mode::LkR))
        .map(|x| symbol_part(u, x))
        .filter(|s| !s.is_zero() && s.max_length() == 1)
        .map(|s| s.linear_part())
        .collect()
}

/// Passes iff the Lie algebra generated by the records' symbols contains
/// every element of the standard basis of `g^f`.
pub fn check_generation(u: &Uea, records: &[GeneratorRecord]) -> Result<Verdict> {
    let r = u.realization();
    let span = bracket_closure(r, &obtained_symbols(u, records));
    for (i, j, t) in r.centralizer_basis() {
        let z = r.zeta(i, j, t)?;
        if !span.contains(&r.dense(&z)) {
            return Ok(fail(r, format!("zeta_{i}^{{{j},{t}}}"), format!("not generated (closure has rank {})", span.rank())));
        }
    }
    Ok(Verdict::Pass)
}

/// Checks `[ζ_i^{k,s}, ζ_k^{j,t}] = -ζ_i^{j, s+t-(λ_k-1)}` on matrices for
/// all rows with `λ_i < λ_k < λ_j`, `s < λ_i`, `t < λ_k`; the right side is
/// zero when the index is negative. Returns the number of instances.
pub fn check_zeta_brackets(r: &Realization) -> Result<(usize, Verdict)> {
    let py = r.pyramid();
    let n = py.n_rows();
    let mut count = 0;
    for i in 1..=n {
        for k in 1..=n {
            for j in 1..=n {
                let (li, lk, lj) = (py.row_len(i), py.row_len(k), py.row_len(j));
                if !(li < lk && lk < lj) {
                    continue;
                }
                for s in 0..li {
                    for t in 0..lk {
                        count += 1;
                        let x = r.combination_matrix(&zeta_or_zero(r, i, k, s)?);
                        let y = r.combination_matrix(&zeta_or_zero(r, k, j, t)?);
                        let lhs = x.commutator(&y);
                        let idx = (s + t) as i64 - (lk as i64 - 1);
                        let rhs = if idx >= 0 {
                            r.combination_matrix(&zeta_or_zero(r, i, j, idx as usize)?).scale(&-Q::one())
                        } else {
                            QMatrix::zeros(r.n(), r.n())
                        };
                        if lhs != rhs {
                            return Ok((count, fail(r, format!("i={i} k={k} j={j} s={s} t={t}"), "bracket differs".into())));
                        }
                    }
                }
            }
        }
    }
    Ok((count, Verdict::Pass))
}

fn reduce_matrix(u: &Uea, m: &LaurentMatrix) -> LaurentMatrix {
    m.map(|x| u.reduce(x).into_lift())
}

/// First entry and exponent (highest first) where two matrices differ at
/// exponents `≥ t`.
fn first_difference(u: &Uea, x: &LaurentMatrix, y: &LaurentMatrix, t: i32) -> Option<(usize, usize, i32, String)> {
    let diff = x.truncated(t).sub(&y.truncated(t));
    let mut best: Option<(usize, usize, i32, String)> = None;
    for (a, b, p) in diff.entries() {
        if let Some((e, v)) = p.terms().last() {
            if best.as_ref().is_none_or(|x| e > x.2) {
                best = Some((a, b, e, u.format(v)));
            }
        }
    }
    best
}

fn matrix_of_scalars(rows: &[usize], cols: &[usize], m: &QMatrix) -> LaurentMatrix {
    let mut out = LaurentMatrix::zeros(rows.to_vec(), cols.to_vec());
    for &a in rows {
        for &b in cols {
            let v = m.get(a - 1, b - 1);
            if !v.is_zero() {
                out.set(a, b, LaurentPoly::scalar(v.clone()));
            }
        }
    }
    out
}

fn require_exact(m: &LaurentMatrix, t: i32, what: &str) -> Result<()> {
    match m.floor() {
        Some(f) if f > t => Err(Error::BelowFloor(Half(t).to_string(), format!("{} ({what})", Half(f)))),
        _ => Ok(()),
    }
}

/// The two sides `Π Z Ψ_> · X` and `Π Z Ψ_{-ξ/2}` of the Z/Y identity,
/// reduced, with `X` standing for `L_R 1̄`.
fn zy_sides(u: &Uea, x: &LaurentMatrix, floor: i32) -> Result<(LaurentMatrix, LaurentMatrix)> {
    let f = Frame::full(u);
    let z = f.z();
    let (upper, lower, bottom) = (f.upper(), f.lower(), f.bottom_boxes());
    let zl = z.block(|a| upper.contains(&a), |b| lower.contains(&b));
    let zr = z.block(|a| upper.contains(&a), |b| bottom.contains(&b));
    let lhs = reduce_matrix(u, &zl.mul(x, u, None));
    require_exact(&lhs, floor, "Z L_R")?;
    Ok((lhs, reduce_matrix(u, &zr)))
}

fn zy_with(u: &Uea, x: &LaurentMatrix, floor: i32) -> Result<Verdict> {
    let (lhs, rhs) = zy_sides(u, x, floor)?;
    Ok(match first_difference(u, &lhs, &rhs, floor) {
        None => Verdict::Pass,
        Some((a, b, e, v)) => fail(u.realization(), format!("entry {b}→{a}, z^{}", Half(e)), v),
    })
}

/// `(Π Z Ψ_>)^{-1} Π Z Ψ_{-ξ/2} 1̄ = L_R(z) 1̄`, checked as
/// `Π Z Ψ_> · L_R 1̄ = Π Z Ψ_{-ξ/2} 1̄` at exponents `≥ floor`.
pub fn check_zy(u: &Uea, floor: i32) -> Result<Verdict> {
    let zmax = Frame::full(u).z().max_exponent().unwrap_or(0).max(0);
    let x = reduce_matrix(u, &Frame::full(u).lax_right(floor - zmax));
    zy_with(u, &x, floor)
}

/// `[m, Z] = z^{-δ(m)} [Z, φ(m)]` exactly, for every basis element `m`.
pub fn check_skv1(u: &Uea) -> Result<Verdict> {
    let r = u.realization();
    let f = Frame::full(u);
    let z = f.z();
    let boxes = f.boxes().to_vec();
    for m in 0..r.dim() {
        let gm = UeaElement::generator(m);
        let lhs = z.map(|x| u.commutator(&gm, x));
        let phi = matrix_of_scalars(&boxes, &boxes, r.image(m));
        let rhs = z.mul(&phi, u, None).sub(&phi.mul(&z, u, None)).shifted(-r.grade(m).doubled());
        if lhs != rhs {
            let (a, b, e, v) = first_difference(u, &lhs, &rhs, i32::MIN).expect("matrices differ");
            return Ok(fail(r, format!("m = {}, entry {b}→{a}, z^{}", u.name(m), Half(e)), v));
        }
    }
    Ok(Verdict::Pass)
}

/// For `m ∈ g_{≥1}`:
/// `[m, L_R] 1̄ = z^{-δ(m)} (Π_> φ(m) Ψ_{-ξ/2} - Π_> φ(m) Ψ_> L_R) 1̄`
/// at exponents `≥ floor`.
pub fn check_help(u: &Uea, floor: i32) -> Result<Verdict> {
    let r = u.realization();
    let f = Frame::full(u);
    let x = reduce_matrix(u, &f.lax_right(floor));
    let (lower, bottom) = (f.lower(), f.bottom_boxes());
    for m in r.positive_part() {
        let mut lhs = LaurentMatrix::zeros(lower.clone(), bottom.clone());
        for (a, b, p) in x.entries() {
            let mut q = LaurentPoly::zero().truncated(p.floor());
            for (e, c) in p.terms() {
                let v = u.adjoint_action(m, &u.reduce(c))?;
                q.add_term(e, v.lift());
            }
            lhs.set(a, b, q);
        }
        let phi_b = matrix_of_scalars(&lower, &bottom, r.image(m));
        let phi_l = matrix_of_scalars(&lower, &lower, r.image(m));
        let rhs = reduce_matrix(u, &phi_b.sub(&phi_l.mul(&x, u, None)).shifted(-r.grade(m).doubled()));
        require_exact(&rhs, floor, "help")?;
        if let Some((a, b, e, v)) = first_difference(u, &lhs, &rhs, floor) {
            return Ok(fail(r, format!("m = {}, entry {b}→{a}, z^{}", u.name(m), Half(e)), v));
        }
    }
    Ok(Verdict::Pass)
}

/// Outcome of one named check on one realization.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub check: String,
    pub realization: String,
    pub passed: bool,
    pub detail: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl CheckResult {
    fn new(check: &str, r: &Realization, v: Verdict, detail: String) -> CheckResult {
        CheckResult { check: check.into(), realization: r.id(), passed: v.passed(), detail, witness: v.witness().cloned() }
    }
}

/// Results of a suite, in a fixed order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub passed: bool,
    pub checks: Vec<CheckResult>,
}

impl VerificationReport {
    pub fn new(suite: &str, checks: Vec<CheckResult>) -> VerificationReport {
        VerificationReport { suite: suite.into(), passed: checks.iter().all(|c| c.passed), checks }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for c in &self.checks {
            let tag = if c.passed { "PASS" } else { "FAIL" };
            s.push_str(&format!("{tag} {} {}: {}\n", c.realization, c.check, c.detail));
            if let Some(w) = &c.witness {
                s.push_str(&format!("     witness {w}\n"));
            }
        }
        let n = self.checks.iter().filter(|c| c.passed).count();
        s.push_str(&format!("{}: {n}/{} checks passed\n", self.suite, self.checks.len()));
        s
    }
}

/// Knobs for [`verify_realization`].
#[derive(Clone, Copy, Debug)]
pub struct VerifyOptions {
    /// Floor (doubled exponent) for the operator identities.
    pub floor: i32,
    pub extract: ExtractOptions,
}

impl Default for VerifyOptions {
    fn default() -> VerifyOptions {
        VerifyOptions { floor: -10, extract: ExtractOptions::default() }
    }
}

/// Names accepted by [`run_check`].
pub const CHECKS: &[&str] = &["membership", "gr", "generation", "zy", "skv1", "help", "identities", "zeta-brackets", "all"];

/// Generator records appropriate to the realization: the `L_k`/`L_{k;R}`
/// records for `so`/`sp`, the `T_main` records for `gl`.
pub fn records_for(u: &Uea, opts: &VerifyOptions) -> Result<Vec<GeneratorRecord>> {
    let r = u.realization();
    if r.kind() == Kind::Gl {
        let l1 = Half::int(r.pyramid().lambda1() as i32);
        let p_max = opts.extract.p_max.unwrap_or(l1);
        let floor = opts.extract.floor.unwrap_or(-2 * (r.pyramid().lambda1() as i32 + 1)).min(-p_max.doubled());
        extract_main(u, &main_orders(r, p_max), floor)
    } else {
        extract_generators(u, opts.extract)
    }
}

/// Membership and graded-symbol verdicts for one record, as serialized
/// by the `gens` command.
pub fn annotate(u: &Uea, rec: &GeneratorRecord) -> Result<RecordJson> {
    let r = u.realization();
    let mut j = rec.to_json(r);
    let member = if r.even_grading() { check_membership(u, &rec.value)? } else { check_invariance(u, &rec.value)? };
    j.member = Some(member.passed());
    if matches!(rec.mode, Mode::Lk | Mode::LkR) {
        j.gr_check = Some(check_gr_zeta(u, rec)?.passed());
    }
    Ok(j)
}

/// Output of the `gens` command.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GensReport {
    pub realization: String,
    #[serde(rename = "pMax")]
    pub p_max: String,
    pub floor: String,
    pub records: Vec<RecordJson>,
    #[serde(skip)]
    lines: Vec<String>,
}

impl GensReport {
    pub fn new(u: &Uea, opts: &VerifyOptions) -> Result<GensReport> {
        let r = u.realization();
        let l1 = r.pyramid().lambda1() as i32;
        let p_max = opts.extract.p_max.unwrap_or(Half::int(l1));
        let floor = opts.extract.floor.unwrap_or(-2 * (l1 + 1)).min(-p_max.doubled());
        let mut records = Vec::new();
        let mut lines = Vec::new();
        for rec in records_for(u, opts)? {
            let j = annotate(u, &rec)?;
            let yn = |b: Option<bool>| match b {
                Some(true) => "yes",
                Some(false) => "NO",
                None => "-",
            };
            lines.push(format!(
                "{} c={} d={} k={} p={}  member={} gr={}\n    {}",
                rec.mode, rec.c, rec.d, rec.k, rec.p, yn(j.member), yn(j.gr_check), u.format(rec.value.lift())
            ));
            records.push(j);
        }
        Ok(GensReport { realization: r.id(), p_max: p_max.to_string(), floor: Half(floor).to_string(), records, lines })
    }

    /// True iff every record is a member and every predicted symbol matched.
    pub fn passed(&self) -> bool {
        self.records.iter().all(|j| j.member != Some(false) && j.gr_check != Some(false))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("records serialize")
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("{}: {} records (p <= {}, floor z^{})\n", self.realization, self.records.len(), self.p_max, self.floor);
        for l in &self.lines {
            s.push_str(l);
            s.push('\n');
        }
        s
    }
}

fn membership_result(u: &Uea, recs: &[GeneratorRecord]) -> Result<CheckResult> {
    let r = u.realization();
    let mut order: Vec<&GeneratorRecord> = recs.iter().collect();
    order.sort_by_key(|x| (x.p, x.c, x.d));
    for x in order {
        let v = if r.even_grading() { check_membership(u, &x.value)? } else { check_invariance(u, &x.value)? };
        if let Verdict::Fail(mut w) = v {
            w.indices = format!("{} c={} d={} p={}, {}", x.mode, x.c, x.d, x.p, w.indices);
            return Ok(CheckResult::new("membership", r, Verdict::Fail(w), format!("{} records", recs.len())));
        }
    }
    Ok(CheckResult::new("membership", r, Verdict::Pass, format!("{} records", recs.len())))
}

fn gr_result(u: &Uea, recs: &[GeneratorRecord]) -> Result<CheckResult> {
    let r = u.realization();
    let mut n = 0;
    for x in recs.iter().filter(|x| matches!(x.mode, Mode::Lk | Mode::LkR)) {
        n += 1;
        let v = check_gr_zeta(u, x)?;
        if !v.passed() {
            return Ok(CheckResult::new("gr", r, v, format!("{n} symbols")));
        }
    }
    Ok(CheckResult::new("gr", r, Verdict::Pass, format!("{n} symbols")))
}

/// Runs one named check (or `all`, or `identities`) on a realization.
pub fn run_check(check: &str, u: &Uea, opts: &VerifyOptions) -> Result<Vec<CheckResult>> {
    let r = u.realization();
    let classical = r.kind() != Kind::Gl;
    let mut out = Vec::new();
    let want = |name: &str| check == name || check == "all";
    if !CHECKS.contains(&check) {
        return Err(Error::UnknownSuite(check.into()));
    }
    let needs_records = want("membership") || (classical && (want("gr") || want("generation")));
    let recs = if needs_records { records_for(u, opts)? } else { Vec::new() };
    if want("membership") {
        out.push(membership_result(u, &recs)?);
    }
    if classical && want("gr") {
        out.push(gr_result(u, &recs)?);
    }
    if classical && want("generation") {
        let n = r.centralizer_basis().len();
        out.push(CheckResult::new("generation", r, check_generation(u, &recs)?, format!("g^f of dimension {n}")));
    }
    let t = format!("floor z^{}", Half(opts.floor));
    if want("zy") || want("identities") {
        out.push(CheckResult::new("zy", r, check_zy(u, opts.floor)?, t.clone()));
    }
    if want("skv1") || want("identities") {
        out.push(CheckResult::new("skv1", r, check_skv1(u)?, "exact".into()));
    }
    if want("help") || want("identities") {
        out.push(CheckResult::new("help", r, check_help(u, opts.floor)?, t));
    }
    if want("zeta-brackets") {
        let (n, v) = check_zeta_brackets(r)?;
        out.push(CheckResult::new("zeta-brackets", r, v, format!("{n} instances")));
    }
    if check != "all" && out.is_empty() {
        return Err(Error::NotApplicable(format!("{check} on {}", r.id())));
    }
    Ok(out)
}

/// The fixed set of realizations of the `standard` suite.
pub const STANDARD_MANIFEST: &[(Kind, &[usize])] = &[
    (Kind::Orthogonal, &[3, 1]),
    (Kind::Orthogonal, &[5, 3]),
    (Kind::Orthogonal, &[3, 3]),
    (Kind::Orthogonal, &[2, 2]),
    (Kind::Symplectic, &[2]),
    (Kind::Symplectic, &[2, 2]),
    (Kind::Symplectic, &[4, 2]),
    (Kind::Symplectic, &[3, 3]),
    (Kind::Gl, &[3, 1]),
];

/// Suite names accepted by [`run_suite`].
pub const SUITES: &[&str] = &["standard", "quick"];

fn build(kind: Kind, parts: &[usize]) -> Result<Uea> {
    Ok(Uea::new(Realization::new(Partition::new(parts.to_vec())?, kind)?))
}

/// Runs a named suite. `standard` covers every check on the manifest plus
/// the zeta bracket rule on `so(5,3,1)`; `quick` runs only `so(3,1)`.
pub fn run_suite(name: &str, opts: &VerifyOptions) -> Result<VerificationReport> {
    let manifest: &[(Kind, &[usize])] = match name {
        "standard" => STANDARD_MANIFEST,
        "quick" => &STANDARD_MANIFEST[..1],
        _ => return Err(Error::UnknownSuite(name.into())),
    };
    let mut checks = Vec::new();
    for &(kind, parts) in manifest {
        let u = build(kind, parts)?;
        for c in run_check("all", &u, opts)? {
            if c.check != "zeta-brackets" {
                checks.push(c);
            }
        }
    }
    if name == "standard" {
        let u = build(Kind::Orthogonal, &[5, 3, 1])?;
        checks.extend(run_check("zeta-brackets", &u, opts)?);
    }
    Ok(VerificationReport::new(name, checks))
}
