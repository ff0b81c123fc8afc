//! The Lax type operators `L(z)`, `L_R(z)` and their truncations, the
//! explicit path-sum expansions of their coefficients, and generator
//! extraction.
//!
//! Coefficients are computed two ways: from the truncated geometric series
//! in [`crate::laurent`] ([`LaxOperators`]), and as signed sums over
//! [`PathTuple`]s ([`pathsum_l`], [`pathsum_lr`]). Both are reduced to
//! `U(g)/J` before comparison.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::OnceLock;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::laurent::{Frame, LaurentMatrix};
use crate::liealg::{combination_is_multiple, Realization};
use crate::pyramid::Half;
use crate::scalar::{fmt_q, sign, Q};
use crate::uea::{QuotientElement, Uea, UeaElement};

/// Which operator a path sum or generator comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Mode {
    L,
    #[serde(rename = "L_R")]
    LR,
    #[serde(rename = "L_k")]
    Lk,
    #[serde(rename = "L_k;R")]
    LkR,
    #[serde(rename = "T_main")]
    TMain,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::L => "L",
            Mode::LR => "L_R",
            Mode::Lk => "L_k",
            Mode::LkR => "L_k;R",
            Mode::TMain => "T_main",
        })
    }
}

/// `L(z)` and `L_R(z)` of one frame, computed once down to a floor.
#[derive(Debug)]
pub struct LaxOperators<'u> {
    frame: Frame<'u>,
    floor: i32,
    lr: OnceLock<LaurentMatrix>,
    l: OnceLock<LaurentMatrix>,
}

impl<'u> LaxOperators<'u> {
    pub fn new(frame: Frame<'u>, floor: i32) -> LaxOperators<'u> {
        LaxOperators { frame, floor, lr: OnceLock::new(), l: OnceLock::new() }
    }

    /// Operators of `g^k` and `f_k`; `k` must be a highest weight of `V`.
    pub fn truncated(uea: &'u Uea, k: Half, floor: i32) -> Result<LaxOperators<'u>> {
        require_highest_weight(uea.realization(), k)?;
        Ok(LaxOperators::new(Frame::truncated(uea, k)?, floor))
    }

    pub fn frame(&self) -> &Frame<'u> {
        &self.frame
    }

    pub fn floor(&self) -> i32 {
        self.floor
    }

    pub fn lax_right(&self) -> &LaurentMatrix {
        self.lr.get_or_init(|| self.frame.lax_right(self.floor))
    }

    pub fn lax(&self) -> &LaurentMatrix {
        self.l.get_or_init(|| self.frame.lax(self.floor))
    }

    fn extract(&self, m: &LaurentMatrix, c: usize, d: usize, p: Half) -> Result<QuotientElement> {
        let e = (-p).doubled();
        let x = m.get(c, d).coeff(e).map_err(|_| Error::BelowFloor(Half(e).to_string(), Half(self.floor).to_string()))?;
        Ok(self.frame.uea().reduce(&x))
    }

    /// The `z^{-p}` coefficient of `L(z)_{c,d}`, applied to `1̄`.
    pub fn l_coeff(&self, c: usize, d: usize, p: Half) -> Result<QuotientElement> {
        check_l_block(&self.frame, c, d)?;
        self.extract(self.lax(), c, d, p)
    }

    /// The `z^{-p}` coefficient of `L_R(z)_{c,d}`, applied to `1̄`.
    pub fn lr_coeff(&self, c: usize, d: usize, p: Half) -> Result<QuotientElement> {
        check_lr_block(&self.frame, c, d)?;
        self.extract(self.lax_right(), c, d, p)
    }
}

fn require_highest_weight(r: &Realization, k: Half) -> Result<()> {
    if r.lambda().parts().iter().any(|&l| l as i32 - 1 == k.doubled()) {
        Ok(())
    } else {
        Err(Error::NotHighestWeight(k.to_string()))
    }
}

fn check_l_block(f: &Frame, c: usize, d: usize) -> Result<()> {
    if f.contains(c) && f.contains(d) && f.col(c) == Half::int(1) && f.col(d) == f.lambda1() {
        Ok(())
    } else {
        Err(Error::WrongBlock(c, d))
    }
}

fn check_lr_block(f: &Frame, c: usize, d: usize) -> Result<()> {
    if f.contains(c) && f.contains(d) && f.col(c) < f.lambda1() && f.col(d) == f.lambda1() {
        Ok(())
    } else {
        Err(Error::WrongBlock(c, d))
    }
}

/// One monomial `Ȳ_{d_1,a_1} ⋯ Ȳ_{d_s,a_s}` of a path sum.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PathTuple {
    pub a: Vec<usize>,
    pub d: Vec<usize>,
}

impl PathTuple {
    pub fn len(&self) -> usize {
        self.a.len()
    }

    pub fn is_empty(&self) -> bool {
        self.a.is_empty()
    }

    /// Pairs `(d_i, a_i)`.
    pub fn factors(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.d.iter().copied().zip(self.a.iter().copied())
    }
}

/// Which operator's constraint list to enumerate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PathKind {
    L,
    LR,
}

/// All path tuples contributing to the `z^{-p}` coefficient of
/// `L(z)_{c,d}` or `L_R(z)_{c,d}` in the given frame.
pub fn enumerate_paths(f: &Frame, kind: PathKind, c: usize, d: usize, p: Half) -> Vec<PathTuple> {
    let mut out = Vec::new();
    if p.doubled() <= 0 {
        return out;
    }
    let mut cur = PathTuple { a: Vec::new(), d: Vec::new() };
    extend(f, kind, c, d, p.doubled(), &mut cur, &mut out);
    out
}

fn extend(f: &Frame, kind: PathKind, c: usize, d: usize, budget: i32, cur: &mut PathTuple, out: &mut Vec<PathTuple>) {
    let first = cur.a.is_empty();
    let prev = if first { c } else { *cur.a.last().unwrap() };
    let one = Half::int(1);
    for &di in f.boxes() {
        if f.row(di) != f.row(prev) {
            continue;
        }
        let linked = if first {
            match kind {
                PathKind::L => true,
                PathKind::LR => chain_ok(f, c, di),
            }
        } else {
            chain_ok(f, prev, di)
        };
        let needs_inner = kind == PathKind::LR || !first;
        if !linked || (needs_inner && f.col(di) <= one) {
            continue;
        }
        for &ai in f.boxes() {
            if f.col(di) > f.col(ai) + Half(1) {
                continue;
            }
            let cost = (f.col(ai) - f.col(di) + one).doubled();
            if cost > budget {
                continue;
            }
            cur.a.push(ai);
            cur.d.push(di);
            if cost == budget {
                if f.row(ai) == f.row(d) {
                    out.push(cur.clone());
                }
            } else if f.col(ai) < f.lambda1() {
                extend(f, kind, c, d, budget - cost, cur, out);
            }
            cur.a.pop();
            cur.d.pop();
        }
    }
}

/// `col(x) < col(y)` after a full-length row, `col(x) ≥ col(y)` otherwise.
fn chain_ok(f: &Frame, x: usize, y: usize) -> bool {
    if f.is_full(x) {
        f.col(x) < f.col(y)
    } else {
        f.col(x) >= f.col(y)
    }
}

fn parity(h: Half) -> Result<i64> {
    h.to_int().map(i64::from).ok_or_else(|| Error::HalfIntegerSign(h.to_string()))
}

/// The sign of one path-sum monomial, including the overall minus.
pub fn path_sign(f: &Frame, kind: PathKind, c: usize, t: &PathTuple) -> Result<Q> {
    let mut cols = t.a.iter().chain(&t.d).fold(Half::ZERO, |acc, &x| acc + f.col(x));
    let mut n = t.a.iter().filter(|&&x| !f.is_full(x)).count() as i64;
    if kind == PathKind::LR {
        cols = cols + f.col(c);
        n += i64::from(!f.is_full(c));
    }
    let e = parity(cols + f.lambda1())? + n;
    Ok(-sign(e))
}

/// `x_{d_1,a_1} ⋯ x_{d_s,a_s}` in `U(g)`.
pub fn path_value(f: &Frame, t: &PathTuple) -> UeaElement {
    let u = f.uea();
    t.factors().fold(UeaElement::one(), |acc, (d, a)| u.multiply(&acc, &f.ybar_coeff(d, a)))
}

fn pathsum(f: &Frame, kind: PathKind, c: usize, d: usize, p: Half) -> Result<QuotientElement> {
    f.uea().realization().require_even()?;
    let mut total = UeaElement::zero();
    for t in enumerate_paths(f, kind, c, d, p) {
        total.add_scaled(&path_value(f, &t), &path_sign(f, kind, c, &t)?);
    }
    Ok(f.uea().reduce(&total))
}

/// The `z^{-p}` coefficient of `L(z)_{c,d}` from the explicit path sum;
/// `p = 0` gives the constant term `-δ_{row(c),row(d)} (-1)^{λ_1}`.
///
/// The expansion is only valid for even gradings; odd ones give
/// [`Error::OddGrading`].
pub fn pathsum_l(f: &Frame, c: usize, d: usize, p: Half) -> Result<QuotientElement> {
    check_l_block(f, c, d)?;
    f.uea().realization().require_even()?;
    if p == Half::ZERO {
        let v = if f.row(c) == f.row(d) { -sign(parity(f.lambda1())?) } else { Q::zero() };
        return Ok(f.uea().reduce(&UeaElement::scalar(v)));
    }
    if p < Half::ZERO {
        return Err(Error::BadOrder(p.to_string(), "L(z) is a series in z^-1".into()));
    }
    pathsum(f, PathKind::L, c, d, p)
}

/// The `z^{-p}` coefficient of `L_R(z)_{c,d}` from the explicit path sum.
pub fn pathsum_lr(f: &Frame, c: usize, d: usize, p: Half) -> Result<QuotientElement> {
    check_lr_block(f, c, d)?;
    if p <= Half::ZERO {
        return Err(Error::BadOrder(p.to_string(), "the path sum covers positive orders only".into()));
    }
    pathsum(f, PathKind::LR, c, d, p)
}

/// `±ζ_i^{j,t}` identified in a graded symbol.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZetaMatch {
    pub i: usize,
    pub j: usize,
    pub t: usize,
    pub sign: i64,
}

/// A coefficient of a Lax operator claimed to lie in the W-algebra.
#[derive(Clone, Debug)]
pub struct GeneratorRecord {
    pub realization: String,
    pub mode: Mode,
    pub c: usize,
    pub d: usize,
    pub k: Half,
    pub p: Half,
    pub value: QuotientElement,
    pub gr_degree: Option<Half>,
    pub zeta: Option<ZetaMatch>,
}

/// The part of `x` of filtration degree `p - 1` that is linear, as a
/// combination of basis elements (scalars dropped).
pub fn symbol_linear_part(u: &Uea, x: &QuotientElement, p: Half) -> Vec<(usize, Q)> {
    u.homogeneous_part(x.lift(), p - Half::int(1)).linear_part()
}

/// Searches all `ζ_i^{j,t}` for one equal to `±` the given combination.
pub fn match_zeta(r: &Realization, lin: &[(usize, Q)]) -> Option<ZetaMatch> {
    if lin.is_empty() {
        return None;
    }
    let n = r.pyramid().n_rows();
    for i in 1..=n {
        for j in 1..=n {
            for t in 0..r.pyramid().row_len(j) {
                let Ok(z) = r.zeta(i, j, t) else { continue };
                if let Some(s) = combination_is_multiple(lin, &z) {
                    if s == Q::one() || s == -Q::one() {
                        return Some(ZetaMatch { i, j, t, sign: if s == Q::one() { 1 } else { -1 } });
                    }
                }
            }
        }
    }
    None
}

fn record(u: &Uea, mode: Mode, c: usize, d: usize, k: Half, p: Half, value: QuotientElement) -> GeneratorRecord {
    let r = u.realization();
    let gr_degree = u.gr_symbol(value.lift()).ok().map(|(d, _)| d);
    let zeta = match_zeta(r, &symbol_linear_part(u, &value, p));
    GeneratorRecord { realization: r.id(), mode, c, d, k, p, value, gr_degree, zeta }
}

/// Highest weights `k = (λ_i - 1)/2` of `V`, largest first.
pub fn highest_weights(r: &Realization) -> Vec<Half> {
    r.lambda().distinct_parts().iter().map(|&l| Half(l as i32 - 1)).collect()
}

fn rows_of_length(r: &Realization, len: usize) -> Vec<usize> {
    (1..=r.pyramid().n_rows()).filter(|&i| r.pyramid().row_len(i) == len).collect()
}

fn first_box(r: &Realization, i: usize) -> usize {
    r.pyramid().box_at(i, 0).unwrap()
}

fn last_box(r: &Realization, i: usize) -> usize {
    r.pyramid().box_at(i, r.pyramid().row_len(i) - 1).unwrap()
}

/// Options for [`extract_generators`].
#[derive(Clone, Copy, Debug, Default)]
pub struct ExtractOptions {
    /// Largest order `p`; defaults to `λ_1`.
    pub p_max: Option<Half>,
    /// Truncation floor (doubled); defaults to `-2(λ_1 + 1)`.
    pub floor: Option<i32>,
}

impl ExtractOptions {
    fn resolve(&self, r: &Realization) -> (Half, i32) {
        let l1 = r.pyramid().lambda1() as i32;
        let p_max = self.p_max.unwrap_or(Half::int(l1));
        let floor = self.floor.unwrap_or(-2 * (l1 + 1)).min(-p_max.doubled());
        (p_max, floor)
    }
}

/// Coefficients of `L_k(z)` and `L_{k;R}(z)` asserted to lie in the
/// W-algebra, for every highest weight `k`.
pub fn extract_generators(u: &Uea, opts: ExtractOptions) -> Result<Vec<GeneratorRecord>> {
    let r = u.realization();
    r.require_even()?;
    let (p_max, floor) = opts.resolve(r);
    let ks = highest_weights(r);
    let mut out = Vec::new();
    for (idx, &k) in ks.iter().enumerate() {
        let len = (k.doubled() + 1) as usize;
        let ops = LaxOperators::truncated(u, k, floor)?;
        let rows = rows_of_length(r, len);
        for &rc in &rows {
            for &rd in &rows {
                let (c, d) = (first_box(r, rc), last_box(r, rd));
                for p in 1..=(len as i32).min(p_max.to_int().unwrap_or(i32::MAX)) {
                    let p = Half::int(p);
                    out.push(record(u, Mode::Lk, c, d, k, p, ops.l_coeff(c, d, p)?));
                }
            }
        }
        let Some(&l) = ks.get(idx + 1) else { continue };
        let short_len = (l.doubled() + 1) as usize;
        let short = rows_of_length(r, short_len);
        let top = (short_len + len) as i32 / 2;
        for &rc in &short {
            for &rd in &rows {
                let (c, d) = (last_box(r, rc), last_box(r, rd));
                let lo = ((k - l).doubled() / 2) + 1;
                for q in lo..=top {
                    let q = Half::int(q);
                    if q > p_max {
                        break;
                    }
                    out.push(record(u, Mode::LkR, c, d, k, q, ops.lr_coeff(c, d, q)?));
                }
            }
        }
    }
    Ok(out)
}

/// Coefficients of `z^{-b}` in `Π_W L_R(z) Ψ_{-ξ/2} 1̄` for `b` in
/// `orders`, where `W` is spanned by lowest weight vectors of the largest
/// weight below the top.
pub fn extract_main(u: &Uea, orders: &[Half], floor: i32) -> Result<Vec<GeneratorRecord>> {
    let r = u.realization();
    let parts = r.lambda().distinct_parts();
    if parts.len() < 2 {
        return Err(Error::NotHighestWeight("V has a single highest weight".into()));
    }
    let ops = LaxOperators::new(Frame::full(u), floor);
    let top = rows_of_length(r, parts[0]);
    let next = rows_of_length(r, parts[1]);
    let k = Half(parts[0] as i32 - 1);
    let mut out = Vec::new();
    for &rc in &next {
        for &rd in &top {
            let (c, d) = (last_box(r, rc), last_box(r, rd));
            for &b in orders {
                out.push(record(u, Mode::TMain, c, d, k, b, ops.lr_coeff(c, d, b)?));
            }
        }
    }
    Ok(out)
}

/// Orders `b` with `b > ξ/2 - l` up to `p_max`, in steps of `1/2` when the
/// grading is odd and `1` otherwise.
pub fn main_orders(r: &Realization, p_max: Half) -> Vec<Half> {
    let parts = r.lambda().distinct_parts();
    if parts.len() < 2 {
        return Vec::new();
    }
    let bound = Half(parts[0] as i32 - parts[1] as i32);
    let step = if r.even_grading() { 2 } else { 1 };
    let mut b = if r.even_grading() { Half::int(bound.doubled() / 2 + 1) } else { bound + Half(1) };
    let mut out = Vec::new();
    while b <= p_max {
        out.push(b);
        b = b + Half(step);
    }
    out
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct TermJson {
    pub coeff: String,
    pub monomial: Vec<[usize; 2]>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct RecordJson {
    pub realization: String,
    pub mode: Mode,
    pub c: usize,
    pub d: usize,
    pub k: String,
    pub p: String,
    pub value: Vec<TermJson>,
    #[serde(rename = "grDegree")]
    pub gr_degree: Option<String>,
    #[serde(rename = "zetaMatch")]
    pub zeta_match: Option<ZetaMatch>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub member: Option<bool>,
    #[serde(rename = "grCheck", skip_serializing_if = "Option::is_none")]
    pub gr_check: Option<bool>,
}

impl GeneratorRecord {
    pub fn to_json(&self, r: &Realization) -> RecordJson {
        RecordJson {
            realization: self.realization.clone(),
            mode: self.mode,
            c: self.c,
            d: self.d,
            k: self.k.to_string(),
            p: self.p.to_string(),
            value: self
                .value
                .lift()
                .terms()
                .map(|(m, c)| TermJson {
                    coeff: fmt_q(c),
                    monomial: m.iter().map(|&g| {
                        let x = r.element(g as usize);
                        [x.a, x.b]
                    }).collect(),
                })
                .collect(),
            gr_degree: self.gr_degree.map(|d| d.to_string()),
            zeta_match: self.zeta.clone(),
            member: None,
            gr_check: None,
        }
    }
}

/// Distinct `(i, j, t)` triples of the matched symbols.
pub fn matched_zetas(records: &[GeneratorRecord]) -> BTreeSet<(usize, usize, usize)> {
    records.iter().filter_map(|x| x.zeta.as_ref().map(|z| (z.i, z.j, z.t))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::Kind;
    use crate::pyramid::Partition;

    fn uea(p: &[usize], k: Kind) -> Uea {
        Uea::new(Realization::new(Partition::new(p.to_vec()).unwrap(), k).unwrap())
    }

    #[test]
    fn paths_match_series_on_small_cases() {
        for (p, k) in [(&[2, 2][..], Kind::Symplectic), (&[3, 1][..], Kind::Orthogonal), (&[3, 1][..], Kind::Gl)] {
            let u = uea(p, k);
            let f = Frame::full(&u);
            let ops = LaxOperators::new(Frame::full(&u), -8);
            for c in f.top_boxes() {
                for d in f.bottom_boxes() {
                    for p in 0..=3 {
                        let p = Half::int(p);
                        assert_eq!(ops.l_coeff(c, d, p).unwrap(), pathsum_l(&f, c, d, p).unwrap());
                    }
                }
            }
            for c in f.lower() {
                for d in f.bottom_boxes() {
                    for p in 1..=3 {
                        let p = Half::int(p);
                        assert_eq!(ops.lr_coeff(c, d, p).unwrap(), pathsum_lr(&f, c, d, p).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn odd_gradings_have_no_path_sum() {
        let u = uea(&[2, 1], Kind::Gl);
        let f = Frame::full(&u);
        assert!(matches!(pathsum_l(&f, 1, 2, Half::int(1)), Err(Error::OddGrading(_))));
        assert!(matches!(pathsum_lr(&f, 1, 2, Half::int(1)), Err(Error::OddGrading(_))));
    }

    #[test]
    fn constant_term_of_l() {
        let u = uea(&[4, 2], Kind::Symplectic);
        let ops = LaxOperators::new(Frame::full(&u), -4);
        let f = ops.frame();
        for c in f.top_boxes() {
            for d in f.bottom_boxes() {
                let v = ops.l_coeff(c, d, Half::ZERO).unwrap();
                let expect = if f.row(c) == f.row(d) { -Q::one() } else { Q::zero() };
                assert_eq!(v, u.reduce(&UeaElement::scalar(expect)));
            }
        }
    }

    #[test]
    fn first_and_last_columns_stay_out_of_paths() {
        let u = uea(&[3, 3, 1], Kind::Orthogonal);
        let f = Frame::full(&u);
        let l1 = f.lambda1();
        for c in f.top_boxes() {
            for d in f.bottom_boxes() {
                for p in 1..=4 {
                    for t in enumerate_paths(&f, PathKind::L, c, d, Half::int(p)) {
                        for (x, y) in t.factors() {
                            if f.col(x) == Half::int(1) {
                                assert_eq!(f.row(x), f.row(c), "{t:?}");
                            }
                            if f.col(y) == l1 {
                                assert_eq!(f.row(y), f.row(d), "{t:?}");
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn wrong_blocks_are_rejected() {
        let u = uea(&[3, 1], Kind::Orthogonal);
        let f = Frame::full(&u);
        let ops = LaxOperators::new(Frame::full(&u), -6);
        assert!(matches!(ops.l_coeff(2, 3, Half::int(1)), Err(Error::WrongBlock(2, 3))));
        assert!(matches!(ops.lr_coeff(1, 2, Half::int(1)), Err(Error::WrongBlock(1, 2))));
        assert!(matches!(pathsum_l(&f, 3, 3, Half::int(1)), Err(Error::WrongBlock(3, 3))));
        assert!(matches!(pathsum_lr(&f, 4, 3, Half::ZERO), Err(Error::BadOrder(..))));
        assert!(matches!(ops.l_coeff(1, 3, Half::int(4)), Err(Error::BelowFloor(..))));
    }

    #[test]
    fn top_truncation_is_the_full_operator() {
        let u = uea(&[4, 2], Kind::Symplectic);
        let full = LaxOperators::new(Frame::full(&u), -8);
        let top = LaxOperators::truncated(&u, Half(3), -8).unwrap();
        assert_eq!(full.lax(), top.lax());
        assert_eq!(full.lax_right(), top.lax_right());
        assert!(matches!(LaxOperators::truncated(&u, Half(2), -8), Err(Error::NotHighestWeight(_))));
    }

    #[test]
    fn truncated_operators_use_the_window() {
        let u = uea(&[4, 2], Kind::Symplectic);
        let ops = LaxOperators::truncated(&u, Half(1), -6).unwrap();
        assert_eq!(ops.frame().lambda1(), Half::int(2));
        assert_eq!(ops.frame().top_boxes(), vec![2, 5]);
        assert_eq!(ops.frame().bottom_boxes(), vec![3, 6]);
    }

    #[test]
    fn so31_records() {
        let u = uea(&[3, 1], Kind::Orthogonal);
        let recs = extract_generators(&u, ExtractOptions::default()).unwrap();
        let summary: Vec<(Mode, usize, usize, i32)> = recs.iter().map(|x| (x.mode, x.c, x.d, x.p.doubled() / 2)).collect();
        assert_eq!(
            summary,
            vec![(Mode::Lk, 1, 3, 1), (Mode::Lk, 1, 3, 2), (Mode::Lk, 1, 3, 3), (Mode::LkR, 4, 3, 2), (Mode::Lk, 4, 4, 1)]
        );
        for x in &recs {
            for m in u.realization().positive_part() {
                assert!(u.adjoint_action(m, &x.value).unwrap().is_zero(), "{:?} {:?}", x.mode, x.p);
            }
        }
    }

    #[test]
    fn main_orders_respect_the_bound() {
        let u = uea(&[3, 1], Kind::Gl);
        assert_eq!(main_orders(u.realization(), Half::int(4)), vec![Half::int(2), Half::int(3), Half::int(4)]);
        let u = uea(&[4, 1], Kind::Gl);
        assert_eq!(main_orders(u.realization(), Half::int(3)), vec![Half::int(2), Half(5), Half::int(3)]);
    }

    #[test]
    fn record_json_is_exact() {
        let u = uea(&[2], Kind::Symplectic);
        let recs = extract_generators(&u, ExtractOptions::default()).unwrap();
        let j = recs[1].to_json(u.realization());
        assert_eq!(j.mode, Mode::Lk);
        assert_eq!(j.p, "2");
        let s = serde_json::to_string(&j).unwrap();
        assert!(s.contains("\"mode\":\"L_k\""));
        assert!(s.contains("\"grDegree\":\"1\""));
        assert!(!s.contains('.'));
    }
}
