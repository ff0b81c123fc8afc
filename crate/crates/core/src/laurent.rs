//! Matrices of truncated Laurent polynomials in `z^{1/2}` with `U(g)`
//! coefficients, and the operators `D`, `Y`, `Z`, `Ȳ`, `α` built from a
//! [`Frame`].
//!
//! Exponents are stored doubled. A polynomial may carry a floor `T`: its
//! coefficients at exponents `≥ T` are exact and everything below is
//! unknown (and dropped).

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::QMatrix;
use crate::pyramid::{Half, Pyramid};
use crate::scalar::{fmt_q, sign, Q};
use crate::uea::{Uea, UeaElement};

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LaurentPoly {
    terms: BTreeMap<i32, UeaElement>,
    floor: Option<i32>,
}

impl LaurentPoly {
    pub fn zero() -> LaurentPoly {
        LaurentPoly::default()
    }

    /// `x z^{e/2}`.
    pub fn monomial(e: i32, x: UeaElement) -> LaurentPoly {
        let mut p = LaurentPoly::zero();
        p.add_term(e, &x);
        p
    }

    pub fn constant(x: UeaElement) -> LaurentPoly {
        LaurentPoly::monomial(0, x)
    }

    pub fn scalar(c: Q) -> LaurentPoly {
        LaurentPoly::constant(UeaElement::scalar(c))
    }

    pub fn floor(&self) -> Option<i32> {
        self.floor
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, &UeaElement)> {
        self.terms.iter().map(|(e, x)| (*e, x))
    }

    /// Coefficient of `z^{e/2}`; an error if it lies below the floor.
    pub fn coeff(&self, e: i32) -> Result<UeaElement> {
        if let Some(t) = self.floor {
            if e < t {
                return Err(Error::BelowFloor(Half(e).to_string(), Half(t).to_string()));
            }
        }
        Ok(self.terms.get(&e).cloned().unwrap_or_default())
    }

    pub fn add_term(&mut self, e: i32, x: &UeaElement) {
        if self.floor.is_some_and(|t| e < t) || x.is_zero() {
            return;
        }
        let slot = self.terms.entry(e).or_default();
        *slot += x;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    /// Drops everything below `t` and records the floor.
    pub fn truncate(&mut self, t: i32) {
        let t = self.floor.map_or(t, |f| f.max(t));
        self.floor = Some(t);
        self.terms = self.terms.split_off(&t);
    }

    pub fn truncated(mut self, t: Option<i32>) -> LaurentPoly {
        if let Some(t) = t {
            self.truncate(t);
        }
        self
    }

    /// An upper bound for the exponents of the represented series.
    pub fn degree_bound(&self) -> Option<i32> {
        let top = self.terms.keys().next_back().copied();
        match (top, self.floor) {
            (Some(a), Some(t)) => Some(a.max(t - 1)),
            (Some(a), None) => Some(a),
            (None, Some(t)) => Some(t - 1),
            (None, None) => None,
        }
    }

    pub fn add(&self, o: &LaurentPoly) -> LaurentPoly {
        let floor = match (self.floor, o.floor) {
            (Some(a), Some(b)) => Some(a.max(b)),
            (a, b) => a.or(b),
        };
        let mut out = LaurentPoly { terms: BTreeMap::new(), floor };
        for (e, x) in self.terms().chain(o.terms()) {
            out.add_term(e, x);
        }
        out
    }

    pub fn scale(&self, c: &Q) -> LaurentPoly {
        let mut out = LaurentPoly { terms: BTreeMap::new(), floor: self.floor };
        for (e, x) in self.terms() {
            out.add_term(e, &x.scale(c));
        }
        out
    }

    pub fn neg(&self) -> LaurentPoly {
        self.scale(&-Q::one())
    }

    pub fn sub(&self, o: &LaurentPoly) -> LaurentPoly {
        self.add(&o.neg())
    }

    /// Product with the coefficients of `self` on the left.
    pub fn mul(&self, o: &LaurentPoly, u: &Uea) -> LaurentPoly {
        let floor = match (self.floor, o.floor) {
            (None, None) => None,
            _ => {
                let a = self.floor.zip(o.degree_bound()).map(|(t, m)| t + m);
                let b = o.floor.zip(self.degree_bound()).map(|(t, m)| t + m);
                match (a, b) {
                    (Some(a), Some(b)) => Some(a.max(b)),
                    (a, b) => a.or(b),
                }
            }
        };
        let mut out = LaurentPoly { terms: BTreeMap::new(), floor };
        for (e, x) in self.terms() {
            for (f, y) in o.terms() {
                out.add_term(e + f, &u.multiply(x, y));
            }
        }
        out
    }

    pub fn format(&self, u: &Uea) -> String {
        let mut parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(e, x)| format!("({}) z^{}", u.format(x), Half(*e)))
            .collect();
        if parts.is_empty() {
            parts.push("0".into());
        }
        if let Some(t) = self.floor {
            parts.push(format!("O(z^{})", Half(t)));
        }
        parts.join(" + ")
    }
}

/// A matrix indexed by boxes: rows are the codomain basis, columns the
/// domain basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentMatrix {
    rows: Vec<usize>,
    cols: Vec<usize>,
    entries: BTreeMap<(usize, usize), LaurentPoly>,
}

impl LaurentMatrix {
    pub fn zeros(rows: Vec<usize>, cols: Vec<usize>) -> LaurentMatrix {
        LaurentMatrix { rows, cols, entries: BTreeMap::new() }
    }

    pub fn identity(boxes: Vec<usize>) -> LaurentMatrix {
        let mut m = LaurentMatrix::zeros(boxes.clone(), boxes.clone());
        for a in boxes {
            m.set(a, a, LaurentPoly::scalar(Q::one()));
        }
        m
    }

    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    pub fn cols(&self) -> &[usize] {
        &self.cols
    }

    pub fn get(&self, a: usize, b: usize) -> LaurentPoly {
        self.entries.get(&(a, b)).cloned().unwrap_or_default()
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &LaurentPoly)> {
        self.entries.iter().map(|((a, b), p)| (*a, *b, p))
    }

    pub fn set(&mut self, a: usize, b: usize, p: LaurentPoly) {
        debug_assert!(self.rows.contains(&a) && self.cols.contains(&b), "entry ({a},{b}) outside the block");
        if p.is_zero() && p.floor().is_none() {
            self.entries.remove(&(a, b));
        } else {
            self.entries.insert((a, b), p);
        }
    }

    /// `Π_S M Ψ_T` for box predicates `S`, `T`.
    pub fn block(&self, rows: impl Fn(usize) -> bool, cols: impl Fn(usize) -> bool) -> LaurentMatrix {
        let r: Vec<usize> = self.rows.iter().copied().filter(|&a| rows(a)).collect();
        let c: Vec<usize> = self.cols.iter().copied().filter(|&b| cols(b)).collect();
        let mut out = LaurentMatrix::zeros(r, c);
        for ((a, b), p) in &self.entries {
            if rows(*a) && cols(*b) {
                out.entries.insert((*a, *b), p.clone());
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.entries.values().all(LaurentPoly::is_zero)
    }

    pub fn add(&self, o: &LaurentMatrix) -> LaurentMatrix {
        assert_eq!((&self.rows, &self.cols), (&o.rows, &o.cols), "shape mismatch");
        let mut out = self.clone();
        for ((a, b), p) in &o.entries {
            let v = out.get(*a, *b).add(p);
            out.set(*a, *b, v);
        }
        out
    }

    pub fn scale(&self, c: &Q) -> LaurentMatrix {
        let mut out = LaurentMatrix::zeros(self.rows.clone(), self.cols.clone());
        for ((a, b), p) in &self.entries {
            out.set(*a, *b, p.scale(c));
        }
        out
    }

    pub fn sub(&self, o: &LaurentMatrix) -> LaurentMatrix {
        self.add(&o.scale(&-Q::one()))
    }

    /// Matrix product, dropping exponents below `floor`.
    pub fn mul(&self, o: &LaurentMatrix, u: &Uea, floor: Option<i32>) -> LaurentMatrix {
        assert_eq!(self.cols, o.rows, "shape mismatch");
        let mut by_row: BTreeMap<usize, Vec<(usize, &LaurentPoly)>> = BTreeMap::new();
        for ((k, b), p) in &o.entries {
            by_row.entry(*k).or_default().push((*b, p));
        }
        let mut acc: BTreeMap<(usize, usize), LaurentPoly> = BTreeMap::new();
        for ((a, k), p) in &self.entries {
            let Some(row) = by_row.get(k) else { continue };
            for (b, q) in row {
                let term = p.mul(q, u).truncated(floor);
                let slot = acc.entry((*a, *b)).or_default();
                *slot = slot.add(&term);
            }
        }
        let mut out = LaurentMatrix::zeros(self.rows.clone(), o.cols.clone());
        for ((a, b), p) in acc {
            out.set(a, b, p.truncated(floor));
        }
        out
    }

    /// Entries with every coefficient transformed.
    pub fn map(&self, f: impl Fn(&UeaElement) -> UeaElement) -> LaurentMatrix {
        let mut out = LaurentMatrix::zeros(self.rows.clone(), self.cols.clone());
        for ((a, b), p) in &self.entries {
            let mut q = LaurentPoly { terms: BTreeMap::new(), floor: p.floor };
            for (e, x) in p.terms() {
                q.add_term(e, &f(x));
            }
            out.set(*a, *b, q);
        }
        out
    }

    /// Drops exponents below `t` everywhere.
    pub fn truncated(&self, t: i32) -> LaurentMatrix {
        let mut out = self.clone();
        for p in out.entries.values_mut() {
            p.truncate(t);
        }
        out
    }

    /// Every entry multiplied by `z^{e/2}`.
    pub fn shifted(&self, e: i32) -> LaurentMatrix {
        let mut out = LaurentMatrix::zeros(self.rows.clone(), self.cols.clone());
        for ((a, b), p) in &self.entries {
            let mut q = LaurentPoly { terms: BTreeMap::new(), floor: p.floor.map(|t| t + e) };
            for (f, x) in p.terms() {
                q.add_term(f + e, x);
            }
            out.set(*a, *b, q);
        }
        out
    }

    /// The exponent from which every entry is exact (`None` if all are).
    pub fn floor(&self) -> Option<i32> {
        self.entries.values().filter_map(LaurentPoly::floor).max()
    }

    /// Largest exponent among the entries.
    pub fn max_exponent(&self) -> Option<i32> {
        self.entries.values().filter_map(|p| p.terms().map(|(e, _)| e).max()).max()
    }

    /// Equality of all coefficients at exponents `≥ t`.
    pub fn agrees_above(&self, o: &LaurentMatrix, t: i32) -> bool {
        self.rows == o.rows && self.cols == o.cols && self.truncated(t).sub(&o.truncated(t)).is_zero()
    }

    /// One `box→box: poly` line per nonzero entry.
    pub fn dump(&self, u: &Uea) -> String {
        let mut s = String::new();
        for ((a, b), p) in &self.entries {
            if !p.is_zero() {
                let _ = writeln!(s, "{b}→{a}: {}", p.format(u));
            }
        }
        s
    }
}

/// A window `[s_k, e_k]` of columns of a pyramid, in local coordinates
/// (column `s_k` becomes column 1). Everything here is combinatorial.
#[derive(Clone, Debug)]
pub struct Shape<'p> {
    pyramid: &'p Pyramid,
    k: Half,
    lo: Half,
    hi: Half,
    boxes: Vec<usize>,
}

impl<'p> Shape<'p> {
    pub fn new(pyramid: &'p Pyramid, k: Half) -> Result<Shape<'p>> {
        let (lo, hi, _) = pyramid.truncation_bounds(k)?;
        let boxes = pyramid.boxes().filter(|&a| pyramid.col(a) >= lo && pyramid.col(a) <= hi).collect();
        Ok(Shape { pyramid, k, lo, hi, boxes })
    }

    pub fn full(pyramid: &'p Pyramid) -> Shape<'p> {
        Shape::new(pyramid, Half(pyramid.lambda1() as i32 - 1)).expect("top weight is always valid")
    }

    pub fn boxes(&self) -> &[usize] {
        &self.boxes
    }

    pub fn contains(&self, a: usize) -> bool {
        self.boxes.binary_search(&a).is_ok()
    }

    /// Local `λ_1`.
    pub fn lambda1(&self) -> Half {
        self.hi - self.lo + Half::int(1)
    }

    /// Local column.
    pub fn col(&self, a: usize) -> Half {
        self.pyramid.col(a) - self.lo + Half::int(1)
    }

    pub fn row(&self, a: usize) -> usize {
        self.pyramid.row(a)
    }

    /// Local length of row `i`.
    pub fn row_len(&self, i: usize) -> usize {
        self.pyramid.row_boxes(i).filter(|&a| self.contains(a)).count()
    }

    /// Whether `a` lies in a row of full local length.
    pub fn is_full(&self, a: usize) -> bool {
        Half::int(self.row_len(self.row(a)) as i32) == self.lambda1()
    }

    pub fn top_boxes(&self) -> Vec<usize> {
        self.boxes.iter().copied().filter(|&a| self.col(a) == Half::int(1)).collect()
    }

    pub fn bottom_boxes(&self) -> Vec<usize> {
        self.boxes.iter().copied().filter(|&a| self.col(a) == self.lambda1()).collect()
    }

    /// Boxes of weight `< ξ/2`, i.e. local column `> 1`.
    pub fn upper(&self) -> Vec<usize> {
        self.boxes.iter().copied().filter(|&a| self.col(a) > Half::int(1)).collect()
    }

    /// Boxes of weight `> -ξ/2`, i.e. local column `< λ_1`.
    pub fn lower(&self) -> Vec<usize> {
        self.boxes.iter().copied().filter(|&a| self.col(a) < self.lambda1()).collect()
    }

    /// Whether `F` has a one in position `(a, b)`.
    pub fn f_entry(&self, a: usize, b: usize) -> bool {
        self.row(a) == self.row(b) && self.col(a) == self.col(b) + Half::int(1)
    }

    /// `α` with rows [`upper`](Self::upper) and columns
    /// [`lower`](Self::lower), both in order.
    pub fn alpha(&self) -> QMatrix {
        let (up, low) = (self.upper(), self.lower());
        let mut m = QMatrix::zeros(up.len(), low.len());
        for (i, &a) in up.iter().enumerate() {
            for (j, &b) in low.iter().enumerate() {
                if a == b || self.f_entry(a, b) {
                    m.set(i, j, Q::one());
                }
            }
        }
        m
    }

    /// The closed form of `α^{-1}`, rows [`lower`](Self::lower).
    pub fn alpha_inverse(&self) -> QMatrix {
        let (up, low) = (self.upper(), self.lower());
        let mut m = QMatrix::zeros(low.len(), up.len());
        for (i, &a) in low.iter().enumerate() {
            for (j, &b) in up.iter().enumerate() {
                if self.row(a) != self.row(b) {
                    continue;
                }
                let (ca, cb) = (self.col(a), self.col(b));
                let s = (ca - cb).to_int().map(|e| sign(e as i64));
                let v = if self.is_full(a) && ca < cb {
                    s.map(|s| -s)
                } else if !self.is_full(a) && ca >= cb {
                    s
                } else {
                    None
                };
                if let Some(v) = v {
                    m.set(i, j, v);
                }
            }
        }
        m
    }
}

fn scalar_matrix(rows: Vec<usize>, cols: Vec<usize>, m: &QMatrix) -> LaurentMatrix {
    let mut out = LaurentMatrix::zeros(rows.clone(), cols.clone());
    for (i, &a) in rows.iter().enumerate() {
        for (j, &b) in cols.iter().enumerate() {
            if !m.get(i, j).is_zero() {
                out.set(a, b, LaurentPoly::scalar(m.get(i, j).clone()));
            }
        }
    }
    out
}

/// The data needed to build the operators for `g` or for a truncation
/// `g^k`, in local coordinates (column `s_k` becomes column 1).
#[derive(Debug)]
pub struct Frame<'u> {
    uea: &'u Uea,
    shape: Shape<'u>,
    members: Vec<usize>,
    duals: Vec<QMatrix>,
    d: QMatrix,
}

impl<'u> Frame<'u> {
    /// The untruncated frame, `k = (λ_1 - 1)/2`.
    pub fn full(uea: &'u Uea) -> Frame<'u> {
        let k = Half(uea.realization().pyramid().lambda1() as i32 - 1);
        Frame::truncated(uea, k).expect("top weight is always valid")
    }

    pub fn truncated(uea: &'u Uea, k: Half) -> Result<Frame<'u>> {
        let r = uea.realization();
        let sub = r.subalgebra(k)?;
        let shape = Shape::new(r.pyramid(), k)?;
        let duals = r.dual_matrices(&sub.members)?;
        let n = r.n();
        // D = -Σ_{g≥1} U^i U_i. With the opposite sign the Z and Y
        // operators disagree on 1̄ already for sl_2.
        let mut d = QMatrix::zeros(n, n);
        for (i, &m) in sub.members.iter().enumerate() {
            if r.grade(m) >= Half::int(1) {
                d = &d - &(&duals[i] * r.image(m));
            }
        }
        Ok(Frame { uea, shape, members: sub.members, duals, d })
    }

    pub fn uea(&self) -> &'u Uea {
        self.uea
    }

    /// The window of the pyramid this frame lives on.
    pub fn shape(&self) -> &Shape<'u> {
        &self.shape
    }

    pub fn k(&self) -> Half {
        self.shape.k
    }

    pub fn window(&self) -> (Half, Half) {
        (self.shape.lo, self.shape.hi)
    }

    pub fn boxes(&self) -> &[usize] {
        &self.shape.boxes
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn contains(&self, a: usize) -> bool {
        self.shape.contains(a)
    }

    pub fn lambda1(&self) -> Half {
        self.shape.lambda1()
    }

    pub fn col(&self, a: usize) -> Half {
        self.shape.col(a)
    }

    pub fn row(&self, a: usize) -> usize {
        self.shape.row(a)
    }

    pub fn row_len(&self, i: usize) -> usize {
        self.shape.row_len(i)
    }

    pub fn is_full(&self, a: usize) -> bool {
        self.shape.is_full(a)
    }

    pub fn top_boxes(&self) -> Vec<usize> {
        self.shape.top_boxes()
    }

    pub fn bottom_boxes(&self) -> Vec<usize> {
        self.shape.bottom_boxes()
    }

    pub fn upper(&self) -> Vec<usize> {
        self.shape.upper()
    }

    pub fn lower(&self) -> Vec<usize> {
        self.shape.lower()
    }

    /// The shift matrix `D = -Σ_{u_i ∈ g_{≥1}} U^i U_i` of this frame.
    pub fn d_matrix(&self) -> &QMatrix {
        &self.d
    }

    pub fn dual(&self, i: usize) -> &QMatrix {
        &self.duals[i]
    }

    /// `Σ_{u_i ∈ g_{≤1/2}} (U^i)_{a,b} u_i` (or over all `u_i`).
    fn casimir_entry(&self, a: usize, b: usize, all: bool) -> UeaElement {
        let r = self.uea.realization();
        let mut c = Vec::new();
        for (i, &m) in self.members.iter().enumerate() {
            if all || r.grade(m) <= Half(1) {
                let v = self.duals[i].get(a - 1, b - 1);
                if !v.is_zero() {
                    c.push((m, v.clone()));
                }
            }
        }
        UeaElement::linear(&c)
    }

    /// `x_{a,b}` with `Ȳ_{a,b} = z^{col(a) - col(b) - 1} x_{a,b}`.
    pub fn ybar_coeff(&self, a: usize, b: usize) -> UeaElement {
        let mut x = self.casimir_entry(a, b, false);
        if a == b {
            x += &UeaElement::scalar(self.d.get(a - 1, a - 1).clone());
        }
        x
    }

    /// `Ȳ_{a,b}` for any pair of boxes in the frame.
    pub fn ybar_entry(&self, a: usize, b: usize) -> LaurentPoly {
        let e = (self.col(a) - self.col(b) - Half::int(1)).doubled();
        LaurentPoly::monomial(e, self.ybar_coeff(a, b))
    }

    /// `Y = 1 + F + Σ_{g_{≤1/2}} z^{δ(u_i)-1} u_i ⊗ U^i + z^{-1} D`.
    pub fn y(&self) -> LaurentMatrix {
        let mut m = LaurentMatrix::zeros(self.shape.boxes.clone(), self.shape.boxes.clone());
        for &a in &self.shape.boxes {
            for &b in &self.shape.boxes {
                let mut p = self.ybar_entry(a, b);
                if a == b || self.shape.f_entry(a, b) {
                    p = p.add(&LaurentPoly::scalar(Q::one()));
                }
                m.set(a, b, p);
            }
        }
        m
    }

    /// `Z = 1 + Σ_{u_i} z^{δ(u_i)-1} u_i ⊗ U^i`.
    pub fn z(&self) -> LaurentMatrix {
        let mut m = LaurentMatrix::zeros(self.shape.boxes.clone(), self.shape.boxes.clone());
        for &a in &self.shape.boxes {
            for &b in &self.shape.boxes {
                let e = (self.col(a) - self.col(b) - Half::int(1)).doubled();
                let mut p = LaurentPoly::monomial(e, self.casimir_entry(a, b, true));
                if a == b {
                    p = p.add(&LaurentPoly::scalar(Q::one()));
                }
                m.set(a, b, p);
            }
        }
        m
    }

    /// `Ȳ = Π_{<ξ/2} (Y - 1 - F) Ψ_{>-ξ/2}`.
    pub fn ybar(&self) -> LaurentMatrix {
        let mut m = LaurentMatrix::zeros(self.upper(), self.lower());
        for a in self.upper() {
            for b in self.lower() {
                m.set(a, b, self.ybar_entry(a, b));
            }
        }
        m
    }

    /// `α = Π_{<ξ/2} (1 + F) Ψ_{>-ξ/2}`.
    pub fn alpha(&self) -> LaurentMatrix {
        scalar_matrix(self.upper(), self.lower(), &self.shape.alpha())
    }

    /// `α^{-1}` from its closed form.
    pub fn alpha_inverse(&self) -> LaurentMatrix {
        scalar_matrix(self.lower(), self.upper(), &self.shape.alpha_inverse())
    }

    /// `-α^{-1} Ȳ`.
    pub fn step(&self) -> LaurentMatrix {
        self.alpha_inverse().mul(&self.ybar(), self.uea, None).scale(&-Q::one())
    }

    /// `(α + Ȳ)^{-1} = Σ_m (-α^{-1} Ȳ)^m α^{-1}`, exact at exponents `≥ floor`.
    pub fn invert_interior(&self, floor: i32) -> LaurentMatrix {
        self.apply_inverse(&self.alpha_inverse(), floor)
    }

    /// `Σ_m (-α^{-1} Ȳ)^m X` for `X` with rows indexed by the lower boxes.
    pub fn apply_inverse(&self, x: &LaurentMatrix, floor: i32) -> LaurentMatrix {
        let step = self.step();
        let mut term = x.truncated(floor);
        let mut total = term.clone();
        while !term.is_zero() {
            term = step.mul(&term, self.uea, Some(floor));
            total = total.add(&term);
        }
        total
    }

    /// `Π_{<ξ/2} Y Ψ_{-ξ/2}`.
    pub fn y_right(&self) -> LaurentMatrix {
        let bottom = self.bottom_boxes();
        let upper = self.upper();
        self.y().block(|a| upper.contains(&a), |b| bottom.contains(&b))
    }

    /// `L_R(z)`, exact at exponents `≥ floor`.
    pub fn lax_right(&self, floor: i32) -> LaurentMatrix {
        self.apply_inverse(&self.alpha_inverse().mul(&self.y_right(), self.uea, Some(floor)), floor)
    }

    /// `L(z)`, exact at exponents `≥ floor`.
    pub fn lax(&self, floor: i32) -> LaurentMatrix {
        let y = self.y();
        let (top, bottom, lower) = (self.top_boxes(), self.bottom_boxes(), self.lower());
        let corner = y.block(|a| top.contains(&a), |b| bottom.contains(&b));
        let left = y.block(|a| top.contains(&a), |b| lower.contains(&b));
        corner.truncated(floor).sub(&left.mul(&self.lax_right(floor), self.uea, Some(floor)))
    }

    /// Human readable matrix of scalars, for `D`.
    pub fn format_diagonal(&self) -> String {
        self.shape.boxes.iter().map(|&a| format!("{a}: {}", fmt_q(self.d.get(a - 1, a - 1)))).collect::<Vec<_>>().join(", ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::{Kind, Realization};
    use crate::pyramid::Partition;
    use crate::scalar::q;

    fn uea(p: &[usize], k: Kind) -> Uea {
        Uea::new(Realization::new(Partition::new(p.to_vec()).unwrap(), k).unwrap())
    }

    #[test]
    fn poly_floor_tracking() {
        let x = LaurentPoly::monomial(-2, UeaElement::one());
        let mut y = LaurentPoly::scalar(q(1)).add(&LaurentPoly::monomial(-4, UeaElement::one()));
        y.truncate(-4);
        let u = uea(&[2], Kind::Symplectic);
        let p = x.mul(&y, &u);
        assert_eq!(p.floor(), Some(-6));
        assert_eq!(p.coeff(-6).unwrap(), UeaElement::one());
        assert!(p.coeff(-8).is_err());
        let z = LaurentPoly::monomial(4, UeaElement::one());
        assert_eq!(z.mul(&y, &u).floor(), Some(0));
    }

    #[test]
    fn d_is_diagonal() {
        for (p, k) in [(&[2, 2][..], Kind::Symplectic), (&[3, 1][..], Kind::Orthogonal), (&[4, 2][..], Kind::Symplectic), (&[3, 2, 1][..], Kind::Gl)] {
            let u = uea(p, k);
            let f = Frame::full(&u);
            let d = f.d_matrix();
            for (i, j, _) in d.entries() {
                assert_eq!(i, j);
            }
        }
        let u = uea(&[1, 1, 1], Kind::Orthogonal);
        assert!(Frame::full(&u).d_matrix().is_zero());
    }

    #[test]
    fn d_for_gl_counts_columns() {
        let u = uea(&[3, 2, 1], Kind::Gl);
        let py = u.realization().pyramid();
        let f = Frame::full(&u);
        for b in py.boxes() {
            let expect = py.boxes().filter(|&a| py.col(a) + Half::int(1) <= py.col(b)).count() as i64;
            assert_eq!(f.d_matrix().get(b - 1, b - 1), &q(-expect));
        }
    }

    /// `Σ U^i U_i` from a different basis of `g_{≥1}`: `E + σ(E)` for matrix units
    /// taken in reverse order, paired against `g_{≤-1}` built the same way.
    fn d_by_other_basis(r: &Realization) -> QMatrix {
        use crate::linalg::Span;
        let n = r.n();
        let py = r.pyramid();
        let pick = |pos: bool| {
            let mut span = Span::new(n * n);
            let mut out = Vec::new();
            for a in (1..=n).rev() {
                for b in (1..=n).rev() {
                    let d = py.col(b) - py.col(a);
                    if (pos && d >= Half::int(1)) || (!pos && d <= Half::int(-1)) {
                        let mut e = QMatrix::zeros(n, n);
                        e.set(a - 1, b - 1, q(1));
                        let m = &e + &r.sigma(&e).unwrap();
                        let flat: Vec<Q> = (0..n * n).map(|k| m.get(k / n, k % n).clone()).collect();
                        if span.insert(&flat) {
                            out.push(m);
                        }
                    }
                }
            }
            out
        };
        let (plus, minus) = (pick(true), pick(false));
        let mut pairing = QMatrix::zeros(plus.len(), minus.len());
        for (i, x) in plus.iter().enumerate() {
            for (j, y) in minus.iter().enumerate() {
                pairing.set(i, j, r.form_matrices(x, y));
            }
        }
        let inv = pairing.inverse().unwrap();
        let mut d = QMatrix::zeros(n, n);
        for (i, x) in plus.iter().enumerate() {
            for (j, y) in minus.iter().enumerate() {
                d = &d + &(y * x).scale(inv.get(j, i));
            }
        }
        d
    }

    #[test]
    fn d_is_basis_independent() {
        for (p, k) in [(&[3, 1][..], Kind::Orthogonal), (&[4, 2][..], Kind::Symplectic), (&[3, 3][..], Kind::Orthogonal)] {
            let u = uea(p, k);
            let other = d_by_other_basis(u.realization()).scale(&q(-1));
            assert_eq!(Frame::full(&u).d_matrix(), &other);
        }
    }

    #[test]
    fn alpha_inverse_closed_form() {
        for (p, k) in [(&[6, 4, 4, 2][..], Kind::Gl), (&[3, 3, 1][..], Kind::Orthogonal), (&[1][..], Kind::Gl), (&[5, 3, 1][..], Kind::Orthogonal)] {
            let u = uea(p, k);
            let f = Frame::full(&u);
            let (a, ai) = (f.alpha(), f.alpha_inverse());
            assert_eq!(a.mul(&ai, &u, None), LaurentMatrix::identity(f.upper()));
            assert_eq!(ai.mul(&a, &u, None), LaurentMatrix::identity(f.lower()));
        }
        let u = uea(&[1], Kind::Gl);
        assert!(Frame::full(&u).alpha().rows().is_empty());
    }

    #[test]
    fn shape_alone_inverts_alpha() {
        let p = Pyramid::new(crate::pyramid::Partition::new(vec![6, 5, 3, 2]).unwrap());
        let s = Shape::full(&p);
        assert_eq!(&s.alpha() * &s.alpha_inverse(), QMatrix::identity(s.upper().len()));
        let t = Shape::new(&p, Half(3)).unwrap();
        assert_eq!(t.boxes().len(), 4 + 3 + 3 + 2);
        assert_eq!(&t.alpha_inverse() * &t.alpha(), QMatrix::identity(t.lower().len()));
    }

    #[test]
    fn alpha_inverse_on_the_displayed_pyramid() {
        let u = uea(&[6, 3, 3, 2], Kind::Gl);
        let f = Frame::full(&u);
        let (a, ai) = (f.alpha(), f.alpha_inverse());
        assert_eq!(a.mul(&ai, &u, None), LaurentMatrix::identity(f.upper()));
        // full row: -(-1)^{col a + col b} for col a < col b
        assert_eq!(ai.get(1, 3), LaurentPoly::scalar(q(-1)));
        assert_eq!(ai.get(1, 2), LaurentPoly::scalar(q(1)));
        // rows at half-integer columns: the diagonal is +1
        assert_eq!(ai.get(7, 7), LaurentPoly::scalar(q(1)));
        assert_eq!(ai.get(8, 7), LaurentPoly::scalar(q(-1)));
    }

    #[test]
    fn ybar_shape() {
        for (p, k) in [(&[2, 2][..], Kind::Symplectic), (&[3, 1][..], Kind::Orthogonal), (&[4, 2][..], Kind::Symplectic), (&[3, 1][..], Kind::Gl)] {
            let u = uea(p, k);
            let r = u.realization();
            let py = r.pyramid();
            let f = Frame::full(&u);
            let yb = f.ybar();
            for (a, b, poly) in yb.entries() {
                for (e, x) in poly.terms() {
                    assert_eq!(Half(e), py.col(a) - py.col(b) - Half::int(1));
                    assert!(e < 0);
                    assert!(x.max_length() <= 1);
                }
            }
            for a in f.upper() {
                for b in f.lower() {
                    if py.col(a) <= py.col(b) {
                        let mut expect = UeaElement::linear(&r.f(b, a));
                        if a == b {
                            expect += &UeaElement::scalar(f.d_matrix().get(a - 1, a - 1).clone());
                        }
                        let e = (py.col(a) - py.col(b) - Half::int(1)).doubled();
                        assert_eq!(yb.get(a, b).coeff(e).unwrap(), expect, "{} {a} {b}", r.id());
                    }
                }
            }
        }
    }

    #[test]
    fn y_minus_z() {
        let u = uea(&[3, 1], Kind::Orthogonal);
        let r = u.realization();
        let f = Frame::full(&u);
        let diff = f.y().sub(&f.z());
        for (a, b, poly) in diff.entries() {
            for (_, x) in poly.terms() {
                for (m, _) in x.terms() {
                    assert!(m.iter().all(|&g| r.grade(g as usize) >= Half::int(1)), "{a} {b}");
                }
            }
        }
    }

    #[test]
    fn interior_inverse_multiplies_back() {
        for (p, k) in [(&[3, 1][..], Kind::Orthogonal), (&[2, 2][..], Kind::Symplectic)] {
            let u = uea(p, k);
            let f = Frame::full(&u);
            let t = -8;
            let inv = f.invert_interior(t);
            let m = f.alpha().add(&f.ybar());
            assert!(m.mul(&inv, &u, Some(t)).agrees_above(&LaurentMatrix::identity(f.upper()), t));
            assert!(inv.mul(&m, &u, Some(t)).agrees_above(&LaurentMatrix::identity(f.lower()), t));
        }
    }

    #[test]
    fn truncated_shift_differs_from_projection() {
        let u = uea(&[4, 2], Kind::Symplectic);
        let full = Frame::full(&u);
        let f = Frame::truncated(&u, Half(1)).unwrap();
        assert_eq!(f.boxes(), &[2, 3, 5, 6]);
        assert_eq!(f.lambda1(), Half::int(2));
        let mut projected = full.d_matrix().clone();
        for a in 1..=6usize {
            if !f.contains(a) {
                projected.set(a - 1, a - 1, Q::zero());
            }
        }
        assert_ne!(&projected, f.d_matrix());
    }

    #[test]
    fn block_projections() {
        let u = uea(&[3, 1], Kind::Orthogonal);
        let f = Frame::full(&u);
        let y = f.y();
        let upper = f.upper();
        let b = y.block(|a| upper.contains(&a), |_| true);
        assert_eq!(b.block(|a| upper.contains(&a), |_| true), b);
    }
}
