//! Realizations of `gl_N`, `so_N` and `sp_N` adapted to a pyramid.
//!
//! `V` has basis `e_a`, one vector per box, with `e_a = f^s w_i` when box
//! `a` is the `s`-th box of row `i`. For the orthogonal and symplectic
//! kinds (`ε = ±1`) the algebra is the fixed points of
//! `σ(X) = -J^{-1} X^T J` where the Gram matrix `J` of the form on `V` pairs
//! `f^s w_i` with `f^{s'} w_{i'}`, `s' = λ_i - 1 - s`. Basis elements are
//! `f_{a,b} = E_{a,b} + σ(E_{a,b}) = E_{a,b} + κ(a,b) E_{b',a'}`.
//!
//! Note: the letter J is overloaded in the literature (the left ideal in
//! `U(g)` and the Gram matrix on `V`); here the Gram matrix is
//! [`Realization::form_j`] and the ideal lives in [`crate::uea`].

use std::collections::HashMap;
use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{QMatrix, Span};
use crate::pyramid::{Half, Partition, Pyramid};
use crate::scalar::{fmt_q, q, qfrac, Q};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Kind {
    /// `gl_N`
    Gl,
    /// `so_N`, `ε = +1`
    Orthogonal,
    /// `sp_N`, `ε = -1`
    Symplectic,
}

impl Kind {
    pub fn epsilon(self) -> Option<i64> {
        match self {
            Kind::Gl => None,
            Kind::Orthogonal => Some(1),
            Kind::Symplectic => Some(-1),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Kind::Gl => "gl",
            Kind::Orthogonal => "so",
            Kind::Symplectic => "sp",
        }
    }

    pub fn parse(s: &str) -> Option<Kind> {
        match s {
            "gl" => Some(Kind::Gl),
            "so" => Some(Kind::Orthogonal),
            "sp" => Some(Kind::Symplectic),
            _ => None,
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Canonical representative `f_{a,b}` (or `e_{a,b}` for `gl`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BasisElement {
    pub a: usize,
    pub b: usize,
}

/// A linear combination of basis elements, sorted by index, no zeros.
pub type Combination = Vec<(usize, Q)>;

fn push_term(acc: &mut HashMap<usize, Q>, idx: usize, c: Q) {
    let e = acc.entry(idx).or_insert_with(Q::zero);
    *e += c;
}

fn finish(acc: HashMap<usize, Q>) -> Combination {
    let mut v: Combination = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
    v.sort_by_key(|(i, _)| *i);
    v
}

/// A classical Lie algebra realized on the pyramid basis of `V`.
#[derive(Debug)]
pub struct Realization {
    kind: Kind,
    pyramid: Pyramid,
    involution: Vec<usize>,
    basis: Vec<BasisElement>,
    index: HashMap<(usize, usize), usize>,
    images: Vec<QMatrix>,
    duals: Vec<QMatrix>,
    brackets: Vec<Vec<Combination>>,
    chi: Vec<Q>,
    f_matrix: QMatrix,
}

impl Realization {
    pub fn new(lambda: Partition, kind: Kind) -> Result<Realization> {
        let involution = build_involution(&lambda, kind)?;
        let pyramid = Pyramid::new(lambda);
        let mut r = Realization {
            kind,
            pyramid,
            involution,
            basis: Vec::new(),
            index: HashMap::new(),
            images: Vec::new(),
            duals: Vec::new(),
            brackets: Vec::new(),
            chi: Vec::new(),
            f_matrix: QMatrix::zeros(0, 0),
        };
        r.build_basis();
        r.f_matrix = r.nilpotent_matrix();
        r.images = r.basis.iter().map(|x| r.element_matrix(x.a, x.b)).collect();
        let all: Vec<usize> = (0..r.dim()).collect();
        r.duals = r.dual_matrices(&all)?;
        r.chi = r.images.iter().map(|m| r.form_matrices(&r.f_matrix, m)).collect();
        r.brackets = (0..r.dim())
            .map(|i| (0..r.dim()).map(|j| r.bracket_formula(i, j)).collect())
            .collect();
        Ok(r)
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn epsilon(&self) -> Option<i64> {
        self.kind.epsilon()
    }

    pub fn pyramid(&self) -> &Pyramid {
        &self.pyramid
    }

    pub fn lambda(&self) -> &Partition {
        self.pyramid.lambda()
    }

    /// `dim V`
    pub fn n(&self) -> usize {
        self.pyramid.len()
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Short identifier such as `so(3,1)`.
    pub fn id(&self) -> String {
        format!("{}{}", self.kind, self.lambda())
    }

    /// Row `i'` paired with row `i` (identity for `gl`).
    pub fn involution(&self, i: usize) -> usize {
        self.involution[i - 1]
    }

    pub fn even_grading(&self) -> bool {
        self.lambda().same_parity()
    }

    pub fn require_even(&self) -> Result<()> {
        if self.even_grading() {
            Ok(())
        } else {
            Err(Error::OddGrading(format!("{} has parts of both parities", self.lambda())))
        }
    }

    /// `η_{i≤i'}(s)`.
    pub fn eta(&self, i: usize, s: i64) -> Q {
        let li = self.pyramid.row_len(i) as i64;
        let eps = self.epsilon().unwrap_or(1);
        if i <= self.involution(i) {
            crate::scalar::sign(s)
        } else {
            crate::scalar::sign(li - 1 - s) * q(eps)
        }
    }

    /// The box `a'`: row `row(a)'`, column `λ_1 + 1 - col(a)`.
    pub fn prime(&self, a: usize) -> usize {
        let p = &self.pyramid;
        let i = p.row(a);
        let s = p.offset(a);
        p.box_at(self.involution(i), p.row_len(i) - 1 - s).expect("paired rows have equal length")
    }

    /// Coefficient `κ` with `f_{a,b} = E_{a,b} + κ E_{b',a'}` (zero for `gl`).
    pub fn kappa(&self, a: usize, b: usize) -> Q {
        let Some(eps) = self.epsilon() else { return Q::zero() };
        let p = &self.pyramid;
        let (i, s) = (p.row(b), p.offset(b) as i64);
        let (j, t) = (p.row(a), p.offset(a) as i64);
        let ip = self.involution(i);
        let sp = p.row_len(i) as i64 - 1 - s;
        -(q(eps) * self.eta(j, t) * self.eta(ip, sp))
    }

    /// Matrix image of `f_{a,b}` (or `E_{a,b}`) for arbitrary boxes.
    pub fn element_matrix(&self, a: usize, b: usize) -> QMatrix {
        let mut m = QMatrix::zeros(self.n(), self.n());
        m.add_at(a - 1, b - 1, &Q::one());
        if self.epsilon().is_some() {
            let (bp, ap) = (self.prime(b), self.prime(a));
            m.add_at(bp - 1, ap - 1, &self.kappa(a, b));
        }
        m
    }

    fn in_listed_basis(&self, a: usize, b: usize) -> bool {
        let p = &self.pyramid;
        let (ra, rb) = (p.row(a), p.row(b));
        let rbp = self.involution(rb);
        if ra != rb && ra != rbp {
            return rb < ra;
        }
        let sum = p.col(a) + p.col(b);
        let mid = Half::int(p.lambda1() as i32 + 1);
        match self.kind {
            Kind::Symplectic => sum >= mid,
            _ => sum > mid,
        }
    }

    fn key(&self, a: usize, b: usize) -> (usize, Half, usize, Half) {
        let p = &self.pyramid;
        (p.row(a), p.col(a), p.row(b), p.col(b))
    }

    fn build_basis(&mut self) {
        let n = self.n();
        let mut reps: Vec<BasisElement> = Vec::new();
        match self.kind {
            Kind::Gl => {
                for a in 1..=n {
                    for b in 1..=n {
                        reps.push(BasisElement { a, b });
                    }
                }
            }
            _ => {
                for a in 1..=n {
                    for b in 1..=n {
                        let partner = (self.prime(b), self.prime(a));
                        if partner == (a, b) {
                            if !(Q::one() + self.kappa(a, b)).is_zero() {
                                reps.push(BasisElement { a, b });
                            }
                            continue;
                        }
                        let mine = self.in_listed_basis(a, b);
                        let theirs = self.in_listed_basis(partner.0, partner.1);
                        let choose = match (mine, theirs) {
                            (true, false) => true,
                            (false, true) => false,
                            _ => self.key(a, b) < self.key(partner.0, partner.1),
                        };
                        if choose {
                            reps.push(BasisElement { a, b });
                        }
                    }
                }
            }
        }
        let p = &self.pyramid;
        reps.sort_by_key(|x| (p.col(x.b) - p.col(x.a), self.key(x.a, x.b)));
        self.index = reps.iter().enumerate().map(|(i, x)| ((x.a, x.b), i)).collect();
        self.basis = reps;
    }

    pub fn basis(&self) -> &[BasisElement] {
        &self.basis
    }

    pub fn element(&self, i: usize) -> BasisElement {
        self.basis[i]
    }

    pub fn image(&self, i: usize) -> &QMatrix {
        &self.images[i]
    }

    /// Matrix `U^i` of the dual basis element `u^i`.
    pub fn dual(&self, i: usize) -> &QMatrix {
        &self.duals[i]
    }

    pub fn index_of(&self, a: usize, b: usize) -> Option<usize> {
        self.index.get(&(a, b)).copied()
    }

    /// Writes `f_{a,b}` as `c · u_i`; `None` when `f_{a,b} = 0`.
    pub fn canonical(&self, a: usize, b: usize) -> Option<(usize, Q)> {
        if let Some(i) = self.index_of(a, b) {
            return Some((i, Q::one()));
        }
        if self.epsilon().is_none() {
            unreachable!("every matrix unit is a gl basis element");
        }
        let (bp, ap) = (self.prime(b), self.prime(a));
        if (bp, ap) == (a, b) {
            return None;
        }
        let i = self.index_of(bp, ap).expect("partner is canonical");
        Some((i, self.kappa(a, b)))
    }

    /// `f_{a,b}` as a combination of basis elements.
    pub fn f(&self, a: usize, b: usize) -> Combination {
        self.canonical(a, b).into_iter().collect()
    }

    /// The image of `f` in `End(V)`: `F e_a = e_{a+1}` inside each row.
    pub fn f_matrix(&self) -> &QMatrix {
        &self.f_matrix
    }

    fn nilpotent_matrix(&self) -> QMatrix {
        let p = &self.pyramid;
        let mut m = QMatrix::zeros(self.n(), self.n());
        for i in 1..=p.n_rows() {
            for s in 0..p.row_len(i).saturating_sub(1) {
                let a = p.box_at(i, s).unwrap();
                m.set(a, a - 1, Q::one());
            }
        }
        m
    }

    /// The Gram matrix of the bilinear form on `V` (`None` for `gl`).
    pub fn form_j(&self) -> Option<QMatrix> {
        self.epsilon()?;
        let p = &self.pyramid;
        let mut j = QMatrix::zeros(self.n(), self.n());
        for a in p.boxes() {
            let i = p.row(a);
            j.set(a - 1, self.prime(a) - 1, self.eta(i, p.offset(a) as i64));
        }
        Some(j)
    }

    /// `σ(X) = -J^{-1} X^T J`.
    pub fn sigma(&self, x: &QMatrix) -> Option<QMatrix> {
        let j = self.form_j()?;
        let jinv = j.inverse().ok()?;
        Some((&(&jinv * &x.transpose()) * &j).scale(&-Q::one()))
    }

    pub fn grade(&self, i: usize) -> Half {
        let x = self.basis[i];
        self.pyramid.col(x.b) - self.pyramid.col(x.a)
    }

    pub fn graded_component(&self, k: Half) -> Vec<usize> {
        (0..self.dim()).filter(|&i| self.grade(i) == k).collect()
    }

    /// Basis indices of `g_{≥1}`.
    pub fn positive_part(&self) -> Vec<usize> {
        (0..self.dim()).filter(|&i| self.grade(i) >= Half::int(1)).collect()
    }

    /// `⟨X, Y⟩` on matrices: `½ tr(XY)` for `so`/`sp`, `tr(XY)` for `gl`.
    pub fn form_matrices(&self, x: &QMatrix, y: &QMatrix) -> Q {
        let t = (x * y).trace();
        match self.kind {
            Kind::Gl => t,
            _ => t * qfrac(1, 2),
        }
    }

    pub fn form(&self, i: usize, j: usize) -> Q {
        self.form_matrices(&self.images[i], &self.images[j])
    }

    /// `⟨f | u_i⟩`, the character defining the ideal.
    pub fn chi(&self, i: usize) -> &Q {
        &self.chi[i]
    }

    /// Dual matrices of `members` with respect to the form restricted to
    /// their span.
    pub fn dual_matrices(&self, members: &[usize]) -> Result<Vec<QMatrix>> {
        let m = members.len();
        let images: Vec<QMatrix> = members.iter().map(|&i| self.element_matrix(self.basis[i].a, self.basis[i].b)).collect();
        let mut gram = QMatrix::zeros(m, m);
        for x in 0..m {
            for y in 0..m {
                gram.set(x, y, self.form_matrices(&images[x], &images[y]));
            }
        }
        let inv = gram.inverse()?;
        Ok((0..m)
            .map(|x| {
                let mut d = QMatrix::zeros(self.n(), self.n());
                for (y, img) in images.iter().enumerate() {
                    let c = inv.get(x, y);
                    if !c.is_zero() {
                        d = &d + &img.scale(c);
                    }
                }
                d
            })
            .collect())
    }

    /// Coordinates of a matrix in the basis, or `None` if it is not in `g`.
    pub fn coordinates(&self, m: &QMatrix) -> Option<Vec<Q>> {
        let coords: Vec<Q> = (0..self.dim())
            .map(|i| {
                let x = self.basis[i];
                m.get(x.a - 1, x.b - 1) / self.images[i].get(x.a - 1, x.b - 1)
            })
            .collect();
        (self.matrix_of(&coords) == *m).then_some(coords)
    }

    pub fn matrix_of(&self, coords: &[Q]) -> QMatrix {
        let mut out = QMatrix::zeros(self.n(), self.n());
        for (i, c) in coords.iter().enumerate() {
            if !c.is_zero() {
                out = &out + &self.images[i].scale(c);
            }
        }
        out
    }

    pub fn combination_matrix(&self, c: &[(usize, Q)]) -> QMatrix {
        let mut out = QMatrix::zeros(self.n(), self.n());
        for (i, x) in c {
            out = &out + &self.images[*i].scale(x);
        }
        out
    }

    pub fn dense(&self, c: &[(usize, Q)]) -> Vec<Q> {
        let mut v = vec![Q::zero(); self.dim()];
        for (i, x) in c {
            v[*i] += x;
        }
        v
    }

    /// Structure constants `[u_i, u_j]`.
    pub fn bracket(&self, i: usize, j: usize) -> &Combination {
        &self.brackets[i][j]
    }

    /// `[u_i, u_j]` from the commutator of matrix images.
    pub fn bracket_by_matrices(&self, i: usize, j: usize) -> Combination {
        let c = self.images[i].commutator(&self.images[j]);
        let coords = self.coordinates(&c).expect("g is closed under commutators");
        coords.into_iter().enumerate().filter(|(_, x)| !x.is_zero()).collect()
    }

    fn bracket_formula(&self, x: usize, y: usize) -> Combination {
        let BasisElement { a, b } = self.basis[x];
        let BasisElement { a: c, b: d } = self.basis[y];
        let mut acc = HashMap::new();
        let add = |acc: &mut HashMap<usize, Q>, u: usize, v: usize, coeff: Q| {
            if let Some((k, s)) = self.canonical(u, v) {
                push_term(acc, k, coeff * s);
            }
        };
        if b == c {
            add(&mut acc, a, d, Q::one());
        }
        if a == d {
            add(&mut acc, c, b, -Q::one());
        }
        if let Some(eps) = self.epsilon() {
            let p = &self.pyramid;
            let eps = q(eps);
            let off = |z: usize| p.offset(z) as i64;
            let dual_off = |z: usize| (p.row_len(p.row(z)) - 1 - p.offset(z)) as i64;
            if b == self.prime(d) {
                let coeff = -(eps.clone() * self.eta(p.row(c), off(c)) * self.eta(p.row(b), off(b)));
                add(&mut acc, a, self.prime(c), coeff);
            }
            if a == self.prime(c) {
                let coeff = eps
                    * self.eta(self.involution(p.row(a)), dual_off(a))
                    * self.eta(self.involution(p.row(d)), dual_off(d));
                add(&mut acc, self.prime(d), b, coeff);
            }
        }
        finish(acc)
    }

    /// Basis elements of `g^k`: those `f_{a,b}` with both columns in the
    /// window `[s_k, e_k]`.
    pub fn subalgebra(&self, k: Half) -> Result<Subalgebra> {
        let (lo, hi, _) = self.pyramid.truncation_bounds(k)?;
        let p = &self.pyramid;
        let inside = |z: usize| p.col(z) >= lo && p.col(z) <= hi;
        let members = (0..self.dim()).filter(|&i| inside(self.basis[i].a) && inside(self.basis[i].b)).collect();
        Ok(Subalgebra { k, lo, hi, members })
    }

    /// `ζ_i^{j,t} = Σ_{s=0}^{t} f_{i,s}^{j,s+t'}`, `t' = λ_j - 1 - t`.
    pub fn zeta(&self, i: usize, j: usize, t: usize) -> Result<Combination> {
        let p = &self.pyramid;
        if i == 0 || j == 0 || i > p.n_rows() || j > p.n_rows() || t >= p.row_len(j) {
            return Err(Error::ZetaIndex(format!("zeta_{i}^{{{j},{t}}}")));
        }
        let tp = p.row_len(j) - 1 - t;
        let mut acc = HashMap::new();
        for s in 0..=t {
            let (Some(b), Some(a)) = (p.box_at(i, s), p.box_at(j, s + tp)) else { continue };
            if let Some((k, c)) = self.canonical(a, b) {
                push_term(&mut acc, k, c);
            }
        }
        let v = finish(acc);
        if v.is_empty() {
            return Err(Error::ZeroZeta { i, j, t });
        }
        Ok(v)
    }

    /// Index triples `(i, j, t)` of the standard basis of the centralizer
    /// `g^f`.
    pub fn centralizer_basis(&self) -> Vec<(usize, usize, usize)> {
        let p = &self.pyramid;
        let n = p.n_rows();
        let mut out = Vec::new();
        if self.kind == Kind::Gl {
            for i in 1..=n {
                for j in 1..=n {
                    for t in 0..p.row_len(i).min(p.row_len(j)) {
                        out.push((i, j, t));
                    }
                }
            }
            return out;
        }
        for i in 1..=n {
            let ip = self.involution(i);
            let li = p.row_len(i);
            for t in 0..li {
                if i < ip || (i == ip && (li - t).is_multiple_of(2)) {
                    out.push((i, i, t));
                }
            }
            if i != ip {
                for t in 0..li {
                    if (li - t) % 2 == 1 {
                        out.push((i, ip, t));
                    }
                }
            }
            for j in i + 1..=n {
                if j != ip {
                    for t in 0..li.min(p.row_len(j)) {
                        out.push((i, j, t));
                    }
                }
            }
        }
        out
    }

    /// Dimension of `g^f` computed as the kernel of `ad F` on `g`.
    pub fn centralizer_dim_by_kernel(&self) -> usize {
        let rows: Vec<Vec<Q>> = (0..self.dim())
            .map(|i| {
                let c = self.images[i].commutator(&self.f_matrix);
                (0..self.n() * self.n()).map(|k| c.get(k / self.n(), k % self.n()).clone()).collect()
            })
            .collect();
        self.dim() - QMatrix::from_rows(&rows, self.n() * self.n()).rank()
    }

    pub fn to_json(&self) -> RealizationJson {
        RealizationJson {
            partition: self.lambda().parts().to_vec(),
            kind: self.kind.name().into(),
            involution: self.involution.clone(),
            basis: self
                .basis
                .iter()
                .enumerate()
                .map(|(i, x)| BasisJson {
                    a: x.a,
                    b: x.b,
                    grade: self.grade(i).to_string(),
                    sign: self.epsilon().map(|_| fmt_q(&self.kappa(x.a, x.b))),
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct BasisJson {
    pub a: usize,
    pub b: usize,
    pub grade: String,
    /// `κ` in `f_{a,b} = E_{a,b} + κ E_{b',a'}`.
    pub sign: Option<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct RealizationJson {
    pub partition: Vec<usize>,
    pub kind: String,
    pub involution: Vec<usize>,
    pub basis: Vec<BasisJson>,
}

/// The truncation `g^k` inside `g`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subalgebra {
    pub k: Half,
    /// `s_k`
    pub lo: Half,
    /// `e_k`
    pub hi: Half,
    pub members: Vec<usize>,
}

impl Subalgebra {
    pub fn contains_column(&self, c: Half) -> bool {
        c >= self.lo && c <= self.hi
    }

    pub fn contains(&self, i: usize) -> bool {
        self.members.binary_search(&i).is_ok()
    }

    /// Jordan type of `f_k`.
    pub fn jordan_type(&self, r: &Realization) -> Vec<usize> {
        let p = r.pyramid();
        let mut parts: Vec<usize> = (1..=p.n_rows())
            .map(|i| p.row_boxes(i).filter(|&a| self.contains_column(p.col(a))).count())
            .filter(|&c| c > 0)
            .collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        parts
    }

    /// `Π_{[-k,k]} X Ψ_{[-k,k]}` as an `N × N` matrix.
    pub fn project(&self, r: &Realization, x: &QMatrix) -> QMatrix {
        let p = r.pyramid();
        let mut out = x.clone();
        for a in p.boxes() {
            for b in p.boxes() {
                if !(self.contains_column(p.col(a)) && self.contains_column(p.col(b))) {
                    out.set(a - 1, b - 1, Q::zero());
                }
            }
        }
        out
    }
}

fn build_involution(lambda: &Partition, kind: Kind) -> Result<Vec<usize>> {
    let n = lambda.len();
    let Some(eps) = kind.epsilon() else { return Ok((1..=n).collect()) };
    let name = kind.name().to_string();
    if !lambda.same_parity() {
        return Err(Error::Inadmissible {
            kind: name,
            reason: format!("{lambda} mixes odd and even parts (the Dynkin grading would not be even)"),
        });
    }
    let mut inv: Vec<usize> = (1..=n).collect();
    let mut i = 0;
    while i < n {
        let size = lambda.parts()[i];
        let mut j = i;
        while j < n && lambda.parts()[j] == size {
            j += 1;
        }
        let self_paired = eps * if size.is_multiple_of(2) { 1 } else { -1 } == -1;
        if !self_paired {
            let mult = j - i;
            if mult % 2 != 0 {
                let parity = if size.is_multiple_of(2) { "even" } else { "odd" };
                return Err(Error::Inadmissible {
                    kind: name,
                    reason: format!("{parity} part {size} occurs {mult} times; {parity} parts need even multiplicity"),
                });
            }
            let mut r = i;
            while r < j {
                inv[r] = r + 2;
                inv[r + 1] = r + 1;
                r += 2;
            }
        }
        i = j;
    }
    Ok(inv)
}

/// `N(N-1)/2`, `N(N+1)/2` or `N²`.
pub fn expected_dim(kind: Kind, n: usize) -> usize {
    match kind {
        Kind::Gl => n * n,
        Kind::Orthogonal => n * (n - 1) / 2,
        Kind::Symplectic => n * (n + 1) / 2,
    }
}

/// The scalar `c` with `x = c · y`, if any.
pub fn combination_is_multiple(x: &[(usize, Q)], y: &[(usize, Q)]) -> Option<Q> {
    if x.len() != y.len() || x.is_empty() {
        return None;
    }
    let ratio = &x[0].1 / &y[0].1;
    x.iter().zip(y).all(|((i, a), (j, b))| i == j && *a == b * &ratio).then_some(ratio)
}

/// Negates a combination.
pub fn negate(x: &[(usize, Q)]) -> Combination {
    x.iter().map(|(i, c)| (*i, -c.clone())).collect()
}

/// Bracket of two combinations using the structure constants.
pub fn bracket_combinations(r: &Realization, x: &[(usize, Q)], y: &[(usize, Q)]) -> Combination {
    let mut acc = HashMap::new();
    for (i, a) in x {
        for (j, b) in y {
            for (k, c) in r.bracket(*i, *j) {
                push_term(&mut acc, *k, a * b * c);
            }
        }
    }
    finish(acc)
}

/// Span of a set of combinations closed under brackets.
pub fn bracket_closure(r: &Realization, seeds: &[Combination]) -> Span {
    let mut span = Span::new(r.dim());
    let mut elems: Vec<Combination> = Vec::new();
    for s in seeds {
        if span.insert(&r.dense(s)) {
            elems.push(s.clone());
        }
    }
    let mut start = 0;
    while start < elems.len() {
        let end = elems.len();
        for x in start..end {
            for y in 0..end {
                let z = bracket_combinations(r, &elems[x], &elems[y]);
                if !z.is_empty() && span.insert(&r.dense(&z)) {
                    elems.push(z);
                }
            }
        }
        start = end;
    }
    span
}

#[cfg(test)]
mod tests {
    use super::*;

    fn real(p: &[usize], k: Kind) -> Realization {
        Realization::new(Partition::new(p.to_vec()).unwrap(), k).unwrap()
    }

    const CASES: &[(&[usize], Kind)] = &[
        (&[3, 1], Kind::Orthogonal),
        (&[2, 2], Kind::Orthogonal),
        (&[3, 3], Kind::Orthogonal),
        (&[5, 3], Kind::Orthogonal),
        (&[2], Kind::Symplectic),
        (&[2, 2], Kind::Symplectic),
        (&[4, 2], Kind::Symplectic),
        (&[3, 3], Kind::Symplectic),
        (&[3, 1], Kind::Gl),
        (&[2, 2], Kind::Gl),
    ];

    #[test]
    fn involutions() {
        let r = real(&[2, 2], Kind::Symplectic);
        assert_eq!((r.involution(1), r.involution(2)), (1, 2));
        let r = real(&[2, 2], Kind::Orthogonal);
        assert_eq!((r.involution(1), r.involution(2)), (2, 1));
        let r = real(&[3, 1], Kind::Orthogonal);
        assert_eq!((r.involution(1), r.involution(2)), (1, 2));
    }

    #[test]
    fn admissibility_errors() {
        let e = Realization::new(Partition::new(vec![3, 1]).unwrap(), Kind::Symplectic).unwrap_err();
        assert!(e.to_string().contains("odd part 3 occurs 1 times"), "{e}");
        let e = Realization::new(Partition::new(vec![2]).unwrap(), Kind::Orthogonal).unwrap_err();
        assert!(e.to_string().contains("even part 2"), "{e}");
        let e = Realization::new(Partition::new(vec![3, 2]).unwrap(), Kind::Orthogonal).unwrap_err();
        assert!(e.to_string().contains("mixes"), "{e}");
    }

    #[test]
    fn dimensions() {
        for &(p, k) in CASES {
            let r = real(p, k);
            assert_eq!(r.dim(), expected_dim(k, r.n()), "{}", r.id());
        }
        assert_eq!(real(&[2], Kind::Symplectic).dim(), 3);
        assert_eq!(real(&[3, 1], Kind::Orthogonal).dim(), 6);
        assert_eq!(real(&[2, 1], Kind::Gl).dim(), 9);
    }

    #[test]
    fn eta_products() {
        for &(p, k) in CASES {
            let r = real(p, k);
            let Some(eps) = r.epsilon() else { continue };
            for i in 1..=r.pyramid().n_rows() {
                let li = r.pyramid().row_len(i) as i64;
                for s in 0..li {
                    assert_eq!(r.eta(i, s) * r.eta(r.involution(i), li - 1 - s), q(eps));
                }
            }
        }
        let r = real(&[2, 2], Kind::Orthogonal);
        assert_eq!(r.eta(1, 0), q(1));
        assert_eq!(r.eta(2, 0), q(-1));
    }

    #[test]
    fn images_are_sigma_fixed() {
        for &(p, k) in CASES {
            let r = real(p, k);
            let Some(j) = r.form_j() else { continue };
            let sym = if r.epsilon() == Some(1) { j.transpose() } else { j.transpose().scale(&-Q::one()) };
            assert_eq!(sym, j);
            for i in 0..r.dim() {
                let m = r.image(i);
                assert!((&(&j * m) + &(&m.transpose() * &j)).is_zero(), "{} {:?}", r.id(), r.element(i));
                let x = r.element(i);
                let mut e = QMatrix::zeros(r.n(), r.n());
                e.set(x.a - 1, x.b - 1, Q::one());
                assert_eq!(&e + &r.sigma(&e).unwrap(), *m);
            }
            let f = r.f_matrix();
            assert!((&(&j * f) + &(&f.transpose() * &j)).is_zero());
        }
    }

    #[test]
    fn brackets_match_matrices_and_jacobi() {
        for &(p, k) in CASES {
            let r = real(p, k);
            for i in 0..r.dim() {
                assert!(r.bracket(i, i).is_empty());
                for j in 0..r.dim() {
                    assert_eq!(r.bracket(i, j), &r.bracket_by_matrices(i, j), "{} {i} {j}", r.id());
                }
            }
        }
    }

    #[test]
    fn form_is_invariant_and_duals_pair() {
        for &(p, k) in CASES {
            let r = real(p, k);
            for i in 0..r.dim() {
                for j in 0..r.dim() {
                    let pairing = r.form_matrices(r.dual(i), r.image(j));
                    assert_eq!(pairing, if i == j { Q::one() } else { Q::zero() });
                }
            }
        }
        let r = real(&[2, 2], Kind::Gl);
        for i in 0..r.dim() {
            let x = r.element(i);
            let mut e = QMatrix::zeros(r.n(), r.n());
            e.set(x.b - 1, x.a - 1, Q::one());
            assert_eq!(r.dual(i), &e);
        }
    }

    #[test]
    fn dual_special_case() {
        let r = real(&[3, 3], Kind::Symplectic);
        let p = r.pyramid();
        let l1 = p.lambda1() as i32;
        for i in 0..r.dim() {
            let x = r.element(i);
            let paired = p.row(x.a) == r.involution(p.row(x.b));
            let mut expect = if paired && p.col(x.a) + p.col(x.b) == Half::int(l1 + 1) {
                let mut e = QMatrix::zeros(r.n(), r.n());
                e.set(x.b - 1, x.a - 1, Q::one());
                e
            } else {
                r.element_matrix(x.b, x.a)
            };
            if !paired || p.col(x.a) + p.col(x.b) != Half::int(l1 + 1) {
                // f_{b,a} is dual up to the factor 1/⟨f_{a,b}, f_{b,a}⟩ = 1
                expect = expect.scale(&(Q::one() / r.form_matrices(&expect, r.image(i))));
            }
            assert_eq!(r.dual(i), &expect);
        }
    }

    #[test]
    fn chi_matches_projection_rule() {
        for &(p, k) in CASES {
            let r = real(p, k);
            let py = r.pyramid();
            for i in r.positive_part() {
                let x = r.element(i);
                let expect = py.row(x.a) == py.row(x.b) && py.col(x.b) == py.col(x.a) + Half::int(1);
                assert_eq!(*r.chi(i), if expect { Q::one() } else { Q::zero() }, "{} {:?}", r.id(), x);
            }
        }
    }

    #[test]
    fn grading() {
        let r = real(&[3, 1], Kind::Orthogonal);
        assert!(r.graded_component(Half(1)).is_empty());
        let r = real(&[2, 2], Kind::Symplectic);
        let d0 = r.graded_component(Half::ZERO).len();
        let pos: usize = (1..4).map(|k| r.graded_component(Half::int(k)).len()).sum();
        assert_eq!(d0 + 2 * pos, r.dim());
        for i in 0..r.dim() {
            let x = r.element(i);
            let p = r.pyramid();
            if p.row(x.a) == p.row(x.b) && p.col(x.b) == p.col(x.a) + Half::int(1) {
                assert_eq!(r.grade(i), Half::int(1));
            }
        }
    }

    #[test]
    fn truncations() {
        let r = real(&[4, 2], Kind::Symplectic);
        let sub = r.subalgebra(Half(1)).unwrap();
        assert_eq!((sub.lo, sub.hi), (Half::int(2), Half::int(3)));
        assert_eq!(sub.jordan_type(&r), vec![2, 2]);
        let full = r.subalgebra(Half(3)).unwrap();
        assert_eq!(full.members.len(), r.dim());
        let r = real(&[3, 1], Kind::Orthogonal);
        let sub = r.subalgebra(Half::ZERO).unwrap();
        for i in 0..r.dim() {
            let projected = sub.project(&r, r.image(i));
            assert_eq!(!projected.is_zero(), sub.contains(i));
            if sub.contains(i) {
                assert_eq!(&projected, r.image(i));
            }
        }
        for x in &sub.members {
            for y in &sub.members {
                assert!(r.bracket(*x, *y).iter().all(|(z, _)| sub.contains(*z)));
            }
        }
    }

    #[test]
    fn centralizer() {
        for &(p, k) in CASES {
            let r = real(p, k);
            let basis = r.centralizer_basis();
            assert_eq!(basis.len(), r.centralizer_dim_by_kernel(), "{}", r.id());
            let mut span = Span::new(r.dim());
            for &(i, j, t) in &basis {
                let z = r.zeta(i, j, t).unwrap();
                assert!(r.combination_matrix(&z).commutator(r.f_matrix()).is_zero());
                assert!(span.insert(&r.dense(&z)), "{} dependent zeta {i} {j} {t}", r.id());
            }
        }
        let r = real(&[3, 1], Kind::Orthogonal);
        assert!(matches!(r.zeta(1, 1, 0), Err(Error::ZeroZeta { .. })));
    }

    #[test]
    fn zeta_bracket_rule() {
        let r = real(&[5, 3, 1], Kind::Orthogonal);
        let (i, k, j) = (3, 2, 1);
        for t in 0..3 {
            let lhs = bracket_combinations(&r, &r.zeta(i, k, 0).unwrap(), &r.zeta(k, j, t).unwrap());
            let idx = t as i64 - 2;
            if idx >= 0 {
                assert_eq!(lhs, negate(&r.zeta(i, j, idx as usize).unwrap()));
            } else {
                assert!(lhs.is_empty());
            }
        }
    }

    #[test]
    fn json_shape() {
        let r = real(&[2], Kind::Symplectic);
        let j = serde_json::to_value(r.to_json()).unwrap();
        assert_eq!(j["kind"], "sp");
        assert_eq!(j["basis"].as_array().unwrap().len(), 3);
    }
}
