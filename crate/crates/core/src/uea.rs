//! PBW arithmetic in `U(g)`.
//!
//! Monomials are nondecreasing words in basis indices. The basis is sorted
//! by grade, so `g_{≥1}` factors sit at the right end of every monomial and
//! reduction modulo the left ideal `J = U(g)·{m - ⟨f|m⟩ : m ∈ g_{≥1}}` is a
//! right-to-left scan.
//!
//! Degrees use the loop filtration `deg X = -k` for `X ∈ g_k`, so that
//! `deg f_{a,b} = col(a) - col(b)`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::sync::Mutex;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::liealg::Realization;
use crate::pyramid::Half;
use crate::scalar::{fmt_q, Q};

pub type Monomial = Vec<u16>;

/// An element of `U(g)` in PBW normal form.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct UeaElement {
    terms: BTreeMap<Monomial, Q>,
}

impl UeaElement {
    pub fn zero() -> UeaElement {
        UeaElement::default()
    }

    pub fn scalar(c: Q) -> UeaElement {
        let mut x = UeaElement::zero();
        x.add_term(Vec::new(), c);
        x
    }

    pub fn one() -> UeaElement {
        UeaElement::scalar(Q::one())
    }

    pub fn generator(i: usize) -> UeaElement {
        let mut x = UeaElement::zero();
        x.add_term(vec![i as u16], Q::one());
        x
    }

    /// `Σ c_i u_i`.
    pub fn linear(c: &[(usize, Q)]) -> UeaElement {
        let mut x = UeaElement::zero();
        for (i, v) in c {
            x.add_term(vec![*i as u16], v.clone());
        }
        x
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Q)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &[u16]) -> Q {
        self.terms.get(m).cloned().unwrap_or_else(Q::zero)
    }

    /// Adds `c · m`; `m` must already be sorted.
    pub fn add_term(&mut self, m: Monomial, c: Q) {
        debug_assert!(m.windows(2).all(|w| w[0] <= w[1]), "unsorted monomial {m:?}");
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &UeaElement, c: &Q) {
        if c.is_zero() {
            return;
        }
        for (m, v) in &other.terms {
            self.add_term(m.clone(), v * c);
        }
    }

    pub fn scale(&self, c: &Q) -> UeaElement {
        if c.is_zero() {
            return UeaElement::zero();
        }
        UeaElement { terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect() }
    }

    /// The constant term.
    pub fn constant(&self) -> Q {
        self.coefficient(&[])
    }

    /// Terms of length one, as a combination of basis elements.
    pub fn linear_part(&self) -> Vec<(usize, Q)> {
        self.terms.iter().filter(|(m, _)| m.len() == 1).map(|(m, v)| (m[0] as usize, v.clone())).collect()
    }

    /// Longest monomial length.
    pub fn max_length(&self) -> usize {
        self.terms.keys().map(Vec::len).max().unwrap_or(0)
    }
}

impl Add for &UeaElement {
    type Output = UeaElement;
    fn add(self, o: &UeaElement) -> UeaElement {
        let mut x = self.clone();
        x += o;
        x
    }
}

impl AddAssign<&UeaElement> for UeaElement {
    fn add_assign(&mut self, o: &UeaElement) {
        for (m, v) in &o.terms {
            self.add_term(m.clone(), v.clone());
        }
    }
}

impl Sub for &UeaElement {
    type Output = UeaElement;
    fn sub(self, o: &UeaElement) -> UeaElement {
        let mut x = self.clone();
        x.add_scaled(o, &-Q::one());
        x
    }
}

impl Neg for &UeaElement {
    type Output = UeaElement;
    fn neg(self) -> UeaElement {
        self.scale(&-Q::one())
    }
}

impl Mul<&Q> for &UeaElement {
    type Output = UeaElement;
    fn mul(self, c: &Q) -> UeaElement {
        self.scale(c)
    }
}

/// An element of `U(g)/J`, represented in `U(g_{≤0})`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct QuotientElement(UeaElement);

impl QuotientElement {
    pub fn zero() -> QuotientElement {
        QuotientElement(UeaElement::zero())
    }

    /// `1̄`
    pub fn unit() -> QuotientElement {
        QuotientElement(UeaElement::one())
    }

    /// The canonical lift.
    pub fn lift(&self) -> &UeaElement {
        &self.0
    }

    pub fn into_lift(self) -> UeaElement {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
}

/// `U(g)` over a fixed realization, with a shared rewriting memo.
#[derive(Debug)]
pub struct Uea {
    r: Realization,
    positive_from: usize,
    memo: Mutex<HashMap<(Monomial, u16), UeaElement>>,
}

impl Uea {
    pub fn new(r: Realization) -> Uea {
        let positive_from = (0..r.dim()).find(|&i| r.grade(i) >= Half::int(1)).unwrap_or(r.dim());
        Uea { r, positive_from, memo: Mutex::new(HashMap::new()) }
    }

    pub fn realization(&self) -> &Realization {
        &self.r
    }

    pub fn is_positive(&self, i: u16) -> bool {
        i as usize >= self.positive_from
    }

    /// `m · u_g` in normal form, for a sorted word `m`.
    fn mul_word_gen(&self, m: &[u16], g: u16) -> UeaElement {
        if m.last().is_none_or(|&x| x <= g) {
            let mut w = m.to_vec();
            w.push(g);
            let mut out = UeaElement::zero();
            out.add_term(w, Q::one());
            return out;
        }
        let key = (m.to_vec(), g);
        if let Some(v) = self.memo.lock().unwrap().get(&key) {
            return v.clone();
        }
        // m' x g = (m' g) x + m' [x, g]
        let (x, head) = m.split_last().unwrap();
        let mut out = UeaElement::zero();
        let left = self.mul_word_gen(head, g);
        for (w, c) in left.terms() {
            out.add_scaled(&self.mul_word_gen(w, *x), c);
        }
        for (k, c) in self.r.bracket(*x as usize, g as usize) {
            out.add_scaled(&self.mul_word_gen(head, *k as u16), c);
        }
        self.memo.lock().unwrap().insert(key, out.clone());
        out
    }

    fn mul_word(&self, x: &UeaElement, w: &[u16]) -> UeaElement {
        let mut cur = x.clone();
        for &g in w {
            let mut next = UeaElement::zero();
            for (m, c) in cur.terms() {
                next.add_scaled(&self.mul_word_gen(m, g), c);
            }
            cur = next;
        }
        cur
    }

    pub fn multiply(&self, x: &UeaElement, y: &UeaElement) -> UeaElement {
        let mut out = UeaElement::zero();
        for (w, c) in y.terms() {
            out.add_scaled(&self.mul_word(x, w), c);
        }
        out
    }

    pub fn commutator(&self, x: &UeaElement, y: &UeaElement) -> UeaElement {
        &self.multiply(x, y) - &self.multiply(y, x)
    }

    /// Image in `U(g)/J`.
    pub fn reduce(&self, x: &UeaElement) -> QuotientElement {
        let mut out = UeaElement::zero();
        for (m, c) in x.terms() {
            let split = m.iter().position(|&g| self.is_positive(g)).unwrap_or(m.len());
            let mut coeff = c.clone();
            for &g in &m[split..] {
                coeff *= self.r.chi(g as usize);
                if coeff.is_zero() {
                    break;
                }
            }
            out.add_term(m[..split].to_vec(), coeff);
        }
        QuotientElement(out)
    }

    /// Left action of `U(g)` on `U(g)/J`.
    pub fn act(&self, u: &UeaElement, x: &QuotientElement) -> QuotientElement {
        self.reduce(&self.multiply(u, x.lift()))
    }

    /// `m · x̄ - x̄ · m` in `U(g)/J` for `m ∈ g_{≥1/2}`.
    pub fn adjoint_action(&self, m: usize, x: &QuotientElement) -> Result<QuotientElement> {
        if self.r.grade(m) <= Half::ZERO {
            return Err(Error::GradeTooLow(self.name(m)));
        }
        let gm = UeaElement::generator(m);
        let mut out = self.act(&gm, x).into_lift();
        if self.is_positive(m as u16) {
            out.add_scaled(x.lift(), &-self.r.chi(m).clone());
        } else {
            out.add_scaled(self.reduce(&self.multiply(x.lift(), &gm)).lift(), &-Q::one());
        }
        Ok(QuotientElement(out))
    }

    /// `deg` of a monomial in the loop filtration.
    pub fn degree(&self, m: &[u16]) -> Half {
        m.iter().fold(Half::ZERO, |acc, &g| acc - self.r.grade(g as usize))
    }

    /// Top degree and the sum of the monomials of that degree.
    pub fn gr_symbol(&self, x: &UeaElement) -> Result<(Half, UeaElement)> {
        let top = x.terms().map(|(m, _)| self.degree(m)).max().ok_or(Error::ZeroSymbol)?;
        let mut out = UeaElement::zero();
        for (m, c) in x.terms() {
            if self.degree(m) == top {
                out.add_term(m.clone(), c.clone());
            }
        }
        Ok((top, out))
    }

    /// The part of `x` in a fixed filtration degree.
    pub fn homogeneous_part(&self, x: &UeaElement, d: Half) -> UeaElement {
        let mut out = UeaElement::zero();
        for (m, c) in x.terms() {
            if self.degree(m) == d {
                out.add_term(m.clone(), c.clone());
            }
        }
        out
    }

    pub fn name(&self, i: usize) -> String {
        let x = self.r.element(i);
        let letter = if self.r.epsilon().is_some() { 'f' } else { 'e' };
        format!("{letter}[{},{}]", x.a, x.b)
    }

    /// `"p/q · f[a,b]·f[c,d] + …"` in canonical order.
    pub fn format(&self, x: &UeaElement) -> String {
        if x.is_zero() {
            return "0".into();
        }
        let parts: Vec<String> = x
            .terms()
            .map(|(m, c)| {
                if m.is_empty() {
                    fmt_q(c)
                } else {
                    let word: Vec<String> = m.iter().map(|&g| self.name(g as usize)).collect();
                    format!("{} · {}", fmt_q(c), word.join("·"))
                }
            })
            .collect();
        parts.join(" + ")
    }

    pub fn memo_size(&self) -> usize {
        self.memo.lock().unwrap().len()
    }
}

/// Displays a [`UeaElement`] using raw generator indices.
impl fmt::Display for UeaElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (m, c) in &self.terms {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            write!(f, "{}", fmt_q(c))?;
            for g in m {
                write!(f, "·u{g}")?;
            }
        }
        Ok(())
    }
}
