//! Bollobás–Riordan and Tutte polynomials with exact integer coefficients.
//!
//! The ribbon graph polynomial uses the state sum
//! `R(G) = Σ_A (x-1)^{r(E)-r(A)} (y-1)^{n(A)} z^{k(A)-b(A)+n(A)}`
//! with `r(A) = |V| - k(A)` and `n(A) = |A| - r(A)`. A bridge gives `x`, an
//! orientable loop `y`. The exponent of `z` is the Euler genus of `(V, A)`,
//! so plane graphs have no `z` terms and `R(G)` equals the Tutte polynomial
//! of their cycle matroid.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::dm::{SetSystem, GROUND_CAP};
use crate::error::{Error, Result};
use crate::ribbon::stats::Tracer;
use crate::ribbon::ArrowPresentation;
use crate::subset::Subset;

/// Sparse polynomial in `x`, `y`, `z` keyed by exponent vectors.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    terms: BTreeMap<[u32; 3], i64>,
}

const VARS: [char; 3] = ['x', 'y', 'z'];

impl MultiPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: i64) -> Self {
        Self::monomial(c, [0, 0, 0])
    }

    pub fn monomial(c: i64, exp: [u32; 3]) -> Self {
        let mut p = Self::zero();
        p.add_term(exp, c);
        p
    }

    pub fn x() -> Self {
        Self::monomial(1, [1, 0, 0])
    }

    pub fn y() -> Self {
        Self::monomial(1, [0, 1, 0])
    }

    pub fn z() -> Self {
        Self::monomial(1, [0, 0, 1])
    }

    fn add_term(&mut self, exp: [u32; 3], c: i64) {
        if c == 0 {
            return;
        }
        let e = self.terms.entry(exp).or_insert(0);
        *e += c;
        if *e == 0 {
            self.terms.remove(&exp);
        }
    }

    pub fn coefficient(&self, exp: [u32; 3]) -> i64 {
        self.terms.get(&exp).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = ([u32; 3], i64)> + '_ {
        self.terms.iter().map(|(&e, &c)| (e, c))
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::constant(1), |acc, _| &acc * self)
    }

    /// Sets `z = 1`.
    pub fn at_z_one(&self) -> Self {
        let mut p = Self::zero();
        for (&[a, b, _], &c) in &self.terms {
            p.add_term([a, b, 0], c);
        }
        p
    }

    /// Evaluates at integer points.
    pub fn eval(&self, x: i64, y: i64, z: i64) -> i64 {
        self.terms
            .iter()
            .map(|(&[a, b, c], &k)| k * x.pow(a) * y.pow(b) * z.pow(c))
            .sum()
    }

    /// Terms in printing order: total degree descending, then exponent
    /// vector descending.
    fn ordered(&self) -> Vec<([u32; 3], i64)> {
        let mut t: Vec<_> = self.terms().collect();
        t.sort_by(|(a, _), (b, _)| {
            let da: u32 = a.iter().sum();
            let db: u32 = b.iter().sum();
            db.cmp(&da).then(b.cmp(a))
        });
        t
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        let mut p = self.clone();
        for (e, c) in rhs.terms() {
            p.add_term(e, c);
        }
        p
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            terms: self.terms.iter().map(|(&e, &c)| (e, -c)).collect(),
        }
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        self + &-rhs
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        let mut p = MultiPoly::zero();
        for (a, c) in self.terms() {
            for (b, d) in rhs.terms() {
                p.add_term([a[0] + b[0], a[1] + b[1], a[2] + b[2]], c * d);
            }
        }
        p
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.ordered();
        if terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (exp, c)) in terms.into_iter().enumerate() {
            match (i, c < 0) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            write!(f, "{}", c.unsigned_abs())?;
            for (v, &e) in VARS.iter().zip(exp.iter()) {
                match e {
                    0 => {}
                    1 => write!(f, "*{v}")?,
                    _ => write!(f, "*{v}^{e}")?,
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Expands `Σ count · (x-1)^a (y-1)^b z^c` over the collected exponents.
fn expand(counts: &BTreeMap<[u32; 3], i64>) -> MultiPoly {
    let xm = &MultiPoly::x() - &MultiPoly::constant(1);
    let ym = &MultiPoly::y() - &MultiPoly::constant(1);
    let mut out = MultiPoly::zero();
    for (&[a, b, c], &n) in counts {
        let term = &(&xm.pow(a) * &ym.pow(b)) * &MultiPoly::monomial(n, [0, 0, c]);
        out = &out + &term;
    }
    out
}

/// The ribbon graph polynomial by state sum over all edge subsets.
pub fn bollobas_riordan(ap: &ArrowPresentation) -> Result<MultiPoly> {
    if ap.num_edges() > GROUND_CAP {
        return Err(Error::CapExceeded {
            what: "edge set",
            size: ap.num_edges(),
            cap: GROUND_CAP,
        });
    }
    let t = Tracer::new(ap);
    let empties = t.empty_curves();
    let v = ap.num_vertices();
    let r_full = v - ap.components().0;
    let mut counts = BTreeMap::new();
    for a in Subset::all(ap.num_edges()) {
        let k = ap.components_with(a).0;
        let b = t.traces(a).len() + empties;
        let r = v - k;
        let n = a.len() - r;
        let genus = (k + n) - b;
        *counts
            .entry([(r_full - r) as u32, n as u32, genus as u32])
            .or_insert(0) += 1;
    }
    Ok(expand(&counts))
}

/// Tutte polynomial of a matroid given by its bases.
pub fn tutte(m: &SetSystem) -> Result<MultiPoly> {
    if !m.classify().is_matroid {
        return Err(Error::NotMatroid);
    }
    let rank = |a: Subset| {
        m.feasible()
            .iter()
            .map(|&b| a.intersection(b).len())
            .max()
            .unwrap_or(0)
    };
    let r_full = rank(m.full());
    let mut counts = BTreeMap::new();
    for a in Subset::all(m.ground_size()) {
        let r = rank(a);
        *counts
            .entry([(r_full - r) as u32, (a.len() - r) as u32, 0])
            .or_insert(0) += 1;
    }
    Ok(expand(&counts))
}
