//! The diagram algebra over the rationals: finite linear combinations of
//! planar diagrams, the unit `e_c^{⊗n}`, the alternating-sum basis
//! `x_d = Σ_{d' ⊆ d} (-1)^{size(d) - size(d')} d'`, and the embedding of the
//! algebra on `n - 1` vertices into the one on `n` vertices.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::diagram::{Diagram, DiagramError, ParseError};
use crate::profile::Profile;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error("profiles ({0}, {1}) do not have matching part sizes")]
    UnmatchedProfiles(Profile, Profile),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ElementParseError {
    #[error("term {term}: {source}")]
    Diagram { term: usize, source: ParseError },
    #[error("term {term}: bad coefficient {text:?}")]
    Coefficient { term: usize, text: String },
    #[error("term {term}: expected '<rational> * <diagram>'")]
    MissingStar { term: usize },
    #[error("empty element literal")]
    Empty,
    #[error("term {term}: {source}")]
    Algebra { term: usize, source: AlgebraError },
}

/// A finite formal combination `Σ λ_d d` of planar diagrams with exact
/// rational coefficients. Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraElement {
    n: usize,
    c: usize,
    terms: BTreeMap<Diagram, BigRational>,
}

fn int(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

impl AlgebraElement {
    pub fn zero(n: usize, c: usize) -> Self {
        AlgebraElement { n, c, terms: BTreeMap::new() }
    }

    pub fn from_diagram(d: &Diagram) -> Result<Self, AlgebraError> {
        d.require_planar()?;
        let mut terms = BTreeMap::new();
        terms.insert(d.clone(), BigRational::one());
        Ok(AlgebraElement { n: d.n(), c: d.c(), terms })
    }

    pub fn from_terms<I>(n: usize, c: usize, terms: I) -> Result<Self, AlgebraError>
    where
        I: IntoIterator<Item = (BigRational, Diagram)>,
    {
        let mut out = AlgebraElement::zero(n, c);
        for (q, d) in terms {
            if d.n() != n || d.c() != c {
                return Err(DiagramError::ShapeMismatch { n1: n, c1: c, n2: d.n(), c2: d.c() }.into());
            }
            d.require_planar()?;
            out.accumulate(d, q);
        }
        Ok(out)
    }

    /// Same as [`from_terms`](Self::from_terms) with integer coefficients.
    pub fn from_int_terms<I>(n: usize, c: usize, terms: I) -> Result<Self, AlgebraError>
    where
        I: IntoIterator<Item = (i64, Diagram)>,
    {
        Self::from_terms(n, c, terms.into_iter().map(|(q, d)| (int(q), d)))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn c(&self) -> usize {
        self.c
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

    pub fn coefficient(&self, d: &Diagram) -> BigRational {
        self.terms.get(d).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Diagram, &BigRational)> {
        self.terms.iter()
    }

    /// Terms sorted into enumeration order.
    pub fn terms_in_enumeration_order(&self) -> Vec<(&Diagram, &BigRational)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by_cached_key(|(d, _)| d.enumeration_key());
        v
    }

    fn accumulate(&mut self, d: Diagram, q: BigRational) {
        if q.is_zero() {
            return;
        }
        let entry = self.terms.entry(d);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(q);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += q;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_shape(&self, other: &AlgebraElement) -> Result<(), AlgebraError> {
        if self.n != other.n || self.c != other.c {
            return Err(DiagramError::ShapeMismatch { n1: self.n, c1: self.c, n2: other.n, c2: other.c }.into());
        }
        Ok(())
    }

    pub fn add(&self, other: &AlgebraElement) -> Result<AlgebraElement, AlgebraError> {
        self.check_shape(other)?;
        let mut out = self.clone();
        for (d, q) in &other.terms {
            out.accumulate(d.clone(), q.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &AlgebraElement) -> Result<AlgebraElement, AlgebraError> {
        self.add(&other.scale(&-BigRational::one()))
    }

    pub fn scale(&self, q: &BigRational) -> AlgebraElement {
        if q.is_zero() {
            return AlgebraElement::zero(self.n, self.c);
        }
        AlgebraElement { n: self.n, c: self.c, terms: self.terms.iter().map(|(d, v)| (d.clone(), v * q)).collect() }
    }

    /// Bilinear extension of the diagram product.
    pub fn mul(&self, other: &AlgebraElement) -> Result<AlgebraElement, AlgebraError> {
        self.check_shape(other)?;
        let mut out = AlgebraElement::zero(self.n, self.c);
        for (d1, q1) in &self.terms {
            for (d2, q2) in &other.terms {
                out.accumulate(d1.multiply_unchecked(d2), q1 * q2);
            }
        }
        Ok(out)
    }

    /// `g * d` for a single planar diagram `d`.
    pub fn mul_diagram(&self, d: &Diagram) -> Result<AlgebraElement, AlgebraError> {
        self.mul(&AlgebraElement::from_diagram(d)?)
    }

    /// `d * g` for a single planar diagram `d`.
    pub fn diagram_mul(d: &Diagram, g: &AlgebraElement) -> Result<AlgebraElement, AlgebraError> {
        AlgebraElement::from_diagram(d)?.mul(g)
    }

    /// `e_c^{⊗n}` where `e_c = Σ_{i=1}^{c} I_i - (c - 1) I_0`.
    pub fn identity(n: usize, c: usize) -> AlgebraElement {
        let mut e = AlgebraElement::zero(1, c);
        for color in 1..=c {
            e.accumulate(Diagram::unit(c, color), BigRational::one());
        }
        e.accumulate(Diagram::unit(c, 0), -int(c as i64 - 1));
        let mut acc = AlgebraElement::from_diagram(&Diagram::empty(0, c)).expect("empty diagram is planar");
        for _ in 0..n {
            acc = acc.tensor(&e).expect("colors agree");
        }
        acc
    }

    /// Bilinear extension of diagram concatenation.
    pub fn tensor(&self, other: &AlgebraElement) -> Result<AlgebraElement, AlgebraError> {
        if self.c != other.c {
            return Err(DiagramError::ColorMismatch(self.c, other.c).into());
        }
        let mut out = AlgebraElement::zero(self.n + other.n, self.c);
        for (d1, q1) in &self.terms {
            for (d2, q2) in &other.terms {
                out.accumulate(d1.tensor(d2)?, q1 * q2);
            }
        }
        Ok(out)
    }

    /// `g ⊗ I_k`: append a vertex pair, joined by color `k` (isolated when
    /// `k = 0`), to every term.
    pub fn tensor_unit(&self, color: usize) -> AlgebraElement {
        let unit = Diagram::unit(self.c, color);
        AlgebraElement {
            n: self.n + 1,
            c: self.c,
            terms: self.terms.iter().map(|(d, q)| (d.tensor(&unit).expect("colors agree"), q.clone())).collect(),
        }
    }

    /// `γ(g) = Σ_{i=1}^{c} g ⊗ I_i - (c - 1)(g ⊗ I_0)`.
    pub fn embed(&self) -> AlgebraElement {
        let mut out = AlgebraElement::zero(self.n + 1, self.c);
        for color in 1..=self.c {
            for (d, q) in self.tensor_unit(color).terms {
                out.accumulate(d, q);
            }
        }
        let correction = -int(self.c as i64 - 1);
        for (d, q) in self.tensor_unit(0).terms {
            out.accumulate(d, q * &correction);
        }
        out
    }

    /// Coordinates `μ_a` with `self = Σ μ_a x_a`. Since `b = Σ_{a ⊆ b} x_a`,
    /// each `μ_a` is the sum of `λ_b` over support diagrams `b ⊇ a`.
    pub fn to_x_coordinates(&self) -> BTreeMap<Diagram, BigRational> {
        let mut mu: BTreeMap<Diagram, BigRational> = BTreeMap::new();
        for (b, lambda) in &self.terms {
            for a in b.subdiagrams() {
                *mu.entry(a).or_insert_with(BigRational::zero) += lambda;
            }
        }
        mu.retain(|_, q| !q.is_zero());
        mu
    }

    /// Inverse of [`to_x_coordinates`](Self::to_x_coordinates).
    pub fn from_x_coordinates(
        n: usize,
        c: usize,
        coords: &BTreeMap<Diagram, BigRational>,
    ) -> Result<AlgebraElement, AlgebraError> {
        let mut out = AlgebraElement::zero(n, c);
        for (a, mu) in coords {
            if a.n() != n || a.c() != c {
                return Err(DiagramError::ShapeMismatch { n1: n, c1: c, n2: a.n(), c2: a.c() }.into());
            }
            for (d, q) in x_of(a)?.terms {
                out.accumulate(d, q * mu);
            }
        }
        Ok(out)
    }
}

/// `x_d = Σ_{d' ⊆ d} (-1)^{size(d) - size(d')} d'`, fully expanded.
pub fn x_of(d: &Diagram) -> Result<AlgebraElement, AlgebraError> {
    d.require_planar()?;
    let size = d.size();
    let mut out = AlgebraElement::zero(d.n(), d.c());
    for sub in d.subdiagrams() {
        let sign = if (size - sub.size()).is_multiple_of(2) { 1 } else { -1 };
        out.terms.insert(sub, int(sign));
    }
    Ok(out)
}

/// `d · x_a`. Returns `Some(da)` when `τ_i(a) ⊆ β_i(d)` for every color
/// `i` in `1..=c`, meaning `d · x_a = x_{da}`; `None` when the product is 0.
pub fn left_action_x(d: &Diagram, a: &Diagram) -> Result<Option<Diagram>, AlgebraError> {
    let product = d.multiply(a)?;
    Ok(a.tau().colors_contained_in(&d.beta()).then_some(product))
}

/// `x_a · d`: `Some(ad)` when `β_i(a) ⊆ τ_i(d)` for every color `i`.
pub fn right_action_x(a: &Diagram, d: &Diagram) -> Result<Option<Diagram>, AlgebraError> {
    let product = a.multiply(d)?;
    Ok(a.beta().colors_contained_in(&d.tau()).then_some(product))
}

/// `x_{S,T} · x_{U,V}` is `x_{S,V}` when `T = U` and zero otherwise.
pub fn x_st_product(
    s: &Profile,
    t: &Profile,
    u: &Profile,
    v: &Profile,
) -> Result<Option<(Profile, Profile)>, AlgebraError> {
    if !s.same_sizes(t) || s.n() != t.n() {
        return Err(AlgebraError::UnmatchedProfiles(s.clone(), t.clone()));
    }
    if !u.same_sizes(v) || u.n() != v.n() {
        return Err(AlgebraError::UnmatchedProfiles(u.clone(), v.clone()));
    }
    if s.n() != u.n() || s.c() != u.c() {
        return Err(DiagramError::ShapeMismatch { n1: s.n(), c1: s.c(), n2: u.n(), c2: u.c() }.into());
    }
    Ok((t == u).then(|| (s.clone(), v.clone())))
}

/// A basis vector `x_a`, viewable through its profile pair as `x_{S,T}`
/// with `S = τ(a)` and `T = β(a)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct XBasisElement {
    label: Diagram,
}

impl XBasisElement {
    pub fn new(label: Diagram) -> Result<Self, AlgebraError> {
        label.require_planar()?;
        Ok(XBasisElement { label })
    }

    /// `x_{S,T}`: the unique planar diagram with `τ = S` and `β = T`.
    pub fn from_profiles(s: &Profile, t: &Profile) -> Result<Self, AlgebraError> {
        let label = Diagram::from_profiles(s, t).map_err(|e| match e {
            DiagramError::ProfileSizeMismatch { .. } => AlgebraError::UnmatchedProfiles(s.clone(), t.clone()),
            other => other.into(),
        })?;
        Ok(XBasisElement { label })
    }

    pub fn label(&self) -> &Diagram {
        &self.label
    }

    pub fn top(&self) -> Profile {
        self.label.tau()
    }

    pub fn bottom(&self) -> Profile {
        self.label.beta()
    }

    pub fn expand(&self) -> AlgebraElement {
        x_of(&self.label).expect("label is planar")
    }
}

fn fmt_rational(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

impl fmt::Display for AlgebraElement {
    /// `<rational> * <diagram> + ...` in enumeration order; the zero element
    /// prints as `0 * <empty diagram>`, which parses back to zero.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0 * {}", Diagram::empty(self.n, self.c));
        }
        for (i, (d, q)) in self.terms_in_enumeration_order().into_iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{} * {}", fmt_rational(q), d)?;
        }
        Ok(())
    }
}

impl FromStr for AlgebraElement {
    type Err = ElementParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut shape: Option<(usize, usize)> = None;
        let mut out: Option<AlgebraElement> = None;
        for (term, chunk) in s.split('+').enumerate() {
            if chunk.trim().is_empty() {
                return Err(if term == 0 && s.trim().is_empty() {
                    ElementParseError::Empty
                } else {
                    ElementParseError::MissingStar { term }
                });
            }
            let (coef, lit) = chunk.split_once('*').ok_or(ElementParseError::MissingStar { term })?;
            let text = coef.trim();
            let q: BigRational =
                text.parse().map_err(|_| ElementParseError::Coefficient { term, text: text.to_string() })?;
            let d: Diagram = lit.parse().map_err(|source| ElementParseError::Diagram { term, source })?;
            let (n, c) = *shape.get_or_insert((d.n(), d.c()));
            let acc = out.get_or_insert_with(|| AlgebraElement::zero(n, c));
            let single = AlgebraElement::from_terms(n, c, [(q, d)])
                .map_err(|source| ElementParseError::Algebra { term, source })?;
            *acc = acc.add(&single).map_err(|source| ElementParseError::Algebra { term, source })?;
        }
        out.ok_or(ElementParseError::Empty)
    }
}

impl std::ops::Neg for &AlgebraElement {
    type Output = AlgebraElement;

    fn neg(self) -> AlgebraElement {
        self.scale(&-BigRational::one())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::enumerate_planar;
    use proptest::prelude::*;

    fn d(n: usize, c: usize, edges: &[(usize, usize, usize)]) -> Diagram {
        Diagram::new(n, c, edges.iter().copied()).unwrap()
    }

    fn el(d: &Diagram) -> AlgebraElement {
        AlgebraElement::from_diagram(d).unwrap()
    }

    #[test]
    fn product_example_in_algebra() {
        // d1 is not planar, so only d2 and the product live in the algebra;
        // the product itself is checked at the diagram level.
        let d2 = d(3, 2, &[(1, 2, 1), (3, 1, 2)]);
        let d1 = d(3, 2, &[(1, 1, 1), (2, 3, 1), (3, 2, 1)]);
        assert!(AlgebraElement::from_diagram(&d1).is_err());
        let planar_left = d(3, 2, &[(1, 1, 1)]);
        let p = el(&planar_left).mul(&el(&d2)).unwrap();
        assert_eq!(p, el(&d(3, 2, &[(1, 2, 1)])));
    }

    #[test]
    fn mul_by_zero() {
        let g = el(&d(2, 2, &[(1, 1, 2)]));
        assert!(g.mul(&AlgebraElement::zero(2, 2)).unwrap().is_zero());
        assert!(g.mul(&AlgebraElement::zero(3, 2)).is_err());
    }

    #[test]
    fn identity_small_cases() {
        assert_eq!(AlgebraElement::identity(1, 1), el(&Diagram::unit(1, 1)));
        let expected = AlgebraElement::from_int_terms(
            1,
            2,
            [(1, Diagram::unit(2, 1)), (1, Diagram::unit(2, 2)), (-1, Diagram::unit(2, 0))],
        )
        .unwrap();
        assert_eq!(AlgebraElement::identity(1, 2), expected);
        assert_eq!(AlgebraElement::identity(0, 3), el(&Diagram::empty(0, 3)));
        // e_c^{⊗n} has (c+1)^n terms
        assert_eq!(AlgebraElement::identity(3, 2).len(), 27);
    }

    #[test]
    fn identity_is_two_sided_unit_on_p32() {
        let e = AlgebraElement::identity(3, 2);
        for x in enumerate_planar(3, 2) {
            let g = el(&x);
            assert_eq!(e.mul(&g).unwrap(), g);
            assert_eq!(g.mul(&e).unwrap(), g);
        }
    }

    #[test]
    fn x_of_small_cases() {
        assert_eq!(x_of(&Diagram::empty(2, 1)).unwrap(), el(&Diagram::empty(2, 1)));
        let e = d(2, 1, &[(1, 2, 1)]);
        let expected = el(&e).sub(&el(&Diagram::empty(2, 1))).unwrap();
        assert_eq!(x_of(&e).unwrap(), expected);
        assert!(x_of(&d(2, 1, &[(1, 2, 1), (2, 1, 1)])).is_err());
    }

    #[test]
    fn x_basis_inversion_on_p32() {
        for x in enumerate_planar(3, 2) {
            let mut sum = AlgebraElement::zero(3, 2);
            for sub in x.subdiagrams() {
                sum = sum.add(&x_of(&sub).unwrap()).unwrap();
            }
            assert_eq!(sum, el(&x));
        }
    }

    #[test]
    fn x_coordinates_examples() {
        let x = d(3, 2, &[(1, 1, 1), (3, 2, 2)]);
        let coords = x_of(&x).unwrap().to_x_coordinates();
        assert_eq!(coords.len(), 1);
        assert_eq!(coords[&x], BigRational::one());

        let coords = el(&x).to_x_coordinates();
        assert_eq!(coords.len(), 4);
        assert!(coords.iter().all(|(a, q)| a.is_subdiagram_of(&x) && q.is_one()));
    }

    #[test]
    fn basis_change_round_trip_exhaustive() {
        for x in enumerate_planar(3, 2) {
            let xa = x_of(&x).unwrap();
            let coords = xa.to_x_coordinates();
            assert_eq!(AlgebraElement::from_x_coordinates(3, 2, &coords).unwrap(), xa);
        }
    }

    #[test]
    fn left_action_examples() {
        let i = Diagram::unit(1, 1);
        assert_eq!(left_action_x(&i, &i).unwrap(), Some(i.clone()));
        assert_eq!(left_action_x(&Diagram::empty(1, 1), &i).unwrap(), None);
        assert_eq!(right_action_x(&i, &i).unwrap(), Some(i.clone()));
        assert_eq!(right_action_x(&i, &Diagram::empty(1, 1)).unwrap(), None);
        // part 0 takes no part in the condition
        let a = Diagram::empty(1, 1);
        assert_eq!(left_action_x(&i, &a).unwrap(), Some(a.clone()));
    }

    #[test]
    fn left_and_right_action_match_expansion_on_p22() {
        let all: Vec<Diagram> = enumerate_planar(2, 2).collect();
        for x in &all {
            for a in &all {
                let expanded = AlgebraElement::diagram_mul(x, &x_of(a).unwrap()).unwrap();
                let fast = match left_action_x(x, a).unwrap() {
                    Some(b) => x_of(&b).unwrap(),
                    None => AlgebraElement::zero(2, 2),
                };
                assert_eq!(expanded, fast, "d={x} a={a}");

                let expanded = x_of(a).unwrap().mul_diagram(x).unwrap();
                let fast = match right_action_x(a, x).unwrap() {
                    Some(b) => x_of(&b).unwrap(),
                    None => AlgebraElement::zero(2, 2),
                };
                assert_eq!(expanded, fast, "a={a} d={x}");
            }
        }
    }

    #[test]
    fn x_st_product_examples() {
        let t = Profile::from_word(1, &[1, 0]);
        let s = Profile::from_word(1, &[0, 1]);
        assert_eq!(x_st_product(&s, &t, &t, &s).unwrap(), Some((s.clone(), s.clone())));
        assert_eq!(x_st_product(&t, &t, &t, &t).unwrap(), Some((t.clone(), t.clone())));
        assert_eq!(x_st_product(&s, &t, &s, &t).unwrap(), None);
        let full = Profile::from_word(1, &[1, 1]);
        assert!(matches!(x_st_product(&s, &full, &t, &t), Err(AlgebraError::UnmatchedProfiles(..))));

        let xtt = XBasisElement::from_profiles(&t, &t).unwrap().expand();
        assert_eq!(xtt.mul(&xtt).unwrap(), xtt);
    }

    #[test]
    fn x_st_product_matches_expansion_n2_c2() {
        let profiles = Profile::all(2, 2);
        for s in &profiles {
            for t in profiles.iter().filter(|t| t.same_sizes(s)) {
                let left = XBasisElement::from_profiles(s, t).unwrap().expand();
                for u in &profiles {
                    for v in profiles.iter().filter(|v| v.same_sizes(u)) {
                        let right = XBasisElement::from_profiles(u, v).unwrap().expand();
                        let product = left.mul(&right).unwrap();
                        let expected = match x_st_product(s, t, u, v).unwrap() {
                            Some((p, q)) => XBasisElement::from_profiles(&p, &q).unwrap().expand(),
                            None => AlgebraElement::zero(2, 2),
                        };
                        assert_eq!(product, expected);
                    }
                }
            }
        }
    }

    #[test]
    fn embed_examples() {
        let x = d(2, 1, &[(1, 2, 1)]);
        let e = el(&x).embed();
        assert_eq!(e, el(&d(3, 1, &[(1, 2, 1), (3, 3, 1)])));

        // d has a solid edge top 2 - bottom 1 and a dotted edge top 1 - bottom 2;
        // d~ has a solid vertical edge at vertex 1.
        let dd = d(2, 2, &[(2, 1, 1), (1, 2, 2)]);
        let dt = d(2, 2, &[(1, 1, 1)]);
        let g = AlgebraElement::from_int_terms(2, 2, [(1, dd.clone()), (5, dt.clone())]).unwrap();
        let image = g.embed();
        let expected = [
            (1, dd.tensor(&Diagram::unit(2, 1)).unwrap()),
            (5, dt.tensor(&Diagram::unit(2, 1)).unwrap()),
            (1, dd.tensor(&Diagram::unit(2, 2)).unwrap()),
            (5, dt.tensor(&Diagram::unit(2, 2)).unwrap()),
            (-1, dd.tensor(&Diagram::unit(2, 0)).unwrap()),
            (-5, dt.tensor(&Diagram::unit(2, 0)).unwrap()),
        ];
        assert_eq!(image.len(), 6);
        for (q, x) in expected {
            assert_eq!(image.coefficient(&x), int(q));
        }
    }

    #[test]
    fn embed_preserves_identity() {
        for c in 1..4 {
            for n in 1..4 {
                assert_eq!(AlgebraElement::identity(n - 1, c).embed(), AlgebraElement::identity(n, c));
            }
        }
    }

    #[test]
    fn element_literal_round_trip() {
        let g: AlgebraElement = "1 * n=1 c=2 [1-1:1] + 1*n=1 c=2 [1-1:2] + -1 * n=1 c=2 []".parse().unwrap();
        assert_eq!(g, AlgebraElement::identity(1, 2));
        assert_eq!(g.to_string(), "-1 * n=1 c=2 [] + 1 * n=1 c=2 [1-1:1] + 1 * n=1 c=2 [1-1:2]");
        let z = AlgebraElement::zero(2, 1);
        assert_eq!(z.to_string().parse::<AlgebraElement>().unwrap(), z);
        let h: AlgebraElement = "3/2 * n=2 c=1 [1-2:1] + -3/2 * n=2 c=1 [1-2:1]".parse().unwrap();
        assert!(h.is_zero());
        assert!(matches!("".parse::<AlgebraElement>(), Err(ElementParseError::Empty)));
        assert!(matches!("2 n=1 c=1 []".parse::<AlgebraElement>(), Err(ElementParseError::MissingStar { term: 0 })));
        assert!(matches!("x * n=1 c=1 []".parse::<AlgebraElement>(), Err(ElementParseError::Coefficient { .. })));
        assert!(matches!(
            "1 * n=1 c=1 [] + 1 * n=2 c=1 []".parse::<AlgebraElement>(),
            Err(ElementParseError::Algebra { term: 1, .. })
        ));
        assert!(matches!(
            "1 * n=2 c=1 [1-2:1, 2-1:1]".parse::<AlgebraElement>(),
            Err(ElementParseError::Algebra { term: 0, .. })
        ));
    }

    fn arb_element(n: usize, c: usize) -> impl Strategy<Value = AlgebraElement> {
        let basis: Vec<Diagram> = enumerate_planar(n, c).collect();
        let len = basis.len();
        proptest::collection::vec((0..len, -4i64..5, 1i64..4), 0..6).prop_map(move |terms| {
            AlgebraElement::from_terms(
                n,
                c,
                terms.into_iter().map(|(i, p, q)| (BigRational::new(p.into(), q.into()), basis[i].clone())),
            )
            .unwrap()
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn mul_distributes_over_add(a in arb_element(3, 2), b in arb_element(3, 2), c in arb_element(3, 2)) {
            let lhs = a.mul(&b.add(&c).unwrap()).unwrap();
            let rhs = a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn x_coordinates_are_linear(a in arb_element(2, 2), b in arb_element(2, 2), p in -3i64..4) {
            let q = int(p);
            let combined = a.scale(&q).add(&b).unwrap().to_x_coordinates();
            let mut expected = a.to_x_coordinates();
            for v in expected.values_mut() {
                *v *= &q;
            }
            for (k, v) in b.to_x_coordinates() {
                *expected.entry(k).or_insert_with(BigRational::zero) += v;
            }
            expected.retain(|_, v| !v.is_zero());
            prop_assert_eq!(combined, expected);
        }

        #[test]
        fn embed_is_a_homomorphism(a in arb_element(2, 2), b in arb_element(2, 2)) {
            let lhs = a.mul(&b).unwrap().embed();
            let rhs = a.embed().mul(&b.embed()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn element_print_parse_round_trip(a in arb_element(2, 2)) {
            let text = a.to_string();
            prop_assert_eq!(text.parse::<AlgebraElement>().unwrap(), a);
        }
    }
}
