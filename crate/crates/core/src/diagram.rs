//! Colored rook diagrams on two rows of `n` vertices.
//!
//! A diagram is stored as its edge list sorted by top vertex. Vertices are
//! numbered `1..=n` left to right and colors `1..=c`; an isolated vertex is
//! simply one no edge touches. Equality, hashing and ordering all work on
//! this canonical form.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::combinatorics::{compositions, multinomial, ordered_set_partitions};
use crate::profile::Profile;

/// One edge from top vertex `top` to bottom vertex `bottom` with color `color`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Edge {
    pub top: usize,
    pub bottom: usize,
    pub color: usize,
}

impl Edge {
    pub fn new(top: usize, bottom: usize, color: usize) -> Self {
        Edge { top, bottom, color }
    }

    pub fn is_vertical(&self) -> bool {
        self.top == self.bottom
    }
}

impl From<(usize, usize, usize)> for Edge {
    fn from((top, bottom, color): (usize, usize, usize)) -> Self {
        Edge { top, bottom, color }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}:{}", self.top, self.bottom, self.color)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DiagramError {
    #[error("color count must be at least 1")]
    NoColors,
    #[error("edge {edge}: vertex index out of range 1..={n}")]
    IndexOutOfRange { edge: Edge, n: usize },
    #[error("edge {edge}: color out of range 1..={c}")]
    ColorOutOfRange { edge: Edge, c: usize },
    #[error("edge {edge}: duplicate top index {}", edge.top)]
    DuplicateTop { edge: Edge },
    #[error("edge {edge}: duplicate bottom index {}", edge.bottom)]
    DuplicateBottom { edge: Edge },
    #[error("shape mismatch: (n={n1}, c={c1}) vs (n={n2}, c={c2})")]
    ShapeMismatch { n1: usize, c1: usize, n2: usize, c2: usize },
    #[error("color count mismatch: {0} vs {1}")]
    ColorMismatch(usize, usize),
    #[error("profile part {part} sizes differ: {top} on top, {bottom} on bottom")]
    ProfileSizeMismatch { part: usize, top: usize, bottom: usize },
    #[error("diagram {0} is not planar")]
    NotPlanar(Diagram),
}

/// Composition (reversed), top parts, bottom parts, edges.
pub type EnumerationKey = (Vec<usize>, Vec<Vec<usize>>, Vec<Vec<usize>>, Vec<Edge>);

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Diagram {
    n: usize,
    c: usize,
    edges: Vec<Edge>,
}

impl Diagram {
    /// Validates the rook condition and index ranges, then sorts by top index.
    pub fn new<I, E>(n: usize, c: usize, edges: I) -> Result<Self, DiagramError>
    where
        I: IntoIterator<Item = E>,
        E: Into<Edge>,
    {
        if c == 0 {
            return Err(DiagramError::NoColors);
        }
        let mut edges: Vec<Edge> = edges.into_iter().map(Into::into).collect();
        let mut top_seen = vec![false; n + 1];
        let mut bottom_seen = vec![false; n + 1];
        for &edge in &edges {
            if edge.top == 0 || edge.top > n || edge.bottom == 0 || edge.bottom > n {
                return Err(DiagramError::IndexOutOfRange { edge, n });
            }
            if edge.color == 0 || edge.color > c {
                return Err(DiagramError::ColorOutOfRange { edge, c });
            }
            if top_seen[edge.top] {
                return Err(DiagramError::DuplicateTop { edge });
            }
            if bottom_seen[edge.bottom] {
                return Err(DiagramError::DuplicateBottom { edge });
            }
            top_seen[edge.top] = true;
            bottom_seen[edge.bottom] = true;
        }
        edges.sort_unstable();
        Ok(Diagram { n, c, edges })
    }

    pub fn empty(n: usize, c: usize) -> Self {
        assert!(c >= 1, "color count must be at least 1");
        Diagram { n, c, edges: Vec::new() }
    }

    /// The diagram with a vertical edge of color `color` at every vertex.
    pub fn identity_shaped(n: usize, c: usize, color: usize) -> Self {
        assert!((1..=c).contains(&color));
        Diagram { n, c, edges: (1..=n).map(|v| Edge::new(v, v, color)).collect() }
    }

    /// `I_k` for `k >= 1`: one vertex pair joined by a color-`k` edge.
    /// `I_0` is the isolated pair.
    pub fn unit(c: usize, color: usize) -> Self {
        if color == 0 {
            Diagram::empty(1, c)
        } else {
            Diagram::identity_shaped(1, c, color)
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn c(&self) -> usize {
        self.c
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    fn check_shape(&self, other: &Diagram) -> Result<(), DiagramError> {
        if self.n != other.n || self.c != other.c {
            return Err(DiagramError::ShapeMismatch { n1: self.n, c1: self.c, n2: other.n, c2: other.c });
        }
        Ok(())
    }

    /// True iff no two edges of the same color cross.
    pub fn is_planar(&self) -> bool {
        // Edges are sorted by top; same-colored bottoms must then increase.
        let mut last_bottom = vec![0usize; self.c + 1];
        for e in &self.edges {
            if e.bottom <= last_bottom[e.color] {
                return false;
            }
            last_bottom[e.color] = e.bottom;
        }
        true
    }

    pub fn require_planar(&self) -> Result<(), DiagramError> {
        if self.is_planar() {
            Ok(())
        } else {
            Err(DiagramError::NotPlanar(self.clone()))
        }
    }

    /// Stack `self` on top of `other`; keep every monochromatic path.
    pub fn multiply(&self, other: &Diagram) -> Result<Diagram, DiagramError> {
        self.check_shape(other)?;
        Ok(self.multiply_unchecked(other))
    }

    pub(crate) fn multiply_unchecked(&self, other: &Diagram) -> Diagram {
        let mut below = vec![(0usize, 0usize); self.n + 1];
        for e in &other.edges {
            below[e.top] = (e.bottom, e.color);
        }
        let edges = self
            .edges
            .iter()
            .filter_map(|e| {
                let (bottom, color) = below[e.bottom];
                (color == e.color).then(|| Edge::new(e.top, bottom, color))
            })
            .collect();
        Diagram { n: self.n, c: self.c, edges }
    }

    /// `tau`: top profile. Part `k >= 1` holds the top endpoints of color-`k`
    /// edges; part 0 holds isolated top vertices.
    pub fn tau(&self) -> Profile {
        self.row_profile(|e| e.top)
    }

    /// `beta`: the bottom profile.
    pub fn beta(&self) -> Profile {
        self.row_profile(|e| e.bottom)
    }

    fn row_profile(&self, endpoint: impl Fn(&Edge) -> usize) -> Profile {
        let mut word = vec![0usize; self.n];
        for e in &self.edges {
            word[endpoint(e) - 1] = e.color;
        }
        Profile::from_word(self.c, &word)
    }

    /// The unique planar diagram with top profile `top` and bottom profile
    /// `bottom`: in each color, the r-th smallest top vertex is joined to the
    /// r-th smallest bottom vertex.
    pub fn from_profiles(top: &Profile, bottom: &Profile) -> Result<Diagram, DiagramError> {
        if top.n() != bottom.n() || top.c() != bottom.c() {
            return Err(DiagramError::ShapeMismatch { n1: top.n(), c1: top.c(), n2: bottom.n(), c2: bottom.c() });
        }
        for k in 0..=top.c() {
            let (t, b) = (top.part(k).len(), bottom.part(k).len());
            if t != b {
                return Err(DiagramError::ProfileSizeMismatch { part: k, top: t, bottom: b });
            }
        }
        let mut edges: Vec<Edge> = (1..=top.c())
            .flat_map(|k| top.part(k).iter().zip(bottom.part(k)).map(move |(&t, &b)| Edge::new(t, b, k)))
            .collect();
        edges.sort_unstable();
        Ok(Diagram { n: top.n(), c: top.c(), edges })
    }

    /// Concatenate `other` to the right of `self`.
    pub fn tensor(&self, other: &Diagram) -> Result<Diagram, DiagramError> {
        if self.c != other.c {
            return Err(DiagramError::ColorMismatch(self.c, other.c));
        }
        let shift = self.n;
        let edges = self
            .edges
            .iter()
            .copied()
            .chain(other.edges.iter().map(|e| Edge::new(e.top + shift, e.bottom + shift, e.color)))
            .collect();
        Ok(Diagram { n: self.n + other.n, c: self.c, edges })
    }

    /// Keeps exactly the vertical edges.
    pub fn vertical_subdiagram(&self) -> Diagram {
        Diagram { n: self.n, c: self.c, edges: self.edges.iter().copied().filter(Edge::is_vertical).collect() }
    }

    /// `(l_1, ..., l_c)`: number of vertical edges of each color.
    pub fn vertical_counts(&self) -> Vec<usize> {
        let mut counts = vec![0; self.c];
        for e in self.edges.iter().filter(|e| e.is_vertical()) {
            counts[e.color - 1] += 1;
        }
        counts
    }

    /// Every subdiagram (subset of the edges), `2^size` of them. Subsets are
    /// indexed by bitmask over the edge list, so index 0 is the empty diagram
    /// and the last one is `self`.
    pub fn subdiagrams(&self) -> impl Iterator<Item = Diagram> + '_ {
        let k = self.edges.len();
        assert!(k < usize::BITS as usize);
        (0..1usize << k).map(move |mask| Diagram {
            n: self.n,
            c: self.c,
            edges: self.edges.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, e)| *e).collect(),
        })
    }

    /// True iff every edge of `self` is an edge of `other`.
    pub fn is_subdiagram_of(&self, other: &Diagram) -> bool {
        self.n == other.n && self.c == other.c && self.edges.iter().all(|e| other.edges.binary_search(e).is_ok())
    }

    /// Matrix form: entry `(i, j)` is the color of edge `i -> j`, 0 if none.
    pub fn to_matrix(&self) -> Vec<Vec<usize>> {
        let mut m = vec![vec![0; self.n]; self.n];
        for e in &self.edges {
            m[e.top - 1][e.bottom - 1] = e.color;
        }
        m
    }

    pub fn from_matrix(c: usize, rows: &[Vec<usize>]) -> Result<Diagram, DiagramError> {
        let n = rows.len();
        let mut edges = Vec::new();
        for (i, row) in rows.iter().enumerate() {
            for (j, &color) in row.iter().enumerate() {
                if color != 0 {
                    edges.push(Edge::new(i + 1, j + 1, color));
                }
            }
        }
        Diagram::new(n, c, edges)
    }

    /// Sort key reproducing the order of [`enumerate_planar`]: composition in
    /// colex, then top profile, then bottom profile. Non-planar diagrams fall
    /// back to their edge list to break ties.
    pub fn enumeration_key(&self) -> EnumerationKey {
        let tau = self.tau();
        let mut sizes = tau.sizes();
        sizes.reverse();
        (sizes, tau.into_parts(), self.beta().into_parts(), self.edges.clone())
    }

    pub fn display_matrix(&self) -> String {
        let mut out = String::new();
        for row in self.to_matrix() {
            let cells: Vec<String> = row.iter().map(|&k| if k == 0 { "0".into() } else { format!("u{k}") }).collect();
            out.push_str(&cells.join(" "));
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={} c={} [", self.n, self.c)?;
        for (i, e) in self.edges.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("]")
    }
}

/// A syntax or validation failure while reading a diagram literal.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("at byte {pos}: expected {expected}")]
    Syntax { pos: usize, expected: &'static str },
    #[error("invalid diagram: {0}")]
    Invalid(#[from] DiagramError),
}

struct Cursor<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn eat(&mut self, byte: u8, expected: &'static str) -> Result<(), ParseError> {
        self.skip_ws();
        if self.src.get(self.pos) == Some(&byte) {
            self.pos += 1;
            Ok(())
        } else {
            Err(ParseError::Syntax { pos: self.pos, expected })
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn number(&mut self, expected: &'static str) -> Result<usize, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .ok()
            .and_then(|s| s.parse().ok())
            .ok_or(ParseError::Syntax { pos: start, expected })
    }
}

impl FromStr for Diagram {
    type Err = ParseError;

    /// Grammar: `n=<int> c=<int> [<top>-<bottom>:<color>, ...]`, whitespace
    /// anywhere between tokens.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut cur = Cursor { src: s.as_bytes(), pos: 0 };
        cur.eat(b'n', "'n'")?;
        cur.eat(b'=', "'='")?;
        let n = cur.number("vertex count")?;
        cur.eat(b'c', "'c'")?;
        cur.eat(b'=', "'='")?;
        let c = cur.number("color count")?;
        cur.eat(b'[', "'['")?;
        let mut edges = Vec::new();
        if cur.peek() == Some(b']') {
            cur.pos += 1;
        } else {
            loop {
                let top = cur.number("top index")?;
                cur.eat(b'-', "'-'")?;
                let bottom = cur.number("bottom index")?;
                cur.eat(b':', "':'")?;
                let color = cur.number("color")?;
                edges.push(Edge::new(top, bottom, color));
                match cur.peek() {
                    Some(b',') => cur.pos += 1,
                    Some(b']') => {
                        cur.pos += 1;
                        break;
                    }
                    _ => return Err(ParseError::Syntax { pos: cur.pos, expected: "',' or ']'" }),
                }
            }
        }
        if cur.peek().is_some() {
            return Err(ParseError::Syntax { pos: cur.pos, expected: "end of input" });
        }
        Ok(Diagram::new(n, c, edges)?)
    }
}

impl Serialize for Diagram {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Diagram {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// `|P_{n,c}|`: the sum over compositions `(n_0..n_c)` of `n` of the squared
/// multinomial coefficient.
pub fn cardinality(n: usize, c: usize) -> BigUint {
    compositions(n, c + 1)
        .iter()
        .map(|comp| {
            let m = multinomial(comp);
            &m * &m
        })
        .sum()
}

/// Per-composition terms of [`cardinality`], in colex order.
pub fn cardinality_breakdown(n: usize, c: usize) -> Vec<(Vec<usize>, BigUint)> {
    compositions(n, c + 1)
        .into_iter()
        .map(|comp| {
            let m = multinomial(&comp);
            (comp, &m * &m)
        })
        .collect()
}

/// Every planar diagram of `P_{n,c}` exactly once, ordered by composition
/// (colex), then top profile, then bottom profile.
pub fn enumerate_planar(n: usize, c: usize) -> impl Iterator<Item = Diagram> {
    assert!(c >= 1, "color count must be at least 1");
    compositions(n, c + 1).into_iter().flat_map(move |sizes| {
        let profiles: Vec<Profile> = ordered_set_partitions(&sizes)
            .into_iter()
            .map(|parts| Profile::from_parts_unchecked(n, c, parts))
            .collect();
        let mut out = Vec::with_capacity(profiles.len() * profiles.len());
        for top in &profiles {
            for bottom in &profiles {
                out.push(Diagram::from_profiles(top, bottom).expect("sizes agree by construction"));
            }
        }
        out
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(n: usize, c: usize, edges: &[(usize, usize, usize)]) -> Diagram {
        Diagram::new(n, c, edges.iter().copied()).unwrap()
    }

    // The product example in R_{3,2} from matrices
    // (u1,0,0),(0,0,u1),(0,u1,0) and (0,u1,0),(0,0,0),(u2,0,0).
    fn product_example() -> (Diagram, Diagram) {
        (d(3, 2, &[(1, 1, 1), (2, 3, 1), (3, 2, 1)]), d(3, 2, &[(1, 2, 1), (3, 1, 2)]))
    }

    // The five-vertex example with u1 solid and u2 dotted.
    fn five_vertex_example() -> Diagram {
        d(5, 2, &[(1, 2, 2), (2, 1, 1), (3, 3, 2), (5, 5, 1)])
    }

    #[test]
    fn new_diagram_examples() {
        let four = d(4, 2, &[(2, 3, 2), (1, 2, 1), (4, 1, 1)]);
        assert_eq!(four.edges()[0], Edge::new(1, 2, 1));
        assert_eq!(four.to_matrix()[3], vec![1, 0, 0, 0]);
        assert!(!four.is_planar());
        assert!(d(3, 1, &[]).is_empty());
        assert_eq!(
            Diagram::new(2, 2, [(1, 1, 1), (1, 2, 2)]),
            Err(DiagramError::DuplicateTop { edge: Edge::new(1, 2, 2) })
        );
    }

    #[test]
    fn new_diagram_validation_errors() {
        assert!(matches!(Diagram::new(2, 1, [(1, 1, 1), (2, 1, 1)]), Err(DiagramError::DuplicateBottom { .. })));
        assert!(matches!(Diagram::new(2, 1, [(3, 1, 1)]), Err(DiagramError::IndexOutOfRange { .. })));
        assert!(matches!(Diagram::new(2, 1, [(0, 1, 1)]), Err(DiagramError::IndexOutOfRange { .. })));
        assert!(matches!(Diagram::new(2, 1, [(1, 1, 2)]), Err(DiagramError::ColorOutOfRange { .. })));
        assert!(matches!(Diagram::new(2, 1, [(1, 1, 0)]), Err(DiagramError::ColorOutOfRange { .. })));
        assert!(matches!(Diagram::new(0, 1, [(1, 1, 1)]), Err(DiagramError::IndexOutOfRange { .. })));
        assert_eq!(Diagram::new(1, 0, Vec::<Edge>::new()), Err(DiagramError::NoColors));
    }

    #[test]
    fn planarity_of_product_example() {
        let (d1, d2) = product_example();
        assert!(!d1.is_planar());
        assert!(d2.is_planar());
        let p = d1.multiply(&d2).unwrap();
        assert_eq!(p, d(3, 2, &[(1, 2, 1)]));
        assert!(p.is_planar());
        assert!(d(3, 2, &[(1, 3, 1), (3, 1, 2)]).is_planar());
    }

    #[test]
    fn multiply_shape_mismatch() {
        assert!(matches!(
            Diagram::empty(2, 1).multiply(&Diagram::empty(3, 1)),
            Err(DiagramError::ShapeMismatch { .. })
        ));
        assert!(Diagram::empty(2, 1).multiply(&Diagram::empty(2, 2)).is_err());
    }

    #[test]
    fn multiply_by_empty_annihilates() {
        for x in enumerate_planar(3, 2) {
            assert!(x.multiply(&Diagram::empty(3, 2)).unwrap().is_empty());
            assert!(Diagram::empty(3, 2).multiply(&x).unwrap().is_empty());
        }
    }

    #[test]
    fn profiles_of_five_vertex_example() {
        let x = five_vertex_example();
        assert!(x.is_planar());
        let tau = x.tau();
        let beta = x.beta();
        assert_eq!(tau.parts(), &[vec![4], vec![2, 5], vec![1, 3]]);
        assert_eq!(beta.parts(), &[vec![4], vec![1, 5], vec![2, 3]]);
        assert_eq!(Diagram::from_profiles(&tau, &beta).unwrap(), x);
        assert_eq!(x.vertical_subdiagram(), d(5, 2, &[(3, 3, 2), (5, 5, 1)]));
        assert_eq!(x.vertical_counts(), vec![1, 1]);
    }

    #[test]
    fn empty_profiles() {
        let e = Diagram::empty(3, 2);
        assert_eq!(e.tau().parts(), &[vec![1, 2, 3], vec![], vec![]]);
        let t = e.tau();
        assert_eq!(Diagram::from_profiles(&t, &t).unwrap(), e);
    }

    #[test]
    fn from_profiles_size_mismatch() {
        let t = Profile::new(2, 1, vec![vec![1], vec![2]]).unwrap();
        let b = Profile::new(2, 1, vec![vec![1, 2], vec![]]).unwrap();
        assert!(matches!(Diagram::from_profiles(&t, &b), Err(DiagramError::ProfileSizeMismatch { part: 0, .. })));
    }

    #[test]
    fn tensor_examples() {
        let x = five_vertex_example();
        assert_eq!(x.tensor(&Diagram::empty(0, 2)).unwrap(), x);
        assert_eq!(Diagram::empty(0, 2).tensor(&x).unwrap(), x);
        let i1 = Diagram::unit(1, 1);
        let i0 = Diagram::unit(1, 0);
        assert_eq!(i1.tensor(&i0).unwrap(), d(2, 1, &[(1, 1, 1)]));
        assert!(matches!(i1.tensor(&Diagram::empty(1, 2)), Err(DiagramError::ColorMismatch(1, 2))));
    }

    #[test]
    fn vertical_subdiagram_examples() {
        let id = Diagram::identity_shaped(3, 2, 2);
        assert_eq!(id.vertical_subdiagram(), id);
        assert!(d(2, 1, &[(1, 2, 1)]).vertical_subdiagram().is_empty());
    }

    #[test]
    fn enumeration_small_cases() {
        assert_eq!(enumerate_planar(0, 3).collect::<Vec<_>>(), vec![Diagram::empty(0, 3)]);
        for c in 1..5 {
            assert_eq!(enumerate_planar(1, c).count(), c + 1);
        }
        assert_eq!(enumerate_planar(2, 1).count(), 6);
        assert_eq!(cardinality(2, 1), BigUint::from(6u32));
        assert_eq!(cardinality(0, 3), BigUint::from(1u32));
    }

    #[test]
    fn enumeration_order_matches_key() {
        let all: Vec<Diagram> = enumerate_planar(3, 2).collect();
        let keys: Vec<_> = all.iter().map(Diagram::enumeration_key).collect();
        assert!(keys.windows(2).all(|w| w[0] < w[1]));
        assert!(all.iter().all(Diagram::is_planar));
    }

    #[test]
    fn subdiagrams_count_and_containment() {
        let x = five_vertex_example();
        let subs: Vec<Diagram> = x.subdiagrams().collect();
        assert_eq!(subs.len(), 16);
        assert!(subs[0].is_empty());
        assert_eq!(subs[15], x);
        assert!(subs.iter().all(|s| s.is_subdiagram_of(&x)));
    }

    #[test]
    fn literal_round_trip_and_errors() {
        let x: Diagram = "n=3 c=2 [1-2:1]".parse().unwrap();
        assert_eq!(x, d(3, 2, &[(1, 2, 1)]));
        assert_eq!(x.to_string(), "n=3 c=2 [1-2:1]");
        let y: Diagram = " n = 3  c=2[ 3-2 : 2 ,1-1:1 ] ".parse().unwrap();
        assert_eq!(y.to_string(), "n=3 c=2 [1-1:1, 3-2:2]");
        assert_eq!("n=2 c=1 []".parse::<Diagram>().unwrap(), Diagram::empty(2, 1));
        assert_eq!("n=3 c=2 [1-2:1".parse::<Diagram>(), Err(ParseError::Syntax { pos: 14, expected: "',' or ']'" }));
        assert_eq!("m=3".parse::<Diagram>(), Err(ParseError::Syntax { pos: 0, expected: "'n'" }));
        assert!(matches!(
            "n=2 c=1 [1-1:1, 1-2:1]".parse::<Diagram>(),
            Err(ParseError::Invalid(DiagramError::DuplicateTop { .. }))
        ));
        assert!(matches!("n=2 c=1 [] x".parse::<Diagram>(), Err(ParseError::Syntax { .. })));
    }

    #[test]
    fn matrix_round_trip() {
        let (d1, _) = product_example();
        assert_eq!(d1.to_matrix(), vec![vec![1, 0, 0], vec![0, 0, 1], vec![0, 1, 0]]);
        assert_eq!(Diagram::from_matrix(2, &d1.to_matrix()).unwrap(), d1);
        assert_eq!(d1.display_matrix(), "u1 0 0\n0 0 u1\n0 u1 0\n");
    }
}
