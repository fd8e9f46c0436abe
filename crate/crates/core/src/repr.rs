//! Irreducible modules `W^n_T` spanned by `{x_a : β(a) = T}`, their action
//! matrices, and finite checks of irreducibility, classification, the
//! regular decomposition, the matrix-algebra structure, characters and
//! restriction to the subalgebra on `n - 1` vertices.
//!
//! A diagram acts on an `x`-basis vector by sending it to another basis
//! vector or to zero, so action matrices of single diagrams are computed as
//! partial maps on basis indices and only turned into rational matrices
//! when needed.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{left_action_x, right_action_x, x_of, AlgebraElement, AlgebraError};
use crate::combinatorics::{binomial, compositions, multinomial};
use crate::diagram::{cardinality, enumerate_planar, Diagram, DiagramError};
use crate::profile::Profile;
use crate::witness::{check_cap, VerifyError, Witness};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReprError {
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("diagram {acting} sends basis vector x_{basis} to x_{image}, outside the space")]
    NotInvariant { acting: Diagram, basis: Diagram, image: Diagram },
    #[error("basis diagram {0} is repeated or has the wrong shape")]
    BadBasis(Diagram),
    #[error("profile {profile} does not live on (n={n}, c={c})")]
    ProfileShape { profile: Profile, n: usize, c: usize },
    #[error("label {label} does not match (n={n}, c={c})")]
    LabelShape { label: IrrepLabel, n: usize, c: usize },
    #[error("operation needs a module of the form W^n_T")]
    NotIrreducibleType,
    #[error("cannot restrict a module on 0 vertices")]
    NothingToRestrict,
    #[error("bad label {0:?}: expected non-negative integers separated by ',' or '|'")]
    LabelSyntax(String),
}

/// A composition `(n_0, n_1, ..., n_c)` of `n` naming the isomorphism class
/// `W^n_{n_0,...,n_c}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct IrrepLabel(Vec<usize>);

impl IrrepLabel {
    pub fn new(parts: Vec<usize>) -> Result<Self, ReprError> {
        if parts.is_empty() {
            return Err(ReprError::LabelSyntax(String::new()));
        }
        Ok(IrrepLabel(parts))
    }

    /// All labels for `(n, c)` in colex order.
    pub fn all(n: usize, c: usize) -> Vec<IrrepLabel> {
        compositions(n, c + 1).into_iter().map(IrrepLabel).collect()
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn n(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn c(&self) -> usize {
        self.0.len() - 1
    }

    /// `multinomial(n; n_0, ..., n_c)`.
    pub fn dimension(&self) -> BigUint {
        multinomial(&self.0)
    }

    /// The label with part `j` decreased by one, if that part is nonzero.
    pub fn minus(&self, j: usize) -> Option<IrrepLabel> {
        (self.0[j] > 0).then(|| {
            let mut parts = self.0.clone();
            parts[j] -= 1;
            IrrepLabel(parts)
        })
    }

    /// Summands of the restriction to `n - 1` vertices: `self - e_j` for every
    /// `j` with a nonzero part, `j` ascending.
    pub fn restriction_labels(&self) -> Vec<IrrepLabel> {
        (0..self.0.len()).filter_map(|j| self.minus(j)).collect()
    }

    pub fn nonzero_parts(&self) -> usize {
        self.0.iter().filter(|&&p| p > 0).count()
    }

    /// `n0|n1|...|nc`.
    pub fn pipe_key(&self) -> String {
        let items: Vec<String> = self.0.iter().map(usize::to_string).collect();
        items.join("|")
    }

    fn check_shape(&self, n: usize, c: usize) -> Result<(), ReprError> {
        if self.n() != n || self.c() != c {
            return Err(ReprError::LabelShape { label: self.clone(), n, c });
        }
        Ok(())
    }
}

impl fmt::Display for IrrepLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.0.iter().map(usize::to_string).collect();
        write!(f, "({})", items.join(","))
    }
}

impl FromStr for IrrepLabel {
    type Err = ReprError;

    /// Accepts `1,1,0`, `(1,1,0)` and `1|1|0`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let body = s.trim().trim_start_matches('(').trim_end_matches(')');
        let parts: Result<Vec<usize>, _> = body.split([',', '|']).map(|p| p.trim().parse()).collect();
        match parts {
            Ok(parts) if !parts.is_empty() => Ok(IrrepLabel(parts)),
            _ => Err(ReprError::LabelSyntax(s.to_string())),
        }
    }
}

/// A span of `x`-basis vectors. `W^n_T` is the case where every basis
/// diagram has bottom profile `T`; other constructors produce the graded
/// pieces `W^{n,k}` and arbitrary spans for testing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleSpace {
    n: usize,
    c: usize,
    bottom: Option<Profile>,
    basis: Vec<Diagram>,
    index: HashMap<Diagram, usize>,
}

impl ModuleSpace {
    /// `W^n_T`, with basis ordered by top profile.
    pub fn irreducible(t: &Profile) -> ModuleSpace {
        let basis = Profile::all_with_sizes(&t.sizes())
            .iter()
            .map(|s| Diagram::from_profiles(s, t).expect("sizes agree"))
            .collect();
        ModuleSpace::build(t.n(), t.c(), Some(t.clone()), basis)
    }

    /// The canonical representative of a class: `W^n_{T*}` where `T*` is
    /// the sorted profile of the label.
    pub fn for_label(label: &IrrepLabel) -> ModuleSpace {
        ModuleSpace::irreducible(&Profile::sorted_representative(label.parts()))
    }

    /// `W^{n,k}`: all `x_a` with `size(a) = k`, in enumeration order.
    pub fn graded(n: usize, c: usize, k: usize) -> ModuleSpace {
        let basis = enumerate_planar(n, c).filter(|d| d.size() == k).collect();
        ModuleSpace::build(n, c, None, basis)
    }

    pub fn from_basis(n: usize, c: usize, basis: Vec<Diagram>) -> Result<ModuleSpace, ReprError> {
        let mut seen = std::collections::HashSet::new();
        for d in &basis {
            if d.n() != n || d.c() != c || !seen.insert(d.clone()) {
                return Err(ReprError::BadBasis(d.clone()));
            }
            d.require_planar()?;
        }
        let bottom = basis.first().map(Diagram::beta).filter(|t| basis.iter().all(|d| &d.beta() == t));
        let bottom = bottom.filter(|t| basis.len() == multinomial(&t.sizes()).to_usize().unwrap_or(0));
        Ok(ModuleSpace::build(n, c, bottom, basis))
    }

    fn build(n: usize, c: usize, bottom: Option<Profile>, basis: Vec<Diagram>) -> ModuleSpace {
        let index = basis.iter().enumerate().map(|(i, d)| (d.clone(), i)).collect();
        ModuleSpace { n, c, bottom, basis, index }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn c(&self) -> usize {
        self.c
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Diagram] {
        &self.basis
    }

    /// `T` for `W^n_T`, `None` for other spans.
    pub fn bottom(&self) -> Option<&Profile> {
        self.bottom.as_ref()
    }

    pub fn label(&self) -> Option<IrrepLabel> {
        self.bottom.as_ref().map(|t| IrrepLabel(t.sizes()))
    }

    pub fn position(&self, d: &Diagram) -> Option<usize> {
        self.index.get(d).copied()
    }

    fn require_irreducible_type(&self) -> Result<&Profile, ReprError> {
        self.bottom.as_ref().ok_or(ReprError::NotIrreducibleType)
    }
}

/// Checked constructor for `W^n_T`.
pub fn module_space(n: usize, c: usize, t: &Profile) -> Result<ModuleSpace, ReprError> {
    if t.n() != n || t.c() != c {
        return Err(ReprError::ProfileShape { profile: t.clone(), n, c });
    }
    Ok(ModuleSpace::irreducible(t))
}

/// A square matrix of exact rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ActionMatrix {
    dim: usize,
    entries: Vec<BigRational>,
}

impl ActionMatrix {
    pub fn zero(dim: usize) -> Self {
        ActionMatrix { dim, entries: vec![BigRational::zero(); dim * dim] }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = ActionMatrix::zero(dim);
        for i in 0..dim {
            m.entries[i * dim + i] = BigRational::one();
        }
        m
    }

    /// Matrix of a partial map on basis indices: column `j` is the unit
    /// vector at `images[j]`, or zero.
    pub fn from_partial_map(images: &[Option<usize>]) -> Self {
        let mut m = ActionMatrix::zero(images.len());
        for (col, row) in images.iter().enumerate() {
            if let Some(row) = row {
                m.entries[row * images.len() + col] = BigRational::one();
            }
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> &BigRational {
        &self.entries[row * self.dim + col]
    }

    pub fn column(&self, col: usize) -> Vec<BigRational> {
        (0..self.dim).map(|r| self.get(r, col).clone()).collect()
    }

    pub fn trace(&self) -> BigRational {
        (0..self.dim).map(|i| self.get(i, i).clone()).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn add_scaled(&mut self, q: &BigRational, other: &ActionMatrix) {
        assert_eq!(self.dim, other.dim);
        for (a, b) in self.entries.iter_mut().zip(&other.entries) {
            if !b.is_zero() {
                *a += q * b;
            }
        }
    }

    pub fn mul(&self, other: &ActionMatrix) -> ActionMatrix {
        assert_eq!(self.dim, other.dim);
        let n = self.dim;
        let mut out = ActionMatrix::zero(n);
        for i in 0..n {
            for k in 0..n {
                let a = &self.entries[i * n + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = &other.entries[k * n + j];
                    if !b.is_zero() {
                        out.entries[i * n + j] += a * b;
                    }
                }
            }
        }
        out
    }

    /// True iff each column has at most one nonzero entry and that entry is 1.
    pub fn is_partial_permutation_like(&self) -> bool {
        (0..self.dim).all(|col| {
            let nonzero: Vec<&BigRational> = (0..self.dim).map(|r| self.get(r, col)).filter(|q| !q.is_zero()).collect();
            nonzero.is_empty() || (nonzero.len() == 1 && nonzero[0].is_one())
        })
    }

    /// Block-diagonal with respect to consecutive blocks of the given sizes.
    pub fn is_block_diagonal(&self, block_sizes: &[usize]) -> bool {
        let mut block_of = Vec::with_capacity(self.dim);
        for (b, &size) in block_sizes.iter().enumerate() {
            block_of.extend(std::iter::repeat_n(b, size));
        }
        if block_of.len() != self.dim {
            return false;
        }
        (0..self.dim).all(|r| (0..self.dim).all(|c| block_of[r] == block_of[c] || self.get(r, c).is_zero()))
    }

    /// Rows and columns reordered: entry `(i, j)` of the result is entry
    /// `(order[i], order[j])` of `self`.
    pub fn permuted(&self, order: &[usize]) -> ActionMatrix {
        let n = self.dim;
        let mut out = ActionMatrix::zero(n);
        for i in 0..n {
            for j in 0..n {
                out.entries[i * n + j] = self.get(order[i], order[j]).clone();
            }
        }
        out
    }
}

fn check_diagram_shape(d: &Diagram, m: &ModuleSpace) -> Result<(), ReprError> {
    if d.n() != m.n || d.c() != m.c {
        return Err(DiagramError::ShapeMismatch { n1: d.n(), c1: d.c(), n2: m.n, c2: m.c }.into());
    }
    d.require_planar()?;
    Ok(())
}

/// Image index of every basis vector under `d`, or `None` where `d` acts
/// as zero.
pub fn action_images(d: &Diagram, m: &ModuleSpace) -> Result<Vec<Option<usize>>, ReprError> {
    check_diagram_shape(d, m)?;
    m.basis
        .iter()
        .map(|a| match left_action_x(d, a)? {
            None => Ok(None),
            Some(b) => match m.position(&b) {
                Some(i) => Ok(Some(i)),
                None => Err(ReprError::NotInvariant { acting: d.clone(), basis: a.clone(), image: b }),
            },
        })
        .collect()
}

/// `ρ(d)` on the given space.
pub fn action_matrix(d: &Diagram, m: &ModuleSpace) -> Result<ActionMatrix, ReprError> {
    Ok(ActionMatrix::from_partial_map(&action_images(d, m)?))
}

/// `ρ(g) = Σ λ_d ρ(d)`.
pub fn action_matrix_elem(g: &AlgebraElement, m: &ModuleSpace) -> Result<ActionMatrix, ReprError> {
    if g.n() != m.n || g.c() != m.c {
        return Err(DiagramError::ShapeMismatch { n1: g.n(), c1: g.c(), n2: m.n, c2: m.c }.into());
    }
    let mut out = ActionMatrix::zero(m.dim());
    for (d, q) in g.terms() {
        out.add_scaled(q, &action_matrix(d, m)?);
    }
    Ok(out)
}

/// Trace of `ρ(g)` on the canonical representative of `label`.
pub fn trace_on_label(g: &AlgebraElement, label: &IrrepLabel) -> Result<BigRational, ReprError> {
    label.check_shape(g.n(), g.c())?;
    Ok(action_matrix_elem(g, &ModuleSpace::for_label(label))?.trace())
}

fn exhaustive(n: usize, c: usize, cap: u64) -> Result<Vec<Diagram>, VerifyError> {
    check_cap(n, c, cap)?;
    Ok(enumerate_planar(n, c).collect())
}

fn invalid(e: impl fmt::Display) -> VerifyError {
    VerifyError::Invalid(e.to_string())
}

fn images_or_fail(d: &Diagram, m: &ModuleSpace) -> Result<Vec<Option<usize>>, VerifyError> {
    action_images(d, m).map_err(|e| match e {
        ReprError::NotInvariant { acting, basis, image } => VerifyError::Failed(Witness::new(
            "space is not invariant: acting diagram sends a basis vector outside",
            vec![acting, basis, image],
        )),
        other => invalid(other),
    })
}

/// Irreducibility of a span of `x`-basis vectors, checked constructively.
///
/// For every basis vector `x_a` there must be a diagram acting as the
/// projection onto `x_a` (the candidate is the planar diagram with
/// `τ = β = τ(a)`), and for every ordered pair `(x_a, x_b)` a diagram `d`
/// with `d·x_a = x_b` (the candidate joins `τ(a)` on the bottom to `τ(b)`
/// on top). Together these rule out proper nonzero invariant subspaces.
/// The span must first be invariant under all of `P_{n,c}` (subject to
/// `cap`). When a candidate fails, `P_{n,c}` is searched before the pair is
/// reported as a witness.
pub fn verify_irreducible(m: &ModuleSpace, cap: u64) -> Result<(), VerifyError> {
    let mut search_space: Option<Vec<Diagram>> = None;
    let mut all = |n, c| -> Result<Vec<Diagram>, VerifyError> {
        if search_space.is_none() {
            search_space = Some(exhaustive(n, c, cap)?);
        }
        Ok(search_space.clone().unwrap())
    };
    if m.dim() == 0 {
        return Err(VerifyError::fail("zero space is not irreducible", vec![]));
    }
    for d in all(m.n, m.c)? {
        images_or_fail(&d, m)?;
    }

    for (i, a) in m.basis.iter().enumerate() {
        for (j, b) in m.basis.iter().enumerate() {
            let transport = Diagram::from_profiles(&b.tau(), &a.tau());
            let direct = match transport {
                Ok(d) => images_or_fail(&d, m)?[i] == Some(j),
                Err(_) => false,
            };
            if direct {
                continue;
            }
            let mut found = false;
            for d in all(m.n, m.c)? {
                if images_or_fail(&d, m)?[i] == Some(j) {
                    found = true;
                    break;
                }
            }
            if !found {
                return Err(VerifyError::Failed(Witness::new(
                    "no diagram sends the first basis vector to the second",
                    vec![a.clone(), b.clone()],
                )));
            }
        }
    }

    for (i, a) in m.basis.iter().enumerate() {
        let projection = Diagram::from_profiles(&a.tau(), &a.tau()).map_err(invalid)?;
        let is_projection = |images: &[Option<usize>]| {
            images.iter().enumerate().all(|(j, img)| if j == i { *img == Some(i) } else { img.is_none() })
        };
        if !is_projection(&images_or_fail(&projection, m)?) {
            let mut found = false;
            for d in all(m.n, m.c)? {
                if is_projection(&images_or_fail(&d, m)?) {
                    found = true;
                    break;
                }
            }
            if !found {
                return Err(VerifyError::Failed(Witness::new(
                    "no diagram projects onto this basis vector",
                    vec![a.clone()],
                )));
            }
        }
    }
    Ok(())
}

/// Outcome of [`are_isomorphic`] with the witness the classification
/// argument provides.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Isomorphism {
    /// `x_a ↦ x_a · intertwiner` maps the first module onto the second.
    Isomorphic { intertwiner: Diagram },
    /// `distinguishing` acts as zero on `zero_on` (0 = first, 1 = second)
    /// and nontrivially on the other module.
    Distinct { distinguishing: Diagram, zero_on: usize },
}

impl Isomorphism {
    pub fn is_isomorphic(&self) -> bool {
        matches!(self, Isomorphism::Isomorphic { .. })
    }
}

/// `W^n_T ≅ W^n_S` iff `|T_i| = |S_i|` for every part.
pub fn are_isomorphic(m1: &ModuleSpace, m2: &ModuleSpace) -> Result<Isomorphism, ReprError> {
    let t = m1.require_irreducible_type()?;
    let s = m2.require_irreducible_type()?;
    if t.n() != s.n() || t.c() != s.c() {
        return Err(DiagramError::ShapeMismatch { n1: t.n(), c1: t.c(), n2: s.n(), c2: s.c() }.into());
    }
    if t.same_sizes(s) {
        return Ok(Isomorphism::Isomorphic { intertwiner: Diagram::from_profiles(t, s)? });
    }
    // Some color part differs; the side where it is smaller carries the
    // idempotent that kills the other side.
    let i = (1..=t.c()).find(|&i| t.part(i).len() != s.part(i).len()).expect("sizes differ in a color part");
    let (small, zero_on) = if t.part(i).len() < s.part(i).len() { (t, 1) } else { (s, 0) };
    Ok(Isomorphism::Distinct { distinguishing: Diagram::from_profiles(small, small)?, zero_on })
}

/// Validates an [`Isomorphism`] witness against the action of every diagram
/// in `P_{n,c}`.
pub fn check_isomorphism_witness(
    m1: &ModuleSpace,
    m2: &ModuleSpace,
    witness: &Isomorphism,
    cap: u64,
) -> Result<(), VerifyError> {
    match witness {
        Isomorphism::Isomorphic { intertwiner } => {
            // φ(x_a) = x_a · intertwiner must be a bijection of bases.
            let mut phi = Vec::with_capacity(m1.dim());
            for a in &m1.basis {
                let image = right_action_x(a, intertwiner).map_err(invalid)?;
                match image.and_then(|b| m2.position(&b)) {
                    Some(j) => phi.push(j),
                    None => {
                        return Err(VerifyError::Failed(Witness::new(
                            "intertwiner does not map the basis into the target",
                            vec![intertwiner.clone(), a.clone()],
                        )))
                    }
                }
            }
            let mut sorted = phi.clone();
            sorted.sort_unstable();
            if m1.dim() != m2.dim() || sorted != (0..m2.dim()).collect::<Vec<_>>() {
                return Err(VerifyError::fail("intertwiner is not a bijection", vec![intertwiner.clone()]));
            }
            for d in exhaustive(m1.n, m1.c, cap)? {
                let left = images_or_fail(&d, m1)?;
                let right = images_or_fail(&d, m2)?;
                for (a, img) in left.iter().enumerate() {
                    if right[phi[a]] != img.map(|k| phi[k]) {
                        return Err(VerifyError::Failed(Witness::new(
                            "intertwiner does not commute with the action",
                            vec![intertwiner.clone(), d.clone(), m1.basis[a].clone()],
                        )));
                    }
                }
            }
            Ok(())
        }
        Isomorphism::Distinct { distinguishing, zero_on } => {
            let on = [images_or_fail(distinguishing, m1)?, images_or_fail(distinguishing, m2)?];
            let zero = on[*zero_on].iter().all(Option::is_none);
            let nonzero = on[1 - zero_on].iter().any(Option::is_some);
            if zero && nonzero {
                Ok(())
            } else {
                Err(VerifyError::fail(
                    "distinguishing diagram does not separate the modules",
                    vec![distinguishing.clone()],
                ))
            }
        }
    }
}

/// Each label with multiplicity `multinomial(n; label)` in the regular
/// module.
pub fn regular_decomposition(n: usize, c: usize) -> Vec<(IrrepLabel, BigUint)> {
    IrrepLabel::all(n, c)
        .into_iter()
        .map(|label| {
            let m = label.dimension();
            (label, m)
        })
        .collect()
}

/// Checks the regular decomposition against `P_{n,c}`: the `x`-basis splits
/// into blocks by bottom profile, each block has the dimension of its
/// label, each label occurs for `multinomial` many bottom profiles, the
/// graded pieces `W^{n,k}` are the sums of their blocks, and the dimension
/// count matches `|P_{n,c}|`.
pub fn verify_regular_decomposition(n: usize, c: usize, cap: u64) -> Result<(), VerifyError> {
    let all = exhaustive(n, c, cap)?;
    let mut blocks: HashMap<Profile, Vec<Diagram>> = HashMap::new();
    for a in &all {
        blocks.entry(a.beta()).or_default().push(a.clone());
    }
    let mut blocks_per_label: HashMap<Vec<usize>, usize> = HashMap::new();
    for (t, members) in &blocks {
        let expected = ModuleSpace::irreducible(t);
        if expected.basis != *members {
            return Err(VerifyError::Failed(
                Witness::new("block does not match W^n_T", members.clone()).with_detail(t.to_string()),
            ));
        }
        *blocks_per_label.entry(t.sizes()).or_default() += 1;
    }
    let mut total = BigUint::zero();
    for (label, mult) in regular_decomposition(n, c) {
        let found = blocks_per_label.get(label.parts()).copied().unwrap_or(0);
        if BigUint::from(found) != mult {
            return Err(VerifyError::Failed(
                Witness::new("multiplicity mismatch", vec![]).with_detail(format!("{label}: {found} blocks vs {mult}")),
            ));
        }
        total += &mult * label.dimension();
    }
    if total != cardinality(n, c) || BigUint::from(all.len()) != total {
        return Err(VerifyError::Failed(
            Witness::new("dimension count mismatch", vec![]).with_detail(format!("{total} vs {}", all.len())),
        ));
    }
    for k in 0..=n {
        let graded = ModuleSpace::graded(n, c, k);
        let from_blocks: usize =
            blocks.iter().filter(|(t, _)| t.sizes()[1..].iter().sum::<usize>() == k).map(|(_, b)| b.len()).sum();
        if graded.dim() != from_blocks {
            return Err(VerifyError::Failed(
                Witness::new("graded piece is not the sum of its blocks", vec![]).with_detail(format!("k = {k}")),
            ));
        }
    }
    Ok(())
}

/// The `x_{S,T}` with `S`, `T` running over profiles of sizes `label` behave
/// as matrix units `E_{S,T}`, and their span is a two-sided ideal.
/// Products are computed by full expansion, not by the fast path.
pub fn verify_matrix_algebra(
    n: usize,
    c: usize,
    label: &IrrepLabel,
    dim_cap: u64,
    diagram_cap: u64,
) -> Result<(), VerifyError> {
    label.check_shape(n, c).map_err(invalid)?;
    let m = label.dimension();
    if m > BigUint::from(dim_cap) {
        return Err(VerifyError::SizeCapExceeded { what: "matrix dimension", size: m, cap: dim_cap });
    }
    let profiles = Profile::all_with_sizes(label.parts());
    let units: Vec<Vec<AlgebraElement>> = profiles
        .iter()
        .map(|s| {
            profiles
                .iter()
                .map(|t| x_of(&Diagram::from_profiles(s, t).expect("sizes agree")).expect("planar"))
                .collect()
        })
        .collect();
    let k = profiles.len();
    for i in 0..k {
        for j in 0..k {
            for l in 0..k {
                for r in 0..k {
                    let product = units[i][j].mul(&units[l][r]).map_err(invalid)?;
                    let expected = if j == l { units[i][r].clone() } else { AlgebraElement::zero(n, c) };
                    if product != expected {
                        let label_of = |s: usize, t: usize| Diagram::from_profiles(&profiles[s], &profiles[t]).unwrap();
                        return Err(VerifyError::Failed(Witness::new(
                            "x_{S,T} product differs from the matrix-unit product",
                            vec![label_of(i, j), label_of(l, r)],
                        )));
                    }
                }
            }
        }
    }
    let in_ideal = |g: &AlgebraElement| g.to_x_coordinates().keys().all(|a| a.beta().sizes() == label.parts());
    for d in exhaustive(n, c, diagram_cap)? {
        let de = AlgebraElement::from_diagram(&d).map_err(invalid)?;
        for row in &units {
            for u in row {
                let left = de.mul(u).map_err(invalid)?;
                let right = u.mul(&de).map_err(invalid)?;
                if !in_ideal(&left) || !in_ideal(&right) {
                    return Err(VerifyError::Failed(Witness::new(
                        "ideal is not closed under multiplication by a diagram",
                        vec![d.clone()],
                    )));
                }
            }
        }
    }
    Ok(())
}

/// `χ(d) = Π_{i=1}^{c} C(ℓ_i, n_i)` where `ℓ_i` counts vertical color-`i`
/// edges of `d`.
pub fn character(d: &Diagram, label: &IrrepLabel) -> Result<BigUint, ReprError> {
    label.check_shape(d.n(), d.c())?;
    d.require_planar()?;
    let counts = d.vertical_counts();
    Ok((1..=d.c()).map(|i| binomial(counts[i - 1] as u64, label.parts()[i] as u64)).product())
}

/// `Tr ρ(d)` on the canonical representative of `label`.
pub fn character_by_trace(d: &Diagram, label: &IrrepLabel) -> Result<BigUint, ReprError> {
    label.check_shape(d.n(), d.c())?;
    let images = action_images(d, &ModuleSpace::for_label(label))?;
    Ok(BigUint::from(images.iter().enumerate().filter(|(i, img)| **img == Some(*i)).count()))
}

/// The block decomposition of `W^n_T` restricted to the subalgebra on
/// `n - 1` vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Restriction {
    /// One entry per nonempty part `j`: the summand label and the basis of
    /// `Ŵ^n_{T,j} = span{x_a : n ∈ τ_j(a)}`.
    pub blocks: Vec<(usize, IrrepLabel, Vec<Diagram>)>,
}

impl Restriction {
    pub fn labels(&self) -> Vec<IrrepLabel> {
        self.blocks.iter().map(|(_, l, _)| l.clone()).collect()
    }

    /// Basis indices of the module, grouped by block with `j` ascending.
    pub fn adapted_order(&self, m: &ModuleSpace) -> Vec<usize> {
        self.blocks
            .iter()
            .flat_map(|(_, _, basis)| basis.iter().map(|a| m.position(a).expect("block vectors lie in the module")))
            .collect()
    }

    pub fn block_sizes(&self) -> Vec<usize> {
        self.blocks.iter().map(|(_, _, b)| b.len()).collect()
    }
}

/// Splits `W^n_T` by the part of the top profile containing vertex `n` and
/// checks that (a) each piece is invariant under `γ(d)` for all `d` on
/// `n - 1` vertices, (b) the map `x_a ↦ x_{a'}`, with `a'` obtained by
/// deleting vertex `n` and moving to the canonical bottom profile,
/// intertwines `γ(d)` with `d`, and (c) the block dimensions follow the
/// multinomial recursion.
pub fn restriction_decomposition(m: &ModuleSpace, cap: u64) -> Result<Restriction, VerifyError> {
    let t = m.require_irreducible_type().map_err(invalid)?.clone();
    if m.n == 0 {
        return Err(invalid(ReprError::NothingToRestrict));
    }
    let (n, c) = (m.n, m.c);
    let label = IrrepLabel(t.sizes());
    let mut blocks = Vec::new();
    for j in 0..=c {
        let Some(sub_label) = label.minus(j) else { continue };
        let basis: Vec<Diagram> = m.basis.iter().filter(|a| a.tau().part_of(n) == Some(j)).cloned().collect();
        blocks.push((j, sub_label, basis));
    }
    let restriction = Restriction { blocks };

    let dims_match = restriction.blocks.iter().all(|(_, l, b)| BigUint::from(b.len()) == l.dimension());
    let total: usize = restriction.block_sizes().iter().sum();
    if !dims_match || total != m.dim() || BigUint::from(m.dim()) != label.dimension() {
        return Err(VerifyError::Failed(
            Witness::new("restriction block dimensions do not add up", vec![]).with_detail(label.to_string()),
        ));
    }

    let targets: Vec<ModuleSpace> = restriction.blocks.iter().map(|(_, l, _)| ModuleSpace::for_label(l)).collect();
    // φ on each block: position in the target module
    let mut phi: Vec<Vec<usize>> = Vec::new();
    for ((_, _, basis), target) in restriction.blocks.iter().zip(&targets) {
        let bottom = target.bottom().expect("canonical module").clone();
        let mut map = Vec::with_capacity(basis.len());
        for a in basis {
            let (top, _) = a.tau().without_last().expect("n >= 1");
            let a_prime = Diagram::from_profiles(&top, &bottom).map_err(invalid)?;
            map.push(target.position(&a_prime).expect("same sizes"));
        }
        phi.push(map);
    }

    let order = restriction.adapted_order(m);
    for d in exhaustive(n - 1, c, cap)? {
        let gamma = AlgebraElement::from_diagram(&d).map_err(invalid)?.embed();
        let rho = action_matrix_elem(&gamma, m).map_err(invalid)?;
        if !rho.permuted(&order).is_block_diagonal(&restriction.block_sizes()) {
            return Err(VerifyError::Failed(Witness::new(
                "restriction block is not invariant under the embedded diagram",
                vec![d.clone()],
            )));
        }
        for (b, ((_, _, basis), target)) in restriction.blocks.iter().zip(&targets).enumerate() {
            let small = action_images(&d, target).map_err(invalid)?;
            for (k, a) in basis.iter().enumerate() {
                let col = m.position(a).expect("in module");
                // γ(d)·x_a expressed in block coordinates, pushed through φ
                let mut pushed = vec![BigRational::zero(); target.dim()];
                for (k2, a2) in basis.iter().enumerate() {
                    let q = rho.get(m.position(a2).expect("in module"), col);
                    if !q.is_zero() {
                        pushed[phi[b][k2]] += q;
                    }
                }
                let mut expected = vec![BigRational::zero(); target.dim()];
                if let Some(r) = small[phi[b][k]] {
                    expected[r] = BigRational::one();
                }
                if pushed != expected {
                    return Err(VerifyError::Failed(Witness::new(
                        "restriction map does not intertwine the embedded action",
                        vec![d.clone(), a.clone()],
                    )));
                }
            }
        }
    }
    Ok(restriction)
}

/// Integer-valued trace helper.
pub fn rational_to_biguint(q: &BigRational) -> Option<BigUint> {
    if q.is_integer() && q.numer() >= &BigInt::zero() {
        q.numer().to_biguint()
    } else {
        None
    }
}
