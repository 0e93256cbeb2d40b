//! Simplicial complexes, reduced homology and Reisner's criterion.
//!
//! Faces are `u64` bitmasks over the vertex set (bit `i` is vertex `i + 1`
//! in the 1-based numbering used at the API boundary).

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::str::FromStr;
use std::sync::atomic::{AtomicBool, Ordering as AtomicOrdering};

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::monomial::{IdealError, MonomialIdeal};
use crate::snf::{invariant_factors, SparseMatrix};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HomologyError {
    #[error("{0:?} is not a face of the complex")]
    NotAFace(Vec<usize>),
    #[error("complex has {0} vertices; at most 64 are supported")]
    TooManyVertices(usize),
    #[error("vertex {vertex} outside 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error(transparent)]
    Ideal(#[from] IdealError),
}

/// Coefficient field for homology ranks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FieldSpec {
    Rationals,
    Prime(u64),
}

impl FieldSpec {
    pub fn label(&self) -> String {
        match self {
            FieldSpec::Rationals => "Q".into(),
            FieldSpec::Prime(p) => format!("F{p}"),
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

pub fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

impl FromStr for FieldSpec {
    type Err = String;

    /// Accepts `q`/`Q` and `fp:<p>` (also `F<p>`).
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("q") {
            return Ok(FieldSpec::Rationals);
        }
        let digits = s
            .strip_prefix("fp:")
            .or_else(|| s.strip_prefix("Fp:"))
            .or_else(|| s.strip_prefix('F'))
            .ok_or_else(|| format!("unknown field `{s}` (expected q or fp:<p>)"))?;
        let p: u64 = digits.parse().map_err(|_| format!("bad prime `{digits}`"))?;
        if !is_prime(p) {
            return Err(format!("{p} is not prime"));
        }
        Ok(FieldSpec::Prime(p))
    }
}

fn mask_to_vertices(mask: u64) -> Vec<usize> {
    (0..64).filter(|i| mask >> i & 1 == 1).map(|i| i + 1).collect()
}

/// Keeps inclusion-maximal masks, sorted canonically.
fn maximal_masks(mut masks: Vec<u64>) -> Vec<u64> {
    masks.sort_unstable_by_key(|m| std::cmp::Reverse(m.count_ones()));
    masks.dedup();
    let mut kept: Vec<u64> = Vec::with_capacity(masks.len());
    for m in masks {
        if !kept.iter().any(|&k| k & m == m) {
            kept.push(m);
        }
    }
    kept.sort_unstable_by_key(|&m| face_key(m));
    kept
}

/// Canonical face order: by size, then lexicographic on vertex lists.
fn face_key(mask: u64) -> (u32, u64) {
    (mask.count_ones(), mask.reverse_bits())
}

/// A finite simplicial complex given by its facets. No facets at all is the
/// void complex; the single facet `∅` is the complex `{∅}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    n_vertices: usize,
    facets: Vec<u64>,
}

impl SimplicialComplex {
    /// Facets as 1-based vertex lists; non-maximal entries are dropped.
    pub fn from_facets(n_vertices: usize, facets: &[Vec<usize>]) -> Result<Self, HomologyError> {
        if n_vertices > 64 {
            return Err(HomologyError::TooManyVertices(n_vertices));
        }
        let mut masks = Vec::with_capacity(facets.len());
        for f in facets {
            let mut m = 0u64;
            for &v in f {
                if v == 0 || v > n_vertices {
                    return Err(HomologyError::VertexOutOfRange { vertex: v, n: n_vertices });
                }
                m |= 1 << (v - 1);
            }
            masks.push(m);
        }
        Ok(Self::from_masks(n_vertices, masks))
    }

    pub(crate) fn from_masks(n_vertices: usize, masks: Vec<u64>) -> Self {
        SimplicialComplex { n_vertices, facets: maximal_masks(masks) }
    }

    /// The full simplex on `n` vertices.
    pub fn simplex(n: usize) -> Self {
        Self::from_masks(n, vec![full_mask(n)])
    }

    /// Boundary of the `k`-simplex (on `k + 1` vertices).
    pub fn simplex_boundary(k: usize) -> Self {
        let full = full_mask(k + 1);
        Self::from_masks(k + 1, (0..=k).map(|i| full & !(1 << i)).collect())
    }

    pub fn n_vertices(&self) -> usize {
        self.n_vertices
    }

    pub fn facets(&self) -> Vec<Vec<usize>> {
        self.facets.iter().map(|&f| mask_to_vertices(f)).collect()
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    /// Dimension; `-1` for `{∅}` and `-2` for the void complex.
    pub fn dim(&self) -> i32 {
        self.facets.iter().map(|f| f.count_ones() as i32 - 1).max().unwrap_or(-2)
    }

    pub fn is_pure(&self) -> bool {
        self.facets.windows(2).all(|w| w[0].count_ones() == w[1].count_ones())
    }

    pub fn contains_face(&self, face: u64) -> bool {
        self.facets.iter().any(|&f| f & face == face)
    }

    /// All faces, in canonical order (size, then lexicographic).
    pub fn faces(&self) -> Vec<u64> {
        let mut seen: HashSet<u64> = HashSet::new();
        let mut stack: Vec<u64> = self.facets.clone();
        while let Some(f) = stack.pop() {
            if seen.insert(f) {
                let mut rest = f;
                while rest != 0 {
                    let bit = rest & rest.wrapping_neg();
                    rest &= rest - 1;
                    let sub = f & !bit;
                    if !seen.contains(&sub) {
                        stack.push(sub);
                    }
                }
            }
        }
        let mut faces: Vec<u64> = seen.into_iter().collect();
        faces.sort_unstable_by_key(|&m| face_key(m));
        faces
    }

    /// Number of faces in each dimension `-1..=dim`.
    pub fn f_vector(&self) -> Vec<usize> {
        let dim = self.dim();
        if dim < -1 {
            return Vec::new();
        }
        let mut f = vec![0usize; (dim + 2) as usize];
        for face in self.faces() {
            f[face.count_ones() as usize] += 1;
        }
        f
    }

    /// `lk(F) = {G : G ∩ F = ∅, G ∪ F ∈ Δ}`.
    pub fn link(&self, face: &[usize]) -> Result<SimplicialComplex, HomologyError> {
        let mut mask = 0u64;
        for &v in face {
            if v == 0 || v > self.n_vertices {
                return Err(HomologyError::VertexOutOfRange { vertex: v, n: self.n_vertices });
            }
            mask |= 1 << (v - 1);
        }
        if !self.contains_face(mask) {
            return Err(HomologyError::NotAFace(face.to_vec()));
        }
        Ok(self.link_mask(mask))
    }

    pub(crate) fn link_mask(&self, face: u64) -> SimplicialComplex {
        let masks = self.facets.iter().filter(|&&f| f & face == face).map(|&f| f & !face).collect();
        SimplicialComplex::from_masks(self.n_vertices, masks)
    }

    /// Some vertex lies in every facet.
    pub fn is_cone(&self) -> bool {
        !self.facets.is_empty() && self.facets.iter().fold(u64::MAX, |acc, &f| acc & f) != 0
    }

    pub fn reduced_homology(&self) -> HomologyProfile {
        reduced_homology(self)
    }
}

fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Stanley–Reisner complex of a squarefree ideal: its facets are the
/// complements of the minimal primes.
pub fn complex_of_ideal(ideal: &MonomialIdeal) -> Result<SimplicialComplex, HomologyError> {
    if !ideal.is_squarefree() {
        return Err(IdealError::NotSquarefree.into());
    }
    if ideal.is_unit() {
        return Err(IdealError::UnitIdeal.into());
    }
    let n = ideal.nvars();
    if n > 64 {
        return Err(HomologyError::TooManyVertices(n));
    }
    let full = full_mask(n);
    let facets =
        ideal.minimal_primes()?.iter().map(|p| full & !p.vars().iter().fold(0u64, |acc, &i| acc | 1 << i)).collect();
    Ok(SimplicialComplex::from_masks(n, facets))
}

/// Reduced homology in one dimension: rational rank plus integer torsion.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologyGroup {
    pub dim: i32,
    pub rank: usize,
    pub torsion: Vec<u64>,
}

/// Reduced homology in dimensions `-1..=dim Δ`, with enough data to recover
/// ranks over every prime field.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologyProfile {
    pub groups: Vec<HomologyGroup>,
    /// Face counts per dimension, starting at dimension -1.
    pub f_vector: Vec<usize>,
}

impl HomologyProfile {
    pub fn rank(&self, dim: i32) -> usize {
        self.groups.iter().find(|g| g.dim == dim).map_or(0, |g| g.rank)
    }

    /// `dim H̃_d(Δ; k)`, via the universal coefficient theorem over `F_p`.
    pub fn field_rank(&self, dim: i32, field: FieldSpec) -> usize {
        let here = self.rank(dim);
        match field {
            FieldSpec::Rationals => here,
            FieldSpec::Prime(p) => {
                let count = |d: i32| {
                    self.groups
                        .iter()
                        .find(|g| g.dim == d)
                        .map_or(0, |g| g.torsion.iter().filter(|&&t| t % p == 0).count())
                };
                here + count(dim) + count(dim - 1)
            }
        }
    }

    pub fn has_torsion(&self) -> bool {
        self.groups.iter().any(|g| !g.torsion.is_empty())
    }

    /// `Σ (-1)^d f_d` over dimensions `-1..`.
    pub fn euler_from_faces(&self) -> i64 {
        self.f_vector.iter().enumerate().map(|(i, &f)| if i % 2 == 1 { f as i64 } else { -(f as i64) }).sum()
    }

    /// `Σ (-1)^d rank H̃_d` over dimensions `-1..`.
    pub fn euler_from_betti(&self) -> i64 {
        self.groups.iter().map(|g| if g.dim.rem_euclid(2) == 0 { g.rank as i64 } else { -(g.rank as i64) }).sum()
    }
}

/// Boundary matrix `∂_d : C_d → C_{d-1}`, rows indexed by `(d-1)`-faces.
fn boundary(lower: &[u64], upper: &[u64]) -> SparseMatrix {
    let index = |f: u64| lower.binary_search_by_key(&face_key(f), |&g| face_key(g)).expect("face of a face");
    let mut m = SparseMatrix::new(lower.len(), upper.len());
    for (j, &f) in upper.iter().enumerate() {
        let mut sign = 1i64;
        let mut rest = f;
        while rest != 0 {
            let bit = rest & rest.wrapping_neg();
            rest &= rest - 1;
            m.rows[index(f & !bit)].push((j as u32, sign));
            sign = -sign;
        }
    }
    m
}

pub fn reduced_homology(delta: &SimplicialComplex) -> HomologyProfile {
    let dim = delta.dim();
    if dim < -1 {
        return HomologyProfile { groups: Vec::new(), f_vector: Vec::new() };
    }
    let faces = delta.faces();
    let top = (dim + 1) as usize;
    let mut by_dim: Vec<Vec<u64>> = vec![Vec::new(); top + 1];
    for f in faces {
        by_dim[f.count_ones() as usize].push(f);
    }
    // factors[k] are the invariant factors of ∂ from size-k faces to size-(k-1)
    let factors: Vec<Vec<BigInt>> = (0..=top + 1)
        .into_par_iter()
        .map(|k| if k == 0 || k > top { Vec::new() } else { invariant_factors(&boundary(&by_dim[k - 1], &by_dim[k])) })
        .collect();
    let mut groups = Vec::with_capacity(top + 1);
    for k in 0..=top {
        let f = by_dim[k].len();
        let rank_out = factors[k].len();
        let into = &factors[k + 1];
        let rank = f - rank_out - into.len();
        let torsion = into
            .iter()
            .filter(|d| !d.is_one() && !d.is_zero())
            .map(|d| d.to_u64().expect("torsion coefficient fits in u64"))
            .collect();
        groups.push(HomologyGroup { dim: k as i32 - 1, rank, torsion });
    }
    HomologyProfile { groups, f_vector: by_dim.iter().map(Vec::len).collect() }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReisnerWitness {
    /// 1-based vertices of the face whose link fails.
    pub face: Vec<usize>,
    /// Vertex names, when the complex came from an ideal.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub face_vars: Option<Vec<String>>,
    /// Homological degree `i < dim lk(F)` with `H̃_i(lk F) ≠ 0`.
    pub dim: i32,
    /// Multidegree of the failing degree complex; `face` is then its set of
    /// negative coordinates.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub degree: Option<Vec<i64>>,
}

/// Which complexes a certificate was computed from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CmRoute {
    /// Links of every face of a Stanley–Reisner complex.
    Reisner,
    /// Degree complexes of a non-squarefree monomial ideal.
    DegreeComplex,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReisnerCertificate {
    pub cm: bool,
    pub field: String,
    pub checked_links: usize,
    pub witness: Option<ReisnerWitness>,
    /// Some computed link homology carried integer torsion.
    pub torsion_seen: bool,
    pub route: CmRoute,
}

enum LinkOutcome {
    Fine { torsion: bool },
    Fails(i32),
}

fn check_link(delta: &SimplicialComplex, face: u64, field: FieldSpec) -> LinkOutcome {
    let link = delta.link_mask(face);
    if link.is_cone() {
        return LinkOutcome::Fine { torsion: false };
    }
    let d = link.dim();
    if d <= 0 {
        // only H̃_{-1} is constrained, and the link of a face is never void
        return LinkOutcome::Fine { torsion: false };
    }
    if d == 1 {
        // only connectivity matters
        return if graph_connected(&link.facets) {
            LinkOutcome::Fine { torsion: false }
        } else {
            LinkOutcome::Fails(0)
        };
    }
    let h = reduced_homology(&link);
    for i in -1..d {
        if h.field_rank(i, field) != 0 {
            return LinkOutcome::Fails(i);
        }
    }
    LinkOutcome::Fine { torsion: h.has_torsion() }
}

/// Connectivity of the 1-skeleton spanned by the given facets.
fn graph_connected(facets: &[u64]) -> bool {
    let vertices = facets.iter().fold(0u64, |a, &f| a | f);
    let mut reached = vertices & vertices.wrapping_neg();
    loop {
        let next = facets.iter().filter(|&&f| f & reached != 0).fold(reached, |a, &f| a | f);
        if next == reached {
            return reached == vertices;
        }
        reached = next;
    }
}

/// Reisner's criterion: `H̃_i(lk F; k) = 0` for all faces `F` (including
/// `∅`) and all `i < dim lk F`. Faces are scanned in canonical order and the
/// first failure is reported.
pub fn is_cohen_macaulay(delta: &SimplicialComplex, field: FieldSpec) -> (bool, ReisnerCertificate) {
    let faces = delta.faces();
    let torsion = AtomicBool::new(false);
    let first_fail = faces
        .par_iter()
        .enumerate()
        .map(|(i, &f)| {
            let outcome = check_link(delta, f, field);
            if let LinkOutcome::Fine { torsion: true } = outcome {
                torsion.store(true, AtomicOrdering::Relaxed);
            }
            (i, outcome)
        })
        .find_first(|(_, o)| matches!(o, LinkOutcome::Fails(_)));
    let torsion_seen = torsion.load(AtomicOrdering::Relaxed);
    match first_fail {
        Some((idx, LinkOutcome::Fails(i))) => (
            false,
            ReisnerCertificate {
                cm: false,
                field: field.label(),
                checked_links: idx + 1,
                witness: Some(ReisnerWitness {
                    face: mask_to_vertices(faces[idx]),
                    face_vars: None,
                    dim: i,
                    degree: None,
                }),
                torsion_seen,
                route: CmRoute::Reisner,
            },
        ),
        _ => {
            debug_assert!(delta.is_pure() || delta.is_void());
            (
                true,
                ReisnerCertificate {
                    cm: true,
                    field: field.label(),
                    checked_links: faces.len(),
                    witness: None,
                    torsion_seen,
                    route: CmRoute::Reisner,
                },
            )
        }
    }
}

fn check_proper(ideal: &MonomialIdeal) -> Result<(), HomologyError> {
    if ideal.is_zero() {
        return Err(IdealError::ZeroIdeal.into());
    }
    if ideal.is_unit() {
        return Err(IdealError::UnitIdeal.into());
    }
    Ok(())
}

/// Cohen–Macaulayness of `R/I` for a proper nonzero monomial ideal.
///
/// Squarefree ideals go straight to Reisner's criterion. Otherwise the
/// verdict is read off the degree complexes of `I` (see
/// [`cm_check_degree_complexes`]), which agrees with Reisner on the
/// polarization but works on `n` vertices instead of `Σ ρ_j`.
pub fn cm_check_ideal(ideal: &MonomialIdeal, field: FieldSpec) -> Result<(bool, ReisnerCertificate), HomologyError> {
    check_proper(ideal)?;
    if ideal.is_squarefree() || ideal.nvars() > DEGREE_COMPLEX_MAX_VARS {
        cm_check_polarized(ideal, field)
    } else {
        cm_check_degree_complexes(ideal, field)
    }
}

/// Reisner's criterion on the Stanley–Reisner complex of the polarization.
pub fn cm_check_polarized(
    ideal: &MonomialIdeal,
    field: FieldSpec,
) -> Result<(bool, ReisnerCertificate), HomologyError> {
    check_proper(ideal)?;
    let pol = ideal.polarize();
    let delta = complex_of_ideal(&pol)?;
    let (cm, mut cert) = is_cohen_macaulay(&delta, field);
    if let Some(w) = cert.witness.as_mut() {
        w.face_vars = Some(w.face.iter().map(|&v| pol.vars()[v - 1].clone()).collect());
    }
    Ok((cm, cert))
}

const DEGREE_COMPLEX_MAX_VARS: usize = 16;

/// The degree complex `Δ_a(I)`: with `G = {j : a_j < 0}`, the faces are the
/// `F ⊆ [n] \ G` such that every generator `u` has some `j ∉ F ∪ G` with
/// `u_j > a_j`. Vertices are numbered as the ring variables.
pub fn degree_complex(ideal: &MonomialIdeal, a: &[i64]) -> SimplicialComplex {
    let n = ideal.nvars();
    assert_eq!(a.len(), n, "degree has one entry per variable");
    assert!(n <= 64);
    let neg = (0..n).filter(|&j| a[j] < 0).fold(0u64, |m, j| m | 1 << j);
    let free = full_mask(n) & !neg;
    // F is a face iff it contains none of these masks
    let mut blockers: Vec<u64> = ideal
        .gens()
        .iter()
        .map(|u| (0..n).filter(|&j| a[j] >= 0 && i64::from(u.0[j]) > a[j]).fold(0u64, |m, j| m | 1 << j))
        .collect();
    blockers.sort_unstable_by_key(|m| m.count_ones());
    blockers.dedup();
    if blockers.first() == Some(&0) {
        return SimplicialComplex::from_masks(n, Vec::new());
    }
    let mut faces = Vec::new();
    let mut sub = free;
    loop {
        if blockers.iter().all(|&b| b & !sub != 0) {
            faces.push(sub);
        }
        if sub == 0 {
            break;
        }
        sub = (sub - 1) & free;
    }
    SimplicialComplex::from_masks(n, faces)
}

/// Cohen–Macaulayness via local cohomology: `H^i_m(R/I)_a` is
/// `H̃_{i-|G|-1}(Δ_a; k)`, and it can only be nonzero for
/// `a_j ∈ {-1, 0, …, ρ_j - 1}`, with `ρ_j` the largest exponent of `x_j` in
/// a generator (the value of a negative coordinate does not matter). `R/I` is
/// Cohen–Macaulay iff all of these vanish below `dim R/I`.
pub fn cm_check_degree_complexes(
    ideal: &MonomialIdeal,
    field: FieldSpec,
) -> Result<(bool, ReisnerCertificate), HomologyError> {
    check_proper(ideal)?;
    let n = ideal.nvars();
    if n > DEGREE_COMPLEX_MAX_VARS {
        return Err(HomologyError::TooManyVertices(n));
    }
    let dim = (n - ideal.height()?) as i32;
    let rho: Vec<i64> = (0..n).map(|j| ideal.gens().iter().map(|u| i64::from(u.0[j])).max().unwrap_or(0)).collect();
    let mut memo: HashMap<SimplicialComplex, HomologyProfile> = HashMap::new();
    let mut a: Vec<i64> = vec![-1; n];
    let mut checked = 0usize;
    let mut torsion_seen = false;
    loop {
        checked += 1;
        let g = a.iter().filter(|&&x| x < 0).count() as i32;
        let delta = degree_complex(ideal, &a);
        // H^i lands in H̃_{i-g-1}; only i < dim matters
        let top = dim - g - 2;
        if !delta.is_void() && !delta.is_cone() && top >= -1 {
            let h = memo.entry(delta).or_insert_with_key(reduced_homology);
            torsion_seen |= h.has_torsion();
            if let Some(k) = (-1..=top).find(|&k| h.field_rank(k, field) != 0) {
                let face: Vec<usize> = (0..n).filter(|&j| a[j] < 0).map(|j| j + 1).collect();
                let face_vars = face.iter().map(|&v| ideal.vars()[v - 1].clone()).collect();
                return Ok((
                    false,
                    ReisnerCertificate {
                        cm: false,
                        field: field.label(),
                        checked_links: checked,
                        witness: Some(ReisnerWitness { face, face_vars: Some(face_vars), dim: k, degree: Some(a) }),
                        torsion_seen,
                        route: CmRoute::DegreeComplex,
                    },
                ));
            }
        }
        // odometer over a_j ∈ -1..ρ_j
        let mut j = 0;
        while j < n {
            a[j] += 1;
            if a[j] < rho[j] {
                break;
            }
            a[j] = -1;
            j += 1;
        }
        if j == n {
            break;
        }
    }
    Ok((
        true,
        ReisnerCertificate {
            cm: true,
            field: field.label(),
            checked_links: checked,
            witness: None,
            torsion_seen,
            route: CmRoute::DegreeComplex,
        },
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::{default_vars, Monomial};

    fn cx(n: usize, facets: &[&[usize]]) -> SimplicialComplex {
        SimplicialComplex::from_facets(n, &facets.iter().map(|f| f.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    fn ideal(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::new(default_vars(n), gens.iter().map(|g| Monomial(g.to_vec())).collect()).unwrap()
    }

    fn ranks(h: &HomologyProfile) -> Vec<usize> {
        h.groups.iter().map(|g| g.rank).collect()
    }

    #[test]
    fn complexes_of_ideals() {
        let c = complex_of_ideal(&ideal(3, &[&[1, 1, 1]])).unwrap();
        assert_eq!(c, cx(3, &[&[1, 2], &[1, 3], &[2, 3]]));
        let c = complex_of_ideal(&ideal(4, &[&[1, 0, 1, 0], &[1, 0, 0, 1], &[0, 1, 1, 0], &[0, 1, 0, 1]])).unwrap();
        assert_eq!(c, cx(4, &[&[1, 2], &[3, 4]]));
        let c = complex_of_ideal(&ideal(1, &[&[1]])).unwrap();
        assert_eq!(c.facets(), vec![Vec::<usize>::new()]);
        assert_eq!(c.dim(), -1);
    }

    #[test]
    fn links() {
        let tri = SimplicialComplex::simplex_boundary(2);
        assert_eq!(tri.link(&[1]).unwrap(), cx(3, &[&[2], &[3]]));
        assert_eq!(tri.link(&[]).unwrap(), tri);
        let edges = cx(4, &[&[1, 2], &[3, 4]]);
        assert_eq!(edges.link(&[1]).unwrap(), cx(4, &[&[2]]));
        assert_eq!(edges.link(&[1, 3]).unwrap_err(), HomologyError::NotAFace(vec![1, 3]));
    }

    #[test]
    fn homology_examples() {
        let tri = SimplicialComplex::simplex_boundary(2).reduced_homology();
        assert_eq!(ranks(&tri), vec![0, 0, 1]);
        assert!(!tri.has_torsion());
        let points = cx(2, &[&[1], &[2]]).reduced_homology();
        assert_eq!(points.rank(0), 1);
        let full = SimplicialComplex::simplex(3).reduced_homology();
        assert!(ranks(&full).iter().all(|&r| r == 0));
        // {∅} has H̃_{-1} = Z
        assert_eq!(cx(1, &[&[]]).reduced_homology().rank(-1), 1);
    }

    #[test]
    fn projective_plane_torsion() {
        // 6-vertex triangulation of RP^2
        let rp2 = cx(
            6,
            &[
                &[1, 2, 3],
                &[1, 3, 4],
                &[1, 4, 5],
                &[1, 5, 6],
                &[1, 2, 6],
                &[2, 3, 5],
                &[3, 4, 6],
                &[2, 4, 5],
                &[2, 4, 6],
                &[3, 5, 6],
            ],
        );
        let h = rp2.reduced_homology();
        assert_eq!(ranks(&h), vec![0, 0, 0, 0]);
        assert_eq!(h.groups[2].torsion, vec![2]);
        assert_eq!(h.field_rank(1, FieldSpec::Prime(2)), 1);
        assert_eq!(h.field_rank(2, FieldSpec::Prime(2)), 1);
        assert_eq!(h.field_rank(1, FieldSpec::Prime(3)), 0);
        assert!(is_cohen_macaulay(&rp2, FieldSpec::Rationals).0);
        let (cm2, cert) = is_cohen_macaulay(&rp2, FieldSpec::Prime(2));
        assert!(!cm2);
        assert_eq!(cert.witness.unwrap().dim, 1);
    }

    #[test]
    fn reisner_examples() {
        assert!(is_cohen_macaulay(&SimplicialComplex::simplex(3), FieldSpec::Rationals).0);
        let (cm, cert) = is_cohen_macaulay(&cx(4, &[&[1, 2], &[3, 4]]), FieldSpec::Rationals);
        assert!(!cm);
        let w = cert.witness.unwrap();
        assert_eq!((w.face, w.dim), (vec![], 0));
        assert!(is_cohen_macaulay(&SimplicialComplex::simplex_boundary(2), FieldSpec::Rationals).0);
        // non-pure complexes fail
        assert!(!is_cohen_macaulay(&cx(3, &[&[1, 2], &[3]]), FieldSpec::Rationals).0);
    }

    #[test]
    fn ideal_cm_examples() {
        let (j2, _) = crate::monomial::slightly_mixed_power(
            &crate::monomial::cover_ideal(&crate::matroid::Matroid::uniform(2, 3).unwrap()).1,
            2,
            &Monomial::one(3),
            &default_vars(3),
        )
        .unwrap();
        assert!(cm_check_ideal(&j2, FieldSpec::Rationals).unwrap().0);
        assert!(cm_check_ideal(&j2, FieldSpec::Prime(2)).unwrap().0);
        let edges = ideal(4, &[&[1, 0, 1, 0], &[1, 0, 0, 1], &[0, 1, 1, 0], &[0, 1, 0, 1]]);
        assert!(!cm_check_ideal(&edges, FieldSpec::Rationals).unwrap().0);
        assert!(cm_check_ideal(&ideal(3, &[&[2, 0, 0], &[0, 1, 1]]), FieldSpec::Rationals).unwrap().0);
        assert!(matches!(
            cm_check_ideal(&MonomialIdeal::zero(default_vars(2)), FieldSpec::Rationals),
            Err(HomologyError::Ideal(IdealError::ZeroIdeal))
        ));
    }

    #[test]
    fn degree_complex_route() {
        // x1(x1, x2) has an embedded prime: depth 0, dimension 1
        let emb = ideal(2, &[&[2, 0], &[1, 1]]);
        let (cm, cert) = cm_check_ideal(&emb, FieldSpec::Rationals).unwrap();
        assert!(!cm);
        assert_eq!(cert.route, CmRoute::DegreeComplex);
        assert!(cert.witness.unwrap().degree.is_some());
        assert!(!cm_check_polarized(&emb, FieldSpec::Rationals).unwrap().0);
        let ci = ideal(3, &[&[2, 0, 0], &[0, 3, 0]]);
        assert!(cm_check_ideal(&ci, FieldSpec::Prime(2)).unwrap().0);
        // the degree complex at 0 of a squarefree ideal is its SR complex
        let edges = ideal(4, &[&[1, 0, 1, 0], &[1, 0, 0, 1], &[0, 1, 1, 0], &[0, 1, 0, 1]]);
        assert_eq!(degree_complex(&edges, &[0; 4]), complex_of_ideal(&edges).unwrap());
        assert_eq!(degree_complex(&edges, &[-1, 0, 0, 0]), cx(4, &[&[2]]));
    }

    proptest::proptest! {
        #![proptest_config(proptest::prelude::ProptestConfig::with_cases(64))]
        #[test]
        fn degree_complexes_agree_with_polarization(
            gens in proptest::collection::vec(proptest::collection::vec(0u32..3, 4), 1..6)
        ) {
            let i = MonomialIdeal::new(default_vars(4), gens.into_iter().map(Monomial).collect()).unwrap();
            proptest::prop_assume!(!i.is_unit() && !i.is_zero());
            for field in [FieldSpec::Rationals, FieldSpec::Prime(2)] {
                let fast = cm_check_degree_complexes(&i, field).unwrap().0;
                let slow = cm_check_polarized(&i, field).unwrap().0;
                proptest::prop_assert_eq!(fast, slow, "{}", i);
            }
        }
    }

    #[test]
    fn purity() {
        assert!(cx(3, &[&[1, 2], &[2, 3]]).is_pure());
        assert!(!cx(3, &[&[1, 2], &[3]]).is_pure());
        assert!(cx(3, &[&[1, 2, 3]]).is_pure());
    }

    #[test]
    fn field_parsing() {
        assert_eq!("q".parse::<FieldSpec>().unwrap(), FieldSpec::Rationals);
        assert_eq!("fp:2".parse::<FieldSpec>().unwrap(), FieldSpec::Prime(2));
        assert!("fp:4".parse::<FieldSpec>().is_err());
    }
}
