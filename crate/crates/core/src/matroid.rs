//! Matroids given by their bases.
//!
//! Ground-set elements are `1..=n` and map positionally onto the variables
//! `x1..xn` of the ideals built from a matroid. Sets are stored as `u64`
//! bitmasks (bit `i - 1` is element `i`), which caps the ground set at 64.

use serde_json::Value;
use thiserror::Error;

pub const MAX_GROUND_SET: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatroidError {
    #[error("the basis family is empty")]
    EmptyBases,
    #[error("exchange axiom fails: F={f:?}, G={g:?}, v={v}")]
    ExchangeAxiomViolation { f: Vec<usize>, g: Vec<usize>, v: usize },
    #[error("ground set size {0} is outside 1..={MAX_GROUND_SET}")]
    InvalidGroundSet(usize),
    #[error("element {element} is outside the ground set 1..={n}")]
    ElementOutOfRange { element: usize, n: usize },
    #[error("rank {r} is outside 0..={n}")]
    RankOutOfRange { r: usize, n: usize },
    #[error("graph is disconnected")]
    DisconnectedGraph,
    #[error("edge {0:?} has an endpoint outside the vertex set")]
    BadEdge((usize, usize)),
    #[error("cannot delete from a one-element ground set")]
    GroundSetExhausted,
    #[error("malformed matroid description: {0}")]
    Parse(String),
}

pub(crate) fn mask_to_elements(mask: u64) -> Vec<usize> {
    (0..64).filter(|i| mask >> i & 1 == 1).map(|i| i + 1).collect()
}

fn elements_to_mask(elements: &[usize], n: usize) -> Result<u64, MatroidError> {
    let mut mask = 0u64;
    for &e in elements {
        if e == 0 || e > n {
            return Err(MatroidError::ElementOutOfRange { element: e, n });
        }
        mask |= 1 << (e - 1);
    }
    Ok(mask)
}

/// Sort key for bases: larger sets first, then lexicographic on elements.
fn basis_key(mask: u64) -> (std::cmp::Reverse<u32>, Vec<usize>) {
    (std::cmp::Reverse(mask.count_ones()), mask_to_elements(mask))
}

/// A matroid on `1..=n`, validated against the basis-exchange axiom.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matroid {
    n: usize,
    bases: Vec<u64>,
}

impl Matroid {
    /// Builds a matroid from an explicit basis family, running the
    /// exhaustive exchange check. Duplicate bases are merged.
    pub fn from_bases(n: usize, bases: &[Vec<usize>]) -> Result<Self, MatroidError> {
        if n == 0 || n > MAX_GROUND_SET {
            return Err(MatroidError::InvalidGroundSet(n));
        }
        let mut masks = bases.iter().map(|b| elements_to_mask(b, n)).collect::<Result<Vec<_>, _>>()?;
        Self::from_masks(n, &mut masks)
    }

    fn from_masks(n: usize, masks: &mut Vec<u64>) -> Result<Self, MatroidError> {
        if masks.is_empty() {
            return Err(MatroidError::EmptyBases);
        }
        masks.sort_by_key(|&m| basis_key(m));
        masks.dedup();
        let m = Matroid { n, bases: masks.clone() };
        if let Some((f, g, v)) = m.exchange_violation() {
            return Err(MatroidError::ExchangeAxiomViolation { f: mask_to_elements(f), g: mask_to_elements(g), v });
        }
        Ok(m)
    }

    /// First `(F, G, v)` with `v ∈ F − G` and no `w ∈ G − F` such that
    /// `(F − v) ∪ w` is a basis.
    fn exchange_violation(&self) -> Option<(u64, u64, usize)> {
        let contains = |mask: u64| self.bases.binary_search_by_key(&basis_key(mask), |&b| basis_key(b)).is_ok();
        for &f in &self.bases {
            for &g in &self.bases {
                let f_minus_g = f & !g;
                let g_minus_f = g & !f;
                for v in mask_to_elements(f_minus_g) {
                    let base = f & !(1 << (v - 1));
                    let ok = mask_to_elements(g_minus_f).into_iter().any(|w| contains(base | 1 << (w - 1)));
                    if !ok {
                        return Some((f, g, v));
                    }
                }
            }
        }
        None
    }

    pub fn uniform(r: usize, n: usize) -> Result<Self, MatroidError> {
        if n == 0 || n > MAX_GROUND_SET {
            return Err(MatroidError::InvalidGroundSet(n));
        }
        if r > n {
            return Err(MatroidError::RankOutOfRange { r, n });
        }
        let mut masks = Vec::new();
        k_subsets(n, r, &mut |m| masks.push(m));
        Self::from_masks(n, &mut masks)
    }

    /// Cycle matroid of a connected graph: edges are numbered `1..=m` in the
    /// given order and the bases are the spanning trees.
    pub fn graphic(n_vertices: usize, edges: &[(usize, usize)]) -> Result<Self, MatroidError> {
        let m = edges.len();
        if m == 0 || m > MAX_GROUND_SET {
            return Err(MatroidError::InvalidGroundSet(m));
        }
        for &(a, b) in edges {
            if a == 0 || b == 0 || a > n_vertices || b > n_vertices {
                return Err(MatroidError::BadEdge((a, b)));
            }
        }
        if n_vertices == 0 {
            return Err(MatroidError::DisconnectedGraph);
        }
        let mut masks = Vec::new();
        k_subsets(m, n_vertices - 1, &mut |mask| {
            let mut uf = UnionFind::new(n_vertices);
            let acyclic = mask_to_elements(mask).into_iter().all(|e| uf.union(edges[e - 1].0 - 1, edges[e - 1].1 - 1));
            if acyclic {
                masks.push(mask);
            }
        });
        if masks.is_empty() {
            return Err(MatroidError::DisconnectedGraph);
        }
        Self::from_masks(m, &mut masks)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rank(&self) -> usize {
        self.bases[0].count_ones() as usize
    }

    /// Bases as sorted 1-based element lists, in canonical order.
    pub fn bases(&self) -> Vec<Vec<usize>> {
        self.bases.iter().map(|&b| mask_to_elements(b)).collect()
    }

    pub(crate) fn basis_masks(&self) -> &[u64] {
        &self.bases
    }

    fn full_mask(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }

    pub fn dual(&self) -> Matroid {
        let full = self.full_mask();
        let mut masks: Vec<u64> = self.bases.iter().map(|&b| full & !b).collect();
        masks.sort_by_key(|&m| basis_key(m));
        Matroid { n: self.n, bases: masks }
    }

    /// Deletes element `i`; elements above `i` shift down by one so the
    /// result lives on `1..=n-1`.
    pub fn delete(&self, i: usize) -> Result<Matroid, MatroidError> {
        if i == 0 || i > self.n {
            return Err(MatroidError::ElementOutOfRange { element: i, n: self.n });
        }
        if self.n == 1 {
            return Err(MatroidError::GroundSetExhausted);
        }
        let bit = 1u64 << (i - 1);
        let avoiding: Vec<u64> = self.bases.iter().copied().filter(|b| b & bit == 0).collect();
        // a coloop lies in every basis, so the rank drops by one
        let kept: Vec<u64> = if avoiding.is_empty() { self.bases.iter().map(|b| b & !bit).collect() } else { avoiding };
        let low = bit - 1;
        let mut masks: Vec<u64> = kept.into_iter().map(|b| (b & low) | ((b >> 1) & !low)).collect();
        masks.sort_by_key(|&m| basis_key(m));
        masks.dedup();
        Ok(Matroid { n: self.n - 1, bases: masks })
    }

    /// Elements lying in no basis.
    pub fn loops(&self) -> Vec<usize> {
        let union = self.bases.iter().fold(0, |acc, b| acc | b);
        mask_to_elements(self.full_mask() & !union)
    }

    /// Elements lying in every basis.
    pub fn coloops(&self) -> Vec<usize> {
        mask_to_elements(self.bases.iter().fold(self.full_mask(), |acc, b| acc & b))
    }

    /// Parses the three JSON forms: explicit bases, `uniform`, `graphic`.
    pub fn from_json(value: &Value) -> Result<Matroid, MatroidError> {
        let bad = |msg: &str| MatroidError::Parse(msg.to_string());
        let obj = value.as_object().ok_or_else(|| bad("expected a JSON object"))?;
        let usize_field = |key: &str| -> Result<usize, MatroidError> {
            obj.get(key)
                .and_then(Value::as_u64)
                .map(|v| v as usize)
                .ok_or_else(|| bad(&format!("missing or non-integer field `{key}`")))
        };
        let pairs = |key: &str| -> Result<Vec<Vec<usize>>, MatroidError> {
            let arr =
                obj.get(key).and_then(Value::as_array).ok_or_else(|| bad(&format!("missing array field `{key}`")))?;
            arr.iter()
                .map(|set| {
                    set.as_array()
                        .ok_or_else(|| bad("expected an array of integers"))?
                        .iter()
                        .map(|e| e.as_u64().map(|e| e as usize).ok_or_else(|| bad("expected an integer")))
                        .collect()
                })
                .collect()
        };
        match obj.get("type").and_then(Value::as_str) {
            None | Some("bases") => Matroid::from_bases(usize_field("n")?, &pairs("bases")?),
            Some("uniform") => Matroid::uniform(usize_field("r")?, usize_field("n")?),
            Some("graphic") => {
                let edges = pairs("edges")?
                    .into_iter()
                    .map(|e| match e.as_slice() {
                        [a, b] => Ok((*a, *b)),
                        _ => Err(bad("graphic edges must be vertex pairs")),
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                Matroid::graphic(usize_field("vertices")?, &edges)
            }
            Some(other) => Err(bad(&format!("unknown matroid type `{other}`"))),
        }
    }

    pub fn to_json(&self) -> Value {
        serde_json::json!({ "n": self.n, "bases": self.bases() })
    }
}

/// Calls `f` on every `k`-subset of `0..n` as a bitmask, in lexicographic
/// order of the sorted element lists.
pub(crate) fn k_subsets(n: usize, k: usize, f: &mut impl FnMut(u64)) {
    fn rec(start: usize, n: usize, k: usize, acc: u64, f: &mut impl FnMut(u64)) {
        if k == 0 {
            f(acc);
            return;
        }
        for i in start..n {
            if n - i < k {
                break;
            }
            rec(i + 1, n, k - 1, acc | 1 << i, f);
        }
    }
    if k <= n {
        rec(0, n, k, 0, f);
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false if `a` and `b` were already joined.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra] = rb;
        true
    }
}
