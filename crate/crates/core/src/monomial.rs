//! Monomial ideals in canonical form, primary decompositions by monomial
//! primes, and the symbolic-power arithmetic built on them.
//!
//! Every [`MonomialIdeal`] stores its unique minimal generating set sorted
//! ascending in degrevlex, so ideal equality is structural equality. The zero
//! ideal has no generators; the unit ideal has the single generator `1`.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::matroid::{mask_to_elements, Matroid};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IdealError {
    #[error("ambient variable lists differ")]
    AmbientMismatch,
    #[error("monomial is not squarefree")]
    NotSquarefree,
    #[error("decomposition is not radical (some exponent differs from 1)")]
    NotRadicalInput,
    #[error("operation undefined on the zero ideal")]
    ZeroIdeal,
    #[error("operation undefined on the unit ideal")]
    UnitIdeal,
    #[error("symbolic power exponent must be positive")]
    InvalidPower,
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("exponent vector has length {got}, expected {expected}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("cannot parse monomial `{0}`")]
    Parse(String),
}

/// Exponent vector over a fixed list of ambient variables.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Monomial(e)
    }

    /// Squarefree monomial on the given 0-based variable indices.
    pub fn from_support(nvars: usize, support: &[usize]) -> Self {
        let mut e = vec![0; nvars];
        for &i in support {
            e[i] = 1;
        }
        Monomial(e)
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.0.iter().all(|&e| e <= 1)
    }

    pub fn support(&self) -> Vec<usize> {
        self.0.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, _)| i).collect()
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self / gcd(self, other)`.
    pub fn quotient_by_gcd(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a.saturating_sub(*b)).collect())
    }

    pub fn to_string_with(&self, vars: &[String]) -> String {
        if self.is_one() {
            return "1".into();
        }
        self.0
            .iter()
            .zip(vars)
            .filter(|(&e, _)| e > 0)
            .map(|(&e, v)| if e == 1 { v.clone() } else { format!("{v}^{e}") })
            .collect::<Vec<_>>()
            .join("*")
    }
}

/// Degree reverse lexicographic comparison of exponent vectors.
pub fn degrevlex_cmp(a: &[u32], b: &[u32]) -> Ordering {
    let (da, db): (u32, u32) = (a.iter().sum(), b.iter().sum());
    da.cmp(&db).then_with(|| {
        for (x, y) in a.iter().zip(b).rev() {
            if x != y {
                // smaller exponent in the last differing variable wins
                return y.cmp(x);
            }
        }
        Ordering::Equal
    })
}

/// Keeps the divisibility-minimal elements, sorted ascending in degrevlex.
pub fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by(|a, b| degrevlex_cmp(&a.0, &b.0));
    gens.dedup();
    let mut kept: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        // divisors have degree <= deg g, so they appear earlier
        if !kept.iter().any(|k| k.divides(&g)) {
            kept.push(g);
        }
    }
    kept
}

pub fn default_vars(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("x{i}")).collect()
}

/// Parses a monomial such as `x1*x3^2`, `x1x3` or `1` over declared names.
/// The empty string is the monomial `1`.
pub fn parse_monomial(text: &str, vars: &[String]) -> Result<Monomial, IdealError> {
    let mut exps = vec![0u32; vars.len()];
    let mut rest: &str = text.trim();
    if rest.is_empty() || rest == "1" {
        return Ok(Monomial(exps));
    }
    let err = || IdealError::Parse(text.to_string());
    while !rest.is_empty() {
        rest = rest.trim_start_matches(|c: char| c == '*' || c.is_whitespace());
        if rest.is_empty() {
            break;
        }
        // longest declared name that prefixes the remaining text
        let (idx, name) = vars
            .iter()
            .enumerate()
            .filter(|(_, v)| rest.starts_with(v.as_str()))
            .max_by_key(|(_, v)| v.len())
            .ok_or_else(err)?;
        rest = &rest[name.len()..];
        let mut e = 1u32;
        if let Some(after) = rest.strip_prefix('^') {
            let digits: String = after.chars().take_while(char::is_ascii_digit).collect();
            e = digits.parse().map_err(|_| err())?;
            rest = &after[digits.len()..];
        }
        exps[idx] += e;
    }
    Ok(Monomial(exps))
}

/// A monomial ideal with its canonical minimal generating set.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    vars: Vec<String>,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    pub fn new(vars: Vec<String>, gens: Vec<Monomial>) -> Result<Self, IdealError> {
        for g in &gens {
            if g.nvars() != vars.len() {
                return Err(IdealError::LengthMismatch { expected: vars.len(), got: g.nvars() });
            }
        }
        Ok(MonomialIdeal { vars, gens: minimalize(gens) })
    }

    pub(crate) fn from_minimal(vars: Vec<String>, gens: Vec<Monomial>) -> Self {
        MonomialIdeal { vars, gens: minimalize(gens) }
    }

    pub fn zero(vars: Vec<String>) -> Self {
        MonomialIdeal { vars, gens: Vec::new() }
    }

    pub fn unit(vars: Vec<String>) -> Self {
        let n = vars.len();
        MonomialIdeal { vars, gens: vec![Monomial::one(n)] }
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_one()
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(Monomial::is_squarefree)
    }

    /// Variables dividing some minimal generator.
    pub fn support(&self) -> Vec<usize> {
        (0..self.nvars()).filter(|&i| self.gens.iter().any(|g| g.0[i] > 0)).collect()
    }

    fn check_ambient(&self, other: &MonomialIdeal) -> Result<(), IdealError> {
        if self.vars != other.vars {
            return Err(IdealError::AmbientMismatch);
        }
        Ok(())
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    pub fn is_subset_of(&self, other: &MonomialIdeal) -> bool {
        self.gens.iter().all(|g| other.contains(g))
    }

    pub fn intersect(&self, other: &MonomialIdeal) -> Result<MonomialIdeal, IdealError> {
        self.check_ambient(other)?;
        let mut lcms = Vec::with_capacity(self.gens.len() * other.gens.len());
        for g in &self.gens {
            for h in &other.gens {
                lcms.push(g.lcm(h));
            }
        }
        Ok(MonomialIdeal::from_minimal(self.vars.clone(), lcms))
    }

    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal, IdealError> {
        self.check_ambient(other)?;
        let gens = self.gens.iter().chain(&other.gens).cloned().collect();
        Ok(MonomialIdeal::from_minimal(self.vars.clone(), gens))
    }

    /// The ideal `m · I`.
    pub fn scale(&self, m: &Monomial) -> MonomialIdeal {
        let gens = self.gens.iter().map(|g| g.mul(m)).collect();
        MonomialIdeal::from_minimal(self.vars.clone(), gens)
    }

    pub fn colon(&self, m: &Monomial) -> MonomialIdeal {
        let gens = self.gens.iter().map(|g| g.quotient_by_gcd(m)).collect();
        MonomialIdeal::from_minimal(self.vars.clone(), gens)
    }

    /// Generators not divisible by variable `y`: the contraction to the
    /// subring without `y`, extended back to the full ambient ring.
    pub fn restrict(&self, y: usize) -> MonomialIdeal {
        let gens = self.gens.iter().filter(|g| g.0[y] == 0).cloned().collect();
        MonomialIdeal { vars: self.vars.clone(), gens }
    }

    /// Drops variable `y` (which must not divide any generator) from the
    /// ambient list.
    pub fn drop_var(&self, y: usize) -> Result<MonomialIdeal, IdealError> {
        if self.gens.iter().any(|g| g.0[y] > 0) {
            return Err(IdealError::PreconditionViolated(format!("{} divides a generator", self.vars[y])));
        }
        let mut vars = self.vars.clone();
        vars.remove(y);
        let gens = self
            .gens
            .iter()
            .map(|g| {
                let mut e = g.0.clone();
                e.remove(y);
                Monomial(e)
            })
            .collect();
        Ok(MonomialIdeal::from_minimal(vars, gens))
    }

    /// Reorders/renames the ambient: variable `i` of the result is
    /// variable `keep[i]` of `self`. Variables outside `keep` must not occur.
    pub fn select_vars(&self, keep: &[usize]) -> Result<MonomialIdeal, IdealError> {
        let dropped: Vec<usize> = (0..self.nvars()).filter(|i| !keep.contains(i)).collect();
        if self.gens.iter().any(|g| dropped.iter().any(|&i| g.0[i] > 0)) {
            return Err(IdealError::PreconditionViolated("dropped variable occurs in a generator".into()));
        }
        let vars = keep.iter().map(|&i| self.vars[i].clone()).collect();
        let gens = self.gens.iter().map(|g| Monomial(keep.iter().map(|&i| g.0[i]).collect())).collect();
        Ok(MonomialIdeal::from_minimal(vars, gens))
    }

    pub fn max_exponent(&self) -> u32 {
        self.gens.iter().flat_map(|g| g.0.iter().copied()).max().unwrap_or(0)
    }

    pub fn radical(&self) -> MonomialIdeal {
        let gens = self.gens.iter().map(|g| Monomial(g.0.iter().map(|&e| e.min(1)).collect())).collect();
        MonomialIdeal::from_minimal(self.vars.clone(), gens)
    }

    /// Minimal primes of a squarefree ideal: the minimal transversals of the
    /// generator supports, obtained as generators of `⋂_g (x_i : i ∈ supp g)`.
    pub fn minimal_primes(&self) -> Result<Vec<PrimeSupport>, IdealError> {
        if !self.is_squarefree() {
            return Err(IdealError::NotSquarefree);
        }
        if self.is_unit() {
            return Ok(Vec::new());
        }
        let n = self.nvars();
        let mut covers = MonomialIdeal::unit(self.vars.clone());
        for g in &self.gens {
            let p = PrimeSupport::new(g.support());
            covers = covers.intersect(&p.power(1, &self.vars))?;
        }
        let mut primes: Vec<PrimeSupport> = covers.gens.iter().map(|m| PrimeSupport::new(m.support())).collect();
        primes.sort();
        debug_assert!(primes.iter().all(|p| p.vars().iter().all(|&i| i < n)));
        Ok(primes)
    }

    /// Height of a nonzero proper ideal: the smallest minimal prime of its
    /// radical.
    pub fn height(&self) -> Result<usize, IdealError> {
        if self.is_zero() {
            return Err(IdealError::ZeroIdeal);
        }
        if self.is_unit() {
            return Err(IdealError::UnitIdeal);
        }
        Ok(self.radical().minimal_primes()?.iter().map(PrimeSupport::len).min().unwrap_or(0))
    }

    /// Squarefree polarization: `x_i^e ↦ x_{i,1}⋯x_{i,e}`. Only the new
    /// variables `x_{i,k}` with `k ≤` the largest exponent of `x_i` are
    /// created; variables absent from every generator disappear.
    pub fn polarize(&self) -> MonomialIdeal {
        let maxes: Vec<u32> = (0..self.nvars()).map(|i| self.gens.iter().map(|g| g.0[i]).max().unwrap_or(0)).collect();
        let mut vars = Vec::new();
        let mut offset = Vec::with_capacity(self.nvars());
        for (i, &m) in maxes.iter().enumerate() {
            offset.push(vars.len());
            for k in 1..=m {
                vars.push(format!("{}_{}", self.vars[i], k));
            }
        }
        let gens = self
            .gens
            .iter()
            .map(|g| {
                let mut e = vec![0u32; vars.len()];
                for (i, &gi) in g.0.iter().enumerate() {
                    for k in 0..gi as usize {
                        e[offset[i] + k] = 1;
                    }
                }
                Monomial(e)
            })
            .collect();
        MonomialIdeal::from_minimal(vars, gens)
    }

    /// Generators have pairwise disjoint supports.
    pub fn is_complete_intersection(&self) -> Result<bool, IdealError> {
        if self.is_zero() {
            return Err(IdealError::ZeroIdeal);
        }
        if self.is_unit() {
            return Err(IdealError::UnitIdeal);
        }
        let mut seen = vec![false; self.nvars()];
        for g in &self.gens {
            for i in g.support() {
                if seen[i] {
                    return Ok(false);
                }
                seen[i] = true;
            }
        }
        Ok(true)
    }

    pub fn to_json(&self) -> IdealJson {
        IdealJson { vars: self.vars.clone(), gens: self.gens.iter().map(|g| g.0.clone()).collect() }
    }

    pub fn from_json(json: &IdealJson) -> Result<Self, IdealError> {
        let gens = json.gens.iter().cloned().map(Monomial).collect();
        MonomialIdeal::new(json.vars.clone(), gens)
    }

    pub fn gens_text(&self) -> Vec<String> {
        self.gens.iter().map(|g| g.to_string_with(&self.vars)).collect()
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.gens_text().join(", "))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealJson {
    pub vars: Vec<String>,
    pub gens: Vec<Vec<u32>>,
}

/// A monomial prime `(x_i : i ∈ vars)`; the empty set is the zero ideal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimeSupport(Vec<usize>);

impl PrimeSupport {
    pub fn new(mut vars: Vec<usize>) -> Self {
        vars.sort_unstable();
        vars.dedup();
        PrimeSupport(vars)
    }

    pub fn vars(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0.binary_search(&i).is_ok()
    }

    /// `p^a`, generated by all degree-`a` monomials in the variables of `p`.
    pub fn power(&self, a: u32, vars: &[String]) -> MonomialIdeal {
        let n = vars.len();
        if a == 0 {
            return MonomialIdeal::unit(vars.to_vec());
        }
        let mut gens = Vec::new();
        let mut cur = vec![0u32; n];
        fn rec(p: &[usize], idx: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
            if idx + 1 == p.len() {
                cur[p[idx]] = left;
                out.push(Monomial(cur.clone()));
                cur[p[idx]] = 0;
                return;
            }
            for e in (0..=left).rev() {
                cur[p[idx]] = e;
                rec(p, idx + 1, left - e, cur, out);
            }
            cur[p[idx]] = 0;
        }
        if !self.0.is_empty() {
            rec(&self.0, 0, a, &mut cur, &mut gens);
        }
        MonomialIdeal::from_minimal(vars.to_vec(), gens)
    }

    /// `Σ_{i∈p} exp_i(m) ≥ a`.
    pub fn power_contains(&self, a: u32, m: &Monomial) -> bool {
        self.0.iter().map(|&i| m.0[i]).sum::<u32>() >= a
    }
}

/// Order of a squarefree monomial at a monomial prime: the number of shared
/// variables.
pub fn order_at(n: &Monomial, p: &PrimeSupport) -> Result<u32, IdealError> {
    if !n.is_squarefree() {
        return Err(IdealError::NotSquarefree);
    }
    Ok(p.vars().iter().filter(|&&i| n.0[i] > 0).count() as u32)
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PrimaryComponent {
    pub prime: PrimeSupport,
    pub exp: u32,
}

/// `⋂ p^{a_p}` over pairwise distinct monomial primes, each `a_p ≥ 1`. The
/// empty intersection is the unit ideal.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PrimaryDecomposition {
    nvars: usize,
    components: Vec<PrimaryComponent>,
}

impl PrimaryDecomposition {
    /// Builds a decomposition, dropping components with exponent 0 and
    /// merging repeated primes by taking the larger exponent.
    pub fn new(nvars: usize, components: Vec<PrimaryComponent>) -> Self {
        let mut comps: Vec<PrimaryComponent> = components.into_iter().filter(|c| c.exp > 0).collect();
        comps.sort_by(|a, b| a.prime.cmp(&b.prime).then(b.exp.cmp(&a.exp)));
        comps.dedup_by(|later, earlier| later.prime == earlier.prime);
        PrimaryDecomposition { nvars, components: comps }
    }

    /// All components with exponent 1.
    pub fn radical_from_primes(nvars: usize, primes: Vec<PrimeSupport>) -> Self {
        Self::new(nvars, primes.into_iter().map(|prime| PrimaryComponent { prime, exp: 1 }).collect())
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn components(&self) -> &[PrimaryComponent] {
        &self.components
    }

    pub fn is_unit(&self) -> bool {
        self.components.is_empty()
    }

    pub fn is_radical(&self) -> bool {
        self.components.iter().all(|c| c.exp == 1)
    }

    pub fn exponent_sum(&self) -> u32 {
        self.components.iter().map(|c| c.exp).sum()
    }

    /// Union of the prime supports.
    pub fn support(&self) -> Vec<usize> {
        let mut s: Vec<usize> = self.components.iter().flat_map(|c| c.prime.vars().iter().copied()).collect();
        s.sort_unstable();
        s.dedup();
        s
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.components.iter().all(|c| c.prime.power_contains(c.exp, m))
    }

    /// Expands `⋂ p^{a_p}` to minimal generators by pairwise intersection.
    pub fn to_ideal(&self, vars: &[String]) -> Result<MonomialIdeal, IdealError> {
        if vars.len() != self.nvars {
            return Err(IdealError::LengthMismatch { expected: self.nvars, got: vars.len() });
        }
        let mut order: Vec<&PrimaryComponent> = self.components.iter().collect();
        // zero components first short-circuit; small powers keep the products small
        order.sort_by_key(|c| (!c.prime.is_empty(), c.exp, c.prime.len()));
        let mut acc = MonomialIdeal::unit(vars.to_vec());
        for c in order {
            acc = acc.intersect(&c.prime.power(c.exp, vars))?;
            if acc.is_zero() {
                break;
            }
        }
        Ok(acc)
    }

    /// `(⋂ p^{a_p}) : N = ⋂ p^{max(0, a_p − O_p(N))}` for squarefree `N`.
    pub fn colon(&self, n: &Monomial) -> Result<PrimaryDecomposition, IdealError> {
        let comps = self
            .components
            .iter()
            .map(|c| {
                let o = order_at(n, &c.prime)?;
                Ok(PrimaryComponent { prime: c.prime.clone(), exp: c.exp.saturating_sub(o) })
            })
            .collect::<Result<Vec<_>, IdealError>>()?;
        Ok(PrimaryDecomposition::new(self.nvars, comps))
    }

    /// Replaces every exponent by `ell`.
    pub fn symbolic_power(&self, ell: u32) -> PrimaryDecomposition {
        let comps = self.components.iter().map(|c| PrimaryComponent { prime: c.prime.clone(), exp: ell }).collect();
        PrimaryDecomposition::new(self.nvars, comps)
    }

    /// `⋂ (p ∩ R_0)^{a_p}`: the contraction away from variable `y`.
    pub fn restrict(&self, y: usize) -> PrimaryDecomposition {
        let comps = self
            .components
            .iter()
            .map(|c| PrimaryComponent {
                prime: PrimeSupport::new(c.prime.vars().iter().copied().filter(|&i| i != y).collect()),
                exp: c.exp,
            })
            .collect();
        PrimaryDecomposition::new(self.nvars, comps)
    }

    /// Reindexes onto the variables `keep` (old indices, in new order).
    pub fn select_vars(&self, keep: &[usize]) -> Result<PrimaryDecomposition, IdealError> {
        let mut comps = Vec::with_capacity(self.components.len());
        for c in &self.components {
            let mapped = c
                .prime
                .vars()
                .iter()
                .map(|i| keep.iter().position(|k| k == i))
                .collect::<Option<Vec<_>>>()
                .ok_or_else(|| IdealError::PreconditionViolated("prime uses a dropped variable".into()))?;
            comps.push(PrimaryComponent { prime: PrimeSupport::new(mapped), exp: c.exp });
        }
        Ok(PrimaryDecomposition::new(keep.len(), comps))
    }

    /// Smallest prime carrying a positive exponent.
    pub fn height(&self) -> Result<usize, IdealError> {
        self.components.iter().map(|c| c.prime.len()).min().ok_or(IdealError::UnitIdeal)
    }

    /// All components have primes of the same size.
    pub fn is_equidimensional(&self) -> bool {
        self.components.windows(2).all(|w| w[0].prime.len() == w[1].prime.len())
    }

    pub fn to_json(&self) -> DecompositionJson {
        DecompositionJson {
            components: self
                .components
                .iter()
                .map(|c| ComponentJson { prime: c.prime.vars().iter().map(|i| i + 1).collect(), exp: c.exp })
                .collect(),
        }
    }

    pub fn from_json(nvars: usize, json: &DecompositionJson) -> Result<Self, IdealError> {
        let mut comps = Vec::new();
        for c in &json.components {
            if c.prime.iter().any(|&i| i == 0 || i > nvars) {
                return Err(IdealError::PreconditionViolated(format!("prime {:?} out of range", c.prime)));
            }
            comps.push(PrimaryComponent {
                prime: PrimeSupport::new(c.prime.iter().map(|i| i - 1).collect()),
                exp: c.exp,
            });
        }
        Ok(PrimaryDecomposition::new(nvars, comps))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionJson {
    pub components: Vec<ComponentJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentJson {
    pub prime: Vec<usize>,
    pub exp: u32,
}

/// Which squarefree ideal of a simplicial complex to take.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    /// Stanley–Reisner ideal: primes are complements of facets.
    Sr,
    /// Cover ideal: primes are the facets themselves.
    Cover,
}

impl std::str::FromStr for Side {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "sr" => Ok(Side::Sr),
            "cover" => Ok(Side::Cover),
            other => Err(format!("unknown side `{other}` (expected sr|cover)")),
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Sr => "sr",
            Side::Cover => "cover",
        })
    }
}

/// Radical decomposition of the SR or cover ideal of a complex given by its
/// facets (0-based bitmasks over `n` vertices).
pub fn facet_decomposition(n: usize, facets: &[u64], side: Side) -> PrimaryDecomposition {
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let primes = facets
        .iter()
        .map(|&f| {
            let mask = match side {
                Side::Sr => full & !f,
                Side::Cover => f,
            };
            PrimeSupport::new(mask_to_elements(mask).into_iter().map(|e| e - 1).collect())
        })
        .collect();
    PrimaryDecomposition::radical_from_primes(n, primes)
}

fn side_ideal(m: &Matroid, side: Side) -> (MonomialIdeal, PrimaryDecomposition) {
    let d = facet_decomposition(m.n(), m.basis_masks(), side);
    let ideal = d.to_ideal(&default_vars(m.n())).expect("ambient sizes agree");
    (ideal, d)
}

/// Stanley–Reisner ideal of the independence complex.
pub fn sr_ideal(m: &Matroid) -> (MonomialIdeal, PrimaryDecomposition) {
    side_ideal(m, Side::Sr)
}

/// Cover ideal `⋂_{B basis} p_B`.
pub fn cover_ideal(m: &Matroid) -> (MonomialIdeal, PrimaryDecomposition) {
    side_ideal(m, Side::Cover)
}

pub fn matroid_ideal(m: &Matroid, side: Side) -> (MonomialIdeal, PrimaryDecomposition) {
    side_ideal(m, side)
}

/// `J̃^(ℓ) : N` for a radical decomposition `J̃`, returned with its
/// decomposition `⋂ p^{max(0, ℓ − O_p(N))}`.
pub fn slightly_mixed_power(
    d: &PrimaryDecomposition,
    ell: u32,
    n: &Monomial,
    vars: &[String],
) -> Result<(MonomialIdeal, PrimaryDecomposition), IdealError> {
    if !d.is_radical() {
        return Err(IdealError::NotRadicalInput);
    }
    if ell == 0 {
        return Err(IdealError::InvalidPower);
    }
    if !n.is_squarefree() {
        return Err(IdealError::NotSquarefree);
    }
    let dec = d.symbolic_power(ell).colon(n)?;
    let ideal = dec.to_ideal(vars)?;
    Ok((ideal, dec))
}

/// Checks `(I : N) ∩ R_0 = (I ∩ R_0) : N` for `I = J̃^(ℓ)` and `y ∉ supp N`.
pub fn colon_restriction_identity(
    d: &PrimaryDecomposition,
    ell: u32,
    n: &Monomial,
    y: usize,
    vars: &[String],
) -> Result<bool, IdealError> {
    if n.0[y] > 0 {
        return Err(IdealError::PreconditionViolated(format!("{} divides N", vars[y])));
    }
    if !n.is_squarefree() {
        return Err(IdealError::NotSquarefree);
    }
    let i = d.symbolic_power(ell).to_ideal(vars)?;
    let lhs = i.colon(n).restrict(y);
    let rhs = i.restrict(y).colon(n);
    Ok(lhs == rhs)
}

/// All squarefree monomials in `nvars` variables, in subset order.
pub fn squarefree_monomials(nvars: usize) -> Vec<Monomial> {
    (0u64..(1 << nvars)).map(|mask| Monomial((0..nvars).map(|i| (mask >> i & 1) as u32).collect())).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vars(n: usize) -> Vec<String> {
        default_vars(n)
    }

    fn m(e: &[u32]) -> Monomial {
        Monomial(e.to_vec())
    }

    fn ideal(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::new(vars(n), gens.iter().map(|g| m(g)).collect()).unwrap()
    }

    fn triangle() -> PrimaryDecomposition {
        cover_ideal(&Matroid::uniform(2, 3).unwrap()).1
    }

    /// Exhaustive membership oracle: minimal elements of the set of
    /// exponent vectors up to `max_deg` satisfying `pred`.
    fn oracle(n: usize, max_deg: u32, pred: impl Fn(&[u32]) -> bool) -> MonomialIdeal {
        let mut found = Vec::new();
        let mut cur = vec![0u32; n];
        fn rec(i: usize, left: u32, cur: &mut Vec<u32>, pred: &dyn Fn(&[u32]) -> bool, out: &mut Vec<Monomial>) {
            if i == cur.len() {
                if pred(cur) {
                    out.push(Monomial(cur.clone()));
                }
                return;
            }
            for e in 0..=left {
                cur[i] = e;
                rec(i + 1, left - e, cur, pred, out);
            }
            cur[i] = 0;
        }
        rec(0, max_deg, &mut cur, &pred, &mut found);
        MonomialIdeal::new(vars(n), found).unwrap()
    }

    #[test]
    fn degrevlex_basics() {
        assert_eq!(degrevlex_cmp(&[1, 0, 0], &[0, 1, 0]), Ordering::Greater);
        assert_eq!(degrevlex_cmp(&[1, 0, 1], &[0, 2, 0]), Ordering::Less);
        assert_eq!(degrevlex_cmp(&[0, 0, 2], &[1, 0, 0]), Ordering::Greater);
    }

    #[test]
    fn sr_and_cover_examples() {
        let u23 = Matroid::uniform(2, 3).unwrap();
        let (i, d) = sr_ideal(&u23);
        assert_eq!(i, ideal(3, &[&[1, 1, 1]]));
        assert_eq!(d.components().len(), 3);
        assert!(d.components().iter().all(|c| c.prime.len() == 1 && c.exp == 1));
        assert_eq!(sr_ideal(&Matroid::uniform(1, 2).unwrap()).0, ideal(2, &[&[1, 1]]));
        assert!(sr_ideal(&Matroid::uniform(3, 3).unwrap()).0.is_zero());

        assert_eq!(cover_ideal(&u23).0, ideal(3, &[&[1, 1, 0], &[1, 0, 1], &[0, 1, 1]]));
        assert_eq!(cover_ideal(&Matroid::uniform(1, 2).unwrap()).0, ideal(2, &[&[1, 1]]));
        assert_eq!(cover_ideal(&Matroid::uniform(2, 2).unwrap()).0, ideal(2, &[&[1, 0], &[0, 1]]));
    }

    #[test]
    fn intersect_examples() {
        assert_eq!(ideal(2, &[&[1, 0]]).intersect(&ideal(2, &[&[0, 1]])).unwrap(), ideal(2, &[&[1, 1]]));
        let a = ideal(3, &[&[1, 0, 0], &[0, 1, 0]]);
        let b = ideal(3, &[&[1, 0, 0], &[0, 0, 1]]);
        assert_eq!(a.intersect(&b).unwrap(), ideal(3, &[&[1, 0, 0], &[0, 1, 1]]));
        assert_eq!(a.intersect(&a).unwrap(), a);
        let other = MonomialIdeal::new(vec!["a".into(), "b".into(), "c".into()], vec![]).unwrap();
        assert_eq!(a.intersect(&other).unwrap_err(), IdealError::AmbientMismatch);
    }

    #[test]
    fn colon_examples() {
        assert_eq!(ideal(2, &[&[1, 1]]).colon(&m(&[0, 1])), ideal(2, &[&[1, 0]]));
        let (j2, _) = slightly_mixed_power(&triangle(), 2, &Monomial::one(3), &vars(3)).unwrap();
        let expected = oracle(3, 6, |e| e[0] + e[1] >= 2 && e[0] + e[2] >= 1 && e[1] + e[2] >= 1);
        assert_eq!(j2.colon(&m(&[0, 0, 1])), expected);
        assert_eq!(expected, ideal(3, &[&[1, 1, 0], &[2, 0, 1], &[0, 2, 1]]));
        assert_eq!(j2.colon(&Monomial::one(3)), j2);
    }

    #[test]
    fn order_examples() {
        let p = PrimeSupport::new(vec![0, 1, 3]);
        assert_eq!(order_at(&m(&[0, 1, 1, 1]), &p).unwrap(), 2);
        assert_eq!(order_at(&Monomial::one(4), &p).unwrap(), 0);
        assert_eq!(order_at(&m(&[1, 1, 1]), &PrimeSupport::new(vec![0, 1, 2])).unwrap(), 3);
        assert_eq!(order_at(&m(&[2, 0, 0, 0]), &p).unwrap_err(), IdealError::NotSquarefree);
    }

    #[test]
    fn slightly_mixed_examples() {
        let t = triangle();
        let (j2, d2) = slightly_mixed_power(&t, 2, &Monomial::one(3), &vars(3)).unwrap();
        let expected = oracle(3, 6, |e| e[0] + e[1] >= 2 && e[0] + e[2] >= 2 && e[1] + e[2] >= 2);
        assert_eq!(j2, expected);
        assert_eq!(j2, ideal(3, &[&[1, 1, 1], &[2, 2, 0], &[2, 0, 2], &[0, 2, 2]]));
        assert_eq!(d2.exponent_sum(), 6);

        let (j1, _) = slightly_mixed_power(&t, 1, &Monomial::one(3), &vars(3)).unwrap();
        assert_eq!(j1, cover_ideal(&Matroid::uniform(2, 3).unwrap()).0);

        let (jx, dx) = slightly_mixed_power(&t, 2, &m(&[1, 0, 0]), &vars(3)).unwrap();
        let exps: Vec<(Vec<usize>, u32)> = dx.components().iter().map(|c| (c.prime.vars().to_vec(), c.exp)).collect();
        assert_eq!(exps, vec![(vec![0, 1], 1), (vec![0, 2], 1), (vec![1, 2], 2)]);
        let expected = oracle(3, 6, |e| e[0] + e[1] >= 1 && e[0] + e[2] >= 1 && e[1] + e[2] >= 2);
        assert_eq!(jx, expected);
        assert_eq!(jx, ideal(3, &[&[0, 1, 1], &[1, 2, 0], &[1, 0, 2]]));

        assert_eq!(slightly_mixed_power(&d2, 2, &Monomial::one(3), &vars(3)).unwrap_err(), IdealError::NotRadicalInput);
        // every exponent cut to zero gives the unit ideal
        let (u, du) = slightly_mixed_power(&t, 1, &m(&[1, 1, 1]), &vars(3)).unwrap();
        assert!(u.is_unit() && du.is_unit());
    }

    #[test]
    fn membership_examples() {
        let (j2, d2) = slightly_mixed_power(&triangle(), 2, &Monomial::one(3), &vars(3)).unwrap();
        assert!(j2.contains(&m(&[1, 1, 1])) && d2.contains(&m(&[1, 1, 1])));
        assert!(!j2.contains(&m(&[2, 1, 0])) && !d2.contains(&m(&[2, 1, 0])));
        assert!(MonomialIdeal::unit(vars(2)).contains(&Monomial::one(2)));
    }

    #[test]
    fn restrict_examples() {
        let c = cover_ideal(&Matroid::uniform(2, 3).unwrap()).0;
        assert_eq!(c.restrict(0), ideal(3, &[&[0, 1, 1]]));
        let (j2, _) = slightly_mixed_power(&triangle(), 2, &Monomial::one(3), &vars(3)).unwrap();
        assert_eq!(j2.restrict(0), ideal(3, &[&[0, 2, 2]]));
        assert!(ideal(1, &[&[2]]).restrict(0).is_zero());
    }

    #[test]
    fn colon_restriction_examples() {
        let t = triangle();
        assert!(colon_restriction_identity(&t, 2, &m(&[0, 0, 1]), 0, &vars(3)).unwrap());
        assert!(colon_restriction_identity(&t, 3, &Monomial::one(3), 1, &vars(3)).unwrap());
        let u24 = cover_ideal(&Matroid::uniform(2, 4).unwrap()).1;
        assert!(colon_restriction_identity(&u24, 3, &m(&[0, 1, 0, 1]), 0, &vars(4)).unwrap());
        assert!(matches!(
            colon_restriction_identity(&t, 2, &m(&[1, 0, 0]), 0, &vars(3)),
            Err(IdealError::PreconditionViolated(_))
        ));
    }

    #[test]
    fn polarize_examples() {
        let p = ideal(2, &[&[2, 1]]).polarize();
        assert_eq!(p.vars(), &["x1_1", "x1_2", "x2_1"]);
        assert_eq!(p.gens(), &[m(&[1, 1, 1])]);
        let sq = cover_ideal(&Matroid::uniform(2, 3).unwrap()).0;
        let ps = sq.polarize();
        assert_eq!(ps.gens(), sq.gens());
        assert_eq!(ps.vars(), &["x1_1", "x2_1", "x3_1"]);
        let p = ideal(2, &[&[2, 0], &[1, 1]]).polarize();
        assert_eq!(p.vars(), &["x1_1", "x1_2", "x2_1"]);
        assert_eq!(p, MonomialIdeal::new(p.vars().to_vec(), vec![m(&[1, 1, 0]), m(&[1, 0, 1])]).unwrap());
    }

    #[test]
    fn minimal_primes_examples() {
        let primes = |i: MonomialIdeal| -> Vec<Vec<usize>> {
            i.minimal_primes().unwrap().iter().map(|p| p.vars().to_vec()).collect()
        };
        assert_eq!(primes(ideal(2, &[&[1, 1]])), vec![vec![0], vec![1]]);
        assert_eq!(primes(ideal(3, &[&[1, 1, 0], &[1, 0, 1], &[0, 1, 1]])), vec![vec![0, 1], vec![0, 2], vec![1, 2]]);
        assert_eq!(primes(ideal(1, &[&[1]])), vec![vec![0]]);
        assert_eq!(ideal(1, &[&[2]]).minimal_primes().unwrap_err(), IdealError::NotSquarefree);
    }

    #[test]
    fn height_and_max_exponent() {
        assert_eq!(ideal(3, &[&[1, 1, 1]]).height().unwrap(), 1);
        assert_eq!(cover_ideal(&Matroid::uniform(2, 3).unwrap()).0.height().unwrap(), 2);
        assert_eq!(triangle().height().unwrap(), 2);
        let (j2, _) = slightly_mixed_power(&triangle(), 2, &Monomial::one(3), &vars(3)).unwrap();
        assert_eq!(j2.max_exponent(), 2);
        assert_eq!(MonomialIdeal::zero(vars(2)).height().unwrap_err(), IdealError::ZeroIdeal);
        assert_eq!(MonomialIdeal::unit(vars(2)).height().unwrap_err(), IdealError::UnitIdeal);
    }

    #[test]
    fn complete_intersections() {
        assert!(ideal(3, &[&[1, 0, 0], &[0, 1, 2]]).is_complete_intersection().unwrap());
        assert!(!ideal(3, &[&[1, 1, 0], &[1, 0, 1]]).is_complete_intersection().unwrap());
        assert!(ideal(3, &[&[1, 0, 0], &[0, 1, 0]]).is_complete_intersection().unwrap());
    }

    #[test]
    fn parse_monomials() {
        let v = vars(12);
        assert_eq!(parse_monomial("x1*x3^2", &v).unwrap().0[..3], [1, 0, 2]);
        assert_eq!(parse_monomial("x1x12", &v).unwrap().0[11], 1);
        assert!(parse_monomial("", &v).unwrap().is_one());
        assert!(parse_monomial("z", &v).is_err());
    }

    #[test]
    fn zero_and_rank_zero_matroids() {
        // U(0,2) has the single basis ∅, so its cover ideal is zero
        let u02 = Matroid::uniform(0, 2).unwrap();
        assert!(cover_ideal(&u02).0.is_zero());
        assert_eq!(sr_ideal(&u02).0, ideal(2, &[&[1, 0], &[0, 1]]));
    }
}
