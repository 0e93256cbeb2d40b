//! Radical, non-homogeneous lifts of monomial ideals relative to a
//! homogeneous ideal `K`.
//!
//! The ring is `R = K[x_1, …, x_n]` with one variable designated as `y`; the
//! remaining variables index the rows of the lifting matrix `Ψ`, whose
//! entries are `x_i + y·f_{i,j}` with the `f_{i,j}` rational combinations of
//! the generators of `K` read off a Cauchy matrix.

use std::fmt;
use std::time::Instant;

use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::monomial::{IdealError, Monomial, MonomialIdeal};
use crate::poly::{
    buchberger, dimension, ideal_equal, intersect_poly, pairs_reduced_on_thread, Budget, Coeff, MonomialOrder,
    PolyError, Polynomial,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LiftError {
    #[error("K has no nonzero generators")]
    EmptyK,
    #[error("K must be a proper ideal")]
    UnitK,
    #[error("generator {0} of K is not homogeneous")]
    NotHomogeneous(String),
    #[error("the lifting width N must be positive")]
    ZeroWidth,
    #[error("variable index {y} outside a ring with {n} variables")]
    BadVariable { y: usize, n: usize },
    #[error("monomial involves the lifting variable")]
    InvolvesY,
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Ideal(#[from] IdealError),
}

/// Outcome of one verification field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Check {
    Verified,
    Failed,
    Skipped(String),
}

impl Check {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Check::Verified
        } else {
            Check::Failed
        }
    }

    /// Runs a budgeted computation; budget overruns become `skipped(budget)`.
    pub fn budgeted(r: Result<bool, PolyError>) -> Self {
        match r {
            Ok(b) => Check::from_bool(b),
            Err(PolyError::BudgetExceeded { .. }) => Check::Skipped("budget".into()),
            Err(e) => Check::Skipped(format!("error: {e}")),
        }
    }

    pub fn is_verified(&self) -> bool {
        *self == Check::Verified
    }

    pub fn is_failed(&self) -> bool {
        *self == Check::Failed
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Check::Verified => f.write_str("verified"),
            Check::Failed => f.write_str("failed"),
            Check::Skipped(why) => write!(f, "skipped({why})"),
        }
    }
}

impl Serialize for Check {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Check {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        match s.as_str() {
            "verified" => Ok(Check::Verified),
            "failed" => Ok(Check::Failed),
            other => other
                .strip_prefix("skipped(")
                .and_then(|r| r.strip_suffix(')'))
                .map(|why| Check::Skipped(why.to_string()))
                .ok_or_else(|| serde::de::Error::custom(format!("unknown check `{other}`"))),
        }
    }
}

/// The Cauchy matrix `B_{ij} = 1/(i + rows·j)` (1-based): every square minor
/// is nonzero and the entries are pairwise distinct.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StarMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Vec<Coeff>>,
}

/// Result of an exhaustive minor scan.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinorScan {
    pub minors_checked: usize,
    /// Row and column index sets (0-based) of vanishing minors.
    pub zero_minors: Vec<(Vec<usize>, Vec<usize>)>,
    pub entries_distinct: bool,
    pub entries_nonzero: bool,
}

impl MinorScan {
    pub fn passes(&self) -> bool {
        self.zero_minors.is_empty() && self.entries_distinct && self.entries_nonzero
    }
}

impl StarMatrix {
    pub fn new(rows: usize, cols: usize) -> Self {
        let entries = (1..=rows)
            .map(|i| (1..=cols).map(|j| Coeff::new(1.into(), ((i + rows * j) as i64).into())).collect())
            .collect();
        StarMatrix { rows, cols, entries }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// 0-based entry.
    pub fn entry(&self, i: usize, j: usize) -> &Coeff {
        &self.entries[i][j]
    }

    pub fn minor(&self, rows: &[usize], cols: &[usize]) -> Coeff {
        let m: Vec<Vec<Coeff>> =
            rows.iter().map(|&i| cols.iter().map(|&j| self.entries[i][j].clone()).collect()).collect();
        determinant(m)
    }

    /// Checks every `k × k` minor for `k ≤ max_k`, plus entry distinctness.
    pub fn scan_minors(&self, max_k: usize) -> MinorScan {
        let mut zero_minors = Vec::new();
        let mut checked = 0;
        for k in 1..=max_k.min(self.rows).min(self.cols) {
            for rs in subsets(self.rows, k) {
                for cs in subsets(self.cols, k) {
                    checked += 1;
                    if self.minor(&rs, &cs).is_zero() {
                        zero_minors.push((rs.clone(), cs));
                    }
                }
            }
        }
        let mut flat: Vec<&Coeff> = self.entries.iter().flatten().collect();
        let entries_nonzero = flat.iter().all(|c| !c.is_zero());
        flat.sort();
        let entries_distinct = flat.windows(2).all(|w| w[0] != w[1]);
        MinorScan { minors_checked: checked, zero_minors, entries_distinct, entries_nonzero }
    }
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    go(0, n, k, &mut cur, &mut out);
    out
}

/// Determinant by fraction-exact Gaussian elimination.
pub fn determinant(mut m: Vec<Vec<Coeff>>) -> Coeff {
    let n = m.len();
    let mut det = Coeff::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| !m[r][c].is_zero()) else {
            return Coeff::zero();
        };
        if p != c {
            m.swap(p, c);
            det = -det;
        }
        det *= &m[c][c];
        for r in c + 1..n {
            if m[r][c].is_zero() {
                continue;
            }
            let factor = &m[r][c] / &m[c][c];
            for k in c..n {
                let v = &factor * &m[c][k];
                m[r][k] -= v;
            }
        }
    }
    det
}

/// `f_{i,j}` and the lifting matrix built from the generators of `K`.
#[derive(Debug, Clone)]
pub struct LiftingData {
    nvars: usize,
    y: usize,
    /// Ring variables indexing the rows of `Ψ`, in order (all but `y`).
    row_vars: Vec<usize>,
    width: usize,
    k_gens: Vec<Polynomial>,
    b: StarMatrix,
    /// `f[r][j]` is `f_{r+1, j+1}`.
    f: Vec<Vec<Polynomial>>,
}

impl LiftingData {
    /// `k_gens` must be nonzero homogeneous generators of a proper ideal;
    /// minimality is the caller's contract.
    pub fn new(k_gens: &[Polynomial], y: usize, width: usize) -> Result<Self, LiftError> {
        let k_gens: Vec<Polynomial> = k_gens.iter().filter(|g| !g.is_zero()).cloned().collect();
        let Some(first) = k_gens.first() else {
            return Err(LiftError::EmptyK);
        };
        let nvars = first.nvars();
        if y >= nvars {
            return Err(LiftError::BadVariable { y, n: nvars });
        }
        if width == 0 {
            return Err(LiftError::ZeroWidth);
        }
        for g in &k_gens {
            if g.nvars() != nvars {
                return Err(PolyError::AmbientMismatch { expected: nvars, got: g.nvars() }.into());
            }
            if !g.is_homogeneous() {
                return Err(LiftError::NotHomogeneous(g.to_string()));
            }
            if g.is_constant() {
                return Err(LiftError::UnitK);
            }
        }
        let row_vars: Vec<usize> = (0..nvars).filter(|&i| i != y).collect();
        let b = StarMatrix::new(width * row_vars.len(), k_gens.len());
        let f = (0..row_vars.len())
            .map(|r| {
                (0..width)
                    .map(|j| {
                        let row = r * width + j;
                        k_gens
                            .iter()
                            .enumerate()
                            .fold(Polynomial::zero(nvars), |acc, (c, g)| &acc + &g.scale(b.entry(row, c)))
                    })
                    .collect()
            })
            .collect();
        Ok(LiftingData { nvars, y, row_vars, width, k_gens, b, f })
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn y(&self) -> usize {
        self.y
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn row_vars(&self) -> &[usize] {
        &self.row_vars
    }

    pub fn k_gens(&self) -> &[Polynomial] {
        &self.k_gens
    }

    pub fn star_matrix(&self) -> &StarMatrix {
        &self.b
    }

    /// `f_{r,j}` for 0-based row `r` and 1-based column `j`; zero past `N`.
    pub fn f(&self, r: usize, j: usize) -> Polynomial {
        if j == 0 || j > self.width {
            return Polynomial::zero(self.nvars);
        }
        self.f[r][j - 1].clone()
    }

    /// Entry `x + y·f_{r,j}` of the (zero-extended) lifting matrix.
    pub fn entry(&self, r: usize, j: usize) -> Polynomial {
        let x = Polynomial::var(self.nvars, self.row_vars[r]);
        let y = Polynomial::var(self.nvars, self.y);
        &x + &(&y * &self.f(r, j))
    }

    /// `ψ(M) = ∏_i ∏_{j ≤ a_i} (x_i + y·f_{i,j})`. The flag reports whether
    /// some exponent exceeded `N`, so that zero-extended columns were used.
    pub fn psi(&self, m: &Monomial) -> Result<(Polynomial, bool), LiftError> {
        if m.nvars() != self.nvars {
            return Err(PolyError::AmbientMismatch { expected: self.nvars, got: m.nvars() }.into());
        }
        if m.0[self.y] > 0 {
            return Err(LiftError::InvolvesY);
        }
        let mut out = Polynomial::one(self.nvars);
        let mut extended = false;
        for (r, &v) in self.row_vars.iter().enumerate() {
            let a = m.0[v] as usize;
            extended |= a > self.width;
            for j in 1..=a {
                out = &out * &self.entry(r, j);
            }
        }
        Ok((out, extended))
    }
}

/// The lift `I' = (ψ(G(I_0)))` of a monomial ideal not involving `y`.
#[derive(Debug, Clone)]
pub struct LiftedIdeal {
    pub i0: MonomialIdeal,
    pub data: LiftingData,
    pub gens: Vec<Polynomial>,
    /// `N < max(I_0)`: a partial lift only.
    pub partial: bool,
}

pub fn lift_ideal(i0: &MonomialIdeal, k_gens: &[Polynomial], y: usize, width: usize) -> Result<LiftedIdeal, LiftError> {
    let data = LiftingData::new(k_gens, y, width)?;
    if i0.nvars() != data.nvars {
        return Err(PolyError::AmbientMismatch { expected: data.nvars, got: i0.nvars() }.into());
    }
    let mut gens = Vec::with_capacity(i0.gens().len());
    let mut partial = false;
    for g in i0.gens() {
        let (p, ext) = data.psi(g)?;
        partial |= ext;
        gens.push(p);
    }
    Ok(LiftedIdeal { i0: i0.clone(), data, gens, partial })
}

/// A candidate minimal prime `(x_{b_1} + y f_{b_1,i_1}, …)`.
#[derive(Debug, Clone)]
pub struct CandidatePrime {
    /// (0-based row, 1-based column) of each generator.
    pub entries: Vec<(usize, usize)>,
    pub gens: Vec<Polynomial>,
}

impl CandidatePrime {
    pub fn describe(&self, vars: &[String], row_vars: &[usize]) -> String {
        let parts: Vec<String> =
            self.entries.iter().map(|&(r, j)| format!("{}+y*f[{},{}]", vars[row_vars[r]], r + 1, j)).collect();
        format!("({})", parts.join(", "))
    }
}

/// All height-`c` ideals generated by entries from `c` distinct rows of `Ψ`
/// that contain `I'`.
pub fn candidate_minimal_primes(l: &LiftedIdeal, c: usize, budget: &Budget) -> Result<Vec<CandidatePrime>, LiftError> {
    let d = &l.data;
    let mut out = Vec::new();
    for rows in subsets(d.row_vars.len(), c) {
        let mut cols = vec![1usize; c];
        loop {
            let entries: Vec<(usize, usize)> = rows.iter().copied().zip(cols.iter().copied()).collect();
            let gens: Vec<Polynomial> = entries.iter().map(|&(r, j)| d.entry(r, j)).collect();
            let gb = buchberger(&gens, &MonomialOrder::DegRevLex, budget)?;
            if l.gens.iter().all(|g| gb.contains(g)) {
                out.push(CandidatePrime { entries, gens });
            }
            // next column choice
            let mut k = 0;
            while k < c {
                cols[k] += 1;
                if cols[k] <= d.width {
                    break;
                }
                cols[k] = 1;
                k += 1;
            }
            if k == c {
                break;
            }
        }
    }
    Ok(out)
}

/// Height of a polynomial ideal: combinatorial for monomial generators,
/// otherwise `n - dim`.
pub fn height_of(gens: &[Polynomial], budget: &Budget) -> Result<usize, PolyError> {
    let n = gens.first().map_or(0, Polynomial::nvars);
    let monos: Option<Vec<Monomial>> = gens.iter().filter(|g| !g.is_zero()).map(Polynomial::as_monomial).collect();
    if let Some(ms) = monos {
        let ideal = MonomialIdeal::new(crate::monomial::default_vars(n), ms).expect("shared ambient");
        return match ideal.height() {
            Ok(h) => Ok(h),
            Err(IdealError::UnitIdeal) => Err(PolyError::UnitIdeal),
            Err(_) => Ok(0),
        };
    }
    Ok(n - dimension(gens, budget)?)
}

/// Instance-level checks of a lift.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LiftVerdict {
    /// `I' + (y) = I_0 + (y)`.
    pub extension: Check,
    /// `ht I' = ht I_0` by Gröbner dimension.
    pub height: Check,
    /// `y` lies in no candidate minimal prime.
    pub y_avoidance: Check,
    /// `I'` equals the intersection of its candidate minimal primes.
    pub radical: Check,
    /// `ht K > ht I_0`, the hypothesis under which `I'` is radical.
    pub hypothesis: Check,
    pub partial_lift: bool,
    pub candidate_primes: usize,
    pub pairs_reduced: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

impl LiftVerdict {
    pub fn all_verified(&self) -> bool {
        [&self.extension, &self.height, &self.y_avoidance, &self.radical, &self.hypothesis]
            .iter()
            .all(|c| c.is_verified())
    }
}

pub fn verify_lift(l: &LiftedIdeal, deep: bool, budget: &Budget) -> LiftVerdict {
    let start = Instant::now();
    let pairs_before = pairs_reduced_on_thread();
    let d = &l.data;
    let n = d.nvars;
    let yv = Polynomial::var(n, d.y);
    let i0_polys: Vec<Polynomial> = l.i0.gens().iter().map(Polynomial::from_monomial).collect();

    let extension = if deep {
        let mut a = l.gens.clone();
        a.push(yv.clone());
        let mut b = i0_polys.clone();
        b.push(yv.clone());
        Check::budgeted(ideal_equal(&a, &b, budget))
    } else {
        // each generator is congruent to its value at y = 0 modulo y
        let at_zero: Vec<Polynomial> = l.gens.iter().map(|g| g.eval_var(d.y, &Coeff::zero())).collect();
        Check::from_bool(at_zero == i0_polys)
    };

    let ht_i0 = l.i0.height().ok();
    let height = if !deep {
        Check::Skipped("shallow".into())
    } else {
        match ht_i0 {
            Some(h) => Check::budgeted(dimension(&l.gens, budget).map(|dim| n - dim == h)),
            None => Check::Skipped("I0 is zero or the unit ideal".into()),
        }
    };

    let candidates = match ht_i0 {
        Some(c) => candidate_minimal_primes(l, c, budget).map_err(|e| match e {
            LiftError::Poly(p) => p,
            other => PolyError::Parse(other.to_string()),
        }),
        None => Ok(Vec::new()),
    };
    let (y_avoidance, radical, n_candidates) = match candidates {
        Err(e) => {
            let c = Check::budgeted(Err(e));
            (c.clone(), c, 0)
        }
        Ok(cands) => {
            let avoid = Check::budgeted(
                cands
                    .iter()
                    .map(|q| buchberger(&q.gens, &MonomialOrder::DegRevLex, budget).map(|gb| !gb.contains(&yv)))
                    .collect::<Result<Vec<bool>, _>>()
                    .map(|v| !v.is_empty() && v.iter().all(|&b| b)),
            );
            let radical = if !deep {
                Check::Skipped("shallow".into())
            } else if cands.is_empty() {
                Check::Failed
            } else {
                let inter = cands
                    .iter()
                    .skip(1)
                    .try_fold(cands[0].gens.clone(), |acc, q| intersect_poly(&acc, &q.gens, budget));
                Check::budgeted(inter.and_then(|i| ideal_equal(&i, &l.gens, budget)))
            };
            (avoid, radical, cands.len())
        }
    };

    let hypothesis = match (height_of(d.k_gens(), budget), ht_i0) {
        (Ok(hk), Some(h0)) => Check::from_bool(hk > h0),
        (Err(PolyError::BudgetExceeded { .. }), _) => Check::Skipped("budget".into()),
        _ => Check::Failed,
    };

    LiftVerdict {
        extension,
        height,
        y_avoidance,
        radical,
        hypothesis,
        partial_lift: l.partial,
        candidate_primes: n_candidates,
        pairs_reduced: pairs_reduced_on_thread() - pairs_before,
        elapsed_ms: Some(start.elapsed().as_millis() as u64),
    }
}
