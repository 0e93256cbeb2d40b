//! Sparse polynomials over the rationals and Buchberger Gröbner bases.
//!
//! A [`Polynomial`] keeps its terms in a map keyed by exponent vector, so it
//! carries no monomial order. Order-dependent work (division, Gröbner bases)
//! happens on term vectors sorted descending in the requested
//! [`MonomialOrder`].

use std::cell::Cell;
use std::cmp::Ordering;
use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::monomial::{degrevlex_cmp, Monomial, MonomialIdeal};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("Gröbner budget exceeded: more than {limit} {what}")]
    BudgetExceeded { what: &'static str, limit: usize },
    #[error("division by {divisor} is not exact")]
    InexactDivision { divisor: String },
    #[error("operation undefined on the unit ideal")]
    UnitIdeal,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("polynomials live in {expected} variables, got {got}")]
    AmbientMismatch { expected: usize, got: usize },
    #[error("cannot parse polynomial: {0}")]
    Parse(String),
}

pub type Coeff = BigRational;

/// Monomial orders on exponent vectors. Variable `0` is the largest.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum MonomialOrder {
    Lex,
    DegRevLex,
    /// Degrevlex on the listed variables first, ties broken by degrevlex on
    /// the rest. Eliminates the listed variables.
    Block {
        first: Vec<usize>,
    },
}

impl MonomialOrder {
    pub fn cmp(&self, a: &[u32], b: &[u32]) -> Ordering {
        match self {
            MonomialOrder::Lex => a.cmp(b),
            MonomialOrder::DegRevLex => degrevlex_cmp(a, b),
            MonomialOrder::Block { first } => {
                let pick = |e: &[u32], inside: bool| -> Vec<u32> {
                    e.iter().enumerate().filter(|(i, _)| first.contains(i) == inside).map(|(_, &x)| x).collect()
                };
                degrevlex_cmp(&pick(a, true), &pick(b, true))
                    .then_with(|| degrevlex_cmp(&pick(a, false), &pick(b, false)))
            }
        }
    }
}

/// Caps on Gröbner work. `None` means unbounded.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Budget {
    pub max_pairs: Option<usize>,
    pub max_terms: Option<usize>,
}

impl Budget {
    pub const UNLIMITED: Budget = Budget { max_pairs: None, max_terms: None };

    pub fn pairs(max_pairs: usize) -> Self {
        Budget { max_pairs: Some(max_pairs), max_terms: None }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget { max_pairs: Some(20_000), max_terms: Some(200_000) }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, Coeff>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: Coeff) -> Self {
        Self::term(vec![0; nvars], c)
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Coeff::one())
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        Self::from_monomial(&Monomial::var(nvars, i))
    }

    pub fn term(exp: Vec<u32>, c: Coeff) -> Self {
        let mut p = Polynomial::zero(exp.len());
        if !c.is_zero() {
            p.terms.insert(exp, c);
        }
        p
    }

    pub fn from_monomial(m: &Monomial) -> Self {
        Self::term(m.0.clone(), Coeff::one())
    }

    /// Sums repeated exponents and drops zero coefficients.
    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Vec<u32>, Coeff)>) -> Result<Self, PolyError> {
        let mut p = Polynomial::zero(nvars);
        for (e, c) in terms {
            if e.len() != nvars {
                return Err(PolyError::AmbientMismatch { expected: nvars, got: e.len() });
            }
            p.add_term(e, c);
        }
        Ok(p)
    }

    fn add_term(&mut self, e: Vec<u32>, c: Coeff) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
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

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&x| x == 0))
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Coeff)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exp: &[u32]) -> Coeff {
        self.terms.get(exp).cloned().unwrap_or_else(Coeff::zero)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|e| e.iter().sum::<u32>());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|x| x == d),
        }
    }

    /// Variables that occur in some term.
    pub fn support(&self) -> Vec<usize> {
        (0..self.nvars).filter(|&i| self.terms.keys().any(|e| e[i] > 0)).collect()
    }

    pub fn involves(&self, i: usize) -> bool {
        self.terms.keys().any(|e| e[i] > 0)
    }

    /// Largest term in the given order, if any.
    pub fn leading_term(&self, order: &MonomialOrder) -> Option<(&Vec<u32>, &Coeff)> {
        self.terms.iter().max_by(|a, b| order.cmp(a.0, b.0))
    }

    pub fn scale(&self, c: &Coeff) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        Polynomial { nvars: self.nvars, terms: self.terms.iter().map(|(e, x)| (e.clone(), x * c)).collect() }
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self, order: &MonomialOrder) -> Polynomial {
        match self.leading_term(order) {
            None => self.clone(),
            Some((_, c)) => self.scale(&c.recip()),
        }
    }

    pub fn mul_monomial(&self, m: &[u32], c: &Coeff) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, x)| (e.iter().zip(m).map(|(a, b)| a + b).collect(), x * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        (0..k).fold(Polynomial::one(self.nvars), |acc, _| &acc * self)
    }

    /// Substitutes the constant `c` for variable `i`.
    pub fn eval_var(&self, i: usize, c: &Coeff) -> Polynomial {
        let mut out = Polynomial::zero(self.nvars);
        for (e, x) in &self.terms {
            let mut e2 = e.clone();
            let k = std::mem::replace(&mut e2[i], 0);
            out.add_term(e2, x * num_traits::pow(c.clone(), k as usize));
        }
        out
    }

    /// Re-embeds into `nvars` variables; old variable `i` becomes `map[i]`.
    pub fn remap(&self, nvars: usize, map: &[usize]) -> Polynomial {
        let mut out = Polynomial::zero(nvars);
        for (e, x) in &self.terms {
            let mut e2 = vec![0; nvars];
            for (i, &k) in e.iter().enumerate() {
                e2[map[i]] += k;
            }
            out.add_term(e2, x.clone());
        }
        out
    }

    /// Appends `extra` new variables at the end.
    pub fn extend(&self, extra: usize) -> Polynomial {
        let map: Vec<usize> = (0..self.nvars).collect();
        self.remap(self.nvars + extra, &map)
    }

    /// Removes variable `i`, which must not occur.
    pub fn drop_var(&self, i: usize) -> Polynomial {
        assert!(!self.involves(i), "dropped variable occurs");
        Polynomial {
            nvars: self.nvars - 1,
            terms: self
                .terms
                .iter()
                .map(|(e, x)| {
                    let mut e2 = e.clone();
                    e2.remove(i);
                    (e2, x.clone())
                })
                .collect(),
        }
    }

    /// Single term with coefficient one, as a monomial.
    pub fn as_monomial(&self) -> Option<Monomial> {
        match self.terms.iter().next() {
            Some((e, c)) if self.terms.len() == 1 && c.is_one() => Some(Monomial(e.clone())),
            _ => None,
        }
    }

    /// Text form with terms in descending degrevlex, e.g. `x1^2*x2 - 3/2*y + 1`.
    pub fn to_string_with(&self, vars: &[String]) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|a, b| degrevlex_cmp(b.0, a.0));
        let mut out = String::new();
        for (k, (e, c)) in terms.into_iter().enumerate() {
            let neg = c.is_negative();
            if k == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let a = c.abs();
            let mono = Monomial(e.clone());
            if mono.is_one() {
                out.push_str(&a.to_string());
            } else if a.is_one() {
                out.push_str(&mono.to_string_with(vars));
            } else {
                out.push_str(&format!("{a}*{}", mono.to_string_with(vars)));
            }
        }
        out
    }

    /// Parses the text form over the declared variables.
    pub fn parse(text: &str, vars: &[String]) -> Result<Polynomial, PolyError> {
        Parser { s: text.as_bytes(), pos: 0, vars }.polynomial()
    }

    pub fn to_json(&self) -> Vec<TermJson> {
        self.terms.iter().map(|(e, c)| TermJson { exp: e.clone(), coeff: c.to_string() }).collect()
    }

    pub fn from_json(nvars: usize, terms: &[TermJson]) -> Result<Polynomial, PolyError> {
        let parsed = terms
            .iter()
            .map(|t| Ok((t.exp.clone(), parse_rational(&t.coeff)?)))
            .collect::<Result<Vec<_>, PolyError>>()?;
        Polynomial::from_terms(nvars, parsed)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub exp: Vec<u32>,
    pub coeff: String,
}

pub fn parse_rational(s: &str) -> Result<Coeff, PolyError> {
    let bad = || PolyError::Parse(format!("bad coefficient `{s}`"));
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n = BigInt::from_str(n.trim()).map_err(|_| bad())?;
            let d = BigInt::from_str(d.trim()).map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Coeff::new(n, d))
        }
        None => Ok(Coeff::from_integer(BigInt::from_str(s).map_err(|_| bad())?)),
    }
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
    vars: &'a [String],
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn err(&self, msg: &str) -> PolyError {
        PolyError::Parse(format!("{msg} at byte {}", self.pos))
    }

    fn number(&mut self) -> Result<BigInt, PolyError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        let digits = std::str::from_utf8(&self.s[start..self.pos]).expect("ascii digits");
        BigInt::from_str(digits).map_err(|_| self.err("expected a number"))
    }

    fn polynomial(&mut self) -> Result<Polynomial, PolyError> {
        let n = self.vars.len();
        let mut p = Polynomial::zero(n);
        let mut first = true;
        loop {
            let sign = match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    false
                }
                Some(b'-') => {
                    self.pos += 1;
                    true
                }
                None if !first => break,
                None => return Err(self.err("empty polynomial")),
                _ if first => false,
                _ => return Err(self.err("expected `+` or `-`")),
            };
            first = false;
            let (e, c) = self.term()?;
            p.add_term(e, if sign { -c } else { c });
        }
        Ok(p)
    }

    fn term(&mut self) -> Result<(Vec<u32>, Coeff), PolyError> {
        let mut exp = vec![0u32; self.vars.len()];
        let mut c = Coeff::one();
        loop {
            match self.peek() {
                Some(d) if d.is_ascii_digit() => {
                    let num = self.number()?;
                    let val = if self.peek() == Some(b'/') {
                        self.pos += 1;
                        let den = self.number()?;
                        if den.is_zero() {
                            return Err(self.err("zero denominator"));
                        }
                        Coeff::new(num, den)
                    } else {
                        Coeff::from_integer(num)
                    };
                    c *= val;
                }
                Some(ch) if ch.is_ascii_alphabetic() || ch == b'_' => {
                    let start = self.pos;
                    while self.pos < self.s.len()
                        && (self.s[self.pos].is_ascii_alphanumeric() || self.s[self.pos] == b'_')
                    {
                        self.pos += 1;
                    }
                    let name = std::str::from_utf8(&self.s[start..self.pos]).expect("ascii name");
                    let i = self
                        .vars
                        .iter()
                        .position(|v| v == name)
                        .ok_or_else(|| PolyError::Parse(format!("unknown variable `{name}`")))?;
                    let k = if self.peek() == Some(b'^') {
                        self.pos += 1;
                        u32::try_from(self.number()?).map_err(|_| self.err("exponent too large"))?
                    } else {
                        1
                    };
                    exp[i] += k;
                }
                _ => return Err(self.err("expected a factor")),
            }
            if self.peek() == Some(b'*') {
                self.pos += 1;
            } else {
                return Ok((exp, c));
            }
        }
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vars = crate::monomial::default_vars(self.nvars);
        f.write_str(&self.to_string_with(&vars))
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, rhs.nvars, "ambient mismatch");
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, rhs.nvars, "ambient mismatch");
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial { nvars: self.nvars, terms: self.terms.iter().map(|(e, c)| (e.clone(), -c.clone())).collect() }
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, rhs.nvars, "ambient mismatch");
        let mut out = Polynomial::zero(self.nvars);
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                out.add_term(a.iter().zip(b).map(|(i, j)| i + j).collect(), x * y);
            }
        }
        out
    }
}

/// Terms sorted descending in a fixed order.
#[derive(Debug, Clone)]
struct Sorted {
    terms: Vec<(Vec<u32>, Coeff)>,
}

impl Sorted {
    fn new(p: &Polynomial, order: &MonomialOrder) -> Self {
        let mut terms: Vec<_> = p.terms.iter().map(|(e, c)| (e.clone(), c.clone())).collect();
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        Sorted { terms }
    }

    fn to_poly(&self, nvars: usize) -> Polynomial {
        Polynomial { nvars, terms: self.terms.iter().cloned().collect() }
    }

    fn lead(&self) -> &[u32] {
        &self.terms[0].0
    }

    fn make_monic(&mut self) {
        let lc = self.terms[0].1.clone();
        if !lc.is_one() {
            for t in &mut self.terms {
                t.1 /= &lc;
            }
        }
    }

    fn shift(&self, m: &[u32]) -> Sorted {
        Sorted {
            terms: self.terms.iter().map(|(e, c)| (e.iter().zip(m).map(|(a, b)| a + b).collect(), c.clone())).collect(),
        }
    }

    /// `self - c * x^m * g`, merging two descending term lists.
    fn sub_mul(&self, c: &Coeff, m: &[u32], g: &Sorted, order: &MonomialOrder) -> Sorted {
        let mut out = Vec::with_capacity(self.terms.len() + g.terms.len());
        let shifted = g.terms.iter().map(|(e, x)| (e.iter().zip(m).map(|(a, b)| a + b).collect::<Vec<u32>>(), x * c));
        let mut a = self.terms.iter().peekable();
        let mut b = shifted.peekable();
        loop {
            match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => out.push(a.next().expect("peeked").clone()),
                (None, Some(_)) => {
                    let (e, x) = b.next().expect("peeked");
                    out.push((e, -x));
                }
                (Some(ta), Some(tb)) => match order.cmp(&ta.0, &tb.0) {
                    Ordering::Greater => out.push(a.next().expect("peeked").clone()),
                    Ordering::Less => {
                        let (e, x) = b.next().expect("peeked");
                        out.push((e, -x));
                    }
                    Ordering::Equal => {
                        let (e, x) = a.next().expect("peeked");
                        let (_, y) = b.next().expect("peeked");
                        let v = x - y;
                        if !v.is_zero() {
                            out.push((e.clone(), v));
                        }
                    }
                },
            }
        }
        Sorted { terms: out }
    }
}

fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn quotient(b: &[u32], a: &[u32]) -> Vec<u32> {
    b.iter().zip(a).map(|(y, x)| y - x).collect()
}

fn lcm(a: &[u32], b: &[u32]) -> Vec<u32> {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

fn coprime(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| *x == 0 || *y == 0)
}

/// Full reduction of `f` by monic `g`s. With `top_only` the loop stops at the
/// first irreducible leading term.
fn reduce(
    f: Sorted,
    gs: &[Sorted],
    order: &MonomialOrder,
    top_only: bool,
    budget: &Budget,
) -> Result<Sorted, PolyError> {
    let mut rem: Vec<(Vec<u32>, Coeff)> = Vec::new();
    let mut f = f;
    while !f.terms.is_empty() {
        if let Some(cap) = budget.max_terms {
            if f.terms.len() > cap {
                return Err(PolyError::BudgetExceeded { what: "terms", limit: cap });
            }
        }
        let (lead, c) = (&f.terms[0].0, &f.terms[0].1);
        match gs.iter().find(|g| divides(g.lead(), lead)) {
            Some(g) => {
                let m = quotient(lead, g.lead());
                let c = c / &g.terms[0].1;
                f = f.sub_mul(&c, &m, g, order);
            }
            None => {
                if top_only {
                    rem.extend(f.terms);
                    return Ok(Sorted { terms: rem });
                }
                rem.push(f.terms.remove(0));
            }
        }
    }
    Ok(Sorted { terms: rem })
}

/// Remainder of `f` on multivariate division by `gs` in `order`.
pub fn normal_form(f: &Polynomial, gs: &[Polynomial], order: &MonomialOrder) -> Polynomial {
    let sorted: Vec<Sorted> = gs.iter().filter(|g| !g.is_zero()).map(|g| Sorted::new(g, order)).collect();
    reduce(Sorted::new(f, order), &sorted, order, false, &Budget::UNLIMITED)
        .expect("unbounded reduction")
        .to_poly(f.nvars)
}

/// A reduced Gröbner basis: monic, no lead term divides another, sorted
/// ascending by lead term.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis {
    nvars: usize,
    order: MonomialOrder,
    polys: Vec<Polynomial>,
    /// S-pairs actually reduced while computing the basis.
    pub pairs_reduced: usize,
}

impl GroebnerBasis {
    pub fn polys(&self) -> &[Polynomial] {
        &self.polys
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_unit(&self) -> bool {
        self.polys.len() == 1 && self.polys[0].is_constant()
    }

    pub fn is_zero(&self) -> bool {
        self.polys.is_empty()
    }

    pub fn reduce(&self, f: &Polynomial) -> Polynomial {
        normal_form(f, &self.polys, &self.order)
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        self.reduce(f).is_zero()
    }

    pub fn lead_monomials(&self) -> Vec<Monomial> {
        self.polys.iter().map(|p| Monomial(p.leading_term(&self.order).expect("nonzero").0.clone())).collect()
    }
}

thread_local! {
    static PAIRS_ON_THREAD: Cell<usize> = const { Cell::new(0) };
}

/// S-pairs reduced by Gröbner computations on the current thread so far.
pub fn pairs_reduced_on_thread() -> usize {
    PAIRS_ON_THREAD.with(Cell::get)
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Vec<u32>,
}

/// Buchberger's algorithm with the coprime and chain criteria and the normal
/// selection strategy (smallest lcm first, ties by index).
pub fn buchberger(gens: &[Polynomial], order: &MonomialOrder, budget: &Budget) -> Result<GroebnerBasis, PolyError> {
    let nvars = match gens.first() {
        Some(g) => g.nvars,
        None => 0,
    };
    if let Some(g) = gens.iter().find(|g| g.nvars != nvars) {
        return Err(PolyError::AmbientMismatch { expected: nvars, got: g.nvars });
    }
    let mut basis: Vec<Sorted> = Vec::new();
    for g in gens.iter().filter(|g| !g.is_zero()) {
        let mut s = Sorted::new(g, order);
        s.make_monic();
        basis.push(s);
    }
    // deterministic start: generators ascending by lead term
    basis.sort_by(|a, b| order.cmp(a.lead(), b.lead()));
    let mut pending: HashSet<(usize, usize)> = HashSet::new();
    let mut pairs: Vec<Pair> = Vec::new();
    for j in 0..basis.len() {
        for i in 0..j {
            pairs.push(Pair { i, j, lcm: lcm(basis[i].lead(), basis[j].lead()) });
            pending.insert((i, j));
        }
    }
    let mut reduced = 0usize;
    while !pairs.is_empty() {
        let k = (0..pairs.len())
            .min_by(|&a, &b| {
                order
                    .cmp(&pairs[a].lcm, &pairs[b].lcm)
                    .then_with(|| (pairs[a].j, pairs[a].i).cmp(&(pairs[b].j, pairs[b].i)))
            })
            .expect("nonempty");
        let Pair { i, j, lcm: l } = pairs.swap_remove(k);
        pending.remove(&(i, j));
        if coprime(basis[i].lead(), basis[j].lead()) {
            continue;
        }
        let key = |a: usize, b: usize| (a.min(b), a.max(b));
        let chain = (0..basis.len()).any(|m| {
            m != i
                && m != j
                && divides(basis[m].lead(), &l)
                && !pending.contains(&key(i, m))
                && !pending.contains(&key(j, m))
        });
        if chain {
            continue;
        }
        reduced += 1;
        PAIRS_ON_THREAD.with(|c| c.set(c.get() + 1));
        if let Some(cap) = budget.max_pairs {
            if reduced > cap {
                return Err(PolyError::BudgetExceeded { what: "S-pairs", limit: cap });
            }
        }
        let left = basis[i].shift(&quotient(&l, basis[i].lead()));
        let spoly = left.sub_mul(&Coeff::one(), &quotient(&l, basis[j].lead()), &basis[j], order);
        let mut h = reduce(spoly, &basis, order, true, budget)?;
        if h.terms.is_empty() {
            continue;
        }
        h.make_monic();
        let n = basis.len();
        for m in 0..n {
            pairs.push(Pair { i: m, j: n, lcm: lcm(basis[m].lead(), h.lead()) });
            pending.insert((m, n));
        }
        basis.push(h);
    }
    Ok(GroebnerBasis { nvars, order: order.clone(), polys: interreduce(basis, order, budget)?, pairs_reduced: reduced })
}

fn interreduce(basis: Vec<Sorted>, order: &MonomialOrder, budget: &Budget) -> Result<Vec<Polynomial>, PolyError> {
    let nvars = basis.first().map_or(0, |b| b.terms[0].0.len());
    // minimal: drop elements whose lead term is divisible by another's
    let mut keep: Vec<Sorted> = Vec::new();
    for (k, g) in basis.iter().enumerate() {
        let redundant = basis
            .iter()
            .enumerate()
            .any(|(m, h)| m != k && divides(h.lead(), g.lead()) && (h.lead() != g.lead() || m < k));
        if !redundant {
            keep.push(g.clone());
        }
    }
    let mut out = Vec::with_capacity(keep.len());
    for k in 0..keep.len() {
        let others: Vec<Sorted> = keep.iter().enumerate().filter(|(m, _)| *m != k).map(|(_, g)| g.clone()).collect();
        let head = Sorted { terms: vec![keep[k].terms[0].clone()] };
        let tail = Sorted { terms: keep[k].terms[1..].to_vec() };
        let mut r = reduce(tail, &others, order, false, budget)?;
        let mut terms = head.terms;
        terms.append(&mut r.terms);
        let mut s = Sorted { terms };
        s.make_monic();
        out.push(s);
    }
    out.sort_by(|a, b| order.cmp(a.lead(), b.lead()));
    Ok(out.iter().map(|s| s.to_poly(nvars)).collect())
}

/// `f ∈ (gens)`.
pub fn ideal_member(f: &Polynomial, gens: &[Polynomial], budget: &Budget) -> Result<bool, PolyError> {
    Ok(buchberger(gens, &MonomialOrder::DegRevLex, budget)?.contains(f))
}

/// Equality of ideals by mutual membership of generators.
pub fn ideal_equal(a: &[Polynomial], b: &[Polynomial], budget: &Budget) -> Result<bool, PolyError> {
    let ga = buchberger(a, &MonomialOrder::DegRevLex, budget)?;
    let gb = buchberger(b, &MonomialOrder::DegRevLex, budget)?;
    Ok(a.iter().all(|f| gb.contains(f)) && b.iter().all(|f| ga.contains(f)))
}

/// Generators of `(gens) ∩ k[other variables]`; results keep the ambient
/// variable count and do not involve `drop`.
pub fn eliminate(gens: &[Polynomial], drop: &[usize], budget: &Budget) -> Result<Vec<Polynomial>, PolyError> {
    let order = MonomialOrder::Block { first: drop.to_vec() };
    let gb = buchberger(gens, &order, budget)?;
    Ok(gb.polys.into_iter().filter(|p| drop.iter().all(|&v| !p.involves(v))).collect())
}

/// `A ∩ B` via `(tA + (1-t)B) ∩ R`.
pub fn intersect_poly(a: &[Polynomial], b: &[Polynomial], budget: &Budget) -> Result<Vec<Polynomial>, PolyError> {
    let n = a.first().or(b.first()).map_or(0, Polynomial::nvars);
    if a.iter().all(Polynomial::is_zero) || b.iter().all(Polynomial::is_zero) {
        return Ok(Vec::new());
    }
    let t = Polynomial::var(n + 1, n);
    let one_minus_t = &Polynomial::one(n + 1) - &t;
    let mut gens: Vec<Polynomial> = a.iter().map(|f| &f.extend(1) * &t).collect();
    gens.extend(b.iter().map(|f| &f.extend(1) * &one_minus_t));
    Ok(eliminate(&gens, &[n], budget)?.into_iter().map(|p| p.drop_var(n)).collect())
}

/// `A : f` as `(A ∩ (f)) / f`.
pub fn colon_poly(a: &[Polynomial], f: &Polynomial, budget: &Budget) -> Result<Vec<Polynomial>, PolyError> {
    if f.is_zero() {
        return Err(PolyError::DivisionByZero);
    }
    intersect_poly(a, std::slice::from_ref(f), budget)?.iter().map(|g| exact_div(g, f)).collect()
}

/// `g / f`, or `InexactDivision` when `f` does not divide `g`.
pub fn exact_div(g: &Polynomial, f: &Polynomial) -> Result<Polynomial, PolyError> {
    if f.is_zero() {
        return Err(PolyError::DivisionByZero);
    }
    let order = MonomialOrder::DegRevLex;
    let fs = Sorted::new(f, &order);
    let mut r = Sorted::new(g, &order);
    let mut q = Polynomial::zero(g.nvars);
    while !r.terms.is_empty() {
        if !divides(fs.lead(), r.lead()) {
            return Err(PolyError::InexactDivision { divisor: f.to_string() });
        }
        let m = quotient(r.lead(), fs.lead());
        let c = &r.terms[0].1 / &fs.terms[0].1;
        q.add_term(m.clone(), c.clone());
        r = r.sub_mul(&c, &m, &fs, &order);
    }
    Ok(q)
}

/// Krull dimension of `R/(gens)`: `n` minus the height of the radical of the
/// degrevlex lead-term ideal.
pub fn dimension(gens: &[Polynomial], budget: &Budget) -> Result<usize, PolyError> {
    let n = gens.first().map_or(0, Polynomial::nvars);
    let gb = buchberger(gens, &MonomialOrder::DegRevLex, budget)?;
    if gb.is_unit() {
        return Err(PolyError::UnitIdeal);
    }
    if gb.is_zero() {
        return Ok(n);
    }
    let lead = MonomialIdeal::new(crate::monomial::default_vars(n), gb.lead_monomials())
        .expect("lead monomials share the ambient");
    Ok(n - lead.radical().height().expect("proper nonzero lead ideal"))
}
