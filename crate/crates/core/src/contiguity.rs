//! Contiguity relations as concrete, checkable objects.
//!
//! A relation is stored in an oriented form
//!
//! ```text
//! factor(s) · R_i(s; src) = Σ_ε c_ε(i) · R_{i+ε}(s + step; dst)
//! ```
//!
//! A plus-form relation has `src = ρ`, `dst = ρ̄`, `step = η`; a minus-form
//! relation has `src = ρ̄`, `dst = ρ`, `step = -η`, with its factor `λ^-(x)`
//! re-expressed in the source variable `x̄`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};

use crate::constraints::ShiftMap;
use crate::error::{Error, Result};
use crate::families::{self, lambda, recurrence_coeffs, ParameterSet};
use crate::report::{Locus, Status, VerificationReport};
use crate::scalar::{self, Scalar};

pub type Coeff = Arc<dyn Fn(i64) -> Result<Scalar> + Send + Sync>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RelationKind {
    A2,
    B2,
    B2p,
    BiRel,
    GRel,
}

impl RelationKind {
    pub fn code(self) -> &'static str {
        match self {
            RelationKind::A2 => "A2",
            RelationKind::B2 => "B2",
            RelationKind::B2p => "B2p",
            RelationKind::BiRel => "BI",
            RelationKind::GRel => "G",
        }
    }

    pub fn from_code(s: &str) -> Option<RelationKind> {
        Some(match s {
            "A2" => RelationKind::A2,
            "B2" => RelationKind::B2,
            "B2p" | "B2'" => RelationKind::B2p,
            "BI" => RelationKind::BiRel,
            "G" => RelationKind::GRel,
            _ => return None,
        })
    }
}

impl fmt::Display for RelationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Direction {
    Plus,
    Minus,
}

impl Direction {
    pub fn code(self) -> &'static str {
        match self {
            Direction::Plus => "plus",
            Direction::Minus => "minus",
        }
    }
}

#[derive(Clone)]
pub struct Term {
    pub offset: i64,
    pub coeff: Coeff,
}

#[derive(Clone)]
pub struct RelationInstance {
    pub id: String,
    pub kind: RelationKind,
    pub direction: Direction,
    pub src: ParameterSet,
    pub dst: ParameterSet,
    pub step: i64,
    /// Left factor as a function of the source variable.
    pub factor: Coeff,
    pub terms: Vec<Term>,
}

impl fmt::Debug for RelationInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RelationInstance")
            .field("id", &self.id)
            .field("kind", &self.kind)
            .field("direction", &self.direction)
            .field("src", &self.src)
            .field("dst", &self.dst)
            .field("step", &self.step)
            .field("offsets", &self.offsets())
            .finish()
    }
}

pub fn coeff<F>(f: F) -> Coeff
where
    F: Fn(i64) -> Result<Scalar> + Send + Sync + 'static,
{
    Arc::new(f)
}

pub fn constant(v: Scalar) -> Coeff {
    coeff(move |_| Ok(v.clone()))
}

impl RelationInstance {
    /// `factor(x) R_i(x; ρ) = Σ c_ε(i) R_{i+ε}(x + η; ρ̄)`.
    pub fn plus(
        id: impl Into<String>,
        kind: RelationKind,
        base: ParameterSet,
        bar: ParameterSet,
        eta: i64,
        factor: Coeff,
        terms: Vec<Term>,
    ) -> Self {
        RelationInstance { id: id.into(), kind, direction: Direction::Plus, src: base, dst: bar, step: eta, factor, terms }
    }

    /// `factor(x) R_i(x + η; ρ̄) = Σ c_ε(i) R_{i+ε}(x; ρ)` with `factor` given in `x`.
    pub fn minus(
        id: impl Into<String>,
        kind: RelationKind,
        base: ParameterSet,
        bar: ParameterSet,
        eta: i64,
        factor: Coeff,
        terms: Vec<Term>,
    ) -> Self {
        let shifted = coeff(move |xb| factor(xb - eta));
        RelationInstance { id: id.into(), kind, direction: Direction::Minus, src: bar, dst: base, step: -eta, factor: shifted, terms }
    }

    pub fn offsets(&self) -> Vec<i64> {
        self.terms.iter().map(|t| t.offset).collect()
    }

    pub fn term(&self, offset: i64) -> Option<&Term> {
        self.terms.iter().find(|t| t.offset == offset)
    }

    /// Coefficient of `R_{i+offset}` with the zero convention for negative degrees.
    pub fn coeff_at(&self, offset: i64, i: i64) -> Result<Scalar> {
        if i + offset < 0 {
            return Ok(Scalar::zero());
        }
        match self.term(offset) {
            Some(t) => (t.coeff)(i),
            None => Ok(Scalar::zero()),
        }
    }

    /// The factor as a function of the unbarred variable `x`.
    pub fn factor_at_base(&self, x: i64) -> Result<Scalar> {
        match self.direction {
            Direction::Plus => (self.factor)(x),
            Direction::Minus => (self.factor)(x - self.step),
        }
    }

    /// The `(base, bar, η)` triple of the defining shift.
    pub fn shift_parts(&self) -> (&ParameterSet, &ParameterSet, i64) {
        match self.direction {
            Direction::Plus => (&self.src, &self.dst, self.step),
            Direction::Minus => (&self.dst, &self.src, -self.step),
        }
    }

    /// Degrees `i` for which every referenced degree lies in `[0, min(N_src, N_dst)]`.
    pub fn degree_range(&self) -> Vec<i64> {
        let top = self.src.n_i64().min(self.dst.n_i64());
        let max_off = self.terms.iter().map(|t| t.offset).max().unwrap_or(0).max(0);
        (0..=top - max_off).collect()
    }

    /// Source grid points whose image also lies on the destination grid.
    pub fn grid(&self) -> Vec<i64> {
        (0..=self.src.n_i64()).filter(|s| (0..=self.dst.n_i64()).contains(&(s + self.step))).collect()
    }

    /// Same relation with one coefficient replaced by `2×` itself.
    pub fn perturbed(&self, offset: i64) -> RelationInstance {
        let mut out = self.clone();
        if offset == i64::MIN {
            let f = self.factor.clone();
            out.factor = coeff(move |x| Ok(f(x)? * scalar::int(2)));
        } else if let Some(t) = out.terms.iter_mut().find(|t| t.offset == offset) {
            let c = t.coeff.clone();
            t.coeff = coeff(move |i| Ok(c(i)? * scalar::int(2)));
        }
        out.id = format!("{}*2[{}]", self.id, if offset == i64::MIN { "factor".to_string() } else { format!("{offset:+}") });
        out
    }
}

/// Polynomial values on a parameter set, computed once.
pub struct PolyCache {
    table: Vec<Vec<Scalar>>,
}

impl PolyCache {
    pub fn new(params: &ParameterSet) -> Result<Self> {
        Ok(PolyCache { table: families::poly_table(params)? })
    }

    pub fn get(&self, i: i64, x: i64) -> Option<&Scalar> {
        self.table.get(usize::try_from(i).ok()?)?.get(usize::try_from(x).ok()?)
    }
}

/// Evaluates `LHS - RHS` at every grid point and every degree in range.
pub fn verify_relation(rel: &RelationInstance) -> VerificationReport {
    let mut rep = VerificationReport::new(rel.id.clone(), Vec::from([rel.src.clone(), rel.dst.clone()]));
    let caches = PolyCache::new(&rel.src).and_then(|s| Ok((s, PolyCache::new(&rel.dst)?)));
    let (src, dst) = match caches {
        Ok(c) => c,
        Err(e) => return rep.with_status(Status::NotApplicable, e.to_string()),
    };
    verify_with(rel, &src, &dst, &mut rep);
    rep
}

pub fn verify_with(rel: &RelationInstance, src: &PolyCache, dst: &PolyCache, rep: &mut VerificationReport) {
    let grid = rel.grid();
    let mut first_err: Option<String> = None;
    let mut fail = |rep: &mut VerificationReport, at: Locus, e: Error| {
        rep.record(false, at);
        first_err.get_or_insert_with(|| format!("i={} x={:?}: {e}", at.i, at.x));
    };
    let factors: Vec<Result<Scalar>> = grid.iter().map(|&s| (rel.factor)(s)).collect();
    for i in rel.degree_range() {
        let mut coeffs = Vec::new();
        let mut bad = None;
        for t in &rel.terms {
            if i + t.offset < 0 {
                continue;
            }
            match (t.coeff)(i) {
                Ok(c) => coeffs.push((i + t.offset, c)),
                Err(e) => bad = Some(e),
            }
        }
        if let Some(e) = bad {
            fail(rep, Locus { i, x: None }, e);
            continue;
        }
        for (s, f) in grid.iter().zip(&factors) {
            let at = Locus { i, x: Some(*s) };
            let f = match f {
                Ok(f) => f,
                Err(e) => {
                    fail(rep, at, e.clone());
                    continue;
                }
            };
            let lhs = f * src.get(i, *s).expect("grid");
            let rhs = coeffs.iter().fold(Scalar::zero(), |acc, (d, c)| acc + c * dst.get(*d, s + rel.step).expect("grid"));
            rep.record(lhs == rhs, at);
        }
    }
    if rep.checked == 0 {
        rep.status = Status::NotApplicable;
        rep.detail = "empty grid".into();
    } else if let Some(e) = first_err {
        rep.detail = e;
    }
}

/// Every quantity of a relation flattened in a fixed order: factor on the
/// grid, then coefficients by (offset, degree).
fn flatten(rel: &RelationInstance, degrees: &[i64], offsets: &[i64]) -> Result<Vec<Scalar>> {
    let mut out = Vec::new();
    for s in rel.grid() {
        out.push((rel.factor)(s)?);
    }
    for &o in offsets {
        for &i in degrees {
            out.push(rel.coeff_at(o, i)?);
        }
    }
    Ok(out)
}

/// `a = k b` for one nonzero `k`, checked by cross-multiplication against a pivot.
pub fn proportional(a: &[Scalar], b: &[Scalar]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let Some(p) = a.iter().position(|v| !v.is_zero()) else {
        return false;
    };
    if b[p].is_zero() {
        return false;
    }
    a.iter().zip(b).all(|(x, y)| x * &b[p] == &a[p] * y)
}

/// Whether two relations on the same grid agree up to one global scalar.
pub fn same_up_to_scale(r1: &RelationInstance, r2: &RelationInstance) -> Result<bool> {
    if r1.src != r2.src || r1.dst != r2.dst || r1.step != r2.step {
        return Ok(false);
    }
    let mut offsets: Vec<i64> = r1.offsets();
    offsets.extend(r2.offsets());
    offsets.sort_unstable();
    offsets.dedup();
    let degrees = r1.degree_range();
    let degrees2 = r2.degree_range();
    let degrees: Vec<i64> = degrees.into_iter().filter(|d| degrees2.contains(d)).collect();
    Ok(proportional(&flatten(r1, &degrees, &offsets)?, &flatten(r2, &degrees, &offsets)?))
}

/// Chains `rel1: src → mid` with `rel2: mid → dst`.
///
/// The composite coefficient of offset `s` is `Σ_{ε+δ=s} c1_ε(i) c2_δ(i+ε)`
/// and the factor is `f1(s) f2(s + step1)`.
pub fn compose(rel1: &RelationInstance, rel2: &RelationInstance, kind: RelationKind, id: impl Into<String>) -> Result<RelationInstance> {
    if rel1.dst != rel2.src {
        return Err(Error::IncompatibleShifts(format!("{} ends at {} but {} starts at {}", rel1.id, rel1.dst, rel2.id, rel2.src)));
    }
    let mut grouped: BTreeMap<i64, Vec<(i64, Coeff, Coeff)>> = BTreeMap::new();
    for t1 in &rel1.terms {
        for t2 in &rel2.terms {
            grouped.entry(t1.offset + t2.offset).or_default().push((t1.offset, t1.coeff.clone(), t2.coeff.clone()));
        }
    }
    let terms = grouped
        .into_iter()
        .map(|(offset, parts)| {
            let c = coeff(move |i| {
                let mut acc = Scalar::zero();
                for (e1, c1, c2) in &parts {
                    let mid = i + e1;
                    if mid < 0 || mid + (offset - e1) < 0 {
                        continue;
                    }
                    acc += c1(i)? * c2(mid)?;
                }
                Ok(acc)
            });
            Term { offset, coeff: c }
        })
        .collect();
    let (f1, f2, step1) = (rel1.factor.clone(), rel2.factor.clone(), rel1.step);
    Ok(RelationInstance {
        id: id.into(),
        kind,
        direction: rel1.direction,
        src: rel1.src.clone(),
        dst: rel2.dst.clone(),
        step: rel1.step + rel2.step,
        factor: coeff(move |s| Ok(f1(s)? * f2(s + step1)?)),
        terms,
    })
}

/// B2 relation from an A2 plus relation `ρ → ρ̄` and an A2 minus relation
/// whose barred side is `ρ̄`.
pub fn compose_a2_to_b2(rel_plus: &RelationInstance, rel_minus: &RelationInstance) -> Result<RelationInstance> {
    if rel_plus.direction != Direction::Plus || rel_minus.direction != Direction::Minus {
        return Err(Error::IncompatibleShifts("B2 composition takes a plus and a minus relation".into()));
    }
    compose(rel_plus, rel_minus, RelationKind::B2, format!("{}∘{}", rel_plus.id, rel_minus.id))
}

/// B2' relation from two A2 plus relations `ρ → ρ̄ → ρ̃`.
pub fn compose_a2_to_b2p(rel_plus_1: &RelationInstance, rel_plus_2: &RelationInstance) -> Result<RelationInstance> {
    if rel_plus_1.direction != Direction::Plus || rel_plus_2.direction != Direction::Plus {
        return Err(Error::IncompatibleShifts("B2' composition takes two plus relations".into()));
    }
    compose(rel_plus_1, rel_plus_2, RelationKind::B2p, format!("{}∘{}", rel_plus_1.id, rel_plus_2.id))
}

/// The three-term recurrence `λ_x R_i = A_i R_{i+1} - (A_i + C_i) R_i + C_i R_{i-1}` as a relation.
pub fn recurrence_relation(params: &ParameterSet) -> RelationInstance {
    let p = params.clone();
    let (pa, pc, py) = (p.clone(), p.clone(), p.clone());
    let lam = p.clone();
    RelationInstance::plus(
        "recurrence",
        RelationKind::B2,
        p.clone(),
        p,
        0,
        coeff(move |x| lambda(&lam, x)),
        Vec::from([
            Term { offset: 1, coeff: coeff(move |i| Ok(recurrence_coeffs(&pa, i)?.a)) },
            Term { offset: 0, coeff: coeff(move |i| Ok(recurrence_coeffs(&py, i)?.y())) },
            Term { offset: -1, coeff: coeff(move |i| Ok(recurrence_coeffs(&pc, i)?.c)) },
        ]),
    )
}

/// Whether a relation `ρ → ρ` is `k·(recurrence) + m·(identity)` for constants `k ≠ 0`, `m`,
/// the form any relation with factor affine in `λ_x` must take.
pub fn matches_recurrence(rel: &RelationInstance) -> Result<bool> {
    let p = &rel.src;
    if rel.dst != *p || rel.step != 0 {
        return Ok(false);
    }
    if rel.offsets().iter().any(|o| o.abs() > 1) {
        return Ok(false);
    }
    let degrees = rel.degree_range();
    let Some(&i0) = degrees.first() else {
        return Ok(false);
    };
    let k = singular(&rel.coeff_at(1, i0)?, &recurrence_coeffs(p, i0)?.a, "A_i")?;
    if k.is_zero() {
        return Ok(false);
    }
    let m = (rel.factor)(0)? - &k * lambda(p, 0)?;
    for x in rel.grid() {
        if (rel.factor)(x)? != &k * lambda(p, x)? + &m {
            return Ok(false);
        }
    }
    for i in degrees {
        let rc = recurrence_coeffs(p, i)?;
        let ok = rel.coeff_at(1, i)? == &k * &rc.a
            && rel.coeff_at(0, i)? == &k * rc.y() + &m
            && rel.coeff_at(-1, i)? == if i == 0 { Scalar::zero() } else { &k * &rc.c };
        if !ok {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Recurrence data of both sides of a shift, used by the generic coefficient formulas.
#[derive(Clone)]
struct Pair {
    r: ParameterSet,
    b: ParameterSet,
    z: Scalar,
    xi: Scalar,
}

impl Pair {
    fn new(s: &ShiftMap) -> Self {
        Pair { r: s.base.clone(), b: s.bar.clone(), z: s.zeta.clone(), xi: s.xi.clone() }
    }
    fn a(&self, k: i64) -> Result<Scalar> {
        Ok(recurrence_coeffs(&self.r, k)?.a)
    }
    fn ab(&self, k: i64) -> Result<Scalar> {
        Ok(recurrence_coeffs(&self.b, k)?.a)
    }
    fn c(&self, k: i64) -> Result<Scalar> {
        Ok(recurrence_coeffs(&self.r, k)?.c)
    }
    fn cb(&self, k: i64) -> Result<Scalar> {
        Ok(recurrence_coeffs(&self.b, k)?.c)
    }
    fn x(&self, k: i64) -> Result<Scalar> {
        families::x_coeff(&self.r, k)
    }
    fn xb(&self, k: i64) -> Result<Scalar> {
        families::x_coeff(&self.b, k)
    }
    fn y(&self, k: i64) -> Result<Scalar> {
        if k < 0 {
            return Ok(Scalar::zero());
        }
        families::y_coeff(&self.r, k)
    }
    fn yb(&self, k: i64) -> Result<Scalar> {
        if k < 0 {
            return Ok(Scalar::zero());
        }
        families::y_coeff(&self.b, k)
    }
    fn zp(&self, e: i64) -> Result<Scalar> {
        scalar::powi(&self.z, e)
    }
    fn z2(&self) -> Scalar {
        &self.z * &self.z
    }
    fn lam(&self, x: i64) -> Result<Scalar> {
        lambda(&self.r, x)
    }
    /// `∏_{k=lo}^{hi} num(k)/den(k)`.
    fn prod(&self, lo: i64, hi: i64, num: impl Fn(i64) -> Result<Scalar>, den: impl Fn(i64) -> Result<Scalar>) -> Result<Scalar> {
        let mut acc = Scalar::one();
        for k in lo..=hi {
            acc = singular(&(acc * num(k)?), &den(k)?, "product")?;
        }
        Ok(acc)
    }
    // ξ + Y_k - ζȲ_k
    fn d(&self, k: i64) -> Result<Scalar> {
        Ok(&self.xi + self.y(k)? - &self.z * self.yb(k)?)
    }
    // ζȲ_{k-1} - Y_k - ξ
    fn e(&self, k: i64) -> Result<Scalar> {
        Ok(&self.z * self.yb(k - 1)? - self.y(k)? - &self.xi)
    }
}

fn singular(a: &Scalar, b: &Scalar, what: &str) -> Result<Scalar> {
    if b.is_zero() {
        return Err(Error::SingularParameters(format!("vanishing {what}")));
    }
    Ok(a / b)
}

fn vanishing(a: &Scalar, b: &Scalar, what: &str) -> Result<Scalar> {
    if b.is_zero() {
        return Err(Error::DenominatorVanishes(what.to_string()));
    }
    Ok(a / b)
}

fn shared<T: Send + Sync + 'static>(v: T) -> Arc<T> {
    Arc::new(v)
}

fn plus_instance(id: &str, kind: RelationKind, s: &ShiftMap, factor: Coeff, terms: Vec<Term>) -> RelationInstance {
    RelationInstance::plus(id, kind, s.base.clone(), s.bar.clone(), s.eta(), factor, terms)
}

fn minus_instance(id: &str, kind: RelationKind, s: &ShiftMap, factor: Coeff, terms: Vec<Term>) -> RelationInstance {
    RelationInstance::minus(id, kind, s.base.clone(), s.bar.clone(), s.eta(), factor, terms)
}

// ---- A2 ----

fn a2_phi0_plus(p: &Pair, i: i64) -> Result<Scalar> {
    Ok(p.zp(i)? * p.prod(0, i - 1, |k| p.ab(k), |k| p.a(k))?)
}

fn a2_phim1_plus(p: &Pair, i: i64) -> Result<Scalar> {
    if i < 1 {
        return Ok(Scalar::zero());
    }
    let lead = Scalar::one() - singular(&(&p.z * p.ab(0)? + &p.xi), &p.a(0)?, "A_0")?;
    Ok(p.zp(1 - i)? * lead * p.prod(1, i - 1, |k| p.c(k + 1), |k| p.cb(k))?)
}

fn a2_lambda_minus(p: &Pair, x: i64) -> Result<Scalar> {
    let a0 = p.a(0)?;
    let g = &a0 - &p.z * p.ab(0)? - &p.xi;
    Ok(g * (singular(&p.lam(x)?, &a0, "A_0")? + Scalar::one()) + p.c(1)?)
}

fn a2_phi1_minus(p: &Pair, i: i64) -> Result<Scalar> {
    let g = p.a(0)? - &p.z * p.ab(0)? - &p.xi;
    Ok(g * p.zp(-i)? * p.prod(1, i, |k| p.a(k), |k| p.ab(k - 1))?)
}

fn a2_phi0_minus(p: &Pair, i: i64) -> Result<Scalar> {
    Ok(p.zp(i)? * p.c(1)? * p.prod(1, i, |k| p.cb(k), |k| p.c(k))?)
}

/// `(λ^+, Φ_i^{0,+}, Φ_i^{-1,+})` of the generic A2 plus relation.
pub fn a2_plus_coeffs(shift: &ShiftMap, i: i64) -> Result<(Scalar, Scalar, Scalar)> {
    let p = Pair::new(shift);
    Ok((Scalar::one(), a2_phi0_plus(&p, i)?, a2_phim1_plus(&p, i)?))
}

/// `(λ^-(x), Φ_i^{1,-}, Φ_i^{0,-})` of the generic A2 minus relation.
pub fn a2_minus_coeffs(shift: &ShiftMap, i: i64, x: i64) -> Result<(Scalar, Scalar, Scalar)> {
    let p = Pair::new(shift);
    Ok((a2_lambda_minus(&p, x)?, a2_phi1_minus(&p, i)?, a2_phi0_minus(&p, i)?))
}

pub fn a2_plus(shift: &ShiftMap, id: &str) -> RelationInstance {
    let p = shared(Pair::new(shift));
    let (p0, p1) = (p.clone(), p.clone());
    plus_instance(
        id,
        RelationKind::A2,
        shift,
        constant(Scalar::one()),
        Vec::from([
            Term { offset: 0, coeff: coeff(move |i| a2_phi0_plus(&p0, i)) },
            Term { offset: -1, coeff: coeff(move |i| a2_phim1_plus(&p1, i)) },
        ]),
    )
}

pub fn a2_minus(shift: &ShiftMap, id: &str) -> RelationInstance {
    let p = shared(Pair::new(shift));
    let (pl, p0, p1) = (p.clone(), p.clone(), p.clone());
    minus_instance(
        id,
        RelationKind::A2,
        shift,
        coeff(move |x| a2_lambda_minus(&pl, x)),
        Vec::from([
            Term { offset: 1, coeff: coeff(move |i| a2_phi1_minus(&p1, i)) },
            Term { offset: 0, coeff: coeff(move |i| a2_phi0_minus(&p0, i)) },
        ]),
    )
}

// ---- B2 ----

struct B2Plus {
    p: Pair,
    phim1_1: Scalar,
    lam_const: Scalar,
}

impl B2Plus {
    fn new(p: Pair) -> Result<Self> {
        let z2 = p.z2();
        let (d0, d1) = (p.d(0)?, p.d(1)?);
        let n1 = vanishing(&(&z2 * p.xb(1)?), &d0, "ξ + Y_0 - ζȲ_0")?
            - vanishing(&(&z2 * p.xb(2)? - p.x(1)?), &d1, "ξ + Y_1 - ζȲ_1")?
            + &p.z * p.yb(1)?
            - p.y(0)?
            - &p.xi;
        let k = vanishing(&(&z2 * p.xb(1)? - p.x(2)?), &(&z2 * p.xb(1)? * &d1), "ζ²X̄_1 (ξ + Y_1 - ζȲ_1)")?
            + vanishing(&Scalar::one(), &d0, "ξ + Y_0 - ζȲ_0")?;
        let phim1_1 = vanishing(&n1, &(p.zp(1)? * p.a(0)? * p.ab(0)? * k), "Φ_1^{-1,+} denominator")?;
        let g = &p.xi + &p.z * p.ab(0)? - p.a(0)?;
        let za0 = &p.z * p.ab(0)?;
        let m = vanishing(&(&g * (&z2 * p.xb(1)? - p.x(2)?)), &(&p.z * p.cb(1)? * &d1), "ζC̄_1 (ξ + Y_1 - ζȲ_1)")? + &za0;
        let lam_const = Scalar::one() + vanishing(&(&p.z * p.cb(1)?), &g, "ξ + ζĀ_0 - A_0")?
            - vanishing(&n1, &m, "λ^+ inner denominator")?;
        Ok(B2Plus { p, phim1_1, lam_const })
    }

    fn lambda(&self, x: i64) -> Result<Scalar> {
        let p = &self.p;
        Ok(&self.lam_const + singular(&(p.lam(x)? + &p.xi), &(&p.z * p.ab(0)?), "ζĀ_0")?)
    }

    fn phi1(&self, i: i64) -> Result<Scalar> {
        let p = &self.p;
        Ok(p.zp(i)? * p.prod(1, i, |k| p.ab(k), |k| p.a(k - 1))?)
    }

    fn phim1(&self, i: i64) -> Result<Scalar> {
        if i < 1 {
            return Ok(Scalar::zero());
        }
        let p = &self.p;
        Ok(p.zp(1 - i)? * &self.phim1_1 * p.prod(1, i - 1, |k| p.c(k + 1), |k| p.cb(k))?)
    }

    fn phi0(&self, i: i64) -> Result<Scalar> {
        let p = &self.p;
        let d = p.d(i)?;
        let t1 = singular(&(p.z2() * p.xb(i + 1)? - p.x(i)?), &(&p.z * p.ab(i)? * &d), "ζĀ_i D_i")? * self.phi1(i)?;
        let t2 = singular(&(p.z2() * p.xb(i)? - p.x(i + 1)?), &(p.c(i + 1)? * &d), "C_{i+1} D_i")? * self.phim1(i + 1)?;
        Ok(t1 + t2)
    }
}

struct B2Minus {
    p: Pair,
    phim1_1: Scalar,
    lam_const: Scalar,
}

impl B2Minus {
    fn new(p: Pair) -> Result<Self> {
        let z2 = p.z2();
        // ζȲ_k - Y_k - ξ
        let e0 = -p.d(0)?;
        let e1 = -p.d(1)?;
        let m1 = vanishing(&p.x(1)?, &e0, "ζȲ_0 - Y_0 - ξ")?
            - vanishing(&(p.x(2)? - &z2 * p.xb(1)?), &e1, "ζȲ_1 - Y_1 - ξ")?
            + p.y(1)?
            - &p.z * p.yb(0)?
            + &p.xi;
        let k = vanishing(&(p.x(1)? - &z2 * p.xb(2)?), &(p.x(1)? * &e1), "X_1 (ζȲ_1 - Y_1 - ξ)")?
            + vanishing(&Scalar::one(), &e0, "ζȲ_0 - Y_0 - ξ")?;
        // Φ_i^{-1,-} carries ζ^{i-2}; this is the power forced by the i = 0 relation.
        let phim1_1 = vanishing(&m1, &(&p.z * p.ab(0)? * p.a(0)? * k), "Φ_1^{-1,-} denominator")?;
        let g = p.a(0)? - &p.z * p.ab(0)? - &p.xi;
        let m = vanishing(&(&g * (p.x(1)? - &z2 * p.xb(2)?)), &(p.c(1)? * &e1), "C_1 (ζȲ_1 - Y_1 - ξ)")? + p.a(0)?;
        let lam_const = Scalar::one() + vanishing(&p.c(1)?, &g, "A_0 - ζĀ_0 - ξ")? - vanishing(&m1, &m, "λ^- inner denominator")?;
        Ok(B2Minus { p, phim1_1, lam_const })
    }

    fn lambda(&self, x: i64) -> Result<Scalar> {
        Ok(&self.lam_const + singular(&self.p.lam(x)?, &self.p.a(0)?, "A_0")?)
    }

    fn phi1(&self, i: i64) -> Result<Scalar> {
        let p = &self.p;
        Ok(p.zp(-i)? * p.prod(1, i, |k| p.a(k), |k| p.ab(k - 1))?)
    }

    fn phim1(&self, i: i64) -> Result<Scalar> {
        if i < 1 {
            return Ok(Scalar::zero());
        }
        let p = &self.p;
        Ok(p.zp(i - 1)? * &self.phim1_1 * p.prod(1, i - 1, |k| p.cb(k + 1), |k| p.c(k))?)
    }

    fn phi0(&self, i: i64) -> Result<Scalar> {
        let p = &self.p;
        let e = -p.d(i)?;
        let t1 = singular(&(p.x(i + 1)? - p.z2() * p.xb(i)?), &(p.a(i)? * &e), "A_i E_i")? * self.phi1(i)?;
        let t2 = singular(&(p.x(i)? - p.z2() * p.xb(i + 1)?), &(&p.z * p.cb(i + 1)? * &e), "ζC̄_{i+1} E_i")? * self.phim1(i + 1)?;
        Ok(t1 + t2)
    }
}

/// `(λ^±(x), Φ^{1}, Φ^{0}, Φ^{-1})` of the generic B2 relation.
pub fn b2_coeffs(shift: &ShiftMap, direction: Direction, i: i64, x: i64) -> Result<(Scalar, Scalar, Scalar, Scalar)> {
    let p = Pair::new(shift);
    match direction {
        Direction::Plus => {
            let b = B2Plus::new(p)?;
            Ok((b.lambda(x)?, b.phi1(i)?, b.phi0(i)?, b.phim1(i)?))
        }
        Direction::Minus => {
            let b = B2Minus::new(p)?;
            Ok((b.lambda(x)?, b.phi1(i)?, b.phi0(i)?, b.phim1(i)?))
        }
    }
}

pub fn b2_relation(shift: &ShiftMap, direction: Direction, id: &str) -> Result<RelationInstance> {
    let p = Pair::new(shift);
    Ok(match direction {
        Direction::Plus => {
            let b = shared(B2Plus::new(p)?);
            let (bl, b1, b0, bm) = (b.clone(), b.clone(), b.clone(), b);
            plus_instance(
                id,
                RelationKind::B2,
                shift,
                coeff(move |x| bl.lambda(x)),
                Vec::from([
                    Term { offset: 1, coeff: coeff(move |i| b1.phi1(i)) },
                    Term { offset: 0, coeff: coeff(move |i| b0.phi0(i)) },
                    Term { offset: -1, coeff: coeff(move |i| bm.phim1(i)) },
                ]),
            )
        }
        Direction::Minus => {
            let b = shared(B2Minus::new(p)?);
            let (bl, b1, b0, bm) = (b.clone(), b.clone(), b.clone(), b);
            minus_instance(
                id,
                RelationKind::B2,
                shift,
                coeff(move |x| bl.lambda(x)),
                Vec::from([
                    Term { offset: 1, coeff: coeff(move |i| b1.phi1(i)) },
                    Term { offset: 0, coeff: coeff(move |i| b0.phi0(i)) },
                    Term { offset: -1, coeff: coeff(move |i| bm.phim1(i)) },
                ]),
            )
        }
    })
}

// ---- B2' ----

struct B2pPlus {
    p: Pair,
    phim2_2: Scalar,
}

impl B2pPlus {
    fn new(p: Pair) -> Result<Self> {
        let k = b2p_k(&p)?;
        let phim2_2 = singular(&k, &(p.a(0)? * p.a(1)?), "A_0 A_1")?;
        Ok(B2pPlus { p, phim2_2 })
    }

    fn phi0(&self, i: i64) -> Result<Scalar> {
        let p = &self.p;
        Ok(p.zp(i)? * p.prod(0, i - 1, |k| p.ab(k), |k| p.a(k))?)
    }

    fn phim2(&self, i: i64) -> Result<Scalar> {
        if i < 2 {
            return Ok(Scalar::zero());
        }
        let p = &self.p;
        Ok(p.zp(2 - i)? * &self.phim2_2 * p.prod(1, i - 2, |k| p.c(k + 2), |k| p.cb(k))?)
    }

    fn phim1(&self, i: i64) -> Result<Scalar> {
        if i < 1 {
            return Ok(Scalar::zero());
        }
        let p = &self.p;
        let e = p.e(i)?;
        let t1 = singular(&(p.x(i)? - p.z2() * p.xb(i)?), &(&p.z * p.ab(i - 1)? * &e), "ζĀ_{i-1} E_i")? * self.phi0(i)?;
        let t2 = singular(&(p.x(i + 1)? - p.z2() * p.xb(i - 1)?), &(p.c(i + 1)? * &e), "C_{i+1} E_i")? * self.phim2(i + 1)?;
        Ok(t1 + t2)
    }
}

// (Y_0 + ξ - ζȲ_0)(Y_1 + ξ - ζȲ_0) + ζ²X̄_1 - X_1
fn b2p_k(p: &Pair) -> Result<Scalar> {
    let zy0 = &p.z * p.yb(0)?;
    Ok((p.y(0)? + &p.xi - &zy0) * (p.y(1)? + &p.xi - &zy0) + p.z2() * p.xb(1)? - p.x(1)?)
}

struct B2pMinus {
    p: Pair,
    phi2_0: Scalar,
}

impl B2pMinus {
    fn new(p: Pair) -> Result<Self> {
        let phi2_0 = singular(&b2p_k(&p)?, &(p.c(1)? * p.c(2)?), "C_1 C_2")?;
        Ok(B2pMinus { p, phi2_0 })
    }

    /// `λ^- = Φ_0^{0,-} + Φ_0^{1,-} R_1(x) + Φ_0^{2,-} R_2(x)`, written out.
    fn lambda(&self, x: i64) -> Result<Scalar> {
        let p = &self.p;
        let l = p.lam(x)? - p.y(0)?;
        let x1 = p.x(1)?;
        let first = Scalar::one() + singular(&((&p.z * p.yb(0)? - p.y(0)? - &p.xi) * &l), &x1, "X_1")?;
        let second = singular(&(&l * (p.lam(x)? - p.y(1)?) - &x1), &x1, "X_1")? * singular(&b2p_k(p)?, &p.x(2)?, "X_2")?;
        Ok(first + second)
    }

    fn phi0(&self, i: i64) -> Result<Scalar> {
        let p = &self.p;
        Ok(p.zp(i)? * p.prod(1, i, |k| p.cb(k), |k| p.c(k))?)
    }

    fn phi2(&self, i: i64) -> Result<Scalar> {
        let p = &self.p;
        Ok(p.zp(-i)? * &self.phi2_0 * p.prod(0, i - 1, |n| p.a(n + 2), |n| p.ab(n))?)
    }

    fn phi1(&self, i: i64) -> Result<Scalar> {
        let p = &self.p;
        let e = p.e(i + 1)?;
        let t1 = singular(&(p.x(i + 1)? - p.z2() * p.xb(i + 1)?), &(p.c(i + 1)? * &e), "C_{i+1} E_{i+1}")? * self.phi0(i)?;
        let t2 = singular(&(p.x(i + 2)? - p.z2() * p.xb(i)?), &(p.a(i + 1)? * &e), "A_{i+1} E_{i+1}")? * self.phi2(i)?;
        Ok(t1 + t2)
    }
}

/// Coefficients of the generic B2' relation: plus gives
/// `(1, Φ^{0}, Φ^{-1}, Φ^{-2})`, minus gives `(λ^-(x), Φ^{0}, Φ^{1}, Φ^{2})`.
pub fn b2p_coeffs(shift: &ShiftMap, direction: Direction, i: i64, x: i64) -> Result<(Scalar, Scalar, Scalar, Scalar)> {
    let p = Pair::new(shift);
    match direction {
        Direction::Plus => {
            let b = B2pPlus::new(p)?;
            Ok((Scalar::one(), b.phi0(i)?, b.phim1(i)?, b.phim2(i)?))
        }
        Direction::Minus => {
            let b = B2pMinus::new(p)?;
            Ok((b.lambda(x)?, b.phi0(i)?, b.phi1(i)?, b.phi2(i)?))
        }
    }
}

pub fn b2p_relation(shift: &ShiftMap, direction: Direction, id: &str) -> Result<RelationInstance> {
    let p = Pair::new(shift);
    Ok(match direction {
        Direction::Plus => {
            let b = shared(B2pPlus::new(p)?);
            let (b0, b1, b2) = (b.clone(), b.clone(), b);
            plus_instance(
                id,
                RelationKind::B2p,
                shift,
                constant(Scalar::one()),
                Vec::from([
                    Term { offset: 0, coeff: coeff(move |i| b0.phi0(i)) },
                    Term { offset: -1, coeff: coeff(move |i| b1.phim1(i)) },
                    Term { offset: -2, coeff: coeff(move |i| b2.phim2(i)) },
                ]),
            )
        }
        Direction::Minus => {
            let b = shared(B2pMinus::new(p)?);
            let (bl, b0, b1, b2) = (b.clone(), b.clone(), b.clone(), b);
            minus_instance(
                id,
                RelationKind::B2p,
                shift,
                coeff(move |x| bl.lambda(x)),
                Vec::from([
                    Term { offset: 0, coeff: coeff(move |i| b0.phi0(i)) },
                    Term { offset: 1, coeff: coeff(move |i| b1.phi1(i)) },
                    Term { offset: 2, coeff: coeff(move |i| b2.phi2(i)) },
                ]),
            )
        }
    })
}

/// Generic relation of the given kind and direction for a shift.
pub fn generic_relation(shift: &ShiftMap, kind: RelationKind, direction: Direction, id: &str) -> Result<RelationInstance> {
    match (kind, direction) {
        (RelationKind::A2, Direction::Plus) => Ok(a2_plus(shift, id)),
        (RelationKind::A2, Direction::Minus) => Ok(a2_minus(shift, id)),
        (RelationKind::B2, d) => b2_relation(shift, d, id),
        (RelationKind::B2p, d) => b2p_relation(shift, d, id),
        (k, _) => Err(Error::Unsupported(format!("no generic coefficients for {k} relations"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constraints::{check_constraints, ConstraintKind, ShiftData};
    use crate::expr::parse;
    use crate::families::{FamilyId, Param};
    use crate::sampling::{sample_admissible, SampleRng};
    use crate::scalar::{int, ratio};

    fn kraw(alpha: Scalar, n: u32) -> ParameterSet {
        ParameterSet::new(FamilyId::Krawtchouk, n).with(Param::Alpha, alpha)
    }

    fn qracah(seed: u64, n: u32) -> ParameterSet {
        sample_admissible(FamilyId::QRacah, n, &mut SampleRng::seeded(seed)).unwrap()
    }

    fn qr_shift(p: &ParameterSet, eta: i64, off: i64, map: &[(Param, &str)]) -> ShiftMap {
        let data = ShiftData::new(eta, off, map.iter().map(|(k, e)| (*k, parse(e).unwrap())).collect());
        ShiftMap::new(p, &data).unwrap()
    }

    fn qri(p: &ParameterSet) -> ShiftMap {
        qr_shift(p, 0, -1, &[(Param::Beta, "beta*q"), (Param::Gamma, "gamma/q")])
    }

    #[test]
    fn a2_degree_zero() {
        let p = qracah(1, 4);
        let s = qri(&p);
        assert_eq!(a2_plus_coeffs(&s, 0).unwrap(), (int(1), int(1), int(0)));
        let (_, phi1, phi0) = a2_minus_coeffs(&s, 0, 0).unwrap();
        let pair = Pair::new(&s);
        assert_eq!(phi1, pair.a(0).unwrap() - &pair.z * pair.ab(0).unwrap() - &pair.xi);
        assert_eq!(phi0, pair.c(1).unwrap());
    }

    #[test]
    fn krawtchouk_ki_values() {
        let k = kraw(ratio(1, 2), 3);
        let s = ShiftMap::new(&k, &ShiftData::new(0, -1, Vec::new())).unwrap();
        let (_, phi0, phim1) = a2_plus_coeffs(&s, 1).unwrap();
        // normalized so that Φ^{0,+} + Φ^{-1,+} = 1 at i = 1
        let total = &phi0 + &phim1;
        assert_eq!((phi0 / &total, phim1 / total), (ratio(2, 3), ratio(1, 3)));
        assert!(verify_relation(&a2_plus(&s, "KI+")).pass());
        assert!(verify_relation(&a2_minus(&s, "KI-")).pass());
    }

    #[test]
    fn identity_minus_is_trivial() {
        let k = kraw(ratio(1, 3), 4);
        let s = ShiftMap::new(&k, &ShiftData::identity()).unwrap();
        let c1 = recurrence_coeffs(&k, 1).unwrap().c;
        for i in 0..4 {
            let (lam, phi1, phi0) = a2_minus_coeffs(&s, i, 2).unwrap();
            assert_eq!((lam, phi1, phi0), (c1.clone(), int(0), c1.clone()));
        }
        assert!(verify_relation(&a2_plus(&s, "id")).pass());
    }

    #[test]
    fn generic_a2_verifies_on_qracah() {
        for seed in 0..3 {
            let p = qracah(seed, 5);
            let s = qri(&p);
            assert!(check_constraints(ConstraintKind::A2, &s).pass());
            let plus = verify_relation(&a2_plus(&s, "qRI+"));
            let minus = verify_relation(&a2_minus(&s, "qRI-"));
            assert!(plus.pass() && minus.pass(), "{plus:?} {minus:?}");
            assert!(plus.checked > 10);
        }
    }

    #[test]
    fn perturbation_is_detected() {
        let p = qracah(4, 4);
        let rel = a2_plus(&qri(&p), "qRI+");
        for off in [0, -1] {
            let rep = verify_relation(&rel.perturbed(off));
            assert_eq!(rep.status, Status::Fail);
            assert!(!rep.residual_locus.is_empty());
        }
    }

    #[test]
    fn plus_then_inverse_minus_is_the_recurrence() {
        let p = qracah(5, 5);
        let s = qri(&p);
        let comp = compose_a2_to_b2(&a2_plus(&s, "qRI+"), &a2_minus(&s, "qRI-")).unwrap();
        assert_eq!(comp.src, p);
        assert_eq!(comp.dst, p);
        assert!(verify_relation(&comp).pass());
        assert!(matches_recurrence(&comp).unwrap());
        assert!(matches_recurrence(&recurrence_relation(&p)).unwrap());
        assert!(!matches_recurrence(&comp.perturbed(1)).unwrap());
    }

    #[test]
    fn identity_composition() {
        let k = kraw(ratio(2, 5), 4);
        let s = ShiftMap::new(&k, &ShiftData::identity()).unwrap();
        let id = a2_plus(&s, "id");
        let comp = compose_a2_to_b2p(&id, &id).unwrap();
        assert!(verify_relation(&comp).pass());
        assert!(same_up_to_scale(&comp, &id).unwrap());
    }

    #[test]
    fn incompatible_composition_rejected() {
        let p = qracah(6, 4);
        let s = qri(&p);
        let err = compose_a2_to_b2p(&a2_plus(&s, "a"), &a2_plus(&s, "b")).unwrap_err();
        assert!(matches!(err, Error::IncompatibleShifts(_)));
    }

    #[test]
    fn proportional_basics() {
        let a = [int(1), int(2), int(0)];
        let b = [int(3), int(6), int(0)];
        assert!(proportional(&a, &b));
        assert!(!proportional(&a, &[int(3), int(5), int(0)]));
        assert!(!proportional(&[int(0)], &[int(0)]));
        assert!(!proportional(&a, &[int(0), int(0), int(0)]));
    }

    fn b2_shifts(p: &ParameterSet) -> [ShiftMap; 2] {
        [
            qr_shift(p, 0, -1, &[(Param::Gamma, "gamma/q")]),
            qr_shift(p, 1, 0, &[(Param::Alpha, "alpha/q"), (Param::Beta, "beta*q"), (Param::Gamma, "gamma/q^2")]),
        ]
    }

    fn b2p_shifts(p: &ParameterSet) -> [ShiftMap; 2] {
        [
            qr_shift(p, 0, -2, &[(Param::Beta, "beta*q^2"), (Param::Gamma, "gamma/q^2")]),
            qr_shift(p, -1, -2, &[(Param::Alpha, "alpha*q"), (Param::Beta, "beta*q")]),
        ]
    }

    #[test]
    fn generic_b2_both_directions() {
        for seed in 10..12 {
            let p = qracah(seed, 6);
            for s in b2_shifts(&p) {
                assert!(check_constraints(ConstraintKind::B2, &s).pass());
                for d in [Direction::Plus, Direction::Minus] {
                    let rep = verify_relation(&b2_relation(&s, d, "b2").unwrap());
                    assert!(rep.pass(), "{d:?} {rep:?}");
                }
                let (_, phi1, _, _) = b2_coeffs(&s, Direction::Plus, 0, 0).unwrap();
                assert_eq!(phi1, int(1));
            }
        }
    }

    #[test]
    fn b2_minus_is_swapped_plus() {
        let p = qracah(12, 5);
        for s in b2_shifts(&p) {
            let minus = b2_relation(&s, Direction::Minus, "m").unwrap();
            let swapped = b2_relation(&s.swapped().unwrap(), Direction::Plus, "p").unwrap();
            assert!(same_up_to_scale(&minus, &swapped).unwrap());
        }
    }

    #[test]
    fn generic_b2p_both_directions() {
        for seed in 20..22 {
            let p = qracah(seed, 7);
            for s in b2p_shifts(&p) {
                assert!(check_constraints(ConstraintKind::B2p, &s).pass());
                for d in [Direction::Plus, Direction::Minus] {
                    let rep = verify_relation(&b2p_relation(&s, d, "b2p").unwrap());
                    assert!(rep.pass(), "{d:?} {rep:?}");
                }
                let (_, phi0, phim1, phim2) = b2p_coeffs(&s, Direction::Plus, 0, 0).unwrap();
                assert_eq!((phi0, phim1, phim2), (int(1), int(0), int(0)));
                assert_eq!(b2p_coeffs(&s, Direction::Plus, 1, 0).unwrap().3, int(0));
            }
        }
    }

    #[test]
    fn a2_shift_makes_b2_denominator_vanish() {
        let p = qracah(30, 5);
        let err = b2_relation(&qri(&p), Direction::Plus, "x").err();
        assert!(matches!(err, Some(Error::DenominatorVanishes(_))), "{err:?}");
    }
}
