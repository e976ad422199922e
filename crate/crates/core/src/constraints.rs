//! Shift maps and the existence conditions for A2, B2 and B2' relations.
//!
//! A shift moves `(x, ρ)` to `(x̄, ρ̄) = (x + η, ρ̄)` and requires
//! `λ_{x,ρ} = ζ λ_{x̄,ρ̄} - ξ` on the grid. The checkers evaluate the pair of
//! expressions that must be equal and independent of `i`.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};

use crate::banita::sign;
use crate::error::{Error, Result};
use crate::expr::{Env, Expr};
use crate::families::{self, lambda, parity, FamilyId, Param, ParameterSet, PointEnv};
use crate::report::{Locus, Status, VerificationReport};
use crate::scalar::{self, int, ratio, Scalar};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ConstraintKind {
    A2,
    B2,
    B2p,
}

impl ConstraintKind {
    pub fn code(self) -> &'static str {
        match self {
            ConstraintKind::A2 => "A2",
            ConstraintKind::B2 => "B2",
            ConstraintKind::B2p => "B2p",
        }
    }
}

impl fmt::Display for ConstraintKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

/// Structural part of a shift: `η`, `N̄ - N` and the changed parameters,
/// each given as an expression in the unbarred parameters.
#[derive(Debug, Clone, PartialEq)]
pub struct ShiftData {
    pub eta: i64,
    pub n_offset: i64,
    pub map: Vec<(Param, Expr)>,
    /// Family of the barred side when it differs (BI ↔ CBI).
    pub bar_family: Option<FamilyId>,
}

impl ShiftData {
    pub fn identity() -> Self {
        ShiftData { eta: 0, n_offset: 0, map: Vec::new(), bar_family: None }
    }

    pub fn new(eta: i64, n_offset: i64, map: Vec<(Param, Expr)>) -> Self {
        ShiftData { eta, n_offset, map, bar_family: None }
    }

    pub fn is_identity(&self) -> bool {
        self.eta == 0
            && self.n_offset == 0
            && self.bar_family.is_none()
            && self.map.iter().all(|(p, e)| *e == Expr::Param(p.var()))
    }

    pub fn expr_for(&self, p: Param) -> Expr {
        self.map
            .iter()
            .find(|(q, _)| *q == p)
            .map(|(_, e)| e.clone())
            .unwrap_or(Expr::Param(p.var()))
    }

    /// `ρ̄` for a given `ρ`.
    pub fn apply(&self, base: &ParameterSet) -> Result<ParameterSet> {
        let n_bar = base.n_i64() + self.n_offset;
        let n_bar = u32::try_from(n_bar)
            .map_err(|_| Error::ShiftConstraint(format!("N̄ = {n_bar} is negative")))?;
        let family = self.bar_family.unwrap_or(base.family);
        let env = PointEnv::new(base);
        let mut bar = ParameterSet::new(family, n_bar);
        for &p in family.params() {
            bar.set(p, self.expr_for(p).eval(&env)?);
        }
        Ok(bar)
    }
}

impl fmt::Display for ShiftData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "eta={}, N_bar=N{:+}", self.eta, self.n_offset)?;
        for (p, e) in &self.map {
            write!(f, ", {}->{}", p.name(), e)?;
        }
        Ok(())
    }
}

/// A shift bound to concrete parameters.
#[derive(Debug, Clone, PartialEq)]
pub struct ShiftMap {
    pub data: ShiftData,
    pub base: ParameterSet,
    pub bar: ParameterSet,
    pub zeta: Scalar,
    pub xi: Scalar,
}

impl ShiftMap {
    pub fn new(base: &ParameterSet, data: &ShiftData) -> Result<Self> {
        let bar = data.apply(base)?;
        let (zeta, xi) = shift_scalars_for(base, &bar, data.eta)?;
        Ok(ShiftMap { data: data.clone(), base: base.clone(), bar, zeta, xi })
    }

    pub fn eta(&self) -> i64 {
        self.data.eta
    }

    /// `(x, ρ) ↔ (x̄, ρ̄)` with `ζ → 1/ζ`, `ξ → -ξ/ζ`.
    pub fn swapped(&self) -> Result<ShiftMap> {
        let zi = scalar::div(&Scalar::one(), &self.zeta, "zeta")?;
        Ok(ShiftMap {
            data: ShiftData { eta: -self.data.eta, n_offset: -self.data.n_offset, map: Vec::new(), bar_family: None },
            base: self.bar.clone(),
            bar: self.base.clone(),
            xi: -&self.xi * &zi,
            zeta: zi,
        })
    }
}

/// `(ζ, ξ)` for a shift of `params` described by `data`.
pub fn shift_scalars(params: &ParameterSet, data: &ShiftData) -> Result<(Scalar, Scalar)> {
    let bar = data.apply(params)?;
    shift_scalars_for(params, &bar, data.eta)
}

fn rule(ok: bool, what: &str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::ShiftConstraint(what.to_string()))
    }
}

/// Per-family `(ζ, ξ)` together with the bar-parameter rule.
pub fn shift_scalars_for(base: &ParameterSet, bar: &ParameterSet, eta: i64) -> Result<(Scalar, Scalar)> {
    use FamilyId::*;
    let fam = base.family;
    if bar.family != fam {
        return Err(Error::Unsupported(format!("λ-matching between {fam} and {}", bar.family)));
    }
    let n = base.n_i64();
    let nb = bar.n_i64();
    let one = Scalar::one;
    let get = |p: &ParameterSet, k: Param| p.get(k).cloned();
    let e_int = int(eta);
    if fam.is_q() {
        let q = base.q()?.clone();
        rule(bar.q()? == &q, "q̄ must equal q")?;
        let qp = |e: i64| scalar::powi(&q, e);
        let zeta = qp(eta)?;
        let lead = one() - &zeta;
        let xi = match fam {
            QRacah | Generalized => {
                let (g, gb) = (get(base, Param::Gamma)?, get(bar, Param::Gamma)?);
                rule(gb == &g * qp(nb - n - 2 * eta)?, "γ̄ = γ q^{N̄-N-2η}")?;
                lead * (one() - &g * qp(-eta - n)?)
            }
            DualQHahn => {
                let ab = get(base, Param::Alpha)? * get(base, Param::Beta)?;
                let abb = get(bar, Param::Alpha)? * get(bar, Param::Beta)?;
                rule(abb == &ab * qp(-2 * eta)?, "ᾱβ̄ = αβ q^{-2η}")?;
                lead * (one() - ab * qp(1 - eta)?)
            }
            DualQKrawtchouk => {
                let a = get(base, Param::Alpha)?;
                rule(get(bar, Param::Alpha)? == &a * qp(-2 * eta)?, "ᾱ = α q^{-2η}")?;
                lead * (one() - a * qp(-eta)?)
            }
            _ => lead,
        };
        return Ok((zeta, xi));
    }
    match fam {
        Racah => {
            let (g, gb) = (get(base, Param::Gamma)?, get(bar, Param::Gamma)?);
            rule(int(2 * eta) == &g - &gb + int(nb - n), "2η = γ - γ̄ + N̄ - N")?;
            Ok((one(), &e_int * (g - int(n) - &e_int)))
        }
        Hahn | Krawtchouk => Ok((one(), -e_int)),
        DualHahn => {
            let s = get(base, Param::Alpha)? + get(base, Param::Beta)?;
            let sb = get(bar, Param::Alpha)? + get(bar, Param::Beta)?;
            rule(&s - sb == int(2 * eta), "α + β - ᾱ - β̄ = 2η")?;
            Ok((one(), &e_int * (s - &e_int + one())))
        }
        BannaiIto => {
            let (g, gb) = (get(base, Param::Gamma)?, get(bar, Param::Gamma)?);
            let (ne, nbe) = (parity(n).0, parity(nb).0);
            rule(gb == &g + int(nbe - ne - eta), "γ̄ = γ + N̄^e - N^e - η")?;
            let zeta = sign(eta);
            let xi = ratio(1, 2) * (one() - &zeta) * (g - int(ne) - ratio(eta + 1, 2));
            Ok((zeta, xi))
        }
        _ => Err(Error::Unsupported(format!("no λ-matching data for {fam}"))),
    }
}

/// `λ_{x,ρ} - ζλ_{x+η,ρ̄} + ξ = 0` for every `x` with both points on their grids.
pub fn check_lambda_matching(shift: &ShiftMap) -> Result<VerificationReport> {
    let mut rep = VerificationReport::new(format!("lambda-match[{}]", shift.data), Vec::from([shift.base.clone(), shift.bar.clone()]));
    let eta = shift.eta();
    for x in 0..=shift.base.n_i64() {
        let xb = x + eta;
        if xb < 0 || xb > shift.bar.n_i64() {
            continue;
        }
        let r = lambda(&shift.base, x)? - &shift.zeta * lambda(&shift.bar, xb)? + &shift.xi;
        rep.record(r.is_zero(), Locus { i: 0, x: Some(x) });
    }
    Ok(rep)
}

/// `X`, `Y` of both sides with the index conventions `X_k = 0` for `k ≤ 0`
/// and `Y_k = 0` for `k < 0`.
pub struct Side<'a> {
    pub params: &'a ParameterSet,
}

impl Side<'_> {
    fn x(&self, k: i64) -> Result<Scalar> {
        families::x_coeff(self.params, k)
    }
    fn y(&self, k: i64) -> Result<Scalar> {
        if k < 0 {
            return Ok(Scalar::zero());
        }
        families::y_coeff(self.params, k)
    }
}

/// `num / den`; a zero numerator gives 0 even when the denominator is out
/// of range, but `0/0` is reported as a vanishing denominator.
fn frac(num: Scalar, den: impl FnOnce() -> Result<Scalar>, what: &str) -> Result<Scalar> {
    if num.is_zero() {
        return match den() {
            Ok(d) if d.is_zero() => Err(Error::DenominatorVanishes(format!("0/0 in {what}"))),
            _ => Ok(num),
        };
    }
    scalar::div(&num, &den()?, what)
}

struct Ctx<'a> {
    r: Side<'a>,
    b: Side<'a>,
    zeta: &'a Scalar,
    xi: &'a Scalar,
}

impl Ctx<'_> {
    fn z2(&self) -> Scalar {
        self.zeta * self.zeta
    }

    fn prod(&self, i: i64) -> Result<Scalar> {
        let mut acc = scalar::powi(self.zeta, 2 * i)?;
        for k in 1..=i {
            acc *= self.b.x(k)?;
            acc = scalar::div(&acc, &self.r.x(k)?, "X_k in product")?;
        }
        Ok(acc)
    }

    fn a2(&self, i: i64) -> Result<(Scalar, Scalar)> {
        let (z, xi, z2) = (self.zeta, self.xi, self.z2());
        let p = self.prod(i)?;
        let e1 = frac(
            z * self.b.y(i)? - self.r.y(i)? - xi,
            || Ok(self.r.x(i + 1)? - &z2 * self.b.x(i)?),
            "A2 first expression",
        )?;
        let e2 = frac(
            self.r.x(i + 1)? - &z2 * self.b.x(i + 1)?,
            || Ok((z * self.b.y(i)? - self.r.y(i + 1)? - xi) * self.r.x(i + 1)?),
            "A2 second expression",
        )?;
        Ok((e1 * &p, e2 * p))
    }

    // D_k = ξ + Y_k - ζȲ_k
    fn d(&self, k: i64) -> Result<Scalar> {
        Ok(self.xi + self.r.y(k)? - self.zeta * self.b.y(k)?)
    }
    // (ζ²X̄_{k+1} - X_k) / D_k
    fn f(&self, k: i64) -> Result<Scalar> {
        frac(&self.z2() * self.b.x(k + 1)? - self.r.x(k)?, || self.d(k), "B2 F")
    }
    // (ζ²X̄_k - X_{k+1}) / D_k
    fn g(&self, k: i64) -> Result<Scalar> {
        frac(&self.z2() * self.b.x(k)? - self.r.x(k + 1)?, || self.d(k), "B2 G")
    }

    fn b2(&self, i: i64) -> Result<(Scalar, Scalar)> {
        let (z, xi, z2) = (self.zeta, self.xi, self.z2());
        let p = self.prod(i)?;
        let num1 = self.f(i)? - self.f(i + 1)? + z * self.b.y(i + 1)? - self.r.y(i)? - xi;
        let den1 = scalar::div(&self.r.x(i + 1)?, &(&z2 * self.b.x(i + 1)?), "B2 X ratio")? * self.g(i + 1)? - self.g(i)?;
        let num2 = self.f(i)? - scalar::div(&(&z2 * self.b.x(i + 1)?), &self.r.x(i + 1)?, "B2 X ratio")? * self.f(i + 1)?;
        let den2 = self.g(i + 1)? - self.g(i)? + z * self.b.y(i)? - self.r.y(i + 1)? - xi;
        Ok((frac(num1, || Ok(den1), "B2 first expression")? * &p, frac(num2, || Ok(den2), "B2 second expression")? * p))
    }

    // E_k = ζȲ_{k-1} - Y_k - ξ
    fn e(&self, k: i64) -> Result<Scalar> {
        Ok(self.zeta * self.b.y(k - 1)? - self.r.y(k)? - self.xi)
    }
    // (X_a - ζ²X̄_b) / E_k
    fn h(&self, a: i64, b: i64, k: i64) -> Result<Scalar> {
        frac(self.r.x(a)? - &self.z2() * self.b.x(b)?, || self.e(k), "B2' H")
    }

    fn b2p(&self, i: i64) -> Result<(Scalar, Scalar)> {
        let (z, xi, z2) = (self.zeta, self.xi, self.z2());
        let p = self.prod(i)?;
        let num1 = self.h(i, i, i)? - self.h(i + 1, i + 1, i + 1)? + z * self.b.y(i)? - self.r.y(i)? - xi;
        let den1 = self.r.x(i + 1)? * self.h(i + 2, i, i + 1)? - &z2 * self.b.x(i)? * self.h(i + 1, i - 1, i)?;
        let num2 = self.h(i + 1, i + 1, i + 1)?
            - scalar::div(&(&z2 * self.b.x(i + 1)?), &self.r.x(i + 2)?, "B2' X ratio")? * self.h(i + 2, i + 2, i + 2)?;
        let den2 = (self.h(i + 3, i + 1, i + 2)? - self.h(i + 2, i, i + 1)? + z * self.b.y(i)? - self.r.y(i + 2)? - xi)
            * self.r.x(i + 1)?;
        Ok((frac(num1, || Ok(den1), "B2' first expression")? * &p, frac(num2, || Ok(den2), "B2' second expression")? * p))
    }
}

/// The pair of expressions of `kind` at index `i`.
pub fn constraint_exprs(
    kind: ConstraintKind,
    base: &ParameterSet,
    bar: &ParameterSet,
    zeta: &Scalar,
    xi: &Scalar,
    i: i64,
) -> Result<(Scalar, Scalar)> {
    let ctx = Ctx { r: Side { params: base }, b: Side { params: bar }, zeta, xi };
    match kind {
        ConstraintKind::A2 => ctx.a2(i),
        ConstraintKind::B2 => ctx.b2(i),
        ConstraintKind::B2p => ctx.b2p(i),
    }
}

pub fn a2_constraint_exprs(shift: &ShiftMap, i: i64) -> Result<(Scalar, Scalar)> {
    constraint_exprs(ConstraintKind::A2, &shift.base, &shift.bar, &shift.zeta, &shift.xi, i)
}

/// Largest index whose expressions only touch `X`, `Y` inside both supports.
pub fn max_index(kind: ConstraintKind, n: i64, n_bar: i64) -> i64 {
    match kind {
        ConstraintKind::A2 => (n - 1).min(n_bar - 1),
        ConstraintKind::B2 => (n - 2).min(n_bar - 2),
        ConstraintKind::B2p => (n - 3).min(n_bar - 2),
    }
}

/// Evaluates both expressions over the usable index range and passes iff
/// all values coincide on at least two indices.
pub fn check_constraints_raw(
    kind: ConstraintKind,
    base: &ParameterSet,
    bar: &ParameterSet,
    zeta: &Scalar,
    xi: &Scalar,
) -> VerificationReport {
    let mut rep = VerificationReport::new(format!("constraints-{kind}"), Vec::from([base.clone(), bar.clone()]));
    let top = max_index(kind, base.n_i64(), bar.n_i64());
    let mut common: Option<Scalar> = None;
    let mut used = 0usize;
    let mut skipped: Vec<String> = Vec::new();
    for i in 0..=top {
        match constraint_exprs(kind, base, bar, zeta, xi, i) {
            Ok((e1, e2)) => {
                used += 1;
                let c = common.get_or_insert_with(|| e1.clone());
                let ok = &e1 == c && &e2 == c;
                rep.record(ok, Locus { i, x: None });
            }
            Err(e) => skipped.push(format!("i={i}: {e}")),
        }
    }
    if rep.status == Status::Pass && used < 2 {
        let why = format!("only {used} usable indices");
        return rep.with_status(Status::Inconclusive, why);
    }
    let mut detail = match &common {
        Some(c) if rep.status == Status::Pass => format!("common value {c}"),
        _ => String::new(),
    };
    if !skipped.is_empty() {
        detail.push_str(&format!("; skipped {}", skipped.join(", ")));
    }
    rep.detail = detail;
    rep
}

pub fn check_constraints(kind: ConstraintKind, shift: &ShiftMap) -> VerificationReport {
    let mut rep = check_constraints_raw(kind, &shift.base, &shift.bar, &shift.zeta, &shift.xi);
    rep.relation_id = format!("constraints-{kind}[{}]", shift.data);
    rep
}

/// Evaluates a shift-map expression against the unbarred parameters.
pub fn eval_in(base: &ParameterSet, e: &Expr) -> Result<Scalar> {
    PointEnv::new(base).var_expr(e)
}

trait VarExpr {
    fn var_expr(&self, e: &Expr) -> Result<Scalar>;
}

impl<T: Env> VarExpr for T {
    fn var_expr(&self, e: &Expr) -> Result<Scalar> {
        e.eval(self)
    }
}
