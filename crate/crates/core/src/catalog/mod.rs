//! Published contiguity relations stored as formula data.
//!
//! Every coefficient is an expression over the unbarred parameters and the
//! degree `i`; left factors are expressions in the grid point `x`. Entries
//! that define one coefficient through its siblings keep that definition
//! (`@lambda`, `@phi_0`, ...) and are resolved at instantiation.

mod a2;
mod bi;
mod generalized;
mod qracah;

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use num_traits::Zero;

use crate::constraints::{ShiftData, ShiftMap};
use crate::contiguity::{coeff, verify_relation, Direction, RelationInstance, RelationKind, Term};
use crate::error::{Error, Result};
use crate::expr::{self, Expr, Var};
use crate::report::{Status, VerificationReport};
use crate::families::{self, FamilyId, Param, ParameterSet, PointEnv, SpectralPoint};
use crate::sampling::{sample_params, SampleRng};
use crate::scalar::Scalar;

/// Which published list an entry belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Group {
    A2List,
    B2Table,
    B2pTable,
    BiCbi,
    Generalized,
}

impl Group {
    pub fn code(self) -> &'static str {
        match self {
            Group::A2List => "a2-list",
            Group::B2Table => "b2-table",
            Group::B2pTable => "b2p-table",
            Group::BiCbi => "bi-cbi",
            Group::Generalized => "generalized",
        }
    }

    pub fn from_code(s: &str) -> Option<Group> {
        [Group::A2List, Group::B2Table, Group::B2pTable, Group::BiCbi, Group::Generalized]
            .into_iter()
            .find(|g| g.code() == s)
    }
}

/// `factor(x) · R_i(...) = Σ terms[ε](i) · R_{i+ε}(...)`.
#[derive(Debug, Clone, PartialEq)]
pub struct Form {
    pub factor: Expr,
    pub terms: Vec<(i64, Expr)>,
}

/// Name under which a sibling coefficient is referenced.
pub fn ref_name(offset: i64) -> String {
    match offset {
        0 => "phi_0".into(),
        o if o > 0 => format!("phi_p{o}"),
        o => format!("phi_m{}", -o),
    }
}

impl Form {
    pub fn parse(factor: &str, terms: &[(i64, &str)]) -> Result<Form> {
        let terms = terms.iter().map(|(o, s)| Ok((*o, expr::parse(s)?))).collect::<Result<Vec<_>>>()?;
        Ok(Form { factor: expr::parse(factor)?, terms })
    }

    pub fn term(&self, offset: i64) -> Option<&Expr> {
        self.terms.iter().find(|(o, _)| *o == offset).map(|(_, e)| e)
    }

    fn lookup(&self, name: &str) -> Option<Expr> {
        if name == "lambda" {
            let zero = Expr::int(0);
            return Some(self.factor.substitute(Var::X, &zero).substitute(Var::XE, &zero).substitute(Var::XP, &zero));
        }
        self.terms.iter().find(|(o, _)| ref_name(*o) == name).map(|(_, e)| e.clone())
    }

    /// Same form with every sibling reference expanded.
    pub fn resolved(&self) -> Result<Form> {
        let expand = |e: &Expr| -> Result<Expr> {
            let mut e = e.clone();
            for _ in 0..6 {
                if !e.has_refs() {
                    return Ok(e);
                }
                e = e.resolve(&|n| self.lookup(n))?;
            }
            Err(Error::Expr(format!("reference cycle in {e}")))
        };
        let terms = self.terms.iter().map(|(o, e)| Ok((*o, expand(e)?))).collect::<Result<Vec<_>>>()?;
        Ok(Form { factor: expand(&self.factor)?, terms })
    }
}

/// Location of the Christoffel/Geronimus parameter `ν`.
#[derive(Debug, Clone, PartialEq)]
pub enum NuSpec {
    /// `ν` is the grid point given by the expression.
    Grid(Expr),
    /// The expression is `q^ν`.
    QPower(Expr),
    /// The expression is `ν` itself (possibly off the grid).
    Value(Expr),
}

#[derive(Debug, Clone, PartialEq)]
pub struct RelationEntry {
    pub id: String,
    pub family: FamilyId,
    pub kind: RelationKind,
    pub group: Group,
    pub shift: ShiftData,
    /// Required value of `N mod 2`, if any.
    pub parity: Option<i64>,
    pub plus: Option<Form>,
    pub minus: Option<Form>,
    pub nu: Option<NuSpec>,
    pub chi: Option<Expr>,
    /// The two A2 entries this B2/B2' entry is composed from.
    pub parts: Option<(String, String)>,
}

impl RelationEntry {
    pub fn bar_family(&self) -> FamilyId {
        self.shift.bar_family.unwrap_or(self.family)
    }

    pub fn form(&self, dir: Direction) -> Option<&Form> {
        match dir {
            Direction::Plus => self.plus.as_ref(),
            Direction::Minus => self.minus.as_ref(),
        }
    }

    pub fn directions(&self) -> Vec<Direction> {
        [Direction::Plus, Direction::Minus].into_iter().filter(|d| self.form(*d).is_some()).collect()
    }

    pub fn parity_ok(&self, n: u32) -> bool {
        self.parity.is_none_or(|p| i64::from(n) % 2 == p)
    }

    /// Smallest `N` for which the shifted side is non-empty and the
    /// relation has at least one degree to test.
    pub fn min_n(&self) -> u32 {
        let need = (-self.shift.n_offset).max(0) + self.shift.eta.abs();
        u32::try_from(need.max(1)).unwrap_or(1)
    }
}

/// An entry bound to concrete parameters.
#[derive(Clone)]
pub struct CatalogInstance {
    pub entry_id: String,
    pub base: ParameterSet,
    pub bar: ParameterSet,
    /// `(ζ, ξ)` data when the family has a spectral shift rule.
    pub shift: Option<ShiftMap>,
    pub plus: Option<RelationInstance>,
    pub minus: Option<RelationInstance>,
    pub nu: Option<SpectralPoint>,
    pub chi: Option<Scalar>,
}

impl CatalogInstance {
    pub fn relation(&self, dir: Direction) -> Option<&RelationInstance> {
        match dir {
            Direction::Plus => self.plus.as_ref(),
            Direction::Minus => self.minus.as_ref(),
        }
    }

    pub fn relations(&self) -> Vec<&RelationInstance> {
        self.plus.iter().chain(self.minus.iter()).collect()
    }
}

/// The full catalog in a fixed order.
pub fn all_entries() -> Vec<RelationEntry> {
    let mut out = a2::entries();
    out.extend(qracah::b2_entries());
    out.extend(qracah::b2p_entries());
    out.extend(bi::entries());
    out.extend(generalized::entries());
    out
}

/// The published list for `(family, kind)`; the identity is never included.
pub fn list_relations(family: FamilyId, kind: RelationKind) -> Vec<RelationEntry> {
    all_entries().into_iter().filter(|e| e.family == family && e.kind == kind).collect()
}

pub fn find(id: &str) -> Result<RelationEntry> {
    all_entries().into_iter().find(|e| e.id == id).ok_or_else(|| Error::UnknownRelation(id.to_string()))
}

/// The trivial relation `R_i(x; ρ) = R_i(x; ρ)` for `family`.
pub fn identity_entry(family: FamilyId) -> RelationEntry {
    let one = Form { factor: Expr::int(1), terms: Vec::from([(0, Expr::int(1))]) };
    RelationEntry {
        id: "identity".into(),
        family,
        kind: RelationKind::A2,
        group: Group::A2List,
        shift: ShiftData::identity(),
        parity: None,
        plus: Some(one.clone()),
        minus: Some(one),
        nu: None,
        chi: None,
        parts: None,
    }
}

fn eval_at(e: &Expr, params: &ParameterSet, i: Option<i64>, x: Option<i64>) -> Result<Scalar> {
    e.eval(&PointEnv { params, i, x })
}

fn bind(form: &Form, base: &ParameterSet) -> Result<(crate::contiguity::Coeff, Vec<Term>)> {
    let form = form.resolved()?;
    let (b, f) = (base.clone(), form.factor.clone());
    let factor = coeff(move |x| eval_at(&f, &b, None, Some(x)));
    let terms = form
        .terms
        .into_iter()
        .map(|(offset, e)| {
            let b = base.clone();
            Term { offset, coeff: coeff(move |i| eval_at(&e, &b, Some(i), None)) }
        })
        .collect();
    Ok((factor, terms))
}

/// Binds `entry` to `params`; see [`check_instance`] for the admissibility test.
pub fn instantiate(entry: &RelationEntry, params: &ParameterSet) -> Result<CatalogInstance> {
    if params.family != entry.family {
        return Err(Error::Unsupported(format!("{} is a {} relation, got {} parameters", entry.id, entry.family, params.family)));
    }
    if !entry.parity_ok(params.n) {
        return Err(Error::SingularParameters(format!("{} needs N ≡ {} mod 2", entry.id, entry.parity.unwrap_or(0))));
    }
    let bar = entry.shift.apply(params)?;
    let shift = if entry.shift.bar_family.is_none() && entry.family.has_recurrence() {
        ShiftMap::new(params, &entry.shift).ok()
    } else {
        None
    };
    let eta = entry.shift.eta;
    let plus = match &entry.plus {
        Some(f) => {
            let (factor, terms) = bind(f, params)?;
            Some(RelationInstance::plus(entry.id.clone(), entry.kind, params.clone(), bar.clone(), eta, factor, terms))
        }
        None => None,
    };
    let minus = match &entry.minus {
        Some(f) => {
            let (factor, terms) = bind(f, params)?;
            Some(RelationInstance::minus(entry.id.clone(), entry.kind, params.clone(), bar.clone(), eta, factor, terms))
        }
        None => None,
    };
    let env = PointEnv::new(params);
    let nu = match &entry.nu {
        Some(NuSpec::Grid(e)) => {
            let v = e.eval(&env)?;
            let k = crate::scalar::to_i64(&v).ok_or_else(|| Error::Expr(format!("grid ν = {v} is not an integer")))?;
            Some(SpectralPoint::Grid(k))
        }
        Some(NuSpec::QPower(e)) => Some(SpectralPoint::QPower(e.eval(&env)?)),
        Some(NuSpec::Value(e)) => Some(SpectralPoint::Value(e.eval(&env)?)),
        None => None,
    };
    let chi = entry.chi.as_ref().map(|e| e.eval(&env)).transpose()?;
    Ok(CatalogInstance { entry_id: entry.id.clone(), base: params.clone(), bar, shift, plus, minus, nu, chi })
}

/// Every coefficient and factor the verifier will touch evaluates without a
/// vanishing denominator, and both sides are admissible.
pub fn check_instance(inst: &CatalogInstance) -> Result<()> {
    let singular = |what: &str, e: Error| Error::SingularParameters(format!("{} {what}: {e}", inst.entry_id));
    families::admissible(&inst.base).map_err(|e| singular("base", e))?;
    families::admissible(&inst.bar).map_err(|e| singular("bar", e))?;
    for rel in inst.relations() {
        for s in rel.grid() {
            (rel.factor)(s).map_err(|e| singular(&format!("factor at x={s}"), e))?;
        }
        for i in rel.degree_range() {
            for t in &rel.terms {
                if i + t.offset >= 0 {
                    (t.coeff)(i).map_err(|e| singular(&format!("Φ^{:+} at i={i}", t.offset), e))?;
                }
            }
        }
    }
    if let Some(SpectralPoint::QPower(v)) | Some(SpectralPoint::Value(v)) = &inst.nu {
        if v.is_zero() && inst.base.family.is_q() {
            return Err(singular("nu", Error::DivisionByZero("q^ν".into())));
        }
    }
    Ok(())
}

/// Draws parameters for `entry` until the instance is admissible.
pub fn sample_instance(entry: &RelationEntry, n: u32, rng: &mut SampleRng) -> Result<CatalogInstance> {
    let mut last = String::from("no draw attempted");
    for _ in 0..64 {
        let p = sample_params(entry.family, n, rng);
        match instantiate(entry, &p).and_then(|inst| check_instance(&inst).map(|_| inst)) {
            Ok(inst) => return Ok(inst),
            Err(e) => last = e.to_string(),
        }
    }
    Err(Error::InsufficientSamples(format!("{} at N={n}: {last}", entry.id)))
}

/// Checks every form of a bound entry; forms with no degree to test at this size are skipped.
pub fn verify_instance(inst: &CatalogInstance) -> VerificationReport {
    let mut rep = VerificationReport::new(inst.entry_id.clone(), Vec::from([inst.base.clone(), inst.bar.clone()]));
    for rel in inst.relations() {
        if rel.degree_range().is_empty() || rel.grid().is_empty() {
            continue;
        }
        rep.absorb(&verify_relation(rel));
    }
    if rep.checked == 0 && rep.pass() {
        rep = rep.with_status(Status::NotApplicable, "no degree to test at this size");
    }
    rep
}

/// Verifies `entry` on `samples` admissible draws at size `n`.
pub fn verify_entry(entry: &RelationEntry, n: u32, samples: usize, rng: &mut SampleRng) -> Result<VerificationReport> {
    let mut rep = VerificationReport::new(entry.id.clone(), Vec::new());
    for _ in 0..samples {
        let inst = sample_instance(entry, n, rng)?;
        rep.params.push(inst.base.clone());
        rep.absorb(&verify_instance(&inst));
    }
    Ok(rep)
}

/// Published limit correspondences between A2 lists.
const CORRESPONDENCE: &[(&str, FamilyId, &str)] = {
    use FamilyId::*;
    &[
        ("qRI", QHahn, "qHIV"),
        ("qRII", QHahn, "qHIII"),
        ("qRIII", QHahn, "qHII"),
        ("qRIV", QHahn, "qHI"),
        ("qRI", DualQHahn, "dqHII"),
        ("qRII", DualQHahn, "trivial"),
        ("qRIII", DualQHahn, "dqHI"),
        ("qRIV", DualQHahn, "dqHIII"),
        ("qRI", QuantumQKrawtchouk, "qqKII"),
        ("qRII", QuantumQKrawtchouk, "qqKI"),
        ("qRIII", QuantumQKrawtchouk, "qqKIII"),
        ("qRIV", QuantumQKrawtchouk, "trivial"),
        ("qRI", QKrawtchouk, "qKII"),
        ("qRII", QKrawtchouk, "qKI"),
        ("qRIII", QKrawtchouk, "qKIII"),
        ("qRIV", QKrawtchouk, "qKI"),
        ("qRI", AffineQKrawtchouk, "aqKII"),
        ("qRII", AffineQKrawtchouk, "trivial"),
        ("qRIII", AffineQKrawtchouk, "aqKIII"),
        ("qRIV", AffineQKrawtchouk, "aqKI"),
        ("qRI", DualQKrawtchouk, "dqKI"),
        ("qRII", DualQKrawtchouk, "trivial"),
        ("qRIII", DualQKrawtchouk, "dqKII"),
        ("qRIV", DualQKrawtchouk, "trivial"),
        ("qRI", Racah, "RI"),
        ("qRII", Racah, "RII"),
        ("qRIII", Racah, "RIII"),
        ("qRIV", Racah, "RIV"),
        ("qHI", Hahn, "HI"),
        ("qHII", Hahn, "HII"),
        ("qHIII", Hahn, "HIII"),
        ("qHIV", Hahn, "HIV"),
        ("dqHI", DualHahn, "dHI"),
        ("dqHII", DualHahn, "dHII"),
        ("dqHIII", DualHahn, "dHIII"),
        ("qqKI", Krawtchouk, "trivial"),
        ("qqKII", Krawtchouk, "KI"),
        ("qqKIII", Krawtchouk, "KII"),
        ("qKI", Krawtchouk, "trivial"),
        ("qKII", Krawtchouk, "KI"),
        ("qKIII", Krawtchouk, "KII"),
        ("aqKI", Krawtchouk, "trivial"),
        ("aqKII", Krawtchouk, "KI"),
        ("aqKIII", Krawtchouk, "KII"),
        ("dqKI", Krawtchouk, "KI"),
        ("dqKII", Krawtchouk, "KII"),
    ]
};

/// The published label `source_id` maps to in `target`, or `"trivial"`.
pub fn limit_correspondence(source_id: &str, target: FamilyId) -> Result<&'static str> {
    CORRESPONDENCE
        .iter()
        .find(|(s, f, _)| *s == source_id && *f == target)
        .map(|(_, _, t)| *t)
        .ok_or_else(|| Error::UnknownCorrespondence(format!("{source_id} → {target}")))
}

pub fn correspondence_table() -> &'static [(&'static str, FamilyId, &'static str)] {
    CORRESPONDENCE
}

// ---- data helpers shared by the submodules ----

pub(crate) struct Spec<'a> {
    pub id: &'a str,
    pub family: FamilyId,
    pub kind: RelationKind,
    pub group: Group,
    pub eta: i64,
    pub n_offset: i64,
    pub map: &'a [(Param, &'a str)],
}

impl Spec<'_> {
    pub(crate) fn build(&self, plus: Option<Form>, minus: Option<Form>) -> RelationEntry {
        let map = self.map.iter().map(|(p, s)| (*p, parse(s))).collect();
        RelationEntry {
            id: self.id.to_string(),
            family: self.family,
            kind: self.kind,
            group: self.group,
            shift: ShiftData::new(self.eta, self.n_offset, map),
            parity: None,
            plus,
            minus,
            nu: None,
            chi: None,
            parts: None,
        }
    }
}

/// Parses a built-in formula; the data tests cover every string.
pub(crate) fn parse(s: &str) -> Expr {
    expr::parse(s).unwrap_or_else(|e| panic!("catalog formula `{s}`: {e}"))
}

pub(crate) fn form(factor: &str, terms: &[(i64, &str)]) -> Form {
    Form::parse(factor, terms).unwrap_or_else(|e| panic!("catalog form: {e}"))
}

#[cfg(test)]
mod tests;
