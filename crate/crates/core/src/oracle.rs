//! Independent cross-checks of the polynomial evaluators.

use alloc::format;
use alloc::string::ToString;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::families::{self, FamilyId, Param, ParameterSet};
use crate::report::{Locus, Status, VerificationReport};
use crate::scalar::Scalar;

/// Series definition against the three-term recurrence on the full grid.
/// CBI is checked against its own `μ`/`σ` recurrence; `G` has none and is not applicable.
pub fn dual_path(params: &ParameterSet) -> VerificationReport {
    let mut rep = VerificationReport::new(format!("dual-path[{}]", params.family), Vec::from([params.clone()]));
    if params.family == FamilyId::Generalized {
        return rep.with_status(Status::NotApplicable, "no recurrence");
    }
    let n = params.n_i64();
    for i in 0..=n {
        for x in 0..=n {
            let ok = match (families::eval_poly_hypergeometric(params, i, x), families::eval_poly_recurrence(params, i, x)) {
                (Ok(a), Ok(b)) => a == b,
                (Err(e), _) | (_, Err(e)) => return rep.with_status(Status::NotApplicable, e.to_string()),
            };
            rep.record(ok, Locus { i, x: Some(x) });
        }
    }
    rep
}

/// `Σ_x w(x) R_i(x) R_j(x) = 0` for `i ≠ j` (q-Racah and Racah).
pub fn orthogonality(params: &ParameterSet) -> VerificationReport {
    let mut rep = VerificationReport::new(format!("orthogonality[{}]", params.family), Vec::from([params.clone()]));
    let run = || -> crate::Result<(Vec<Scalar>, Vec<Vec<Scalar>>)> {
        let n = params.n_i64();
        let w = (0..=n).map(|x| families::weight(params, x)).collect::<crate::Result<Vec<_>>>()?;
        Ok((w, families::poly_table(params)?))
    };
    let (w, table) = match run() {
        Ok(v) => v,
        Err(e) => return rep.with_status(Status::NotApplicable, e.to_string()),
    };
    for i in 0..table.len() {
        for j in 0..i {
            let s: Scalar = w.iter().enumerate().map(|(x, wx)| wx * &table[i][x] * &table[j][x]).sum();
            rep.record(s.is_zero(), Locus { i: i as i64, x: Some(j as i64) });
        }
    }
    rep
}

/// With `δ = βγq` and `z = q` the generalized function is the q-Racah polynomial.
pub fn generalized_reduces_to_qracah(params: &ParameterSet) -> VerificationReport {
    let mut rep = VerificationReport::new("G→qR", Vec::from([params.clone()]));
    let g = || -> crate::Result<ParameterSet> {
        let q = params.q()?.clone();
        let d = params.get(Param::Beta)? * params.get(Param::Gamma)? * &q;
        Ok(params.retag(FamilyId::Generalized).with(Param::Delta, d).with(Param::Z, q))
    };
    let g = match g() {
        Ok(g) => g,
        Err(e) => return rep.with_status(Status::NotApplicable, e.to_string()),
    };
    rep.params.push(g.clone());
    let n = params.n_i64();
    for i in 0..=n {
        for x in 0..=n {
            let ok = match (families::eval_poly_hypergeometric(&g, i, x), families::eval_poly_hypergeometric(params, i, x)) {
                (Ok(a), Ok(b)) => a == b,
                (Err(e), _) | (_, Err(e)) => return rep.with_status(Status::NotApplicable, e.to_string()),
            };
            rep.record(ok, Locus { i, x: Some(x) });
        }
    }
    rep
}
