//! Relations for the 4φ3 functions with free `δ` and argument `z`.

use alloc::vec::Vec;

use super::{form, Group, RelationEntry, Spec};
use crate::contiguity::RelationKind;
use crate::families::FamilyId::Generalized;
use crate::families::Param::{self, *};

fn plus(id: &str, n_offset: i64, map: &[(Param, &str)], phi0: &str, phi_m1: &str) -> RelationEntry {
    let spec = Spec { id, family: Generalized, kind: RelationKind::GRel, group: Group::Generalized, eta: 0, n_offset, map };
    spec.build(Some(form("1", &[(0, phi0), (-1, phi_m1)])), None)
}

pub(super) fn entries() -> Vec<RelationEntry> {
    let g3 = Spec {
        id: "GIII",
        family: Generalized,
        kind: RelationKind::GRel,
        group: Group::Generalized,
        eta: -1,
        n_offset: -1,
        map: &[(Alpha, "alpha*q"), (Gamma, "gamma*q"), (Delta, "delta*q")],
    }
    .build(
        None,
        Some(form(
            "(1-q^(-x))*(1-gamma*q^(x-N))",
            &[(1, "q^(i-N+1)*(1-alpha*q)*(1-delta)*(1-q^N)/(z*(1-alpha*beta*q^(2*i+2)))"), (0, "-@phi_p1")],
        )),
    );
    Vec::from([
        plus(
            "GI",
            -1,
            &[(Beta, "beta*q"), (Gamma, "gamma/q")],
            "(1-alpha*beta*q^(i+1))*(q^i-q^N)/((1-q^N)*(1-alpha*beta*q^(2*i+1)))",
            "(1-alpha*beta*q^(N+i+1))*(1-q^i)/((1-q^N)*(1-alpha*beta*q^(2*i+1)))",
        ),
        plus(
            "GII",
            0,
            &[(Beta, "beta*q"), (Delta, "delta*q")],
            "(1-delta*q^i)*(1-alpha*beta*q^(i+1))/((1-delta)*(1-alpha*beta*q^(2*i+1)))",
            "-(1-q^i)*(delta-alpha*beta*q^(i+1))/((1-delta)*(1-alpha*beta*q^(2*i+1)))",
        ),
        g3,
        plus(
            "GIV",
            0,
            &[(Alpha, "alpha*q")],
            "(1-alpha*q^(i+1))*(1-alpha*beta*q^(i+1))/((1-alpha*q)*(1-alpha*beta*q^(2*i+1)))",
            "-alpha*q*(1-beta*q^i)*(1-q^i)/((1-alpha*q)*(1-alpha*beta*q^(2*i+1)))",
        ),
        plus(
            "GV",
            0,
            &[(Beta, "beta*q")],
            "(1-alpha*beta*q^(i+1))/(1-alpha*beta*q^(2*i+1))",
            "alpha*beta*q^(i+1)*(1-q^i)/(1-alpha*beta*q^(2*i+1))",
        ),
        plus(
            "GVI",
            0,
            &[(Beta, "beta*q"), (Z, "z/q")],
            "q^i*(1-alpha*beta*q^(i+1))/(1-alpha*beta*q^(2*i+1))",
            "(1-q^i)/(1-alpha*beta*q^(2*i+1))",
        ),
    ])
}
