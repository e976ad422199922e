//! Relations between Bannai–Ito (`B`) and complementary Bannai–Ito (`I`) polynomials.
//!
//! B-type entries expand `B_i(x)` over `I(x̄)`, I-type entries the reverse.
//! Parity cases in `i` are written `(1-i_p)·even + i_p·odd`.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::{form, Group, RelationEntry, Spec};
use crate::contiguity::RelationKind;
use crate::families::FamilyId::{self, BannaiIto, ComplementaryBannaiIto};
use crate::families::Param::{self, *};

fn cases(even: &str, odd: &str) -> String {
    format!("((1-i_p)*({even})+i_p*({odd}))")
}

const SIGN_I: &str = "(1-2*i_p)";

struct Data<'a> {
    id: &'a str,
    parity: i64,
    eta: i64,
    n_offset: i64,
    map: &'a [(Param, &'a str)],
    z0: &'a str,
    z_minus: (&'a str, &'a str),
    w_plus: &'a str,
    omega: &'a str,
    w0: (&'a str, &'a str),
}

fn entry(d: Data<'_>, family: FamilyId, bar: FamilyId, factor_core: &str) -> RelationEntry {
    let spec = Spec { id: d.id, family, kind: RelationKind::BiRel, group: Group::BiCbi, eta: d.eta, n_offset: d.n_offset, map: d.map };
    let (plus_den, minus_den) = match family {
        BannaiIto => ("i+alpha+beta", "i+1+alpha+beta"),
        _ => ("alpha+beta+i+1", "alpha+beta+i+1"),
    };
    let z_minus = format!("{}/({plus_den})", cases(d.z_minus.0, d.z_minus.1));
    let w0 = format!("{}/({minus_den})", cases(d.w0.0, d.w0.1));
    let factor = format!("({factor_core}+({}))/2", d.omega);
    let mut e = spec.build(
        Some(form("1", &[(0, d.z0), (-1, &z_minus)])),
        Some(form(&factor, &[(1, d.w_plus), (0, &w0)])),
    );
    e.shift.bar_family = Some(bar);
    e.parity = Some(d.parity);
    e
}

fn b(d: Data<'_>) -> RelationEntry {
    entry(d, BannaiIto, ComplementaryBannaiIto, "x*(1-2*x_p)+(1-2*x_p)*(gamma-N_e-1/2)")
}

fn i(d: Data<'_>) -> RelationEntry {
    entry(d, ComplementaryBannaiIto, BannaiIto, "x*(1-2*x_p)-(1-2*x_p)*(gamma+N_e+1/2)")
}

pub(super) fn entries() -> Vec<RelationEntry> {
    Vec::from([
        b(Data {
            id: "B1",
            parity: 0,
            eta: 0,
            n_offset: 0,
            map: &[(Alpha, "beta-1"), (Beta, "alpha+1"), (Gamma, "-gamma")],
            z0: "1",
            z_minus: ("i_e*(beta+i_e)", "(i_e-N_e)*(beta+gamma+i_e)"),
            w_plus: "1",
            omega: "gamma-2*alpha-(N+3)/2",
            w0: ("-(alpha-gamma+i_e+1)*(alpha+beta+N_e+i_e+1)", "-(alpha+i_e+1)*(alpha+beta+i_e+1)"),
        }),
        b(Data {
            id: "B2",
            parity: 0,
            eta: 0,
            n_offset: -1,
            map: &[(Alpha, "beta"), (Beta, "alpha"), (Gamma, "1-gamma")],
            z0: SIGN_I,
            z_minus: ("i_e*(alpha+i_e)", "-(alpha+beta+1+i_e+N_e)*(beta+gamma+i_e)"),
            w_plus: SIGN_I,
            omega: "-gamma+(1-N)/2",
            w0: ("(i_e-N_e)*(alpha-gamma+i_e+1)", "-(beta+i_e+1)*(alpha+beta+i_e+1)"),
        }),
        b(Data {
            id: "B3",
            parity: 1,
            eta: 0,
            n_offset: -1,
            map: &[(Alpha, "beta-1"), (Beta, "alpha+1"), (Gamma, "-gamma")],
            z0: "1",
            z_minus: ("i_e*(alpha+beta+N_e+i_e+1)", "(alpha+1+i_e)*(beta+gamma+i_e)"),
            w_plus: "1",
            omega: "gamma+N/2",
            w0: ("-(beta+i_e)*(alpha-gamma+i_e+1)", "(N_e-i_e)*(alpha+beta+i_e+1)"),
        }),
        b(Data {
            id: "B4",
            parity: 1,
            eta: 0,
            n_offset: 0,
            map: &[(Alpha, "beta-1"), (Beta, "alpha+1"), (Gamma, "-gamma")],
            z0: SIGN_I,
            z_minus: ("i_e*(i_e-N_e-1)", "-(beta+i_e)*(beta+gamma+i_e)"),
            w_plus: SIGN_I,
            omega: "2*alpha-gamma+2+N/2",
            w0: ("(alpha+i_e+1)*(alpha-gamma+i_e+1)", "-(alpha+beta+i_e+1)*(alpha+beta+N_e+i_e+2)"),
        }),
        b(Data {
            id: "B5",
            parity: 0,
            eta: -1,
            n_offset: -1,
            map: &[(Alpha, "alpha-gamma"), (Beta, "beta+gamma"), (Gamma, "-gamma")],
            z0: "1",
            z_minus: ("i_e*(beta+i_e)", "(alpha-gamma+i_e+1)*(alpha+beta+N_e+i_e+1)"),
            w_plus: "1",
            omega: "(N+1)/2-gamma",
            w0: ("(N_e-i_e)*(beta+gamma+i_e)", "-(alpha+i_e+1)*(alpha+beta+i_e+1)"),
        }),
        i(Data {
            id: "I1",
            parity: 0,
            eta: 0,
            n_offset: 0,
            map: &[(Alpha, "beta"), (Beta, "alpha+1"), (Gamma, "-gamma")],
            z0: "1",
            z_minus: ("-i_e*(alpha+i_e+1)", "(alpha-gamma+i_e+1)*(N_e-i_e)"),
            w_plus: "1",
            omega: "2*beta+gamma+(N+1)/2",
            w0: ("(beta+i_e)*(alpha+beta+i_e+1)", "(alpha+beta+N_e+i_e+2)*(beta+gamma+i_e+1)"),
        }),
        i(Data {
            id: "I2",
            parity: 0,
            eta: 0,
            n_offset: -1,
            map: &[(Alpha, "beta-1"), (Beta, "alpha+2"), (Gamma, "-gamma-1")],
            z0: "1",
            z_minus: ("-i_e*(alpha+beta+i_e+N_e+1)", "-(beta+i_e)*(alpha-gamma+i_e+1)"),
            w_plus: "1",
            omega: "gamma-(N-1)/2",
            w0: ("(alpha+beta+i_e+1)*(i_e-N_e)", "(alpha+i_e+2)*(beta+gamma+i_e+1)"),
        }),
        i(Data {
            id: "I3",
            parity: 1,
            eta: 0,
            n_offset: 0,
            map: &[(Alpha, "beta"), (Beta, "alpha+1"), (Gamma, "-gamma")],
            z0: SIGN_I,
            z_minus: ("i_e*(i_e-N_e-1)", "-(alpha+i_e+1)*(alpha-gamma+i_e+1)"),
            w_plus: "-(1-2*i_p)",
            omega: "-2*beta-gamma-(N+2)/2",
            w0: ("-(alpha+beta+N_e+i_e+2)*(alpha+beta+i_e+1)", "(beta+i_e+1)*(beta+gamma+i_e+1)"),
        }),
        i(Data {
            id: "I4",
            parity: 1,
            eta: 0,
            n_offset: -1,
            map: &[(Alpha, "beta"), (Beta, "alpha+1"), (Gamma, "-gamma")],
            z0: SIGN_I,
            z_minus: ("i_e*(beta+i_e)", "-(alpha+beta+N_e+i_e+2)*(alpha-gamma+i_e+1)"),
            w_plus: "-(1-2*i_p)",
            omega: "-gamma+N/2",
            w0: ("-(alpha+beta+i_e+1)*(alpha+i_e+1)", "(i_e-N_e)*(beta+gamma+i_e+1)"),
        }),
        i(Data {
            id: "I5",
            parity: 1,
            eta: -1,
            n_offset: -1,
            map: &[(Alpha, "alpha-gamma+1"), (Beta, "beta+gamma"), (Gamma, "1-gamma")],
            z0: "1",
            z_minus: ("-i_e*(beta+gamma+i_e)", "-(alpha+i_e+1)*(alpha+beta+N_e+i_e+2)"),
            w_plus: "-1",
            omega: "gamma+N/2",
            w0: ("-(alpha-gamma+i_e+1)*(alpha+beta+i_e+1)", "(beta+i_e+1)*(N_e-i_e)"),
        }),
    ])
}
