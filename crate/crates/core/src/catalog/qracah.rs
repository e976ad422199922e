//! q-Racah B2 and B2' relations, named after the two A2 relations they chain.

use alloc::string::ToString;
use alloc::vec::Vec;

use super::{form, Group, RelationEntry, Spec};
use crate::contiguity::RelationKind;
use crate::families::FamilyId::QRacah;
use crate::families::Param::{self, *};

/// Plus form `[λ^+, Φ^{+1}, Φ^{0}, Φ^{-1}]`.
fn b2(id: &str, parts: (&str, &str), eta: i64, n_offset: i64, map: &[(Param, &str)], plus: [&str; 4]) -> RelationEntry {
    let spec = Spec { id, family: QRacah, kind: RelationKind::B2, group: Group::B2Table, eta, n_offset, map };
    let mut e = spec.build(Some(form(plus[0], &[(1, plus[1]), (0, plus[2]), (-1, plus[3])])), None);
    e.parts = Some((parts.0.to_string(), parts.1.to_string()));
    e
}

/// Plus form `[Φ^{0}, Φ^{-1}, Φ^{-2}]` with `λ^+ = 1`, minus form `[λ^-, Φ^{+2}, Φ^{+1}, Φ^{0}]`.
fn b2p(id: &str, parts: (&str, &str), eta: i64, n_offset: i64, map: &[(Param, &str)], plus: [&str; 3], minus: [&str; 4]) -> RelationEntry {
    let spec = Spec { id, family: QRacah, kind: RelationKind::B2p, group: Group::B2pTable, eta, n_offset, map };
    let mut e = spec.build(
        Some(form("1", &[(0, plus[0]), (-1, plus[1]), (-2, plus[2])])),
        Some(form(minus[0], &[(2, minus[1]), (1, minus[2]), (0, minus[3])])),
    );
    e.parts = Some((parts.0.to_string(), parts.1.to_string()));
    e
}

const PHI0_FROM_LAMBDA: &str = "@lambda-@phi_p1-@phi_m1";
const PHI0_FROM_ZERO: &str = "-@phi_p1-@phi_m1";
const PLUS_M1: &str = "1-@phi_0-@phi_m2";
const MINUS_P1_FROM_LAMBDA: &str = "@lambda-@phi_p2-@phi_0";
const MINUS_P1_FROM_ZERO: &str = "-@phi_p2-@phi_0";

pub(super) fn b2_entries() -> Vec<RelationEntry> {
    Vec::from([
        b2(
            "qRI/II",
            ("qRI", "qRII"),
            0,
            -1,
            &[(Gamma, "gamma/q")],
            [
                "(1-beta*gamma*q^x)*(1-beta*q^(N-x))/(beta*q*(1-beta*gamma))",
                "(1-q^(i-N))*(1-alpha*beta*q^(i+1))*(q^i-q^(N-1))*(1-alpha*q^(i+1))/((1-q^(-N))*(1-alpha*beta*q^(2*i+1))*(1-alpha*beta*q^(2*i+2)))",
                PHI0_FROM_LAMBDA,
                "(1-q^i)*(1-alpha*beta*q^(N+i+1))*(1-beta*q^i)*(1-alpha*beta*q^(N+i))/(beta*q*(1-q^N)*(1-alpha*beta*q^(2*i))*(1-alpha*beta*q^(2*i+1)))",
            ],
        ),
        b2(
            "qRI/III",
            ("qRI", "qRIII"),
            1,
            0,
            &[(Alpha, "alpha/q"), (Beta, "beta*q"), (Gamma, "gamma/q^2")],
            [
                "(1-q^(-x-1))*(1-gamma*q^(x-N-1))/((1-beta*gamma)*(1-alpha))",
                "-q^i*(1-q^(i-N))*(1-alpha*beta*q^(i+1))/((1-alpha*beta*q^(2*i+1))*(1-alpha*beta*q^(2*i+2)))",
                PHI0_FROM_ZERO,
                "-q^(i-N-1)*(1-q^i)*(1-alpha*beta*q^(N+i+1))/((1-alpha*beta*q^(2*i))*(1-alpha*beta*q^(2*i+1)))",
            ],
        ),
        b2(
            "qRI/IV",
            ("qRI", "qRIV"),
            0,
            -1,
            &[(Alpha, "alpha/q"), (Beta, "beta*q"), (Gamma, "gamma/q")],
            [
                "(1-alpha*q^x)*(gamma-alpha*q^(N-x))/(alpha*q*(1-alpha))",
                "(q^i-q^(N-1))*(q^i-q^N)*(1-alpha*beta*q^(i+1))*(1-beta*gamma*q^(i+1))/((1-q^N)*(1-alpha*beta*q^(2*i+1))*(1-alpha*beta*q^(2*i+2)))",
                PHI0_FROM_LAMBDA,
                "(1-q^i)*(1-alpha*beta*q^(N+i))*(1-alpha*beta*q^(N+i+1))*(gamma-alpha*q^i)/(alpha*q*(1-q^N)*(1-alpha*beta*q^(2*i))*(1-alpha*beta*q^(2*i+1)))",
            ],
        ),
        b2(
            "qRII/I",
            ("qRII", "qRI"),
            0,
            1,
            &[(Gamma, "gamma*q")],
            [
                "(1-gamma*q^(x+1))*(1-q^(N-x+1))/(1-q^(N+1))",
                "(1-alpha*beta*q^(i+1))*(1-beta*gamma*q^(i+1))*(1-beta*gamma*q^(i+2))*(1-alpha*q^(i+1))/((1-beta*gamma*q)*(1-alpha*beta*q^(2*i+1))*(1-alpha*beta*q^(2*i+2)))",
                PHI0_FROM_LAMBDA,
                "beta*q^2*(1-q^i)*(1-beta*q^i)*(gamma-alpha*q^(i-1))*(gamma-alpha*q^i)/((1-beta*gamma*q)*(1-alpha*beta*q^(2*i))*(1-alpha*beta*q^(2*i+1)))",
            ],
        ),
        b2(
            "qRII/III",
            ("qRII", "qRIII"),
            1,
            1,
            &[(Alpha, "alpha/q"), (Beta, "beta*q"), (Gamma, "gamma/q")],
            [
                "(1-q^(-x-1))*(1-gamma*q^(x-N-1))/((1-alpha)*(1-q^(N+1)))",
                "q^(i-N-1)*(1-alpha*beta*q^(i+1))*(1-beta*gamma*q^(i+1))/((1-alpha*beta*q^(2*i+1))*(1-alpha*beta*q^(2*i+2)))",
                PHI0_FROM_ZERO,
                "beta*q^(i-N-1)*(1-q^i)*(gamma-alpha*q^i)/((1-alpha*beta*q^(2*i))*(1-alpha*beta*q^(2*i+1)))",
            ],
        ),
        b2(
            "qRII/IV",
            ("qRII", "qRIV"),
            0,
            0,
            &[(Alpha, "alpha/q"), (Beta, "beta*q")],
            [
                "(1-alpha*q^x)*(gamma-alpha*q^(N-x))/(alpha*(1-alpha))",
                "-(q^N-q^i)*(1-alpha*beta*q^(i+1))*(1-beta*gamma*q^(i+1))*(1-beta*gamma*q^(i+2))/((1-beta*gamma*q)*(1-alpha*beta*q^(2*i+1))*(1-alpha*beta*q^(2*i+2)))",
                PHI0_FROM_LAMBDA,
                "-beta*q*(1-q^i)*(gamma-alpha*q^(i-1))*(gamma-alpha*q^i)*(1-alpha*beta*q^(N+i+1))/(alpha*(1-beta*gamma*q)*(1-alpha*beta*q^(2*i))*(1-alpha*beta*q^(2*i+1)))",
            ],
        ),
        b2(
            "qRIII/I",
            ("qRIII", "qRI"),
            -1,
            0,
            &[(Alpha, "alpha*q"), (Beta, "beta/q"), (Gamma, "gamma*q^2")],
            [
                "(1-gamma*q^(x+1))*(1-q^(N-x+1))",
                "(1-q^(N-i))*(1-alpha*q^(i+1))*(1-alpha*q^(i+2))*(1-alpha*beta*q^(i+1))*(1-beta*gamma*q^(i+1))*(1-beta*gamma*q^(i+2))/((1-alpha*q)*(1-beta*gamma*q)*(1-alpha*beta*q^(2*i+1))*(1-alpha*beta*q^(2*i+2)))",
                "q*(1-alpha*q^(i+1))*(1-beta*q^i)*(1-beta*gamma*q^(i+1))*(alpha*q^i-gamma)/((1-alpha*q)*(1-beta*gamma*q)*(1-alpha*beta*q^(2*i+1)))*(q*(1-q^(N-i))*(1-alpha*beta*q^(i+1))/(1-alpha*beta*q^(2*i+2))+(1-q^(-i))*(1-alpha*beta*q^(N+i+1))/(1-alpha*beta*q^(2*i)))",
                "q^3*(1-q^(-i))*(alpha*q^(i-1)-gamma)*(alpha*q^i-gamma)*(1-beta*q^(i-1))*(1-beta*q^i)*(1-alpha*beta*q^(N+i+1))/((1-alpha*q)*(1-beta*gamma*q)*(1-alpha*beta*q^(2*i))*(1-alpha*beta*q^(2*i+1)))",
            ],
        ),
        b2(
            "qRIII/II",
            ("qRIII", "qRII"),
            -1,
            -1,
            &[(Alpha, "alpha*q"), (Beta, "beta/q"), (Gamma, "gamma*q")],
            [
                "(1-beta*gamma*q^x)*(1-beta*q^(N-x))/beta",
                "(1-q^(N-i))*(q^i-q^(N-1))*(1-alpha*q^(i+1))*(1-alpha*q^(i+2))*(1-alpha*beta*q^(i+1))*(1-beta*gamma*q^(i+1))/((1-q^N)*(1-alpha*q)*(1-alpha*beta*q^(2*i+1))*(1-alpha*beta*q^(2*i+2)))",
                "(1-q^(N-i))*(1-alpha*q^(i+1))*(1-beta*q^i)*(1-alpha*beta*q^(N+i+1))/((1-q^N)*(1-alpha*q)*(1-alpha*beta*q^(2*i+1)))*((1-alpha*beta*q^(i+1))*(1-beta*gamma*q^(i+1))/(beta*(1-alpha*beta*q^(2*i+2)))+(1-q^i)*(gamma-alpha*q^i)/(1-alpha*beta*q^(2*i)))",
                "q*(1-q^i)*(gamma*q^(-i)-alpha)*(1-beta*q^(i-1))*(1-beta*q^i)*(1-alpha*beta*q^(N+i))*(1-alpha*beta*q^(N+i+1))/(beta*(1-q^N)*(1-alpha*q)*(1-alpha*beta*q^(2*i))*(1-alpha*beta*q^(2*i+1)))",
            ],
        ),
        b2(
            "qRIII/IV",
            ("qRIII", "qRIV"),
            -1,
            -1,
            &[(Gamma, "gamma*q")],
            [
                "(1-alpha*q^x)*(gamma-alpha*q^(N-x))/alpha",
                "(1-q^(N-i))*(q^i-q^(N-1))*(1-alpha*q^(i+1))*(1-alpha*beta*q^(i+1))*(1-beta*gamma*q^(i+1))*(1-beta*gamma*q^(i+2))/((1-q^N)*(1-beta*gamma*q)*(1-alpha*beta*q^(2*i+1))*(1-alpha*beta*q^(2*i+2)))",
                "(1-q^(N-i))*(1-beta*gamma*q^(i+1))*(1-alpha*beta*q^(N+i+1))*(gamma-alpha*q^i)/((1-q^N)*(1-beta*gamma*q)*(1-alpha*beta*q^(2*i+1)))*((1-alpha*q^(i+1))*(1-alpha*beta*q^(i+1))/(alpha*(1-alpha*beta*q^(2*i+2)))+(1-q^i)*(1-beta*q^i)/(1-alpha*beta*q^(2*i)))",
                "(1-q^i)*(gamma*q^(1-i)-alpha*q)*(gamma-alpha*q^(i-1))*(1-beta*q^i)*(1-alpha*beta*q^(N+i))*(1-alpha*beta*q^(N+i+1))/(alpha*(1-q^N)*(1-beta*gamma*q)*(1-alpha*beta*q^(2*i))*(1-alpha*beta*q^(2*i+1)))",
            ],
        ),
        b2(
            "qRIV/I",
            ("qRIV", "qRI"),
            0,
            1,
            &[(Alpha, "alpha*q"), (Beta, "beta/q"), (Gamma, "gamma*q")],
            [
                "(1-gamma*q^(x+1))*(1-q^(N-x+1))/(1-q^(N+1))",
                "(1-alpha*q^(i+1))*(1-alpha*q^(i+2))*(1-alpha*beta*q^(i+1))*(1-beta*gamma*q^(i+1))/((1-alpha*q)*(1-alpha*beta*q^(2*i+1))*(1-alpha*beta*q^(2*i+2)))",
                PHI0_FROM_LAMBDA,
                "-alpha*q^2*(1-q^i)*(1-beta*q^(i-1))*(1-beta*q^i)*(alpha*q^i-gamma)/((1-alpha*q)*(1-alpha*beta*q^(2*i))*(1-alpha*beta*q^(2*i+1)))",
            ],
        ),
        b2(
            "qRIV/II",
            ("qRIV", "qRII"),
            0,
            0,
            &[(Alpha, "alpha*q"), (Beta, "beta/q")],
            [
                "(1-beta*gamma*q^x)*(1-beta*q^(N-x))/(beta*(1-beta*gamma))",
                "(1-alpha*q^(i+1))*(1-alpha*beta*q^(i+1))*(q^i-q^N)*(1-alpha*q^(i+2))/((1-alpha*q)*(1-alpha*beta*q^(2*i+1))*(1-alpha*beta*q^(2*i+2)))",
                PHI0_FROM_LAMBDA,
                "-alpha*q*(1-q^i)*(1-beta*q^(i-1))*(1-beta*q^i)*(1-alpha*beta*q^(N+i+1))/(beta*(1-alpha*q)*(1-alpha*beta*q^(2*i))*(1-alpha*beta*q^(2*i+1)))",
            ],
        ),
        b2(
            "qRIV/III",
            ("qRIV", "qRIII"),
            1,
            1,
            &[(Gamma, "gamma/q")],
            [
                "(1-q^(-x-1))*(1-gamma*q^(x-N-1))/((1-beta*gamma)*(1-q^(N+1)))",
                "q^(i-N-1)*(1-alpha*q^(i+1))*(1-alpha*beta*q^(i+1))/((1-alpha*beta*q^(2*i+1))*(1-alpha*beta*q^(2*i+2)))",
                PHI0_FROM_ZERO,
                "alpha*q^(i-N-1)*(1-q^i)*(1-beta*q^i)/((1-alpha*beta*q^(2*i))*(1-alpha*beta*q^(2*i+1)))",
            ],
        ),
    ])
}

pub(super) fn b2p_entries() -> Vec<RelationEntry> {
    Vec::from([
        b2p(
            "qRI/I'",
            ("qRI", "qRI"),
            0,
            -2,
            &[(Beta, "beta*q^2"), (Gamma, "gamma/q^2")],
            [
                "(1-q^(i-N))*(1-q^(i-N+1))*(1-alpha*beta*q^(i+1))*(1-alpha*beta*q^(i+2))/((1-q^(-N))*(1-q^(1-N))*(1-alpha*beta*q^(2*i+1))*(1-alpha*beta*q^(2*i+2)))",
                PLUS_M1,
                "(1-q^(i-1))*(1-q^i)*(1-alpha*beta*q^(N+i))*(1-alpha*beta*q^(N+i+1))/((1-q^(N-1))*(1-q^N)*(1-alpha*beta*q^(2*i))*(1-alpha*beta*q^(2*i+1)))",
            ],
            [
                "(1-gamma*q^(x-1))*(1-gamma*q^x)*(1-q^(N-x-1))*(1-q^(N-x))/((1-q^(N-1))*(1-q^N))",
                "(1-alpha*q^(i+1))*(1-alpha*q^(i+2))*(1-beta*gamma*q^(i+1))*(1-beta*gamma*q^(i+2))/((1-alpha*beta*q^(2*i+3))*(1-alpha*beta*q^(2*i+4)))",
                MINUS_P1_FROM_LAMBDA,
                "(1-beta*q^(i+1))*(1-beta*q^(i+2))*(alpha*q^(i+1)-gamma)*(alpha*q^(i+2)-gamma)/(q*(1-alpha*beta*q^(2*i+2))*(1-alpha*beta*q^(2*i+3)))",
            ],
        ),
        b2p(
            "qRI/II'",
            ("qRI", "qRII"),
            0,
            -1,
            &[(Beta, "beta*q^2"), (Gamma, "gamma/q")],
            [
                "(1-q^(i-N))*(1-beta*gamma*q^(i+1))*(1-alpha*beta*q^(i+1))*(1-alpha*beta*q^(i+2))/((1-q^(-N))*(1-beta*gamma*q)*(1-alpha*beta*q^(2*i+1))*(1-alpha*beta*q^(2*i+2)))",
                PLUS_M1,
                "-beta*q*(1-q^(i-1))*(1-q^i)*(1-alpha*beta*q^(N+i+1))*(gamma-alpha*q^i)/((1-q^N)*(1-beta*gamma*q)*(1-alpha*beta*q^(2*i))*(1-alpha*beta*q^(2*i+1)))",
            ],
            [
                "(1-gamma*q^x)*(1-q^(N-x))*(1-beta*gamma*q^(x+1))*(1-beta*q^(N+1-x))/(beta*q*(1-q^N)*(1-beta*gamma*q))",
                "(1-alpha*q^(i+1))*(1-alpha*q^(i+2))*(1-beta*gamma*q^(i+2))*(q^(i+1)-q^N)/((1-alpha*beta*q^(2*i+3))*(1-alpha*beta*q^(2*i+4)))",
                MINUS_P1_FROM_LAMBDA,
                "(1-beta*q^(i+1))*(1-beta*q^(i+2))*(alpha*q^(i+1)-gamma)*(1-alpha*beta*q^(N+i+2))/(beta*q*(1-alpha*beta*q^(2*i+2))*(1-alpha*beta*q^(2*i+3)))",
            ],
        ),
        b2p(
            "qRI/III'",
            ("qRI", "qRIII"),
            -1,
            -2,
            &[(Alpha, "alpha*q"), (Beta, "beta*q")],
            [
                "(1-q^(i-N))*(1-q^(N-i-1))*(1-alpha*beta*q^(i+1))*(1-alpha*beta*q^(i+2))*(1-alpha*q^(i+1))*(1-beta*gamma*q^(i+1))/((1-q^(-N))*(1-q^(N-1))*(1-alpha*q)*(1-beta*gamma*q)*(1-alpha*beta*q^(2*i+1))*(1-alpha*beta*q^(2*i+2)))",
                "(1-q^(N-i))*(1-alpha*beta*q^(i+1))*(1-q^i)*(1-alpha*beta*q^(N+i+1))/((1-alpha*q)*(1-beta*gamma*q)*(1-q^(N-1))*(1-q^N)*(1-alpha*beta*q^(2*i+1)))*((gamma-alpha*q^(i+1))*(1-beta*q^(i+1))/(1-alpha*beta*q^(2*i+2))+(1-beta*gamma*q^i)*(1-alpha*q^i)/(1-alpha*beta*q^(2*i)))",
                "(1-q^(i-1))*(1-q^i)*(1-alpha*beta*q^(N+i))*(1-alpha*beta*q^(N+i+1))*(gamma*q^(1-i)-alpha*q)*(1-beta*q^i)/((1-q^(N-1))*(1-q^N)*(1-alpha*q)*(1-beta*gamma*q)*(1-alpha*beta*q^(2*i))*(1-alpha*beta*q^(2*i+1)))",
            ],
            [
                "(1-gamma*q^x)*(1-q^(N-x))*(1-q^(-x))*(1-gamma*q^(x-N))/((1-q^(N-1))*(1-q^N)*(1-alpha*q)*(1-beta*gamma*q))",
                "q^(i-N+1)*(1-alpha*q^(i+2))*(1-beta*gamma*q^(i+2))/((1-alpha*beta*q^(2*i+3))*(1-alpha*beta*q^(2*i+4)))",
                MINUS_P1_FROM_ZERO,
                "-q^(i-N+1)*(1-beta*q^(i+1))*(alpha*q^(i+1)-gamma)/((1-alpha*beta*q^(2*i+2))*(1-alpha*beta*q^(2*i+3)))",
            ],
        ),
        b2p(
            "qRI/IV'",
            ("qRI", "qRIV"),
            0,
            -1,
            &[(Alpha, "alpha*q"), (Beta, "beta*q"), (Gamma, "gamma/q")],
            [
                "(1-q^(i-N))*(1-alpha*beta*q^(i+1))*(1-alpha*beta*q^(i+2))*(1-alpha*q^(i+1))/((1-q^(-N))*(1-alpha*q)*(1-alpha*beta*q^(2*i+1))*(1-alpha*beta*q^(2*i+2)))",
                PLUS_M1,
                "-alpha*q*(1-q^(i-1))*(1-q^i)*(1-alpha*beta*q^(N+i+1))*(1-beta*q^i)/((1-q^N)*(1-alpha*q)*(1-alpha*beta*q^(2*i))*(1-alpha*beta*q^(2*i+1)))",
            ],
            [
                "(1-gamma*q^x)*(1-q^(N-x))*(1-alpha*q^(x+1))*(gamma-alpha*q^(N+1-x))/(alpha*q*(1-q^N)*(1-alpha*q))",
                "-(q^N-q^(i+1))*(1-alpha*q^(i+2))*(1-beta*gamma*q^(i+1))*(1-beta*gamma*q^(i+2))/((1-alpha*beta*q^(2*i+3))*(1-alpha*beta*q^(2*i+4)))",
                MINUS_P1_FROM_LAMBDA,
                "(1-beta*q^(i+1))*(alpha*q^(i+2)-gamma)*(1-alpha*beta*q^(N+i+2))*(gamma-alpha*q^(i+1))/(alpha*q*(1-alpha*beta*q^(2*i+2))*(1-alpha*beta*q^(2*i+3)))",
            ],
        ),
        b2p(
            "qRII/II'",
            ("qRII", "qRII"),
            0,
            0,
            &[(Beta, "beta*q^2")],
            [
                "(1-alpha*beta*q^(i+1))*(1-alpha*beta*q^(i+2))*(1-beta*gamma*q^(i+1))*(1-beta*gamma*q^(i+2))/((1-beta*gamma*q)*(1-beta*gamma*q^2)*(1-alpha*beta*q^(2*i+1))*(1-alpha*beta*q^(2*i+2)))",
                PLUS_M1,
                "beta^2*q^3*(1-q^(i-1))*(1-q^i)*(gamma-alpha*q^(i-1))*(gamma-alpha*q^i)/((1-beta*gamma*q)*(1-beta*gamma*q^2)*(1-alpha*beta*q^(2*i))*(1-alpha*beta*q^(2*i+1)))",
            ],
            [
                "(1-beta*gamma*q^(x+1))*(1-beta*gamma*q^(x+2))*(1-beta*q^(N+1-x))*(1-beta*q^(N+2-x))/(beta^2*q^3*(1-beta*gamma*q)*(1-beta*gamma*q^2))",
                "(q^i-q^N)*(q^(i+1)-q^N)*(1-alpha*q^(i+1))*(1-alpha*q^(i+2))/((1-alpha*beta*q^(2*i+3))*(1-alpha*beta*q^(2*i+4)))",
                MINUS_P1_FROM_LAMBDA,
                "(1-beta*q^(i+1))*(1-beta*q^(i+2))*(1-alpha*beta*q^(N+i+2))*(1-alpha*beta*q^(N+i+3))/(beta^2*q^3*(1-alpha*beta*q^(2*i+2))*(1-alpha*beta*q^(2*i+3)))",
            ],
        ),
        b2p(
            "qRII/III'",
            ("qRII", "qRIII"),
            -1,
            -1,
            &[(Alpha, "alpha*q"), (Beta, "beta*q"), (Gamma, "gamma*q")],
            [
                "(1-alpha*beta*q^(i+1))*(1-alpha*beta*q^(i+2))*(1-beta*gamma*q^(i+1))*(1-beta*gamma*q^(i+2))*(1-q^(N-i))*(1-alpha*q^(i+1))/((1-beta*gamma*q)*(1-beta*gamma*q^2)*(1-q^N)*(1-alpha*q)*(1-alpha*beta*q^(2*i+1))*(1-alpha*beta*q^(2*i+2)))",
                "(1-q^i)*(1-alpha*beta*q^(i+1))*(1-beta*gamma*q^(i+1))*(gamma*q^(1-i)-alpha*q)/((1-beta*gamma*q)*(1-beta*gamma*q^2)*(1-alpha*beta*q^(2*i+1))*(1-q^N)*(1-alpha*q))*((1-beta*q^(i+1))*(1-alpha*beta*q^(N+i+2))/(1-alpha*beta*q^(2*i+2))-beta*q^i*(1-q^(N-i+1))*(1-alpha*q^i)/(1-alpha*beta*q^(2*i)))",
                "-beta*q*(1-q^(i-1))*(1-q^i)*(gamma*q^(2-i)-alpha*q)*(gamma-alpha*q^i)*(1-beta*q^i)*(1-alpha*beta*q^(N+i+1))/((1-beta*gamma*q)*(1-beta*gamma*q^2)*(1-q^N)*(1-alpha*q)*(1-alpha*beta*q^(2*i))*(1-alpha*beta*q^(2*i+1)))",
            ],
            [
                "(1-beta*gamma*q^(x+1))*(1-q^(-x))*(1-beta*q^(N+1-x))*(1-gamma*q^(x-N))/(beta*q*(1-beta*gamma*q)*(1-beta*gamma*q^2)*(1-alpha*q)*(1-q^N))",
                "q^(i+1-N)*(q^i-q^(N-1))*(1-alpha*q^(i+2))/((1-alpha*beta*q^(2*i+3))*(1-alpha*beta*q^(2*i+4)))",
                MINUS_P1_FROM_ZERO,
                "-q^(i-N-1)*(1-beta*q^(i+1))*(1-alpha*beta*q^(N+i+2))/(beta*(1-alpha*beta*q^(2*i+2))*(1-alpha*beta*q^(2*i+3)))",
            ],
        ),
        b2p(
            "qRII/IV'",
            ("qRII", "qRIV"),
            0,
            0,
            &[(Alpha, "alpha*q"), (Beta, "beta*q")],
            [
                "(1-alpha*q^(i+1))*(1-beta*gamma*q^(i+1))*(1-alpha*beta*q^(i+1))*(1-alpha*beta*q^(i+2))/((1-alpha*q)*(1-beta*gamma*q)*(1-alpha*beta*q^(2*i+1))*(1-alpha*beta*q^(2*i+2)))",
                PLUS_M1,
                "alpha*beta*q^2*(1-q^(i-1))*(1-q^i)*(1-beta*q^i)*(gamma-alpha*q^i)/((1-alpha*q)*(1-beta*gamma*q)*(1-alpha*beta*q^(2*i))*(1-alpha*beta*q^(2*i+1)))",
            ],
            [
                "(1-beta*gamma*q^(x+1))*(1-beta*q^(N+1-x))*(1-alpha*q^(x+1))*(gamma-alpha*q^(N+1-x))/(alpha*beta*q^2*(1-alpha*q)*(1-beta*gamma*q))",
                "-(q^i-q^N)*(q^N-q^(i+1))*(1-alpha*q^(i+2))*(1-beta*gamma*q^(i+2))/((1-alpha*beta*q^(2*i+3))*(1-alpha*beta*q^(2*i+4)))",
                MINUS_P1_FROM_LAMBDA,
                "(1-beta*q^(i+1))*(gamma-alpha*q^(i+1))*(1-alpha*beta*q^(N+i+2))*(1-alpha*beta*q^(N+i+3))/(alpha*beta*q^2*(1-alpha*beta*q^(2*i+2))*(1-alpha*beta*q^(2*i+3)))",
            ],
        ),
        b2p(
            "qRIII/III'",
            ("qRIII", "qRIII"),
            -2,
            -2,
            &[(Alpha, "alpha*q^2"), (Gamma, "gamma*q^2")],
            [
                "(1-q^(N-i-1))*(1-q^(N-i))*(1-alpha*q^(i+1))*(1-alpha*q^(i+2))*(1-beta*gamma*q^(i+1))*(1-beta*gamma*q^(i+2))/((1-q^(N-1))*(1-q^N)*(1-alpha*q)*(1-alpha*q^2)*(1-beta*gamma*q)*(1-beta*gamma*q^2))*(1-alpha*beta*q^(i+1))*(1-alpha*beta*q^(i+2))/((1-alpha*beta*q^(2*i+1))*(1-alpha*beta*q^(2*i+2)))",
                "(1-q^i)*(1-q^(N-i))*(1-alpha*q^(i+1))*(1-beta*gamma*q^(i+1))*(gamma*q^(1-i)-alpha*q)*(1-beta*q^i)/((1-q^(N-1))*(1-q^N)*(1-alpha*q)*(1-alpha*q^2)*(1-beta*gamma*q)*(1-beta*gamma*q^2))*(1-alpha*beta*q^(i+1))*(1-alpha*beta*q^(N+i+1))*(1+q)/((1-alpha*beta*q^(2*i))*(1-alpha*beta*q^(2*i+2)))",
                "q^3*(1-q^(i-1))*(1-q^i)*(gamma*q^(-i)-alpha)*(gamma*q^(1-i)-alpha)*(1-beta*q^(i-1))*(1-beta*q^i)/((1-q^(N-1))*(1-q^N)*(1-alpha*q)*(1-alpha*q^2)*(1-beta*gamma*q)*(1-beta*gamma*q^2))*(1-alpha*beta*q^(N+i))*(1-alpha*beta*q^(N+i+1))/((1-alpha*beta*q^(2*i))*(1-alpha*beta*q^(2*i+1)))",
            ],
            [
                "(1-q^(-x))*(1-q^(1-x))*(1-gamma*q^(x-N))*(1-gamma*q^(x-N+1))/((1-alpha*q)*(1-alpha*q^2)*(1-q^(N-1))*(1-q^N)*(1-beta*gamma*q)*(1-beta*gamma*q^2))",
                "q^(2*i-2*N+2)/((1-alpha*beta*q^(2*i+3))*(1-alpha*beta*q^(2*i+4)))",
                MINUS_P1_FROM_ZERO,
                "q^(2*i-2*N+1)/((1-alpha*beta*q^(2*i+2))*(1-alpha*beta*q^(2*i+3)))",
            ],
        ),
        b2p(
            "qRIII/IV'",
            ("qRIII", "qRIV"),
            -1,
            -1,
            &[(Alpha, "alpha*q^2"), (Gamma, "gamma*q")],
            [
                "(1-q^(N-i))*(1-alpha*q^(i+1))*(1-alpha*q^(i+2))*(1-alpha*beta*q^(i+1))*(1-alpha*beta*q^(i+2))*(1-beta*gamma*q^(i+1))/((1-q^N)*(1-alpha*q)*(1-alpha*q^2)*(1-beta*gamma*q)*(1-alpha*beta*q^(2*i+1))*(1-alpha*beta*q^(2*i+2)))",
                "q*(1-q^i)*(1-alpha*q^(i+1))*(1-beta*q^i)*(1-alpha*beta*q^(i+1))/((1-q^N)*(1-alpha*q)*(1-alpha*q^2)*(1-beta*gamma*q)*(1-alpha*beta*q^(2*i+1)))*(-alpha*q*(1-q^(N-i))*(1-beta*gamma*q^(i+1))/(1-alpha*beta*q^(2*i+2))+(gamma*q^(-i)-alpha)*(1-alpha*beta*q^(N+i+1))/(1-alpha*beta*q^(2*i)))",
                "-alpha*q^3*(1-q^(i-1))*(1-q^i)*(gamma*q^(-i)-alpha)*(1-beta*q^(i-1))*(1-beta*q^i)*(1-alpha*beta*q^(N+i+1))/((1-q^N)*(1-alpha*q)*(1-alpha*q^2)*(1-beta*gamma*q)*(1-alpha*beta*q^(2*i))*(1-alpha*beta*q^(2*i+1)))",
            ],
            [
                "(1-q^(-x))*(1-gamma*q^(x-N))*(1-alpha*q^(x+1))*(gamma-alpha*q^(N+1-x))/(alpha*q*(1-alpha*q)*(1-alpha*q^2)*(1-beta*gamma*q)*(1-q^N))",
                "-q^(i-N)*(q^N-q^(i+1))*(1-beta*gamma*q^(i+2))/((1-alpha*beta*q^(2*i+3))*(1-alpha*beta*q^(2*i+4)))",
                MINUS_P1_FROM_ZERO,
                "-q^(i-N-1)*(1-alpha*beta*q^(N+i+2))*(gamma-alpha*q^(i+1))/(alpha*(1-alpha*beta*q^(2*i+2))*(1-alpha*beta*q^(2*i+3)))",
            ],
        ),
        b2p(
            "qRIV/IV'",
            ("qRIV", "qRIV"),
            0,
            0,
            &[(Alpha, "alpha*q^2")],
            [
                "(1-alpha*q^(i+1))*(1-alpha*q^(i+2))*(1-alpha*beta*q^(i+1))*(1-alpha*beta*q^(i+2))/((1-alpha*q)*(1-alpha*q^2)*(1-alpha*beta*q^(2*i+1))*(1-alpha*beta*q^(2*i+2)))",
                PLUS_M1,
                "alpha^2*q^3*(1-q^(i-1))*(1-q^i)*(1-beta*q^(i-1))*(1-beta*q^i)/((1-alpha*q)*(1-alpha*q^2)*(1-alpha*beta*q^(2*i))*(1-alpha*beta*q^(2*i+1)))",
            ],
            [
                "(1-alpha*q^(x+1))*(1-alpha*q^(x+2))*(gamma-alpha*q^(N+1-x))*(gamma-alpha*q^(N+2-x))/(alpha^2*q^3*(1-alpha*q)*(1-alpha*q^2))",
                "(q^N-q^i)*(q^N-q^(i+1))*(1-beta*gamma*q^(i+1))*(1-beta*gamma*q^(i+2))/((1-alpha*beta*q^(2*i+3))*(1-alpha*beta*q^(2*i+4)))",
                MINUS_P1_FROM_LAMBDA,
                "(1-alpha*beta*q^(N+i+2))*(1-alpha*beta*q^(N+i+3))*(gamma-alpha*q^(i+1))*(gamma-alpha*q^(i+2))/(alpha^2*q^3*(1-alpha*beta*q^(2*i+2))*(1-alpha*beta*q^(2*i+3)))",
            ],
        ),
    ])
}
