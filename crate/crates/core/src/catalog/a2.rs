//! A2 lists of the eleven Askey-scheme families.
//!
//! Plus forms are `[λ^+, Φ^{0,+}, Φ^{-1,+}]`, minus forms `[λ^-, Φ^{0,-}, Φ^{1,-}]`.

use alloc::vec::Vec;

use super::{form, parse, Group, NuSpec, RelationEntry, Spec};
use crate::contiguity::RelationKind;
use crate::families::FamilyId::{self, *};
use crate::families::Param::{self, *};

fn a2(id: &str, family: FamilyId, eta: i64, n_offset: i64, map: &[(Param, &str)], plus: [&str; 3], minus: [&str; 3]) -> RelationEntry {
    let spec = Spec { id, family, kind: RelationKind::A2, group: Group::A2List, eta, n_offset, map };
    spec.build(
        Some(form(plus[0], &[(0, plus[1]), (-1, plus[2])])),
        Some(form(minus[0], &[(1, minus[2]), (0, minus[1])])),
    )
}

fn nu(mut e: RelationEntry, nu: NuSpec, chi: &str) -> RelationEntry {
    e.nu = Some(nu);
    e.chi = Some(parse(chi));
    e
}

fn grid(s: &str) -> NuSpec {
    NuSpec::Grid(parse(s))
}

fn qpow(s: &str) -> NuSpec {
    NuSpec::QPower(parse(s))
}

fn value(s: &str) -> NuSpec {
    NuSpec::Value(parse(s))
}

pub(super) fn entries() -> Vec<RelationEntry> {
    let mut v = Vec::new();
    v.extend(q_racah());
    v.extend(q_hahn());
    v.extend(dual_q_hahn());
    v.extend(quantum_q_krawtchouk());
    v.extend(q_krawtchouk());
    v.extend(affine_q_krawtchouk());
    v.extend(dual_q_krawtchouk());
    v.extend(racah());
    v.extend(hahn());
    v.extend(dual_hahn());
    v.extend(krawtchouk());
    v
}

fn q_racah() -> Vec<RelationEntry> {
    Vec::from([
        nu(
            a2(
                "qRI",
                QRacah,
                0,
                -1,
                &[(Beta, "q*beta"), (Gamma, "gamma/q")],
                [
                    "1",
                    "(1-q^(i-N))*(1-alpha*beta*q^(i+1))/((1-q^(-N))*(1-alpha*beta*q^(2*i+1)))",
                    "(1-q^i)*(1-alpha*beta*q^(N+i+1))/((1-q^N)*(1-alpha*beta*q^(2*i+1)))",
                ],
                [
                    "(1-gamma*q^x)*(1-q^(N-x))/(1-q^N)",
                    "(1-beta*q^(i+1))*(alpha*q^(i+1)-gamma)/(1-alpha*beta*q^(2*i+2))",
                    "(1-alpha*q^(i+1))*(1-beta*gamma*q^(i+1))/(1-alpha*beta*q^(2*i+2))",
                ],
            ),
            grid("N"),
            "w_N/((gamma-1)*(1-q^(-N)))",
        ),
        nu(
            a2(
                "qRII",
                QRacah,
                0,
                0,
                &[(Beta, "q*beta")],
                [
                    "1",
                    "(1-alpha*beta*q^(i+1))*(1-beta*gamma*q^(i+1))/((1-beta*gamma*q)*(1-alpha*beta*q^(2*i+1)))",
                    "-beta*q*(1-q^i)*(gamma-alpha*q^i)/((1-beta*gamma*q)*(1-alpha*beta*q^(2*i+1)))",
                ],
                [
                    "(1-beta*gamma*q^(x+1))*(1-beta*q^(N+1-x))/(beta*q*(1-beta*gamma*q))",
                    "(1-beta*q^(i+1))*(1-alpha*beta*q^(N+i+2))/(beta*q*(1-alpha*beta*q^(2*i+2)))",
                    "(q^i-q^N)*(1-alpha*q^(i+1))/(1-alpha*beta*q^(2*i+2))",
                ],
            ),
            qpow("beta*q^(N+1)"),
            "0",
        ),
        nu(
            a2(
                "qRIII",
                QRacah,
                -1,
                -1,
                &[(Alpha, "q*alpha"), (Gamma, "q*gamma")],
                [
                    "1",
                    "(1-q^(N-i))*(1-alpha*q^(i+1))*(1-alpha*beta*q^(i+1))*(1-beta*gamma*q^(i+1))/((1-q^N)*(1-alpha*q)*(1-beta*gamma*q)*(1-alpha*beta*q^(2*i+1)))",
                    "(1-q^i)*(gamma*q^(1-i)-alpha*q)*(1-beta*q^i)*(1-alpha*beta*q^(N+i+1))/((1-q^N)*(1-alpha*q)*(1-beta*gamma*q)*(1-alpha*beta*q^(2*i+1)))",
                ],
                [
                    "(1-q^(-x))*(1-gamma*q^(x-N))/((1-beta*gamma*q)*(1-alpha*q)*(1-q^N))",
                    "-q^(i-N)/(1-alpha*beta*q^(2*i+2))",
                    "q^(i-N)/(1-alpha*beta*q^(2*i+2))",
                ],
            ),
            grid("0"),
            "-(1-q^(-N)/beta)*(1-gamma*q)*(1-gamma*q^(-N)/alpha)*alpha*beta*q^2/((1-alpha*q)*(1-beta*gamma*q)*(1-q^(-N))*(1-gamma*q^(1-N))*(1-gamma*q^(2-N)))",
        ),
        nu(
            a2(
                "qRIV",
                QRacah,
                0,
                0,
                &[(Alpha, "q*alpha")],
                [
                    "1",
                    "(1-alpha*q^(i+1))*(1-alpha*beta*q^(i+1))/((1-alpha*q)*(1-alpha*beta*q^(2*i+1)))",
                    "-q*alpha*(1-q^i)*(1-beta*q^i)/((1-alpha*q)*(1-alpha*beta*q^(2*i+1)))",
                ],
                [
                    "(1-alpha*q^(x+1))*(gamma-alpha*q^(N+1-x))/(alpha*q*(1-alpha*q))",
                    "(1-alpha*beta*q^(N+i+2))*(gamma-alpha*q^(i+1))/(alpha*q*(1-alpha*beta*q^(2*i+2)))",
                    "-(q^N-q^i)*(1-beta*gamma*q^(i+1))/(1-alpha*beta*q^(2*i+2))",
                ],
            ),
            qpow("1/(alpha*q)"),
            "0",
        ),
    ])
}

fn q_hahn() -> Vec<RelationEntry> {
    Vec::from([
        a2(
            "qHI",
            QHahn,
            0,
            0,
            &[(Alpha, "q*alpha")],
            [
                "1",
                "(1-alpha*q^(i+1))*(1-alpha*beta*q^(i+1))/((1-alpha*q)*(1-alpha*beta*q^(2*i+1)))",
                "-alpha*q*(1-q^i)*(1-beta*q^i)/((1-alpha*q)*(1-alpha*beta*q^(2*i+1)))",
            ],
            [
                "q^N*(alpha*q-q^(-x))/(1-alpha*q)",
                "-q^i*(1-alpha*beta*q^(N+i+2))/(1-alpha*beta*q^(2*i+2))",
                "(q^i-q^N)/(1-alpha*beta*q^(2*i+2))",
            ],
        ),
        a2(
            "qHII",
            QHahn,
            -1,
            -1,
            &[(Alpha, "q*alpha")],
            [
                "1",
                "(1-q^(N-i))*(1-alpha*beta*q^(i+1))*(1-alpha*q^(i+1))/((1-q^N)*(1-alpha*beta*q^(2*i+1))*(1-alpha*q))",
                "-alpha*q*(1-q^i)*(1-alpha*beta*q^(N+i+1))*(1-beta*q^i)/((1-q^N)*(1-alpha*beta*q^(2*i+1))*(1-alpha*q))",
            ],
            [
                "(1-q^(-x))/((1-q^N)*(1-alpha*q))",
                "-q^(i-N)/(1-alpha*beta*q^(2*i+2))",
                "q^(i-N)/(1-alpha*beta*q^(2*i+2))",
            ],
        ),
        a2(
            "qHIII",
            QHahn,
            0,
            0,
            &[(Beta, "q*beta")],
            [
                "1",
                "(1-alpha*beta*q^(i+1))/(1-alpha*beta*q^(2*i+1))",
                "alpha*beta*q^(i+1)*(1-q^i)/(1-alpha*beta*q^(2*i+1))",
            ],
            [
                "(1-beta*q^(N+1-x))/(beta*q)",
                "(1-beta*q^(i+1))*(1-alpha*beta*q^(N+i+2))/(beta*q*(1-alpha*beta*q^(2*i+2)))",
                "(q^i-q^N)*(1-alpha*q^(i+1))/(1-alpha*beta*q^(2*i+2))",
            ],
        ),
        a2(
            "qHIV",
            QHahn,
            0,
            -1,
            &[(Beta, "q*beta")],
            [
                "1",
                "(1-q^(i-N))*(1-alpha*beta*q^(i+1))/((1-q^(-N))*(1-alpha*beta*q^(2*i+1)))",
                "(1-q^i)*(1-alpha*beta*q^(N+i+1))/((1-q^N)*(1-alpha*beta*q^(2*i+1)))",
            ],
            [
                "(1-q^(N-x))/(1-q^N)",
                "alpha*q^(i+1)*(1-beta*q^(i+1))/(1-alpha*beta*q^(2*i+2))",
                "(1-alpha*q^(i+1))/(1-alpha*beta*q^(2*i+2))",
            ],
        ),
    ])
}

fn dual_q_hahn() -> Vec<RelationEntry> {
    Vec::from([
        a2(
            "dqHI",
            DualQHahn,
            -1,
            -1,
            &[(Alpha, "q*alpha"), (Beta, "q*beta")],
            [
                "1",
                "(1-q^(N-i))*(1-alpha*q^(i+1))/((1-q^N)*(1-alpha*q))",
                "-alpha*q*(1-q^i)*(1-beta*q^(N-i+1))/((1-q^N)*(1-alpha*q))",
            ],
            [
                "(1-q^(-x))*(1-alpha*beta*q^(x+1))/((1-alpha*q)*(1-q^N))",
                "-q^(i-N)",
                "q^(i-N)",
            ],
        ),
        a2(
            "dqHII",
            DualQHahn,
            0,
            -1,
            &[],
            ["1", "(q^i-q^N)/(1-q^N)", "(1-q^i)/(1-q^N)"],
            [
                "(1-q^(N-x))*(1-alpha*beta*q^(x+N+1))/(1-q^N)",
                "alpha*q*(q^i-beta*q^N)",
                "1-alpha*q^(i+1)",
            ],
        ),
        a2(
            "dqHIII",
            DualQHahn,
            0,
            0,
            &[(Alpha, "q*alpha"), (Beta, "beta/q")],
            ["1", "(1-alpha*q^(i+1))/(1-alpha*q)", "-alpha*q*(1-q^i)/(1-alpha*q)"],
            ["(q^(-x)-beta)*(1-alpha*q^(x+1))/(1-alpha*q)", "q^(i-N)-beta", "1-q^(i-N)"],
        ),
    ])
}

fn quantum_q_krawtchouk() -> Vec<RelationEntry> {
    Vec::from([
        a2(
            "qqKI",
            QuantumQKrawtchouk,
            0,
            0,
            &[(Alpha, "q*alpha")],
            ["1", "q^(-i)", "1-q^(-i)"],
            ["q^(-N)-alpha*q^(1-x)", "q^(-i)-alpha*q", "q^(-N)-q^(-i)"],
        ),
        a2(
            "qqKII",
            QuantumQKrawtchouk,
            0,
            -1,
            &[(Alpha, "q*alpha")],
            ["1", "(1-q^(N-i))/(1-q^N)", "(1-q^(-i))/(1-q^(-N))"],
            ["alpha*q*(1-q^(N-x))/(1-q^N)", "alpha*q-q^(-i)", "q^(-i)"],
        ),
        a2(
            "qqKIII",
            QuantumQKrawtchouk,
            -1,
            -1,
            &[],
            ["1-q^N", "1-q^(N-i)", "-q^N*(1-q^(-i))*(1-alpha*q^i)"],
            ["alpha*q^(N+1)*(1-q^(-x))/(1-q^N)", "-q^(-i)", "q^(-i)"],
        ),
    ])
}

fn q_krawtchouk() -> Vec<RelationEntry> {
    Vec::from([
        a2(
            "qKI",
            QKrawtchouk,
            0,
            0,
            &[(Alpha, "q*alpha")],
            ["1", "(1-alpha*q^i)/(1-alpha*q^(2*i))", "alpha*q^i*(1-q^i)/(1-alpha*q^(2*i))"],
            [
                "q^(N-x)",
                "q^i*(1-alpha*q^(N+i+1))/(1-alpha*q^(2*i+1))",
                "(q^N-q^i)/(1-alpha*q^(2*i+1))",
            ],
        ),
        a2(
            "qKII",
            QKrawtchouk,
            0,
            -1,
            &[(Alpha, "q*alpha")],
            [
                "1",
                "(1-q^(i-N))*(1-alpha*q^i)/((1-alpha*q^(2*i))*(1-q^(-N)))",
                "(1-q^i)*(1-alpha*q^(N+i))/((1-alpha*q^(2*i))*(1-q^N))",
            ],
            ["(1-q^(N-x))/(1-q^N)", "-alpha*q^(2*i+1)/(1-alpha*q^(2*i+1))", "1/(1-alpha*q^(2*i+1))"],
        ),
        a2(
            "qKIII",
            QKrawtchouk,
            -1,
            -1,
            &[(Alpha, "q*alpha")],
            [
                "1",
                "(1-q^(N-i))*(1-alpha*q^i)/((1-alpha*q^(2*i))*(1-q^N))",
                "alpha*q^i*(1-alpha*q^(i+N))*(1-q^i)/((1-alpha*q^(2*i))*(1-q^N))",
            ],
            ["(1-q^(-x))/(1-q^N)", "-q^(i-N)/(1-alpha*q^(2*i+1))", "q^(i-N)/(1-alpha*q^(2*i+1))"],
        ),
    ])
}

fn affine_q_krawtchouk() -> Vec<RelationEntry> {
    Vec::from([
        a2(
            "aqKI",
            AffineQKrawtchouk,
            0,
            0,
            &[(Alpha, "q*alpha")],
            ["1", "(1-alpha*q^(i+1))/(1-alpha*q)", "-alpha*q*(1-q^i)/(1-alpha*q)"],
            ["q^N*(alpha*q-q^(-x))/(1-alpha*q)", "-q^i", "q^i-q^N"],
        ),
        a2(
            "aqKII",
            AffineQKrawtchouk,
            0,
            -1,
            &[],
            ["1", "(1-q^(i-N))/(1-q^(-N))", "(1-q^i)/(1-q^N)"],
            ["(1-q^(N-x))/(1-q^N)", "alpha*q^(i+1)", "1-alpha*q^(i+1)"],
        ),
        a2(
            "aqKIII",
            AffineQKrawtchouk,
            -1,
            -1,
            &[(Alpha, "q*alpha")],
            [
                "1",
                "(1-q^(N-i))*(1-alpha*q^(i+1))/((1-q^N)*(1-alpha*q))",
                "-alpha*q*(1-q^i)/((1-q^N)*(1-alpha*q))",
            ],
            ["(1-q^(-x))/((1-q^N)*(1-alpha*q))", "-q^(i-N)", "q^(i-N)"],
        ),
    ])
}

fn dual_q_krawtchouk() -> Vec<RelationEntry> {
    Vec::from([
        a2(
            "dqKI",
            DualQKrawtchouk,
            0,
            -1,
            &[],
            ["1", "(1-q^(i-N))/(1-q^(-N))", "(1-q^i)/(1-q^N)"],
            ["(1-q^(N-x))*(1-alpha*q^(x+N))/(1-q^N)", "-alpha*q^N", "1"],
        ),
        a2(
            "dqKII",
            DualQKrawtchouk,
            -1,
            -1,
            &[(Alpha, "q^2*alpha")],
            ["1", "(1-q^(N-i))/(1-q^N)", "-alpha*q^(N+1)*(1-q^(-i))/(1-q^N)"],
            ["(1-q^(-x))*(1-alpha*q^x)/(1-q^(-N))", "q^i", "-q^i"],
        ),
    ])
}

fn racah() -> Vec<RelationEntry> {
    Vec::from([
        nu(
            a2(
                "RI",
                Racah,
                0,
                -1,
                &[(Beta, "beta+1"), (Gamma, "gamma-1")],
                [
                    "1",
                    "(i+1+alpha+beta)*(N-i)/((2*i+1+alpha+beta)*N)",
                    "(i+1+alpha+beta+N)*i/((2*i+1+alpha+beta)*N)",
                ],
                [
                    "(x+gamma)*(x-N)/N",
                    "(i+1+beta)*(i+1+alpha-gamma)/(2*i+2+alpha+beta)",
                    "-(i+beta+gamma+1)*(i+alpha+1)/(2*i+2+alpha+beta)",
                ],
            ),
            grid("N"),
            "w_N/(N*gamma)",
        ),
        nu(
            a2(
                "RII",
                Racah,
                0,
                0,
                &[(Beta, "beta+1")],
                [
                    "1",
                    "(i+1+alpha+beta)*(i+1+beta+gamma)/((2*i+1+alpha+beta)*(1+beta+gamma))",
                    "-i*(i+alpha-gamma)/((2*i+1+alpha+beta)*(1+beta+gamma))",
                ],
                [
                    "(x+beta+gamma+1)*(N+beta-x+1)/(1+beta+gamma)",
                    "(i+2+alpha+beta+N)*(i+1+beta)/(2*i+2+alpha+beta)",
                    "(N-i)*(i+1+alpha)/(2*i+2+alpha+beta)",
                ],
            ),
            value("beta+N+1"),
            "0",
        ),
        nu(
            a2(
                "RIII",
                Racah,
                -1,
                -1,
                &[(Alpha, "alpha+1"), (Gamma, "gamma+1")],
                [
                    "1",
                    "(i+1+alpha+beta)*(i+1+alpha)*(N-i)*(i+1+beta+gamma)/((2*i+1+alpha+beta)*(1+alpha)*(1+beta+gamma)*N)",
                    "i*(i+beta)*(i+alpha-gamma)*(i+1+alpha+beta+N)/((2*i+1+alpha+beta)*(1+alpha)*(1+beta+gamma)*N)",
                ],
                [
                    "x*(x+gamma-N)/((1+alpha)*(1+beta+gamma)*N)",
                    "1/(2*i+2+alpha+beta)",
                    "-1/(2*i+2+alpha+beta)",
                ],
            ),
            grid("0"),
            "(gamma+1)*(beta+N)*(alpha+N-gamma)/((beta+gamma+1)*(alpha+1)*(N-2-gamma)*(N-gamma-1)*N)",
        ),
        nu(
            a2(
                "RIV",
                Racah,
                0,
                0,
                &[(Alpha, "alpha+1")],
                [
                    "1",
                    "(i+1+alpha+beta)*(i+1+alpha)/((1+alpha)*(2*i+1+alpha+beta))",
                    "-i*(i+beta)/((1+alpha)*(2*i+1+alpha+beta))",
                ],
                [
                    "(x+1+alpha)*(N+alpha-gamma-x+1)/(1+alpha)",
                    "(i+2+alpha+beta+N)*(i+1+alpha-gamma)/(2*i+2+alpha+beta)",
                    "(i+1+beta+gamma)*(N-i)/(2*i+2+alpha+beta)",
                ],
            ),
            value("-alpha-1"),
            "0",
        ),
    ])
}

fn hahn() -> Vec<RelationEntry> {
    Vec::from([
        a2(
            "HI",
            Hahn,
            0,
            0,
            &[(Alpha, "alpha+1")],
            [
                "1",
                "(i+1+alpha)*(i+1+alpha+beta)/((1+alpha)*(2*i+1+alpha+beta))",
                "-i*(i+beta)/((1+alpha)*(2*i+1+alpha+beta))",
            ],
            ["(x+1+alpha)/(1+alpha)", "(i+2+alpha+beta+N)/(2*i+2+alpha+beta)", "(i-N)/(2*i+2+alpha+beta)"],
        ),
        a2(
            "HII",
            Hahn,
            -1,
            -1,
            &[(Alpha, "alpha+1")],
            [
                "1",
                "(i+1+alpha)*(i+1+alpha+beta)*(N-i)/((2*i+1+alpha+beta)*(1+alpha)*N)",
                "-i*(i+1+alpha+beta+N)*(i+beta)/((2*i+1+alpha+beta)*(1+alpha)*N)",
            ],
            ["-x", "-(1+alpha)*N/(2*i+2+alpha+beta)", "(1+alpha)*N/(2*i+2+alpha+beta)"],
        ),
        a2(
            "HIII",
            Hahn,
            0,
            0,
            &[(Beta, "beta+1")],
            ["1", "(i+1+alpha+beta)/(2*i+1+alpha+beta)", "i/(2*i+1+alpha+beta)"],
            [
                "N+beta-x+1",
                "(i+2+alpha+beta+N)*(i+1+beta)/(2*i+2+alpha+beta)",
                "(N-i)*(i+1+alpha)/(2*i+2+alpha+beta)",
            ],
        ),
        a2(
            "HIV",
            Hahn,
            0,
            -1,
            &[(Beta, "beta+1")],
            [
                "1",
                "(i+1+alpha+beta)*(N-i)/((2*i+1+alpha+beta)*N)",
                "i*(i+1+alpha+beta+N)/((2*i+1+alpha+beta)*N)",
            ],
            ["N-x", "N*(i+1+beta)/(2*i+2+alpha+beta)", "N*(i+1+alpha)/(2*i+2+alpha+beta)"],
        ),
    ])
}

fn dual_hahn() -> Vec<RelationEntry> {
    Vec::from([
        a2(
            "dHI",
            DualHahn,
            -1,
            -1,
            &[(Alpha, "alpha+1"), (Beta, "beta+1")],
            ["1", "(i+1+alpha)*(N-i)/(N*(1+alpha))", "i*(i-1-beta-N)/(N*(1+alpha))"],
            ["x*(x+alpha+beta+1)/((1+alpha)*N)", "1", "-1"],
        ),
        a2(
            "dHII",
            DualHahn,
            0,
            -1,
            &[],
            ["1", "(N-i)/N", "i/N"],
            ["(N-x)*(x+1+alpha+beta+N)/N", "beta+N-i", "i+alpha+1"],
        ),
        a2(
            "dHIII",
            DualHahn,
            0,
            0,
            &[(Alpha, "alpha+1"), (Beta, "beta-1")],
            ["1", "(i+1+alpha)/(1+alpha)", "-i/(1+alpha)"],
            ["-(x+1+alpha)*(x+beta)/(1+alpha)", "i-beta-N", "N-i"],
        ),
    ])
}

fn krawtchouk() -> Vec<RelationEntry> {
    Vec::from([
        a2("KI", Krawtchouk, 0, -1, &[], ["1", "(N-i)/N", "i/N"], ["(N-x)/N", "1-alpha", "alpha"]),
        a2(
            "KII",
            Krawtchouk,
            -1,
            -1,
            &[],
            ["1", "(N-i)/N", "(alpha-1)*i/(alpha*N)"],
            ["x", "alpha*N", "-alpha*N"],
        ),
    ])
}
