//! The finite families: spectral variable, recurrence coefficients, series
//! and recurrence evaluation, and the q-Racah / Racah weights.
//!
//! Normalisation is `R_0 = R_i(0) = 1` with
//! `λ_x R_i = A_i R_{i+1} - (A_i + C_i) R_i + C_i R_{i-1}`.
//! Bannai–Ito (`BI`) and complementary Bannai–Ito (`CBI`) polynomials are
//! monic and delegate to [`crate::banita`].

use alloc::format;
use alloc::string::ToString;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_traits::{One, Zero};

use crate::banita;
use crate::error::{Error, Result};
use crate::expr::{Env, Var};
use crate::scalar::{self, int, Scalar, SeriesSpec};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyId {
    QRacah,
    QHahn,
    DualQHahn,
    QuantumQKrawtchouk,
    QKrawtchouk,
    AffineQKrawtchouk,
    DualQKrawtchouk,
    Racah,
    Hahn,
    DualHahn,
    Krawtchouk,
    BannaiIto,
    ComplementaryBannaiIto,
    /// The non-balanced `4φ3` function with free `δ` and `z`.
    Generalized,
}

use FamilyId::*;

impl FamilyId {
    pub const ALL: [FamilyId; 14] = [
        QRacah,
        QHahn,
        DualQHahn,
        QuantumQKrawtchouk,
        QKrawtchouk,
        AffineQKrawtchouk,
        DualQKrawtchouk,
        Racah,
        Hahn,
        DualHahn,
        Krawtchouk,
        BannaiIto,
        ComplementaryBannaiIto,
        Generalized,
    ];

    /// The eleven families carrying a catalog of A2 relations.
    pub const ASKEY: [FamilyId; 11] = [
        QRacah,
        QHahn,
        DualQHahn,
        QuantumQKrawtchouk,
        QKrawtchouk,
        AffineQKrawtchouk,
        DualQKrawtchouk,
        Racah,
        Hahn,
        DualHahn,
        Krawtchouk,
    ];

    pub fn code(self) -> &'static str {
        match self {
            QRacah => "qR",
            QHahn => "qH",
            DualQHahn => "dqH",
            QuantumQKrawtchouk => "qqK",
            QKrawtchouk => "qK",
            AffineQKrawtchouk => "aqK",
            DualQKrawtchouk => "dqK",
            Racah => "R",
            Hahn => "H",
            DualHahn => "dH",
            Krawtchouk => "K",
            BannaiIto => "BI",
            ComplementaryBannaiIto => "CBI",
            Generalized => "G",
        }
    }

    pub fn is_q(self) -> bool {
        matches!(
            self,
            QRacah | QHahn | DualQHahn | QuantumQKrawtchouk | QKrawtchouk | AffineQKrawtchouk | DualQKrawtchouk | Generalized
        )
    }

    pub fn params(self) -> &'static [Param] {
        use Param::*;
        match self {
            QRacah => &[Alpha, Beta, Gamma, Q],
            QHahn | DualQHahn => &[Alpha, Beta, Q],
            QuantumQKrawtchouk | QKrawtchouk | AffineQKrawtchouk | DualQKrawtchouk => &[Alpha, Q],
            Racah | BannaiIto | ComplementaryBannaiIto => &[Alpha, Beta, Gamma],
            Hahn | DualHahn => &[Alpha, Beta],
            Krawtchouk => &[Alpha],
            Generalized => &[Alpha, Beta, Gamma, Delta, Q, Z],
        }
    }

    /// Whether the family has `A_i, C_i` recurrence data.
    pub fn has_recurrence(self) -> bool {
        !matches!(self, ComplementaryBannaiIto | Generalized)
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

impl FromStr for FamilyId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        FamilyId::ALL
            .iter()
            .copied()
            .find(|f| f.code() == s)
            .ok_or_else(|| Error::UnknownFamily(s.to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Param {
    Alpha,
    Beta,
    Gamma,
    Delta,
    Q,
    Z,
}

impl Param {
    pub const ALL: [Param; 6] = [Param::Alpha, Param::Beta, Param::Gamma, Param::Delta, Param::Q, Param::Z];

    pub fn name(self) -> &'static str {
        self.var().name()
    }

    pub fn var(self) -> Var {
        match self {
            Param::Alpha => Var::Alpha,
            Param::Beta => Var::Beta,
            Param::Gamma => Var::Gamma,
            Param::Delta => Var::Delta,
            Param::Q => Var::Q,
            Param::Z => Var::Z,
        }
    }

    pub fn from_name(s: &str) -> Option<Param> {
        Param::ALL.iter().copied().find(|p| p.name() == s)
    }

    fn slot(self) -> usize {
        self as usize
    }
}

/// Named rational parameters of one family plus the size `N`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ParameterSet {
    pub family: FamilyId,
    pub n: u32,
    values: [Option<Scalar>; 6],
}

impl ParameterSet {
    pub fn new(family: FamilyId, n: u32) -> Self {
        ParameterSet { family, n, values: Default::default() }
    }

    pub fn with(mut self, p: Param, v: Scalar) -> Self {
        self.set(p, v);
        self
    }

    pub fn set(&mut self, p: Param, v: Scalar) {
        self.values[p.slot()] = Some(v);
    }

    pub fn get(&self, p: Param) -> Result<&Scalar> {
        self.values[p.slot()]
            .as_ref()
            .ok_or_else(|| Error::MissingParameter(p.name().to_string()))
    }

    pub fn try_get(&self, p: Param) -> Option<&Scalar> {
        self.values[p.slot()].as_ref()
    }

    /// The family's parameters in their canonical order, with values.
    pub fn named(&self) -> Vec<(Param, Scalar)> {
        self.family
            .params()
            .iter()
            .filter_map(|p| self.try_get(*p).map(|v| (*p, v.clone())))
            .collect()
    }

    pub fn q(&self) -> Result<&Scalar> {
        self.get(Param::Q)
    }

    pub fn n_i64(&self) -> i64 {
        i64::from(self.n)
    }

    /// Same values, different family tag (used for BI ↔ CBI pairings and
    /// the generalized function at balanced parameters).
    pub fn retag(&self, family: FamilyId) -> Self {
        ParameterSet { family, n: self.n, values: self.values.clone() }
    }

    pub fn with_n(&self, n: u32) -> Self {
        ParameterSet { n, ..self.clone() }
    }

    pub fn check_complete(&self) -> Result<()> {
        for p in self.family.params() {
            self.get(*p)?;
        }
        if self.family.is_q() {
            scalar::check_base(self.q()?)?;
        }
        Ok(())
    }
}

impl fmt::Display for ParameterSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}(N={}", self.family, self.n)?;
        for (p, v) in self.named() {
            write!(f, ", {}={}", p.name(), v)?;
        }
        f.write_str(")")
    }
}

/// `n = 2 n_e + n_p` with `n_p ∈ {0, 1}`.
pub fn parity(n: i64) -> (i64, i64) {
    (n.div_euclid(2), n.rem_euclid(2))
}

/// Evaluation environment: parameters plus optional degree and grid point.
pub struct PointEnv<'a> {
    pub params: &'a ParameterSet,
    pub i: Option<i64>,
    pub x: Option<i64>,
}

impl<'a> PointEnv<'a> {
    pub fn new(params: &'a ParameterSet) -> Self {
        PointEnv { params, i: None, x: None }
    }

    pub fn at_i(params: &'a ParameterSet, i: i64) -> Self {
        PointEnv { params, i: Some(i), x: None }
    }

    pub fn at_x(params: &'a ParameterSet, x: i64) -> Self {
        PointEnv { params, i: None, x: Some(x) }
    }
}

impl Env for PointEnv<'_> {
    fn var(&self, v: Var) -> Result<Scalar> {
        let idx = |o: Option<i64>, name: &str| o.ok_or_else(|| Error::MissingParameter(name.to_string()));
        let n = self.params.n_i64();
        Ok(match v {
            Var::Alpha => self.params.get(Param::Alpha)?.clone(),
            Var::Beta => self.params.get(Param::Beta)?.clone(),
            Var::Gamma => self.params.get(Param::Gamma)?.clone(),
            Var::Delta => self.params.get(Param::Delta)?.clone(),
            Var::Q => self.params.get(Param::Q)?.clone(),
            Var::Z => self.params.get(Param::Z)?.clone(),
            Var::N => int(n),
            Var::NE => int(parity(n).0),
            Var::NP => int(parity(n).1),
            Var::I => int(idx(self.i, "i")?),
            Var::IE => int(parity(idx(self.i, "i")?).0),
            Var::IP => int(parity(idx(self.i, "i")?).1),
            Var::X => int(idx(self.x, "x")?),
            Var::XE => int(parity(idx(self.x, "x")?).0),
            Var::XP => int(parity(idx(self.x, "x")?).1),
            Var::WeightAtN => weight(self.params, n)?,
        })
    }
}

/// Recurrence data at one degree.
#[derive(Debug, Clone, PartialEq)]
pub struct RecurrencePair {
    pub a: Scalar,
    pub c: Scalar,
}

impl RecurrencePair {
    pub fn y(&self) -> Scalar {
        -(&self.a + &self.c)
    }
}

/// A point at which `λ` can be evaluated: a grid index, or an off-grid
/// value given as `x` (classical families) or `q^x` (q-families).
#[derive(Debug, Clone, PartialEq)]
pub enum SpectralPoint {
    Grid(i64),
    Value(Scalar),
    QPower(Scalar),
}

struct Ctx<'a> {
    p: &'a ParameterSet,
}

impl Ctx<'_> {
    fn a(&self) -> Result<&Scalar> {
        self.p.get(Param::Alpha)
    }
    fn b(&self) -> Result<&Scalar> {
        self.p.get(Param::Beta)
    }
    fn g(&self) -> Result<&Scalar> {
        self.p.get(Param::Gamma)
    }
    fn qp(&self, e: i64) -> Result<Scalar> {
        scalar::powi(self.p.q()?, e)
    }
    fn n(&self) -> i64 {
        self.p.n_i64()
    }
}

fn one() -> Scalar {
    Scalar::one()
}

fn ratio_of(num: Scalar, den: Scalar, what: &str) -> Result<Scalar> {
    scalar::div(&num, &den, what)
}

/// `λ_x` at a grid point.
pub fn lambda(params: &ParameterSet, x: i64) -> Result<Scalar> {
    lambda_at(params, &SpectralPoint::Grid(x))
}

/// `λ` at a grid point or off-grid value.
pub fn lambda_at(params: &ParameterSet, point: &SpectralPoint) -> Result<Scalar> {
    let c = Ctx { p: params };
    let fam = params.family;
    match fam {
        BannaiIto => match point {
            SpectralPoint::Grid(x) => banita::lambda_bi(params, *x),
            _ => Err(Error::Unsupported("off-grid λ for BI".into())),
        },
        ComplementaryBannaiIto => match point {
            SpectralPoint::Grid(x) => banita::mu(params, *x),
            _ => Err(Error::Unsupported("off-grid μ for CBI".into())),
        },
        _ if fam.is_q() => {
            let u = match point {
                SpectralPoint::Grid(x) => c.qp(*x)?,
                SpectralPoint::QPower(u) => u.clone(),
                SpectralPoint::Value(_) => {
                    return Err(Error::Unsupported("q-family λ needs q^x, not x".into()))
                }
            };
            let inv = scalar::div(&one(), &u, "q^x")?;
            let base = -(one() - inv);
            Ok(match fam {
                QRacah | Generalized => base * (one() - c.g()? * &u * c.qp(-c.n())?),
                DualQHahn => base * (one() - c.a()? * c.b()? * c.qp(1)? * &u),
                DualQKrawtchouk => base * (one() - c.a()? * &u),
                _ => base,
            })
        }
        _ => {
            let x = match point {
                SpectralPoint::Grid(x) => int(*x),
                SpectralPoint::Value(v) => v.clone(),
                SpectralPoint::QPower(_) => {
                    return Err(Error::Unsupported("classical λ needs x, not q^x".into()))
                }
            };
            Ok(match fam {
                Racah => &x * (&x + c.g()? - int(c.n())),
                DualHahn => &x * (&x + c.a()? + c.b()? + one()),
                _ => -x,
            })
        }
    }
}

/// `(A_i, C_i)`; `C_0 = 0` by convention.
pub fn recurrence_coeffs(params: &ParameterSet, i: i64) -> Result<RecurrencePair> {
    let c = Ctx { p: params };
    let fam = params.family;
    let n = c.n();
    let what = || format!("recurrence coefficients of {} at i={i}", fam);
    let (a, cc) = match fam {
        BannaiIto => (banita::a_bi(params, i)?, banita::c_bi(params, i)?),
        ComplementaryBannaiIto | Generalized => {
            return Err(Error::Unsupported(format!("no A/C recurrence data for {fam}")))
        }
        QRacah => {
            let (al, be, ga) = (c.a()?, c.b()?, c.g()?);
            let ab = al * be;
            let a = ratio_of(
                (one() - c.qp(i - n)?)
                    * (one() - al * c.qp(i + 1)?)
                    * (one() - &ab * c.qp(i + 1)?)
                    * (one() - be * ga * c.qp(i + 1)?),
                (one() - &ab * c.qp(2 * i + 1)?) * (one() - &ab * c.qp(2 * i + 2)?),
                &what(),
            )?;
            let cc = if i == 0 {
                Scalar::zero()
            } else {
                ratio_of(
                    (one() - c.qp(i)?)
                        * (one() - be * c.qp(i)?)
                        * (one() - &ab * c.qp(i + n + 1)?)
                        * (ga - al * c.qp(i)?),
                    c.qp(n)? * (one() - &ab * c.qp(2 * i)?) * (one() - &ab * c.qp(2 * i + 1)?),
                    &what(),
                )?
            };
            (a, cc)
        }
        QHahn => {
            let (al, be) = (c.a()?, c.b()?);
            let ab = al * be;
            let a = ratio_of(
                (one() - c.qp(i - n)?) * (one() - al * c.qp(i + 1)?) * (one() - &ab * c.qp(i + 1)?),
                (one() - &ab * c.qp(2 * i + 1)?) * (one() - &ab * c.qp(2 * i + 2)?),
                &what(),
            )?;
            let cc = if i == 0 {
                Scalar::zero()
            } else {
                -ratio_of(
                    al * c.qp(i - n)? * (one() - c.qp(i)?) * (one() - be * c.qp(i)?) * (one() - &ab * c.qp(i + n + 1)?),
                    (one() - &ab * c.qp(2 * i)?) * (one() - &ab * c.qp(2 * i + 1)?),
                    &what(),
                )?
            };
            (a, cc)
        }
        DualQHahn => {
            let (al, be) = (c.a()?, c.b()?);
            (
                (one() - c.qp(i - n)?) * (one() - al * c.qp(i + 1)?),
                al * c.qp(1)? * (one() - c.qp(i)?) * (be - c.qp(i - n - 1)?),
            )
        }
        QuantumQKrawtchouk => {
            let al = c.a()?;
            (
                ratio_of(one() - c.qp(i - n)?, al * c.qp(2 * i + 1)?, &what())?,
                ratio_of((one() - c.qp(i)?) * (one() - al * c.qp(i)?), al * c.qp(2 * i)?, &what())?,
            )
        }
        QKrawtchouk => {
            let al = c.a()?;
            let a = ratio_of(
                (one() - c.qp(i - n)?) * (one() - al * c.qp(i)?),
                (one() - al * c.qp(2 * i)?) * (one() - al * c.qp(2 * i + 1)?),
                &what(),
            )?;
            let cc = if i == 0 {
                Scalar::zero()
            } else {
                al * c.qp(2 * i - n - 1)?
                    * ratio_of(
                        (one() - al * c.qp(i + n)?) * (one() - c.qp(i)?),
                        (one() - al * c.qp(2 * i - 1)?) * (one() - al * c.qp(2 * i)?),
                        &what(),
                    )?
            };
            (a, cc)
        }
        AffineQKrawtchouk => {
            let al = c.a()?;
            (
                (one() - c.qp(i - n)?) * (one() - al * c.qp(i + 1)?),
                -(al * c.qp(i - n)? * (one() - c.qp(i)?)),
            )
        }
        DualQKrawtchouk => {
            let al = c.a()?;
            (one() - c.qp(i - n)?, al * (one() - c.qp(i)?))
        }
        Racah => {
            let (al, be, ga) = (c.a()?, c.b()?, c.g()?);
            let ii = int(i);
            let s = al + be;
            let a = ratio_of(
                (&ii - int(n)) * (&ii + al + one()) * (&ii + &s + one()) * (&ii + be + ga + one()),
                (int(2 * i) + &s + one()) * (int(2 * i) + &s + int(2)),
                &what(),
            )?;
            let cc = if i == 0 {
                Scalar::zero()
            } else {
                ratio_of(
                    &ii * (&ii + al - ga) * (&ii + &s + int(n + 1)) * (&ii + be),
                    (int(2 * i) + &s) * (int(2 * i) + &s + one()),
                    &what(),
                )?
            };
            (a, cc)
        }
        Hahn => {
            let (al, be) = (c.a()?, c.b()?);
            let ii = int(i);
            let s = al + be;
            let a = ratio_of(
                (&ii + &s + one()) * (&ii + al + one()) * int(n - i),
                (int(2 * i) + &s + one()) * (int(2 * i) + &s + int(2)),
                &what(),
            )?;
            let cc = if i == 0 {
                Scalar::zero()
            } else {
                ratio_of(
                    &ii * (&ii + &s + int(n + 1)) * (&ii + be),
                    (int(2 * i) + &s) * (int(2 * i) + &s + one()),
                    &what(),
                )?
            };
            (a, cc)
        }
        DualHahn => {
            let (al, be) = (c.a()?, c.b()?);
            let ii = int(i);
            ((&ii + al + one()) * int(i - n), &ii * (&ii - be - int(n + 1)))
        }
        Krawtchouk => {
            let al = c.a()?;
            (al * int(n - i), int(i) * (one() - al))
        }
    };
    Ok(RecurrencePair { a, c: cc })
}

/// `X_i = A_{i-1} C_i`, with `X_0 = 0`.
pub fn x_coeff(params: &ParameterSet, i: i64) -> Result<Scalar> {
    if i <= 0 {
        return Ok(Scalar::zero());
    }
    Ok(recurrence_coeffs(params, i - 1)?.a * recurrence_coeffs(params, i)?.c)
}

/// `Y_i = -(A_i + C_i)`.
pub fn y_coeff(params: &ParameterSet, i: i64) -> Result<Scalar> {
    Ok(recurrence_coeffs(params, i)?.y())
}

/// The terminating series defining `R_i(x)` for the series-based families.
pub fn series_spec(params: &ParameterSet, i: i64, x: i64) -> Result<SeriesSpec> {
    let c = Ctx { p: params };
    let n = c.n();
    let fam = params.family;
    let zero = Scalar::zero;
    let spec = match fam {
        QRacah => {
            let (al, be, ga) = (c.a()?, c.b()?, c.g()?);
            SeriesSpec::new(
                Vec::from([c.qp(-i)?, al * be * c.qp(i + 1)?, c.qp(-x)?, ga * c.qp(x - n)?]),
                Vec::from([al * c.qp(1)?, be * ga * c.qp(1)?, c.qp(-n)?]),
                c.qp(1)?,
            )
        }
        Generalized => {
            let (al, be, ga) = (c.a()?, c.b()?, c.g()?);
            SeriesSpec::new(
                Vec::from([c.qp(-i)?, al * be * c.qp(i + 1)?, c.qp(-x)?, ga * c.qp(x - n)?]),
                Vec::from([al * c.qp(1)?, params.get(Param::Delta)?.clone(), c.qp(-n)?]),
                params.get(Param::Z)?.clone(),
            )
        }
        QHahn => {
            let (al, be) = (c.a()?, c.b()?);
            SeriesSpec::new(
                Vec::from([c.qp(-i)?, al * be * c.qp(i + 1)?, c.qp(-x)?]),
                Vec::from([al * c.qp(1)?, c.qp(-n)?]),
                c.qp(1)?,
            )
        }
        DualQHahn => {
            let (al, be) = (c.a()?, c.b()?);
            SeriesSpec::new(
                Vec::from([c.qp(-i)?, c.qp(-x)?, al * be * c.qp(x + 1)?]),
                Vec::from([al * c.qp(1)?, c.qp(-n)?]),
                c.qp(1)?,
            )
        }
        QuantumQKrawtchouk => SeriesSpec::new(
            Vec::from([c.qp(-i)?, c.qp(-x)?]),
            Vec::from([c.qp(-n)?]),
            c.a()? * c.qp(i + 1)?,
        ),
        QKrawtchouk => SeriesSpec::new(
            Vec::from([c.qp(-i)?, c.a()? * c.qp(i)?, c.qp(-x)?]),
            Vec::from([c.qp(-n)?, zero()]),
            c.qp(1)?,
        ),
        AffineQKrawtchouk => SeriesSpec::new(
            Vec::from([c.qp(-i)?, zero(), c.qp(-x)?]),
            Vec::from([c.a()? * c.qp(1)?, c.qp(-n)?]),
            c.qp(1)?,
        ),
        DualQKrawtchouk => SeriesSpec::new(
            Vec::from([c.qp(-i)?, c.qp(-x)?, c.a()? * c.qp(x)?]),
            Vec::from([c.qp(-n)?, zero()]),
            c.qp(1)?,
        ),
        Racah => {
            let (al, be, ga) = (c.a()?, c.b()?, c.g()?);
            SeriesSpec::new(
                Vec::from([int(-i), int(i) + al + be + one(), int(-x), int(x) + ga - int(n)]),
                Vec::from([al + one(), be + ga + one(), int(-n)]),
                one(),
            )
        }
        Hahn => {
            let (al, be) = (c.a()?, c.b()?);
            SeriesSpec::new(
                Vec::from([int(-i), int(i) + al + be + one(), int(-x)]),
                Vec::from([al + one(), int(-n)]),
                one(),
            )
        }
        DualHahn => {
            let (al, be) = (c.a()?, c.b()?);
            SeriesSpec::new(
                Vec::from([int(-i), int(-x), int(x) + al + be + one()]),
                Vec::from([al + one(), int(-n)]),
                one(),
            )
        }
        Krawtchouk => SeriesSpec::new(
            Vec::from([int(-i), int(-x)]),
            Vec::from([int(-n)]),
            scalar::div(&one(), c.a()?, "1/alpha")?,
        ),
        BannaiIto | ComplementaryBannaiIto => {
            return Err(Error::Unsupported(format!("{fam} is a combination of series")))
        }
    };
    Ok(spec)
}

fn check_grid(params: &ParameterSet, i: i64, x: i64) -> Result<()> {
    let n = params.n_i64();
    if !(0..=n).contains(&i) || !(0..=n).contains(&x) {
        return Err(Error::IndexOutOfRange { i, x, n: params.n });
    }
    Ok(())
}

/// `R_i(x)` from the (basic) hypergeometric definition.
pub fn eval_poly_hypergeometric(params: &ParameterSet, i: i64, x: i64) -> Result<Scalar> {
    check_grid(params, i, x)?;
    match params.family {
        BannaiIto => banita::eval_bi(params, i, x),
        ComplementaryBannaiIto => banita::eval_cbi(params, i, x),
        fam => {
            let spec = series_spec(params, i, x)?;
            if fam.is_q() {
                scalar::q_hyp_terminating(&spec, params.q()?, i as usize)
            } else {
                scalar::hyp_terminating(&spec, i as usize)
            }
        }
    }
}

/// `R_i(x)` generated by the three-term recurrence.
pub fn eval_poly_recurrence(params: &ParameterSet, i: i64, x: i64) -> Result<Scalar> {
    check_grid(params, i, x)?;
    Ok(recurrence_column(params, x, i)?.pop().unwrap_or_else(Scalar::one))
}

/// `[R_0(x), ..., R_top(x)]` from the recurrence.
pub fn recurrence_column(params: &ParameterSet, x: i64, top: i64) -> Result<Vec<Scalar>> {
    let fam = params.family;
    let mut out = Vec::from([Scalar::one()]);
    match fam {
        Generalized => return Err(Error::Unsupported("G has no three-term recurrence".into())),
        ComplementaryBannaiIto => {
            let mu = banita::mu(params, x)?;
            let sigma = banita::sigma(params)?;
            for k in 0..top {
                let sign = if k % 2 == 0 { one() } else { -one() };
                let prev = if k == 0 { Scalar::zero() } else { out[k as usize - 1].clone() };
                let next = (&mu - sign * &sigma) * &out[k as usize] - banita::tau(params, k)? * prev;
                out.push(next);
            }
        }
        BannaiIto => {
            let lam = lambda(params, x)?;
            for k in 0..top {
                let rc = recurrence_coeffs(params, k)?;
                let prev = if k == 0 { Scalar::zero() } else { out[k as usize - 1].clone() };
                let next = (&lam + &rc.a + &rc.c) * &out[k as usize] - x_coeff(params, k)? * prev;
                out.push(next);
            }
        }
        _ => {
            let lam = lambda(params, x)?;
            for k in 0..top {
                let rc = recurrence_coeffs(params, k)?;
                let prev = if k == 0 { Scalar::zero() } else { out[k as usize - 1].clone() };
                let num = (&lam + &rc.a + &rc.c) * &out[k as usize] - &rc.c * prev;
                out.push(scalar::div(&num, &rc.a, &format!("A_{k} in recurrence"))?);
            }
        }
    }
    Ok(out)
}

/// Orthogonality weight; published for q-Racah and Racah only.
pub fn weight(params: &ParameterSet, x: i64) -> Result<Scalar> {
    let c = Ctx { p: params };
    let n = c.n();
    if !(0..=n).contains(&x) {
        return Err(Error::IndexOutOfRange { i: 0, x, n: params.n });
    }
    let k = x as usize;
    match params.family {
        QRacah => {
            let (al, be, ga) = (c.a()?, c.b()?, c.g()?);
            let q = params.q()?;
            let pq = |a: Scalar| scalar::q_pochhammer(&a, q, k);
            let num = pq(al * q) * pq(be * ga * q) * pq(c.qp(-n)?) * pq(c.qp(-n)? * ga) * (one() - ga * c.qp(2 * x - n)?);
            let den = pq(q.clone())
                * pq(scalar::div(ga, al, "gamma/alpha")? * c.qp(-n)?)
                * pq(scalar::div(&one(), be, "1/beta")? * c.qp(-n)?)
                * pq(ga * q)
                * scalar::powi(&(al * be * q), x)?
                * (one() - ga * c.qp(-n)?);
            scalar::div(&num, &den, "q-Racah weight")
        }
        Racah => {
            let (al, be, ga) = (c.a()?, c.b()?, c.g()?);
            let p = |a: Scalar| scalar::pochhammer(&a, k);
            let two = int(2);
            let nn = int(n);
            let num = p(al + one()) * p(be + ga + one()) * p(-&nn) * p(ga - &nn) * p((-&nn + ga + &two) / &two);
            let den = p(-al - &nn + ga) * p(-be - &nn) * p((ga - &nn) / &two) * p(ga + one()) * p(one());
            scalar::div(&num, &den, "Racah weight")
        }
        fam => Err(Error::Unsupported(format!("no published weight for {fam}"))),
    }
}

/// Whole-set genericity check: every denominator the recurrence, the
/// spectral variable, the series and the weight need on the grid is nonzero,
/// `A_i ≠ 0` for `i < N`, `C_i ≠ 0` for `1 ≤ i ≤ N`, `A_N = 0`, and `λ` is
/// injective on the grid.
pub fn admissible(params: &ParameterSet) -> Result<()> {
    params.check_complete()?;
    let n = params.n_i64();
    let fam = params.family;
    let bad = |s: &str| Err(Error::SingularParameters(format!("{params}: {s}")));
    let mut lams: Vec<Scalar> = Vec::new();
    for x in 0..=n {
        let l = lambda(params, x)?;
        if lams.contains(&l) {
            return bad(&format!("λ not injective at x={x}"));
        }
        lams.push(l);
    }
    if fam == ComplementaryBannaiIto {
        banita::cbi_admissible(params)?;
    } else if fam.has_recurrence() {
        for i in 0..=n {
            let rc = recurrence_coeffs(params, i)?;
            if i < n && rc.a.is_zero() {
                return bad(&format!("A_{i} = 0"));
            }
            if i == n && !rc.a.is_zero() {
                return bad("A_N ≠ 0");
            }
            if i > 0 && rc.c.is_zero() {
                return bad(&format!("C_{i} = 0"));
            }
        }
        if fam == BannaiIto {
            banita::bi_admissible(params)?;
        }
    }
    for i in 0..=n {
        for x in 0..=n {
            eval_poly_hypergeometric(params, i, x)?;
        }
    }
    if matches!(fam, QRacah | Racah) {
        for x in 0..=n {
            if weight(params, x)?.is_zero() {
                return bad(&format!("weight vanishes at x={x}"));
            }
        }
    }
    Ok(())
}

/// Series values `R_i(x)` for `0 ≤ i, x ≤ N`, indexed `[i][x]`.
pub fn poly_table(params: &ParameterSet) -> Result<Vec<Vec<Scalar>>> {
    let n = params.n_i64();
    (0..=n)
        .map(|i| (0..=n).map(|x| eval_poly_hypergeometric(params, i, x)).collect())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sampling::{sample_admissible, SampleRng};
    use crate::scalar::ratio;
    use proptest::prelude::*;

    fn krawtchouk(alpha: Scalar, n: u32) -> ParameterSet {
        ParameterSet::new(Krawtchouk, n).with(Param::Alpha, alpha)
    }

    #[test]
    fn lambda_examples() {
        assert_eq!(lambda(&krawtchouk(ratio(1, 2), 5), 3).unwrap(), int(-3));
        let r = ParameterSet::new(Racah, 3)
            .with(Param::Alpha, ratio(1, 3))
            .with(Param::Beta, ratio(1, 5))
            .with(Param::Gamma, ratio(1, 2));
        assert_eq!(lambda(&r, 1).unwrap(), ratio(-3, 2));
        for fam in FamilyId::ASKEY {
            let mut rng = SampleRng::seeded(11);
            let p = sample_admissible(fam, 3, &mut rng).unwrap();
            assert_eq!(lambda(&p, 0).unwrap(), Scalar::zero(), "{fam}");
        }
    }

    #[test]
    fn krawtchouk_coefficients() {
        let p = krawtchouk(ratio(1, 2), 3);
        let rc = recurrence_coeffs(&p, 1).unwrap();
        assert_eq!((rc.a, rc.c), (int(1), ratio(1, 2)));
        assert_eq!(recurrence_coeffs(&p, 3).unwrap().a, Scalar::zero());
        assert_eq!(recurrence_coeffs(&p, 0).unwrap().c, Scalar::zero());
        let k2 = krawtchouk(ratio(1, 2), 2);
        assert_eq!(eval_poly_hypergeometric(&k2, 1, 1).unwrap(), Scalar::zero());
    }

    #[test]
    fn krawtchouk_first_degree() {
        // R_1(x) = 1 - x/(αN)
        let alpha = ratio(2, 7);
        let p = krawtchouk(alpha.clone(), 4);
        for x in 0..=4 {
            let expect = int(1) - int(x) / (&alpha * int(4));
            assert_eq!(eval_poly_recurrence(&p, 1, x).unwrap(), expect);
        }
    }

    #[test]
    fn q_racah_small_point() {
        let p = ParameterSet::new(QRacah, 2)
            .with(Param::Q, ratio(1, 2))
            .with(Param::Alpha, ratio(1, 3))
            .with(Param::Beta, ratio(1, 5))
            .with(Param::Gamma, ratio(1, 7));
        let a = eval_poly_hypergeometric(&p, 1, 1).unwrap();
        assert_eq!(a, eval_poly_recurrence(&p, 1, 1).unwrap());
        // Direct two-term sum: 1 + (1-q^-1)(1-αβq^2)(1-q^-1)(1-γq^-1) q / ((1-q)(1-αq)(1-βγq)(1-q^-2))
        let q = ratio(1, 2);
        let (al, be, ga) = (ratio(1, 3), ratio(1, 5), ratio(1, 7));
        let qi = |e: i64| scalar::powi(&q, e).unwrap();
        let num = (int(1) - qi(-1)) * (int(1) - &al * &be * qi(2)) * (int(1) - qi(-1)) * (int(1) - &ga * qi(-1));
        let den = (int(1) - &q) * (int(1) - &al * &q) * (int(1) - &be * &ga * &q) * (int(1) - qi(-2));
        assert_eq!(a, int(1) + num * &q / den);
    }

    #[test]
    fn q_racah_series_is_balanced() {
        let mut rng = SampleRng::seeded(3);
        let p = sample_admissible(QRacah, 4, &mut rng).unwrap();
        for i in 0..=4 {
            let spec = series_spec(&p, i, 2).unwrap();
            assert_eq!(scalar::is_k_balanced(&spec, p.q().unwrap(), i as usize), Some(1));
        }
        let g = p
            .retag(Generalized)
            .with(Param::Delta, ratio(3, 11))
            .with(Param::Z, p.q().unwrap().clone());
        let spec = series_spec(&g, 2, 1).unwrap();
        assert_eq!(scalar::is_k_balanced(&spec, g.q().unwrap(), 2), None);
    }

    #[test]
    fn weights_start_at_one_and_orthogonality() {
        let r2 = ParameterSet::new(Racah, 2)
            .with(Param::Alpha, ratio(1, 2))
            .with(Param::Beta, ratio(1, 3))
            .with(Param::Gamma, ratio(1, 5));
        assert_eq!(weight(&r2, 0).unwrap(), int(1));
        let s: Scalar = (0..=2)
            .map(|x| weight(&r2, x).unwrap() * eval_poly_hypergeometric(&r2, 1, x).unwrap())
            .sum();
        assert_eq!(s, Scalar::zero());
        let mut rng = SampleRng::seeded(5);
        let qr = sample_admissible(QRacah, 3, &mut rng).unwrap();
        assert_eq!(weight(&qr, 0).unwrap(), int(1));
        assert!(matches!(weight(&krawtchouk(ratio(1, 2), 2), 0), Err(Error::Unsupported(_))));
    }

    #[test]
    fn x_and_y_from_independent_coefficients() {
        // Krawtchouk X_i = α(1-α) i (N-i+1), Y_i = -(α(N-i) + i(1-α)).
        let alpha = ratio(3, 5);
        let p = krawtchouk(alpha.clone(), 5);
        for i in 0..=5i64 {
            let x = &alpha * (int(1) - &alpha) * int(i) * int(5 - i + 1);
            let y = -(&alpha * int(5 - i) + int(i) * (int(1) - &alpha));
            assert_eq!(x_coeff(&p, i).unwrap(), x);
            assert_eq!(y_coeff(&p, i).unwrap(), y);
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn dual_paths_agree(seed in 0u64..1000, fam_ix in 0usize..13, n in 1u32..=5) {
            let fam = FamilyId::ALL[fam_ix];
            let mut rng = SampleRng::seeded(seed);
            let p = sample_admissible(fam, n, &mut rng).unwrap();
            for i in 0..=i64::from(n) {
                for x in 0..=i64::from(n) {
                    prop_assert_eq!(
                        eval_poly_hypergeometric(&p, i, x).unwrap(),
                        eval_poly_recurrence(&p, i, x).unwrap(),
                        "{} i={} x={}", p, i, x
                    );
                }
            }
        }

        #[test]
        fn lambda_injective_and_x0_normalised(seed in 0u64..1000, fam_ix in 0usize..11, n in 1u32..=6) {
            let fam = FamilyId::ASKEY[fam_ix];
            let mut rng = SampleRng::seeded(seed);
            let p = sample_admissible(fam, n, &mut rng).unwrap();
            for i in 0..=i64::from(n) {
                prop_assert_eq!(eval_poly_hypergeometric(&p, i, 0).unwrap(), Scalar::one());
            }
        }
    }
}
