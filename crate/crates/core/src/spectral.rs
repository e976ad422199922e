//! Monic polynomials and the Christoffel/Geronimus reading of A2 relations.
//!
//! With `P_i = Γ_i R_i(x; ρ)` and `Q_i = ζ^i Γ̄_i R_i(x̄; ρ̄)` (both monic in
//! `λ_x`), an A2 pair becomes `ω_x Q_i = P_{i+1} - a_i P_i` (Christoffel at
//! `ν`) and `P_i = Q_i - c_i Q_{i-1}` (Geronimus at `ν`).

use alloc::format;
use alloc::string::ToString;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::catalog;
use crate::constraints::ShiftMap;
use crate::error::{Error, Result};
use crate::expr;
use crate::families::{self, FamilyId, ParameterSet, PointEnv, SpectralPoint};
use crate::report::{Locus, Status, VerificationReport};
use crate::scalar::{self, Scalar};

/// `P` and `Q` tabulated on the grid of `ρ`.
#[derive(Debug, Clone)]
pub struct MonicPolySystem {
    pub base: ParameterSet,
    pub bar: ParameterSet,
    pub zeta: Scalar,
    pub xi: Scalar,
    pub eta: i64,
    /// `Γ_i = ∏_{k<i} A_k` for `0 ≤ i ≤ N`.
    pub gamma_prod: Vec<Scalar>,
    pub gamma_prod_bar: Vec<Scalar>,
    p: Vec<Vec<Scalar>>,
    q: Vec<Vec<Option<Scalar>>>,
    lambdas: Vec<Scalar>,
}

fn gamma_products(params: &ParameterSet) -> Result<Vec<Scalar>> {
    let mut out = Vec::from([Scalar::one()]);
    for k in 0..params.n_i64() {
        let next = out[k as usize].clone() * families::recurrence_coeffs(params, k)?.a;
        out.push(next);
    }
    Ok(out)
}

impl MonicPolySystem {
    pub fn n(&self) -> i64 {
        self.base.n_i64()
    }

    pub fn n_bar(&self) -> i64 {
        self.bar.n_i64()
    }

    /// `P_i(x)` for `0 ≤ i, x ≤ N`.
    pub fn p(&self, i: i64, x: i64) -> Option<&Scalar> {
        self.p.get(usize::try_from(i).ok()?)?.get(usize::try_from(x).ok()?)
    }

    /// `Q_i(x)` for `0 ≤ i ≤ N̄` and `x̄ = x + η` on the barred grid.
    pub fn q(&self, i: i64, x: i64) -> Option<&Scalar> {
        self.q.get(usize::try_from(i).ok()?)?.get(usize::try_from(x).ok()?)?.as_ref()
    }

    pub fn lambda(&self, x: i64) -> &Scalar {
        &self.lambdas[x as usize]
    }

    /// Grid points `x` whose image `x + η` lies on the barred grid.
    pub fn shared_grid(&self) -> Vec<i64> {
        (0..=self.n()).filter(|x| (0..=self.n_bar()).contains(&(x + self.eta))).collect()
    }

    /// `P_0..P_top` at a spectral value through the monic recurrence.
    pub fn p_at(&self, lambda: &Scalar, top: i64) -> Result<Vec<Scalar>> {
        monic_values(lambda, top, |i| families::y_coeff(&self.base, i), |i| families::x_coeff(&self.base, i))
    }

    /// `Q_0..Q_top` at a spectral value through the recurrence with `ζȲ_i - ξ`, `ζ²X̄_i`.
    pub fn q_at(&self, lambda: &Scalar, top: i64) -> Result<Vec<Scalar>> {
        let z2 = &self.zeta * &self.zeta;
        monic_values(
            lambda,
            top,
            |i| Ok(&self.zeta * families::y_coeff(&self.bar, i)? - &self.xi),
            |i| Ok(&z2 * families::x_coeff(&self.bar, i)?),
        )
    }
}

fn monic_values(
    lambda: &Scalar,
    top: i64,
    y: impl Fn(i64) -> Result<Scalar>,
    x: impl Fn(i64) -> Result<Scalar>,
) -> Result<Vec<Scalar>> {
    let mut out = Vec::from([Scalar::one()]);
    let mut prev = Scalar::zero();
    for i in 0..top {
        let cur = out[i as usize].clone();
        let next = (lambda - y(i)?) * &cur - x(i)? * &prev;
        prev = cur;
        out.push(next);
    }
    Ok(out)
}

pub fn monicize(shift: &ShiftMap) -> Result<MonicPolySystem> {
    let (base, bar) = (&shift.base, &shift.bar);
    families::admissible(base)?;
    families::admissible(bar)?;
    let gamma_prod = gamma_products(base)?;
    let gamma_prod_bar = gamma_products(bar)?;
    let table = families::poly_table(base)?;
    let table_bar = families::poly_table(bar)?;
    let n = base.n_i64();
    let eta = shift.eta();
    let p = table
        .iter()
        .zip(&gamma_prod)
        .map(|(row, g)| row.iter().map(|r| g * r).collect())
        .collect();
    let mut zeta_pow = Scalar::one();
    let mut q = Vec::new();
    for (row, g) in table_bar.iter().zip(&gamma_prod_bar) {
        let scale = &zeta_pow * g;
        q.push((0..=n).map(|x| row.get(usize::try_from(x + eta).ok()?).map(|r| &scale * r)).collect());
        zeta_pow *= &shift.zeta;
    }
    let lambdas = (0..=n).map(|x| families::lambda(base, x)).collect::<Result<Vec<_>>>()?;
    Ok(MonicPolySystem {
        base: base.clone(),
        bar: bar.clone(),
        zeta: shift.zeta.clone(),
        xi: shift.xi.clone(),
        eta,
        gamma_prod,
        gamma_prod_bar,
        p,
        q,
        lambdas,
    })
}

/// Coefficients of the monic contiguity relations.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectralData {
    /// `λ_{ν,ρ}`.
    pub nu_lambda: Scalar,
    /// `a_i` for `0 ≤ i ≤ min(N, N̄)`.
    pub a: Vec<Scalar>,
    /// `c_i` for `0 ≤ i ≤ min(N, N̄ + 1)`; `c_0` is unused and stored as 0.
    pub c: Vec<Scalar>,
    pub chi: Option<Scalar>,
}

impl SpectralData {
    /// `ω_x = λ_x - λ_ν`.
    pub fn omega(&self, lambda_x: &Scalar) -> Scalar {
        lambda_x - &self.nu_lambda
    }
}

pub fn christoffel_data(shift: &ShiftMap) -> Result<SpectralData> {
    let (base, bar) = (&shift.base, &shift.bar);
    let (n, n_bar) = (base.n_i64(), bar.n_i64());
    let z = &shift.zeta;
    let a0 = families::recurrence_coeffs(base, 0)?.a;
    let a0_bar = families::recurrence_coeffs(bar, 0)?.a;
    let d = z * &a0_bar - &a0 + &shift.xi;
    if d.is_zero() {
        return Err(Error::SingularParameters("ζĀ_0 - A_0 + ξ = 0, λ_ν undefined".into()));
    }
    let x = |i| families::x_coeff(base, i);
    let xb = |i| families::x_coeff(bar, i);
    let x1 = x(1)?;
    let nu_lambda = -&a0 + scalar::div(&x1, &d, "λ_ν")?;
    let z2 = z * z;
    let z2_inv = scalar::div(&Scalar::one(), &z2, "ζ²")?;

    let mut a = Vec::new();
    let mut acc = scalar::div(&x1, &d, "a_0")?;
    for i in 0..=n.min(n_bar) {
        if i > 0 {
            acc = acc * &z2 * scalar::div(&xb(i)?, &x(i)?, "a_i")?;
        }
        a.push(acc.clone());
    }
    let mut c = Vec::from([Scalar::zero()]);
    let mut acc = d.clone();
    for i in 1..=n.min(n_bar + 1) {
        if i > 1 {
            acc = acc * &z2_inv * scalar::div(&x(i)?, &xb(i - 1)?, "c_i")?;
        }
        c.push(acc.clone());
    }
    Ok(SpectralData { nu_lambda, a, c, chi: None })
}

/// `Σ_j v_j / ∏_{k≠j} (t_j - t_k)`: the leading coefficient of the
/// interpolating polynomial of degree `len - 1`.
pub fn leading_coefficient(nodes: &[Scalar], values: &[Scalar]) -> Result<Scalar> {
    let mut out = Scalar::zero();
    for (j, (tj, vj)) in nodes.iter().zip(values).enumerate() {
        let mut den = Scalar::one();
        for (k, tk) in nodes.iter().enumerate() {
            if k != j {
                den *= tj - tk;
            }
        }
        out += scalar::div(vj, &den, "divided difference")?;
    }
    Ok(out)
}

fn idx(i: i64) -> usize {
    i as usize
}

/// The Christoffel/Geronimus checks for one A2 shift; `nu` is the published point, if any.
pub fn verify_christoffel_geronimus(shift: &ShiftMap, nu: Option<&SpectralPoint>) -> VerificationReport {
    let id = format!("CG[{}]", shift.data);
    let rep = VerificationReport::new(id, Vec::from([shift.base.clone(), shift.bar.clone()]));
    if shift.data.is_identity() {
        return rep.with_status(Status::NotApplicable, "identity shift: λ_ν is singular");
    }
    let (sys, data) = match monicize(shift).and_then(|s| Ok((s, christoffel_data(shift)?))) {
        Ok(v) => v,
        Err(e) => return rep.with_status(Status::NotApplicable, e.to_string()),
    };
    match cg_checks(&sys, &data, nu, rep.clone()) {
        Ok(r) => r,
        Err(e) => rep.with_status(Status::Fail, e.to_string()),
    }
}

fn cg_checks(sys: &MonicPolySystem, data: &SpectralData, nu: Option<&SpectralPoint>, mut rep: VerificationReport) -> Result<VerificationReport> {
    let (n, n_bar) = (sys.n(), sys.n_bar());
    let grid = sys.shared_grid();
    let top = (n - 1).min(n_bar);

    // monic in λ: leading divided difference equals 1.
    for i in 0..=n {
        let nodes: Vec<Scalar> = (0..=i).map(|x| sys.lambda(x).clone()).collect();
        let vals: Vec<Scalar> = (0..=i).map(|x| sys.p(i, x).cloned().unwrap_or_default()).collect();
        rep.record(leading_coefficient(&nodes, &vals)?.is_one(), Locus { i, x: None });
    }
    for i in 0..=n_bar.min(grid.len() as i64 - 1) {
        let pts = &grid[..=idx(i)];
        let nodes: Vec<Scalar> = pts.iter().map(|&x| sys.lambda(x).clone()).collect();
        let vals: Vec<Scalar> = pts.iter().map(|&x| sys.q(i, x).cloned().unwrap_or_default()).collect();
        rep.record(leading_coefficient(&nodes, &vals)?.is_one(), Locus { i, x: None });
    }

    // (1) ω_x Q_i = P_{i+1} - a_i P_i and (2) P_i = Q_i - c_i Q_{i-1} on the grid.
    for &x in &grid {
        let omega = data.omega(sys.lambda(x));
        for i in 0..=top {
            let (Some(q), Some(p1), Some(p0)) = (sys.q(i, x), sys.p(i + 1, x), sys.p(i, x)) else { continue };
            rep.record(&omega * q == p1 - &data.a[idx(i)] * p0, Locus { i, x: Some(x) });
        }
        for i in 0..=n.min(n_bar) {
            let (Some(p), Some(q)) = (sys.p(i, x), sys.q(i, x)) else { continue };
            let rhs = if i == 0 { q.clone() } else { q - &data.c[idx(i)] * sys.q(i - 1, x).cloned().unwrap_or_default() };
            rep.record(*p == rhs, Locus { i, x: Some(x) });
        }
    }

    // (3) a_i = P_{i+1}(ν)/P_i(ν), cross-multiplied so that P_i(ν) = 0 is allowed.
    let p_nu = sys.p_at(&data.nu_lambda, top + 1)?;
    for i in 0..=top {
        rep.record(p_nu[idx(i + 1)] == &data.a[idx(i)] * &p_nu[idx(i)], Locus { i, x: None });
    }

    // (4) c_i a_i = ζ² X̄_i, and the Q recurrence -c_{i+1} - a_i + λ_ν = ζȲ_i - ξ.
    let z2 = &sys.zeta * &sys.zeta;
    for i in 1..=top {
        rep.record(&data.c[idx(i)] * &data.a[idx(i)] == &z2 * families::x_coeff(&sys.bar, i)?, Locus { i, x: None });
    }
    for i in 0..=top {
        let lhs = -&data.c[idx(i + 1)] - &data.a[idx(i)] + &data.nu_lambda;
        let rhs = &sys.zeta * families::y_coeff(&sys.bar, i)? - &sys.xi;
        rep.record(lhs == rhs, Locus { i, x: None });
    }

    // The published ν gives the same spectral value.
    if let Some(point) = nu {
        rep.record(families::lambda_at(&sys.base, point)? == data.nu_lambda, Locus { i: -1, x: None });
    }
    Ok(rep)
}

/// Geronimus data check: with `φ_i = F_i(ν) + χ Q_i(ν)` and
/// `F_i(ν) = Σ_x Q_i(x) w(x̄; ρ̄) / (λ_ν - λ_x)`, the ratios `φ_i/φ_{i-1}` are `c_i`.
pub fn verify_geronimus_mass(shift: &ShiftMap, chi: &Scalar) -> VerificationReport {
    let rep = VerificationReport::new(format!("geronimus[{}]", shift.data), Vec::from([shift.base.clone(), shift.bar.clone()]));
    let run = || -> Result<VerificationReport> {
        let mut rep = rep.clone();
        let sys = monicize(shift)?;
        let data = christoffel_data(shift)?;
        let grid = sys.shared_grid();
        let top = sys.n_bar().min(sys.n());
        let q_nu = sys.q_at(&data.nu_lambda, top)?;
        let mut phi = Vec::new();
        for i in 0..=top {
            let mut f = Scalar::zero();
            for &x in &grid {
                let w = families::weight(&sys.bar, x + sys.eta)?;
                let q = sys.q(i, x).cloned().unwrap_or_default();
                f += scalar::div(&(q * w), &(&data.nu_lambda - sys.lambda(x)), "λ_ν - λ_x")?;
            }
            phi.push(f + chi * &q_nu[idx(i)]);
        }
        for i in 1..=top {
            rep.record(phi[idx(i)] == &data.c[idx(i)] * &phi[idx(i - 1)], Locus { i, x: None });
        }
        Ok(rep)
    };
    run().unwrap_or_else(|e| rep.with_status(Status::NotApplicable, e.to_string()))
}

/// Printed finite-sum identities linking the weights of `ρ` and `ρ̄`:
/// `Σ_x w(x̄; ρ̄)/(λ_ν - λ_x) δ_x + m δ_{x-ν} = K Σ_x w(x; ρ) δ_x`.
struct MeasureIdentity {
    id: &'static str,
    family: FamilyId,
    constant: &'static str,
    mass: Option<&'static str>,
}

const MEASURE_IDENTITIES: &[MeasureIdentity] = &[
    MeasureIdentity {
        id: "qRI",
        family: FamilyId::QRacah,
        constant: "1/((gamma-1)*(1-q^(-N)))",
        mass: Some("w_N/((gamma-1)*(1-q^(-N)))"),
    },
    MeasureIdentity { id: "qRII", family: FamilyId::QRacah, constant: "1/((beta*gamma*q-1)*(1-q^(-N-1)/beta))", mass: None },
    MeasureIdentity { id: "RI", family: FamilyId::Racah, constant: "1/(N*gamma)", mass: Some("w_N/(N*gamma)") },
    MeasureIdentity { id: "RII", family: FamilyId::Racah, constant: "1/((beta+N+1)*(beta+gamma+1))", mass: None },
];

/// Relation ids with a printed measure identity.
pub fn measure_identity_ids() -> Vec<&'static str> {
    MEASURE_IDENTITIES.iter().map(|m| m.id).collect()
}

pub fn verify_measure_identity(relation_id: &str, params: &ParameterSet) -> Result<VerificationReport> {
    let mi = MEASURE_IDENTITIES
        .iter()
        .find(|m| m.id == relation_id)
        .ok_or_else(|| Error::Unsupported(format!("no measure identity for {relation_id}")))?;
    if params.family != mi.family {
        return Err(Error::Unsupported(format!("{relation_id} needs {} parameters", mi.family)));
    }
    let mut rep = VerificationReport::new(format!("measure[{relation_id}]"), Vec::from([params.clone()]));
    if params.n == 0 {
        rep.record(true, Locus { i: 0, x: Some(0) });
        return Ok(rep.with_status(Status::Pass, "single-point measure"));
    }
    let inst = catalog::instantiate(&catalog::find(relation_id)?, params)?;
    families::admissible(params)?;
    families::admissible(&inst.bar)?;
    let nu = inst.nu.clone().ok_or_else(|| Error::Unsupported(format!("{relation_id} has no ν")))?;
    let lam_nu = families::lambda_at(params, &nu)?;
    let env = PointEnv::new(params);
    let k = expr::parse(mi.constant)?.eval(&env)?;
    let mass = mi.mass.map(|m| expr::parse(m)?.eval(&env)).transpose()?;
    let eta = inst.shift.as_ref().map_or(0, ShiftMap::eta);
    for x in 0..=params.n_i64() {
        let mut lhs = Scalar::zero();
        let xb = x + eta;
        if (0..=inst.bar.n_i64()).contains(&xb) {
            let den = &lam_nu - families::lambda(params, x)?;
            lhs += scalar::div(&families::weight(&inst.bar, xb)?, &den, "λ_ν - λ_x")
                .map_err(|e| Error::SingularParameters(e.to_string()))?;
        }
        if let (Some(m), SpectralPoint::Grid(g)) = (&mass, &nu) {
            if *g == x {
                lhs += m;
            }
        }
        rep.record(lhs == &k * families::weight(params, x)?, Locus { i: 0, x: Some(x) });
    }
    Ok(rep)
}

/// The Krawtchouk monic-in-`x` polynomials `P̃_i = (-1)^i P_i` (since `λ = -x`).
pub fn krawtchouk_monic_in_x(sys: &MonicPolySystem, i: i64, x: i64) -> Option<Scalar> {
    let s = if i % 2 == 0 { Scalar::one() } else { -Scalar::one() };
    sys.p(i, x).map(|p| s * p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{find, instantiate, sample_instance};
    use crate::families::Param;
    use crate::sampling::SampleRng;
    use crate::scalar::{int, ratio};

    fn kraw(alpha: Scalar, n: u32) -> ParameterSet {
        ParameterSet::new(FamilyId::Krawtchouk, n).with(Param::Alpha, alpha)
    }

    fn shift_of(id: &str, p: &ParameterSet) -> (ShiftMap, Option<SpectralPoint>) {
        let inst = instantiate(&find(id).unwrap(), p).unwrap();
        (inst.shift.unwrap(), inst.nu)
    }

    #[test]
    fn first_monic_polynomials() {
        let p = kraw(ratio(1, 3), 4);
        let (s, _) = shift_of("KI", &p);
        let sys = monicize(&s).unwrap();
        for x in 0..=4 {
            assert_eq!(sys.p(0, x), Some(&int(1)));
            let p1 = sys.lambda(x) - families::y_coeff(&p, 0).unwrap();
            assert_eq!(sys.p(1, x), Some(&p1));
        }
    }

    #[test]
    fn krawtchouk_example_in_x_convention() {
        let al = ratio(2, 7);
        let n = 5;
        let p = kraw(al.clone(), n);
        let entry = crate::catalog::list_relations(FamilyId::Krawtchouk, crate::contiguity::RelationKind::A2)
            .into_iter()
            .find(|e| e.shift.n_offset == -1)
            .unwrap();
        let inst = instantiate(&entry, &p).unwrap();
        let shift = inst.shift.unwrap();
        let sys = monicize(&shift).unwrap();
        let data = christoffel_data(&shift).unwrap();
        // ν = N
        assert_eq!(data.nu_lambda, families::lambda(&p, i64::from(n)).unwrap());
        let one = Scalar::one();
        for i in 0..=4 {
            let ii = int(i);
            // (x - N) P̃_i(x; ρ̄) = P̃_{i+1} - (1-α)(N-i) P̃_i: a_i = -(1-α)(N-i) in the λ convention.
            assert_eq!(data.a[i as usize], -(&one - &al) * (int(5) - &ii));
            if i >= 1 {
                // P̃_i(ρ) = P̃_i(ρ̄) - α i P̃_{i-1}(ρ̄)
                assert_eq!(data.c[i as usize], -&al * &ii);
            }
        }
        // the monic-in-x recurrence of the example.
        for x in 0..=5 {
            for i in 1..5 {
                let pt = |k| krawtchouk_monic_in_x(&sys, k, x).unwrap();
                let ii = int(i);
                let y = &al * (int(5) - &ii) + &ii * (&one - &al);
                let xx = &al * (&one - &al) * &ii * (int(6) - &ii);
                assert_eq!(int(x) * pt(i), pt(i + 1) + y * pt(i) + xx * pt(i - 1));
            }
        }
        assert_eq!(-&data.a[0], (&one - &al) * int(5));
    }

    #[test]
    fn omega_vanishes_at_grid_nu() {
        let mut rng = SampleRng::seeded(2);
        let inst = sample_instance(&find("qRI").unwrap(), 4, &mut rng).unwrap();
        let data = christoffel_data(inst.shift.as_ref().unwrap()).unwrap();
        assert!(data.omega(&families::lambda(&inst.base, 4).unwrap()).is_zero());
        let z = &inst.shift.as_ref().unwrap().zeta;
        let s = inst.shift.as_ref().unwrap();
        let c1 = z * families::recurrence_coeffs(&s.bar, 0).unwrap().a - families::recurrence_coeffs(&s.base, 0).unwrap().a + &s.xi;
        assert_eq!(data.c[1], c1);
    }

    #[test]
    fn published_transforms_pass() {
        let mut rng = SampleRng::seeded(11);
        for id in ["qRI", "qRII", "qRIII", "qRIV", "RI", "RII", "RIII", "RIV"] {
            for n in 2..=4 {
                let inst = sample_instance(&find(id).unwrap(), n, &mut rng).unwrap();
                let rep = verify_christoffel_geronimus(inst.shift.as_ref().unwrap(), inst.nu.as_ref());
                assert!(rep.pass() && rep.checked > 0, "{id} N={n}: {:?} {:?} {}", rep.status, rep.residual_locus, rep.detail);
            }
        }
    }

    #[test]
    fn identity_shift_is_not_applicable() {
        let p = kraw(ratio(1, 3), 3);
        let s = ShiftMap::new(&p, &crate::constraints::ShiftData::identity()).unwrap();
        assert_eq!(verify_christoffel_geronimus(&s, None).status, Status::NotApplicable);
    }

    #[test]
    fn measure_identities_hold() {
        let mut rng = SampleRng::seeded(4);
        for id in measure_identity_ids() {
            for n in 1..=4 {
                let inst = sample_instance(&find(id).unwrap(), n, &mut rng).unwrap();
                let rep = verify_measure_identity(id, &inst.base).unwrap();
                assert!(rep.pass(), "{id} N={n}: {:?}", rep.residual_locus);
            }
        }
    }

    #[test]
    fn measure_identity_fixed_points() {
        let qr = ParameterSet::new(FamilyId::QRacah, 3)
            .with(Param::Alpha, ratio(1, 3))
            .with(Param::Beta, ratio(1, 7))
            .with(Param::Gamma, ratio(1, 11))
            .with(Param::Q, ratio(2, 5));
        assert!(verify_measure_identity("qRI", &qr).unwrap().pass());
        let r = ParameterSet::new(FamilyId::Racah, 3)
            .with(Param::Alpha, ratio(1, 2))
            .with(Param::Beta, ratio(1, 3))
            .with(Param::Gamma, ratio(1, 5));
        assert!(verify_measure_identity("RII", &r).unwrap().pass());
        assert!(verify_measure_identity("RII", &r.with_n(0)).unwrap().pass());
    }

    #[test]
    fn published_masses_are_geronimus_data() {
        let mut rng = SampleRng::seeded(6);
        for id in ["qRI", "qRII", "qRIII", "qRIV", "RI", "RII", "RIII", "RIV"] {
            for n in 2..=4 {
                let inst = sample_instance(&find(id).unwrap(), n, &mut rng).unwrap();
                let s = inst.shift.as_ref().unwrap();
                let chi = inst.chi.clone().unwrap();
                let rep = verify_geronimus_mass(s, &chi);
                assert!(rep.pass() && rep.checked > 0, "{id} N={n}: {:?}", rep.residual_locus);
                if !chi.is_zero() {
                    assert!(!verify_geronimus_mass(s, &-chi).pass(), "{id} N={n}: sign not detected");
                }
            }
        }
    }

    #[test]
    fn leading_coefficient_of_cubic() {
        let nodes: Vec<Scalar> = (0..4).map(|t| ratio(t * t + 1, 3)).collect();
        let vals: Vec<Scalar> = nodes.iter().map(|t| int(5) * t * t * t - t + int(2)).collect();
        assert_eq!(leading_coefficient(&nodes, &vals).unwrap(), int(5));
    }
}
