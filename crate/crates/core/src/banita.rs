//! Bannai–Ito (`BI`) and complementary Bannai–Ito (`CBI`) polynomials.
//!
//! Both families use the parameters `α, β, γ` (written `a, b, c` for CBI)
//! and the parity split `n = 2 n^e + n^p` of every integer index.
//! `B_i` is monic in `λ^{(BI)}_x`; `I_i` is monic in `μ(x)`.

use alloc::format;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::catalog;
use crate::constraints::{check_constraints_raw, shift_scalars_for, ConstraintKind, ShiftData};
use crate::contiguity::{compose, verify_relation, RelationInstance, RelationKind};
use crate::error::{Error, Result};
use crate::families::{parity, FamilyId, Param, ParameterSet};
use crate::report::{Locus, VerificationReport};
use crate::sampling::SampleRng;
use crate::search::{self, SearchSpace};
use crate::scalar::{self, int, ratio, Scalar, SeriesSpec};

/// `n = 2 e + p` with `p ∈ {0, 1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ParityIndex {
    pub n: i64,
    pub e: i64,
    pub p: i64,
}

pub fn parity_decompose(n: i64) -> ParityIndex {
    let (e, p) = parity(n);
    ParityIndex { n, e, p }
}

/// `(-1)^n` from the parity bit.
pub fn sign(n: i64) -> Scalar {
    if parity(n).1 == 0 {
        Scalar::one()
    } else {
        -Scalar::one()
    }
}

struct Abc {
    a: Scalar,
    b: Scalar,
    c: Scalar,
    n: i64,
}

fn abc(params: &ParameterSet) -> Result<Abc> {
    Ok(Abc {
        a: params.get(Param::Alpha)?.clone(),
        b: params.get(Param::Beta)?.clone(),
        c: params.get(Param::Gamma)?.clone(),
        n: params.n_i64(),
    })
}

fn a_raw(p: &Abc, i: i64) -> Result<Scalar> {
    let (ip, np) = (parity(i).1, parity(p.n).1);
    let ii = int(i);
    let two = int(2);
    let body = match (ip, np) {
        (0, 0) => (&ii - int(p.n)) * (&ii + &two * &p.b + &two * &p.c),
        (1, 0) => (&ii + int(1) + &two * &p.a) * (&ii + int(1) + &two * &p.a + &two * &p.b),
        (0, _) => (&ii + int(2) + &two * &p.a) * (&ii + &two * &p.b + &two * &p.c),
        _ => (&ii - int(p.n)) * (&ii + int(1) + &two * &p.a + &two * &p.b),
    };
    scalar::div(&body, &(int(4) * (&ii + int(1) + &p.a + &p.b)), "A^BI denominator")
}

fn c_raw(p: &Abc, i: i64) -> Result<Scalar> {
    if i == 0 {
        return Ok(Scalar::zero());
    }
    let (ip, np) = (parity(i).1, parity(p.n).1);
    let ii = int(i);
    let two = int(2);
    let body = match (ip, np) {
        (0, 0) => &ii * (&ii + &two * &p.b),
        (1, 0) => (&ii + int(1) + &two * &p.a - &two * &p.c) * (&ii + int(1 + p.n) + &two * &p.a + &two * &p.b),
        (0, _) => &ii * (&ii + int(1 + p.n) + &two * &p.a + &two * &p.b),
        _ => (&ii - int(1) + &two * &p.b) * (&ii + int(1) + &two * &p.a - &two * &p.c),
    };
    scalar::div(&-body, &(int(4) * (&ii + &p.a + &p.b)), "C^BI denominator")
}

pub fn a_bi(params: &ParameterSet, i: i64) -> Result<Scalar> {
    a_raw(&abc(params)?, i)
}

pub fn c_bi(params: &ParameterSet, i: i64) -> Result<Scalar> {
    c_raw(&abc(params)?, i)
}

/// `λ^{(BI)}_x = ¼(1 - 2γ + 2N^e - (-1)^x (1 - 2γ + 2N^e - 2x))`.
pub fn lambda_bi(params: &ParameterSet, x: i64) -> Result<Scalar> {
    let p = abc(params)?;
    let ne = int(parity(p.n).0);
    let base = int(1) - int(2) * &p.c + int(2) * ne;
    Ok((&base - sign(x) * (&base - int(2 * x))) * ratio(1, 4))
}

fn hyp(top: Vec<Scalar>, bottom: Vec<Scalar>, degree: i64) -> Result<Scalar> {
    if degree < 0 {
        return Ok(Scalar::zero());
    }
    scalar::hyp_terminating(&SeriesSpec::new(top, bottom, Scalar::one()), degree as usize)
}

/// Monic `B_i(x)` from its two-series definition.
pub fn eval_bi(params: &ParameterSet, i: i64, x: i64) -> Result<Scalar> {
    let p = abc(params)?;
    let (ie, ip) = parity(i);
    let (xe, xp) = parity(x);
    let (ne, np) = parity(p.n);
    let one = Scalar::one;
    let kappa = {
        let num = scalar::pochhammer(&int(-ne), (ie + ip * (1 - np)) as usize)
            * scalar::pochhammer(&(&p.b + &p.c), (ie + ip) as usize)
            * scalar::pochhammer(&(one() + &p.a), (ie + np * ip) as usize);
        let den = scalar::pochhammer(&(&p.a + &p.b + int(ie + 1)), (ie + ip) as usize);
        scalar::div(&num, &den, "κ_i")?
    };
    let first = hyp(
        Vec::from([int(-ie), int(ie + 1) + &p.a + &p.b, int(-xe), int(xe - ne) + &p.c]),
        Vec::from([&p.a + one(), &p.b + &p.c, int(-ne)]),
        ie,
    )?;
    let lead = (int(i) + int(ip) * (int(2) * &p.a + int(2) * &p.b + one()))
        * (int(x) - int(xp) * (int(2 * ne + 1) - int(2) * &p.c));
    let second = if lead.is_zero() {
        Scalar::zero()
    } else {
        let den = int(2) * (&p.b + &p.c) * (int(2 * ne) - int(np) * (int(p.n + 1) + int(2) * &p.a));
        let factor = sign(i + x) * scalar::div(&lead, &den, "second BI series prefactor")?;
        let s = hyp(
            Vec::from([
                int(-ie - ip + 1),
                int(ie + ip + 1) + &p.a + &p.b,
                int(-xe - xp + 1),
                int(xe + xp - ne) + &p.c,
            ]),
            Vec::from([&p.a + int(np + 1), &p.b + &p.c + one(), int(-ne - np + 1)]),
            ie + ip - 1,
        )?;
        factor * s
    };
    Ok(kappa * (first + second))
}

/// `σ(N)` of the CBI recurrence.
pub fn sigma(params: &ParameterSet) -> Result<Scalar> {
    let p = abc(params)?;
    let (ne, np) = parity(p.n);
    let body = if np == 0 {
        int(ne + 1) + &p.c
    } else {
        int(-ne - 2) - int(2) * &p.a + &p.c
    };
    Ok(-body * ratio(1, 2))
}

/// `μ(x) = ½(-1)^{x+N}(x - c - N^e + N^p - 1) - ½x^p`.
pub fn mu(params: &ParameterSet, x: i64) -> Result<Scalar> {
    let p = abc(params)?;
    let (ne, np) = parity(p.n);
    let (_, xp) = parity(x);
    Ok(sign(x + p.n) * (int(x - ne + np - 1) - &p.c) * ratio(1, 2) - ratio(xp, 2))
}

/// `τ_i = A^{(BI)}_i C^{(BI)}_i` at `(a, b, c, N + 1)`.
pub fn tau(params: &ParameterSet, i: i64) -> Result<Scalar> {
    let mut p = abc(params)?;
    p.n += 1;
    Ok(a_raw(&p, i)? * c_raw(&p, i)?)
}

/// `I_i(x)` from its parity-split series definition.
pub fn eval_cbi(params: &ParameterSet, i: i64, x: i64) -> Result<Scalar> {
    let p = abc(params)?;
    let (ie, ip) = parity(i);
    let (xe, xp) = parity(x);
    let (ne, np) = parity(p.n);
    let one = Scalar::one;
    let k = ie as usize;
    let ab1 = &p.a + &p.b + int(ie + ip + 1);
    let den = scalar::pochhammer(&ab1, k);
    let shift = if ip == 1 { mu(params, x)? - sigma(params)? } else { one() };
    let (num, top, bottom) = if np == 0 {
        (
            scalar::pochhammer(&int(ip - ne), k)
                * scalar::pochhammer(&(&p.a - &p.c + int(ip + 1)), k)
                * scalar::pochhammer(&(&p.b + int(ip)), k),
            Vec::from([int(-ie), ab1.clone(), int(-xe - xp + ip), int(xe + xp + ip - ne - 1) - &p.c]),
            Vec::from([int(-ne + ip), &p.a - &p.c + int(ip + 1), &p.b + int(ip)]),
        )
    } else {
        (
            scalar::pochhammer(&int(ne - ie + 1), k)
                * scalar::pochhammer(&(&p.a - &p.c + int(ip + 1)), k)
                * scalar::pochhammer(&(-&p.b - int(ie)), k),
            Vec::from([int(-ie), ab1.clone(), int(-xe), int(xe - ne) - &p.c]),
            Vec::from([int(-ne), &p.a - &p.c + int(ip + 1), &p.b + one()]),
        )
    };
    let pre = scalar::div(&num, &den, "CBI prefactor")?;
    Ok(pre * shift * hyp(top, bottom, ie)?)
}

/// Extra genericity conditions of BI beyond the recurrence data.
pub fn bi_admissible(params: &ParameterSet) -> Result<()> {
    let p = abc(params)?;
    let (ne, np) = parity(p.n);
    let bad = |s: &str| Err(Error::SingularParameters(format!("{params}: {s}")));
    if (&p.b + &p.c).is_zero() {
        return bad("β + γ = 0");
    }
    if p.n > 0 && (int(2 * ne) - int(np) * (int(p.n + 1) + int(2) * &p.a)).is_zero() {
        return bad("2N^e - N^p(N + 2α + 1) = 0");
    }
    Ok(())
}

/// CBI genericity: `τ_i ≠ 0` for `1 ≤ i ≤ N` and `σ`, `μ` defined.
pub fn cbi_admissible(params: &ParameterSet) -> Result<()> {
    if params.family != FamilyId::ComplementaryBannaiIto {
        return Err(Error::Unsupported(format!("{} is not CBI", params.family)));
    }
    for i in 1..=params.n_i64() {
        if tau(params, i)?.is_zero() {
            return Err(Error::SingularParameters(format!("{params}: τ_{i} = 0")));
        }
    }
    Ok(())
}

/// `(a, b, c) → (b + c - 1, a - c + 1, c)`, the parameter symmetry of
/// `B_i` for odd `N` and of `I_i` for even `N`.
pub fn symmetry_image(params: &ParameterSet) -> Result<ParameterSet> {
    let p = abc(params)?;
    Ok(params
        .clone()
        .with(Param::Alpha, &p.b + &p.c - Scalar::one())
        .with(Param::Beta, &p.a - &p.c + Scalar::one()))
}

/// One B-side/I-side relation bound to `params` and checked on the common grid.
pub fn verify_bi_relation(entry: &catalog::RelationEntry, params: &ParameterSet) -> Result<VerificationReport> {
    if entry.kind != RelationKind::BiRel {
        return Err(Error::Unsupported(format!("{} is not a B/I relation", entry.id)));
    }
    let inst = catalog::instantiate(entry, params)?;
    catalog::check_instance(&inst)?;
    Ok(catalog::verify_instance(&inst))
}

/// Bounded search for A2 shifts of the Bannai–Ito polynomials; passes iff
/// the identity is the only survivor.
pub fn bi_a2_nonexistence(space: &SearchSpace) -> Result<VerificationReport> {
    if space.family != FamilyId::BannaiIto {
        return Err(Error::Unsupported(format!("search space is for {}", space.family)));
    }
    let c = search::classify(space, RelationKind::A2)?;
    let mut rep = VerificationReport::new("BI-A2-search", Vec::new());
    for (k, d) in c.discovered.iter().enumerate() {
        rep.record(d.is_identity(), Locus { i: k as i64, x: None });
    }
    let found_identity = c.discovered.iter().any(ShiftData::is_identity);
    rep.record(found_identity, Locus { i: -1, x: None });
    let n: usize = space.n_values.iter().map(|&n| search::enumerate_shifts(space, n).map(|v| v.len())).sum::<Result<usize>>()?;
    rep.detail = format!("{n} candidates, {} survivors, {} undecided", c.discovered.len(), c.undecided);
    Ok(rep)
}

/// A BI → BI relation obtained by chaining two B/I relations through the CBI side.
pub struct ComposedBi {
    pub relation: RelationInstance,
    /// Direct evaluation of the composite.
    pub verified: VerificationReport,
    /// The B2 or B2' existence conditions on the composite's shift.
    pub constraints: VerificationReport,
}

fn composed(rel: RelationInstance) -> Result<ComposedBi> {
    let verified = verify_relation(&rel);
    let (base, bar) = (&rel.src, &rel.dst);
    let (zeta, xi) = shift_scalars_for(base, bar, rel.step)?;
    let ck = if rel.kind == RelationKind::B2 { ConstraintKind::B2 } else { ConstraintKind::B2p };
    let mut constraints = check_constraints_raw(ck, base, bar, &zeta, &xi);
    constraints.relation_id = format!("constraints-{ck}[{}]", rel.id);
    Ok(ComposedBi { relation: rel, verified, constraints })
}

/// `B_k` plus then `I_j` plus (offsets `0, -1, -2`, B2' type) on a BI draw of size `n`.
pub fn compose_b_then_i(b: &catalog::RelationEntry, i: &catalog::RelationEntry, n: u32, rng: &mut SampleRng) -> Result<ComposedBi> {
    for _ in 0..64 {
        let first = catalog::sample_instance(b, n, rng)?;
        let Ok(second) = catalog::instantiate(i, &first.bar) else { continue };
        if catalog::check_instance(&second).is_err() {
            continue;
        }
        let (Some(p1), Some(p2)) = (first.plus.as_ref(), second.plus.as_ref()) else { break };
        let rel = compose(p1, p2, RelationKind::B2p, format!("{}+∘{}+", b.id, i.id))?;
        return composed(rel);
    }
    Err(Error::InsufficientSamples(format!("{}∘{} at N={n}", b.id, i.id)))
}

/// `I_k` minus then `I_j` plus through a shared CBI draw of size `n` (offsets `1, 0, -1`, B2 type).
pub fn compose_i_pair(k: &catalog::RelationEntry, j: &catalog::RelationEntry, n: u32, rng: &mut SampleRng) -> Result<ComposedBi> {
    for _ in 0..64 {
        let first = catalog::sample_instance(k, n, rng)?;
        let Ok(second) = catalog::instantiate(j, &first.base) else { continue };
        if catalog::check_instance(&second).is_err() {
            continue;
        }
        let (Some(m1), Some(p2)) = (first.minus.as_ref(), second.plus.as_ref()) else { break };
        let rel = compose(m1, p2, RelationKind::B2, format!("{}-∘{}+", k.id, j.id))?;
        return composed(rel);
    }
    Err(Error::InsufficientSamples(format!("{}∘{} at N={n}", k.id, j.id)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{eval_poly_hypergeometric, eval_poly_recurrence, lambda, FamilyId};
    use crate::sampling::{sample_admissible, SampleRng};
    use proptest::prelude::*;

    fn bi(a: Scalar, b: Scalar, c: Scalar, n: u32) -> ParameterSet {
        ParameterSet::new(FamilyId::BannaiIto, n)
            .with(Param::Alpha, a)
            .with(Param::Beta, b)
            .with(Param::Gamma, c)
    }

    #[test]
    fn parity_split() {
        assert_eq!(parity_decompose(0), ParityIndex { n: 0, e: 0, p: 0 });
        assert_eq!(parity_decompose(5), ParityIndex { n: 5, e: 2, p: 1 });
        assert_eq!(parity_decompose(4), ParityIndex { n: 4, e: 2, p: 0 });
        assert_eq!(parity_decompose(-1), ParityIndex { n: -1, e: -1, p: 1 });
    }

    #[test]
    fn degree_zero_and_first_step() {
        let p = bi(ratio(1, 3), ratio(1, 5), ratio(1, 7), 4);
        assert_eq!(lambda(&p, 0).unwrap(), Scalar::zero());
        for x in 0..=4 {
            assert_eq!(eval_bi(&p, 0, x).unwrap(), Scalar::one());
        }
        // B_1(0) = A_0 + C_0 with C_0 = 0
        assert_eq!(eval_bi(&p, 1, 0).unwrap(), a_bi(&p, 0).unwrap());
    }

    #[test]
    fn tau_is_product_at_same_index() {
        let p = bi(ratio(1, 3), ratio(2, 5), ratio(3, 7), 4).retag(FamilyId::ComplementaryBannaiIto);
        let up = p.with_n(5);
        assert_eq!(tau(&p, 2).unwrap(), a_bi(&up, 2).unwrap() * c_bi(&up, 2).unwrap());
    }

    #[test]
    fn bi_monic_in_lambda() {
        // Leading divided difference of B_i over i+1 distinct λ nodes is 1.
        let p = bi(ratio(1, 3), ratio(1, 5), ratio(1, 7), 5);
        for i in 0..=5i64 {
            let nodes: Vec<(Scalar, Scalar)> = (0..=i)
                .map(|x| (lambda(&p, x).unwrap(), eval_bi(&p, i, x).unwrap()))
                .collect();
            assert_eq!(leading_divided_difference(&nodes), Scalar::one(), "i={i}");
        }
    }

    pub(crate) fn leading_divided_difference(nodes: &[(Scalar, Scalar)]) -> Scalar {
        let mut col: Vec<Scalar> = nodes.iter().map(|(_, y)| y.clone()).collect();
        for level in 1..nodes.len() {
            for j in (level..nodes.len()).rev() {
                col[j] = (&col[j] - &col[j - 1]) / (&nodes[j].0 - &nodes[j - level].0);
            }
        }
        col.pop().unwrap()
    }

    #[test]
    fn b1_fixed_point() {
        let p = bi(ratio(1, 3), ratio(1, 5), ratio(1, 7), 4);
        let rep = verify_bi_relation(&catalog::find("B1").unwrap(), &p).unwrap();
        assert!(rep.pass() && rep.checked > 0, "{rep:?}");
    }

    #[test]
    fn perturbed_z_minus_fails() {
        let p = bi(ratio(1, 3), ratio(1, 5), ratio(1, 7), 4);
        let inst = catalog::instantiate(&catalog::find("B1").unwrap(), &p).unwrap();
        let rep = verify_relation(&inst.plus.unwrap().perturbed(-1));
        assert!(!rep.pass() && !rep.residual_locus.is_empty());
    }

    #[test]
    fn only_identity_is_a2() {
        let mut space = SearchSpace::bounded(FamilyId::BannaiIto);
        space.n_values = Vec::from([5]);
        let rep = bi_a2_nonexistence(&space).unwrap();
        assert!(rep.pass(), "{rep:?}");
    }

    #[test]
    fn compositions_through_cbi() {
        let mut rng = SampleRng::seeded(21);
        let entries = catalog::list_relations(FamilyId::BannaiIto, RelationKind::BiRel);
        let is = catalog::list_relations(FamilyId::ComplementaryBannaiIto, RelationKind::BiRel);
        let mut b2p = 0;
        for b in &entries {
            for i in &is {
                let n = if b.parity_ok(5) { 5 } else { 4 };
                let Ok(c) = compose_b_then_i(b, i, n, &mut rng) else { continue };
                assert!(c.verified.pass(), "{}: {:?}", c.relation.id, c.verified.residual_locus);
                if c.constraints.pass() {
                    b2p += 1;
                }
            }
        }
        assert!(b2p > 0);
        let mut b2 = 0;
        for k in &is {
            for j in &is {
                let n = if k.parity_ok(5) { 5 } else { 4 };
                let Ok(c) = compose_i_pair(k, j, n, &mut rng) else { continue };
                assert!(c.verified.pass(), "{}: {:?}", c.relation.id, c.verified.residual_locus);
                if c.constraints.pass() {
                    b2 += 1;
                }
            }
        }
        assert!(b2 > 0);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(20))]

        #[test]
        fn bi_definition_matches_recurrence(seed in 0u64..1000, n in 2u32..=6) {
            let mut rng = SampleRng::seeded(seed);
            let p = sample_admissible(FamilyId::BannaiIto, n, &mut rng).unwrap();
            for i in 0..=i64::from(n) {
                for x in 0..=i64::from(n) {
                    prop_assert_eq!(eval_poly_hypergeometric(&p, i, x).unwrap(), eval_poly_recurrence(&p, i, x).unwrap());
                }
            }
        }

        #[test]
        fn cbi_definition_matches_recurrence(seed in 0u64..1000, n in 2u32..=6) {
            let mut rng = SampleRng::seeded(seed);
            let p = sample_admissible(FamilyId::ComplementaryBannaiIto, n, &mut rng).unwrap();
            for i in 0..=i64::from(n) {
                for x in 0..=i64::from(n) {
                    prop_assert_eq!(eval_poly_hypergeometric(&p, i, x).unwrap(), eval_poly_recurrence(&p, i, x).unwrap());
                }
            }
        }

        #[test]
        fn bi_symmetry_odd_n(seed in 0u64..1000, half in 1u32..=3) {
            let n = 2 * half + 1;
            let mut rng = SampleRng::seeded(seed);
            let p = sample_admissible(FamilyId::BannaiIto, n, &mut rng).unwrap();
            let s = symmetry_image(&p).unwrap();
            for i in 0..=i64::from(n) {
                for x in 0..=i64::from(n) {
                    prop_assert_eq!(eval_bi(&p, i, x).unwrap(), eval_bi(&s, i, x).unwrap());
                }
            }
        }

        #[test]
        fn cbi_symmetry_even_n(seed in 0u64..1000, half in 1u32..=3) {
            let n = 2 * half;
            let mut rng = SampleRng::seeded(seed);
            let p = sample_admissible(FamilyId::ComplementaryBannaiIto, n, &mut rng).unwrap();
            let s = symmetry_image(&p).unwrap();
            for i in 0..=i64::from(n) {
                for x in 0..=i64::from(n) {
                    prop_assert_eq!(eval_cbi(&p, i, x).unwrap(), eval_cbi(&s, i, x).unwrap());
                }
            }
        }
    }
}
