//! Exact rationals, Pochhammer symbols and terminating (basic) hypergeometric series.

use alloc::string::{String, ToString};
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational scalar used throughout the crate.
pub type Scalar = BigRational;

pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

pub fn ratio(p: i64, q: i64) -> Scalar {
    Scalar::new(BigInt::from(p), BigInt::from(q))
}

/// Parses `"p/q"` or an integer literal.
pub fn parse(s: &str) -> Result<Scalar> {
    let t = s.trim();
    let bad = || Error::ParseScalar(s.to_string());
    match t.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(Scalar::new(p, q))
        }
        None => Ok(Scalar::from_integer(t.parse().map_err(|_| bad())?)),
    }
}

/// Canonical `"p/q"` text (denominator omitted when it is 1).
pub fn format(x: &Scalar) -> String {
    x.to_string()
}

/// `x` as an integer, if it is one.
pub fn to_i64(x: &Scalar) -> Option<i64> {
    if !x.is_integer() {
        return None;
    }
    i64::try_from(x.to_integer()).ok()
}

/// Integer power, negative exponents allowed for nonzero bases.
pub fn powi(base: &Scalar, e: i64) -> Result<Scalar> {
    if e < 0 && base.is_zero() {
        return Err(Error::DivisionByZero("negative power of zero".into()));
    }
    let mut acc = Scalar::one();
    let mut b = if e < 0 { base.recip() } else { base.clone() };
    let mut n = e.unsigned_abs();
    while n > 0 {
        if n & 1 == 1 {
            acc *= &b;
        }
        b = &b * &b;
        n >>= 1;
    }
    Ok(acc)
}

pub fn div(a: &Scalar, b: &Scalar, what: &str) -> Result<Scalar> {
    if b.is_zero() {
        return Err(Error::DivisionByZero(what.to_string()));
    }
    Ok(a / b)
}

pub fn check_base(q: &Scalar) -> Result<()> {
    if q.is_zero() || q.abs().is_one() {
        return Err(Error::InvalidBase);
    }
    Ok(())
}

/// Rising factorial `(a)_k`.
pub fn pochhammer(a: &Scalar, k: usize) -> Scalar {
    let mut acc = Scalar::one();
    let mut t = a.clone();
    for _ in 0..k {
        acc *= &t;
        t += Scalar::one();
    }
    acc
}

/// `(a;q)_k = (1-a)(1-aq)...(1-aq^{k-1})`.
pub fn q_pochhammer(a: &Scalar, q: &Scalar, k: usize) -> Scalar {
    let mut acc = Scalar::one();
    let mut t = a.clone();
    for _ in 0..k {
        acc *= Scalar::one() - &t;
        t *= q;
    }
    acc
}

/// Parameters of a terminating series. `top[0]` is the terminating
/// parameter: `-degree` for ordinary series, `q^{-degree}` for basic ones.
#[derive(Debug, Clone, PartialEq)]
pub struct SeriesSpec {
    pub top: Vec<Scalar>,
    pub bottom: Vec<Scalar>,
    pub argument: Scalar,
}

impl SeriesSpec {
    pub fn new(top: Vec<Scalar>, bottom: Vec<Scalar>, argument: Scalar) -> Self {
        SeriesSpec { top, bottom, argument }
    }
}

/// Sums `pFq(top; bottom | z)` for `k = 0..=degree`.
///
/// Summation stops as soon as a numerator factor vanishes, so a bottom zero
/// only matters when it is reached with a nonzero running term.
pub fn hyp_terminating(spec: &SeriesSpec, degree: usize) -> Result<Scalar> {
    sum_by_ratio(degree, |k| {
        let kk = int(k as i64);
        let num: Scalar = spec.top.iter().map(|a| a + &kk).product();
        let den: Scalar = spec.bottom.iter().map(|b| b + &kk).product::<Scalar>() * (&kk + Scalar::one());
        (num * &spec.argument, den)
    })
}

/// Sums `pφq(top; bottom | q; z)` for `k = 0..=degree`.
pub fn q_hyp_terminating(spec: &SeriesSpec, q: &Scalar, degree: usize) -> Result<Scalar> {
    check_base(q)?;
    let mut qk = Scalar::one();
    sum_by_ratio(degree, |_| {
        let num: Scalar = spec.top.iter().map(|a| Scalar::one() - a * &qk).product();
        let mut den: Scalar = spec.bottom.iter().map(|b| Scalar::one() - b * &qk).product();
        qk *= q;
        den *= Scalar::one() - &qk;
        (num * &spec.argument, den)
    })
}

fn sum_by_ratio(degree: usize, mut step: impl FnMut(usize) -> (Scalar, Scalar)) -> Result<Scalar> {
    let mut term = Scalar::one();
    let mut sum = Scalar::one();
    for k in 0..degree {
        let (num, den) = step(k);
        if num.is_zero() {
            break;
        }
        if den.is_zero() {
            return Err(Error::SingularSeries { k: k + 1 });
        }
        term = term * num / den;
        sum += &term;
    }
    Ok(sum)
}

/// Returns `k` when the argument is `q` and `b_1...b_p = q^{k-degree} a_1...a_p`,
/// where `a_1..a_p` are the top parameters after the terminating one.
pub fn is_k_balanced(spec: &SeriesSpec, q: &Scalar, degree: usize) -> Option<i64> {
    if spec.argument != *q || spec.top.len() != spec.bottom.len() + 1 || check_base(q).is_err() {
        return None;
    }
    let top: Scalar = spec.top[1..].iter().product();
    let bottom: Scalar = spec.bottom.iter().product();
    if top.is_zero() || bottom.is_zero() {
        return None;
    }
    q_log(&(bottom / top), q).map(|m| m + degree as i64)
}

/// The integer `m` with `q^m = r`, searched over a bounded window.
fn q_log(r: &Scalar, q: &Scalar) -> Option<i64> {
    const WINDOW: i64 = 256;
    let qinv = q.recip();
    let (mut up, mut down) = (Scalar::one(), Scalar::one());
    for m in 0..=WINDOW {
        if &up == r {
            return Some(m);
        }
        if &down == r {
            return Some(-m);
        }
        up *= q;
        down *= &qinv;
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use proptest::prelude::*;

    fn small_rational() -> impl Strategy<Value = Scalar> {
        (-12i64..=12, 1i64..=9).prop_map(|(p, q)| ratio(p, q))
    }

    fn base() -> impl Strategy<Value = Scalar> {
        (2i64..=9, 1i64..=9)
            .prop_filter("q not ±1", |(p, q)| p != q)
            .prop_map(|(p, q)| ratio(p, q))
    }

    #[test]
    fn parse_and_format_round_trip() {
        assert_eq!(parse("-6/10").unwrap(), ratio(-3, 5));
        assert_eq!(format(&parse("7").unwrap()), "7");
        assert_eq!(format(&ratio(2, -4)), "-1/2");
        assert!(parse("1/0").is_err());
        assert!(parse("x").is_err());
    }

    #[test]
    fn q_pochhammer_small_values() {
        // (1/2; 1/2)_2 = (1/2)(3/4)
        assert_eq!(q_pochhammer(&ratio(1, 2), &ratio(1, 2), 2), ratio(3, 8));
        assert_eq!(pochhammer(&int(3), 4), int(3 * 4 * 5 * 6));
        assert_eq!(pochhammer(&int(-2), 3), int(0));
    }

    #[test]
    fn singular_bottom_is_reported() {
        // 2F1(-2, 1; -1 | 1) hits (-1)_2 = 0 with a nonzero running term.
        let spec = SeriesSpec::new(vec![int(-2), int(1)], vec![int(-1)], int(1));
        assert_eq!(hyp_terminating(&spec, 2), Err(Error::SingularSeries { k: 2 }));
    }

    #[test]
    fn numerator_zero_stops_before_bottom_zero() {
        // 2F1(-1, -1; -1 | 1): the k=1 ratio has numerator 0*0.
        let spec = SeriesSpec::new(vec![int(-1), int(-1)], vec![int(-1)], int(1));
        assert_eq!(hyp_terminating(&spec, 1), Ok(int(0)));
    }

    #[test]
    fn invalid_base() {
        let spec = SeriesSpec::new(vec![int(1)], vec![], int(1));
        assert_eq!(q_hyp_terminating(&spec, &int(1), 0), Err(Error::InvalidBase));
        assert_eq!(q_hyp_terminating(&spec, &int(-1), 0), Err(Error::InvalidBase));
        assert_eq!(q_hyp_terminating(&spec, &int(0), 0), Err(Error::InvalidBase));
    }

    #[test]
    fn balanced_q_racah_series() {
        let q = ratio(1, 3);
        let (a, b, g, n, i, x) = (ratio(1, 2), ratio(2, 3), ratio(3, 4), 4i64, 2i64, 1i64);
        let qp = |e: i64| powi(&q, e).unwrap();
        let spec = SeriesSpec::new(
            vec![qp(-i), &a * &b * qp(i + 1), qp(-x), &g * qp(x - n)],
            vec![&a * &q, &b * &g * &q, qp(-n)],
            q.clone(),
        );
        assert_eq!(is_k_balanced(&spec, &q, i as usize), Some(1));
        let off = SeriesSpec { argument: ratio(1, 2), ..spec.clone() };
        assert_eq!(is_k_balanced(&off, &q, i as usize), None);
        let mut generic = spec;
        generic.bottom[1] = ratio(5, 11);
        assert_eq!(is_k_balanced(&generic, &q, i as usize), None);
    }

    proptest! {
        #[test]
        fn permutation_and_order_invariance(
            n in 0usize..6,
            a in small_rational(),
            b in small_rational(),
            c in small_rational(),
            d in small_rational(),
            q in base(),
        ) {
            let top = vec![powi(&q, -(n as i64)).unwrap(), a.clone(), b.clone()];
            let s1 = SeriesSpec::new(top, vec![c.clone(), d.clone()], q.clone());
            let s2 = SeriesSpec::new(
                vec![s1.top[0].clone(), b.clone(), a.clone()],
                vec![d.clone(), c.clone()],
                q.clone(),
            );
            match (q_hyp_terminating(&s1, &q, n), q_hyp_terminating(&s2, &q, n)) {
                (Ok(x), Ok(y)) => {
                    prop_assert_eq!(&x, &y);
                    // Reverse-order accumulation from explicit terms.
                    let mut terms = Vec::new();
                    for k in 0..=n {
                        let num: Scalar = s1.top.iter().map(|t| q_pochhammer(t, &q, k)).product();
                        let den: Scalar = s1.bottom.iter().map(|t| q_pochhammer(t, &q, k)).product::<Scalar>()
                            * q_pochhammer(&q, &q, k);
                        if num.is_zero() { break; }
                        terms.push(num / den * powi(&q, k as i64).unwrap());
                    }
                    let rev: Scalar = terms.iter().rev().sum();
                    prop_assert_eq!(x, rev);
                }
                (Err(_), Err(_)) => {}
                _ => prop_assert!(false, "permutation changed singularity"),
            }
        }

        #[test]
        fn pochhammer_step(a in small_rational(), k in 0usize..8) {
            prop_assert_eq!(pochhammer(&a, k + 1), pochhammer(&a, k) * (&a + int(k as i64)));
        }

        #[test]
        fn q_pochhammer_splits(a in small_rational(), q in base(), m in 0usize..5, n in 0usize..5) {
            let qm = powi(&q, m as i64).unwrap();
            prop_assert_eq!(
                q_pochhammer(&a, &q, m + n),
                q_pochhammer(&a, &q, m) * q_pochhammer(&(&a * qm), &q, n)
            );
        }

        // Chu-Vandermonde: 2F1(-n, b; c | 1) = (c-b)_n / (c)_n.
        #[test]
        fn chu_vandermonde(n in 0usize..7, b in small_rational(), c in small_rational()) {
            let cn = pochhammer(&c, n);
            prop_assume!(!cn.is_zero());
            let spec = SeriesSpec::new(vec![int(-(n as i64)), b.clone()], vec![c.clone()], int(1));
            let lhs = hyp_terminating(&spec, n).unwrap();
            prop_assert_eq!(lhs, pochhammer(&(&c - &b), n) / cn);
        }

        // q-Chu-Vandermonde: 2φ1(q^{-n}, b; c | q; q) = (c/b;q)_n b^n / (c;q)_n.
        #[test]
        fn q_chu_vandermonde(n in 0usize..6, b in small_rational(), c in small_rational(), q in base()) {
            prop_assume!(!b.is_zero());
            let cn = q_pochhammer(&c, &q, n);
            prop_assume!(!cn.is_zero());
            let spec = SeriesSpec::new(
                vec![powi(&q, -(n as i64)).unwrap(), b.clone()],
                vec![c.clone()],
                q.clone(),
            );
            let lhs = q_hyp_terminating(&spec, &q, n).unwrap();
            let rhs = q_pochhammer(&(&c / &b), &q, n) * powi(&b, n as i64).unwrap() / cn;
            prop_assert_eq!(lhs, rhs);
        }
    }
}
