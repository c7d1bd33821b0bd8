//! `id(G, x)` for the parametric families, by closed form or by recurrence.

use crate::error::{Error, Result};
use crate::family::FamilySpec;
use crate::polynomial::Polynomial;
use num_bigint::BigInt;
use num_traits::Zero;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Variant {
    ClosedForm,
    Recurrence,
}

/// `id(C_n)` for `3 <= n <= 6`, the seeds of the cycle recurrence. Obtained by
/// brute force; `cycle_bases_match_brute_force` regenerates them.
const CYCLE_BASES: [&[i64]; 4] = [
    &[0, 3],       // C_3 = K_3
    &[0, 0, 2],    // C_4
    &[0, 0, 5],    // C_5
    &[0, 0, 3, 2], // C_6
];

/// `C(a, b)` with the convention that it vanishes unless `0 <= b <= a`.
pub fn binomial(a: i64, b: i64) -> BigInt {
    if b < 0 || a < 0 || b > a {
        return BigInt::zero();
    }
    let b = b.min(a - b);
    let mut c = BigInt::from(1);
    for i in 0..b {
        c = c * (a - i) / (i + 1);
    }
    c
}

pub fn id_family(spec: &FamilySpec, variant: Variant) -> Result<Polynomial> {
    spec.validate()?;
    match *spec {
        FamilySpec::Edgeless { n } => Ok(Polynomial::monomial(1, n)),
        FamilySpec::Complete { n: 0 } => Ok(Polynomial::one()),
        FamilySpec::Complete { n } => Ok(Polynomial::monomial(n as u64, 1)),
        FamilySpec::CompleteBipartite { p, q } => Ok(match (p, q) {
            (0, m) | (m, 0) => Polynomial::monomial(1, m),
            _ => Polynomial::monomial(1, p) + Polynomial::monomial(1, q),
        }),
        FamilySpec::Star { n: 1 } => Ok(Polynomial::x()),
        FamilySpec::Star { n } => Ok(Polynomial::x() + Polynomial::monomial(1, n - 1)),
        FamilySpec::Path { n } => {
            if n < 1 {
                return Err(Error::InvalidParameter("path needs at least 1 vertex".into()));
            }
            Ok(match variant {
                Variant::ClosedForm => path_closed_form(n),
                Variant::Recurrence => path_recurrence(n).pop().expect("n >= 1"),
            })
        }
        FamilySpec::Cycle { n } => match variant {
            Variant::ClosedForm if n < 7 => Err(Error::InvalidParameter(format!(
                "the cycle closed form needs n >= 7, got {n}"
            ))),
            Variant::ClosedForm => Ok(cycle_closed_form(n)),
            Variant::Recurrence => Ok(cycle_recurrence(n)),
        },
        FamilySpec::Random { .. } => Err(Error::InvalidParameter(
            "random graphs have no closed form".into(),
        )),
    }
}

/// `Σ_{k=1}^{⌊(n+3)/2⌋} C(k+1, n−2k+1) x^k`.
pub fn path_closed_form(n: usize) -> Polynomial {
    let n = n as i64;
    let coeffs = (0..=(n + 3) / 2)
        .map(|k| if k == 0 { BigInt::zero() } else { binomial(k + 1, n - 2 * k + 1) })
        .collect();
    Polynomial::from_coeffs(coeffs)
}

/// `[id(P_1), .., id(P_n)]` from `P_n = x·P_{n−2} + x·P_{n−3}`.
pub fn path_recurrence(n: usize) -> Vec<Polynomial> {
    let mut out = vec![
        Polynomial::from_i64(&[0, 1]),
        Polynomial::from_i64(&[0, 2]),
        Polynomial::from_i64(&[0, 1, 1]),
    ];
    out.truncate(n);
    for m in 4..=n {
        let next = (&out[m - 3] + &out[m - 4]).shift(1);
        out.push(next);
    }
    out
}

/// `Σ_{k=0}^{⌊(n−2)/2⌋} (2 C(k+2, n−2k−4) + C(k+1, n−2k−5)) x^(k+2)`, evaluated
/// for any `n >= 2` even where it is not claimed to hold.
pub fn cycle_closed_form(n: usize) -> Polynomial {
    let n = n as i64;
    let mut coeffs = vec![BigInt::zero(); ((n - 2) / 2 + 3).max(0) as usize];
    for k in 0..=(n - 2) / 2 {
        let c = binomial(k + 2, n - 2 * k - 4) * 2 + binomial(k + 1, n - 2 * k - 5);
        coeffs[(k + 2) as usize] = c;
    }
    Polynomial::from_coeffs(coeffs)
}

/// `C_n = 2x·P_{n−3} + x²·P_{n−6}` for `n >= 7`, stored bases below.
pub fn cycle_recurrence(n: usize) -> Polynomial {
    assert!(n >= 3, "cycles have at least 3 vertices");
    if n <= 6 {
        return Polynomial::from_i64(CYCLE_BASES[n - 3]);
    }
    let paths = path_recurrence(n - 3);
    let two = BigInt::from(2);
    paths[n - 4].scale(&two).shift(1) + paths[n - 7].shift(2)
}
