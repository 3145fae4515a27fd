//! Desk-scale irreducibility certification over `Q`.
//!
//! Strategy: squarefree check via `gcd(p, p')`, then a bounded brute-force
//! search for integer polynomial factors of the primitive integer model of
//! `p`. Candidate coefficients are bounded by a Mignotte-style estimate, so an
//! exhausted search is a proof of irreducibility; exceeding the work budget
//! yields `Unknown` instead of a wrong answer.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::exactnum::Rat;
use crate::polyalg::UniPoly;

/// Outcome of [`certify_irreducible`].
#[derive(Debug, Clone, PartialEq)]
pub enum Irreducibility {
    Irreducible,
    /// A proper monic factor over `Q`.
    Reducible(UniPoly<Rat>),
    /// The search exceeded the work budget before reaching a verdict.
    Unknown,
}

/// Error for a non-monic input polynomial.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
#[error("irreducibility certification requires a monic polynomial")]
pub struct NotMonic;

const DEFAULT_BUDGET: u64 = 5_000_000;

/// Certifies irreducibility of a monic polynomial over `Q` with the default
/// work budget.
pub fn certify_irreducible(p: &UniPoly<Rat>) -> Result<Irreducibility, NotMonic> {
    certify_irreducible_with_budget(p, DEFAULT_BUDGET)
}

/// As [`certify_irreducible`], with an explicit bound on the number of trial
/// divisions attempted.
pub fn certify_irreducible_with_budget(
    p: &UniPoly<Rat>,
    budget: u64,
) -> Result<Irreducibility, NotMonic> {
    if !p.is_monic() {
        return Err(NotMonic);
    }
    let deg = p.degree().unwrap();
    if deg == 1 {
        return Ok(Irreducibility::Irreducible);
    }

    // repeated factors: gcd(p, p') is a proper factor when nonconstant
    let g = p.gcd(&p.derivative());
    if g.degree().is_some_and(|d| d > 0) {
        return Ok(Irreducibility::Reducible(g));
    }

    // primitive integer model; irreducibility over Q transfers (Gauss)
    let zp = to_primitive_integer(p);
    let n = zp.len() - 1;
    if zp[0].is_zero() {
        return Ok(Irreducibility::Reducible(UniPoly::from_ints(&[0, 1])));
    }

    let lead_divs = positive_divisors(&zp[n]);
    let const_divs = positive_divisors(&zp[0]);
    let mut work = 0u64;

    for dg in 1..=n / 2 {
        let bound = mignotte_bound(&zp, dg);
        // candidate factor g = g_0 + g_1 x + ... + g_dg x^dg with
        // g_dg | lc, g_0 | constant, middle coefficients in [-B, B]
        let mut mids = vec![-&bound; dg.saturating_sub(1)];
        loop {
            for lead in &lead_divs {
                for c0 in const_divs
                    .iter()
                    .flat_map(|d| [-d.clone(), d.clone()])
                {
                    work += 1;
                    if work > budget {
                        return Ok(Irreducibility::Unknown);
                    }
                    let mut cand = Vec::with_capacity(dg + 1);
                    cand.push(c0);
                    cand.extend(mids.iter().cloned());
                    cand.push(lead.clone());
                    let candidate =
                        UniPoly::new(cand.into_iter().map(Rat::from_bigint).collect());
                    if candidate.degree() != Some(dg) {
                        continue;
                    }
                    if p.exact_div(&candidate).is_some() {
                        return Ok(Irreducibility::Reducible(candidate.make_monic()));
                    }
                }
            }
            // advance middle coefficients in lexicographic order
            let mut i = 0;
            loop {
                if i == mids.len() {
                    break;
                }
                mids[i] += 1;
                if mids[i] <= bound {
                    break;
                }
                mids[i] = -&bound;
                i += 1;
            }
            if mids.is_empty() || i == mids.len() {
                break;
            }
        }
    }
    Ok(Irreducibility::Irreducible)
}

/// Clears denominators and the content, preserving the sign of the leading
/// coefficient. Coefficients returned constant-term first.
fn to_primitive_integer(p: &UniPoly<Rat>) -> Vec<BigInt> {
    let mut lcm = BigInt::one();
    for c in p.coeffs() {
        lcm = lcm.lcm(c.denom());
    }
    let ints: Vec<BigInt> = p
        .coeffs()
        .iter()
        .map(|c| c.numer() * (&lcm / c.denom()))
        .collect();
    let content = ints
        .iter()
        .fold(BigInt::zero(), |acc, c| acc.gcd(c))
        .max(BigInt::one());
    ints.into_iter().map(|c| c / &content).collect()
}

fn positive_divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= n {
        if (&n % &d).is_zero() {
            small.push(d.clone());
            let q = &n / &d;
            if q != d {
                large.push(q);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

/// `2^dg · (ceil(|p|_2) + |lc(p)|)` bounds every coefficient of a degree-`dg`
/// integer factor of `p`.
fn mignotte_bound(zp: &[BigInt], dg: usize) -> BigInt {
    let norm_sq: BigInt = zp.iter().map(|c| c * c).sum();
    let norm = norm_sq.sqrt() + 1;
    (norm + zp.last().unwrap().abs()) << dg
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(coeffs: &[i64]) -> UniPoly<Rat> {
        UniPoly::from_ints(coeffs)
    }

    #[test]
    fn quadratics() {
        assert_eq!(
            certify_irreducible(&poly(&[1, 0, 1])).unwrap(),
            Irreducibility::Irreducible
        );
        assert_eq!(
            certify_irreducible(&poly(&[-1, 0, 1])).unwrap(),
            Irreducibility::Reducible(poly(&[-1, 1]))
        );
    }

    #[test]
    fn quartic_needs_factor_search() {
        // t^4 + 1 has no rational roots and no quadratic integer factor
        assert_eq!(
            certify_irreducible(&poly(&[1, 0, 0, 0, 1])).unwrap(),
            Irreducibility::Irreducible
        );
        // (t^2+1)(t^2+2)
        assert_eq!(
            certify_irreducible(&poly(&[2, 0, 3, 0, 1])).unwrap(),
            Irreducibility::Reducible(poly(&[1, 0, 1]))
        );
    }

    #[test]
    fn squarefree_witness() {
        // (t-1)^2
        assert_eq!(
            certify_irreducible(&poly(&[1, -2, 1])).unwrap(),
            Irreducibility::Reducible(poly(&[-1, 1]))
        );
    }

    #[test]
    fn rational_coefficients() {
        // t^2 - 1/4 = (t - 1/2)(t + 1/2)
        let p = UniPoly::new(vec![Rat::new(-1, 4), Rat::zero(), Rat::one()]);
        match certify_irreducible(&p).unwrap() {
            Irreducibility::Reducible(f) => {
                assert!(p.exact_div(&f).is_some());
            }
            other => panic!("expected reducible, got {other:?}"),
        }
    }

    #[test]
    fn budget_exhaustion_reports_unknown() {
        assert_eq!(
            certify_irreducible_with_budget(&poly(&[7, 0, 3, 0, 0, 0, 1]), 1).unwrap(),
            Irreducibility::Unknown
        );
    }

    #[test]
    fn non_monic_rejected() {
        assert!(certify_irreducible(&poly(&[1, 0, 2])).is_err());
    }

    #[test]
    fn paper_scale_fields_certify() {
        for coeffs in [
            &[2, 2, 0, 1][..],      // a^3 + 2a + 2
            &[1, 0, 0, 0, 1],       // a^4 + 1
            &[-3, 0, 1, 1],         // a^3 + a^2 - 3
            &[-3, 0, 1, 0, 1],      // a^4 + a^2 - 3
            &[1, 3, 0, 0, 1],       // a^4 + 3a + 1
            &[2, 0, 0, 1],          // a^3 + 2
            &[2, -4, 6, -4, 1],     // (a-1)^4 + 1
        ] {
            assert_eq!(
                certify_irreducible(&poly(coeffs)).unwrap(),
                Irreducibility::Irreducible,
                "{coeffs:?}"
            );
        }
    }
}
