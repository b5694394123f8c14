//! Correlation inequality for log-supermodular weights and monotone
//! functions, with exact rational arithmetic throughout.

use crate::error::{CoreError, Result};
use crate::lattice::LatticeOps;
use crate::limits::Limits;
use crate::verify::{establish_distributivity, DistributivityEvidence, Verdict};
use num::{BigRational, Zero};

pub type Weight = BigRational;

/// mu(x) mu(y) <= mu(x /\ y) mu(x \/ y) for all pairs, mu >= 0.
pub fn check_log_supermodular(lat: &impl LatticeOps, mu: &[Weight]) -> Result<()> {
    if mu.len() != lat.len() {
        return Err(CoreError::FnLenMismatch { have: mu.len(), want: lat.len() });
    }
    for (x, w) in mu.iter().enumerate() {
        if w < &Weight::zero() {
            return Err(CoreError::NegativeWeight(lat.label(x)));
        }
    }
    for x in 0..lat.len() {
        for y in (x + 1)..lat.len() {
            if lat.leq(x, y) || lat.leq(y, x) {
                continue; // comparable pairs hold with equality
            }
            let m = lat.meet(x, y);
            let j = lat.join(x, y);
            if &mu[x] * &mu[y] > &mu[m] * &mu[j] {
                return Err(CoreError::NotLogSupermodular { x: lat.label(x), y: lat.label(y) });
            }
        }
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Monotonicity {
    pub increasing: bool,
    pub decreasing: bool,
}

impl Monotonicity {
    pub fn is_monotone(self) -> bool {
        self.increasing || self.decreasing
    }
}

/// Determine whether f is increasing and/or decreasing with respect to the
/// lattice order. Constant functions are both.
pub fn check_monotone(lat: &impl LatticeOps, f: &[Weight]) -> Result<Monotonicity> {
    if f.len() != lat.len() {
        return Err(CoreError::FnLenMismatch { have: f.len(), want: lat.len() });
    }
    let mut increasing = true;
    let mut decreasing = true;
    for a in 0..lat.len() {
        for b in 0..lat.len() {
            if a != b && lat.leq(a, b) {
                if f[a] > f[b] {
                    increasing = false;
                }
                if f[a] < f[b] {
                    decreasing = false;
                }
            }
            if !increasing && !decreasing {
                return Ok(Monotonicity { increasing, decreasing });
            }
        }
    }
    Ok(Monotonicity { increasing, decreasing })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FkgDirection {
    /// both functions increasing or both decreasing: S(f)S(g) <= S(fg)S(1)
    SumLeq,
    /// one increasing, one decreasing: S(f)S(g) >= S(fg)S(1)
    SumGeq,
    /// at least one function constant: both directions, so equality
    Equality,
}

#[derive(Clone, Debug)]
pub struct FkgCertificate {
    pub lattice: String,
    pub direction: FkgDirection,
    pub f_mono: Monotonicity,
    pub g_mono: Monotonicity,
    pub s_f: BigRational,
    pub s_g: BigRational,
    pub s_fg: BigRational,
    pub s_1: BigRational,
    pub verdict: Verdict,
    pub distributivity: DistributivityEvidence,
}

impl FkgCertificate {
    pub fn holds(&self) -> bool {
        self.verdict == Verdict::Holds
    }
}

fn weighted_sum(mu: &[Weight], f: impl Fn(usize) -> BigRational) -> BigRational {
    let mut s = BigRational::zero();
    for (x, w) in mu.iter().enumerate() {
        s += w * f(x);
    }
    s
}

/// Verify the correlation inequality S(f)S(g) vs S(fg)S(1) with the
/// direction dictated by the monotonicity types of f and g. Preconditions
/// (nonnegative log-supermodular mu, monotone f and g, distributive lattice)
/// are re-verified here.
pub fn fkg_check(
    lat: &(impl LatticeOps + Sync),
    mu: &[Weight],
    f: &[Weight],
    g: &[Weight],
    lattice_name: &str,
    assert_distributive: bool,
    limits: &Limits,
) -> Result<FkgCertificate> {
    check_log_supermodular(lat, mu)?;
    let f_mono = check_monotone(lat, f)?;
    let g_mono = check_monotone(lat, g)?;
    if !f_mono.is_monotone() {
        let (x, y) = first_order_pair(lat);
        return Err(CoreError::NotMonotone { x, y });
    }
    if !g_mono.is_monotone() {
        let (x, y) = first_order_pair(lat);
        return Err(CoreError::NotMonotone { x, y });
    }
    let distributivity = establish_distributivity(lat, assert_distributive, limits)?;

    let same = (f_mono.increasing && g_mono.increasing) || (f_mono.decreasing && g_mono.decreasing);
    let mixed = (f_mono.increasing && g_mono.decreasing) || (f_mono.decreasing && g_mono.increasing);
    let direction = match (same, mixed) {
        (true, true) => FkgDirection::Equality,
        (true, false) => FkgDirection::SumLeq,
        (false, true) => FkgDirection::SumGeq,
        (false, false) => unreachable!("monotone directions checked above"),
    };

    let s_f = weighted_sum(mu, |x| f[x].clone());
    let s_g = weighted_sum(mu, |x| g[x].clone());
    let s_fg = weighted_sum(mu, |x| &f[x] * &g[x]);
    let s_1 = weighted_sum(mu, |_| BigRational::from_integer(1.into()));
    let lhs = &s_f * &s_g;
    let rhs = &s_fg * &s_1;
    let ok = match direction {
        FkgDirection::SumLeq => lhs <= rhs,
        FkgDirection::SumGeq => lhs >= rhs,
        FkgDirection::Equality => lhs == rhs,
    };
    Ok(FkgCertificate {
        lattice: lattice_name.to_string(),
        direction,
        f_mono,
        g_mono,
        s_f,
        s_g,
        s_fg,
        s_1,
        verdict: if ok { Verdict::Holds } else { Verdict::Violated },
        distributivity,
    })
}

fn first_order_pair(lat: &impl LatticeOps) -> (String, String) {
    for a in 0..lat.len() {
        for b in 0..lat.len() {
            if a != b && lat.leq(a, b) {
                return (lat.label(a), lat.label(b));
            }
        }
    }
    (lat.label(0), lat.label(0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::vector::VectorLattice;

    fn rat(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    fn cube() -> VectorLattice {
        let elems: Vec<Vec<i32>> = (0..8).map(|m| vec![m & 1, m >> 1 & 1, m >> 2 & 1]).collect();
        let labels = (0..8).map(|m| format!("{m:03b}")).collect();
        VectorLattice::new(3, elems, labels, &Limits::default()).unwrap()
    }

    #[test]
    fn counting_measure_same_direction() {
        let l = cube();
        let mu: Vec<_> = (0..8).map(|_| rat(1)).collect();
        // f = #ones, g = coordinate 0: both increasing
        let f: Vec<_> = (0..8).map(|i| rat(l.vector(i).iter().map(|&v| v as i64).sum())).collect();
        let g: Vec<_> = (0..8).map(|i| rat(l.vector(i)[0] as i64)).collect();
        let cert = fkg_check(&l, &mu, &f, &g, "cube", false, &Limits::default()).unwrap();
        assert_eq!(cert.direction, FkgDirection::SumLeq);
        assert!(cert.holds());
        assert_eq!(cert.s_1, rat(8));
    }

    #[test]
    fn mixed_direction_flips() {
        let l = cube();
        let mu: Vec<_> = (0..8).map(|_| rat(1)).collect();
        let f: Vec<_> = (0..8).map(|i| rat(l.vector(i).iter().map(|&v| v as i64).sum())).collect();
        let g: Vec<_> = (0..8).map(|i| rat(3 - l.vector(i).iter().map(|&v| v as i64).sum::<i64>())).collect();
        let cert = fkg_check(&l, &mu, &f, &g, "cube", false, &Limits::default()).unwrap();
        assert_eq!(cert.direction, FkgDirection::SumGeq);
        assert!(cert.holds());
    }

    #[test]
    fn indicator_of_lower_ideal_is_decreasing() {
        let l = cube();
        let f: Vec<_> = (0..8).map(|i| rat((l.vector(i)[0] == 0) as i64)).collect();
        let m = check_monotone(&l, &f).unwrap();
        assert!(m.decreasing && !m.increasing);
    }

    #[test]
    fn non_log_supermodular_rejected() {
        let l = cube();
        // weight 0 at the bottom breaks x /\ y when x, y are incomparable atoms
        let mut mu: Vec<_> = (0..8).map(|_| rat(1)).collect();
        mu[0] = rat(0);
        let err = check_log_supermodular(&l, &mu).unwrap_err();
        assert!(matches!(err, CoreError::NotLogSupermodular { .. }));
    }

    #[test]
    fn negative_weight_rejected() {
        let l = cube();
        let mut mu: Vec<_> = (0..8).map(|_| rat(1)).collect();
        mu[3] = rat(-1);
        assert!(matches!(
            check_log_supermodular(&l, &mu),
            Err(CoreError::NegativeWeight(_))
        ));
    }

    #[test]
    fn non_monotone_function_rejected() {
        let l = cube();
        let mu: Vec<_> = (0..8).map(|_| rat(1)).collect();
        // indicator of a middle antichain element: neither direction
        let f: Vec<_> = (0..8).map(|i| rat((i == 1) as i64)).collect();
        let g: Vec<_> = (0..8).map(|_| rat(1)).collect();
        let err = fkg_check(&l, &mu, &f, &g, "cube", false, &Limits::default()).unwrap_err();
        assert!(matches!(err, CoreError::NotMonotone { .. }));
    }

    #[test]
    fn geometric_weights_are_log_supermodular() {
        let l = cube();
        // 2^(#ones): exponential of a modular function
        let mu: Vec<_> = (0..8)
            .map(|i| rat(1 << l.vector(i).iter().map(|&v| v as i64).sum::<i64>()))
            .collect();
        assert!(check_log_supermodular(&l, &mu).is_ok());
    }
}
