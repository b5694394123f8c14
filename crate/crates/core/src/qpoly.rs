//! Polynomials in q with integer coefficients, rank-generating sums over
//! ideals, and the coefficientwise order ideal inequality.

use crate::bits::IndexSet;
use crate::error::{CoreError, Result};
use crate::ideal::IdealHandle;
use crate::lattice::LatticeOps;
use crate::limits::Limits;
use crate::verify::{establish_distributivity, verify_ideal, Direction, DistributivityEvidence, OilOptions, Verdict};
use num::{BigInt, Zero};
use std::fmt;

/// Polynomial in q. The zero polynomial has no coefficients; otherwise the
/// leading coefficient is nonzero.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct QPoly {
    coeffs: Vec<BigInt>,
}

impl QPoly {
    pub fn zero() -> Self {
        QPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        QPoly::monomial(0)
    }

    pub fn monomial(exp: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); exp + 1];
        coeffs[exp] = BigInt::from(1);
        QPoly { coeffs }
    }

    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        let mut p = QPoly { coeffs };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.coeffs.last().map_or(false, |c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn add(&self, other: &QPoly) -> QPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) + other.coeff(i)).collect();
        QPoly::from_coeffs(coeffs)
    }

    pub fn sub(&self, other: &QPoly) -> QPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) - other.coeff(i)).collect();
        QPoly::from_coeffs(coeffs)
    }

    pub fn mul(&self, other: &QPoly) -> QPoly {
        if self.is_zero() || other.is_zero() {
            return QPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        QPoly::from_coeffs(coeffs)
    }

    pub fn eval_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// Coefficientwise p <= q, i.e. q - p has only nonnegative coefficients.
    pub fn leq_coeffwise(&self, other: &QPoly) -> bool {
        let n = self.coeffs.len().max(other.coeffs.len());
        (0..n).all(|i| self.coeff(i) <= other.coeff(i))
    }

    /// All coefficients nonnegative.
    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|c| c >= &BigInt::zero())
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match e {
                0 => write!(f, "{c}")?,
                _ => {
                    if c != &BigInt::from(1) {
                        write!(f, "{c}")?;
                    }
                    if e == 1 {
                        write!(f, "q")?;
                    } else {
                        write!(f, "q^{e}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// r(x) + r(y) = r(x /\ y) + r(x \/ y) for all pairs.
pub fn check_modular(lat: &impl LatticeOps, r: &[u64]) -> Result<()> {
    if r.len() != lat.len() {
        return Err(CoreError::FnLenMismatch { have: r.len(), want: lat.len() });
    }
    for x in 0..lat.len() {
        for y in (x + 1)..lat.len() {
            let m = lat.meet(x, y);
            let j = lat.join(x, y);
            if r[x] + r[y] != r[m] + r[j] {
                return Err(CoreError::NotModular { x: lat.label(x), y: lat.label(y) });
            }
        }
    }
    Ok(())
}

/// Sum of q^r(x) over the members (or the whole lattice when `members` is
/// None).
pub fn q_ideal_sum(lat: &impl LatticeOps, r: &[u64], members: Option<&IndexSet>) -> QPoly {
    let mut coeffs: Vec<BigInt> = Vec::new();
    let mut bump = |x: usize| {
        let e = r[x] as usize;
        if coeffs.len() <= e {
            coeffs.resize(e + 1, BigInt::zero());
        }
        coeffs[e] += 1;
    };
    match members {
        Some(set) => set.iter().for_each(&mut bump),
        None => (0..lat.len()).for_each(&mut bump),
    }
    QPoly::from_coeffs(coeffs)
}

#[derive(Clone, Debug)]
pub struct QCertificate {
    pub lattice: String,
    pub family_params: Vec<(String, String)>,
    pub i_poly: QPoly,
    pub j_poly: QPoly,
    pub intersection_poly: QPoly,
    pub lattice_poly: QPoly,
    pub lhs: QPoly,
    pub rhs: QPoly,
    /// rhs - lhs for ProductLeq, lhs - rhs for ProductGeq; the verdict holds
    /// iff this difference has nonnegative coefficients.
    pub difference: QPoly,
    pub direction: Direction,
    pub verdict: Verdict,
    pub distributivity: DistributivityEvidence,
}

impl QCertificate {
    pub fn holds(&self) -> bool {
        self.verdict == Verdict::Holds
    }
}

/// The q-analogue of the order ideal inequality: with a modular rank r,
/// [I]_q [J]_q and [I /\ J]_q [L]_q compare coefficientwise, in the same
/// direction as the counting inequality. Modularity of r and the ideal
/// claims are re-verified here.
pub fn q_oil_check(
    lat: &(impl LatticeOps + Sync),
    r: &[u64],
    i: &IdealHandle,
    j: &IdealHandle,
    opts: &OilOptions,
    limits: &Limits,
) -> Result<QCertificate> {
    verify_ideal(lat, i)?;
    verify_ideal(lat, j)?;
    check_modular(lat, r)?;
    let distributivity = establish_distributivity(lat, opts.assert_distributive, limits)?;

    let inter = i.members.intersection(&j.members);
    let i_poly = q_ideal_sum(lat, r, Some(&i.members));
    let j_poly = q_ideal_sum(lat, r, Some(&j.members));
    let intersection_poly = q_ideal_sum(lat, r, Some(&inter));
    let lattice_poly = q_ideal_sum(lat, r, None);
    let lhs = i_poly.mul(&j_poly);
    let rhs = intersection_poly.mul(&lattice_poly);
    let direction = Direction::from_kinds(i.kind, j.kind);
    let difference = match direction {
        Direction::ProductLeq => rhs.sub(&lhs),
        Direction::ProductGeq => lhs.sub(&rhs),
    };
    let ok = difference.is_nonnegative();
    Ok(QCertificate {
        lattice: if opts.lattice_name.is_empty() { "lattice".to_string() } else { opts.lattice_name.clone() },
        family_params: opts.family_params.clone(),
        i_poly,
        j_poly,
        intersection_poly,
        lattice_poly,
        lhs,
        rhs,
        difference,
        direction,
        verdict: if ok { Verdict::Holds } else { Verdict::Violated },
        distributivity,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::IdealKind;
    use crate::vector::VectorLattice;

    #[test]
    fn poly_arithmetic_and_display() {
        let p = QPoly::from_coeffs(vec![1.into(), 2.into(), 0.into(), 1.into()]);
        assert_eq!(p.to_string(), "1 + 2q + q^3");
        assert_eq!(p.degree(), Some(3));
        assert_eq!(p.eval_one(), BigInt::from(4));
        let q = QPoly::monomial(1);
        assert_eq!(p.mul(&q).to_string(), "q + 2q^2 + q^4");
        assert_eq!(QPoly::zero().to_string(), "0");
        assert_eq!(QPoly::zero().degree(), None);
        assert_eq!(p.mul(&QPoly::zero()), QPoly::zero());
        assert!(QPoly::zero().leq_coeffwise(&p));
        assert!(p.sub(&p).is_zero());
    }

    #[test]
    fn grid_rank_sum_is_gaussian() {
        // 2x3 grid with rank = coordinate sum: sum q^r = (1+q)(1+q+q^2)
        let mut elems = Vec::new();
        let mut labels = Vec::new();
        for a in 0..2 {
            for b in 0..3 {
                elems.push(vec![a, b]);
                labels.push(format!("({a},{b})"));
            }
        }
        let l = VectorLattice::new(2, elems, labels, &Limits::default()).unwrap();
        let r: Vec<u64> = (0..l.len()).map(|i| l.vector(i).iter().map(|&v| v as u64).sum()).collect();
        assert!(check_modular(&l, &r).is_ok());
        let total = q_ideal_sum(&l, &r, None);
        let expect = QPoly::from_coeffs(vec![1.into(), 1.into()])
            .mul(&QPoly::from_coeffs(vec![1.into(), 1.into(), 1.into()]));
        assert_eq!(total, expect);
    }

    #[test]
    fn non_modular_rank_rejected() {
        let elems: Vec<Vec<i32>> = (0..4).map(|m| vec![m & 1, m >> 1]).collect();
        let labels = (0..4).map(|m| format!("{m:02b}")).collect();
        let l = VectorLattice::new(2, elems, labels, &Limits::default()).unwrap();
        // rank jumps by 2 at the top: not modular on the square
        let r = vec![0, 1, 1, 3];
        assert!(matches!(check_modular(&l, &r), Err(CoreError::NotModular { .. })));
    }

    #[test]
    fn q_oil_on_a_chain() {
        // chain 0 < 1 < 2 with rank = value; I = {0,1} lower, J = {1,2} upper
        let elems: Vec<Vec<i32>> = (0..3).map(|i| vec![i]).collect();
        let labels = (0..3).map(|i| i.to_string()).collect();
        let l = VectorLattice::new(1, elems, labels, &Limits::default()).unwrap();
        let r = vec![0u64, 1, 2];
        let i = IdealHandle::from_pred(&l, IdealKind::Lower, |k| k <= 1);
        let j = IdealHandle::from_pred(&l, IdealKind::Upper, |k| k >= 1);
        let cert = q_oil_check(&l, &r, &i, &j, &OilOptions::default(), &Limits::default()).unwrap();
        // (1+q)(q+q^2) >= q(1+q+q^2): difference q + q^2 + ... check
        assert_eq!(cert.direction, Direction::ProductGeq);
        assert!(cert.holds());
        assert_eq!(cert.lhs.to_string(), "q + 2q^2 + q^3");
        assert_eq!(cert.rhs.to_string(), "q + q^2 + q^3");
        assert_eq!(cert.difference.to_string(), "q^2");
        // q = 1 specialization matches the counting certificate
        assert_eq!(cert.lhs.eval_one(), BigInt::from(4));
        assert_eq!(cert.rhs.eval_one(), BigInt::from(3));
    }
}
