//! Integer partitions, containment intervals in Young's lattice, and the
//! log-concavity certificate for interval cardinalities under the +n shift.

use num::BigUint;
use oillab_core::{
    oil_check, Certificate, CoreError, IdealHandle, IdealKind, Limits, OilOptions, Result, VectorLattice,
};
use std::fmt;

/// Weakly decreasing parts. The length is explicit: (1,0) and (1) are
/// different partitions for the purposes of the +n shift, which acts on
/// every explicit part including zeros.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Partition {
    parts: Vec<u64>,
}

impl Partition {
    pub fn new(parts: Vec<u64>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(CoreError::NotAPartialOrder(format!(
                "parts must be weakly decreasing, got {parts:?}"
            )));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Same parts padded with zeros to length k.
    pub fn padded(parts: Vec<u64>, k: usize) -> Result<Self> {
        if parts.len() > k {
            return Err(CoreError::NotAPartialOrder(format!(
                "cannot pad {} parts into length {k}",
                parts.len()
            )));
        }
        let mut parts = parts;
        parts.resize(k, 0);
        Partition::new(parts)
    }

    /// Comma-separated parts; empty string is the empty partition.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u64>()
                    .map_err(|_| CoreError::NotAPartialOrder(format!("bad part {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// i-th part, 0 beyond the explicit length.
    pub fn part(&self, i: usize) -> u64 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Number of cells.
    pub fn size(&self) -> u64 {
        self.parts.iter().sum()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Diagram containment; trailing zeros are immaterial here.
pub fn contains(lam: &Partition, mu: &Partition) -> bool {
    (0..lam.len().max(mu.len())).all(|i| lam.part(i) <= mu.part(i))
}

/// Adds n to every explicit part.
pub fn shift_partition(lam: &Partition, n: u64) -> Partition {
    Partition {
        parts: lam.parts.iter().map(|p| p + n).collect(),
    }
}

/// Every nu with lam <= nu <= mu, as length-len(mu) part vectors in
/// lexicographic order.
pub fn interval_elements(lam: &Partition, mu: &Partition) -> Result<Vec<Partition>> {
    if !contains(lam, mu) {
        return Err(CoreError::NotComparable(lam.to_string(), mu.to_string()));
    }
    let k = mu.len();
    let mut out = Vec::new();
    let mut cur = vec![0u64; k];
    fn rec(lam: &Partition, mu: &Partition, row: usize, cur: &mut Vec<u64>, out: &mut Vec<Partition>) {
        if row == cur.len() {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        let hi = if row == 0 { mu.part(0) } else { mu.part(row).min(cur[row - 1]) };
        for v in lam.part(row)..=hi {
            cur[row] = v;
            rec(lam, mu, row + 1, cur, out);
        }
    }
    rec(lam, mu, 0, &mut cur, &mut out);
    Ok(out)
}

/// Interval cardinality by row dynamic programming, independent of the
/// enumerator: ways(row, v) = fillings of rows row.. with parts <= v.
pub fn interval_count(lam: &Partition, mu: &Partition) -> Result<BigUint> {
    if !contains(lam, mu) {
        return Err(CoreError::NotComparable(lam.to_string(), mu.to_string()));
    }
    let k = mu.len();
    if k == 0 {
        return Ok(BigUint::from(1u32));
    }
    // sweep from the last row up; ways[v - lam.part(row)] with v clamped
    let last = k - 1;
    let mut ways: Vec<BigUint> = (lam.part(last)..=mu.part(last)).map(|_| BigUint::from(1u32)).collect();
    for row in (0..last).rev() {
        let (lo, hi) = (lam.part(row), mu.part(row));
        let (nlo, nhi) = (lam.part(row + 1), mu.part(row + 1));
        // prefix sums of the next row's ways, capped at each v
        let mut pre = Vec::with_capacity(ways.len() + 1);
        pre.push(BigUint::from(0u32));
        for w in &ways {
            let s = pre.last().unwrap() + w;
            pre.push(s);
        }
        let count_upto = |v: u64| -> BigUint {
            if v < nlo {
                return BigUint::from(0u32);
            }
            let idx = ((v.min(nhi) - nlo) + 1) as usize;
            pre[idx].clone()
        };
        ways = (lo..=hi).map(count_upto).collect();
    }
    Ok(ways.iter().sum())
}

/// The interval as a lattice: order is partwise, meet and join are partwise
/// min and max (containment intervals are closed under both).
pub fn interval_lattice(lam: &Partition, mu: &Partition, limits: &Limits) -> Result<VectorLattice> {
    let count = interval_count(lam, mu)?;
    if count > BigUint::from(limits.max_elements) {
        return Err(CoreError::SizeLimitExceeded {
            what: "materializing a Young interval",
            have: usize::try_from(&count).unwrap_or(usize::MAX),
            cap: limits.max_elements,
        });
    }
    let elems = interval_elements(lam, mu)?;
    let dims = mu.len();
    let labels: Vec<String> = elems.iter().map(|p| p.to_string()).collect();
    let vecs: Vec<Vec<i32>> = elems
        .iter()
        .map(|p| (0..dims).map(|i| p.part(i) as i32).collect())
        .collect();
    VectorLattice::new(dims, vecs, labels, limits)
}

/// Log-concavity certificate for ( #[lam, lam+n] )_n at index n: inside
/// L = [lam, lam+(n+1)], I = [lam, lam+n] is a lower ideal and
/// J = [lam+1, lam+n+1] an upper ideal, so |I||J| >= |I n J||L|.
///
/// An optional inner shape turns lam into the skew shape lam/inner; the
/// interval and its counts are unchanged, the inner shape is validated and
/// recorded.
pub fn young_certificate(
    lam: &Partition,
    inner: Option<&Partition>,
    n: u64,
    limits: &Limits,
) -> Result<Certificate> {
    if let Some(inner) = inner {
        if !contains(inner, lam) {
            return Err(CoreError::NotComparable(inner.to_string(), lam.to_string()));
        }
    }
    let top = shift_partition(lam, n + 1);
    let lat = interval_lattice(lam, &top, limits)?;
    let k = lam.len();
    let i_bound: Vec<i32> = (0..k).map(|r| (lam.part(r) + n) as i32).collect();
    let j_bound: Vec<i32> = (0..k).map(|r| (lam.part(r) + 1) as i32).collect();
    let i = IdealHandle::new(
        IdealKind::Lower,
        lat.select(|_, v| v.iter().zip(&i_bound).all(|(x, b)| x <= b)),
    );
    let j = IdealHandle::new(
        IdealKind::Upper,
        lat.select(|_, v| v.iter().zip(&j_bound).all(|(x, b)| x >= b)),
    );
    let mut family_params = vec![
        ("lambda".to_string(), lam.to_string()),
        ("n".to_string(), n.to_string()),
    ];
    if let Some(inner) = inner {
        family_params.push(("inner".to_string(), inner.to_string()));
    }
    let opts = OilOptions {
        assert_distributive: true,
        lattice_name: format!("Young interval [{lam}, {top}]"),
        family_params,
    };
    oil_check(&lat, &i, &j, &opts, limits)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u64]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn containment() {
        assert!(contains(&p(&[1]), &p(&[2, 1])));
        assert!(!contains(&p(&[2, 2]), &p(&[2, 1])));
        assert!(contains(&p(&[2, 1]), &p(&[2, 1])));
        assert!(contains(&p(&[1, 0, 0]), &p(&[1])));
    }

    #[test]
    fn shifting() {
        assert_eq!(shift_partition(&p(&[1, 0]), 2), p(&[3, 2]));
        assert_eq!(shift_partition(&p(&[5, 3, 1]), 1), p(&[6, 4, 2]));
        assert_eq!(shift_partition(&p(&[4, 2]), 0), p(&[4, 2]));
        assert_eq!(shift_partition(&Partition::empty(), 7), Partition::empty());
    }

    #[test]
    fn increasing_parts_rejected() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![3, 3, 1, 0]).is_ok());
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(Partition::parse("2,1").unwrap(), p(&[2, 1]));
        assert_eq!(Partition::parse(" 5, 3 ,1 ").unwrap(), p(&[5, 3, 1]));
        assert_eq!(Partition::parse("").unwrap(), Partition::empty());
        assert!(Partition::parse("1,2").is_err());
        assert!(Partition::parse("a").is_err());
        assert_eq!(p(&[2, 1]).to_string(), "(2,1)");
        assert_eq!(Partition::empty().to_string(), "()");
    }

    #[test]
    fn padding() {
        assert_eq!(Partition::padded(vec![1], 3).unwrap(), p(&[1, 0, 0]));
        assert!(Partition::padded(vec![1, 1], 1).is_err());
    }

    #[test]
    fn small_intervals() {
        let all = interval_elements(&Partition::empty(), &p(&[2, 1])).unwrap();
        let got: Vec<String> = all.iter().map(|q| q.to_string()).collect();
        assert_eq!(got, ["(0,0)", "(1,0)", "(1,1)", "(2,0)", "(2,1)"]);

        assert_eq!(interval_elements(&p(&[2, 1]), &p(&[2, 1])).unwrap().len(), 1);
        assert!(interval_elements(&p(&[2, 2]), &p(&[2, 1])).is_err());
    }

    #[test]
    fn staircase_is_catalan() {
        // #[empty, (n-1,...,1,0)] = C_n
        let c = [1u32, 1, 2, 5, 14, 42, 132, 429];
        for n in 1..=7usize {
            let stair = Partition::new((0..n as u64).rev().collect()).unwrap();
            let cnt = interval_count(&Partition::empty(), &stair).unwrap();
            assert_eq!(cnt, BigUint::from(c[n]), "n={n}");
        }
    }

    #[test]
    fn count_matches_enumeration() {
        let cases = [
            (p(&[]), p(&[3, 2, 2])),
            (p(&[1, 1]), p(&[4, 3, 1, 0])),
            (p(&[2]), p(&[5, 2])),
            (p(&[3, 3, 3]), p(&[3, 3, 3])),
        ];
        for (lam, mu) in cases {
            let n = interval_elements(&lam, &mu).unwrap().len();
            assert_eq!(interval_count(&lam, &mu).unwrap(), BigUint::from(n), "[{lam}, {mu}]");
        }
    }

    #[test]
    fn multiset_counts() {
        // #[(1^k), (1^k)+n] = (n+k choose k)
        fn binom(n: u64, k: u64) -> u64 {
            let mut r = 1u64;
            for i in 0..k {
                r = r * (n - i) / (i + 1);
            }
            r
        }
        for k in 1..=4usize {
            for n in 0..=8u64 {
                let lam = Partition::new(vec![1; k]).unwrap();
                let cnt = interval_count(&lam, &shift_partition(&lam, n)).unwrap();
                assert_eq!(cnt, BigUint::from(binom(n + k as u64, k as u64)), "k={k} n={n}");
            }
        }
    }

    #[test]
    fn certificate_binomial_case() {
        let c = young_certificate(&p(&[1, 1]), None, 2, &Limits::default()).unwrap();
        assert!(c.holds());
        assert_eq!(c.i_size, BigUint::from(6u32));
        assert_eq!(c.j_size, BigUint::from(6u32));
        assert_eq!(c.intersection_size, BigUint::from(3u32));
        assert_eq!(c.lattice_size, BigUint::from(10u32));
    }

    #[test]
    fn certificate_chain_case() {
        // k=1: interval is a chain, (n+1)^2 >= n(n+2)
        for n in 1..=5 {
            let c = young_certificate(&p(&[1]), None, n, &Limits::default()).unwrap();
            assert!(c.holds());
            assert_eq!(c.i_size, BigUint::from(n + 1));
            assert_eq!(c.intersection_size, BigUint::from(n));
            assert_eq!(c.lattice_size, BigUint::from(n + 2));
        }
    }

    #[test]
    fn certificate_skew_records_inner() {
        let lim = Limits::default();
        let plain = young_certificate(&p(&[2, 1]), None, 2, &lim).unwrap();
        let skew = young_certificate(&p(&[2, 1]), Some(&p(&[1])), 2, &lim).unwrap();
        assert!(plain.holds() && skew.holds());
        assert_eq!(plain.i_size, skew.i_size);
        assert_eq!(plain.lattice_size, skew.lattice_size);
        assert!(skew.family_params.iter().any(|(k, v)| k == "inner" && v == "(1)"));
        assert!(young_certificate(&p(&[2, 1]), Some(&p(&[3])), 2, &lim).is_err());
    }
}
