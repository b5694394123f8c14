//! The middle order: permutations compared componentwise through their
//! inversion tables. The full order is a product of chains; descent classes
//! sit inside the kappa version as sublattices.

use crate::perm::{collect_perms, encode_tables, decode_table, sum_over_perms, TableKind};
use crate::perm::{des_matches, pin_matches, pk_matches};
use oillab_core::{
    check_distributive, compute_lattice, oil_check, poset_from_relation, Certificate, CoreError,
    IdealHandle, IdealKind, Limits, OilOptions, Result, VectorLattice,
};

/// Brute-force sweeps over S_n stop here; 10! words is seconds, 11! is not.
pub const BRUTE_CAP: usize = 10;

fn factorial(n: usize) -> Option<usize> {
    (1..=n).try_fold(1usize, |acc, k| acc.checked_mul(k))
}

pub(crate) fn set_string(set: &[usize]) -> String {
    let body: Vec<String> = set.iter().map(|v| v.to_string()).collect();
    format!("{{{}}}", body.join(","))
}

/// Positions must be positive and strictly increasing.
fn validate_position_set(set: &[usize]) -> Result<()> {
    let mut prev = 0;
    for (idx, &v) in set.iter().enumerate() {
        if v <= prev {
            return Err(CoreError::OutOfBounds(v.to_string(), idx + 1));
        }
        prev = v;
    }
    Ok(())
}

fn radix(n: usize, kind: TableKind, coord: usize) -> usize {
    match kind {
        TableKind::Iota => coord + 1,
        TableKind::Kappa => n - coord,
    }
}

/// All n! inversion tables of the given kind as a vector lattice, elements in
/// lexicographic table order, labelled by the permutations they decode to.
pub fn middle_lattice(n: usize, kind: TableKind, limits: &Limits) -> Result<VectorLattice> {
    if n == 0 {
        return Err(CoreError::TooSmall { what: "middle order", have: 0, min: 1 });
    }
    let count = match factorial(n) {
        Some(c) if c <= limits.max_elements => c,
        _ => {
            return Err(CoreError::SizeLimitExceeded {
                what: "materializing the middle order",
                have: n,
                cap: limits.max_elements,
            })
        }
    };
    let mut elems: Vec<Vec<i32>> = Vec::with_capacity(count);
    let mut labels: Vec<String> = Vec::with_capacity(count);
    let mut table = vec![0usize; n];
    loop {
        elems.push(table.iter().map(|&v| v as i32).collect());
        labels.push(decode_table(&table, kind)?.to_string());
        // odometer step in lexicographic order
        let mut i = n;
        loop {
            if i == 0 {
                return VectorLattice::new(n, elems, labels, limits);
            }
            i -= 1;
            table[i] += 1;
            if table[i] < radix(n, kind, i) {
                break;
            }
            table[i] = 0;
        }
    }
}

fn guard(what: &str, have: usize, want: usize) -> Result<()> {
    if have != want {
        return Err(CoreError::CountMismatch {
            what: what.to_string(),
            have: have.to_string(),
            want: want.to_string(),
        });
    }
    Ok(())
}

/// n! . n! <= (n-1)! . (n+1)! as an order ideal inequality: inside the middle
/// order on S_{n+1}, take I = {last entry 0} and J = {entry i below i-1 for
/// i >= 2}, both lower, meeting in a copy of S_{n-1}.
pub fn factorial_certificate(n: usize, limits: &Limits) -> Result<Certificate> {
    if n < 2 {
        return Err(CoreError::TooSmall { what: "factorial certificate", have: n, min: 2 });
    }
    let lat = middle_lattice(n + 1, TableKind::Iota, limits)?;
    let fam_i = IdealHandle::new(IdealKind::Lower, lat.select(|_, v| v[n] == 0));
    let fam_j = IdealHandle::new(
        IdealKind::Lower,
        lat.select(|_, v| (1..=n).all(|i| v[i] < i as i32)),
    );
    let nf = factorial(n).unwrap();
    guard("factorial family |I|", fam_i.size(), nf)?;
    guard("factorial family |J|", fam_j.size(), nf)?;
    let both = fam_i.members.intersection(&fam_j.members).len();
    guard("factorial family |I and J|", both, factorial(n - 1).unwrap())?;
    let opts = OilOptions {
        assert_distributive: false,
        lattice_name: format!("middle order on S_{}", n + 1),
        family_params: vec![("n".to_string(), n.to_string())],
    };
    oil_check(&lat, &fam_i, &fam_j, &opts, limits)
}

fn descent_count(n: usize, set: &[usize]) -> u64 {
    sum_over_perms(n, |w| des_matches(w, set) as u64)
}

/// d_n(S)^2 >= d_{n-1}(S) d_{n+1}(S) as an order ideal inequality on the
/// descent class D_{n+1}(S) in kappa order. I drops the table bound at every
/// position by one (a copy of D_n(S), lower); J pushes every entry before
/// max S up by one and the entry at max S up by two (another copy, upper).
pub fn descent_class_certificate(set: &[usize], n: usize, limits: &Limits) -> Result<Certificate> {
    validate_position_set(set)?;
    let m = set.last().copied().unwrap_or(0);
    if n < m + 2 {
        return Err(CoreError::TooSmall { what: "descent class certificate", have: n, min: m + 2 });
    }
    if n + 1 > BRUTE_CAP {
        return Err(CoreError::SizeLimitExceeded {
            what: "sweeping permutations for a descent class",
            have: n + 1,
            cap: BRUTE_CAP,
        });
    }
    let members = collect_perms(n + 1, |w| des_matches(w, set));
    let mut elems = Vec::with_capacity(members.len());
    let mut labels = Vec::with_capacity(members.len());
    for p in &members {
        let (_, kappa) = encode_tables(p);
        // the descent set of the kappa table equals the descent set of the
        // permutation, so the class is a table condition
        debug_assert!(des_matches(&kappa.0, set));
        elems.push(kappa.0.iter().map(|&v| v as i32).collect::<Vec<i32>>());
        labels.push(p.to_string());
    }
    let lat = VectorLattice::new(n + 1, elems, labels, limits)?;
    let fam_i = IdealHandle::new(
        IdealKind::Lower,
        lat.select(|_, v| (0..n).all(|i| v[i] <= (n - 1 - i) as i32)),
    );
    let fam_j = IdealHandle::new(
        IdealKind::Upper,
        lat.select(|_, v| m == 0 || ((1..m).all(|i| v[i - 1] >= 1) && v[m - 1] >= 2)),
    );
    let want = descent_count(n, set) as usize;
    guard("descent family |I|", fam_i.size(), want)?;
    guard("descent family |J|", fam_j.size(), want)?;
    let both = fam_i.members.intersection(&fam_j.members).len();
    guard("descent family |I and J|", both, descent_count(n - 1, set) as usize)?;
    let opts = OilOptions {
        assert_distributive: false,
        lattice_name: format!("descent class D_{}({})", n + 1, set_string(set)),
        family_params: vec![
            ("S".to_string(), set_string(set)),
            ("n".to_string(), n.to_string()),
        ],
    };
    oil_check(&lat, &fam_i, &fam_j, &opts, limits)
}

/// Number of permutations of [n] whose peak positions are exactly S,
/// together with the quotient by 2^(n - |S| - 1). S must be admissible
/// (no position below 2, no two consecutive); the count is then divisible
/// and the quotient is the peak polynomial value at n.
pub fn peak_polynomial_value(set: &[usize], n: usize) -> Result<(u64, u64)> {
    validate_position_set(set)?;
    if set.first().is_some_and(|&v| v < 2) {
        return Err(CoreError::NotAdmissible {
            set: set_string(set),
            why: "contains a position below 2",
        });
    }
    if set.windows(2).any(|w| w[1] == w[0] + 1) {
        return Err(CoreError::NotAdmissible {
            set: set_string(set),
            why: "contains consecutive positions",
        });
    }
    let m = set.last().copied().unwrap_or(0);
    if n < m + 1 {
        return Err(CoreError::TooSmall { what: "peak class count", have: n, min: m + 1 });
    }
    if n > BRUTE_CAP {
        return Err(CoreError::SizeLimitExceeded {
            what: "sweeping permutations for a peak class",
            have: n,
            cap: BRUTE_CAP,
        });
    }
    let count = sum_over_perms(n, |w| pk_matches(w, set) as u64);
    let divisor = 1u64 << (n - set.len() - 1);
    if count % divisor != 0 {
        return Err(CoreError::DivisibilityFailed {
            what: "peak class size",
            count: count.to_string(),
            divisor: divisor.to_string(),
        });
    }
    Ok((count, count / divisor))
}

/// What a pinnacle class looks like under the (iota) middle order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PinnacleReport {
    pub count: u64,
    pub is_lattice: bool,
    pub is_distributive: bool,
}

impl PinnacleReport {
    pub fn ok(&self) -> bool {
        self.is_lattice && self.is_distributive
    }
}

/// Collect the permutations of [n] whose pinnacle values read left to right
/// are exactly `sigma`, order them by iota tables, and probe whether the
/// induced poset is a distributive lattice. An unrealizable sigma reports
/// count 0 with both flags down.
pub fn pinnacle_probe(sigma: &[usize], n: usize, limits: &Limits) -> Result<PinnacleReport> {
    for (idx, &v) in sigma.iter().enumerate() {
        if v == 0 {
            return Err(CoreError::OutOfBounds(v.to_string(), idx + 1));
        }
        if sigma[..idx].contains(&v) {
            return Err(CoreError::DuplicateElement(v.to_string()));
        }
    }
    if n > BRUTE_CAP {
        return Err(CoreError::SizeLimitExceeded {
            what: "sweeping permutations for a pinnacle class",
            have: n,
            cap: BRUTE_CAP,
        });
    }
    let members = collect_perms(n, |w| pin_matches(w, sigma));
    if members.is_empty() {
        return Ok(PinnacleReport { count: 0, is_lattice: false, is_distributive: false });
    }
    let tables: Vec<Vec<usize>> = members.iter().map(|p| encode_tables(p).0 .0).collect();
    let labels: Vec<String> = members.iter().map(|p| p.to_string()).collect();
    let count = members.len() as u64;
    let poset = poset_from_relation(labels, |a, b| {
        tables[a].iter().zip(&tables[b]).all(|(x, y)| x <= y)
    })?;
    let lat = match compute_lattice(poset, limits) {
        Ok(lat) => lat,
        Err(CoreError::NotALattice { .. }) => {
            return Ok(PinnacleReport { count, is_lattice: false, is_distributive: false })
        }
        Err(e) => return Err(e),
    };
    let dist = check_distributive(&lat, limits).holds();
    Ok(PinnacleReport { count, is_lattice: true, is_distributive: dist })
}
