//! Dyck, Motzkin, and Schröder paths under the area order, with the
//! prefix/suffix ideal pair that certifies log-convexity of the counting
//! sequences.
//!
//! A path is compared to another by its height profile at integer
//! abscissae. All step breakpoints sit at integers, so pointwise comparison
//! of profiles is the same as containment of the regions below the paths.
//! Pointwise min and max of two profiles are again profiles of valid paths,
//! which makes each family an honest distributive lattice.

use num::BigUint;
use oillab_core::{
    oil_check, Certificate, CoreError, IdealHandle, IdealKind, Limits, OilOptions, Result, VectorLattice,
};
use std::fmt;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Family {
    Dyck,
    Motzkin,
    Schroeder,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Dyck => "dyck",
            Family::Motzkin => "motzkin",
            Family::Schroeder => "schroeder",
        }
    }

    pub fn parse(s: &str) -> Option<Family> {
        match s.to_ascii_lowercase().as_str() {
            "dyck" => Some(Family::Dyck),
            "motzkin" => Some(Family::Motzkin),
            "schroeder" | "schröder" => Some(Family::Schroeder),
            _ => None,
        }
    }

    /// Abscissa length of a size-n path (number of unit columns).
    pub fn span(self, n: usize) -> usize {
        match self {
            Family::Motzkin => n,
            _ => 2 * n,
        }
    }

    fn step_menu(self) -> &'static [Step] {
        match self {
            Family::Dyck => &[Step::U, Step::D],
            Family::Motzkin => &[Step::U, Step::H, Step::D],
            Family::Schroeder => &[Step::U, Step::T, Step::D],
        }
    }
}

/// Steps, in canonical lexicographic order. H is the unit flat step
/// (Motzkin), T the double flat step (Schröder).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Step {
    U,
    H,
    T,
    D,
}

impl Step {
    pub fn dx(self) -> usize {
        match self {
            Step::T => 2,
            _ => 1,
        }
    }

    pub fn dy(self) -> i32 {
        match self {
            Step::U => 1,
            Step::D => -1,
            _ => 0,
        }
    }

    fn ch(self) -> char {
        match self {
            Step::U => 'U',
            Step::H => 'H',
            Step::T => 'T',
            Step::D => 'D',
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LatticePath {
    pub family: Family,
    pub steps: Vec<Step>,
}

impl LatticePath {
    /// Validates: steps allowed in the family, height never negative,
    /// endpoint back on the axis.
    pub fn new(family: Family, steps: Vec<Step>) -> Result<Self> {
        let mut h = 0i32;
        for (k, s) in steps.iter().enumerate() {
            if !family.step_menu().contains(s) {
                return Err(CoreError::NotAPartialOrder(format!(
                    "step {} not allowed in {} paths",
                    s.ch(),
                    family.name()
                )));
            }
            h += s.dy();
            if h < 0 {
                return Err(CoreError::NotAPartialOrder(format!(
                    "path dips below the axis after step {}",
                    k + 1
                )));
            }
        }
        if h != 0 {
            return Err(CoreError::NotAPartialOrder("path does not return to the axis".into()));
        }
        Ok(LatticePath { family, steps })
    }

    /// Abscissa length.
    pub fn span(&self) -> usize {
        self.steps.iter().map(|s| s.dx()).sum()
    }

    /// Heights at integer abscissae 0..=span. The interior point of a T step
    /// carries the constant height of the step.
    pub fn profile(&self) -> Vec<i32> {
        let mut prof = Vec::with_capacity(self.span() + 1);
        prof.push(0);
        let mut h = 0;
        for s in &self.steps {
            h += s.dy();
            for _ in 0..s.dx() {
                prof.push(h);
            }
        }
        prof
    }
}

impl fmt::Display for LatticePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.steps.is_empty() {
            return write!(f, "(empty)");
        }
        for s in &self.steps {
            write!(f, "{}", s.ch())?;
        }
        Ok(())
    }
}

pub fn height_profile(path: &LatticePath) -> Vec<i32> {
    path.profile()
}

/// Rebuild the path with the given profile, or None when no valid path of
/// the family has it. Flat runs decompose uniquely: unit H steps for
/// Motzkin, double T steps for Schröder (an odd flat run is invalid there),
/// and no flats at all for Dyck.
pub fn path_from_profile(family: Family, profile: &[i32]) -> Option<LatticePath> {
    if profile.first() != Some(&0) || profile.last() != Some(&0) {
        return None;
    }
    let mut steps = Vec::new();
    let mut i = 0;
    while i + 1 < profile.len() {
        let d = profile[i + 1] - profile[i];
        let step = match d {
            1 => Step::U,
            -1 => Step::D,
            0 => match family {
                Family::Dyck => return None,
                Family::Motzkin => Step::H,
                Family::Schroeder => {
                    if profile.get(i + 2) != Some(&profile[i]) {
                        return None;
                    }
                    Step::T
                }
            },
            _ => return None,
        };
        if profile[i + 1] < 0 {
            return None;
        }
        i += step.dx();
        steps.push(step);
    }
    LatticePath::new(family, steps).ok()
}

/// Number of size-n paths, by dynamic programming over (abscissa, height).
/// Independent of the enumerator.
pub fn count_paths(family: Family, n: usize) -> BigUint {
    let m = family.span(n);
    // ways[h] = paths from (x, h) to (m, 0); sweep x from m down to 0
    let mut ways: Vec<Vec<BigUint>> = vec![Vec::new(); m + 2];
    for x in (0..=m).rev() {
        let top = m - x;
        let mut cur = vec![BigUint::from(0u32); top + 1];
        for h in 0..=top {
            if x == m {
                if h == 0 {
                    cur[h] = BigUint::from(1u32);
                }
                continue;
            }
            let mut acc = BigUint::from(0u32);
            for s in family.step_menu() {
                let nh = h as i64 + s.dy() as i64;
                let nx = x + s.dx();
                if nh < 0 || nx > m {
                    continue;
                }
                if let Some(v) = ways[nx].get(nh as usize) {
                    acc += v;
                }
            }
            cur[h] = acc;
        }
        ways[x] = cur;
    }
    ways[0][0].clone()
}

fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::from(0u32);
    }
    let mut r = BigUint::from(1u32);
    for i in 0..k.min(n - k) {
        r = r * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    r
}

/// (2n choose n) / (n + 1).
pub fn catalan(n: u64) -> BigUint {
    binomial(2 * n, n) / BigUint::from(n + 1)
}

/// All size-n paths of the family in lexicographic step order (U < H < T < D).
pub fn enumerate_paths(family: Family, n: usize, limits: &Limits) -> Result<Vec<LatticePath>> {
    let total = count_paths(family, n);
    if total > BigUint::from(limits.max_elements) {
        return Err(CoreError::SizeLimitExceeded {
            what: "enumerating paths",
            have: usize::try_from(&total).unwrap_or(usize::MAX),
            cap: limits.max_elements,
        });
    }
    let m = family.span(n);
    let mut out = Vec::new();
    let mut steps = Vec::new();
    fn rec(family: Family, m: usize, x: usize, h: i32, steps: &mut Vec<Step>, out: &mut Vec<LatticePath>) {
        if x == m {
            if h == 0 {
                out.push(LatticePath { family, steps: steps.clone() });
            }
            return;
        }
        for &s in family.step_menu() {
            let nh = h + s.dy();
            let nx = x + s.dx();
            if nh < 0 || nx > m || nh as usize > m - nx {
                continue;
            }
            steps.push(s);
            rec(family, m, nx, nh, steps, out);
            steps.pop();
        }
    }
    rec(family, m, 0, 0, &mut steps, &mut out);
    debug_assert_eq!(BigUint::from(out.len()), total);
    Ok(out)
}

/// The size-n family lattice: elements are height profiles, order is
/// pointwise, meet and join are pointwise min and max.
pub fn path_lattice(family: Family, n: usize, limits: &Limits) -> Result<VectorLattice> {
    let paths = enumerate_paths(family, n, limits)?;
    let dims = family.span(n) + 1;
    let labels: Vec<String> = paths.iter().map(|p| p.to_string()).collect();
    let elems: Vec<Vec<i32>> = paths.iter().map(|p| p.profile()).collect();
    VectorLattice::new(dims, elems, labels, limits)
}

/// Log-convexity certificate for the family's counting sequence at index n:
/// on the size n+1 lattice, I marks paths opening with the unit pattern
/// (UD, H, or T) and J those closing with it. Both are lower ideals of the
/// area order, so |I||J| <= |I n J||L|, i.e. a_n^2 <= a_(n-1) a_(n+1).
pub fn path_certificate(family: Family, n: usize, limits: &Limits) -> Result<Certificate> {
    let lat = path_lattice(family, n + 1, limits)?;
    let m = family.span(n + 1);
    // opening with UD/H/T pins the profile to 0 at this abscissa, and
    // h = 0 there forces the pattern right back
    let a = match family {
        Family::Dyck => 2,
        _ => 1,
    };
    let i = IdealHandle::new(IdealKind::Lower, lat.select(|_, v| v[a] == 0));
    let j = IdealHandle::new(IdealKind::Lower, lat.select(|_, v| v[m - a] == 0));
    let opts = OilOptions {
        // min/max closure of profiles holds for every size in these
        // families; the exhaustive small-size closure tests back this up
        assert_distributive: true,
        lattice_name: format!("{} area order, size {}", family.name(), n + 1),
        family_params: vec![
            ("family".to_string(), family.name().to_string()),
            ("n".to_string(), n.to_string()),
        ],
    };
    oil_check(&lat, &i, &j, &opts, limits)
}
