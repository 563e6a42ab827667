//! Mechanical checks of the presentation of `E` and of the dihedral action of `⟨a, b⟩`.
//!
//! Element-level checks run the group engine on every defining relation. Matrix-level
//! checks work on the induced maps on `E/⟨z⟩ ≅ GF(2)^{2(p−1)}`: the generator images
//! are `z`-free, so each automorphism acts as `diag(X, Y)` on `(ε, η)` and fixes `ν`, and
//! it respects the commutator pairing iff `TᵀJT = J` for `J = [[0, I], [I, 0]]`.

use std::collections::HashSet;

use serde::Serialize;

use crate::error::Result;
use crate::gate::Gate;
use crate::gf2::Gf2Matrix;
use crate::group::{check_odd_prime, FamilyGroup, GeneratorImages, GroupElement};

/// Largest `p` accepted by the matrix-level checks.
pub const MATRIX_MAX_P: u32 = 101;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub expected: String,
    pub actual: String,
    pub passed: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub checks: Vec<Check>,
    pub overall: bool,
}

impl VerificationReport {
    pub fn new() -> Self {
        VerificationReport {
            checks: Vec::new(),
            overall: true,
        }
    }

    /// Records a check; `passed` is `expected == actual`.
    pub fn record(
        &mut self,
        name: impl Into<String>,
        expected: impl ToString,
        actual: impl ToString,
    ) {
        let (expected, actual) = (expected.to_string(), actual.to_string());
        let passed = expected == actual;
        self.push(name.into(), expected, actual, passed);
    }

    pub fn record_flag(&mut self, name: impl Into<String>, holds: bool) {
        self.record(name, true, holds);
    }

    fn push(&mut self, name: String, expected: String, actual: String, passed: bool) {
        assert!(
            self.checks.iter().all(|c| c.name != name),
            "duplicate check name {name:?}"
        );
        self.overall &= passed;
        self.checks.push(Check {
            name,
            expected,
            actual,
            passed,
        });
    }

    pub fn extend(&mut self, other: VerificationReport) {
        for c in other.checks {
            self.push(c.name, c.expected, c.actual, c.passed);
        }
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

/// The slice of group arithmetic the presentation check needs.
pub trait FamilyArithmetic {
    fn p(&self) -> u32;
    fn identity(&self) -> GroupElement;
    fn x(&self, i: usize) -> GroupElement;
    fn y(&self, i: usize) -> GroupElement;
    fn z(&self) -> GroupElement;
    fn multiply(&self, u: &GroupElement, v: &GroupElement) -> GroupElement;
    fn inverse(&self, u: &GroupElement) -> GroupElement;
    fn describe(&self, u: &GroupElement) -> String;

    fn commutator(&self, u: &GroupElement, h: &GroupElement) -> GroupElement {
        let uh = self.multiply(u, h);
        let hu = self.multiply(h, u);
        self.multiply(&self.inverse(&hu), &uh)
    }
}

impl FamilyArithmetic for FamilyGroup {
    fn p(&self) -> u32 {
        FamilyGroup::p(self)
    }
    fn identity(&self) -> GroupElement {
        FamilyGroup::identity(self)
    }
    fn x(&self, i: usize) -> GroupElement {
        FamilyGroup::x(self, i)
    }
    fn y(&self, i: usize) -> GroupElement {
        FamilyGroup::y(self, i)
    }
    fn z(&self) -> GroupElement {
        FamilyGroup::z(self)
    }
    fn multiply(&self, u: &GroupElement, v: &GroupElement) -> GroupElement {
        FamilyGroup::multiply(self, u, v)
    }
    fn inverse(&self, u: &GroupElement) -> GroupElement {
        FamilyGroup::inverse(self, u)
    }
    fn describe(&self, u: &GroupElement) -> String {
        self.display(u).to_string()
    }
    fn commutator(&self, u: &GroupElement, h: &GroupElement) -> GroupElement {
        FamilyGroup::commutator(self, u, h)
    }
}

/// Evaluates every defining relation of `E`. When `p` is within `gate`, also closes
/// `⟨x_i, y_i, z⟩` under multiplication and checks `|E| = 2^{2p−1}`.
pub fn verify_presentation<G: FamilyArithmetic>(g: &G, gate: &Gate) -> VerificationReport {
    let q = (g.p() - 1) as usize;
    let one = g.identity();
    let z = g.z();
    let mut report = VerificationReport::new();
    let mut rel = |name: String, lhs: GroupElement, rhs: &GroupElement| {
        report.record(name, g.describe(rhs), g.describe(&lhs));
    };

    rel("z^2 = 1".into(), g.multiply(&z, &z), &one);
    for i in 1..=q {
        let (xi, yi) = (g.x(i), g.y(i));
        rel(format!("x{i}^2 = 1"), g.multiply(&xi, &xi), &one);
        rel(format!("y{i}^2 = 1"), g.multiply(&yi, &yi), &one);
        rel(format!("[x{i},z] = 1"), g.commutator(&xi, &z), &one);
        rel(format!("[y{i},z] = 1"), g.commutator(&yi, &z), &one);
        rel(format!("[x{i},y{i}] = z"), g.commutator(&xi, &yi), &z);
        for j in 1..=q {
            if i < j {
                rel(format!("[x{i},x{j}] = 1"), g.commutator(&xi, &g.x(j)), &one);
                rel(format!("[y{i},y{j}] = 1"), g.commutator(&yi, &g.y(j)), &one);
            }
            if i != j {
                rel(format!("[x{i},y{j}] = 1"), g.commutator(&xi, &g.y(j)), &one);
            }
        }
    }

    if gate.check(g.p()).is_ok() {
        let gens: Vec<GroupElement> = (1..=q).flat_map(|i| [g.x(i), g.y(i)]).chain([z]).collect();
        let mut seen = HashSet::from([one]);
        let mut frontier = vec![one];
        while let Some(u) = frontier.pop() {
            for h in &gens {
                let v = g.multiply(&u, h);
                if seen.insert(v) {
                    frontier.push(v);
                }
            }
        }
        report.record("|E| = 2^(2p-1)", 1u64 << (2 * q + 1), seen.len());
    }
    report
}

/// The four `(p−1)×(p−1)` GF(2) matrices of the maps `A` and `B` on the `x`- and
/// `y`-coordinates, plus their `2×2` action on `(α, β) ∈ Z_p²`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ActionMatrices {
    pub p: u32,
    pub xa: Gf2Matrix,
    pub ya: Gf2Matrix,
    pub xb: Gf2Matrix,
    pub yb: Gf2Matrix,
    pub na: ModMatrix2,
    pub nb: ModMatrix2,
}

impl ActionMatrices {
    /// Builds the matrices for any odd prime `p <= 101`.
    pub fn for_prime(p: u32) -> Result<Self> {
        check_odd_prime(p, MATRIX_MAX_P)?;
        let img = GeneratorImages::new(p);
        let q = (p - 1) as usize;
        Ok(ActionMatrices {
            p,
            xa: Gf2Matrix::from_columns(q, &img.xa),
            ya: Gf2Matrix::from_columns(q, &img.ya),
            xb: Gf2Matrix::from_columns(q, &img.xb),
            yb: Gf2Matrix::from_columns(q, &img.yb),
            // n1 -> n1, n2 -> n1 n2
            na: ModMatrix2::new([[1, 1], [0, 1]], p),
            // n1 -> n1, n2 -> n2^{-1}
            nb: ModMatrix2::new([[1, 0], [0, p as u64 - 1]], p),
        })
    }

    /// Block map `diag(Xa, Ya)` of `a` on `(ε, η)`.
    pub fn block_a(&self) -> Gf2Matrix {
        self.xa.block_diag(&self.ya)
    }

    pub fn block_b(&self) -> Gf2Matrix {
        self.xb.block_diag(&self.yb)
    }
}

/// The matrices stored in `g`, with the `⟨n₁, n₂⟩` action attached.
pub fn action_matrices(g: &FamilyGroup) -> ActionMatrices {
    let (xa, ya, xb, yb) = g.matrices();
    let base = ActionMatrices::for_prime(g.p()).expect("group parameters are valid");
    ActionMatrices {
        xa: xa.clone(),
        ya: ya.clone(),
        xb: xb.clone(),
        yb: yb.clone(),
        ..base
    }
}

/// `2×2` matrix over `Z_p`, acting on column vectors `(α, β)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ModMatrix2 {
    pub m: [[u64; 2]; 2],
    pub p: u64,
}

impl ModMatrix2 {
    pub fn new(m: [[u64; 2]; 2], p: u32) -> Self {
        let p = p as u64;
        ModMatrix2 {
            m: m.map(|r| r.map(|v| v % p)),
            p,
        }
    }

    pub fn identity(p: u32) -> Self {
        Self::new([[1, 0], [0, 1]], p)
    }

    pub fn mul(&self, o: &Self) -> Self {
        let p = self.p;
        let e = |r: usize, c: usize| (self.m[r][0] * o.m[0][c] + self.m[r][1] * o.m[1][c]) % p;
        ModMatrix2 {
            m: [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]],
            p,
        }
    }

    pub fn pow(&self, mut exp: u64) -> Self {
        let mut base = *self;
        let mut acc = Self::identity(self.p as u32);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            exp >>= 1;
        }
        acc
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.p as u32)
    }
}

/// The pairing `⟨(ε,η),(ε′,η′)⟩ = ⟨ε,η′⟩ + ⟨η,ε′⟩` as a `2(p−1)`-square matrix.
pub fn symplectic_gram(p: u32) -> Gf2Matrix {
    let q = (p - 1) as usize;
    Gf2Matrix::from_fn(2 * q, 2 * q, |r, c| r + q == c || c + q == r)
}

fn preserves_form(t: &Gf2Matrix, j: &Gf2Matrix) -> bool {
    t.transpose().mul(j).mul(t) == *j
}

/// Checks that `a`, `b` act as automorphisms of `E` generating a dihedral group of
/// order `2p`, at the level of matrices. Valid for odd primes `p <= 101`.
pub fn verify_dihedral_action(p: u32) -> Result<VerificationReport> {
    Ok(verify_dihedral_action_with(&ActionMatrices::for_prime(p)?))
}

/// [`verify_dihedral_action`] on caller-supplied matrices.
pub fn verify_dihedral_action_with(m: &ActionMatrices) -> VerificationReport {
    let p = m.p as u64;
    let mut r = VerificationReport::new();
    for (name, x) in [("Xa", &m.xa), ("Ya", &m.ya), ("Xb", &m.xb), ("Yb", &m.yb)] {
        r.record_flag(format!("{name} invertible"), x.is_invertible());
    }
    // composites follow the right action: e^{ab} has matrix B·A
    let xab = m.xb.mul(&m.xa);
    let yab = m.yb.mul(&m.ya);
    let nab = m.nb.mul(&m.na);
    r.record_flag("Xa^p = I", m.xa.pow(p).is_identity());
    r.record_flag("Ya^p = I", m.ya.pow(p).is_identity());
    r.record_flag("Na^p = I", m.na.pow(p).is_identity());
    r.record_flag("Xb^2 = I", m.xb.pow(2).is_identity());
    r.record_flag("Yb^2 = I", m.yb.pow(2).is_identity());
    r.record_flag("Nb^2 = I", m.nb.pow(2).is_identity());
    r.record_flag("(XbXa)^2 = I", xab.pow(2).is_identity());
    r.record_flag("(YbYa)^2 = I", yab.pow(2).is_identity());
    r.record_flag("(NbNa)^2 = I", nab.pow(2).is_identity());

    let j = symplectic_gram(m.p);
    let ta = m.block_a();
    let tb = m.block_b();
    r.record_flag("Ta^T J Ta = J", preserves_form(&ta, &j));
    r.record_flag("Tb^T J Tb = J", preserves_form(&tb, &j));

    // a of order exactly p (p prime) and b outside <a>: |<a,b>| = 2p
    let mut seen = HashSet::new();
    let mut ta_i = Gf2Matrix::identity(ta.rows());
    let mut na_i = ModMatrix2::identity(m.p);
    for _ in 0..p {
        seen.insert((ta_i.clone(), na_i));
        seen.insert((tb.mul(&ta_i), m.nb.mul(&na_i)));
        ta_i = ta.mul(&ta_i);
        na_i = m.na.mul(&na_i);
    }
    r.record("|<a,b>| = 2p", 2 * p, seen.len());
    r
}

/// Dimension of the fixed space of `a` on `GF(2)^{2(p−1)}`; zero iff `C_E(a) = Z(E)`.
pub fn fixed_space_of_a(p: u32) -> Result<usize> {
    let m = ActionMatrices::for_prime(p)?;
    Ok(fixed_dim(&m.block_a()))
}

/// Dimension of the fixed space of `b` on `GF(2)^{2(p−1)}`.
pub fn fixed_space_of_b(p: u32) -> Result<usize> {
    let m = ActionMatrices::for_prime(p)?;
    Ok(fixed_dim(&m.block_b()))
}

fn fixed_dim(t: &Gf2Matrix) -> usize {
    t.add(&Gf2Matrix::identity(t.rows())).kernel_dim()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::make_group;

    #[test]
    fn p3_matrices() {
        let m = ActionMatrices::for_prime(3).unwrap();
        assert_eq!(m.xa, Gf2Matrix::from_rows(&[&[0, 1], &[1, 1]]));
        let swap = Gf2Matrix::from_rows(&[&[0, 1], &[1, 0]]);
        assert_eq!(m.xb, swap);
        assert_eq!(m.yb, swap);
        assert_eq!(action_matrices(&make_group(3).unwrap()), m);
    }

    #[test]
    fn dihedral_action_small_primes() {
        for p in [3, 5, 7, 11, 13] {
            let r = verify_dihedral_action(p).unwrap();
            assert!(r.overall, "p={p}: {:?}", r.failures().collect::<Vec<_>>());
        }
        assert!(verify_dihedral_action(9).is_err());
        assert!(verify_dihedral_action(103).is_err());
    }

    #[test]
    fn non_symplectic_b_is_caught() {
        let mut m = ActionMatrices::for_prime(5).unwrap();
        m.xb = Gf2Matrix::identity(4);
        let r = verify_dihedral_action_with(&m);
        assert!(!r.overall);
        let bad: Vec<&str> = r.failures().map(|c| c.name.as_str()).collect();
        assert!(bad.contains(&"Tb^T J Tb = J"));
    }

    #[test]
    fn fixed_spaces() {
        assert_eq!(fixed_space_of_a(3).unwrap(), 0);
        assert_eq!(fixed_space_of_a(5).unwrap(), 0);
        assert_eq!(fixed_space_of_b(3).unwrap(), 2);
    }

    #[test]
    fn presentation_p3() {
        let r = verify_presentation(&make_group(3).unwrap(), &Gate::default());
        assert!(r.overall);
        let e = r.checks.iter().find(|c| c.name.starts_with("|E|")).unwrap();
        assert_eq!(e.actual, "32");
    }

    #[test]
    #[should_panic(expected = "duplicate")]
    fn duplicate_names_rejected() {
        let mut r = VerificationReport::new();
        r.record_flag("x", true);
        r.record_flag("x", true);
    }
}
