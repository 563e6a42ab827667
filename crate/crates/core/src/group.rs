//! Normal-form arithmetic in G(p) = (⟨n₁⟩ × ⟨n₂⟩ × E) ⋊ ⟨a, b⟩.
//!
//! Every element is stored as the word `n₁^α n₂^β x^ε y^η z^ν a^i b^j`, where `E` is the
//! extra-special 2-group of plus type on `x₁..x_{p−1}, y₁..y_{p−1}, z` and `⟨a, b⟩` is
//! dihedral of order `2p`. Conjugation is `u^h = h⁻¹uh`, and `a⁻¹na` is the image of `n`
//! under the automorphism `a`.
//!
//! Bit `k` of `ε` (resp. `η`) is the exponent of `x_{k+1}` (resp. `y_{k+1}`).

use std::fmt;

use serde::Serialize;

use crate::arith::is_prime;
use crate::error::{Error, Result};
use crate::gate::{Gate, INDEXABLE_MAX_P};
use crate::gf2::Gf2Matrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct GroupParams {
    p: u32,
}

impl GroupParams {
    /// Accepts odd primes `3 <= p <= 13`, the range where the perfect index fits in a `u64`.
    pub fn new(p: u32) -> Result<Self> {
        check_odd_prime(p, INDEXABLE_MAX_P)?;
        Ok(GroupParams { p })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    /// `|G| = 2^{2p} p³`.
    pub fn order(&self) -> u64 {
        (1u64 << (2 * self.p)) * (self.p as u64).pow(3)
    }

    /// `|E| = 2^{2p−1}`.
    pub fn e_order(&self) -> u64 {
        1u64 << (2 * self.p - 1)
    }

    /// `|N| = p² 2^{2p−1}`.
    pub fn n_order(&self) -> u64 {
        (self.p as u64).pow(2) * self.e_order()
    }

    /// `|M| = 2p`.
    pub fn m_order(&self) -> u64 {
        2 * self.p as u64
    }
}

pub(crate) fn check_odd_prime(p: u32, max: u32) -> Result<()> {
    let reason = if p < 3 {
        "p must be an odd prime >= 3"
    } else if !is_prime(p as u64) {
        "p is not prime"
    } else if p > max {
        "p is above the supported range"
    } else {
        return Ok(());
    };
    Err(Error::InvalidParameter { p, reason })
}

/// Canonical normal form `n₁^alpha n₂^beta x^eps y^eta z^nu a^ai b^bj`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct GroupElement {
    pub alpha: u32,
    pub beta: u32,
    pub eps: u32,
    pub eta: u32,
    pub nu: bool,
    pub ai: u32,
    pub bj: bool,
}

impl GroupElement {
    /// True when the `M`-part is trivial.
    pub fn in_n(&self) -> bool {
        self.ai == 0 && !self.bj
    }

    /// True when only the `E`-coordinates may be nonzero.
    pub fn in_e(&self) -> bool {
        self.in_n() && self.alpha == 0 && self.beta == 0
    }
}

/// Column images of the generator maps `A` and `B` on the `x`- and `y`-coordinates.
///
/// Column `k` is the coordinate vector of the image of `x_{k+1}` (resp. `y_{k+1}`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorImages {
    pub xa: Vec<u128>,
    pub ya: Vec<u128>,
    pub xb: Vec<u128>,
    pub yb: Vec<u128>,
}

impl GeneratorImages {
    pub fn new(p: u32) -> Self {
        let q = (p - 1) as usize;
        let bit = |k: usize| 1u128 << k;
        let all = (1u128 << q) - 1;
        // x_i -> x_{i+1}, x_{p-1} -> x_1 ... x_{p-1}
        let xa = (0..q)
            .map(|k| if k + 1 < q { bit(k + 1) } else { all })
            .collect();
        // y_i -> y_1 y_{i+1}, y_{p-1} -> y_1
        let ya = (0..q)
            .map(|k| {
                if k + 1 < q {
                    bit(0) | bit(k + 1)
                } else {
                    bit(0)
                }
            })
            .collect();
        // x_i -> x_{p-i}, y_i -> y_{p-i}
        let rev: Vec<u128> = (0..q).map(|k| bit(q - 1 - k)).collect();
        GeneratorImages {
            xa,
            ya,
            xb: rev.clone(),
            yb: rev,
        }
    }
}

/// Right action of one element of `M` on `N`: `(α, β) ↦ (α + shear·β, sign·β)`, and
/// lookup tables for the linear maps on `ε` and `η`.
#[derive(Clone, Debug)]
struct NAction {
    shear: u32,
    sign: u32,
    x: Vec<u32>,
    y: Vec<u32>,
}

impl NAction {
    fn identity(p: u32) -> Self {
        let size = 1usize << (p - 1);
        NAction {
            shear: 0,
            sign: 1,
            x: (0..size as u32).collect(),
            y: (0..size as u32).collect(),
        }
    }

    fn from_columns(shear: u32, sign: u32, xcols: &[u128], ycols: &[u128]) -> Self {
        let size = 1usize << xcols.len();
        let apply = |cols: &[u128], v: usize| {
            cols.iter()
                .enumerate()
                .filter(|(k, _)| v >> k & 1 == 1)
                .fold(0u32, |acc, (_, &c)| acc ^ c as u32)
        };
        NAction {
            shear,
            sign,
            x: (0..size).map(|v| apply(xcols, v)).collect(),
            y: (0..size).map(|v| apply(ycols, v)).collect(),
        }
    }

    /// `self` followed by `then`.
    fn then(&self, then: &NAction, p: u32) -> NAction {
        NAction {
            shear: (self.shear + then.shear * self.sign) % p,
            sign: (self.sign * then.sign) % p,
            x: self.x.iter().map(|&v| then.x[v as usize]).collect(),
            y: self.y.iter().map(|&v| then.y[v as usize]).collect(),
        }
    }
}

/// The group G(p), immutable after construction.
#[derive(Clone, Debug)]
pub struct FamilyGroup {
    params: GroupParams,
    gens: Vec<GroupElement>,
    xa: Gf2Matrix,
    ya: Gf2Matrix,
    xb: Gf2Matrix,
    yb: Gf2Matrix,
    // inv_action[i + p*j] is the action of (a^i b^j)^{-1}
    inv_action: Vec<NAction>,
}

impl FamilyGroup {
    pub fn new(params: GroupParams) -> Self {
        let p = params.p;
        let q = (p - 1) as usize;
        let images = GeneratorImages::new(p);
        let act_a = NAction::from_columns(1, 1, &images.xa, &images.ya);
        let act_b = NAction::from_columns(0, p - 1, &images.xb, &images.yb);

        // action[i + p*j] = action of a^i b^j = a applied i times, then b j times
        let mut powers = vec![NAction::identity(p)];
        for i in 1..p as usize {
            let next = powers[i - 1].then(&act_a, p);
            powers.push(next);
        }
        let reflected: Vec<NAction> = powers.iter().map(|t| t.then(&act_b, p)).collect();
        let action: Vec<NAction> = powers.into_iter().chain(reflected).collect();
        let inv_action = (0..2 * p)
            .map(|m| {
                let (i, j) = (m % p, m / p);
                let inv = if j == 0 { (p - i) % p } else { i + p };
                action[inv as usize].clone()
            })
            .collect();

        let mut g = FamilyGroup {
            params,
            gens: Vec::new(),
            xa: Gf2Matrix::from_columns(q, &images.xa),
            ya: Gf2Matrix::from_columns(q, &images.ya),
            xb: Gf2Matrix::from_columns(q, &images.xb),
            yb: Gf2Matrix::from_columns(q, &images.yb),
            inv_action,
        };
        let mut gens = vec![g.n1(), g.n2()];
        gens.extend((1..=q).map(|i| g.x(i)));
        gens.extend((1..=q).map(|i| g.y(i)));
        gens.extend([g.z(), g.a(), g.b()]);
        g.gens = gens;
        g
    }

    pub fn params(&self) -> GroupParams {
        self.params
    }

    pub fn p(&self) -> u32 {
        self.params.p
    }

    pub fn order(&self) -> u64 {
        self.params.order()
    }

    /// `n₁, n₂, x₁..x_{p−1}, y₁..y_{p−1}, z, a, b`.
    pub fn generators(&self) -> &[GroupElement] {
        &self.gens
    }

    /// Action matrices `(Xa, Ya, Xb, Yb)` on the `x`- and `y`-coordinates.
    pub fn matrices(&self) -> (&Gf2Matrix, &Gf2Matrix, &Gf2Matrix, &Gf2Matrix) {
        (&self.xa, &self.ya, &self.xb, &self.yb)
    }

    fn rank(&self) -> usize {
        (self.params.p - 1) as usize
    }

    fn mask(&self) -> u32 {
        (1u32 << self.rank()) - 1
    }

    pub fn identity(&self) -> GroupElement {
        GroupElement::default()
    }

    pub fn n1(&self) -> GroupElement {
        GroupElement {
            alpha: 1,
            ..Default::default()
        }
    }

    pub fn n2(&self) -> GroupElement {
        GroupElement {
            beta: 1,
            ..Default::default()
        }
    }

    /// `x_i`, `1 <= i <= p−1`.
    pub fn x(&self, i: usize) -> GroupElement {
        assert!((1..=self.rank()).contains(&i), "x_{i} out of range");
        GroupElement {
            eps: 1 << (i - 1),
            ..Default::default()
        }
    }

    /// `y_i`, `1 <= i <= p−1`.
    pub fn y(&self, i: usize) -> GroupElement {
        assert!((1..=self.rank()).contains(&i), "y_{i} out of range");
        GroupElement {
            eta: 1 << (i - 1),
            ..Default::default()
        }
    }

    pub fn z(&self) -> GroupElement {
        GroupElement {
            nu: true,
            ..Default::default()
        }
    }

    pub fn a(&self) -> GroupElement {
        GroupElement {
            ai: 1,
            ..Default::default()
        }
    }

    pub fn b(&self) -> GroupElement {
        GroupElement {
            bj: true,
            ..Default::default()
        }
    }

    /// Pure `E`-part element `x^eps y^eta z^nu`.
    pub fn e_element(&self, eps: u32, eta: u32, nu: bool) -> GroupElement {
        assert!(eps <= self.mask() && eta <= self.mask());
        GroupElement {
            eps,
            eta,
            nu,
            ..Default::default()
        }
    }

    pub fn is_canonical(&self, u: &GroupElement) -> bool {
        let p = self.params.p;
        u.alpha < p && u.beta < p && u.ai < p && u.eps <= self.mask() && u.eta <= self.mask()
    }

    pub fn multiply(&self, u: &GroupElement, v: &GroupElement) -> GroupElement {
        let p = self.params.p;
        // move v's N-part left across u's M-part: m n' = (n')^{m^{-1}} m
        let act = &self.inv_action[(u.ai + if u.bj { p } else { 0 }) as usize];
        let beta_v = v.beta * act.sign % p;
        let alpha_v = (v.alpha + act.shear * v.beta) % p;
        let eps_v = act.x[v.eps as usize];
        let eta_v = act.y[v.eta as usize];
        // y^η x^ε' = x^ε' y^η z^{<η,ε'>}
        let twist = (u.eta & eps_v).count_ones() & 1 == 1;
        // b a^k = a^{-k} b
        let ai = if u.bj {
            (u.ai + p - v.ai) % p
        } else {
            (u.ai + v.ai) % p
        };
        GroupElement {
            alpha: (u.alpha + alpha_v) % p,
            beta: (u.beta + beta_v) % p,
            eps: u.eps ^ eps_v,
            eta: u.eta ^ eta_v,
            nu: u.nu ^ v.nu ^ twist,
            ai,
            bj: u.bj ^ v.bj,
        }
    }

    pub fn inverse(&self, u: &GroupElement) -> GroupElement {
        let p = self.params.p;
        // (n m)^{-1} = m^{-1} n^{-1}
        let m_inv = GroupElement {
            ai: if u.bj { u.ai } else { (p - u.ai) % p },
            bj: u.bj,
            ..Default::default()
        };
        let n_inv = GroupElement {
            alpha: (p - u.alpha) % p,
            beta: (p - u.beta) % p,
            eps: u.eps,
            eta: u.eta,
            nu: u.nu ^ ((u.eps & u.eta).count_ones() & 1 == 1),
            ai: 0,
            bj: false,
        };
        self.multiply(&m_inv, &n_inv)
    }

    /// `h⁻¹ u h`.
    pub fn conjugate(&self, u: &GroupElement, h: &GroupElement) -> GroupElement {
        self.conjugate_with_inverse(u, h, &self.inverse(h))
    }

    pub(crate) fn conjugate_with_inverse(
        &self,
        u: &GroupElement,
        h: &GroupElement,
        h_inv: &GroupElement,
    ) -> GroupElement {
        self.multiply(&self.multiply(h_inv, u), h)
    }

    /// `u⁻¹ h⁻¹ u h`.
    pub fn commutator(&self, u: &GroupElement, h: &GroupElement) -> GroupElement {
        let uh = self.multiply(u, h);
        let hu = self.multiply(h, u);
        self.multiply(&self.inverse(&hu), &uh)
    }

    pub fn commutes(&self, u: &GroupElement, h: &GroupElement) -> bool {
        self.multiply(u, h) == self.multiply(h, u)
    }

    pub fn pow(&self, u: &GroupElement, mut exp: u64) -> GroupElement {
        let mut base = *u;
        let mut acc = self.identity();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.multiply(&acc, &base);
            }
            base = self.multiply(&base, &base);
            exp >>= 1;
        }
        acc
    }

    pub fn product<'a>(&self, word: impl IntoIterator<Item = &'a GroupElement>) -> GroupElement {
        word.into_iter()
            .fold(self.identity(), |acc, g| self.multiply(&acc, g))
    }

    /// Mixed-radix perfect index
    /// `((((((α p + β) p + i) 2 + j) 2^{p−1} + ε) 2^{p−1} + η) 2 + ν`.
    pub fn element_index(&self, u: &GroupElement) -> u64 {
        debug_assert!(self.is_canonical(u));
        let p = self.params.p as u64;
        let q = self.rank();
        let mut k = (u.alpha as u64 * p + u.beta as u64) * p + u.ai as u64;
        k = k * 2 + u.bj as u64;
        k = (k << q) | u.eps as u64;
        k = (k << q) | u.eta as u64;
        (k << 1) | u.nu as u64
    }

    pub fn element_from_index(&self, index: u64) -> Result<GroupElement> {
        let order = self.order();
        if index >= order {
            return Err(Error::IndexOutOfRange { index, order });
        }
        Ok(self.element_from_index_unchecked(index))
    }

    pub(crate) fn element_from_index_unchecked(&self, mut k: u64) -> GroupElement {
        let p = self.params.p as u64;
        let q = self.rank();
        let mask = self.mask() as u64;
        let nu = k & 1 == 1;
        k >>= 1;
        let eta = (k & mask) as u32;
        k >>= q;
        let eps = (k & mask) as u32;
        k >>= q;
        let bj = k & 1 == 1;
        k >>= 1;
        let ai = (k % p) as u32;
        k /= p;
        let beta = (k % p) as u32;
        let alpha = (k / p) as u32;
        GroupElement {
            alpha,
            beta,
            eps,
            eta,
            nu,
            ai,
            bj,
        }
    }

    /// Every element once, in ascending index order.
    pub fn enumerate_elements(
        &self,
        gate: &Gate,
    ) -> Result<impl Iterator<Item = GroupElement> + '_> {
        gate.check(self.p())?;
        Ok((0..self.order()).map(move |k| self.element_from_index_unchecked(k)))
    }

    /// Every element of `E`, ordered by `(ε, η, ν)` index.
    pub fn e_elements(&self) -> impl Iterator<Item = GroupElement> + '_ {
        let q = self.rank();
        (0..1u64 << (2 * q + 1)).map(move |k| GroupElement {
            nu: k & 1 == 1,
            eta: ((k >> 1) & self.mask() as u64) as u32,
            eps: (k >> (q + 1)) as u32,
            ..Default::default()
        })
    }

    pub fn display<'a>(&'a self, u: &'a GroupElement) -> impl fmt::Display + 'a {
        Word { g: self, u }
    }
}

/// Builds G(p); rejects even, composite or out-of-range `p`.
pub fn make_group(p: u32) -> Result<FamilyGroup> {
    Ok(FamilyGroup::new(GroupParams::new(p)?))
}

struct Word<'a> {
    g: &'a FamilyGroup,
    u: &'a GroupElement,
}

impl fmt::Display for Word<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let u = self.u;
        let mut parts = Vec::new();
        let power = |name: &str, e: u32| match e {
            0 => None,
            1 => Some(name.to_string()),
            e => Some(format!("{name}^{e}")),
        };
        parts.extend(power("n1", u.alpha));
        parts.extend(power("n2", u.beta));
        for k in 0..self.g.rank() {
            if u.eps >> k & 1 == 1 {
                parts.push(format!("x{}", k + 1));
            }
        }
        for k in 0..self.g.rank() {
            if u.eta >> k & 1 == 1 {
                parts.push(format!("y{}", k + 1));
            }
        }
        parts.extend(power("z", u.nu as u32));
        parts.extend(power("a", u.ai));
        parts.extend(power("b", u.bj as u32));
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join(" "))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g3() -> FamilyGroup {
        make_group(3).unwrap()
    }

    #[test]
    fn parameters() {
        assert_eq!(make_group(3).unwrap().order(), 1728);
        assert_eq!(make_group(5).unwrap().order(), 128_000);
        assert_eq!(make_group(7).unwrap().order(), 5_619_712);
        for bad in [0, 1, 2, 4, 9, 15, 17] {
            assert!(matches!(
                GroupParams::new(bad),
                Err(Error::InvalidParameter { .. })
            ));
        }
        let p = GroupParams::new(5).unwrap();
        assert_eq!((p.e_order(), p.n_order(), p.m_order()), (512, 12_800, 10));
    }

    #[test]
    fn identity_element() {
        let g = g3();
        let e = g.identity();
        assert_eq!(g.element_index(&e), 0);
        assert_eq!(g.multiply(&e, &g.x(1)), g.x(1));
        assert_eq!(g.inverse(&e), e);
    }

    #[test]
    fn e_part_reordering() {
        let g = g3();
        let xy = g.multiply(&g.x(1), &g.y(1));
        assert_eq!((xy.eps, xy.eta, xy.nu), (1, 1, false));
        let yx = g.multiply(&g.y(1), &g.x(1));
        assert_eq!(yx, g.multiply(&xy, &g.z()));
    }

    #[test]
    fn dihedral_rewrite() {
        let g = g3();
        let a2 = g.pow(&g.a(), 2);
        assert_eq!(g.multiply(&a2, &g.a()), g.identity());
        let ba = g.multiply(&g.b(), &g.a());
        assert_eq!((ba.ai, ba.bj), (2, true));
        assert!(ba.alpha == 0 && ba.eps == 0 && ba.eta == 0 && !ba.nu);
    }

    #[test]
    fn inverses() {
        let g = g3();
        assert_eq!(g.inverse(&g.z()), g.z());
        let xy = g.multiply(&g.x(1), &g.y(1));
        assert_eq!(g.inverse(&xy), g.multiply(&xy, &g.z()));
        assert_eq!(g.inverse(&g.a()), g.pow(&g.a(), 2));
    }

    #[test]
    fn conjugation_examples() {
        let g = g3();
        assert_eq!(g.conjugate(&g.n2(), &g.a()), g.multiply(&g.n1(), &g.n2()));
        assert_eq!(g.conjugate(&g.x(2), &g.identity()), g.x(2));
        assert_eq!(g.conjugate(&g.x(1), &g.y(1)), g.multiply(&g.x(1), &g.z()));
        // n2^b = n2^{-1}
        assert_eq!(g.conjugate(&g.n2(), &g.b()), g.inverse(&g.n2()));
    }

    #[test]
    fn commutator_examples() {
        let g = make_group(5).unwrap();
        let x12 = g.multiply(&g.x(1), &g.x(2));
        assert_eq!(g.commutator(&x12, &g.y(2)), g.z());
        assert_eq!(g.commutator(&x12, &x12), g.identity());
        assert_eq!(g.commutator(&g.x(3), &g.y(3)), g.z());
    }

    #[test]
    fn index_bounds() {
        let g = g3();
        assert_eq!(
            g.element_from_index(1727).map(|u| g.element_index(&u)),
            Ok(1727)
        );
        assert!(matches!(
            g.element_from_index(1728),
            Err(Error::IndexOutOfRange { .. })
        ));
        let first = g.enumerate_elements(&Gate::default()).unwrap().next();
        assert_eq!(first, Some(g.identity()));
        assert!(make_group(11)
            .unwrap()
            .enumerate_elements(&Gate::default())
            .is_err());
    }

    #[test]
    fn display_words() {
        let g = g3();
        let u = g.product([&g.n1(), &g.x(1), &g.y(2), &g.a(), &g.a(), &g.b()]);
        assert_eq!(g.display(&u).to_string(), "n1 x1 y2 a^2 b");
        assert_eq!(g.display(&g.identity()).to_string(), "1");
    }
}
