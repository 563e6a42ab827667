//! Group-axiom and relation checks for the normal-form engine.

use std::collections::HashSet;

use classgraph::family::{verify_presentation, FamilyArithmetic};
use classgraph::{make_group, FamilyGroup, Gate, GroupElement};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_element(g: &FamilyGroup, rng: &mut impl Rng) -> GroupElement {
    g.element_from_index(rng.random_range(0..g.order()))
        .unwrap()
}

#[test]
fn order_by_enumeration() {
    for (p, order) in [(3, 1728u64), (5, 128_000)] {
        let g = make_group(p).unwrap();
        let all: HashSet<GroupElement> = g.enumerate_elements(&Gate::default()).unwrap().collect();
        assert_eq!(all.len() as u64, order);
        assert!(all.iter().all(|u| g.is_canonical(u)));
    }
}

#[test]
fn e_part_associativity_exhaustive_p3() {
    let g = make_group(3).unwrap();
    let e: Vec<GroupElement> = g.e_elements().collect();
    assert_eq!(e.len(), 32);
    let mut n = 0;
    for u in &e {
        for v in &e {
            let uv = g.multiply(u, v);
            for w in &e {
                assert_eq!(g.multiply(&uv, w), g.multiply(u, &g.multiply(v, w)));
                n += 1;
            }
        }
    }
    assert_eq!(n, 32768);
}

#[test]
fn sampled_associativity() {
    for p in [3, 5] {
        let g = make_group(p).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(p as u64);
        for _ in 0..100_000 {
            let (u, v, w) = (
                random_element(&g, &mut rng),
                random_element(&g, &mut rng),
                random_element(&g, &mut rng),
            );
            assert_eq!(
                g.multiply(&g.multiply(&u, &v), &w),
                g.multiply(&u, &g.multiply(&v, &w))
            );
        }
    }
}

#[test]
fn identity_and_inverse_laws() {
    let g = make_group(3).unwrap();
    let one = g.identity();
    for u in g.enumerate_elements(&Gate::default()).unwrap() {
        let inv = g.inverse(&u);
        assert_eq!(g.multiply(&u, &inv), one);
        assert_eq!(g.multiply(&inv, &u), one);
        assert_eq!(g.multiply(&one, &u), u);
        assert_eq!(g.multiply(&u, &one), u);
    }
    let g = make_group(5).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(55);
    for _ in 0..20_000 {
        let u = random_element(&g, &mut rng);
        assert_eq!(g.multiply(&u, &g.inverse(&u)), one);
        assert_eq!(g.multiply(&g.inverse(&u), &u), one);
    }
}

#[test]
fn pure_e_inverse_twist() {
    let g = make_group(5).unwrap();
    for e in g.e_elements() {
        let inv = g.inverse(&e);
        let twist = (e.eps & e.eta).count_ones() & 1 == 1;
        assert_eq!((inv.eps, inv.eta, inv.nu), (e.eps, e.eta, e.nu ^ twist));
    }
}

#[test]
fn presentation_holds_up_to_13() {
    for p in [3, 5, 7, 11, 13] {
        let g = make_group(p).unwrap();
        let r = verify_presentation(&g, &Gate::default());
        assert!(r.overall, "p={p}: {:?}", r.failures().collect::<Vec<_>>());
        let has_order = r.checks.iter().any(|c| c.name.starts_with("|E|"));
        assert_eq!(has_order, p <= 7);
    }
    let r = verify_presentation(&make_group(5).unwrap(), &Gate::default());
    let e = r.checks.iter().find(|c| c.name.starts_with("|E|")).unwrap();
    assert_eq!(e.actual, "512");
}

#[test]
fn z_is_central() {
    for p in [3, 5, 7, 11, 13] {
        let g = make_group(p).unwrap();
        for h in g.generators() {
            assert_eq!(g.conjugate(&g.z(), h), g.z());
        }
    }
}

/// Dot product over GF(2).
fn dot(a: u32, b: u32) -> bool {
    (a & b).count_ones() % 2 == 1
}

#[test]
fn commutator_is_the_dot_product() {
    let g = make_group(3).unwrap();
    for eps in 0..4 {
        for eta in 0..4 {
            let c = g.commutator(&g.e_element(eps, 0, false), &g.e_element(0, eta, false));
            assert_eq!(c, g.e_element(0, 0, dot(eps, eta)));
        }
    }
    let g = make_group(5).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..10_000 {
        let (eps, eta) = (rng.random_range(0..16), rng.random_range(0..16));
        let c = g.commutator(&g.e_element(eps, 0, false), &g.e_element(0, eta, false));
        assert_eq!(c, g.e_element(0, 0, dot(eps, eta)));
    }
}

#[test]
fn index_round_trip_exhaustive() {
    for p in [3, 5] {
        let g = make_group(p).unwrap();
        for k in 0..g.order() {
            let u = g.element_from_index(k).unwrap();
            assert_eq!(g.element_index(&u), k);
        }
    }
    assert_eq!(make_group(3).unwrap().order() - 1, 1727);
}

/// Image of `e` under `a`, expanded generator by generator through the engine.
fn a_image_by_expansion(g: &FamilyGroup, e: &GroupElement) -> GroupElement {
    let q = g.p() as usize - 1;
    let a = g.a();
    let mut word = Vec::new();
    for i in 1..=q {
        if e.eps >> (i - 1) & 1 == 1 {
            word.push(g.conjugate(&g.x(i), &a));
        }
    }
    for i in 1..=q {
        if e.eta >> (i - 1) & 1 == 1 {
            word.push(g.conjugate(&g.y(i), &a));
        }
    }
    if e.nu {
        word.push(g.z());
    }
    g.product(&word)
}

#[test]
fn matrix_action_matches_conjugation() {
    let g = make_group(3).unwrap();
    let (xa, ya, _, _) = g.matrices();
    let apply = |m: &classgraph::Gf2Matrix, v: u32| {
        (0..m.cols())
            .filter(|&c| v >> c & 1 == 1)
            .fold(0u32, |acc, c| acc ^ m.column(c) as u32)
    };
    for e in g.e_elements() {
        let by_matrix = g.e_element(apply(xa, e.eps), apply(ya, e.eta), e.nu);
        assert_eq!(g.conjugate(&e, &g.a()), by_matrix);
        assert_eq!(a_image_by_expansion(&g, &e), by_matrix);
    }
}

#[test]
fn dihedral_relations_on_elements() {
    for p in [3, 5, 7] {
        let g = make_group(p).unwrap();
        let (a, b) = (g.a(), g.b());
        let one = g.identity();
        assert_eq!(g.pow(&a, p as u64), one);
        assert_eq!(g.pow(&b, 2), one);
        assert_eq!(g.pow(&g.multiply(&a, &b), 2), one);
        assert_ne!(a, one);
        // M acts faithfully on E: a^i for 0 < i < p moves x1
        for i in 1..p as u64 {
            assert_ne!(g.conjugate(&g.x(1), &g.pow(&a, i)), g.x(1));
        }
    }
}

/// Wraps the engine but drops the `z` correction from products and inverses.
struct CorruptedTwist(FamilyGroup);

impl FamilyArithmetic for CorruptedTwist {
    fn p(&self) -> u32 {
        self.0.p()
    }
    fn identity(&self) -> GroupElement {
        self.0.identity()
    }
    fn x(&self, i: usize) -> GroupElement {
        self.0.x(i)
    }
    fn y(&self, i: usize) -> GroupElement {
        self.0.y(i)
    }
    fn z(&self) -> GroupElement {
        self.0.z()
    }
    fn multiply(&self, u: &GroupElement, v: &GroupElement) -> GroupElement {
        let mut w = self.0.multiply(u, v);
        if dot(u.eta, v.eps) {
            w.nu = !w.nu;
        }
        w
    }
    fn inverse(&self, u: &GroupElement) -> GroupElement {
        let mut w = self.0.inverse(u);
        if dot(u.eps, u.eta) {
            w.nu = !w.nu;
        }
        w
    }
    fn describe(&self, u: &GroupElement) -> String {
        self.0.display(u).to_string()
    }
}

#[test]
fn corrupted_twist_fails_presentation() {
    let r = verify_presentation(&CorruptedTwist(make_group(3).unwrap()), &Gate::default());
    assert!(!r.overall);
    assert!(r.failures().any(|c| c.name == "[x1,y1] = z"));
}

proptest! {
    #[test]
    fn associativity_p7(a in 0u64..5_619_712, b in 0u64..5_619_712, c in 0u64..5_619_712) {
        let g = make_group(7).unwrap();
        let (u, v, w) = (
            g.element_from_index(a).unwrap(),
            g.element_from_index(b).unwrap(),
            g.element_from_index(c).unwrap(),
        );
        prop_assert_eq!(g.multiply(&g.multiply(&u, &v), &w), g.multiply(&u, &g.multiply(&v, &w)));
    }

    #[test]
    fn conjugation_is_an_automorphism(a in 0u64..128_000, b in 0u64..128_000, h in 0u64..128_000) {
        let g = make_group(5).unwrap();
        let (u, v, h) = (
            g.element_from_index(a).unwrap(),
            g.element_from_index(b).unwrap(),
            g.element_from_index(h).unwrap(),
        );
        prop_assert_eq!(
            g.conjugate(&g.multiply(&u, &v), &h),
            g.multiply(&g.conjugate(&u, &h), &g.conjugate(&v, &h))
        );
    }
}
