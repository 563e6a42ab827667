//! A fixed corpus of small groups, built from permutations, matrices over small fields,
//! and split metacyclic extensions.

use super::table::TableGroup;

fn build<T: Clone + Eq + std::hash::Hash>(
    identity: T,
    gens: &[T],
    mul: impl Fn(&T, &T) -> T,
) -> TableGroup {
    TableGroup::generate(identity, gens, mul).expect("corpus group is well-formed")
}

type Perm = Vec<u8>;

fn compose(a: &Perm, b: &Perm) -> Perm {
    a.iter().map(|&i| b[i as usize]).collect()
}

fn perm_group(degree: usize, gens: &[Perm]) -> TableGroup {
    build((0..degree as u8).collect(), gens, compose)
}

pub fn cyclic(n: u32) -> TableGroup {
    build(0u32, &[1 % n], |a, b| (a + b) % n)
}

/// `C_m ⋊ C_k`, the generator of `C_k` acting on `C_m` by multiplication by `r`.
pub fn metacyclic(m: u64, r: u64, k: u64) -> TableGroup {
    assert_eq!(
        (0..k).fold(1, |acc, _| acc * r % m),
        1 % m,
        "r^k != 1 mod m"
    );
    let pow = move |s: u64| (0..s).fold(1, |acc, _| acc * r % m);
    build(
        (0u64, 0u64),
        &[(1 % m, 0), (0, 1 % k)],
        move |&(x, s), &(y, t)| ((x + pow(s) * y) % m, (s + t) % k),
    )
}

/// Dihedral group of order `2n`.
pub fn dihedral(n: u64) -> TableGroup {
    metacyclic(n, n - 1, 2)
}

/// Dicyclic group of order `4n` (`n = 2` gives `Q₈`).
pub fn dicyclic(n: u64) -> TableGroup {
    let m = 2 * n;
    // a^k x^s; x a x^{-1} = a^{-1}, x^2 = a^n
    build(
        (0u64, false),
        &[(1, false), (0, true)],
        move |&(k, s), &(l, t)| {
            let l = if s { (m - l) % m } else { l };
            let extra = if s && t { n } else { 0 };
            ((k + l + extra) % m, s ^ t)
        },
    )
}

pub fn symmetric(n: usize) -> TableGroup {
    let mut cycle: Perm = (1..n as u8).collect();
    cycle.push(0);
    let mut swap: Perm = (0..n as u8).collect();
    swap.swap(0, 1);
    perm_group(n, &[cycle, swap])
}

/// Alternating group on `n >= 3` points, generated by 3-cycles `(0 1 i)`.
pub fn alternating(n: usize) -> TableGroup {
    let gens: Vec<Perm> = (2..n)
        .map(|i| {
            let mut p: Perm = (0..n as u8).collect();
            p[0] = 1;
            p[1] = i as u8;
            p[i] = 0;
            p
        })
        .collect();
    perm_group(n, &gens)
}

pub fn direct_product(a: &TableGroup, b: &TableGroup) -> TableGroup {
    let gens: Vec<(u32, u32)> = (1..a.order() as u32)
        .map(|i| (i, 0))
        .chain((1..b.order() as u32).map(|j| (0, j)))
        .collect();
    build((0u32, 0u32), &gens, |&(i, j), &(k, l)| {
        (a.mul(i, k), b.mul(j, l))
    })
}

type Mat = [u8; 4];

fn mat_mul3(a: &Mat, b: &Mat) -> Mat {
    let e = |r: usize, c: usize| (a[2 * r] * b[c] + a[2 * r + 1] * b[2 + c]) % 3;
    [e(0, 0), e(0, 1), e(1, 0), e(1, 1)]
}

pub fn sl_2_3() -> TableGroup {
    build([1, 0, 0, 1], &[[1, 1, 0, 1], [0, 1, 2, 0]], mat_mul3)
}

pub fn gl_2_3() -> TableGroup {
    build(
        [1, 0, 0, 1],
        &[[1, 1, 0, 1], [0, 1, 2, 0], [2, 0, 0, 1]],
        mat_mul3,
    )
}

/// Heisenberg group mod 3 (extra-special of order 27, exponent 3).
pub fn heisenberg_3() -> TableGroup {
    build(
        (0u8, 0u8, 0u8),
        &[(1, 0, 0), (0, 1, 0)],
        |&(a, b, c), &(x, y, w)| ((a + x) % 3, (b + y) % 3, (c + w + a * y) % 3),
    )
}

/// Extra-special group `2^{1+4}_+` on `x₁, x₂, y₁, y₂, z`.
pub fn extraspecial_32_plus() -> TableGroup {
    let gens = [
        (1u8, 0u8, false),
        (2, 0, false),
        (0, 1, false),
        (0, 2, false),
    ];
    build((0u8, 0u8, false), &gens, |&(e, h, n), &(e2, h2, n2)| {
        (e ^ e2, h ^ h2, n ^ n2 ^ ((h & e2).count_ones() & 1 == 1))
    })
}

/// `AGL(1, 8) = C₂³ ⋊ C₇`, as permutations of GF(8).
pub fn agl_1_8() -> TableGroup {
    let gf8_mul = |a: u8, b: u8| {
        let mut r = 0u8;
        for i in 0..3 {
            if b >> i & 1 == 1 {
                r ^= a << i;
            }
        }
        for i in (3..5).rev() {
            if r >> i & 1 == 1 {
                r ^= 0b1011 << (i - 3);
            }
        }
        r
    };
    let shift: Perm = (0..8).map(|v| v ^ 1).collect();
    let scale: Perm = (0..8).map(|v| gf8_mul(v, 2)).collect();
    perm_group(8, &[shift, scale])
}

/// Named groups of order below 64.
pub fn small_groups() -> Vec<(String, TableGroup)> {
    let mut out: Vec<(String, TableGroup)> = Vec::new();
    for n in [1, 2, 3, 4, 6, 8, 12, 30, 60] {
        out.push((format!("C{n}"), cyclic(n)));
    }
    for n in 2..32 {
        out.push((format!("D{}", 2 * n), dihedral(n)));
    }
    for n in 2..16 {
        let name = if n == 2 {
            "Q8".into()
        } else {
            format!("Dic{}", 4 * n)
        };
        out.push((name, dicyclic(n)));
    }
    for (m, r, k, name) in [
        (7, 2, 3, "C7:C3"),
        (13, 3, 3, "C13:C3"),
        (19, 7, 3, "C19:C3"),
        (11, 3, 5, "C11:C5"),
        (5, 2, 4, "F20"),
        (13, 5, 4, "C13:C4"),
        (7, 3, 6, "F42"),
        (9, 4, 3, "C9:C3"),
        (9, 2, 6, "Hol(C9)"),
        (8, 3, 2, "SD16"),
        (8, 5, 2, "M16"),
        (16, 7, 2, "SD32"),
        (16, 9, 2, "M32"),
        (3, 2, 4, "C3:C4"),
        (5, 4, 4, "C5:C4"),
    ] {
        out.push((name.into(), metacyclic(m, r, k)));
    }
    out.push(("S3".into(), symmetric(3)));
    out.push(("S4".into(), symmetric(4)));
    out.push(("A4".into(), alternating(4)));
    out.push(("A5".into(), alternating(5)));
    out.push(("SL(2,3)".into(), sl_2_3()));
    out.push(("GL(2,3)".into(), gl_2_3()));
    out.push(("He3".into(), heisenberg_3()));
    out.push(("2^(1+4)+".into(), extraspecial_32_plus()));
    out.push(("AGL(1,8)".into(), agl_1_8()));

    let (s3, a4, q8, d8) = (symmetric(3), alternating(4), dicyclic(2), dihedral(4));
    for (name, a, b) in [
        ("S3xC3", &s3, cyclic(3)),
        ("S3xS3", &s3, symmetric(3)),
        ("S3xC4", &s3, cyclic(4)),
        ("S3xC2xC2", &dihedral(6), cyclic(2)),
        ("A4xC2", &a4, cyclic(2)),
        ("A4xC3", &a4, cyclic(3)),
        ("A4xC4", &a4, cyclic(4)),
        ("S4xC2", &symmetric(4), cyclic(2)),
        ("Q8xC2", &q8, cyclic(2)),
        ("Q8xC3", &q8, cyclic(3)),
        ("Q8xC7", &q8, cyclic(7)),
        ("D8xC2", &d8, cyclic(2)),
        ("D8xC3", &d8, cyclic(3)),
        ("D8xC7", &d8, cyclic(7)),
        ("He3xC2", &heisenberg_3(), cyclic(2)),
        ("F20xC3", &metacyclic(5, 2, 4), cyclic(3)),
        ("C7:C3xC2", &metacyclic(7, 2, 3), cyclic(2)),
        ("SL(2,3)xC2", &sl_2_3(), cyclic(2)),
    ] {
        out.push((name.into(), direct_product(a, &b)));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    #[test]
    fn orders() {
        assert_eq!(dicyclic(2).order(), 8);
        assert_eq!(symmetric(4).order(), 24);
        assert_eq!(alternating(5).order(), 60);
        assert_eq!(sl_2_3().order(), 24);
        assert_eq!(gl_2_3().order(), 48);
        assert_eq!(agl_1_8().order(), 56);
        assert_eq!(extraspecial_32_plus().order(), 32);
        assert!(small_groups().iter().all(|(_, g)| g.order() < 64));
    }

    #[test]
    fn known_class_sizes() {
        let sizes = |g: TableGroup| g.noncentral_class_sizes();
        assert_eq!(sizes(symmetric(4)), BTreeSet::from([3, 6, 8]));
        assert_eq!(sizes(alternating(5)), BTreeSet::from([12, 15, 20]));
        assert_eq!(sizes(agl_1_8()), BTreeSet::from([7, 8]));
        assert_eq!(sizes(extraspecial_32_plus()), BTreeSet::from([2]));
        assert_eq!(sizes(sl_2_3()), BTreeSet::from([4, 6]));
        assert_eq!(sizes(cyclic(12)), BTreeSet::new());
    }

    #[test]
    fn names_are_unique() {
        let names: BTreeSet<String> = small_groups().into_iter().map(|(n, _)| n).collect();
        assert_eq!(names.len(), small_groups().len());
    }
}
