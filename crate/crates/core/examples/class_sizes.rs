//! Prints the class-size multiplicities of G(p).
use classgraph::{classes, make_group, Gate};
fn main() {
    let p: u32 = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(3);
    let g = make_group(p).expect("odd prime p <= 13");
    let t = classes::class_table(&g, &Gate::from_env()).expect("within the enumeration gate");
    println!(
        "p = {p}, |G| = {}, classes = {}, |Z(G)| = {}",
        t.order,
        t.classes.len(),
        t.center_order
    );
    for (size, count) in t.size_multiplicities() {
        println!("{size:>8} x {count}");
    }
}
