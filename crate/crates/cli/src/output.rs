use std::collections::BTreeMap;

use classgraph::bdg::{BipartiteDivisorGraph, GraphShape};
use classgraph::classes::ClassTable;
use classgraph::family::VerificationReport;
use classgraph::FamilyGroup;
use serde::Serialize;

#[derive(Serialize)]
struct ClassEntry {
    rep: u64,
    size: u64,
}

#[derive(Serialize)]
struct ClassDocument {
    p: u32,
    order: u64,
    center_order: u64,
    classes: Vec<ClassEntry>,
}

pub fn classes_json(t: &ClassTable) -> String {
    let doc = ClassDocument {
        p: t.params.p(),
        order: t.order,
        center_order: t.center_order,
        classes: t
            .classes
            .iter()
            .map(|c| ClassEntry {
                rep: c.rep_index,
                size: c.size,
            })
            .collect(),
    };
    serde_json::to_string(&doc).expect("serializable") + "\n"
}

pub fn classes_text(g: &FamilyGroup, t: &ClassTable) -> String {
    let mut s = format!(
        "G({}) order {} classes {} center order {}\n",
        t.params.p(),
        t.order,
        t.classes.len(),
        t.center_order
    );
    s.push_str(&format!("{:>12} {:>8}  representative\n", "rep", "size"));
    for c in &t.classes {
        s.push_str(&format!(
            "{:>12} {:>8}  {}\n",
            c.rep_index,
            c.size,
            g.display(&c.representative)
        ));
    }
    let mult: BTreeMap<u64, usize> = t.size_multiplicities();
    s.push_str("size multiplicities:");
    for (size, n) in mult {
        s.push_str(&format!(" {size}x{n}"));
    }
    s.push('\n');
    s
}

#[derive(Serialize)]
struct GraphDocument<'a> {
    primes: Vec<u64>,
    sizes: Vec<u64>,
    edges: Vec<[u64; 2]>,
    shape: &'a GraphShape,
}

pub fn graph_json(g: &BipartiteDivisorGraph, shape: &GraphShape) -> String {
    let doc = GraphDocument {
        primes: g.primes.iter().copied().collect(),
        sizes: g.sizes.iter().copied().collect(),
        edges: g.edges.iter().map(|&(q, x)| [q, x]).collect(),
        shape,
    };
    serde_json::to_string(&doc).expect("serializable") + "\n"
}

pub fn graph_text(g: &BipartiteDivisorGraph, shape: &GraphShape) -> String {
    let join = |v: &mut dyn Iterator<Item = String>| v.collect::<Vec<_>>().join(" ");
    let inv = &shape.invariants;
    format!(
        "primes: {}\nsizes: {}\nedges: {}\nshape: {}\ncomponents: {}\ndiameters: {}\ngirth: {}\n",
        join(&mut g.primes.iter().map(u64::to_string)),
        join(&mut g.sizes.iter().map(u64::to_string)),
        join(&mut g.edges.iter().map(|(q, x)| format!("{q}-{x}"))),
        shape.kind,
        inv.components,
        join(&mut inv.diameters.iter().map(usize::to_string)),
        inv.girth,
    )
}

pub fn report_text(title: &str, r: &VerificationReport, notes: &[String]) -> String {
    let mut s = format!("{title}\n");
    for note in notes {
        s.push_str(&format!("note: {note}\n"));
    }
    for c in &r.checks {
        if c.passed {
            s.push_str(&format!("{}: PASS\n", c.name));
        } else {
            s.push_str(&format!(
                "{}: FAIL (expected {}, got {})\n",
                c.name, c.expected, c.actual
            ));
        }
    }
    s
}

pub fn report_json(p: u32, r: &VerificationReport, notes: &[String]) -> String {
    #[derive(Serialize)]
    struct Doc<'a> {
        p: u32,
        overall: bool,
        checks: &'a [classgraph::family::Check],
        notes: &'a [String],
    }
    let doc = Doc {
        p,
        overall: r.overall,
        checks: &r.checks,
        notes,
    };
    serde_json::to_string(&doc).expect("serializable") + "\n"
}
