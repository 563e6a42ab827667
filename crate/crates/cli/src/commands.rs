use std::collections::BTreeSet;
use std::path::PathBuf;

use classgraph::bdg::{
    bdg_of_group, build_bdg, classify_shape, GroupSource, ShapeKind, TableGroup,
};
use classgraph::classes::{
    center, centralizer_of_b_in_e, centralizer_order_via_class, class_table, conjugacy_class_of,
    m_orbit_sizes_on_e, paired_span, predicted_sizes, stratum_sizes, Stratum,
};
use classgraph::family::{
    fixed_space_of_a, fixed_space_of_b, verify_dihedral_action, verify_presentation,
    VerificationReport,
};
use classgraph::{make_group, Error, Gate};

use crate::output;
use crate::{Format, Limits};

pub struct Output {
    pub text: String,
    pub status: u8,
}

pub struct Failure {
    pub message: String,
    pub status: u8,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::GateExceeded { .. } => 1,
            _ => 2,
        };
        Failure {
            message: e.to_string(),
            status,
        }
    }
}

fn invalid(message: impl Into<String>) -> Failure {
    Failure {
        message: message.into(),
        status: 2,
    }
}

fn gate(limits: &Limits) -> Gate {
    if limits.allow_large {
        Gate::unlimited()
    } else {
        Gate::from_env()
    }
}

fn fmt_set(s: &BTreeSet<u64>) -> String {
    let items: Vec<String> = s.iter().map(u64::to_string).collect();
    format!("{{{}}}", items.join(", "))
}

fn merge(into: &mut VerificationReport, prefix: &str, mut part: VerificationReport) {
    for c in &mut part.checks {
        c.name = format!("{prefix}: {}", c.name);
    }
    into.extend(part);
}

fn ok(text: String) -> Result<Output, Failure> {
    Ok(Output { text, status: 0 })
}

pub fn verify(p: u32, format: Format, limits: &Limits) -> Result<Output, Failure> {
    let g = make_group(p)?;
    let gate = gate(limits);
    gate.check(p)?;
    let pp = p as u64;
    let mut r = VerificationReport::new();

    merge(&mut r, "presentation", verify_presentation(&g, &gate));
    merge(&mut r, "action", verify_dihedral_action(p)?);
    r.record("fixed space of a = 0", 0, fixed_space_of_a(p)?);
    r.record("fixed space of b = p-1", pp - 1, fixed_space_of_b(p)?);

    let table = class_table(&g, &gate)?;
    r.record("|G| = 2^(2p) p^3", g.order(), table.class_sum());
    r.record("|Z(G)| = 2p", 2 * pp, table.center_order);
    let z: BTreeSet<_> = center(&g, &gate)?.into_iter().collect();
    let n1z: BTreeSet<_> = (0..pp)
        .flat_map(|i| {
            let n = g.pow(&g.n1(), i);
            [n, g.multiply(&n, &g.z())]
        })
        .collect();
    r.record_flag("Z(G) = <n1, z>", z == n1z);

    let ceb: BTreeSet<_> = centralizer_of_b_in_e(&g, &gate)?.into_iter().collect();
    r.record("|C_E(b)| = 2^p", 1u64 << p, ceb.len());
    r.record_flag(
        "C_E(b) = <x_i x_(p-i), y_i y_(p-i), z>",
        ceb == paired_span(&g),
    );
    let orbits = m_orbit_sizes_on_e(&g, &gate)?;
    r.record_flag(
        "M-orbits on E \\ Z(E) have size p or 2p",
        orbits.keys().all(|&s| s == pp || s == 2 * pp),
    );

    let q = p as usize - 1;
    let class_size = |u| conjugacy_class_of(&g, &u).size;
    r.record(
        "|(x1 x_(p-1))^G| = 2p",
        2 * pp,
        class_size(g.multiply(&g.x(1), &g.x(q))),
    );
    r.record(
        "|(x1 y1)^G| = 4p",
        4 * pp,
        class_size(g.multiply(&g.x(1), &g.y(1))),
    );
    r.record(
        "|a^G| = 2^(2p-1) p",
        (1u64 << (2 * p - 1)) * pp,
        class_size(g.a()),
    );
    r.record(
        "|C_G(a)| = 2p^2",
        2 * pp * pp,
        centralizer_order_via_class(&g, &g.a()),
    );
    r.record(
        "|b^G| = 2^(p-1) p^2",
        (1u64 << (p - 1)) * pp * pp,
        class_size(g.b()),
    );
    r.record(
        "|(x1 b)^G| = 2^p p^2",
        (1u64 << p) * pp * pp,
        class_size(g.multiply(&g.x(1), &g.b())),
    );
    let notes = vec![format!(
        "|x1^G| = {} (x1 lies in a class of size 2p)",
        class_size(g.x(1))
    )];

    let strata = stratum_sizes(&table);
    let expected = [
        (Stratum::NoncentralN, BTreeSet::from([2 * pp, 4 * pp])),
        (
            Stratum::RotationCoset,
            BTreeSet::from([(1 << (2 * p - 1)) * pp]),
        ),
        (
            Stratum::ReflectionCoset,
            BTreeSet::from([(1 << (p - 1)) * pp * pp, (1 << p) * pp * pp]),
        ),
    ];
    for (s, want) in expected {
        let got = strata.get(&s).cloned().unwrap_or_default();
        r.record(
            format!("class sizes in {}", s.label()),
            fmt_set(&want),
            fmt_set(&got),
        );
    }
    r.record(
        "noncentral class sizes",
        fmt_set(&predicted_sizes(p)),
        fmt_set(&table.noncentral_sizes()),
    );
    let shape = classify_shape(&build_bdg(table.noncentral_sizes()));
    r.record(
        "B(G) = K_{2,5}",
        ShapeKind::CompleteBipartite { m: 2, n: 5 },
        shape.kind,
    );

    let text = match format {
        Format::Text => output::report_text(&format!("verify p = {p}"), &r, &notes),
        Format::Json => output::report_json(p, &r, &notes),
        Format::Dot => return Err(invalid("verify supports text or json output")),
    };
    Ok(Output {
        text,
        status: if r.overall { 0 } else { 1 },
    })
}

pub fn classes(p: u32, format: Format, limits: &Limits) -> Result<Output, Failure> {
    let g = make_group(p)?;
    if format == Format::Dot {
        return Err(invalid("classes supports text or json output"));
    }
    let table = class_table(&g, &gate(limits))?;
    ok(match format {
        Format::Json => output::classes_json(&table),
        _ => output::classes_text(&g, &table),
    })
}

pub enum GraphInput {
    Sizes(Vec<u64>),
    Family(u32),
    Table(PathBuf),
}

fn load_table(path: &PathBuf) -> Result<TableGroup, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| invalid(format!("cannot read {}: {e}", path.display())))?;
    Ok(TableGroup::parse(&text)?.0)
}

pub fn graph(input: GraphInput, format: Format, limits: &Limits) -> Result<Output, Failure> {
    let bdg = match input {
        GraphInput::Sizes(xs) => {
            if xs.contains(&0) {
                return Err(invalid("sizes must be positive integers"));
            }
            build_bdg(xs)
        }
        GraphInput::Family(p) => {
            let g = make_group(p)?;
            bdg_of_group(&GroupSource::Family(&g, gate(limits)))?
        }
        GraphInput::Table(path) => {
            let t = load_table(&path)?;
            bdg_of_group(&GroupSource::Table(&t))?
        }
    };
    let shape = classify_shape(&bdg);
    ok(match format {
        Format::Dot => bdg.to_dot(),
        Format::Json => output::graph_json(&bdg, &shape),
        Format::Text => output::graph_text(&bdg, &shape),
    })
}
