//! One function per subcommand; each returns the full report text.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use nclattice_core::bratteli::{build_diagram, default_depth, required_depth, stable_incidence};
use nclattice_core::format::{self, Document};
use nclattice_core::ktheory::{self, ConeKind, K1_RANK};
use nclattice_core::{dot, iso, spectrum, BratteliDiagram, IncidenceMatrix, MembershipVerdict, Poset};
use serde_json::{json, Value};

use crate::{Common, Failure, Format, Member, Outcome};

fn ok(text: String) -> Result<Outcome, Failure> {
    Ok(Outcome { text, status: 0 })
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Parse(format!("cannot read {}: {e}", path.display())))
}

fn document(c: &Common, command: &str) -> Result<Document, Failure> {
    let path = c
        .input
        .as_deref()
        .ok_or_else(|| Failure::Parse(format!("`{command}` needs a poset, basis or covering file")))?;
    format::parse_document(&read(path)?)
        .map_err(|e| Failure::Parse(format!("{}: {e}", path.display())))
}

fn poset(c: &Common, command: &str) -> Result<Poset, Failure> {
    Ok(document(c, command)?.to_poset()?)
}

fn diagram(c: &Common, p: &Poset) -> Result<BratteliDiagram, Failure> {
    let depth = match c.depth {
        Some(d) => usize::try_from(d).map_err(|_| Failure::Parse(format!("depth {d} is too large")))?,
        None => default_depth(p),
    };
    Ok(build_diagram(p, depth)?)
}

/// The stable matrix, from `--matrix` or through the poset pipeline.
fn incidence(c: &Common, command: &str) -> Result<IncidenceMatrix, Failure> {
    match &c.matrix {
        Some(path) => {
            let m = format::parse_matrix(&read(path)?)
                .map_err(|e| Failure::Parse(format!("{}: {e}", path.display())))?;
            Ok(IncidenceMatrix::new(m)?)
        }
        None => {
            let p = poset(c, command)?;
            Ok(stable_incidence(&diagram(c, &p)?)?)
        }
    }
}

fn no_dot(c: &Common, command: &str) -> Result<(), Failure> {
    if c.format == Format::Dot {
        return Err(Failure::Parse(format!("dot output is not available for `{command}`")));
    }
    Ok(())
}

fn lines(values: impl IntoIterator<Item = Value>) -> String {
    values.into_iter().map(|v| format!("{v}\n")).collect()
}

fn labels_json(p: &Poset, set: nclattice_core::PointSet) -> Value {
    json!(p.labels_of(set))
}

fn dimension_json(d: u128) -> Value {
    match u64::try_from(d) {
        Ok(x) => json!(x),
        Err(_) => json!(d.to_string()),
    }
}

pub fn quotient(c: &Common) -> Result<Outcome, Failure> {
    let doc = document(c, "quotient")?;
    let space = doc
        .to_ground_space()
        .ok_or_else(|| Failure::Parse("`quotient` expects a file with `cover:` lines".into()))??;
    let q = space.quotient()?;
    ok(match c.format {
        Format::Text => {
            let mut out = String::new();
            for (label, members) in &q.classes {
                let _ = writeln!(out, "# {label} = {{{}}}", members.join(","));
            }
            out + &format::print_poset(&q.poset)
        }
        Format::Dot => dot::hasse_dot(&q.poset.hasse()),
        Format::JsonLines => {
            let classes = q
                .classes
                .iter()
                .map(|(label, members)| json!({ "class": label, "members": members }));
            let order = q
                .poset
                .covers()
                .into_iter()
                .map(|(x, y)| json!({ "leq": [q.poset.label(x), q.poset.label(y)] }));
            lines(classes.chain(order))
        }
    })
}

pub fn poset_check(c: &Common) -> Result<Outcome, Failure> {
    let p = poset(c, "poset-check")?;
    let h = p.hasse();
    let closed = p.closed_sets();
    ok(match c.format {
        Format::Text => {
            let mut out = String::new();
            let _ = writeln!(out, "points: {}", p.points().join(" "));
            for x in 0..p.len() {
                let _ = writeln!(
                    out,
                    "point {}: open {} closure {}",
                    p.label(x),
                    p.format_set(p.down(x)),
                    p.format_set(p.up(x))
                );
            }
            let sets: Vec<String> = closed.iter().map(|s| p.format_set(*s)).collect();
            let _ = writeln!(out, "closed sets ({}): {}", closed.len(), sets.join(" "));
            for level in 0..h.level_count() {
                let members: Vec<&str> = (0..p.len())
                    .filter(|&x| h.levels[x] == level)
                    .map(|x| p.label(x))
                    .collect();
                let _ = writeln!(out, "level {level}: {}", members.join(" "));
            }
            out
        }
        Format::Dot => dot::hasse_dot(&h),
        Format::JsonLines => {
            let points = (0..p.len()).map(|x| {
                json!({
                    "point": p.label(x),
                    "open": labels_json(&p, p.down(x)),
                    "closure": labels_json(&p, p.up(x)),
                    "level": h.levels[x],
                })
            });
            let sets: Vec<Value> = closed.iter().map(|s| labels_json(&p, *s)).collect();
            lines(points.chain([json!({ "closed_sets": sets })]))
        }
    })
}

pub fn bratteli(c: &Common) -> Result<Outcome, Failure> {
    let p = poset(c, "bratteli")?;
    let d = diagram(c, &p)?;
    ok(match c.format {
        Format::Text => {
            let mut out = d.level_dump();
            match d.stable_level() {
                Some(s) => {
                    let _ = writeln!(out, "# stable from level {s}");
                }
                None => {
                    let _ = writeln!(out, "# not stable yet: needs {} levels", required_depth(&p));
                }
            }
            out
        }
        Format::Dot => dot::bratteli_dot(&d),
        Format::JsonLines => lines((0..d.depth()).map(|l| {
            let atoms: Vec<Value> = d.partitions()[l].atoms.iter().map(|a| labels_json(&p, *a)).collect();
            let dims: Vec<Value> = d.dimensions(l).into_iter().map(dimension_json).collect();
            let edges = if l == 0 { Value::Null } else { json!(d.edges()[l - 1].to_rows()) };
            json!({ "level": l, "dimensions": dims, "atoms": atoms, "edges": edges })
        })),
    })
}

pub fn spectrum(c: &Common) -> Result<Outcome, Failure> {
    let p = poset(c, "spectrum")?;
    let d = diagram(c, &p)?;
    let prim = spectrum::prim_poset(&d)?;
    ok(match c.format {
        Format::Text => {
            let mut out = spectrum::report(&d)?;
            out.push_str("# primitive spectrum\n");
            out + &format::print_poset(&prim.poset)
        }
        Format::Dot => dot::prim_dot(&prim),
        Format::JsonLines => {
            let s = d.stable_level().expect("prim_poset succeeded");
            let nodes = &d.partitions()[s].atoms;
            let ideals = spectrum::ideal_subdiagrams(&d)?;
            let mut out = Vec::new();
            for ideal in &ideals {
                let names: Vec<String> = ideal
                    .selected
                    .iter()
                    .map(|i| p.labels_of(nodes[i]).join("+"))
                    .collect();
                out.push(json!({
                    "ideal": names,
                    "primitive": spectrum::is_primitive(ideal, &d)?,
                }));
            }
            lines(out)
        }
    })
}

pub fn k0(c: &Common) -> Result<Outcome, Failure> {
    no_dot(c, "k0")?;
    let t = incidence(c, "k0")?;
    let group = ktheory::k0_group(&t)?;
    let inverse = ktheory::integer_inverse(t.matrix())?;
    ok(match c.format {
        Format::JsonLines => lines([json!({
            "rank": group.rank,
            "determinant": group.determinant,
            "basis": group.basis,
            "k1_rank": K1_RANK,
            "t": t.matrix().to_rows(),
            "t_inverse": inverse.to_rows(),
        })]),
        _ => format!(
            "{group}\nK1 = 0\nbasis: {}\nT =\n{}T^-1 =\n{}",
            group.basis.join(" "),
            t.matrix(),
            inverse
        ),
    })
}

pub fn cone(c: &Common) -> Result<Outcome, Failure> {
    no_dot(c, "cone")?;
    let t = incidence(c, "cone")?;
    let description = ktheory::describe_cone(&t, c.tolerance, c.m_max)?;
    ok(match c.format {
        Format::JsonLines => {
            let body = match &description.kind {
                ConeKind::UnipotentSymbolic(u) => {
                    let clauses: Vec<String> = u.clauses().iter().map(|cl| cl.render(t.labels())).collect();
                    json!({ "kind": description.kind_name(), "labels": t.labels(), "clauses": clauses })
                }
                ConeKind::PerronHalfspace(p) => json!({
                    "kind": description.kind_name(),
                    "labels": t.labels(),
                    "lambda": p.lambda,
                    "functional": p.u,
                }),
                ConeKind::IterativeOnly => json!({
                    "kind": description.kind_name(),
                    "labels": t.labels(),
                    "m_max": c.m_max,
                }),
            };
            lines([body])
        }
        _ => description.render(),
    })
}

pub fn member(m: &Member) -> Result<Outcome, Failure> {
    let c = &m.common;
    no_dot(c, "member")?;
    let t = incidence(c, "member")?;
    let description = ktheory::describe_cone(&t, c.tolerance, c.m_max)?;
    let mut out = String::new();
    for raw in &m.vectors {
        let v = format::parse_vector(raw).map_err(|e| Failure::Parse(format!("vector `{raw}`: {e}")))?;
        let verdict = description.verdict(&v, c.m_max)?;
        match c.format {
            Format::JsonLines => {
                let (m, certificate) = match verdict {
                    MembershipVerdict::InCone { m } => (json!(m), Value::Null),
                    MembershipVerdict::NotInCone(cert) => (Value::Null, json!(format!("{cert:?}"))),
                    MembershipVerdict::Unknown { .. } => (Value::Null, Value::Null),
                };
                let _ = writeln!(
                    out,
                    "{}",
                    json!({ "vector": v, "verdict": verdict.to_string(), "m": m, "certificate": certificate })
                );
            }
            _ => {
                let shown: Vec<String> = v.iter().map(i64::to_string).collect();
                let _ = writeln!(out, "{verdict}  ({})", shown.join(", "));
            }
        }
    }
    ok(out)
}

pub fn roundtrip(c: &Common) -> Result<Outcome, Failure> {
    let p = poset(c, "roundtrip")?;
    let d = diagram(c, &p)?;
    let prim = spectrum::prim_poset(&d)?;
    let map = iso::isomorphism(&p, &prim.poset);
    let status = if map.is_some() { 0 } else { 1 };
    let text = match c.format {
        Format::Text => {
            let mut out = String::new();
            let _ = writeln!(out, "input: {} points", p.len());
            let _ = writeln!(out, "prim: {} points", prim.poset.len());
            let _ = writeln!(out, "isomorphic: {}", if map.is_some() { "yes" } else { "no" });
            if let Some(f) = &map {
                for (x, &y) in f.iter().enumerate() {
                    let _ = writeln!(out, "{} -> {}", p.label(x), prim.poset.label(y));
                }
            }
            out
        }
        Format::Dot => dot::prim_dot(&prim),
        Format::JsonLines => {
            let pairs: Option<Vec<[&str; 2]>> = map.as_ref().map(|f| {
                f.iter()
                    .enumerate()
                    .map(|(x, &y)| [p.label(x), prim.poset.label(y)])
                    .collect()
            });
            lines([json!({
                "points": p.len(),
                "prim_points": prim.poset.len(),
                "isomorphic": map.is_some(),
                "map": pairs,
            })])
        }
    };
    Ok(Outcome { text, status })
}
