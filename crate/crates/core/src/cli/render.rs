use std::fmt::Write;
use std::time::Duration;

use crate::expand::{ExpansionReport, Verdict};
use crate::liealg::AlgebraDefinition;

use super::{AlgebraPayload, CasimirEntry, Payload, RunReport};

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn table(out: &mut String, def: &AlgebraDefinition) {
    let _ = writeln!(out, "{} <{}>", def.name, def.generators.join(", "));
    if !def.parameters.is_empty() {
        let _ = writeln!(out, "  parameters: {}", def.parameters.join(", "));
    }
    // keep the generator order rather than the key order
    let pos = |key: &str| -> (usize, usize) {
        let inner = key.trim_matches(|c| c == '[' || c == ']');
        let (a, b) = inner.split_once(',').unwrap_or((inner, ""));
        let at = |l: &str| def.generators.iter().position(|g| g == l).unwrap_or(usize::MAX);
        (at(a), at(b))
    };
    let mut rows: Vec<_> = def.brackets.iter().collect();
    rows.sort_by_key(|(k, _)| pos(k));
    for (k, v) in rows {
        let _ = writeln!(out, "  {k} = {v}");
    }
}

fn casimirs(out: &mut String, cs: &[CasimirEntry]) {
    for c in cs {
        let _ = writeln!(out, "  {} = {}", c.name, c.element);
        match &c.witness {
            None => {
                let _ = writeln!(out, "    central: yes");
            }
            Some(w) => {
                let _ = writeln!(out, "    central: no, {w}");
            }
        }
    }
}

fn algebra(out: &mut String, a: &AlgebraPayload, show: bool) {
    if show {
        table(out, &a.definition);
    } else {
        let _ = writeln!(
            out,
            "{} <{}>, {} nonzero brackets",
            a.definition.name,
            a.definition.generators.join(", "),
            a.definition.brackets.len()
        );
    }
    if let Some(cell) = &a.cell {
        let _ = writeln!(out, "built-in: {cell}");
    }
    if !a.casimirs.is_empty() {
        let _ = writeln!(out, "Casimirs:");
        casimirs(out, &a.casimirs);
    }
    if !a.involutions.is_empty() {
        let _ = writeln!(out, "involutions:");
    }
    for inv in &a.involutions {
        let r = &inv.report;
        let _ = writeln!(
            out,
            "  {}: automorphism {}, Cartan {}, invariant <{}>, anti-invariant <{}>",
            r.involution.as_str(),
            yes(r.automorphism),
            yes(inv.cartan.is_cartan()),
            r.invariant.join(", "),
            r.anti_invariant.join(", ")
        );
        if show {
            for v in &r.violations {
                let _ = writeln!(out, "    {v}");
            }
        }
    }
}

fn expansion(out: &mut String, r: &ExpansionReport) {
    let _ = writeln!(
        out,
        "{}  [{} -> {}, axis {}, {} expanded, {}]",
        r.arrow, r.source, r.target, r.axis, r.expanded, r.mode
    );
    for s in &r.splits {
        if s.jpiece == "0" {
            let _ = writeln!(out, "  {}' = {}", s.casimir, s.base);
        } else {
            let _ = writeln!(out, "  {}' = {} + {} * ({})", s.casimir, s.base, r.expanded, s.jpiece);
        }
    }
    let _ = writeln!(out, "  J = {}", r.j);
    let h = &r.hypothesis;
    let _ = writeln!(out, "  k = <{}>, t = <{}>", h.k.join(", "), h.t.join(", "));
    let _ = writeln!(
        out,
        "  [k,k] in k: {}; [k,t] in t: {}; centralizer hypothesis {}",
        yes(h.k_closes),
        yes(h.kt_in_t),
        if h.holds { "holds" } else { "fails" }
    );
    for v in &h.violations {
        let _ = writeln!(out, "    {v}");
    }
    let _ = writeln!(out, "  primed generators:");
    for p in &r.primed {
        let _ = writeln!(out, "    {} = {}", p.generator, p.value);
    }
    let rels: Vec<String> = r.relations.iter().map(|x| format!("{} = {}", x.name, x.value)).collect();
    let _ = writeln!(out, "  central relations: {} (degree bound {})", rels.join(", "), r.degree_bound);
    let c = &r.constraints;
    if c.consistent {
        let _ = writeln!(out, "  constraints:");
        for e in &c.equations {
            let _ = writeln!(out, "    {e}");
        }
        for m in &c.remarks {
            let _ = writeln!(out, "    so {m}");
        }
        if !c.eigenvalues_used.is_empty() {
            let _ = writeln!(out, "    eigenvalues used: {}", c.eigenvalues_used.join(", "));
        }
    } else {
        let _ = writeln!(out, "  constraints: inconsistent ({})", c.equations.join(", "));
    }
    let _ = writeln!(out, "  brackets:");
    for b in &r.brackets {
        let how = if b.exact {
            "exact"
        } else if b.central_only {
            "central reduction"
        } else if b.verified {
            "central reduction + constraints"
        } else {
            "FAILS"
        };
        let _ = write!(out, "    [{}',{}'] {} {}", b.pair[0], b.pair[1], b.class.as_str(), how);
        if !b.equations.is_empty() {
            let _ = write!(out, "; gives {}", b.equations.join(", "));
        }
        if !b.verified {
            let _ = write!(out, "; residual {}", b.residual);
        }
        let _ = writeln!(out);
    }
    if !r.bracket_consistency {
        let _ = writeln!(out, "  note: some brackets add equations beyond the first bracket's");
    }
    if let Some(e) = r.k_brackets_exact {
        let _ = writeln!(out, "  brackets involving k' exact: {}", yes(e));
    }
    if let Some(cl) = &r.closure {
        let _ = writeln!(
            out,
            "  primed generators close: {}; matching family members: {} of {}",
            yes(cl.closes),
            if cl.matching_cells.is_empty() { "none".to_string() } else { cl.matching_cells.join(", ") },
            cl.checked_cells
        );
        if cl.closes && cl.matching_cells.is_empty() {
            let _ = writeln!(out, "  closes-but-not-CK");
        }
    }
    let _ = writeln!(out, "  contraction round trip: {}", yes(r.round_trip));
    let _ = writeln!(out, "  verdict: {}", r.verdict.as_str());
}

pub(super) fn text(report: &RunReport, show: bool, elapsed: Duration) -> String {
    let mut out = String::new();
    match &report.payload {
        Payload::Algebra(a) => algebra(&mut out, a, show),
        Payload::Verify(v) => {
            for a in &v.algebras {
                let s = &a.structure;
                let good = s.jacobi.iter().filter(|j| j.ok).count();
                let _ = writeln!(
                    out,
                    "{} {}: antisymmetry {}, Jacobi {}/{}",
                    if a.passed { "PASS" } else { "FAIL" },
                    s.algebra,
                    yes(s.antisymmetric),
                    good,
                    s.jacobi.len()
                );
                for j in s.failing_triples() {
                    let _ = writeln!(out, "  Jacobi ({}) = {}", j.triple.join(","), j.residual);
                }
                for i in &s.antisymmetry_issues {
                    let _ = writeln!(out, "  {i}");
                }
                casimirs(&mut out, &a.casimirs);
            }
        }
        Payload::Contract(c) => {
            let _ = writeln!(out, "{} contraction of {}:", c.contraction.as_str(), c.source.name);
            table(&mut out, &c.result);
        }
        Payload::Expand(e) => {
            for r in &e.reports {
                expansion(&mut out, r);
            }
            for n in &e.numeric {
                let _ = writeln!(out, "numeric check for {}:", n.arrow);
                for r in &n.residuals {
                    let _ = writeln!(out, "  [{}',{}'] residual {:.3e}", r.pair[0], r.pair[1], r.max_abs);
                }
                let _ = writeln!(out, "  {}", if n.passed { "PASS" } else { "FAIL" });
            }
        }
        Payload::Atlas(a) => {
            let mut count = [0usize; 3];
            for e in &a.entries {
                count[e.verdict as usize] += 1;
                let detail = match (&e.report, &e.error) {
                    (Some(r), _) if r.constraints.consistent => r.constraints.equations.join(", "),
                    (Some(_), _) => "closes-but-not-CK".to_string(),
                    (None, Some(err)) => format!("error: {err}"),
                    (None, None) => String::new(),
                };
                let _ = writeln!(
                    out,
                    "{:<13} {} -> {} (axis {}): {}",
                    e.verdict.as_str(),
                    e.arrow.source,
                    e.arrow.target,
                    e.arrow.axis,
                    detail
                );
            }
            let _ = writeln!(
                out,
                "{} passed, {} expected failure, {} failed",
                count[Verdict::Pass as usize],
                count[Verdict::ExpectedFail as usize],
                count[Verdict::Fail as usize]
            );
        }
    }
    let _ = writeln!(out, "time: {:.3} s", elapsed.as_secs_f64());
    out
}
