//! Plain-text rendering of a [`Report`].

use std::fmt::Write;

use crate::report::*;

fn list(v: &[Dec]) -> String {
    v.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

fn set(v: &[Dec]) -> String {
    format!(
        "{{{}}}",
        v.iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(", ")
    )
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn write_matrix(out: &mut String, rows: &[Vec<Dec>], indent: &str) {
    let cols = rows.first().map_or(0, Vec::len);
    let widths: Vec<usize> = (0..cols)
        .map(|j| {
            rows.iter()
                .map(|r| r[j].to_string().len())
                .max()
                .unwrap_or(0)
        })
        .collect();
    for r in rows {
        let cells: Vec<String> = r
            .iter()
            .zip(&widths)
            .map(|(x, w)| format!("{:>w$}", x.to_string()))
            .collect();
        let _ = writeln!(out, "{indent}[{}]", cells.join(" "));
    }
}

pub fn render(r: &Report) -> String {
    let mut out = String::new();
    if let Some(d) = &r.decomposition {
        decomposition(&mut out, d);
    }
    if let Some(m) = &r.markov {
        markov(&mut out, m);
    }
    if let Some(v) = &r.verdicts {
        verdicts(&mut out, v);
    }
    if let Some(f) = &r.fiber {
        fiber(&mut out, f);
    }
    if let Some(p) = &r.parametrization {
        let _ = writeln!(out, "parameters: {}", p.parameters);
        out.push_str(&p.text);
    }
    if let Some(b) = &r.bench {
        bench(&mut out, b);
    }
    for note in &r.notes {
        let _ = writeln!(out, "note: {note}");
    }
    if let Some(t) = &r.timings {
        let parts: Vec<String> = t.iter().map(|(k, v)| format!("{k} {v}us")).collect();
        let _ = writeln!(out, "timings: {}", parts.join(", "));
    }
    out
}

fn decomposition(out: &mut String, d: &DecompositionReport) {
    let _ = writeln!(out, "mode: {}", d.mode);
    let _ = writeln!(
        out,
        "decomposable: {} ({} summand{})",
        yes_no(d.decomposable),
        d.summands,
        if d.summands.0 == 1.into() { "" } else { "s" }
    );
    let _ = writeln!(out, "column order: {}", list(&d.column_order));
    for (k, b) in d.blocks.iter().enumerate() {
        let _ = writeln!(out, "block {}: generators {}", k + 1, set(&b.generators));
        write_matrix(out, &b.matrix, "  ");
    }
    if !d.free_generators.is_empty() {
        let _ = writeln!(out, "free generators: {}", set(&d.free_generators));
    }
    let parts: Vec<String> = d.partition.iter().map(|p| set(p)).collect();
    let _ = writeln!(out, "partition: {}", parts.join(" | "));
    if let Some(c) = &d.cross_check {
        let _ = writeln!(
            out,
            "cross-check: kernel mode {}, direct mode {} ({})",
            if c.kernel_decomposable {
                "decomposable"
            } else {
                "irreducible"
            },
            if c.direct_decomposable {
                "decomposable"
            } else {
                "irreducible"
            },
            if c.agree { "agree" } else { "DISAGREE" }
        );
    }
}

fn markov(out: &mut String, m: &MarkovReport) {
    let _ = writeln!(
        out,
        "minimal Markov basis ({}, {} elements):",
        m.strategy,
        m.elements.len()
    );
    for e in &m.elements {
        let block = e
            .block
            .as_ref()
            .map(|b| format!("  [block {b}]"))
            .unwrap_or_default();
        let _ = writeln!(out, "  {}    degree ({}){block}", e.text, list(&e.degree));
    }
    let _ = writeln!(out, "degree multiplicities:");
    for c in &m.degree_counts {
        let _ = writeln!(out, "  ({}): {}", list(&c.degree), c.count);
    }
    let betti: Vec<String> = m
        .betti_degrees
        .iter()
        .map(|d| format!("({})", list(d)))
        .collect();
    let _ = writeln!(out, "Betti degrees: {}", betti.join(" "));
}

fn verdicts(out: &mut String, v: &Verdicts) {
    let opt = |b: Option<bool>| b.map(yes_no);
    for b in &v.blocks {
        let mut parts = Vec::new();
        if let Some(x) = opt(b.unique) {
            parts.push(format!("unique {x}"));
        }
        if let Some(x) = opt(b.complete_intersection) {
            parts.push(format!("ci {x}"));
        }
        if let Some(x) = opt(b.gluing) {
            parts.push(format!("gluing {x}"));
        }
        let _ = writeln!(
            out,
            "block {} {}: {}",
            b.block,
            set(&b.generators),
            parts.join(", ")
        );
    }
    if !v.free_generators.is_empty() {
        let _ = writeln!(out, "free generators: {}", set(&v.free_generators));
    }
    if let Some(x) = v.unique {
        let _ = writeln!(out, "unique: {x}");
    }
    if let Some(x) = v.complete_intersection {
        let _ = writeln!(out, "ci: {x}");
    }
    if let Some(g) = &v.gluing {
        let _ = writeln!(out, "gluing: {}", g.is_gluing);
        if let Some(c) = &g.certificate {
            let _ = writeln!(
                out,
                "  block {}: {} | {} along degree ({})",
                c.block,
                set(&c.block_first),
                set(&c.block_second),
                list(&c.degree)
            );
            let _ = writeln!(
                out,
                "  witnesses ({}) and ({})",
                list(&c.first_witness),
                list(&c.second_witness)
            );
        }
    }
}

fn fiber(out: &mut String, f: &FiberReport) {
    let _ = writeln!(
        out,
        "fiber over ({}): {} elements",
        list(&f.degree),
        f.elements.len()
    );
    for (k, e) in f.elements.iter().enumerate() {
        let _ = writeln!(out, "  {}: ({})", k + 1, list(e));
    }
    if let Some(v) = &f.vertices {
        let _ = writeln!(out, "{} vertices: {}", f.complex, set(v));
    }
    if let Some(facets) = &f.facets {
        let parts: Vec<String> = facets.iter().map(|x| set(x)).collect();
        let _ = writeln!(out, "{} facets: {}", f.complex, parts.join(" "));
    }
    let parts: Vec<String> = f.components.iter().map(|x| set(x)).collect();
    let _ = writeln!(out, "{} components: {}", f.complex, parts.join(" "));
    let _ = writeln!(out, "connected: {}", f.connected);
}

fn outcome(o: &BenchOutcome) -> String {
    match o {
        BenchOutcome::Completed { best_us } => format!("{best_us}us"),
        BenchOutcome::TimedOut { timeout_us } => format!("timed out after {timeout_us}us"),
    }
}

fn bench(out: &mut String, b: &BenchReport) {
    let _ = writeln!(out, "decomposed: {}", outcome(&b.decomposed));
    let _ = writeln!(out, "whole: {}", outcome(&b.whole));
    if let Some(s) = &b.speedup {
        let _ = writeln!(out, "speedup: {s}x");
    }
    let _ = writeln!(out, "decomposed faster: {}", b.decomposed_faster);
    if let Some(a) = b.bases_agree {
        let _ = writeln!(out, "bases agree: {a}");
    }
}
