use std::fmt::Write as _;

use cedga_algebra::{Presentation, Role};

use crate::Bundle;

fn quote(s: &str) -> String {
    let mut out = String::from("\"");
    for c in s.chars() {
        if c == '"' || c == '\\' {
            out.push('\\');
        }
        out.push(c);
    }
    out.push('"');
    out
}

/// Canonical text: ring, shared convention, notes, presentations, maps and
/// augmentations by name, generators in declaration order.
pub fn serialize(b: &Bundle) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "ring {}", b.ring);
    let conventions: Vec<_> = b.presentations.values().map(Presentation::convention).collect();
    let shared = match conventions.first() {
        Some(Some(c)) if conventions.iter().all(|x| *x == Some(*c)) => Some(*c),
        _ => None,
    };
    if let Some(c) = shared {
        let _ = writeln!(s, "convention {c}");
    }
    for n in &b.notes {
        let _ = writeln!(s, "note {}", quote(n));
    }
    for p in b.presentations.values() {
        s.push('\n');
        let _ = writeln!(s, "presentation {}", p.name());
        if shared.is_none() {
            if let Some(c) = p.convention() {
                let _ = writeln!(s, "convention {c}");
            }
        }
        if p.num_idempotents() > 0 {
            let labels: Vec<&str> = p.idempotents().map(|(_, l)| l).collect();
            let _ = writeln!(s, "idempotents {}", labels.join(" "));
        }
        for (_, g) in p.generators() {
            let _ = write!(
                s,
                "gen {} deg {} from {} to {} ",
                g.name,
                g.degree,
                p.idempotent_label(g.source),
                p.idempotent_label(g.target)
            );
            match &g.role {
                Role::Long => s.push_str("long"),
                Role::Short(l) => {
                    let _ = write!(s, "short {l}");
                }
            }
            if let Some(l) = g.level {
                let _ = write!(s, " level {l}");
            }
            s.push('\n');
        }
        for (id, g) in p.generators() {
            if let Some(d) = p.differential(id) {
                let _ = writeln!(s, "diff {} = {}", g.name, p.render(d));
            }
        }
    }
    let lookup = |name: &str| b.presentations.get(name);
    for m in b.maps.values() {
        s.push('\n');
        let _ = writeln!(s, "map {} : {} -> {} {{", m.name, m.source, m.target);
        if let (Some(src), Some(tgt)) = (lookup(&m.source), lookup(&m.target)) {
            for (e, label) in src.idempotents() {
                if let Some(f) = m.idempotent_image(e) {
                    let _ = writeln!(s, "  {label} -> {} ;", tgt.idempotent_label(f));
                }
            }
            for (g, gen) in src.generators() {
                if let Some(x) = m.image(g) {
                    let _ = writeln!(s, "  {} -> {} ;", gen.name, tgt.render(x));
                }
            }
        }
        s.push_str("}\n");
    }
    for a in b.augmentations.values() {
        s.push('\n');
        let scope = if a.scope.is_empty() { String::new() } else { format!(" {}", a.scope.join(" ")) };
        let _ = writeln!(s, "aug {} on {} scope{} {{", a.name, a.source, scope);
        if let Some(src) = lookup(&a.source) {
            for (g, gen) in src.generators() {
                if let Some(c) = &a.values[g.index()] {
                    let _ = writeln!(s, "  {} -> {c} ;", gen.name);
                }
            }
        }
        s.push_str("}\n");
    }
    s
}
