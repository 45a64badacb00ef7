use std::collections::HashSet;

use cedga_algebra::{GenId, IdemId, Presentation, Word};

use crate::{Bounds, Parity};

/// All composable words `src → tgt` of the given degree with length in
/// `1..=max_word_length`, letters of level at most `max_level`, and the
/// requested length parity. Sorted in the canonical word order.
pub fn search_space(
    p: &Presentation,
    src: IdemId,
    tgt: IdemId,
    degree: i64,
    bounds: &Bounds,
    parity: Option<Parity>,
) -> Vec<Word> {
    let n = p.num_idempotents();
    let max_len = bounds.max_word_length;
    let mut out_edges: Vec<Vec<(GenId, IdemId, i64)>> = vec![Vec::new(); n];
    for (id, g) in p.generators() {
        if g.level.is_some_and(|l| l > bounds.max_level) {
            continue;
        }
        out_edges[g.source.index()].push((id, g.target, g.degree));
    }

    // reach[r][v]: degrees of paths with exactly r letters from v to tgt.
    let mut reach: Vec<Vec<HashSet<i64>>> = vec![vec![HashSet::new(); n]; max_len + 1];
    reach[0][tgt.index()].insert(0);
    for r in 1..=max_len {
        for v in 0..n {
            let mut set = HashSet::new();
            for &(_, t, d) in &out_edges[v] {
                for x in &reach[r - 1][t.index()] {
                    set.insert(d + x);
                }
            }
            reach[r][v] = set;
        }
    }

    let parity_ok = |len: usize| parity.is_none_or(|q| Parity::of_len(len) == q);
    let feasible = |v: IdemId, used: usize, need: i64| {
        (0..=max_len - used).any(|r| parity_ok(used + r) && reach[r][v.index()].contains(&need))
    };

    let mut found = Vec::new();
    let mut stack: Vec<GenId> = Vec::new();
    // Letters are chosen in acting order, i.e. right to left in print.
    fn dfs(
        v: IdemId,
        deg: i64,
        ctx: &mut Dfs<'_>,
        stack: &mut Vec<GenId>,
        found: &mut Vec<Word>,
    ) {
        if v == ctx.tgt && deg == ctx.degree && !stack.is_empty() && (ctx.parity_ok)(stack.len()) {
            let letters: Vec<GenId> = stack.iter().rev().copied().collect();
            found.push(Word::from_raw(&letters, ctx.src, ctx.tgt));
        }
        if stack.len() == ctx.max_len {
            return;
        }
        for &(g, t, d) in &ctx.edges[v.index()] {
            if !(ctx.feasible)(t, stack.len() + 1, ctx.degree - deg - d) {
                continue;
            }
            stack.push(g);
            dfs(t, deg + d, ctx, stack, found);
            stack.pop();
        }
    }
    struct Dfs<'a> {
        src: IdemId,
        tgt: IdemId,
        degree: i64,
        max_len: usize,
        edges: &'a [Vec<(GenId, IdemId, i64)>],
        parity_ok: &'a dyn Fn(usize) -> bool,
        feasible: &'a dyn Fn(IdemId, usize, i64) -> bool,
    }
    let mut ctx = Dfs { src, tgt, degree, max_len, edges: &out_edges, parity_ok: &parity_ok, feasible: &feasible };
    if max_len > 0 {
        dfs(src, 0, &mut ctx, &mut stack, &mut found);
    }
    found.sort();
    found
}
