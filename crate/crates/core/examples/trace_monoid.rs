//! Words modulo commutation of non-adjacent letters: normal forms,
//! divisibility and right quotients.
//!
//! Words are written leftmost letter first and applied right to left, so
//! `TraceWord::from_written(vec![2, 0])` is `v3 v1` with `v1` applied first.
//!
//! ```bash
//! cargo run --example trace_monoid
//! ```

use preprojective::coxgraph::{preset, CoxeterGraph};
use preprojective::tracemon::{self, TraceWord};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let g = CoxeterGraph::new(preset("A", &["3"])?);

    // v1 and v3 commute in A3, v1 and v2 do not
    let x = TraceWord::from_written(vec![2, 0]);
    let y = TraceWord::from_written(vec![0, 2]);
    let z = TraceWord::from_written(vec![1, 0]);
    println!("{x} == {y}: {}", tracemon::equal(&g, &x, &y));
    println!("{z} == {}: {}", z.transpose(), tracemon::equal(&g, &z, &z.transpose()));

    let w = TraceWord::from_written(vec![2, 1, 0, 2]);
    let nf = tracemon::normal_form(&g, &w);
    let blocks: Vec<String> = nf.blocks().iter().map(|b| format!("{b:?}")).collect();
    println!("normal form of {w}: {} (blocks {})", nf.to_word(), blocks.join(" | "));

    // v2 is applied after v1 and v3, so it cannot be moved to the right end
    for d in [vec![2], vec![0, 2], vec![1, 0, 2], vec![1]] {
        let d = TraceWord::from_written(d);
        match tracemon::quotient(&g, &w, &d) {
            Ok(q) => println!("{w} = {q} * {d}"),
            Err(e) => println!("{d} does not divide {w}: {e}"),
        }
    }
    Ok(())
}
