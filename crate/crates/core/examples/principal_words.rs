//! Principal words `W_{r,x}`, recognition of principal words, and the
//! decomposition of an admissible word into independent principal factors.
//!
//! ```bash
//! cargo run --example principal_words
//! ```

use preprojective::admissible::{independent_decomposition, is_principal, principal_word, AdmissibleWord};
use preprojective::coxgraph::{preset, CoxeterGraph, Orientation};
use preprojective::tracemon::TraceWord;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let g = CoxeterGraph::new(preset("D", &["4"])?);
    let o = Orientation::all_acyclic(&g).remove(0);
    println!("orientation arrows: {:?}", o.arrows().collect::<Vec<_>>());

    for r in 1..=3 {
        for x in 0..g.rank() {
            let p = principal_word(r, x, &o)?;
            let blocks: Vec<String> = p.canonical_form().iter().map(|b| b.to_string()).collect();
            println!("W_({r},v{}) = {:<28} blocks {}", x + 1, p.word().to_string(), blocks.join(" | "));
        }
    }

    let sinks: Vec<usize> = o.sinks().iter().collect();
    let x = AdmissibleWord::new(TraceWord::from_written(sinks.clone()), &o)?;
    println!("{x}: {:?}", is_principal(&x));
    let parts: Vec<String> = independent_decomposition(&x)?
        .iter()
        .map(|p| format!("W_({},v{})", p.size(), p.apex() + 1))
        .collect();
    println!("{x} is the join of {}", parts.join(", "));
    Ok(())
}
