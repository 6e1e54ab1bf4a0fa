//! Admissible words over an acyclic orientation: each letter must be a sink
//! when it is applied. They form a distributive lattice ordered by
//! multiplicity vectors.
//!
//! ```bash
//! cargo run --example admissible_lattice
//! ```

use preprojective::admissible::{complete_word, enumerate, AdmissibleWord};
use preprojective::coxgraph::{preset, CoxeterGraph, Orientation};
use preprojective::tracemon::TraceWord;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let g = CoxeterGraph::new(preset("A", &["3"])?);
    // v1 <- v2 <- v3: only v1 is a sink
    let o = Orientation::from_arrows(&g, &[(1, 0), (2, 1)])?;
    println!("complete word K = {}", complete_word(&o)?);

    let words = enumerate(&o, 4);
    println!("{} admissible words of length <= 4:", words.len());
    for x in &words {
        println!("  {:<12} multiplicity {:?}", x.to_string(), x.multiplicity());
    }

    let x = AdmissibleWord::new(TraceWord::from_written(vec![1, 0]), &o)?; // v2 v1
    let y = AdmissibleWord::new(TraceWord::from_written(vec![0, 1, 0]), &o)?; // v1 v2 v1
    let z = AdmissibleWord::new(TraceWord::from_written(vec![2, 1, 0]), &o)?; // v3 v2 v1
    println!("{x} <= {y}: {}", x.leq(&y)?);
    println!("{y} meet {z} = {}", y.meet(&z)?);
    println!("{y} join {z} = {}", y.join(&z)?);

    let f = y.factor(&z)?;
    println!("{y} = {} * {}", f.left, f.meet);
    println!("{z} = {} * {}", f.right, f.meet);

    let bad = TraceWord::from_written(vec![0, 1]);
    println!("{bad} admissible: {}", AdmissibleWord::new(bad.clone(), &o).is_ok());
    Ok(())
}
