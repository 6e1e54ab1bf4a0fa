//! Preprojective roots by size, their least negating words `W_α`, and the
//! word `W_Ψ` of a finite set of preprojective roots.
//!
//! ```bash
//! cargo run --example preprojective_enumeration
//! ```

use preprojective::coxgraph::preset;
use preprojective::preproj::CoxeterContext;
use preprojective::rootsys::RootVec;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let ctx = CoxeterContext::standard(preset("affine-A", &["2"])?)?;
    let by_size = ctx.enumerate_preprojective(3)?;
    for (size, records) in &by_size {
        for rec in records {
            println!("size {size}  apex v{}  root {:<8} W = {}", rec.apex + 1, rec.root.to_string(), rec.principal.word());
        }
    }

    // W_α found from powers of c, then checked against the principal word
    for alpha in [RootVec::new(vec![3.0, 2.0, 2.0]), RootVec::new(vec![0.0, 0.0, 1.0])] {
        match ctx.w_alpha(&alpha, 10) {
            Ok(rec) => println!("W_({alpha}) = {} (size {})", rec.principal.word(), rec.size),
            Err(e) => println!("{alpha}: {e}"),
        }
    }

    let theta: Vec<RootVec> = by_size[&1].iter().map(|r| r.root.clone()).collect();
    let psi = ctx.w_psi(&theta, 3, None)?;
    println!("W for all size-1 roots: {} (independent: {})", psi.w_psi, psi.independent);
    let w = ctx.size_witnesses(&by_size[&2][0].root, 10)?;
    println!("size witnesses of {}: {w:?}", by_size[&2][0].root);
    Ok(())
}
