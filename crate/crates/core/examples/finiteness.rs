//! Finite Coxeter groups are exactly those where every simple root is
//! preprojective. The probe is a semi-decision bounded by `r_max`.
//!
//! ```bash
//! cargo run --example finiteness
//! ```

use preprojective::coxgraph::Preset;
use preprojective::preproj::{finite_type_oracle, CoxeterContext};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for p in Preset::catalog() {
        let matrix = p.matrix()?;
        let ctx = CoxeterContext::standard(matrix.clone())?;
        let r_max = ctx.default_r_max();
        let probe = ctx.finiteness_probe(r_max)?;
        let total: usize = ctx.enumerate_preprojective(r_max)?.values().map(Vec::len).sum();
        println!(
            "{:<18} probe {:<8} table {:<16} preprojective roots up to size {r_max}: {total}",
            p.name(),
            probe.to_string(),
            finite_type_oracle(&matrix).to_string()
        );
    }
    Ok(())
}
