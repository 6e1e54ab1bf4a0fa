//! The infinite dihedral group: every preprojective root is `(k+1, k)` and
//! its size grows with `k`, while `(k, k+1)` is never preprojective.
//!
//! ```bash
//! cargo run --example infinite_dihedral
//! ```

use preprojective::coxgraph::preset;
use preprojective::preproj::CoxeterContext;
use preprojective::rootsys::RootVec;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let ctx = CoxeterContext::standard(preset("I2", &["inf"])?)?;
    for root in ctx.system().enumerate_roots(12) {
        match ctx.preprojective_size(&root, 50)? {
            Some(r) => println!("{:<8} size {r}  W = {}", root.to_string(), ctx.w_alpha(&root, 50)?.principal.word()),
            None => println!("{:<8} not preprojective within 50 steps", root.to_string()),
        }
    }
    let stuck = RootVec::new(vec![0.0, 1.0]);
    println!("w_alpha({stuck}) -> {}", ctx.w_alpha(&stuck, 20).unwrap_err());
    Ok(())
}
