//! Projective roots of a Coxeter element, computed by the transpose formula
//! and by summing path weights in the quiver, plus the `-c` bijection onto
//! the projective roots of `c^-1`.
//!
//! ```bash
//! cargo run --example projective_roots
//! ```

use preprojective::coxgraph::{preset, VertexOrder};
use preprojective::preproj::CoxeterContext;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for (name, params, order) in [("A", "3", vec![0, 1, 2]), ("B", "3", vec![1, 0, 2]), ("H", "3", vec![2, 1, 0])] {
        let ctx = CoxeterContext::from_matrix(preset(name, &[params])?, VertexOrder::new(order)?)?;
        println!("{name}{params}, arrows {:?}", ctx.orientation().arrows().collect::<Vec<_>>());
        let inverse = ctx.inverse_context();
        for s in 0..ctx.rank() {
            let by_transpose = ctx.projective_root_by_transpose(s)?;
            let by_paths = ctx.projective_root_by_paths(s);
            let image = -ctx.coxeter_element().apply(&by_transpose);
            println!(
                "  s{}: {by_transpose}  (paths: {by_paths})  -c maps it to {image}, projective for c^-1: {}",
                s + 1,
                inverse.projective_root_by_transpose(s)?
            );
        }
    }
    Ok(())
}
