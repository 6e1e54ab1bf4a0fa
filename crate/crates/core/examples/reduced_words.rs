//! Lengths, reduced words and the left weak order. An admissible word is
//! reduced exactly when it is `W_Ψ` for an independent set `Ψ` of
//! preprojective roots.
//!
//! ```bash
//! cargo run --example reduced_words
//! ```

use preprojective::admissible::enumerate;
use preprojective::coxgraph::preset;
use preprojective::preproj::CoxeterContext;
use preprojective::weakorder::{self, Classification};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let ctx = CoxeterContext::standard(preset("A", &["3"])?)?;
    let rs = ctx.system();
    for x in enumerate(ctx.orientation(), 7) {
        let l = weakorder::length(rs, &rs.element_of_word(x.word()))?;
        match weakorder::classify_admissible(&ctx, &x)? {
            Classification::Reduced(psi) => {
                let roots: Vec<String> = psi.roots.iter().map(|r| format!("({})", r.root)).collect();
                println!("{:<16} reduced, Psi = {}", x.to_string(), roots.join(" "));
            }
            Classification::NotReduced => {
                println!("{:<16} length {} < {}, reduced form {}", x.to_string(), l.length, x.len(), l.witness);
            }
        }
    }

    let u = rs.element_of_word(&preprojective::tracemon::TraceWord::from_written(vec![0]));
    let c = ctx.coxeter_element();
    println!("s1 <=_L c: {}", weakorder::leq_left(rs, &u, c)?);
    Ok(())
}
