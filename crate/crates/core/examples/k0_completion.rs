//! K0 of the completion as the cokernel of f, and the classes behind f.
//!
//!     cargo run --example k0_completion

use arck0::{class_same_segment, compute_k0_completed, f_matrix, CompletionModel};

fn main() -> arck0::Result<()> {
    let n = 3;
    let cm = CompletionModel::new(n)?;
    println!(
        "host has {} segments, kernel segments {:?}",
        cm.host().num_segments(),
        cm.kernel_segments()
    );
    for i in 1..=n {
        let g = cm.kernel_generator_arc(i)?;
        let c = class_same_segment(2 * n, &g)?;
        let terms: Vec<String> = c
            .labels
            .iter()
            .zip(&c.coefficients)
            .filter(|(_, &k)| k != 0)
            .map(|(l, k)| format!("{k:+}[{l}]"))
            .collect();
        println!("  [{g}] = {}", terms.join(" "));
    }
    println!("f = {}", f_matrix(n).to_json());

    for n in 1..=6 {
        println!("K0 of the completion, n={n}: {}", compute_k0_completed(n)?);
    }
    Ok(())
}
