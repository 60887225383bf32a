//! Exchange pairs, the relations they give, and mutation.
//!
//!     cargo run --example exchange_and_mutation

use arck0::{k0_of_tilting, Arc, StandardTilting};

fn sum(v: &[Arc]) -> String {
    if v.is_empty() {
        "0".into()
    } else {
        v.iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

fn main() -> arck0::Result<()> {
    let t = StandardTilting::build(5, &[0; 5], 3)?;
    for name in ["Z1", "Z3", "X3", "L2[2]"] {
        let i = t.index_of(name)?;
        let p = t.exchange_pair(i)?;
        println!("{name} = {}  <->  {}", p.m, p.m_star);
        println!("  B_m* = {}", sum(&p.b_m_star));
        println!("  B_m  = {}", sum(&p.b_m));
    }

    println!("relations from the polygon and fan:");
    for r in t.palu_relations() {
        let src = t.label(r.source);
        if src.starts_with('Z') || src.starts_with('X') {
            let terms: Vec<String> = r
                .coefficients
                .iter()
                .map(|&(i, k)| format!("{k:+}[{}]", t.label(i)))
                .collect();
            println!("  {src}: {} = 0", terms.join(" "));
        }
    }

    let x3 = t.index_of("X3")?;
    let flipped = t.mutate(x3)?;
    println!(
        "after flipping X3: X3* = {}, non-crossing: {}",
        flipped.arcs()[x3],
        flipped.is_non_crossing()
    );
    println!("K0 still {}", k0_of_tilting(&flipped)?.presentation);
    println!("flip twice restores the set: {}", flipped.mutate(x3)? == t);
    Ok(())
}
