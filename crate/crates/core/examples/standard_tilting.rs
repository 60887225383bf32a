//! The standard cluster-tilting set: polygon, fan and leapfrogs.
//!
//!     cargo run --example standard_tilting -- 5 2

use arck0::StandardTilting;

fn main() -> arck0::Result<()> {
    let mut args = std::env::args()
        .skip(1)
        .map(|s| s.parse::<usize>().expect("integer argument"));
    let n = args.next().unwrap_or(5);
    let depth = args.next().unwrap_or(2);

    let t = StandardTilting::build(n, &vec![0; n], depth)?;
    println!(
        "n={n} depth={depth}: {} arcs, non-crossing: {}",
        t.len(),
        t.is_non_crossing()
    );
    for (i, a) in t.arcs().iter().enumerate() {
        println!("  {:<24} {a}", t.names_of(i).join(" = "));
    }
    let frontier: Vec<String> = t
        .frontier_indices()
        .into_iter()
        .map(|i| t.label(i))
        .collect();
    println!("frontier: {}", frontier.join(", "));
    Ok(())
}
