//! K0 of the category with n accumulation points at several truncation depths.
//!
//!     cargo run --release --example k0_discrete

use arck0::compute_k0_cn;

fn main() -> arck0::Result<()> {
    println!(
        "{:>2} {:>5} {:>5} {:>9} {:>8}  K0",
        "n", "depth", "arcs", "relations", "frontier"
    );
    for n in 1..=6 {
        for depth in [2, 4, 8] {
            let r = compute_k0_cn(n, &vec![0; n], depth)?;
            println!(
                "{n:>2} {depth:>5} {:>5} {:>9} {:>8}  {}",
                r.arc_count, r.relation_count, r.frontier_count, r.presentation
            );
        }
    }
    // moving the anchors changes nothing
    let shifted = compute_k0_cn(3, &[-3, 0, 5], 6)?;
    println!("anchors -3,0,5: {}", shifted.presentation);
    Ok(())
}
