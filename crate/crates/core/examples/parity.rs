//! An arc inside one segment has non-zero class iff it has an odd number of
//! interior points.
//!
//!     cargo run --example parity

use arck0::{euler_oracle, fountain_arc, parity_class, PointIndex};

fn main() -> arck0::Result<()> {
    let o = euler_oracle(1, 8)?;
    let anchor = PointIndex::new(0, -4);
    for i in 1..=8 {
        let w = fountain_arc(anchor, i)?;
        let class = o.class_of(&w).expect("in window");
        println!(
            "W_{i} = {w}: closed form {:?}, oracle class {:?}",
            parity_class(i)?,
            class.0
        );
    }
    Ok(())
}
