//! Brute-force quotient by every Euler relation visible in a window, and the
//! cross-check of the completion against it.
//!
//!     cargo run --release --example euler_oracle

use std::time::Instant;

use arck0::{verify_f_oracle, EulerOracle};

fn main() -> arck0::Result<()> {
    for (n, w) in [(1, 4), (1, 10), (2, 6), (3, 5), (4, 4)] {
        let t = Instant::now();
        let o = EulerOracle::new(n, w)?;
        println!(
            "n={n} window={w}: {} arcs, {} relations -> {} [{:.1?}]",
            o.arcs().len(),
            o.relation_count(),
            o.presentation(),
            t.elapsed()
        );
    }
    for n in [1, 2, 3] {
        let r = verify_f_oracle(n, 6)?;
        println!(
            "completion n={n}: formula {} / oracle {} / match {}",
            r.expected, r.oracle, r.matches
        );
    }
    Ok(())
}
