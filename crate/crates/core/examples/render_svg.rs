//! Draws the standard tilting set as an SVG arc diagram.
//!
//!     cargo run --example render_svg -- 4 2 > figure.svg

use arck0::{render_svg, StandardTilting};

fn main() -> arck0::Result<()> {
    let mut args = std::env::args()
        .skip(1)
        .map(|s| s.parse::<usize>().expect("integer argument"));
    let n = args.next().unwrap_or(4);
    let depth = args.next().unwrap_or(2);
    let t = StandardTilting::build(n, &vec![0; n], depth)?;
    print!("{}", render_svg(t.model(), t.arcs(), 2 * depth as i64 + 2));
    Ok(())
}
