//! Marked points, cyclic betweenness and interior counts.
//!
//!     cargo run --example circle_order

use arck0::{CircleModel, PointIndex};

fn main() -> arck0::Result<()> {
    let m = CircleModel::new(2)?;
    let a = m.point(0, 5)?;
    let b = m.point(1, -3)?;
    let c = m.point(0, 2)?;

    // going anticlockwise from (0,5) we pass an accumulation point, all of
    // segment 1, another accumulation point, and only then reach (0,2)
    println!("{b} in ({a}, {c}): {}", m.in_open_interval(a, b, c)?);
    println!("{c} in ({a}, {b}): {}", m.in_open_interval(a, c, b)?);

    for (x, y) in [((0, 0), (0, 2)), ((0, 0), (0, 1)), ((0, 0), (1, 0))] {
        let (x, y) = (PointIndex::from(x), PointIndex::from(y));
        println!("interior {x}..{y}: {:?}", m.interior_count(x, y)?);
    }

    let pts = m.window_points(2);
    println!(
        "window 2: {}",
        pts.iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(" ")
    );
    Ok(())
}
