//! Crossing arcs and the two triangles they induce.
//!
//!     cargo run --example crossing_triangles

use arck0::{ext1_dim, induced_triangles, quadrilateral_sides, Arc, PointIndex};

fn arc(a: (usize, i64), b: (usize, i64)) -> Arc {
    Arc::new(PointIndex::from(a), PointIndex::from(b)).expect("valid arc")
}

fn main() -> arck0::Result<()> {
    let pairs = [
        (arc((0, 0), (0, 4)), arc((0, 2), (0, 6))),
        (arc((0, 0), (0, 2)), arc((0, 1), (0, 4))),
        (arc((0, 3), (2, -1)), arc((1, 0), (2, 4))),
    ];
    for (m, n) in pairs {
        println!("{m} x {n}: dim Ext1 = {}", ext1_dim(&m, &n));
        let sides = quadrilateral_sides(&m, &n)?;
        for s in sides {
            match s.arc() {
                Some(a) => println!("  side {a}"),
                None => println!("  side 0"),
            }
        }
        let (t1, t2) = induced_triangles(&m, &n)?;
        for t in [t1, t2] {
            let mid: Vec<String> = t.middle.iter().map(ToString::to_string).collect();
            let mid = if mid.is_empty() {
                "0".to_string()
            } else {
                mid.join(" + ")
            };
            println!("  {} -> {mid} -> {} -> Σ{}", t.first, t.third, t.first);
        }
    }

    let a = arc((0, 0), (0, 4));
    let b = arc((0, 1), (0, 3));
    println!("{a} x {b} (nested): dim Ext1 = {}", ext1_dim(&a, &b));
    Ok(())
}
