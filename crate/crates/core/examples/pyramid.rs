//! Pyramid of a partition, weights of its boxes and the truncation windows.
//!
//! ```text
//! cargo run --example pyramid -- 6,3,3,2
//! ```

use finite_w::{Half, Partition, Pyramid};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let arg = std::env::args().nth(1).unwrap_or_else(|| "6,3,3,2".into());
    let p = Pyramid::new(Partition::parse(&arg)?);
    println!("{}", p.render());

    println!("box  row  col   weight");
    for a in p.boxes() {
        println!("{a:>3}  {:>3}  {:>4}  {:>6}", p.row(a), p.col(a).to_string(), p.delta_vector(a)?.to_string());
    }

    // windows [-k, k] of V, one per highest weight
    let mut k = Half(p.lambda1() as i32 - 1);
    while k >= Half::ZERO {
        let (s, e, r) = p.truncation_bounds(k)?;
        println!("k = {k}: columns {s}..{e}, {r} of them");
        k = k - Half(2);
    }
    Ok(())
}
