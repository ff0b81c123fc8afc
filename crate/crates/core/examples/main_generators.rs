//! For gl, the coefficients of `z^{-b}` in the block of `L_R(z)` between
//! the two largest highest weights are invariant once `b > ξ/2 - l`, and
//! not necessarily at the boundary.
//!
//! ```text
//! cargo run --example main_generators -- 4,1
//! ```

use finite_w::lax::{extract_main, main_orders};
use finite_w::uea::Uea;
use finite_w::verify::check_invariance;
use finite_w::{Half, Kind, Partition, Realization};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let lambda = Partition::parse(&std::env::args().nth(1).unwrap_or_else(|| "4,1".into()))?;
    let u = Uea::new(Realization::new(lambda, Kind::Gl)?);
    let r = u.realization();
    let p_max = Half::int(r.pyramid().lambda1() as i32);
    let orders = main_orders(r, p_max);
    println!("{}: orders {:?}", r.id(), orders.iter().map(Half::to_string).collect::<Vec<_>>());
    for rec in extract_main(&u, &orders, -12)? {
        println!("b={} c={} d={}: invariant {}", rec.p, rec.c, rec.d, check_invariance(&u, &rec.value)?.passed());
    }

    // one step below the admissible range
    let below = orders[0] - if r.even_grading() { Half::int(1) } else { Half(1) };
    for rec in extract_main(&u, &[below], -12)? {
        match check_invariance(&u, &rec.value)?.witness() {
            Some(w) => println!("b={below}: not invariant, {w}"),
            None => println!("b={below}: invariant here"),
        }
    }
    Ok(())
}
