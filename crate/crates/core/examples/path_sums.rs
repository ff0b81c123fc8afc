//! Coefficients of `L(z)` and `L_R(z)` two ways: from the operator series
//! and from the explicit sums over paths in the pyramid.
//!
//! ```text
//! cargo run --example path_sums -- so 3,1
//! ```

use finite_w::laurent::Frame;
use finite_w::lax::{enumerate_paths, pathsum_l, pathsum_lr, LaxOperators, PathKind};
use finite_w::uea::Uea;
use finite_w::{Half, Kind, Partition, Realization};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let kind = Kind::parse(args.first().map_or("so", String::as_str)).ok_or("kind must be gl, so or sp")?;
    let lambda = Partition::parse(args.get(1).map_or("3,1", String::as_str))?;
    let u = Uea::new(Realization::new(lambda, kind)?);
    let f = Frame::full(&u);
    let ops = LaxOperators::new(Frame::full(&u), -10);

    let mut agree = 0;
    for c in f.top_boxes() {
        for d in f.bottom_boxes() {
            for p in 0..=4 {
                let p = Half::int(p);
                let series = ops.l_coeff(c, d, p)?;
                assert_eq!(series, pathsum_l(&f, c, d, p)?);
                agree += 1;
                if !series.is_zero() {
                    let n = enumerate_paths(&f, PathKind::L, c, d, p).len();
                    println!("L  c={c} d={d} z^-{p}: {n} paths, {}", u.format(series.lift()));
                }
            }
        }
    }
    for c in f.lower() {
        for d in f.bottom_boxes() {
            for p in 1..=4 {
                let p = Half::int(p);
                assert_eq!(ops.lr_coeff(c, d, p)?, pathsum_lr(&f, c, d, p)?);
                agree += 1;
            }
        }
    }
    println!("{agree} coefficients agree");
    Ok(())
}
