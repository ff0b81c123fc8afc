//! The operators `Y(z)`, `Z(z)`, `α`, `α^{-1}` and the Lax operators
//! `L_R(z)` and `L(z)` as matrices of truncated Laurent polynomials in
//! `z^{1/2}` over U(g).
//!
//! ```text
//! cargo run --example laurent_operators -- sp 2,2
//! ```

use finite_w::laurent::{Frame, LaurentMatrix};
use finite_w::uea::Uea;
use finite_w::{Kind, Partition, Realization};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let kind = Kind::parse(args.first().map_or("sp", String::as_str)).ok_or("kind must be gl, so or sp")?;
    let lambda = Partition::parse(args.get(1).map_or("2,2", String::as_str))?;
    let u = Uea::new(Realization::new(lambda, kind)?);
    let f = Frame::full(&u);

    println!("shift matrix diagonal: {}", f.format_diagonal());
    println!("Y(z):\n{}", f.y().dump(&u));
    println!("Z(z):\n{}", f.z().dump(&u));

    let a = f.alpha();
    let one = a.mul(&f.alpha_inverse(), &u, None);
    assert_eq!(one, LaurentMatrix::identity(f.upper()));
    println!("alpha * alpha^-1 = 1");

    // exponents are doubled: -8 means z^-4
    let floor = -8;
    println!("L_R(z) 1 above z^{}:\n{}", floor / 2, f.lax_right(floor).map(|x| u.reduce(x).into_lift()).dump(&u));
    println!("L(z) 1 above z^{}:\n{}", floor / 2, f.lax(floor).map(|x| u.reduce(x).into_lift()).dump(&u));
    Ok(())
}
