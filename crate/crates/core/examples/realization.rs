//! A classical Lie algebra in the basis adapted to a pyramid: grading,
//! brackets, the nilpotent `f` and the centralizer `g^f`.
//!
//! ```text
//! cargo run --example realization -- so 3,1
//! ```

use finite_w::liealg::bracket_combinations;
use finite_w::scalar::fmt_q;
use finite_w::{Kind, Partition, Realization};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let kind = Kind::parse(args.first().map_or("so", String::as_str)).ok_or("kind must be gl, so or sp")?;
    let lambda = Partition::parse(args.get(1).map_or("3,1", String::as_str))?;
    let r = Realization::new(lambda, kind)?;
    println!("{}: dim {} acting on a space of dimension {}", r.id(), r.dim(), r.n());

    for i in 0..r.dim() {
        let x = r.element(i);
        println!("  f_{{{},{}}}  grade {:>4}  <f|.> = {}", x.a, x.b, r.grade(i), fmt_q(r.chi(i)));
    }

    // the structure constants agree with matrix commutators
    let mut checked = 0;
    for i in 0..r.dim() {
        for j in 0..r.dim() {
            assert_eq!(r.bracket(i, j), &r.bracket_by_matrices(i, j));
            checked += 1;
        }
    }
    println!("{checked} brackets agree with matrix commutators");

    let basis = r.centralizer_basis();
    println!("g^f has dimension {} (kernel of ad f: {})", basis.len(), r.centralizer_dim_by_kernel());
    for &(i, j, t) in &basis {
        let z = r.zeta(i, j, t)?;
        let terms: Vec<String> = z.iter().map(|(m, c)| {
            let x = r.element(*m);
            format!("{} f_{{{},{}}}", fmt_q(c), x.a, x.b)
        }).collect();
        println!("  zeta_{i}^{{{j},{t}}} = {}", terms.join(" + "));
    }
    if let [(i, j, t), (k, l, s), ..] = basis[..] {
        let b = bracket_combinations(&r, &r.zeta(i, j, t)?, &r.zeta(k, l, s)?);
        println!("[zeta_{i}^{{{j},{t}}}, zeta_{k}^{{{l},{s}}}] has {} terms", b.len());
    }
    Ok(())
}
