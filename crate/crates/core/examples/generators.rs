//! Generators of U(g, f) from the truncated Lax operators, with their
//! graded symbols in `g^f`.
//!
//! ```text
//! cargo run --example generators -- so 5,3
//! ```

use finite_w::lax::{extract_generators, ExtractOptions};
use finite_w::uea::Uea;
use finite_w::verify::{check_generation, check_gr_zeta, check_membership, predict_zeta};
use finite_w::{Kind, Partition, Realization};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let kind = Kind::parse(args.first().map_or("so", String::as_str)).ok_or("kind must be so or sp")?;
    let lambda = Partition::parse(args.get(1).map_or("5,3", String::as_str))?;
    let u = Uea::new(Realization::new(lambda, kind)?);
    let r = u.realization();

    let records = extract_generators(&u, ExtractOptions::default())?;
    for rec in &records {
        let z = predict_zeta(r, rec)?;
        let sgn = if z.sign > 0 { "+" } else { "-" };
        // so/sp kill some zeta_i^{i,t}; the symbol then drops below p - 1
        let zero = if r.zeta(z.i, z.j, z.t).is_err() { " (zero)" } else { "" };
        println!(
            "{} c={} d={} k={} p={}: gr = {sgn}zeta_{}^{{{},{}}}{zero}  member {}  symbol {}",
            rec.mode,
            rec.c,
            rec.d,
            rec.k,
            rec.p,
            z.i,
            z.j,
            z.t,
            check_membership(&u, &rec.value)?.passed(),
            check_gr_zeta(&u, rec)?.passed(),
        );
    }
    println!("symbols generate g^f: {}", check_generation(&u, &records)?.passed());

    if let Some(rec) = records.last() {
        let json = serde_json::to_string(&rec.to_json(r))?;
        println!("{json}");
    }
    Ok(())
}
