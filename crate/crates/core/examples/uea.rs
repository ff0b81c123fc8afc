//! PBW arithmetic in U(g), reduction modulo the left ideal generated by
//! `m - <f|m>` for `m` of grade at least one, and the loop filtration.
//!
//! ```text
//! cargo run --example uea
//! ```

use finite_w::lax::{extract_generators, ExtractOptions};
use finite_w::uea::{Uea, UeaElement};
use finite_w::verify::check_membership;
use finite_w::{Half, Kind, Partition, Realization};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let u = Uea::new(Realization::new(Partition::new(vec![2])?, Kind::Symplectic)?);
    let r = u.realization();
    for i in 0..r.dim() {
        println!("{}: grade {}", u.name(i), r.grade(i));
    }
    let g: Vec<UeaElement> = (0..r.dim()).map(UeaElement::generator).collect();

    // products are kept in PBW order, positive grades last
    let xy = u.multiply(&g[2], &g[0]);
    println!("{} * {} = {}", u.name(2), u.name(0), u.format(&xy));
    println!("[{}, {}] = {}", u.name(2), u.name(0), u.format(&u.commutator(&g[2], &g[0])));
    println!("{} * {} mod J = {}", u.name(0), u.name(2), u.format(u.reduce(&u.multiply(&g[0], &g[2])).lift()));

    // the z^-2 coefficient of L(z) is invariant
    let recs = extract_generators(&u, ExtractOptions::default())?;
    let w = &recs.last().ok_or("no records")?.value;
    println!("w = {}", u.format(w.lift()));
    println!("membership: {:?}", check_membership(&u, w)?);
    for i in r.positive_part() {
        println!("[{}, w] = {}", u.name(i), u.format(u.adjoint_action(i, w)?.lift()));
    }

    let (top, sym) = u.gr_symbol(w.lift())?;
    println!("filtration degree {top}, symbol {}", u.format(&sym));
    println!("degree 0 part: {}", u.format(&u.homogeneous_part(w.lift(), Half::ZERO)));

    // a Cartan element alone is not
    let v = check_membership(&u, &u.reduce(&g[1]))?;
    println!("{} alone: {}", u.name(1), v.witness().map_or("member".into(), |w| w.to_string()));
    Ok(())
}
