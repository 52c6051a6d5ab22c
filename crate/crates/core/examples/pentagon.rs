//! Cohomology of the moment-angle complex over the pentagon.

use momentangle::{bigraded_betti, corpus, zk_poincare_polynomial, CoefficientRing, Limits};

fn main() -> momentangle::Result<()> {
    let k = corpus::pentagon();
    let limits = Limits::default();
    let table = bigraded_betti(&k, CoefficientRing::Integers, &limits)?;
    for (&(i, two_j), group) in table.entries() {
        println!("H^(-{i},{two_j}) = {group}");
    }
    let p = zk_poincare_polynomial(&k, CoefficientRing::Rationals, &limits)?;
    println!("Poincaré polynomial: {}", p.full);
    Ok(())
}
