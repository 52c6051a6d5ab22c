//! The six-vertex projective plane: torsion in H^9(Z_K; Z) and a prime-dependent Betti table.

use momentangle::{bigraded_betti, corpus, CoefficientRing, Limits};

fn main() -> momentangle::Result<()> {
    let k = corpus::rp2();
    let limits = Limits::default();
    let z = bigraded_betti(&k, CoefficientRing::Integers, &limits)?;
    for (p, group) in z.total() {
        println!("H^{p}(Z_K; Z) = {group}");
    }
    for ring in [CoefficientRing::Rationals, CoefficientRing::prime(2)?, CoefficientRing::prime(3)?] {
        let t = bigraded_betti(&k, ring, &limits)?;
        println!("{ring}: total ranks {:?}", t.total_ranks());
    }
    Ok(())
}
