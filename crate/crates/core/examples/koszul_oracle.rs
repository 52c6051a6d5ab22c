//! Cross-check of Hochster's sum against the multigraded Koszul complex.

use momentangle::{bigraded_betti, corpus, koszul_betti, CoefficientRing, Limits};

fn main() -> momentangle::Result<()> {
    let limits = Limits::default();
    for (name, k) in corpus::bundled().into_iter().filter(|(_, k)| k.m() <= 7) {
        for ring in [CoefficientRing::Rationals, CoefficientRing::prime(2)?] {
            let agree = bigraded_betti(&k, ring, &limits)? == koszul_betti(&k, ring, &limits)?;
            println!("{name:<20} {ring:<6} {}", if agree { "agree" } else { "DISAGREE" });
        }
    }
    Ok(())
}
