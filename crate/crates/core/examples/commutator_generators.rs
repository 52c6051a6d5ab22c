//! Iterated commutators generating the loop homology of Z_K for a flag K.

use momentangle::loops::{enumerate_commutator_generators, generator_count_check, generators_by_degree};
use momentangle::{corpus, Limits};

fn main() -> momentangle::Result<()> {
    let k = corpus::pentagon();
    let limits = Limits::default();
    let gens = enumerate_commutator_generators(&k, &limits)?;
    for (degree, gs) in generators_by_degree(&gens) {
        let rendered: Vec<String> = gs.iter().map(|g| g.to_string()).collect();
        println!("degree {degree}: {}", rendered.join(" "));
    }
    println!("counts match reduced H^0 of full subcomplexes: {}", generator_count_check(&k, &limits)?);
    Ok(())
}
