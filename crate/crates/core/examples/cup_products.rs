//! Products between full-subcomplex cohomology classes.

use momentangle::hochster::{basis_classes, cup_product, has_trivial_products};
use momentangle::{corpus, CoefficientRing, Limits, SimplicialComplex, VertexSet};

fn main() -> momentangle::Result<()> {
    let k = corpus::pentagon();
    let q = momentangle::field::Rationals;
    let i = VertexSet::from_labels([1, 3])?;
    let j = VertexSet::from_labels([2, 4, 5])?;
    let a = &basis_classes(&k, i, &q)?[0];
    let b = &basis_classes(&k, j, &q)?[0];
    let ab = cup_product(&k, a, b, &q)?;
    println!("H^{}(K_{i}) x H^{}(K_{j}) -> H^{}(K_{}): {:?}", a.degree, b.degree, ab.degree, ab.support, ab.cochain);

    let fields = CoefficientRing::default_fields();
    for (name, k) in [("pentagon", corpus::pentagon()), ("three points", SimplicialComplex::disjoint_points(3)?)] {
        let cert = has_trivial_products(&k, &fields, &Limits::default())?;
        println!("{name}: trivial products = {}", cert.trivial);
    }
    Ok(())
}
