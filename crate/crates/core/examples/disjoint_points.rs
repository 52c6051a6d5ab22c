//! m disjoint points: the wedge of spheres against the closed form.

use momentangle::loops::disjoint_points_profile;
use momentangle::{wedge_profile, Limits, SimplicialComplex};

fn main() -> momentangle::Result<()> {
    for m in 2..=8 {
        let k = SimplicialComplex::disjoint_points(m)?;
        let computed = wedge_profile(&k, &Limits::default())?.expect("points form a chordal flag complex");
        let closed = disjoint_points_profile(m)?;
        assert_eq!(computed, closed);
        println!("m={m}: {:?} ({} spheres)", computed.sphere_counts, computed.total_spheres());
    }
    Ok(())
}
