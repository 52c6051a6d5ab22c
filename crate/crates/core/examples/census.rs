//! Small census of flag complexes up to isomorphism.

use momentangle::census::{census, CensusScope};
use momentangle::{CoefficientRing, Limits};

fn main() -> momentangle::Result<()> {
    let rows = census(CensusScope::Flag, 6, &CoefficientRing::default_fields(), &Limits::default())?;
    let mng: Vec<_> = rows.iter().filter(|r| r.minimally_non_golod).collect();
    println!("{} flag complexes on at most 6 vertices, {} minimally non-Golod", rows.len(), mng.len());
    for r in mng {
        println!("  m={} facets={:?} cycle={}", r.complex.m, r.complex.maximal_faces, r.is_cycle);
    }
    Ok(())
}
