//! Poincaré series of the loop space and the Golod series identity.

use momentangle::loops::{golod_series_identity, loop_zk_series};
use momentangle::{corpus, default_truncation, CoefficientRing, Limits, SimplicialComplex};

fn main() -> momentangle::Result<()> {
    for (name, k) in [("pentagon", corpus::pentagon()), ("path-4", SimplicialComplex::path(4)?)] {
        let n = default_truncation(k.m());
        let series = loop_zk_series(&k, n)?;
        let id = golod_series_identity(&k, CoefficientRing::Rationals, n, &Limits::default())?;
        println!("{name}: {series}");
        println!("  expansion {:?}", series.expansion.iter().map(|c| c.to_string()).collect::<Vec<_>>());
        println!("  1/(1 - P) = {}  first residual: {:?}", id.golod_series, id.first_residual);
    }
    Ok(())
}
