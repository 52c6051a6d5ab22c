//! Golodness of flag complexes through chordality of the 1-skeleton.

use momentangle::golod::{is_chordal, perfect_elimination_ordering};
use momentangle::{
    corpus, is_golod, is_minimally_non_golod, maximal_face_order, wedge_profile, CoefficientRing, Limits,
};

fn main() -> momentangle::Result<()> {
    let limits = Limits::default();
    let fields = CoefficientRing::default_fields();
    for (name, k) in corpus::bundled() {
        let g = k.one_skeleton();
        let report = is_golod(&k, &fields, &limits)?;
        let mng = is_minimally_non_golod(&k, &fields, &limits)?;
        print!("{name:<18} flag={:<5} chordal={:<5} golod={:<5} mng={:<5}", k.is_flag(), is_chordal(&g), report.golod_over_all(), mng.minimally_non_golod);
        if let Some(w) = wedge_profile(&k, &limits)? {
            print!(" wedge={:?}", w.sphere_counts);
        }
        if let (Some(peo), Ok(Some(order))) = (perfect_elimination_ordering(&g), maximal_face_order(&k, &limits)) {
            print!(" peo={:?} facets={}", peo.0, order.len());
        }
        println!();
    }
    Ok(())
}
