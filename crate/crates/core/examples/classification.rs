//! Tags every semigroup of bounded conductor by how b(γ) compares with the
//! type, and lists the sporadic b = r cases.
//!
//!     cargo run --release --example classification -- 30

use typeseq::census::{classification_census, CensusQuery};
use typeseq::invariants::classify_b;
use typeseq::NumericalSemigroup;

fn main() -> typeseq::Result<()> {
    let bound = std::env::args().nth(1).map_or(24, |a| a.parse().expect("integer conductor bound"));
    let rep = classification_census(&CensusQuery::max_conductor(bound))?;
    println!("conductor <= {bound}: {} semigroups, {} violations", rep.semigroups, rep.violations.len());
    for (tag, n) in &rep.classification {
        println!("  {tag:<22} {n}");
    }
    println!("case (j): {:?}", rep.case_j);

    for enc in ["0,4,8,9,12,13|16", "0,5,6,7|10", "0,6,7,12,13,14|18"] {
        let s = NumericalSemigroup::parse_encoding(enc)?;
        let cl = classify_b(&s);
        println!("{s}: {} {:?}", cl.tag, cl.parameters);
    }
    Ok(())
}
