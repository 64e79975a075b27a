//! Ideals with a(I) < 0: a bounded window search, then the translation-class
//! scan of ⟨9,15,17,23,25,29,31⟩.

use typeseq::census::{search_negative_a, CensusQuery, SearchMode};
use typeseq::NumericalSemigroup;

fn main() -> typeseq::Result<()> {
    let hits = search_negative_a(&CensusQuery::max_genus(10).window(3), SearchMode::Window)?;
    println!("genus <= 10, window 3: {} hits", hits.len());
    for h in hits.iter().take(5) {
        println!("  S = {}  I = {}  a = {}", h.semigroup, h.ideal, h.a);
    }

    let s = NumericalSemigroup::from_generators(&[9, 15, 17, 23, 25, 29, 31])?;
    let hits = search_negative_a(&CensusQuery::explicit(vec![s]), SearchMode::Classes)?;
    println!("classes of {}: {} with a < 0", hits.first().map_or("", |h| h.semigroup.as_str()), hits.len());
    for h in &hits {
        println!("  class {}  a = {}", h.class, h.a);
    }
    Ok(())
}
