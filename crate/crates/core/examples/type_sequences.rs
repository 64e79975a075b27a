//! Type sequences computed through duals and through canonical products,
//! for a handful of semigroups.

use typeseq::invariants::{extended_type_sequence, type_sequence, type_sequence_via_canonical};
use typeseq::NumericalSemigroup;

fn main() -> typeseq::Result<()> {
    let samples: [&[i64]; 6] = [
        &[3, 4, 5],
        &[4, 5, 6, 7],
        &[4, 6, 9, 11],
        &[5, 6, 7],
        &[6, 7, 8, 9, 10],
        &[9, 15, 17, 23, 25, 29, 31],
    ];
    println!("{:<28} {:>3} {:>3} {:>3}  type sequence", "S", "c", "δ", "r");
    for gens in samples {
        let s = NumericalSemigroup::from_generators(gens)?;
        let ts = type_sequence(&s);
        assert_eq!(ts, type_sequence_via_canonical(&s));
        println!(
            "{:<28} {:>3} {:>3} {:>3}  {:?}",
            format!("{gens:?}"),
            s.conductor(),
            s.genus(),
            ts.cm_type(),
            ts.values()
        );
        let sum: i64 = ts.values().iter().sum();
        assert_eq!(sum, s.genus());
    }
    let s = NumericalSemigroup::from_generators(&[4, 6, 9, 11])?;
    println!("extended past n for {}: {:?}", s, extended_type_sequence(&s, s.n() + 3));
    Ok(())
}
