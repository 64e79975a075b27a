//! Lengths of all oversemigroups of ⟨4,6,9,11⟩ through their conductor
//! ideals.

use typeseq::invariants::SemigroupContext;
use typeseq::NumericalSemigroup;

fn main() -> typeseq::Result<()> {
    let s = NumericalSemigroup::from_generators(&[4, 6, 9, 11])?;
    let ctx = SemigroupContext::new(&s);
    println!("S = {s}");
    println!("{:<24} {:>7} {:>3} {:>3}  conductor ideal", "T", "l(T/S)", "i0", "d");
    for t in s.oversemigroups() {
        let rep = ctx.overring_report(&t)?;
        assert!(rep.checks.iter().all(|c| c.pass));
        println!(
            "{:<24} {:>7} {:>3} {:>3}  {}",
            rep.oversemigroup,
            rep.length,
            rep.i0,
            rep.d,
            rep.conductor_ideal.as_deref().unwrap_or("-")
        );
    }
    Ok(())
}
