//! Basic invariants of a numerical semigroup and its distinguished ideals.
//!
//!     cargo run --example semigroup_basics -- 4,6,9,11

use typeseq::NumericalSemigroup;

fn main() -> typeseq::Result<()> {
    let gens: Vec<i64> = match std::env::args().nth(1) {
        Some(arg) => typeseq::semigroup::parse_list(&arg)?,
        None => vec![4, 6, 9, 11],
    };
    let s = NumericalSemigroup::from_generators(&gens)?;
    let b = s.basic_invariants();
    println!("S = {}  ({})", s.encoding(), s);
    println!("minimal generators  {:?}", b.minimal_generators);
    println!("multiplicity {}  conductor {}  frobenius {}  genus {}", b.multiplicity, b.conductor, b.frobenius, b.genus);
    println!("gaps                {:?}", b.gaps);
    println!("pseudo-frobenius    {:?}  (type {})", b.pseudo_frobenius, b.cm_type);
    let p = s.predicates();
    println!("gorenstein {}  arf {}", p.is_gorenstein, p.is_arf);

    println!("m    = {}", s.maximal_ideal());
    println!("γ    = {}", s.conductor_ideal());
    println!("K    = {}", s.canonical_ideal());
    println!("θ_D  = {}", s.dedekind_different());
    println!("{} oversemigroups, {} children in the semigroup tree", s.oversemigroups().len(), s.children().len());
    Ok(())
}
