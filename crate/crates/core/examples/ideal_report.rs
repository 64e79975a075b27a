//! a, b, d and the full identity suite for a single ideal. Defaults to the
//! ideal (38, 44, 50) of ⟨9,15,17,23,25,29,31⟩, whose a-invariant is −1.
//!
//!     cargo run --example ideal_report -- 3,4,5 4,5

use typeseq::invariants::decomposition_check;
use typeseq::semigroup::parse_list;
use typeseq::{NumericalSemigroup, RelativeIdeal};

fn main() -> typeseq::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let (gens, ideal) = match args.as_slice() {
        [g, i] => (parse_list(g)?, parse_list(i)?),
        _ => (vec![9, 15, 17, 23, 25, 29, 31], vec![38, 44, 50]),
    };
    let s = NumericalSemigroup::from_generators(&gens)?;
    let i = RelativeIdeal::from_generators(&s, &ideal)?;
    let rep = decomposition_check(&s, &i)?;
    println!("S = {}", rep.semigroup);
    println!("I = {}", rep.ideal);
    println!("a = {}  b = {}  d = {}", rep.a, rep.b, rep.d);
    println!(
        "l(R/I) = {}  l(I*/R) = {}  l(I**/I) = {}  c_I = {}  n_I = {}",
        rep.l_r_over_i, rep.l_dual_over_r, rep.l_bidual_over_i, rep.c_i, rep.n_i
    );
    println!("reflexive {}  integrally closed {}  ω-stable {}", rep.reflexive, rep.integrally_closed, rep.omega_stable);
    println!("complement of V^I: {:?}", rep.v_complement);
    println!("{} checks", rep.checks.len());
    for c in &rep.checks {
        println!("  {:<4} {:<32} {:>5} {:>5}", if c.pass { "ok" } else { "FAIL" }, c.id, c.lhs, c.rhs);
    }
    Ok(())
}
