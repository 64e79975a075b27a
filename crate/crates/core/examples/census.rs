//! Full verification census over all semigroups of bounded genus.
//!
//!     cargo run --release --example census -- 10 2

use typeseq::census::{verify_theorems, CensusQuery};

fn main() -> typeseq::Result<()> {
    let mut args = std::env::args().skip(1).map(|a| a.parse::<u32>().expect("integer argument"));
    let genus = args.next().unwrap_or(8);
    let window = args.next().unwrap_or(2);
    let rep = verify_theorems(&CensusQuery::max_genus(genus).window(window))?;
    println!("genus <= {genus}, window {window}");
    println!("semigroups per genus {:?}", rep.semigroups_per_genus);
    println!("{} ideals, {} overring pairs, {} checks in {:?}", rep.ideals, rep.overring_pairs, rep.checks_run(), rep.wall_time);
    let mut busiest: Vec<_> = rep.checks.iter().collect();
    busiest.sort_by_key(|(_, t)| std::cmp::Reverse(t.pass + t.fail));
    for (id, t) in busiest.iter().take(8) {
        println!("  {id:<28} pass {:>8} fail {}", t.pass, t.fail);
    }
    println!("{} violations", rep.violations.len());
    rep.write_violations_csv(std::io::stdout())?;
    Ok(())
}
