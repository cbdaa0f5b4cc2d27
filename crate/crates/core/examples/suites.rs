//! Runs every reproduction suite, or those named on the command line.

use homvec::suite::{run_suite, SUITES};

fn main() -> homvec::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let names: Vec<&str> = if args.is_empty() { SUITES.to_vec() } else { args.iter().map(String::as_str).collect() };
    for name in names {
        println!("{}", run_suite(name)?);
    }
    Ok(())
}
