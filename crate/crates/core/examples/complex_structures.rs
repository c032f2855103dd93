// A complex structure from a coframe, checked with the Nijenhuis tensor,
// and one that fails.

use nilcx::exterior::parse_one_form;
use nilcx::liealg::catalog;
use nilcx::structures::{is_complex_structure, j_from_coframe};

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let g = catalog::l_plus_r(2)?;
    let thetas = vec![parse_one_form("w0 + i w1", 4)?, parse_one_form("w2 + i w3", 4)?];
    let j = j_from_coframe(&g, &thetas)?;
    let check = is_complex_structure(&g, &j)?;
    println!("J =\n{}integrable: {}", j.matrix, check.ok);
    assert!(check.ok);

    // Pairing w0 with w2 gives an almost complex structure that is not integrable.
    let bad = vec![parse_one_form("w0 + i w2", 4)?, parse_one_form("w1 + i w3", 4)?];
    let check = is_complex_structure(&g, &j_from_coframe(&g, &bad)?)?;
    println!("other coframe: integrable {}, first failing pair {:?}", check.ok, check.failing_pair);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()
}
