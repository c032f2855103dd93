// Pure spinors: Ω ∧ exp(B + iω), its annihilator, the integrability test,
// and recovering the spinor line from the annihilator.

use nilcx::exterior::{parse_form, parse_one_form, PForm};
use nilcx::liealg::catalog;
use nilcx::spinor::*;

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let g = catalog::l_plus_r(2)?;
    let thetas = vec![parse_one_form("w0 + i w1", 4)?, parse_one_form("w2 + i w3", 4)?];
    let zero = PForm::zero(4, 2);
    let rho = spinor_from_data(4, &thetas, &zero, &zero);
    let ann = annihilator(&rho)?;
    println!("ρ = {rho}");
    println!("annihilator dim {}, pure {}, L ∩ L̄ = 0: {}", ann.space.dim(), ann.pure, ann.space.meets_conjugate_trivially());
    println!("dρ = 0: {}", integrability(&g, &rho)?.closed);
    let back = spinor_line_from_l(4, &ann.space)?;
    assert!(back.projectively_equal(&rho));

    // Type 0: exp(iω) for a symplectic ω.
    let w = parse_form("w0^w3 + w1^w2", 4, 2)?;
    let rho = spinor_from_data(4, &[], &zero, &w);
    let i = integrability(&g, &rho)?;
    println!("exp(iω) = {rho}; closed {}", i.closed);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()
}
