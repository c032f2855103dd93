// The double g ⊕ g*: pairing, Courant bracket, and the two canonical
// generalized complex structures with their types.

use nilcx::exact::Scalar;
use nilcx::exterior::{parse_form, parse_one_form};
use nilcx::liealg::catalog;
use nilcx::structures::*;

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let g = catalog::l_plus_r(2)?;
    let (_, plus, minus) = pairing_signature(4);
    println!("pairing signature ({plus}, {minus})");

    let e = |k: usize| (0..4).map(|i| Scalar::int((i == k) as i64)).collect::<Vec<_>>();
    let x0 = GeneralizedVector::vector(e(0));
    let w2 = GeneralizedVector::covector(e(2));
    let c = courant(&g, &x0, &w2);
    println!("[X0, w2] = vector {:?}, form {:?}", c.vec, c.form);

    let thetas = vec![parse_one_form("w0 + i w1", 4)?, parse_one_form("w2 + i w3", 4)?];
    let jj = gcs_from_complex(&g, &j_from_coframe(&g, &thetas)?)?;
    let r = gcs_validate(&g, &jj)?;
    println!("from J: valid {}, type {:?}", r.valid(), r.type_k);

    let w = parse_form("w0^w3 + w1^w2", 4, 2)?;
    assert!(is_symplectic(&g, &w)?);
    let r = gcs_validate(&g, &gcs_from_symplectic(&g, &w)?)?;
    println!("from ω: valid {}, type {:?}", r.valid(), r.type_k);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()
}
