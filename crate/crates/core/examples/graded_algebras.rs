// Associated graded algebras and the normalization of the un-normalized
// dimension-6 t3 family.

use nilcx::exact::Scalar;
use nilcx::liealg::{catalog, change_basis, graded, print_algebra, t3_normalization};

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let g = catalog::t3(&Scalar::int(1), &Scalar::int(2));
    let gr = graded(&g)?;
    println!("gr(t3(1, 2)):\n{}", print_algebra(&gr));

    let t = t3_normalization(&Scalar::int(1), &Scalar::int(2))?;
    let h = change_basis(&g, &t)?;
    println!("normalized:\n{}", print_algebra(&h));
    assert_eq!(h.report().class, g.report().class);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()
}
