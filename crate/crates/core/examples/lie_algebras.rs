// Load an algebra from text, validate it, and read off its lower central
// series type; then compare two presentations of the same algebra.

use nilcx::liealg::{self, catalog, parse_algebra, print_algebra};

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let text = "\
dim 6
bracket X0 X1 = 1 X2
bracket X0 X2 = 1 X3
bracket X0 X3 = 1 X4
bracket X1 X2 = 1 X5
bracket X1 X5 = 1 X4
";
    let g = parse_algebra(text)?;
    let r = g.report();
    println!("class {}, nilindex {:?}, series dims {:?}", r.class, r.nilindex, r.lcs_dims);
    assert_eq!(g, catalog::n6_3());

    // Jacobi failures are reported with the offending triple.
    let bad = "dim 3\nbracket X0 X1 = 1 X1\nbracket X0 X2 = 1 X2\nbracket X1 X2 = 1 X0\n";
    println!("broken: {}", parse_algebra(bad).unwrap_err());

    // The same algebra in Salamon's basis, related by a stored basis change.
    let s = catalog::n6_3_salamon();
    let t = liealg::salamon_isomorphism();
    assert!(liealg::verify_isomorphism(&g, &s, &t)?);
    print!("{}", print_algebra(&s));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()
}
