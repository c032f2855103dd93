// Forms on g*: the Chevalley–Eilenberg differential, d∘d = 0, the
// annihilator filtration and nil degrees.

use nilcx::exterior::{annihilator_filtration, format_form, nil_degree, parse_form, parse_one_form};
use nilcx::liealg::catalog;

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let g = catalog::n6_3();
    for k in 0..6 {
        let w = parse_one_form(&format!("w{k}"), 6)?;
        println!("d w{k} = {}", format_form(&w.d(&g)));
    }
    let a = parse_form("w0^w1 + 2 w2^w5 - i w3^w4", 6, 2)?;
    assert!(a.d(&g).d(&g).is_zero());

    let f = annihilator_filtration(&g)?;
    println!("dim V_i = {:?}, j = {:?}", f.dims(), f.j_index);
    for e in ["w0 + i w1", "w3 + i w5", "w2 + i w4"] {
        println!("nil({e}) = {}", nil_degree(&f, &parse_one_form(e, 6)?));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()
}
