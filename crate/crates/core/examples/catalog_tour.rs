// Every catalog family, with the class and the type bound it gets.

use nilcx::classify::type_bound;
use nilcx::liealg::{catalog, catalog_list, CatalogParams};

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    for e in catalog_list() {
        println!("{:14} {}", e.name, e.description);
    }
    let samples = [
        ("l_plus_r", CatalogParams { n: Some(3), ..Default::default() }),
        ("l_2n_r", CatalogParams { n: Some(5), r: Some(5), ..Default::default() }),
        ("t_2n", CatalogParams { n: Some(4), ..Default::default() }),
        ("n6_3", CatalogParams::default()),
        ("filiform", CatalogParams { n: Some(6), ..Default::default() }),
    ];
    for (name, p) in samples {
        let g = catalog::catalog(name, &p)?;
        let b = type_bound(&g)?;
        println!(
            "{name:10} dim {:2}  {:22}  nil {}  j {}  k ≤ {}",
            g.dim(),
            g.report().class.to_string(),
            b.nilindex,
            b.j,
            b.k_max
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()
}
