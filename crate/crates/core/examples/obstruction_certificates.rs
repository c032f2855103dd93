// Obstruction certificates for the higher-dimensional families, archived
// as JSON and replayed from the algebra alone.

use nilcx::classify::{classify, replay};
use nilcx::liealg::catalog;

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let algebras = [
        ("L_{10,5}", catalog::l_2n_r(5, 5)?),
        ("L_{8,5}", catalog::l_2n_r(4, 5)?),
        ("T_{8,5}", catalog::t_2n(4)?),
        ("L_{8,3}", catalog::l_2n_r(4, 3)?),
    ];
    for (name, g) in algebras {
        let v = classify(&g)?;
        println!("{name}: {}", v.outcome);
        let certs = v.certificate.iter().chain(v.profiles.iter().filter_map(|p| p.certificate.as_ref()));
        for c in certs {
            replay(&g, c)?;
            let profile = c.profile.as_ref().map_or("-".to_string(), |p| p.to_string());
            println!("  {profile}: {} ({} steps, replayed)", c.conclusion.detail, c.steps.len());
        }
    }
    let v = classify(&catalog::dim6(&nilcx::exact::Scalar::int(0)))?;
    println!("{}", serde_json::to_string_pretty(&v.profiles[0].certificate)?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()
}
