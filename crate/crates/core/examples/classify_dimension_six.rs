// The six-dimensional t3 family: the extracted polynomial system, the
// relation t² + δ = 0 on θ1 = w0 + t w1, and the resulting verdicts.

use nilcx::classify::{classify, extract_constraints, NilProfile, Outcome};
use nilcx::exact::Scalar;
use nilcx::exterior::{annihilator_filtration, format_form};
use nilcx::liealg::catalog;

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let g = catalog::dim6(&Scalar::int(1));
    let f = annihilator_filtration(&g)?;
    let sys = extract_constraints(&g, &f, &NilProfile::new(vec![1, 3, 4]))?;
    for e in sys.equation_strings() {
        println!("  {e} = 0");
    }
    for d in [-1, 0, 1] {
        let v = classify(&catalog::dim6(&Scalar::int(d)))?;
        print!("δ = {d:2}: {}", v.outcome);
        match v.outcome {
            Outcome::Admits => {
                let w = v.witness.unwrap();
                let s: Vec<String> = w.thetas.iter().map(format_form).collect();
                println!("  Ω = ({})", s.join(") ∧ ("));
            }
            _ => {
                let c = v.profiles[0].certificate.as_ref().unwrap();
                println!(
                    "  t must solve {} (real roots: {})",
                    c.conclusion.polynomial.as_ref().unwrap(),
                    c.conclusion.real_roots.unwrap()
                );
            }
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()
}
