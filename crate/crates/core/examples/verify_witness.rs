// The five-stage witness check, on a good coframe and on near misses.

use nilcx::classify::verify_witness;
use nilcx::exact::Scalar;
use nilcx::exterior::parse_one_form;
use nilcx::liealg::catalog;

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let coframe = |e: &[&str]| -> Result<Vec<_>, _> { e.iter().map(|s| parse_one_form(s, 6)).collect() };
    let good = coframe(&["w0 + i w1", "w3 + i w5", "w2 + i w4"])?;
    let cases = [
        ("n6_3", catalog::n6_3(), good.clone()),
        ("salamon", catalog::n6_3_salamon(), coframe(&["w0 + i w1", "w3 - i w4", "w2 + i w5"])?),
        ("δ = 0", catalog::dim6(&Scalar::int(0)), good.clone()),
        ("real θ1", catalog::n6_3(), coframe(&["w0", "w3 + i w5", "w2 + i w4"])?),
    ];
    for (name, g, thetas) in cases {
        let r = verify_witness(&g, &thetas);
        let stages: Vec<String> = r.stages.iter().map(|(s, ok)| format!("{s}:{ok}")).collect();
        println!("{name:8} ok={} [{}]", r.ok, stages.join(" "));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()
}
