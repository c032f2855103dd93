// Driving the command-line front end in-process.

use nilcx::cli::run_args;

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    for args in [
        vec!["nilcx", "classify", "--catalog", "l_plus_r", "--n", "2"],
        vec!["nilcx", "bound", "--catalog", "t_2n", "--n", "4", "--format", "json"],
        vec!["nilcx", "witness", "--catalog", "n6_3", "--theta", "w0 + i w1", "--theta", "w3 + i w5", "--theta", "w2 + i w4"],
    ] {
        let out = run_args(args.clone());
        println!("$ {}\n{}[exit {}]", args[1..].join(" "), out.stdout, out.code);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()
}
