// Brute-force evaluation of the sum families, including the nonlinear
// ones that have no closed form.

use harmsum::exact::{format_rational, parse_rational};
use harmsum::oracle::{order_sum, s_as_polynomial, s_general, OrderSumSpec, SumSpec};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let z = parse_rational("1/2")?;
    for n in 1..=5 {
        let value = s_general(&SumSpec::simple(n, 0, z.clone()))?;
        println!("S_{n}(1/2) = {}", format_rational(&value));
    }

    // squared harmonic numbers against squared binomials
    let spec = SumSpec {
        n: 4,
        p: 1,
        q: 2,
        r: 2,
        m: 2,
        z: parse_rational("-1/3")?,
    };
    println!(
        "S_4^(1)(2,2,2,-1/3) = {}",
        format_rational(&s_general(&spec)?)
    );

    println!("S_3^(1)(z) = {}", s_as_polynomial(3, 1, 1, 1, 1)?);

    let spec = OrderSumSpec::plain(5, 10, parse_rational("1")?);
    println!("S_5(M=10, 1) = {}", format_rational(&order_sum(&spec)?));
    Ok(())
}

fn main() {
    if let Err(e) = run_example() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
