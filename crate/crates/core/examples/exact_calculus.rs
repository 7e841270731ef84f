// Exact polynomial and log-polynomial calculus used by the integral
// representations.

use harmsum::exact::{format_rational, harmonic, int, log_moment, LogPolynomial, Polynomial};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    // (x^4 - 1)/(x - 1) and its integral over [0, 1] is H_4
    let p = Polynomial::monomial(int(1), 4) - Polynomial::one();
    let q = p.divide_by_t_minus_one()?;
    println!("(x^4 - 1)/(x - 1) = {q}");
    println!(
        "∫ = {} = H_4 = {}",
        format_rational(&q.integrate_unit()),
        format_rational(&harmonic(4, 1)?)
    );

    let f = LogPolynomial::term(int(1), 2, 3);
    println!("∫ t^2 ln^3 t = {}", format_rational(&log_moment(&f)));
    Ok(())
}

fn main() {
    if let Err(e) = run_example() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
