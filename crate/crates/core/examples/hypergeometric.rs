// Terminating pFq series, the log-form 2F1(1,1;m;w), and the Legendre,
// R_n and Laguerre polynomials.

use harmsum::exact::{format_rational, int, rat};
use harmsum::hypergeom::{
    hyp2f1_11, hyp2f1_11_log_form, laguerre, legendre_p, pfq_terminating, r_n, PfqSpec,
};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    // Chu-Vandermonde: 2F1(-5,-5;1;1) = C(10,5)
    let spec = PfqSpec::new(vec![int(-5), int(-5)], vec![int(1)], int(1));
    println!(
        "2F1(-5,-5;1;1) = {}",
        format_rational(&pfq_terminating(&spec)?)
    );

    let spec = PfqSpec::new(
        vec![int(1), int(1), int(-4)],
        vec![int(2), int(2)],
        rat(1, 2),
    );
    println!(
        "3F2(1,1,-4;2,2;1/2) = {}",
        format_rational(&pfq_terminating(&spec)?)
    );

    let v = hyp2f1_11(5, -0.5)?;
    println!("2F1(1,1;5;-1/2) = {:.15}", v.value);
    let form = hyp2f1_11_log_form(5, &rat(-1, 2))?;
    println!("  log form: {:.15}", form.to_f64());

    for n in 0..=3 {
        println!("P_{n}(x) = {}", legendre_p(n));
        println!("R_{n}(x) = {}", r_n(n));
    }
    println!("L_3^1(x) = {}", laguerre(3, 1));
    Ok(())
}

fn main() {
    if let Err(e) = run_example() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
