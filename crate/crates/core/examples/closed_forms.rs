// Closed and semi-closed forms, each printed next to the brute-force sum.

use harmsum::closed_forms::{
    order_sum_closed, order_sum_extrapolated, q_n, s1_n_of_z, s_n_of_z, sp_at_one,
    squared_binomial_sum_legendre,
};
use harmsum::exact::{format_rational, int, rat, rational_to_f64};
use harmsum::oracle::{s_general, s_simple, SumSpec};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let z = rat(1, 3);
    let log_form = s_n_of_z(10, &z)?;
    let direct = s_simple(10, 0, &z)?;
    println!(
        "S_10(1/3): log form {:.15}, direct {:.15}",
        log_form.to_f64(),
        rational_to_f64(&direct)
    );
    let log_form = s1_n_of_z(10, &z)?;
    println!("S_10^(1)(1/3): {:.15}", log_form.to_f64());

    for p in 0..=2 {
        println!("S_12^({p})(1) = {}", format_rational(&sp_at_one(12, p)?));
    }

    let legendre = squared_binomial_sum_legendre(9, &int(1))?;
    let direct = s_general(&SumSpec {
        n: 9,
        p: 0,
        q: 1,
        r: 2,
        m: 1,
        z: int(1),
    })?;
    println!(
        "sum C(9,j)^2 H_j = {} (direct {})",
        format_rational(&legendre),
        format_rational(&direct)
    );

    println!(
        "S_4(M=6, 1/2) = {}",
        format_rational(&order_sum_closed(4, 6, &rat(1, 2))?)
    );
    println!(
        "S_4(M=inf, 1/2) ~ {:.10}",
        order_sum_extrapolated(4, 100_000, 0.5)?
    );

    for n in 1..=4 {
        println!("Q_{n} = {}", format_rational(&q_n(n)?));
    }
    Ok(())
}

fn main() {
    if let Err(e) = run_example() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
