// Recursions in n and in M, printed step by step.

use harmsum::exact::{format_rational, int, rat};
use harmsum::recursions::{
    order_sum_recursive_trace, s_recursive_trace, sp_coupled_all_orders, sp_descending,
};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let trace = s_recursive_trace(6, &rat(1, 3))?;
    println!("{}:", trace.method);
    for entry in &trace.entries {
        println!(
            "  n = {:>2}  {}",
            entry.index,
            format_rational(&entry.value)
        );
    }

    let orders = sp_coupled_all_orders(8, 3, &int(-1))?;
    for (p, v) in orders.iter().enumerate() {
        println!("S_8^({p})(-1) = {}", format_rational(v));
    }
    println!(
        "descending, S_8^(3)(-1) = {}",
        format_rational(&sp_descending(8, 3, &int(-1))?)
    );

    let trace = order_sum_recursive_trace(4, 5, &rat(1, 2))?;
    println!("{}:", trace.method);
    for entry in &trace.entries {
        println!("  M = {}  {}", entry.index, format_rational(&entry.value));
    }
    Ok(())
}

fn main() {
    if let Err(e) = run_example() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
