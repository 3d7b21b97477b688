// Building ordinals in Cantor normal form and taking them apart.

use num_bigint::BigInt;
use ordinal_arith::{make_ordinal, Ordinal};

fn main() {
    let w = Ordinal::omega();
    // ω^(ω+1)·3 + ω^2 + 7, given out of order with a repeated exponent
    let a = make_ordinal([
        (Ordinal::from(2), BigInt::from(1)),
        (w.succ(), BigInt::from(2)),
        (Ordinal::zero(), BigInt::from(7)),
        (w.succ(), BigInt::from(1)),
    ])
    .unwrap();
    println!("a          = {a}");
    println!("deg a      = {}", a.deg().unwrap());
    let parts = a.split();
    println!("split      = {} + {}", parts.limit_part, parts.finite_part);
    println!("succ a     = {}", a.succ());
    println!("pred a     = {}", a.pred().unwrap());
    println!("a is limit = {}", a.is_limit());

    let lim = parts.limit_part;
    println!("{lim} / ω = {}", lim.omega_div().unwrap());
    for n in 0..4 {
        println!("  ({lim})[{n}] = {}", lim.fund_seq(n).unwrap());
    }

    let mut xs = [w.clone(), Ordinal::from(5), Ordinal::omega_pow(w.clone()), w.succ()];
    xs.sort();
    let shown: Vec<String> = xs.iter().map(|x| x.to_string()).collect();
    println!("sorted: {}", shown.join(" < "));

    assert!(make_ordinal([(Ordinal::one(), BigInt::from(-1))]).is_err());
    assert!(Ordinal::zero().deg().is_err());
}
