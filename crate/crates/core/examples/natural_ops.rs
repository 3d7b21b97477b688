// Natural sum, natural product, monus and the Conway bound.

use ordinal_arith::expr::evaluate;
use ordinal_arith::{conway_f, conway_witness_check, nat_add, nat_mul, nat_ominus, Ordinal};

fn main() {
    let a = evaluate("w^2 + w + 3").unwrap();
    let b = evaluate("w*3 + 5").unwrap();
    println!("a = {a}, b = {b}");
    println!("a ⊕ b = {}", nat_add(&a, &b));
    println!("a ⊗ b = {}", nat_mul(&a, &b));
    println!("b ⊗ a = {}", nat_mul(&b, &a));
    println!("a ⊖ b = {}", nat_ominus(&a, &b));
    println!("b ⊖ a = {}", nat_ominus(&b, &a));

    let w = Ordinal::omega();
    let one = Ordinal::one();
    let f = conway_f(&w, &w, &one, &one).unwrap();
    println!("f_(ω,ω)(1,1) = {f}");
    let sq = nat_mul(&w, &w);
    println!("ω⊗ω = {sq} passes the sampled Conway check: {}", conway_witness_check(&w, &w, &sq, 4));
    println!("ω does not: {}", conway_witness_check(&w, &w, &w, 4));
}
