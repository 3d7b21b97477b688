// Jacobsthal multiplication (iterated natural sum) and its exponentiation.

use ordinal_arith::harness::{iterate_op, IterOp};
use ordinal_arith::{jac_mul, jac_pow, nat_add, ord_mul, Ordinal};

fn main() {
    let w = Ordinal::omega();
    let two = Ordinal::from(2);
    println!("2 × ω = {}", jac_mul(&two, &w));
    println!("ω × 2 = {}", jac_mul(&w, &two));

    let a = nat_add(&w, &two);
    println!("(ω+2) × (ω+2) = {}", jac_mul(&a, &a));
    println!("(ω+2)·(ω+2)   = {}", ord_mul(&a, &a));
    println!("(ω+2)^×3 = {}", jac_pow(&a, &Ordinal::from(3)));
    println!("ω^×ω = {}", jac_pow(&w, &w));

    // finite right operands agree with plain iteration
    for n in 0..5u64 {
        let closed = jac_mul(&a, &Ordinal::from(n));
        let iterated = iterate_op(IterOp::NatAdd, &a, n);
        assert_eq!(closed, iterated);
        println!("  (ω+2) × {n} = {closed}");
    }
}
