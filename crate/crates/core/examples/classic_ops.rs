// Ordinary ordinal arithmetic: not commutative, left-distributive only.

use ordinal_arith::{ord_add, ord_mul, ord_pow, Ordinal};

fn main() {
    let w = Ordinal::omega();
    let one = Ordinal::one();
    let two = Ordinal::from(2);

    println!("1 + ω = {}   ω + 1 = {}", ord_add(&one, &w), ord_add(&w, &one));
    println!("2·ω = {}   ω·2 = {}", ord_mul(&two, &w), ord_mul(&w, &two));

    let a = ord_add(&w, &two);
    println!("({a})·({a}) = {}", ord_mul(&a, &a));
    println!("({a})^3 = {}", ord_pow(&a, &Ordinal::from(3)));
    println!("2^ω = {}", ord_pow(&two, &w));
    println!("2^(ω+3) = {}", ord_pow(&two, &ord_add(&w, &Ordinal::from(3))));
    println!("ω^ω^ω = {}", ord_pow(&w, &ord_pow(&w, &w)));

    // (1+1)·ω versus 1·ω + 1·ω
    let lhs = ord_mul(&ord_add(&one, &one), &w);
    let rhs = ord_add(&ord_mul(&one, &w), &ord_mul(&one, &w));
    println!("(1+1)·ω = {lhs}, but 1·ω + 1·ω = {rhs}");
}
