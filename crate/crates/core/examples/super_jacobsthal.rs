// Exponentiation by iterating the natural product.

use ordinal_arith::expr::evaluate;
use ordinal_arith::{nat_add, nat_mul, ord_add, sj_pow, sj_pow_finite_base, Ordinal};

fn main() {
    let w = Ordinal::omega();
    let two = Ordinal::from(2);
    let a = ord_add(&w, &two);
    println!("(ω+2)^⊗2 = {}", sj_pow(&a, &two));
    println!("ω^⊗ω = {}", sj_pow(&w, &w));

    for (k, e) in [(2u64, "1 + w"), (3, "w + 2"), (2, "w^2 + 1"), (5, "w^w + w*2 + 1")] {
        let b = evaluate(e).unwrap();
        let v = sj_pow_finite_base(&k.into(), &b).unwrap();
        println!("{k}^⊗({b}) = {v}");
    }

    // the exponent law holds for natural sums, not ordinary ones
    let one = Ordinal::one();
    let good_l = sj_pow(&two, &nat_add(&one, &w));
    let good_r = nat_mul(&sj_pow(&two, &one), &sj_pow(&two, &w));
    println!("2^⊗(1⊕ω) = {good_l} = 2^⊗1 ⊗ 2^⊗ω = {good_r}");
    let bad_l = sj_pow(&two, &ord_add(&one, &w));
    println!("2^⊗(1+ω) = {bad_l}");
}
