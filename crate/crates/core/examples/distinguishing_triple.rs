// One square, three answers: (ω+2)² under the three exponentiations.

use ordinal_arith::expr::{evaluate, print_text};

fn main() {
    for (name, src) in [
        ("ordinary", "(w+2) ^ 2"),
        ("Jacobsthal", "(w+2) j^ 2"),
        ("natural-product", "(w+2) #^ 2"),
    ] {
        let v = evaluate(src).unwrap();
        println!("{name:<16} {src:<12} = {}", print_text(&v));
    }
}
