// The expression language: parse, evaluate, print in three formats.

use ordinal_arith::expr::{eval, evaluate, parse, print_json, print_latex, print_text};

fn main() {
    let inputs = [
        "w^2 + w*2 + 4",
        "(w+2) #^ 2",
        "w #+ w j* 2",
        "2 ^ 1 ^ 2",
        "deg(w^(w+1)*3 + 2)",
        "wdiv(w^3 + w*2)",
        "(w*2 + 1) #- (w + 5)",
        "ω ⊗ (ω ⊕ 1)",
    ];
    for src in inputs {
        let ast = parse(src).unwrap();
        let v = eval(&ast).unwrap();
        println!("{src:<24} parses as {ast}");
        println!("{:<24} = {}", "", print_text(&v));
    }

    let v = evaluate("w^(w+1)*3 + 1").unwrap();
    println!("latex: {}", print_latex(&v));
    println!("json:  {}", print_json(&v));

    for bad in ["w^", "(1 + 2", "w #- 1 #- 2", "wdiv(w+1)", "deg(0)"] {
        let e = evaluate(bad).unwrap_err();
        println!("{}", e.render(bad));
    }
}
