// Running catalog laws through the seeded harness.

use ordinal_arith::harness::{catalog, check_law, GenParams, Polarity};

fn main() {
    let params = GenParams::default().with_seed(2024);
    for law in catalog().iter().filter(|l| l.grid.is_some()) {
        let r = check_law(law.id, &params, 100).unwrap();
        println!("{:<16} {:<28} {}", law.id, law.statement, if r.passed { "ok" } else { "FAIL" });
    }

    let r = check_law("naive-sj-add", &params, 100).unwrap();
    assert_eq!(r.expected_polarity, Polarity::Fails);
    let f = &r.failures[0];
    let inputs: Vec<String> = f.inputs.iter().map(|x| x.to_string()).collect();
    println!(
        "naive-sj-add refuted {} times; first at ({}): {} vs {}",
        r.failures.len(),
        inputs.join(", "),
        f.lhs,
        f.rhs
    );
    println!("{}", serde_json::to_string_pretty(&r.failures[0]).unwrap());
}
