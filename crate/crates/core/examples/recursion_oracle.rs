// Checking closed forms against their transfinite recursions.

use ordinal_arith::expr::evaluate;
use ordinal_arith::harness::{certify_recursion, limit_certificate, CertDepths, TransfiniteOp};
use ordinal_arith::{sj_pow, Ordinal};

fn main() {
    let two = Ordinal::from(2);
    let beta = evaluate("w^2 + w*3").unwrap();

    let claimed = sj_pow(&two, &beta);
    let cert = limit_certificate(&claimed, |g| sj_pow(&two, g), &beta, 8, 8).unwrap();
    println!("2^⊗({beta}) = {claimed}: {:?} after {} samples", cert.verdict, cert.samples_checked);

    let wrong = claimed.succ();
    let cert = limit_certificate(&wrong, |g| sj_pow(&two, g), &beta, 8, 8).unwrap();
    println!("claiming {wrong} instead: {:?}", cert.verdict);

    let base = evaluate("w + 2").unwrap();
    let exp = evaluate("w^w + w + 3").unwrap();
    for op in [
        TransfiniteOp::OrdMul,
        TransfiniteOp::JacMul,
        TransfiniteOp::OrdPow,
        TransfiniteOp::JacPow,
        TransfiniteOp::SjPow,
    ] {
        let r = certify_recursion(op, &base, &exp, CertDepths::default());
        println!("{op:?}({base}, {exp}) = {}: {:?}", op.closed(&base, &exp), r.verdict);
    }
}
