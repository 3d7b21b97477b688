// Runs every example so that their built-in assertions are exercised.

macro_rules! example {
    ($name:ident) => {
        mod $name {
            include!(concat!("../examples/", stringify!($name), ".rs"));

            #[test]
            fn runs() {
                main();
            }
        }
    };
}

example!(cnf_basics);
example!(classic_ops);
example!(natural_ops);
example!(jacobsthal);
example!(super_jacobsthal);
example!(law_check);
example!(recursion_oracle);
example!(calculator);
example!(distinguishing_triple);
