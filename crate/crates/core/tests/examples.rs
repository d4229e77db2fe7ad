//! Every example must run to completion; their internal asserts are part of
//! the check.

// Examples that read arguments expose `run(&[String])`; the rest only `main`.
macro_rules! main_or_run {
    (args) => {
        fn main_or_run() {
            run(&[]);
        }
    };
    () => {
        fn main_or_run() {
            main();
        }
    };
}

macro_rules! example_case {
    ($name:ident $(, $args:ident)?) => {
        #[allow(dead_code)]
        mod $name {
            include!(concat!("../examples/", stringify!($name), ".rs"));
            main_or_run!($($args)?);
            pub fn run_example() {
                main_or_run();
            }
        }

        #[test]
        fn $name() {
            $name::run_example();
        }
    };
}

example_case!(box_statistic, args);
example_case!(bfile_export, args);
example_case!(separable_decomposition);
example_case!(avoider_distributions);
example_case!(closed_form_series);
example_case!(fibonacci_layers);
example_case!(highest_coefficients);
example_case!(separable_counts);
