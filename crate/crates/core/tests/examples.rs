//! Runs every example under `examples/` as a test.

macro_rules! example_test {
    ($name:ident, $file:literal) => {
        mod $name {
            include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/", $file));
        }

        #[test]
        fn $name() {
            $name::run_example().expect(concat!($file, " should run"));
        }
    };
}

example_test!(local_density, "local_density.rs");
example_test!(correlation, "correlation.rs");
example_test!(sieve_average, "sieve_average.rs");
example_test!(truncated_small_set, "truncated_small_set.rs");
example_test!(spectrum, "spectrum.rs");
example_test!(construct_target, "construct_target.rs");
example_test!(closure, "closure.rs");
example_test!(pointwise, "pointwise.rs");
