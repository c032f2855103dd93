//! Every cargo example runs to completion.

macro_rules! example {
    ($name:ident) => {
        mod $name {
            include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/", stringify!($name), ".rs"));
        }

        #[test]
        fn $name() {
            $name::run().unwrap();
        }
    };
}

example!(lie_algebras);
example!(catalog_tour);
example!(exterior_calculus);
example!(complex_structures);
example!(courant_double);
example!(pure_spinors);
example!(classify_dimension_six);
example!(obstruction_certificates);
example!(verify_witness);
example!(graded_algebras);
example!(command_line);
