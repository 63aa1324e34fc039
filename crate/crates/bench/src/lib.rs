//! Benchmarks for `qha-core`. Run with `cargo bench -p qha-bench`.
