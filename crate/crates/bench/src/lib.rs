//! Criterion benchmarks for the solver live in `benches/`; run them with `cargo bench -p cvc-bench`.
