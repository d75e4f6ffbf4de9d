//! Criterion benchmarks live in `benches/`; run `cargo bench -p principal-trace-bench`.
