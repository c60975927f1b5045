//! Criterion benchmarks for the burge engine; see `benches/kernels.rs`.
