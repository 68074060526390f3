//! Criterion benchmarks for the numerical kernels, searches and simulator; see `benches/`.
