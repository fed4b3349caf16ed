//! Criterion benchmarks for the engine live under `benches/`.
