//! Benchmarks for the detector pipeline live under `benches/`.
