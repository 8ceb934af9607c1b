//! Benchmarks for spacking-core live in benches/.
