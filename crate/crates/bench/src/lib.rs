//! Criterion benchmarks for `ssplat-core`; see `benches/`.
