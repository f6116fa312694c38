//! Criterion benchmarks for `semirep-core`; see `benches/`.
