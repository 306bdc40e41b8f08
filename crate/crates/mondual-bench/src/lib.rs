//! Benchmark-only crate; see benches/duality.rs.
