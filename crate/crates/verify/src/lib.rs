//! Holds the `acceptance` test target, which runs every criterion end to end
//! and prints one PASS/FAIL line per criterion. It lives in its own package
//! so that `cargo test --workspace` runs it after the unit, property and CLI
//! suites.
