//! Empty library; the acceptance checks are in `tests/acceptance.rs`.
