"""Exact rational-homotopy invariants: nilpotency of kernel ideals, cup-length,
zero-divisor cup-length, relative Sullivan and join models, and module-level
sectional category."""
