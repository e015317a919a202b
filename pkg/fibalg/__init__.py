"""Exact arithmetic on Fibonacci-chain quasicrystals and the algebras built on them."""

__version__ = "0.1.0"
