"""Braid groups of handlebodies: combing normal forms, the wreath quotient and
Hecke-type algebras."""

__version__ = "0.1.0"
