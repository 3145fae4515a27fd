//! Core hypercircle constructions.
