"""Fermionic Fock-space spinors, qubit embeddings and their invariants."""
