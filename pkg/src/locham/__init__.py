"""Commuting projector Hamiltonians on interaction complexes.

Analysis of locally commuting projector Hamiltonians through their
interaction 2-complexes, localization maps onto 1-complexes, and synthesis
of bounded-depth circuits preparing exact or low-energy-density trivial
ground states, with brute-force and stabilizer-tableau verification.
"""

__version__ = "0.1.0"
