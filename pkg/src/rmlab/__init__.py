"""rmlab: a random-matrix spectral laboratory.

Samples classical and structured random matrix ensembles, computes their
spectra with in-repo exact and matrix-free solvers, evaluates closed-form
limiting laws, and quantifies how well empirical spectra match them.
"""

__version__ = "0.1.0"
