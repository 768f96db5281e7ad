"""qubitcat: cat-themed quantum-computing mini-games.

Subpackages: the simulation core (:mod:`qubitcat.quantum`), the three
mini-game rule engines, progression and quiz layers, content loaders,
the breadth-first level solver, the HTTP game service, and the ``qq``
authoring CLI.
"""

__version__ = "0.1.0"
