"""Two-variable quantum knot invariants in exact arithmetic.

Submodules:
    ratfield  exact arithmetic in Q(v,t) with rational exponents
    cartan    Cartan datum, bilinear forms, multiplicative twist scalars
    freealg   free algebra on generators theta_i with twisted structure
    pairing   E/F word algebras and the skew-Hopf pairing
    quasir    dual bases per degree and the quasi-R-matrix components
    modules   finite-dimensional weight modules, R-matrices
    tangle    tangle-word DSL, the evaluation functor, closures, invariants
    cli       command-line interface
"""

__version__ = "0.1.0"
