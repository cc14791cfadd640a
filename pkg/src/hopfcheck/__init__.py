"""Exact engine for duoidal hom-category computations over finite backends.

Builds bimonoids (monoidal comonads) over two computable backends,
finite spans and multigraded rational vector spaces, and mechanically
tests the equivalent Hopf-type conditions: invertibility of the Hopf and
co-Hopf maps, Galois and co-Galois maps, existence of an antipode, and
the (dual) fundamental theorem of Hopf modules.
"""

__version__ = "0.1.0"
