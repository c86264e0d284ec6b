"""
Ground-truth equilibrium checks and a brute-force oracle.
"""

from .support import SupportEnumerator, is_degenerate, polyhedron_vertices, support_enumeration
from .verify import BestResponseCert, LemmaCheck, NashCheck, check_lemma_equiv, is_nash, qp_value
