import math

import numpy as np

from errors import DomainError


def classical_edge_oracle(coeffs):
    """Direct loop over (c_j - c_{(j+1) mod P}) / sqrt(2); the reference for edge_detect."""
    c = np.asarray(coeffs, dtype=np.float64).reshape(-1)
    p = c.size
    if p < 2:
        raise DomainError(f"edge oracle needs P >= 2 coefficients, got {p}")
    out = np.empty(p)
    for j in range(p):
        out[j] = (c[j] - c[(j + 1) % p]) / math.sqrt(2.0)
    return out
