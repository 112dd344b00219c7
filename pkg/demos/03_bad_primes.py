"""Find the odd primes of bad reduction for the quartic below 1000."""

import time

from rm3 import geometry
from rm3.curves import default_quartic
from rm3.finitefield import is_prime

X = default_quartic()
start = time.perf_counter()
bad = [p for p in range(3, 1000) if is_prime(p) and not geometry.quartic_smooth_mod_p(X, p)]
print("singular reductions:", bad)
print(f"({time.perf_counter() - start:.1f}s)")

# at a bad prime the singular points can be found by direct search
print("singular points mod 7:", geometry.singular_points_search(X, 7, kmax=1))
