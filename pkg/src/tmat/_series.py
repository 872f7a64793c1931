"""Low-level summation helpers: compensated accumulation and Wynn's epsilon table."""

import numpy as np


class KahanSum:
    """Kahan-compensated accumulator for complex terms."""

    def __init__(self):
        self._s = 0.0 + 0.0j
        self._c = 0.0 + 0.0j

    def add(self, term):
        t = term - self._c
        new = self._s + t
        self._c = (new - self._s) - t
        self._s = new

    @property
    def value(self):
        return self._s


def wynn_epsilon(partial_sums):
    """Best entry of Wynn's epsilon table for a sequence of partial sums.

    Returns (value, stability_estimate) where the estimate is the difference
    between the last two usable even-column entries.  Works for complex input;
    safe against zero denominators (column is clipped where they occur).
    """
    s = np.asarray(partial_sums, dtype=complex)
    n = s.size
    if n == 0:
        raise ValueError("empty sequence")
    if n == 1:
        return complex(s[0]), abs(s[0])
    prev = np.zeros(n + 1, dtype=complex)  # epsilon_{-1} column
    cur = s.copy()
    best = complex(s[-1])
    prev_best = complex(s[-2]) if n >= 2 else best
    # build the table column by column; even columns are the accelerants
    for k in range(1, n):
        m = n - k
        nxt = np.empty(m, dtype=complex)
        ok = m
        for j in range(m):
            d = cur[j + 1] - cur[j]
            if d == 0:
                ok = j
                break
            nxt[j] = prev[j + 1] + 1.0 / d
        if ok == 0:
            break
        nxt = nxt[:ok]
        prev, cur = cur, nxt
        if k % 2 == 0 and cur.size:
            prev_best, best = best, complex(cur[-1])
    return best, abs(best - prev_best)
