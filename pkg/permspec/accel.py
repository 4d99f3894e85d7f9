"""Optional numba kernel for the Gray-code Ryser sum on int64 matrices.

numba is an optional dependency (`pip install permspec[accel]`); when it
cannot be imported the pure-python kernel in `permspec.core` is used.
The int64 kernel relies on wraparound arithmetic: intermediate overflow is
harmless as long as the final permanent fits into int64, which the caller
guarantees by bounding it with the product of absolute row sums.
"""
import numpy as np

try:
    from numba import njit

    HAS_NUMBA = True
except ImportError:  # pragma: no cover
    HAS_NUMBA = False

# |per A| <= prod_i sum_j |a_ij|, keep a safety bit
INT64_SAFE_BOUND = 2**62


def _ryser_int64(matrix):
    n = matrix.shape[0]
    sums = np.zeros(n, dtype=np.int64)
    total = np.int64(0)
    sign = np.int64(1)
    gray = 0
    for k in range(1, 1 << n):
        # column toggled between two consecutive gray codes
        j = 0
        while not (k >> j) & 1:
            j += 1
        gray ^= 1 << j
        if (gray >> j) & 1:
            for i in range(n):
                sums[i] += matrix[i, j]
        else:
            for i in range(n):
                sums[i] -= matrix[i, j]
        sign = -sign
        prod = np.int64(1)
        for i in range(n):
            prod *= sums[i]
            if prod == 0:
                break
        # popcount(gray) has the parity of k
        total += sign * prod
    if n % 2 == 1:
        total = -total
    return total


if HAS_NUMBA:
    ryser_int64 = njit(cache=True)(_ryser_int64)
else:  # pragma: no cover
    ryser_int64 = None


def ryser_accelerated(int_rows):
    """Run the int64 kernel on a list of integer rows.

    Returns None when numba is missing or the permanent bound does not fit
    into int64, so the caller can fall back to arbitrary precision.
    """
    if ryser_int64 is None:
        return None
    bound = 1
    for row in int_rows:
        bound *= sum(abs(v) for v in row)
        if bound >= INT64_SAFE_BOUND:
            return None
    array = np.array(int_rows, dtype=np.int64)
    return int(ryser_int64(array))
