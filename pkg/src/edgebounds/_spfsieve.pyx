# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled smallest-prime-factor kernel (linear sieve).

Fills spf[n] with the smallest prime factor of n for 2 <= n <= limit,
touching every composite exactly once. Produces the identical array to the
NumPy fallback in _spf_fallback; selection happens in _kernel.
"""


def fill_spf(int[::1] spf, int[::1] primes):
    """Linear sieve into the zeroed buffer spf; returns the prime count.

    primes must have room for every prime <= len(spf) - 1.
    """
    cdef Py_ssize_t limit = spf.shape[0] - 1
    cdef Py_ssize_t n
    cdef Py_ssize_t j
    cdef Py_ssize_t count = 0
    cdef long long c
    cdef int p

    for n in range(2, limit + 1):
        if spf[n] == 0:
            spf[n] = <int> n
            primes[count] = <int> n
            count += 1
        for j in range(count):
            p = primes[j]
            c = (<long long> p) * (<long long> n)
            if c > limit or p > spf[n]:
                break
            spf[<Py_ssize_t> c] = p
            if p == spf[n]:
                break
    return count
