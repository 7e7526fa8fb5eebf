"""Build shim: compiles the optional sieve extension when Cython is available.

The package is fully functional without the extension (a NumPy fallback is
selected at import time). Set EDGEBOUNDS_NO_EXT=1 to skip compilation.
"""

import os

from setuptools import setup

ext_modules = []
if os.environ.get("EDGEBOUNDS_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize
        from setuptools import Extension

        ext_modules = cythonize(
            [Extension("edgebounds._spfsieve", ["src/edgebounds/_spfsieve.pyx"])],
            language_level=3,
        )
    except Exception:
        # No Cython toolchain: install pure-Python, the fallback kernel takes over.
        ext_modules = []

setup(ext_modules=ext_modules)
