"""Build script: compiles the exact-arithmetic kernels when Cython is available.

The package works without the extension (quadlie.kernels falls back to the
pure-Python twin), so a failed extension build is downgraded to a warning.
"""

import warnings

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize
    from setuptools import Extension

    ext_modules = cythonize(
        [Extension("quadlie._kernels", ["src/quadlie/_kernels.pyx"])],
        language_level=3,
    )
except Exception as exc:  # pragma: no cover - build environment dependent
    warnings.warn(f"building without compiled kernels: {exc}")

setup(ext_modules=ext_modules)
