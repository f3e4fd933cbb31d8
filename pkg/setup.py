"""Build script for the optional compiled kernel extension.

The package is pure Python by default; when Cython and a C compiler are
available, the hot kernels in src/ordsize/_fastcore.pyx are compiled and
selected automatically at import time (see ordsize.kernels).

Usage:
    pip install -e . --no-build-isolation
or, to rebuild just the extension in place:
    python setup.py build_ext --inplace
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    extensions = cythonize(
        [Extension("ordsize._fastcore", ["src/ordsize/_fastcore.pyx"])],
        compiler_directives={
            "language_level": "3",
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
        },
    )
except ImportError:
    extensions = []

setup(ext_modules=extensions)
