"""Build script: compiles the optional fast kernels if Cython is available.

The package is fully functional without the extension; brauer.ops falls back
to the pure-Python implementation in brauer._matchops.
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        "src/brauer/_speedups.pyx",
        language_level=3,
    )
except Exception as exc:  # Cython missing or compile failure: pure-Python mode
    print("brauer: building without compiled speedups (%s)" % exc)

setup(ext_modules=ext_modules)
