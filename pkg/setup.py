"""Build script for the optional compiled kernel core.

The package works without the extension (a pure-Python backend is selected
at import time), so a failed compile only costs speed.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "schurcodes._kernels",
                sources=["src/schurcodes/_kernels.pyx"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
