"""Build script: compiles the sieve extension when Cython and a C compiler
are available, otherwise installs with the pure-Python backend only."""

import os

from setuptools import Extension, setup

ext_modules = []
if not os.environ.get("PRIMEORDER_NO_EXT"):
    try:
        from Cython.Build import cythonize
    except ImportError:
        pass
    else:
        ext_modules = cythonize(
            [
                Extension(
                    "primeorder._sieve_cy",
                    ["src/primeorder/_sieve_cy.pyx"],
                    extra_compile_args=["-O3"],
                )
            ],
            compiler_directives={
                "language_level": "3",
                "boundscheck": False,
                "wraparound": False,
                "cdivision": True,
            },
        )

setup(ext_modules=ext_modules)
