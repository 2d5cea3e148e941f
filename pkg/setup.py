"""Build script for the optional compiled kernels.

The Cython extension is marked optional: if it fails to compile the package
still installs and the pure-Python kernels are used instead.
"""
from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:  # pragma: no cover - build without Cython
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "spechtcomb._ckernels",
                ["src/spechtcomb/_ckernels.pyx"],
                extra_compile_args=["-O3"],
                optional=True,
            )
        ],
        compiler_directives={
            "language_level": "3",
            "boundscheck": False,
            "wraparound": False,
            "cdivision": False,
        },
    )

setup(ext_modules=ext_modules)
