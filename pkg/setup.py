"""Build script for the optional compiled kernel extension.

If Cython or a C compiler is unavailable the package still works through
the pure-Python kernel backend (selected automatically at import time).
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "degauss._kernels._core",
                ["src/degauss/_kernels/_core.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        language_level=3,
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
