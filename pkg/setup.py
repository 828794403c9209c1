"""Build script for the optional compiled stepping kernels.

The extension accelerates the time-stepping inner loops (Euler-Maruyama and
RK4 paths for the built-in systems).  If it cannot be built, the package
falls back to the pure-NumPy reference kernels at import time, so the build
is marked optional.  ``-ffp-contract=off`` keeps the compiled arithmetic
bit-identical to the NumPy reference (no fused multiply-adds).
"""

import numpy as np
from Cython.Build import cythonize
from setuptools import Extension, setup

ext = Extension(
    "koopcert._backend._core",
    ["src/koopcert/_backend/_core.pyx"],
    include_dirs=[np.get_include()],
    extra_compile_args=["-O3", "-ffp-contract=off"],
    define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
)
ext.optional = True

setup(ext_modules=cythonize([ext], language_level="3"))
