"""Build script for the optional compiled kernel extension.

The package works without the extension (a numpy fallback is selected at
import time); building it only speeds up the per-pixel image kernels.
Set SIMREAL_SKIP_EXT=1 to force a pure-Python install.
"""

import os
import sys

from setuptools import setup


def _extensions():
    if os.environ.get("SIMREAL_SKIP_EXT"):
        return []
    try:
        import numpy
        from Cython.Build import cythonize
        from setuptools import Extension
    except ImportError as exc:
        print(f"simreal: skipping compiled kernels ({exc})", file=sys.stderr)
        return []
    ext = Extension(
        "simreal._kernels._native",
        ["src/simreal/_kernels/_native.pyx"],
        include_dirs=[numpy.get_include()],
        extra_compile_args=["-O3"],
        define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
    )
    return cythonize([ext], compiler_directives={"language_level": "3"})


setup(ext_modules=_extensions())
