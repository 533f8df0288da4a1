import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("SCREWSR_NO_NATIVE") != "1":
    try:
        import numpy
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "screwsr._kernels._native",
                    ["src/screwsr/_kernels/_native.pyx"],
                    include_dirs=[numpy.get_include()],
                    define_macros=[
                        ("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")
                    ],
                )
            ],
            language_level=3,
        )
    except ImportError:
        # Pure-Python fallback kernels are used when Cython is unavailable.
        ext_modules = []

setup(ext_modules=ext_modules)
