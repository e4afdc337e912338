"""Build script: compiles the optional Cython kernel extension.

If Cython or a C compiler is unavailable the package still installs and
falls back to the pure numpy kernels at import time.
"""

from setuptools import setup

ext_modules = []
try:
    import numpy
    from Cython.Build import cythonize
    from setuptools import Extension

    ext_modules = cythonize(
        [
            Extension(
                "tspkit.kernels._ckernels",
                ["src/tspkit/kernels/_ckernels.pyx"],
                include_dirs=[numpy.get_include()],
                extra_compile_args=["-O3"],
                define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
            )
        ],
        compiler_directives={
            "language_level": 3,
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
            "initializedcheck": False,
        },
    )
except ImportError as exc:  # pragma: no cover - build-environment dependent
    print(f"Cython unavailable ({exc}); installing with pure-Python kernels only.")

setup(ext_modules=ext_modules)
