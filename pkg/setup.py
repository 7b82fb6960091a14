import os

from setuptools import Extension, setup

# The compiled kernel is optional: the package falls back to the pure-Python
# reference kernels when the extension is absent (GRADSTAGE_NO_EXT=1 skips the
# build entirely).  -ffp-contract=off keeps the C arithmetic bit-identical to
# CPython's, and -fno-builtin-sincos stops GCC from fusing paired sin/cos
# calls into glibc sincos (which can differ from the separate calls by 1 ulp),
# so replay logs do not depend on which backend is active.
ext_modules = []
if not os.environ.get("GRADSTAGE_NO_EXT"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "gradstage.kernels._core",
                    ["src/gradstage/kernels/_core.pyx"],
                    extra_compile_args=[
                        "-O3",
                        "-ffp-contract=off",
                        "-fno-builtin-sin",
                        "-fno-builtin-cos",
                        "-fno-builtin-sincos",
                    ],
                )
            ],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        pass

setup(ext_modules=ext_modules)
