"""Build script: compiles the optional counting extension.

Set HYPERCUT_PURE=1 to skip the extension; the package then runs on the
pure Python kernels only.
"""
import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("HYPERCUT_PURE") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "hypercut._speedups",
                    ["src/hypercut/_speedups.pyx"],
                    extra_compile_args=["-O3"],
                )
            ],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
