"""Builds the optional compiled kernel extension.

The package works without it: ecodenoise._kernels falls back to a numpy
implementation when the extension is missing. Do not add -ffast-math here;
the kernels must keep strict IEEE semantics so that both backends produce
bit-identical results.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

extensions = [
    Extension(
        "ecodenoise._kernels._native",
        ["src/ecodenoise/_kernels/_native.pyx"],
        extra_compile_args=["-O3"],
    )
]

setup(
    ext_modules=cythonize(extensions, compiler_directives={"language_level": "3"})
    if cythonize is not None
    else [],
)
