"""Build script: compiles the optional C extension holding the oracle hot loops.

The package works without the extension (a pure-Python fallback is selected
at import time), so a failed compile must not break installation.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "skabelund._kernels._speed",
                ["src/skabelund/_kernels/_speed.pyx"],
                extra_compile_args=["-O3"],
                optional=True,
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
