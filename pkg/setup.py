"""Build script for the optional compiled kernel.

The extension (Cython + libgmp) accelerates the fast-doubling and summation
loops.  Everything works without it: if Cython, a C compiler, or gmp.h is
missing, the build degrades to the pure-Python backend and the install still
succeeds.  Set FIBCUBES_NO_EXT=1 to skip the extension outright.
"""

import os
import sys

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    """Best-effort build: a failed extension must not fail the install."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # platform/toolchain problems
            self._warn(exc)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:  # compiler or missing gmp.h
            self._warn(exc)

    @staticmethod
    def _warn(exc):
        print(
            f"warning: compiled kernel not built ({exc}); "
            "falling back to the pure-Python backend",
            file=sys.stderr,
        )


def extensions():
    if os.environ.get("FIBCUBES_NO_EXT"):
        return []
    try:
        from Cython.Build import cythonize
    except ImportError:
        return []
    ext = Extension(
        "fibcubes._core_c",
        sources=["src/fibcubes/_core_c.pyx"],
        libraries=["gmp"],
    )
    return cythonize([ext], compiler_directives={"language_level": "3"})


setup(ext_modules=extensions(), cmdclass={"build_ext": optional_build_ext})
