"""Build hooks for the optional compiled matching kernel.

The package is pure Python except for ``divcert._matching``, a Cython
twin of ``divcert._matching_py`` used to speed up Birkhoff peeling.  If
Cython or a C compiler is unavailable the build continues and the pure
implementation is selected at import time.  Set DIVCERT_PURE=1 to skip
the extension entirely.
"""

import os

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    def run(self):
        try:
            super().run()
        except Exception as exc:
            _warn(exc)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            _warn(exc)


def _warn(exc):
    print(
        "WARNING: compiling divcert._matching failed (%s); "
        "the pure-Python kernel will be used instead" % (exc,)
    )


def extensions():
    if os.environ.get("DIVCERT_PURE"):
        return []
    try:
        from Cython.Build import cythonize
    except ImportError:
        return []
    ext = Extension(
        "divcert._matching",
        ["src/divcert/_matching.pyx"],
        extra_compile_args=["-O2"],
    )
    return cythonize(ext, compiler_directives={"language_level": "3"})


setup(ext_modules=extensions(), cmdclass={"build_ext": optional_build_ext})
