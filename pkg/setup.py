"""Build hook for the optional compiled reduction kernel.

The package is pure Python; if Cython and a C compiler are available, a fast
Gaussian-elimination kernel is compiled as zigzagcat._kernel._speed.  Any
failure here must not break installation -- the pure kernel is always there.
"""

import sys

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    def run(self):
        try:
            super().run()
        except Exception as exc:  # missing compiler etc.
            print(f"warning: skipping compiled kernel ({exc})", file=sys.stderr)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print(f"warning: could not build {ext.name} ({exc}); "
                  "falling back to the pure-Python kernel", file=sys.stderr)


def extensions():
    try:
        from Cython.Build import cythonize
    except ImportError:
        return []
    ext = Extension("zigzagcat._kernel._speed",
                    ["src/zigzagcat/_kernel/_speed.pyx"])
    return cythonize([ext], language_level="3")


setup(ext_modules=extensions(), cmdclass={"build_ext": optional_build_ext})
