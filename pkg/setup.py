"""Build the optional Cython kernels; install still succeeds without them."""

import warnings

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [Extension("permcodes._speedups", ["src/permcodes/_speedups.pyx"], extra_compile_args=["-O3"])],
        compiler_directives={"language_level": 3},
    )


class OptionalBuildExt(build_ext):
    def run(self):
        try:
            super().run()
        except Exception as exc:  # pragma: no cover
            warnings.warn(f"compiled kernels not built, using pure Python: {exc}")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:  # pragma: no cover
            warnings.warn(f"failed to build {ext.name}: {exc}")


setup(ext_modules=ext_modules, cmdclass={"build_ext": OptionalBuildExt})
