"""Build setup for the optional compiled kernel.

The package is fully functional without the extension; a numpy fallback
is selected at import when bellflow._corekern is absent.
"""
from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None


class OptionalBuildExt(build_ext):
    """Build the extension if possible, warn and continue otherwise."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # compiler missing
            print(f"WARNING: skipping compiled kernel build: {exc}")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print(f"WARNING: could not build {ext.name}: {exc}")


if cythonize is not None:
    ext_modules = cythonize(
        [Extension("bellflow._corekern", ["src/bellflow/_corekern.pyx"])],
        language_level="3",
    )
else:
    print("WARNING: Cython not available, installing with the numpy kernel only")
    ext_modules = []

setup(ext_modules=ext_modules, cmdclass={"build_ext": OptionalBuildExt})
