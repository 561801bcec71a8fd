"""Build script: compiles the optional fast partition kernel.

The package is fully functional without the extension; pizzagames.backend
falls back to the pure-Python kernel if the import fails.
"""

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    """Never let a missing compiler break installation."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # pragma: no cover
            print(f"warning: extension build skipped ({exc}); using pure-Python kernel")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:  # pragma: no cover
            print(f"warning: {ext.name} build failed ({exc}); using pure-Python kernel")


def make_ext_modules():
    try:
        from Cython.Build import cythonize
    except ImportError:  # pragma: no cover
        return []
    return cythonize(
        [Extension("pizzagames._kernel", ["src/pizzagames/_kernel.pyx"])],
        compiler_directives={"language_level": "3"},
    )


setup(ext_modules=make_ext_modules(), cmdclass={"build_ext": optional_build_ext})
