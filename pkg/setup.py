import os

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

# The compiled core is optional: vislink.backend falls back to the pure
# implementation when vislink._core is missing. VISLINK_NO_EXT=1 skips the
# build entirely (useful for benchmarking the fallback path).
_PYX = os.path.join(os.path.dirname(__file__), "src", "vislink", "_core.pyx")

ext_modules = []
if cythonize is not None and os.path.exists(_PYX) and not os.environ.get("VISLINK_NO_EXT"):
    ext_modules = cythonize(
        [
            Extension(
                "vislink._core",
                ["src/vislink/_core.pyx"],
                extra_compile_args=["-O2"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
