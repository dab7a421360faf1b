"""CMake-driven build of the magsym._core extension."""

import subprocess
import sys
from pathlib import Path

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class CMakeExtension(Extension):
    def __init__(self, name):
        super().__init__(name, sources=[])


class CMakeBuild(build_ext):
    def build_extension(self, ext):
        extdir = Path(self.get_ext_fullpath(ext.name)).parent.resolve()
        build_dir = Path(self.build_temp).resolve()
        build_dir.mkdir(parents=True, exist_ok=True)
        source_dir = Path(__file__).parent.resolve()

        cmake_args = [
            f"-DCMAKE_LIBRARY_OUTPUT_DIRECTORY={extdir}",
            f"-DPython3_EXECUTABLE={sys.executable}",
            "-DCMAKE_BUILD_TYPE=Release",
            "-DMAGSYM_BUILD_TESTS=OFF",
            "-DMAGSYM_BUILD_PYTHON=ON",
        ]
        subprocess.run(["cmake", str(source_dir), *cmake_args], cwd=build_dir, check=True)
        subprocess.run(["cmake", "--build", ".", "--target", "_core", "-j"],
                       cwd=build_dir, check=True)


setup(
    packages=["magsym"],
    package_dir={"": "python"},
    ext_modules=[CMakeExtension("magsym._core")],
    cmdclass={"build_ext": CMakeBuild},
    zip_safe=False,
)
