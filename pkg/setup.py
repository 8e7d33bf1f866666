import sys

from cx_Freeze import Executable, setup
import src.constants as constants

# cx_Freeze's module finder recurses through the import graph and can
# exceed the default limit.
sys.setrecursionlimit(sys.getrecursionlimit() * 10)

# Dependencies are automatically detected, but it might need
# fine tuning.
build_options = {
    "packages": [
        # lark loads its grammar helpers lazily
        "lark",
        "numpy",
    ],
    "include_files": [
        "res/",
        "LICENCE.txt",
    ],
}

executables = [
    Executable(
        "./main.py",
        base=None,  # console application
        target_name="epsilon-embed",
    )
]

setup(
    name=constants.app_name,
    version=constants.app_version,
    description=constants.app_description,
    options={"build_exe": build_options},
    executables=executables,
)
