#   Copyright (c) 2026 grpd Authors. All Rights Reserved.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Setup grpd."""

import setuptools


with open("README.md", "r") as f:
    readme = f.read()


if __name__ == "__main__":
    setuptools.setup(
        name="grpd",
        version="0.1.0",
        description="Exact rational checks of VB-groupoids, their frame bundles and the general linear 2-groupoid",
        long_description=readme,
        long_description_content_type="text/markdown",
        packages=setuptools.find_packages(exclude=["tests", "tests.*"]),
        package_data={"grpd.data": ["fixtures/*.vbg"]},
        classifiers=[
            "Programming Language :: Python :: 3.8",
            "License :: OSI Approved :: Apache Software License",
            "Intended Audience :: Science/Research",
            "Topic :: Scientific/Engineering :: Mathematics",
        ],
        python_requires=">=3.8",
        install_requires=[
            "numpy",
            "termcolor",
            "tqdm"
        ],
        extras_require={
            "test": [
                "pytest",
                "hypothesis"
            ]
        },
        entry_points={
            "console_scripts": [
                "grpd=grpd.scripts.cli:main"
            ]
        }
    )
