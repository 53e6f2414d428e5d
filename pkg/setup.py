# Copyright 2026 The qutritshare Authors
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

# This file is the basic package setup. The command-line front end lives in
# scripts/qos3.py and in the qutritshare.report package.
import setuptools

setuptools.setup(
    name="qutritshare",
    version="1.0",
    packages=setuptools.find_packages(exclude=("tests", "examples", "examples.*")),
    include_package_data=True,
    install_requires=(
        'numpy>=1.17',
        'scipy>=1.1',
    ),
    scripts=["scripts/qos3.py"],
    classifiers=[
        "Programming Language :: Python :: 3",
        "License :: Apache, Version 2.0",
        "Operating System :: OS Independent",
    ],
)
