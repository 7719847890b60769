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
"""Define verification suites."""

from grpd.core.suite import Suite

SUITE_REGISTRY = {}


__all__ = [
    "SUITE_REGISTRY",
    "register_suite",
    "create_suite",
    "create_suites",
    "add_cmdline_args"
]


def register_suite(name):
    """Register a new suite class."""
    def __wrapped__(cls):
        if name in SUITE_REGISTRY:
            raise ValueError(f"Cannot register duplicate suite ({name})")
        if not issubclass(cls, Suite):
            raise ValueError(f"Suite ({name}: {cls.__name__}) must extend Suite")
        SUITE_REGISTRY[name] = cls
        return cls

    return __wrapped__


def create_suite(name, args) -> Suite:
    """Create a suite."""
    if name not in SUITE_REGISTRY:
        raise ValueError(f"Unknown suite type: {name}")
    return SUITE_REGISTRY[name](args)


def create_suites(args):
    """Create the suites selected by `--suite`; `all` selects every registered suite."""
    if args.suite == "all":
        return [create_suite(name, args) for name in SUITE_REGISTRY]
    return [create_suite(args.suite, args)]


def add_cmdline_args(parser):
    """Add cmdline argument of Suite."""
    group = parser.add_argument_group("Suite")
    group.add_argument("--suite", type=str, default="all",
                       choices=sorted(SUITE_REGISTRY) + ["all"],
                       help="The verification suite to run.")
    group.add_argument("--config_path", type=str, default=None,
                       help="A JSON file of suite options, loaded into this group.")
    for cls in SUITE_REGISTRY.values():
        cls.add_cmdline_args(parser)
    return group


import grpd.suites.groupoid
import grpd.suites.gl2
import grpd.suites.action
import grpd.suites.duality
import grpd.suites.roundtrip
import grpd.suites.representation
