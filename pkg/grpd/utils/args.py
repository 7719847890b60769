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
"""Parse argument."""

import argparse
import json

__all__ = ["str2bool", "Args", "parse_args"]


def str2bool(v):
    """Parse on/off suite options such as --progress or --check_serialization."""
    if v.lower() in ("yes", "true", "t", "y", "1"):
        return True
    elif v.lower() in ("no", "false", "f", "n", "0"):
        return False
    else:
        raise argparse.ArgumentTypeError(f"Expected a yes/no value, got {v!r}")


class Args(dict):
    """Parsed options of a grpd command.

    Options are nested by argument group title (Run, Suite, GL2, ...). Lookups by
    option name search the top level first and then every group, so suites read
    `args.get("trials")` without knowing the group.
    """

    def __getattr__(self, name):
        return self.get(name)

    def get(self, key, default_value=None):
        """The option `key` from the top level or any group, else `default_value`."""
        if key in self.keys():
            return self[key]
        for v in self.values():
            if isinstance(v, Args):
                if key in v:
                    return v[key]
        return default_value

    def __setattr__(self, name, value):
        self[name] = value

    def load(self, filename, group_name=None):
        if filename is None:
            return
        if group_name is not None:
            if group_name not in self:
                self[group_name] = Args()
            self[group_name].load(filename)
            return
        with open(filename, "r") as fp:
            params_dict = json.load(fp)
        for k, v in params_dict.items():
            if isinstance(v, dict):
                self.setdefault(k, Args()).update(Args(v))
            else:
                self[k] = v



def _selected_parsers(parser: argparse.ArgumentParser, parsed):
    """The parser and, recursively, the subparsers chosen on the command line."""
    parsers = [parser]
    for action in parser._actions:
        if isinstance(action, argparse._SubParsersAction):
            choice = getattr(parsed, action.dest, None)
            if choice in action.choices:
                parsers.extend(_selected_parsers(action.choices[choice], parsed))
    return parsers


def parse_args(parser: argparse.ArgumentParser, argv=None, allow_unknown=False) -> Args:
    """ Parse arguments from cmdline.

    Positional and plain optional arguments land at the top level; arguments of a named
    group land in a nested Args under the group title.
    """
    if allow_unknown:
        parsed, _ = parser.parse_known_args(argv)
    else:
        parsed = parser.parse_args(argv)
    args = Args()
    for p in _selected_parsers(parser, parsed):
        for group in p._action_groups[:2]:
            for action in group._group_actions:
                if isinstance(action, (argparse._HelpAction, argparse._SubParsersAction)):
                    continue
                args[action.dest] = getattr(parsed, action.dest)
        for group in p._action_groups[2:]:
            group_args = Args()
            for action in group._group_actions:
                if isinstance(action, argparse._HelpAction):
                    continue
                group_args[action.dest] = getattr(parsed, action.dest)
            if len(group_args) > 0:
                if group.title in args:
                    args[group.title].update(group_args)
                else:
                    args[group.title] = group_args
    command = getattr(parsed, "command", None)
    if command is not None:
        args["command"] = command
    return args
