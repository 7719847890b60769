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
"""Suite base."""

from abc import abstractmethod, ABC

from tqdm import tqdm

from grpd.core.report import Report
from grpd.utils.rng import SplitMix64


class Suite(ABC):
    """Basic verification suite.

    A suite checks a family of identities on a VB-groupoid and its frame sample and
    returns one record per checked identity and trial.
    """

    def __init__(self, args):
        self.trials = args.get("trials", 100)
        self.seed = args.get("seed", 0)
        self.progress = bool(args.get("progress", False))

    @classmethod
    def add_cmdline_args(cls, parser):
        """Add cmdline arguments of the suite."""
        return None

    @abstractmethod
    def run(self, vb, sample) -> Report:
        """Run the suite."""
        raise NotImplementedError

    def rng(self, label):
        """The random stream of this suite, derived from the seed."""
        return SplitMix64(self.seed).spawn(label)

    def trial_range(self, desc, trials=None):
        """The trial indices, `trials` defaulting to --trials."""
        if trials is None:
            trials = self.trials
        return tqdm(range(trials), desc=desc, disable=not self.progress, leave=False)
