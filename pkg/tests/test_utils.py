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
"""Tests of the argument, random and sampling utilities."""

import argparse

import pytest

from grpd.data.sampler import sample_frames
from grpd.utils.args import Args, parse_args, str2bool
from grpd.utils.misc import Timer
from grpd.utils.rng import SplitMix64, default_seed


def test_splitmix_reference_value():
    assert SplitMix64(0).next_u64() == 0xE220A8397B1DCDAF


def test_splitmix_is_deterministic():
    a, b = SplitMix64(123), SplitMix64(123)
    assert [a.randint(-3, 3) for _ in range(20)] == [b.randint(-3, 3) for _ in range(20)]
    assert all(-3 <= SplitMix64(i).randint(-3, 3) <= 3 for i in range(50))


def test_spawned_streams_depend_on_the_label():
    root = SplitMix64(7)
    assert root.spawn("a").next_u64() == SplitMix64(7).spawn("a").next_u64()
    assert root.spawn("a").next_u64() != root.spawn("b").next_u64()


def test_rng_errors():
    with pytest.raises(ValueError):
        SplitMix64(0).randint(2, 1)
    with pytest.raises(IndexError):
        SplitMix64(0).choice([])


def test_default_seed(monkeypatch):
    monkeypatch.delenv("GRPD_SEED", raising=False)
    assert default_seed() == 0
    monkeypatch.setenv("GRPD_SEED", "0x10")
    assert default_seed() == 16
    monkeypatch.setenv("GRPD_SEED", "seven")
    with pytest.raises(ValueError):
        default_seed()


def test_str2bool():
    assert str2bool("Yes") and not str2bool("0")
    with pytest.raises(argparse.ArgumentTypeError):
        str2bool("maybe")


def test_parse_args_groups_by_title():
    parser = argparse.ArgumentParser()
    parser.add_argument("spec")
    group = parser.add_argument_group("Run")
    group.add_argument("--seed", type=int, default=0)
    args = parse_args(parser, ["x.vbg", "--seed", "4"])
    assert args == Args(spec="x.vbg", Run=Args(seed=4))
    assert args.seed == 4
    assert args.get("missing", 1) == 1


def test_args_load_into_group(tmp_path):
    path = tmp_path / "conf.json"
    path.write_text('{"trials": 5}')
    args = Args(Suite=Args(trials=100))
    args.load(str(path), "Suite")
    assert args.trials == 5


def test_sample_is_reproducible(instance):
    first = sample_frames(instance, seed=4, per_arrow=2, basepairs=1)
    second = sample_frames(instance, seed=4, per_arrow=3, basepairs=1)
    for g in instance.base.arrows:
        assert first.frames[g] == second.frames[g][:2]
    assert first.basepairs == second.basepairs
    assert len(first.all_basepairs()) == len(instance.base.objects)


def test_negative_sample_size(canonical_one):
    with pytest.raises(ValueError):
        sample_frames(canonical_one, seed=0, per_arrow=-1)


def test_timer_accumulates_laps_per_suite():
    timer = Timer()
    with timer.lap("GL2Suite"):
        pass
    with timer.lap("GL2Suite"):
        pass
    with pytest.raises(KeyError):
        with timer.lap("ActionSuite"):
            raise KeyError("suite failed")
    assert list(timer.laps) == ["GL2Suite", "ActionSuite"]
    assert all(t >= 0 for t in timer.laps.values())
    assert timer.total == pytest.approx(sum(timer.laps.values()))


def test_args_attribute_lookup_searches_groups():
    args = Args(spec="x.vbg", GL2=Args(gl2_trials=500))
    assert args.gl2_trials == 500
    assert args.crossed_module_trials is None
    assert args.get("crossed_module_trials", 3) == 3
