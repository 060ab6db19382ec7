# test_orbit.py - orbit simulation, closed walks and the cone oracles

from fractions import Fraction

import pytest

import folcone
from folcone import fake, orbit
from folcone.foliation import homology_cone
from folcone.markov import class_of
from folcone.orbit import (ClosedWalk, OrbitPath, SimulationConfig,
                           brute_force_cone, close_at_returns,
                           close_by_extension, convergence_report,
                           empirical_direction, integer_combination,
                           random_orbit, verify_minimal_loops)

from conftest import pinned


def path_of(system, letters):
    "An OrbitPath through the given letter indices"
    labels = [system.label(a, b) for a, b in zip(letters, letters[1:])]
    sums = [(0,) * system.rank]
    for label in labels:
        sums.append(tuple(s + c for s, c in zip(sums[-1], label)))
    return OrbitPath(tuple(letters), tuple(labels), tuple(sums), None)


def test_random_orbit_start(gm):
    path = random_orbit(gm, 1, 0)
    assert len(path.letters) == 2
    assert path.letters[0] == 0
    assert path.sums[1] == path.labels[0]


def test_random_orbit_forced(cycle3):
    path = random_orbit(cycle3, 6, 12345)
    assert path.letters == (0, 1, 2, 0, 1, 2, 0)


def test_random_orbit_deterministic(gm):
    a = random_orbit(gm, 10000, 42)
    b = random_orbit(gm, 10000, 42)
    assert a == b
    assert a != random_orbit(gm, 10000, 43)


def test_random_orbit_is_admissible():
    for seed in range(10):
        system = fake.random_system(seed)
        if system.product_type:
            with pytest.raises(folcone.ProductTypeSystem):
                random_orbit(system, 10, seed)
            continue
        path = random_orbit(system, 200, seed)
        for t, (a, b) in enumerate(zip(path.letters, path.letters[1:])):
            assert system.allowed(a, b)
            assert path.sums[t + 1] == tuple(
                s + c for s, c in zip(path.sums[t], system.label(a, b)))


def test_random_orbit_errors(product, gm):
    with pytest.raises(folcone.ProductTypeSystem):
        random_orbit(product, 5, 0)
    with pytest.raises(folcone.BadLength):
        random_orbit(gm, 0, 0)


def test_close_at_returns(gm):
    walks = close_at_returns(path_of(gm, (0, 0, 1, 0)))
    assert [(w.start, w.end, w.length, w.cls) for w in walks] == \
        [(0, 1, 1, (1, 0)), (1, 3, 2, (1, 1))]
    assert [w.word for w in walks] == [(0,), (0, 1)]


def test_close_at_returns_cycle(cycle3):
    walks = close_at_returns(path_of(cycle3, (0, 1, 2, 0, 1, 2, 0)))
    assert [w.cls for w in walks] == [(1, 1, 1), (1, 1, 1)]


def test_no_return(gm):
    with pytest.raises(folcone.NoReturn):
        close_at_returns(path_of(gm, (0, 1)))


def test_close_at_any_letter(gm):
    walks = close_at_returns(path_of(gm, (0, 1, 0, 0)), mode='any')
    assert [(w.start, w.end, w.word) for w in walks] == \
        [(0, 2, (0, 1)), (2, 3, (0,))]
    with pytest.raises(ValueError):
        close_at_returns(path_of(gm, (0, 0)), mode='sometimes')


def test_close_by_extension(gm):
    walk = close_by_extension(gm, path_of(gm, (0, 1)))
    assert walk.word == (0, 1)
    assert walk.cls == (1, 1)
    assert walk.cls == class_of(gm, walk.word)
    whole = close_by_extension(gm, path_of(gm, (0, 0, 1, 0)))
    assert whole.length == 3
    assert whole.cls == (2, 1)


def test_empirical_direction():
    d = empirical_direction(ClosedWalk(0, 3, 3, (2, 1), (0, 0, 1)))
    assert d.vector == (Fraction(2, 3), Fraction(1, 3))
    assert d.q == 3
    assert empirical_direction(ClosedWalk(0, 1, 1, (1, 0), (0,))).vector \
        == (1, 0)
    doubled = ClosedWalk(0, 6, 6, (4, 2), ())
    assert empirical_direction(doubled).vector == d.vector


def test_direction_of_concatenation(gm):
    walks = close_at_returns(random_orbit(gm, 500, 7))
    q = sum(w.length for w in walks)
    total = ClosedWalk(0, q, q, tuple(sum(w.cls[i] for w in walks)
                                      for i in range(2)), ())
    weighted = tuple(
        sum(Fraction(w.length, q) * empirical_direction(w).vector[i]
            for w in walks) for i in range(2))
    assert weighted == empirical_direction(total).vector


def test_convergence_report_gm(gm):
    config = SimulationConfig(steps=10000, trials=5, seed=1)
    report = convergence_report(gm, config)
    assert [t.seed for t in report.trials] == [1, 2, 3, 4, 5]
    assert report.contained
    for trial in report.trials:
        assert trial.outside == 0
        assert 'Outside' not in dict(trial.verdicts)
        assert trial.statistic is not None
        assert trial.statistic <= Fraction(1, 20)
        assert [t for t, _ in trial.checkpoints][-13:] == \
            [2 ** k for k in range(1, 14)]
        # the direction is exhibited by minimal-loop multiplicities
        assert sum(n for _, n in trial.multiplicities) == trial.walks
    assert report.statistic <= Fraction(1, 20)
    assert convergence_report(gm, config) == report
    stats = dict(('seed %d' % t.seed, t.statistic) for t in report.trials)
    text = folcone.render_json(stats)
    assert text == pinned('gm_simulate.json', text)


def test_convergence_single_cycle(cycle3):
    report = convergence_report(cycle3, SimulationConfig(steps=64, seed=3,
                                                         window=2))
    trial = report.trials[0]
    third = Fraction(1, 3)
    assert all(v == (third, third, third) for _, v in trial.checkpoints)
    assert trial.statistic == 0


def test_convergence_product(product):
    with pytest.raises(folcone.ProductTypeSystem):
        convergence_report(product, SimulationConfig(steps=10))


def test_simulation_config_errors():
    with pytest.raises(folcone.BadLength):
        SimulationConfig(steps=0)
    with pytest.raises(folcone.BadLength):
        SimulationConfig(steps=5, trials=0)


def test_brute_force_gm(gm):
    hcone = homology_cone(gm)
    assert brute_force_cone(gm, 2) == hcone
    assert brute_force_cone(gm, 8) == hcone
    with pytest.raises(folcone.BadLength):
        brute_force_cone(gm, 1)


def test_brute_force_self_loop(selfloop):
    assert brute_force_cone(selfloop, 5).generators == ((1, 0),)


def test_brute_force_random_systems():
    for seed in range(50):
        system = fake.random_system(seed)
        assert brute_force_cone(system, system.size) == \
            homology_cone(system), seed


def test_integer_combination(gm):
    loops = folcone.minimal_loops(gm)
    assert integer_combination(loops, (3, 1), 4) == (2, 1)
    assert integer_combination(loops, (0, 1), 1) is None


def test_verify_minimal_loops(gm):
    report = verify_minimal_loops(gm, max_len=8, integer_max_len=8)
    assert report.ok
    assert report.cones_equal
    assert report.strings > 0


def test_verify_minimal_loops_finds_missing_loop(gm, monkeypatch):
    monkeypatch.setattr(orbit, 'minimal_loops',
                        lambda system: folcone.minimal_loops(system)[:1])
    report = verify_minimal_loops(gm, max_len=4, integer_max_len=4)
    assert not report.ok
    failures = [(p.word, why) for p, why in report.failures]
    assert ((0, 1), 'missing minimal loop') in failures


def test_convergence_closes_tail_by_extension(cycle3):
    # 7 steps: two full turns and one step into a third
    plain = convergence_report(cycle3, SimulationConfig(steps=7))
    assert plain.trials[0].walks == 2
    report = convergence_report(cycle3, SimulationConfig(steps=7,
                                                         extend=True))
    trial = report.trials[0]
    assert trial.walks == 3
    third = Fraction(1, 3)
    assert trial.direction == (third, third, third)
    assert sum(n for _, n in trial.multiplicities) == 3


def test_extension_lengthens_the_walked_total(gm):
    config = SimulationConfig(steps=101, seed=4, extend=True)
    trial = convergence_report(gm, config).trials[0]
    total = sum(n * l.length for l, n in trial.multiplicities)
    assert total >= 101
    assert trial.outside == 0
