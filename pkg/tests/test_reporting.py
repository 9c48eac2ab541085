"""Tests for table and JSON rendering of command results."""

import json

import pytest
from sympy import QQ

from src.algebra.poly import CyclicPoly
from src.reporting import ReportOrchestrator, to_json_value
from src.repring import RepElement


@pytest.fixture
def reporter(config):
    return ReportOrchestrator(config)


def test_to_json_value():
    assert to_json_value(QQ(-3, 2)) == '-3/2'
    assert to_json_value({1: [True, None]}) == {'1': [True, None]}
    assert to_json_value(RepElement(1, {(2,): 1})) == {'[2]': 1}


def test_polynomials_are_serialized(g1):
    data = to_json_value(CyclicPoly.word(g1, (0, 1)))
    assert data['type'] == 'cyclic'
    assert len(data['terms']) == 1


def test_json_report(reporter):
    result = {'command': 'relations0', 'title': 'Pure Braid Relations', 'holds': True,
              'fields': {'punctures': 4, 'checked': 19, 'failures': []}}
    report = json.loads(reporter.render(result, 'json'))
    assert report == {'command': 'relations0', 'holds': True,
                      'result': {'punctures': 4, 'checked': 19, 'failures': []}}


def test_json_report_omits_missing_status(reporter):
    report = json.loads(reporter.render({'command': 'mobius', 'fields': {'n': 3}}, 'json'))
    assert 'holds' not in report


def test_table_report(reporter):
    result = {'command': 'appendix-a', 'title': 'Polylogarithm Divergence Identity',
              'holds': False, 'fields': {'m': 2, 'binomial_expansion': 'ok',
                                         'parts': {'lhs': QQ(1, 3)}}}
    text = reporter.render(result, 'table')
    assert 'Polylogarithm Divergence Identity' in text
    assert 'Status: FAIL' in text
    assert 'BINOMIAL EXPANSION' in text
    assert 'lhs: 1/3' in text


def test_default_format_comes_from_config(config):
    config['output']['format'] = 'json'
    text = ReportOrchestrator(config).render({'command': 'pollack', 'holds': True, 'fields': {}})
    assert json.loads(text)['holds'] is True


def test_unknown_format(reporter):
    with pytest.raises(ValueError):
        reporter.render({'command': 'x', 'fields': {}}, 'xml')
