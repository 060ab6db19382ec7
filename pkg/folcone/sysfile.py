# sysfile.py - system documents, report documents and plot data
"""sysfile.py -- reading system files and writing reports.

A system file is JSON:

    {"name": "gm", "rank": 2, "letters": ["a", "b"],
     "transitions": [{"from": "a", "to": "a", "class": [1, 0]},
                     {"from": "a", "to": "b", "class": [0, 1]},
                     {"from": "b", "to": "a", "class": [1, 0]}]}

"name" is optional and defaults to the file stem.

Reports are rendered either as text or as JSON in which every rational
is exact: integers stay JSON numbers, other rationals become "p/q"
strings. parse_report() undoes render_json().
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import cmp_to_key
import csv
import io
import json
import logging
import os
import re

from .cone import (Cone, Containment, GordanDual, MembershipCombo,
                   PositiveWitness, SeparatingFunctional,
                   cone_from_inequalities, ray_vector)
from .errors import (DegeneratePlane, FileAccessError, SchemaError,
                     SystemSyntaxError)
from .foliation import (BoundaryRayInInterior, ConeFamilyReport,
                        DiskVerdict, FoliationConeReport,
                        MaximalityVerdict, RayClassification)
from .markov import validate_system
from .misc import dot, fmt_rational, negate, plain, rank
from .orbit import ConvergenceReport, OracleReport

logger = logging.getLogger(__name__)

FRACTION_RE = re.compile(r'^-?\d+/\d+$')

ALL_SENTINEL = 'ALL'


@dataclass(frozen=True)
class TransitionRecord(object):
    "One entry of the transitions list"
    source: str
    target: str
    cls: tuple


@dataclass(frozen=True)
class SystemDocument(object):
    "A syntactically valid system file"
    name: str
    rank: int
    letters: tuple
    transitions: tuple


def _is_int(x):
    return isinstance(x, int) and not isinstance(x, bool)


def parse_system_file(text, name=None):
    """Parse the text of a system file into a SystemDocument.

    Raises SystemSyntaxError with the line and column of malformed JSON,
    and SchemaError naming the first bad field otherwise.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as err:
        raise SystemSyntaxError(err.lineno, err.colno, err.msg)
    if not isinstance(doc, dict):
        raise SchemaError('document', 'must be a JSON object')

    if 'rank' not in doc:
        raise SchemaError('rank')
    rank_ = doc['rank']
    if not _is_int(rank_):
        raise SchemaError('rank', 'must be an integer')
    if rank_ < 1:
        raise SchemaError('rank', 'must be at least 1, got %d' % rank_)

    if 'letters' not in doc:
        raise SchemaError('letters')
    letters = doc['letters']
    if not isinstance(letters, list):
        raise SchemaError('letters', 'must be a list')
    for k, letter in enumerate(letters):
        if not isinstance(letter, str):
            raise SchemaError('letters[%d]' % k, 'must be a string')

    if 'transitions' not in doc:
        raise SchemaError('transitions')
    raw = doc['transitions']
    if not isinstance(raw, list):
        raise SchemaError('transitions', 'must be a list')
    records = []
    for k, t in enumerate(raw):
        where = 'transitions[%d]' % k
        if not isinstance(t, dict):
            raise SchemaError(where, 'must be an object')
        for key in ('from', 'to', 'class'):
            if key not in t:
                raise SchemaError('%s.%s' % (where, key))
        for key in ('from', 'to'):
            if not isinstance(t[key], str):
                raise SchemaError('%s.%s' % (where, key), 'must be a string')
        cls = t['class']
        if not isinstance(cls, list) or len(cls) != rank_ or \
           not all(_is_int(c) for c in cls):
            raise SchemaError('%s.class' % where,
                              'must be %d integers' % rank_)
        records.append(TransitionRecord(t['from'], t['to'], tuple(cls)))

    doc_name = doc.get('name', name)
    if doc_name is None:
        doc_name = 'system'
    if not isinstance(doc_name, str):
        raise SchemaError('name', 'must be a string')
    return SystemDocument(doc_name, rank_, tuple(letters), tuple(records))


def read_system(path):
    "Read, parse and validate the system file at path."
    try:
        with open(path, 'r', encoding='utf-8') as f:
            text = f.read()
    except (IOError, OSError) as err:
        raise FileAccessError('failed to open %s: %s' % (path, err.strerror))
    except UnicodeDecodeError as err:
        raise FileAccessError('%s is not UTF-8 text: byte %d' %
                              (path, err.start))
    stem = os.path.splitext(os.path.basename(path))[0]
    doc = parse_system_file(text, name=stem)
    logger.debug("read %s: %d letters, %d transitions", path,
                 len(doc.letters), len(doc.transitions))
    return validate_system(doc)


# machine-readable reports

def _vec(v):
    return [plain(a) for a in v]


def _vecs(vs):
    return [_vec(v) for v in vs]


def cone_to_dict(c):
    "Both representations of a cone"
    return {
        'rank': c.rank,
        'generators': _vecs(c.generators),
        'lineality': _vecs(c.lineality),
        'facets': _vecs(c.facets),
        'equations': _vecs(c.equations),
    }


def certificate_to_dict(cert):
    "Any certificate, tagged with its variant"
    if cert is None:
        return None
    if isinstance(cert, MembershipCombo):
        return {'variant': cert.variant,
                'generators': _vecs(cert.generators),
                'generator_coeffs': _vec(cert.generator_coeffs),
                'lineality': _vecs(cert.lineality),
                'lineality_coeffs': _vec(cert.lineality_coeffs)}
    if isinstance(cert, SeparatingFunctional):
        return {'variant': cert.variant, 'normal': _vec(cert.normal)}
    if isinstance(cert, GordanDual):
        return {'variant': cert.variant, 'vectors': _vecs(cert.vectors),
                'coeffs': _vec(cert.coeffs)}
    if isinstance(cert, PositiveWitness):
        return {'variant': cert.variant, 'point': _vec(cert.point)}
    if isinstance(cert, Containment):
        out = {'variant': 'Containment', 'contained': cert.contained,
               'violation': None}
        if cert.violation is not None:
            out['violation'] = {'vector': _vec(cert.violation[0]),
                                'facet': _vec(cert.violation[1])}
        return out
    if isinstance(cert, BoundaryRayInInterior):
        return {'variant': 'BoundaryRayInInterior', 'ray': _vec(cert.ray),
                'facet': _vec(cert.facet)}
    raise TypeError('no rendering for %r' % (cert,))


def _loop_dict(system, loop):
    return {'word': list(system.names(loop.word)), 'class': _vec(loop.cls)}


def summary_to_dict(system):
    "What folcone check prints"
    return {
        'name': system.name,
        'rank': system.rank,
        'letters': len(system.letters),
        'transitions': len(system.transitions),
        'loops': len(system.loops),
        'product_type': system.product_type,
    }


def loops_to_dict(system, strings=None):
    "Minimal loops, and periodic strings when given"
    out = {'name': system.name,
           'loops': [_loop_dict(system, l) for l in system.loops]}
    if strings is not None:
        out['periodic_strings'] = [list(system.names(p.word))
                                   for p in strings]
    return out


def foliation_to_dict(report):
    "A FoliationConeReport"
    system = report.system
    return {
        'name': report.name,
        'rank': report.rank,
        'loops': [_loop_dict(system, l) for l in report.loops],
        'homology_cone': cone_to_dict(report.homology_cone),
        'foliation_cone': cone_to_dict(report.foliation_cone),
        'witness': _vec(report.witness),
        'facets': [{'normal': _vec(f.normal), 'loops': list(f.loops)}
                   for f in report.facets],
    }


def classification_to_dict(rc):
    "A RayClassification"
    return {
        'vector': _vec(rc.vector),
        'representative': _vec(rc.representative),
        'verdict': rc.verdict,
        'pairings': _vec(rc.pairings),
        'certificate': certificate_to_dict(rc.certificate),
    }


def family_to_dict(family):
    "A ConeFamilyReport"
    return {
        'names': [r.name for r in family.reports],
        'matrix': [[{'verdict': cell.verdict,
                     'certificate': certificate_to_dict(cell.certificate)}
                    for cell in row] for row in family.matrix],
        'flags': [{'pair': [f.i, f.j], 'coincident': f.coincident,
                   'distinct': f.distinct} for f in family.flags],
    }


def disk_to_dict(system, verdict):
    "A DiskVerdict"
    out = {'name': system.name, 'subcone': verdict.subcone,
           'violation': None}
    v = verdict.violation
    if v is not None:
        out['violation'] = {'loop': list(system.names(v.loop.word)),
                            'loop_index': v.loop_index, 'disk': v.disk,
                            'value': plain(v.value)}
    return out


def maximality_to_dict(verdict):
    "A MaximalityVerdict"
    return {'verdict': verdict.verdict,
            'certificate': certificate_to_dict(verdict.certificate)}


def convergence_to_dict(system, report):
    "A ConvergenceReport"
    trials = []
    for t in report.trials:
        trials.append({
            'index': t.index,
            'seed': t.seed,
            'walks': t.walks,
            'verdicts': dict(t.verdicts),
            'outside': t.outside,
            'checkpoints': [{'t': c, 'direction': _vec(v)}
                            for c, v in t.checkpoints],
            'statistic': None if t.statistic is None else plain(t.statistic),
            'direction': None if t.direction is None else _vec(t.direction),
            'multiplicities': [{'word': list(system.names(l.word)), 'count': n}
                               for l, n in t.multiplicities],
            'no_return': t.no_return,
        })
    stat = report.statistic
    return {
        'name': report.name,
        'steps': report.config.steps,
        'trials': trials,
        'seed': report.config.seed,
        'window': report.config.window,
        'mode': report.config.mode,
        'extend': report.config.extend,
        'statistic': None if stat is None else plain(stat),
        'contained': report.contained,
    }


def oracle_to_dict(report):
    "An OracleReport"
    return {
        'max_len': report.max_len,
        'integer_max_len': report.integer_max_len,
        'cones_equal': report.cones_equal,
        'strings': report.strings,
        'homology_cone': cone_to_dict(report.homology_cone),
        'brute_force_cone': cone_to_dict(report.brute_cone),
        'failures': [{'word': list(p.word), 'check': why}
                     for p, why in report.failures],
    }


def _default(obj):
    if isinstance(obj, Fraction):
        return fmt_rational(obj)
    raise TypeError('cannot serialize %r' % (obj,))


def render_json(data):
    "Deterministic JSON text of a report dictionary"
    return json.dumps(data, indent=2, sort_keys=True, default=_default) + '\n'


def _revive(obj):
    if isinstance(obj, str) and FRACTION_RE.match(obj):
        return Fraction(obj)
    if isinstance(obj, list):
        return [_revive(a) for a in obj]
    if isinstance(obj, dict):
        return dict((k, _revive(v)) for k, v in obj.items())
    return obj


def parse_report(text):
    "Inverse of render_json()"
    try:
        data = json.loads(text)
    except json.JSONDecodeError as err:
        raise SystemSyntaxError(err.lineno, err.colno, err.msg)
    return _revive(data)


def to_dict(system, obj):
    "Dispatch any report object to its dictionary form."
    if isinstance(obj, FoliationConeReport):
        return foliation_to_dict(obj)
    if isinstance(obj, RayClassification):
        return classification_to_dict(obj)
    if isinstance(obj, ConeFamilyReport):
        return family_to_dict(obj)
    if isinstance(obj, DiskVerdict):
        return disk_to_dict(system, obj)
    if isinstance(obj, MaximalityVerdict):
        return maximality_to_dict(obj)
    if isinstance(obj, ConvergenceReport):
        return convergence_to_dict(system, obj)
    if isinstance(obj, OracleReport):
        return oracle_to_dict(obj)
    raise TypeError('no rendering for %r' % (obj,))


# text reports

def fmt_vector(v):
    "(p, q/r, ...)"
    return '(%s)' % ', '.join(fmt_rational(a) for a in v)


def _fmt_word(system, word):
    return '(%s)' % ','.join(system.names(word))


def render_text(system, obj):
    "Human-readable rendering of a report object"
    lines = []
    if isinstance(obj, FoliationConeReport):
        c = obj.foliation_cone
        lines.append('system %s, rank %d' % (obj.name, obj.rank))
        lines.append('minimal loops: %d' % len(obj.loops))
        for l in obj.loops:
            lines.append('  %s: %s' % (_fmt_word(system, l.word),
                                       fmt_vector(l.cls)))
        lines.append('foliation cone generators: %s' %
                     ' '.join(fmt_vector(g) for g in c.generators))
        if c.lineality:
            lines.append('foliation cone lineality: %s' %
                         ' '.join(fmt_vector(g) for g in c.lineality))
        lines.append('foliation cone facets: %d' % len(obj.facets))
        for f in obj.facets:
            lines.append('  %s >= 0 from %s' % (
                fmt_vector(f.normal),
                ' '.join(_fmt_word(system, obj.loops[k].word)
                         for k in f.loops)))
        if c.is_whole_space:
            lines.append('foliated product: the whole space')
        lines.append('witness: %s' % fmt_vector(obj.witness))
    elif isinstance(obj, RayClassification):
        lines.append('ray %s, representative %s: %s' %
                     (fmt_vector(obj.vector), fmt_vector(obj.representative),
                      obj.verdict))
        lines.append('pairings: %s' % fmt_vector(obj.pairings))
    elif isinstance(obj, ConeFamilyReport):
        names = [r.name for r in obj.reports]
        for i, row in enumerate(obj.matrix):
            lines.append('%s: %s' % (names[i],
                                     ' '.join(cell.verdict for cell in row)))
        for f in obj.flags:
            lines.append('shared interior: %s %s%s' % (
                names[f.i], names[f.j],
                ' (coincident)' if f.coincident else ''))
    elif isinstance(obj, DiskVerdict):
        if obj.subcone:
            lines.append('disk orthant is a subcone of the foliation cone')
        else:
            v = obj.violation
            lines.append('loop %d %s has disk %d coordinate %s' %
                         (v.loop_index, _fmt_word(system, v.loop.word),
                          v.disk, fmt_rational(v.value)))
    elif isinstance(obj, MaximalityVerdict):
        lines.append('maximality: %s' % obj.verdict)
    elif isinstance(obj, ConvergenceReport):
        for t in obj.trials:
            if t.no_return:
                lines.append('trial %d seed %d: %s' % (t.index, t.seed,
                                                       t.no_return))
                continue
            lines.append('trial %d seed %d: %d walks, %d outside, '
                         'direction %s, statistic %s' %
                         (t.index, t.seed, t.walks, t.outside,
                          fmt_vector(t.direction),
                          '-' if t.statistic is None
                          else fmt_rational(t.statistic)))
        lines.append('contained: %s' % ('yes' if obj.contained else 'no'))
    elif isinstance(obj, OracleReport):
        lines.append('brute force cone to length %d %s the homology cone' %
                     (obj.max_len, 'equals' if obj.cones_equal
                      else 'DIFFERS FROM'))
        lines.append('%d periodic strings to length %d, %d failures' %
                     (obj.strings, obj.integer_max_len, len(obj.failures)))
    else:
        raise TypeError('no rendering for %r' % (obj,))
    return '\n'.join(lines) + '\n'


# plot data

def parse_plane(text, d):
    "Parse 'v1;v2' with comma-separated rationals into two vectors."
    halves = text.split(';')
    if len(halves) != 2:
        raise DegeneratePlane('plane needs exactly two vectors: %r' % text)
    try:
        return [ray_vector([h.strip() for h in half.split(',')], d)
                for half in halves]
    except ValueError as err:
        raise DegeneratePlane('bad plane %r: %s' % (text, err))


def _angle_cmp(u, v):
    "Counterclockwise order of nonzero plane vectors, starting at angle 0"
    def half(w):
        return 0 if (w[1] > 0 or (w[1] == 0 and w[0] > 0)) else 1
    if half(u) != half(v):
        return half(u) - half(v)
    cross = u[0] * v[1] - u[1] * v[0]
    return -1 if cross > 0 else (1 if cross < 0 else 0)


def slice_plot_data(report, plane):
    """Boundary directions of the cone cut by span(plane), in plane
    coordinates and counterclockwise order.

    Returns [] when the cone meets the plane only at 0, and [ALL_SENTINEL]
    when it contains the whole plane.
    """
    c = report if isinstance(report, Cone) else report.foliation_cone
    if len(plane) != 2:
        raise DegeneratePlane('plane needs exactly two vectors')
    v1, v2 = [ray_vector(v, c.rank) for v in plane]
    if rank([v1, v2], c.rank) != 2:
        raise DegeneratePlane('plane vectors are linearly dependent')
    normals = [(dot(f, v1), dot(f, v2)) for f in c.facets]
    cut = cone_from_inequalities(normals, 2)
    if cut.is_zero:
        return []
    if cut.is_whole_space:
        return [ALL_SENTINEL]
    if cut.lineality:
        rays = list(cut.lineality) + [negate(l) for l in cut.lineality]
    else:
        rays = list(cut.generators)
    rays.sort(key=cmp_to_key(_angle_cmp))
    return rays


def write_plot_csv(rows, out=None):
    "CSV text of slice_plot_data() rows, header first; written to out."
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator='\n')
    writer.writerow(['s', 't'])
    for row in rows:
        if ALL_SENTINEL == row:
            writer.writerow([ALL_SENTINEL])
        else:
            writer.writerow([fmt_rational(a) for a in row])
    text = buf.getvalue()
    if out is not None:
        try:
            with open(out, 'w', encoding='utf-8', newline='') as f:
                f.write(text)
        except (IOError, OSError) as err:
            raise FileAccessError('failed to write %s: %s' %
                                  (out, err.strerror))
    return text
