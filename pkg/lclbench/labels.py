# -*- coding: utf-8; -*-

"""Label alphabets and the JSON labeling format.

Outputs are stored per node as a tagged union:

    * a plain string from the coloring alphabet (Active nodes, unweighted
      problems);
    * ``WeightOutput(primary, secondary)`` for weight nodes of the weighted
      coloring and the d-free weight problem;
    * ``HierLabel(tag, orient, secondary)`` for hierarchical labelings, where
      ``orient`` maps every neighbour index to ``IN``, ``OUT`` or ``NONE``.
"""

import json
import re
from collections import namedtuple

from lclbench.exc import InvalidLabel

ACTIVE = 'Active'
WEIGHT = 'Weight'
INPUT_LABELS = (ACTIVE, WEIGHT)

# d-free inputs
A = 'A'
W_INPUT = 'W'

WHITE, BLACK, EXEMPT, DECLINE_COLOR = 'W', 'B', 'E', 'D'
RED, GREEN, YELLOW = 'R', 'G', 'Y'

ALPHABET_25 = (WHITE, BLACK, EXEMPT, DECLINE_COLOR)
ALPHABET_35 = (RED, GREEN, YELLOW, WHITE, BLACK, EXEMPT, DECLINE_COLOR)
VARIANTS = ('2.5', '3.5')

DECLINE, CONNECT, COPY = 'Decline', 'Connect', 'Copy'
WEIGHT_PRIMARIES = (DECLINE, CONNECT, COPY)

IN, OUT, NONE = 'in', 'out', 'none'
ORIENTATIONS = (IN, OUT, NONE)

WeightOutput = namedtuple('WeightOutput', 'primary secondary')
WeightOutput.__new__.__defaults__ = (None,)

HierLabel = namedtuple('HierLabel', 'tag orient secondary')
HierLabel.__new__.__defaults__ = (None,)


def dfree_input(label):
    """A / W for a d-free instance; Active nodes count as A."""
    return {ACTIVE: A, WEIGHT: W_INPUT}.get(label, label)


def alphabet(variant):
    if variant == '2.5':
        return ALPHABET_25
    if variant == '3.5':
        return ALPHABET_35
    raise InvalidLabel('Unknown variant %r, expected one of %s' % (
        variant, ', '.join(VARIANTS)))


_TAG_RE = re.compile(r'^([RC])(\d+)$')


def parse_tag(tag):
    """Return ``(kind, index)`` for a hierarchical tag such as ``'C2'``."""
    m = _TAG_RE.match(tag or '')
    if not m:
        raise InvalidLabel('Malformed hierarchical label %r' % (tag,))
    return m.group(1), int(m.group(2))


def tag_rank(tag):
    # R1 < C1 < R2 < C2 < ... < R_k
    kind, i = parse_tag(tag)
    return 2 * (i - 1) + (1 if kind == 'C' else 0)


def rake(i):
    return 'R%d' % i


def compress(i):
    return 'C%d' % i


def is_rake(tag):
    return parse_tag(tag)[0] == 'R'


def is_compress(tag):
    return parse_tag(tag)[0] == 'C'


def hier_tags(k):
    tags = []
    for i in range(1, k + 1):
        tags.append(rake(i))
        if i < k:
            tags.append(compress(i))
    return tags


def flip(orientation):
    return {IN: OUT, OUT: IN}.get(orientation, NONE)


def _encode(label):
    if isinstance(label, HierLabel):
        entry = {'primary': label.tag,
                 'orient': dict((str(u), o) for u, o in sorted(label.orient.items()))}
        if label.secondary is not None:
            entry['secondary'] = label.secondary
        return entry
    if isinstance(label, WeightOutput):
        entry = {'primary': label.primary}
        if label.secondary is not None:
            entry['secondary'] = label.secondary
        return entry
    return {'primary': label}


def _decode(entry):
    primary = entry['primary']
    if 'orient' in entry:
        orient = dict((int(u), o) for u, o in entry['orient'].items())
        return HierLabel(primary, orient, entry.get('secondary'))
    if primary in WEIGHT_PRIMARIES:
        return WeightOutput(primary, entry.get('secondary'))
    return primary


def dump_labeling(problem, params, labels):
    doc = {
        'problem': problem,
        'params': params,
        'labels': [_encode(l) for l in labels],
    }
    return json.dumps(doc, sort_keys=True, separators=(',', ':'))


def store_labeling(path, problem, params, labels):
    with open(path, 'wt') as f:
        f.write(dump_labeling(problem, params, labels))
        f.write('\n')


def load_labeling(path):
    """Return ``(problem, params, labels)`` read from a labeling file."""
    with open(path) as f:
        try:
            doc = json.load(f)
        except ValueError as exc:
            raise InvalidLabel('%s is not a labeling file: %s' % (path, exc))
    try:
        return doc['problem'], doc.get('params', {}), [_decode(e) for e in doc['labels']]
    except (KeyError, TypeError) as exc:
        raise InvalidLabel('%s: malformed labeling (%s)' % (path, exc))
