"""Constructors for the built-in group families and the generator file format.

Descriptors: Cn, Dn (dihedral of order n), Qn (generalized quaternion /
dicyclic of order n, regular representation), Sn, An, PSL(2,p) (on the
projective line, p+1 points), direct products joined with "x" (e.g.
"C3xC3", "D8xC2"), and "file:<path>" for user-supplied permutation
generators.
"""

from __future__ import annotations

import os
import re
from math import factorial
from pathlib import Path

from .groups import ENUMERATION_CAP, FiniteGroup
from .perm import format_cycles, identity, parse_cycles

_ATOM_RE = re.compile(r"^(C|D|Q|S|A)(\d+)$|^PSL\(2,(\d+)\)$")


def _cyclic(n):
    if n < 1:
        raise ValueError("Cn needs n >= 1")
    return [tuple((i + 1) % n for i in range(n))], n


def _dihedral(n):
    if n < 6 or n % 2:
        raise ValueError("Dn needs even order n >= 6 (natural action on n/2 points)")
    k = n // 2
    rot = tuple((i + 1) % k for i in range(k))
    ref = tuple((k - i) % k for i in range(k))
    return [rot, ref], n


def _quaternion(n):
    # Dicyclic group of order n = 4m:  a^(2m)=1, b^2=a^m, b a b^-1 = a^-1,
    # acting on itself by right multiplication.  Element (i, eps) <-> a^i b^eps
    # gets index i + 2m*eps.
    if n < 8 or n % 4:
        raise ValueError("Qn needs order n divisible by 4, n >= 8")
    m = n // 4
    twom = 2 * m
    perm_a = [0] * n
    perm_b = [0] * n
    for i in range(twom):
        perm_a[i] = (i + 1) % twom  # a^i * a
        perm_a[twom + i] = twom + (i - 1) % twom  # a^i b * a = a^(i-1) b
        perm_b[i] = twom + i  # a^i * b
        perm_b[twom + i] = (i + m) % twom  # a^i b * b = a^(i+m)
    return [tuple(perm_a), tuple(perm_b)], n


def _symmetric(n):
    if n < 2:
        raise ValueError("Sn needs n >= 2")
    tr = tuple([1, 0] + list(range(2, n)))
    cyc = tuple((i + 1) % n for i in range(n))
    return [tr, cyc], factorial(n)


def _alternating(n):
    if n < 3:
        raise ValueError("An needs n >= 3")
    three = tuple([1, 2, 0] + list(range(3, n)))
    if n % 2:
        big = tuple((i + 1) % n for i in range(n))
    else:
        big = tuple([0] + [1 + (i % (n - 1)) for i in range(1, n)])
    gens = [three, big] if n > 3 else [three]
    return gens, factorial(n) // 2


def _psl2(p):
    # Points 0..p-1 are the residues, point p is infinity.
    if p < 2 or any(p % q == 0 for q in range(2, int(p**0.5) + 1)):
        raise ValueError("PSL(2,p) needs p prime")
    inf = p
    t = [0] * (p + 1)
    s = [0] * (p + 1)
    t[inf] = inf
    s[inf] = 0
    s[0] = inf
    for x in range(p):
        t[x] = (x + 1) % p
    for x in range(1, p):
        s[x] = (-pow(x, -1, p)) % p
    order = p * (p * p - 1) // (2 if p > 2 else 1)
    return [tuple(t), tuple(s)], order


_FAMILIES = {"C": _cyclic, "D": _dihedral, "Q": _quaternion, "S": _symmetric, "A": _alternating}


def _atom(spec):
    m = _ATOM_RE.match(spec)
    if not m:
        raise ValueError("unknown group descriptor %r" % spec)
    if m.group(3) is not None:
        return _psl2(int(m.group(3)))
    return _FAMILIES[m.group(1)](int(m.group(2)))


def read_generator_file(path):
    """Parse the generator file format.

    First line: ``degree <n>``; each further nonempty line one permutation
    in disjoint-cycle notation with 1-based points; ``()`` is the identity.
    """
    lines = [ln.strip() for ln in Path(path).read_text().splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise ValueError("empty generator file %s" % path)
    head = lines[0].split()
    if len(head) != 2 or head[0] != "degree" or not head[1].isdigit():
        raise ValueError("first line must be 'degree <n>', got %r" % lines[0])
    degree = int(head[1])
    gens = [parse_cycles(ln, degree) for ln in lines[1:]]
    if not gens:
        raise ValueError("no generators in %s" % path)
    return degree, gens


def write_generator_file(path, degree, gens):
    body = ["degree %d" % degree]
    body += [format_cycles(g) for g in gens]
    Path(path).write_text("\n".join(body) + "\n")


def builtin_group(spec, enumeration_cap=ENUMERATION_CAP):
    """Build a FiniteGroup from a descriptor string."""
    spec = spec.strip()
    if spec == "Sz8":
        # packaged generators on 65 points; order checked below
        path = os.path.join(os.path.dirname(__file__), "data", "sz8.gens")
        degree, gens = read_generator_file(path)
        G = FiniteGroup(gens, descriptor=spec, enumeration_cap=enumeration_cap)
        if G.order != 29120:
            raise ValueError("packaged Sz(8) generators give order %d" % G.order)
        return G
    if spec.startswith("file:"):
        degree, gens = read_generator_file(spec[5:])
        return FiniteGroup(gens, descriptor=spec, enumeration_cap=enumeration_cap)
    degree = 0
    gens = []
    expected = 1
    for atom in spec.split("x"):
        agens, aorder = _atom(atom.strip())
        adeg = len(agens[0])
        # shift the factor onto fresh points
        shifted = [
            tuple(list(range(degree)) + [degree + i for i in g]) for g in agens
        ]
        gens = [g + tuple(range(degree, degree + adeg)) for g in gens] + shifted
        degree += adeg
        expected *= aorder
    G = FiniteGroup(gens or [identity(1)], descriptor=spec, enumeration_cap=enumeration_cap)
    if G.order != expected:
        raise ValueError(
            "descriptor %s advertises order %d but generators give %d"
            % (spec, expected, G.order)
        )
    return G
