#!/usr/bin/env python3
"""Regenerates the fixture model files under models/ in canonical form."""

import os

OUT = os.path.join(os.path.dirname(__file__), "..", "models")


def algebra(name, elements, ops):
    lines = [f"algebra {name} {{"]
    lines.append("  elements: " + ", ".join(elements) + ";")
    for op_name, arity, fn in ops:
        lines.append(f"  op {op_name}/{arity} {{")
        tuples = [[]]
        for _ in range(arity):
            tuples = [t + [e] for t in tuples for e in range(len(elements))]
        for t in tuples:
            args = ", ".join(elements[i] for i in t)
            lines.append(f"    ({args}) = {elements[fn(*t)]};")
        lines.append("  }")
    lines.append("}")
    return lines


def representation(name, omega1, omega2, a_elems, m_elems, act, mode=None):
    lines = [f"representation {name} {{"]
    lines.append(f"  omega1: {omega1};")
    lines.append(f"  omega2: {omega2};")
    if mode:
        lines.append(f"  mode: {mode};")
    lines.append("  action {")
    for a in range(len(a_elems)):
        for m in range(len(m_elems)):
            lines.append(f"    ({a_elems[a]}, {m_elems[m]}) = {m_elems[act(a, m)]};")
    lines.append("  }")
    lines.append("}")
    return lines


def geometry(name, rep_f, rep_g, basis_f, basis_g, h):
    lines = [f"geometry {name} {{"]
    lines.append(f"  repF: {rep_f};")
    lines.append(f"  repG: {rep_g};")
    lines.append("  basisF: " + ", ".join(basis_f) + ";")
    lines.append("  basisG: " + ", ".join(basis_g) + ";")
    lines.append("  h {")
    for i, v in enumerate(h):
        lines.append(f"    {i} = {v};")
    lines.append("  }")
    lines.append("}")
    return lines


def write(path, comment, blocks):
    lines = [f"# {comment}"]
    for block in blocks:
        lines.extend(block)
    with open(path, "w") as f:
        f.write("\n".join(lines) + "\n")


def cyc6():
    c6 = [f"a{i}" if i > 1 else ("e" if i == 0 else "a") for i in range(6)]
    blocks = [
        algebra("T1", ["u"], [("mul", 2, lambda i, j: 0)]),
        algebra("C6", c6, [("mul", 2, lambda i, j: (i + j) % 6)]),
        representation("f", "T1", "C6", ["u"], c6, lambda a, m: m,
                       mode="monoid(mul, u)"),
        # G(f) over basis [a] is {identity, inversion}; h is the identity.
        geometry("obj", "f", "f", ["a"], ["a"], [0, 1]),
    ]
    write(os.path.join(OUT, "CYC6.alg"),
          "Cyclic group of order six: the trivial monoid acting on (C6, mul).",
          blocks)


def vec2():
    v = ["00", "01", "10", "11"]
    blocks = [
        algebra("B2", ["0", "1"], [("mul", 2, lambda i, j: i & j)]),
        algebra("V", v, [("add", 2, lambda i, j: i ^ j)]),
        representation("f", "B2", "V", ["0", "1"], v,
                       lambda a, m: m if a == 1 else 0,
                       mode="monoid(mul, 1)"),
    ]
    write(os.path.join(OUT, "VEC2.alg"),
          "The two-element field acting by scalars on the plane over it.",
          blocks)


def gset():
    points = [str(i) for i in range(6)]
    qs = ["q0", "q1", "q2"]

    def act_p(a, m):
        base, off = (0, m) if m < 3 else (3, m - 3)
        return base + (off + a) % 3

    def act_q(a, m):
        return (m + a) % 3

    # h sends an automorphism to the sum of its per-orbit twists; over the
    # basis [0, 3] the automorphisms enumerate in image-tuple order.
    h = []
    for p in range(6):
        for q in range(6):
            if (p < 3) == (q < 3):
                continue
            r1 = p if p < 3 else p - 3
            r2 = q if q < 3 else q - 3
            h.append((r1 + r2) % 3)

    blocks = [
        algebra("C3", ["e", "g", "g2"], [("mul", 2, lambda i, j: (i + j) % 3)]),
        algebra("P6", points, []),
        algebra("Q3", qs, []),
        representation("f", "C3", "P6", ["e", "g", "g2"], points, act_p,
                       mode="monoid(mul, e)"),
        representation("g", "C3", "Q3", ["e", "g", "g2"], qs, act_q,
                       mode="monoid(mul, e)"),
        geometry("obj", "f", "g", ["0", "3"], ["q0"], h),
    ]
    write(os.path.join(OUT, "GSET.alg"),
          "A three-cycle acting on two disjoint orbits, next to its regular action.",
          blocks)


def main():
    os.makedirs(OUT, exist_ok=True)
    cyc6()
    vec2()
    gset()


if __name__ == "__main__":
    main()
