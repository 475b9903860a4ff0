"""Render the iterated-transformation pictures for two adjacent squares.

Square 46 draws self-similar triangles; square 47, one enumeration step
away, fills the plane with noise. Writes two PPM files next to this
script and prints the period growth that separates them.
"""
import pathlib

from qows import from_index, period_profile, render_iterations

WIDTH = 600
ITERATIONS = 599
MOTIF = (0, 1, 2, 3)


def main():
    out_dir = pathlib.Path(__file__).resolve().parent
    for idx in (46, 47):
        q = from_index(idx)
        data = render_iterations(q, 0, MOTIF, WIDTH, ITERATIONS)
        path = out_dir / f"square{idx}.ppm"
        path.write_bytes(data)
        print(f"square {idx}: wrote {path.name} ({len(data)} bytes)")

    print()
    print("period of row k under leader 0, motif 0123, width 4096:")
    print("  k    square 46   square 47")
    for idx in (46, 47):
        prof = period_profile(from_index(idx), 0, MOTIF, 4096, 12)
        if idx == 46:
            p46 = prof
        else:
            p47 = prof
    for a, b in zip(p46, p47):
        star = "*" if b.capped else " "
        print(f"  {a.k:2d}   {a.period:6d}      {b.period:6d}{star}")
    print()
    print("linear growth on the left, exponential (capped at the width,")
    print("marked *) on the right")


if __name__ == "__main__":
    main()
