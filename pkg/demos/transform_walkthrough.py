"""Walk through the basic e-transformation on a small alphabet.

Applies four consecutive transformations with leader 0 to a 28-symbol
string, prints each row, and undoes the pile with the inverse transform.
"""
from qows import Quasigroup, e_inverse, e_transform, serialize_string

TABLE = [
    [2, 1, 0, 3],
    [3, 0, 1, 2],
    [1, 2, 3, 0],
    [0, 3, 2, 1],
]

A = (1, 0, 2, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1,
     1, 2, 1, 0, 2, 2, 0, 1, 0, 1, 0, 3, 0, 0)


def main():
    q = Quasigroup(TABLE)
    print("quasigroup of order", q.order)
    for row in q.table:
        print("   ", " ".join(str(v) for v in row))
    print()

    print("A  =", serialize_string(A, q.order))
    rows = [A]
    for k in range(1, 5):
        rows.append(e_transform(q, 0, rows[-1]))
        print(f"E{k} =", serialize_string(rows[-1], q.order))

    print()
    print("each step spreads structure: the input is mostly zeros, the")
    print("fourth image has no obvious pattern left")

    back = rows[-1]
    for _ in range(4):
        back = e_inverse(q, 0, back)
    assert back == A
    print("four inverse transformations recover A exactly")


if __name__ == "__main__":
    main()
