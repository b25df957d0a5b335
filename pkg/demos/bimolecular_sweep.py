"""Count multistationary networks of each shape with molecularity at most 2."""

from crnms.enumerate import SHAPES, Bounds, Summary, enumerate_and_classify

for shape in SHAPES:
    summary = Summary()
    for _, v in enumerate_and_classify(Bounds(shape, 2)):
        summary.add(v)
    s = summary.to_json()
    print(f"{shape:13s} {s['total']:6d} nets, {s['multistationary']:4d} multistationary, "
          f"{s['nondegenerately_multistationary']} nondegenerately")
