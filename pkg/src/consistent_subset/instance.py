"""Colored point instances and subset solutions."""
from dataclasses import dataclass, field

from .geom import as_coord, orient

TAGS = ("general", "collinear", "two-lines", "one-red")


class TagMismatch(ValueError):
    pass


@dataclass(frozen=True)
class Instance:
    """Distinct exact-rational points with small integer colors.

    ``lines`` holds the two y-values of the horizontal lines for the
    ``two-lines`` tag.
    """

    points: tuple
    colors: tuple
    tag: str = "general"
    lines: tuple = None

    def __post_init__(self):
        pts = tuple((as_coord(x), as_coord(y)) for x, y in self.points)
        object.__setattr__(self, "points", pts)
        object.__setattr__(self, "colors", tuple(int(c) for c in self.colors))
        if self.lines is not None:
            object.__setattr__(self, "lines", tuple(as_coord(v) for v in self.lines))
        if len(pts) != len(self.colors):
            raise ValueError("points and colors differ in length")
        if len(set(pts)) != len(pts):
            raise ValueError("points must be pairwise distinct")
        if any(c < 0 for c in self.colors):
            raise ValueError("colors must be non-negative")
        if self.tag not in TAGS:
            raise ValueError(f"unknown tag {self.tag!r}")

    def __len__(self):
        return len(self.points)

    @property
    def palette(self):
        return sorted(set(self.colors))

    def validate_tag(self):
        """Raise TagMismatch when the declared structure does not hold."""
        pts = self.points
        if self.tag == "collinear":
            if len(pts) >= 3:
                a = pts[0]
                b = next((p for p in pts if p != a), None)
                if any(orient(a, b, p) != 0 for p in pts):
                    raise TagMismatch("points are not collinear")
        elif self.tag == "two-lines":
            if self.lines is None or len(self.lines) != 2 or self.lines[0] == self.lines[1]:
                raise TagMismatch("two-lines instance needs two distinct line heights")
            if any(p[1] not in self.lines for p in pts):
                raise TagMismatch("a point lies on neither line")
        elif self.tag == "one-red":
            counts = [self.colors.count(c) for c in self.palette]
            if len(counts) != 2 or 1 not in counts:
                raise TagMismatch("one-red needs two colors, one of them on a single point")
        return self


@dataclass(frozen=True)
class SubsetSolution:
    indices: tuple = field(default=())

    def __post_init__(self):
        raw = [int(i) for i in self.indices]
        idx = tuple(sorted(set(raw)))
        if len(idx) != len(raw):
            raise ValueError("duplicate indices")
        object.__setattr__(self, "indices", idx)

    @property
    def size(self):
        return len(self.indices)

    def __len__(self):
        return len(self.indices)
