"""Decision procedures for quadratic sets and quantum binomial algebras."""
from importlib import resources

from .errors import PresentationError, TheoremViolation
from .quadratic_set import QuadraticSet, load_from_lmap, predicates
from .relations import Relation, RelationSet, RelationSpace

__all__ = [
    "PresentationError", "QuadraticSet", "Relation", "RelationSet",
    "RelationSpace", "TheoremViolation", "fixture", "load_from_lmap",
    "predicates",
]

FIXTURES = ("example1", "example2", "example3")


def fixture_text(name):
    return resources.files(__package__).joinpath("fixtures", f"{name}.qb").read_text()


def fixture(name):
    """Parsed presentation of one of the shipped examples."""
    from .io import parse_presentation
    return parse_presentation(fixture_text(name))
