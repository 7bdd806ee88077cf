"""Mobile and point r-guards for simple orthogonal polygons."""

from .errors import GuardError
from .generators import comb, random_domain, sharpness
from .geometry import RectilinearDomain, domain_from_coords, parse_domain
from .mobile_guards import solve_mhsc, solve_mvsc
from .pixelation import pixelate
from .point_guards import solve_point_guards

__version__ = "0.1.0"

__all__ = [
    "GuardError", "RectilinearDomain", "comb", "domain_from_coords", "parse_domain", "pixelate",
    "random_domain", "sharpness", "solve_mhsc", "solve_mvsc", "solve_point_guards",
]
