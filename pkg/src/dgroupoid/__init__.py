"""Delta-groupoids, ideal triangulations and their A' and B' rings."""

from .delta import DeltaGroupoid, build_example, check_delta
from .triangulation import delta_presentation, eliminate, parse_diagram, reduce_presentation
from .rings import emit_a, emit_b, alpha_image, parse_expr, verify_in_model
from .m2 import M2Ring, check_symmetric
from .report import Report

__version__ = "0.1.0"
