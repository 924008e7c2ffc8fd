"""qtetra: exact verification toolkit for 3D integrability operators."""

from .qcoeff import QCoeff, DIVERGENT

__all__ = ["QCoeff", "DIVERGENT"]
__version__ = "0.1.0"
