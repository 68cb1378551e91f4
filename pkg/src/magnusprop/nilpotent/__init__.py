from .collect import NilWord, collect, parse_letters, product_polynomials
from .hall import HallBasis, hall_basis, witt_number
from .pcp import PcpGroup, build_G9, quotient_by_relators
from .prop36 import verify_prop_3_6
