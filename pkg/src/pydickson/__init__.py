from .field import FieldCtx, make_field_ctx, make_quadratic_extension
from .models import (
    FieldElement,
    IndexPair,
    OddSumParts,
    OracleSums,
    PrimePower,
    SearchRecord,
    SearchReport,
    TripleIndex,
)
from .polyring import PolyFp, h_closed, h_rational
from .power_sums import cube_sum_closed, oracle_sums, sum_d_closed
from .rdp import PairTable, build_pair_table, build_tower, d_eval
from .search import filter_pass, is_permutation, search_desirable
from .util.exceptions import *

__version__ = "0.1.0"
