"""Coverage and piercing deciders over integer rank space, with query counting."""

from .core import (
    Cross,
    CoverageInstance,
    ContainmentViolation,
    DegenerateInterval,
    EmptyInput,
    InstanceError,
    Interval,
    Permutation,
    PiercingInstance,
    QueryCounter,
    counted_compare,
    dump_instance,
    dumps_instance,
    instance_from_dict,
    instance_to_dict,
    load_instance,
    loads_instance,
    normalize_ranks,
    validate,
)
from .sorting import SortedOrder, merge_sort_counted
from .coverage import (
    ChainInstance,
    CoverageVerdict,
    check_equality_by_coverage,
    flip_link,
    gen_chain,
    gen_disjoint,
    gen_random_coverage,
    intersect_1d,
    oracle_coverage,
    solve_coverage,
)
from .piercing import (
    CornerBox,
    Envelopes,
    MinimalityReport,
    PiercingVerdict,
    StepFunction,
    build_envelopes,
    check_minimality,
    corner_boxes,
    gen_random_piercing,
    gen_staircase_literal,
    gen_staircase_minimal,
    oracle_grid_points,
    oracle_piercing,
    solve_piercing,
)
from .bounds import (
    BenchRecord,
    BoundReport,
    bound_report,
    lb_equality,
    lb_piercing,
    lb_union,
    lb_union_ceil,
    run_bench,
    write_bench_csv,
)

__version__ = "0.1.0"
