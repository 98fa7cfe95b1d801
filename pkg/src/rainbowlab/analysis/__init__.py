from .bounds import binomial_tail_bound, chernoff_lower_tail, chernoff_tails, chernoff_upper_tail, talagrand_tail
from .concentration import (
    AuxMinDegreeReport,
    WindowReport,
    aux_min_degrees,
    check_aux_min_degree,
    check_degree_concentration,
    check_partition_degrees,
)
from .moments import (
    ConcentrationReport,
    DegreeDistribution,
    TooLargeForExhaustive,
    VertexNotInV2,
    aux_degree_variance_bound,
    concentration_report,
    exact_aux_degree_distribution,
    exact_aux_semidegree_distribution,
    expected_aux_degree,
    expected_aux_semidegree,
    median_window_status,
)
