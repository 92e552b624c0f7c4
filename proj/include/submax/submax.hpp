#ifndef SUBMAX_SUBMAX_HPP
#define SUBMAX_SUBMAX_HPP

#include "submax/algorithms.hpp"
#include "submax/counters.hpp"
#include "submax/data_point.hpp"
#include "submax/errors.hpp"
#include "submax/harness/brute_force.hpp"
#include "submax/harness/csv.hpp"
#include "submax/harness/experiment.hpp"
#include "submax/harness/oracle_suite.hpp"
#include "submax/harness/report_io.hpp"
#include "submax/harness/synthetic.hpp"
#include "submax/kernels.hpp"
#include "submax/objective.hpp"
#include "submax/objectives/coverage.hpp"
#include "submax/objectives/log_det.hpp"
#include "submax/report.hpp"
#include "submax/summary.hpp"
#include "submax/thresholds.hpp"

#endif  // SUBMAX_SUBMAX_HPP
