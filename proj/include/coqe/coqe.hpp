#ifndef COQE_COQE_HPP
#define COQE_COQE_HPP

#include "coqe/chart.hpp"
#include "coqe/checks.hpp"
#include "coqe/conformal.hpp"
#include "coqe/curvature.hpp"
#include "coqe/diff.hpp"
#include "coqe/equiv.hpp"
#include "coqe/eval.hpp"
#include "coqe/expr.hpp"
#include "coqe/fixtures.hpp"
#include "coqe/linsolve.hpp"
#include "coqe/manifest.hpp"
#include "coqe/metric.hpp"
#include "coqe/parse.hpp"
#include "coqe/predicates.hpp"
#include "coqe/qcc.hpp"
#include "coqe/rational.hpp"
#include "coqe/relativity.hpp"
#include "coqe/report.hpp"
#include "coqe/structure.hpp"
#include "coqe/tensor.hpp"
#include "coqe/version.hpp"

#endif  // COQE_COQE_HPP
