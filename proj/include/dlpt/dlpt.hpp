#pragma once

#include "dlpt/deep_potential.hpp"
#include "dlpt/matrix_exponential.hpp"
#include "dlpt/model.hpp"
#include "dlpt/operator_matrix.hpp"
#include "dlpt/oracle/eigensolver.hpp"
#include "dlpt/oracle/scaling.hpp"
#include "dlpt/oracle/series_fit.hpp"
#include "dlpt/oracle/sum_over_states.hpp"
#include "dlpt/perturbation.hpp"
#include "dlpt/random_problem.hpp"
#include "dlpt/su11.hpp"
