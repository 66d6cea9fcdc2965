#pragma once

#include "qcl/exponent_matrix.hpp"
#include "qcl/tanner_graph.hpp"
#include "qcl/cycle_enum.hpp"
#include "qcl/profiles.hpp"
#include "qcl/vn_graph.hpp"
#include "qcl/edge_coloring.hpp"
#include "qcl/ets.hpp"
#include "qcl/matrix_search.hpp"
#include "qcl/fixtures.hpp"
#include "qcl/report.hpp"
