#pragma once

#include "dimerk/canonical.hpp"
#include "dimerk/embedding.hpp"
#include "dimerk/errors.hpp"
#include "dimerk/json_io.hpp"
#include "dimerk/multigraph.hpp"
#include "dimerk/polynomial.hpp"
#include "dimerk/rational.hpp"
#include "dimerk/reduction.hpp"
#include "dimerk/report.hpp"
#include "dimerk/structure.hpp"
#include "dimerk/topology_enum.hpp"
#include "dimerk/torus_oracle.hpp"
#include "dimerk/verifier.hpp"
#include "dimerk/version.hpp"
#include "dimerk/weighted_sum.hpp"
