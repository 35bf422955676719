#pragma once

#include "strata/errors.hpp"
#include "strata/field.hpp"
#include "strata/finite_space.hpp"
#include "strata/geometry.hpp"
#include "strata/io.hpp"
#include "strata/linalg.hpp"
#include "strata/local_homology.hpp"
#include "strata/parallel.hpp"
#include "strata/sheaf.hpp"
#include "strata/simplex.hpp"
#include "strata/stratification.hpp"
#include "strata/topology.hpp"
