#pragma once

#include "swarmbench/rng.hpp"
#include "swarmbench/core.hpp"
#include "swarmbench/operators.hpp"
#include "swarmbench/algorithms.hpp"
#include "swarmbench/combinatorial.hpp"
#include "swarmbench/benchfns.hpp"
#include "swarmbench/stats.hpp"
#include "swarmbench/record_io.hpp"
