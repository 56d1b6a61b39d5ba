#pragma once

// Umbrella header.

#include "hypergrowth/analysis.hpp"
#include "hypergrowth/bigint.hpp"
#include "hypergrowth/disk.hpp"
#include "hypergrowth/disk_io.hpp"
#include "hypergrowth/errors.hpp"
#include "hypergrowth/exact_ratio.hpp"
#include "hypergrowth/fibonacci.hpp"
#include "hypergrowth/geometry.hpp"
#include "hypergrowth/growth_table.hpp"
#include "hypergrowth/matrix2.hpp"
#include "hypergrowth/measure.hpp"
#include "hypergrowth/recurrence.hpp"
#include "hypergrowth/scene.hpp"
#include "hypergrowth/svg.hpp"
#include "hypergrowth/verify.hpp"
