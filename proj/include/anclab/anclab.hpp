#pragma once

// Umbrella header: interval-based ancestry labeling schemes for rooted trees.

#include "anclab/approx.hpp"
#include "anclab/bench.hpp"
#include "anclab/classic.hpp"
#include "anclab/errors.hpp"
#include "anclab/generate.hpp"
#include "anclab/intmath.hpp"
#include "anclab/interval.hpp"
#include "anclab/label.hpp"
#include "anclab/label_io.hpp"
#include "anclab/tree.hpp"
#include "anclab/tree_io.hpp"
