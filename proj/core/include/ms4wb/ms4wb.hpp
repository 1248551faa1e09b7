//
// ms4wb - Copyright 2026 The ms4wb Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef MS4WB_MS4WB_HPP_
#define MS4WB_MS4WB_HPP_

#include "ms4wb/algebra.hpp"
#include "ms4wb/corpus.hpp"
#include "ms4wb/error.hpp"
#include "ms4wb/formula.hpp"
#include "ms4wb/frame.hpp"
#include "ms4wb/io.hpp"
#include "ms4wb/partition.hpp"
#include "ms4wb/point_set.hpp"
#include "ms4wb/relation.hpp"
#include "ms4wb/s52.hpp"

#endif  // MS4WB_MS4WB_HPP_
