#pragma once

#include "linarr/arrangement.hpp"
#include "linarr/cyclicity.hpp"
#include "linarr/error.hpp"
#include "linarr/fuzz.hpp"
#include "linarr/geometry.hpp"
#include "linarr/infinity_theorems.hpp"
#include "linarr/io.hpp"
#include "linarr/nomenclature.hpp"
#include "linarr/rational.hpp"
#include "linarr/triangle_set.hpp"
