#pragma once

#include "simplex_cover/cover.hpp"
#include "simplex_cover/point.hpp"
#include "simplex_cover/rational.hpp"
#include "simplex_cover/records.hpp"
#include "simplex_cover/simplex.hpp"
#include "simplex_cover/triangulation.hpp"
#include "simplex_cover/verifier.hpp"
#include "simplex_cover/witness.hpp"
