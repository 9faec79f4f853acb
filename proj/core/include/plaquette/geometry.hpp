#pragma once

#include "plaquette/geometry/canoe.hpp"
#include "plaquette/geometry/momentum.hpp"
#include "plaquette/geometry/monomials.hpp"
#include "plaquette/geometry/poisson.hpp"
#include "plaquette/geometry/polynomial.hpp"
