#include <doctest.h>

#include <Eigen/Eigenvalues>
#include <cmath>

#include "qno/brute_force.hpp"
#include "qno/observables.hpp"
#include "qno/oscillator.hppp"
#include "test_common.hpp"

using namespace qno;
