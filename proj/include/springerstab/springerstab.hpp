#pragma once

#include "springerstab/betti.hpp"
#include "springerstab/checks.hpp"
#include "springerstab/fkr_reference.hpp"
#include "springerstab/kostka.hpp"
#include "springerstab/numbers.hpp"
#include "springerstab/partition.hpp"
#include "springerstab/poincare.hpp"
#include "springerstab/rational_poly.hpp"
