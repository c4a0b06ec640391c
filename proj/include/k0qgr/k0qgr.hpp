#pragma once

#include "k0qgr/charpoly.hpp"
#include "k0qgr/degree_data.hpp"
#include "k0qgr/error.hpp"
#include "k0qgr/factor.hpp"
#include "k0qgr/graph.hpp"
#include "k0qgr/hilbert.hpp"
#include "k0qgr/k0.hpp"
#include "k0qgr/matrix.hpp"
#include "k0qgr/modulus.hpp"
#include "k0qgr/polynomial.hpp"
#include "k0qgr/primitive.hpp"
#include "k0qgr/realize.hpp"
#include "k0qgr/sturm.hpp"
