#pragma once

#include "canonical.hpp"
#include "cone_planarity.hpp"
#include "constructions.hpp"
#include "eigen.hpp"
#include "enumerate.hpp"
#include "graph.hpp"
#include "outerplanarity.hpp"
#include "parallel.hpp"
#include "rational.hpp"
#include "search.hpp"
#include "verify.hpp"
#include "walk_series.hpp"
#include "walks.hpp"
