// Everything in one include.
#pragma once

#include "acceptance.hpp"
#include "bits.hpp"
#include "congruence.hpp"
#include "conjectures.hpp"
#include "corpus.hpp"
#include "dag.hpp"
#include "dag_io.hpp"
#include "error.hpp"
#include "geometry.hpp"
#include "graph.hpp"
#include "lattice.hpp"
#include "orientation.hpp"
#include "parallel.hpp"
#include "poset.hpp"
#include "rational.hpp"
#include "regions.hpp"
#include "restriction.hpp"
#include "ropes.hpp"
