#pragma once

#include "evencycle/bounds.hpp"
#include "evencycle/canonical.hpp"
#include "evencycle/cycles.hpp"
#include "evencycle/error.hpp"
#include "evencycle/exact.hpp"
#include "evencycle/geometry.hpp"
#include "evencycle/gf.hpp"
#include "evencycle/graph.hpp"
#include "evencycle/graph_io.hpp"
#include "evencycle/parallel.hpp"
#include "evencycle/report.hpp"
#include "evencycle/search.hpp"
#include "evencycle/vine.hpp"
