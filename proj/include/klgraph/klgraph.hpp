#pragma once

#include "klgraph/basic.hpp"
#include "klgraph/bench.hpp"
#include "klgraph/bitset.hpp"
#include "klgraph/certificates.hpp"
#include "klgraph/generators.hpp"
#include "klgraph/graph.hpp"
#include "klgraph/io.hpp"
#include "klgraph/oracle.hpp"
#include "klgraph/recog21.hpp"
#include "klgraph/recog22.hpp"
#include "klgraph/sparse_dense.hpp"
