#pragma once

#include "fcgp/approx.hpp"
#include "fcgp/errors.hpp"
#include "fcgp/exact.hpp"
#include "fcgp/experiments.hpp"
#include "fcgp/generators.hpp"
#include "fcgp/graph.hpp"
#include "fcgp/instance.hpp"
#include "fcgp/rational.hpp"
#include "fcgp/run_record.hpp"
#include "fcgp/subexp.hpp"
#include "fcgp/tree_decomposition.hpp"
