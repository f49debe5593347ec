#pragma once

#include "qk/certificate.hpp"
#include "qk/construct.hpp"
#include "qk/digraph.hpp"
#include "qk/error.hpp"
#include "qk/exact.hpp"
#include "qk/instances.hpp"
#include "qk/rational.hpp"
#include "qk/split.hpp"
#include "qk/split_digraph.hpp"
#include "qk/vertex_set.hpp"
