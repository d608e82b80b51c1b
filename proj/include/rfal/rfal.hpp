#pragma once

#include "rfal/rational.hpp"
#include "rfal/algebra.hpp"
#include "rfal/fuzzy_set.hpp"
#include "rfal/logic.hpp"
#include "rfal/engine.hpp"
#include "rfal/proofs.hpp"
#include "rfal/oracle.hpp"
#include "rfal/goedel_demo.hpp"
#include "rfal/json_io.hpp"
