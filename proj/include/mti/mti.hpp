#pragma once

#include "mti/clique.hpp"
#include "mti/family.hpp"
#include "mti/formula.hpp"
#include "mti/generate.hpp"
#include "mti/graph.hpp"
#include "mti/interval.hpp"
#include "mti/io.hpp"
#include "mti/reduction.hpp"
#include "mti/render.hpp"
#include "mti/verify.hpp"
