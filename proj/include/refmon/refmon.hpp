#pragma once

#include "refmon/core.hpp"
#include "refmon/exactlin.hpp"
#include "refmon/pperm.hpp"
#include "refmon/inverse_monoid.hpp"
#include "refmon/weyl.hpp"
#include "refmon/combinatorics.hpp"
#include "refmon/systems.hpp"
#include "refmon/reflection_monoid.hpp"
#include "refmon/orders.hpp"
#include "refmon/cones.hpp"
