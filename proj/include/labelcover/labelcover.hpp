#pragma once

#include "labelcover/core.hpp"
#include "labelcover/random.hpp"
#include "labelcover/exact.hpp"
#include "labelcover/approx.hpp"
#include "labelcover/smooth.hpp"
#include "labelcover/planar.hpp"
#include "labelcover/reductions.hpp"
#include "labelcover/io.hpp"
