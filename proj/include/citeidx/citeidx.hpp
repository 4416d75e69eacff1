#pragma once

// Umbrella header: everything except the command-line front end.

#include "citeidx/bounds.hpp"
#include "citeidx/dataset.hpp"
#include "citeidx/errors.hpp"
#include "citeidx/format.hpp"
#include "citeidx/indices.hpp"
#include "citeidx/profile.hpp"
#include "citeidx/random_profiles.hpp"
#include "citeidx/ranking.hpp"
#include "citeidx/rational.hpp"
#include "citeidx/report.hpp"
#include "citeidx/reproduction.hpp"
