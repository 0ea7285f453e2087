#pragma once

#include "kfl/bump.hpp"
#include "kfl/decay.hpp"
#include "kfl/errors.hpp"
#include "kfl/experiment.hpp"
#include "kfl/fit.hpp"
#include "kfl/grassmannian.hpp"
#include "kfl/kakeya_measure.hpp"
#include "kfl/orientation.hpp"
#include "kfl/rng.hpp"
#include "kfl/scaling.hpp"
#include "kfl/version.hpp"
