#pragma once

#include "tempo/core_math.hpp"
#include "tempo/discounting.hpp"
#include "tempo/membership.hpp"
#include "tempo/prospect.hpp"
#include "tempo/rng.hpp"
#include "tempo/temporal.hpp"
#include "tempo/time_preference.hpp"
