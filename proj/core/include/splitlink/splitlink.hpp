// Umbrella header.

#pragma once

#include "splitlink/classify.hpp"
#include "splitlink/errors.hpp"
#include "splitlink/io.hpp"
#include "splitlink/links.hpp"
#include "splitlink/measure.hpp"
#include "splitlink/profile.hpp"
#include "splitlink/schmidt.hpp"
#include "splitlink/state.hpp"
#include "splitlink/version.hpp"
