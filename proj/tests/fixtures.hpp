#pragma once

#include <string>

#include "mbuw/io.hpp"

namespace mbuw::testing {

inline Sample flood() { return read_sample(std::string(MBUW_FIXTURE_DIR) + "/flood.txt"); }
inline Sample pumps() { return read_sample(std::string(MBUW_FIXTURE_DIR) + "/pumps.txt"); }

}  // namespace mbuw::testing
