#pragma once

#include <ostream>

namespace nlwave {

/// Runs the invariant and property suite (transform round trips, filter
/// inequalities, group identities, splitting hand values, order-fit oracle).
/// Prints one line per check; returns the number of failures.
int run_selftest(std::ostream& out);

}  // namespace nlwave
