#pragma once

#include "klr/quiver.hpp"

// Shared small quivers for the test suites.
inline klr::Quiver q_sl2() { return klr::Quiver({"1"}, {}); }
inline klr::Quiver q_a1a1() { return klr::Quiver({"1", "2"}, {}); }
inline klr::Quiver q_a2() { return klr::Quiver({"1", "2"}, {{"1", "2"}}); }
inline klr::Quiver q_a3() { return klr::Quiver({"1", "2", "3"}, {{"1", "2"}, {"2", "3"}}); }
inline klr::Quiver q_kronecker() { return klr::Quiver({"1", "2"}, {{"1", "2"}, {"1", "2"}}); }
