#include <doctest.h>

#include "properties.hpp"

TEST_SUITE("properties") {

TEST_CASE("randomized properties") {
  for (const auto& p : props::all())
    for (std::uint64_t seed : {1u, 2u, 3u}) {
      CAPTURE(p.name);
      CAPTURE(seed);
      CHECK(p.run(seed) == 0);
    }
}

}
