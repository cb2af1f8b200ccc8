/*
   Copyright 2026 The exthecke Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/


#include <doctest.h>

#include <cstdlib>
#include <stdexcept>
#include <vector>

#include "hecke/parallel.hpp"

using namespace hecke;

TEST_CASE("parallel_for visits each index once") {
    for (unsigned threads : {1u, 2u, 8u}) {
        std::vector<int> hits(1000, 0);
        parallel_for(hits.size(), threads, [&](std::size_t i) { ++hits[i]; });
        for (int h : hits) CHECK(h == 1);
    }
    parallel_for(0, 4, [](std::size_t) { FAIL("called on an empty range"); });
}

TEST_CASE("parallel_for rethrows a worker exception") {
    CHECK_THROWS_AS(parallel_for(100, 4, [](std::size_t i) {
                        if (i == 37) throw std::runtime_error("boom");
                    }),
                    std::runtime_error);
}

TEST_CASE("thread count resolution") {
    ::unsetenv("HECKE_THREADS");
    CHECK(resolve_threads(3) == 3);
    CHECK(resolve_threads(0) >= 1);
    ::setenv("HECKE_THREADS", "5", 1);
    CHECK(resolve_threads(3) == 5);
    ::setenv("HECKE_THREADS", "junk", 1);
    CHECK(resolve_threads(3) == 3);
    ::unsetenv("HECKE_THREADS");
}
