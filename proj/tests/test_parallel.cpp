#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <vector>

#include "hyptrig/parallel.hpp"

using namespace hyptrig;

TEST_CASE("parallel_for covers every index exactly once") {
    for (int workers : {0, 1, 3, 7}) {
        std::vector<int> hits(1000, 0);
        parallel_for(static_cast<long long>(hits.size()),
                     [&](long long i) { hits[static_cast<size_t>(i)] += 1; }, workers);
        CHECK(std::accumulate(hits.begin(), hits.end(), 0) == 1000);
        CHECK(*std::min_element(hits.begin(), hits.end()) == 1);
        CHECK(*std::max_element(hits.begin(), hits.end()) == 1);
    }
}

TEST_CASE("worker count is at least one") { CHECK(worker_count() >= 1); }
