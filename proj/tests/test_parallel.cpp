#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "modphi/parallel.hpp"
#include "modphi/rng.hpp"

using namespace modphi;

TEST_CASE("chunked reduce: parallel equals serial bit for bit") {
    auto kernel = [](std::int64_t chunk_idx, std::int64_t lo, std::int64_t hi) {
        CounterRng rng(42, (std::uint64_t)chunk_idx);
        double s = 0;
        for (std::int64_t i = lo; i < hi; ++i) s += std::sin(rng.next_double() + (double)i);
        return s;
    };
    auto fold = [](double a, double b) { return a + b; };
    double serial = chunked_reduce<double>(100000, 512, 0.0, kernel, fold, false);
    double parallel = chunked_reduce<double>(100000, 512, 0.0, kernel, fold, true);
    CHECK(serial == parallel);
}

TEST_CASE("counter rng streams are reproducible and distinct") {
    CounterRng a(1, 0), b(1, 0), c(1, 1);
    for (int i = 0; i < 100; ++i) {
        auto x = a.next_u64();
        CHECK(x == b.next_u64());
    }
    int same = 0;
    CounterRng a2(1, 0);
    for (int i = 0; i < 100; ++i)
        if (a2.next_u64() == c.next_u64()) ++same;
    CHECK(same == 0);
}

TEST_CASE("normal draws have sane first moments") {
    CounterRng rng(9, 3);
    double s = 0, s2 = 0;
    int n = 200000;
    for (int i = 0; i < n; ++i) {
        double x = rng.next_normal();
        s += x;
        s2 += x * x;
    }
    CHECK(std::fabs(s / n) < 0.01);
    CHECK(std::fabs(s2 / n - 1.0) < 0.02);
}
