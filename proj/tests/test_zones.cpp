// Copyright 2026 the qjoule developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include "oracles.hpp"
#include "qjoule/zones.hpp"

using namespace qj;

TEST_SUITE("zones") {

TEST_CASE("zone-limited depth splits overfull layers") {
    CHECK(zone_limited_depth(20, 10, 500) == 1000);
    CHECK(zone_limited_depth(7, 5, 100) == 200);
    CHECK(zone_limited_depth(5, 5, 123) == 123);
    CHECK(zone_limited_depth(0.5, 1, 42) == 42);
    CHECK(zone_limited_depth(11, 5, 100) == 300);
}

TEST_CASE("zero zones is a domain error") {
    CHECK_THROWS_AS(zone_limited_depth(10, 0, 100), DomainError);
    CHECK_THROWS_AS(beta_min(10, 0), DomainError);
    CHECK_THROWS_AS(zone_limited_depth(0, 5, 100), DomainError);
}

TEST_CASE("beta_min follows 1 - 1/ceil(g/z)") {
    CHECK(beta_min(20, 10) == doctest::Approx(0.5));
    CHECK(beta_min(21, 20) == doctest::Approx(0.5));
    CHECK(beta_min(39, 20) == doctest::Approx(0.5));
    CHECK(beta_min(3, 5) == 0.0);
    CHECK(beta_min(11, 5) == doctest::Approx(2.0 / 3.0));
}

TEST_CASE("beta_min is monotone in density and anti-monotone in zones") {
    for (const int zones : {1, 3, 10}) {
        double previous = -1.0;
        for (double g = 1; g <= 60; g += 0.5) {
            const double b = beta_min(g, zones);
            CHECK(b >= previous);
            CHECK(b >= 0.0);
            CHECK(b < 1.0);
            previous = b;
        }
    }
    for (double g = 1; g <= 40; g += 1) {
        CHECK(beta_min(g, 5) <= beta_min(g, 1));
        CHECK(beta_min(g, 10) <= beta_min(g, 5));
    }
}

TEST_CASE("depth ratio is an integer that hits 1 exactly when layers fit") {
    for (const int zones : {1, 4, 9}) {
        for (double g = 0.5; g <= 30; g += 0.5) {
            const auto depth = zone_limited_depth(g, zones, 500);
            CHECK(depth % 500 == 0);
            const auto ratio = depth / 500;
            CHECK(ratio >= 1);
            if (g <= zones) {
                CHECK(ratio == 1);
            } else {
                CHECK(ratio > 1);
            }
        }
    }
}

TEST_CASE("scaling up the zone count never hurts") {
    for (int g = 1; g <= 40; ++g) {
        for (const int zones : {1, 2, 5}) {
            for (const int k : {2, 3}) {
                CHECK(zone_limited_depth(g, k * zones, 500) <= zone_limited_depth(g, zones, 500));
                CHECK(beta_min(g, k * zones) <= beta_min(g, zones));
            }
        }
    }
}

TEST_CASE("greedy packing simulator agrees with the closed forms") {
    for (const int zones : {1, 5, 10}) {
        for (int g = 1; g <= 40; ++g) {
            const auto packed = oracle::pack_zones(g, zones, 50, true);
            CHECK(packed.depth == zone_limited_depth(g, zones, 50));
            CHECK(packed.transport_fraction >= beta_min(g, zones) - 1e-12);
            CHECK(packed.transport_fraction <= 1.0);
        }
    }
    // Disjoint qubit sets per layer force transport on almost every packed layer.
    const auto worst = oracle::pack_zones(8, 4, 100, false);
    CHECK(worst.transport_fraction > beta_min(8, 4));
}

TEST_CASE("beta clamp reports when the floor was applied") {
    bool clamped = false;
    CHECK(clamp_beta(0.2, 0.5, &clamped) == 0.5);
    CHECK(clamped);
    CHECK(clamp_beta(0.7, 0.5, &clamped) == 0.7);
    CHECK(!clamped);
    CHECK(clamp_beta(1.5, 0.5, &clamped) == 1.0);
}

TEST_CASE("beta envelope covers the zone/density grid") {
    std::vector<double> densities = {1, 20, 11};
    const auto rows = beta_envelope(densities, {1, 10, 5});
    REQUIRE(rows.size() == 9);
    CHECK(rows[0].zones == 1);
    CHECK(rows[0].gates_per_layer == 1.0);   // densities sorted per zone block
    CHECK(rows[0].beta_min == 0.0);
    CHECK(rows[0].beta_max == 1.0);
    for (const auto& row : rows) {
        CHECK(row.beta_max == 1.0);
        CHECK(row.beta_min == doctest::Approx(beta_min(row.gates_per_layer, row.zones)));
    }
    CHECK_THROWS_AS(beta_envelope({}, {1}), ConfigError);
}

} // TEST_SUITE
