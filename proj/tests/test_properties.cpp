#include <doctest.h>

#include "support/properties.hpp"

using namespace reaudit;

// The acceptance suite runs the same generators with its own seeds; these
// runs use different streams to widen the explored space.

TEST_CASE("property: ether conservation over random transaction sequences") {
    const std::string failure = test::conservation_property(0x1A2B3C4D, 300);
    CHECK_MESSAGE(failure.empty(), failure);
}

TEST_CASE("property: revert atomicity against a copy-on-write oracle") {
    const std::string failure = test::revert_atomicity_property(0x2B3C4D5E, 300);
    CHECK_MESSAGE(failure.empty(), failure);
}

TEST_CASE("property: parse/render round-trip on generated programs") {
    const std::string failure = test::roundtrip_property(0x3C4D5E6F, 300);
    CHECK_MESSAGE(failure.empty(), failure);
}

TEST_CASE("property: msg.sender and tx.origin along random call chains") {
    const std::string failure = test::sender_origin_property(0x4D5E6F70, 300);
    CHECK_MESSAGE(failure.empty(), failure);
}
