#pragma once

#include <compare>
#include <string>

namespace cogweave {

// Event identifier stamped on every node a presented part touches.
// ordinal is the presentation position within an ingestion session and is
// strictly increasing, so key sets render in arrival order.
struct LinkKey {
    std::string key;
    int ordinal = 0;

    friend bool operator==(const LinkKey&, const LinkKey&) = default;
    friend std::strong_ordering operator<=>(const LinkKey& a, const LinkKey& b) {
        if (auto c = a.ordinal <=> b.ordinal; c != 0) return c;
        return a.key <=> b.key;
    }
};

}  // namespace cogweave
