#pragma once

#include "sharpmilnor/frame.hpp"

#include <string>
#include <vector>

namespace sharpmilnor {

struct Fixture {
    std::string name;
    Arrangement arrangement;
    // Canonical frame data used by the signature check.
    std::string infinity_name;
    std::string sharp_name;
    int p0_multiplicity = 0;
    std::vector<int> anchor_multiplicities;  // ascending anchors
};

// Built-in arrangements. Every fixture is validated against its combinatorial
// signature; a mismatch is a hard error.
const std::vector<Fixture>& fixture_catalog();

const Fixture& fixture(const std::string& name);

// The canonical frame of a fixture: its named pair with the named line at
// infinity and orientation +1.
SharpFrame canonical_frame(const Fixture& fx, int orientation = 1);

}  // namespace sharpmilnor
