// Transcribed cap, centre-piece and small-decomposition tables, in the text
// form of core.hpp. Paths are "<...>", cycles "(...)", blank-separated.
#pragma once

#include <array>

#include "oberwolfach/jmachine.hpp"

namespace oberwolfach::data {

using oberwolfach::Family;

struct RightCapData {
    Family family;
    int s0;
    std::array<const char*, 9> elements;  // path first, then the cycles
};

struct SmallData {
    const char* type;
    bool pictured;
    std::array<const char*, 9> factors;
};

struct PictureData {
    const char* left;
    const char* centre;
    const char* right;
    const char* internal;
};

extern const std::array<const char*, 9> kLeftCap;
extern const std::array<std::array<const char*, 2>, 9> kCentre;  // {Q, U}
extern const std::array<RightCapData, 16> kRightCaps;
extern const std::array<SmallData, 13> kSmall;
extern const std::array<PictureData, 9> kPictured;
// The searched [2,4,4] brick on J*_10.
extern const std::array<const char*, 9> kSearched244;

}  // namespace oberwolfach::data
