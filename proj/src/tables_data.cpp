#include "tables_data.hpp"

namespace oberwolfach::data {

const std::array<const char*, 9> kLeftCap = {{
    "<y2,y1,x2>",
    "<y2,x0,y1,x1,x3>",
    "<x3,y1,y0,x1,y2>",
    "<x3,x1,x0,y2,x2,y0,y1,y3>",
    "<x2,y1,y2>",
    "<y2,y0,x2,x0,x1,y3>",
    "<y3,x1,y1,x3>",
    "<y2,x1,x2>",
    "<y3,y1,x0,x2,x1,y0,y2>",
}};

const std::array<std::array<const char*, 2>, 9> kCentre = {{
    {"<x0,y2,x2,x1,y3,x4>", "<y4,x3,y1,y0>"},
    {"<x1,x0,x2,x3,x5>", "<y4,y3,y1,y2,y0>"},
    {"<y0,y2,y1,y3,y4>", "<x5,x3,x2,x0,x1>"},
    {"<y1,x2,y4,x4,x3,y5>", "<x5,y3,y2,x1>"},
    {"<y0,x1,y2,x3,y4>", "<x4,y3,x2,y1,x0>"},
    {"<y1,x1,x3,y3,y5>", "<y4,y2,x4,x2,y0>"},
    {"<x1,x2,y3,x5>", "<y5,x3,y2,x0,y0,y1>"},
    {"<x0,y1,x3,x4>", "<y4,x2,y2,y3,x1,y0>"},
    {"<y0,x2,x4,y2,y4>", "<y5,y3,x3,x1,y1>"},
}};

const std::array<RightCapData, 16> kRightCaps = {{
    {Family::Cycle, 4, {{
        "<x0,y1,x3,x1,x2,y2,y0>",
        "<x1,x0,y2,y1,y0>",
        "<y0,y1,x0,x2,x1>",
        "<y1,x1>",
        "<y0,y2,x1,x3,y1,x2,x0>",
        "<y1,y3,x1,y0>",
        "<x1,y2,x0,y0,x2,y1>",
        "<x0,x1,y3,y1,y2,x2,y0>",
        "<y0,x1,y1>",
    }}},
    {Family::Cycle, 5, {{
        "<x0,x1,y1,x3,y3,x2,x4,y2,y0>",
        "<x1,y2,y3,y1,x0,x2,y0>",
        "<y0,x2,x3,y2,x0,y1,x1>",
        "<y1,y2,x2,x1>",
        "<y0,y2,x4,x2,y1,y3,x3,x1,x0>",
        "<y1,x2,y4,y2,x1,y0>",
        "<x1,y3,y2,x3,x2,x0,y0,y1>",
        "<x0,y2,y4,x2,y3,x1,x3,y1,y0>",
        "<y0,x1,x2,y2,y1>",
    }}},
    {Family::Cycle, 6, {{
        "<x0,x1,y1,x2,x3,x5,y3,x4,y4,y2,y0>",
        "<x1,x0,y1,y2,y3,x3,y4,x2,y0>",
        "<y0,y2,x0,x2,x4,x3,y3,y1,x1>",
        "<y1,y3,y2,x3,x2,x1>",
        "<y0,x1,y2,x4,x2,y4,y3,x5,x3,y1,x0>",
        "<y1,x3,y5,y3,x2,y2,x1,y0>",
        "<x1,y3,y4,x3,x4,y2,x2,x0,y0,y1>",
        "<x0,y2,y4,x4,y3,y5,x3,x1,x2,y1,y0>",
        "<y0,x2,y3,x1,x3,y2,y1>",
    }}},
    {Family::Cycle, 7, {{
        "<x0,x1,y1,x2,x3,y3,x5,y5,x4,x6,y4,y2,y0>",
        "<x1,x0,y1,y2,x3,x4,y3,y5,y4,x2,y0>",
        "<y0,y1,x0,x2,y2,y3,x4,x5,y4,x3,x1>",
        "<y1,x3,y4,x4,y2,x2,y3,x1>",
        "<y0,x2,y4,x6,x4,y5,x5,y3,x3,y1,x1,y2,x0>",
        "<y1,y3,y2,y4,y6,x4,x3,x2,x1,y0>",
        "<x1,y3,y4,y5,x3,x5,x4,x2,x0,y0,y2,y1>",
        "<x0,y2,x1,x2,x4,y6,y4,x5,x3,y5,y3,y1,y0>",
        "<y0,x1,x3,y2,x4,y4,y3,x2,y1>",
    }}},
    {Family::CycleTwo, 4, {{
        "<x0,y1,x3,y3,x1,x2,y0> (y2,x4)",
        "<x1,y1,x0,y2,y0> (x2,y3)",
        "<y0,y1,y2,x3,x1> (x0,x2)",
        "<y1,x1> (x2,y2)",
        "<y0,x1,x3,y1,y3,y2,x0> (x2,x4)",
        "<y1,x2,x1,y0> (y2,y4)",
        "<x1,x0,y0,y2,y3,y1> (x2,x3)",
        "<x0,x1,y3,x3,y2,y1,y0> (x2,y4)",
        "<y0,x2,y1> (x1,y2)",
    }}},
    {Family::CycleTwo, 5, {{
        "<x0,x1,y1,x2,x3,x4,y4,y2,y0> (y3,x5)",
        "<x1,x0,y1,y3,y2,x2,y0> (x3,y4)",
        "<y0,x2,x4,x3,y3,y1,x1> (x0,y2)",
        "<y1,y2,x3,x1> (x2,y3)",
        "<y0,x1,y3,x4,y2,y4,x2,y1,x0> (x3,x5)",
        "<y1,x3,x2,y2,x1,y0> (y3,y5)",
        "<x1,x3,y2,x4,x2,x0,y0,y1> (y3,y4)",
        "<x0,x2,y4,x4,y3,x1,y2,y1,y0> (x3,y5)",
        "<y0,y2,y3,x3,y1> (x1,x2)",
    }}},
    {Family::CycleTwo, 6, {{
        "<x0,x1,y1,x2,x3,y3,x4,x6,y4,y2,y0> (x5,y5)",
        "<x1,x0,y1,y2,x3,x4,y3,x2,y0> (y4,y5)",
        "<y0,y1,x0,y2,x2,y3,x5,x3,x1> (x4,y4)",
        "<y1,x3,x2,y4,y3,x1> (y2,x4)",
        "<y0,y2,y4,x6,x4,x5,y3,y1,x1,x2,x0> (x3,y5)",
        "<y1,y3,x3,y4,x2,y2,x1,y0> (x4,y6)",
        "<x1,y3,y5,x4,x3,y2,x0,y0,x2,y1> (y4,x5)",
        "<x0,x2,x1,x3,x5,x4,y5,y3,y2,y1,y0> (y4,y6)",
        "<y0,x1,y2,y3,y4,x3,y1> (x2,x4)",
    }}},
    {Family::CycleTwo, 7, {{
        "<x0,x1,y1,x2,x3,y3,x4,x5,x6,y6,y4,y2,y0> (y5,x7)",
        "<x1,x0,y1,y2,x3,x4,y3,x5,y4,x2,y0> (y5,y6)",
        "<y0,y1,x0,x2,y2,y3,y4,x5,x4,x3,x1> (y5,x6)",
        "<y1,x3,y2,y4,x4,x2,y3,x1> (x5,y5)",
        "<y0,y2,y1,x1,x3,y5,x4,y6,x6,y4,y3,x2,x0> (x5,x7)",
        "<y1,y3,y2,x4,y5,y4,x3,x2,x1,y0> (x5,y7)",
        "<x1,y3,y5,x3,y4,x6,x4,y2,x0,y0,x2,y1> (x5,y6)",
        "<x0,y2,x1,x2,y4,y6,x4,x6,x5,y3,x3,y1,y0> (y5,y7)",
        "<y0,x1,y2,x2,x4,y4,y5,y3,y1> (x3,x5)",
    }}},
    {Family::CycleTwoTwo, 4, {{
        "<x0,x1,y1,x2,x4,y2,y0> (x3,y4) (y3,x5)",
        "<x1,x0,y2,y1,y0> (x2,x3) (y3,y4)",
        "<y0,y2,x4,y3,x1> (x0,x2) (y1,x3)",
        "<y1,x1> (x2,y3) (y2,x3)",
        "<y0,x1,x2,y2,y3,y1,x0> (x3,x5) (x4,y4)",
        "<y1,y2,x2,y0> (x1,x3) (y3,y5)",
        "<x1,y3,y2,x0,y0,y1> (x2,y4) (x3,x4)",
        "<x0,y1,y3,x4,x2,x1,y0> (y2,y4) (x3,y5)",
        "<y0,x2,y1> (x1,y2) (x3,y3)",
    }}},
    {Family::CycleTwoTwo, 5, {{
        "<x0,x2,y3,y5,x4,x6,y4,y2,y0> (x1,y1) (x3,x5)",
        "<x1,y3,x4,y5,y4,x2,y0> (x0,y1) (y2,x3)",
        "<y0,y1,x2,x0,y2,y3,x1> (x3,x4) (y4,x5)",
        "<y1,y3,x2,x1> (y2,x4) (x3,y4)",
        "<y0,x2,y4,x6,x4,y3,y1,y2,x0> (x1,x3) (x5,y5)",
        "<y1,x3,x2,y2,x1,y0> (y3,y4) (x4,y6)",
        "<x1,x0,y0,y2,y4,y5,x3,y1> (x2,x4) (y3,x5)",
        "<x0,x1,x2,x3,y5,y3,y2,y1,y0> (x4,x5) (y4,y6)",
        "<y0,x1,y2,x2,y1> (x3,y3) (x4,y4)",
    }}},
    {Family::CycleTwoTwo, 6, {{
        "<x0,x2,x4,x5,x7,y5,x6,y6,y4,y2,y0> (x1,y1) (x3,y3)",
        "<x1,y3,x4,y5,y6,x5,y4,x2,y0> (x0,y1) (y2,x3)",
        "<y0,x2,y4,x5,x4,x6,y5,x3,x1> (x0,y2) (y1,y3)",
        "<y1,y2,x4,y3,x2,x1> (x3,x5) (y4,y5)",
        "<y0,y1,x3,x4,y6,y5,x7,x5,y3,x1,x0> (x2,y2) (y4,x6)",
        "<y1,x2,x3,y5,x4,y2,x1,y0> (y3,y4) (x5,y7)",
        "<x1,x2,x0,y0,y2,y4,y6,x4,x3,y1> (y3,y5) (x5,x6)",
        "<x0,x1,y2,y3,x5,y6,x6,x4,x2,y1,y0> (x3,y4) (y5,y7)",
        "<y0,x1,x3,x2,y3,y2,y1> (x4,y4) (x5,y5)",
    }}},
    {Family::CycleTwoTwo, 7, {{
        "<x0,x2,x4,x5,y5,x7,y7,x6,x8,y6,y4,y2,y0> (x1,y1) (x3,y3)",
        "<x1,y3,x4,y5,x5,y7,y6,x6,y4,x2,y0> (x0,y1) (y2,x3)",
        "<y0,x2,y4,x4,y6,x5,x7,x6,y5,y3,x1> (x0,y2) (y1,x3)",
        "<y1,y2,y4,x6,x4,y3,x2,x1> (x3,x5) (y5,y6)",
        "<y0,y1,y3,y4,y6,x8,x6,x7,x5,x4,x3,x2,x0> (x1,y2) (y5,y7)",
        "<y1,x2,y2,x4,y4,y3,y5,x3,x1,y0> (x5,x6) (y6,y8)",
        "<x1,x0,y0,y2,x2,x3,x4,x6,y7,x5,y3,y1> (y4,y5) (y6,x7)",
        "<x0,x1,x2,y3,x5,y6,y7,x7,y5,x4,y2,y1,y0> (x3,y4) (x6,y8)",
        "<y0,x1,x3,y5,x6,y6,x4,x2,y1> (y2,y3) (y4,x5)",
    }}},
    {Family::CycleFour, 5, {{
        "<x0,x1,y1,x2,x3,x5,y3,y2,y0> (x4,y5,y4,x6)",
        "<x1,x0,y1,y2,y4,x2,y0> (x3,y3,y5,x4)",
        "<y0,y2,x0,x2,y3,y1,x1> (x3,x4,x5,y4)",
        "<y1,y3,x3,x1> (x2,y4,x4,y2)",
        "<y0,x2,x1,y3,x5,y5,x3,y1,x0> (y2,x4,x6,y4)",
        "<y1,x3,x2,y2,x1,y0> (y3,y4,y6,x4)",
        "<x1,y2,y3,x4,x2,x0,y0,y1> (x3,y4,y5,x5)",
        "<x0,y2,x3,y5,y3,x1,x2,y1,y0> (x4,y6,y4,x5)",
        "<y0,x1,x3,y2,y1> (x2,x4,y4,y3)",
    }}},
    {Family::CycleFour, 6, {{
        "<x0,x1,y1,x2,x3,y3,x4,x6,y4,y2,y0> (x5,y6,y5,x7)",
        "<x1,x0,y1,y2,x3,x4,y3,x2,y0> (y4,x5,y5,y6)",
        "<y0,y1,x0,x2,y2,x4,y4,y3,x1> (x3,y5,x6,x5)",
        "<y1,x3,x5,x4,y2,x1> (x2,y3,y5,y4)",
        "<y0,y2,y1,x1,x3,y4,x6,y6,x4,x2,x0> (y3,x5,x7,y5)",
        "<y1,y3,y4,x3,y2,x2,x1,y0> (x4,x5,y7,y5)",
        "<x1,y3,y2,x0,y0,x2,y4,y5,x3,y1> (x4,y6,x5,x6)",
        "<x0,y2,y4,y6,x6,y5,y7,x5,y3,y1,y0> (x1,x2,x4,x3)",
        "<y0,x1,y2,y3,x3,x2,y1> (x4,y5,x5,y4)",
    }}},
    {Family::CycleFour, 7, {{
        "<x0,x1,y1,x2,x3,y3,x4,x5,x7,y5,y4,y2,y0> (x6,y7,y6,x8)",
        "<x1,x0,y1,y2,x3,x4,y3,x5,y4,x2,y0> (y5,x6,y6,y7)",
        "<y0,y1,x0,x2,y3,y4,x5,y5,x3,y2,x1> (x4,x6,x7,y6)",
        "<y1,y3,y2,x2,x4,y4,x3,x1> (x5,x6,y5,y6)",
        "<y0,y2,y1,x1,y3,y5,x7,y7,x5,x4,x3,x2,x0> (y4,x6,x8,y6)",
        "<y1,x3,y4,y5,x4,y2,y3,x2,x1,y0> (x5,y6,y8,x6)",
        "<x1,x3,x5,y7,x7,x6,y4,x4,y6,y5,y3,y1> (x0,y0,x2,y2)",
        "<x0,y2,x4,y5,y7,x6,y8,y6,x7,x5,x3,y1,y0> (x1,x2,y4,y3)",
        "<y0,x1,y2,y4,y6,x6,x4,x2,y1> (x3,y5,x5,y3)",
    }}},
    {Family::CycleFour, 8, {{
        "<x0,x1,y1,x2,x3,y3,x4,x5,y5,x6,x8,y6,y4,y2,y0> (x7,y8,y7,x9)",
        "<x1,x0,y1,y2,x3,x4,y3,x5,x6,y5,y4,x2,y0> (y6,x7,y7,y8)",
        "<y0,y1,x0,x2,y2,y3,y4,x4,x6,y6,x5,x3,x1> (y5,x7,x8,y7)",
        "<y1,x3,y4,x5,y6,x4,x2,y3,y2,x1> (y5,y7,x6,x7)",
        "<y0,x2,y4,y5,y6,y8,x7,x9,y7,x8,x6,x5,x4,y2,x0> (x1,y3,x3,y1)",
        "<y1,y3,y5,x5,y4,x6,x4,x3,y2,x2,x1,y0> (y6,y7,y9,x7)",
        "<x1,x3,x5,y7,y6,y5,x4,y4,y3,x2,x0,y0,y2,y1> (x6,y8,x8,x7)",
        "<x0,y2,x4,y6,x8,y8,x6,y4,x3,y5,y3,x1,x2,y1,y0> (x5,x7,y9,y7)",
        "<y0,x1,y2,y4,y6,x6,y7,x7,x5,y3,y1> (x2,x4,y5,x3)",
    }}},
}};

const std::array<SmallData, 13> kSmall = {{
    {"[2,4]", false, {{
        "(y1,x3) (x2,y3,y2,x4)",
        "(x0,y1) (x1,x2,y2,y3)",
        "(y0,y1) (x1,y2,x2,x3)",
        "(x0,x2) (y0,x1,y1,y2)",
        "(y1,y3) (x2,x4,y2,x3)",
        "(x2,y4) (x0,x1,y0,y2)",
        "(y1,x2) (x1,y3,x3,y2)",
        "(y2,y4) (x1,x3,y3,x2)",
        "(y0,x2) (x0,y2,y1,x1)",
    }}},
    {"[2,6]", false, {{
        "(y1,x2) (y2,x3,x5,y3,x4,y4)",
        "(x0,x1) (y1,y2,x2,x3,y4,y3)",
        "(y1,x3) (y0,x2,x4,y3,x1,y2)",
        "(x0,y1) (y0,y2,y3,x3,x2,x1)",
        "(x2,y4) (y1,y3,x5,x3,x4,y2)",
        "(x3,y5) (x0,x2,y0,x1,y3,y2)",
        "(x1,y1) (x2,y3,y4,x3,y2,x4)",
        "(y3,y5) (x1,x2,y2,y4,x4,x3)",
        "(y0,y1) (x0,y2,x1,x3,y3,x2)",
    }}},
    {"[2^2,4]", false, {{
        "(y3,x5) (x4,y4) (y1,x2,y2,x3)",
        "(x2,y3) (x3,y4) (x0,x1,y2,y1)",
        "(x1,y1) (y3,x4) (y0,x2,x3,y2)",
        "(y0,x1) (y2,y3) (x0,y1,x3,x2)",
        "(x3,x5) (y3,y4) (y1,y2,x4,x2)",
        "(x1,y3) (x3,y5) (x0,x2,y0,y2)",
        "(y1,y3) (y2,y4) (x1,x2,x4,x3)",
        "(x2,y4) (y3,y5) (x1,x3,x4,y2)",
        "(y0,y1) (x3,y3) (x0,y2,x2,x1)",
    }}},
    {"[2^2,6]", false, {{
        "(y1,x2) (y2,x3) (y3,x4,x6,y4,x5,y5)",
        "(x0,x1) (y1,y2) (x2,x3,y3,y4,y5,x4)",
        "(y0,y1) (x1,x2) (y2,y3,x5,x4,x3,y4)",
        "(x0,y1) (x1,x3) (y0,y2,y4,x4,y3,x2)",
        "(y1,y3) (x2,y2) (x3,y5,y4,x6,x4,x5)",
        "(x0,x2) (y4,y6) (y0,x1,y3,x3,x4,y2)",
        "(x1,y1) (x2,y4) (y2,x4,y5,x3,x5,y3)",
        "(x1,y2) (x4,y6) (x2,y3,y5,x5,y4,x3)",
        "(x0,y2) (y1,x3) (y0,x2,x4,y4,y3,x1)",
    }}},
    {"[2^2,4^2]", false, {{
        "(y1,x2) (y2,x3) (y3,x4,x6,y4) (x5,y6,y5,x7)",
        "(x0,x1) (y1,y2) (x2,x3,y3,y4) (x4,x5,y5,y6)",
        "(y0,x1) (y1,x3) (x2,x4,y3,y2) (y4,x6,y5,x5)",
        "(x1,x2) (x3,y4) (x0,y1,y0,y2) (y3,x5,x4,y5)",
        "(y1,y3) (y4,y6) (x2,y2,x4,x3) (x5,x7,y5,x6)",
        "(x1,x3) (x4,y4) (x0,y2,y0,x2) (y3,y5,y7,x5)",
        "(x1,y1) (x3,y5) (x2,y4,y2,y3) (x4,y6,x5,x6)",
        "(x1,y2) (x6,y6) (x2,y3,x3,x4) (y4,x5,y7,y5)",
        "(x1,y3) (x3,x5) (x0,x2,y0,y1) (y2,y4,y5,x4)",
    }}},
    {"[2^3]", false, {{
        "(y1,x2) (y2,x4) (x3,y3)",
        "(x0,y1) (x1,x2) (y2,y3)",
        "(y0,x1) (y1,y2) (x2,x3)",
        "(x0,x2) (y0,y1) (x1,y2)",
        "(y1,y3) (x2,x4) (y2,x3)",
        "(x0,x1) (y0,y2) (x2,y4)",
        "(x1,y3) (y1,x3) (x2,y2)",
        "(x1,x3) (x2,y3) (y2,y4)",
        "(x0,y2) (y0,x2) (x1,y1)",
    }}},
    {"[2^3,4]", false, {{
        "(y1,x2) (y2,x3) (y3,x5) (x4,y5,y4,x6)",
        "(x0,x1) (y1,y2) (x2,x3) (y3,x4,y4,y5)",
        "(y0,x1) (y1,x3) (x2,y3) (y2,x4,x5,y4)",
        "(x0,y1) (y0,x2) (x3,x4) (x1,y2,y4,y3)",
        "(y1,y3) (x2,y2) (x3,y5) (x4,x6,y4,x5)",
        "(x0,x2) (y0,y2) (x4,y6) (x1,y3,y4,x3)",
        "(x1,y1) (x2,y4) (x3,x5) (y2,y3,y5,x4)",
        "(x2,x4) (y4,y6) (x5,y5) (x1,x3,y3,y2)",
        "(x0,y2) (y0,y1) (x1,x2) (x3,y4,x4,y3)",
    }}},
    {"[4^2]", false, {{
        "(y1,x2,x4,y2) (x3,y4,y3,x5)",
        "(x0,y2,x2,x1) (y1,y3,y4,x3)",
        "(y0,x1,y1,y2) (x2,x3,y3,x4)",
        "(x0,x1,y0,y1) (x2,y3,y2,x3)",
        "(y1,x3,x5,y3) (x2,y2,x4,y4)",
        "(x0,x2,y0,y2) (x1,x3,y5,y3)",
        "(x1,y3,x2,y1) (y2,y4,x4,x3)",
        "(x1,x2,y4,y2) (x3,x4,y3,y5)",
        "(x0,y1,y0,x2) (x1,y2,y3,x3)",
    }}},
    {"[4^3]", false, {{
        "(y1,x2,y2,x3) (y3,x4,x6,y4) (x5,y6,y5,x7)",
        "(x0,x1,y2,y1) (x2,y3,y4,x4) (x3,y5,y6,x5)",
        "(y0,y1,y3,x1) (x2,x3,x4,y2) (y4,x6,x5,y5)",
        "(x0,y1,y0,y2) (x1,x2,y4,x3) (y3,y5,x5,x4)",
        "(y1,y2,y3,x2) (x3,x5,x7,y5) (x4,y4,y6,x6)",
        "(x0,x2,y0,x1) (y2,x4,x3,y4) (y3,x5,y7,y5)",
        "(x1,y1,x3,x2) (y2,y4,x5,y3) (x4,y5,x6,y6)",
        "(x1,y3,x3,y2) (x2,x4,y6,y4) (x5,x6,y5,y7)",
        "(x0,y2,y0,x2) (x1,x3,y3,y1) (x4,x5,y4,y5)",
    }}},
    {"[4,6]", false, {{
        "(y1,x2,y2,x3) (y3,x4,x6,y4,x5,y5)",
        "(x0,x1,y1,y2) (x2,x3,y3,y4,y5,x4)",
        "(y0,x2,y3,y1) (x1,x3,x4,x5,y4,y2)",
        "(x0,y1,x3,x2) (y0,y2,y4,x4,y3,x1)",
        "(x4,y5,y4,x6) (y1,y3,x5,x3,y2,x2)",
        "(x0,x2,y0,x1) (y2,y3,x3,y4,y6,x4)",
        "(x3,y5,x5,x4) (x1,x2,y4,y3,y2,y1)",
        "(x3,x5,y3,y5) (x1,y2,x4,y6,y4,x2)",
        "(x0,y2,y0,y1) (x1,y3,x2,x4,y4,x3)",
    }}},
    {"[4,8]", false, {{
        "(y1,x2,y2,x3) (y3,x4,y4,x6,y6,x5,x7,y5)",
        "(x0,x1,y1,y2) (x2,x3,y3,y4,x5,y5,y6,x4)",
        "(y0,x1,x2,y1) (y2,y3,x5,x4,x6,y5,y4,x3)",
        "(x0,x2,y0,y1) (x1,x3,y5,x4,x5,y4,y3,y2)",
        "(y1,x3,x2,y3) (y2,y4,y6,y5,x7,x5,x6,x4)",
        "(y3,y5,y7,x5) (x0,y2,y0,x2,y4,x4,x3,x1)",
        "(x1,y2,y1,y3) (x2,x4,y5,x3,x5,y6,x6,y4)",
        "(x5,y7,y5,x6) (x1,y3,x3,x4,y6,y4,y2,x2)",
        "(x3,y4,y5,x5) (x0,y1,x1,y0,y2,x4,y3,x2)",
    }}},
    {"[6]", false, {{
        "(y1,x2,x4,y2,x3,y3)",
        "(x0,x2,y3,x1,y2,y1)",
        "(y0,x1,y1,x3,x2,y2)",
        "(x0,y1,y0,y2,x1,x2)",
        "(y1,y3,x3,y2,x4,x2)",
        "(x0,x1,y0,x2,y4,y2)",
        "(x1,x3,y1,y2,y3,x2)",
        "(x1,y3,y2,y4,x2,x3)",
        "(x0,y2,x2,y0,y1,x1)",
    }}},
    {"[4,8]", true, {{
        "(y6,x5,x7,y5,y3,x4,y4,x6) (y1,x2,y2,x3)",
        "(x0,x1,y1,y2) (x2,x3,y3,y4,x5,y5,y6,x4)",
        "(y3,x5,x4,x6,y5,y4,x3,y2) (y0,x1,x2,y1)",
        "(x2,y0,y1,x0) (x1,x3,y5,x4,x5,y4,y3,y2)",
        "(x2,y3,y1,x3) (y2,y4,y6,y5,x7,x5,x6,x4)",
        "(y3,y5,y7,x5) (x0,y2,y0,x2,y4,x4,x3,x1)",
        "(x6,y4,x2,x4,y5,x3,x5,y6) (x1,y2,y1,y3)",
        "(x5,y7,y5,x6) (y6,y4,y2,x2,x1,y3,x3,x4)",
        "(y2,x4,y3,x2,x0,y1,x1,y0) (x3,y4,y5,x5)",
    }}},
}};

const std::array<PictureData, 9> kPictured = {{
    {"<y2,y1,x2>", "<y4,x3,y1,y0> <x0,y2,x2,x1,y3,x4>", "<x0,x1,y1,x2,x3,x5,y3,y2,y0> (y5,y4,x6,x4)", "(y0,x0,{})"},
    {"<y2,x0,y1,x1,x3>", "<x1,x0,x2,x3,x5> <y4,y3,y1,y2,y0>", "<x1,x0,y1,y2,y4,x2,y0> (x3,y3,y5,x4)", "(y0,x1,{})"},
    {"<x3,y1,y0,x1,y2>", "<x5,x3,x2,x0,x1> <y0,y2,y1,y3,y4>", "<y0,y2,x0,x2,y3,y1,x1> (x3,x4,x5,y4)", "(x1,y0,{})"},
    {"<x3,x1,x0,y2,x2,y0,y1,y3>", "<y1,x2,y4,x4,x3,y5> <x5,y3,y2,x1>", "<y1,y3,x3,x1> (x2,y4,x4,y2)", "(x1,y1,{x0,y0})"},
    {"<x2,y1,y2>", "<y0,x1,y2,x3,y4> <x4,y3,x2,y1,x0>", "<y0,x2,x1,y3,x5,y5,x3,y1,x0> (x4,x6,y4,y2)", "(x0,y0,{})"},
    {"<y2,y0,x2,x0,x1,y3>", "<y1,x1,x3,y3,y5> <y4,y2,x4,x2,y0>", "<y1,x3,x2,y2,x1,y0> (y4,y6,x4,y3)", "(y0,y1,{x0})"},
    {"<y3,x1,y1,x3>", "<y5,x3,y2,x0,y0,y1> <x1,x2,y3,x5>", "<x1,y2,y3,x4,x2,x0,y0,y1> (x5,x3,y4,y5)", "(y1,x1,{})"},
    {"<y2,x1,x2>", "<x0,y1,x3,x4> <y4,x2,y2,y3,x1,y0>", "<x0,y2,x3,y5,y3,x1,x2,y1,y0> (y6,y4,x5,x4)", "(y0,x0,{})"},
    {"<y3,y1,x0,x2,x1,y0,y2>", "<y0,x2,x4,y2,y4> <y5,y3,x3,x1,y1>", "<y0,x1,x3,y2,y1> (y3,x2,x4,y4)", "(y1,y0,{x0})"},
}};

}  // namespace oberwolfach::data

namespace oberwolfach::data {

// Output of `find_brick --factor "[2,4,4]" --seed 1`.
const std::array<const char*, 9> kSearched244 = {{
    "(x2,y2) (x3,y1,y3,x5) (x4,y5,y4,x6)",
    "(x0,x1,y2,y1) (x2,x4,x3,y4) (y3,y5)",
    "(x1,y0) (x2,y4,y2,x4) (x3,x5,y3,y1)",
    "(x0,y2) (x1,x2,y0,y1) (x3,x4,y3,y4)",
    "(x2,y1,y2,y3) (x3,y5) (x4,x6,y4,x5)",
    "(x0,x2,x3,x1) (x4,y6,y4,y3) (y0,y2)",
    "(x1,y1,x2,y3) (x3,y2) (x4,x5,y4,y5)",
    "(x1,y3,x3,x2) (x4,y2,y4,y6) (x5,y5)",
    "(x0,y1,y0,x2) (x1,x3,y3,y2) (x4,y4)",
}};

}  // namespace oberwolfach::data
