#include "charvar/golden.hpp"

#include "charvar/errors.hpp"

#include <initializer_list>
#include <utility>

namespace charvar {

namespace {

LaurentPoly row(Var x, std::initializer_list<std::pair<int, long>> terms) {
    LaurentPoly p;
    for (const auto& [e, c] : terms) p += P_mono(x, e, Rational(c));
    return p;
}

[[noreturn]] void out_of_range(const char* which, int g) {
    throw Error(std::string(which) + ": no reference row for genus " +
                std::to_string(g));
}

} // namespace

LaurentPoly golden_ie_betti_low(int g) {
    switch (g) {
    case 2:
        return row(Var::q, {{0, 1}, {2, 17}});
    case 3:
        return row(Var::q, {{0, 1}, {2, -4}, {4, 75}, {6, 384}});
    case 4:
        return row(Var::q, {{0, 1}, {2, -6}, {4, 15}, {6, 243}, {8, 3875}});
    case 5:
        return row(Var::q, {{0, 1}, {2, -8}, {4, 28}, {6, -56}, {8, 1103},
                            {10, 28672}, {12, 71848}});
    default:
        out_of_range("golden_ie_betti_low", g);
    }
}

LaurentPoly golden_ip(int g) {
    switch (g) {
    case 2:
        return row(Var::t, {{0, 1}, {2, 1}, {4, 17}, {6, 17}});
    case 3:
        return row(Var::t, {{0, 1}, {2, 1}, {3, 6}, {4, 2}, {5, 6}, {6, 17},
                            {7, 6}, {8, 81}, {9, 12}, {10, 396}, {11, 6},
                            {12, 66}});
    case 4:
        return row(Var::t, {{0, 1},   {2, 1},    {3, 8},  {4, 2},    {5, 8},
                            {6, 30},  {7, 16},   {8, 31}, {9, 72},   {10, 59},
                            {11, 72}, {12, 385}, {13, 80}, {14, 3955},
                            {15, 80}, {16, 3885}, {17, 16}, {18, 259}});
    case 5:
        return row(Var::t, {{0, 1},     {2, 1},     {3, 10},   {4, 2},
                            {5, 10},    {6, 47},    {7, 20},   {8, 48},
                            {9, 140},   {10, 93},   {11, 150}, {12, 304},
                            {13, 270},  {14, 349},  {15, 522}, {16, 1583},
                            {17, 532},  {18, 29414}, {19, 532}, {20, 72170},
                            {21, 280},  {22, 28784}, {23, 30},  {24, 1028}});
    default:
        out_of_range("golden_ip", g);
    }
}

LaurentPoly golden_ip_defect(int g) {
    switch (g) {
    case 2:
        return row(Var::t, {{4, 16}});
    case 3:
        return row(Var::t, {{3, 6}, {4, 1}, {5, 6}, {6, 1}, {7, 6}, {8, 79},
                            {10, 1}});
    case 4:
        return row(Var::t, {{3, 8},   {4, 1},   {5, 8},   {6, -20}, {7, 16},
                            {8, -19}, {9, 22},  {10, 56}, {11, 56}, {12, 327},
                            {13, 8},  {14, 28}, {16, 1}});
    case 5:
        return row(Var::t, {{3, 10},   {4, 1},    {5, 10},  {6, -65},
                            {7, 20},   {8, -196}, {9, -35}, {10, -20},
                            {11, -25}, {12, 124}, {13, 240}, {14, 256},
                            {15, 262}, {16, 1279}, {17, 120}, {18, 211},
                            {19, 10},  {20, 45},  {22, 1}});
    default:
        out_of_range("golden_ip_defect", g);
    }
}

} // namespace charvar
