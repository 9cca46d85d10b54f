#include "logimg/reference_cases.hpp"

namespace logimg {

namespace {

constexpr std::array<ReferenceCase, 4> kCases{{
    {"couple", {-0.705, -0.784, -0.784}, {-0.868, -0.883, -0.873}, {-0.471, -0.567, -0.612},
     1.434, 1.429, 1.472, -1.461},
    {"fruit", {-0.187, -0.388, -0.586}, {-0.549, -0.710, -0.785}, {0.359, 0.079, -0.263},
     1.081, 0.458, 1.181, -1.156},
    {"kidsat3", {-0.694, -0.727, -0.580}, {-0.868, -0.846, -0.714}, {-0.347, -0.515, -0.459},
     1.384, 1.116, 1.450, -1.447},
    {"boat", {-0.194, -0.323, -0.338}, {-0.557, -0.675, -0.676}, {-0.001, -0.119, -0.107},
     1.402, 0.412, 1.538, -1.941},
}};

ColorVec to_color(const std::array<double, 3>& v) { return ColorVec::make(v[0], v[1], v[2]); }

}  // namespace

ImageStats ReferenceCase::stats() const {
    ImageStats s;
    s.v0 = to_color(v0);
    s.v1 = to_color(v1);
    s.v2 = to_color(v2);
    return s;
}

std::span<const ReferenceCase> reference_cases() { return kCases; }

}  // namespace logimg
