#include "circlekit/centers.hpp"

namespace circlekit {

namespace {

constexpr std::array<std::pair<CenterId, std::string_view>, 12> kCenterNames = {{
    {CenterId::Centroid, "centroid"},
    {CenterId::Incenter, "incenter"},
    {CenterId::Circumcenter, "circumcenter"},
    {CenterId::Orthocenter, "orthocenter"},
    {CenterId::NinePointCenter, "nine_point"},
    {CenterId::Symmedian, "symmedian_point"},
    {CenterId::Spieker, "spieker"},
    {CenterId::Brocard1, "brocard_1"},
    {CenterId::Brocard2, "brocard_2"},
    {CenterId::ExcenterA, "excenter_A"},
    {CenterId::ExcenterB, "excenter_B"},
    {CenterId::ExcenterC, "excenter_C"},
}};

constexpr std::array<std::pair<DerivedTriangleId, std::string_view>, 5> kDerivedNames = {{
    {DerivedTriangleId::Medial, "medial"},
    {DerivedTriangleId::Tangential, "tangential"},
    {DerivedTriangleId::SecondBrocard, "second_brocard"},
    {DerivedTriangleId::Excentral, "excentral"},
    {DerivedTriangleId::Lucas, "lucas"},
}};

}  // namespace

std::string_view center_name(CenterId id) {
    for (const auto& [k, n] : kCenterNames)
        if (k == id) return n;
    return "unknown";
}

std::optional<CenterId> parse_center(std::string_view name) {
    for (const auto& [k, n] : kCenterNames)
        if (n == name) return k;
    return std::nullopt;
}

std::string_view derived_triangle_name(DerivedTriangleId id) {
    for (const auto& [k, n] : kDerivedNames)
        if (k == id) return n;
    return "unknown";
}

std::optional<DerivedTriangleId> parse_derived_triangle(std::string_view name) {
    for (const auto& [k, n] : kDerivedNames)
        if (n == name) return k;
    return std::nullopt;
}

}  // namespace circlekit
