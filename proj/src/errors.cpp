#include "circlekit/errors.hpp"

namespace circlekit {

std::string_view error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::CoincidentPoints: return "CoincidentPoints";
        case ErrorKind::CoincidentLines: return "CoincidentLines";
        case ErrorKind::CollinearPoints: return "CollinearPoints";
        case ErrorKind::ConcentricCircles: return "ConcentricCircles";
        case ErrorKind::PoleAtCenter: return "PoleAtCenter";
        case ErrorKind::LineThroughCenter: return "LineThroughCenter";
        case ErrorKind::InfinitePointUnsupported: return "InfinitePointUnsupported";
        case ErrorKind::ImaginaryCircle: return "ImaginaryCircle";
        case ErrorKind::IrrationalValue: return "IrrationalValue";
        case ErrorKind::DegenerateTriangle: return "DegenerateTriangle";
        case ErrorKind::OnCircumcircle: return "OnCircumcircle";
        case ErrorKind::AtVertex: return "AtVertex";
        case ErrorKind::NotOnLine: return "NotOnLine";
        case ErrorKind::AtEndpoint: return "AtEndpoint";
        case ErrorKind::OnSideLine: return "OnSideLine";
        case ErrorKind::RightAngle: return "RightAngle";
        case ErrorKind::IsoscelesDegenerate: return "IsoscelesDegenerate";
        case ErrorKind::OutsideAngle: return "OutsideAngle";
        case ErrorKind::PointOutsideTriangle: return "PointOutsideTriangle";
        case ErrorKind::IsoscelesUndefined: return "IsoscelesUndefined";
        case ErrorKind::FootAtInfinity: return "FootAtInfinity";
        case ErrorKind::RightAngleCase: return "RightAngleCase";
        case ErrorKind::ConstructionMismatch: return "ConstructionMismatch";
        case ErrorKind::UnknownCheck: return "UnknownCheck";
        case ErrorKind::BackendUnsupported: return "BackendUnsupported";
        case ErrorKind::SyntaxError: return "SyntaxError";
        case ErrorKind::UnknownIdentifier: return "UnknownIdentifier";
        case ErrorKind::ArityError: return "ArityError";
        case ErrorKind::DegenerateStep: return "DegenerateStep";
        case ErrorKind::MissingGiven: return "MissingGiven";
        case ErrorKind::MalformedDocument: return "MalformedDocument";
    }
    return "Unknown";
}

}  // namespace circlekit
