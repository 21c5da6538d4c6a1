// Radical centers: excircles and the Spieker point, and the two polar
// theorems for circles through pairs of vertices.

#include "checks/support.hpp"

namespace circlekit::checks {

namespace {

using P = Point<double>;
using L = Line<double>;

template <class T>
Circle<T> excircle(const Triangle<T>& t, Vertex v) {
    const T r = exradius(t, v);
    return Circle<T>{excenter(t, v), r * r};
}

template <class T>
T excircle_radical_center(const SceneDocument& s, bool) {
    const auto t = triangle_of<T>(s);
    const auto f = frame_of<T>(s);
    const auto& tol = t.tolerance();
    const Circle<T> ea = excircle(t, Vertex::A), eb = excircle(t, Vertex::B), ec = excircle(t, Vertex::C);
    const Point<T> rc = radical_center(ea, eb, ec, tol);
    const Line<T> bc_axis = radical_axis(eb, ec, tol);
    const Point<T> incenter = center(t, CenterId::Incenter);
    return std::max({rel_dist(f, rc, center(t, CenterId::Spieker)),
                     on_line_res(f, midpoint(t.B(), t.C()), bc_axis),
                     parallel_res(bc_axis.direction(), incenter - t.A())});
}

double incircle_radical_center(const SceneDocument& s, bool) {
    const auto t = triangle_of<double>(s);
    const auto f = frame_of<double>(s);
    const auto& tol = t.tolerance();
    const double r = inradius(t);
    const Circle<double> in{center(t, CenterId::Incenter), r * r};
    const P rc = radical_center(in, excircle(t, Vertex::B), excircle(t, Vertex::C), tol);
    const Triangle<double> medial = derived_triangle(t, DerivedTriangleId::Medial);
    return rel_dist(f, rc, excenter(medial, Vertex::A));
}

template <class T>
T spieker_power(const SceneDocument& s, bool) {
    const auto t = triangle_of<T>(s);
    const auto f = frame_of<T>(s);
    const Point<T> sp = center(t, CenterId::Spieker);
    const T r = inradius(t), p = t.semiperimeter();
    const T expected = (r * r + p * p) / 4;
    T worst(0);
    for (int i = 0; i < 3; ++i) worst = std::max(worst, rel_area(f, T(power_of_point(sp, excircle(t, vertex_at(i))) - expected)));
    return worst;
}

template <class T>
SceneDocument rational_or_float_triangle(Rng& rng) {
    SceneDocument s;
    if constexpr (is_exact_v<T>) {
        put_triangle(s, random_rational_triangle(rng));
    } else {
        put_triangle(s, random_triangle(rng));
    }
    return s;
}

// Circle through the endpoints of side i, center offset along the
// perpendicular bisector by `offset` times the side vector.
Circle<double> circle_on_side(const Triangle<double>& t, int i, double offset) {
    const P& n = t.vertex(i + 1);
    const P& p = t.vertex(i + 2);
    const P c = midpoint(n, p) + offset * perp(p - n);
    return Circle<double>{c, distance_squared(c, n)};
}

double polars_of_radical_center(const SceneDocument& s, bool) {
    const auto t = triangle_of<double>(s);
    const auto f = frame_of<double>(s);
    const auto& tol = t.tolerance();
    const std::array<Circle<double>, 3> circles = {circle_on_side(t, 0, s.param("sa")),
                                                   circle_on_side(t, 1, s.param("sb")),
                                                   circle_on_side(t, 2, s.param("sc"))};
    const P rc = radical_center(circles[0], circles[1], circles[2], tol);
    if (rc.at_infinity) fail(ErrorKind::InfinitePointUnsupported, "radical center at infinity");
    // The theorem needs the radical center outside all three circles.
    if (power_of_point(rc, circles[0]) <= 0.05 * f.unit2)
        fail(ErrorKind::ImaginaryCircle, "radical center is not clearly outside the circles");
    std::array<P, 3> cut;
    for (int i = 0; i < 3; ++i) cut[i] = meet_lines(polar_line(rc, circles[i], tol), side(t, i), tol);
    return collinear_res(f, cut[0], cut[1], cut[2]);
}

double tangents_at_common_point(const SceneDocument& s, bool) {
    const auto t = triangle_of<double>(s);
    const auto f = frame_of<double>(s);
    const auto& tol = t.tolerance();
    const P m = s.point("M");
    if (side_clearance(t, m) < 0.05) fail(ErrorKind::OnSideLine, "M too close to a side line");
    if (std::fabs(power_of_point(m, circumcircle(t))) < 0.05 * f.unit2)
        fail(ErrorKind::OnCircumcircle, "M too close to the circumcircle");
    std::array<P, 3> cut;
    for (int i = 0; i < 3; ++i) {
        const Circle<double> c = circle_through(m, t.vertex(i + 1), t.vertex(i + 2), tol);
        cut[i] = meet_lines(tangent_at(c, m), side(t, i), tol);
    }
    return collinear_res(f, cut[0], cut[1], cut[2]);
}

}  // namespace

void add_radical_checks(Catalog& out) {
    out.push_back({{"E.T1", "radical center of the excircles is the Spieker point", BackendSupport::Both},
                   rational_or_float_triangle<double>, excircle_radical_center<double>,
                   rational_or_float_triangle<Rational>,
                   [](const SceneDocument& s) { return to_double(excircle_radical_center<Rational>(s, false)); }});
    out.push_back({{"E.T2", "radical center of (I), (Ib), (Ic) is the A1-excenter of the medial triangle",
                    BackendSupport::Float},
                   rational_or_float_triangle<double>, incircle_radical_center, nullptr, nullptr});
    out.push_back({{"E.T3", "power of the Spieker point to each excircle is (r^2 + p^2) / 4", BackendSupport::Both},
                   rational_or_float_triangle<double>, spieker_power<double>, rational_or_float_triangle<Rational>,
                   [](const SceneDocument& s) { return to_double(spieker_power<Rational>(s, false)); }});
    out.push_back({{"P.T1", "polars of an exterior radical center cut the sides in collinear points",
                    BackendSupport::Float},
                   [](Rng& r) {
                       SceneDocument s = rational_or_float_triangle<double>(r);
                       s.params["sa"] = r.uniform(-1, 1);
                       s.params["sb"] = r.uniform(-1, 1);
                       s.params["sc"] = r.uniform(-1, 1);
                       return s;
                   },
                   polars_of_radical_center, nullptr, nullptr});
    out.push_back({{"P.T2", "tangents at M to (MBC), (MCA), (MAB) cut the sides in collinear points",
                    BackendSupport::Float},
                   [](Rng& r) {
                       SceneDocument s;
                       const auto t = random_triangle(r);
                       put_triangle(s, t);
                       s.put("M", random_near(r, t, 0.8));
                       return s;
                   },
                   tangents_at_common_point, nullptr, nullptr});
}

}  // namespace circlekit::checks
