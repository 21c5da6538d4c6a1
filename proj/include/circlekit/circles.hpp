#pragma once

// Named circles of a triangle. Each constructor returns the circle from its
// closed form together with witness points built by the classical
// construction, so callers can test one against the other.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "circlekit/centers.hpp"

namespace circlekit {

template <class T>
struct NamedCircleResult {
    Circle<T> circle;
    std::vector<std::pair<std::string, Point<T>>> witnesses;
    // Construction points that are not on the circle.
    std::vector<std::pair<std::string, Point<T>>> auxiliary;
    std::map<std::string, T> metadata;

    const Point<T>& witness(const std::string& name) const {
        for (const auto* list : {&witnesses, &auxiliary})
            for (const auto& [n, p] : *list)
                if (n == name) return p;
        fail(ErrorKind::UnknownIdentifier, "no witness named " + name);
    }
};

// Root that reports failure instead of throwing on the exact backend.
template <class T>
std::optional<T> try_root(const T& v) {
    if constexpr (is_exact_v<T>) {
        try {
            return sqrt_exact(v);
        } catch (const Error&) {
            return std::nullopt;
        }
    } else {
        return root(v);
    }
}

namespace detail {

template <class T>
Line<T> side_line(const Triangle<T>& t, int i) {
    return join(t.vertex(i + 1), t.vertex(i + 2), t.tolerance());
}

template <class T>
T sum_squares(const Triangle<T>& t) { return t.a2() + t.b2() + t.c2(); }

template <class T>
void put_with_root(std::map<std::string, T>& meta, const std::string& name, const T& squared) {
    meta[name + "_squared"] = squared;
    if (auto r = try_root(squared)) meta[name] = *r;
}

// Points on the side line opposite vertex i at distance sqrt(d2) from q.
template <class T>
bool side_points_at(const Triangle<T>& t, int i, const Point<T>& q, const T& d2,
                    std::vector<std::pair<std::string, Point<T>>>& out, const std::string& tag) {
    const Vec2<T> dir = t.vertex(i + 2) - t.vertex(i + 1);
    auto k = try_root(T(d2 / norm2(dir)));
    if (!k) return false;
    out.emplace_back("P" + tag, q - (*k) * dir);
    out.emplace_back("Q" + tag, q + (*k) * dir);
    return true;
}

// Every witness must lie on the circle: exactly on the rational backend,
// within the area threshold (scaled up for circles larger than the
// triangle) otherwise.
template <class T>
NamedCircleResult<T> verified(NamedCircleResult<T> out, const ToleranceContext& tol) {
    for (const auto& [name, p] : out.witnesses) {
        bool ok;
        if (p.at_infinity) {
            ok = false;
        } else if constexpr (is_exact_v<T>) {
            ok = power_of_point(p, out.circle) == 0;
        } else {
            const double grow = std::max(1.0, out.circle.radius_squared / (tol.scale * tol.scale));
            ok = std::fabs(power_of_point(p, out.circle)) <= tol.threshold(Dim::Area) * grow;
        }
        if (!ok) fail(ErrorKind::ConstructionMismatch, "witness " + name + " is off its circle");
    }
    return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Lemoine circles
// ---------------------------------------------------------------------------

// Circle through the six points where the parallels to the sides through the
// symmedian point meet the other two sides.
template <class T>
NamedCircleResult<T> lemoine_first(const Triangle<T>& t) {
    const auto& tol = t.tolerance();
    const Point<T> k = center(t, CenterId::Symmedian);
    const Point<T> o = circumcenter(t);
    const Line<T> ab = join(t.A(), t.B(), tol), bc = join(t.B(), t.C(), tol), ca = join(t.C(), t.A(), tol);
    const Line<T> par_bc = parallel_through(bc, k), par_ca = parallel_through(ca, k), par_ab = parallel_through(ab, k);

    NamedCircleResult<T> out;
    out.witnesses = {
        {"A1", meet_lines(par_bc, ab, tol)}, {"A2", meet_lines(par_bc, ca, tol)},
        {"B1", meet_lines(par_ca, bc, tol)}, {"B2", meet_lines(par_ca, ab, tol)},
        {"C1", meet_lines(par_ab, ca, tol)}, {"C2", meet_lines(par_ab, bc, tol)},
    };
    const T sigma = detail::sum_squares(t);
    const T r2 = circumradius_squared(t);
    const T l2_squared = t.a2() * t.b2() * t.c2() / (sigma * sigma);
    const Point<T> l = midpoint(o, k);
    out.circle = Circle<T>{l, (r2 + l2_squared) / 4};

    auto& m = out.metadata;
    m["tan_omega"] = 4 * t.area() / sigma;
    detail::put_with_root(m, std::string("R"), r2);
    detail::put_with_root(m, std::string("R_L2"), l2_squared);
    detail::put_with_root(m, std::string("R_L1"), out.circle.radius_squared);
    // Single-fraction closed form, evaluated separately.
    detail::put_with_root(m, std::string("R_L1_closed_form"),
                          T((r2 * sigma * sigma + t.a2() * t.b2() * t.c2()) / (4 * sigma * sigma)));
    // Power of B: |LB|^2 minus the product of the chord segments along BC.
    const Point<T>& c2 = out.witness("C2");
    const Point<T>& b1 = out.witness("B1");
    detail::put_with_root(m, std::string("R_L1_power_route"), T(distance_squared(l, t.B()) - dot(c2 - t.B(), b1 - t.B())));
    return detail::verified(std::move(out), t.tolerance());
}

// Circle through the six points cut on the sides by the antiparallels through
// the symmedian point; centered at that point.
template <class T>
NamedCircleResult<T> lemoine_second(const Triangle<T>& t) {
    const auto& tol = t.tolerance();
    const Point<T> k = center(t, CenterId::Symmedian);
    const Line<T> ab = join(t.A(), t.B(), tol), bc = join(t.B(), t.C(), tol), ca = join(t.C(), t.A(), tol);
    const Line<T> anti_a = antiparallel_through(t, Vertex::A, k);
    const Line<T> anti_b = antiparallel_through(t, Vertex::B, k);
    const Line<T> anti_c = antiparallel_through(t, Vertex::C, k);

    NamedCircleResult<T> out;
    out.witnesses = {
        {"A1", meet_lines(anti_a, ab, tol)}, {"A2", meet_lines(anti_a, ca, tol)},
        {"B1", meet_lines(anti_b, bc, tol)}, {"B2", meet_lines(anti_b, ab, tol)},
        {"C1", meet_lines(anti_c, ca, tol)}, {"C2", meet_lines(anti_c, bc, tol)},
    };
    const T sigma = detail::sum_squares(t);
    const T l2_squared = t.a2() * t.b2() * t.c2() / (sigma * sigma);
    out.circle = Circle<T>{k, l2_squared};
    auto& m = out.metadata;
    m["tan_omega"] = 4 * t.area() / sigma;
    detail::put_with_root(m, std::string("R"), circumradius_squared(t));
    detail::put_with_root(m, std::string("R_L2"), l2_squared);
    // R tan(omega), squared.
    m["R_tan_omega_squared"] = circumradius_squared(t) * m["tan_omega"] * m["tan_omega"];
    return detail::verified(std::move(out), t.tolerance());
}

// Generalization: M on the A-symmedian at A + s (K - A); MN parallel to AB
// with N on BK, MP parallel to AC with P on CK. The six points where MN, MP,
// NP meet the sides are concyclic.
template <class T>
NamedCircleResult<T> generalized_lemoine(const Triangle<T>& t, const T& s) {
    const auto& tol = t.tolerance();
    const Point<T> k = center(t, CenterId::Symmedian);
    const Point<T> m = lerp(t.A(), k, s);
    for (const T& w : barycentric_of(t, m))
        if (w <= 0 || negligible(w, tol, Dim::Ratio)) fail(ErrorKind::PointOutsideTriangle, "M is not strictly inside");
    const Line<T> ab = join(t.A(), t.B(), tol), bc = join(t.B(), t.C(), tol), ca = join(t.C(), t.A(), tol);
    const Line<T> mn = parallel_through(ab, m);
    const Line<T> mp = parallel_through(ca, m);
    const Point<T> n = meet_lines(mn, join(t.B(), k, tol), tol);
    const Point<T> p = meet_lines(mp, join(t.C(), k, tol), tol);
    // At M = K the points N and P coincide with K and NP is the parallel.
    const Line<T> np = coincident(n, p, tol) ? parallel_through(bc, n) : join(n, p, tol);

    NamedCircleResult<T> out;
    out.auxiliary = {{"M", m}, {"N", n}, {"P", p}};
    out.witnesses = {
        {"R", meet_lines(np, ab, tol)}, {"S", meet_lines(mp, ab, tol)},
        {"T", meet_lines(mn, bc, tol)}, {"U", meet_lines(mp, bc, tol)},
        {"V", meet_lines(np, ca, tol)}, {"W", meet_lines(mn, ca, tol)},
    };
    out.circle = circle_through(out.witness("S"), out.witness("T"), out.witness("V"), tol);
    // Sine-like residual of NP against BC (cross of directions over norms).
    const Vec2<T> d1 = np.direction(), d2 = bc.direction();
    const T c = cross(d1, d2);
    out.metadata["np_bc_cross_squared"] = c * c / (norm2(d1) * norm2(d2));
    return detail::verified(std::move(out), t.tolerance());
}

// ---------------------------------------------------------------------------
// Droz-Farny circles
// ---------------------------------------------------------------------------

// 5 R^2 - (a^2 + b^2 + c^2) / 2, the common squared radius of both circles.
template <class T>
T droz_farny_radius_squared(const Triangle<T>& t) {
    return 5 * circumradius_squared(t) - detail::sum_squares(t) / 2;
}

// Centered at H; witnesses are where the circles about the altitude feet
// through O meet the sides.
template <class T>
NamedCircleResult<T> droz_farny_first(const Triangle<T>& t) {
    const Point<T> o = circumcenter(t);
    NamedCircleResult<T> out;
    out.circle = Circle<T>{orthocenter(t), droz_farny_radius_squared(t)};
    for (int i = 0; i < 3; ++i) {
        const Point<T> f = foot(t.vertex(i), detail::side_line(t, i));
        detail::side_points_at(t, i, f, distance_squared(f, o), out.witnesses, std::to_string(i + 1));
    }
    const T oh2 = distance_squared(o, out.circle.center);
    out.metadata["OH_squared"] = oh2;
    out.metadata["half_R2_plus_OH2"] = (circumradius_squared(t) + oh2) / 2;
    return detail::verified(std::move(out), t.tolerance());
}

// Centered at O; witnesses are where the circles about the side midpoints
// through H meet the sides.
template <class T>
NamedCircleResult<T> droz_farny_second(const Triangle<T>& t) {
    const Point<T> h = orthocenter(t);
    NamedCircleResult<T> out;
    out.circle = Circle<T>{circumcenter(t), droz_farny_radius_squared(t)};
    for (int i = 0; i < 3; ++i) {
        const Point<T> mid = midpoint(t.vertex(i + 1), t.vertex(i + 2));
        detail::side_points_at(t, i, mid, distance_squared(mid, h), out.witnesses, std::to_string(i + 1));
    }
    const T oh2 = distance_squared(out.circle.center, h);
    out.metadata["OH_squared"] = oh2;
    out.metadata["half_R2_plus_OH2"] = (circumradius_squared(t) + oh2) / 2;
    return detail::verified(std::move(out), t.tolerance());
}

// rho^2 + 4 R^2 - (a^2 + b^2 + c^2) / 2; may be negative for small rho.
template <class T>
T droz_farny_family_radius_squared(const Triangle<T>& t, const T& rho) {
    return rho * rho + 4 * circumradius_squared(t) - detail::sum_squares(t) / 2;
}

// Circles of radius rho about the vertices cut the midlines in six points on
// a circle about H. Throws ImaginaryCircle when the squared radius is negative.
template <class T>
NamedCircleResult<T> droz_farny_family(const Triangle<T>& t, const T& rho) {
    NamedCircleResult<T> out;
    const Point<T> h = orthocenter(t);
    out.circle = Circle<T>::make(h, droz_farny_family_radius_squared(t, rho), t.tolerance());
    for (int i = 0; i < 3; ++i) {
        const Point<T>& v = t.vertex(i);
        const Point<T> m1 = midpoint(v, t.vertex(i + 1));
        const Point<T> m2 = midpoint(v, t.vertex(i + 2));
        try {
            const auto pts = intersect_line_circle(join(m1, m2, t.tolerance()), Circle<T>{v, rho * rho}, t.tolerance());
            for (std::size_t j = 0; j < pts.size(); ++j)
                out.witnesses.emplace_back((j == 0 ? "P" : "Q") + std::to_string(i + 1), pts[j]);
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::IrrationalValue) throw;
        }
    }
    return detail::verified(std::move(out), t.tolerance());
}

// ---------------------------------------------------------------------------
// Circle orthogonal to the three excircles
// ---------------------------------------------------------------------------

template <class T>
NamedCircleResult<T> radical_circle_excircles(const Triangle<T>& t) {
    const Point<T> s = center(t, CenterId::Spieker);
    const T r = inradius(t);
    const T p = t.semiperimeter();
    NamedCircleResult<T> out;
    out.circle = Circle<T>{s, (r * r + p * p) / 4};
    const char* names[3] = {"A", "B", "C"};
    for (int i = 0; i < 3; ++i) {
        const Vertex v = vertex_at(i);
        const Circle<T> ex{excenter(t, v), T(exradius(t, v) * exradius(t, v))};
        out.metadata[std::string("power_") + names[i]] = power_of_point(s, ex);
        out.metadata[std::string("exradius_") + names[i]] = exradius(t, v);
    }
    out.metadata["inradius"] = r;
    out.metadata["semiperimeter"] = p;
    return detail::verified(std::move(out), t.tolerance());
}

// ---------------------------------------------------------------------------
// Neuberg and Lucas circles
// ---------------------------------------------------------------------------

// Locus of the vertex v when the opposite side is fixed and the Brocard angle
// is held. Center on the perpendicular bisector of the opposite side.
template <class T>
NamedCircleResult<T> neuberg_circle(const Triangle<T>& t, Vertex v) {
    const int i = index_of(v);
    const Point<T>& n = t.vertex(i + 1);
    const Point<T>& p = t.vertex(i + 2);
    const T cot = brocard_cot(t);
    const Point<T> mid = midpoint(n, p);
    // The left normal of n->p points toward v in a counterclockwise triangle.
    const Point<T> c = mid + T(cot / 2) * perp(p - n);
    NamedCircleResult<T> out;
    out.circle = Circle<T>{c, t.side2(i) / 4 * (cot * cot - 3)};
    out.witnesses = {{"vertex", t.vertex(i)}, {"mirror", reflect(t.vertex(i), perpendicular_bisector(n, p))}};
    out.metadata["cot_omega"] = cot;
    const T on2 = distance_squared(c, circumcenter(t));
    detail::put_with_root(out.metadata, std::string("ON"), on2);
    // side^3 / (4 S), squared.
    out.metadata["ON_closed_form_squared"] = t.side2(i) * t.side2(i) * t.side2(i) / (16 * t.area() * t.area());
    return detail::verified(std::move(out), t.tolerance());
}

// Circle through v tangent internally to the circumcircle and touching the
// square inscribed on the opposite side. Witnesses come from the auxiliary
// square construction.
template <class T>
NamedCircleResult<T> lucas_circle(const Triangle<T>& t, Vertex v) {
    const auto& tol = t.tolerance();
    const int i = index_of(v);
    const Point<T>& x = t.vertex(i);
    const Point<T>& n = t.vertex(i + 1);
    const Point<T>& p = t.vertex(i + 2);
    const Line<T> base = join(n, p, tol);
    const T side = t.side(i);

    // Any square with a corner on side xn and two corners on the base, then
    // project it from n onto the side xp.
    const Point<T> a1 = midpoint(n, x);
    const Point<T> b1 = foot(a1, base);
    const Vec2<T> along = T(1 / side) * (p - n);
    const T h1 = root(distance_squared(a1, b1));
    const Point<T> c1 = b1 + h1 * along;
    const Point<T> d1 = c1 + (a1 - b1);
    const Point<T> corner_xp = meet_lines(join(n, d1, tol), join(x, p, tol), tol);
    const Point<T> corner_xn = meet_lines(parallel_through(base, corner_xp), join(x, n, tol), tol);

    NamedCircleResult<T> out;
    const T rad = lucas_radius(t, v);
    out.circle = Circle<T>{lucas_center(t, v), rad * rad};
    out.witnesses = {{"vertex", x},
                     {"corner_" + std::string(1, "ABC"[i]) + std::string(1, "ABC"[(i + 1) % 3]), corner_xn},
                     {"corner_" + std::string(1, "ABC"[i]) + std::string(1, "ABC"[(i + 2) % 3]), corner_xp}};
    out.auxiliary = {{"corner_base_1", foot(corner_xn, base)}, {"corner_base_2", foot(corner_xp, base)}};
    const T r = root(circumradius_squared(t));
    const T h = 2 * t.area() / side;
    out.metadata["radius_altitude_form"] = r * h / (side + h);
    out.metadata["radius_side_form"] = r / (1 + 2 * side * r / (t.side(i + 1) * t.side(i + 2)));
    return detail::verified(std::move(out), t.tolerance());
}

// ---------------------------------------------------------------------------
// Apollonius circles of rank k
// ---------------------------------------------------------------------------

// Circle on the segment between the internal rank-k foot from v and its
// harmonic conjugate: the locus of M with M N / M P = (|vN| / |vP|)^k.
template <class T>
NamedCircleResult<T> apollonius_rank_k(const Triangle<T>& t, Vertex v, const T& k) {
    const auto& tol = t.tolerance();
    const int i = index_of(v);
    if (negligible(T(t.side2(i + 1) - t.side2(i + 2)), tol, Dim::Area))
        fail(ErrorKind::IsoscelesUndefined, "equal sides at the vertex");
    if (k == 0) fail(ErrorKind::FootAtInfinity, "rank zero puts the external foot at infinity");
    const Point<T> f = cevian_foot_rank_k(t, v, k);
    const Point<T> g = harmonic_conjugate(f, t.vertex(i + 1), t.vertex(i + 2), tol);
    if (g.at_infinity) fail(ErrorKind::FootAtInfinity, "external foot at infinity");
    NamedCircleResult<T> out;
    out.circle = circle_with_diameter(f, g);
    out.witnesses = {{"internal_foot", f}, {"external_foot", g}};
    if (k == 1) out.witnesses.emplace_back("vertex", t.vertex(i));
    out.metadata["ratio"] = rank_ratio(t, v, k);
    return detail::verified(std::move(out), t.tolerance());
}

// ---------------------------------------------------------------------------
// Six-point and adjoint circles
// ---------------------------------------------------------------------------

// The six projections of p and its isogonal conjugate onto the side lines.
template <class T>
NamedCircleResult<T> six_point_circle(const Triangle<T>& t, const Point<T>& p) {
    const Point<T> q = isogonal_conjugate(t, p);
    NamedCircleResult<T> out;
    const Point<T> c = midpoint(p, q);
    for (int i = 0; i < 3; ++i) {
        const Line<T> side = detail::side_line(t, i);
        out.witnesses.emplace_back("P" + std::to_string(i + 1), foot(p, side));
        out.witnesses.emplace_back("Q" + std::to_string(i + 1), foot(q, side));
    }
    out.circle = Circle<T>{c, distance_squared(c, out.witnesses[0].second)};
    out.auxiliary.emplace_back("conjugate", q);
    return detail::verified(std::move(out), t.tolerance());
}

// Circle through `through` and `touch`, tangent at `touch` to the side from
// `touch` to the remaining vertex.
template <class T>
NamedCircleResult<T> adjoint_circle(const Triangle<T>& t, Vertex through, Vertex touch) {
    if (through == touch) fail(ErrorKind::CoincidentPoints, "adjoint circle needs two distinct vertices");
    const auto& tol = t.tolerance();
    const int other = 3 - index_of(through) - index_of(touch);
    const Point<T>& x = t.vertex(touch);
    const Point<T>& y = t.vertex(through);
    const Line<T> normal = perpendicular_through(join(x, t.vertex(other), tol), x);
    const Point<T> c = meet_lines(normal, perpendicular_bisector(x, y), tol);
    NamedCircleResult<T> out;
    out.circle = Circle<T>{c, distance_squared(c, x)};
    out.witnesses = {{"through", y}, {"touch", x}};
    return detail::verified(std::move(out), t.tolerance());
}

}  // namespace circlekit
