#include "circlekit/render.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace circlekit {

namespace {

// Pixel coordinates at 1/1000 px, so tiny round-off never reaches the bytes.
std::string px(double v) {
    double r = std::round(v * 1000) / 1000;
    if (r == 0) r = 0;  // no "-0"
    return format_number(r);
}

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

struct Box {
    double min_x = INFINITY, min_y = INFINITY, max_x = -INFINITY, max_y = -INFINITY;
    void add(double x, double y) {
        min_x = std::min(min_x, x);
        max_x = std::max(max_x, x);
        min_y = std::min(min_y, y);
        max_y = std::max(max_y, y);
    }
    bool empty() const { return !(min_x <= max_x); }
};

class View {
public:
    View(const Box& box, const RenderOptions& opts) : size_(opts.size) {
        double w = box.max_x - box.min_x, h = box.max_y - box.min_y;
        extent_ = std::max({w, h, 1e-9});
        const double inner = opts.size * (1 - 2 * opts.margin);
        scale_ = inner / extent_;
        // Center the content on the square canvas.
        cx_ = (box.min_x + box.max_x) / 2;
        cy_ = (box.min_y + box.max_y) / 2;
    }
    double x(double wx) const { return size_ / 2.0 + (wx - cx_) * scale_; }
    double y(double wy) const { return size_ / 2.0 - (wy - cy_) * scale_; }
    double length(double w) const { return w * scale_; }
    // World rectangle covered by the canvas.
    double half_world() const { return size_ / 2.0 / scale_; }
    double cx() const { return cx_; }
    double cy() const { return cy_; }

private:
    int size_;
    double extent_, scale_, cx_, cy_;
};

std::string stroke_of(const SceneDocument& doc, const std::string& name, const char* fallback) {
    const auto it = doc.styles.find(name);
    return it != doc.styles.end() && !it->second.stroke.empty() ? it->second.stroke : fallback;
}

std::string label_of(const SceneDocument& doc, const std::string& name) {
    const auto it = doc.styles.find(name);
    return it != doc.styles.end() && !it->second.label.empty() ? it->second.label : name;
}

}  // namespace

std::string render_scene(const SceneDocument& doc, const RenderOptions& opts) {
    if (opts.size <= 0) fail(ErrorKind::MalformedDocument, "canvas size must be positive");
    Box box;
    for (const auto& [name, p] : doc.points) box.add(p[0], p[1]);
    for (const auto& [name, c] : doc.circles) {
        const double r = std::sqrt(c.r2);
        box.add(c.center[0] - r, c.center[1] - r);
        box.add(c.center[0] + r, c.center[1] + r);
    }

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\"";
    if (box.empty()) {
        out << " width=\"1\" height=\"1\" viewBox=\"0 0 1 1\"/>\n";
        return out.str();
    }
    const std::string size = std::to_string(opts.size);
    out << " width=\"" << size << "\" height=\"" << size << "\" viewBox=\"0 0 " << size << " " << size << "\">\n";
    out << "<rect width=\"" << size << "\" height=\"" << size << "\" fill=\"white\"/>\n";
    const View view(box, opts);

    for (const auto& [name, c] : doc.circles) {
        out << "<circle id=\"circle-" << escape(name) << "\" cx=\"" << px(view.x(c.center[0])) << "\" cy=\""
            << px(view.y(c.center[1])) << "\" r=\"" << px(view.length(std::sqrt(c.r2))) << "\" fill=\"none\" stroke=\""
            << escape(stroke_of(doc, name, "#1f4e79")) << "\"/>\n";
    }

    // Lines a x + b y + c = 0, clipped to the canvas square.
    const double half = view.half_world();
    const double lo_x = view.cx() - half, hi_x = view.cx() + half, lo_y = view.cy() - half, hi_y = view.cy() + half;
    for (const auto& [name, l] : doc.lines) {
        const double a = l[0], b = l[1], c = l[2];
        const double n2 = a * a + b * b;
        if (n2 == 0) continue;
        const double fx = -a * c / n2, fy = -b * c / n2;  // foot of the origin
        const double dx = -b, dy = a;
        double t0 = -INFINITY, t1 = INFINITY;
        auto slab = [&](double p, double d, double lo, double hi) {
            if (d == 0) {
                if (p < lo || p > hi) t0 = INFINITY;
                return;
            }
            double u = (lo - p) / d, v = (hi - p) / d;
            if (u > v) std::swap(u, v);
            t0 = std::max(t0, u);
            t1 = std::min(t1, v);
        };
        slab(fx, dx, lo_x, hi_x);
        slab(fy, dy, lo_y, hi_y);
        if (!(t0 < t1)) continue;
        out << "<line id=\"line-" << escape(name) << "\" x1=\"" << px(view.x(fx + t0 * dx)) << "\" y1=\""
            << px(view.y(fy + t0 * dy)) << "\" x2=\"" << px(view.x(fx + t1 * dx)) << "\" y2=\""
            << px(view.y(fy + t1 * dy)) << "\" stroke=\"" << escape(stroke_of(doc, name, "#7f7f7f")) << "\"/>\n";
    }

    for (const auto& [name, p] : doc.points) {
        const std::string x = px(view.x(p[0])), y = px(view.y(p[1]));
        out << "<circle id=\"point-" << escape(name) << "\" cx=\"" << x << "\" cy=\"" << y << "\" r=\"3\" fill=\""
            << escape(stroke_of(doc, name, "black")) << "\"/>\n";
        if (opts.labels)
            out << "<text x=\"" << px(view.x(p[0]) + 5) << "\" y=\"" << px(view.y(p[1]) - 5)
                << "\" font-family=\"sans-serif\" font-size=\"12\">" << escape(label_of(doc, name)) << "</text>\n";
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace circlekit
