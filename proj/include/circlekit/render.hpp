#pragma once

// SVG output for scene documents. Geometry is y-up; the flip to SVG's y-down
// happens only here. Output depends on nothing but the document and options.

#include <string>

#include "circlekit/scene.hpp"

namespace circlekit {

struct RenderOptions {
    int size = 600;        // canvas width and height in pixels
    double margin = 0.08;  // fraction of the canvas left around the content
    bool labels = true;
};

// Points and circles set the view; lines are clipped to it. An empty
// document gives a bare SVG with viewBox "0 0 1 1".
std::string render_scene(const SceneDocument& doc, const RenderOptions& opts = {});

}  // namespace circlekit
