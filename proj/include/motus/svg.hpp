#pragma once

#include <string>
#include <utility>
#include <vector>

#include "motus/errors.hpp"
#include "motus/rational.hpp"

// Minimal deterministic SVG output. All geometry is computed in exact
// rationals and rendered at a fixed two decimals, so the same input always
// produces the same bytes.

namespace motus::svg {

constexpr int kWidth = 640;
constexpr int kHeight = 420;
constexpr int kMargin = 50;

inline const std::vector<std::string>& palette() {
    static const std::vector<std::string> colors{"#1f6feb", "#d1242f", "#1a7f37", "#8250df"};
    return colors;
}

// Affine map from data coordinates to pixel coordinates. The y axis is
// flipped so larger values sit higher on the canvas.
class Frame {
public:
    Frame(Rational x_min, Rational x_max, Rational y_min, Rational y_max)
        : x_min_(std::move(x_min)), x_max_(std::move(x_max)), y_min_(std::move(y_min)),
          y_max_(std::move(y_max)) {
        if (!(x_min_ < x_max_)) throw PlotError("plot needs a non-degenerate x range");
        if (y_min_ == y_max_) y_max_ = y_min_ + Rational(1); // flat data still draws
    }

    Rational px(const Rational& x) const {
        return Rational(kMargin) +
               (x - x_min_) / (x_max_ - x_min_) * Rational(kWidth - 2 * kMargin);
    }

    Rational py(const Rational& y) const {
        return Rational(kHeight - kMargin) -
               (y - y_min_) / (y_max_ - y_min_) * Rational(kHeight - 2 * kMargin);
    }

    const Rational& x_min() const { return x_min_; }
    const Rational& x_max() const { return x_max_; }
    const Rational& y_min() const { return y_min_; }
    const Rational& y_max() const { return y_max_; }

private:
    Rational x_min_, x_max_, y_min_, y_max_;
};

inline std::string coord(const Rational& v) { return v.decimal(2); }

class Document {
public:
    void add_line(const Rational& x1, const Rational& y1, const Rational& x2, const Rational& y2,
                  const std::string& color, const std::string& extra = "") {
        body_ += "<line x1=\"" + coord(x1) + "\" y1=\"" + coord(y1) + "\" x2=\"" + coord(x2) +
                 "\" y2=\"" + coord(y2) + "\" stroke=\"" + color + "\"" + extra + "/>\n";
    }

    void add_polyline(const std::vector<std::pair<Rational, Rational>>& pts,
                      const std::string& color) {
        if (pts.size() < 2) return;
        body_ += "<polyline fill=\"none\" stroke=\"" + color + "\" stroke-width=\"2\" points=\"" +
                 points(pts) + "\"/>\n";
    }

    void add_polygon(const std::vector<std::pair<Rational, Rational>>& pts,
                     const std::string& fill) {
        body_ += "<polygon fill=\"" + fill + "\" fill-opacity=\"0.25\" stroke=\"none\" points=\"" +
                 points(pts) + "\"/>\n";
    }

    void add_circle(const Rational& cx, const Rational& cy, int r, const std::string& color) {
        body_ += "<circle cx=\"" + coord(cx) + "\" cy=\"" + coord(cy) + "\" r=\"" +
                 std::to_string(r) + "\" fill=\"" + color + "\"/>\n";
    }

    void add_text(const Rational& x, const Rational& y, const std::string& content,
                  const std::string& color, const std::string& anchor = "start") {
        body_ += "<text x=\"" + coord(x) + "\" y=\"" + coord(y) + "\" fill=\"" + color +
                 "\" font-family=\"monospace\" font-size=\"12\" text-anchor=\"" + anchor + "\">" +
                 escape(content) + "</text>\n";
    }

    // Axes box with the frame's corner values as labels.
    void add_axes(const Frame& f, const std::string& x_label) {
        const std::string grey = "#57606a";
        add_line(f.px(f.x_min()), f.py(f.y_min()), f.px(f.x_max()), f.py(f.y_min()), grey);
        add_line(f.px(f.x_min()), f.py(f.y_min()), f.px(f.x_min()), f.py(f.y_max()), grey);
        add_text(f.px(f.x_min()), f.py(f.y_min()) + Rational(16), coord(f.x_min()), grey);
        add_text(f.px(f.x_max()), f.py(f.y_min()) + Rational(16), coord(f.x_max()), grey, "end");
        add_text(f.px(f.x_min()) - Rational(4), f.py(f.y_max()), coord(f.y_max()), grey, "end");
        add_text(f.px(f.x_min()) - Rational(4), f.py(f.y_min()), coord(f.y_min()), grey, "end");
        Rational mid = (f.px(f.x_min()) + f.px(f.x_max())) / Rational(2);
        add_text(mid, Rational(kHeight - 12), x_label, grey, "middle");
    }

    std::string str() const {
        return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(kWidth) +
               "\" height=\"" + std::to_string(kHeight) + "\" viewBox=\"0 0 " +
               std::to_string(kWidth) + " " + std::to_string(kHeight) + "\">\n" +
               "<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n" + body_ + "</svg>\n";
    }

private:
    static std::string points(const std::vector<std::pair<Rational, Rational>>& pts) {
        std::string out;
        for (size_t i = 0; i < pts.size(); ++i) {
            if (i) out += ' ';
            out += coord(pts[i].first) + "," + coord(pts[i].second);
        }
        return out;
    }

    static std::string escape(const std::string& s) {
        std::string out;
        for (char c : s) {
            if (c == '&') out += "&amp;";
            else if (c == '<') out += "&lt;";
            else if (c == '>') out += "&gt;";
            else out += c;
        }
        return out;
    }

    std::string body_;
};

} // namespace motus::svg
