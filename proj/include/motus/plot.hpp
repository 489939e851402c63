#pragma once

#include <string>
#include <utility>
#include <vector>

#include "motus/errors.hpp"
#include "motus/rational.hpp"
#include "motus/scan.hpp"
#include "motus/svg.hpp"
#include "motus/table.hpp"

// Turns a result table into an SVG picture. Three kinds are supported:
//   curve    one or more numeric series over a numeric x column
//   diagram  the filled "configuration" figure of a velocity profile
//   scan     both outcome components of a parameter sweep, with uncovered
//            stretches left blank and detected jumps marked
// The renderer works from the table alone, so a picture can always be
// reproduced from its csv.

namespace motus::scenario {

namespace plotdetail {

using table::Cell;
using table::ResultTable;

inline std::vector<size_t> usable_rows(const ResultTable& t) {
    int status = t.column_index("status");
    std::vector<size_t> rows;
    for (size_t i = 0; i < t.rows.size(); ++i)
        if (status < 0 || t.rows[i][static_cast<size_t>(status)].render() == "ok")
            rows.push_back(i);
    return rows;
}

inline bool numeric_over(const ResultTable& t, const std::vector<size_t>& rows, size_t col) {
    for (size_t i : rows)
        if (!t.rows[i][col].numeric()) return false;
    return true;
}

inline void span(const Rational& v, bool& seeded, Rational& lo, Rational& hi) {
    if (!seeded || v < lo) lo = v;
    if (!seeded || hi < v) hi = v;
    seeded = true;
}

inline std::string render_curve(const ResultTable& t) {
    std::vector<size_t> rows = usable_rows(t);
    if (rows.size() < 2) throw PlotError("curve plot needs at least two usable rows");
    int x_col = -1;
    std::vector<size_t> series;
    for (size_t c = 0; c < t.columns.size(); ++c) {
        if (t.columns[c] == "status" || t.columns[c] == "source") continue;
        if (!numeric_over(t, rows, c)) continue;
        if (x_col < 0) x_col = static_cast<int>(c);
        else series.push_back(c);
    }
    if (x_col < 0) throw PlotError("curve plot needs a numeric x column");
    if (series.empty()) throw PlotError("curve plot needs a numeric series besides x");

    bool sx = false, sy = false;
    Rational x_lo, x_hi, y_lo, y_hi;
    for (size_t i : rows) {
        span(t.rows[i][static_cast<size_t>(x_col)].value(), sx, x_lo, x_hi);
        for (size_t c : series) span(t.rows[i][c].value(), sy, y_lo, y_hi);
    }
    svg::Frame f(x_lo, x_hi, y_lo, y_hi);
    svg::Document doc;
    doc.add_axes(f, t.columns[static_cast<size_t>(x_col)]);
    const auto& colors = svg::palette();
    for (size_t k = 0; k < series.size(); ++k) {
        std::vector<std::pair<Rational, Rational>> pts;
        for (size_t i : rows)
            pts.emplace_back(f.px(t.rows[i][static_cast<size_t>(x_col)].value()),
                             f.py(t.rows[i][series[k]].value()));
        const std::string& color = colors[k % colors.size()];
        doc.add_polyline(pts, color);
        doc.add_text(Rational(svg::kMargin + 8), Rational(svg::kMargin + 14 * (int(k) + 1)),
                     t.columns[series[k]], color);
    }
    return doc.str();
}

inline std::string render_diagram(const ResultTable& t) {
    int t_col = t.column_index("t");
    int v_col = t.column_index("v");
    if (t_col < 0 || v_col < 0) throw PlotError("diagram plot needs 't' and 'v' columns");
    if (t.rows.size() < 2) throw PlotError("diagram plot needs at least two samples");
    for (const auto& row : t.rows)
        if (!row[static_cast<size_t>(t_col)].numeric() ||
            !row[static_cast<size_t>(v_col)].numeric())
            throw PlotError("diagram plot needs numeric samples");

    bool sx = false, sy = false;
    Rational x_lo, x_hi, y_lo, y_hi;
    for (const auto& row : t.rows) {
        span(row[static_cast<size_t>(t_col)].value(), sx, x_lo, x_hi);
        span(row[static_cast<size_t>(v_col)].value(), sy, y_lo, y_hi);
    }
    if (Rational(0) < y_lo) y_lo = Rational(0); // the figure stands on the time line
    svg::Frame f(x_lo, x_hi, y_lo, y_hi);
    svg::Document doc;
    doc.add_axes(f, "t");

    std::vector<std::pair<Rational, Rational>> outline;
    outline.emplace_back(f.px(x_lo), f.py(Rational(0)));
    std::vector<std::pair<Rational, Rational>> top;
    for (const auto& row : t.rows) {
        Rational x = row[static_cast<size_t>(t_col)].value();
        Rational y = row[static_cast<size_t>(v_col)].value();
        outline.emplace_back(f.px(x), f.py(y));
        top.emplace_back(f.px(x), f.py(y));
    }
    outline.emplace_back(f.px(x_hi), f.py(Rational(0)));
    const auto& colors = svg::palette();
    doc.add_polygon(outline, colors[0]);
    doc.add_polyline(top, colors[0]);
    return doc.str();
}

inline std::string render_scan(const ResultTable& t, const Rational& kappa) {
    int p_col = t.column_index("param");
    int b_col = t.column_index("v_b_after");
    int c_col = t.column_index("v_c_after");
    int s_col = t.column_index("status");
    if (p_col < 0 || b_col < 0 || c_col < 0 || s_col < 0)
        throw PlotError("scan plot needs param, v_b_after, v_c_after and status columns");
    if (t.rows.size() < 2) throw PlotError("scan plot needs at least two grid points");

    std::vector<Rational> grid;
    std::vector<scan::Sample> samples;
    bool sy = false;
    Rational y_lo, y_hi;
    for (const auto& row : t.rows) {
        if (!row[static_cast<size_t>(p_col)].numeric())
            throw PlotError("scan plot needs a numeric param column");
        grid.push_back(row[static_cast<size_t>(p_col)].value());
        scan::Sample sample;
        sample.covered = row[static_cast<size_t>(s_col)].render() == "ok";
        if (sample.covered) {
            if (!row[static_cast<size_t>(b_col)].numeric() ||
                !row[static_cast<size_t>(c_col)].numeric())
                throw PlotError("scan plot needs numeric outcomes on covered rows");
            sample.outcome = {row[static_cast<size_t>(b_col)].value(),
                              row[static_cast<size_t>(c_col)].value()};
            span(sample.outcome[0], sy, y_lo, y_hi);
            span(sample.outcome[1], sy, y_lo, y_hi);
        }
        samples.push_back(std::move(sample));
    }
    if (!sy) throw PlotError("scan plot needs at least one covered row");
    Rational step = grid[1] - grid[0];
    if (!(Rational(0) < step)) throw PlotError("scan plot needs an increasing param grid");
    std::vector<scan::Jump> jumps = scan::find_jumps(grid, samples, kappa * step);

    svg::Frame f(grid.front(), grid.back(), y_lo, y_hi);
    svg::Document doc;
    doc.add_axes(f, "param");
    const auto& colors = svg::palette();
    const char* names[2] = {"v_b_after", "v_c_after"};
    for (int component = 0; component < 2; ++component) {
        std::vector<std::pair<Rational, Rational>> segment;
        auto flush = [&]() {
            if (segment.size() >= 2) doc.add_polyline(segment, colors[size_t(component)]);
            else if (segment.size() == 1)
                doc.add_circle(segment[0].first, segment[0].second, 2,
                               colors[size_t(component)]);
            segment.clear();
        };
        for (size_t i = 0; i < grid.size(); ++i) {
            if (!samples[i].covered) {
                flush();
                continue;
            }
            segment.emplace_back(f.px(grid[i]),
                                 f.py(samples[i].outcome[size_t(component)]));
        }
        flush();
        doc.add_text(Rational(svg::kMargin + 8), Rational(svg::kMargin + 14 * (component + 1)),
                     names[component], colors[size_t(component)]);
    }
    for (const auto& jump : jumps) {
        Rational x = f.px(jump.param);
        doc.add_line(x, Rational(svg::kMargin), x, Rational(svg::kHeight - svg::kMargin),
                     colors[3], " stroke-dasharray=\"4 3\"");
        doc.add_circle(x, Rational(svg::kMargin), 4, colors[3]);
    }
    return doc.str();
}

} // namespace plotdetail

inline std::string render_plot(const table::ResultTable& t, const std::string& kind,
                               const Rational& kappa = Rational(10)) {
    if (kind == "curve") return plotdetail::render_curve(t);
    if (kind == "diagram") return plotdetail::render_diagram(t);
    if (kind == "scan") return plotdetail::render_scan(t, kappa);
    throw PlotError("unknown plot kind '" + kind + "'");
}

} // namespace motus::scenario
