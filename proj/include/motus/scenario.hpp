#pragma once

#include <functional>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "motus/aristotle.hpp"
#include "motus/descartes.hpp"
#include "motus/errors.hpp"
#include "motus/galileo.hpp"
#include "motus/magnitudes.hpp"
#include "motus/oresme.hpp"
#include "motus/polynomial.hpp"
#include "motus/rational.hpp"
#include "motus/scan.hpp"
#include "motus/svg.hpp"
#include "motus/table.hpp"

// Scenario files: a flat key = value format describing one computation, a
// dispatcher that turns a scenario into a result table plus messages, a
// bundled catalog of ready-made scenarios, and the plot renderers. Every
// table ends with a "source" column naming the primary text the computation
// re-enacts.

namespace motus::scenario {

using table::Cell;
using table::ResultTable;

namespace sources {
inline constexpr const char* euclid_def4 = "Euclid Elements V def.4";
inline constexpr const char* euclid_def5 = "Euclid Elements V def.5";
inline constexpr const char* physics_medium = "Aristotle Physics IV.8";
inline constexpr const char* physics_haulers = "Aristotle Physics VII.5";
inline constexpr const char* oresme_config = "Oresme De configurationibus";
inline constexpr const char* oresme_merton = "Oresme De configurationibus III.vii";
inline constexpr const char* discorsi = "Galileo Discorsi (EN VIII) Third Day";
inline constexpr const char* dialogo = "Galileo Dialogo (EN VII) Second Day";
inline constexpr const char* principia = "Descartes Principia II 46-52";
inline constexpr const char* huygens = "Huygens De motu corporum ex percussione";
} // namespace sources

// ---------------------------------------------------------------------------
// Scenario format
// ---------------------------------------------------------------------------

struct Scenario {
    std::string name;
    std::map<std::string, std::string> kv;

    bool has(const std::string& key) const { return kv.count(key) != 0; }
};

namespace detail {

inline std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

} // namespace detail

// Lines are `key = value`; blank lines and lines starting with # are
// skipped. Keys may not repeat.
inline Scenario parse_scenario(const std::string& name, const std::string& text) {
    Scenario s;
    s.name = name;
    size_t pos = 0;
    int line_no = 0;
    while (pos <= text.size()) {
        size_t nl = text.find('\n', pos);
        std::string line = text.substr(pos, nl == std::string::npos ? nl : nl - pos);
        pos = nl == std::string::npos ? text.size() + 1 : nl + 1;
        ++line_no;
        std::string t = detail::trim(line);
        if (t.empty() || t[0] == '#') continue;
        size_t eq = t.find('=');
        if (eq == std::string::npos)
            throw ConfigError(name + ":" + std::to_string(line_no) + ": expected key = value");
        std::string key = detail::trim(t.substr(0, eq));
        std::string value = detail::trim(t.substr(eq + 1));
        if (key.empty() || value.empty())
            throw ConfigError(name + ":" + std::to_string(line_no) + ": empty key or value");
        if (!s.kv.emplace(key, value).second)
            throw ConfigError(name + ": duplicate key '" + key + "'");
    }
    if (!s.has("module")) throw ConfigError(name + ": missing 'module'");
    if (!s.has("operation")) throw ConfigError(name + ": missing 'operation'");
    return s;
}

// ---------------------------------------------------------------------------
// Typed access to scenario values
// ---------------------------------------------------------------------------

namespace detail {

inline const std::string& get_text(const Scenario& s, const std::string& key) {
    auto it = s.kv.find(key);
    if (it == s.kv.end()) throw ConfigError(s.name + ": missing '" + key + "'");
    return it->second;
}

inline std::string get_text_or(const Scenario& s, const std::string& key,
                               const std::string& fallback) {
    auto it = s.kv.find(key);
    return it == s.kv.end() ? fallback : it->second;
}

inline Rational parse_rational_value(const std::string& where, const std::string& text) {
    try {
        return Rational::parse(text);
    } catch (const std::exception&) {
        throw ConfigError(where + ": not a rational: '" + text + "'");
    }
}

inline Rational get_rational(const Scenario& s, const std::string& key) {
    return parse_rational_value(s.name + "." + key, get_text(s, key));
}

inline int get_int_or(const Scenario& s, const std::string& key, int fallback) {
    auto it = s.kv.find(key);
    if (it == s.kv.end()) return fallback;
    const std::string& v = it->second;
    size_t i = (v[0] == '-') ? 1 : 0;
    if (i == v.size()) throw ConfigError(s.name + "." + key + ": not an integer: '" + v + "'");
    for (; i < v.size(); ++i)
        if (v[i] < '0' || v[i] > '9')
            throw ConfigError(s.name + "." + key + ": not an integer: '" + v + "'");
    try {
        return std::stoi(v);
    } catch (const std::exception&) {
        throw ConfigError(s.name + "." + key + ": integer out of range: '" + v + "'");
    }
}

inline int get_int(const Scenario& s, const std::string& key) {
    get_text(s, key); // require presence
    return get_int_or(s, key, 0);
}

inline std::vector<Rational> get_rational_list(const Scenario& s, const std::string& key) {
    const std::string& text = get_text(s, key);
    std::vector<Rational> out;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t comma = text.find(',', pos);
        std::string part =
            trim(text.substr(pos, comma == std::string::npos ? comma : comma - pos));
        if (part.empty())
            throw ConfigError(s.name + "." + key + ": empty entry in list");
        out.push_back(parse_rational_value(s.name + "." + key, part));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

inline bool is_piece_key(const std::string& key) {
    if (key.rfind("piece.", 0) != 0 || key.size() == 6) return false;
    for (size_t i = 6; i < key.size(); ++i)
        if (key[i] < '0' || key[i] > '9') return false;
    return true;
}

// Every key must be a known global, a declared op parameter, or (when
// allowed) a profile piece.
inline void check_keys(const Scenario& s, const std::set<std::string>& op_keys,
                       bool allow_pieces = false) {
    static const std::set<std::string> globals{"module", "operation", "precision",
                                               "output", "plot", "plot.kind"};
    for (const auto& [key, value] : s.kv) {
        if (globals.count(key) || op_keys.count(key)) continue;
        if (allow_pieces && is_piece_key(key)) continue;
        throw ConfigError(s.name + ": unknown key '" + key + "'");
    }
}

} // namespace detail

// ---------------------------------------------------------------------------
// Results and sweeps
// ---------------------------------------------------------------------------

struct RunResult {
    ResultTable table;
    std::vector<std::string> messages;
    std::string plot_kind;  // empty when the scenario does not name one
    Rational kappa{10};     // jump threshold factor for scan plots
    std::string output_hint; // scenario-suggested csv path, may be empty
    std::string plot_hint;   // scenario-suggested svg path, may be empty
};

namespace detail {

struct SweepSpec {
    bool active = false;
    std::string key;
    Rational lo, hi, step;
};

inline SweepSpec sweep_spec(const Scenario& s, const std::string& sweepable_key) {
    bool any = s.has("sweep.key") || s.has("sweep.lo") || s.has("sweep.hi") || s.has("sweep.step");
    if (!any) return {};
    if (!(s.has("sweep.key") && s.has("sweep.lo") && s.has("sweep.hi") && s.has("sweep.step")))
        throw ConfigError(s.name + ": sweep needs sweep.key, sweep.lo, sweep.hi and sweep.step");
    SweepSpec sp;
    sp.active = true;
    sp.key = get_text(s, "sweep.key");
    if (sp.key != sweepable_key)
        throw ConfigError(s.name + ": this operation can only sweep '" + sweepable_key + "'");
    if (s.has(sp.key))
        throw ConfigError(s.name + ": swept parameter '" + sp.key + "' must not also be set");
    sp.lo = get_rational(s, "sweep.lo");
    sp.hi = get_rational(s, "sweep.hi");
    sp.step = get_rational(s, "sweep.step");
    if (!(sp.step > Rational(0))) throw ConfigError(s.name + ": sweep.step must be positive");
    if (sp.hi < sp.lo) throw ConfigError(s.name + ": sweep range is empty");
    return sp;
}

inline std::set<std::string> with_sweep_keys(std::set<std::string> keys) {
    keys.insert("sweep.key");
    keys.insert("sweep.lo");
    keys.insert("sweep.hi");
    keys.insert("sweep.step");
    return keys;
}

// Table builder for operations with one sweepable rational parameter. The
// row function returns the value cells, starting with the parameter itself.
// In a sweep, rows that fail a domain check are kept, with the error message
// in the status column; in a single run the error propagates.
inline ResultTable sweep_table(const Scenario& s, const std::string& param,
                               std::vector<std::string> value_columns, const std::string& source,
                               const std::function<std::vector<Cell>(const Rational&)>& row_of) {
    SweepSpec sp = sweep_spec(s, param);
    ResultTable t;
    t.columns = std::move(value_columns);
    if (sp.active) t.columns.push_back("status");
    t.columns.push_back("source");
    auto emit = [&](const Rational& v) {
        if (!sp.active) {
            auto row = row_of(v);
            row.push_back(Cell::text(source));
            t.add_row(std::move(row));
            return;
        }
        try {
            auto row = row_of(v);
            row.push_back(Cell::text("ok"));
            row.push_back(Cell::text(source));
            t.add_row(std::move(row));
        } catch (const std::exception& e) {
            std::vector<Cell> row{Cell::rational(v)};
            while (row.size() + 2 < t.columns.size()) row.push_back(Cell::text("-"));
            row.push_back(Cell::text(e.what()));
            row.push_back(Cell::text(source));
            t.add_row(std::move(row));
        }
    };
    if (sp.active)
        for (Rational v = sp.lo; !(sp.hi < v); v += sp.step) emit(v);
    else
        emit(get_rational(s, param));
    return t;
}

inline Cell scalar_cell(const galileo::Scalar& v, int precision) {
    return v.exact ? Cell::rational(v.value) : Cell::decimal(v.value, precision);
}

inline oresme::VelocityProfile profile_from(const Scenario& s) {
    std::vector<Rational> breaks = get_rational_list(s, "breaks");
    if (breaks.size() < 2) throw ConfigError(s.name + ".breaks: need at least two breakpoints");
    size_t pieces = breaks.size() - 1;
    for (const auto& [key, value] : s.kv) {
        if (!is_piece_key(key)) continue;
        int idx = std::stoi(key.substr(6));
        if (idx < 1 || static_cast<size_t>(idx) > pieces)
            throw ConfigError(s.name + ": '" + key + "' does not match the " +
                              std::to_string(pieces) + " intervals in 'breaks'");
    }
    std::vector<Poly> ps;
    for (size_t i = 1; i <= pieces; ++i)
        ps.emplace_back(get_rational_list(s, "piece." + std::to_string(i)));
    int cap = get_int_or(s, "degree_cap", 3);
    return oresme::VelocityProfile(std::move(breaks), std::move(ps), cap);
}

} // namespace detail

// ---------------------------------------------------------------------------
// Operations
// ---------------------------------------------------------------------------

namespace detail {

inline RunResult run_magnitudes(const Scenario& s, const std::string& op) {
    using namespace motus::magnitudes;
    RunResult r;
    auto abstract = [](const Rational& v) { return Magnitude(v, Genus::abstract); };
    if (op == "has_ratio") {
        check_keys(s, {"a", "b"});
        Rational a = get_rational(s, "a");
        Rational b = get_rational(s, "b");
        Integer m = has_ratio(abstract(a), abstract(b));
        r.table.columns = {"a", "b", "multiple", "source"};
        r.table.add_row({Cell::rational(a), Cell::rational(b), Cell::integer(m),
                         Cell::text(sources::euclid_def4)});
        return r;
    }
    if (op == "same_ratio") {
        check_keys(s, {"e", "f", "g", "h", "bound"});
        Rational e = get_rational(s, "e"), f = get_rational(s, "f");
        Rational g = get_rational(s, "g"), h = get_rational(s, "h");
        Integer bound(get_int(s, "bound"));
        SameRatioVerdict v = same_ratio(abstract(e), abstract(f), abstract(g), abstract(h), bound);
        bool oracle = cross_ratio_oracle(abstract(e), abstract(f), abstract(g), abstract(h));
        r.table.columns = {"e", "f", "g", "h", "verdict", "m", "n", "oracle", "source"};
        r.table.add_row({Cell::rational(e), Cell::rational(f), Cell::rational(g),
                         Cell::rational(h), Cell::text(v.same ? "same" : "different"),
                         v.same ? Cell::text("-") : Cell::integer(v.m),
                         v.same ? Cell::text("-") : Cell::integer(v.n),
                         Cell::text(oracle ? "same" : "different"),
                         Cell::text(sources::euclid_def5)});
        return r;
    }
    if (op == "separator") {
        check_keys(s, {"e", "f", "g", "h"});
        Rational e = get_rational(s, "e"), f = get_rational(s, "f");
        Rational g = get_rational(s, "g"), h = get_rational(s, "h");
        Rational sep = separating_rational(abstract(e), abstract(f), abstract(g), abstract(h));
        auto [m, n] = witness_from_separator(sep);
        r.table.columns = {"first", "second", "separator", "witness_m", "witness_n", "source"};
        r.table.add_row({Cell::rational(e / f), Cell::rational(g / h), Cell::rational(sep),
                         Cell::integer(m), Cell::integer(n), Cell::text(sources::euclid_def5)});
        return r;
    }
    throw ConfigError(s.name + ": unknown operation 'magnitudes/" + op + "'");
}

inline RunResult run_aristotle(const Scenario& s, const std::string& op) {
    using namespace motus::aristotle;
    RunResult r;
    if (op == "motion") {
        check_keys(s, with_sweep_keys({"constant", "mass", "time", "density"}));
        MotionParams p(get_rational(s, "constant"), get_rational(s, "mass"),
                       get_rational(s, "time"));
        r.table = sweep_table(s, "density", {"density", "distance", "celerity"},
                              sources::physics_medium, [&](const Rational& d) {
                                  Medium m("medium", d);
                                  return std::vector<Cell>{
                                      Cell::rational(d),
                                      Cell::rational(distance_in_medium(p, m).value),
                                      Cell::rational(celerity_in_medium(p, m).value)};
                              });
        return r;
    }
    if (op == "media_ratio") {
        check_keys(s, {"constant", "mass", "time", "density_1", "density_2"});
        MotionParams p(get_rational(s, "constant"), get_rational(s, "mass"),
                       get_rational(s, "time"));
        Rational d1 = get_rational(s, "density_1");
        Rational d2 = get_rational(s, "density_2");
        Rational ratio =
            celerity_ratio_across_media(p, Medium("first", d1), Medium("second", d2)).value();
        r.table.columns = {"density_1", "density_2", "celerity_ratio", "source"};
        r.table.add_row({Cell::rational(d1), Cell::rational(d2), Cell::rational(ratio),
                         Cell::text(sources::physics_medium)});
        return r;
    }
    if (op == "vacuum") {
        check_keys(s, {"constant", "mass", "time", "densities"});
        MotionParams p(get_rational(s, "constant"), get_rational(s, "mass"),
                       get_rational(s, "time"));
        ThinningReport report = vacuum_limit(p, get_rational_list(s, "densities"));
        r.table.columns = {"density", "celerity", "source"};
        for (const auto& sample : report.samples)
            r.table.add_row({Cell::rational(sample.density), Cell::rational(sample.celerity),
                             Cell::text(sources::physics_medium)});
        r.messages.push_back(
            "celerity grows without bound as the medium thins: no finite limit exists");
        return r;
    }
    if (op == "haulers") {
        check_keys(s, with_sweep_keys({"threshold", "force"}));
        Rational threshold = get_rational(s, "threshold");
        r.table = sweep_table(s, "force", {"force", "state", "celerity"},
                              sources::physics_haulers, [&](const Rational& force) {
                                  HaulersOutcome out = haulers_motion(force, threshold);
                                  return std::vector<Cell>{
                                      Cell::rational(force),
                                      Cell::text(out.moving ? "moving" : "rest"),
                                      Cell::rational(out.celerity)};
                              });
        return r;
    }
    throw ConfigError(s.name + ": unknown operation 'aristotle/" + op + "'");
}

inline RunResult run_oresme(const Scenario& s, const std::string& op) {
    using namespace motus::oresme;
    RunResult r;
    if (op == "classify") {
        check_keys(s, {"breaks", "degree_cap", "max_depth"}, true);
        VelocityProfile p = profile_from(s);
        UniformityClass c = classify(p, get_int_or(s, "max_depth", 4));
        r.table.columns = {"depth", "verdict", "source"};
        for (size_t i = 0; i < c.size(); ++i)
            r.table.add_row({Cell::integer(Integer(i)), Cell::text(verdict_name(c[i])),
                             Cell::text(sources::oresme_config)});
        r.messages.push_back("classification: " + class_label(c));
        return r;
    }
    if (op == "area") {
        check_keys(s, {"breaks", "degree_cap"}, true);
        VelocityProfile p = profile_from(s);
        r.table.columns = {"start", "end", "total_celerity", "source"};
        r.table.add_row({Cell::rational(Rational(0)), Cell::rational(p.duration()),
                         Cell::rational(total_celerity(p)), Cell::text(sources::oresme_config)});
        return r;
    }
    if (op == "mean_degree") {
        check_keys(s, {"breaks", "degree_cap"}, true);
        VelocityProfile p = profile_from(s);
        VelocityProfile m = mean_degree_equivalent(p);
        r.table.columns = {"initial_degree", "final_degree", "mean_degree",
                           "duration",       "area",         "source"};
        r.table.add_row({Cell::rational(p.initial_degree()), Cell::rational(p.final_degree()),
                         Cell::rational(m.initial_degree()), Cell::rational(p.duration()),
                         Cell::rational(total_celerity(p)), Cell::text(sources::oresme_merton)});
        return r;
    }
    if (op == "figure") {
        check_keys(s, {"breaks", "degree_cap"}, true);
        VelocityProfile p = profile_from(s);
        const PiecewisePoly& data = p.data();
        r.table.columns = {"t", "v", "source"};
        auto emit = [&](const Rational& t, const Rational& v) {
            r.table.add_row(
                {Cell::rational(t), Cell::rational(v), Cell::text(sources::oresme_config)});
        };
        for (size_t i = 0; i < data.pieces.size(); ++i) {
            const Poly& piece = data.pieces[i];
            const Rational& a = data.breaks[i];
            const Rational& b = data.breaks[i + 1];
            int cuts = piece.degree() >= 2 ? 16 : 1;
            for (int k = 0; k <= cuts; ++k) {
                Rational t = a + (b - a) * Rational(k, cuts);
                emit(t, piece(t));
            }
        }
        return r;
    }
    throw ConfigError(s.name + ": unknown operation 'oresme/" + op + "'");
}

inline RunResult run_galileo(const Scenario& s, const std::string& op, int precision) {
    using namespace motus::galileo;
    RunResult r;
    if (op == "fall") {
        check_keys(s, with_sweep_keys({"t"}));
        r.table = sweep_table(s, "t", {"t", "height", "speed"}, sources::discorsi,
                              [&](const Rational& t) {
                                  FallState st = fall_state(t);
                                  return std::vector<Cell>{Cell::rational(st.time),
                                                           Cell::rational(st.height),
                                                           Cell::rational(st.speed)};
                              });
        return r;
    }
    if (op == "speed_at_drop") {
        check_keys(s, {"trajectory", "drop"});
        const std::string& name = get_text(s, "trajectory");
        Trajectory path;
        if (name == "free-fall") path = Trajectory::free_fall;
        else if (name == "incline") path = Trajectory::incline;
        else if (name == "pendulum") path = Trajectory::pendulum;
        else throw ConfigError(s.name + ".trajectory: unknown path '" + name + "'");
        Rational drop = get_rational(s, "drop");
        Scalar v = speed_at_drop(path, drop, precision);
        r.table.columns = {"trajectory", "drop", "speed", "exact", "source"};
        r.table.add_row({Cell::text(trajectory_name(path)), Cell::rational(drop),
                         scalar_cell(v, precision), Cell::text(v.exact ? "yes" : "no"),
                         Cell::text(sources::discorsi)});
        return r;
    }
    if (op == "inertia") {
        check_keys(s, with_sweep_keys({"drop", "run", "gap"}));
        Rational drop = get_rational(s, "drop");
        Rational run = get_rational(s, "run");
        r.table = sweep_table(
            s, "gap", {"gap", "v_upper", "v_lower", "speed_gap", "gap_bound"}, sources::dialogo,
            [&](const Rational& gap) {
                InertiaReport rep = inertia_limit(InclineGeometry(drop, run, gap), precision);
                return std::vector<Cell>{Cell::rational(gap), scalar_cell(rep.v_upper, precision),
                                         scalar_cell(rep.v_lower, precision),
                                         Cell::decimal(rep.speed_gap, precision),
                                         Cell::decimal(rep.gap_bound, precision)};
            });
        return r;
    }
    if (op == "sagredo") {
        check_keys(s, {"bound", "duration"});
        Rational bound = get_rational(s, "bound");
        Rational duration = get_rational(s, "duration");
        SagredoReport rep = sagredo_threshold(bound, duration);
        r.table.columns = {"bound", "duration", "epsilon", "sub_degree", "height_at_epsilon",
                           "source"};
        r.table.add_row({Cell::rational(bound), Cell::rational(duration),
                         Cell::rational(rep.epsilon), Cell::rational(rep.sub_degree),
                         Cell::rational(rep.height_at_epsilon), Cell::text(sources::dialogo)});
        return r;
    }
    if (op == "energy") {
        check_keys(s, with_sweep_keys({"total", "t"}));
        Rational total = get_rational(s, "total");
        r.table = sweep_table(s, "t", {"t", "fallen", "remaining", "total"}, sources::discorsi,
                              [&](const Rational& t) {
                                  EnergyLedger lg = energy_invariant(total, t);
                                  return std::vector<Cell>{
                                      Cell::rational(t), Cell::rational(lg.fallen),
                                      Cell::rational(lg.remaining), Cell::rational(lg.total)};
                              });
        return r;
    }
    throw ConfigError(s.name + ": unknown operation 'galileo/" + op + "'");
}

inline motus::descartes::Law law_from(const Scenario& s) {
    const std::string& name = get_text(s, "law");
    if (name == "cartesian") return motus::descartes::Law::cartesian;
    if (name == "elastic") return motus::descartes::Law::elastic;
    throw ConfigError(s.name + ".law: unknown law '" + name + "'");
}

inline RunResult run_descartes(const Scenario& s, const std::string& op) {
    using namespace motus::descartes;
    RunResult r;
    if (op == "collide") {
        check_keys(s, {"law", "size_b", "v_b", "size_c", "v_c"});
        Law law = law_from(s);
        const char* source = law == Law::cartesian ? sources::principia : sources::huygens;
        Body b(get_rational(s, "size_b"), get_rational(s, "v_b"));
        Body c(get_rational(s, "size_c"), get_rational(s, "v_c"));
        Outcome out = collide(law, b, c);
        r.table.columns = {"size_b",    "v_b",       "size_c",         "v_c",
                           "rule",      "v_b_after", "v_c_after",      "qom_delta",
                           "momentum_delta", "visviva_delta", "source"};
        std::vector<Cell> row{Cell::rational(b.size), Cell::rational(b.velocity),
                              Cell::rational(c.size), Cell::rational(c.velocity),
                              Cell::text(out.rule),   Cell::rational(out.v_b),
                              Cell::rational(out.v_c)};
        if (out.covered) {
            ConservationLedger lg = ledger(b, c, out);
            row.push_back(Cell::rational(lg.qom_delta));
            row.push_back(Cell::rational(lg.momentum_delta));
            row.push_back(Cell::rational(lg.visviva_delta));
        } else {
            row.push_back(Cell::text("-"));
            row.push_back(Cell::text("-"));
            row.push_back(Cell::text("-"));
            r.messages.push_back("the rules do not cover this configuration");
        }
        row.push_back(Cell::text(source));
        r.table.add_row(std::move(row));
        return r;
    }
    if (op == "scan") {
        check_keys(s, {"law", "size_b", "v_b", "size_c", "v_c", "knob", "lo", "hi", "step",
                       "kappa"});
        Law law = law_from(s);
        const char* source = law == Law::cartesian ? sources::principia : sources::huygens;
        const std::string& knob_key = get_text(s, "knob");
        Knob knob;
        if (knob_key == "size_b") knob = Knob::size_b;
        else if (knob_key == "size_c") knob = Knob::size_c;
        else if (knob_key == "v_b") knob = Knob::v_b;
        else if (knob_key == "v_c") knob = Knob::v_c;
        else throw ConfigError(s.name + ".knob: unknown knob '" + knob_key + "'");
        if (s.has(knob_key))
            throw ConfigError(s.name + ": swept knob '" + knob_key + "' must not also be set");
        // The knob value is replaced at every grid point; a neutral stand-in
        // keeps the base bodies constructible.
        Body b(knob == Knob::size_b ? Rational(1) : get_rational(s, "size_b"),
               knob == Knob::v_b ? Rational(0) : get_rational(s, "v_b"));
        Body c(knob == Knob::size_c ? Rational(1) : get_rational(s, "size_c"),
               knob == Knob::v_c ? Rational(0) : get_rational(s, "v_c"));
        Rational lo = get_rational(s, "lo");
        Rational hi = get_rational(s, "hi");
        Rational step = get_rational(s, "step");
        Rational kappa = s.has("kappa") ? get_rational(s, "kappa") : Rational(10);
        scan::ScanReport report = continuity_scan(law, b, c, knob, lo, hi, step, kappa);
        r.kappa = kappa;
        r.table.columns = {"param",     "v_b_after",      "v_c_after",     "rule",
                           "qom_delta", "momentum_delta", "visviva_delta", "status", "source"};
        for (size_t i = 0; i < report.grid.size(); ++i) {
            const Rational& value = report.grid[i];
            const scan::Sample& sample = report.samples[i];
            std::vector<Cell> row{Cell::rational(value)};
            if (sample.covered) {
                Body vb = with_knob(b, knob, true, value);
                Body vc = with_knob(c, knob, false, value);
                Outcome out = collide(law, vb, vc);
                ConservationLedger lg = ledger(vb, vc, out);
                row.push_back(Cell::rational(out.v_b));
                row.push_back(Cell::rational(out.v_c));
                row.push_back(Cell::text(out.rule));
                row.push_back(Cell::rational(lg.qom_delta));
                row.push_back(Cell::rational(lg.momentum_delta));
                row.push_back(Cell::rational(lg.visviva_delta));
                row.push_back(Cell::text("ok"));
            } else {
                for (int k = 0; k < 6; ++k) row.push_back(Cell::text("-"));
                row.push_back(Cell::text(sample.tag));
            }
            row.push_back(Cell::text(source));
            r.table.add_row(std::move(row));
        }
        for (const auto& jump : report.jumps)
            r.messages.push_back("jump at " + jump.param.str() + ": max change " +
                                 jump.magnitude.str() + " (threshold " +
                                 report.threshold.str() + ")");
        if (report.jumps.empty())
            r.messages.push_back("no jumps detected (threshold " + report.threshold.str() + ")");
        return r;
    }
    throw ConfigError(s.name + ": unknown operation 'descartes/" + op + "'");
}

} // namespace detail

// Run one scenario. A positive precision_override supersedes the scenario's
// own precision key (which defaults to 12 digits).
inline RunResult run_scenario(const Scenario& s, int precision_override = 0) {
    int precision =
        precision_override > 0 ? precision_override : detail::get_int_or(s, "precision", 12);
    if (precision < 1 || precision > 80)
        throw ConfigError(s.name + ": precision must be between 1 and 80");
    const std::string& module = detail::get_text(s, "module");
    const std::string& op = detail::get_text(s, "operation");
    RunResult r;
    if (module == "magnitudes") r = detail::run_magnitudes(s, op);
    else if (module == "aristotle") r = detail::run_aristotle(s, op);
    else if (module == "oresme") r = detail::run_oresme(s, op);
    else if (module == "galileo") r = detail::run_galileo(s, op, precision);
    else if (module == "descartes") r = detail::run_descartes(s, op);
    else throw ConfigError(s.name + ": unknown module '" + module + "'");
    r.plot_kind = detail::get_text_or(s, "plot.kind", "");
    r.output_hint = detail::get_text_or(s, "output", "");
    r.plot_hint = detail::get_text_or(s, "plot", "");
    return r;
}

} // namespace motus::scenario
