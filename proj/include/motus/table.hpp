#pragma once

#include <string>
#include <utility>
#include <vector>

#include "motus/errors.hpp"
#include "motus/rational.hpp"

// Result tables: typed cells so renderers can tell numbers from prose, plus
// a CSV writer. Cell content is under this library's control and never
// contains commas; the writer enforces that instead of quoting.

namespace motus::table {

class Cell {
public:
    enum class Kind { rational, decimal, integer, text };

    static Cell rational(Rational v) { return Cell(Kind::rational, std::move(v), 0, {}); }
    static Cell decimal(Rational v, int digits) {
        return Cell(Kind::decimal, std::move(v), digits, {});
    }
    static Cell integer(Integer v) { return Cell(Kind::integer, Rational(std::move(v)), 0, {}); }
    static Cell text(std::string t) { return Cell(Kind::text, Rational(0), 0, std::move(t)); }

    Kind kind() const { return kind_; }
    bool numeric() const { return kind_ != Kind::text; }
    const Rational& value() const { return value_; }
    const std::string& label() const { return text_; }

    std::string render() const {
        switch (kind_) {
            case Kind::rational:
                return value_.den() == 1 ? value_.num().str() : value_.str();
            case Kind::decimal:
                return value_.decimal(digits_);
            case Kind::integer:
                return value_.num().str();
            default:
                return text_;
        }
    }

private:
    Cell(Kind k, Rational v, int digits, std::string t)
        : kind_(k), value_(std::move(v)), digits_(digits), text_(std::move(t)) {}

    Kind kind_;
    Rational value_;
    int digits_;
    std::string text_;
};

struct ResultTable {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;

    void add_row(std::vector<Cell> row) {
        if (row.size() != columns.size())
            throw DomainError("table row width does not match its header");
        rows.push_back(std::move(row));
    }

    int column_index(const std::string& name) const {
        for (size_t i = 0; i < columns.size(); ++i)
            if (columns[i] == name) return static_cast<int>(i);
        return -1;
    }
};

inline std::string to_csv(const ResultTable& t) {
    std::string out;
    auto append_field = [&out](const std::string& field) {
        if (field.find(',') != std::string::npos || field.find('\n') != std::string::npos)
            throw DomainError("table cell would corrupt the CSV: " + field);
        out += field;
    };
    for (size_t i = 0; i < t.columns.size(); ++i) {
        if (i) out += ',';
        append_field(t.columns[i]);
    }
    out += '\n';
    for (const auto& row : t.rows) {
        for (size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            append_field(row[i].render());
        }
        out += '\n';
    }
    return out;
}

} // namespace motus::table
