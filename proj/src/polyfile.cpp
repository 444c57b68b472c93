#include "bbhull/polyfile.hpp"

#include <charconv>
#include <limits>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace bbhull {

namespace {

struct Line {
    std::size_t number = 0;
    std::vector<std::string> tokens;
};

// Splits the input into non-empty lines of whitespace-separated tokens.
class LineReader {
public:
    explicit LineReader(std::istream& in) : in_(in) {}

    bool next(Line& out) {
        std::string raw;
        while (std::getline(in_, raw)) {
            ++number_;
            if (auto hash = raw.find('#'); hash != std::string::npos) {
                raw.erase(hash);
            }
            std::istringstream ss(raw);
            out.number = number_;
            out.tokens.clear();
            for (std::string tok; ss >> tok;) {
                out.tokens.push_back(std::move(tok));
            }
            if (!out.tokens.empty()) {
                return true;
            }
        }
        return false;
    }

    std::size_t line() const { return number_; }

private:
    std::istream& in_;
    std::size_t number_ = 0;
};

std::size_t parse_count(const std::string& tok, std::size_t line) {
    std::size_t value = 0;
    const char* end = tok.data() + tok.size();
    auto [ptr, ec] = std::from_chars(tok.data(), end, value);
    if (ec != std::errc() || ptr != end) {
        throw ParseError(line, "expected a nonnegative integer, got '" + tok + "'");
    }
    return value;
}

Rational parse_rational(const std::string& tok, std::size_t line) {
    try {
        return Rational::parse(tok);
    } catch (const ArithmeticError& e) {
        throw ParseError(line, e.what());
    }
}

std::size_t expect_header(LineReader& reader, std::string_view keyword) {
    Line l;
    if (!reader.next(l)) {
        throw ParseError(reader.line(), "missing '" + std::string(keyword) + "' header");
    }
    if (l.tokens.size() != 2 || l.tokens[0] != keyword) {
        throw ParseError(l.number, "expected '" + std::string(keyword) + " <count>'");
    }
    return parse_count(l.tokens[1], l.number);
}

std::vector<Vector> read_rows(LineReader& reader, std::size_t count, std::size_t width, std::string_view section) {
    std::vector<Vector> rows;
    rows.reserve(count);
    Line l;
    for (std::size_t i = 0; i < count; ++i) {
        if (!reader.next(l)) {
            throw ParseError(reader.line(), "section " + std::string(section) + " ends after " +
                                                std::to_string(i) + " of " + std::to_string(count) + " rows");
        }
        if (l.tokens.size() != width) {
            throw ParseError(l.number, "expected " + std::to_string(width) + " entries, got " +
                                           std::to_string(l.tokens.size()));
        }
        Vector row;
        row.reserve(width);
        for (const auto& tok : l.tokens) {
            row.push_back(parse_rational(tok, l.number));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

void write_row(std::ostream& out, const Rational* first, const Vector& rest) {
    bool space = false;
    if (first != nullptr) {
        out << first->str();
        space = true;
    }
    for (const auto& x : rest) {
        if (space) {
            out << ' ';
        }
        out << x.str();
        space = true;
    }
    out << '\n';
}

}  // namespace

PolyData parse_poly(std::istream& in) {
    LineReader reader(in);
    PolyData data;
    data.dim = expect_header(reader, "POLY");
    Line l;
    while (reader.next(l)) {
        if (l.tokens.size() != 2) {
            throw ParseError(l.number, "expected a section header 'V <n>' or 'H <m>'");
        }
        const std::size_t count = parse_count(l.tokens[1], l.number);
        if (l.tokens[0] == "V") {
            if (data.points) {
                throw ParseError(l.number, "duplicate V section");
            }
            data.points = read_rows(reader, count, data.dim, "V");
        } else if (l.tokens[0] == "H") {
            if (data.halfspaces) {
                throw ParseError(l.number, "duplicate H section");
            }
            std::vector<Halfspace> hs;
            for (auto& row : read_rows(reader, count, data.dim + 1, "H")) {
                Halfspace h;
                h.offset = row.front();
                h.normal.assign(row.begin() + 1, row.end());
                hs.push_back(std::move(h));
            }
            data.halfspaces = std::move(hs);
        } else {
            throw ParseError(l.number, "unknown section '" + l.tokens[0] + "'");
        }
    }
    if (!data.points && !data.halfspaces) {
        throw ParseError(reader.line(), "no V or H section");
    }
    return data;
}

PolyData parse_poly(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_poly(in);
}

PolyData read_poly_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw Error("cannot open " + path.string());
    }
    return parse_poly(in);
}

void write_poly(std::ostream& out, const PolyData& data) {
    out << "POLY " << data.dim << '\n';
    if (data.points) {
        out << "V " << data.points->size() << '\n';
        for (const auto& p : *data.points) {
            write_row(out, nullptr, p);
        }
    }
    if (data.halfspaces) {
        out << "H " << data.halfspaces->size() << '\n';
        for (const auto& h : *data.halfspaces) {
            write_row(out, &h.offset, h.normal);
        }
    }
}

std::string poly_to_string(const PolyData& data) {
    std::ostringstream out;
    write_poly(out, data);
    return out.str();
}

void write_poly_file(const std::filesystem::path& path, const PolyData& data) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error("cannot write " + path.string());
    }
    write_poly(out, data);
}

void write_triangulation(std::ostream& out, const Triangulation& t) {
    out << "TRIANGULATION " << t.dim << '\n';
    out << "CELLS " << t.cells.size() << '\n';
    for (const auto& c : t.cells) {
        for (std::size_t i = 0; i < c.vertices.size(); ++i) {
            out << (i ? " " : "") << c.vertices[i];
        }
        out << '\n';
    }
}

Triangulation parse_triangulation(std::istream& in) {
    LineReader reader(in);
    Triangulation t;
    t.dim = expect_header(reader, "TRIANGULATION");
    const std::size_t count = expect_header(reader, "CELLS");
    Line l;
    for (std::size_t i = 0; i < count; ++i) {
        if (!reader.next(l)) {
            throw ParseError(reader.line(), "expected " + std::to_string(count) + " cells");
        }
        if (l.tokens.size() != t.dim + 1) {
            throw ParseError(l.number, "cell needs " + std::to_string(t.dim + 1) + " indices");
        }
        Simplex s;
        for (const auto& tok : l.tokens) {
            const std::size_t v = parse_count(tok, l.number);
            if (v > std::numeric_limits<Index>::max()) {
                throw ParseError(l.number, "index out of range");
            }
            s.vertices.push_back(static_cast<Index>(v));
        }
        t.cells.push_back(std::move(s));
    }
    if (reader.next(l)) {
        throw ParseError(l.number, "trailing data after the last cell");
    }
    return t;
}

Triangulation read_triangulation_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw Error("cannot open " + path.string());
    }
    return parse_triangulation(in);
}

}  // namespace bbhull
