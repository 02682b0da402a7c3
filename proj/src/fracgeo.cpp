#include "fracdim/fracgeo.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace fracdim {

namespace {

std::vector<std::string> split_ws(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream ss(line);
    std::string tok;
    while (ss >> tok) out.push_back(tok);
    return out;
}

bool looks_decimal(const std::string& token) {
    return token.find_first_of(".eE") != std::string::npos;
}

double parse_decimal(const std::string& token, const std::string& src, int line) {
    double v = 0.0;
    auto res = std::from_chars(token.data(), token.data() + token.size(), v);
    if (res.ec != std::errc() || res.ptr != token.data() + token.size()) {
        throw ParseError(src, line, "bad coordinate '" + token + "'");
    }
    return v;
}

Scalar parse_coord(const std::string& token, const std::string& src, int line) {
    if (looks_decimal(token)) return Scalar::approx(parse_decimal(token, src, line));
    auto d = Dyadic::parse(token);
    if (!d) throw ParseError(src, line, "bad coordinate '" + token + "'");
    return Scalar(*d);
}

Point to_mode(const Scalar& x, const Scalar& y, NumMode mode) {
    if (mode == NumMode::approx) {
        return approx_point(x.to_double(), y.to_double());
    }
    return Point{x, y};
}

bool valid_name(const std::string& name) {
    if (name.empty()) return false;
    for (char c : name) {
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' ||
              c == '.')) {
            return false;
        }
    }
    return true;
}

}  // namespace

GeoSet read_fracgeo(std::istream& in, const std::string& source_name) {
    std::string line;
    int lineno = 0;

    if (!std::getline(in, line)) throw ParseError(source_name, 1, "empty input");
    ++lineno;
    if (line == "fracgeo v1\r") line.pop_back();
    if (line != "fracgeo v1") {
        throw ParseError(source_name, lineno, "expected header 'fracgeo v1'");
    }

    if (!std::getline(in, line)) {
        throw ParseError(source_name, 2, "missing 'set' line");
    }
    ++lineno;
    auto toks = split_ws(line);
    if (toks.size() != 4 || toks[0] != "set" || toks[2] != "stage") {
        throw ParseError(source_name, lineno, "expected 'set <name> stage <k|->'");
    }
    GeoSet set;
    set.name = toks[1];
    if (toks[3] != "-") {
        unsigned long k = 0;
        auto res = std::from_chars(toks[3].data(), toks[3].data() + toks[3].size(), k);
        if (res.ec != std::errc() || res.ptr != toks[3].data() + toks[3].size()) {
            throw ParseError(source_name, lineno, "bad stage '" + toks[3] + "'");
        }
        set.stage = static_cast<unsigned>(k);
    }

    // first pass over raw coordinates; mode is decided once the file is read
    struct RawPrim {
        std::vector<Scalar> coords;
        int line;
    };
    std::vector<RawPrim> raw;
    bool any_approx = false;

    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) throw ParseError(source_name, lineno, "blank line");
        toks = split_ws(line);
        std::size_t expected = 0;
        std::size_t first_coord = 1;
        if (toks[0] == "point") {
            expected = 2;
        } else if (toks[0] == "seg") {
            expected = 4;
        } else if (toks[0] == "poly") {
            if (toks.size() < 2) throw ParseError(source_name, lineno, "poly needs a count");
            unsigned long n = 0;
            auto res = std::from_chars(toks[1].data(), toks[1].data() + toks[1].size(), n);
            if (res.ec != std::errc() || res.ptr != toks[1].data() + toks[1].size() || n < 3) {
                throw ParseError(source_name, lineno, "bad poly count '" + toks[1] + "'");
            }
            expected = 2 * n;
            first_coord = 2;
        } else {
            throw ParseError(source_name, lineno, "unknown directive '" + toks[0] + "'");
        }
        if (toks.size() != first_coord + expected) {
            throw ParseError(source_name, lineno, "expected " + std::to_string(expected) +
                                                      " coordinates");
        }
        RawPrim prim;
        prim.line = lineno;
        for (std::size_t i = first_coord; i < toks.size(); ++i) {
            Scalar c = parse_coord(toks[i], source_name, lineno);
            if (!c.is_exact()) any_approx = true;
            prim.coords.push_back(std::move(c));
        }
        raw.push_back(std::move(prim));
    }

    NumMode mode = any_approx ? NumMode::approx : NumMode::exact;
    for (const RawPrim& prim : raw) {
        std::vector<Point> pts;
        for (std::size_t i = 0; i < prim.coords.size(); i += 2) {
            pts.push_back(to_mode(prim.coords[i], prim.coords[i + 1], mode));
        }
        try {
            set.primitives.emplace_back(std::move(pts));
        } catch (const ValidationError& e) {
            throw ParseError(source_name, prim.line, e.what());
        }
    }
    return set;
}

GeoSet read_fracgeo_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path + "' for reading");
    return read_fracgeo(in, path);
}

std::string scalar_token(const Scalar& s) {
    return s.str();
}

Scalar parse_scalar_token(const std::string& token) {
    if (looks_decimal(token)) {
        double v = 0.0;
        auto res = std::from_chars(token.data(), token.data() + token.size(), v);
        if (res.ec != std::errc() || res.ptr != token.data() + token.size()) {
            throw ValidationError("bad scalar '" + token + "'");
        }
        return Scalar::approx(v);
    }
    auto d = Dyadic::parse(token);
    if (!d) throw ValidationError("bad scalar '" + token + "'");
    return Scalar(*d);
}

void write_fracgeo(std::ostream& out, const GeoSet& set) {
    if (!valid_name(set.name)) {
        throw ValidationError("set name must be nonempty [A-Za-z0-9_.-]: '" + set.name +
                              "'");
    }
    set.mode();  // reject mixed sets before emitting anything
    out << "fracgeo v1\n";
    out << "set " << set.name << " stage ";
    if (set.stage) {
        out << *set.stage;
    } else {
        out << "-";
    }
    out << "\n";
    for (const ConvexPrimitive& prim : set.primitives) {
        const auto& vs = prim.vertices();
        switch (prim.kind()) {
            case PrimitiveKind::point:
                out << "point";
                break;
            case PrimitiveKind::segment:
                out << "seg";
                break;
            case PrimitiveKind::polygon:
                out << "poly " << vs.size();
                break;
        }
        for (const Point& p : vs) {
            out << " " << scalar_token(p.x) << " " << scalar_token(p.y);
        }
        out << "\n";
    }
}

void write_fracgeo_file(const std::string& path, const GeoSet& set) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    write_fracgeo(out, set);
    if (!out) throw IoError("write failed for '" + path + "'");
}

}  // namespace fracdim
