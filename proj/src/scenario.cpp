#include "tbl/scenario.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <numeric>
#include <sstream>

namespace tbl {

namespace {

std::string trim(const std::string& s) {
    size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

[[noreturn]] void parse_fail(int line, const std::string& reason) {
    fail(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + reason);
}

long to_long(const std::string& s, int line, const std::string& what) {
    try {
        size_t used = 0;
        long v = std::stol(s, &used);
        if (used != s.size()) parse_fail(line, "bad integer for " + what + ": '" + s + "'");
        return v;
    } catch (const Error&) {
        throw;
    } catch (const std::exception&) {
        parse_fail(line, "bad integer for " + what + ": '" + s + "'");
    }
}

bool to_bool(const std::string& s, int line, const std::string& what) {
    if (s == "true" || s == "on" || s == "1") return true;
    if (s == "false" || s == "off" || s == "0") return false;
    parse_fail(line, "bad boolean for " + what + ": '" + s + "'");
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    for (char c : s) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == sep && depth == 0) {
            out.push_back(trim(cur));
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(trim(cur));
    return out;
}

std::pair<mpz_class, mpz_class> parse_rational(const std::string& s, int line) {
    std::string t = trim(s);
    size_t slash = t.find('/');
    try {
        if (slash == std::string::npos) return {mpz_class(t), mpz_class(1)};
        mpz_class num(trim(t.substr(0, slash)));
        mpz_class den(trim(t.substr(slash + 1)));
        return {num, den};
    } catch (const std::invalid_argument&) {
        parse_fail(line, "bad coordinate '" + s + "'");
    }
}

} // namespace

Scenario parse_scenario(const std::string& text) {
    Scenario sc;
    std::istringstream in(text);
    std::string raw;
    std::string section;
    int line = 0;

    struct Pending {
        int line;
        std::string key, value;
        std::string section;
    };
    std::vector<Pending> entries;

    while (std::getline(in, raw)) {
        ++line;
        std::string s = raw;
        size_t hash = s.find('#');
        if (hash != std::string::npos) s = s.substr(0, hash);
        s = trim(s);
        if (s.empty()) continue;
        if (s.front() == '[') {
            if (s.back() != ']') parse_fail(line, "unterminated section header");
            section = s.substr(1, s.size() - 2);
            if (section != "field" && section != "scheme" && section != "classes" &&
                section != "points" && section != "options")
                parse_fail(line, "unknown section [" + section + "]");
            continue;
        }
        size_t eq = s.find('=');
        if (eq == std::string::npos) parse_fail(line, "expected key = value");
        if (section.empty()) parse_fail(line, "key outside any section");
        entries.push_back({line, trim(s.substr(0, eq)), trim(s.substr(eq + 1)), section});
    }

    // field and scheme scalars first: later parses depend on p and dim
    for (const Pending& e : entries) {
        if (e.section == "field") {
            if (e.key == "p") sc.p = to_long(e.value, e.line, "p");
            else if (e.key == "precision") sc.precision = static_cast<int>(to_long(e.value, e.line, "precision"));
            else parse_fail(e.line, "unknown key '" + e.key + "' in [field]");
        } else if (e.section == "scheme") {
            if (e.key == "dim") sc.dim = static_cast<int>(to_long(e.value, e.line, "dim"));
            else if (e.key == "vertical") sc.vertical = to_bool(e.value, e.line, "vertical");
            else if (e.key != "boundary") parse_fail(e.line, "unknown key '" + e.key + "' in [scheme]");
        }
    }
    if (sc.p == 0) fail(ErrorCode::ValidationError, "missing p in [field]");
    if (!is_prime(sc.p)) fail(ErrorCode::ValidationError, "p = " + std::to_string(sc.p) + " is not prime");
    if (sc.precision < 1) fail(ErrorCode::ValidationError, "precision must be >= 1");
    if (sc.dim < 1) fail(ErrorCode::ValidationError, "dim must be >= 1");

    for (const Pending& e : entries) {
        if (e.section == "scheme" && e.key == "boundary") {
            try {
                sc.boundary.push_back(Poly::parse(e.value, sc.dim));
                sc.boundary_texts.push_back(e.value);
            } catch (const Error& err) {
                parse_fail(e.line, err.what());
            }
        } else if (e.section == "classes") {
            if (e.key != "class") parse_fail(e.line, "unknown key '" + e.key + "' in [classes]");
            try {
                sc.classes.push_back(ClassExpr::parse(e.value, sc.dim, sc.p));
                sc.class_texts.push_back(e.value);
            } catch (const Error& err) {
                parse_fail(e.line, err.what());
            }
        } else if (e.section == "points") {
            if (e.key != "point") parse_fail(e.line, "unknown key '" + e.key + "' in [points]");
            std::string v = e.value;
            if (!v.empty() && v.front() == '(' && v.back() == ')') v = v.substr(1, v.size() - 2);
            Scenario::PointSpec spec;
            spec.text = e.value;
            for (const std::string& part : split(v, ','))
                spec.coords.push_back(parse_rational(part, e.line));
            if (static_cast<int>(spec.coords.size()) != sc.dim)
                parse_fail(e.line, "point has " + std::to_string(spec.coords.size()) +
                                       " coordinates; dim = " + std::to_string(sc.dim));
            for (const auto& [num, den] : spec.coords) {
                if (den == 0) parse_fail(e.line, "zero denominator in point");
                if (mpz_divisible_ui_p(den.get_mpz_t(), static_cast<unsigned long>(sc.p)))
                    parse_fail(e.line, "coordinate denominator divisible by p");
            }
            sc.points.push_back(std::move(spec));
        } else if (e.section == "options") {
            if (e.key == "n") {
                for (const std::string& part : split(e.value, ','))
                    sc.n_values.push_back(to_long(part, e.line, "n"));
            } else if (e.key == "seed") {
                sc.seed = static_cast<uint64_t>(to_long(e.value, e.line, "seed"));
            } else if (e.key == "samples") {
                sc.samples = to_long(e.value, e.line, "samples");
            } else if (e.key == "l_bound") {
                sc.l_bound = to_long(e.value, e.line, "l_bound");
            } else if (e.key == "q1_degree") {
                sc.q1_degree = static_cast<int>(to_long(e.value, e.line, "q1_degree"));
            } else {
                parse_fail(e.line, "unknown key '" + e.key + "' in [options]");
            }
        }
    }

    for (long n : sc.n_values) {
        if (n < 1) fail(ErrorCode::ValidationError, "n must be >= 1");
        if (std::gcd(n, sc.p) != 1)
            fail(ErrorCode::ValidationError, "n = " + std::to_string(n) + " is not coprime to p");
    }
    if (sc.samples < 1) fail(ErrorCode::ValidationError, "samples must be >= 1");
    if (sc.q1_degree < 1) fail(ErrorCode::ValidationError, "q1_degree must be >= 1");
    if (sc.l_bound < 0) fail(ErrorCode::ValidationError, "l_bound must be >= 0");

    // validate the model and classes eagerly so errors carry context
    SchemeModel model = sc.model();
    for (const ClassExpr& c : sc.classes) validate_for_model(c, model);
    return sc;
}

Scenario load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorCode::ParseError, "cannot open scenario file " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_scenario(buf.str());
}

SchemeModel Scenario::model() const {
    return SchemeModel(p, dim, boundary, vertical);
}

OPoint Scenario::make_point(const PointSpec& spec, int precision_override) const {
    std::vector<PAdic> coords;
    for (const auto& [num, den] : spec.coords)
        coords.push_back(PAdic::make_rational(p, precision_override, num, den));
    return OPoint(std::move(coords));
}

} // namespace tbl
