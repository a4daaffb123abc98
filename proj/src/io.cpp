#include "gk/io.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace gk {

using ojson = nlohmann::ordered_json;

namespace {

[[noreturn]] void bad_number(const std::string& s) { throw InputError("BadNumber", "cannot parse number '" + s + "'"); }

mpq_class parse_rational(const std::string& tok) {
    if (tok.empty()) bad_number(tok);
    std::string s = tok;
    bool neg = false;
    if (s[0] == '+' || s[0] == '-') {
        neg = s[0] == '-';
        s = s.substr(1);
    }
    if (s.empty()) bad_number(tok);
    mpq_class q;
    auto digits = [](const std::string& d) {
        return !d.empty() && std::all_of(d.begin(), d.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
    };
    if (auto slash = s.find('/'); slash != std::string::npos) {
        std::string n = s.substr(0, slash), d = s.substr(slash + 1);
        if (!digits(n) || !digits(d)) bad_number(tok);
        mpz_class den(d, 10);
        if (den == 0) throw InputError("BadNumber", "zero denominator in '" + tok + "'");
        q = mpq_class(mpz_class(n, 10), den);
        q.canonicalize();
    } else if (auto dot = s.find('.'); dot != std::string::npos) {
        std::string ip = s.substr(0, dot), fp = s.substr(dot + 1);
        if ((!ip.empty() && !digits(ip)) || (!fp.empty() && !digits(fp)) || (ip.empty() && fp.empty())) bad_number(tok);
        mpz_class scale = 1;
        for (std::size_t k = 0; k < fp.size(); ++k) scale *= 10;
        q = mpq_class(mpz_class((ip.empty() ? "0" : ip) + fp, 10), scale);
        q.canonicalize();
    } else {
        if (!digits(s)) bad_number(tok);
        q = mpq_class(mpz_class(s, 10));
    }
    return neg ? mpq_class(-q) : q;
}

double parse_real(const std::string& tok) {
    if (tok.find('/') != std::string::npos) return parse_rational(tok).get_d();
    std::size_t used = 0;
    double v;
    try {
        v = std::stod(tok, &used);
    } catch (const std::exception&) {
        bad_number(tok);
    }
    if (used != tok.size()) bad_number(tok);
    return v;
}

// Splits "re+imi" into its two textual parts; either may be empty.
std::pair<std::string, std::string> split_complex(const std::string& raw) {
    std::string s;
    for (char c : raw)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) bad_number(raw);
    if (s.back() != 'i' && s.back() != 'j') return {s, ""};
    std::string body = s.substr(0, s.size() - 1);
    std::size_t split = std::string::npos;
    for (std::size_t k = body.size(); k-- > 1;)
        if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
            split = k;
            break;
        }
    std::string re = split == std::string::npos ? "" : body.substr(0, split);
    std::string im = split == std::string::npos ? body : body.substr(split);
    if (im.empty() || im == "+") im = "1";
    else if (im == "-") im = "-1";
    return {re, im};
}

std::size_t line_of(const std::string& text, std::size_t byte) {
    std::size_t line = 1;
    for (std::size_t k = 0; k < byte && k < text.size(); ++k)
        if (text[k] == '\n') ++line;
    return line;
}

ojson parse_json(const std::string& text) {
    try {
        return ojson::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError("ParseError", "line " + std::to_string(line_of(text, e.byte)) + ": " + e.what());
    }
}

[[noreturn]] void bad_fixture(const std::string& what) { throw InputError("BadFixture", what); }

const ojson& field(const ojson& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) bad_fixture(std::string("missing field '") + key + "'");
    return j.at(key);
}

std::string str_field(const ojson& j, const char* key) {
    const auto& v = field(j, key);
    if (!v.is_string()) bad_fixture(std::string("field '") + key + "' must be a string");
    return v.get<std::string>();
}

} // namespace

QComplex parse_qcomplex(const std::string& s) {
    auto [re, im] = split_complex(s);
    return {re.empty() ? mpq_class(0) : parse_rational(re), im.empty() ? mpq_class(0) : parse_rational(im)};
}

Complex parse_complex(const std::string& s) {
    auto [re, im] = split_complex(s);
    return {re.empty() ? 0.0 : parse_real(re), im.empty() ? 0.0 : parse_real(im)};
}

std::string to_string(const QComplex& c) {
    if (sgn(c.im) == 0) return c.re.get_str();
    std::string im = (abs(c.im) == 1 ? std::string() : mpq_class(abs(c.im)).get_str()) + "i";
    if (sgn(c.re) == 0) return (sgn(c.im) < 0 ? "-" : "") + im;
    return c.re.get_str() + (sgn(c.im) < 0 ? "-" : "+") + im;
}

std::string to_string(const Complex& c) {
    char buf[64];
    if (c.imag() == 0) {
        std::snprintf(buf, sizeof buf, "%.17g", c.real());
    } else {
        std::snprintf(buf, sizeof buf, "%.17g%+.17gi", c.real(), c.imag());
    }
    return buf;
}

GraphSpec parse_graph_spec(const std::string& text) {
    ojson j = parse_json(text);
    GraphSpec g;
    const auto& vs = field(j, "vertices");
    if (!vs.is_array()) bad_fixture("'vertices' must be an array");
    for (const auto& v : vs) {
        std::string c = str_field(v, "color");
        if (c != "b" && c != "w") bad_fixture("vertex color must be \"b\" or \"w\"");
        g.vertices.push_back({str_field(v, "id"), c == "b" ? Color::Black : Color::White});
    }
    const auto& es = field(j, "edges");
    if (!es.is_array()) bad_fixture("'edges' must be an array");
    for (const auto& e : es) {
        const auto& h = field(e, "h");
        if (!h.is_array() || h.size() != 2 || !h[0].is_number_integer() || !h[1].is_number_integer())
            bad_fixture("edge 'h' must be a pair of integers");
        g.edges.push_back({str_field(e, "id"), str_field(e, "black"), str_field(e, "white"),
                           {h[0].get<long long>(), h[1].get<long long>()}});
    }
    const auto& rs = field(j, "rotations");
    if (!rs.is_object()) bad_fixture("'rotations' must be an object");
    for (const auto& [vid, list] : rs.items()) {
        if (!list.is_array()) bad_fixture("rotation of " + vid + " must be an array");
        auto& r = g.rotations[vid];
        for (const auto& e : list) {
            if (!e.is_string()) bad_fixture("rotation entries must be edge ids");
            r.push_back(e.get<std::string>());
        }
    }
    return g;
}

std::string read_text(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("FileError", "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void save_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("FileError", "cannot write " + path);
    out << text;
}

GraphSpec load_graph_spec(const std::string& path) { return parse_graph_spec(read_text(path)); }

TorusGraph load_graph(const std::string& path) { return TorusGraph::build(load_graph_spec(path)); }

std::string graph_to_json(const GraphSpec& spec) {
    ojson j;
    j["vertices"] = ojson::array();
    for (const auto& v : spec.vertices)
        j["vertices"].push_back({{"id", v.id}, {"color", v.color == Color::Black ? "b" : "w"}});
    j["edges"] = ojson::array();
    for (const auto& e : spec.edges)
        j["edges"].push_back({{"id", e.id}, {"black", e.black}, {"white", e.white}, {"h", {e.h.x, e.h.y}}});
    j["rotations"] = ojson::object();
    for (const auto& v : spec.vertices) {
        auto it = spec.rotations.find(v.id);
        j["rotations"][v.id] = it == spec.rotations.end() ? ojson::array() : ojson(it->second);
    }
    return j.dump(2) + "\n";
}

FaceWeights parse_face_weights(const std::string& text) {
    ojson j = parse_json(text);
    std::string mode = j.contains("mode") ? str_field(j, "mode") : "exact";
    const auto& ws = field(j, "weights");
    if (!ws.is_array()) bad_fixture("'weights' must be an array");
    FaceWeights fw;
    auto text_of = [](const ojson& v) {
        if (v.is_string()) return v.get<std::string>();
        if (v.is_number()) return v.dump();
        bad_fixture("weights must be strings or numbers");
    };
    if (mode == "exact") {
        std::vector<QComplex> v;
        for (const auto& w : ws) v.push_back(parse_qcomplex(text_of(w)));
        fw.values = std::move(v);
    } else if (mode == "float") {
        std::vector<Complex> v;
        for (const auto& w : ws) v.push_back(parse_complex(text_of(w)));
        fw.values = std::move(v);
    } else {
        bad_fixture("mode must be \"exact\" or \"float\"");
    }
    if (j.contains("twist")) {
        const auto& t = j.at("twist");
        if (!t.is_array() || t.size() != 2) bad_fixture("'twist' must be a pair");
        fw.twist = {text_of(t[0]), text_of(t[1])};
    }
    return fw;
}

std::string face_weights_to_json(const FaceWeights& w) {
    ojson j;
    j["mode"] = w.exact() ? "exact" : "float";
    j["weights"] = ojson::array();
    std::visit([&](const auto& vs) {
        for (const auto& v : vs) j["weights"].push_back(to_string(v));
    }, w.values);
    if (w.twist) j["twist"] = {w.twist->first, w.twist->second};
    return j.dump(2) + "\n";
}

AnyPoly add(const AnyPoly& a, const AnyPoly& b) {
    if (a.index() != b.index()) fail("DomainMismatch", "cannot mix exact and float polynomials");
    if (a.index() == 0) return std::get<0>(a) + std::get<0>(b);
    return std::get<1>(a) + std::get<1>(b);
}

AnyPoly mul(const AnyPoly& a, const AnyPoly& b) {
    if (a.index() != b.index()) fail("DomainMismatch", "cannot mix exact and float polynomials");
    if (a.index() == 0) return std::get<0>(a) * std::get<0>(b);
    return std::get<1>(a) * std::get<1>(b);
}

std::string poly_to_json(const AnyPoly& p) {
    ojson j;
    j["mode"] = p.index() == 0 ? "exact" : "float";
    j["terms"] = ojson::array();
    if (p.index() == 0) {
        for (const auto& [e, c] : std::get<0>(p).terms())
            j["terms"].push_back({e.x, e.y, c.re.get_num().get_str(), c.re.get_den().get_str(),
                                  c.im.get_num().get_str(), c.im.get_den().get_str()});
    } else {
        for (const auto& [e, c] : std::get<1>(p).terms()) j["terms"].push_back({e.x, e.y, c.real(), c.imag()});
    }
    return j.dump(2) + "\n";
}

AnyPoly parse_poly(const std::string& text) {
    ojson j = parse_json(text);
    std::string mode = str_field(j, "mode");
    const auto& ts = field(j, "terms");
    if (!ts.is_array()) bad_fixture("'terms' must be an array");
    auto ij = [](const ojson& t) {
        if (!t[0].is_number_integer() || !t[1].is_number_integer()) bad_fixture("exponents must be integers");
        return Hom{t[0].get<long long>(), t[1].get<long long>()};
    };
    if (mode == "exact") {
        ExactPoly p;
        for (const auto& t : ts) {
            if (!t.is_array() || t.size() != 6) bad_fixture("exact terms have six entries");
            auto q = [&](int n, int d) {
                if (!t[n].is_string() || !t[d].is_string()) bad_fixture("exact coefficients are decimal strings");
                return parse_rational(t[n].get<std::string>() + "/" + t[d].get<std::string>());
            };
            p.set(ij(t), QComplex(q(2, 3), q(4, 5)));
        }
        return p;
    }
    if (mode == "float") {
        FloatPoly p;
        for (const auto& t : ts) {
            if (!t.is_array() || t.size() != 4) bad_fixture("float terms have four entries");
            p.set(ij(t), Complex(t[2].get<double>(), t[3].get<double>()));
        }
        return p;
    }
    bad_fixture("mode must be \"exact\" or \"float\"");
}

} // namespace gk
