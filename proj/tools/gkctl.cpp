// gkctl: command-line front end. Every run prints one JSON document.
// Exit codes: 0 pass, 1 residual or invariant failure, 2 input error.

#include <cstdlib>
#include <iostream>
#include <random>

#include "CLI11.hpp"
#include "json.hpp"

#include "gk/io.hpp"
#include "gk/toda.hpp"

using namespace gk;
using ojson = nlohmann::ordered_json;

namespace {

constexpr int kPass = 0, kFail = 1, kInput = 2;

struct Tolerances {
    double fay = 1e-9;
    double roundtrip = 1e-8;
    double commuting = 1e-8;
    double curve = 1e-9; // float curve comparison
};

Tolerances tolerances(const std::string& profile) {
    double f = 1;
    if (profile == "strict") f = 1e-2;
    else if (profile == "loose") f = 1e2;
    else if (profile != "default") throw InputError("BadConfig", "unknown tolerance profile '" + profile + "'");
    Tolerances t;
    t.fay *= f;
    t.roundtrip *= f;
    t.commuting *= f;
    t.curve *= f;
    return t;
}

// Anything wrong with a file the user handed us is an input error.
TorusGraph load_input(const std::string& path) {
    try {
        return load_graph(path);
    } catch (const InputError&) {
        throw;
    } catch (const Error& e) {
        throw InputError(e.kind(), e.detail());
    }
}

template <class F> auto input(F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const InputError&) {
        throw;
    } catch (const Error& e) {
        throw InputError(e.kind(), e.detail());
    }
}

ojson hom(Hom h) { return ojson::array({h.x, h.y}); }

ojson label(const AbelLabel& l) { return ojson(l); }

ojson matrix(const IntMatrix& m) { return ojson(m); }

template <class C> ojson values(const std::vector<C>& v) {
    ojson a = ojson::array();
    for (const auto& c : v) a.push_back(to_string(c));
    return a;
}

ojson polygon(const NewtonPolygon& p) {
    ojson v = ojson::array();
    for (auto h : p.vertices) v.push_back(hom(h));
    return {{"vertices", v},       {"twice_area", p.twice_area}, {"interior", p.interior},
            {"boundary", p.boundary}, {"genus", p.genus()},      {"degenerate", p.degenerate}};
}

bool antisymmetric(const IntMatrix& m) {
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j)
            if (m[i][j] != -m[j][i]) return false;
    return true;
}

bool zero_column_sums(const IntMatrix& m) {
    for (std::size_t j = 0; j < m.size(); ++j) {
        long long s = 0;
        for (std::size_t i = 0; i < m.size(); ++i) s += m[i][j];
        if (s) return false;
    }
    return true;
}

std::vector<Complex> complex_list(const std::vector<std::string>& v) {
    std::vector<Complex> r;
    for (const auto& s : v) r.push_back(input([&] { return parse_complex(s); }));
    return r;
}

// Random points z = u + v tau with u, v uniform in [0, 1).
std::vector<Complex> sample_points(std::mt19937_64& rng, int n, Complex tau) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<Complex> zs;
    for (int k = 0; k < n; ++k) {
        double a = u(rng), b = u(rng);
        zs.push_back(a + b * tau);
    }
    return zs;
}

// Random exact face weights with product one. Draws with a weight of -1,
// where mutation is singular, are repeated.
std::vector<QComplex> random_exact_weights(std::mt19937_64& rng, int n) {
    std::uniform_int_distribution<int> num(1, 9), den(1, 7), sg(0, 1);
    for (;;) {
        std::vector<QComplex> x;
        QComplex prod(1);
        for (int i = 0; i + 1 < n; ++i) {
            x.emplace_back(mpq_class(num(rng) * (sg(rng) ? -1 : 1), den(rng)), mpq_class(num(rng) % 3, den(rng)));
            prod = prod * x.back();
        }
        x.push_back(QComplex(1) / prod);
        if (std::none_of(x.begin(), x.end(), [](const QComplex& v) { return v == QComplex(-1); })) return x;
    }
}

template <class C> std::vector<C> signed_weights_of(const TorusGraph& g, const std::vector<C>& x) {
    auto a = connection_from_face_weights(g, x);
    auto k = find_kasteleyn(g);
    for (int e = 0; e < g.num_edges(); ++e)
        if (k[e] < 0) a[e] = -a[e];
    return a;
}

double float_poly_distance(const FloatPoly& a, const FloatPoly& b) {
    double num = 0, den = 0;
    for (const auto& [e, c] : a.terms()) {
        num = std::max(num, std::abs(c - b.coeff(e)));
        den = std::max(den, std::abs(c));
    }
    for (const auto& [e, c] : b.terms()) {
        num = std::max(num, std::abs(c - a.coeff(e)));
        den = std::max(den, std::abs(c));
    }
    return den > 0 ? num / den : num;
}

// --- inspect -----------------------------------------------------------

int cmd_inspect(const std::string& path, bool abel, ojson& out) {
    auto g = load_input(path);
    auto zs = zigzags(g);
    auto poly = newton_polygon(zs);
    auto cls = classify(g);
    auto eps = exchange_matrix(g);
    out["vertices"] = g.num_vertices();
    out["edges"] = g.num_edges();
    out["faces"] = g.num_faces();
    ojson z = ojson::array();
    for (const auto& zz : zs) z.push_back({{"class", hom(zz.h)}, {"length", zz.darts.size()}});
    out["zigzags"] = z;
    out["polygon"] = polygon(poly);
    out["minimal"] = cls.minimal;
    out["simple"] = cls.simple;
    ojson div = ojson::array();
    for (auto h : cls.divisible_classes) div.push_back(hom(h));
    out["divisible_classes"] = div;
    out["exchange_matrix"] = matrix(eps);

    ojson checks;
    Hom total{};
    for (const auto& zz : zs) total = total + zz.h;
    checks["zigzag_sum_zero"] = total == Hom{};
    checks["pick"] = poly.twice_area == 2 * poly.interior + poly.boundary - 2;
    checks["canonical_degree"] = 2 * poly.genus() - 2 == poly.twice_area - poly.boundary;
    checks["exchange_antisymmetric"] = antisymmetric(eps);
    checks["exchange_column_sums_zero"] = zero_column_sums(eps);
    checks["exchange_edgewise_agrees"] = eps == exchange_matrix_edgewise(g);

    auto target = curvature_target(g);
    if (target.product == 1) {
        auto k = find_kasteleyn(g);
        bool dk = true;
        for (int f = 0; f < g.num_faces(); ++f) dk = dk && sign_coboundary(g, k, f) == target.value[f];
        checks["kasteleyn_curvature"] = dk;
        ojson ks;
        for (int e = 0; e < g.num_edges(); ++e) ks[g.edge(e).id] = k[e];
        out["kasteleyn"] = ks;
    } else {
        checks["kasteleyn_curvature"] = false;
        out["kasteleyn"] = nullptr;
    }

    auto d = discrete_abel(g);
    bool degrees = true;
    for (const auto& l : d.face) degrees = degrees && degree(l) == 0;
    for (int v = 0; v < g.num_vertices(); ++v)
        degrees = degrees && degree(d.vertex[v]) == (g.vertex(v).color == Color::Black ? 1 : -1);
    checks["abel_degrees"] = degrees;
    H1Lattice lat(zs);
    bool eps_abel = true, eps_abel_exact = true;
    for (const auto& r : epsilon_abel_check(d, eps)) {
        eps_abel = eps_abel && lat.contains(r);
        eps_abel_exact = eps_abel_exact && std::all_of(r.begin(), r.end(), [](long long c) { return c == 0; });
    }
    checks["exchange_abel"] = eps_abel;
    out["exchange_abel_exact_on_lift"] = eps_abel_exact;
    if (abel) {
        ojson a;
        ojson faces = ojson::array();
        for (const auto& l : d.face) faces.push_back(label(l));
        a["faces"] = faces;
        ojson verts;
        for (int v = 0; v < g.num_vertices(); ++v) verts[g.vertex(v).id] = label(d.vertex[v]);
        a["vertices"] = verts;
        out["abel"] = a;
    }
    out["checks"] = checks;
    ojson failed = ojson::array();
    for (const auto& [k, v] : checks.items())
        if (!v.get<bool>()) failed.push_back(k);
    out["violations"] = failed;
    return failed.empty() ? kPass : kFail;
}

// --- curve -------------------------------------------------------------

int cmd_curve(const std::string& graph, const std::string& weights, const std::string& output, ojson& out) {
    auto g = load_input(graph);
    auto fw = input([&] { return parse_face_weights(read_text(weights)); });
    auto k = find_kasteleyn(g);
    AnyPoly p = std::visit(
        [&](const auto& x) -> AnyPoly {
            using C = typename std::decay_t<decltype(x)>::value_type;
            if (static_cast<int>(x.size()) != g.num_faces())
                throw InputError("BadWeights", "expected one weight per face");
            Twist<C> tw;
            if (fw.twist) {
                if constexpr (std::is_same_v<C, QComplex>)
                    tw = {input([&] { return parse_qcomplex(fw.twist->first); }),
                          input([&] { return parse_qcomplex(fw.twist->second); })};
                else
                    tw = {input([&] { return parse_complex(fw.twist->first); }),
                          input([&] { return parse_complex(fw.twist->second); })};
            }
            return input([&] { return spectral_curve(g, k, x, tw); });
        },
        fw.values);
    std::string text = poly_to_json(p);
    if (!output.empty()) save_text(output, text);
    out["curve"] = ojson::parse(text);
    out["polygon"] = polygon(std::visit([](const auto& q) { return q.newton_polygon(); }, p));
    return kPass;
}

// --- mutate ------------------------------------------------------------

int cmd_mutate(const std::string& graph, int face, const std::string& weights, const std::string& output, ojson& out) {
    auto g = load_input(graph);
    if (face < 0 || face >= g.num_faces()) throw InputError("UnknownFace", "no face " + std::to_string(face));
    Move m = input([&] { return spider_move(g, face); });
    auto eps = exchange_matrix(g);
    auto recomputed = pull_back(exchange_matrix(m.graph), m.record.face_map);
    auto rule = mutate_exchange(eps, face);
    bool ok = recomputed == rule;
    out["face"] = face;
    out["graph"] = ojson::parse(graph_to_json(m.graph.spec()));
    out["face_map"] = m.record.face_map;
    out["zigzag_map"] = m.record.zigzag_map;
    out["exchange_matrix"] = {{"recomputed", matrix(exchange_matrix(m.graph))},
                              {"rule_agrees", ok}};
    if (!output.empty()) save_text(output, graph_to_json(m.graph.spec()));
    if (!weights.empty()) {
        auto fw = input([&] { return parse_face_weights(read_text(weights)); });
        std::visit(
            [&](const auto& x) {
                using C = typename std::decay_t<decltype(x)>::value_type;
                if (static_cast<int>(x.size()) != g.num_faces())
                    throw InputError("BadWeights", "expected one weight per face");
                auto cluster = permute_faces(m.record.face_map, mutate_face_weights(eps, x, face));
                auto w = signed_weights_of(g, x);
                auto w1 = transport_weights(m, w);
                auto moved = face_weights_of(m.graph, w1);
                auto c0 = canonical_form(det(signed_dirac(g, w)));
                auto c1 = canonical_form(det(signed_dirac(m.graph, w1)));
                bool same_weights, same_curve;
                if constexpr (std::is_same_v<C, QComplex>) {
                    same_weights = cluster == moved;
                    same_curve = c0 == c1;
                } else {
                    double r = 0;
                    for (std::size_t f = 0; f < cluster.size(); ++f)
                        r = std::max(r, std::abs(cluster[f] - moved[f]) / std::abs(cluster[f]));
                    same_weights = r < 1e-10;
                    same_curve = float_poly_distance(c0, c1) < 1e-9;
                }
                out["weights"] = values(cluster);
                out["weights_agree"] = same_weights;
                out["curve_unchanged"] = same_curve;
                ok = ok && same_weights && same_curve;
            },
            fw.values);
    }
    return ok ? kPass : kFail;
}

// --- flow --------------------------------------------------------------

int cmd_flow(const std::string& graph, const std::vector<std::string>& xyzw, const std::string& weights, int steps,
             bool conserved, ojson& out) {
    auto g = load_input(graph);
    std::array<QComplex, 4> start;
    if (!weights.empty()) {
        auto fw = input([&] { return parse_face_weights(read_text(weights)); });
        if (!fw.exact()) throw InputError("BadWeights", "the flow runs in exact arithmetic");
        const auto& x = std::get<0>(fw.values);
        if (x.size() != 4) throw InputError("BadWeights", "expected four face weights");
        auto s = input([&] { return toda_flow_slots(g); });
        for (int k = 0; k < 4; ++k) start[k] = x[s[k]];
    } else {
        if (xyzw.size() != 4) throw InputError("BadWeights", "--xyzw needs four values");
        for (int k = 0; k < 4; ++k) start[k] = input([&] { return parse_qcomplex(xyzw[k]); });
    }
    auto flow = input([&] { return TodaFlow::from_face_weights(g, start); });
    const ExactPoly c0 = flow.curve();
    auto support = c0.support();
    ojson cols = {"step", "x", "y", "z", "w"};
    if (conserved)
        for (auto h : support) cols.push_back("c[" + std::to_string(h.x) + "," + std::to_string(h.y) + "]");
    ojson rows = ojson::array();
    bool same = true;
    for (int s = 0; s <= steps; ++s) {
        if (s > 0) flow.step();
        auto x = flow.face_weights();
        ojson row = {s, to_string(x[0]), to_string(x[1]), to_string(x[2]), to_string(x[3])};
        if (conserved) {
            auto c = flow.curve();
            same = same && c == c0;
            for (auto h : support) row.push_back(to_string(c.coeff(h)));
        }
        rows.push_back(row);
    }
    out["columns"] = cols;
    out["rows"] = rows;
    if (conserved) out["conserved"] = same;
    return same ? kPass : kFail;
}

// --- reconstruct and round trip ------------------------------------------

struct SpectralInput {
    std::string tau = "0.3+1.1i";
    std::string t = "0.41+0.37i";
    std::string a;
    std::vector<std::string> points;
};

EllipticSpectralData spectral_input(const TorusGraph& g, const AbelMap& d, const SpectralInput& in) {
    EllipticSpectralData data;
    data.params = input([&] { return EllipticParams(parse_complex(in.tau)); });
    data.t = input([&] { return parse_complex(in.t); });
    if (!in.points.empty()) {
        data.points = complex_list(in.points);
        if (data.points.size() != d.zs.size())
            throw InputError("BadInfinityPoints", "need one point per zig-zag");
    } else if (!in.a.empty()) {
        data.points = input([&] { return toda_points(d.zs, parse_complex(in.a)); });
    } else {
        throw InputError("BadInfinityPoints", "give --points or --a");
    }
    return input([&] { return prepare_spectral_data(g, d, data); });
}

int cmd_reconstruct(const std::string& graph, const SpectralInput& in, const std::string& output, ojson& out) {
    auto g = load_input(graph);
    auto d = discrete_abel(g);
    auto data = spectral_input(g, d, in);
    auto rt = round_trip(g, d, data, find_kasteleyn(g), {});
    FaceWeights fw;
    fw.values = rt.x;
    fw.twist = {to_string(rt.twist.lambda0), to_string(rt.twist.mu0)};
    std::string text = face_weights_to_json(fw);
    if (!output.empty()) save_text(output, text);
    out["face_weights"] = ojson::parse(text);
    Complex prod = 1;
    for (auto v : rt.x) prod *= v;
    out["product_residual"] = std::abs(prod - 1.0);
    return kPass;
}

int cmd_verify_roundtrip(const std::string& graph, const SpectralInput& in, int samples, unsigned long long seed,
                         const Tolerances& tol, ojson& out) {
    auto g = load_input(graph);
    auto d = discrete_abel(g);
    auto data = spectral_input(g, d, in);
    std::mt19937_64 rng(seed);
    auto rt = round_trip(g, d, data, find_kasteleyn(g), sample_points(rng, samples, data.params.tau));
    ojson rows = ojson::array();
    double worst = 0;
    for (const auto& s : rt.samples) {
        rows.push_back({{"z", to_string(s.z)}, {"kernel", s.kernel}, {"det", s.det}, {"curve", s.curve}});
        worst = std::max({worst, s.kernel, s.det, s.curve});
    }
    out["threshold"] = tol.roundtrip;
    out["samples"] = rows;
    out["max_residual"] = worst;
    return worst < tol.roundtrip ? kPass : kFail;
}

// --- verify fay ----------------------------------------------------------

int cmd_verify_fay(int n, int instances, unsigned long long seed, const std::string& tau, const Tolerances& tol,
                   ojson& out) {
    if (n < 1) throw InputError("BadConfig", "--n must be positive");
    EllipticParams p = input([&] { return EllipticParams(parse_complex(tau)); });
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-0.5, 0.5);
    auto point = [&] { return Complex(u(rng), u(rng)); };
    ojson rows = ojson::array();
    double worst = 0;
    for (int k = 0; k < instances; ++k) {
        std::vector<Complex> alphas;
        for (int i = 0; i < n; ++i) alphas.push_back(point());
        Complex z = point(), t = point();
        auto r = fay_residual(alphas, z, t, p);
        rows.push_back({{"instance", k}, {"residual", r.relative()}});
        worst = std::max(worst, r.relative());
    }
    out["n"] = n;
    out["threshold"] = tol.fay;
    out["instances"] = rows;
    out["max_residual"] = worst;
    return worst < tol.fay ? kPass : kFail;
}

// --- verify mutation -----------------------------------------------------

int cmd_verify_mutation(const std::string& graph, bool exact, unsigned long long seed, const Tolerances& tol,
                        ojson& out) {
    auto g = load_input(graph);
    std::mt19937_64 rng(seed);
    auto xq = random_exact_weights(rng, g.num_faces());
    std::vector<Complex> xf;
    for (const auto& v : xq) xf.push_back(v.to_complex());
    auto eps = exchange_matrix(g);
    ojson rows = ojson::array();
    bool ok = true;

    auto compare = [&](const TorusGraph& h0, const auto& w0, const TorusGraph& h1, const auto& w1) -> ojson {
        auto c0 = canonical_form(det(signed_dirac(h0, w0)));
        auto c1 = canonical_form(det(signed_dirac(h1, w1)));
        if constexpr (std::is_same_v<std::decay_t<decltype(c0)>, ExactPoly>) {
            return c0 == c1;
        } else {
            return float_poly_distance(c0, c1);
        }
    };
    auto passed = [&](const ojson& r) { return r.is_boolean() ? r.get<bool>() : r.get<double>() < tol.curve; };

    auto run = [&](const auto& x) {
        auto w = signed_weights_of(g, x);
        for (int f = 0; f < g.num_faces(); ++f) {
            if (g.face(f).sides() != 4) continue;
            Move m = spider_move(g, f);
            auto w1 = transport_weights(m, w);
            auto red = reduce_all(m.graph, w1);
            ojson curve = compare(g, w, red.graph, red.w);
            bool eps_ok = pull_back(exchange_matrix(m.graph), m.record.face_map) == mutate_exchange(eps, f);
            ok = ok && passed(curve) && eps_ok;
            rows.push_back({{"move", "spider"}, {"face", f}, {"reductions", red.steps}, {"curve", curve},
                            {"exchange_rule", eps_ok}});
        }
        for (int e = 0; e < g.num_edges(); ++e) {
            Move m = subdivide_edge(g, e);
            auto red = reduce_all(m.graph, transport_weights(m, w));
            ojson curve = compare(g, w, red.graph, red.w);
            ok = ok && passed(curve);
            rows.push_back({{"move", "subdivide+reduce"}, {"edge", g.edge(e).id}, {"curve", curve}});
        }
    };
    if (exact) run(xq);
    else run(xf);
    out["mode"] = exact ? "exact" : "float";
    out["weights"] = exact ? values(xq) : values(xf);
    out["moves"] = rows;
    out["pass"] = ok;
    return ok ? kPass : kFail;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bipartite torus graphs, spectral curves and their genus one inverse"};
    app.require_subcommand(1);
    std::string profile;
    if (const char* env = std::getenv("GK_TOLERANCE_PROFILE")) profile = env;
    app.add_option("--tolerance-profile", profile, "default, strict or loose (env GK_TOLERANCE_PROFILE)");

    std::string graph, weights, output;
    bool abel = false, conserved = false, exact = false;
    int face = -1, steps = 1, n = 3, instances = 10, samples = 20;
    unsigned long long seed = 7;
    std::vector<std::string> xyzw;
    SpectralInput spec;

    auto* inspect = app.add_subcommand("inspect", "combinatorics of a graph file");
    inspect->add_option("graph", graph, "graph file")->required();
    inspect->add_flag("--abel", abel, "dump discrete Abel labels");

    auto* curve = app.add_subcommand("curve", "spectral curve from face weights");
    curve->add_option("graph", graph, "graph file")->required();
    curve->add_option("weights", weights, "face weight file")->required();
    curve->add_option("-o,--output", output, "write the polynomial here");

    auto* mutate = app.add_subcommand("mutate", "spider move at a square face");
    mutate->add_option("graph", graph, "graph file")->required();
    mutate->add_option("--face", face, "face index")->required();
    mutate->add_option("--weights", weights, "face weight file to carry along");
    mutate->add_option("-o,--output", output, "write the new graph here");

    auto* flow = app.add_subcommand("flow", "discrete Toda flow in exact arithmetic");
    flow->add_option("graph", graph, "Toda graph file")->required();
    auto* xyzw_opt = flow->add_option("--xyzw", xyzw, "start weights x,y,z,w")->delimiter(',');
    flow->add_option("--weights", weights, "face weight file (exact)")->excludes(xyzw_opt);
    flow->add_option("--steps", steps, "number of steps")->check(CLI::NonNegativeNumber);
    flow->add_flag("--report-conserved", conserved, "add curve coefficient columns");

    auto add_spectral = [&](CLI::App* c) {
        c->add_option("--graph", graph, "graph file")->required();
        c->add_option("--tau", spec.tau, "period, e.g. 0.3+1.1i");
        c->add_option("--t", spec.t, "line bundle parameter");
        auto* a = c->add_option("--a", spec.a, "Toda parameter a");
        c->add_option("--points", spec.points, "one point per zig-zag")->delimiter(',')->excludes(a);
    };
    auto* reconstruct = app.add_subcommand("reconstruct", "face weights from genus one spectral data");
    add_spectral(reconstruct);
    reconstruct->add_option("-o,--output", output, "write the face weight file here");

    auto* verify = app.add_subcommand("verify", "residual suites");
    verify->require_subcommand(1);
    auto* vfay = verify->add_subcommand("fay", "cyclic trisecant identity at random points");
    vfay->add_option("--n", n, "number of points")->check(CLI::PositiveNumber);
    vfay->add_option("--instances", instances, "random instances")->check(CLI::PositiveNumber);
    vfay->add_option("--seed", seed, "random seed");
    vfay->add_option("--tau", spec.tau, "period");
    auto* vrt = verify->add_subcommand("roundtrip", "reconstruct, then test the Dirac kernel");
    add_spectral(vrt);
    vrt->add_option("--samples", samples, "sample points")->check(CLI::PositiveNumber);
    vrt->add_option("--seed", seed, "random seed");
    auto* vmut = verify->add_subcommand("mutation", "curve invariance under moves");
    vmut->add_option("--graph", graph, "graph file")->required();
    vmut->add_flag("--exact", exact, "exact rational arithmetic");
    vmut->add_option("--seed", seed, "random seed");

    ojson out;
    int code = kPass;
    try {
        try {
            app.parse(argc, argv);
        } catch (const CLI::CallForHelp& e) {
            return app.exit(e);
        } catch (const CLI::CallForAllHelp& e) {
            return app.exit(e);
        } catch (const CLI::ParseError& e) {
            app.exit(e);
            return kInput;
        }
        Tolerances tol = tolerances(profile.empty() ? "default" : profile);
        if (*inspect) {
            out["command"] = "inspect";
            code = cmd_inspect(graph, abel, out);
        } else if (*curve) {
            out["command"] = "curve";
            code = cmd_curve(graph, weights, output, out);
        } else if (*mutate) {
            out["command"] = "mutate";
            code = cmd_mutate(graph, face, weights, output, out);
        } else if (*flow) {
            out["command"] = "flow";
            code = cmd_flow(graph, xyzw, weights, steps, conserved, out);
        } else if (*reconstruct) {
            out["command"] = "reconstruct";
            code = cmd_reconstruct(graph, spec, output, out);
        } else if (*vfay) {
            out["command"] = "verify fay";
            code = cmd_verify_fay(n, instances, seed, spec.tau, tol, out);
        } else if (*vrt) {
            out["command"] = "verify roundtrip";
            code = cmd_verify_roundtrip(graph, spec, samples, seed, tol, out);
        } else if (*vmut) {
            out["command"] = "verify mutation";
            code = cmd_verify_mutation(graph, exact, seed, tol, out);
        }
    } catch (const InputError& e) {
        out["error"] = e.kind();
        out["message"] = e.detail();
        code = kInput;
    } catch (const Error& e) {
        out["error"] = e.kind();
        out["message"] = e.detail();
        code = kFail;
    }
    out["exit_code"] = code;
    std::cout << out.dump(2) << "\n";
    if (out.contains("error")) std::cerr << out["error"].get<std::string>() << ": " << out["message"].get<std::string>() << "\n";
    return code;
}
