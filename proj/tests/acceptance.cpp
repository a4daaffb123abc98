// Acceptance run: one PASS/FAIL line per criterion, each with its runtime
// and the numbers behind the verdict. A criterion over its time budget fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>

#include "gk/io.hpp"
#include "gk/toda.hpp"

using namespace gk;

namespace {

const double kPi = 3.14159265358979323846;
const Complex kI{0.0, 1.0};

TorusGraph load(const std::string& name) { return load_graph(std::string(GK_FIXTURES) + "/" + name); }

double rel(Complex a, Complex b) { return std::abs(a - b) / std::max(std::abs(a), std::abs(b)); }

struct Verdict {
    bool pass = false;
    std::string detail;
};

std::string fmt(const char* f, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

struct TodaData {
    TorusGraph g = load("toda.json");
    AbelMap d = discrete_abel(g);
    EllipticSpectralData data;
    Complex a{0.23, 0.11};
    TodaData() {
        data.params = EllipticParams(Complex(0.3, 1.1));
        data.points = toda_points(d.zs, a);
        data.t = Complex(0.41, 0.37);
        data = prepare_spectral_data(g, d, data);
    }
};

std::vector<QComplex> toda_signed_weights(const TorusGraph& g) {
    auto slots = toda_flow_slots(g);
    std::vector<QComplex> x(4);
    const QComplex v[4] = {QComplex(2), QComplex(3), QComplex(mpq_class(1, 6)), QComplex(1)};
    for (int k = 0; k < 4; ++k) x[slots[k]] = v[k];
    auto a = connection_from_face_weights(g, x);
    auto k = find_kasteleyn(g);
    for (int e = 0; e < g.num_edges(); ++e)
        if (k[e] < 0) a[e] = -a[e];
    return a;
}

ExactPoly curve_of(const TorusGraph& g, const std::vector<QComplex>& w) {
    return canonical_form(det(signed_dirac(g, w)));
}

Verdict toda_combinatorics() {
    auto g = load("toda.json");
    auto zs = zigzags(g);
    std::set<Hom> classes;
    for (const auto& z : zs) classes.insert(z.h);
    auto p = newton_polygon(zs);
    auto c = classify(g);
    bool ok = zs.size() == 4 && classes == std::set<Hom>{{1, 1}, {1, -1}, {-1, 1}, {-1, -1}} &&
              p.vertices == std::vector<Hom>{{0, 0}, {1, -1}, {2, 0}, {1, 1}} && p.interior == 1 &&
              p.boundary == 4 && p.genus() == 1 && c.minimal && c.simple;
    return {ok, std::to_string(zs.size()) + " zig-zags, I=" + std::to_string(p.interior) +
                    " B=" + std::to_string(p.boundary) + " minimal=" + (c.minimal ? "yes" : "no") +
                    " simple=" + (c.simple ? "yes" : "no")};
}

Verdict closed_forms() {
    TodaData s;
    auto x = face_coordinates(s.g, s.d, s.data);
    auto closed = toda_closed_forms(s.data.params, s.a, s.data.t);
    auto slots = toda_display_slots(s.g);
    double r = 0, flipped = 0;
    for (int k = 0; k < 4; ++k) {
        r = std::max(r, rel(x[slots[k]], closed[k]));
        flipped = std::max(flipped, rel(x[slots[k]], -closed[k]));
    }
    Complex prod = 1;
    for (auto v : x) prod *= v;
    double pr = std::abs(prod - 1.0);
    return {r < 1e-9 && pr < 1e-9, "max rel " + fmt("%.2e", r) + ", prod-1 " + fmt("%.2e", pr) +
                                       " (against the negated formulas: " + fmt("%.2e", flipped) + ")"};
}

Verdict round_trip_check() {
    TodaData s;
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<Complex> zs;
    for (int k = 0; k < 20; ++k) {
        double a = u(rng), b = u(rng);
        zs.push_back(a + b * s.data.params.tau);
    }
    auto rt = round_trip(s.g, s.d, s.data, find_kasteleyn(s.g), zs);
    double kern = 0, dt = 0;
    for (const auto& smp : rt.samples) {
        kern = std::max(kern, smp.kernel);
        dt = std::max(dt, smp.det);
    }
    return {kern < 1e-8 && dt < 1e-8, "20 samples, kernel " + fmt("%.2e", kern) + ", det " + fmt("%.2e", dt)};
}

Verdict fay() {
    EllipticParams p(Complex(0.3, 1.1));
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-0.5, 0.5);
    auto pt = [&] { return Complex(u(rng), u(rng)); };
    bool trivial = true;
    double worst = 0;
    for (int n = 1; n <= 5; ++n)
        for (int k = 0; k < 10; ++k) {
            std::vector<Complex> al;
            for (int i = 0; i < n; ++i) al.push_back(pt());
            Complex z = pt(), t = pt();
            auto r = fay_residual(al, z, t, p);
            if (n <= 2) trivial = trivial && r.value == Complex(0.0);
            else worst = std::max(worst, r.relative());
        }
    return {trivial && worst < 1e-9,
            std::string("n=1,2 exact ") + (trivial ? "yes" : "no") + ", n=3..5 max rel " + fmt("%.2e", worst)};
}

Verdict theta_properties() {
    EllipticParams p(Complex(0.3, 1.1));
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(-0.5, 0.5);
    const ThetaChar chars[] = {kTheta00, kTheta01, kTheta10, kTheta11};
    double worst = 0;
    for (int k = 0; k < 20; ++k) {
        Complex z(u(rng), u(rng));
        for (auto c : chars) {
            Complex v = theta(c, z, p);
            double parity = (c.a == 0.5 && c.b == 0.5) ? -1.0 : 1.0;
            worst = std::max(worst, rel(theta(c, -z, p), parity * v));
            worst = std::max(worst, rel(theta(c, z + 1.0, p), std::exp(2.0 * kPi * kI * c.a) * v));
            worst = std::max(worst, rel(theta(c, z + p.tau, p), std::exp(-kI * kPi * p.tau - 2.0 * kPi * kI * (z + c.b)) * v));
        }
    }
    return {worst < 1e-12, "4 characteristics x 20 points, max rel " + fmt("%.2e", worst)};
}

Verdict mutation_invariance() {
    auto g = load("toda.json");
    auto w = toda_signed_weights(g);
    const auto before = curve_of(g, w);
    bool same = true;
    for (int f = 0; f < 4; ++f) {
        Move m = spider_move(g, f);
        auto red = reduce_all(m.graph, transport_weights(m, w));
        same = same && curve_of(red.graph, red.w) == before;
    }
    auto got = toda_flow_by_mutation(g);
    std::array<RatFunc, 4> vars;
    for (int k = 0; k < 4; ++k) vars[k] = RatFunc::variable(k);
    auto want = toda_flow_formula(vars);
    bool symbolic = got == want;
    return {same && symbolic, std::string("curve identical at all 4 faces: ") + (same ? "yes" : "no") +
                                  ", composite equals flow generator: " + (symbolic ? "yes" : "no")};
}

Verdict commuting() {
    TodaData s;
    double worst = 0;
    for (int f = 0; f < 4; ++f) worst = std::max(worst, commuting_diagram_check(s.g, s.d, s.data, f).residual);
    return {worst < 1e-8, "4 faces, max rel " + fmt("%.2e", worst)};
}

Verdict flow_conservation() {
    auto g = load("toda.json");
    auto flow = TodaFlow::from_face_weights(g, {QComplex(2), QComplex(3), QComplex(mpq_class(1, 6)), QComplex(1)});
    const auto c0 = flow.curve();
    bool same = true;
    for (int k = 0; k < 10; ++k) {
        flow.step();
        same = same && flow.curve() == c0;
    }
    auto w0 = flow.weights();
    flow.swap();
    flow.swap();
    bool order_two = flow.weights() == w0;
    return {same && order_two, std::string("10 steps conserve all ") + std::to_string(c0.size()) +
                                   " coefficients: " + (same ? "yes" : "no") +
                                   ", swap squared is identity: " + (order_two ? "yes" : "no")};
}

Verdict structural() {
    int checked = 0;
    std::string bad;
    for (const char* name : {"toda.json", "honeycomb.json", "hex6.json", "dp0.json"}) {
        auto g = load(name);
        auto zs = zigzags(g);
        auto p = newton_polygon(zs);
        auto eps = exchange_matrix(g);
        auto k = find_kasteleyn(g);
        auto target = curvature_target(g);
        auto d = discrete_abel(g);
        H1Lattice lat(zs);
        Hom total{};
        for (const auto& z : zs) total = total + z.h;
        bool ok = total == Hom{};
        ok = ok && p.twice_area == 2 * p.interior + p.boundary - 2;
        ok = ok && 2 * p.genus() - 2 == p.twice_area - p.boundary;
        for (std::size_t j = 0; j < eps.size(); ++j) {
            long long col = 0;
            for (std::size_t i = 0; i < eps.size(); ++i) {
                ok = ok && eps[i][j] == -eps[j][i];
                col += eps[i][j];
            }
            ok = ok && col == 0;
        }
        for (int f = 0; f < g.num_faces(); ++f) ok = ok && sign_coboundary(g, k, f) == target.value[f];
        for (const auto& l : d.face) ok = ok && degree(l) == 0;
        for (int v = 0; v < g.num_vertices(); ++v)
            ok = ok && degree(d.vertex[v]) == (g.vertex(v).color == Color::Black ? 1 : -1);
        for (const auto& r : epsilon_abel_check(d, eps)) ok = ok && lat.contains(r);
        if (!ok) bad += std::string(" ") + name;
        ++checked;
    }
    return {bad.empty(), std::to_string(checked) + " fixtures" + (bad.empty() ? "" : ", violations in" + bad)};
}

struct Criterion {
    int id;
    const char* name;
    double budget; // seconds
    std::function<Verdict()> run;
};

} // namespace

int main() {
    const Criterion all[] = {
        {1, "toda combinatorics", 0.1, toda_combinatorics},
        {2, "closed-form face coordinates", 1.0, closed_forms},
        {3, "round trip", 5.0, round_trip_check},
        {4, "fay identity", 1.0, fay},
        {5, "theta properties", 0.5, theta_properties},
        {6, "mutation invariance", 1.0, mutation_invariance},
        {7, "commutative diagram", 2.0, commuting},
        {8, "toda flow conservation", 2.0, flow_conservation},
        {9, "structural invariants", 0.5, structural},
    };
    int run = 0, failed = 0;
    for (const auto& c : all) {
        auto t0 = std::chrono::steady_clock::now();
        Verdict v;
        try {
            v = c.run();
        } catch (const Error& e) {
            v = {false, std::string("threw ") + e.what()};
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        bool pass = v.pass && secs <= c.budget;
        if (v.pass && !pass) v.detail += ", over time budget";
        std::printf("AC%d %s %-30s %8.4f s (budget %.1f s)  %s\n", c.id, pass ? "PASS" : "FAIL", c.name, secs,
                    c.budget, v.detail.c_str());
        ++run;
        if (!pass) ++failed;
    }
    std::printf("criteria run: %d, passed: %d, failed: %d\n", run, run - failed, failed);
    return failed ? 1 : 0;
}
