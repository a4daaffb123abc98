#pragma once

#include <algorithm>
#include <random>
#include <set>
#include <string>

#include "doctest.h"
#include "gk/io.hpp"
#include "gk/toda.hpp"

namespace gkt {

using namespace gk;

inline std::string fixture(const std::string& name) { return std::string(GK_FIXTURES) + "/" + name; }
inline TorusGraph load(const std::string& name) { return load_graph(fixture(name)); }

inline const char* kAllFixtures[] = {"toda.json", "honeycomb.json", "dp0.json", "hex6.json"};

// Kind of the gk::Error thrown by f, or "" if nothing was thrown.
template <class F> std::string error_kind(F&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    return "";
}

inline double rel(Complex a, Complex b) { return std::abs(a - b) / std::max(std::abs(a), std::abs(b)); }

// Spectral data used throughout: tau = 0.3+1.1i, a = 0.23+0.11i, t = 0.41+0.37i.
struct TodaSetup {
    TorusGraph g = load("toda.json");
    AbelMap d = discrete_abel(g);
    EllipticSpectralData data;
    SignCochain k = find_kasteleyn(g);
    Complex a{0.23, 0.11};

    TodaSetup() {
        data.params = EllipticParams(Complex(0.3, 1.1));
        data.points = toda_points(d.zs, a);
        data.t = Complex(0.41, 0.37);
        data = prepare_spectral_data(g, d, data);
    }
};

// Generic points for the other genus-1 fixtures.
inline EllipticSpectralData fixture_data(const std::string& name, const AbelMap& d) {
    EllipticSpectralData data;
    data.params = EllipticParams(Complex(0.3, 1.1));
    data.t = Complex(0.41, 0.37);
    if (name == "dp0.json") {
        data.points = {1.0 / 3, 2.0 / 3, 0.0};
    } else if (name == "hex6.json") {
        Complex c(0.13, 0.21), b1(0.37, 0.05), a1(0.61, 0.44), a2(0.29, 0.83);
        data.points = {a1, b1, c, a2, 2.0 * c - b1, 3.0 * c - a1 - a2};
    } else {
        data.points = toda_points(d.zs, Complex(0.23, 0.11));
    }
    return data;
}

inline QComplex q(long n, long dd = 1) { return QComplex(mpq_class(n, dd)); }

} // namespace gkt
