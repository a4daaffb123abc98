#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "gk/dirac.hpp"
#include "gk/graph.hpp"
#include "gk/laurent.hpp"

namespace gk {

// Graph fixtures. Parse errors are InputError("ParseError") with a line
// number; schema errors are InputError("BadFixture").
GraphSpec parse_graph_spec(const std::string& text);
GraphSpec load_graph_spec(const std::string& path);
TorusGraph load_graph(const std::string& path);
// Two-space indented JSON with a trailing newline; rotations follow the
// vertex order, so canonical fixtures round-trip byte for byte.
std::string graph_to_json(const GraphSpec& spec);
void save_text(const std::string& path, const std::string& text);
std::string read_text(const std::string& path);

// Face weights file: {"mode": "exact"|"float", "weights": [...], "twist": [l0, m0]}
// with values as strings ("2", "1/6", "0.3+1.1i").
struct FaceWeights {
    std::variant<std::vector<QComplex>, std::vector<Complex>> values;
    std::optional<std::pair<std::string, std::string>> twist;
    bool exact() const { return values.index() == 0; }
};

FaceWeights parse_face_weights(const std::string& text);
std::string face_weights_to_json(const FaceWeights& w);

// A polynomial whose coefficient field is only known at run time.
using AnyPoly = std::variant<ExactPoly, FloatPoly>;

AnyPoly add(const AnyPoly& a, const AnyPoly& b);
AnyPoly mul(const AnyPoly& a, const AnyPoly& b);

// {"mode": "exact", "terms": [[i, j, num_re, den_re, num_im, den_im], ...]}
// or {"mode": "float", "terms": [[i, j, re, im], ...]}, terms ordered by (i, j).
std::string poly_to_json(const AnyPoly& p);
AnyPoly parse_poly(const std::string& text);

} // namespace gk
