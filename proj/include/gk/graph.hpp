#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace gk {

// Element of H1(T, Z) in the basis fixed by the two fundamental-domain cuts.
struct Hom {
    long long x = 0;
    long long y = 0;

    Hom& operator+=(const Hom& o) { x += o.x; y += o.y; return *this; }
    Hom& operator-=(const Hom& o) { x -= o.x; y -= o.y; return *this; }
    friend Hom operator+(Hom a, const Hom& b) { return a += b; }
    friend Hom operator-(Hom a, const Hom& b) { return a -= b; }
    friend Hom operator-(const Hom& a) { return {-a.x, -a.y}; }
    friend Hom operator*(long long k, const Hom& a) { return {k * a.x, k * a.y}; }
    friend auto operator<=>(const Hom&, const Hom&) = default;
};

inline long long cross(const Hom& a, const Hom& b) { return a.x * b.y - a.y * b.x; }

enum class Color { Black, White };

// Input record: what a fixture file contains.
struct GraphSpec {
    struct Vertex {
        std::string id;
        Color color;
    };
    struct Edge {
        std::string id;
        std::string black;
        std::string white;
        Hom h;
    };
    std::vector<Vertex> vertices;
    std::vector<Edge> edges;
    // counterclockwise edge ids around each vertex
    std::map<std::string, std::vector<std::string>> rotations;
};

/*
 * Bipartite graph on the torus as a combinatorial map.
 *
 * Dart 2e sits at the black end of edge e, dart 2e+1 at the white end.
 * Walking along dart d from its vertex shifts the lift by shift(d): +h_e for
 * the black dart, -h_e for the white one.
 *
 * Faces are orbits of d -> prev_around(opposite(d)); each face lies to the
 * left of its darts and is listed counterclockwise starting from a
 * black-to-white dart. offset(d) is the shift from the tail of the first dart
 * of the face to the tail of d.
 */
class TorusGraph {
public:
    struct Vertex {
        std::string id;
        Color color;
        std::vector<int> darts; // counterclockwise
    };
    struct Edge {
        std::string id;
        int black;
        int white;
        Hom h;
    };
    struct Face {
        std::vector<int> darts;
        std::vector<Hom> offsets;
        int sides() const { return static_cast<int>(darts.size()); }
    };

    static TorusGraph build(const GraphSpec& spec);
    GraphSpec spec() const;

    int num_vertices() const { return static_cast<int>(vertices_.size()); }
    int num_edges() const { return static_cast<int>(edges_.size()); }
    int num_faces() const { return static_cast<int>(faces_.size()); }
    int num_darts() const { return 2 * num_edges(); }

    const Vertex& vertex(int v) const { return vertices_[v]; }
    const Edge& edge(int e) const { return edges_[e]; }
    const Face& face(int f) const { return faces_[f]; }
    const std::vector<Vertex>& vertices() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<Face>& faces() const { return faces_; }

    const std::vector<int>& blacks() const { return blacks_; }
    const std::vector<int>& whites() const { return whites_; }
    // position of a vertex inside blacks() or whites()
    int color_index(int v) const { return color_index_[v]; }

    int vertex_index(const std::string& id) const;
    int edge_index(const std::string& id) const;

    static int edge_of(int d) { return d >> 1; }
    static int opposite(int d) { return d ^ 1; }
    static bool from_black(int d) { return (d & 1) == 0; }
    int tail(int d) const;
    Hom shift(int d) const { return from_black(d) ? edges_[d >> 1].h : -edges_[d >> 1].h; }
    int next_around(int d) const; // counterclockwise successor at tail(d)
    int prev_around(int d) const;

    int face_of(int d) const { return dart_face_[d]; }
    int position_in_face(int d) const { return dart_pos_[d]; }
    Hom offset(int d) const { return faces_[dart_face_[d]].offsets[dart_pos_[d]]; }

private:
    std::vector<Vertex> vertices_;
    std::vector<Edge> edges_;
    std::vector<Face> faces_;
    std::vector<int> blacks_, whites_, color_index_;
    std::vector<int> dart_rot_pos_;
    std::vector<int> dart_face_, dart_pos_;
    std::map<std::string, int> vertex_ids_, edge_ids_;
};

struct ZigZag {
    std::vector<int> darts; // each dart read as "leave tail(d) along the edge"
    Hom h;
};

// Zig-zags turn maximally right at white vertices and maximally left at black.
std::vector<ZigZag> zigzags(const TorusGraph& g);
// zz_of[d] = index of the zig-zag leaving tail(d) along dart d
std::vector<int> zigzag_of_dart(const TorusGraph& g, const std::vector<ZigZag>& zs);

using IntMatrix = std::vector<std::vector<long long>>;

// eps[i][j] = sum over sides k of face i that border face j of (-1)^k,
// sides numbered from 1 starting at a black-to-white side.
IntMatrix exchange_matrix(const TorusGraph& g);
// Same matrix assembled edge by edge as the intersection pairing of the face
// cycles: each edge pairs the face left of its black-to-white dart (-1) with
// the face on its right (+1).
IntMatrix exchange_matrix_edgewise(const TorusGraph& g);

struct Classification {
    bool minimal = false;
    bool simple = false;
    int faces = 0;
    long long twice_area = 0;
    std::vector<Hom> divisible_classes;
};

Classification classify(const TorusGraph& g);

} // namespace gk
